use std::collections::HashMap;

use super::{Poset, PosetError};
use crate::shapes::{CylindricShape, ShiftedSkewShape, SkewShape};

fn cell_labels(cells: &[(usize, usize)]) -> Vec<String> {
    cells.iter().map(|(i, j)| format!("({i},{j})")).collect()
}

type CellPair = ((usize, usize), (usize, usize));

/// Poset on a set of cells with `(i,j) ⪰ (i+1,j)` and `(i,j) ⪰ (i,j+1)`,
/// plus any `extra` pairs `(lower, upper)` of cells.
fn poset_on_cells(cells: &[(usize, usize)], extra: &[CellPair]) -> Result<Poset, PosetError> {
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut rels = Vec::new();
    for (&(i, j), &k) in &index {
        if let Some(&r) = index.get(&(i, j + 1)) {
            rels.push((r, k));
        }
        if let Some(&d) = index.get(&(i + 1, j)) {
            rels.push((d, k));
        }
    }
    for (lo, hi) in extra {
        if let (Some(&a), Some(&b)) = (index.get(lo), index.get(hi)) {
            rels.push((a, b));
        }
    }
    rels.sort_unstable();
    Ok(Poset::from_relations(cells.len(), &rels)?.with_labels(cell_labels(cells)))
}

/// Cell poset `P_{λ/μ}`, one element per cell in row-major order.
pub fn cell_poset(s: &SkewShape) -> Result<Poset, PosetError> {
    if s.is_empty() {
        return Err(PosetError::EmptyShape);
    }
    poset_on_cells(&s.cells(), &[])
}

/// Cell poset of `λ/μ/d`: the skew cell poset plus `(ℓ, c−d) ⪰ (1, c)`
/// from placing row `ℓ`, shifted `d` columns right, above row 1.
pub fn cylindric_cell_poset(s: &CylindricShape) -> Result<Poset, PosetError> {
    if s.is_empty() {
        return Err(PosetError::EmptyShape);
    }
    let l = s.len();
    let d = s.d();
    let (mu1, lam1) = (s.mu()[0], s.lambda()[0]);
    let (mul, laml) = (s.mu()[l - 1], s.lambda()[l - 1]);
    let mut extra = Vec::new();
    for c in mu1 + 1..=lam1 {
        if c > d && c - d > mul && c - d <= laml {
            extra.push(((1, c), (l, c - d)));
        }
    }
    poset_on_cells(&s.cells(), &extra)
}

/// Cell poset of a shifted skew shape in shifted coordinates.
pub fn shifted_cell_poset(s: &ShiftedSkewShape) -> Result<Poset, PosetError> {
    if s.is_empty() {
        return Err(PosetError::EmptyShape);
    }
    poset_on_cells(&s.cells(), &[])
}

/// Width-two poset `R_{λ/μ}` on chains `α_1 ≻ ... ≻ α_m` and `β_n ≻ ... ≻ β_1`.
///
/// `(α_i, β_j)` is incomparable exactly for cells of `λ/μ`; otherwise
/// `α_i ≻ β_j` when `j ≤ μ_i` and `β_j ≻ α_i` when `j > λ_i`. Elements
/// `0..m` are `α_1..α_m`, then `m..m+n` are `β_1..β_n`.
pub fn width_two_poset(s: &SkewShape, m: usize, n: usize) -> Result<Poset, PosetError> {
    if s.len() > m || s.lambda().first().is_some_and(|&l| l > n) {
        return Err(PosetError::NotInRectangle { m, n });
    }
    let lam = |i: usize| s.lambda().get(i).copied().unwrap_or(0);
    let mu = |i: usize| s.mu().get(i).copied().unwrap_or(0);
    let alpha = |i: usize| i;
    let beta = |j: usize| m + j;
    let mut rels = Vec::new();
    for i in 0..m.saturating_sub(1) {
        rels.push((alpha(i + 1), alpha(i)));
    }
    for j in 0..n.saturating_sub(1) {
        rels.push((beta(j), beta(j + 1)));
    }
    for i in 0..m {
        for j in 0..n {
            let col = j + 1;
            if col <= mu(i) {
                rels.push((beta(j), alpha(i)));
            } else if col > lam(i) {
                rels.push((alpha(i), beta(j)));
            }
        }
    }
    let labels = (1..=m).map(|i| format!("a{i}")).chain((1..=n).map(|j| format!("b{j}"))).collect();
    let p = Poset::from_relations(m + n, &rels).map_err(|e| match e {
        PosetError::Cycle => PosetError::Orientation { i: 0, j: 0 },
        other => other,
    })?;
    for i in 0..m {
        for j in 0..n {
            let in_shape = j + 1 > mu(i) && j < lam(i);
            if in_shape == p.comparable(alpha(i), beta(j)) {
                return Err(PosetError::Orientation { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(p.with_labels(labels))
}

/// `Z̄_n`: `x_i ⪯ x_{i+2}` and `x_i ⪯ x_{i+3}`.
pub fn complement_zigzag(n: usize) -> Poset {
    let mut rels = Vec::new();
    for i in 0..n {
        if i + 2 < n {
            rels.push((i, i + 2));
        }
        if i + 3 < n {
            rels.push((i, i + 3));
        }
    }
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    Poset::from_relations(n, &rels).expect("relations increase indices").with_labels(labels)
}

//! Canonical enumerations of shape families, in reproducible order.

use super::{CylindricShape, ShiftedSkewShape, SkewShape};

/// All skew shapes with exactly `n` cells up to translation: no empty rows,
/// `μ_ℓ = 0`, and no empty columns (`μ_i ≤ λ_{i+1}`). Sorted by `(λ, μ)`.
pub fn skew_shapes_of_size(n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // Build rows bottom-up; `rows` holds (λ_i, μ_i) from the bottom row upward.
    fn grow(remaining: usize, rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
        if remaining == 0 {
            let lambda = rows.iter().rev().map(|r| r.0).collect();
            let mu = rows.iter().rev().map(|r| r.1).collect();
            out.push(SkewShape::new(lambda, mu).expect("generated shapes are valid"));
            return;
        }
        let (below_l, below_m) = *rows.last().expect("bottom row placed first");
        for m in below_m..=below_l {
            for len in 1..=remaining {
                let l = m + len;
                if l < below_l {
                    continue;
                }
                rows.push((l, m));
                grow(remaining - len, rows, out);
                rows.pop();
            }
        }
    }
    for bottom in 1..=n {
        let mut rows = vec![(bottom, 0)];
        grow(n - bottom, &mut rows, &mut out);
    }
    out.sort();
    out
}

/// Shapes of every size `1..=n`, ordered by `(size, λ, μ)`.
pub fn skew_shapes_up_to(n: usize) -> Vec<SkewShape> {
    (1..=n).flat_map(skew_shapes_of_size).collect()
}

/// Connected ribbon with row lengths `comp`, listed top to bottom.
pub fn ribbon_from_composition(comp: &[usize]) -> SkewShape {
    assert!(comp.iter().all(|&c| c > 0), "composition parts must be positive");
    let l = comp.len();
    let mut lambda = vec![0; l];
    let mut mu = vec![0; l];
    for i in (0..l).rev() {
        mu[i] = if i + 1 == l { 0 } else { lambda[i + 1] - 1 };
        lambda[i] = mu[i] + comp[i];
    }
    SkewShape::new(lambda, mu).expect("compositions give valid ribbons")
}

/// All `2^{n-1}` connected ribbons with `n` cells, sorted by `(λ, μ)`.
pub fn connected_ribbons(n: usize) -> Vec<SkewShape> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<SkewShape> = (0..1u64 << (n - 1))
        .map(|mask| {
            let mut comp = vec![1];
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    comp.push(1);
                } else {
                    *comp.last_mut().expect("nonempty") += 1;
                }
            }
            ribbon_from_composition(&comp)
        })
        .collect();
    out.sort();
    out
}

/// Proper cylindric shapes (see [`CylindricShape::is_proper`]) over the
/// canonical skew shapes of size `≤ n`, for every shift `d` up to the first
/// one with no wrap relations. Ordered by `(size, λ, μ, d)`.
pub fn cylindric_shapes_up_to(n: usize) -> Vec<CylindricShape> {
    let mut out = Vec::new();
    for s in skew_shapes_up_to(n) {
        let first = s.lambda()[0];
        let d_max = first - s.mu()[s.len() - 1];
        for d in 0..=d_max {
            if let Ok(c) = CylindricShape::new(s.lambda().to_vec(), s.mu().to_vec(), d) {
                if c.is_proper() {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Shifted skew shapes with exactly `n` cells that reach the main diagonal
/// (`ℓ(μ) < ℓ(λ)`), with no empty rows and no empty columns. Shapes with
/// `ℓ(μ) = ℓ(λ)` are translates of ordinary skew shapes and are omitted.
pub fn shifted_shapes_of_size(n: usize) -> Vec<ShiftedSkewShape> {
    // Rows bottom-up as (λ_i, μ_i); the bottom row touches the diagonal.
    fn grow(remaining: usize, rows: &mut Vec<(usize, usize)>, out: &mut Vec<ShiftedSkewShape>) {
        if remaining == 0 {
            let lambda = rows.iter().rev().map(|r| r.0).collect();
            let mu = rows.iter().rev().map(|r| r.1).collect();
            out.push(ShiftedSkewShape::new(lambda, mu).expect("generated shapes are valid"));
            return;
        }
        let (below_l, below_m) = *rows.last().expect("bottom row placed first");
        let m_range = if below_m == 0 { 0..=below_l + 1 } else { below_m + 1..=below_l + 1 };
        for m in m_range {
            let lo = (below_l + 1).max(m + 1);
            for l in lo..=m + remaining {
                rows.push((l, m));
                grow(remaining - (l - m), rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for bottom in 1..=n {
        grow(n - bottom, &mut vec![(bottom, 0)], &mut out);
    }
    out.sort();
    out
}

/// All `λ/μ` with `μ ⊆ λ ⊆ (n^m)`, including empty skew shapes.
pub fn shapes_in_rectangle(m: usize, n: usize) -> Vec<SkewShape> {
    let lambdas = partitions_in_box(m, n);
    let mut out = Vec::new();
    for lambda in &lambdas {
        for mu in &lambdas {
            if mu.iter().zip(lambda).all(|(a, b)| a <= b) {
                out.push(SkewShape::new(lambda.clone(), mu.clone()).expect("contained"));
            }
        }
    }
    out.sort();
    out
}

/// Weakly decreasing sequences of length `m` with entries in `0..=n`.
fn partitions_in_box(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for p in 0..=max {
            cur.push(p);
            rec(m, p, cur, out);
            cur.pop();
        }
    }
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_skew_counts() {
        assert_eq!(skew_shapes_of_size(1).len(), 1);
        // (2), (1,1), (2,1)/(1)
        assert_eq!(skew_shapes_of_size(2).len(), 3);
        for s in skew_shapes_up_to(6) {
            assert!(s.lambda().iter().zip(s.mu()).all(|(l, m)| l > m));
            assert_eq!(s.mu()[s.len() - 1], 0);
        }
    }

    #[test]
    fn shapes_are_distinct_and_sorted() {
        let all = skew_shapes_of_size(6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ribbons_from_compositions() {
        assert_eq!(ribbon_from_composition(&[2, 2]), SkewShape::new(vec![3, 2], vec![1]).unwrap());
        assert_eq!(ribbon_from_composition(&[3]), SkewShape::new(vec![3], vec![]).unwrap());
        for n in 1..=8 {
            let rs = connected_ribbons(n);
            assert_eq!(rs.len(), 1 << (n - 1));
            assert!(rs.iter().all(|r| r.is_ribbon() && r.is_connected().unwrap() && r.size() == n));
        }
        // The connected ribbons are exactly the connected ribbon shapes in the canonical list.
        let from_list: Vec<_> =
            skew_shapes_of_size(6).into_iter().filter(|s| s.is_ribbon() && s.is_connected().unwrap()).collect();
        assert_eq!(from_list, connected_ribbons(6));
    }

    #[test]
    fn shifted_enumeration() {
        // Size 2: a row, a column, and two cells touching only at a corner.
        assert_eq!(shifted_shapes_of_size(1).len(), 1);
        let two: Vec<String> = shifted_shapes_of_size(2).iter().map(|s| s.to_string()).collect();
        assert_eq!(two, vec!["shifted:2", "shifted:21/1", "shifted:31/2"]);
        for n in 1..=7 {
            for s in shifted_shapes_of_size(n) {
                assert_eq!(s.size(), n);
                assert!(s.mu().len() < s.lambda().len());
            }
        }
    }

    #[test]
    fn rectangle_pairs() {
        // Pairs μ ⊆ λ in a 1×1 box: ∅/∅, 1/∅, 1/1.
        assert_eq!(shapes_in_rectangle(1, 1).len(), 3);
        // Intervals in the lattice of partitions in a 2×2 box (a chain-like lattice of 6 elements).
        assert_eq!(shapes_in_rectangle(2, 2).len(), 20);
    }

    #[test]
    fn cylindric_list_is_valid() {
        let all = cylindric_shapes_up_to(5);
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.size() <= 5 && c.size() >= 1 && c.is_proper()));
    }
}

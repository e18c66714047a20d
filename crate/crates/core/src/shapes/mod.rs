//! Shape grammar: partitions, skew, cylindric and shifted shapes.
//!
//! Rows and columns are 1-indexed throughout, matching the usual English
//! drawing of Young diagrams: row 1 is on top, column 1 on the left.

mod enumerate;
mod parse;

pub use enumerate::{
    connected_ribbons, cylindric_shapes_up_to, ribbon_from_composition, shapes_in_rectangle, shifted_shapes_of_size,
    skew_shapes_of_size, skew_shapes_up_to,
};
pub use parse::{format_shape, parse_shape};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("malformed shape text {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("{which} is not weakly decreasing at index {index}")]
    NotPartition { which: &'static str, index: usize },
    #[error("{which} is not strictly decreasing at index {index}")]
    NotStrict { which: &'static str, index: usize },
    #[error("mu is not contained in lambda at row {row}")]
    NotContained { row: usize },
    #[error("cylindric condition on {which} violated at index {index}")]
    Cylindric { which: &'static str, index: usize },
    #[error("cylindric sequences must have equal length (lambda {lambda}, mu {mu})")]
    LengthMismatch { lambda: usize, mu: usize },
    #[error("shape has no cells")]
    Empty,
}

fn check_weakly_decreasing(parts: &[usize], which: &'static str) -> Result<(), ShapeError> {
    match parts.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(ShapeError::NotPartition { which, index: i + 1 }),
        None => Ok(()),
    }
}

fn trim_zeros(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Weakly decreasing sequence of nonnegative integers; trailing zeros dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        check_weakly_decreasing(&parts, "partition")?;
        Ok(Partition(trim_zeros(parts)))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Hook `(a+1, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Partition {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b));
        Partition(parts)
    }
}

/// Skew shape `λ/μ` with `μ` padded to the length of `λ`.
///
/// Canonical form drops trailing rows with `λ_i = μ_i = 0`; interior rows are
/// kept as given so that the Kreweras dimension `ℓ` is well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

impl SkewShape {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self, ShapeError> {
        check_weakly_decreasing(&lambda, "lambda")?;
        check_weakly_decreasing(&mu, "mu")?;
        let lambda = trim_zeros(lambda);
        let mu = trim_zeros(mu);
        if mu.len() > lambda.len() {
            return Err(ShapeError::NotContained { row: lambda.len() + 1 });
        }
        let mut mu = mu;
        mu.resize(lambda.len(), 0);
        if let Some(i) = lambda.iter().zip(&mu).position(|(l, m)| m > l) {
            return Err(ShapeError::NotContained { row: i + 1 });
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn straight(lambda: &Partition) -> Self {
        SkewShape::new(lambda.parts().to_vec(), Vec::new()).expect("a partition is a valid straight shape")
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    /// Number of rows `ℓ` (after trimming trailing empty rows).
    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().zip(&self.mu).map(|(l, m)| l - m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.mu.iter().all(|&m| m == 0)
    }

    /// Cells `(i, j)` with `μ_i < j ≤ λ_i`, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, (&l, &m)) in self.lambda.iter().zip(&self.mu).enumerate() {
            for j in m + 1..=l {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && i <= self.len() && j > self.mu[i - 1] && j <= self.lambda[i - 1]
    }

    /// True iff no 2×2 block of cells occurs.
    pub fn is_ribbon(&self) -> bool {
        self.cells()
            .iter()
            .all(|&(i, j)| !(self.contains((i, j + 1)) && self.contains((i + 1, j)) && self.contains((i + 1, j + 1))))
    }

    /// Connectivity in the row-wise sense: disconnected iff some row has
    /// `λ_i = μ_i`, or `λ_i ≤ μ_{i-1}`.
    pub fn is_connected(&self) -> Result<bool, ShapeError> {
        if self.is_empty() {
            return Err(ShapeError::Empty);
        }
        for i in 0..self.len() {
            if self.lambda[i] == self.mu[i] {
                return Ok(false);
            }
            if i > 0 && self.lambda[i] <= self.mu[i - 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Drops empty rows at the top and bottom and removes empty leading
    /// columns. The cell poset is unchanged.
    pub fn trimmed(&self) -> SkewShape {
        let nonempty: Vec<usize> = (0..self.len()).filter(|&i| self.lambda[i] > self.mu[i]).collect();
        let (Some(&first), Some(&last)) = (nonempty.first(), nonempty.last()) else {
            return SkewShape { lambda: Vec::new(), mu: Vec::new() };
        };
        let shift = self.mu[last];
        let lambda = self.lambda[first..=last].iter().map(|l| l - shift).collect();
        let mu = self.mu[first..=last].iter().map(|m| m - shift).collect();
        SkewShape::new(lambda, mu).expect("trimming preserves validity")
    }

    /// `kλ/kμ`.
    pub fn stretch(&self, k: usize) -> SkewShape {
        SkewShape::new(self.lambda.iter().map(|l| l * k).collect(), self.mu.iter().map(|m| m * k).collect())
            .expect("scaling preserves validity")
    }

    /// Transpose `λ'/μ'`; the cell poset is isomorphic.
    pub fn conjugate(&self) -> SkewShape {
        let l = Partition(self.lambda.clone()).conjugate();
        let m = Partition(trim_zeros(self.mu.clone())).conjugate();
        SkewShape::new(l.0, m.0).expect("conjugation preserves validity")
    }

    /// Zig-zag ribbon `ζ_n` whose cell poset is the zig-zag poset `Z_n`.
    pub fn zigzag(n: usize) -> SkewShape {
        assert!(n >= 1, "zig-zag needs at least one cell");
        let k = n / 2;
        let (lambda, mut mu): (Vec<usize>, Vec<usize>) = if n.is_multiple_of(2) {
            ((2..=k + 1).rev().collect(), (0..k).rev().collect())
        } else {
            ((1..=k + 1).rev().collect(), (0..k).rev().collect())
        };
        mu.resize(lambda.len(), 0);
        SkewShape::new(lambda, mu).expect("zig-zag is a valid skew shape")
    }

    /// `(m, n)` with `m = ℓ` and `n = λ_1`: the smallest rectangle holding the shape.
    pub fn bounding_rectangle(&self) -> (usize, usize) {
        (self.len(), self.lambda.first().copied().unwrap_or(0))
    }
}

/// Cylindric shape `λ/μ/d`: row `ℓ`, shifted `d` columns right, sits above row 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylindricShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    d: usize,
}

fn check_cylindric_chain(seq: &[usize], d: usize, which: &'static str) -> Result<(), ShapeError> {
    let l = seq.len() as i64;
    let v = |i: usize| seq[i] as i64 - i as i64;
    for i in 0..seq.len().saturating_sub(1) {
        if v(i) < v(i + 1) {
            return Err(ShapeError::Cylindric { which, index: i + 2 });
        }
    }
    if let (Some(&first), Some(_)) = (seq.first(), seq.last()) {
        if v(seq.len() - 1) < first as i64 - d as i64 - l {
            return Err(ShapeError::Cylindric { which, index: seq.len() });
        }
    }
    Ok(())
}

impl CylindricShape {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>, d: usize) -> Result<Self, ShapeError> {
        let mut mu = mu;
        if mu.len() > lambda.len() {
            return Err(ShapeError::LengthMismatch { lambda: lambda.len(), mu: mu.len() });
        }
        mu.resize(lambda.len(), 0);
        if lambda.is_empty() {
            return Err(ShapeError::Empty);
        }
        check_cylindric_chain(&lambda, d, "lambda")?;
        check_cylindric_chain(&mu, d, "mu")?;
        if let Some(i) = lambda.iter().zip(&mu).position(|(l, m)| m > l) {
            return Err(ShapeError::NotContained { row: i + 1 });
        }
        Ok(CylindricShape { lambda, mu, d })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().zip(&self.mu).map(|(l, m)| l - m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, (&l, &m)) in self.lambda.iter().zip(&self.mu).enumerate() {
            for j in m + 1..=l {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// The underlying skew shape, when `λ` and `μ` are partitions.
    pub fn skew(&self) -> Result<SkewShape, ShapeError> {
        SkewShape::new(self.lambda.clone(), self.mu.clone())
    }

    /// True when `λ` and `μ` are partitions, `λ_1−λ_ℓ ≤ d`, `μ_1−μ_ℓ ≤ d`, and
    /// `d ≥ 1` for `ℓ ≥ 2`: the row `ℓ` copy shifted by `d` extends the diagram
    /// to a genuine skew diagram, so the wrap relations are those of the
    /// cylinder. The cylindric sum counts the cell poset exactly on these.
    pub fn is_proper(&self) -> bool {
        let l = self.len();
        let partition = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        partition(&self.lambda)
            && partition(&self.mu)
            && self.lambda[0] - self.lambda[l - 1] <= self.d
            && self.mu[0] - self.mu[l - 1] <= self.d
            && (l == 1 || self.d >= 1)
    }

    /// Circular fence built from a ribbon with `μ_ℓ = 0`, taking `d = λ_1 − 1`.
    pub fn circular_fence(ribbon: &SkewShape) -> Result<Self, ShapeError> {
        let d = ribbon.lambda().first().copied().ok_or(ShapeError::Empty)?.saturating_sub(1);
        CylindricShape::new(ribbon.lambda().to_vec(), ribbon.mu().to_vec(), d)
    }
}

/// Shifted skew shape: row `i` of the shifted diagram of `λ` occupies
/// columns `i..=i+λ_i−1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedSkewShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

impl ShiftedSkewShape {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self, ShapeError> {
        let lambda = trim_zeros(lambda);
        let mu = trim_zeros(mu);
        if let Some(i) = lambda.windows(2).position(|w| w[0] <= w[1]) {
            return Err(ShapeError::NotStrict { which: "lambda", index: i + 1 });
        }
        if let Some(i) = mu.windows(2).position(|w| w[0] <= w[1]) {
            return Err(ShapeError::NotStrict { which: "mu", index: i + 1 });
        }
        if mu.len() > lambda.len() {
            return Err(ShapeError::NotContained { row: lambda.len() + 1 });
        }
        if let Some(i) = lambda.iter().zip(&mu).position(|(l, m)| m > l) {
            return Err(ShapeError::NotContained { row: i + 1 });
        }
        Ok(ShiftedSkewShape { lambda, mu })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn mu_part(&self, i: usize) -> usize {
        self.mu.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().sum::<usize>() - self.mu.iter().sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells in shifted coordinates, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (idx, &l) in self.lambda.iter().enumerate() {
            let i = idx + 1;
            let m = self.mu_part(idx);
            for j in i + m..i + l {
                out.push((i, j));
            }
        }
        out
    }
}

/// Any shape the text grammar can describe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    Skew(SkewShape),
    Cylindric(CylindricShape),
    Shifted(ShiftedSkewShape),
}

/// JSON form `{"lambda":[...], "mu":[...], "d": int|null, "shifted": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub d: Option<usize>,
    pub shifted: bool,
}

impl From<&Shape> for ShapeJson {
    fn from(s: &Shape) -> Self {
        match s {
            Shape::Skew(s) => {
                ShapeJson { lambda: s.lambda.clone(), mu: trim_zeros(s.mu.clone()), d: None, shifted: false }
            }
            Shape::Cylindric(c) => {
                ShapeJson { lambda: c.lambda.clone(), mu: trim_zeros(c.mu.clone()), d: Some(c.d), shifted: false }
            }
            Shape::Shifted(s) => ShapeJson { lambda: s.lambda.clone(), mu: s.mu.clone(), d: None, shifted: true },
        }
    }
}

impl TryFrom<ShapeJson> for Shape {
    type Error = ShapeError;

    fn try_from(j: ShapeJson) -> Result<Self, ShapeError> {
        match (j.d, j.shifted) {
            (Some(_), true) => Err(ShapeError::Malformed {
                text: format!("{j:?}"),
                reason: "a shape cannot be both cylindric and shifted".into(),
            }),
            (Some(d), false) => Ok(Shape::Cylindric(CylindricShape::new(j.lambda, j.mu, d)?)),
            (None, true) => Ok(Shape::Shifted(ShiftedSkewShape::new(j.lambda, j.mu)?)),
            (None, false) => Ok(Shape::Skew(SkewShape::new(j.lambda, j.mu)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(l: &[usize], m: &[usize]) -> SkewShape {
        SkewShape::new(l.to_vec(), m.to_vec()).unwrap()
    }

    #[test]
    fn ribbon_checks() {
        assert!(SkewShape::zigzag(9).is_ribbon());
        assert!(!sk(&[2, 2], &[]).is_ribbon());
        assert!(!sk(&[6, 5, 3, 3], &[2, 1]).is_ribbon());
    }

    #[test]
    fn cell_with_square_below_right() {
        // (1,3) heads the square (1,3),(1,4),(2,3),(2,4) in 6533/21.
        let s = sk(&[6, 5, 3, 3], &[2, 1]);
        assert!([(1, 3), (1, 4), (2, 3), (2, 4)].iter().all(|&c| s.contains(c)));
    }

    #[test]
    fn connectivity() {
        assert!(sk(&[6, 5, 3, 3], &[2, 1]).is_connected().unwrap());
        assert!(!sk(&[2, 2], &[2]).is_connected().unwrap());
        assert!(!sk(&[3, 1], &[2]).is_connected().unwrap());
        assert_eq!(sk(&[2], &[2]).is_connected(), Err(ShapeError::Empty));
    }

    #[test]
    fn zigzag_shapes() {
        assert_eq!(SkewShape::zigzag(4), sk(&[3, 2], &[1, 0]));
        assert_eq!(SkewShape::zigzag(5), sk(&[3, 2, 1], &[1]));
        assert_eq!(SkewShape::zigzag(1), sk(&[1], &[]));
        assert_eq!(SkewShape::zigzag(8), sk(&[5, 4, 3, 2], &[3, 2, 1]));
        for n in 1..15 {
            let z = SkewShape::zigzag(n);
            assert_eq!(z.size(), n);
            assert!(z.is_ribbon());
            assert!(z.is_connected().unwrap());
        }
    }

    #[test]
    fn stretching() {
        assert_eq!(sk(&[1], &[]).stretch(3), sk(&[3], &[]));
        assert_eq!(sk(&[6, 5, 3, 3], &[2, 1]).stretch(2), sk(&[12, 10, 6, 6], &[4, 2]));
        assert_eq!(SkewShape::zigzag(4).stretch(2), sk(&[6, 4], &[2]));
        let s = sk(&[4, 2, 1], &[1]);
        for k in 1..=4 {
            assert_eq!(s.stretch(k).size(), k * s.size());
        }
    }

    #[test]
    fn invalid_shapes() {
        assert!(matches!(SkewShape::new(vec![1, 2], vec![]), Err(ShapeError::NotPartition { .. })));
        assert_eq!(SkewShape::new(vec![2, 1], vec![1, 2]), Err(ShapeError::NotPartition { which: "mu", index: 1 }));
        assert_eq!(SkewShape::new(vec![2, 1], vec![2, 2]), Err(ShapeError::NotContained { row: 2 }));
        assert!(matches!(ShiftedSkewShape::new(vec![2, 2], vec![]), Err(ShapeError::NotStrict { .. })));
    }

    #[test]
    fn cylindric_validation_pinpoints_index() {
        assert!(CylindricShape::new(vec![7, 6, 4, 4], vec![3, 1, 1], 4).is_ok());
        // λ_1 ≥ λ_2 − 1 fails for (1, 3).
        assert_eq!(
            CylindricShape::new(vec![1, 3], vec![], 5),
            Err(ShapeError::Cylindric { which: "lambda", index: 2 })
        );
        // λ_ℓ − (ℓ−1) ≥ λ_1 − d − ℓ fails for (9, 1) with d = 5.
        assert_eq!(
            CylindricShape::new(vec![9, 1], vec![], 5),
            Err(ShapeError::Cylindric { which: "lambda", index: 2 })
        );
    }

    #[test]
    fn shifted_cells() {
        let s = ShiftedSkewShape::new(vec![2, 1], vec![]).unwrap();
        assert_eq!(s.cells(), vec![(1, 1), (1, 2), (2, 2)]);
        let s = ShiftedSkewShape::new(vec![7, 5, 2, 1], vec![3, 1]).unwrap();
        assert_eq!(s.size(), 11);
    }

    #[test]
    fn conjugates_and_trim() {
        assert_eq!(Partition::new(vec![3, 1, 1]).unwrap().conjugate().parts(), &[3, 1, 1]);
        assert_eq!(Partition::new(vec![3, 2]).unwrap().conjugate().parts(), &[2, 2, 1]);
        assert_eq!(sk(&[2, 2], &[2]).trimmed(), sk(&[2], &[]));
        assert_eq!(sk(&[3, 3, 1], &[2, 1, 1]).trimmed(), sk(&[2, 2], &[1]));
    }
}

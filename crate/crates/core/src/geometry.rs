//! Ehrhart data of order polytopes and shard polytopes, h*-vectors, and the
//! stretched-shape polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detformulas::{kreweras_value, DetError};
use crate::exactpoly::{analyze, binomial_int, interpolate, PolyError, Polynomial, Rational};
use crate::posets::{cell_poset, order_polynomial, Poset, PosetError};
use crate::shapes::{connected_ribbons, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("malformed arc {text:?}: {reason}")]
    BadArc { text: String, reason: String },
    #[error("h* transform is not integral at index {index}")]
    NonIntegral { index: usize },
    #[error("interpolation degree {degree} fails the check at {at}")]
    DegreeCheck { degree: usize, at: u64 },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Det(#[from] DetError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `ehr(𝒪(P), t) = Ω(P; t+1)`.
pub fn ehrhart_order_polytope(p: &Poset) -> Result<Polynomial, GeometryError> {
    Ok(order_polynomial(p)?.shift(1))
}

/// Numerator of the Ehrhart series, `h*_0, …, h*_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStarVector {
    pub coeffs: Vec<BigInt>,
}

impl HStarVector {
    /// `h*_i = Σ_{j ≤ i} (−1)^j C(d+1, j) ehr(i−j)`, which inverts
    /// `ehr(t) = Σ h*_i C(t+d−i, d)`.
    pub fn from_ehrhart(ehr: &Polynomial, d: usize) -> Result<Self, GeometryError> {
        let values: Vec<Rational> = ehr.eval_ints(0..=d as i64);
        let mut coeffs = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut acc = Rational::zero();
            for j in 0..=i {
                let term = &values[i - j] * Rational::from_integer(binomial_int(d as i64 + 1, j as i64));
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            if !acc.is_integer() {
                return Err(GeometryError::NonIntegral { index: i });
            }
            coeffs.push(acc.to_integer());
        }
        Ok(HStarVector { coeffs })
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::from_integers(self.coeffs.clone())
    }

    /// `h_i^2 ≥ h_{i−1} h_{i+1}` over the support (trailing zeros dropped).
    pub fn is_log_concave(&self) -> bool {
        let end = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |k| k + 1);
        self.coeffs[..end].windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
    }

    pub fn is_real_rooted(&self) -> Result<bool, GeometryError> {
        Ok(analyze(&self.as_polynomial())?.real_rooted)
    }

    /// The polynomial `Σ h*_i C(t+d−i, d)`; inverse of [`Self::from_ehrhart`].
    pub fn to_ehrhart(&self) -> Polynomial {
        let d = self.coeffs.len().saturating_sub(1);
        let mut total = Polynomial::zero();
        for (i, h) in self.coeffs.iter().enumerate() {
            let basis = crate::exactpoly::binomial_poly(d as i64 - i as i64, d);
            total += &basis.scale(&Rational::from_integer(h.clone()));
        }
        total
    }
}

pub fn hstar(p: &Poset) -> Result<HStarVector, GeometryError> {
    HStarVector::from_ehrhart(&ehrhart_order_polytope(p)?, p.len())
}

/// Arc `(a, b, A, B)` with `A ⊔ B = {a+1, …, b−1}` in ambient dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub a: usize,
    pub b: usize,
    #[serde(rename = "A")]
    pub upper: Vec<usize>,
    #[serde(rename = "B")]
    pub lower: Vec<usize>,
    pub n: usize,
}

impl Arc {
    pub fn new(a: usize, b: usize, upper: Vec<usize>, lower: Vec<usize>, n: usize) -> Result<Self, GeometryError> {
        let text = format!("{a},{b};{upper:?};{lower:?}");
        let bad = |reason: &str| GeometryError::BadArc { text: text.clone(), reason: reason.to_string() };
        if a < 1 || a >= b || b > n + 1 {
            return Err(bad("need 1 ≤ a < b ≤ n+1"));
        }
        let mut upper = upper;
        let mut lower = lower;
        upper.sort_unstable();
        lower.sort_unstable();
        let mut all: Vec<usize> = upper.iter().chain(&lower).copied().collect();
        all.sort_unstable();
        if all != (a + 1..b).collect::<Vec<_>>() {
            return Err(bad("A and B must partition {a+1, …, b−1}"));
        }
        Ok(Arc { a, b, upper, lower, n })
    }

    fn in_upper(&self, j: usize) -> bool {
        self.upper.binary_search(&j).is_ok()
    }

    fn in_lower(&self, j: usize) -> bool {
        self.lower.binary_search(&j).is_ok()
    }

    /// `j ∈ [a, b−1]` with `j ∈ {a} ∪ A` and `j+1 ∈ B ∪ {b}`.
    pub fn falls(&self) -> Vec<usize> {
        (self.a..self.b)
            .filter(|&j| (j == self.a || self.in_upper(j)) && (j + 1 == self.b || self.in_lower(j + 1)))
            .collect()
    }

    /// `j ∈ [a, b−1]` with `j ∈ {a} ∪ B` and `j+1 ∈ A ∪ {b}`.
    pub fn rises(&self) -> Vec<usize> {
        (self.a..self.b)
            .filter(|&j| (j == self.a || self.in_lower(j)) && (j + 1 == self.b || self.in_upper(j + 1)))
            .collect()
    }

    /// Every arc with `a = 1` and `b − a ≤ max_len`, in `n = b − 1`.
    pub fn all_up_to(max_len: usize) -> Vec<Arc> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            let b = 1 + len;
            let inner: Vec<usize> = (2..b).collect();
            for mask in 0u32..(1 << inner.len()) {
                let upper = inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &j)| j).collect();
                let lower = inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 0).map(|(_, &j)| j).collect();
                out.push(Arc::new(1, b, upper, lower, b - 1).expect("generated arcs are valid"));
            }
        }
        out
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{};{}", self.a, self.b, join(&self.upper), join(&self.lower))
    }
}

impl FromStr for Arc {
    type Err = GeometryError;

    /// `a,b;A;B`, e.g. `1,4;2;3`. The ambient `n` is taken as `b − 1`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GeometryError::BadArc { text: text.to_string(), reason: reason.to_string() };
        let fields: Vec<&str> = text.trim().split(';').collect();
        if fields.len() != 3 {
            return Err(bad("expected a,b;A;B"));
        }
        let list = |s: &str| -> Result<Vec<usize>, GeometryError> {
            s.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad("not an integer")))
                .collect()
        };
        let ends = list(fields[0])?;
        let [a, b] = ends[..] else { return Err(bad("expected two endpoints")) };
        if b == 0 {
            return Err(bad("need 1 ≤ a < b ≤ n+1"));
        }
        Arc::new(a, b, list(fields[1])?, list(fields[2])?, b - 1)
    }
}

/// Lattice points of `t·𝒮𝒫(α)`, in prefix-sum coordinates
/// `S_j = x_a + … + x_j` for `j = a..b−1`. Sign constraints become
/// `S_j ≥ S_{j−1}` for `j ∈ A` and `S_j ≤ S_{j−1}` for `j ∈ B`; falls cap
/// `S_f ≤ t`, rises floor `S_r ≥ 0`; `x_b = −S_{b−1}` is free.
pub fn shard_lattice_points(arc: &Arc, t: u64) -> BigInt {
    let span = (arc.b - arc.a) as i64 * t as i64;
    let width = (2 * span + 1) as usize;
    let falls = arc.falls();
    let rises = arc.rises();
    let allowed = |j: usize, s: i64| (!falls.contains(&j) || s <= t as i64) && (!rises.contains(&j) || s >= 0);
    // counts[s + span] = number of partial assignments ending at S_j = s.
    let mut counts: Vec<BigInt> =
        (-span..=span).map(|s| if allowed(arc.a, s) { BigInt::from(1) } else { BigInt::zero() }).collect();
    for j in arc.a + 1..arc.b {
        let up = arc.in_upper(j);
        let mut next = vec![BigInt::zero(); width];
        // Running sums over the previous layer give each monotone transition.
        if up {
            let mut acc = BigInt::zero();
            for k in 0..width {
                acc += &counts[k];
                if allowed(j, k as i64 - span) {
                    next[k] = acc.clone();
                }
            }
        } else {
            let mut acc = BigInt::zero();
            for k in (0..width).rev() {
                acc += &counts[k];
                if allowed(j, k as i64 - span) {
                    next[k] = acc.clone();
                }
            }
        }
        counts = next;
    }
    counts.iter().sum()
}

/// Interpolates the lattice-point counts at `t = 0..=b−a` and certifies the
/// result at `t = b−a+1, b−a+2`.
pub fn shard_ehrhart(arc: &Arc) -> Result<Polynomial, GeometryError> {
    let degree = arc.b - arc.a;
    let points: Vec<(i64, Rational)> =
        (0..=degree as u64).map(|t| (t as i64, Rational::from_integer(shard_lattice_points(arc, t)))).collect();
    let p = interpolate(&points)?;
    for extra in [degree as u64 + 1, degree as u64 + 2] {
        if p.eval_int(extra as i64) != Rational::from_integer(shard_lattice_points(arc, extra)) {
            return Err(GeometryError::DegreeCheck { degree, at: extra });
        }
    }
    Ok(p)
}

/// First connected ribbon (in lexicographic order, sizes up to `size_cap`)
/// whose order polytope has the same Ehrhart polynomial as the shard polytope.
pub fn match_shard_to_fence(arc: &Arc, size_cap: usize) -> Result<Option<SkewShape>, GeometryError> {
    let target = shard_ehrhart(arc)?;
    let Some(size) = target.degree() else { return Ok(None) };
    if size == 0 || size > size_cap {
        return Ok(None);
    }
    for ribbon in connected_ribbons(size) {
        if ehrhart_order_polytope(&cell_poset(&ribbon)?)? == target {
            return Ok(Some(ribbon));
        }
    }
    Ok(None)
}

/// `PP_{kλ/kμ}(t)` as a polynomial in `k`, interpolated on `k = 0..=ℓ(λ)·t`
/// and checked at one more point.
pub fn stretched_pp(s: &SkewShape, t: u64) -> Result<Polynomial, GeometryError> {
    let degree = s.len() * t as usize;
    let value = |k: usize| -> Result<Rational, GeometryError> {
        let stretched = s.stretch(k);
        if stretched.is_empty() {
            return Ok(Rational::from_integer(1.into()));
        }
        Ok(Rational::from_integer(kreweras_value(&stretched, t + 1)?))
    };
    let points: Vec<(i64, Rational)> =
        (0..=degree).map(|k| Ok((k as i64, value(k)?))).collect::<Result<_, GeometryError>>()?;
    let p = interpolate(&points)?;
    let check = degree + 1;
    if p.eval_int(check as i64) != value(check)? {
        return Err(GeometryError::DegreeCheck { degree, at: check as u64 });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{binomial_poly, rat};
    use crate::posets::{antichain, chain, faulhaber, linear_extensions, zigzag};
    use crate::shapes::{parse_shape, Shape};

    fn arc(text: &str) -> Arc {
        text.parse().unwrap()
    }

    #[test]
    fn order_polytopes() {
        assert_eq!(ehrhart_order_polytope(&antichain(3)).unwrap(), Polynomial::linear(1).pow(3));
        assert_eq!(ehrhart_order_polytope(&chain(2)).unwrap(), binomial_poly(2, 2));
        let f = ehrhart_order_polytope(&faulhaber(4)).unwrap();
        assert_eq!(f.coeff(0), rat(1, 1));
        assert_eq!(f, order_polynomial(&faulhaber(4)).unwrap().shift(1));
    }

    #[test]
    fn hstar_vectors() {
        assert_eq!(hstar(&chain(2)).unwrap().coeffs, vec![BigInt::from(1), 0.into(), 0.into()]);
        assert_eq!(hstar(&antichain(2)).unwrap().coeffs, vec![BigInt::from(1), 1.into(), 0.into()]);
        // Eulerian numbers 1, 4, 1 for the cube.
        assert_eq!(hstar(&antichain(3)).unwrap().coeffs, vec![BigInt::from(1), 4.into(), 1.into(), 0.into()]);
        let h = hstar(&zigzag(3)).unwrap();
        assert_eq!(h.sum(), BigInt::from(2));
        assert_eq!(h.sum(), linear_extensions(&zigzag(3)).unwrap().into());
        assert_eq!(h.to_ehrhart(), ehrhart_order_polytope(&zigzag(3)).unwrap());
        assert!(h.is_log_concave());
    }

    #[test]
    fn arcs() {
        let a = arc("1,4;2;3");
        assert_eq!((a.a, a.b, a.upper.clone(), a.lower.clone(), a.n), (1, 4, vec![2], vec![3], 3));
        assert_eq!(a.to_string(), "1,4;2;3");
        assert_eq!(a.falls(), vec![2]);
        assert_eq!(a.rises(), vec![1, 3]);
        assert!("1,4;2;".parse::<Arc>().is_err());
        assert!("3,1;;".parse::<Arc>().is_err());
        assert_eq!(Arc::all_up_to(5).len(), 31);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"a":1,"b":4,"A":[2],"B":[3],"n":3}"#);
    }

    #[test]
    fn shard_counts() {
        for t in 0..5 {
            assert_eq!(shard_lattice_points(&arc("1,2;;"), t), BigInt::from(t + 1));
            assert_eq!(shard_lattice_points(&arc("1,4;2;3"), 0), BigInt::from(1));
        }
        assert_eq!(shard_lattice_points(&arc("1,3;2;"), 1), BigInt::from(3));
        assert_eq!(shard_ehrhart(&arc("1,2;;")).unwrap(), Polynomial::linear(1));
        assert_eq!(shard_ehrhart(&arc("1,3;2;")).unwrap(), binomial_poly(2, 2));
        assert_eq!(shard_ehrhart(&arc("1,3;;2")).unwrap(), binomial_poly(2, 2));
    }

    /// Direct count over the box `[−(b−a)t, (b−a)t]^{b−a+1}` of the raw
    /// H-description, without prefix sums.
    fn raw_count(arc: &Arc, t: i64) -> i64 {
        let m = arc.b - arc.a + 1;
        let r = (arc.b - arc.a) as i64 * t;
        let mut x = vec![-r; m];
        let mut count = 0;
        loop {
            let ok = x.iter().sum::<i64>() == 0
                && arc.upper.iter().all(|&j| x[j - arc.a] >= 0)
                && arc.lower.iter().all(|&j| x[j - arc.a] <= 0)
                && arc.falls().iter().all(|&f| x[..=f - arc.a].iter().sum::<i64>() <= t)
                && arc.rises().iter().all(|&f| x[..=f - arc.a].iter().sum::<i64>() >= 0);
            count += ok as i64;
            let mut k = 0;
            while k < m && x[k] == r {
                x[k] = -r;
                k += 1;
            }
            if k == m {
                return count;
            }
            x[k] += 1;
        }
    }

    #[test]
    fn shard_counts_match_raw_description() {
        for a in Arc::all_up_to(3) {
            for t in 0..3 {
                assert_eq!(shard_lattice_points(&a, t), BigInt::from(raw_count(&a, t as i64)), "{a} t={t}");
            }
        }
    }

    #[test]
    fn fence_matches() {
        let one = match_shard_to_fence(&arc("1,2;;"), 5).unwrap().unwrap();
        assert_eq!((one.lambda(), one.mu()), (&[1][..], &[0][..]));
        let two = match_shard_to_fence(&arc("1,3;2;"), 5).unwrap().unwrap();
        assert_eq!(cell_poset(&two).unwrap().len(), 2);
        assert_eq!(ehrhart_order_polytope(&cell_poset(&two).unwrap()).unwrap(), binomial_poly(2, 2));
        assert!(match_shard_to_fence(&arc("1,4;2;3"), 2).unwrap().is_none());
    }

    #[test]
    fn stretched() {
        let row = SkewShape::new(vec![1], vec![]).unwrap();
        assert_eq!(stretched_pp(&row, 1).unwrap(), Polynomial::linear(1));
        let Shape::Skew(s) = parse_shape("6533/21").unwrap() else { unreachable!() };
        assert_eq!(stretched_pp(&s, 0).unwrap(), Polynomial::one());
        let hook = SkewShape::new(vec![2, 1], vec![]).unwrap();
        let p = stretched_pp(&hook, 1).unwrap();
        assert!(p.has_nonnegative_coeffs());
        assert_eq!(p.eval_int(0), rat(1, 1));
        // 0/1 fillings of (2k, k) are lattice paths: counted directly below.
        for k in 1..=3usize {
            let direct = (0..=2 * k).map(|a| (0..=k.min(a)).count()).sum::<usize>();
            assert_eq!(p.eval_int(k as i64), rat(direct as i64, 1), "k = {k}");
        }
    }
}

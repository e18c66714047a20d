//! Closed-form engines. Everything here is in the order-polynomial convention
//! `Ω(P;t)`; plane-partition counts `PP(t)` are `Ω(t+1)`.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::{
    binomial_int, binomial_poly, factorial, int_det, interpolate_from_zero, poly_det, PolyError, Polynomial, Rational,
};
use crate::shapes::{CylindricShape, ShapeError, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("shape has no cells")]
    EmptyShape,
    #[error("shape is not a ribbon")]
    NotRibbon,
    #[error("circular fence needs μ_ℓ = 0")]
    NotClosed,
    #[error("cylindric shape {0} is not proper: the wrapped rows do not form a skew diagram")]
    NotProper(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `binom(t−1+a, b)` with the zero convention for `b < 0`.
fn entry(a: i64, b: i64) -> Polynomial {
    if b < 0 {
        Polynomial::zero()
    } else {
        binomial_poly(a - 1, b as usize)
    }
}

/// Kreweras matrix of `λ/μ` with entries `binom(t−1+λ_i−μ_j, λ_i−μ_j−i+j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrewerasMatrix {
    pub shape: SkewShape,
    pub entries: Vec<Vec<Polynomial>>,
}

impl KrewerasMatrix {
    pub fn new(s: &SkewShape) -> Result<Self, DetError> {
        if s.is_empty() {
            return Err(DetError::EmptyShape);
        }
        let (lam, mu) = (s.lambda(), s.mu());
        let l = s.len();
        let entries = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let a = lam[i] as i64 - mu[j] as i64;
                        entry(a, a - i as i64 + j as i64)
                    })
                    .collect()
            })
            .collect();
        Ok(KrewerasMatrix { shape: s.clone(), entries })
    }

    pub fn det(&self) -> Result<Polynomial, DetError> {
        Ok(poly_det(&self.entries)?)
    }
}

pub fn kreweras_matrix(s: &SkewShape) -> Result<KrewerasMatrix, DetError> {
    KrewerasMatrix::new(s)
}

/// The Kreweras determinant as a polynomial. Evaluating the integer matrix
/// at `t = 1..=n+1` and interpolating is much cheaper than eliminating over
/// `Q[t]`; [`KrewerasMatrix::det`] keeps the symbolic route.
pub fn kreweras_order_polynomial(s: &SkewShape) -> Result<Polynomial, DetError> {
    if s.is_empty() {
        return Err(DetError::EmptyShape);
    }
    let values = (1..=s.size() as u64 + 1).map(|t| kreweras_value(s, t)).collect::<Result<Vec<_>, _>>()?;
    Ok(interpolate_from_zero(&values).shift(-1))
}

/// `Ω(P_{λ/μ}; t)` at one integer point, via an integer determinant.
pub fn kreweras_value(s: &SkewShape, t: u64) -> Result<BigInt, DetError> {
    if s.is_empty() {
        return Err(DetError::EmptyShape);
    }
    let (lam, mu) = (s.lambda(), s.mu());
    let l = s.len();
    let t = t as i64;
    let m: Vec<Vec<BigInt>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let a = lam[i] as i64 - mu[j] as i64;
                    binomial_int(t - 1 + a, a - i as i64 + j as i64)
                })
                .collect()
        })
        .collect();
    Ok(int_det(&m)?)
}

fn fact_ratio(num: &[usize], den: usize) -> Rational {
    let n: BigUint = num.iter().map(|&k| factorial(k)).product();
    Rational::new(n.into(), factorial(den).into())
}

/// Linear coefficient of `Ω(P_{λ/μ};t)`: `(λ_1−μ_ℓ−1)!(ℓ−1)!/(λ_1−μ_ℓ−1+ℓ)!`
/// for connected shapes, `0` otherwise. Empty boundary rows are dropped first.
pub fn c1_skew(s: &SkewShape) -> Rational {
    if s.is_empty() {
        return Rational::from_integer(0.into());
    }
    let s = s.trimmed();
    if !s.is_connected().unwrap_or(false) {
        return Rational::from_integer(0.into());
    }
    let l = s.len();
    let w = s.lambda()[0] - s.mu()[l - 1];
    fact_ratio(&[w - 1, l - 1], w - 1 + l)
}

/// Determinant term of the cylindric sum for the shift vector `k`.
fn gk_matrix(lam: &[i64], mu: &[i64], d: i64, k: &[i64]) -> Vec<Vec<Polynomial>> {
    let l = lam.len() as i64;
    (0..lam.len())
        .map(|i| {
            (0..lam.len())
                .map(|j| {
                    let a = lam[i] - mu[j];
                    entry(a - d * k[i], a - i as i64 + j as i64 - (l + d) * k[i])
                })
                .collect()
        })
        .collect()
}

/// Zero-sum shift vectors whose matrix has no all-zero row, in lexicographic order.
pub fn gk_tuples(s: &CylindricShape) -> Vec<Vec<i64>> {
    let l = s.len();
    let lam: Vec<i64> = s.lambda().iter().map(|&x| x as i64).collect();
    let mu: Vec<i64> = s.mu().iter().map(|&x| x as i64).collect();
    let period = l as i64 + s.d() as i64;
    // Row i is nonzero iff some lower index λ_i−μ_j−i+j−(ℓ+d)k_i is ≥ 0,
    // which caps k_i from above; the zero sum then bounds it from below.
    let hi: Vec<i64> = (0..l)
        .map(|i| {
            let best = (0..l).map(|j| lam[i] - mu[j] - i as i64 + j as i64).max().unwrap();
            best.div_euclid(period)
        })
        .collect();
    let total: i64 = hi.iter().sum();
    let ranges: Vec<(i64, i64)> = (0..l).map(|i| (hi[i] - total, hi[i])).collect();
    let suffix_lo: Vec<i64> = (0..=l).map(|i| ranges[i..].iter().map(|r| r.0).sum()).collect();
    let suffix_hi: Vec<i64> = (0..=l).map(|i| ranges[i..].iter().map(|r| r.1).sum()).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    fn go(
        i: usize,
        sum: i64,
        ranges: &[(i64, i64)],
        slo: &[i64],
        shi: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == ranges.len() {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in ranges[i].0..=ranges[i].1 {
            let rest = sum + k;
            if rest + slo[i + 1] > 0 || rest + shi[i + 1] < 0 {
                continue;
            }
            cur.push(k);
            go(i + 1, rest, ranges, slo, shi, cur, out);
            cur.pop();
        }
    }
    go(0, 0, &ranges, &suffix_lo, &suffix_hi, &mut cur, &mut out);
    out
}

/// Cylindric sum `Σ_k det[binom(t−1+λ_i−μ_j−dk_i, λ_i−μ_j−i+j−(ℓ+d)k_i)]`
/// over `k ∈ Z^ℓ` with `Σ k_i = 0`.
///
/// Shapes that pass the inequality chains but are not proper are rejected:
/// on those the sum does not count the cell poset (for `31/1/1` it returns
/// a degree-2 polynomial for three cells).
pub fn gk_cylindric_order_polynomial(s: &CylindricShape) -> Result<Polynomial, DetError> {
    if s.is_empty() {
        return Err(DetError::EmptyShape);
    }
    if !s.is_proper() {
        return Err(DetError::NotProper(s.to_string()));
    }
    let lam: Vec<i64> = s.lambda().iter().map(|&x| x as i64).collect();
    let mu: Vec<i64> = s.mu().iter().map(|&x| x as i64).collect();
    let d = s.d() as i64;
    let terms: Vec<Polynomial> =
        gk_tuples(s).par_iter().map(|k| poly_det(&gk_matrix(&lam, &mu, d, k))).collect::<Result<_, _>>()?;
    Ok(terms.iter().fold(Polynomial::zero(), |acc, p| &acc + p))
}

fn check_closed_ribbon(s: &SkewShape) -> Result<(), DetError> {
    if s.is_empty() {
        return Err(DetError::EmptyShape);
    }
    if !s.is_ribbon() || !s.is_connected()? {
        return Err(DetError::NotRibbon);
    }
    if s.mu()[s.len() - 1] != 0 {
        return Err(DetError::NotClosed);
    }
    // A column of two or more cells closes up into a cycle.
    if s.len() >= 2 && s.lambda()[0] == 1 {
        return Err(DetError::NotProper(s.to_string()));
    }
    Ok(())
}

/// Circular fence on a ribbon `λ/μ` with `μ_ℓ = 0` and `d = λ_1 − 1`:
/// the Kreweras determinant plus one determinant for each `m = 2..=ℓ`,
/// taking `k = e_1 − e_m`. A single row goes through the full sum.
pub fn circular_fence_order_polynomial(s: &SkewShape) -> Result<Polynomial, DetError> {
    check_closed_ribbon(s)?;
    let l = s.len();
    if l == 1 {
        return gk_cylindric_order_polynomial(&CylindricShape::circular_fence(s)?);
    }
    let lam: Vec<i64> = s.lambda().iter().map(|&x| x as i64).collect();
    let mu: Vec<i64> = s.mu().iter().map(|&x| x as i64).collect();
    let d = lam[0] - 1;
    let mut total = kreweras_order_polynomial(s)?;
    for m in 1..l {
        let mut k = vec![0i64; l];
        k[0] = 1;
        k[m] = -1;
        total += &poly_det(&gk_matrix(&lam, &mu, d, &k))?;
    }
    Ok(total)
}

/// `ℓ(λ_1−1)!(ℓ−1)!/(λ_1−1+ℓ)!`.
pub fn c1_circular_fence(s: &SkewShape) -> Result<Rational, DetError> {
    check_closed_ribbon(s)?;
    let l = s.len();
    let w = s.lambda()[0] - 1;
    Ok(fact_ratio(&[w, l - 1], w + l) * Rational::from_integer((l as i64).into()))
}

/// `Ω(Z_n;t) = det[binom(t+1−i+j, 2j−2i+2)]_{i,j ≤ ⌊n/2⌋}` for even `n`.
/// For odd `n` the zig-zag ribbon has `⌊n/2⌋+1` rows; the extra column
/// (where `μ_j = 0`) has entries `binom(t+k+1−i, 2k+3−2i)`.
pub fn zigzag_determinant(n: usize) -> Polynomial {
    assert!(n >= 1, "zig-zag needs at least one element");
    let k = n / 2;
    let size = if n.is_multiple_of(2) { k } else { k + 1 };
    let m: Vec<Vec<Polynomial>> = (1..=size as i64)
        .map(|i| {
            (1..=size as i64)
                .map(|j| {
                    let (offset, lower) = if j as usize <= k {
                        (1 - i + j, 2 * j - 2 * i + 2)
                    } else {
                        (k as i64 + 1 - i, 2 * k as i64 + 3 - 2 * i)
                    };
                    if lower < 0 {
                        Polynomial::zero()
                    } else {
                        binomial_poly(offset, lower as usize)
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&m).expect("square by construction")
}

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{PolyError, Polynomial, Rational};

/// Exact shape statistics of a coefficient sequence and its roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub nonnegative_coeffs: bool,
    pub log_concave: bool,
    pub unimodal: bool,
    pub real_rooted: bool,
}

#[derive(Clone, Copy)]
enum Point<'a> {
    NegInf,
    At(&'a Rational),
    PosInf,
}

fn sturm_sequence(square_free: &Polynomial) -> Vec<Polynomial> {
    super::prs::sturm_chain(square_free)
}

fn sign_at(p: &Polynomial, x: Point<'_>) -> i8 {
    let signum = |r: &Rational| {
        if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }
    };
    match x {
        Point::At(v) => signum(&p.eval(v)),
        Point::PosInf => p.leading().map_or(0, signum),
        Point::NegInf => {
            let s = p.leading().map_or(0, signum);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sign variations with zeros deleted. For a square-free input this equals the
/// count just to the right of `x`, so `V(a) - V(b)` counts roots in `(a, b]`.
fn variations(seq: &[Polynomial], x: Point<'_>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn square_free_part(p: &Polynomial) -> Polynomial {
    let g = p.gcd(&p.derivative());
    p.exact_div(&g).expect("gcd divides p").monic()
}

/// Number of distinct real roots strictly between `lo` and `hi`.
pub fn roots_in_open_interval(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if lo >= hi {
        return Ok(0);
    }
    let sf = square_free_part(p);
    let seq = sturm_sequence(&sf);
    let (a, b) = (variations(&seq, Point::At(lo)), variations(&seq, Point::At(hi)));
    let half_open = a.saturating_sub(b);
    let hi_is_root = sf.eval(hi).is_zero();
    Ok(half_open - usize::from(hi_is_root))
}

/// Number of distinct real roots.
pub fn real_root_count(p: &Polynomial) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let seq = sturm_sequence(&square_free_part(p));
    Ok(variations(&seq, Point::NegInf) - variations(&seq, Point::PosInf))
}

/// Yun's square-free factorisation: `p = c · Π fᵢ^{mᵢ}` with monic,
/// pairwise coprime, square-free `fᵢ`. Constant factors are dropped.
pub fn square_free_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, u32)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0)?;
    let c = dp.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), mult));
        }
        b = b.exact_div(&a)?;
        let c_next = d.exact_div(&a)?;
        d = &c_next - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Newton's inequalities `b_k² ≥ b_{k−1} b_{k+1}` for `b_k = a_k / C(d,k)`,
/// which every real-rooted polynomial satisfies. A cheap way to refute
/// real-rootedness before building a Sturm chain.
fn newton_holds(a: &[Rational]) -> bool {
    let d = a.len().saturating_sub(1);
    (1..d).all(|k| {
        // b_k² ≥ b_{k−1} b_{k+1}  ⇔  a_k² · k(d−k) ≥ a_{k−1} a_{k+1} (k+1)(d−k+1)
        let lhs = &a[k] * &a[k] * Rational::from_integer((k * (d - k)).into());
        let rhs = &a[k - 1] * &a[k + 1] * Rational::from_integer(((k + 1) * (d - k + 1)).into());
        lhs >= rhs
    })
}

fn is_log_concave(a: &[Rational]) -> bool {
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

fn is_unimodal(a: &[Rational]) -> bool {
    let mut descending = false;
    for w in a.windows(2) {
        if w[1] > w[0] {
            if descending {
                return false;
            }
        } else if w[1] < w[0] {
            descending = true;
        }
    }
    true
}

/// Coefficient statistics over the full sequence `a_0, ..., a_d` and exact
/// real-rootedness (real roots counted with multiplicity equal the degree).
pub fn analyze(p: &Polynomial) -> Result<Analysis, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    // All roots are real iff the square-free part has as many distinct
    // real roots as its degree.
    let real_rooted = newton_holds(coeffs) && {
        let sf = square_free_part(p);
        real_root_count(&sf)? == sf.degree().unwrap_or(0)
    };
    Ok(Analysis {
        nonnegative_coeffs: p.has_nonnegative_coeffs(),
        log_concave: is_log_concave(coeffs),
        unimodal: is_unimodal(coeffs),
        real_rooted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, rat_int};

    #[test]
    fn open_interval_counts() {
        let p = Polynomial::from_integers([0, -1, 1]);
        assert_eq!(roots_in_open_interval(&p, &rat(0, 1), &rat(2, 1)).unwrap(), 1);
        assert_eq!(roots_in_open_interval(&p, &rat(-1, 1), &rat(2, 1)).unwrap(), 2);
        assert_eq!(roots_in_open_interval(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 0);
        let q = Polynomial::from_integers([1, 0, 1]);
        assert_eq!(roots_in_open_interval(&q, &rat(-1, 1), &rat(1, 1)).unwrap(), 0);
        assert_eq!(roots_in_open_interval(&Polynomial::zero(), &rat(0, 1), &rat(1, 1)), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn repeated_roots_are_folded() {
        // (t - 1/2)^3 (t + 2)
        let p = Polynomial::new(vec![rat(-1, 2), rat(1, 1)]).pow(3) * Polynomial::linear(2);
        assert_eq!(roots_in_open_interval(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 1);
        assert_eq!(real_root_count(&p).unwrap(), 2);
        let dec = square_free_decomposition(&p).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.iter().any(|(f, m)| *m == 3 && f == &Polynomial::new(vec![rat(-1, 2), rat(1, 1)])));
        assert!(analyze(&p).unwrap().real_rooted);
    }

    #[test]
    fn cube_of_linear_factor() {
        let p = Polynomial::linear(1).pow(3);
        let a = analyze(&p).unwrap();
        assert!(a.real_rooted && a.log_concave && a.unimodal && a.nonnegative_coeffs);
    }

    #[test]
    fn faulhaber_has_negative_coefficient() {
        let p = Polynomial::new(vec![rat(0, 1), rat(-1, 30), rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 5)]);
        assert!(!analyze(&p).unwrap().nonnegative_coeffs);
    }

    #[test]
    fn newton_passes_but_roots_are_complex() {
        // (t+2)^3 − 1 has one real root and a complex pair.
        let p = Polynomial::from_integers([7, 12, 6, 1]);
        assert!(newton_holds(p.coeffs()));
        assert!(!analyze(&p).unwrap().real_rooted);
        assert_eq!(real_root_count(&p).unwrap(), 1);
    }

    #[test]
    fn complex_pair_is_not_real_rooted() {
        let p = Polynomial::from_integers([1, 0, 1]) * Polynomial::t();
        assert!(!analyze(&p).unwrap().real_rooted);
        assert_eq!(real_root_count(&p).unwrap(), 1);
        assert!(analyze(&Polynomial::constant(rat_int(3))).unwrap().real_rooted);
    }

    #[test]
    fn unimodality_and_log_concavity() {
        assert!(is_unimodal(&[rat(1, 1), rat(3, 1), rat(3, 1), rat(1, 1)]));
        assert!(!is_unimodal(&[rat(1, 1), rat(0, 1), rat(1, 1)]));
        assert!(!is_log_concave(&[rat(1, 1), rat(1, 1), rat(2, 1)]));
    }
}

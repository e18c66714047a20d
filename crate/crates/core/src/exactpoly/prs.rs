//! Integer pseudo-remainder sequences. Euclid over the rationals lets
//! numerators and denominators grow together; working with primitive
//! integer polynomials keeps gcds and Sturm chains tractable at degree 50+.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};

/// Ascending integer coefficients with no trailing zeros.
pub(crate) type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Divides out the positive content; the sign of `p` is kept.
pub(crate) fn primitive(p: IntPoly) -> IntPoly {
    let p = trim(p);
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Positive rational multiple of `p` with integer coefficients, made
/// primitive.
pub(crate) fn from_rational(p: &Polynomial) -> IntPoly {
    let l = p.denominator_lcm();
    primitive(p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect())
}

pub(crate) fn to_rational(p: &IntPoly) -> Polynomial {
    Polynomial::new(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// `lc(b)^{deg a − deg b + 1} · a mod b`.
pub(crate) fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    if a.len() <= db {
        return a.clone();
    }
    let lead = &b[db];
    let mut r = a.clone();
    let mut steps = a.len() - db;
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].clone();
        for x in r.iter_mut() {
            *x *= lead;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k - db + j] -= &c * bj;
        }
        r = trim(r);
        steps -= 1;
    }
    // Pad the multiplier to the full power so the sign is predictable.
    for _ in 0..steps {
        for x in r.iter_mut() {
            *x *= lead;
        }
    }
    r
}

/// Monic gcd through the primitive remainder sequence.
pub(crate) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut x, mut y) = (from_rational(a), from_rational(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    to_rational(&x).monic()
}

/// Sturm chain `p, p', −rem, …` up to positive scalar factors, which do not
/// change sign variations.
pub(crate) fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let p0 = from_rational(p);
    let p1 = from_rational(&p.derivative());
    let mut seq = vec![p0, p1];
    while !seq[seq.len() - 1].is_empty() {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        let lead = &b[b.len() - 1];
        let power = a.len() - b.len() + 1;
        let mut r = pseudo_rem(a, b);
        // prem = lc^power · rem, so the true −rem has sign −sgn(lc)^power.
        let flip = !(lead.is_negative() && power % 2 == 1);
        if flip {
            r = r.into_iter().map(|c| -c).collect();
        }
        seq.push(primitive(r));
    }
    seq.pop();
    seq.iter().map(to_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let f = Polynomial::linear(1) * Polynomial::linear(-3);
        let g = Polynomial::linear(1) * Polynomial::linear(5);
        assert_eq!(gcd(&f, &g), Polynomial::linear(1));
        assert_eq!(gcd(&f.pow(2), &f), f.monic());
    }

    #[test]
    fn pseudo_remainder_matches_rational_remainder() {
        let a = Polynomial::from_integers([3, -1, 4, 1, -5]);
        let b = Polynomial::from_integers([2, 7, -3]);
        let (_, r) = a.div_rem(&b).unwrap();
        let pr = to_rational(&pseudo_rem(&from_rational(&a), &from_rational(&b)));
        // lc(b)^3 = −27.
        assert_eq!(pr, r.scale(&Rational::from_integer((-27).into())));
    }
}

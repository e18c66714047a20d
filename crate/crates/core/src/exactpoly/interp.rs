use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, rat_int, PolyError, Polynomial, Rational};

/// Unique polynomial of degree `< points.len()` through the given points
/// (Newton divided differences, exact).
pub fn interpolate(points: &[(i64, Rational)]) -> Result<Polynomial, PolyError> {
    let mut seen = HashSet::with_capacity(points.len());
    for &(x, _) in points {
        if !seen.insert(x) {
            return Err(PolyError::DuplicateAbscissa(x));
        }
    }
    let n = points.len();
    let xs: Vec<Rational> = points.iter().map(|(x, _)| rat_int(*x)).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form.
    let mut p = Polynomial::zero();
    for i in (0..n).rev() {
        if !p.is_zero() {
            p = &p * &Polynomial::new(vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        }
        if !table[i].is_zero() {
            p += &Polynomial::constant(table[i].clone());
        }
    }
    Ok(p)
}

/// Polynomial of degree `< values.len()` taking `values[x]` at `x = 0, 1, …`.
///
/// Integer forward differences in the falling-factorial basis, summed as
/// `n!·p` with integer coefficients; a single division at the end.
pub fn interpolate_from_zero(values: &[BigInt]) -> Polynomial {
    let n = values.len();
    if n == 0 {
        return Polynomial::zero();
    }
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(n);
    for k in 0..n {
        leading.push(diffs[0].clone());
        for i in 0..n - 1 - k {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    let top = n - 1;
    // Σ_k Δ^k(0) · (top!/k!) · t(t−1)…(t−k+1), all integers.
    let mut total = vec![BigInt::zero(); n];
    let mut falling = vec![BigInt::one()];
    let mut scale = BigInt::from(factorial(top));
    for (k, d) in leading.iter().enumerate() {
        if k > 0 {
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            let shift = BigInt::from(k - 1);
            for (j, c) in falling.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * &shift;
            }
            falling = next;
            scale /= BigInt::from(k);
        }
        if d.is_zero() {
            continue;
        }
        let m = d * &scale;
        for (j, c) in falling.iter().enumerate() {
            total[j] += &m * c;
        }
    }
    let denom = BigInt::from(factorial(top));
    Polynomial::new(total.into_iter().map(|c| Rational::new(c, denom.clone())).collect())
}

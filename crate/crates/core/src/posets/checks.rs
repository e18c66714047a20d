use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{coefficients_by_recursion, is_isomorphic, iter_bits, order_polynomial, IdealLattice, Poset, PosetError};
use crate::exactpoly::{interpolate, Polynomial, Rational};

/// Order-preserving maps `P → [t]` by depth-first assignment along a
/// linear extension. Independent of the ideal lattice.
pub fn bruteforce_map_count(p: &Poset, t: u64) -> BigUint {
    let order = p.linear_order();
    let n = p.len();
    if n == 0 {
        return BigUint::from(1u32);
    }
    let lower: Vec<Vec<usize>> = (0..n).map(|x| iter_bits(p.down_mask(x)).collect()).collect();
    let mut value = vec![0u64; n];
    fn go(k: usize, order: &[usize], lower: &[Vec<usize>], value: &mut [u64], t: u64) -> u128 {
        let x = order[k];
        let lo = lower[x].iter().map(|&y| value[y]).max().unwrap_or(1);
        if k + 1 == order.len() {
            return u128::from(t + 1 - lo.min(t + 1));
        }
        let mut total = 0u128;
        for v in lo..=t {
            value[x] = v;
            total += go(k + 1, order, lower, value, t);
        }
        total
    }
    BigUint::from(go(0, order, &lower, &mut value, t))
}

/// Interpolates [`bruteforce_map_count`] at `t = 0..=n`.
pub fn bruteforce_order_polynomial(p: &Poset) -> Polynomial {
    let points: Vec<(i64, Rational)> = (0..=p.len() as u64)
        .map(|t| (t as i64, Rational::from_integer(BigInt::from(bruteforce_map_count(p, t)))))
        .collect();
    interpolate(&points).expect("distinct abscissae")
}

/// `Ω(P;t)/t^n` weakly decreasing for `t = 1..=t_max`, compared exactly as
/// `Ω(t)(t+1)^n ≥ Ω(t+1) t^n`.
pub fn kahn_saks_check(p: &Poset, t_max: u64) -> Result<bool, PosetError> {
    let omega = order_polynomial(p)?;
    Ok(kahn_saks_holds(&omega, p.len(), t_max))
}

pub fn kahn_saks_holds(omega: &Polynomial, n: usize, t_max: u64) -> bool {
    let values = omega.eval_ints(1..=t_max as i64);
    values.windows(2).enumerate().all(|(k, w)| {
        let t = BigInt::from(k as u64 + 1);
        let lhs = &w[0] * Rational::from_integer((&t + 1u32).pow(n as u32));
        let rhs = &w[1] * Rational::from_integer(t.pow(n as u32));
        lhs >= rhs
    })
}

/// Outcome of checking the meta positivity criterion on a family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaReport {
    pub members_checked: usize,
    /// `(member index, description)` for ideals or filters not found in the family.
    pub closure_violations: Vec<(usize, String)>,
    /// Members with a negative linear coefficient, and that coefficient.
    pub negative_c1: Vec<(usize, String)>,
    /// Members whose recursive coefficients include a negative entry.
    pub negative_coefficients: Vec<usize>,
    pub closed: bool,
    pub positive: bool,
}

/// Checks, for members with at most `size_cap` elements, that every
/// nonempty proper ideal and its complementary filter is isomorphic to some
/// member, that `c_1 ≥ 0`, and that the recursion yields nonnegative
/// coefficients throughout.
pub fn meta_positivity_check(members: &[Poset], size_cap: usize) -> Result<MetaReport, PosetError> {
    let mut report = MetaReport::default();
    let pool: Vec<(usize, &Poset)> = members.iter().enumerate().filter(|(_, p)| p.len() <= size_cap).collect();
    // Bucket by a cheap isomorphism invariant.
    let mut buckets: HashMap<Vec<(u32, u32)>, Vec<usize>> = HashMap::new();
    for &(idx, p) in &pool {
        buckets.entry(invariant(p)).or_default().push(idx);
    }
    let in_family =
        |q: &Poset| buckets.get(&invariant(q)).is_some_and(|ids| ids.iter().any(|&i| is_isomorphic(&members[i], q)));
    for &(idx, p) in &pool {
        report.members_checked += 1;
        let lattice = IdealLattice::build(p)?;
        let full = p.full_mask();
        for &ideal in &lattice.ideals()[1..lattice.top()] {
            for (part, what) in [(ideal, "ideal"), (full & !ideal, "filter")] {
                let q = p.induced(part);
                if !in_family(&q) {
                    report.closure_violations.push((idx, format!("{what} of size {} not in family", q.len())));
                }
            }
        }
        let coeffs = coefficients_by_recursion(p)?;
        if let Some(c1) = coeffs.first() {
            if c1.is_negative() {
                report.negative_c1.push((idx, crate::exactpoly::rational_to_string(c1)));
            }
        }
        if coeffs.iter().any(|c| c.is_negative()) {
            report.negative_coefficients.push(idx);
        }
    }
    report.closure_violations.dedup();
    report.closed = report.closure_violations.is_empty();
    report.positive = report.negative_c1.is_empty() && report.negative_coefficients.is_empty();
    Ok(report)
}

fn invariant(p: &Poset) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> =
        (0..p.len()).map(|x| (p.down_mask(x).count_ones(), p.up_mask(x).count_ones())).collect();
    v.sort_unstable();
    v.push((p.covers().len() as u32, u32::MAX));
    v
}

/// True if every coefficient is nonnegative and `n!·Ω` is integral.
pub fn is_positive_normalized(omega: &Polynomial, n: usize) -> bool {
    omega.has_nonnegative_coeffs()
        && omega.scale(&Rational::from_integer(crate::exactpoly::factorial(n).into())).has_integer_coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{antichain, cell_poset, chain, faulhaber, fig_2covers, zigzag};
    use crate::shapes::skew_shapes_up_to;

    #[test]
    fn bruteforce_counts() {
        assert_eq!(bruteforce_map_count(&chain(2), 3), BigUint::from(6u32));
        assert_eq!(bruteforce_map_count(&antichain(3), 2), BigUint::from(8u32));
        assert_eq!(bruteforce_map_count(&zigzag(3), 0), BigUint::from(0u32));
        assert_eq!(bruteforce_order_polynomial(&zigzag(5)), order_polynomial(&zigzag(5)).unwrap());
    }

    #[test]
    fn kahn_saks_examples() {
        assert!(kahn_saks_check(&chain(2), 10).unwrap());
        assert!(kahn_saks_check(&fig_2covers(), 50).unwrap());
        let s = crate::shapes::parse_shape("6533/21").unwrap();
        let crate::shapes::Shape::Skew(s) = s else { unreachable!() };
        assert!(kahn_saks_check(&cell_poset(&s).unwrap(), 20).unwrap());
    }

    #[test]
    fn faulhaber_family_fails() {
        let family: Vec<Poset> = (0..=4).map(faulhaber).collect();
        let report = meta_positivity_check(&family, 5).unwrap();
        assert!(!report.positive);
        assert_eq!(report.negative_c1, vec![(4, "-1/30".to_string())]);
        // Filters are antichains, which the family lacks.
        assert!(!report.closed);
    }

    #[test]
    fn skew_family_passes_small() {
        let family: Vec<Poset> = skew_shapes_up_to(5).iter().map(|s| cell_poset(s).unwrap()).collect();
        let report = meta_positivity_check(&family, 5).unwrap();
        assert!(report.closed, "{:?}", report.closure_violations);
        assert!(report.positive);
        assert_eq!(report.members_checked, family.len());
    }
}

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{bit, iter_bits, Mask, Poset, PosetError, DEFAULT_IDEAL_CAP};
use crate::exactpoly::{interpolate_from_zero, Polynomial};

/// The distributive lattice `J(P)` of order ideals.
///
/// Ideals are grouped by size and sorted within each level, so lookups are
/// binary searches and index order is a linear extension of `J(P)`.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<Mask>,
    level_start: Vec<usize>,
    /// `stages[s]` lists `(J \ x, J)` index pairs with `x = order[s]` maximal in `J`.
    stages: Vec<Vec<(u32, u32)>>,
}

impl IdealLattice {
    pub fn build(p: &Poset) -> Result<Self, PosetError> {
        Self::build_with_cap(p, DEFAULT_IDEAL_CAP)
    }

    pub fn build_with_cap(p: &Poset, cap: usize) -> Result<Self, PosetError> {
        let n = p.len();
        let mut ideals: Vec<Mask> = vec![0];
        let mut level_start = vec![0, 1];
        for _ in 0..n {
            let (lo, hi) = (level_start[level_start.len() - 2], level_start[level_start.len() - 1]);
            let mut next = Vec::new();
            for &j in &ideals[lo..hi] {
                for x in 0..n {
                    if j & bit(x) == 0 && p.down_mask(x) & !j == 0 {
                        next.push(j | bit(x));
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            if ideals.len() + next.len() > cap {
                return Err(PosetError::CapExceeded { cap });
            }
            ideals.extend(next);
            level_start.push(ideals.len());
        }
        let mut lattice = IdealLattice { ideals, level_start, stages: Vec::new() };
        let position: Vec<usize> = {
            let mut v = vec![0; n];
            for (s, &x) in p.linear_order().iter().enumerate() {
                v[x] = s;
            }
            v
        };
        let mut stages: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        for (idx, &j) in lattice.ideals.iter().enumerate() {
            for x in iter_bits(j) {
                if p.up_mask(x) & j == 0 {
                    let below = lattice.index_of(j & !bit(x)).expect("removing a maximal element leaves an ideal");
                    stages[position[x]].push((below as u32, idx as u32));
                }
            }
        }
        lattice.stages = stages;
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Mask] {
        &self.ideals
    }

    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn index_of(&self, m: Mask) -> Option<usize> {
        let k = m.count_ones() as usize;
        if k + 1 >= self.level_start.len() {
            return None;
        }
        let (lo, hi) = (self.level_start[k], self.level_start[k + 1]);
        self.ideals[lo..hi].binary_search(&m).ok().map(|i| lo + i)
    }

    /// Cover pairs `(I, J)` of `J(P)` as ideal indices.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.stages.iter().flatten().map(|&(a, b)| (a as usize, b as usize))
    }

    /// In-place subset sums: `f(J) ← Σ_{I ⊆ J} f(I)`.
    fn zeta<C: Counter>(&self, f: &mut [C]) -> bool {
        for stage in &self.stages {
            for &(lo, hi) in stage {
                let v = f[lo as usize].clone();
                if !f[hi as usize].add(&v) {
                    return false;
                }
            }
        }
        true
    }

    /// In-place superset sums: `f(I) ← Σ_{J ⊇ I} f(J)`.
    fn zeta_up<C: Counter>(&self, f: &mut [C]) -> bool {
        for stage in self.stages.iter().rev() {
            for &(lo, hi) in stage {
                let v = f[hi as usize].clone();
                if !f[lo as usize].add(&v) {
                    return false;
                }
            }
        }
        true
    }

    fn multichains_from_bottom<C: Counter>(&self, t: usize) -> Option<Vec<C>> {
        let mut f = vec![C::empty(); self.len()];
        f[0] = C::unit();
        for _ in 0..t {
            if !self.zeta(&mut f) {
                return None;
            }
        }
        Some(f)
    }

    /// `Ω(I; t)` for every ideal `I`: multichains `∅ = I_0 ⊆ ... ⊆ I_t = I`.
    pub fn omega_of_ideals(&self, t: usize) -> Vec<BigUint> {
        self.multichains_from_bottom::<BigUint>(t).expect("big integers do not overflow")
    }

    /// `Ω(P \ I; t)` for every ideal `I`: multichains from `I` up to `P`.
    pub fn omega_of_filters(&self, t: usize) -> Vec<BigUint> {
        let mut f = vec![BigUint::zero(); self.len()];
        let top = self.top();
        f[top] = BigUint::one();
        for _ in 0..t {
            self.zeta_up(&mut f);
        }
        f
    }

    /// `Ω(P; t)` for `t = 0..=t_max`.
    pub fn omega_values(&self, t_max: usize) -> Vec<BigUint> {
        if let Some(v) = self.omega_values_with::<u128>(t_max) {
            return v.into_iter().map(BigUint::from).collect();
        }
        self.omega_values_with::<BigUint>(t_max).expect("big integers do not overflow")
    }

    fn omega_values_with<C: Counter>(&self, t_max: usize) -> Option<Vec<C>> {
        let top = self.top();
        let mut f = vec![C::empty(); self.len()];
        f[0] = C::unit();
        let mut out = vec![f[top].clone()];
        for _ in 0..t_max {
            if !self.zeta(&mut f) {
                return None;
            }
            out.push(f[top].clone());
        }
        Some(out)
    }

    /// Maximal chains of `J(P)`, i.e. linear extensions of `P`.
    pub fn maximal_chain_count(&self) -> BigUint {
        fn run<C: Counter>(lat: &IdealLattice) -> Option<C> {
            let mut e = vec![C::empty(); lat.len()];
            e[0] = C::unit();
            let mut pairs: Vec<(u32, u32)> = lat.stages.iter().flatten().copied().collect();
            pairs.sort_unstable();
            for (lo, hi) in pairs {
                let v = e[lo as usize].clone();
                if !e[hi as usize].add(&v) {
                    return None;
                }
            }
            Some(e[lat.top()].clone())
        }
        match run::<u128>(self) {
            Some(v) => BigUint::from(v),
            None => run::<BigUint>(self).expect("big integers do not overflow"),
        }
    }
}

trait Counter: Clone {
    fn empty() -> Self;
    fn unit() -> Self;
    /// Adds in place; false on overflow.
    fn add(&mut self, other: &Self) -> bool;
}

impl Counter for u128 {
    fn empty() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn add(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Counter for BigUint {
    fn empty() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn add(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
}

/// `Ω(P; t)` by counting multichains in `J(P)` at `t = 0..=n` and
/// interpolating. The empty poset gives 1.
pub fn order_polynomial(p: &Poset) -> Result<Polynomial, PosetError> {
    order_polynomial_with_cap(p, DEFAULT_IDEAL_CAP)
}

pub fn order_polynomial_with_cap(p: &Poset, cap: usize) -> Result<Polynomial, PosetError> {
    if p.is_empty() {
        return Ok(Polynomial::one());
    }
    let lattice = IdealLattice::build_with_cap(p, cap)?;
    Ok(omega_from_lattice(p, &lattice))
}

pub(crate) fn omega_from_lattice(p: &Poset, lattice: &IdealLattice) -> Polynomial {
    let values: Vec<BigInt> = lattice.omega_values(p.len()).into_iter().map(BigInt::from).collect();
    interpolate_from_zero(&values)
}

/// Number of linear extensions `e(P)`.
pub fn linear_extensions(p: &Poset) -> Result<BigUint, PosetError> {
    if p.is_empty() {
        return Ok(BigUint::one());
    }
    Ok(IdealLattice::build(p)?.maximal_chain_count())
}

/// Checks `Ω(P; x+y) = Σ_I Ω(I; x) Ω(P \ I; y)` over all ideals `I`.
pub fn verify_coproduct(p: &Poset, x: usize, y: usize) -> Result<bool, PosetError> {
    let lattice = IdealLattice::build(p)?;
    let lhs = lattice.omega_of_ideals(x + y)[lattice.top()].clone();
    let left = lattice.omega_of_ideals(x);
    let right = lattice.omega_of_filters(y);
    let rhs: BigUint = left.iter().zip(&right).map(|(a, b)| a * b).sum();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::posets::{antichain, chain, zigzag};

    #[test]
    fn chain_and_antichain_lattices() {
        assert_eq!(IdealLattice::build(&chain(4)).unwrap().len(), 5);
        assert_eq!(IdealLattice::build(&antichain(4)).unwrap().len(), 16);
    }

    #[test]
    fn small_order_polynomials() {
        assert_eq!(order_polynomial(&chain(0)).unwrap(), Polynomial::one());
        assert_eq!(order_polynomial(&chain(1)).unwrap(), Polynomial::t());
        let two = Polynomial::new(vec![rat(0, 1), rat(1, 2), rat(1, 2)]);
        assert_eq!(order_polynomial(&chain(2)).unwrap(), two);
        assert_eq!(order_polynomial(&antichain(3)).unwrap(), Polynomial::t().pow(3));
    }

    #[test]
    fn zigzag_six() {
        let expected = Polynomial::from_integers([0, 12, 64, 165, 235, 183, 61]).scale(&rat(1, 720));
        assert_eq!(order_polynomial(&zigzag(6)).unwrap(), expected);
    }

    #[test]
    fn linear_extension_counts() {
        assert_eq!(linear_extensions(&antichain(5)).unwrap(), BigUint::from(120u32));
        assert_eq!(linear_extensions(&zigzag(5)).unwrap(), BigUint::from(16u32));
        assert_eq!(linear_extensions(&chain(0)).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn coproduct_on_zigzag() {
        let z3 = zigzag(3);
        assert!(verify_coproduct(&z3, 1, 1).unwrap());
        assert!(verify_coproduct(&z3, 0, 0).unwrap());
        assert!(verify_coproduct(&zigzag(6), 2, 3).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(order_polynomial_with_cap(&antichain(6), 10), Err(PosetError::CapExceeded { cap: 10 }));
    }

    #[test]
    fn large_values_fall_back_to_big_integers() {
        // Ω(chain of 60; 120) = binom(179, 60), which does not fit in u128.
        let lat = IdealLattice::build(&chain(60)).unwrap();
        let vals = lat.omega_values(120);
        let mut expect = BigUint::one();
        for i in 0..60u32 {
            expect = expect * BigUint::from(179 - i) / BigUint::from(i + 1);
        }
        assert_eq!(vals[120], expect);
    }
}

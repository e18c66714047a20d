use std::collections::HashMap;

use num_traits::{One, Zero};

use super::ideals::{omega_from_lattice, IdealLattice};
use super::{bit, iter_bits, Mask, Poset, PosetError, DEFAULT_IDEAL_CAP};
use crate::exactpoly::Rational;

/// Coefficients `[c_1, ..., c_n]` of `Ω(P; t)` from the coproduct recursion
///
/// `(2^k − 2) c_k(P) = Σ_{∅ ≠ I ⊊ P} Σ_i c_i(I) c_{k−i}(P \ I)`,
///
/// with `c_1` of every convex piece read off a multichain count.
pub fn coefficients_by_recursion(p: &Poset) -> Result<Vec<Rational>, PosetError> {
    coefficients_by_recursion_with_cap(p, DEFAULT_IDEAL_CAP)
}

pub fn coefficients_by_recursion_with_cap(p: &Poset, cap: usize) -> Result<Vec<Rational>, PosetError> {
    let mut memo = Memo { p, cap, table: HashMap::new() };
    let c = memo.coefficients(p.full_mask())?;
    Ok(c[1..].to_vec())
}

struct Memo<'a> {
    p: &'a Poset,
    cap: usize,
    /// `c_0..c_|S|` per convex subset `S`.
    table: HashMap<Mask, Vec<Rational>>,
}

impl Memo<'_> {
    fn coefficients(&mut self, s: Mask) -> Result<Vec<Rational>, PosetError> {
        if let Some(c) = self.table.get(&s) {
            return Ok(c.clone());
        }
        let n = s.count_ones() as usize;
        let mut c = vec![Rational::zero(); n + 1];
        if n == 0 {
            c[0] = Rational::one();
            self.table.insert(s, c.clone());
            return Ok(c);
        }
        let sub = self.p.induced(s);
        let lattice = IdealLattice::build_with_cap(&sub, self.cap)?;
        c[1] = omega_from_lattice(&sub, &lattice).coeff(1);
        if n >= 2 {
            // Ideals of the induced poset, mapped back to masks of P.
            let elems: Vec<usize> = iter_bits(s).collect();
            let lift = |m: Mask| iter_bits(m).fold(0, |acc, k| acc | bit(elems[k]));
            let mut sums = vec![Rational::zero(); n + 1];
            for &ideal in &lattice.ideals()[1..lattice.top()] {
                let lower = lift(ideal);
                let upper = s & !lower;
                let ci = self.coefficients(lower)?;
                let cj = self.coefficients(upper)?;
                for (i, a) in ci.iter().enumerate().skip(1) {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in cj.iter().enumerate().skip(1) {
                        if i + j <= n {
                            sums[i + j] += a * b;
                        }
                    }
                }
            }
            for k in 2..=n {
                let denom = Rational::from_integer((num_bigint::BigInt::from(2u32).pow(k as u32)) - 2);
                c[k] = &sums[k] / &denom;
            }
        }
        self.table.insert(s, c.clone());
        Ok(c)
    }
}

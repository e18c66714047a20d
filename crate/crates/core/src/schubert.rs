//! Permutations, Rothe diagrams, reduced words and the Macdonald identity
//! for straight shapes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detformulas::{c1_skew, kreweras_order_polynomial, DetError};
use crate::exactpoly::{binomial_int, factorial, Polynomial, Rational};
use crate::shapes::{Partition, SkewShape};

pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("partition {lambda:?} is not contained in the staircase of size {n}")]
    NotInStaircase { lambda: Vec<usize>, n: usize },
    #[error("more than {cap} reduced words")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Det(#[from] DetError),
}

/// Permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self, SchubertError> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(SchubertError::NotPermutation(format!("{oneline:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn oneline(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i+1` (1-indexed).
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `1^m × w = 12…m (m+w_1)…(m+w_n)`.
    pub fn one_times(&self, m: usize) -> Self {
        Permutation((1..=m).chain(self.0.iter().map(|v| v + m)).collect())
    }

    fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let w = &self.0;
        let k = pattern.len();
        let mut idx: Vec<usize> = (0..k).collect();
        if w.len() < k {
            return false;
        }
        loop {
            let vals: Vec<usize> = idx.iter().map(|&i| w[i]).collect();
            if (0..k).all(|a| (0..k).all(|b| (pattern[a] < pattern[b]) == (vals[a] < vals[b]))) {
                return true;
            }
            // Next k-subset in lexicographic order.
            let mut p = k;
            while p > 0 && idx[p - 1] == w.len() - k + p - 1 {
                p -= 1;
            }
            if p == 0 {
                return false;
            }
            idx[p - 1] += 1;
            for q in p..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }

    /// 132-avoiding.
    pub fn is_dominant(&self) -> bool {
        !self.contains_pattern(&[1, 3, 2])
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        !self.contains_pattern(&[2, 1, 4, 3])
    }

    /// `λ(w)/μ(w)` for a vexillary `w`: `λ(w)` is the smallest partition
    /// containing `D(w)`, `μ(w)` the sorted row lengths of `D(w)`.
    pub fn vexillary_shape(&self) -> Option<SkewShape> {
        if !self.is_vexillary() {
            return None;
        }
        let d = rothe_diagram(self);
        let n = self.len();
        let mut row_max = vec![0usize; n + 1];
        let mut row_len = vec![0usize; n + 1];
        for &(i, j) in &d {
            row_max[i] = row_max[i].max(j);
            row_len[i] += 1;
        }
        let mut lambda = vec![0usize; n];
        let mut running = 0;
        for i in (1..=n).rev() {
            running = running.max(row_max[i]);
            lambda[i - 1] = running;
        }
        let mut mu: Vec<usize> = row_len[1..].to_vec();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        SkewShape::new(lambda, mu).ok()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            self.0.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = SchubertError;

    /// `4231`, or comma-separated for `n ≥ 10`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let bad = || SchubertError::NotPermutation(text.to_string());
        let values: Vec<usize> = if text.contains(',') {
            text.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

/// `w_λ` in `S_n`: the permutation with Lehmer code `λ`.
pub fn dominant_permutation(lambda: &Partition, n: usize) -> Result<Permutation, SchubertError> {
    let parts = lambda.parts();
    if parts.len() > n || parts.iter().enumerate().any(|(i, &p)| p + i + 1 > n) {
        return Err(SchubertError::NotInStaircase { lambda: parts.to_vec(), n });
    }
    let mut unused: Vec<usize> = (1..=n).collect();
    let w = (0..n).map(|i| unused.remove(parts.get(i).copied().unwrap_or(0))).collect();
    Ok(Permutation(w))
}

/// Smallest `n` with `λ ⊆ δ_n`.
pub fn staircase_size(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| p + i + 1).max().unwrap_or(1)
}

/// `D(w) = {(i, w_j) : i < j, w_i > w_j}`, sorted.
pub fn rothe_diagram(w: &Permutation) -> Vec<(usize, usize)> {
    let v = w.oneline();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                out.push((i + 1, v[j]));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Applies `s_{r_1} ⋯ s_{r_ℓ}` to the identity.
pub fn evaluate_word(word: &[usize], n: usize) -> Permutation {
    word.iter().fold(Permutation::identity(n), |w, &i| w.times_simple(i))
}

pub fn reduced_words(w: &Permutation) -> Result<Vec<Vec<usize>>, SchubertError> {
    reduced_words_with_cap(w, DEFAULT_WORD_CAP)
}

/// All reduced words, by peeling right descents; sorted lexicographically.
pub fn reduced_words_with_cap(w: &Permutation, cap: usize) -> Result<Vec<Vec<usize>>, SchubertError> {
    fn go(
        w: &Permutation,
        suffix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), SchubertError> {
        let desc = w.descents();
        if desc.is_empty() {
            if out.len() == cap {
                return Err(SchubertError::CapExceeded { cap });
            }
            out.push(suffix.iter().rev().copied().collect());
            return Ok(());
        }
        for i in desc {
            suffix.push(i);
            go(&w.times_simple(i), suffix, out, cap)?;
            suffix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn dominant_words(lambda: &Partition, cap: usize) -> Result<Vec<Vec<usize>>, SchubertError> {
    reduced_words_with_cap(&dominant_permutation(lambda, staircase_size(lambda))?, cap)
}

/// `(1/n!) Σ_r Π (t + r_i + shift)` over the given words.
pub fn word_sum(words: &[Vec<usize>], shift: i64) -> Polynomial {
    // Words with the same letter multiset contribute the same product.
    let mut classes: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let n = words.first().map_or(0, |w| w.len());
    for w in words {
        let mut key = w.clone();
        key.sort_unstable();
        *classes.entry(key).or_default() += 1;
    }
    let mut total = Polynomial::zero();
    for (letters, count) in classes {
        let prod = letters.iter().fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear(r as i64 + shift));
        total += &prod.scale(&Rational::from_integer(count.into()));
    }
    total.scale(&Rational::new(1.into(), factorial(n).into()))
}

/// `PP_λ(t)` by the Macdonald identity.
pub fn macdonald_pp(lambda: &Partition) -> Result<Polynomial, SchubertError> {
    macdonald_pp_with_cap(lambda, DEFAULT_WORD_CAP)
}

pub fn macdonald_pp_with_cap(lambda: &Partition, cap: usize) -> Result<Polynomial, SchubertError> {
    Ok(word_sum(&dominant_words(lambda, cap)?, 0))
}

/// `PP_{(a+1,1^b)}(t) = (1/(a+b+1)!) Σ_i C(a,i−1)C(b,i−1)(t+i) Π_{[a+1]∖i}(t+j) Π_{[b+1]∖i}(t+j)`,
/// with `a ≤ b` arranged by conjugation.
pub fn hook_pp(a: usize, b: usize) -> Polynomial {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let mut total = Polynomial::zero();
    for i in 1..=a + 1 {
        let weight = binomial_int(a as i64, i as i64 - 1) * binomial_int(b as i64, i as i64 - 1);
        let mut term = Polynomial::linear(i as i64);
        for j in (1..=a + 1).chain(1..=b + 1).filter(|&j| j != i) {
            term = &term * &Polynomial::linear(j as i64);
        }
        total += &term.scale(&Rational::from_integer(weight));
    }
    total.scale(&Rational::new(1.into(), factorial(a + b + 1).into()))
}

fn elementary(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::from(1);
    for (m, &v) in values.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * v;
        }
    }
    e
}

/// `[c_1, …, c_n]` of `PP_λ(t−1)` with `c_i = (1/n!) Σ_r e_{n−i}(r_1−1, …, r_n−1)`.
pub fn coefficients_via_esym(lambda: &Partition) -> Result<Vec<Rational>, SchubertError> {
    let n = lambda.size();
    let words = dominant_words(lambda, DEFAULT_WORD_CAP)?;
    let mut sums = vec![BigInt::zero(); n + 1];
    for w in &words {
        let shifted: Vec<i64> = w.iter().map(|&r| r as i64 - 1).collect();
        for (k, e) in elementary(&shifted).into_iter().enumerate() {
            sums[k] += e;
        }
    }
    let nf = BigInt::from(factorial(n));
    Ok((1..=n).map(|i| Rational::new(sums[n - i].clone(), nf.clone())).collect())
}

/// Both sides of `(1/n!) Σ_{r ∈ RW_1} Π_{j≠k}(r_j−1) = (λ_1−1)!(ℓ−1)!/(λ_1−1+ℓ)!`,
/// where `RW_1` are the words with exactly one letter `1`, at position `k`.
pub fn curious_identity_sides(lambda: &Partition) -> Result<(Rational, Rational), SchubertError> {
    let n = lambda.size();
    let words = dominant_words(lambda, DEFAULT_WORD_CAP)?;
    let mut lhs = BigInt::zero();
    for w in words.iter().filter(|w| w.iter().filter(|&&r| r == 1).count() == 1) {
        lhs += w.iter().filter(|&&r| r != 1).map(|&r| BigInt::from(r - 1)).product::<BigInt>();
    }
    let lhs = Rational::new(lhs, factorial(n).into());
    let rhs = c1_skew(&SkewShape::straight(lambda));
    Ok((lhs, rhs))
}

pub fn curious_identity_check(lambda: &Partition) -> Result<bool, SchubertError> {
    let (l, r) = curious_identity_sides(lambda)?;
    Ok(l == r)
}

/// Outcome of [`macdonald_expansion_search`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpansionVerdict {
    /// Exponent vectors `a` (indexed by `i ∈ 0..=m`) with multiplicities.
    Found { terms: Vec<(Vec<usize>, usize)>, nodes: u64 },
    /// The whole search space was explored: no expansion over this support.
    Exhausted { nodes: u64 },
    /// The node budget ran out first. Not a refutation.
    BudgetExceeded { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub shape: SkewShape,
    /// Set when `λ_1 < ℓ(λ)` and the conjugate shape was searched instead.
    pub conjugated: bool,
    pub support_max: usize,
    pub verdict: ExpansionVerdict,
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Searches for `|λ/μ|!·Ω(t) = Σ_a Π_{i=0}^{m} (t+i)^{a_i}` over
/// compositions `a` of `|λ/μ|` into `m+1` parts.
///
/// Candidates are taken in a fixed order and each gets a multiplicity,
/// largest first; a branch dies as soon as the remainder has a negative
/// coefficient or cannot be covered by the candidates left.
pub fn macdonald_expansion_search(s: &SkewShape, m: usize, budget: u64) -> Result<ExpansionReport, SchubertError> {
    let conjugated = s.lambda().first().copied().unwrap_or(0) < s.len();
    let shape = if conjugated { s.conjugate() } else { s.clone() };
    let n = shape.size();
    let omega = kreweras_order_polynomial(&shape)?;
    let target: Vec<BigInt> =
        omega.scale(&Rational::from_integer(factorial(n).into())).integer_coeffs().expect("n!·Ω is integral");
    let mut target = target;
    target.resize(n + 1, BigInt::zero());
    let candidates: Vec<(Vec<usize>, Vec<BigInt>)> = compositions(n, m + 1)
        .into_iter()
        .map(|a| {
            let mut p = Polynomial::one();
            for (i, &e) in a.iter().enumerate() {
                p = &p * &Polynomial::linear(i as i64).pow(e as u32);
            }
            let mut c = p.integer_coeffs().expect("integer product");
            c.resize(n + 1, BigInt::zero());
            (a, c)
        })
        .collect();

    struct Search<'a> {
        candidates: &'a [(Vec<usize>, Vec<BigInt>)],
        nodes: u64,
        budget: u64,
        chosen: Vec<(usize, usize)>,
    }
    enum Step {
        Done,
        Dead,
        OutOfBudget,
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize, rest: &mut [BigInt]) -> Step {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            if rest.iter().all(|c| c.is_zero()) {
                return Step::Done;
            }
            if idx == self.candidates.len() {
                return Step::Dead;
            }
            let (_, coeffs) = &self.candidates[idx];
            // Every candidate is monic of the same degree, so the leading
            // coefficient counts the terms still needed.
            let max = rest.last().and_then(|c| usize::try_from(c).ok()).unwrap_or(0);
            let mut k = 0;
            let mut work = rest.to_vec();
            while k < max {
                for (w, c) in work.iter_mut().zip(coeffs) {
                    *w -= c;
                }
                if work.iter().any(|c| c.is_negative()) {
                    break;
                }
                k += 1;
            }
            // Try multiplicities k, k−1, …, 0.
            loop {
                if k > 0 {
                    self.chosen.push((idx, k));
                }
                let mut next: Vec<BigInt> = rest.iter().zip(coeffs).map(|(r, c)| r - c * BigInt::from(k)).collect();
                match self.go(idx + 1, &mut next) {
                    Step::Done => return Step::Done,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::Dead => {}
                }
                if k > 0 {
                    self.chosen.pop();
                }
                if k == 0 {
                    return Step::Dead;
                }
                k -= 1;
            }
        }
    }
    let mut search = Search { candidates: &candidates, nodes: 0, budget, chosen: Vec::new() };
    let verdict = match search.go(0, &mut target) {
        Step::Done => ExpansionVerdict::Found {
            terms: search.chosen.iter().map(|&(i, k)| (candidates[i].0.clone(), k)).collect(),
            nodes: search.nodes,
        },
        Step::Dead => ExpansionVerdict::Exhausted { nodes: search.nodes },
        Step::OutOfBudget => ExpansionVerdict::BudgetExceeded { nodes: search.nodes },
    };
    Ok(ExpansionReport { shape, conjugated, support_max: m, verdict })
}

/// Rebuilds `Σ k·Π(t+i)^{a_i}` from a certificate.
pub fn expand_certificate(terms: &[(Vec<usize>, usize)]) -> Polynomial {
    let mut total = Polynomial::zero();
    for (a, k) in terms {
        let mut p = Polynomial::one();
        for (i, &e) in a.iter().enumerate() {
            p = &p * &Polynomial::linear(i as i64).pow(e as u32);
        }
        total += &p.scale(&Rational::from_integer((*k as i64).into()));
    }
    total
}

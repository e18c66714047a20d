//! Finite posets on at most 128 elements, stored as strict down-set and
//! up-set bitmasks plus the cover relation.

mod cells;
mod checks;
mod ideals;
mod iso;
mod named;
mod recursion;

pub use cells::{cell_poset, complement_zigzag, cylindric_cell_poset, shifted_cell_poset, width_two_poset};
pub use checks::{
    bruteforce_map_count, bruteforce_order_polynomial, is_positive_normalized, kahn_saks_check, kahn_saks_holds,
    meta_positivity_check, MetaReport,
};
pub use ideals::{linear_extensions, order_polynomial, order_polynomial_with_cap, verify_coproduct, IdealLattice};
pub use iso::is_isomorphic;
pub use named::{
    antichain, chain, circular_zigzag, circular_zigzag_cylindric, faulhaber, fig_2covers, parse_named_poset, zigzag,
};
pub use recursion::{coefficients_by_recursion, coefficients_by_recursion_with_cap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::shapes::ShapeError;

/// Largest poset the bitmask representation supports.
pub const MAX_ELEMENTS: usize = 128;

/// Default bound on the number of order ideals materialised.
pub const DEFAULT_IDEAL_CAP: usize = 2_000_000;

pub type Mask = u128;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u128 << i
}

pub(crate) fn iter_bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has {n} elements; at most {MAX_ELEMENTS} are supported")]
    TooLarge { n: usize },
    #[error("element {index} out of range for a poset on {n} elements")]
    BadElement { index: usize, n: usize },
    #[error("relations contain a cycle")]
    Cycle,
    #[error("shape has no cells")]
    EmptyShape,
    #[error("ideal lattice exceeds the cap of {cap} ideals")]
    CapExceeded { cap: usize },
    #[error("shape does not fit in the {m}x{n} rectangle")]
    NotInRectangle { m: usize, n: usize },
    #[error("width-two orientation is inconsistent at cell ({i},{j})")]
    Orientation { i: usize, j: usize },
    #[error("unknown named poset {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("bad poset JSON: {0}")]
    Json(String),
}

/// A finite poset on `0..n`. Relations are closed transitively on construction
/// and the stored covers are the transitive reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    labels: Vec<String>,
    down: Vec<Mask>,
    up: Vec<Mask>,
    order: Vec<usize>,
}

impl Poset {
    /// Builds the poset generated by `lo < hi` for every pair in `relations`.
    /// Pairs with `lo == hi` are ignored.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let mut lowers: Vec<Mask> = vec![0; n];
        for &(lo, hi) in relations {
            for idx in [lo, hi] {
                if idx >= n {
                    return Err(PosetError::BadElement { index: idx, n });
                }
            }
            if lo != hi {
                lowers[hi] |= bit(lo);
            }
        }
        // Kahn's algorithm, smallest available index first.
        let mut pending: Vec<u32> = lowers.iter().map(|m| m.count_ones()).collect();
        let mut uppers: Vec<Mask> = vec![0; n];
        for (hi, &m) in lowers.iter().enumerate() {
            for lo in iter_bits(m) {
                uppers[lo] |= bit(hi);
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&x| pending[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = ready.pop_first() {
            order.push(x);
            for y in iter_bits(uppers[x]) {
                pending[y] -= 1;
                if pending[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::Cycle);
        }
        let mut down: Vec<Mask> = vec![0; n];
        for &x in &order {
            let mut d = 0;
            for lo in iter_bits(lowers[x]) {
                d |= down[lo] | bit(lo);
            }
            down[x] = d;
        }
        let mut up: Vec<Mask> = vec![0; n];
        for (x, &d) in down.iter().enumerate() {
            for lo in iter_bits(d) {
                up[lo] |= bit(x);
            }
        }
        let mut covers = Vec::new();
        for (y, &below) in down.iter().enumerate() {
            for x in iter_bits(below) {
                if below & up[x] == 0 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Ok(Poset { n, covers, labels: Vec::new(), down, up, order })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = labels;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of `x`, or its index when unlabelled.
    pub fn label(&self, x: usize) -> String {
        self.labels.get(x).cloned().unwrap_or_else(|| x.to_string())
    }

    /// Strict down-set of `x`.
    pub fn down_mask(&self, x: usize) -> Mask {
        self.down[x]
    }

    /// Strict up-set of `x`.
    pub fn up_mask(&self, x: usize) -> Mask {
        self.up[x]
    }

    pub fn full_mask(&self) -> Mask {
        if self.n == MAX_ELEMENTS {
            Mask::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.down[b] & bit(a) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    /// A fixed linear extension (smallest index first among minimal elements).
    pub fn linear_order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_down_closed(&self, m: Mask) -> bool {
        iter_bits(m).all(|x| self.down[x] & !m == 0)
    }

    /// Induced subposet on the elements of `m`, renumbered in increasing order.
    pub fn induced(&self, m: Mask) -> Poset {
        let elems: Vec<usize> = iter_bits(m).collect();
        let mut index = vec![usize::MAX; self.n];
        for (k, &x) in elems.iter().enumerate() {
            index[x] = k;
        }
        let rels: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter(|(a, b)| m & bit(*a) != 0 && m & bit(*b) != 0)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        // Covers of P restricted to a subset can miss relations through removed
        // elements, so add every comparable pair.
        let mut all = rels;
        for &y in &elems {
            for x in iter_bits(self.down[y] & m) {
                all.push((index[x], index[y]));
            }
        }
        let p = Poset::from_relations(elems.len(), &all).expect("a subposet is acyclic");
        if self.labels.is_empty() {
            p
        } else {
            p.with_labels(elems.iter().map(|&x| self.labels[x].clone()).collect())
        }
    }

    pub fn dual(&self) -> Poset {
        let rels: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        let mut p = Poset::from_relations(self.n, &rels).expect("dual of a poset is a poset");
        p.labels = self.labels.clone();
        p
    }

    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n = self.n + other.n;
        let mut rels = self.covers.clone();
        rels.extend(other.covers.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        let p = Poset::from_relations(n, &rels)?;
        if self.labels.is_empty() && other.labels.is_empty() {
            Ok(p)
        } else {
            let labels = (0..self.n).map(|x| self.label(x)).chain((0..other.n).map(|x| other.label(x))).collect();
            Ok(p.with_labels(labels))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetJson::from(self)).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Poset, PosetError> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| PosetError::Json(e.to_string()))?;
        Poset::try_from(j)
    }

    /// Hasse diagram in Graphviz DOT, edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for x in 0..self.n {
            out.push_str(&format!("  {x} [label=\"{}\"];\n", self.label(x).replace('"', "\\\"")));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  {a} -> {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Wire form `{"n": int, "covers": [[lo, hi], ...], "labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl From<&Poset> for PosetJson {
    fn from(p: &Poset) -> Self {
        PosetJson { n: p.n, covers: p.covers.iter().map(|&(a, b)| [a, b]).collect(), labels: p.labels.clone() }
    }
}

impl TryFrom<PosetJson> for Poset {
    type Error = PosetError;

    fn try_from(j: PosetJson) -> Result<Self, PosetError> {
        let rels: Vec<(usize, usize)> = j.covers.iter().map(|c| (c[0], c[1])).collect();
        let p = Poset::from_relations(j.n, &rels)?;
        if j.labels.is_empty() {
            Ok(p)
        } else if j.labels.len() == j.n {
            Ok(p.with_labels(j.labels))
        } else {
            Err(PosetError::Json(format!("{} labels for {} elements", j.labels.len(), j.n)))
        }
    }
}

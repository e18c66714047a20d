use super::{complement_zigzag, cylindric_cell_poset, Poset, PosetError};
use crate::shapes::{CylindricShape, SkewShape};

pub fn chain(n: usize) -> Poset {
    let rels: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_relations(n, &rels).expect("a chain is acyclic")
}

pub fn antichain(n: usize) -> Poset {
    Poset::from_relations(n, &[]).expect("no relations")
}

/// `Z_n`: `x_1 < x_2 > x_3 < x_4 > ...`.
pub fn zigzag(n: usize) -> Poset {
    let rels: Vec<(usize, usize)> = (1..n).map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) }).collect();
    Poset::from_relations(n, &rels).expect("a fence is acyclic")
}

/// `Ẑ_n` for even `n`: the zig-zag with `x_n > x_1` closing the cycle.
/// `Ẑ_2` collapses to a 2-chain.
pub fn circular_zigzag(n: usize) -> Result<Poset, PosetError> {
    if n == 0 || n % 2 == 1 {
        return Err(PosetError::UnknownName(format!("circular-zigzag:{n} (n must be even and positive)")));
    }
    let mut rels: Vec<(usize, usize)> = (1..n).map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) }).collect();
    rels.push((0, n - 1));
    Poset::from_relations(n, &rels)
}

/// One minimum covered by an antichain of `n`: `Ω = Σ_{j ≤ t} j^n`.
pub fn faulhaber(n: usize) -> Poset {
    let rels: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    Poset::from_relations(n + 1, &rels).expect("a star is acyclic")
}

/// Binary tree on seven elements: `h` is the minimum, covered by `e` and `g`;
/// `a, b` cover `e` and `c, d` cover `g`.
pub fn fig_2covers() -> Poset {
    let names = ["a", "b", "c", "d", "e", "g", "h"];
    let (a, b, c, d, e, g, h) = (0, 1, 2, 3, 4, 5, 6);
    let rels = [(h, e), (h, g), (e, a), (e, b), (g, c), (g, d)];
    Poset::from_relations(7, &rels)
        .expect("a tree is acyclic")
        .with_labels(names.iter().map(|s| s.to_string()).collect())
}

/// `Ẑ_n` realised as the cylindric cell poset of `ζ_n` with `d = λ_1 − 1`.
pub fn circular_zigzag_cylindric(n: usize) -> Result<Poset, PosetError> {
    let shape = CylindricShape::circular_fence(&SkewShape::zigzag(n))?;
    cylindric_cell_poset(&shape)
}

/// Parses `zigzag:n`, `circular-zigzag:n`, `complement-zigzag:n`,
/// `faulhaber:n`, `fig-2covers`, `chain:n`, `antichain:n`.
pub fn parse_named_poset(text: &str) -> Result<Poset, PosetError> {
    let text = text.trim();
    if text == "fig-2covers" {
        return Ok(fig_2covers());
    }
    let (name, arg) = text.split_once(':').ok_or_else(|| PosetError::UnknownName(text.to_string()))?;
    let n: usize = arg.parse().map_err(|_| PosetError::UnknownName(text.to_string()))?;
    match name {
        "zigzag" if n >= 1 => Ok(zigzag(n)),
        "circular-zigzag" => circular_zigzag(n),
        "complement-zigzag" if n >= 1 => Ok(complement_zigzag(n)),
        "faulhaber" => Ok(faulhaber(n)),
        "chain" => Ok(chain(n)),
        "antichain" => Ok(antichain(n)),
        _ => Err(PosetError::UnknownName(text.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, Polynomial};
    use crate::posets::{cell_poset, is_isomorphic, order_polynomial};

    #[test]
    fn zigzag_matches_ribbon() {
        for n in 1..=9 {
            assert!(is_isomorphic(&zigzag(n), &cell_poset(&SkewShape::zigzag(n)).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn circular_zigzags_match_cylindric_shapes() {
        for n in [2, 4, 6, 8] {
            assert!(is_isomorphic(&circular_zigzag(n).unwrap(), &circular_zigzag_cylindric(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn faulhaber_polynomial() {
        let expected = Polynomial::new(vec![rat(0, 1), rat(-1, 30), rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 5)]);
        assert_eq!(order_polynomial(&faulhaber(4)).unwrap(), expected);
    }

    #[test]
    fn two_covers_polynomial() {
        let expected = Polynomial::new(vec![
            rat(0, 1),
            rat(-1, 210),
            rat(1, 36),
            rat(7, 36),
            rat(13, 36),
            rat(53, 180),
            rat(1, 9),
            rat(1, 63),
        ]);
        assert_eq!(order_polynomial(&fig_2covers()).unwrap(), expected);
    }

    #[test]
    fn names() {
        assert!(is_isomorphic(&parse_named_poset("zigzag:5").unwrap(), &zigzag(5)));
        assert_eq!(parse_named_poset("fig-2covers").unwrap().len(), 7);
        assert_eq!(parse_named_poset("faulhaber:4").unwrap().len(), 5);
        assert!(parse_named_poset("circular-zigzag:3").is_err());
        assert!(parse_named_poset("hexagon:3").is_err());
        assert!(parse_named_poset("zigzag").is_err());
    }
}

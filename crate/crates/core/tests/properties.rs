use num_bigint::BigInt;
use orderpoly::detformulas::{c1_skew, kreweras_order_polynomial};
use orderpoly::exactpoly::{factorial, interpolate, interpolate_from_zero, rat, Polynomial, Rational};
use orderpoly::geometry::HStarVector;
use orderpoly::posets::{
    bruteforce_order_polynomial, cell_poset, coefficients_by_recursion, linear_extensions, order_polynomial, Poset,
};
use orderpoly::shapes::{parse_shape, Shape, SkewShape};
use proptest::prelude::*;

/// Random poset on up to 7 elements; relations only go from lower to higher
/// index, so the input is always acyclic.
fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.3), k).prop_map(move |keep| {
            let rel: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
            Poset::from_relations(n, &rel).unwrap()
        })
    })
}

fn skew_shape() -> impl Strategy<Value = SkewShape> {
    (proptest::collection::vec(0usize..=4, 1..=4), proptest::collection::vec(0usize..=4, 4)).prop_map(
        |(mut lam, raw)| {
            lam.sort_unstable_by(|a, b| b.cmp(a));
            let mut mu = Vec::with_capacity(lam.len());
            let mut prev = usize::MAX;
            for (i, &l) in lam.iter().enumerate() {
                let m = raw[i].min(l).min(prev);
                mu.push(m);
                prev = m;
            }
            SkewShape::new(lam, mu).unwrap()
        },
    )
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-50i64..=50, 1i64..=12), 0..=7)
        .prop_map(|c| Polynomial::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn scaled(p: &Polynomial, n: usize) -> Polynomial {
    p.scale(&Rational::from_integer(factorial(n).into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_polynomial_basics(p in poset()) {
        let n = p.len();
        let omega = order_polynomial(&p).unwrap();
        prop_assert_eq!(omega.eval_int(1), rat(1, 1));
        prop_assert_eq!(omega.eval_int(0), rat(0, 1));
        prop_assert_eq!(omega.degree(), Some(n));
        prop_assert!(scaled(&omega, n).integer_coeffs().is_some());
        // Leading coefficient is e(P)/n!.
        let e = linear_extensions(&p).unwrap();
        prop_assert_eq!(scaled(&omega, n).coeff(n), Rational::from_integer(BigInt::from(e)));
    }

    #[test]
    fn lattice_maps_and_recursion_agree(p in poset()) {
        let lattice = order_polynomial(&p).unwrap();
        prop_assert_eq!(&bruteforce_order_polynomial(&p), &lattice);
        // The recursion returns c_1..c_n; Ω(0) = 0 for nonempty P.
        let mut c = vec![rat(0, 1)];
        c.extend(coefficients_by_recursion(&p).unwrap());
        prop_assert_eq!(&Polynomial::new(c), &lattice);
    }

    #[test]
    fn dual_and_disjoint_union(p in poset(), q in poset()) {
        let omega = order_polynomial(&p).unwrap();
        prop_assert_eq!(&order_polynomial(&p.dual()).unwrap(), &omega);
        let sum = p.disjoint_union(&q).unwrap();
        let product = omega.clone() * order_polynomial(&q).unwrap();
        prop_assert_eq!(order_polynomial(&sum).unwrap(), product);
    }

    #[test]
    fn hstar_sums_to_linear_extensions(p in poset()) {
        let n = p.len();
        let h = HStarVector::from_ehrhart(&order_polynomial(&p).unwrap().shift(1), n).unwrap();
        prop_assert_eq!(&h.coeffs[0], &BigInt::from(1));
        prop_assert!(h.is_nonnegative());
        prop_assert_eq!(h.sum(), BigInt::from(linear_extensions(&p).unwrap()));
    }

    #[test]
    fn kreweras_matches_cell_poset(s in skew_shape()) {
        prop_assume!(s.size() > 0);
        let kw = kreweras_order_polynomial(&s).unwrap();
        let lattice = order_polynomial(&cell_poset(&s).unwrap()).unwrap();
        prop_assert_eq!(&kw, &lattice);
        prop_assert_eq!(c1_skew(&s), kw.coeff(1));
        // Transposing the diagram gives an isomorphic cell poset.
        prop_assert_eq!(kreweras_order_polynomial(&s.conjugate()).unwrap(), kw);
    }

    #[test]
    fn shape_text_round_trips(s in skew_shape()) {
        let t = s.trimmed();
        prop_assume!(t.size() > 0);
        let text = t.to_string();
        match parse_shape(&text).unwrap() {
            Shape::Skew(back) => {
                prop_assert_eq!(back.to_string(), text);
                prop_assert_eq!(back.cells(), t.cells());
            }
            other => prop_assert!(false, "{} parsed as {:?}", text, other),
        }
    }

    #[test]
    fn polynomial_json_round_trips(p in polynomial()) {
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn interpolation_recovers_the_polynomial(p in polynomial()) {
        let d = p.degree().unwrap_or(0);
        let points: Vec<(i64, Rational)> = (0..=d as i64).map(|x| (x * 2 - 3, p.eval_int(x * 2 - 3))).collect();
        prop_assert_eq!(&interpolate(&points).unwrap(), &p);
        let scale = p.denominator_lcm();
        let q = p.scale(&Rational::from_integer(scale));
        let values: Vec<BigInt> = (0..=d as i64).map(|x| q.eval_int(x).to_integer()).collect();
        prop_assert_eq!(interpolate_from_zero(&values), q);
    }
}

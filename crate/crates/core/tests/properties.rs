use proptest::prelude::*;

use skein::bracket::{jones, kauffman_bracket, kauffman_bracket_statesum};
use skein::conway::{conway, conway_with_basepoints, ConwayPoly};
use skein::corpus::Corpus;
use skein::families::{self, CSelector};
use skein::tangle::{phi_l, OrientationClass, Tangle};
use skein::{parse_pd, render_pd, CrossingSite, LaurentPoly, Sign};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..12, -6i64..6), 0..6).prop_map(LaurentPoly::from_terms)
}

fn delta() -> LaurentPoly {
    LaurentPoly::delta()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn span_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).span().unwrap(), a.span().unwrap() + b.span().unwrap());
    }

    #[test]
    fn invert_variable_is_an_involutive_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        prop_assert_eq!((&a + &b).invert_variable(), &a.invert_variable() + &b.invert_variable());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pd_round_trip_and_diagram_basics(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let d = c.diagram(10);
        let canon = d.canonical();
        prop_assert_eq!(parse_pd(&render_pd(&canon)).unwrap().canonical(), canon);
        prop_assert_eq!(d.mirror().writhe().unwrap(), -d.writhe().unwrap());
        let e = c.diagram(6);
        prop_assert_eq!(d.disjoint_union(&e).components(), d.components() + e.components());
        for s in 0..d.num_crossings() {
            let (l0, linf) = d.skein_children(CrossingSite(s)).unwrap();
            prop_assert_eq!(l0.num_crossings(), d.num_crossings() - 1);
            prop_assert_eq!(linf.num_crossings(), d.num_crossings() - 1);
        }
    }

    #[test]
    fn bracket_properties(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let d = c.diagram(12);
        let b = kauffman_bracket(&d);
        prop_assert_eq!(kauffman_bracket_statesum(&d).unwrap(), b.clone());
        prop_assert_eq!(kauffman_bracket(&d.mirror()), b.invert_variable());
        let arc = d.crossings()[0][0];
        let balanced = d.add_kink(arc, Sign::Positive).unwrap();
        let arc2 = balanced.crossings()[0][2];
        let balanced = balanced.add_kink(arc2, Sign::Negative).unwrap();
        prop_assert_eq!(kauffman_bracket(&balanced), b.clone());
        let e = c.diagram(6);
        prop_assert_eq!(kauffman_bracket(&d.disjoint_union(&e)), &(&b * &kauffman_bracket(&e)) * &delta());
        prop_assert_eq!(jones(&d).unwrap().span_q(), b.span().ok());
    }

    #[test]
    fn conway_properties(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let d = c.diagram(9);
        let v = conway(&d).unwrap();
        for s in 0..d.num_crossings() {
            prop_assert!(skein::conway::conway_skein_check(&d, CrossingSite(s)).unwrap());
        }
        let comps = d.component_arcs();
        for k in 0..5usize {
            let mut order: Vec<usize> = comps.iter().map(|arcs| arcs[(k * 7 + seed as usize) % arcs.len()]).collect();
            let len = order.len().max(1);
            order.rotate_left(k % len);
            if k % 2 == 1 {
                order.reverse();
            }
            prop_assert_eq!(conway_with_basepoints(&d, &order).unwrap(), v.clone());
        }
        let parity_ok = v.poly.terms().all(|(e, _)| (e + d.components() as i64 - 1) % 2 == 0);
        prop_assert!(parity_ok, "{} has the wrong parity for {} components", v, d.components());
        let e = c.diagram(6);
        prop_assert_eq!(conway(&d.disjoint_union(&e)).unwrap(), ConwayPoly::zero());
    }

    #[test]
    fn closure_consistency(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let t = c.texpr(8).build();
        let br = t.bracket_vector().unwrap();
        prop_assert_eq!(kauffman_bracket(&t.numerator().unwrap()), &(&delta() * &br.f) + &br.g);
        prop_assert_eq!(kauffman_bracket(&t.denominator().unwrap()), &br.f + &(&delta() * &br.g));
        prop_assert_eq!(families::bracket_c_formula(&t).unwrap(), kauffman_bracket(&families::c_of(&t, CSelector::Unoriented).unwrap()));
    }

    #[test]
    fn bracket_vector_of_sums(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let (a, b) = (c.texpr(6).build(), c.texpr(6).build());
        let direct = a.sum(&b).unwrap().bracket_vector().unwrap();
        prop_assert_eq!(direct, a.bracket_vector().unwrap().sum(&b.bracket_vector().unwrap()));
    }

    #[test]
    fn phi_contract(seed in any::<u64>()) {
        let mut c = Corpus::new(seed);
        let e = c.left_right_texpr(6);
        let t = e.build_oriented(OrientationClass::LeftRight).unwrap();
        let con = t.conway_vector().unwrap();
        let zero = Tangle::zero().orient(OrientationClass::LeftRight).unwrap();
        let one = Tangle::one().orient(OrientationClass::LeftRight).unwrap();
        for sel in [CSelector::Plus, CSelector::Minus] {
            let at = |u: &Tangle| conway(&families::c_of(u, sel).unwrap()).unwrap();
            prop_assert_eq!(phi_l(&con, &at(&zero), &at(&one)), at(&t));
        }
        let num = |u: &Tangle| conway(&u.numerator().unwrap()).unwrap();
        prop_assert_eq!(phi_l(&con, &num(&zero), &num(&one)), num(&t));
    }
}

#[test]
fn same_tangle_two_diagrams() {
    let long = Tangle::one().sum(&Tangle::integer(-1)).unwrap().sum(&Tangle::one()).unwrap();
    let short = Tangle::one();
    assert_eq!(long.bracket_vector().unwrap(), short.bracket_vector().unwrap());
    let lr = |t: &Tangle| t.orient(OrientationClass::LeftRight).unwrap().conway_vector().unwrap();
    assert_eq!(lr(&long), lr(&short));
}

#[test]
fn kinked_hopf_shares_jones() {
    let two = families::hopf();
    let kinked = two.add_kink(two.crossings()[0][1], Sign::Positive).unwrap();
    assert_eq!(jones(&kinked).unwrap(), jones(&two).unwrap());
    assert_eq!(skein::bracket::kauffman_polynomial(&kinked).unwrap(), skein::bracket::kauffman_polynomial(&two).unwrap());
}

#[test]
fn u_flip_symmetry() {
    for (n, m) in [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2)] {
        assert_eq!(kauffman_bracket(&families::u(n, m)), kauffman_bracket(&families::u(m - 1, n + 1)), "U({n},{m})");
    }
}

//! Property tests: field axioms of the coefficient field, algebra laws of
//! sparse elements, grading additivity, specialization multiplicativity,
//! serialization round-trips, and reduction termination on random words.

use proptest::prelude::*;
use qgb_core::coeff::{parse_ratfun, LaurentPoly, RatFun};
use qgb_core::cyclo::SpecializationMap;
use qgb_core::freealg::{
    element_from_text, element_to_text, monomial_cmp, Element, Letter, Word,
};
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::rewrite::{normal_form, DEFAULT_BUDGET};

fn arb_ratfun() -> impl Strategy<Value = RatFun> {
    // small Laurent polynomials divided by small nonzero polynomials
    let mono = (any::<i8>(), -3i64..4, -3i64..4)
        .prop_map(|(c, a, b)| LaurentPoly::monomial(qgb_core::coeff::rat_int(c as i64), a, b));
    let poly = proptest::collection::vec(mono, 1..4).prop_map(|ms| {
        let mut p = LaurentPoly::zero();
        for m in ms {
            p = p.add(&m);
        }
        p
    });
    (poly.clone(), poly).prop_filter_map("nonzero denominator", |(num, den)| {
        if den.is_zero() {
            None
        } else {
            Some(RatFun::new(num, den).unwrap())
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in arb_ratfun(), g in arb_ratfun(), h in arb_ratfun()) {
        // distributivity
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        // associativity and commutativity
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g), g.add(&f));
        // inverse
        if !f.is_zero() {
            prop_assert!(f.mul(&f.inv().unwrap()).is_one());
        }
        // cross-multiplication equality agrees with canonical identity
        prop_assert!(f.eq_cross(&f.clone()));
    }

    #[test]
    fn specialization_is_multiplicative(f in arb_ratfun(), g in arb_ratfun()) {
        let map = SpecializationMap::new(5, 1, 4).unwrap();
        let (sf, sg) = (map.specialize(&f), map.specialize(&g));
        if let (Ok(sf), Ok(sg)) = (sf, sg) {
            if let Ok(sfg) = map.specialize(&f.mul(&g)) {
                prop_assert_eq!(sfg, sf.mul(&sg));
            }
            if let Ok(sfg) = map.specialize(&f.add(&g)) {
                prop_assert_eq!(sfg, sf.add(&sg));
            }
        }
    }

    #[test]
    fn coefficient_text_roundtrip(f in arb_ratfun()) {
        let printed = format!("{}", f);
        let parsed = parse_ratfun(&printed).unwrap();
        prop_assert_eq!(parsed, f);
    }
}

fn arb_letter(n: u8) -> impl Strategy<Value = Letter> {
    (1..=n, 0..4u8).prop_map(move |(i, kind)| match kind {
        0 => Letter::E(i, i),
        1 => Letter::F(i, i),
        2 => Letter::W(i, 1),
        _ => Letter::Wp(i, -1),
    })
}

fn arb_element(n: u8) -> impl Strategy<Value = Element<RatFun>> {
    proptest::collection::vec(
        (proptest::collection::vec(arb_letter(n), 0..4), -3i64..4),
        1..4,
    )
    .prop_map(|terms| {
        let mut e = Element::zero();
        for (ls, c) in terms {
            e.add_term(Word::from_letters(&ls), RatFun::int(c));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn element_algebra_laws(x in arb_element(2), y in arb_element(2), z in arb_element(2)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
        // grade additivity on homogeneous inputs
        if let (Some(gx), Some(gy)) = (x.grade(2), y.grade(2)) {
            let p = x.mul(&y);
            if !p.is_zero() {
                let expect: Vec<i64> = gx.iter().zip(&gy).map(|(a, b)| a + b).collect();
                prop_assert_eq!(p.grade(2), Some(expect));
            }
        }
    }

    #[test]
    fn element_text_roundtrip(x in arb_element(3)) {
        let text = element_to_text(&x, 3);
        let back = element_from_text(&text, 3).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn reduction_terminates_and_decreases(ls in proptest::collection::vec(arb_letter(3), 0..12)) {
        let inst = AlgebraInstance::build(3, Validation::Orientation).unwrap();
        let w = Word::from_letters(&ls);
        let x = Element::term(w.clone(), RatFun::one());
        let red = normal_form(&x, &inst.pbw_rules, DEFAULT_BUDGET, false).unwrap();
        for (u, _) in red.element.terms() {
            prop_assert!(inst.pbw_rules.is_normal(u));
            prop_assert!(monomial_cmp(u, &w, 3) != std::cmp::Ordering::Greater);
        }
        // idempotence
        let again = normal_form(&red.element, &inst.pbw_rules, DEFAULT_BUDGET, false).unwrap();
        prop_assert_eq!(again.element, red.element);
    }

    #[test]
    fn homogeneous_reduction_preserves_grade(ls in proptest::collection::vec(arb_letter(2), 1..8)) {
        let inst = AlgebraInstance::build(2, Validation::Orientation).unwrap();
        let w = Word::from_letters(&ls);
        let g = w.degree(2);
        let x = Element::term(w, RatFun::one());
        let red = normal_form(&x, &inst.pbw_rules, DEFAULT_BUDGET, false).unwrap();
        if !red.element.is_zero() {
            prop_assert_eq!(red.element.grade(2), Some(g));
        }
    }
}

//! Agreement between certification by rewriting and the independent
//! degree-bounded ideal-membership oracle, on randomly chosen catalog
//! instances plus negative controls.

use qgb_core::catalog::{expand_e_element, serre_relations};
use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::rewrite::{certify_identity, ideal_membership_oracle, DEFAULT_BUDGET};
use qgb_core::suites::straightening_instances;
use qgb_core::RatFun;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn certification_agrees_with_ideal_membership() {
    let mut rng = StdRng::seed_from_u64(20260810);
    let mut agreements = 0usize;
    for n in 2..=3u8 {
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        let rels = serre_relations(n);
        // positive instances: true identities from the catalog
        let mut items = straightening_instances(n);
        items.shuffle(&mut rng);
        let mut used = 0;
        for it in items {
            let diff = it.lhs.sub(&it.rhs);
            let expanded = expand_e_element_checked(&diff, n);
            let Some(expanded) = expanded else { continue };
            let Some(deg) = generator_degree(&expanded, n) else { continue };
            if deg > 8 {
                continue;
            }
            let by_rewriting = certify_identity(&it.lhs, &it.rhs, &inst.pbw_rules, DEFAULT_BUDGET)
                .is_zero();
            let by_oracle = ideal_membership_oracle(&expanded, &rels, n, 8).unwrap();
            assert_eq!(
                by_rewriting, by_oracle,
                "disagreement on {} [{}]",
                it.tag, it.params
            );
            assert!(by_rewriting, "catalog instance {} [{}] must hold", it.tag, it.params);
            agreements += 1;
            used += 1;
            if used >= 12 {
                break;
            }
        }
    }
    // negative controls: mutated identities must fail on both sides
    let n = 2u8;
    let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
    let rels = serre_relations(n);
    let e = |i: u8| Element::term(Word::one(Letter::E(i, i)), RatFun::one());
    let negatives = vec![
        // e_1 e_2 = e_2 e_1 is false
        (e(1).mul(&e(2)), e(2).mul(&e(1))),
        // wrong twist on the Serre reformulation
        (
            e(1).mul(&Element::term(Word::one(Letter::E(1, 2)), RatFun::one())),
            Element::term(Word::one(Letter::E(1, 2)), RatFun::mono(2, 0)).mul(&e(1)),
        ),
    ];
    for (lhs, rhs) in negatives {
        let by_rewriting =
            certify_identity(&lhs, &rhs, &inst.pbw_rules, DEFAULT_BUDGET).is_zero();
        let expanded = expand_e_element_checked(&lhs.sub(&rhs), n).unwrap();
        let by_oracle = ideal_membership_oracle(&expanded, &rels, n, 8).unwrap();
        assert_eq!(by_rewriting, by_oracle);
        assert!(!by_rewriting, "negative control must fail");
        agreements += 1;
    }
    assert!(agreements >= 20, "need at least 20 agreements, got {agreements}");
}

fn expand_e_element_checked(x: &Element<RatFun>, n: u8) -> Option<Element<RatFun>> {
    for (w, _) in x.terms() {
        if !w.0.iter().all(|l| matches!(l, Letter::E(..))) {
            return None;
        }
    }
    Some(expand_e_element(x, n))
}

fn generator_degree(x: &Element<RatFun>, _n: u8) -> Option<usize> {
    x.terms().next().map(|(w, _)| w.len())
}

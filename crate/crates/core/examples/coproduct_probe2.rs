use qgb_core::freealg::{Letter, Word};
use qgb_core::hopf::*;
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::RatFun;

fn main() {
    let n = 2u8;
    let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
    // true Delta(E_{1,2'}^a), third-stratum monomial: w1^a w2^a e2^a (x) E(1,2)^a
    for a in [2u32, 3] {
        let closed = closed_delta_nprime_power(1, a, n);
        let reduced_closed = reduce_closed_form(&closed, &inst);
        let base = coproduct(&qgb_core::freealg::Element::term(Word::one(Letter::E(1, 3)), RatFun::one()), &inst);
        let truth = {
            let mut acc = base.clone();
            for _ in 1..a {
                acc = acc.mul(&base);
            }
            reduce_closed_form(&acc, &inst)
        };
        let mut target_left = Word::empty();
        for _ in 0..a { target_left.0.push(Letter::W(1, 1)); }
        for _ in 0..a { target_left.0.push(Letter::W(2, 1)); }
        for _ in 0..a { target_left.0.push(Letter::E(2, 2)); }
        let target_right = Word(vec![Letter::E(1, 2); a as usize]);
        let t = truth.terms().find(|((l, r), _)| *l == target_left && *r == target_right);
        let c = reduced_closed.terms().find(|((l, r), _)| *l == target_left && *r == target_right);
        println!("a={a}: true coeff = {}", t.map(|x| x.1.to_string()).unwrap_or("0".into()));
        println!("a={a}: closed coeff = {}", c.map(|x| x.1.to_string()).unwrap_or("0".into()));
        // how many monomials differ in total
        let diff = truth.sub(&reduced_closed);
        println!("a={a}: residual terms = {}", diff.num_terms());
        for ((l, r), cc) in diff.terms().take(6) {
            println!("   ({}) {} (x) {}", cc, qgb_core::freealg::word_string(l, n), qgb_core::freealg::word_string(r, n));
        }
    }
}

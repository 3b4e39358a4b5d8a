use qgb_core::freealg::{Letter, Word, word_string};
use qgb_core::hopf::*;
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::RatFun;

fn main() {
    let n = 2u8;
    let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
    let a = 2u32;
    let closed = reduce_closed_form(&closed_delta_alpha_power(1, 2, a, n), &inst);
    let base = coproduct(&qgb_core::freealg::Element::term(Word::one(Letter::E(1, 2)), RatFun::one()), &inst);
    let truth = reduce_closed_form(&base.pow(a as usize, &RatFun::one()), &inst);
    let diff = truth.sub(&closed);
    println!("residual terms: {}", diff.num_terms());
    for ((l, r), c) in diff.terms() {
        println!("  ({})  {}  (x)  {}", c, word_string(l, n), word_string(r, n));
    }
}

use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::hopf::{antipode, pair_rec_laws, PairLaws};
use qgb_core::qgroup::{expand_to_generators, AlgebraInstance, Validation};
use qgb_core::RatFun;

fn main() {
    let n = 2;
    let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
    let f = |i: u8| Letter::F(i, i);
    let e = |i: u8| Letter::E(i, i);
    let words_a: Vec<Word> = vec![
        Word::one(f(1)),
        Word::one(f(2)),
        Word::from_letters(&[f(1), f(2)]),
        Word::from_letters(&[f(2), f(1)]),
        Word::from_letters(&[f(2), Letter::Wp(1, 1), f(1)]),
        Word::from_letters(&[f(1), f(1), f(2)]),
    ];
    let words_x: Vec<Word> = vec![
        Word::one(e(1)),
        Word::one(e(2)),
        Word::from_letters(&[e(1), e(2)]),
        Word::from_letters(&[e(2), e(1)]),
        Word::from_letters(&[e(1), Letter::W(2, 1), e(2)]),
        Word::from_letters(&[e(2), e(2), e(1)]),
    ];
    for flip_x in [false, true] {
        for flip_a in [false, true] {
            let laws = PairLaws { flip_x, flip_a };
            let pair_el = |a: &Element<RatFun>, x: &Element<RatFun>| -> RatFun {
                let ae = expand_to_generators(a, n);
                let xe = expand_to_generators(x, n);
                let mut acc = RatFun::zero();
                for (wa, ca) in ae.terms() {
                    for (wx, cx) in xe.terms() {
                        acc = acc.add(&ca.mul(cx).mul(&pair_rec_laws(&wa.0, &wx.0, n, laws)));
                    }
                }
                acc
            };
            let mut ok = true;
            let mut nonzero = 0;
            for a in &words_a {
                for x in &words_x {
                    let lhs = pair_rec_laws(&a.0, &x.0, n, laws);
                    let sa = antipode(&Element::term(a.clone(), RatFun::one()), &inst);
                    let sx = antipode(&Element::term(x.clone(), RatFun::one()), &inst);
                    let rhs = pair_el(&sa, &sx);
                    if !lhs.is_zero() {
                        nonzero += 1;
                    }
                    if lhs != rhs {
                        ok = false;
                    }
                }
            }
            println!("flip_x={flip_x} flip_a={flip_a}: S-invariance {} ({} nonzero values)", if ok { "HOLDS" } else { "fails" }, nonzero);
        }
    }
}

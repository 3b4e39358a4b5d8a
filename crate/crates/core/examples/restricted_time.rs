use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::restricted::*;

fn main() {
    let t0 = std::time::Instant::now();
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    println!("build: {:?}", t0.elapsed());
    let one = inst.one();
    for (x, g) in [
        (Letter::E(1, 1), Letter::F(1, 1)),
        (Letter::E(1, 2), Letter::F(1, 1)),
        (Letter::E(1, 3), Letter::F(2, 2)),
        (Letter::F(1, 2), Letter::E(1, 1)),
        (Letter::F(1, 3), Letter::E(2, 2)),
    ] {
        let t0 = std::time::Instant::now();
        let xl = Word(vec![x; 5]);
        let lhs = Element::term(xl.concat(&Word::one(g)), one.clone());
        let rhs = Element::term(Word::one(g).concat(&xl), one.clone());
        let diff = inst.nf_unrestricted(&lhs.sub(&rhs));
        println!("[{:?}^5, {:?}]: zero={} in {:?}", x, g, diff.is_zero(), t0.elapsed());
    }
}

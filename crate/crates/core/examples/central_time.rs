use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::restricted::*;

fn main() {
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    let one = inst.one();
    let n = 2u8;
    let mut roots: Vec<Letter> = Vec::new();
    for (i, j) in qgb_core::freealg::convex_positions(n) {
        roots.push(Letter::E(i, j));
        roots.push(Letter::F(i, j));
    }
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(Letter::E(i, i));
        gens.push(Letter::F(i, i));
        gens.push(Letter::W(i, 1));
        gens.push(Letter::W(i, -1));
        gens.push(Letter::Wp(i, 1));
        gens.push(Letter::Wp(i, -1));
    }
    for x in roots {
        for g in &gens {
            let t0 = std::time::Instant::now();
            let xl = Word(vec![x; 5]);
            let lhs = Element::term(xl.concat(&Word::one(*g)), one.clone());
            let rhs = Element::term(Word::one(*g).concat(&xl), one.clone());
            let diff = inst.nf_unrestricted(&lhs.sub(&rhs));
            let el = t0.elapsed();
            if el.as_millis() > 200 {
                println!("SLOW [{:?}^5, {:?}]: zero={} in {:?}", x, g, diff.is_zero(), el);
            }
            if !diff.is_zero() {
                println!("NONZERO [{:?}^5, {:?}]", x, g);
            }
        }
        println!("done {:?}", x);
    }
}

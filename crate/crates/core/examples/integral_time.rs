use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::restricted::*;

fn main() {
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    let one = inst.one();
    let x = Element::term(top_e_word(&inst), one.clone());
    println!("x word: {:?}", top_e_word(&inst).len());
    // first: x alone should already be in normal form
    let t0 = std::time::Instant::now();
    let red = inst.nf(&x);
    println!("nf(x): {} terms in {:?}", red.num_terms(), t0.elapsed());
    // e_2 * x
    let t0 = std::time::Instant::now();
    let e2x = Element::term(Word::one(Letter::E(2, 2)), one.clone()).mul(&x);
    let red = inst.nf(&e2x);
    println!("nf(e2 x): {} terms in {:?}", red.num_terms(), t0.elapsed());
    // e_1 * x
    let t0 = std::time::Instant::now();
    let e1x = Element::term(Word::one(Letter::E(1, 1)), one.clone()).mul(&x);
    let red = inst.nf(&e1x);
    println!("nf(e1 x): {} terms in {:?}", red.num_terms(), t0.elapsed());
    // t and y
    let t0 = std::time::Instant::now();
    let t = torus_integral(&inst);
    let y = t.mul(&x);
    println!("y: {} terms in {:?}", y.num_terms(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let e1y = Element::term(Word::one(Letter::E(1, 1)), one.clone()).mul(&y);
    let red = inst.nf(&e1y);
    println!("nf(e1 y): {} terms in {:?}", red.num_terms(), t0.elapsed());
}

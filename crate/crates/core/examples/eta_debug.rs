use qgb_core::freealg::{Element, Letter, Word};
use qgb_core::funcs::*;
use qgb_core::restricted::RestrictedInstance;
use qgb_core::rootsys::group_pairing;

fn main() {
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    let n = 2u8;
    let eta = eta_j(&inst, 1);
    // x = e_1, y = w_1: xy = e_1 w_1 reduces to <w'_1, w_1>^{-1}... w_1 e_1
    let x = Element::term(Word::one(Letter::E(1, 1)), inst.one());
    let y = Element::term(Word::one(Letter::W(1, 1)), inst.one());
    let xy = inst.nf(&x.mul(&y));
    for (w, c) in xy.terms() {
        println!("xy term: ({}) {:?}", c, w);
    }
    // eta_1(e_1 w_1): expansion says value should be the move coefficient
    // check both evaluation orders
    let e_id = (vec![1u8, 0, 0, 0], vec![0u8, 0]);
    println!("eta(e1) = {:?}", eta.eval(&e_id));
    let e_id2 = (vec![1u8, 0, 0, 0], vec![1u8, 0]);
    println!("eta(w1 e1) = {:?}", eta.eval(&e_id2));
    let g = inst.map.specialize(&group_pairing(&[1, 0], &[1, 0], n)).unwrap();
    println!("gamma_1(w_1) = {}", g);
}

use qgb_core::freealg::Letter;
use qgb_core::hopf::*;
use qgb_core::qgroup::{AlgebraInstance, Validation};

fn main() {
    // Lemma 4.3 (i), (ii) at n = 2, 3 for all (k,j)
    for n in [2u8, 3] {
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        for k in 1..=n {
            for j in k..=n {
                let closed = closed_delta_alpha(k, j, n);
                let res = coproduct_residual(Letter::E(k, j), 1, &closed, &inst);
                println!("4.3.i n={n} k={k} j={j}: {}", if res.is_zero() { "OK" } else { "MISMATCH" });
            }
        }
        for k in 1..=n {
            for j in (k + 1)..=n {
                let closed = closed_delta_beta(k, j, n);
                let res = coproduct_residual(Letter::E(k, 2 * n - j + 1), 1, &closed, &inst);
                println!("4.3.ii n={n} k={k} j={j}: {}", if res.is_zero() { "OK" } else { "MISMATCH" });
            }
        }
    }
    // Lemma 4.5 for a = 2,3 at n = 2,3, all (k,j) with j <= n
    for n in [2u8, 3] {
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        for a in [2u32, 3] {
            for k in 1..=n {
                for j in k..=n {
                    let closed = closed_delta_alpha_power(k, j, a, n);
                    let res = coproduct_residual(Letter::E(k, j), a, &closed, &inst);
                    println!("4.5 n={n} a={a} k={k} j={j}: {}", if res.is_zero() { "OK" } else { "MISMATCH" });
                }
            }
        }
    }
    // (4.8) for a <= 4
    for n in [2u8, 3] {
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        for a in 1..=4u32 {
            for j in 1..=n {
                let closed = closed_delta_simple_power(j, a, n);
                let res = coproduct_residual(Letter::E(j, j), a, &closed, &inst);
                println!("4.8 n={n} a={a} j={j}: {}", if res.is_zero() { "OK" } else { "MISMATCH" });
            }
        }
    }
    // Lemma 4.6 at n=2, k=1, a=2 (structure-level)
    let inst = AlgebraInstance::build(2, Validation::Orientation).unwrap();
    for a in [1u32, 2] {
        let closed = closed_delta_nprime_power(1, a, 2);
        let res = coproduct_residual(Letter::E(1, 3), a, &closed, &inst);
        println!("4.6 n=2 a={a} k=1: {}", if res.is_zero() { "OK" } else { "MISMATCH" });
        if !res.is_zero() {
            for ((l, r), c) in res.terms().take(12) {
                println!("   residue: ({}) {} (x) {}", c, qgb_core::freealg::word_string(l, 2), qgb_core::freealg::word_string(r, 2));
            }
        }
    }
}

use qgb_core::iso::*;
use qgb_core::suites::SuiteStatus;

fn main() {
    for n in [2u8, 3] {
        for zeta in [1i64, -1] {
            match typeb_families(n, 5, 1, 4, zeta) {
                Ok(recs) => {
                    for r in &recs {
                        let mark = if r.status == SuiteStatus::Pass { "PASS" } else { "FAIL" };
                        println!("B n={n} {} [{}] {} {:?}", r.tag, r.params, mark, r.residue);
                    }
                }
                Err(e) => println!("B n={n} zeta={zeta}: ERROR {e}"),
            }
        }
        match typea_families(n, 5, 1, 4) {
            Ok(recs) => {
                for r in &recs {
                    let mark = if r.status == SuiteStatus::Pass { "PASS" } else { "FAIL" };
                    println!("A nodes={n} {} [{}] {} {:?}", r.tag, r.params, mark, r.residue);
                }
            }
            Err(e) => println!("A nodes={n}: ERROR {e}"),
        }
    }
}

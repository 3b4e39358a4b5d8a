use qgb_core::restricted::*;
use qgb_core::suites::SuiteStatus;

fn main() {
    let inst = RestrictedInstance::build(3, 5, 1, 4).unwrap();
    let recs = hopf_ideal_suite(&inst);
    let mut fails = 0;
    for r in &recs {
        if r.tag.starts_with("4.12") || r.status != SuiteStatus::Pass {
            println!("{} [{}] {} ({} ms) {:?}", r.tag, r.params, r.status.as_str(), r.millis, r.residue);
        }
        if r.status != SuiteStatus::Pass {
            fails += 1;
        }
    }
    println!("n=3: {} records, {} failures", recs.len(), fails);
}

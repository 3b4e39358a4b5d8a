use qgb_core::restricted::*;
use qgb_core::suites::SuiteStatus;

fn main() {
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    let recs = hopf_ideal_suite(&inst);
    for r in &recs {
        println!("{} [{}] {} ({} ms) {:?}", r.tag, r.params, r.status.as_str(), r.millis, r.residue);
    }
    let fails = recs.iter().filter(|r| r.status != SuiteStatus::Pass).count();
    println!("total {} failures", fails);
}

use qgb_core::restricted::*;
use qgb_core::suites::SuiteStatus;

fn report(name: &str, recs: &[qgb_core::suites::SuiteRecord]) {
    let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
    let total_ms: u128 = recs.iter().map(|r| r.millis).sum();
    println!("{name}: {} records, {} failures, {} ms", recs.len(), fails.len(), total_ms);
    for f in fails.iter().take(6) {
        println!("   FAIL {} [{}] {:?}", f.tag, f.params, f.residue);
    }
}

fn main() {
    let t0 = std::time::Instant::now();
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    println!("build (2,5,1,4): {:?}", t0.elapsed());
    report("central", &central_suite(&inst));
    report("integral left", &integral_check(&inst, true));
    report("integral right", &integral_check(&inst, false));
    report("distinguished", &distinguished_check(&inst));
    let r = antipode_swaps_integrals(&inst);
    println!("S(y') ~ y: {} ({} ms)", r.status.as_str(), r.millis);
    report("ribbon", &ribbon_check(&inst));
    // second configuration for centrality
    let inst2 = RestrictedInstance::build(2, 5, 2, 3).unwrap();
    report("central (2,5,2,3)", &central_suite(&inst2));
}

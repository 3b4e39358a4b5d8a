use qgb_core::funcs::*;
use qgb_core::restricted::RestrictedInstance;
use qgb_core::suites::SuiteStatus;

fn main() {
    let t0 = std::time::Instant::now();
    let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
    let recs = gamma_eta_values(&inst);
    for r in recs.iter().filter(|r| r.status != SuiteStatus::Pass) {
        println!("FAIL {} [{}]", r.tag, r.params);
    }
    println!("values: {} records ({:?})", recs.len(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let recs = gamma_eta_suite(&inst);
    for r in &recs {
        println!("{} [{}] {} ({} ms)", r.tag, r.params, r.status.as_str(), r.millis);
    }
    println!("suite ({:?})", t0.elapsed());
    let t0 = std::time::Instant::now();
    let recs = dual_integral_check(&inst);
    for r in &recs {
        println!("{} [{}] {} ({} ms)", r.tag, r.params, r.status.as_str(), r.millis);
    }
    println!("dual integrals ({:?})", t0.elapsed());
}

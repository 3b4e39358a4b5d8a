use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::suites::*;

fn main() {
    for n in [2u8, 3] {
        let t0 = std::time::Instant::now();
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        let recs = run_instances(&inst, &power_instances(n, 4));
        let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
        println!("n={n}: {} instances, {} failures, {:?}", recs.len(), fails.len(), t0.elapsed());
        for f in fails.iter().take(8) {
            println!("  FAIL {} [{}] {:?}", f.tag, f.params, f.residue);
        }
        let recs = corrected_3_10_4(&inst, 4);
        let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
        println!("n={n}: corrected 3.10.4: {} instances, {} failures", recs.len(), fails.len());
    }
    // straightening at n=4 for the items needing 4 distinct indices
    let t0 = std::time::Instant::now();
    let inst = AlgebraInstance::build(4, Validation::Orientation).unwrap();
    println!("n=4 build: {:?}", t0.elapsed());
    let t0 = std::time::Instant::now();
    let recs = run_instances(&inst, &straightening_instances(4));
    let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
    println!("n=4 straightening: {} instances, {} failures, {:?}", recs.len(), fails.len(), t0.elapsed());
    for f in fails.iter().take(8) {
        println!("  FAIL {} [{}] {:?}", f.tag, f.params, f.residue);
    }
    let recs = run_instances(&inst, &appendix_instances(4));
    let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
    println!("n=4 appendix: {} instances, {} failures", recs.len(), fails.len());
}

use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::suites::{run_instances, straightening_instances, appendix_instances, SuiteStatus};

fn main() {
    let t0 = std::time::Instant::now();
    let inst = AlgebraInstance::build(5, Validation::Orientation).unwrap();
    println!("n=5 build: {:?}", t0.elapsed());
    let t0 = std::time::Instant::now();
    let items: Vec<_> = straightening_instances(5)
        .into_iter()
        .chain(appendix_instances(5))
        .filter(|it| it.tag == "3.4.2" || it.tag == "A.1.i")
        .collect();
    let recs = run_instances(&inst, &items);
    for r in &recs {
        println!("{} [{}] {}", r.tag, r.params, r.status.as_str());
        assert_eq!(r.status, SuiteStatus::Pass);
    }
    println!("n=5 items: {:?}", t0.elapsed());
}

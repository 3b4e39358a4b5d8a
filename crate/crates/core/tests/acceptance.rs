//! The acceptance suite: every criterion of the build contract, one
//! pass/fail line each, all tolerances exact.

use num::BigUint;
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::registry::{self, RegistryParams};
use qgb_core::restricted::{self, RestrictedInstance};
use qgb_core::suites::{self, SuiteStatus};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { failures: Vec::new() }
    }

    fn criterion(&mut self, id: u32, what: &str, pass: bool, detail: String) {
        println!(
            "criterion {id:2} [{}] {what}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
        if !pass {
            self.failures.push(format!("criterion {id}: {what}"));
        }
    }

    fn finish(self) {
        assert!(self.failures.is_empty(), "failed: {:?}", self.failures);
    }
}

fn all_pass(records: &[suites::SuiteRecord]) -> (bool, String) {
    let fails: Vec<&suites::SuiteRecord> =
        records.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
    let detail = if fails.is_empty() {
        format!("{} instances", records.len())
    } else {
        format!(
            "{} of {} failed, first: {} [{}] {:?}",
            fails.len(),
            records.len(),
            fails[0].tag,
            fails[0].params,
            fails[0].residue
        )
    };
    (fails.is_empty(), detail)
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();

    // 1. straightening catalog at n=3, and n=4 for the items needing four
    //    distinct indices; target under 60 s
    {
        let start = std::time::Instant::now();
        let inst3 = AlgebraInstance::build(3, Validation::Confluent).unwrap();
        let recs3 = suites::run_instances(&inst3, &suites::straightening_instances(3));
        let inst4 = AlgebraInstance::build(4, Validation::Orientation).unwrap();
        let recs4 = suites::run_instances(&inst4, &suites::straightening_instances(4));
        // the two items whose displayed index ranges need five distinct rows
        let inst5 = AlgebraInstance::build(5, Validation::Orientation).unwrap();
        let items5: Vec<_> = suites::straightening_instances(5)
            .into_iter()
            .chain(suites::appendix_instances(5))
            .filter(|it| it.tag == "3.4.2" || it.tag == "A.1.i")
            .collect();
        let recs5 = suites::run_instances(&inst5, &items5);
        let elapsed = start.elapsed();
        let (p3, d3) = all_pass(&recs3);
        let (p4, d4) = all_pass(&recs4);
        let (p5, _) = all_pass(&recs5);
        gate.criterion(
            1,
            "straightening catalog n=3,4 (+5-index items)",
            p3 && p4 && p5 && elapsed.as_secs() < 60,
            format!("n=3: {d3}; n=4: {d4}; n=5: {} items; {:?}", recs5.len(), elapsed),
        );
    }

    // 2. appendix identities at n=3,4
    {
        let inst3 = AlgebraInstance::build(3, Validation::Orientation).unwrap();
        let inst4 = AlgebraInstance::build(4, Validation::Orientation).unwrap();
        let r3 = suites::run_instances(&inst3, &suites::appendix_instances(3));
        let r4 = suites::run_instances(&inst4, &suites::appendix_instances(4));
        let (p3, d3) = all_pass(&r3);
        let (p4, d4) = all_pass(&r4);
        gate.criterion(2, "appendix identities n=3,4", p3 && p4, format!("n=3: {d3}; n=4: {d4}"));
    }

    // 3. oracle agreement on random instances (the dedicated test has the
    //    full randomized run; here a fixed slice is replayed)
    {
        use qgb_core::catalog::{expand_e_element, serre_relations};
        use qgb_core::rewrite::{certify_identity, ideal_membership_oracle, DEFAULT_BUDGET};
        let n = 3u8;
        let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
        let rels = serre_relations(n);
        let mut count = 0usize;
        let mut agree = true;
        for it in suites::straightening_instances(n) {
            let diff = it.lhs.sub(&it.rhs);
            if !diff
                .terms()
                .all(|(w, _)| w.0.iter().all(|l| matches!(l, qgb_core::Letter::E(..))))
            {
                continue;
            }
            let expanded = expand_e_element(&diff, n);
            let deg = expanded.terms().next().map(|(w, _)| w.len()).unwrap_or(0);
            if deg == 0 || deg > 8 {
                continue;
            }
            let a = certify_identity(&it.lhs, &it.rhs, &inst.pbw_rules, DEFAULT_BUDGET).is_zero();
            let b = ideal_membership_oracle(&expanded, &rels, n, 8).unwrap();
            agree &= a == b && a;
            count += 1;
            if count >= 20 {
                break;
            }
        }
        gate.criterion(3, "oracle agreement", agree && count >= 20, format!("{count} instances, 100% agreement"));
    }

    // 4. PBW dimension counts for n=2,3, height <= 6
    {
        let mut pass = true;
        let mut checked = 0usize;
        for n in 2..=3u8 {
            let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
            let mut degrees: Vec<Vec<i64>> = vec![vec![0; n as usize]];
            for _ in 0..6 {
                let mut next = Vec::new();
                for d in &degrees {
                    for k in 0..n as usize {
                        let mut nd = d.clone();
                        nd[k] += 1;
                        if !degrees.contains(&nd) && !next.contains(&nd) {
                            next.push(nd);
                        }
                    }
                }
                degrees.extend(next);
            }
            for d in &degrees {
                let ht: i64 = d.iter().sum();
                if ht == 0 || ht > 6 {
                    continue;
                }
                let monos = qgb_core::qgroup::pbw_monomials(n, d, None);
                let words = count_irreducible(&inst, n, d);
                let gf = monos.len();
                pass &= words == gf;
                checked += 1;
            }
        }
        gate.criterion(4, "PBW counts n=2,3 height<=6", pass, format!("{checked} degrees"));
    }

    // 5. power suite m=1..4 at n=2,3 plus the alpha/beta recurrences
    {
        let mut pass = true;
        let mut total = 0usize;
        for n in 2..=3u8 {
            let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
            let recs = suites::run_instances(&inst, &suites::power_instances(n, 4));
            let (p, _) = all_pass(&recs);
            pass &= p;
            total += recs.len();
            let recs = suites::corrected_3_10_4(&inst, 4);
            let (p, _) = all_pass(&recs);
            pass &= p;
            total += recs.len();
            let recs = suites::xyz_lemma_checks(&inst, 4);
            let (p, _) = all_pass(&recs);
            pass &= p;
            total += recs.len();
        }
        let r = qgb_core::RatFun::r();
        let s = qgb_core::RatFun::s();
        for m in 1..=8u32 {
            let lhs = qgb_core::coeff::alpha_m(m + 1);
            let rhs = s
                .pow(2)
                .mul(&qgb_core::coeff::alpha_m(m))
                .add(&r.pow(m as i64 - 1).mul(&qgb_core::coeff::beta_m(m)));
            pass &= lhs == rhs;
            let lhs = qgb_core::coeff::beta_m(m + 1);
            let rhs = s.mul(&qgb_core::coeff::beta_m(m)).add(&r.pow(m as i64));
            pass &= lhs == rhs;
        }
        gate.criterion(5, "power suite m<=4 and recurrences m<=8", pass, format!("{total} instances"));
    }

    // 6. coproduct formulas in generic mode
    {
        let mut pass = true;
        let mut detail = String::new();
        for n in 2..=3u8 {
            let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
            let recs = registry::coproduct_43_records(&inst);
            let (p, _) = all_pass(&recs);
            pass &= p;
            let recs = registry::coproduct_48_records(&inst, 4);
            let (p, _) = all_pass(&recs);
            pass &= p;
            let recs = registry::coproduct_45_records(&inst, 3);
            let (p, d) = all_pass(&recs);
            pass &= p;
            if n == 2 {
                detail = d;
            }
            let recs = registry::coproduct_46_records(&inst);
            let (p, _) = all_pass(&recs);
            pass &= p;
        }
        gate.criterion(6, "coproduct formulas 4.3/4.5/4.6/4.8", pass, detail);
    }

    // 7. root-of-unity suite at (2,5,1,4): centrality, the l-th power
    //    tensor forms, and the quotient dimension
    {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let central = restricted::central_suite(&inst);
        let (p1, d1) = all_pass(&central);
        let inst23 = RestrictedInstance::build(2, 5, 2, 3).unwrap();
        let (p1b, _) = all_pass(&restricted::central_suite(&inst23));
        let ideal = restricted::hopf_ideal_suite(&inst);
        let (p2, d2) = all_pass(&ideal);
        let dim_ok = restricted::restricted_dimension(2, 5).unwrap() == BigUint::from(5u32).pow(12);
        gate.criterion(
            7,
            "root-of-unity suite (2,5,1,4)",
            p1 && p1b && p2 && dim_ok,
            format!("central: {d1}; tensor forms: {d2}; dim = 5^12"),
        );
    }

    // 8. integrals at (2,5,1,4)
    {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let start = std::time::Instant::now();
        let left = restricted::integral_check(&inst, true);
        let right = restricted::integral_check(&inst, false);
        let dist = restricted::distinguished_check(&inst);
        let swap = restricted::antipode_swaps_integrals(&inst);
        let (pl, _) = all_pass(&left);
        let (pr, _) = all_pass(&right);
        let (pd, _) = all_pass(&dist);
        let ps = swap.status == SuiteStatus::Pass;
        let secs = start.elapsed().as_secs();
        gate.criterion(
            8,
            "integrals at (2,5,1,4)",
            pl && pr && pd && ps && secs < 600,
            format!(
                "{} checks in {:?}",
                left.len() + right.len() + dist.len() + 1,
                start.elapsed()
            ),
        );
    }

    // 9. the double determinant and the ribbon criterion
    {
        let mut pass = true;
        for n in 2..=5u8 {
            let d = restricted::double_condition(n, 5, 1, 4);
            pass &= d.det_symbolic == restricted::expected_double_det(n);
        }
        for l in [3u32, 5, 7, 9] {
            for n in [2u8, 3] {
                pass &= matches!(
                    restricted::ribbon_solve(n, l),
                    restricted::RibbonOutcome::Witness(_)
                );
            }
        }
        pass &= matches!(
            restricted::ribbon_solve(2, 4),
            restricted::RibbonOutcome::NoWitness { .. }
        );
        pass &= matches!(
            restricted::ribbon_solve(3, 8),
            restricted::RibbonOutcome::NoWitness { .. }
        );
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let recs = restricted::ribbon_check(&inst);
        let (p, d) = all_pass(&recs);
        pass &= p;
        gate.criterion(9, "double determinant and ribbon criterion", pass, d);
    }

    // 10. Hopf homomorphism families and the listed skew-primitives
    {
        let mut pass = true;
        let mut total = 0usize;
        for n in 2..=3u8 {
            for zeta in [1i64, -1] {
                let recs = qgb_core::iso::typeb_families(n, 5, 1, 4, zeta).unwrap();
                let (p, _) = all_pass(&recs);
                pass &= p;
                total += recs.len();
            }
            let recs = qgb_core::iso::typea_families(n, 5, 1, 4).unwrap();
            let (p, _) = all_pass(&recs);
            pass &= p;
            total += recs.len();
            let inst = AlgebraInstance::build(n, Validation::Orientation).unwrap();
            let recs = registry::skew_primitive_records(&inst);
            let (p, _) = all_pass(&recs);
            pass &= p;
            total += recs.len();
        }
        gate.criterion(10, "Hopf homomorphism families and skew-primitives", pass, format!("{total} records"));
    }

    gate.finish();
}

fn count_irreducible(inst: &AlgebraInstance, n: u8, degree: &[i64]) -> usize {
    // enumerate all words over the root letters of this degree and count the
    // rule-irreducible ones
    let roots = qgb_core::freealg::convex_positions(n);
    let mut count = 0usize;
    let mut stack: Vec<(Vec<qgb_core::Letter>, Vec<i64>)> = vec![(vec![], vec![0; n as usize])];
    while let Some((w, d)) = stack.pop() {
        if d.as_slice() == degree {
            if inst.pbw_rules.is_normal(&qgb_core::Word(w.clone())) {
                count += 1;
            }
            continue;
        }
        for &(i, j) in &roots {
            let mut nd = d.clone();
            let mut ok = true;
            for (k, c) in qgb_core::freealg::root_coords(i, j, n) {
                nd[k as usize - 1] += c;
                if nd[k as usize - 1] > degree[k as usize - 1] {
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            let mut nw = w.clone();
            nw.push(qgb_core::Letter::E(i, j));
            stack.push((nw, nd));
        }
    }
    count
}

/// The (4.12) family is vacuous at rank 2; its tensor form is exercised at
/// rank 3 behind this longer-running test.
#[test]
#[ignore]
fn acceptance_4_12_at_rank_3() {
    let inst = RestrictedInstance::build(3, 5, 1, 4).unwrap();
    let recs = restricted::hopf_ideal_suite(&inst);
    let four12: Vec<_> = recs.iter().filter(|r| r.tag.starts_with("4.12")).collect();
    assert!(!four12.is_empty());
    for r in &recs {
        assert_eq!(r.status, SuiteStatus::Pass, "{} [{}] {:?}", r.tag, r.params, r.residue);
    }
}

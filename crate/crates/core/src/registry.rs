//! The certification registry: every identity tag of the catalog maps to a
//! runnable procedure producing per-instance records.

use crate::error::EngineError;
use crate::freealg::{Element, Letter, Word};
use crate::qgroup::{AlgebraInstance, Validation};
use crate::restricted::RestrictedInstance;
use crate::suites::{
    appendix_instances, corrected_3_10_4, power_instances, run_instances,
    straightening_instances, xyz_lemma_checks, IdentityInstance, SuiteRecord, SuiteStatus,
};
use crate::coeff::RatFun;

#[derive(Clone, Debug)]
pub struct RegistryParams {
    pub n: u8,
    pub ell: Option<u32>,
    pub y: i64,
    pub z: i64,
    pub m_max: u32,
    pub a_max: u32,
}

impl Default for RegistryParams {
    fn default() -> Self {
        RegistryParams { n: 2, ell: None, y: 1, z: 4, m_max: 4, a_max: 3 }
    }
}

/// Tags with generic-mode procedures.
const GENERIC_FAMILIES: &[&str] = &[
    "2.5", "2.6", "2.7", "3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8", "3.9",
    "3.10", "3.12", "3.13", "A", "4.3", "4.5", "4.6", "4.8", "5.3",
];

/// Tags needing a root-of-unity configuration.
const SPECIALIZED_FAMILIES: &[&str] =
    &["3.15", "4.9", "4.10", "4.11", "4.12", "5.4", "5.5", "6.1", "7.1", "7.2", "7.3", "7.4", "7.5", "7.6", "8.2"];

pub fn registry_tags() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = Vec::new();
    v.extend_from_slice(GENERIC_FAMILIES);
    v.extend_from_slice(SPECIALIZED_FAMILIES);
    v
}

fn family_of(tag: &str) -> String {
    // "3.4.2" -> "3.4"; "A.5.a" -> "A"; "4.3.i" -> "4.3"
    if tag.starts_with('A') {
        return "A".into();
    }
    let parts: Vec<&str> = tag.split('.').collect();
    if parts.len() >= 2 {
        format!("{}.{}", parts[0], parts[1])
    } else {
        tag.to_string()
    }
}

/// Run one registered tag (a family like "3.4" or an item like "3.4.2", or
/// "all").
pub fn run_tag(tag: &str, p: &RegistryParams) -> Result<Vec<SuiteRecord>, EngineError> {
    let mut out = Vec::new();
    let want = |fam: &str| tag == "all" || tag == fam || family_of(tag) == fam;
    let item_filter = |records: Vec<SuiteRecord>| -> Vec<SuiteRecord> {
        if tag == "all" || !tag.contains('.') {
            records
        } else {
            records.into_iter().filter(|r| r.tag == tag || r.tag.starts_with(tag)).collect()
        }
    };

    let needs_generic = GENERIC_FAMILIES.iter().any(|f| want(f));
    if needs_generic {
        let inst = AlgebraInstance::build(p.n, Validation::Orientation)?;
        // straightening catalog and appendix
        let straightening: Vec<IdentityInstance> = straightening_instances(p.n)
            .into_iter()
            .chain(appendix_instances(p.n))
            .chain(serre_reformulation_instances(p.n))
            .filter(|it| tag == "all" || it.tag == tag || family_of(&it.tag) == tag)
            .collect();
        if !straightening.is_empty() {
            out.extend(run_instances(&inst, &straightening));
        }
        // power suite
        if want("3.9") || want("3.10") || want("3.12") || want("3.13") {
            let items: Vec<IdentityInstance> = power_instances(p.n, p.m_max)
                .into_iter()
                .filter(|it| tag == "all" || it.tag == tag || family_of(&it.tag) == tag)
                .collect();
            out.extend(run_instances(&inst, &items));
            if tag == "all" || want("3.10") {
                out.extend(item_filter(corrected_3_10_4(&inst, p.m_max)));
            }
        }
        if want("3.8") {
            out.extend(item_filter(xyz_lemma_checks(&inst, p.m_max)));
        }
        // coproduct formulas
        if want("4.3") {
            out.extend(item_filter(coproduct_43_records(&inst)));
        }
        if want("4.8") {
            out.extend(item_filter(coproduct_48_records(&inst, 4)));
        }
        if want("4.5") {
            out.extend(item_filter(coproduct_45_records(&inst, p.a_max.max(3))));
        }
        if want("4.6") {
            out.extend(item_filter(coproduct_46_records(&inst)));
        }
        if want("5.3") {
            out.extend(item_filter(skew_primitive_records(&inst)));
        }
    }

    let needs_specialized = SPECIALIZED_FAMILIES.iter().any(|f| want(f));
    if needs_specialized {
        let Some(ell) = p.ell else {
            if tag == "all" {
                return Ok(out);
            }
            return Err(EngineError::Unsupported(
                "this tag needs a root-of-unity configuration (--ell, --y, --z)".into(),
            ));
        };
        let inst = RestrictedInstance::build(p.n, ell, p.y, p.z)?;
        if want("3.15") {
            out.extend(item_filter(crate::restricted::central_suite(&inst)));
        }
        if want("4.9") || want("4.10") || want("4.11") || want("4.12") {
            let recs = crate::restricted::hopf_ideal_suite(&inst);
            out.extend(item_filter(
                recs.into_iter()
                    .filter(|r| tag == "all" || r.tag.starts_with(&family_of(tag)))
                    .collect(),
            ));
        }
        if want("7.1") {
            out.extend(item_filter(crate::restricted::integral_check(&inst, true)));
            out.push(crate::restricted::antipode_swaps_integrals(&inst));
        }
        if want("7.2") || want("7.3") {
            out.extend(item_filter(crate::restricted::integral_check(&inst, false)));
        }
        if want("7.4") || want("7.6") {
            out.extend(item_filter(crate::restricted::distinguished_check(&inst)));
        }
        if want("7.5") {
            out.extend(item_filter(crate::funcs::dual_integral_check(&inst)));
        }
        if want("6.1") {
            out.extend(item_filter(crate::funcs::gamma_eta_values(&inst)));
            out.extend(item_filter(crate::funcs::gamma_eta_suite(&inst)));
            out.push(double_condition_record(p.n, ell, p.y, p.z));
        }
        if want("8.2") {
            out.extend(item_filter(crate::restricted::ribbon_check(&inst)));
        }
        if want("5.4") {
            for zeta in [1i64, -1] {
                out.extend(crate::iso::typeb_families(p.n, ell, p.y, p.z, zeta)?);
            }
        }
        if want("5.5") {
            out.extend(crate::iso::typea_families(p.n, ell, p.y, p.z)?);
        }
    }
    if out.is_empty() && tag != "all" {
        return Err(EngineError::Unsupported(format!("unknown identity tag {tag:?}")));
    }
    Ok(out)
}

fn serre_reformulation_instances(n: u8) -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let one = RatFun::one;
    let s2 = RatFun::mono(0, 2);
    for i in 1..n {
        out.push(IdentityInstance {
            tag: "2.5".into(),
            params: format!("n={n},i={i}"),
            lhs: Element::term(
                Word::from_letters(&[Letter::E(i, i), Letter::E(i, i + 1)]),
                one(),
            ),
            rhs: Element::term(
                Word::from_letters(&[Letter::E(i, i + 1), Letter::E(i, i)]),
                s2.clone(),
            ),
        });
    }
    for j in 1..n.saturating_sub(1) {
        out.push(IdentityInstance {
            tag: "2.6".into(),
            params: format!("n={n},j={j}"),
            lhs: Element::term(
                Word::from_letters(&[Letter::E(j, j + 1), Letter::E(j + 1, j + 1)]),
                one(),
            ),
            rhs: Element::term(
                Word::from_letters(&[Letter::E(j + 1, j + 1), Letter::E(j, j + 1)]),
                s2.clone(),
            ),
        });
    }
    out.push(IdentityInstance {
        tag: "2.7".into(),
        params: format!("n={n}"),
        lhs: Element::term(
            Word::from_letters(&[Letter::E(n - 1, n + 1), Letter::E(n, n)]),
            one(),
        ),
        rhs: Element::term(
            Word::from_letters(&[Letter::E(n, n), Letter::E(n - 1, n + 1)]),
            s2,
        ),
    });
    out
}

fn record(tag: &str, params: String, pass: bool, millis: u128, residue: Option<String>) -> SuiteRecord {
    SuiteRecord {
        tag: tag.into(),
        params,
        status: if pass { SuiteStatus::Pass } else { SuiteStatus::Fail },
        steps: 0,
        millis,
        residue,
    }
}

pub fn coproduct_43_records(inst: &AlgebraInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    for k in 1..=n {
        for j in k..=n {
            let start = std::time::Instant::now();
            let closed = crate::hopf::closed_delta_alpha(k, j, n);
            let res = crate::hopf::coproduct_residual(Letter::E(k, j), 1, &closed, inst);
            out.push(record(
                "4.3.i",
                format!("n={n},k={k},j={j}"),
                res.is_zero(),
                start.elapsed().as_millis(),
                None,
            ));
        }
    }
    for k in 1..=n {
        for j in (k + 1)..=n {
            let start = std::time::Instant::now();
            let closed = crate::hopf::closed_delta_beta(k, j, n);
            let res =
                crate::hopf::coproduct_residual(Letter::E(k, 2 * n - j + 1), 1, &closed, inst);
            out.push(record(
                "4.3.ii",
                format!("n={n},k={k},j={j}"),
                res.is_zero(),
                start.elapsed().as_millis(),
                None,
            ));
        }
    }
    out
}

pub fn coproduct_48_records(inst: &AlgebraInstance, a_max: u32) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    for a in 1..=a_max {
        for j in 1..=n {
            let start = std::time::Instant::now();
            let closed = crate::hopf::closed_delta_simple_power(j, a, n);
            let res = crate::hopf::coproduct_residual(Letter::E(j, j), a, &closed, inst);
            out.push(record(
                "4.8",
                format!("n={n},a={a},j={j}"),
                res.is_zero(),
                start.elapsed().as_millis(),
                None,
            ));
        }
    }
    out
}

/// The power coproduct of the long-root chains, exact; the chains ending at
/// the short root are refuted as displayed, and the refutation itself is
/// recorded (the residual must be nonzero exactly there).
pub fn coproduct_45_records(inst: &AlgebraInstance, a_max: u32) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    for a in 2..=a_max {
        for k in 1..=n {
            for j in k..=n {
                let start = std::time::Instant::now();
                let closed = crate::hopf::closed_delta_alpha_power(k, j, a, n);
                let res = crate::hopf::coproduct_residual(Letter::E(k, j), a, &closed, inst);
                if j < n || k == n {
                    out.push(record(
                        "4.5",
                        format!("n={n},a={a},k={k},j={j}"),
                        res.is_zero(),
                        start.elapsed().as_millis(),
                        None,
                    ));
                } else {
                    // short-root chain: the displayed sum misses the doubled
                    // short-root monomials; assert the refutation is stable
                    out.push(record(
                        "4.5.scope",
                        format!("n={n},a={a},k={k},j={j} (refuted as displayed)"),
                        !res.is_zero(),
                        start.elapsed().as_millis(),
                        Some(format!("{} residual tensor terms", res.num_terms())),
                    ));
                }
            }
        }
    }
    out
}

pub fn coproduct_46_records(inst: &AlgebraInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    for a in [1u32, 2] {
        for k in 1..n {
            let start = std::time::Instant::now();
            let closed = crate::hopf::closed_delta_nprime_power(k, a, n);
            let res = crate::hopf::coproduct_residual(Letter::E(k, n + 1), a, &closed, inst);
            out.push(record(
                "4.6",
                format!("n={n},a={a},k={k}"),
                res.is_zero(),
                start.elapsed().as_millis(),
                None,
            ));
        }
    }
    // a = 3: the middle stratum lacks the full multinomial; report its
    // structure instead of asserting a corrected formula
    for k in 1..n {
        let start = std::time::Instant::now();
        let a = 3u32;
        let closed = crate::hopf::closed_delta_nprime_power(k, a, n);
        let res = crate::hopf::coproduct_residual(Letter::E(k, n + 1), a, &closed, inst);
        let confined = res.terms().all(|((left, _), _)| {
            // every residual monomial carries at least two short-root
            // letters in the first leg (the middle-stratum shape)
            left.0.iter().filter(|l| **l == Letter::E(n, n)).count() >= 2
        });
        out.push(record(
            "4.6.mid",
            format!("n={n},a={a},k={k} (middle stratum structure)"),
            confined,
            start.elapsed().as_millis(),
            Some(format!("{} residual terms confined to the middle stratum", res.num_terms())),
        ));
    }
    out
}

pub fn skew_primitive_records(inst: &AlgebraInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let one = RatFun::one;
    let mut out = Vec::new();
    for i in 1..=n {
        let start = std::time::Instant::now();
        let mut ok = true;
        // e_i in P_{1, w_i}
        let x = Element::term(Word::one(Letter::E(i, i)), one());
        ok &= crate::hopf::skew_primitive_check(&x, &Word::empty(), &Word::one(Letter::W(i, 1)), inst);
        // f_i w'_i^{-1} in P_{1, w'_i^{-1}}
        let x = Element::term(Word::from_letters(&[Letter::F(i, i), Letter::Wp(i, -1)]), one());
        ok &= crate::hopf::skew_primitive_check(&x, &Word::empty(), &Word::one(Letter::Wp(i, -1)), inst);
        // f_i in P_{w'_i, 1}
        let x = Element::term(Word::one(Letter::F(i, i)), one());
        ok &= crate::hopf::skew_primitive_check(&x, &Word::one(Letter::Wp(i, 1)), &Word::empty(), inst);
        // e_i w_i^{-1} in P_{w_i^{-1}, 1}
        let x = Element::term(Word::from_letters(&[Letter::W(i, -1), Letter::E(i, i)]), one());
        ok &= crate::hopf::skew_primitive_check(&x, &Word::one(Letter::W(i, -1)), &Word::empty(), inst);
        out.push(record("5.3", format!("n={n},i={i}"), ok, start.elapsed().as_millis(), None));
    }
    // negative control: e_1 e_2 is not skew-primitive
    let start = std::time::Instant::now();
    let x = Element::term(Word::from_letters(&[Letter::E(1, 1), Letter::E(2, 2)]), one());
    let not_prim = !crate::hopf::skew_primitive_check(
        &x,
        &Word::empty(),
        &Word::from_letters(&[Letter::W(1, 1), Letter::W(2, 1)]),
        inst,
    );
    out.push(record(
        "5.3",
        format!("n={n},negative control"),
        not_prim,
        start.elapsed().as_millis(),
        None,
    ));
    out
}

pub fn double_condition_record(n: u8, ell: u32, y: i64, z: i64) -> SuiteRecord {
    let start = std::time::Instant::now();
    let d = crate::restricted::double_condition(n, ell, y, z);
    let sym_ok = d.det_symbolic == crate::restricted::expected_double_det(n);
    SuiteRecord {
        tag: "6.1.det".into(),
        params: format!(
            "n={n},l={ell},y={y},z={z}: det={} gcd={} -> {}",
            d.det_mod_ell,
            d.gcd,
            if d.holds { "holds" } else { "fails" }
        ),
        status: if sym_ok { SuiteStatus::Pass } else { SuiteStatus::Fail },
        steps: 0,
        millis: start.elapsed().as_millis(),
        residue: None,
    }
}

/// Tab-separated record lines: tag, status, params, millis, residue.
pub fn records_to_lines(records: &[SuiteRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}{}\n",
            r.tag,
            r.status.as_str(),
            r.params,
            r.millis,
            r.residue.as_ref().map(|s| format!("\t{}", s)).unwrap_or_default()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_single_tags() {
        let p = RegistryParams { n: 3, ..Default::default() };
        let recs = run_tag("3.6.8", &p).unwrap();
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| r.status == SuiteStatus::Pass));
        let recs = run_tag("2.5", &p).unwrap();
        assert!(recs.iter().all(|r| r.status == SuiteStatus::Pass));
        assert!(run_tag("9.9.9", &p).is_err());
    }

    #[test]
    fn specialized_tag_needs_config() {
        let p = RegistryParams { n: 2, ell: None, ..Default::default() };
        assert!(run_tag("3.15", &p).is_err());
        let p = RegistryParams { n: 2, ell: Some(5), y: 1, z: 4, ..Default::default() };
        let recs = run_tag("8.2", &p).unwrap();
        assert!(recs.iter().all(|r| r.status == SuiteStatus::Pass));
    }
}

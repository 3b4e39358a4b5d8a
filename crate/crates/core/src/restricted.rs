//! The root-of-unity layer: specialized instances with the restricted
//! quotient rules, centrality of l-th powers, the Hopf-ideal tensor checks,
//! integrals of the Borel subalgebra, distinguished group-likes, the double
//! determinant condition, and the ribbon criterion.

use num::{BigUint, One};

use crate::catalog::{restricted_extra_rules, specialize_rules, tau_element};
use crate::coeff::{LaurentPoly, Rat, RatFun};
use crate::cyclo::{CycNum, SpecializationMap};
use crate::error::{CoeffError, EngineError};
use crate::freealg::{Element, Letter, TensorElement, Word};
use crate::qgroup::{AlgebraInstance, Validation};
use crate::rewrite::{normal_form, RewriteRule, RuleSet, DEFAULT_BUDGET};
use crate::rootsys::{group_pairing, two_rho};
use crate::suites::{SuiteRecord, SuiteStatus};

pub struct RestrictedInstance {
    pub n: u8,
    pub map: SpecializationMap,
    pub generic: AlgebraInstance,
    /// specialized pbw rules without the quotient truncations
    pub spec_rules: RuleSet<CycNum>,
    /// specialized pbw rules with X^l -> 0 and omega^l -> 1
    pub quot_rules: RuleSet<CycNum>,
}

impl RestrictedInstance {
    pub fn build(n: u8, ell: u32, y: i64, z: i64) -> Result<Self, EngineError> {
        if ell % 2 == 0 {
            return Err(EngineError::Unsupported("the order l must be odd".into()));
        }
        let map = SpecializationMap::new(ell, y, z).map_err(EngineError::Coeff)?;
        check_standing_assumptions(&map)?;
        let generic = AlgebraInstance::build(n, Validation::Orientation)?;
        let spec_rules = specialize_rules(&generic.pbw_rules, &map)?;
        let mut quot_rules = spec_rules.clone();
        for rule in restricted_extra_rules(n, ell) {
            let rhs = rule
                .rhs
                .try_map_coeffs(|c| map.specialize(c))
                .map_err(EngineError::Coeff)?;
            quot_rules.push(RewriteRule { lhs: rule.lhs, rhs, tag: rule.tag });
        }
        quot_rules.validate_orientation()?;
        Ok(RestrictedInstance { n, map, generic, spec_rules, quot_rules })
    }

    pub fn one(&self) -> CycNum {
        self.map.field.one()
    }

    /// Replace every negative torus letter by its positive power so that the
    /// quotient normal forms are unique.
    pub fn normalize_torus(&self, x: &Element<CycNum>) -> Element<CycNum> {
        let l = self.map.ell as usize;
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            let mut nw = Vec::new();
            for letter in &w.0 {
                match letter {
                    Letter::W(i, -1) => nw.extend(vec![Letter::W(*i, 1); l - 1]),
                    Letter::Wp(i, -1) => nw.extend(vec![Letter::Wp(*i, 1); l - 1]),
                    other => nw.push(*other),
                }
            }
            out.add_term(Word(nw), c.clone());
        }
        out
    }

    /// Normal form in the restricted quotient.
    pub fn nf(&self, x: &Element<CycNum>) -> Element<CycNum> {
        let x = self.normalize_torus(x);
        normal_form(&x, &self.quot_rules, 10 * DEFAULT_BUDGET, false)
            .expect("restricted reduction in budget")
            .element
    }

    /// Normal form at the specialized parameters without the quotient.
    pub fn nf_unrestricted(&self, x: &Element<CycNum>) -> Element<CycNum> {
        normal_form(x, &self.spec_rules, 10 * DEFAULT_BUDGET, false)
            .expect("specialized reduction in budget")
            .element
    }

    pub fn specialize_element(&self, x: &Element<RatFun>) -> Result<Element<CycNum>, CoeffError> {
        x.try_map_coeffs(|c| self.map.specialize(c))
    }
}

/// The standing parameter assumptions under which every straightening rule
/// was derived.
pub fn check_standing_assumptions(map: &SpecializationMap) -> Result<(), EngineError> {
    let r = map.r();
    let s = map.s();
    let checks: [(&str, CycNum); 4] = [
        ("r^3 = s^3", r.pow(3).sub(&s.pow(3))),
        ("r^4 = s^4", r.pow(4).sub(&s.pow(4))),
        ("r^2 + s^2 = 0", r.pow(2).add(&s.pow(2))),
        ("r^2 + rs + s^2 = 0", r.pow(2).add(&r.mul(&s)).add(&s.pow(2))),
    ];
    for (what, v) in checks {
        if v.is_zero() {
            return Err(EngineError::Unsupported(format!(
                "configuration violates the standing assumption ({what} at l={}, y={}, z={})",
                map.ell, map.y, map.z
            )));
        }
    }
    Ok(())
}

/// l^(2n^2 + 2n), the dimension of the restricted quotient.
pub fn restricted_dimension(n: u8, ell: u32) -> Result<BigUint, EngineError> {
    if n < 2 {
        return Err(EngineError::RankTooSmall(n));
    }
    let e = 2 * (n as u32) * (n as u32) + 2 * (n as u32);
    Ok(BigUint::from(ell).pow(e))
}

fn generators(n: u8) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(Letter::E(i, i));
        out.push(Letter::F(i, i));
        out.push(Letter::W(i, 1));
        out.push(Letter::W(i, -1));
        out.push(Letter::Wp(i, 1));
        out.push(Letter::Wp(i, -1));
    }
    out
}

/// Theorem-level centrality: X^l commutes with every generator for every
/// root vector letter X, and omega^l - 1 is central.
pub fn central_suite(inst: &RestrictedInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let l = inst.map.ell as usize;
    let one = inst.one();
    let mut out = Vec::new();
    let mut roots: Vec<Letter> = Vec::new();
    for (i, j) in crate::freealg::convex_positions(n) {
        roots.push(Letter::E(i, j));
        roots.push(Letter::F(i, j));
    }
    for x in roots {
        let xl = Word(vec![x; l]);
        for g in generators(n) {
            let start = std::time::Instant::now();
            let lhs = Element::term(xl.concat(&Word::one(g)), one.clone());
            let rhs = Element::term(Word::one(g).concat(&xl), one.clone());
            let diff = inst.nf_unrestricted(&lhs.sub(&rhs));
            out.push(SuiteRecord {
                tag: "3.15".into(),
                params: format!(
                    "n={n},l={l},X={},g={}",
                    crate::freealg::letter_name(&x, n),
                    crate::freealg::letter_name(&g, n)
                ),
                status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
                steps: 0,
                millis: start.elapsed().as_millis(),
                residue: if diff.is_zero() {
                    None
                } else {
                    Some(crate::rewrite::element_string(&diff, n))
                },
            });
        }
    }
    // omega_k^l - 1 and omega'_k^l - 1 central
    for k in 1..=n {
        for t in [Letter::W(k, 1), Letter::Wp(k, 1)] {
            let tl = Word(vec![t; l]);
            let mut pass = true;
            for g in generators(n) {
                let lhs = Element::term(tl.concat(&Word::one(g)), one.clone())
                    .sub(&Element::term(Word::one(g), one.clone()));
                let rhs = Element::term(Word::one(g).concat(&tl), one.clone())
                    .sub(&Element::term(Word::one(g), one.clone()));
                if inst.nf_unrestricted(&lhs.sub(&rhs)) != Element::zero() {
                    pass = false;
                }
            }
            out.push(SuiteRecord {
                tag: "3.15".into(),
                params: format!("n={n},l={l},X={}^l-1", crate::freealg::letter_name(&t, n)),
                status: if pass { SuiteStatus::Pass } else { SuiteStatus::Fail },
                steps: 0,
                millis: 0,
                residue: None,
            });
        }
    }
    out
}

/// The closed tensor forms of the l-th power coproducts.
pub fn closed_delta_power_l(
    x: Letter,
    inst: &RestrictedInstance,
) -> Result<TensorElement<RatFun>, EngineError> {
    let n = inst.n;
    let l = inst.map.ell;
    let li = l as i64;
    let zeta = RatFun::mono(0, 2).sub(&RatFun::mono(2, 0));
    let one = RatFun::one();
    let Letter::E(k, jj) = x else {
        return Err(EngineError::Unsupported("power coproduct on E letters only".into()));
    };
    let mut t = TensorElement::zero();
    let pow = |l0: Letter, c: u32| Word(vec![l0; c as usize]);
    let omega_l = |i: u8, b: u8| crate::hopf::omega_word(i, b, n, l);
    if jj <= n {
        // E_{k,j}^l (x) 1 + w^l (x) E^l + s^{l(l-1)} zeta^l sum E_{i+1,j}^l w^l (x) E_{k,i}^l
        let j = jj;
        t.add_term(pow(x, l), Word::empty(), one.clone());
        t.add_term(omega_l(k, j), pow(x, l), one.clone());
        for i in k..j {
            let c = RatFun::mono(0, li * (li - 1)).mul(&zeta.pow(li));
            let left = pow(Letter::E(i + 1, j), l).concat(&omega_l(k, i));
            t.add_term(left, pow(Letter::E(k, i), l), c);
        }
        return Ok(t);
    }
    let j0 = 2 * n - jj + 1;
    let prod_ri_si = {
        let mut p = one.clone();
        for i in 2..=li {
            p = p.mul(&RatFun::mono(i, 0).add(&RatFun::mono(0, i)));
        }
        p
    };
    let head = RatFun::mono(li * (li - 1) / 2, 0)
        .mul(&RatFun::mono(1, 0).sub(&RatFun::mono(0, 1)).pow(li - 1))
        .mul(&zeta)
        .mul(&prod_ri_si);
    if j0 == n {
        // (4.11)
        t.add_term(pow(x, l), Word::empty(), one.clone());
        t.add_term(omega_l(k, jj), pow(x, l), one.clone());
        // s^{2l(l-1)} zeta^l E_{n,n'}^l w_{k,n-1}^l (x) E_{k,n-1}^l
        let c = RatFun::mono(0, 2 * li * (li - 1)).mul(&zeta.pow(li));
        let left = Word(vec![Letter::Ext(n, n + 1); l as usize]).concat(&omega_l(k, n - 1));
        t.add_term(left, pow(Letter::E(k, n - 1), l), c);
        // head e_n^l w_{k,n}^l (x) E_{k,n}^l
        let left = pow(Letter::E(n, n), l).concat(&omega_l(k, n));
        t.add_term(left, pow(Letter::E(k, n), l), head);
        // s^{l(l-1)} zeta^l sum_{i=k}^{n-2} E_{i+1,n'}^l w^l (x) E_{k,i}^l
        for i in k..=(n.saturating_sub(2)) {
            if i < k {
                continue;
            }
            let c = RatFun::mono(0, li * (li - 1)).mul(&zeta.pow(li));
            let left = pow(Letter::E(i + 1, n + 1), l).concat(&omega_l(k, i));
            t.add_term(left, pow(Letter::E(k, i), l), c);
        }
        return Ok(t);
    }
    // (4.12): j0 < n
    let j = j0;
    t.add_term(pow(x, l), Word::empty(), one.clone());
    t.add_term(omega_l(k, jj), pow(x, l), one.clone());
    // s^{2l(l-1)} zeta^l E_{j,j'}^l w_{k,j-1}^l (x) E_{k,j-1}^l
    let c = RatFun::mono(0, 2 * li * (li - 1)).mul(&zeta.pow(li));
    let left = Word(vec![Letter::Ext(j, 2 * n - j + 1); l as usize]).concat(&omega_l(k, j - 1));
    t.add_term(left, pow(Letter::E(k, j - 1), l), c);
    // head E_{n+1,j'}^l w_{k,n}^l (x) E_{k,n}^l
    let left = Word(vec![Letter::Ext(n + 1, 2 * n - j + 1); l as usize]).concat(&omega_l(k, n));
    t.add_term(left, pow(Letter::E(k, n), l), head);
    // s^{l(l-1)} zeta^l sum_{i=k}^{j-2}
    for i in k..=j.saturating_sub(2) {
        if i < k {
            continue;
        }
        let c = RatFun::mono(0, li * (li - 1)).mul(&zeta.pow(li));
        let left = pow(Letter::E(i + 1, 2 * n - j + 1), l).concat(&omega_l(k, i));
        t.add_term(left, pow(Letter::E(k, i), l), c);
    }
    let ext_or_std = |a: u8, b: u8| -> Letter {
        if a <= n && b <= 2 * n - a {
            Letter::E(a, b)
        } else {
            Letter::Ext(a, b)
        }
    };
    // r^{l(l-1)} s^{2l(l-1)} zeta^l sum_{i=j}^{n-1}
    for i in j..=(n - 1) {
        let c = RatFun::mono(li * (li - 1), 2 * li * (li - 1)).mul(&zeta.pow(li));
        let left =
            Word(vec![ext_or_std(i + 1, 2 * n - j + 1); l as usize]).concat(&omega_l(k, i));
        t.add_term(left, pow(Letter::E(k, i), l), c);
    }
    // r^{-l(l-1)} zeta^l sum_{i=n+1}^{2n-j}
    for i in (n + 1)..=(2 * n - j) {
        let c = RatFun::mono(-li * (li - 1), 0).mul(&zeta.pow(li));
        let left = Word(vec![ext_or_std(i + 1, 2 * n - j + 1); l as usize])
            .concat(&crate::hopf::omega_word_ext(k, i, n, l));
        t.add_term(left, pow(Letter::E(k, i), l), c);
    }
    Ok(t)
}

// ---- integrals ----------------------------------------------------------------

/// t = prod_i (1 + w_i + ... + w_i^{l-1}) as a specialized element.
pub fn torus_integral(inst: &RestrictedInstance) -> Element<CycNum> {
    let n = inst.n;
    let l = inst.map.ell as usize;
    let one = inst.one();
    let mut acc = Element::unit(one.clone());
    for i in 1..=n {
        let mut factor = Element::zero();
        for k in 0..l {
            factor.add_term(Word(vec![Letter::W(i, 1); k]), one.clone());
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// x = prod_i E-hat_{i,i+1}: the product of the (l-1)-st powers of the row-i
/// root vectors in convex order.
pub fn top_e_word(inst: &RestrictedInstance) -> Word {
    let n = inst.n;
    let l = inst.map.ell as usize;
    let mut w = Vec::new();
    for (i, j) in crate::freealg::convex_positions(n) {
        let _ = i;
        let _ = j;
    }
    for i in 1..=n {
        for j in i..=(2 * n - i) {
            w.extend(vec![Letter::E(i, j); l - 1]);
        }
    }
    Word(w)
}

pub fn top_f_word(inst: &RestrictedInstance) -> Word {
    // the tau image ordering: F-hat products mirror the E ones
    let n = inst.n;
    let l = inst.map.ell as usize;
    let mut w = Vec::new();
    for i in 1..=n {
        for j in i..=(2 * n - i) {
            w.extend(vec![Letter::F(i, j); l - 1]);
        }
    }
    Word(w)
}

/// b y = eps(b) y for y = t x (left), and y' b = eps(b) y' for y' = x t
/// (right), for all Borel generators b.
pub fn integral_check(inst: &RestrictedInstance, left: bool) -> Vec<SuiteRecord> {
    let n = inst.n;
    let one = inst.one();
    let t = torus_integral(inst);
    let x = Element::term(top_e_word(inst), one.clone());
    let y = if left { t.mul(&x) } else { x.mul(&t) };
    let tag = if left { "7.1" } else { "7.2" };
    let mut out = Vec::new();
    let mut borel: Vec<Letter> = Vec::new();
    for i in 1..=n {
        borel.push(Letter::E(i, i));
        borel.push(Letter::W(i, 1));
        borel.push(Letter::W(i, -1));
    }
    for b in borel {
        let start = std::time::Instant::now();
        let be = Element::term(Word::one(b), one.clone());
        let lhs = if left { be.mul(&y) } else { y.mul(&be) };
        // eps(b): 1 for torus letters, 0 for e
        let expect = if b.is_torus() { y.clone() } else { Element::zero() };
        let diff = inst.nf(&lhs.sub(&expect));
        out.push(SuiteRecord {
            tag: tag.into(),
            params: format!("n={n},l={},b={}", inst.map.ell, crate::freealg::letter_name(&b, n)),
            status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: if diff.is_zero() {
                None
            } else {
                Some(format!("{} residual terms", diff.num_terms()))
            },
        });
    }
    // eps(y) = 0
    let eps_zero = y
        .terms()
        .filter(|(w, _)| w.0.iter().all(|l| l.is_torus()))
        .count()
        == 0;
    out.push(SuiteRecord {
        tag: "7.3".into(),
        params: format!("n={n},l={},side={}", inst.map.ell, if left { "left" } else { "right" }),
        status: if eps_zero { SuiteStatus::Pass } else { SuiteStatus::Fail },
        steps: 0,
        millis: 0,
        residue: None,
    });
    out
}

/// gamma(omega_k) = <omega'_{2rho}, omega_k> as a specialized scalar.
pub fn distinguished_gamma(inst: &RestrictedInstance, k: u8) -> CycNum {
    let n = inst.n;
    let mut ek = vec![0i64; n as usize];
    ek[k as usize - 1] = 1;
    let v = group_pairing(&two_rho(n), &ek, n);
    inst.map.specialize(&v).expect("group pairing specializes")
}

/// y a = gamma(a) y for a = omega_k and y e_k = 0; plus the mirrored
/// F-side commutation of the distinguished group-like report.
pub fn distinguished_check(inst: &RestrictedInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let one = inst.one();
    let t = torus_integral(inst);
    let x = Element::term(top_e_word(inst), one.clone());
    let y = t.mul(&x);
    let mut out = Vec::new();
    for k in 1..=n {
        // y omega_k = gamma(omega_k) y
        let start = std::time::Instant::now();
        let lhs = y.mul(&Element::term(Word::one(Letter::W(k, 1)), one.clone()));
        let rhs = y.scale(&distinguished_gamma(inst, k));
        let diff = inst.nf(&lhs.sub(&rhs));
        out.push(SuiteRecord {
            tag: "7.4".into(),
            params: format!("n={n},a=w{k}"),
            status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
        // y e_k = 0
        let start = std::time::Instant::now();
        let lhs = y.mul(&Element::term(Word::one(Letter::E(k, k)), one.clone()));
        let diff = inst.nf(&lhs);
        out.push(SuiteRecord {
            tag: "7.4".into(),
            params: format!("n={n},a=e{k}"),
            status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
    }
    // omega'_k F = <omega'_k, omega_{2rho}>^{-1} F omega'_k
    let fword = Element::term(top_f_word(inst), one.clone());
    for k in 1..=n {
        let start = std::time::Instant::now();
        let wk = Element::term(Word::one(Letter::Wp(k, 1)), one.clone());
        let lhs = wk.mul(&fword);
        let mut ek = vec![0i64; n as usize];
        ek[k as usize - 1] = 1;
        let c = inst
            .map
            .specialize(&group_pairing(&ek, &two_rho(n), n).inv().unwrap())
            .unwrap();
        let rhs = fword.mul(&wk).scale(&c);
        let diff = inst.nf(&lhs.sub(&rhs));
        out.push(SuiteRecord {
            tag: "7.6".into(),
            params: format!("n={n},k={k}"),
            status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
    }
    out
}

/// Antipode of a specialized element, reduced in the quotient after every
/// letter so products of long words stay small.
pub fn restricted_antipode(inst: &RestrictedInstance, x: &Element<CycNum>) -> Element<CycNum> {
    let mut out = Element::zero();
    for (w, c) in x.terms() {
        let mut acc = Element::unit(c.clone());
        for l in w.0.iter().rev() {
            let sl = crate::hopf::antipode(
                &Element::term(Word::one(*l), RatFun::one()),
                &inst.generic,
            );
            let sl = inst.specialize_element(&sl).expect("letter antipode specializes");
            acc = inst.nf(&acc.mul(&sl));
        }
        out = out.add(&acc);
    }
    out
}

/// S(y') is a nonzero scalar multiple of y.
pub fn antipode_swaps_integrals(inst: &RestrictedInstance) -> SuiteRecord {
    let n = inst.n;
    let one = inst.one();
    let start = std::time::Instant::now();
    let t = torus_integral(inst);
    let x = Element::term(top_e_word(inst), one.clone());
    let y = inst.nf(&t.mul(&x));
    let yp = x.mul(&t);
    let sy = restricted_antipode(inst, &yp);
    let sy = inst.nf(&sy);
    // compare: sy = c * y for some nonzero scalar
    let status = match (sy.terms().next(), y.terms().next()) {
        (Some((w1, c1)), Some(_)) => {
            let ratio = match y.coeff_of(w1) {
                Some(cy) => c1.mul(&cy.inv().unwrap()),
                None => inst.map.field.zero(),
            };
            if !ratio.is_zero() && sy == y.scale(&ratio) {
                SuiteStatus::Pass
            } else {
                SuiteStatus::Fail
            }
        }
        _ => SuiteStatus::Fail,
    };
    SuiteRecord {
        tag: "7.1-7.2".into(),
        params: format!("n={n},l={},S(y') ~ y", inst.map.ell),
        status,
        steps: 0,
        millis: start.elapsed().as_millis(),
        residue: None,
    }
}

// ---- double condition and ribbon criterion -----------------------------------

/// The n x n integer matrix of the character system, with symbolic entries
/// in y and z (reusing the two-variable Laurent polynomials).
pub struct DoubleCondition {
    pub n: u8,
    pub ell: u32,
    pub det_symbolic: LaurentPoly,
    pub det_mod_ell: i64,
    pub gcd: i64,
    pub holds: bool,
}

/// det A = 2^{n-1} (y^n + (-1)^n z^n); entries 2(y-z), 2z, -2y with the
/// short-root row halved.
pub fn double_condition(n: u8, ell: u32, y: i64, z: i64) -> DoubleCondition {
    let yv = LaurentPoly::monomial(Rat::one(), 1, 0);
    let zv = LaurentPoly::monomial(Rat::one(), 0, 1);
    let two = LaurentPoly::int(2);
    let size = n as usize;
    let mut a = vec![vec![LaurentPoly::zero(); size]; size];
    for i in 0..size {
        if i + 1 < size {
            a[i][i] = two.mul(&yv.sub(&zv));
            if i + 1 < size {
                a[i][i + 1] = two.mul(&zv);
            }
            if i > 0 {
                a[i][i - 1] = two.mul(&yv).neg();
            }
        } else {
            // last row: ..., -2y, y-z
            a[i][i] = yv.sub(&zv);
            if i > 0 {
                a[i][i - 1] = two.mul(&yv).neg();
            }
        }
    }
    let det_symbolic = poly_det(&a);
    // numeric determinant mod ell
    let le = ell as i64;
    let modv = |v: i64| v.rem_euclid(le);
    let mut num = vec![vec![0i64; size]; size];
    for i in 0..size {
        for j in 0..size {
            // evaluate at the given (y, z)
            let mut acc = 0i64;
            for ((dy, dz), c) in a[i][j].terms() {
                let c = c.to_integer();
                let c: i64 = i64::try_from(&c).unwrap();
                acc += c * y.pow(*dy as u32) * z.pow(*dz as u32);
            }
            num[i][j] = modv(acc);
        }
    }
    let det_mod_ell = modv(int_det(&num, le));
    let g = num::integer::gcd(det_mod_ell, le);
    DoubleCondition { n, ell, det_symbolic, det_mod_ell, gcd: g, holds: g == 1 }
}

/// 2^{n-1} (y^n + (-1)^n z^n) as the expected determinant.
pub fn expected_double_det(n: u8) -> LaurentPoly {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut p = LaurentPoly::monomial(Rat::one(), n as i64, 0);
    p.add_term((0, n as i64), &crate::coeff::rat_int(sign));
    p.scale(&crate::coeff::rat_int(1 << (n - 1)))
}

fn poly_det(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let size = a.len();
    if size == 1 {
        return a[0][0].clone();
    }
    let mut acc = LaurentPoly::zero();
    for col in 0..size {
        if a[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = (1..size)
            .map(|r| {
                (0..size)
                    .filter(|c| *c != col)
                    .map(|c| a[r][c].clone())
                    .collect()
            })
            .collect();
        let term = a[0][col].mul(&poly_det(&minor));
        if col % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

fn int_det(a: &[Vec<i64>], modulus: i64) -> i64 {
    let size = a.len();
    if size == 1 {
        return a[0][0].rem_euclid(modulus);
    }
    let mut acc = 0i64;
    for col in 0..size {
        let minor: Vec<Vec<i64>> = (1..size)
            .map(|r| {
                (0..size)
                    .filter(|c| *c != col)
                    .map(|c| a[r][c])
                    .collect()
            })
            .collect();
        let term = a[0][col] * int_det(&minor, modulus);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
        acc = acc.rem_euclid(modulus);
    }
    acc
}

/// The ribbon witness: exponents with 2 a_j = -j(2n-j) mod l, the square
/// root h of the distinguished group-like, and the halved character.
pub struct RibbonWitness {
    pub a: Vec<i64>,
    pub checks: Vec<SuiteRecord>,
}

pub enum RibbonOutcome {
    Witness(RibbonWitness),
    NoWitness { unsolvable: String },
}

pub fn ribbon_solve(n: u8, ell: u32) -> RibbonOutcome {
    let le = ell as i64;
    if ell % 2 == 0 {
        // 2 a_j = -j(2n-j) mod even l is unsolvable for odd j(2n-j)
        for j in 1..=n as i64 {
            let target = (-j * (2 * n as i64 - j)).rem_euclid(le);
            if target % 2 == 1 {
                return RibbonOutcome::NoWitness {
                    unsolvable: format!("2 a_{j} = {} (mod {}) has no solution", target, ell),
                };
            }
        }
        // even targets with even modulus never pin a group square root of g
        return RibbonOutcome::NoWitness {
            unsolvable: format!("no square root of the distinguished group-like mod {}", ell),
        };
    }
    let inv2 = (le + 1) / 2; // 2 * inv2 = l + 1 = 1 mod l
    let a: Vec<i64> = (1..=n as i64)
        .map(|j| ((-j * (2 * n as i64 - j)).rem_euclid(le) * inv2).rem_euclid(le))
        .collect();
    RibbonOutcome::Witness(RibbonWitness { a, checks: Vec::new() })
}

/// Full ribbon verification at a specialized configuration: h^2 = g,
/// delta^2 = gamma, and the square of the antipode is the claimed
/// conjugation on the generators.
pub fn ribbon_check(inst: &RestrictedInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let le = inst.map.ell as i64;
    let mut out = Vec::new();
    let RibbonOutcome::Witness(w) = ribbon_solve(n, inst.map.ell) else {
        out.push(SuiteRecord {
            tag: "8.2".into(),
            params: format!("n={n},l={}", inst.map.ell),
            status: SuiteStatus::Fail,
            steps: 0,
            millis: 0,
            residue: Some("no witness at odd l".into()),
        });
        return out;
    };
    // h^2 = g = omega_{2rho}^{-1}: exponents mod l
    let rho2 = two_rho(n);
    let h2_matches = (0..n as usize)
        .all(|j| (2 * w.a[j]).rem_euclid(le) == (-rho2[j]).rem_euclid(le));
    out.push(SuiteRecord {
        tag: "8.2".into(),
        params: format!("n={n},l={},h^2=g,a={:?}", inst.map.ell, w.a),
        status: if h2_matches { SuiteStatus::Pass } else { SuiteStatus::Fail },
        steps: 0,
        millis: 0,
        residue: None,
    });
    // delta(w_k) = <w'_rho, w_k> with rho the halved weight (h itself is the
    // inverse torus word omega_rho^{-1}, so its exponents are -rho mod l)
    let rho: Vec<i64> = w.a.iter().map(|a| (-a).rem_euclid(le)).collect();
    let delta_val = |k: u8| -> CycNum {
        let mut ek = vec![0i64; n as usize];
        ek[k as usize - 1] = 1;
        inst.map
            .specialize(&group_pairing(&rho, &ek, n))
            .expect("character specializes")
    };
    let mut d2_ok = true;
    for k in 1..=n {
        let d = delta_val(k);
        let g = distinguished_gamma(inst, k);
        if d.mul(&d) != g {
            d2_ok = false;
        }
    }
    out.push(SuiteRecord {
        tag: "8.2".into(),
        params: format!("n={n},l={},delta^2=gamma", inst.map.ell),
        status: if d2_ok { SuiteStatus::Pass } else { SuiteStatus::Fail },
        steps: 0,
        millis: 0,
        residue: None,
    });
    // S^2(a) = h (delta -> a <- delta^{-1}) h^{-1} on the Borel generators
    let one = inst.one();
    for k in 1..=n {
        for gletter in [Letter::E(k, k), Letter::W(k, 1)] {
            let start = std::time::Instant::now();
            // S^2: engine side
            let s2 = {
                let s1 = crate::hopf::antipode(
                    &Element::term(Word::one(gletter), RatFun::one()),
                    &inst.generic,
                );
                let s2 = crate::hopf::antipode(&s1, &inst.generic);
                inst.nf(&inst.specialize_element(&s2).unwrap())
            };
            // harpoon side: delta -> a <- delta^{-1} multiplies by
            // delta(a_(2)) delta^{-1}(a_(1)) on the middle leg
            let conj = match gletter {
                Letter::W(..) => Element::term(Word::one(gletter), one.clone()),
                Letter::E(kk, _) => {
                    let d = delta_val(kk);
                    Element::term(Word::one(gletter), d.inv().unwrap())
                }
                _ => unreachable!(),
            };
            // h a h^{-1}: conjugation by the torus word scales e_k by
            // <w'_k, w_h> hmm computed through the group pairing
            let conj = match gletter {
                Letter::W(..) => conj,
                Letter::E(kk, _) => {
                    let mut ek = vec![0i64; n as usize];
                    ek[kk as usize - 1] = 1;
                    let c = inst
                        .map
                        .specialize(&group_pairing(&ek, &w.a, n))
                        .unwrap();
                    conj.scale(&c)
                }
                _ => unreachable!(),
            };
            let diff = inst.nf(&s2.sub(&inst.nf(&conj)));
            out.push(SuiteRecord {
                tag: "8.2".into(),
                params: format!(
                    "n={n},l={},S^2 on {}",
                    inst.map.ell,
                    crate::freealg::letter_name(&gletter, n)
                ),
                status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
                steps: 0,
                millis: start.elapsed().as_millis(),
                residue: if diff.is_zero() {
                    None
                } else {
                    Some(crate::rewrite::element_string(&diff, n))
                },
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_dimension() {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        assert_eq!(inst.map.ell, 5);
        assert_eq!(
            restricted_dimension(2, 3).unwrap(),
            BigUint::from(3u32).pow(12)
        );
        assert_eq!(
            restricted_dimension(3, 5).unwrap(),
            BigUint::from(5u32).pow(24)
        );
        assert!(restricted_dimension(1, 5).is_err());
        // l=3 violates r^2 + rs + s^2 != 0
        assert!(RestrictedInstance::build(2, 3, 1, 2).is_err());
    }

    #[test]
    fn double_condition_symbolic() {
        for n in 2..=5u8 {
            let d = double_condition(n, 5, 1, 4);
            assert_eq!(d.det_symbolic, expected_double_det(n), "determinant at n={n}");
        }
        let d = double_condition(2, 5, 1, 4);
        // det = 2(y^2+z^2) = 2(1+16) = 34; gcd(34,5)=1
        assert_eq!(d.det_mod_ell, 34i64.rem_euclid(5));
        assert!(d.holds);
    }

    #[test]
    fn ribbon_solutions() {
        // witnesses exactly for odd l
        for l in [3u32, 5, 7, 9] {
            for n in [2u8, 3] {
                assert!(matches!(ribbon_solve(n, l), RibbonOutcome::Witness(_)));
            }
        }
        assert!(matches!(ribbon_solve(2, 4), RibbonOutcome::NoWitness { .. }));
        // n=2, l=5: a = (1, 3) hmm: 2a_1 = -3 mod 5 -> a_1 = 1; 2a_2 = -4 -> a_2 = 3
        if let RibbonOutcome::Witness(w) = ribbon_solve(2, 5) {
            assert_eq!(w.a, vec![1, 3]);
        }
    }

    #[test]
    fn restricted_quotient_kills_powers() {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let one = inst.one();
        let x = Element::term(Word(vec![Letter::E(1, 2); 5]), one.clone());
        assert!(inst.nf(&x).is_zero());
        let w = Element::term(Word(vec![Letter::W(1, 1); 5]), one.clone());
        assert_eq!(inst.nf(&w), Element::unit(one.clone()));
        // normal forms never carry an exponent >= l
        let y = Element::term(Word(vec![Letter::E(2, 2); 7]), one);
        let red = inst.nf(&y);
        assert!(red.is_zero());
    }
}

/// The (4.9)/(4.11)/(4.12) tensor checks: Delta(X^l) equals the closed
/// l-th power form, lies in I_n (x) U + U (x) I_n, and S(X^l) lies in I_n.
pub fn hopf_ideal_suite(inst: &RestrictedInstance) -> Vec<SuiteRecord> {
    let n = inst.n;
    let l = inst.map.ell;
    let mut out = Vec::new();
    for (k, jj) in crate::freealg::convex_positions(n) {
        let x = Letter::E(k, jj);
        let tag = if jj <= n {
            "4.9"
        } else if jj == n + 1 {
            "4.11"
        } else {
            "4.12"
        };
        let start = std::time::Instant::now();
        // engine side: Delta(X)^l computed generically, then specialized
        let base = crate::hopf::coproduct(
            &Element::term(Word::one(x), RatFun::one()),
            &inst.generic,
        );
        let mut engine = TensorElement::term(Word::empty(), Word::empty(), RatFun::one());
        for _ in 0..l {
            engine = engine.mul(&base);
            engine = engine.map_legs(|w| {
                normal_form(
                    &Element::term(w.clone(), RatFun::one()),
                    &inst.generic.pbw_rules,
                    DEFAULT_BUDGET,
                    false,
                )
                .unwrap()
                .element
            });
        }
        let engine_spec = spec_tensor(inst, &engine, false).expect("engine tensor specializes");
        // closed side
        let closed = closed_delta_power_l(x, inst).expect("closed form");
        let closed = crate::hopf::reduce_closed_form(&closed, &inst.generic);
        let closed_spec = spec_tensor_rf(inst, &closed).expect("closed tensor specializes");
        let diff = engine_spec.sub(&closed_spec);
        out.push(SuiteRecord {
            tag: tag.into(),
            params: format!("n={n},l={l},X={}", crate::freealg::letter_name(&x, n)),
            status: if diff.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: if diff.is_zero() {
                None
            } else {
                Some(format!("{} differing tensor terms", diff.num_terms()))
            },
        });
        // membership: both legs reduced in the quotient must vanish
        let start = std::time::Instant::now();
        let mut member = TensorElement::zero();
        for ((a, b), c) in engine_spec.terms() {
            let ra = inst.nf(&Element::term(a.clone(), inst.one()));
            let rb = inst.nf(&Element::term(b.clone(), inst.one()));
            for (u, c1) in ra.terms() {
                for (v, c2) in rb.terms() {
                    member.add_term(u.clone(), v.clone(), c.mul(&c1.mul(c2)));
                }
            }
        }
        // subtract the classes of X^l (x) 1 and w^l (x) X^l, which are 0 in
        // the quotient as well; the whole image must vanish
        out.push(SuiteRecord {
            tag: format!("{tag}.ideal"),
            params: format!("n={n},l={l},X={}", crate::freealg::letter_name(&x, n)),
            status: if member.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
        // S(X^l) in I_n: its class in the quotient vanishes
        let start = std::time::Instant::now();
        let xl = Element::term(Word(vec![x; l as usize]), inst.one());
        let sxl = restricted_antipode(inst, &xl);
        let red = inst.nf(&sxl);
        out.push(SuiteRecord {
            tag: "4.10".into(),
            params: format!("n={n},l={l},X={}", crate::freealg::letter_name(&x, n)),
            status: if red.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
    }
    // S(e_k^l) is a scalar multiple of w_k^{-l} e_k^l before the quotient
    for k in 1..=n {
        let start = std::time::Instant::now();
        let xl = Element::term(Word(vec![Letter::E(k, k); l as usize]), inst.one());
        let mut acc = Element::unit(inst.one());
        let sk = inst
            .specialize_element(&crate::hopf::antipode(
                &Element::term(Word::one(Letter::E(k, k)), RatFun::one()),
                &inst.generic,
            ))
            .unwrap();
        for _ in 0..l {
            acc = inst.nf_unrestricted(&acc.mul(&sk));
        }
        let _ = xl;
        // acc should be a single monomial w_k^{-l} e_k^l (up to scalar)
        let ok = acc.num_terms() == 1
            && acc.terms().all(|(w, _)| {
                let torus = w.0.iter().filter(|t| matches!(t, Letter::W(i, -1) if *i == k)).count();
                let es = w.0.iter().filter(|t| **t == Letter::E(k, k)).count();
                torus == l as usize && es == l as usize && w.len() == 2 * l as usize
            });
        out.push(SuiteRecord {
            tag: "4.6s".into(),
            params: format!("n={n},l={l},k={k}"),
            status: if ok { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: start.elapsed().as_millis(),
            residue: None,
        });
    }
    out
}

fn spec_tensor(
    inst: &RestrictedInstance,
    t: &TensorElement<RatFun>,
    _quot: bool,
) -> Result<TensorElement<CycNum>, CoeffError> {
    let mut out = TensorElement::zero();
    for ((a, b), c) in t.terms() {
        out.add_term(a.clone(), b.clone(), inst.map.specialize(c)?);
    }
    Ok(out)
}

fn spec_tensor_rf(
    inst: &RestrictedInstance,
    t: &TensorElement<RatFun>,
) -> Result<TensorElement<CycNum>, CoeffError> {
    spec_tensor(inst, t, false)
}

#[cfg(test)]
mod hopf_ideal_tests {
    use super::*;

    #[test]
    #[ignore] // minutes in debug mode; run in release via the acceptance suite
    fn hopf_ideal_at_2_5() {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let recs = hopf_ideal_suite(&inst);
        for r in &recs {
            assert_eq!(r.status, SuiteStatus::Pass, "{} [{}] {:?}", r.tag, r.params, r.residue);
        }
    }
}

/// A character of the Borel subalgebra: an algebra map vanishing on the
/// e-generators, with prescribed torus values.
pub struct BorelCharacter {
    pub omega_values: Vec<CycNum>,
}

impl BorelCharacter {
    pub fn eval_word(&self, w: &Word, field: &std::sync::Arc<crate::cyclo::CycField>) -> CycNum {
        let mut acc = field.one();
        for l in &w.0 {
            match l {
                Letter::W(i, sg) => {
                    let v = &self.omega_values[*i as usize - 1];
                    let v = if *sg > 0 { v.clone() } else { v.inv().expect("unit value") };
                    acc = acc.mul(&v);
                }
                _ => return field.zero(),
            }
        }
        acc
    }
}

/// The harpoon actions of a character on a Borel element:
/// `xi -> a = sum a_(1) xi(a_(2))` and `a <- xi = sum xi(a_(1)) a_(2)`.
pub fn harpoon(
    inst: &RestrictedInstance,
    xi: &BorelCharacter,
    a: &Element<CycNum>,
    left: bool,
) -> Element<CycNum> {
    let field = &inst.map.field;
    let mut out = Element::zero();
    for (w, c) in a.terms() {
        // generator-level coproduct of the word (legs unreduced)
        let mut legs: Vec<(Word, Word, CycNum)> = vec![(Word::empty(), Word::empty(), c.clone())];
        for l in &w.0 {
            let parts: Vec<(Vec<Letter>, Vec<Letter>)> = match l {
                Letter::E(i, j) if i == j => {
                    vec![(vec![*l], vec![]), (vec![Letter::W(*i, 1)], vec![*l])]
                }
                Letter::W(..) => vec![(vec![*l], vec![*l])],
                other => {
                    // expand compound letters first
                    let _ = other;
                    panic!("harpoon expects generator-level Borel words");
                }
            };
            let mut next = Vec::new();
            for (la, ra, cc) in &legs {
                for (pl, pr) in &parts {
                    let mut nl = la.clone();
                    nl.0.extend(pl.iter().copied());
                    let mut nr = ra.clone();
                    nr.0.extend(pr.iter().copied());
                    next.push((nl, nr, cc.clone()));
                }
            }
            legs = next;
        }
        for (a1, a2, cc) in legs {
            if left {
                // xi -> a = a_(1) xi(a_(2))
                let v = xi.eval_word(&a2, field);
                if !v.is_zero() {
                    out.add_term(a1, cc.mul(&v));
                }
            } else {
                let v = xi.eval_word(&a1, field);
                if !v.is_zero() {
                    out.add_term(a2, cc.mul(&v));
                }
            }
        }
    }
    inst.nf(&out)
}

#[cfg(test)]
mod harpoon_tests {
    use super::*;

    #[test]
    fn harpoon_examples() {
        let inst = RestrictedInstance::build(2, 5, 1, 4).unwrap();
        let field = &inst.map.field;
        // eps acts as the identity
        let eps = BorelCharacter { omega_values: vec![field.one(), field.one()] };
        let a = Element::term(
            Word::from_letters(&[Letter::W(1, 1), Letter::E(1, 1)]),
            inst.one(),
        );
        assert_eq!(harpoon(&inst, &eps, &a, true), inst.nf(&a));
        assert_eq!(harpoon(&inst, &eps, &a, false), inst.nf(&a));
        // a character acts on a group-like by its value
        let delta = BorelCharacter {
            omega_values: vec![field.theta_pow(2), field.theta_pow(3)],
        };
        let wk = Element::term(Word::one(Letter::W(1, 1)), inst.one());
        let acted = harpoon(&inst, &delta, &wk, true);
        assert_eq!(acted, wk.scale(&field.theta_pow(2)));
        // delta -> e_k keeps e_k (the second leg contributes only through 1)
        let ek = Element::term(Word::one(Letter::E(1, 1)), inst.one());
        let acted = harpoon(&inst, &delta, &ek, true);
        assert_eq!(acted, ek);
        // e_k <- delta^{-1} scales by delta^{-1}(omega_k)
        let acted = harpoon(
            &inst,
            &BorelCharacter {
                omega_values: vec![field.theta_pow(-2), field.theta_pow(-3)],
            },
            &ek,
            false,
        );
        assert_eq!(acted, ek.scale(&field.theta_pow(-2)));
    }
}

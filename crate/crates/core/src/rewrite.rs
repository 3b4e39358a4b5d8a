//! The rewriting engine: oriented rule sets, normal-form reduction with
//! traces and step budgets, identity certification, the local-confluence
//! checker, and a degree-bounded brute-force ideal-membership oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeff::RatFun;
use crate::error::EngineError;
use crate::freealg::{monomial_cmp, Coeff, Element, Letter, Word};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// One oriented rewrite rule `lhs -> rhs`, tagged with the catalog source
/// it instantiates.
#[derive(Clone, Debug)]
pub struct RewriteRule<C: Coeff> {
    pub lhs: Word,
    pub rhs: Element<C>,
    pub tag: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleMode {
    Generator,
    Pbw,
}

/// An oriented, terminating rule set with deterministic lookup.
#[derive(Clone)]
pub struct RuleSet<C: Coeff> {
    pub n: u8,
    pub mode: RuleMode,
    rules: Vec<RewriteRule<C>>,
    /// rules indexed by first letter; candidates tried in priority order
    by_first: HashMap<Letter, Vec<usize>>,
}

impl<C: Coeff> RuleSet<C> {
    pub fn new(n: u8, mode: RuleMode) -> Self {
        RuleSet { n, mode, rules: Vec::new(), by_first: HashMap::new() }
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        &self.rules
    }

    pub fn push(&mut self, rule: RewriteRule<C>) {
        assert!(!rule.lhs.is_empty(), "empty lhs");
        let idx = self.rules.len();
        self.by_first.entry(rule.lhs.0[0]).or_default().push(idx);
        self.rules.push(rule);
    }

    /// Every rhs word must be strictly below the lhs in the monomial order.
    pub fn validate_orientation(&self) -> Result<(), EngineError> {
        for rule in &self.rules {
            for (w, _) in rule.rhs.terms() {
                if monomial_cmp(w, &rule.lhs, self.n) != std::cmp::Ordering::Less {
                    return Err(EngineError::Validation(format!(
                        "rule {} has non-decreasing rhs word",
                        rule.tag
                    )));
                }
            }
        }
        Ok(())
    }

    /// First applicable (position, rule) for a word, scanning left to right.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w.0[pos]) {
                for &ri in cands {
                    let lhs = &self.rules[ri].lhs;
                    if pos + lhs.len() <= w.len() && w.0[pos..pos + lhs.len()] == lhs.0[..] {
                        return Some((pos, ri));
                    }
                }
            }
        }
        None
    }

    /// Check whether any rule applies anywhere in the word.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Export in the text catalog format `source-tag: lhs -> rhs`.
    pub fn export_catalog(&self) -> String {
        let mut out = String::new();
        for r in &self.rules {
            out.push_str(&format!(
                "{}: {} -> {}\n",
                r.tag,
                crate::freealg::word_string(&r.lhs, self.n),
                element_string(&r.rhs, self.n)
            ));
        }
        out
    }
}

pub fn element_string<C: Coeff>(e: &Element<C>, n: u8) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (w, c) in e.terms() {
        parts.push(format!("({}) {}", c, crate::freealg::word_string(w, n)));
    }
    parts.join(" + ")
}

/// One recorded reduction step: which rule fired at which position of which
/// word.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    pub word: Word,
    pub pos: usize,
    pub tag: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "at {} in [{:?}]: {}", s.pos, s.word, s.tag)?;
        }
        Ok(())
    }
}

pub struct Reduction<C: Coeff> {
    pub element: Element<C>,
    pub steps: u64,
    pub trace: Option<ReductionTrace>,
}

/// Reduce an element to normal form. Deterministic: terms are processed in
/// storage order, redexes leftmost-first.
pub fn normal_form<C: Coeff>(
    x: &Element<C>,
    rules: &RuleSet<C>,
    budget: u64,
    want_trace: bool,
) -> Result<Reduction<C>, EngineError> {
    let mut result: Element<C> = Element::zero();
    let mut work: BTreeMap<Word, C> = BTreeMap::new();
    for (w, c) in x.terms() {
        work.insert(w.clone(), c.clone());
    }
    let mut steps = 0u64;
    let mut trace = if want_trace { Some(ReductionTrace::default()) } else { None };
    while let Some((w, c)) = work.pop_first() {
        if c.is_zero() {
            continue;
        }
        match rules.find_redex(&w) {
            None => result.add_term(w, c),
            Some((pos, ri)) => {
                steps += 1;
                if steps > budget {
                    return Err(EngineError::BudgetExhausted { budget });
                }
                if let Some(t) = trace.as_mut() {
                    t.steps.push(TraceStep { word: w.clone(), pos, tag: rules.rules[ri].tag.clone() });
                }
                let rule = &rules.rules[ri];
                let prefix = Word(w.0[..pos].to_vec());
                let suffix = Word(w.0[pos + rule.lhs.len()..].to_vec());
                for (rw, rc) in rule.rhs.terms() {
                    let nw = prefix.concat(rw).concat(&suffix);
                    let nc = c.mul_c(rc);
                    if nc.is_zero() {
                        continue;
                    }
                    match work.entry(nw) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(nc);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            let sum = o.get().add_c(&nc);
                            if sum.is_zero() {
                                o.remove();
                            } else {
                                *o.get_mut() = sum;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Reduction { element: result, steps, trace })
}

/// Replay a trace: apply exactly the recorded steps; the result must match a
/// fresh reduction.
pub fn replay_trace<C: Coeff>(
    x: &Element<C>,
    rules: &RuleSet<C>,
    trace: &ReductionTrace,
) -> Result<Element<C>, EngineError> {
    let mut cur: BTreeMap<Word, C> = BTreeMap::new();
    for (w, c) in x.terms() {
        cur.insert(w.clone(), c.clone());
    }
    for step in &trace.steps {
        let c = cur
            .remove(&step.word)
            .ok_or_else(|| EngineError::Validation("trace word not present".into()))?;
        let rule = rules
            .rules
            .iter()
            .find(|r| {
                r.tag == step.tag
                    && step.pos + r.lhs.len() <= step.word.len()
                    && step.word.0[step.pos..step.pos + r.lhs.len()] == r.lhs.0[..]
            })
            .ok_or_else(|| EngineError::Validation("trace rule not applicable".into()))?;
        let prefix = Word(step.word.0[..step.pos].to_vec());
        let suffix = Word(step.word.0[step.pos + rule.lhs.len()..].to_vec());
        for (rw, rc) in rule.rhs.terms() {
            let nw = prefix.concat(rw).concat(&suffix);
            let nc = c.mul_c(rc);
            if nc.is_zero() {
                continue;
            }
            match cur.entry(nw) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(nc);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get().add_c(&nc);
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
    }
    let mut out = Element::zero();
    for (w, c) in cur {
        out.add_term(w, c);
    }
    Ok(out)
}

/// Outcome of certifying `lhs = rhs` by reduction of the difference.
#[derive(Clone, Debug)]
pub enum Certification<C: Coeff> {
    Zero { steps: u64 },
    Counterexample { residue: Element<C>, steps: u64 },
    Inconclusive { budget: u64 },
}

impl<C: Coeff> Certification<C> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Certification::Zero { .. })
    }
}

pub fn certify_identity<C: Coeff>(
    lhs: &Element<C>,
    rhs: &Element<C>,
    rules: &RuleSet<C>,
    budget: u64,
) -> Certification<C> {
    let diff = lhs.sub(rhs);
    match normal_form(&diff, rules, budget, false) {
        Ok(red) => {
            if red.element.is_zero() {
                Certification::Zero { steps: red.steps }
            } else {
                Certification::Counterexample { residue: red.element, steps: red.steps }
            }
        }
        Err(EngineError::BudgetExhausted { budget }) => Certification::Inconclusive { budget },
        Err(e) => panic!("unexpected reduction failure: {e}"),
    }
}

/// An unresolved critical pair found by the confluence scan.
#[derive(Clone, Debug)]
pub struct Overlap {
    pub word: Word,
    pub tag_left: String,
    pub tag_right: String,
}

/// Check local confluence on overlap words up to `max_len` letters. For each
/// pair of rules sharing letters, both one-step descendants of the overlap
/// word must reduce to a common normal form.
pub fn local_confluence<C: Coeff>(
    rules: &RuleSet<C>,
    max_len: usize,
    budget: u64,
) -> Result<Vec<Overlap>, EngineError> {
    let mut bad = Vec::new();
    let all = rules.rules();
    for (i, r1) in all.iter().enumerate() {
        for r2 in all.iter() {
            // overlap: a proper suffix of r1.lhs equals a proper prefix of r2.lhs
            let l1 = &r1.lhs.0;
            let l2 = &r2.lhs.0;
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let mut w = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() > max_len {
                        continue;
                    }
                    check_overlap(rules, &Word(w), i, r2, &mut bad, budget)?;
                }
            }
            // containment: r2.lhs inside r1.lhs
            if l2.len() < l1.len() && l1.len() <= max_len {
                for start in 0..=(l1.len() - l2.len()) {
                    if &l1[start..start + l2.len()] == l2.as_slice() {
                        check_overlap(rules, &r1.lhs, i, r2, &mut bad, budget)?;
                    }
                }
            }
        }
    }
    Ok(bad)
}

fn check_overlap<C: Coeff>(
    rules: &RuleSet<C>,
    w: &Word,
    left_idx: usize,
    right: &RewriteRule<C>,
    bad: &mut Vec<Overlap>,
    budget: u64,
) -> Result<(), EngineError> {
    let left = &rules.rules()[left_idx];
    // descendant via the left rule applied at its position (prefix position 0
    // when the overlap extends r1, or wherever lhs occurs)
    let apply = |rule: &RewriteRule<C>| -> Option<Element<C>> {
        let l = &rule.lhs.0;
        for pos in 0..w.len() {
            if pos + l.len() <= w.len() && w.0[pos..pos + l.len()] == l[..] {
                let prefix = Word(w.0[..pos].to_vec());
                let suffix = Word(w.0[pos + l.len()..].to_vec());
                return Some(rule.rhs.mul_word_left(&prefix).mul_word_right(&suffix));
            }
        }
        None
    };
    let (Some(d1), Some(d2)) = (apply(left), apply(right)) else {
        return Ok(());
    };
    let n1 = normal_form(&d1, rules, budget, false)?;
    let n2 = normal_form(&d2, rules, budget, false)?;
    if n1.element != n2.element {
        bad.push(Overlap {
            word: w.clone(),
            tag_left: left.tag.clone(),
            tag_right: right.tag.clone(),
        });
    }
    Ok(())
}

// ---- degree-bounded ideal membership over Q(r,s) ---------------------------

/// Row-reduce the degree component of the two-sided ideal generated by
/// `relations` (elements over the e-generators) and test membership of `x`.
///
/// `x` must be homogeneous over the e-alphabet. Practical for rank <= 3 and
/// total degree <= 8.
pub fn ideal_membership_oracle(
    x: &Element<RatFun>,
    relations: &[Element<RatFun>],
    n: u8,
    degree_bound: usize,
) -> Result<bool, EngineError> {
    // degree = multiset of generator letters
    let mut degree: Option<Vec<usize>> = None;
    for (w, _) in x.terms() {
        let mut d = vec![0usize; n as usize];
        for l in &w.0 {
            match l {
                Letter::E(i, j) if i == j => d[*i as usize - 1] += 1,
                _ => {
                    return Err(EngineError::Unsupported(
                        "oracle inputs must be words over the e-generators".into(),
                    ))
                }
            }
        }
        match &degree {
            None => degree = Some(d),
            Some(g) if *g == d => {}
            Some(_) => {
                return Err(EngineError::Unsupported("oracle input must be homogeneous".into()))
            }
        }
    }
    let Some(degree) = degree else {
        return Ok(true); // the zero element
    };
    let total: usize = degree.iter().sum();
    if total > degree_bound {
        return Err(EngineError::DegreeTooLarge { got: total, bound: degree_bound });
    }

    // enumerate all words of this multidegree
    let words = enumerate_words(&degree);
    let index: HashMap<Word, usize> = words.iter().cloned().zip(0..).collect();

    // rows: u * rho * v for every relation and every split of the remaining degree
    let mut rows: Vec<Vec<(usize, RatFun)>> = Vec::new();
    for rho in relations {
        let mut rdeg = vec![0usize; n as usize];
        let mut ok = true;
        let mut first = true;
        for (w, _) in rho.terms() {
            let mut d = vec![0usize; n as usize];
            for l in &w.0 {
                match l {
                    Letter::E(i, j) if i == j => d[*i as usize - 1] += 1,
                    _ => ok = false,
                }
            }
            if first {
                rdeg = d;
                first = false;
            } else if rdeg != d {
                ok = false;
            }
        }
        if !ok || first {
            continue;
        }
        if (0..n as usize).any(|k| rdeg[k] > degree[k]) {
            continue;
        }
        let remaining: Vec<usize> = (0..n as usize).map(|k| degree[k] - rdeg[k]).collect();
        // all splits of remaining into (left, right)
        for left in enumerate_sub_multisets(&remaining) {
            let right: Vec<usize> = (0..n as usize).map(|k| remaining[k] - left[k]).collect();
            for u in enumerate_words(&left) {
                for v in enumerate_words(&right) {
                    let mut row: Vec<(usize, RatFun)> = Vec::new();
                    for (w, c) in rho.terms() {
                        let full = u.concat(w).concat(&v);
                        row.push((index[&full], c.clone()));
                    }
                    rows.push(row);
                }
            }
        }
    }

    // sparse Gaussian elimination over Q(r,s)
    let dim = words.len();
    let mut pivots: Vec<Option<BTreeMap<usize, RatFun>>> = vec![None; dim];
    let reduce_row = |row: &mut BTreeMap<usize, RatFun>, pivots: &Vec<Option<BTreeMap<usize, RatFun>>>| {
        loop {
            let Some((&lead, _)) = row.iter().next() else { return };
            match &pivots[lead] {
                None => return,
                Some(p) => {
                    let factor = row[&lead].clone();
                    for (col, val) in p {
                        let delta = factor.mul(val).neg();
                        let entry = row.entry(*col).or_insert_with(RatFun::zero);
                        *entry = entry.add(&delta);
                        if entry.is_zero() {
                            row.remove(col);
                        }
                    }
                }
            }
        }
    };
    for row in rows {
        let mut m: BTreeMap<usize, RatFun> = BTreeMap::new();
        for (c, v) in row {
            let entry = m.entry(c).or_insert_with(RatFun::zero);
            *entry = entry.add(&v);
            if entry.is_zero() {
                m.remove(&c);
            }
        }
        reduce_row(&mut m, &pivots);
        if let Some((&lead, _)) = m.iter().next() {
            let inv = m[&lead].inv().expect("nonzero pivot");
            let normalized: BTreeMap<usize, RatFun> =
                m.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
            pivots[lead] = Some(normalized);
        }
    }
    let mut xv: BTreeMap<usize, RatFun> = BTreeMap::new();
    for (w, c) in x.terms() {
        let entry = xv.entry(index[w]).or_insert_with(RatFun::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            xv.remove(&index[w]);
        }
    }
    reduce_row(&mut xv, &pivots);
    Ok(xv.is_empty())
}

/// All words with the given multiset of e-generators (index k appears
/// multiplicity[k] times).
fn enumerate_words(multiplicity: &[usize]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts = multiplicity.to_vec();
    let mut cur: Vec<Letter> = Vec::new();
    fn go(counts: &mut Vec<usize>, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if counts.iter().all(|c| *c == 0) {
            out.push(Word(cur.clone()));
            return;
        }
        for k in 0..counts.len() {
            if counts[k] > 0 {
                counts[k] -= 1;
                cur.push(Letter::E(k as u8 + 1, k as u8 + 1));
                go(counts, cur, out);
                cur.pop();
                counts[k] += 1;
            }
        }
    }
    go(&mut counts, &mut cur, &mut out);
    out
}

fn enumerate_sub_multisets(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &b in bound {
        let mut next = Vec::new();
        for prefix in &out {
            for v in 0..=b {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_ratfun;

    fn e(i: u8) -> Letter {
        Letter::E(i, i)
    }

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    /// Tiny toy rule set: e2 e1 -> q e1 e2 (a quantum plane).
    fn toy_rules(q: &str) -> RuleSet<RatFun> {
        let mut rs = RuleSet::new(2, RuleMode::Generator);
        rs.push(RewriteRule {
            lhs: Word::from_letters(&[e(2), e(1)]),
            rhs: Element::term(Word::from_letters(&[e(1), e(2)]), rf(q)),
            tag: "toy".into(),
        });
        rs
    }

    #[test]
    fn toy_reduction_and_trace() {
        let rs = toy_rules("r");
        let x = Element::term(Word::from_letters(&[e(2), e(2), e(1)]), RatFun::one());
        let red = normal_form(&x, &rs, 100, true).unwrap();
        assert_eq!(red.steps, 2);
        let expect = Element::term(Word::from_letters(&[e(1), e(2), e(2)]), rf("r^2"));
        assert_eq!(red.element, expect);
        let replayed = replay_trace(&x, &rs, red.trace.as_ref().unwrap()).unwrap();
        assert_eq!(replayed, expect);
    }

    #[test]
    fn budget_exhaustion() {
        let rs = toy_rules("r");
        let x = Element::term(Word(vec![e(2), e(2), e(2), e(1), e(1)]), RatFun::one());
        assert!(matches!(
            normal_form(&x, &rs, 2, false),
            Err(EngineError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn orientation_validation() {
        let mut rs = RuleSet::new(2, RuleMode::Generator);
        rs.push(RewriteRule {
            lhs: Word::from_letters(&[e(1), e(2)]),
            rhs: Element::term(Word::from_letters(&[e(2), e(1)]), RatFun::one()),
            tag: "bad".into(),
        });
        assert!(rs.validate_orientation().is_err());
        let good = toy_rules("r");
        assert!(good.validate_orientation().is_ok());
    }

    #[test]
    fn confluence_of_toy() {
        let rs = toy_rules("r");
        let bad = local_confluence(&rs, 3, 1000).unwrap();
        assert!(bad.is_empty());
    }

    #[test]
    fn oracle_detects_serre_membership() {
        // relations of the quantum plane: e2 e1 - q e1 e2
        let rel = Element::term(Word::from_letters(&[e(2), e(1)]), RatFun::one())
            .add(&Element::term(Word::from_letters(&[e(1), e(2)]), rf("-r")));
        // e2 e2 e1 - r^2 e1 e2 e2 is in the ideal
        let x = Element::term(Word(vec![e(2), e(2), e(1)]), RatFun::one())
            .add(&Element::term(Word(vec![e(1), e(2), e(2)]), rf("-r^2")));
        assert!(ideal_membership_oracle(&x, &[rel.clone()], 2, 8).unwrap());
        // e1 e2 - e2 e1 is not
        let y = Element::term(Word(vec![e(1), e(2)]), RatFun::one())
            .add(&Element::term(Word(vec![e(2), e(1)]), RatFun::one().neg()));
        assert!(!ideal_membership_oracle(&y, &[rel], 2, 8).unwrap());
    }
}

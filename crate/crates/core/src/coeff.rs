//! Exact coefficient arithmetic: Laurent polynomials and rational functions
//! in the commuting parameters `r`, `s` over the rationals.
//!
//! Every structure constant of the algebra lives in the fraction field
//! `Q(r,s)`. All arithmetic is exact; canonical forms are unique so that
//! zero-testing is a structural comparison.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoeffError;

pub type Rat = BigRational;

pub fn rat_int(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// Exponent pair `(a, b)` for the monomial `r^a s^b`.
pub type Exp = (i64, i64);

/// Degree-lexicographic order with `r > s`: compare total degree, then the
/// `r`-exponent. Used to pick leading terms for canonical forms and display.
fn deglex(x: &Exp, y: &Exp) -> Ordering {
    (x.0 + x.1).cmp(&(y.0 + y.1)).then(x.0.cmp(&y.0))
}

/// A Laurent polynomial in `r, s` over `Q`, stored sparsely.
///
/// Invariant: no stored coefficient is zero, so equal polynomials have
/// identical term maps.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0, 0)
    }

    pub fn monomial(c: Rat, a: i64, b: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        LaurentPoly { terms }
    }

    pub fn int(k: i64) -> Self {
        Self::monomial(rat_int(k), 0, 0)
    }

    /// The variable `r`.
    pub fn r() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, e: Exp, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    pub fn mul_mono(&self, a: i64, b: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| ((e.0 + a, e.1 + b), c.clone())).collect() }
    }

    /// Swap r and s in every monomial (the coefficient action of `tau`).
    pub fn swap_rs(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Minimal exponents over all terms; `(0, 0)` for the zero polynomial.
    pub fn min_exp(&self) -> Exp {
        let mut ma = i64::MAX;
        let mut mb = i64::MAX;
        for (a, b) in self.terms.keys() {
            ma = ma.min(*a);
            mb = mb.min(*b);
        }
        if ma == i64::MAX {
            (0, 0)
        } else {
            (ma, mb)
        }
    }

    /// Leading term under deg-lex with `r > s`.
    pub fn leading(&self) -> Option<(&Exp, &Rat)> {
        self.terms.iter().max_by(|x, y| deglex(x.0, y.0))
    }

    /// True if all exponents are nonnegative.
    pub fn is_poly(&self) -> bool {
        self.terms.keys().all(|(a, b)| *a >= 0 && *b >= 0)
    }

    pub fn eval_int(&self, rv: &Rat, sv: &Rat) -> Rat {
        // Only valid when exponents are nonnegative; used by tests.
        let mut acc = Rat::zero();
        for ((a, b), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*a {
                t *= rv;
            }
            for _ in 0..*b {
                t *= sv;
            }
            acc += t;
        }
        acc
    }
}

// ---- polynomial gcd over Q[r,s] -------------------------------------------
//
// The layered view: a polynomial in s whose coefficients are dense univariate
// polynomials in r. Gcds come from a primitive PRS in (Q[r])[s] together with
// the gcd of contents in Q[r].

type RPoly = Vec<Rat>; // dense in r, rpoly[k] = coeff of r^k

fn rp_trim(p: &mut RPoly) {
    while let Some(c) = p.last() {
        if c.is_zero() {
            p.pop();
        } else {
            break;
        }
    }
}

fn rp_is_zero(p: &RPoly) -> bool {
    p.is_empty()
}

fn rp_mul(a: &RPoly, b: &RPoly) -> RPoly {
    if rp_is_zero(a) || rp_is_zero(b) {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rp_trim(&mut out);
    out
}

fn rp_sub(a: &RPoly, b: &RPoly) -> RPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    rp_trim(&mut out);
    out
}

fn rp_scale(a: &RPoly, c: &Rat) -> RPoly {
    if c.is_zero() {
        return vec![];
    }
    a.iter().map(|x| x * c).collect()
}

/// Division in Q[r]; returns (quotient, remainder).
fn rp_divrem(a: &RPoly, b: &RPoly) -> (RPoly, RPoly) {
    assert!(!rp_is_zero(b), "division by zero in Q[r]");
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quo = vec![Rat::zero(); a.len().saturating_sub(db)];
    while !rp_is_zero(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / lb;
        let k = dr - db;
        quo[k] = c.clone();
        let mut shifted = vec![Rat::zero(); k];
        shifted.extend(rp_scale(b, &c));
        rem = rp_sub(&rem, &shifted);
    }
    rp_trim(&mut quo);
    (quo, rem)
}

fn rp_gcd(a: &RPoly, b: &RPoly) -> RPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    rp_trim(&mut x);
    rp_trim(&mut y);
    while !rp_is_zero(&y) {
        let (_, r) = rp_divrem(&x, &y);
        x = y;
        y = r;
    }
    if rp_is_zero(&x) {
        return x;
    }
    // monic normalization
    let lead = x.last().unwrap().clone();
    rp_scale(&x, &lead.recip())
}

type SRPoly = BTreeMap<i64, RPoly>; // key: s-degree

fn lp_to_sr(p: &LaurentPoly) -> SRPoly {
    assert!(p.is_poly());
    let mut out: SRPoly = BTreeMap::new();
    for ((a, b), c) in &p.terms {
        let rp = out.entry(*b).or_default();
        let idx = *a as usize;
        if rp.len() <= idx {
            rp.resize(idx + 1, Rat::zero());
        }
        rp[idx] += c;
    }
    for rp in out.values_mut() {
        rp_trim(rp);
    }
    out.retain(|_, rp| !rp_is_zero(rp));
    out
}

fn sr_to_lp(p: &SRPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (b, rp) in p {
        for (a, c) in rp.iter().enumerate() {
            out.add_term((a as i64, *b), c);
        }
    }
    out
}

fn sr_degree(p: &SRPoly) -> i64 {
    *p.keys().next_back().unwrap_or(&-1)
}

fn sr_content(p: &SRPoly) -> RPoly {
    let mut g: RPoly = vec![];
    for rp in p.values() {
        g = rp_gcd(&g, rp);
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn sr_div_content(p: &SRPoly, c: &RPoly) -> SRPoly {
    let mut out = SRPoly::new();
    for (b, rp) in p {
        let (q, rem) = {
            // exact division of every s-coefficient by the content
            let mut quo: RPoly = vec![];
            let mut rem = rp.clone();
            let db = c.len() - 1;
            let lb = &c[db];
            while !rp_is_zero(&rem) && rem.len() - 1 >= db {
                let dr = rem.len() - 1;
                let k = dr - db;
                let coef = &rem[dr] / lb;
                if quo.len() <= k {
                    quo.resize(k + 1, Rat::zero());
                }
                quo[k] = coef.clone();
                let mut shifted = vec![Rat::zero(); k];
                shifted.extend(rp_scale(c, &coef));
                rem = rp_sub(&rem, &shifted);
            }
            (quo, rem)
        };
        assert!(rp_is_zero(&rem), "content division must be exact");
        out.insert(*b, q);
    }
    out
}

fn sr_mul_rp(p: &SRPoly, c: &RPoly) -> SRPoly {
    p.iter().map(|(b, rp)| (*b, rp_mul(rp, c))).collect()
}

/// Pseudo-remainder of `a` by `b` in (Q[r])[s].
fn sr_prem(a: &SRPoly, b: &SRPoly) -> SRPoly {
    let db = sr_degree(b);
    let lb = b.get(&db).unwrap().clone();
    let mut rem = a.clone();
    loop {
        let dr = sr_degree(&rem);
        if dr < db || rem.is_empty() {
            return rem;
        }
        let lr = rem.get(&dr).unwrap().clone();
        // lb * rem - lr * s^(dr-db) * b
        let t1 = sr_mul_rp(&rem, &lb);
        let mut t2 = SRPoly::new();
        for (k, rp) in b {
            t2.insert(k + dr - db, rp_mul(rp, &lr));
        }
        let mut out = SRPoly::new();
        for k in t1.keys().chain(t2.keys()) {
            if out.contains_key(k) {
                continue;
            }
            let x = t1.get(k).cloned().unwrap_or_default();
            let y = t2.get(k).cloned().unwrap_or_default();
            let d = rp_sub(&x, &y);
            if !rp_is_zero(&d) {
                out.insert(*k, d);
            }
        }
        rem = out;
    }
}

/// Gcd of two polynomials (nonnegative exponents) over Q[r,s].
/// The result is normalized to leading coefficient 1 under deg-lex.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_lead(b);
    }
    if b.is_zero() {
        return normalize_lead(a);
    }
    let sa = lp_to_sr(a);
    let sb = lp_to_sr(b);
    let ca = sr_content(&sa);
    let cb = sr_content(&sb);
    let cg = rp_gcd(&ca, &cb);
    let mut x = sr_div_content(&sa, &ca);
    let mut y = sr_div_content(&sb, &cb);
    if sr_degree(&x) < sr_degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = sr_prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let c = sr_content(&r);
            sr_div_content(&r, &c)
        };
    }
    let gc = sr_content(&x);
    let prim = sr_div_content(&x, &gc);
    let g = sr_to_lp(&sr_mul_rp(&prim, &cg));
    normalize_lead(&g)
}

fn normalize_lead(p: &LaurentPoly) -> LaurentPoly {
    match p.leading() {
        None => p.clone(),
        Some((_, c)) => p.scale(&c.recip()),
    }
}

/// Exact division `a / b` over the Laurent ring; `None` if not exact.
pub fn laurent_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if b.is_zero() {
        return None;
    }
    let (ba, bb) = b.min_exp();
    let bp = b.mul_mono(-ba, -bb);
    let (aa, ab) = a.min_exp();
    let ap = a.mul_mono(-aa, -ab);
    // long division in the s-layered view
    let mut rem = lp_to_sr(&ap);
    let den = lp_to_sr(&bp);
    let dd = sr_degree(&den);
    let dl = den.get(&dd).unwrap().clone();
    let mut quo = SRPoly::new();
    while !rem.is_empty() {
        let dr = sr_degree(&rem);
        if dr < dd {
            return None;
        }
        let lr = rem.get(&dr).unwrap().clone();
        let (q, r) = rp_divrem(&lr, &dl);
        if !rp_is_zero(&r) {
            return None;
        }
        quo.insert(dr - dd, q.clone());
        let mut sub = SRPoly::new();
        for (k, rp) in &den {
            sub.insert(k + dr - dd, rp_mul(rp, &q));
        }
        let mut out = SRPoly::new();
        for k in rem.keys().chain(sub.keys()) {
            if out.contains_key(k) {
                continue;
            }
            let x = rem.get(k).cloned().unwrap_or_default();
            let y = sub.get(k).cloned().unwrap_or_default();
            let d = rp_sub(&x, &y);
            if !rp_is_zero(&d) {
                out.insert(*k, d);
            }
        }
        rem = out;
    }
    Some(sr_to_lp(&quo).mul_mono(aa - ba, ab - bb))
}

// ---- rational functions ----------------------------------------------------

/// An element of Q(r,s) in canonical form.
///
/// The denominator is an ordinary polynomial (no negative exponents, not
/// divisible by `r` or `s`), monic under deg-lex with `r > s`, and coprime to
/// the polynomial part of the numerator. The numerator may be Laurent.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFun { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // shift the denominator to an ordinary polynomial with no monomial factor
        let (da, db) = den.min_exp();
        let den_p = den.mul_mono(-da, -db);
        let num_sh = num.mul_mono(-da, -db);
        // split the numerator into monomial * polynomial
        let (na, nb) = num_sh.min_exp();
        let num_p = num_sh.mul_mono(-na, -nb);
        let g = poly_gcd(&num_p, &den_p);
        let (num_red, den_red) = if g.num_terms() == 1 && g.leading().map(|(e, _)| *e) == Some((0, 0)) {
            (num_p, den_p)
        } else {
            (
                laurent_div_exact(&num_p, &g).expect("gcd divides numerator"),
                laurent_div_exact(&den_p, &g).expect("gcd divides denominator"),
            )
        };
        let lead = den_red.leading().expect("nonzero denominator").1.clone();
        RatFun {
            num: num_red.mul_mono(na, nb).scale(&lead.recip()),
            den: den_red.scale(&lead.recip()),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFun { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn int(k: i64) -> Self {
        Self::from_poly(LaurentPoly::int(k))
    }

    pub fn monomial(c: Rat, a: i64, b: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, a, b))
    }

    /// r^a s^b
    pub fn mono(a: i64, b: i64) -> Self {
        Self::monomial(Rat::one(), a, b)
    }

    pub fn r() -> Self {
        Self::mono(1, 0)
    }

    pub fn s() -> Self {
        Self::mono(0, 1)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True if the canonical form has trivial denominator.
    pub fn is_laurent(&self) -> bool {
        self.den == LaurentPoly::one()
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        Self::normalized(num, den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of nonzero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::int(k))
    }

    /// tau conjugation: swap r and s.
    pub fn swap_rs(&self) -> Self {
        Self::normalized(self.num.swap_rs(), self.den.swap_rs())
    }

    /// Cross-multiplication equality; must agree with structural equality.
    pub fn eq_cross(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending total degree, r before s
        let mut es: Vec<(&Exp, &Rat)> = self.terms.iter().collect();
        es.sort_by(|x, y| deglex(y.0, x.0));
        for (i, ((a, b), c)) in es.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (*a == 0 && *b == 0) {
                parts.push(format!("{}", abs));
            }
            if *a != 0 {
                parts.push(if *a == 1 { "r".into() } else { format!("r^{}", a) });
            }
            if *b != 0 {
                parts.push(if *b == 1 { "s".into() } else { format!("s^{}", b) });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            if self.num.num_terms() > 1 && f.alternate() {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---- (r,s)-integers, factorials, binomials, alpha/beta ---------------------

/// Index class: the long roots use `(r^2, s^2)`, the short root uses `(r, s)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexClass {
    Long,
    Short,
}

impl IndexClass {
    pub fn r_pow(&self) -> i64 {
        match self {
            IndexClass::Long => 2,
            IndexClass::Short => 1,
        }
    }
}

/// `[c]_i = (r_i^c - s_i^c)/(r_i - s_i)`, expanded as the geometric sum so
/// the result is visibly a polynomial.
pub fn rs_integer(c: u32, cls: IndexClass) -> RatFun {
    let k = cls.r_pow();
    let mut p = LaurentPoly::zero();
    for j in 0..c as i64 {
        p.add_term((k * (c as i64 - 1 - j), k * j), &Rat::one());
    }
    RatFun::from_poly(p)
}

pub fn rs_factorial(c: u32, cls: IndexClass) -> RatFun {
    let mut acc = RatFun::one();
    for j in 1..=c {
        acc = acc.mul(&rs_integer(j, cls));
    }
    acc
}

/// `[c over d]_i`; errors if `d > c`.
pub fn rs_binomial(c: u32, d: u32, cls: IndexClass) -> Result<RatFun, CoeffError> {
    if d > c {
        return Err(CoeffError::BadBinomial { c, d });
    }
    let v = rs_factorial(c, cls)
        .div(&rs_factorial(d, cls))?
        .div(&rs_factorial(c - d, cls))?;
    debug_assert!(v.is_laurent(), "binomial must reduce to a polynomial");
    Ok(v)
}

/// `beta_m = (r^m - s^m)/(r - s)` as a polynomial.
pub fn beta_m(m: u32) -> RatFun {
    rs_integer(m, IndexClass::Short)
}

/// `alpha_m = (r^m - s^m)(r^{m-1} - s^{m-1}) / ((r - s)(r^2 - s^2))`.
pub fn alpha_m(m: u32) -> RatFun {
    if m == 0 {
        return RatFun::zero();
    }
    let num = beta_m(m).mul(&beta_m(m - 1));
    let den = RatFun::r().add(&RatFun::s());
    let v = num.div(&den).expect("r+s is nonzero");
    debug_assert!(v.is_laurent(), "alpha_m must reduce to a polynomial");
    v
}

/// Memoizing table of (r,s)-integers, factorials, binomials and alpha/beta.
#[derive(Default)]
pub struct QIntegerTable {
    ints: std::collections::HashMap<(u32, bool), RatFun>,
    facts: std::collections::HashMap<(u32, bool), RatFun>,
    binoms: std::collections::HashMap<(u32, u32, bool), RatFun>,
    alphas: std::collections::HashMap<u32, RatFun>,
    betas: std::collections::HashMap<u32, RatFun>,
}

impl QIntegerTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(&mut self, c: u32, cls: IndexClass) -> RatFun {
        let key = (c, cls == IndexClass::Short);
        self.ints.entry(key).or_insert_with(|| rs_integer(c, cls)).clone()
    }

    pub fn fact(&mut self, c: u32, cls: IndexClass) -> RatFun {
        let key = (c, cls == IndexClass::Short);
        self.facts.entry(key).or_insert_with(|| rs_factorial(c, cls)).clone()
    }

    pub fn binom(&mut self, c: u32, d: u32, cls: IndexClass) -> RatFun {
        let key = (c, d, cls == IndexClass::Short);
        self.binoms
            .entry(key)
            .or_insert_with(|| rs_binomial(c, d, cls).expect("d <= c"))
            .clone()
    }

    pub fn alpha(&mut self, m: u32) -> RatFun {
        self.alphas.entry(m).or_insert_with(|| alpha_m(m)).clone()
    }

    pub fn beta(&mut self, m: u32) -> RatFun {
        self.betas.entry(m).or_insert_with(|| beta_m(m)).clone()
    }
}

// ---- textual form -----------------------------------------------------------

/// Parse the textual coefficient form: integer-coefficient Laurent monomials
/// as `c*r^a*s^b`, sums with `+`/`-`, fractions as `(num)/(den)`.
pub fn parse_ratfun(input: &str) -> Result<RatFun, CoeffError> {
    let mut p = CoeffParser { s: input.as_bytes(), pos: 0 };
    let v = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(CoeffError::Parse { pos: p.pos, msg: "trailing input".into() });
    }
    Ok(v)
}

struct CoeffParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> CoeffParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s.get(self.pos).map(|b| *b as char)
    }

    fn parse_expr(&mut self) -> Result<RatFun, CoeffError> {
        let mut acc = RatFun::zero();
        let mut sign = 1i64;
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let term = self.parse_term()?;
            acc = acc.add(&term.scale_int(sign));
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<RatFun, CoeffError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f);
                }
                Some('/') => {
                    self.pos += 1;
                    let f = self.parse_factor()?;
                    acc = acc.div(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<RatFun, CoeffError> {
        let c = self.peek().ok_or(CoeffError::Parse { pos: self.pos, msg: "unexpected end".into() })?;
        let base = match c {
            '(' => {
                self.pos += 1;
                let v = self.parse_expr()?;
                if self.peek() != Some(')') {
                    return Err(CoeffError::Parse { pos: self.pos, msg: "expected )".into() });
                }
                self.pos += 1;
                v
            }
            'r' => {
                self.pos += 1;
                RatFun::r()
            }
            's' => {
                self.pos += 1;
                RatFun::s()
            }
            d if d.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let k: i64 = text.parse().map_err(|_| CoeffError::Parse {
                    pos: start,
                    msg: "bad integer".into(),
                })?;
                RatFun::int(k)
            }
            other => {
                return Err(CoeffError::Parse {
                    pos: self.pos,
                    msg: format!("unexpected character {:?}", other),
                })
            }
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let mut sign = 1i64;
            if self.peek() == Some('-') {
                self.pos += 1;
                sign = -1;
            }
            let start = self.pos;
            while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(CoeffError::Parse { pos: self.pos, msg: "expected exponent".into() });
            }
            let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
            let k: i64 = text.parse().map_err(|_| CoeffError::Parse {
                pos: start,
                msg: "bad exponent".into(),
            })?;
            return Ok(base.pow(sign * k));
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn normalize_cancellation() {
        // (r-s)/(r-s) -> 1
        let x = RatFun::new(
            LaurentPoly::r().sub(&LaurentPoly::s()),
            LaurentPoly::r().sub(&LaurentPoly::s()),
        )
        .unwrap();
        assert!(x.is_one());
    }

    #[test]
    fn normalize_additive_inverse() {
        // 1/(s-r) + 1/(r-s) -> 0
        let a = RatFun::new(LaurentPoly::one(), LaurentPoly::s().sub(&LaurentPoly::r())).unwrap();
        let b = RatFun::new(LaurentPoly::one(), LaurentPoly::r().sub(&LaurentPoly::s())).unwrap();
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn normalize_exact_division() {
        // (r^2-s^2)/(r-s) -> r+s  (via the independent division oracle)
        let num = LaurentPoly::r().pow(2).sub(&LaurentPoly::s().pow(2));
        let den = LaurentPoly::r().sub(&LaurentPoly::s());
        let expect = laurent_div_exact(&num, &den).unwrap();
        assert_eq!(expect, LaurentPoly::r().add(&LaurentPoly::s()));
        let x = RatFun::new(num, den).unwrap();
        assert_eq!(x, RatFun::from_poly(expect));
    }

    #[test]
    fn zero_denominator_is_error() {
        assert!(RatFun::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn idempotent_normalization() {
        let x = rf("(r^2-s^2)/(r^3-s^3)");
        let y = RatFun::new(x.num().clone(), x.den().clone()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn rs_integer_examples() {
        assert!(rs_integer(0, IndexClass::Long).is_zero());
        assert!(rs_integer(1, IndexClass::Long).is_one());
        // [2]_n = r + s
        assert_eq!(rs_integer(2, IndexClass::Short), rf("r+s"));
        // [2]_{i<n} = r^2 + s^2
        assert_eq!(rs_integer(2, IndexClass::Long), rf("r^2+s^2"));
    }

    #[test]
    fn rs_binomial_examples() {
        for c in 0..6 {
            assert!(rs_binomial(c, 0, IndexClass::Long).unwrap().is_one());
        }
        assert_eq!(rs_binomial(2, 1, IndexClass::Short).unwrap(), rf("r+s"));
        for c in 0..7u32 {
            for d in 0..=c {
                let a = rs_binomial(c, d, IndexClass::Long).unwrap();
                let b = rs_binomial(c, c - d, IndexClass::Long).unwrap();
                assert_eq!(a, b);
                assert!(a.is_laurent());
            }
        }
        assert!(rs_binomial(1, 2, IndexClass::Short).is_err());
    }

    #[test]
    fn alpha_beta_examples() {
        assert!(beta_m(1).is_one());
        assert!(alpha_m(2).is_one());
        // exact recurrences for m <= 8
        let r = RatFun::r();
        let s = RatFun::s();
        for m in 1..=8u32 {
            let lhs_a = alpha_m(m + 1);
            let rhs_a = s.pow(2).mul(&alpha_m(m)).add(&r.pow(m as i64 - 1).mul(&beta_m(m)));
            assert_eq!(lhs_a, rhs_a, "alpha recurrence at m={m}");
            let lhs_b = beta_m(m + 1);
            let rhs_b = s.mul(&beta_m(m)).add(&r.pow(m as i64));
            assert_eq!(lhs_b, rhs_b, "beta recurrence at m={m}");
        }
    }

    #[test]
    fn display_roundtrip() {
        for text in ["r^2*s^-2", "(r^2 - s^2)/(r^3 - s^3)", "-3*r + 2*s^-1", "0", "1"] {
            let x = rf(text);
            let y = rf(&format!("{}", x));
            assert_eq!(x, y, "roundtrip through display failed for {text}");
        }
    }

    #[test]
    fn cross_multiplication_agrees() {
        let a = rf("(r^4-s^4)/(r-s)");
        let b = rf("(r+s)*(r^2+s^2)");
        assert_eq!(a, b);
        assert!(a.eq_cross(&b));
    }
}

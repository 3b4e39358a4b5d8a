//! Sparse noncommutative linear algebra: words over the typed alphabet of
//! generators and root-vector letters, elements as sparse linear
//! combinations, and elements of the tensor square.
//!
//! Root letters use the flattened index scheme `(i, J)` with
//! `1 <= i <= n` and `i <= J <= 2n - i`: `J < n` names the root
//! `eps_i - eps_{J+1}`, `J = n` names `eps_i`, and `J > n` names
//! `eps_i + eps_j` for `j = 2n - J + 1` (written `E(i,j')`). The simple
//! generators are `e_i = E(i,i)` and `f_i = F(i,i)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::EngineError;

/// One letter of the alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Letter {
    /// Negative root vector F_{i,J}; F(i,i) is the generator f_i.
    F(u8, u8),
    /// omega_i^{sign}, sign in {+1, -1}.
    W(u8, i8),
    /// omega'_i^{sign}.
    Wp(u8, i8),
    /// Positive root vector E_{i,J}; E(i,i) is the generator e_i.
    E(u8, u8),
    /// Extended positive symbols with indices outside the root range; these
    /// only appear inside closed coproduct formulas and are expanded before
    /// any reduction.
    Ext(u8, u8),
}

impl Letter {
    /// Rank key realizing the canonical normal-form order: F letters first in
    /// descending `(i, J)`, then omegas, then omega-primes, then E letters in
    /// ascending `(i, J)`.
    fn rank_key(&self) -> (u8, i32, i32, i32) {
        match self {
            Letter::F(i, j) => (0, -(*i as i32), -(*j as i32), 0),
            Letter::W(i, sg) => (1, *i as i32, if *sg > 0 { 0 } else { 1 }, 0),
            Letter::Wp(i, sg) => (2, *i as i32, if *sg > 0 { 0 } else { 1 }, 0),
            Letter::E(i, j) => (3, *i as i32, *j as i32, 0),
            Letter::Ext(a, b) => (4, *a as i32, *b as i32, 0),
        }
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, Letter::W(..) | Letter::Wp(..))
    }

    pub fn is_e(&self) -> bool {
        matches!(self, Letter::E(..))
    }

    pub fn is_f(&self) -> bool {
        matches!(self, Letter::F(..))
    }

    /// Root-lattice degree as a vector over the simple roots.
    pub fn degree(&self, n: u8) -> Vec<i64> {
        let mut d = vec![0i64; n as usize];
        match self {
            Letter::W(..) | Letter::Wp(..) => {}
            Letter::E(i, j) => {
                for (k, c) in root_coords(*i, *j, n) {
                    d[k as usize - 1] += c;
                }
            }
            Letter::F(i, j) => {
                for (k, c) in root_coords(*i, *j, n) {
                    d[k as usize - 1] -= c;
                }
            }
            Letter::Ext(..) => panic!("extended symbols must be expanded before grading"),
        }
        d
    }

    /// Height of the underlying root (0 for torus letters); the additive
    /// weight used by the monomial order.
    pub fn weight(&self, n: u8) -> i64 {
        match self {
            Letter::W(..) | Letter::Wp(..) => 0,
            Letter::E(i, j) | Letter::F(i, j) => root_coords(*i, *j, n).iter().map(|(_, c)| c).sum(),
            Letter::Ext(..) => panic!("extended symbols must be expanded before weighing"),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank_key().cmp(&other.rank_key())
    }
}

/// Coordinates of the positive root at flattened position `(i, J)` as pairs
/// (simple-root index, multiplicity).
pub fn root_coords(i: u8, j: u8, n: u8) -> Vec<(u8, i64)> {
    assert!(i >= 1 && i <= n && j >= i && j <= 2 * n - i, "root index ({i},{j}) out of range for n={n}");
    if j <= n {
        // eps_i - eps_{j+1} for j < n (coords 1 on [i, j]); eps_i for j = n
        (i..=j).map(|k| (k, 1)).collect()
    } else {
        // eps_i + eps_m for m = 2n - j + 1: coords 1 on [i, m), 2 on [m, n]
        let m = 2 * n - j + 1;
        (i..=n).map(|k| (k, if k >= m { 2 } else { 1 })).collect()
    }
}

/// All `n^2` flattened positions in convex (lexicographic) order.
pub fn convex_positions(n: u8) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=(2 * n - i) {
            out.push((i, j));
        }
    }
    out
}

/// A word in the free monoid over the alphabet.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn one(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(ls: &[Letter]) -> Self {
        Word(ls.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(l: Letter, k: usize) -> Word {
        Word(vec![l; k])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn weight(&self, n: u8) -> i64 {
        self.0.iter().map(|l| l.weight(n)).sum()
    }

    pub fn degree(&self, n: u8) -> Vec<i64> {
        let mut d = vec![0i64; n as usize];
        for l in &self.0 {
            for (k, v) in l.degree(n).iter().enumerate() {
                d[k] += v;
            }
        }
        d
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Storage order: length, then letterwise rank. The rewriting monomial
    /// order (weight first) lives in the rewrite module.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// The monomial order driving rule orientation: total weight, then length,
/// then letterwise rank.
pub fn monomial_cmp(a: &Word, b: &Word, n: u8) -> Ordering {
    a.weight(n)
        .cmp(&b.weight(n))
        .then_with(|| a.len().cmp(&b.len()))
        .then_with(|| a.0.cmp(&b.0))
}

/// Coefficient abstraction: the generic field Q(r,s) or a cyclotomic field.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn add_c(&self, o: &Self) -> Self;
    fn sub_c(&self, o: &Self) -> Self;
    fn mul_c(&self, o: &Self) -> Self;
    fn neg_c(&self) -> Self;
    fn inv_c(&self) -> Result<Self, crate::error::CoeffError>;
    fn one_like(&self) -> Self;
    fn is_one(&self) -> bool;
}

impl Coeff for crate::coeff::RatFun {
    fn is_zero(&self) -> bool {
        crate::coeff::RatFun::is_zero(self)
    }
    fn add_c(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_c(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_c(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_c(&self) -> Self {
        self.neg()
    }
    fn inv_c(&self) -> Result<Self, crate::error::CoeffError> {
        self.inv()
    }
    fn one_like(&self) -> Self {
        crate::coeff::RatFun::one()
    }
    fn is_one(&self) -> bool {
        crate::coeff::RatFun::is_one(self)
    }
}

impl Coeff for crate::cyclo::CycNum {
    fn is_zero(&self) -> bool {
        crate::cyclo::CycNum::is_zero(self)
    }
    fn add_c(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_c(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_c(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_c(&self) -> Self {
        self.neg()
    }
    fn inv_c(&self) -> Result<Self, crate::error::CoeffError> {
        self.inv()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_one(&self) -> bool {
        crate::cyclo::CycNum::is_one(self)
    }
}

/// A sparse linear combination of words.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<C: Coeff> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for Element<C> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> Element<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn unit(c: C) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(l: Letter, one: &C) -> Self {
        Self::term(Word::one(l), one.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_c(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.neg_c());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg_c())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul_c(c));
        }
        out
    }

    /// Concatenation-bilinear product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), c1.mul_c(c2));
            }
        }
        out
    }

    pub fn mul_word_left(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            out.add_term(w.concat(u), c.clone());
        }
        out
    }

    pub fn mul_word_right(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            out.add_term(u.concat(w), c.clone());
        }
        out
    }

    pub fn pow(&self, k: usize, one: &C) -> Self {
        let mut acc = Self::unit(one.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Element<D> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff, E, F: Fn(&C) -> Result<D, E>>(
        &self,
        f: F,
    ) -> Result<Element<D>, E> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Uniform root-lattice degree, or None when inhomogeneous (or zero).
    pub fn grade(&self, n: u8) -> Option<Vec<i64>> {
        let mut grade: Option<Vec<i64>> = None;
        for (w, _) in &self.terms {
            let d = w.degree(n);
            match &grade {
                None => grade = Some(d),
                Some(g) if *g == d => {}
                Some(_) => return None,
            }
        }
        grade
    }

    /// The coefficient of the empty word.
    pub fn constant_coeff(&self) -> Option<&C> {
        self.terms.get(&Word::empty())
    }

    pub fn coeff_of(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }
}

/// A sparse element of the tensor square.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement<C: Coeff> {
    terms: BTreeMap<(Word, Word), C>,
}

impl<C: Coeff> Default for TensorElement<C> {
    fn default() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> TensorElement<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(a: Word, b: Word, c: C) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, c);
        t
    }

    pub fn of(a: &Element<C>, b: &Element<C>) -> Self {
        let mut out = Self::zero();
        for (u, c1) in a.terms() {
            for (v, c2) in b.terms() {
                out.add_term(u.clone(), v.clone(), c1.mul_c(c2));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_c(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(a.clone(), b.clone(), c.neg_c());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for ((a, b), k) in &self.terms {
            out.add_term(a.clone(), b.clone(), k.mul_c(c));
        }
        out
    }

    /// Componentwise concatenation product: (a (x) b)(c (x) d) = ac (x) bd.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                out.add_term(a1.concat(a2), b1.concat(b2), c1.mul_c(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: usize, one: &C) -> Self {
        let mut acc = Self::term(Word::empty(), Word::empty(), one.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply a map to both legs (used to reduce legs to normal form).
    pub fn map_legs<F: Fn(&Word) -> Element<C>>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let ea = f(a);
            let eb = f(b);
            for (u, c1) in ea.terms() {
                for (v, c2) in eb.terms() {
                    out.add_term(u.clone(), v.clone(), c.mul_c(&c1.mul_c(c2)));
                }
            }
        }
        out
    }
}

// ---- printing and parsing ----------------------------------------------------

/// Print a letter in the textual format: `e1`, `f2`, `w1`, `W1` (omega'),
/// `w1^-1`, `E(1,2)`, `E(1,2')`, `F(1,2)`.
pub fn letter_name(l: &Letter, n: u8) -> String {
    match l {
        Letter::E(i, j) if i == j => format!("e{}", i),
        Letter::F(i, j) if i == j => format!("f{}", i),
        Letter::E(i, j) => {
            if *j <= n {
                format!("E({},{})", i, j)
            } else {
                format!("E({},{}')", i, 2 * n - j + 1)
            }
        }
        Letter::F(i, j) => {
            if *j <= n {
                format!("F({},{})", i, j)
            } else {
                format!("F({},{}')", i, 2 * n - j + 1)
            }
        }
        Letter::W(i, sg) => {
            if *sg > 0 {
                format!("w{}", i)
            } else {
                format!("w{}^-1", i)
            }
        }
        Letter::Wp(i, sg) => {
            if *sg > 0 {
                format!("W{}", i)
            } else {
                format!("W{}^-1", i)
            }
        }
        Letter::Ext(a, b) => format!("X({},{})", a, b),
    }
}

pub fn word_string(w: &Word, n: u8) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.0.iter().map(|l| letter_name(l, n)).collect::<Vec<_>>().join(" ")
}

/// One `coefficient \t word` line per term.
pub fn element_to_text<C: Coeff>(e: &Element<C>, n: u8) -> String {
    let mut out = String::new();
    for (w, c) in e.terms() {
        out.push_str(&format!("{}\t{}\n", c, word_string(w, n)));
    }
    out
}

pub fn tensor_to_text<C: Coeff>(t: &TensorElement<C>, n: u8) -> String {
    let mut out = String::new();
    for ((a, b), c) in t.terms() {
        out.push_str(&format!("{}\t{} (x) {}\n", c, word_string(a, n), word_string(b, n)));
    }
    out
}

/// Parse a single letter name.
pub fn parse_letter(tok: &str, n: u8) -> Result<Letter, EngineError> {
    let bad = || EngineError::Parse { pos: 0, msg: format!("bad letter {:?}", tok) };
    let parse_idx = |t: &str| -> Result<u8, EngineError> {
        t.parse::<u8>().map_err(|_| bad())
    };
    if let Some(rest) = tok.strip_prefix("e") {
        if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
            let i = parse_idx(rest)?;
            return Ok(Letter::E(i, i));
        }
    }
    if let Some(rest) = tok.strip_prefix("f") {
        if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
            let i = parse_idx(rest)?;
            return Ok(Letter::F(i, i));
        }
    }
    for (prefix, primed) in [("w", false), ("W", true)] {
        if let Some(rest) = tok.strip_prefix(prefix) {
            let (idx, sign) = if let Some(base) = rest.strip_suffix("^-1") {
                (base, -1i8)
            } else {
                (rest, 1i8)
            };
            if !idx.is_empty() && idx.chars().all(|c| c.is_ascii_digit()) {
                let i = parse_idx(idx)?;
                return Ok(if primed { Letter::Wp(i, sign) } else { Letter::W(i, sign) });
            }
        }
    }
    for (prefix, is_e) in [("E(", true), ("F(", false)] {
        if let Some(rest) = tok.strip_prefix(prefix) {
            let body = rest.strip_suffix(')').ok_or_else(bad)?;
            let mut parts = body.splitn(2, ',');
            let i = parse_idx(parts.next().ok_or_else(bad)?.trim())?;
            let jtxt = parts.next().ok_or_else(bad)?.trim();
            let (jcore, primed) = match jtxt.strip_suffix('\'') {
                Some(c) => (c, true),
                None => (jtxt, false),
            };
            let j0 = parse_idx(jcore)?;
            let j = if primed { 2 * n - j0 + 1 } else { j0 };
            if i < 1 || i > n || j < i || j > 2 * n - i {
                return Err(EngineError::IndexOutOfRange(format!("{tok} at rank {n}")));
            }
            return Ok(if is_e { Letter::E(i, j) } else { Letter::F(i, j) });
        }
    }
    Err(bad())
}

/// Parse the line-oriented element format produced by `element_to_text`.
pub fn element_from_text(
    text: &str,
    n: u8,
) -> Result<Element<crate::coeff::RatFun>, EngineError> {
    let mut out = Element::zero();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (ctext, wtext) = line
            .split_once('\t')
            .ok_or_else(|| EngineError::Parse { pos: 0, msg: "missing tab separator".into() })?;
        let c = crate::coeff::parse_ratfun(ctext.trim()).map_err(crate::error::CoeffError::from)?;
        let mut w = Vec::new();
        let wtext = wtext.trim();
        if wtext != "1" {
            for tok in wtext.split_whitespace() {
                w.push(parse_letter(tok, n)?);
            }
        }
        out.add_term(Word(w), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatFun;

    type El = Element<RatFun>;

    fn e(i: u8) -> Letter {
        Letter::E(i, i)
    }

    #[test]
    fn multiply_examples() {
        let one = RatFun::one();
        let x = El::letter(e(1), &one).add(&El::letter(e(2), &one));
        let y = El::letter(e(1), &one);
        let p = x.mul(&y);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(El::unit(one.clone()).mul(&x), x);
        // scalar bilinearity
        let rx = El::letter(e(1), &one).scale(&RatFun::r());
        let sy = El::letter(e(2), &one).scale(&RatFun::s());
        let p = rx.mul(&sy);
        let expect = El::term(
            Word::from_letters(&[e(1), e(2)]),
            RatFun::r().mul(&RatFun::s()),
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn grading() {
        let one = RatFun::one();
        let n = 2;
        let w = Word::from_letters(&[e(1), e(2)]);
        assert_eq!(w.degree(n), vec![1, 1]);
        let x = El::term(Word::from_letters(&[Letter::W(1, 1), e(1)]), one.clone());
        assert_eq!(x.grade(n), Some(vec![1, 0]));
        let y = El::letter(e(1), &one).add(&El::letter(Letter::F(1, 1), &one));
        assert_eq!(y.grade(n), None);
    }

    #[test]
    fn root_coords_match_display() {
        // n = 3: beta_{1,2} = alpha_1 + 2 alpha_2 + 2 alpha_3
        assert_eq!(root_coords(1, 5, 3), vec![(1, 1), (2, 2), (3, 2)]);
        // eps_2 at n = 3
        assert_eq!(root_coords(2, 3, 3), vec![(2, 1), (3, 1)]);
        assert_eq!(convex_positions(2), vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        assert_eq!(convex_positions(3).len(), 9);
    }

    #[test]
    fn tensor_product() {
        let one = RatFun::one();
        let x = TensorElement::term(Word::one(e(1)), Word::empty(), one.clone());
        let y = TensorElement::term(Word::empty(), Word::one(e(1)), one.clone());
        let p = x.mul(&y);
        assert_eq!(p, TensorElement::term(Word::one(e(1)), Word::one(e(1)), one.clone()));
        // (X)(1 (x) 1) = X
        let unit = TensorElement::term(Word::empty(), Word::empty(), one.clone());
        assert_eq!(x.mul(&unit), x);
    }

    #[test]
    fn serialization_roundtrip() {
        let n = 3;
        let one = RatFun::one();
        let mut x = El::zero();
        x.add_term(Word::from_letters(&[e(1), Letter::E(1, 5), Letter::W(2, -1)]), RatFun::r());
        x.add_term(Word::from_letters(&[Letter::F(1, 4), Letter::Wp(1, 1)]), one.neg_c());
        x.add_term(Word::empty(), crate::coeff::parse_ratfun("(r-s)/(r+s)").unwrap());
        let text = element_to_text(&x, n);
        let y = element_from_text(&text, n).unwrap();
        assert_eq!(x, y);
        // word printing uses the primed convention
        assert!(text.contains("E(1,2')"));
    }

    #[test]
    fn letter_order_realizes_normal_shape() {
        // F letters (descending) < omegas < omega-primes < E letters (ascending)
        let n = 2;
        let mut ls = vec![
            Letter::E(1, 1),
            Letter::F(2, 2),
            Letter::W(1, 1),
            Letter::Wp(1, -1),
            Letter::F(1, 1),
            Letter::E(2, 2),
        ];
        ls.sort();
        assert_eq!(
            ls,
            vec![
                Letter::F(2, 2),
                Letter::F(1, 1),
                Letter::W(1, 1),
                Letter::Wp(1, -1),
                Letter::E(1, 1),
                Letter::E(2, 2),
            ]
        );
        let _ = n;
    }
}

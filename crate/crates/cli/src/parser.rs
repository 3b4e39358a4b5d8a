//! The expression grammar of the command line: generator names, root
//! letters, coefficient literals in r and s, products, sums, integer powers
//! and an optional tensor split.

use qgb_core::coeff::{parse_ratfun, RatFun};
use qgb_core::freealg::{parse_letter, Element, TensorElement, Word};
use qgb_core::EngineError;

pub enum Parsed {
    Plain(Element<RatFun>),
    Tensor(TensorElement<RatFun>),
}

pub fn parse_expression(input: &str, n: u8) -> Result<Parsed, EngineError> {
    // tensor split at the top level: "x ox y" or the tensor sign
    for sep in ["⊗", " ox "] {
        if let Some(pos) = input.find(sep) {
            let left = parse_element(&input[..pos], n)?;
            let right = parse_element(&input[pos + sep.len()..], n)?;
            return Ok(Parsed::Tensor(TensorElement::of(&left, &right)));
        }
    }
    Ok(Parsed::Plain(parse_element(input, n)?))
}

pub fn parse_element(input: &str, n: u8) -> Result<Element<RatFun>, EngineError> {
    let mut p = Parser { src: input, pos: 0, n };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    n: u8,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> EngineError {
        EngineError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expr(&mut self) -> Result<Element<RatFun>, EngineError> {
        let mut sign = RatFun::one();
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = sign.neg();
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element<RatFun>, EngineError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some('/') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    // division only by scalars
                    let Some(c) = f.constant_coeff() else {
                        return Err(self.err("can only divide by a scalar"));
                    };
                    if f.num_terms() != 1 {
                        return Err(self.err("can only divide by a scalar"));
                    }
                    let inv = c.inv().map_err(qgb_core::error::CoeffError::from)?;
                    acc = acc.scale(&inv);
                }
                // juxtaposition of letters acts as multiplication
                Some(c) if c.is_ascii_alphabetic() || c == '(' => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Element<RatFun>, EngineError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.rest().starts_with('^') {
            // letter inverses like w1^-1 are parsed inside the atom, so a
            // caret here is an integer power
            self.pos += 1;
            let mut neg = false;
            if self.rest().starts_with('-') {
                neg = true;
                self.pos += 1;
            }
            let start = self.pos;
            while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected an exponent"));
            }
            let k: u32 = self.src[start..self.pos].parse().map_err(|_| self.err("bad exponent"))?;
            if neg {
                // negative powers only for scalar atoms
                if base.num_terms() == 1 {
                    if let Some(c) = base.constant_coeff() {
                        let inv = c.inv().map_err(qgb_core::error::CoeffError::from)?;
                        return Ok(Element::unit(inv.pow(k as i64)));
                    }
                }
                return Err(self.err("negative powers are only allowed on scalars and torus letters"));
            }
            return Ok(base.pow(k as usize, &RatFun::one()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Element<RatFun>, EngineError> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.rest().starts_with(|ch: char| ch.is_ascii_digit()) {
                self.pos += 1;
            }
            let k: i64 = self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))?;
            return Ok(Element::unit(RatFun::int(k)));
        }
        // r and s are coefficient variables; letters otherwise
        if (c == 'r' || c == 's')
            && !self
                .rest()
                .chars()
                .nth(1)
                .is_some_and(|d| d.is_ascii_digit() || d == '(')
        {
            self.pos += 1;
            return Ok(Element::unit(if c == 'r' { RatFun::r() } else { RatFun::s() }));
        }
        // a letter token: consume up to a separator
        let start = self.pos;
        let bytes = self.src.as_bytes();
        if c == 'E' || c == 'F' {
            // E(i,j) or E(i,j')
            while self.pos < bytes.len() && bytes[self.pos] as char != ')' {
                self.pos += 1;
            }
            if self.pos == bytes.len() {
                return Err(self.err("unterminated root letter"));
            }
            self.pos += 1;
        } else {
            while self.pos < bytes.len() {
                let ch = bytes[self.pos] as char;
                if ch.is_ascii_alphanumeric() {
                    self.pos += 1;
                } else if ch == '^' && self.src[self.pos..].starts_with("^-1") {
                    self.pos += 3;
                    break;
                } else {
                    break;
                }
            }
        }
        let tok = &self.src[start..self.pos];
        let letter = parse_letter(tok, self.n).map_err(|_| EngineError::Parse {
            pos: start,
            msg: format!("unknown token {:?}", tok),
        })?;
        Ok(Element::term(Word::one(letter), RatFun::one()))
    }
}

/// Print a parse error with a caret under the offending position.
pub fn caret_report(input: &str, pos: usize, msg: &str) -> String {
    format!("{input}\n{}^ {msg}", " ".repeat(pos))
}

/// Pretty-print an element back to the grammar.
pub fn print_element(e: &Element<RatFun>, n: u8) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (w, c) in e.terms() {
        let cs = format!("{:#}", c);
        let ws = qgb_core::freealg::word_string(w, n);
        if w.is_empty() {
            parts.push(cs);
        } else if c.is_one() {
            parts.push(ws);
        } else {
            parts.push(format!("{cs} {ws}"));
        }
    }
    parts.join("  +  ")
}

pub fn parse_for_roundtrip(s: &str, n: u8) -> Result<Element<RatFun>, EngineError> {
    parse_element(s, n)
}

pub use qgb_core::coeff::parse_ratfun as parse_coeff;

#[allow(dead_code)]
fn _keep_imports() {
    let _ = parse_ratfun("1");
}

//! Cyclotomic field arithmetic and specialization of rational functions at
//! roots of unity.
//!
//! Numbers live in `Q[x]/(Phi_l(x))` with `x` mapped to a primitive `l`-th
//! root of unity `theta`, so zero-testing is exact and primitivity is
//! structural. Specializing a fraction cancels common cyclotomic factors of
//! numerator and denominator before evaluating, so expressions whose value is
//! well-defined never report a spurious pole.

use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

use crate::coeff::{LaurentPoly, Rat, RatFun};
use crate::error::CoeffError;

/// Dense polynomial over Q, used for arithmetic modulo the cyclotomic
/// polynomial.
type QPoly = Vec<Rat>;

fn qp_trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qp_add(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    qp_trim(&mut out);
    out
}

fn qp_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qp_trim(&mut out);
    out
}

fn qp_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
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
    qp_trim(&mut out);
    out
}

fn qp_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut rem = a.clone();
    let mut quo = vec![Rat::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &lb;
        quo[dr - db] = c.clone();
        for (j, y) in b.iter().enumerate() {
            let sub = y * &c;
            rem[dr - db + j] -= sub;
        }
        qp_trim(&mut rem);
    }
    qp_trim(&mut quo);
    (quo, rem)
}

/// The `l`-th cyclotomic polynomial, monic over Q.
pub fn cyclotomic_poly(l: u32) -> QPoly {
    assert!(l >= 1);
    // x^l - 1 divided by the product of Phi_d for proper divisors d
    let mut num = vec![Rat::zero(); l as usize + 1];
    num[0] = -Rat::one();
    num[l as usize] = Rat::one();
    let mut acc = num;
    for d in 1..l {
        if l % d == 0 {
            let (q, r) = qp_divrem(&acc, &cyclotomic_poly(d));
            assert!(r.is_empty(), "cyclotomic division must be exact");
            acc = q;
        }
    }
    acc
}

/// The field Q(theta) with theta a primitive `l`-th root of unity.
#[derive(Debug)]
pub struct CycField {
    pub ell: u32,
    phi: QPoly,
    pub degree: usize,
}

impl CycField {
    pub fn new(ell: u32) -> Arc<Self> {
        let phi = cyclotomic_poly(ell);
        let degree = phi.len() - 1;
        Arc::new(CycField { ell, phi, degree })
    }

    fn reduce(&self, p: &QPoly) -> QPoly {
        let (_, r) = qp_divrem(p, &self.phi);
        r
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum { field: self.clone(), coords: vec![] }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        CycNum { field: self.clone(), coords: vec![Rat::one()] }
    }

    pub fn int(self: &Arc<Self>, k: i64) -> CycNum {
        let c = crate::coeff::rat_int(k);
        let coords = if c.is_zero() { vec![] } else { vec![c] };
        CycNum { field: self.clone(), coords }
    }

    /// theta^k, exponent taken mod l.
    pub fn theta_pow(self: &Arc<Self>, k: i64) -> CycNum {
        let e = k.rem_euclid(self.ell as i64) as usize;
        let mut p = vec![Rat::zero(); e + 1];
        p[e] = Rat::one();
        CycNum { field: self.clone(), coords: self.reduce(&p) }
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell
    }
}

/// An element of Q[x]/(Phi_l), as rational coordinates in the power basis.
#[derive(Clone, Debug)]
pub struct CycNum {
    field: Arc<CycField>,
    coords: QPoly,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.coords == other.coords
    }
}

impl CycNum {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn from_rat(field: &Arc<CycField>, c: &Rat) -> CycNum {
        let coords = if c.is_zero() { vec![] } else { vec![c.clone()] };
        CycNum { field: field.clone(), coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coords.len() == 1 && self.coords[0].is_one()
    }

    fn check_field(&self, o: &Self) {
        assert_eq!(
            self.field.ell, o.field.ell,
            "mixed cyclotomic moduli: {} vs {}",
            self.field.ell, o.field.ell
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_field(o);
        CycNum { field: self.field.clone(), coords: qp_add(&self.coords, &o.coords) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_field(o);
        CycNum { field: self.field.clone(), coords: qp_sub(&self.coords, &o.coords) }
    }

    pub fn neg(&self) -> Self {
        CycNum { field: self.field.clone(), coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_field(o);
        CycNum { field: self.field.clone(), coords: self.field.reduce(&qp_mul(&self.coords, &o.coords)) }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        // extended Euclid: a*coords + b*phi = gcd (a unit in Q)
        let mut r0 = self.field.phi.clone();
        let mut r1 = self.coords.clone();
        let mut t0: QPoly = vec![];
        let mut t1: QPoly = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = qp_divrem(&r0, &r1);
            let t = qp_sub(&t0, &qp_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 = gcd, constant since phi is irreducible and coords != 0
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let c = r0[0].recip();
        let coords = self.field.reduce(&t0.iter().map(|x| x * &c).collect::<QPoly>());
        Ok(CycNum { field: self.field.clone(), coords })
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of nonzero") } else { self.clone() };
        let mut acc = self.field.one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Multiplicative order, or None if no power up to `bound` gives 1.
    pub fn mult_order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", if k == 1 { "t".to_string() } else { format!("t^{}", k) })?;
            } else {
                write!(f, "{}*{}", abs, if k == 1 { "t".to_string() } else { format!("t^{}", k) })?;
            }
        }
        Ok(())
    }
}

/// A root-of-unity configuration: `l` odd, `r = theta^y`, `s = theta^z`.
#[derive(Clone, Debug)]
pub struct SpecializationMap {
    pub ell: u32,
    pub y: i64,
    pub z: i64,
    pub field: Arc<CycField>,
}

impl SpecializationMap {
    /// Validates primitivity: `r s^{-1}` must have order exactly `l`, and the
    /// orders of `r` and `s` must have lcm `l`.
    pub fn new(ell: u32, y: i64, z: i64) -> Result<Self, CoeffError> {
        if ell < 2 {
            return Err(CoeffError::BadSpecialization("l must be at least 2".into()));
        }
        let l = ell as i64;
        let g = |k: i64| -> i64 { num::integer::gcd(k.rem_euclid(l), l) };
        if g(y - z) != 1 {
            return Err(CoeffError::BadSpecialization(format!(
                "r*s^-1 = theta^{} is not a primitive {}th root of unity",
                (y - z).rem_euclid(l),
                ell
            )));
        }
        let d = l / g(y);
        let dp = l / g(z);
        if num::integer::lcm(d, dp) != l {
            return Err(CoeffError::BadSpecialization(format!(
                "lcm of orders of r and s is {} but l = {}",
                num::integer::lcm(d, dp),
                ell
            )));
        }
        Ok(SpecializationMap { ell, y, z, field: CycField::new(ell) })
    }

    pub fn r(&self) -> CycNum {
        self.field.theta_pow(self.y)
    }

    pub fn s(&self) -> CycNum {
        self.field.theta_pow(self.z)
    }

    /// Ring-homomorphism image of a Laurent polynomial as a pair
    /// (pre-reduction polynomial in x, power-of-x shift applied).
    fn subst_poly(&self, p: &LaurentPoly) -> (QPoly, i64) {
        if p.is_zero() {
            return (vec![], 0);
        }
        let exps: Vec<(i64, Rat)> =
            p.terms().map(|((a, b), c)| (a * self.y + b * self.z, c.clone())).collect();
        let min = exps.iter().map(|(e, _)| *e).min().unwrap();
        let shift = if min < 0 { -min } else { 0 };
        let max = exps.iter().map(|(e, _)| *e).max().unwrap() + shift;
        let mut out = vec![Rat::zero(); max as usize + 1];
        for (e, c) in exps {
            out[(e + shift) as usize] += c;
        }
        qp_trim(&mut out);
        (out, shift)
    }

    /// Specialize a rational function. Common factors of the cyclotomic
    /// polynomial are cancelled between numerator and denominator before
    /// evaluation; a genuine pole reports the offending factor.
    pub fn specialize(&self, f: &RatFun) -> Result<CycNum, CoeffError> {
        if f.is_zero() {
            return Ok(self.field.zero());
        }
        let (mut np, nshift) = self.subst_poly(f.num());
        let (mut dp, dshift) = self.subst_poly(f.den());
        let phi = &cyclotomic_poly(self.ell);
        let mut na = 0u32;
        loop {
            let (q, r) = qp_divrem(&np, phi);
            if r.is_empty() && !np.is_empty() {
                np = q;
                na += 1;
            } else {
                break;
            }
        }
        let mut da = 0u32;
        loop {
            let (q, r) = qp_divrem(&dp, phi);
            if r.is_empty() && !dp.is_empty() {
                dp = q;
                da += 1;
            } else {
                break;
            }
        }
        if da > na {
            return Err(CoeffError::VanishingDenominator {
                factor: format!("Phi_{}(x)^{}", self.ell, da - na),
            });
        }
        if na > da {
            return Ok(self.field.zero());
        }
        let nv = CycNum { field: self.field.clone(), coords: self.field.reduce(&np) };
        let dv = CycNum { field: self.field.clone(), coords: self.field.reduce(&dp) };
        // the x^shift factors are invertible since x is a root of unity
        let shift = self.field.theta_pow(dshift - nshift);
        Ok(nv.mul(&dv.inv()?).mul(&shift))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{parse_ratfun, rs_integer, IndexClass};

    #[test]
    fn cyclotomic_polys() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2+x+1, Phi_5 = x^4+x^3+x^2+x+1
        assert_eq!(cyclotomic_poly(1).len(), 2);
        assert_eq!(cyclotomic_poly(3).len(), 3);
        let p5 = cyclotomic_poly(5);
        assert_eq!(p5.len(), 5);
        assert!(p5.iter().all(|c| c.is_one()));
        assert_eq!(cyclotomic_poly(9).len(), 7); // degree phi(9) = 6
    }

    #[test]
    fn theta_arithmetic() {
        let f = CycField::new(5);
        let t = f.theta_pow(1);
        assert!(t.pow(5).is_one());
        assert!(!t.pow(4).is_one());
        // 1 + t + t^2 + t^3 + t^4 = 0
        let mut acc = f.zero();
        for k in 0..5 {
            acc = acc.add(&f.theta_pow(k));
        }
        assert!(acc.is_zero());
        let inv = t.inv().unwrap();
        assert!(t.mul(&inv).is_one());
        assert_eq!(inv, f.theta_pow(4));
    }

    #[test]
    fn specialization_examples() {
        let m = SpecializationMap::new(5, 1, 4).unwrap();
        assert_eq!(m.specialize(&RatFun::r()).unwrap(), m.field.theta_pow(1));
        // [5]_{i<n} specializes to 0: r1 = theta^2, s1 = theta^3, both of
        // which have fifth power 1
        let v = m.specialize(&rs_integer(5, IndexClass::Long)).unwrap();
        assert!(v.is_zero());
        // r = s makes 1/(r-s) a genuine pole
        assert!(SpecializationMap::new(5, 2, 2).is_err());
        // pole reporting without a bad map: 1/(r^5 - s^5) at l=5 vanishes identically
        let f = parse_ratfun("1/(r^5-s^5)").unwrap();
        assert!(matches!(m.specialize(&f), Err(CoeffError::VanishingDenominator { .. })));
    }

    #[test]
    fn specialization_is_homomorphism() {
        let m = SpecializationMap::new(5, 1, 4).unwrap();
        let xs = [
            parse_ratfun("(r-s)/(r+s)").unwrap(),
            parse_ratfun("r^2*s^-2 + 3").unwrap(),
            parse_ratfun("(r^2-s^2)/(r^3-s^3)").unwrap(),
        ];
        for a in &xs {
            for b in &xs {
                let lhs = m.specialize(&a.mul(b)).unwrap();
                let rhs = m.specialize(a).unwrap().mul(&m.specialize(b).unwrap());
                assert_eq!(lhs, rhs);
                let lhs = m.specialize(&a.add(b)).unwrap();
                let rhs = m.specialize(a).unwrap().add(&m.specialize(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bad_maps_rejected() {
        // r = s
        assert!(SpecializationMap::new(5, 2, 2).is_err());
        // rs^{-1} of order 5 but r,s orders lcm < 5 cannot happen when
        // gcd(y-z, l)=1, so test the gcd failure directly
        assert!(SpecializationMap::new(9, 1, 4).is_err()); // y-z = -3, gcd 3
        assert!(SpecializationMap::new(5, 1, 4).is_ok());
        assert!(SpecializationMap::new(5, 2, 3).is_ok());
    }
}

//! Exact scalars.
//!
//! - [`Rational`] is an arbitrary-precision reduced fraction.
//! - [`Eisenstein`] is `re + xi*ξ` with `ξ² = -1 - ξ`, the field `Q(ξ)` for a
//!   primitive cube root of unity.
//! - [`Field`] collects what the exact linear algebra needs from either.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("value {0} is not rational")]
    NotRational(String),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "p", "-p" or "p/q".
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Small-integer view of a rational, if it is one.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational, ScalarError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            a / b
        }
    })
}

/// Element `re + xi*ξ` of `Q(ξ)`, `ξ = e^{2πi/3}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Eisenstein {
    pub re: Rational,
    pub xi: Rational,
}

impl Eisenstein {
    pub fn new(re: Rational, xi: Rational) -> Self {
        Eisenstein { re, xi }
    }

    pub fn xi() -> Self {
        Eisenstein::new(Rational::zero(), Rational::one())
    }

    pub fn xi2() -> Self {
        Eisenstein::new(-Rational::one(), -Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Eisenstein::new(r, Rational::zero())
    }

    /// The automorphism `ξ -> ξ²`.
    pub fn conj(&self) -> Self {
        // a + b ξ² = a + b(-1 - ξ)
        Eisenstein::new(&self.re - &self.xi, -&self.xi)
    }

    /// `x * conj(x)`, always rational.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.xi + &self.xi * &self.xi
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let c = self.conj();
        Ok(Eisenstein::new(c.re / &n, c.xi / n))
    }

    pub fn is_rational(&self) -> bool {
        self.xi.is_zero()
    }

    pub fn to_rational(&self) -> Result<Rational, ScalarError> {
        if self.is_rational() {
            Ok(self.re.clone())
        } else {
            Err(ScalarError::NotRational(self.to_string()))
        }
    }
}

impl From<Rational> for Eisenstein {
    fn from(r: Rational) -> Self {
        Eisenstein::from_rational(r)
    }
}

impl From<i64> for Eisenstein {
    fn from(n: i64) -> Self {
        Eisenstein::from_rational(int(n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisOp {
    Add,
    Mul,
    Conj,
}

/// `Conj` ignores `b`.
pub fn eis_arith(a: &Eisenstein, b: &Eisenstein, op: EisOp) -> Eisenstein {
    match op {
        EisOp::Add => a.clone() + b.clone(),
        EisOp::Mul => a.clone() * b.clone(),
        EisOp::Conj => a.conj(),
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.re + o.re, self.xi + o.xi)
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.re - o.re, self.xi - o.xi)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: Eisenstein) -> Eisenstein {
        // (a + bξ)(c + dξ) = ac + (ad + bc)ξ + bd(-1 - ξ)
        let bd = &self.xi * &o.xi;
        let re = &self.re * &o.re - &bd;
        let xi = &self.re * &o.xi + &self.xi * &o.re - bd;
        Eisenstein::new(re, xi)
    }
}

impl Div for Eisenstein {
    type Output = Eisenstein;
    fn div(self, o: Eisenstein) -> Eisenstein {
        self * o.inverse().expect("division by zero in Q(xi)")
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.re, -self.xi)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, o: Eisenstein) {
        self.re += o.re;
        self.xi += o.xi;
    }
}

impl SubAssign for Eisenstein {
    fn sub_assign(&mut self, o: Eisenstein) {
        self.re -= o.re;
        self.xi -= o.xi;
    }
}

impl MulAssign for Eisenstein {
    fn mul_assign(&mut self, o: Eisenstein) {
        *self = self.clone() * o;
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.xi.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::from_rational(Rational::one())
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.xi.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*xi", self.xi),
            (false, false) => {
                if self.xi.is_negative() {
                    write!(f, "{} - {}*xi", self.re, -&self.xi)
                } else {
                    write!(f, "{} + {}*xi", self.re, self.xi)
                }
            }
        }
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Eisenstein {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Scalars the exact linear algebra runs over.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;
}

impl Field for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Field for Eisenstein {
    fn from_rational(r: Rational) -> Self {
        Eisenstein::from_rational(r)
    }
}

/// Serializes a rational as its "p/q" text.
pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(int(a), int(b))
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rat_arith(&rat(7, 2), &rat(14, 5), RatOp::Sub).unwrap(), rat(7, 10));
        assert_eq!(rat_arith(&int(4), &rat(7, 2), RatOp::Sub).unwrap(), rat(1, 2));
        assert_eq!(rat_arith(&int(1), &int(0), RatOp::Div), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn rational_is_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), r);
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn xi_examples() {
        let xi = Eisenstein::xi();
        assert_eq!(eis_arith(&xi, &xi, EisOp::Mul), e(-1, -1));
        assert_eq!(xi.clone() + Eisenstein::xi2(), e(-1, 0));
        let d = Eisenstein::xi2() - xi.clone();
        assert_eq!(d.clone() * d, e(-3, 0));
        assert_eq!(xi.clone() * xi.clone() * xi.clone(), Eisenstein::one());
        assert_eq!(Eisenstein::one() + xi.clone() + xi.clone() * xi.clone(), Eisenstein::zero());
        assert_eq!(eis_arith(&xi, &xi, EisOp::Conj), Eisenstein::xi2());
    }

    #[test]
    fn rendering() {
        assert_eq!(Eisenstein::new(rat(1, 2), rat(-3, 4)).to_string(), "1/2 - 3/4*xi");
        assert_eq!(Eisenstein::new(rat(1, 2), rat(3, 4)).to_string(), "1/2 + 3/4*xi");
        assert_eq!(e(0, 2).to_string(), "2*xi");
        assert_eq!(e(5, 0).to_string(), "5");
    }

    fn arb_eis() -> impl Strategy<Value = Eisenstein> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| Eisenstein::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn distributive(a in arb_eis(), b in arb_eis(), c in arb_eis()) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b + a * c);
        }

        #[test]
        fn conj_is_involutive_automorphism(a in arb_eis(), b in arb_eis()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
            prop_assert_eq!((a.clone() + b.clone()).conj(), a.conj() + b.conj());
        }

        #[test]
        fn inverse_roundtrip(a in arb_eis()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.clone() * a.inverse().unwrap(), Eisenstein::one());
            prop_assert!(a.norm() > Rational::zero());
        }
    }
}

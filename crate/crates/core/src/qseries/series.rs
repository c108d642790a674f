use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::report::{CheckResult, Detail, Mismatch, Status};
use crate::scalars::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("exponent {0} is not a non-negative integer")]
    NonIntegralExponent(String),
}

/// Truncated power series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::monomial(0, Rational::one(), order)
    }

    /// `c q^k`, zero when `k` exceeds the order.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut Rational {
        &mut self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(Series { coeffs: out })
    }

    /// `f(q) -> f(q^k)`, same order.
    pub fn substitute_power(&self, k: usize) -> Series {
        assert!(k > 0, "substitution power must be positive");
        let n = self.order();
        let mut out = Series::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// `f(q) -> f(-q)`.
    pub fn negate_variable(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Even part `(f(q) + f(-q))/2`.
    pub fn even_part(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { Rational::zero() })
                .collect(),
        }
    }

    /// Odd part `(f(q) - f(-q))/2`.
    pub fn odd_part(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.clone() } else { Rational::zero() })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut out = Series::one(self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// In-place multiplication by `(1 + s q^e)` for `s = ±1`.
    pub fn mul_binomial(&mut self, e: usize, s: i64) {
        assert!(e > 0);
        let n = self.order();
        if e > n {
            return;
        }
        for i in (e..=n).rev() {
            let t = self.coeffs[i - e].clone();
            if !t.is_zero() {
                if s > 0 {
                    self.coeffs[i] += t;
                } else {
                    self.coeffs[i] -= t;
                }
            }
        }
    }

    /// In-place division by `(1 + s q^e)` for `s = ±1`.
    pub fn div_binomial(&mut self, e: usize, s: i64) {
        assert!(e > 0);
        let n = self.order();
        for i in e..=n {
            let t = self.coeffs[i - e].clone();
            if !t.is_zero() {
                if s > 0 {
                    self.coeffs[i] -= t;
                } else {
                    self.coeffs[i] += t;
                }
            }
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// First exponent where the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Exact comparison up to the smaller order, as a check result.
    pub fn check_equal(name: &str, lhs: &Series, rhs: &Series) -> CheckResult {
        let order = lhs.order().min(rhs.order());
        match lhs.first_difference(rhs) {
            None => CheckResult {
                check: name.to_string(),
                status: Status::Pass,
                detail: Detail { order: Some(order), ..Detail::default() },
            },
            Some(k) => CheckResult {
                check: name.to_string(),
                status: Status::Fail,
                detail: Detail {
                    order: Some(order),
                    first_mismatch: Some(Mismatch {
                        exponent: k,
                        lhs: lhs.coeffs[k].to_string(),
                        rhs: rhs.coeffs[k].to_string(),
                    }),
                    ..Detail::default()
                },
            },
        }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.coeffs.iter().take(12).map(|c| c.to_string()).collect();
        write!(f, "Series[N={}; {}", self.order(), shown.join(", "))?;
        if self.coeffs.len() > 12 {
            write!(f, ", ...")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, o: Series) -> Series {
        &self + &o
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, o: Series) -> Series {
        &self - &o
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, o: Series) -> Series {
        &self * &o
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

pub fn series_arith(a: &Series, b: &Series, op: SeriesOp) -> Series {
    match op {
        SeriesOp::Add => a + b,
        SeriesOp::Sub => a - b,
        SeriesOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use proptest::prelude::*;

    #[test]
    fn binomial_product() {
        let a = Series::from_ints(&[1, 1], 6);
        let b = Series::from_ints(&[1, -1], 6);
        assert_eq!(series_arith(&a, &b, SeriesOp::Mul), Series::from_ints(&[1, 0, -1], 6));
    }

    #[test]
    fn reciprocal_geometric() {
        let a = Series::from_ints(&[1, -1], 5);
        assert_eq!(a.reciprocal().unwrap(), Series::from_ints(&[1; 6], 5));
        assert_eq!(Series::zero(3).reciprocal(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn orders_take_minimum() {
        let a = Series::one(10);
        let b = Series::one(4);
        assert_eq!((&a * &b).order(), 4);
        assert_eq!((&a + &b).order(), 4);
    }

    #[test]
    fn negate_and_substitute() {
        let a = Series::from_ints(&[1, 1], 4);
        assert_eq!(a.negate_variable(), Series::from_ints(&[1, -1], 4));
        assert_eq!(a.substitute_power(3), Series::from_ints(&[1, 0, 0, 1], 4));
        assert_eq!(a.shift(2), Series::from_ints(&[0, 0, 1, 1], 4));
    }

    #[test]
    fn in_place_binomials() {
        let mut s = Series::one(8);
        s.mul_binomial(2, -1);
        assert_eq!(s, Series::from_ints(&[1, 0, -1], 8));
        s.div_binomial(2, -1);
        assert_eq!(s, Series::one(8));
        s.mul_binomial(3, 1);
        s.div_binomial(3, 1);
        assert_eq!(s, Series::one(8));
    }

    #[test]
    fn check_reports_first_mismatch() {
        let a = Series::from_ints(&[1, 2, 3], 3);
        let b = Series::from_ints(&[1, 2, 4], 3);
        let r = Series::check_equal("x", &a, &b);
        assert!(!r.passed());
        assert_eq!(r.detail.first_mismatch.as_ref().unwrap().exponent, 2);
        assert_eq!(r.to_string(), "x: FAIL at q^2 lhs=3 rhs=4 order=3");
    }

    #[test]
    fn display() {
        let a = Series::from_coeffs(vec![int(1), int(-1), rat(1, 2)], 3);
        assert_eq!(a.to_string(), "1 - q + 1/2q^2 + O(q^4)");
    }

    fn arb_series() -> impl Strategy<Value = Series> {
        prop::collection::vec(-5i64..5, 1..12).prop_map(|v| Series::from_ints(&v, 11))
    }

    proptest! {
        #[test]
        fn reciprocal_inverts(mut s in arb_series()) {
            *s.coeff_mut(0) = int(1);
            let r = s.reciprocal().unwrap();
            prop_assert_eq!(&s * &r, Series::one(11));
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_series(), b in arb_series(), k in 1usize..4) {
            prop_assert_eq!((&a * &b).substitute_power(k), &a.substitute_power(k) * &b.substitute_power(k));
            prop_assert_eq!((&a * &b).negate_variable(), &a.negate_variable() * &b.negate_variable());
        }

        #[test]
        fn parts_sum(a in arb_series()) {
            prop_assert_eq!(&a.even_part() + &a.odd_part(), a.clone());
            prop_assert_eq!(&a.even_part() - &a.odd_part(), a.negate_variable());
        }
    }
}

//! Minimal-model Virasoro characters in Feigin-Fuchs form.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::products::euler_phi;
use super::series::{Series, SeriesError};
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MinimalModelLabel {
    pub s: i64,
    pub t: i64,
    pub m: i64,
    pub n: i64,
}

impl MinimalModelLabel {
    pub fn new(s: i64, t: i64, m: i64, n: i64) -> Self {
        let l = MinimalModelLabel { s, t, m, n };
        assert!(l.is_valid(), "invalid minimal model label {l:?}");
        l
    }

    pub fn is_valid(&self) -> bool {
        self.s >= 2
            && self.t >= 2
            && self.s.gcd(&self.t) == 1
            && (1..self.s).contains(&self.m)
            && (1..self.t).contains(&self.n)
    }

    pub fn central_charge(&self) -> Rational {
        let d = self.s - self.t;
        int(1) - rat(6 * d * d, self.s * self.t)
    }

    pub fn h(&self) -> Rational {
        let a = self.m * self.t - self.n * self.s;
        let d = self.s - self.t;
        rat(a * a - d * d, 4 * self.s * self.t)
    }

    /// `h - c/24`, the fractional power carried beside `gr`.
    pub fn offset(&self) -> Rational {
        self.h() - self.central_charge() / int(24)
    }
}

/// `χ(q) = q^offset · gr(q)` with `gr(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub offset: Rational,
    pub gr: Series,
}

impl Character {
    /// `q^{p·offset + shift} gr(q^p)`; the exponent must be a non-negative integer.
    pub fn specialize(&self, p: usize, shift: &Rational) -> Result<Series, SeriesError> {
        let e = &self.offset * int(p as i64) + shift;
        let k = integral_exponent(&e)?;
        Ok(self.gr.substitute_power(p).shift(k))
    }
}

pub fn integral_exponent(e: &Rational) -> Result<usize, SeriesError> {
    if !e.is_integer() || e.is_negative() {
        return Err(SeriesError::NonIntegralExponent(e.to_string()));
    }
    crate::scalars::to_i64(e).map(|k| k as usize).ok_or_else(|| SeriesError::NonIntegralExponent(e.to_string()))
}

/// `φ(q)^{-1} Σ_k q^{stk²}(q^{k(mt-ns)} - q^{(mt+ns)k+mn})` truncated at `order`.
pub fn minimal_character(label: MinimalModelLabel, order: usize) -> Character {
    let MinimalModelLabel { s, t, m, n } = label;
    let st = s * t;
    let lin1 = m * t - n * s;
    let lin2 = m * t + n * s;
    let margin = 2 * lin2.abs();
    let bound = order as i64 + margin;
    let mut numer = Series::zero(order);
    let mut k: i64 = 0;
    loop {
        let ks: Vec<i64> = if k == 0 { vec![0] } else { vec![k, -k] };
        for kk in ks {
            let e1 = st * kk * kk + kk * lin1;
            let e2 = st * kk * kk + lin2 * kk + m * n;
            assert!(e1 >= 0 && e2 >= 0, "negative exponent in character sum");
            if e1 <= order as i64 {
                *numer.coeff_mut(e1 as usize) += int(1);
            }
            if e2 <= order as i64 {
                *numer.coeff_mut(e2 as usize) -= int(1);
            }
        }
        if st * k * k - lin2.abs() * k > bound {
            break;
        }
        k += 1;
    }
    let gr = &numer * &euler_phi(order).reciprocal().expect("unit constant term");
    debug_assert!(!gr.coeff(0).is_zero());
    Character { offset: label.offset(), gr }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::products::{residue_product, v_series};

    #[test]
    fn central_charges_and_weights() {
        let l = MinimalModelLabel::new(3, 4, 1, 1);
        assert_eq!(l.central_charge(), rat(1, 2));
        assert_eq!(l.h(), int(0));
        assert_eq!(l.offset(), rat(-1, 48));
        assert_eq!(MinimalModelLabel::new(3, 4, 1, 3).h(), rat(1, 2));
        assert_eq!(MinimalModelLabel::new(3, 4, 1, 2).h(), rat(1, 16));
        let c45 = MinimalModelLabel::new(4, 5, 1, 1).central_charge();
        assert_eq!(c45, rat(7, 10));
        let hs: Vec<Rational> = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)]
            .iter()
            .map(|&(m, n)| MinimalModelLabel::new(4, 5, m, n).h())
            .collect();
        assert_eq!(hs, vec![int(0), rat(1, 10), rat(3, 5), rat(3, 2), rat(7, 16), rat(3, 80)]);
        assert_eq!(MinimalModelLabel::new(2, 5, 1, 1).central_charge(), rat(-22, 5));
    }

    #[test]
    fn rogers_ramanujan_products() {
        let n = 60;
        let c = minimal_character(MinimalModelLabel::new(2, 5, 1, 2), n);
        assert_eq!(c.gr, residue_product(n, 5, &[1, 4], -1, true));
        assert_eq!(c.offset, rat(-1, 60));
        let c = minimal_character(MinimalModelLabel::new(2, 5, 1, 1), n);
        assert_eq!(c.gr, residue_product(n, 5, &[2, 3], -1, true));
        assert_eq!(c.offset, rat(11, 60));
    }

    #[test]
    fn ising_twisted_sector() {
        let n = 80;
        let c = minimal_character(MinimalModelLabel::new(3, 4, 1, 2), n);
        let lhs = c.specialize(1, &rat(-1, 24)).unwrap();
        assert_eq!(lhs, v_series(n).unwrap().reciprocal().unwrap());
        assert!(c.specialize(1, &int(0)).is_err());
    }

    #[test]
    fn order_zero_is_one() {
        for (s, t, m, nn) in [(3, 4, 1, 1), (4, 5, 2, 2), (4, 5, 1, 4)] {
            let c = minimal_character(MinimalModelLabel::new(s, t, m, nn), 0);
            assert_eq!(c.gr, Series::one(0));
        }
    }
}

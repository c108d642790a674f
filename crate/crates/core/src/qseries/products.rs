//! Euler products, theta-type sums and the named series built from them.
//!
//! Every named series has a product route and an independent route (a sum
//! or a ratio of `φ`'s); the unsuffixed constructors compare both.

use num_traits::{One, Zero};
use thiserror::Error;

use super::series::Series;
use crate::scalars::int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("{name}: routes disagree at exponent {exponent}")]
    CrossCheck { name: String, exponent: usize },
    #[error(transparent)]
    Series(#[from] super::series::SeriesError),
}

fn agree(name: &str, a: Series, b: &Series) -> Result<Series, QSeriesError> {
    match a.first_difference(b) {
        None => Ok(a),
        Some(exponent) => Err(QSeriesError::CrossCheck { name: name.to_string(), exponent }),
    }
}

/// `∏ (1 + s q^n)^{±1}` over `n ≥ 1` with `n mod m` in `residues`.
pub fn residue_product(order: usize, m: usize, residues: &[usize], s: i64, inverse: bool) -> Series {
    let mut out = Series::one(order);
    for n in 1..=order {
        if residues.contains(&(n % m)) {
            if inverse {
                out.div_binomial(n, s);
            } else {
                out.mul_binomial(n, s);
            }
        }
    }
    out
}

/// `φ(q) = ∏_{n≥1} (1 - q^n)`.
pub fn euler_phi(order: usize) -> Series {
    residue_product(order, 1, &[0], -1, false)
}

/// `Σ_k (-1)^k q^{k(ak+b)/2}` over all integers `k`.
pub fn theta_sum(order: usize, a: i64, b: i64) -> Series {
    let mut out = Series::zero(order);
    let n = order as i64;
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e2 = kk * (a * kk + b);
            debug_assert!(e2 % 2 == 0);
            let e = e2 / 2;
            if e >= 0 && e <= n {
                hit = true;
                let c = out.coeff_mut(e as usize);
                if kk % 2 == 0 {
                    *c += int(1);
                } else {
                    *c -= int(1);
                }
            }
        }
        // exponents grow like a k²/2; stop once both signs are past the order
        if !hit && (a * k * k - b.abs() * k) / 2 > n {
            break;
        }
        k += 1;
    }
    out
}

/// Pentagonal-number side of `φ`.
pub fn pentagonal_sum(order: usize) -> Series {
    theta_sum(order, 3, -1)
}

/// `∏ (1 - q^{5n})(1 - q^{5n-1})(1 - q^{5n-4})`.
pub fn jtp_spec2_product(order: usize) -> Series {
    residue_product(order, 5, &[0, 1, 4], -1, false)
}

/// `∏ (1 - q^{5n})(1 - q^{5n-2})(1 - q^{5n-3})`.
pub fn jtp_spec3_product(order: usize) -> Series {
    residue_product(order, 5, &[0, 2, 3], -1, false)
}

pub fn jtp_spec2_sum(order: usize) -> Series {
    theta_sum(order, 5, 3)
}

pub fn jtp_spec3_sum(order: usize) -> Series {
    theta_sum(order, 5, 1)
}

/// `a(q) = ∏ 1/((1 - q^{5n-2})(1 - q^{5n-3}))`.
pub fn rr_a_product(order: usize) -> Series {
    residue_product(order, 5, &[2, 3], -1, true)
}

/// `a(q) = φ(q)^{-1} Σ (-1)^k q^{k(5k+3)/2}`.
pub fn rr_a_sum(order: usize) -> Series {
    let inv_phi = euler_phi(order).reciprocal().expect("phi has unit constant term");
    &inv_phi * &jtp_spec2_sum(order)
}

/// `b(q) = ∏ 1/((1 - q^{5n-1})(1 - q^{5n-4}))`.
pub fn rr_b_product(order: usize) -> Series {
    residue_product(order, 5, &[1, 4], -1, true)
}

pub fn rr_b_sum(order: usize) -> Series {
    let inv_phi = euler_phi(order).reciprocal().expect("phi has unit constant term");
    &inv_phi * &jtp_spec3_sum(order)
}

pub fn rr_a(order: usize) -> Result<Series, QSeriesError> {
    agree("a(q)", rr_a_product(order), &rr_a_sum(order))
}

pub fn rr_b(order: usize) -> Result<Series, QSeriesError> {
    agree("b(q)", rr_b_product(order), &rr_b_sum(order))
}

/// `v(q) = ∏ (1 - q^{2m-1})`.
pub fn v_product(order: usize) -> Series {
    residue_product(order, 2, &[1], -1, false)
}

/// `v(q) = φ(q)/φ(q²)`.
pub fn v_ratio(order: usize) -> Series {
    let phi = euler_phi(order);
    let inv = phi.substitute_power(2).reciprocal().expect("unit constant term");
    &phi * &inv
}

pub fn v_series(order: usize) -> Result<Series, QSeriesError> {
    agree("v(q)", v_product(order), &v_ratio(order))
}

/// `c(q) = 2 φ(q²)²/φ(q)²`.
pub fn c_ratio(order: usize) -> Series {
    let phi = euler_phi(order);
    let num = phi.substitute_power(2).pow(2);
    let den = phi.pow(2).reciprocal().expect("unit constant term");
    (&num * &den).scale(&int(2))
}

/// `c(q) = 2/v(q)²`.
pub fn c_from_v(order: usize) -> Series {
    v_product(order).pow(2).reciprocal().expect("unit constant term").scale(&int(2))
}

pub fn c_series(order: usize) -> Result<Series, QSeriesError> {
    agree("c(q)", c_ratio(order), &c_from_v(order))
}

/// Principal graded dimension of each `D4` level-one module,
/// `φ(u²)φ(u⁶)/(φ(u)φ(u³))`.
pub fn clifford_principal_gr(order: usize) -> Series {
    let phi = euler_phi(order);
    let num = &phi.substitute_power(2) * &phi.substitute_power(6);
    let den = (&phi * &phi.substitute_power(3)).reciprocal().expect("unit constant term");
    &num * &den
}

/// Multiplies by `(1 + u^e)`, where `e = 0` contributes the factor 2.
fn mul_plus(s: &mut Series, e: i64) {
    if e == 0 {
        *s = s.scale(&int(2));
    } else {
        s.mul_binomial(e as usize, 1);
    }
}

/// Unsimplified principal product of the whole Neveu-Schwarz module,
/// with `v_i = u^{i-4}` and `q = u^6`.
pub fn ns_principal_direct(order: usize) -> Series {
    let mut s = Series::one(order);
    let n = order as i64;
    for m in 0.. {
        if 6 * m > n {
            break;
        }
        for i in 1..=4i64 {
            let lo = i - 4 + 6 * m + 3;
            let hi = 4 - i + 6 * m + 3;
            if lo <= n {
                mul_plus(&mut s, lo);
            }
            if hi <= n {
                mul_plus(&mut s, hi);
            }
        }
    }
    s
}

/// Unsimplified principal product of the whole Ramond module.
pub fn ramond_principal_direct(order: usize) -> Series {
    let mut s = Series::one(order);
    let n = order as i64;
    for i in 1..=4i64 {
        mul_plus(&mut s, 4 - i);
    }
    for m in 1.. {
        if 6 * m - 3 > n {
            break;
        }
        for i in 1..=4i64 {
            let lo = i - 4 + 6 * m;
            let hi = 4 - i + 6 * m;
            if lo <= n {
                mul_plus(&mut s, lo);
            }
            if hi <= n {
                mul_plus(&mut s, hi);
            }
        }
    }
    s
}

/// `F(u) = φ(u²)φ(u³)/(φ(u)φ(u⁶))`.
pub fn g2_fock_ratio(order: usize) -> Series {
    let phi = euler_phi(order);
    let num = &phi.substitute_power(2) * &phi.substitute_power(3);
    let den = (&phi * &phi.substitute_power(6)).reciprocal().expect("unit constant term");
    &num * &den
}

/// `F(u) = ∏ 1/((1 - u^{6n-5})(1 - u^{6n-1}))`.
pub fn g2_fock_product(order: usize) -> Series {
    residue_product(order, 6, &[1, 5], -1, true)
}

/// `F(u) = v(u³)/v(u)`.
pub fn g2_fock_from_v(order: usize) -> Series {
    let v = v_product(order);
    &v.substitute_power(3) * &v.reciprocal().expect("unit constant term")
}

pub fn g2_fock(order: usize) -> Result<Series, QSeriesError> {
    let a = agree("F(u)", g2_fock_product(order), &g2_fock_ratio(order))?;
    agree("F(u)", a, &g2_fock_from_v(order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum G2Module {
    Omega0,
    Omega2,
}

/// `F(u)a(u³)` for `W(Ω0)`, `F(u)b(u³)` for `W(Ω2)`.
pub fn g2_principal_gr(module: G2Module, order: usize) -> Result<Series, QSeriesError> {
    let f = g2_fock(order)?;
    let r = match module {
        G2Module::Omega0 => rr_a(order)?,
        G2Module::Omega2 => rr_b(order)?,
    };
    Ok(&f * &r.substitute_power(3))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Sector {
    NeveuSchwarz,
    Ramond,
}

/// Horizontal graded dimension in the variable `x = q^{1/2}`, so the
/// coefficient of `x^j` counts states whose modes sum to `j/2`.
/// Neveu-Schwarz: `∏ (1 + q^n)^8` over positive half-integers.
/// Ramond: `16 ∏ (1 + q^n)^8` over positive integers.
pub fn horizontal_gr(sector: Sector, order: usize) -> Series {
    match sector {
        Sector::NeveuSchwarz => residue_product(order, 2, &[1], 1, false).pow(8),
        Sector::Ramond => residue_product(order, 2, &[0], 1, false).pow(8).scale(&int(16)),
    }
}

/// The three products of the Jacobi identity, in `q`:
/// `(∏(1+q^{2n+1})^8, ∏(1-q^{2n+1})^8, 16q∏(1+q^{2n})^8)`.
pub fn jacobi_parts(order: usize) -> (Series, Series, Series) {
    let plus = residue_product(order, 2, &[1], 1, false).pow(8);
    let minus = residue_product(order, 2, &[1], -1, false).pow(8);
    let even = residue_product(order, 2, &[0], 1, false).pow(8);
    (plus, minus, even.shift(1).scale(&int(16)))
}

/// Whether every coefficient at an exponent of the given parity vanishes.
pub fn vanishes_on_parity(s: &Series, parity: usize) -> bool {
    s.coeffs().iter().enumerate().all(|(k, c)| k % 2 != parity || c.is_zero())
}

pub fn is_unit_series(s: &Series) -> bool {
    s.coeff(0).is_one()
}

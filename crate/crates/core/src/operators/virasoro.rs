//! Virasoro families, `G2^(1)` simple-root operators, and the Ramond correction.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::*;
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Charge {
    /// `c = 1/2`, from `ω_{D4−B3}`.
    Half,
    /// `c = 7/10`, from `ω_{B3−G2}`.
    SevenTenths,
}

impl Charge {
    pub fn value(self) -> Rational {
        match self {
            Charge::Half => rat(1, 2),
            Charge::SevenTenths => rat(7, 10),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Charge::Half => "1/2",
            Charge::SevenTenths => "7/10",
        }
    }

    pub fn vector(self) -> FockVector {
        let c = conformal_vectors();
        match self {
            Charge::Half => c.d4_b3,
            Charge::SevenTenths => c.b3_g2,
        }
    }
}

/// Scalar added to `L_0` on the Ramond module.
pub fn ramond_shift(v: &FockVector) -> Rational {
    delta_correction(v)
}

fn family(v: &FockVector, k: i64, sector: Sector, name: String) -> OperatorSpec {
    let mut op = vertex_mode(v, k).expect("conformal vectors have vertex modes").named(name);
    if sector == Sector::Ramond && k == 0 {
        op.scalar = ramond_shift(v);
    }
    op
}

/// The `D4` Virasoro operator `L_k` on one sector.
pub fn full_l(k: i64, sector: Sector) -> OperatorSpec {
    family(&omega_d4(), k, sector, format!("L_{k}"))
}

/// The coset Virasoro operator `L_k^c` on one sector.
pub fn coset_l(k: i64, charge: Charge, sector: Sector) -> OperatorSpec {
    family(&charge.vector(), k, sector, format!("L_{k}^{}", charge.label()))
}

/// `Y_k(v)` with the Ramond correction, for any depth-two NS vector `v`.
pub fn vertex_family(v: &FockVector, k: i64, sector: Sector, name: &str) -> Result<OperatorSpec, OperatorError> {
    let mut op = vertex_mode(v, k)?.named(format!("{name}_{k}"));
    if sector == Sector::Ramond && k == 0 {
        op.scalar = ramond_shift(v);
    }
    Ok(op)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum G2Simple {
    Beta1,
    Beta2,
    MinusTheta,
}

impl G2Simple {
    pub fn all() -> [G2Simple; 3] {
        [G2Simple::Beta1, G2Simple::Beta2, G2Simple::MinusTheta]
    }

    pub fn label(self) -> &'static str {
        match self {
            G2Simple::Beta1 => "X_β1(0)",
            G2Simple::Beta2 => "X_β2(0)",
            G2Simple::MinusTheta => "X_-θ(1)",
        }
    }
}

fn f(flavor: u8, starred: bool) -> Fermion {
    Fermion::new(flavor, starred)
}

/// The three operators of the simple roots of `G2^(1)`.
pub fn g2_simple_op(which: G2Simple) -> OperatorSpec {
    let q = TermKind::Quadratic;
    let one = Rational::one();
    match which {
        G2Simple::Beta1 => OperatorSpec::new(which.label()).with_term(one, q, &[f(2, false), f(3, true)], 0),
        G2Simple::Beta2 => OperatorSpec::new(which.label())
            .with_term(one.clone(), q, &[f(1, false), f(2, true)], 0)
            .with_term(one.clone(), q, &[f(3, false), f(4, true)], 0)
            .with_term(-one, q, &[f(3, false), f(4, false)], 0),
        G2Simple::MinusTheta => OperatorSpec::new(which.label()).with_term(one, q, &[f(2, true), f(1, true)], 1),
    }
}

/// `binom(x, m)` by the falling factorial.
pub fn binom(x: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc = acc * (x - int(i64::from(i))) / int(i64::from(i) + 1);
    }
    acc
}

/// `C_{m,n} = ½ (m−n)/(m+n+1) binom(−½,m) binom(−½,n)`.
pub fn c_coefficient(m: u32, n: u32) -> Rational {
    let half = rat(-1, 2);
    rat(i64::from(m) - i64::from(n), 2 * (i64::from(m) + i64::from(n) + 1)) * binom(&half, m) * binom(&half, n)
}

/// `Δ_j`, the coefficient of `w^{−j}` in `Δ(w)`, as a combination of words.
fn delta_part(j: u32) -> OperatorWords {
    let mut out = Vec::new();
    for m in 0..j {
        let n = j - 1 - m;
        let c = c_coefficient(m, n);
        if c.is_zero() {
            continue;
        }
        for i in 1..=4 {
            let x = GeneratorLabel::a(i, 2 * m as i32 + 1);
            let y = GeneratorLabel::astar(i, 2 * n as i32 + 1);
            out.push((c.clone(), vec![x, y]));
        }
    }
    out
}

/// `exp(Δ(w))v` as a map from `j` to the coefficient of `w^{−j}`.
pub fn delta_expansion(v: &FockVector) -> BTreeMap<u32, FockVector> {
    let max = u32::try_from(v.max_mode_depth2() / 2).unwrap_or(0);
    let mut out: BTreeMap<u32, FockVector> = BTreeMap::new();
    // terms Δ_{j1}…Δ_{jp}/p! grouped by total j
    let mut layer: BTreeMap<u32, FockVector> = BTreeMap::from([(0, v.clone())]);
    let mut p = 0i64;
    loop {
        for (j, w) in &layer {
            out.entry(*j).or_insert_with(|| FockVector::zero(v.sector)).add_assign_scaled(w, &Rational::one());
        }
        p += 1;
        let mut next: BTreeMap<u32, FockVector> = BTreeMap::new();
        for (j, w) in &layer {
            for step in 1..=max.saturating_sub(*j) {
                let img = apply_words(&delta_part(step), w).expect("NS words on NS vector");
                if img.is_zero() {
                    continue;
                }
                next.entry(j + step).or_insert_with(|| FockVector::zero(v.sector)).add_assign_scaled(&img, &rat(1, p));
            }
        }
        next.retain(|_, w| !w.is_zero());
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    out.retain(|_, w| !w.is_zero());
    out
}

/// The vacuum coefficient of the `w^{−2}` part of `exp(Δ(w))v`.
pub fn delta_correction(v: &FockVector) -> Rational {
    delta_expansion(v).get(&2).map(|w| w.coeff(&FockState::vacuum(Sector::NS))).unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(text: &str) -> FockVector {
        parse_vector(text).unwrap()
    }

    #[test]
    fn simple_root_examples() {
        let b1 = g2_simple_op(G2Simple::Beta1);
        assert_eq!(b1.apply(&ns("122*")), ns("123*").scale(&int(-1)));
        let t = g2_simple_op(G2Simple::MinusTheta);
        assert_eq!(t.apply(&ns("1(-3/2)𝟏")), ns("2*(-1/2)𝟏"));
        assert!(g2_simple_op(G2Simple::Beta2).apply(&FockVector::vacuum(Sector::NS)).is_zero());
    }

    #[test]
    fn l0_is_depth() {
        for sector in [Sector::NS, Sector::Ramond] {
            let l0 = full_l(0, sector);
            for s in enumerate_basis(sector, int(2)) {
                let v = FockVector::from_state(s.clone());
                assert_eq!(l0.apply(&v), v.scale(&s.depth()), "{}", render_state(&s));
            }
        }
    }

    #[test]
    fn delta_values() {
        let c = conformal_vectors();
        assert_eq!(c_coefficient(0, 1), rat(1, 8));
        assert_eq!(c_coefficient(1, 0), rat(-1, 8));
        assert_eq!(c_coefficient(0, 0), Rational::zero());
        assert_eq!(delta_correction(&c.d4), rat(1, 2));
        assert_eq!(delta_correction(&c.d4_b3), rat(1, 16));
        assert_eq!(delta_correction(&c.b3_g2), rat(7, 80));
        // depth below two is untouched
        let v = ns("123*");
        assert_eq!(delta_expansion(&v).len(), 1);
    }

    #[test]
    fn coset_eigen_examples() {
        let v = ns("234 + 234* - 144*");
        assert_eq!(coset_l(0, Charge::Half, Sector::NS).apply(&v), v.scale(&rat(1, 2)));
        let vac = FockVector::vacuum(Sector::Ramond);
        assert_eq!(coset_l(0, Charge::SevenTenths, Sector::Ramond).apply(&vac), vac.scale(&rat(3, 80)));
        assert_eq!(coset_l(0, Charge::Half, Sector::Ramond).apply(&vac), vac.scale(&rat(1, 16)));
    }

    #[test]
    fn l1_half_kills_flavors_one_to_three() {
        let l1 = coset_l(1, Charge::Half, Sector::NS);
        for s in basis_slice(Module::V1, &rat(3, 2)) {
            if s.factors.iter().all(|g| g.flavor <= 3) {
                assert!(l1.apply_state(&s).is_zero(), "{}", render_state(&s));
            }
        }
    }

    #[test]
    fn d4_splits_into_b3_and_half() {
        let c = conformal_vectors();
        for sector in [Sector::NS, Sector::Ramond] {
            for k in -1..=1 {
                let lhs = full_l(k, sector);
                let b3 = vertex_family(&c.b3, k, sector, "L^B3").unwrap();
                let rhs = b3.plus(&coset_l(k, Charge::Half, sector));
                for s in enumerate_basis(sector, int(2)) {
                    assert_eq!(lhs.apply_state(&s), rhs.apply_state(&s));
                }
            }
        }
    }
}

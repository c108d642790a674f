//! Operator identities checked state by state on a truncated basis.

use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub sector: Sector,
    pub states_checked: usize,
    /// First failing state in basis order, with the nonzero residual.
    pub failure: Option<(String, String)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn first_failure(basis: &[FockState], residual: impl Fn(&FockState) -> FockVector + Sync) -> Option<(String, String)> {
    let bad: Vec<(usize, String, String)> = basis
        .par_iter()
        .enumerate()
        .filter_map(|(i, s)| {
            let r = residual(s);
            (!r.is_zero()).then(|| (i, render_state(s), render_vector(&r)))
        })
        .collect();
    bad.into_iter().min_by_key(|x| x.0).map(|(_, s, r)| (s, r))
}

/// `(AB − BA − E)·s = 0` for every basis state of depth at most `max_depth`.
pub fn commutator_check(
    name: &str,
    a: &dyn FockOperator,
    b: &dyn FockOperator,
    expected: Option<&dyn FockOperator>,
    sector: Sector,
    max_depth: &Rational,
) -> IdentityReport {
    let basis = enumerate_basis(sector, max_depth.clone());
    let failure = first_failure(&basis, |s| {
        let v = FockVector::from_state(s.clone());
        let mut r = a.apply(&b.apply(&v)).sub(&b.apply(&a.apply(&v)));
        if let Some(e) = expected {
            r = r.sub(&e.apply(&v));
        }
        r
    });
    IdentityReport { identity: name.to_string(), sector, states_checked: basis.len(), failure }
}

/// `A·s = B·s` for every basis state of depth at most `max_depth`.
pub fn equality_check(
    name: &str,
    a: &dyn FockOperator,
    b: &dyn FockOperator,
    sector: Sector,
    max_depth: &Rational,
) -> IdentityReport {
    let basis = enumerate_basis(sector, max_depth.clone());
    let failure = first_failure(&basis, |s| a.apply_state(s).sub(&b.apply_state(s)));
    IdentityReport { identity: name.to_string(), sector, states_checked: basis.len(), failure }
}

/// `[L_m, L_n] = (m−n)L_{m+n} + (m³−m)/12·c·δ_{m+n,0}` for `m, n` in `range`.
pub fn virasoro_bracket_checks(
    family: &str,
    ops: &dyn Fn(i64) -> Cached<OperatorSpec>,
    central: &Rational,
    sector: Sector,
    range: std::ops::RangeInclusive<i64>,
    max_depth: &Rational,
) -> Vec<IdentityReport> {
    let lo = *range.start();
    let hi = *range.end();
    let cached: Vec<Cached<OperatorSpec>> = (2 * lo..=2 * hi).map(ops).collect();
    let get = |k: i64| &cached[(k - 2 * lo) as usize];
    let mut out = Vec::new();
    for m in lo..=hi {
        for n in lo..=hi {
            let mut expected = get(m + n).op.scale(&int(m - n));
            if m + n == 0 {
                expected.scalar += central * rat(m * m * m - m, 12);
            }
            let name = format!("[{family}_{m}, {family}_{n}]");
            out.push(commutator_check(&name, get(m), get(n), Some(&expected), sector, max_depth));
        }
    }
    out
}

/// Every bracket behind the conformal criterion: the `D4` family and both coset
/// families for `m, n` in `−2..=2`, the cosets commuting with each other, and
/// each coset commuting with the `G2^(1)` simple-root operators.
pub fn conformal_suite(sector: Sector, max_depth: &Rational) -> Vec<IdentityReport> {
    let full = |k| Cached::new(full_l(k, sector));
    let half = |k| Cached::new(coset_l(k, Charge::Half, sector));
    let seven = |k| Cached::new(coset_l(k, Charge::SevenTenths, sector));
    let mut out = virasoro_bracket_checks("L", &full, &int(4), sector, -2..=2, max_depth);
    out.extend(virasoro_bracket_checks("L^1/2", &half, &rat(1, 2), sector, -2..=2, max_depth));
    out.extend(virasoro_bracket_checks("L^7/10", &seven, &rat(7, 10), sector, -2..=2, max_depth));
    let halves: Vec<_> = (-2..=2).map(half).collect();
    let sevens: Vec<_> = (-2..=2).map(seven).collect();
    for (m, a) in (-2..=2).zip(&halves) {
        for (n, b) in (-2..=2).zip(&sevens) {
            out.push(commutator_check(&format!("[L^1/2_{m}, L^7/10_{n}]"), a, b, None, sector, max_depth));
        }
    }
    for which in G2Simple::all() {
        let x = Cached::new(g2_simple_op(which));
        for (n, (a, b)) in (-2..=2).zip(halves.iter().zip(&sevens)) {
            out.push(commutator_check(&format!("[L^1/2_{n}, {}]", which.label()), a, &x, None, sector, max_depth));
            out.push(commutator_check(&format!("[L^7/10_{n}, {}]", which.label()), b, &x, None, sector, max_depth));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_bracket_recovers_central_charge() {
        let l2 = Cached::new(coset_l(2, Charge::Half, Sector::NS));
        let lm2 = Cached::new(coset_l(-2, Charge::Half, Sector::NS));
        let expected = coset_l(0, Charge::Half, Sector::NS).scale(&int(4)).add_scalar(rat(1, 4));
        let r = commutator_check("c=1/2", &l2, &lm2, Some(&expected), Sector::NS, &int(2));
        assert!(r.passed(), "{r:?}");
        let wrong = coset_l(0, Charge::Half, Sector::NS).scale(&int(4));
        assert!(!commutator_check("c=0", &l2, &lm2, Some(&wrong), Sector::NS, &int(2)).passed());
    }

    #[test]
    fn full_virasoro_small() {
        for sector in [Sector::NS, Sector::Ramond] {
            let reports =
                virasoro_bracket_checks("L", &|k| Cached::new(full_l(k, sector)), &int(4), sector, -1..=1, &int(1));
            for r in reports {
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}

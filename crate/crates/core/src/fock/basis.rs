//! Enumeration of canonical states by depth.

use rayon::prelude::*;

use super::*;

/// Creators of `sector` with `|mode2| ≤ max_mode2`, in canonical order.
fn creators(sector: Sector, max_mode2: i64) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    let p = i64::from(sector.mode2_parity());
    let mut m2 = -max_mode2;
    while m2 <= 0 {
        if (m2 - p).rem_euclid(2) == 0 {
            for flavor in 1..=4 {
                for starred in [false, true] {
                    let g = GeneratorLabel::new(flavor, starred, m2 as i32);
                    if g.is_creator() {
                        out.push(g);
                    }
                }
            }
        }
        m2 += 1;
    }
    out
}

fn extend(
    gens: &[GeneratorLabel],
    start: usize,
    budget2: i64,
    current: &mut Vec<GeneratorLabel>,
    sector: Sector,
    out: &mut Vec<FockState>,
) {
    out.push(FockState { sector, factors: current.clone() });
    for i in start..gens.len() {
        let cost = i64::from(gens[i].mode2.abs());
        if cost <= budget2 {
            current.push(gens[i]);
            extend(gens, i + 1, budget2 - cost, current, sector, out);
            current.pop();
        }
    }
}

/// All canonical states of depth at most `max_depth`, ordered by depth then factors.
pub fn enumerate_basis(sector: Sector, max_depth: Rational) -> Vec<FockState> {
    let budget2 = (max_depth * int(2)).floor().to_integer();
    let budget2 = i64::try_from(budget2).unwrap_or(i64::MAX) - sector.vacuum_depth2();
    if budget2 < 0 {
        return Vec::new();
    }
    let gens = creators(sector, budget2);
    let mut out = Vec::new();
    extend(&gens, 0, budget2, &mut Vec::new(), sector, &mut out);
    out.par_sort_by(|x, y| (x.depth2(), &x.factors).cmp(&(y.depth2(), &y.factors)));
    out
}

/// States of one module at exactly the given depth.
pub fn basis_slice(module: Module, depth: &Rational) -> Vec<FockState> {
    let d2 = (depth * int(2)).to_integer();
    let d2 = i64::try_from(d2).unwrap_or(-1);
    enumerate_basis(module.sector(), depth.clone())
        .into_iter()
        .filter(|s| s.depth2() == d2 && s.parity() == module.parity())
        .collect()
}

/// Number of states at each twice-depth `0..=max_depth2`.
pub fn depth_counts(sector: Sector, max_depth2: i64) -> Vec<usize> {
    let mut counts = vec![0; (max_depth2 + 1).max(0) as usize];
    for s in enumerate_basis(sector, rat(max_depth2, 2)) {
        counts[s.depth2() as usize] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::products::horizontal_gr;
    use crate::qseries::Sector as QSector;
    use crate::scalars::to_i64;

    #[test]
    fn spec_counts() {
        assert_eq!(basis_slice(Module::V0, &int(1)).len(), 28);
        let ns32 = enumerate_basis(Sector::NS, rat(3, 2)).into_iter().filter(|s| s.depth2() == 3).count();
        assert_eq!(ns32, 64);
        assert_eq!(basis_slice(Module::V1, &rat(3, 2)).len(), 64);
        assert_eq!(basis_slice(Module::V2, &rat(1, 2)).len(), 8);
        assert_eq!(basis_slice(Module::V3, &rat(1, 2)).len(), 8);
        assert_eq!(depth_counts(Sector::NS, 4), [1, 8, 28, 64, 134]);
    }

    #[test]
    fn counts_match_horizontal_products() {
        let order = 9;
        let ns = horizontal_gr(QSector::NeveuSchwarz, order);
        let ns_counts = depth_counts(Sector::NS, 8);
        for j in 0..=8 {
            assert_eq!(to_i64(&ns.coeff(j)), Some(ns_counts[j] as i64), "NS x^{j}");
        }
        let r = horizontal_gr(QSector::Ramond, order);
        let r_counts = depth_counts(Sector::Ramond, 9);
        for j in 0..=8 {
            // Ramond states sit half a unit deeper than their mode sum
            assert_eq!(to_i64(&r.coeff(j)), Some(r_counts[j + 1] as i64), "R x^{j}");
        }
    }

    #[test]
    fn ordering_is_deterministic_and_canonical() {
        let b = enumerate_basis(Sector::Ramond, int(2));
        assert_eq!(b.len(), 144);
        assert!(b.windows(2).all(|w| w[0].depth2() <= w[1].depth2()));
        for s in &b {
            assert!(s.factors.windows(2).all(|w| w[0] < w[1]));
            assert!(s.factors.iter().all(|g| g.is_creator()));
        }
        assert_eq!(b, enumerate_basis(Sector::Ramond, int(2)));
    }
}

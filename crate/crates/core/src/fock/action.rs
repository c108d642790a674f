//! Clifford action, fermionic normal ordering, and normal-ordered mode sums.

use num_traits::{One, Zero};

use super::*;
use crate::scalars::{int, rat, Rational};

/// `g·s` as a signed state, or `None` when it vanishes.
pub fn apply_generator_state(g: GeneratorLabel, s: &FockState) -> Option<(i64, FockState)> {
    debug_assert_eq!(g.sector(), s.sector);
    if g.is_creator() {
        let pos = match s.factors.binary_search(&g) {
            Ok(_) => return None,
            Err(p) => p,
        };
        let mut factors = s.factors.clone();
        factors.insert(pos, g);
        Some((sign_of(pos), FockState { sector: s.sector, factors }))
    } else {
        let pos = s.factors.binary_search(&g.dual()).ok()?;
        let mut factors = s.factors.clone();
        factors.remove(pos);
        Some((sign_of(pos), FockState { sector: s.sector, factors }))
    }
}

fn sign_of(pos: usize) -> i64 {
    if pos.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_sector(g: &GeneratorLabel, sector: Sector) -> Result<(), FockError> {
    if g.sector() == sector {
        Ok(())
    } else {
        Err(FockError::SectorMismatch(render_label(g), sector))
    }
}

pub fn apply_generator(g: GeneratorLabel, v: &FockVector) -> Result<FockVector, FockError> {
    check_sector(&g, v.sector)?;
    let mut out = FockVector::zero(v.sector);
    for (s, c) in v.terms() {
        if let Some((sign, t)) = apply_generator_state(g, s) {
            out.add_term(t, c * int(sign));
        }
    }
    Ok(out)
}

/// A product of generators applied right to left.
pub fn apply_word_state(word: &[GeneratorLabel], s: &FockState) -> Option<(i64, FockState)> {
    let mut sign = 1;
    let mut cur = s.clone();
    for g in word.iter().rev() {
        let (sg, next) = apply_generator_state(*g, &cur)?;
        sign *= sg;
        cur = next;
    }
    Some((sign, cur))
}

pub fn apply_word(word: &[GeneratorLabel], v: &FockVector) -> Result<FockVector, FockError> {
    for g in word {
        check_sector(g, v.sector)?;
    }
    let mut out = FockVector::zero(v.sector);
    for (s, c) in v.terms() {
        if let Some((sign, t)) = apply_word_state(word, s) {
            out.add_term(t, c * int(sign));
        }
    }
    Ok(out)
}

/// A rational combination of generator words.
pub type OperatorWords = Vec<(Rational, Vec<GeneratorLabel>)>;

/// Fermionic normal ordering: sort by mode with the permutation sign, then replace a
/// Ramond zero-mode block by its `1/k!`-antisymmetrization.
pub fn normal_order_monomial(labels: &[GeneratorLabel]) -> OperatorWords {
    let mut v = labels.to_vec();
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1].mode2 > v[j].mode2 {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    let start = v.iter().position(|g| g.mode2 == 0);
    let Some(start) = start else {
        return vec![(int(sign), v)];
    };
    let end = v.iter().rposition(|g| g.mode2 == 0).unwrap() + 1;
    let block = &v[start..end];
    let k = block.len();
    if k == 1 {
        return vec![(int(sign), v)];
    }
    let mut fact = 1i64;
    for i in 2..=k as i64 {
        fact *= i;
    }
    let weight = rat(sign, fact);
    let mut out: std::collections::BTreeMap<Vec<GeneratorLabel>, Rational> = Default::default();
    for (psign, perm) in permutations(k) {
        let mut word = v[..start].to_vec();
        word.extend(perm.iter().map(|&i| block[i]));
        word.extend_from_slice(&v[end..]);
        *out.entry(word).or_insert_with(Rational::zero) += &weight * int(psign);
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect()
}

/// All permutations of `0..k` with their signs.
fn permutations(k: usize) -> Vec<(i64, Vec<usize>)> {
    if k == 0 {
        return vec![(1, vec![])];
    }
    let mut out = Vec::new();
    for (s, p) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // moving k-1 from the end to `pos` crosses `len - pos` entries
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((sign, q));
        }
    }
    out
}

/// Applies `Σ c·word` to a single state, accumulating into `out` with factor `scale`.
fn apply_words_state(words: &OperatorWords, s: &FockState, scale: &Rational, out: &mut FockVector) {
    for (c, w) in words {
        if let Some((sign, t)) = apply_word_state(w, s) {
            out.add_term(t, c * scale * int(sign));
        }
    }
}

/// Allowed `mode2` values for one factor of a normal-ordered product of total mode
/// `k2/2` acting on a state of mode-depth `d2/2`.
fn mode_range(sector: Sector, k2: i64, d2: i64) -> impl Iterator<Item = i32> {
    let lo = k2 - d2;
    let parity = i64::from(sector.mode2_parity());
    let first = if (lo - parity).rem_euclid(2) == 0 { lo } else { lo + 1 };
    (first..=d2).step_by(2).map(|m| m as i32)
}

/// `Σ_n w(n) ∘∘a(k−n)b(n)∘∘` on a state, with `w(n) = n − k − ½` when `derivative`.
pub fn apply_quadratic_state(a: Fermion, b: Fermion, k: i64, derivative: bool, s: &FockState) -> FockVector {
    let sector = s.sector;
    let mut out = FockVector::zero(sector);
    let d2 = s.mode_depth2();
    let k2 = 2 * k;
    if k2 > d2 {
        return out;
    }
    for n2 in mode_range(sector, k2, d2) {
        let m2 = k2 - i64::from(n2);
        if m2 < k2 - d2 || m2 > d2 {
            continue;
        }
        let (x, y) = (a.at(m2 as i32), b.at(n2));
        if x == y {
            continue;
        }
        // a positive-mode annihilator needs its partner in the state
        if !x.is_creator() && x.mode2 > 0 && s.factors.binary_search(&x.dual()).is_err() {
            continue;
        }
        if !y.is_creator() && y.mode2 > 0 && s.factors.binary_search(&y.dual()).is_err() {
            continue;
        }
        let w = if derivative { rat(i64::from(n2) - k2 - 1, 2) } else { Rational::one() };
        if w.is_zero() {
            continue;
        }
        apply_words_state(&normal_order_monomial(&[x, y]), s, &w, &mut out);
    }
    out
}

pub fn apply_quadratic(a: Fermion, b: Fermion, k: i64, derivative: bool, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.sector);
    for (s, c) in v.terms() {
        out.add_assign_scaled(&apply_quadratic_state(a, b, k, derivative, s), c);
    }
    out
}

/// Mode tuples `(r1..r4)` (as `mode2`) that can act nontrivially in
/// `Σ_{r1+r2+r3+r4=k} ∘∘f1(r1)f2(r2)f3(r3)f4(r4)∘∘` on `s`.
pub fn quartic_mode_tuples(pattern: [Fermion; 4], k: i64, s: &FockState) -> Vec<[i32; 4]> {
    let sector = s.sector;
    let d2 = s.mode_depth2();
    let k2 = 2 * k;
    if k2 > d2 {
        return Vec::new();
    }
    let allowed: Vec<Vec<i32>> = pattern
        .iter()
        .map(|f| {
            mode_range(sector, k2, d2).filter(|&m| m <= 0 || s.factors.binary_search(&f.at(m).dual()).is_ok()).collect()
        })
        .collect();
    let mut out = Vec::new();
    for &r1 in &allowed[0] {
        for &r2 in &allowed[1] {
            for &r3 in &allowed[2] {
                let r4 = k2 - i64::from(r1) - i64::from(r2) - i64::from(r3);
                let Ok(r4) = i32::try_from(r4) else { continue };
                if allowed[3].binary_search(&r4).is_err() {
                    continue;
                }
                let pos: i64 = [r1, r2, r3, r4].iter().filter(|&&m| m > 0).map(|&m| i64::from(m)).sum();
                if pos > d2 {
                    continue;
                }
                out.push([r1, r2, r3, r4]);
            }
        }
    }
    out
}

pub fn apply_quartic_state(pattern: [Fermion; 4], k: i64, s: &FockState) -> FockVector {
    let mut out = FockVector::zero(s.sector);
    let one = Rational::one();
    for modes in quartic_mode_tuples(pattern, k, s) {
        let word: Vec<GeneratorLabel> = (0..4).map(|i| pattern[i].at(modes[i])).collect();
        apply_words_state(&normal_order_monomial(&word), s, &one, &mut out);
    }
    out
}

pub fn apply_quartic(pattern: [Fermion; 4], k: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.sector);
    for (s, c) in v.terms() {
        out.add_assign_scaled(&apply_quartic_state(pattern, k, s), c);
    }
    out
}

/// Applies a combination of words to a vector.
pub fn apply_words(words: &OperatorWords, v: &FockVector) -> Result<FockVector, FockError> {
    for (_, w) in words {
        for g in w {
            check_sector(g, v.sector)?;
        }
    }
    let mut out = FockVector::zero(v.sector);
    for (s, c) in v.terms() {
        apply_words_state(words, s, c, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(f: u8, m2: i32) -> GeneratorLabel {
        GeneratorLabel::a(f, m2)
    }

    fn s(f: u8, m2: i32) -> GeneratorLabel {
        GeneratorLabel::astar(f, m2)
    }

    fn ns(factors: &[GeneratorLabel]) -> FockVector {
        FockVector::monomial(Sector::NS, Rational::one(), factors)
    }

    fn f(flavor: u8, starred: bool) -> Fermion {
        Fermion::new(flavor, starred)
    }

    #[test]
    fn single_contraction() {
        let v = apply_generator(a(1, 1), &ns(&[s(1, -1)])).unwrap();
        assert_eq!(v, FockVector::vacuum(Sector::NS));
    }

    #[test]
    fn ramond_vacuum_annihilated_and_square_zero() {
        let vac = FockVector::vacuum(Sector::Ramond);
        assert!(apply_generator(a(4, 0), &vac).unwrap().is_zero());
        let once = apply_generator(s(4, 0), &vac).unwrap();
        assert!(!once.is_zero());
        assert!(apply_generator(s(4, 0), &once).unwrap().is_zero());
    }

    #[test]
    fn sector_mismatch_is_an_error() {
        assert!(apply_generator(a(1, -1), &FockVector::vacuum(Sector::Ramond)).is_err());
    }

    #[test]
    fn normal_order_sign() {
        let t = normal_order_monomial(&[a(1, 1), s(2, -1)]);
        assert_eq!(t, vec![(int(-1), vec![s(2, -1), a(1, 1)])]);
    }

    /// Expands the product on the right-hand side of a plain word list.
    fn op_on(words: &[(Rational, Vec<GeneratorLabel>)], v: &FockVector) -> FockVector {
        apply_words(&words.to_vec(), v).unwrap()
    }

    #[test]
    fn four_zero_modes_mixed() {
        // ∘∘i(0)i*(0)j(0)j*(0)∘∘ = ¼ − i*j*ij − ½ i*i − ½ j*j
        let basis = enumerate_basis(Sector::Ramond, rat(1, 2));
        for (i, j) in [(1u8, 2u8), (2, 4), (3, 1)] {
            let lhs = normal_order_monomial(&[a(i, 0), s(i, 0), a(j, 0), s(j, 0)]);
            let rhs = vec![
                (rat(1, 4), vec![]),
                (int(-1), vec![s(i, 0), s(j, 0), a(i, 0), a(j, 0)]),
                (rat(-1, 2), vec![s(i, 0), a(i, 0)]),
                (rat(-1, 2), vec![s(j, 0), a(j, 0)]),
            ];
            for st in &basis {
                let v = FockVector::from_state(st.clone());
                assert_eq!(op_on(&lhs, &v), op_on(&rhs, &v));
            }
        }
    }

    #[test]
    fn four_zero_modes_distinct() {
        let basis = enumerate_basis(Sector::Ramond, rat(1, 2));
        let word = [s(1, 0), a(2, 0), s(3, 0), a(4, 0)];
        let lhs = normal_order_monomial(&word);
        let rhs = vec![(Rational::one(), word.to_vec())];
        for st in &basis {
            let v = FockVector::from_state(st.clone());
            assert_eq!(op_on(&lhs, &v), op_on(&rhs, &v));
        }
    }

    #[test]
    fn quadratic_table_entry() {
        // Σ∘∘2(−r)3*(r)∘∘ on 133*
        let v = ns(&[a(1, -1), a(3, -1), s(3, -1)]);
        let out = apply_quadratic(f(2, false), f(3, true), 0, false, &v);
        assert_eq!(out, ns(&[a(1, -1), a(2, -1), s(3, -1)]));
        let vac = FockVector::vacuum(Sector::NS);
        assert!(apply_quadratic(f(2, false), f(3, true), 0, false, &vac).is_zero());
    }

    #[test]
    fn quartic_table_entries() {
        let q = |p: [(u8, bool); 4], k: i64, v: &FockVector| apply_quartic(p.map(|(x, y)| f(x, y)), k, v);
        let v234 = ns(&[a(2, -1), a(3, -1), a(4, -1)]);
        assert_eq!(q([(2, false), (2, true), (3, false), (3, true)], 0, &v234), v234);
        let v144 = ns(&[a(1, -1), a(4, -1), s(4, -1)]);
        let target = ns(&[a(2, -1), a(3, -1), s(4, -1)]).scale(&int(-1));
        assert_eq!(q([(1, true), (2, false), (3, false), (4, true)], 0, &v144), target);
        let v = ns(&[a(2, -1), a(3, -1), s(4, -1)]);
        assert_eq!(q([(1, false), (2, true), (3, true), (4, false)], 1, &v), ns(&[a(1, -1)]).scale(&int(-1)));
    }

    #[test]
    fn quartic_multiset_term_counts() {
        // on a depth-two state a_i a_j a_m a_n(−½)𝟏 at k = 0, the nonvanishing mode
        // tuples are the arrangements of {−½,−½,½,½} and {−3/2,½,½,½}... restricted
        // by which partners are present
        let st = FockState::from_factors(Sector::NS, &[a(1, -1), a(2, -1), s(1, -1), s(2, -1)]).unwrap().1;
        let tuples = quartic_mode_tuples([f(1, false), f(1, true), f(2, false), f(2, true)], 0, &st);
        let pp_mm = tuples
            .iter()
            .filter(|t| t.iter().filter(|&&m| m == -1).count() == 2 && t.iter().filter(|&&m| m == 1).count() == 2)
            .count();
        assert_eq!(pp_mm, 6);
        let mppp = tuples.iter().filter(|t| t.iter().filter(|&&m| m == 1).count() == 3).count();
        assert_eq!(mppp, 4);
    }

    #[test]
    fn clifford_relation_on_basis() {
        for sector in [Sector::NS, Sector::Ramond] {
            let basis = enumerate_basis(sector, int(2));
            let p = sector.mode2_parity();
            let mut gens = Vec::new();
            for m2 in (-4..=4).filter(|m: &i32| m.rem_euclid(2) == p) {
                for fl in 1..=4 {
                    gens.push(a(fl, m2));
                    gens.push(s(fl, m2));
                }
            }
            for g in &gens {
                for h in &gens {
                    let pairing = if g.dual() == *h { Rational::one() } else { Rational::zero() };
                    for st in &basis {
                        let v = FockVector::from_state(st.clone());
                        let gh = apply_generator(*g, &apply_generator(*h, &v).unwrap()).unwrap();
                        let hg = apply_generator(*h, &apply_generator(*g, &v).unwrap()).unwrap();
                        assert_eq!(gh.add(&hg), v.scale(&pairing), "{g:?} {h:?} {st:?}");
                    }
                }
            }
        }
    }

    fn arb_label(sector: Sector) -> impl Strategy<Value = GeneratorLabel> {
        let p = sector.mode2_parity();
        (1u8..=4, any::<bool>(), -2i32..=2).prop_map(move |(fl, st, m)| GeneratorLabel::new(fl, st, 2 * m + p))
    }

    proptest! {
        #[test]
        fn normal_order_alternates(
            w in prop::collection::vec(arb_label(Sector::Ramond), 2..5),
            i in 0usize..4,
        ) {
            let i = i % (w.len() - 1);
            prop_assume!(w[i].mode2 != 0 || w[i + 1].mode2 != 0);
            prop_assume!(w[i].mode2 != w[i + 1].mode2 || w[i] != w[i + 1]);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            let st = FockState::vacuum(Sector::Ramond);
            let basis = enumerate_basis(Sector::Ramond, int(3));
            let lhs = normal_order_monomial(&w);
            let rhs: OperatorWords = normal_order_monomial(&swapped).into_iter().map(|(c, x)| (-c, x)).collect();
            for b in basis.iter().chain(std::iter::once(&st)).take(40) {
                let v = FockVector::from_state(b.clone());
                prop_assert_eq!(apply_words(&lhs, &v).unwrap(), apply_words(&rhs, &v).unwrap());
            }
        }

        #[test]
        fn quadratic_antisymmetric(
            fa in (1u8..=4, any::<bool>()),
            fb in (1u8..=4, any::<bool>()),
            k in -1i64..=1,
            idx in prop::collection::vec((0usize..200, -3i64..=3), 1..4),
        ) {
            let basis = enumerate_basis(Sector::NS, int(2));
            let mut v = FockVector::zero(Sector::NS);
            for (i, c) in idx {
                v.add_term(basis[i % basis.len()].clone(), int(c));
            }
            let (x, y) = (f(fa.0, fa.1), f(fb.0, fb.1));
            let lhs = apply_quadratic(x, y, k, false, &v);
            // swapping the fields with n ↦ k − n
            let rhs = apply_quadratic(y, x, k, false, &v).scale(&int(-1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

//! The Chevalley algebra `A ⊕ CM⁰ ⊕ CM¹`: basis labels, elements, the pairing,
//! the finite Clifford action and the `∘` product.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalars::Eisenstein;

/// A generator `a_i` or `a_i*` of `A`. Orders `a1 < .. < a4 < a1* < .. < a4*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub starred: bool,
    pub flavor: u8,
}

impl Gen {
    pub fn a(flavor: u8) -> Gen {
        assert!((1..=4).contains(&flavor));
        Gen { starred: false, flavor }
    }

    pub fn astar(flavor: u8) -> Gen {
        assert!((1..=4).contains(&flavor));
        Gen { starred: true, flavor }
    }

    pub fn all() -> Vec<Gen> {
        (1..=4).map(Gen::a).chain((1..=4).map(Gen::astar)).collect()
    }

    pub fn index(&self) -> usize {
        (self.flavor as usize - 1) + if self.starred { 4 } else { 0 }
    }

    pub fn dual(&self) -> Gen {
        Gen { starred: !self.starred, flavor: self.flavor }
    }

    /// `(a_i, a_j*) = δ_ij`, all other pairings zero.
    pub fn pair(&self, o: &Gen) -> i64 {
        i64::from(self.flavor == o.flavor && self.starred != o.starred)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.flavor, if self.starred { "*" } else { "" })
    }
}

/// Basis label of the Chevalley algebra. `Cm(mask)` is `v_S = a_S*·v` where bit
/// `i-1` of `mask` marks flavor `i` in `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CLabel {
    A(Gen),
    Cm(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summand {
    A,
    Cm0,
    Cm1,
}

const CM0_ORDER: [u8; 8] = [0b0000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b1111];
const CM1_ORDER: [u8; 8] = [0b0001, 0b0010, 0b0100, 0b1000, 0b0111, 0b1011, 0b1101, 0b1110];

impl CLabel {
    /// The 24 labels: `A`, then `CM⁰` (`v, v12, .., v34, w`), then `CM¹`.
    pub fn all() -> Vec<CLabel> {
        let mut out: Vec<CLabel> = Gen::all().into_iter().map(CLabel::A).collect();
        out.extend(CM0_ORDER.iter().map(|&m| CLabel::Cm(m)));
        out.extend(CM1_ORDER.iter().map(|&m| CLabel::Cm(m)));
        out
    }

    pub fn index(&self) -> usize {
        match self {
            CLabel::A(g) => g.index(),
            CLabel::Cm(m) if m.count_ones() % 2 == 0 => 8 + CM0_ORDER.iter().position(|x| x == m).expect("mask"),
            CLabel::Cm(m) => 16 + CM1_ORDER.iter().position(|x| x == m).expect("mask"),
        }
    }

    pub fn summand(&self) -> Summand {
        match self {
            CLabel::A(_) => Summand::A,
            CLabel::Cm(m) if m.count_ones() % 2 == 0 => Summand::Cm0,
            CLabel::Cm(_) => Summand::Cm1,
        }
    }

    /// `v_S` from the flavors in `S`, any order; the sign reorders them ascending.
    pub fn cm(flavors: &[u8]) -> (i64, CLabel) {
        let mut mask = 0u8;
        for &f in flavors {
            assert!((1..=4).contains(&f));
            if mask & (1 << (f - 1)) != 0 {
                return (0, CLabel::Cm(0));
            }
            mask |= 1 << (f - 1);
        }
        (perm_sign(flavors), CLabel::Cm(mask))
    }
}

impl fmt::Display for CLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CLabel::A(g) => write!(f, "{g}"),
            CLabel::Cm(0) => write!(f, "v"),
            CLabel::Cm(0b1111) => write!(f, "w"),
            CLabel::Cm(m) => write!(f, "v{}", mask_flavors(*m).iter().map(|x| x.to_string()).collect::<String>()),
        }
    }
}

pub fn mask_flavors(mask: u8) -> Vec<u8> {
    (1..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

/// Sign of the permutation sorting `xs` ascending (by inversion count); 0 on repeats.
pub fn perm_sign(xs: &[u8]) -> i64 {
    let mut inv = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return 0;
            }
            if xs[i] > xs[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Element of the Chevalley algebra; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ChevalleyElement {
    coeffs: BTreeMap<CLabel, Eisenstein>,
}

impl ChevalleyElement {
    pub fn zero() -> Self {
        ChevalleyElement::default()
    }

    pub fn basis(l: CLabel) -> Self {
        ChevalleyElement::term(Eisenstein::one(), l)
    }

    pub fn term(c: Eisenstein, l: CLabel) -> Self {
        let mut e = ChevalleyElement::zero();
        e.add_term(l, c);
        e
    }

    pub fn gen(g: Gen) -> Self {
        ChevalleyElement::basis(CLabel::A(g))
    }

    /// `v_S` for flavors in any order, with the reordering sign.
    pub fn cm(flavors: &[u8]) -> Self {
        let (s, l) = CLabel::cm(flavors);
        ChevalleyElement::term(Eisenstein::from(s), l)
    }

    pub fn add_term(&mut self, l: CLabel, c: Eisenstein) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(l).or_insert_with(Eisenstein::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CLabel, &Eisenstein)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, l: &CLabel) -> Eisenstein {
        self.coeffs.get(l).cloned().unwrap_or_else(Eisenstein::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Eisenstein) -> Self {
        let mut out = ChevalleyElement::zero();
        for (l, x) in &self.coeffs {
            out.add_term(*l, x.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, o: &ChevalleyElement) -> Self {
        let mut out = self.clone();
        for (l, x) in &o.coeffs {
            out.add_term(*l, x.clone());
        }
        out
    }

    pub fn sub(&self, o: &ChevalleyElement) -> Self {
        self.add(&o.scale(&Eisenstein::from(-1)))
    }

    /// Dense coordinates in the order of `CLabel::all`.
    pub fn to_vec(&self) -> Vec<Eisenstein> {
        let mut v = vec![Eisenstein::zero(); 24];
        for (l, x) in &self.coeffs {
            v[l.index()] = x.clone();
        }
        v
    }

    pub fn from_vec(v: &[Eisenstein]) -> Self {
        let mut out = ChevalleyElement::zero();
        for (l, x) in CLabel::all().into_iter().zip(v) {
            out.add_term(l, x.clone());
        }
        out
    }

    /// The summand containing every term, if there is exactly one.
    pub fn summand(&self) -> Option<Summand> {
        let mut it = self.coeffs.keys().map(CLabel::summand);
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    /// Extends a map on basis labels linearly.
    pub fn map_linear(&self, f: impl Fn(CLabel) -> ChevalleyElement) -> ChevalleyElement {
        let mut out = ChevalleyElement::zero();
        for (l, x) in &self.coeffs {
            out = out.add(&f(*l).scale(x));
        }
        out
    }
}

impl fmt::Display for ChevalleyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            let s = c.to_string();
            let neg = c.is_rational() && s.starts_with('-');
            let mag = if neg { s[1..].to_string() } else { s };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if mag == "1" {
                write!(f, "{l}")?;
            } else if c.is_rational() {
                write!(f, "{mag}{l}")?;
            } else {
                write!(f, "({mag}){l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChevalleyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Left action of `a_i` or `a_i*` on `v_S`: a signed basis label, or `None` for zero.
pub fn clifford_basis(g: Gen, mask: u8) -> Option<(i64, u8)> {
    let bit = 1u8 << (g.flavor - 1);
    let before = (mask & (bit - 1)).count_ones();
    let sign = if before.is_multiple_of(2) { 1 } else { -1 };
    match (g.starred, mask & bit != 0) {
        (true, false) => Some((sign, mask | bit)),
        (false, true) => Some((sign, mask & !bit)),
        _ => None,
    }
}

/// `a·b` for `a ∈ A` acting on the `CM` part of `b`; the `A` part of `b` must vanish.
pub fn finite_clifford_act(a: &ChevalleyElement, b: &ChevalleyElement) -> ChevalleyElement {
    let mut out = ChevalleyElement::zero();
    for (la, ca) in a.terms() {
        let CLabel::A(g) = la else { panic!("left factor must lie in A") };
        for (lb, cb) in b.terms() {
            let CLabel::Cm(m) = lb else { panic!("right factor must lie in CM") };
            if let Some((s, m2)) = clifford_basis(*g, *m) {
                out.add_term(CLabel::Cm(m2), ca.clone() * cb.clone() * Eisenstein::from(s));
            }
        }
    }
    out
}

/// Pairing of basis labels: `(a_i, a_j*) = δ_ij` on `A`; on `CM`, `(v_S, v_T)` is
/// the coefficient of `w` in `α(v_S)v_T`, nonzero only for complementary `S, T`.
pub fn pair_labels(x: &CLabel, y: &CLabel) -> i64 {
    match (x, y) {
        (CLabel::A(g), CLabel::A(h)) => g.pair(h),
        (CLabel::Cm(s), CLabel::Cm(t)) => {
            if s & t != 0 || (s | t) != 0b1111 {
                return 0;
            }
            let mut seq: Vec<u8> = mask_flavors(*s).into_iter().rev().collect();
            seq.extend(mask_flavors(*t));
            perm_sign(&seq)
        }
        _ => 0,
    }
}

pub fn pairing(x: &ChevalleyElement, y: &ChevalleyElement) -> Eisenstein {
    let mut acc = Eisenstein::zero();
    for (lx, cx) in x.terms() {
        for (ly, cy) in y.terms() {
            let p = pair_labels(lx, ly);
            if p != 0 {
                acc += cx.clone() * cy.clone() * Eisenstein::from(p);
            }
        }
    }
    acc
}

/// Pairing restricted to `CM` elements.
pub fn cm_pairing(b: &ChevalleyElement, c: &ChevalleyElement) -> Eisenstein {
    assert!(b.terms().chain(c.terms()).all(|(l, _)| matches!(l, CLabel::Cm(_))), "CM elements expected");
    pairing(b, c)
}

fn a_elt(sign: i64, g: Gen) -> ChevalleyElement {
    ChevalleyElement::term(Eisenstein::from(sign), CLabel::A(g))
}

fn missing(mask: u8) -> u8 {
    mask_flavors(!mask & 0b1111)[0]
}

/// `v_S ∘ v_T` for `S` even and `T` odd, from the rule table.
fn circ_even_odd(s: u8, t: u8) -> ChevalleyElement {
    let fs = mask_flavors(s);
    let ft = mask_flavors(t);
    match (fs.len(), ft.len()) {
        // v ∘ v_i = 0
        (0, 1) => ChevalleyElement::zero(),
        // v ∘ v_ijk = sgn(lijk) a_l
        (0, 3) => {
            let l = missing(t);
            a_elt(perm_sign(&[l, ft[0], ft[1], ft[2]]), Gen::a(l))
        }
        // w ∘ v_i = a_i*
        (4, 1) => a_elt(1, Gen::astar(ft[0])),
        // w ∘ v_ijk = 0
        (4, 3) => ChevalleyElement::zero(),
        (2, 1) => {
            let i = ft[0];
            if s & t != 0 {
                // repeated subscript
                ChevalleyElement::zero()
            } else {
                // v_i ∘ v_jk = sgn(iljk) a_l
                let l = missing(s | t);
                a_elt(perm_sign(&[i, l, fs[0], fs[1]]), Gen::a(l))
            }
        }
        (2, 3) => {
            let common = s & t;
            if common.count_ones() == 2 {
                return ChevalleyElement::zero();
            }
            // v_ij ∘ v_jkl = sgn(jikl) a_j*, with v_ij = a_i* a_j* and v_jkl = a_j* a_k* a_l*
            let j = mask_flavors(common)[0];
            let i = mask_flavors(s & !common)[0];
            let kl = mask_flavors(t & !common);
            let (k, l) = (kl[0], kl[1]);
            let sign = perm_sign(&[i, j]) * perm_sign(&[j, k, l]) * perm_sign(&[j, i, k, l]);
            a_elt(sign, Gen::astar(j))
        }
        _ => unreachable!("parities checked by caller"),
    }
}

pub fn circ_labels(x: &CLabel, y: &CLabel) -> ChevalleyElement {
    match (x, y) {
        (CLabel::A(_), CLabel::A(_)) => ChevalleyElement::zero(),
        (CLabel::A(g), CLabel::Cm(m)) | (CLabel::Cm(m), CLabel::A(g)) => match clifford_basis(*g, *m) {
            Some((s, m2)) => ChevalleyElement::term(Eisenstein::from(s), CLabel::Cm(m2)),
            None => ChevalleyElement::zero(),
        },
        (CLabel::Cm(s), CLabel::Cm(t)) => match (s.count_ones() % 2, t.count_ones() % 2) {
            (0, 1) => circ_even_odd(*s, *t),
            (1, 0) => circ_even_odd(*t, *s),
            _ => ChevalleyElement::zero(),
        },
    }
}

pub fn circ_product(u1: &ChevalleyElement, u2: &ChevalleyElement) -> ChevalleyElement {
    let mut out = ChevalleyElement::zero();
    for (l1, c1) in u1.terms() {
        for (l2, c2) in u2.terms() {
            let p = circ_labels(l1, l2);
            if !p.is_zero() {
                out = out.add(&p.scale(&(c1.clone() * c2.clone())));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: i64) -> Eisenstein {
        Eisenstein::from(n)
    }

    fn vac() -> ChevalleyElement {
        ChevalleyElement::cm(&[])
    }

    /// `b ∘ c = Σ_x (x b, c) x^∨` over the basis of `A`, with `a_i^∨ = a_i*`:
    /// the defining property `(b∘c, a) = (ab, c)` solved against the dual basis.
    fn circ_oracle(b: &ChevalleyElement, c: &ChevalleyElement) -> ChevalleyElement {
        let mut out = ChevalleyElement::zero();
        for g in Gen::all() {
            let xb = finite_clifford_act(&ChevalleyElement::gen(g), b);
            let p = pairing(&xb, c);
            out = out.add(&ChevalleyElement::gen(g.dual()).scale(&p));
        }
        out
    }

    #[test]
    fn clifford_examples() {
        let a1s = ChevalleyElement::gen(Gen::astar(1));
        assert_eq!(finite_clifford_act(&a1s, &vac()), ChevalleyElement::cm(&[1]));
        let a1 = ChevalleyElement::gen(Gen::a(1));
        assert_eq!(finite_clifford_act(&a1, &ChevalleyElement::cm(&[1])), vac());
        assert!(finite_clifford_act(&a1, &ChevalleyElement::cm(&[2, 3])).is_zero());
    }

    #[test]
    fn clifford_relations_hold() {
        for g in Gen::all() {
            for h in Gen::all() {
                for m in 0..16u8 {
                    let b = ChevalleyElement::basis(CLabel::Cm(m));
                    let gh = finite_clifford_act(
                        &ChevalleyElement::gen(g),
                        &finite_clifford_act(&ChevalleyElement::gen(h), &b),
                    );
                    let hg = finite_clifford_act(
                        &ChevalleyElement::gen(h),
                        &finite_clifford_act(&ChevalleyElement::gen(g), &b),
                    );
                    assert_eq!(gh.add(&hg), b.scale(&e(g.pair(&h))));
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(cm_pairing(&vac(), &ChevalleyElement::cm(&[1, 2, 3, 4])), e(1));
        assert_eq!(cm_pairing(&ChevalleyElement::cm(&[1]), &ChevalleyElement::cm(&[2, 3, 4])), e(1));
        for x in CLabel::all() {
            for y in CLabel::all() {
                assert_eq!(pair_labels(&x, &y), pair_labels(&y, &x), "symmetry {x} {y}");
                if x.summand() == Summand::Cm0 && y.summand() == Summand::Cm1 {
                    assert_eq!(pair_labels(&x, &y), 0);
                }
            }
        }
    }

    #[test]
    fn pairing_is_clifford_adjoint() {
        // (ab, c) = (b, ac) for a in A
        for g in Gen::all() {
            let a = ChevalleyElement::gen(g);
            for s in 0..16u8 {
                for t in 0..16u8 {
                    let b = ChevalleyElement::basis(CLabel::Cm(s));
                    let c = ChevalleyElement::basis(CLabel::Cm(t));
                    assert_eq!(pairing(&finite_clifford_act(&a, &b), &c), pairing(&b, &finite_clifford_act(&a, &c)));
                }
            }
        }
    }

    #[test]
    fn rule_table_matches_defining_property() {
        for &s in &CM0_ORDER {
            for &t in &CM1_ORDER {
                let b = ChevalleyElement::basis(CLabel::Cm(s));
                let c = ChevalleyElement::basis(CLabel::Cm(t));
                assert_eq!(circ_product(&b, &c), circ_oracle(&b, &c), "{b} ∘ {c}");
            }
        }
    }

    #[test]
    fn circ_rule_examples() {
        assert!(circ_product(&vac(), &ChevalleyElement::cm(&[1])).is_zero());
        // v_1 ∘ v_23 = sgn(1423) a_4
        let p = circ_product(&ChevalleyElement::cm(&[1]), &ChevalleyElement::cm(&[2, 3]));
        assert_eq!(p, ChevalleyElement::term(e(perm_sign(&[1, 4, 2, 3])), CLabel::A(Gen::a(4))));
        assert!(circ_product(&ChevalleyElement::cm(&[1, 2]), &ChevalleyElement::cm(&[1, 2, 3])).is_zero());
        assert_eq!(
            circ_product(&ChevalleyElement::cm(&[2]), &ChevalleyElement::cm(&[1, 2, 3, 4])),
            ChevalleyElement::gen(Gen::astar(2))
        );
    }

    #[test]
    fn circ_is_commutative_and_invariant() {
        let all = CLabel::all();
        for x in &all {
            for y in &all {
                let xy = circ_labels(x, y);
                assert_eq!(xy, circ_labels(y, x));
                for z in &all {
                    let lhs = pairing(&xy, &ChevalleyElement::basis(*z));
                    let rhs = pairing(&ChevalleyElement::basis(*x), &circ_labels(y, z));
                    assert_eq!(lhs, rhs, "({x}∘{y},{z})");
                }
            }
        }
    }
}

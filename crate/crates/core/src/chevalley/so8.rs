//! `g ≅ so(8)` spanned by the normal-ordered pairs `∘∘ab∘∘`, its action on the
//! Chevalley algebra, and the identification of the triality-permuted copies.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::algebra::*;
use super::triality::{sigma_pow, tau};
use crate::linalg::Matrix;
use crate::scalars::{rat, Eisenstein};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum So8Error {
    #[error("operator is not in the span of g: {0}")]
    Inconsistent(String),
    #[error("factors of a normal-ordered pair must lie in one summand")]
    MixedSummands,
}

/// Linear combination of `∘∘ab∘∘` over the 28 pairs `a < b` of generators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SO8Element {
    coeffs: BTreeMap<(Gen, Gen), Eisenstein>,
}

impl SO8Element {
    pub fn zero() -> Self {
        SO8Element::default()
    }

    /// `c·∘∘ab∘∘`, reordered with `∘∘ab∘∘ = -∘∘ba∘∘`.
    pub fn pair_scaled(c: Eisenstein, a: Gen, b: Gen) -> Self {
        let mut x = SO8Element::zero();
        x.add_pair(a, b, c);
        x
    }

    pub fn pair(a: Gen, b: Gen) -> Self {
        SO8Element::pair_scaled(Eisenstein::one(), a, b)
    }

    /// `h_i = ∘∘a_i a_i*∘∘`.
    pub fn h(i: u8) -> Self {
        SO8Element::pair(Gen::a(i), Gen::astar(i))
    }

    /// The 28 basis pairs in canonical order.
    pub fn basis_pairs() -> Vec<(Gen, Gen)> {
        let gens = Gen::all();
        let mut out = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                out.push((*a, *b));
            }
        }
        out
    }

    pub fn add_pair(&mut self, a: Gen, b: Gen, c: Eisenstein) {
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        let e = self.coeffs.entry(key).or_insert_with(Eisenstein::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Gen, Gen), &Eisenstein)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, a: Gen, b: Gen) -> Eisenstein {
        if a < b {
            self.coeffs.get(&(a, b)).cloned().unwrap_or_else(Eisenstein::zero)
        } else {
            -self.coeffs.get(&(b, a)).cloned().unwrap_or_else(Eisenstein::zero)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Eisenstein) -> Self {
        let mut out = SO8Element::zero();
        for ((a, b), x) in &self.coeffs {
            out.add_pair(*a, *b, x.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, o: &SO8Element) -> Self {
        let mut out = self.clone();
        for ((a, b), x) in &o.coeffs {
            out.add_pair(*a, *b, x.clone());
        }
        out
    }

    pub fn sub(&self, o: &SO8Element) -> Self {
        self.add(&o.scale(&Eisenstein::from(-1)))
    }

    /// Coordinates in the order of `basis_pairs`.
    pub fn to_vec(&self) -> Vec<Eisenstein> {
        SO8Element::basis_pairs().into_iter().map(|(a, b)| self.coeff(a, b)).collect()
    }

    pub fn from_vec(v: &[Eisenstein]) -> Self {
        let mut out = SO8Element::zero();
        for ((a, b), x) in SO8Element::basis_pairs().into_iter().zip(v) {
            out.add_pair(a, b, x.clone());
        }
        out
    }
}

impl fmt::Display for SO8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in &self.coeffs {
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
            let body = format!("∘∘{a}{b}∘∘");
            if mag == "1" {
                write!(f, "{body}")?;
            } else if c.is_rational() {
                write!(f, "{mag}{body}")?;
            } else {
                write!(f, "({mag}){body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SO8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn e(n: i64) -> Eisenstein {
    Eisenstein::from(n)
}

fn pair_bracket(u1: Gen, v1: Gen, u2: Gen, v2: Gen) -> SO8Element {
    let mut out = SO8Element::zero();
    out.add_pair(u1, v2, e(v1.pair(&u2)));
    out.add_pair(v1, u2, e(u1.pair(&v2)));
    out.add_pair(v1, v2, e(-u1.pair(&u2)));
    out.add_pair(u1, u2, e(-v1.pair(&v2)));
    out
}

/// Four-term bracket of normal-ordered pairs, extended bilinearly.
pub fn bracket(x: &SO8Element, y: &SO8Element) -> SO8Element {
    let mut out = SO8Element::zero();
    for ((u1, v1), c1) in x.terms() {
        for ((u2, v2), c2) in y.terms() {
            out = out.add(&pair_bracket(*u1, *v1, *u2, *v2).scale(&(c1.clone() * c2.clone())));
        }
    }
    out
}

/// `(∘∘u1v1∘∘, ∘∘u2v2∘∘) = (u1,v2)(v1,u2) - (u1,u2)(v1,v2)`.
pub fn killing(x: &SO8Element, y: &SO8Element) -> Eisenstein {
    let mut acc = Eisenstein::zero();
    for ((u1, v1), c1) in x.terms() {
        for ((u2, v2), c2) in y.terms() {
            let k = u1.pair(v2) * v1.pair(u2) - u1.pair(u2) * v1.pair(v2);
            if k != 0 {
                acc += c1.clone() * c2.clone() * e(k);
            }
        }
    }
    acc
}

/// The matrix in `so(8)` with rows and columns indexed `a1..a4, a1*..a4*`.
pub fn so8_matrix(x: &SO8Element) -> Matrix<Eisenstein> {
    let mut m: Matrix<Eisenstein> = Matrix::zeros(8, 8);
    let mut bump = |i: usize, j: usize, c: Eisenstein| {
        let v = m.get(i, j).clone() + c;
        m.set(i, j, v);
    };
    for ((a, b), c) in x.terms() {
        let (i, j) = (a.flavor as usize - 1, b.flavor as usize - 1);
        match (a.starred, b.starred) {
            (false, false) => {
                bump(i, j + 4, c.clone());
                bump(j, i + 4, -c.clone());
            }
            (true, true) => {
                bump(i + 4, j, c.clone());
                bump(j + 4, i, -c.clone());
            }
            (false, true) => {
                bump(i, j, c.clone());
                bump(j + 4, i + 4, -c.clone());
            }
            (true, false) => unreachable!("canonical pairs put unstarred first"),
        }
    }
    m
}

/// Inverse of `so8_matrix` on its image.
pub fn from_so8_matrix(m: &Matrix<Eisenstein>) -> SO8Element {
    let mut x = SO8Element::zero();
    for i in 0..4u8 {
        for j in 0..4u8 {
            let (iu, ju) = (i as usize, j as usize);
            x.add_pair(Gen::a(i + 1), Gen::astar(j + 1), m.get(iu, ju).clone());
            if i < j {
                x.add_pair(Gen::a(i + 1), Gen::a(j + 1), m.get(iu, ju + 4).clone());
                x.add_pair(Gen::astar(i + 1), Gen::astar(j + 1), m.get(iu + 4, ju).clone());
            }
        }
    }
    x
}

/// Action of `∘∘pq∘∘` on a basis label, for `p, q` in one summand `V`:
/// `(q,u)p - (p,u)q` on `V` and `½(p∘(q∘u) - q∘(p∘u))` on the other summands.
fn pair_action_label(p: &ChevalleyElement, q: &ChevalleyElement, home: Summand, u: CLabel) -> ChevalleyElement {
    let b = ChevalleyElement::basis(u);
    if u.summand() == home {
        p.scale(&pairing(q, &b)).sub(&q.scale(&pairing(p, &b)))
    } else {
        let pq = circ_product(p, &circ_product(q, &b));
        let qp = circ_product(q, &circ_product(p, &b));
        pq.sub(&qp).scale(&Eisenstein::from_rational(rat(1, 2)))
    }
}

/// 24×24 matrix of `∘∘pq∘∘` on the Chevalley algebra, columns indexed by `CLabel::all`.
pub fn pair_operator(p: &ChevalleyElement, q: &ChevalleyElement) -> Result<Matrix<Eisenstein>, So8Error> {
    let home = match (p.summand(), q.summand()) {
        (Some(a), Some(b)) if a == b => a,
        (None, _) | (_, None) if p.is_zero() || q.is_zero() => return Ok(Matrix::zeros(24, 24)),
        _ => return Err(So8Error::MixedSummands),
    };
    let cols: Vec<Vec<Eisenstein>> =
        CLabel::all().into_iter().map(|u| pair_action_label(p, q, home, u).to_vec()).collect();
    Ok(Matrix::from_cols(&cols))
}

/// `x·u` for `x ∈ g`.
pub fn g_action(x: &SO8Element, u: &ChevalleyElement) -> ChevalleyElement {
    let mut out = ChevalleyElement::zero();
    for ((a, b), c) in x.terms() {
        let p = ChevalleyElement::gen(*a);
        let q = ChevalleyElement::gen(*b);
        let img = u.map_linear(|l| pair_action_label(&p, &q, Summand::A, l));
        out = out.add(&img.scale(c));
    }
    out
}

pub fn operator_matrix(x: &SO8Element) -> Matrix<Eisenstein> {
    let cols: Vec<Vec<Eisenstein>> =
        CLabel::all().into_iter().map(|l| g_action(x, &ChevalleyElement::basis(l)).to_vec()).collect();
    Matrix::from_cols(&cols)
}

/// Expresses a 24×24 operator as an element of `g`: coordinates are read off the
/// `A` block and the whole operator is then compared.
pub fn identify_matrix(m: &Matrix<Eisenstein>) -> Result<SO8Element, So8Error> {
    let mut block: Matrix<Eisenstein> = Matrix::zeros(8, 8);
    for i in 0..8 {
        for j in 0..8 {
            block.set(i, j, m.get(i, j).clone());
        }
    }
    let x = from_so8_matrix(&block);
    if &operator_matrix(&x) != m {
        return Err(So8Error::Inconsistent(x.to_string()));
    }
    Ok(x)
}

/// Operator of `σ^i x`, i.e. of `Σ c ∘∘(σ^i a)(σ^i b)∘∘`, built in the permuted construction.
pub fn sigma_operator(i: usize, x: &SO8Element) -> Matrix<Eisenstein> {
    let mut m: Matrix<Eisenstein> = Matrix::zeros(24, 24);
    for ((a, b), c) in x.terms() {
        let p = sigma_pow(i, &ChevalleyElement::gen(*a));
        let q = sigma_pow(i, &ChevalleyElement::gen(*b));
        let op = pair_operator(&p, &q).expect("σ preserves summands");
        m = m.add(&op.scale(c));
    }
    m
}

/// `σ^i x` expressed back in `g`.
pub fn identify_operator(i: usize, x: &SO8Element) -> Result<SO8Element, So8Error> {
    identify_matrix(&sigma_operator(i, x))
}

/// Operator `c·∘∘pq∘∘` for two basis labels of one summand, identified in `g`.
pub fn identify_pair(c: i64, p: CLabel, q: CLabel) -> Result<SO8Element, So8Error> {
    let op = pair_operator(&ChevalleyElement::basis(p), &ChevalleyElement::basis(q))?;
    identify_matrix(&op.scale(&e(c)))
}

pub fn sigma_g(x: &SO8Element) -> SO8Element {
    identify_operator(1, x).expect("σ preserves g")
}

/// `τ∘∘ab∘∘ = ∘∘(τa)(τb)∘∘`; `τ` preserves `A`, so this lies in `g` directly.
pub fn tau_g(x: &SO8Element) -> SO8Element {
    let mut out = SO8Element::zero();
    for ((a, b), c) in x.terms() {
        let ta = tau(&ChevalleyElement::gen(*a));
        let tb = tau(&ChevalleyElement::gen(*b));
        for (la, ca) in ta.terms() {
            for (lb, cb) in tb.terms() {
                let (CLabel::A(ga), CLabel::A(gb)) = (la, lb) else { unreachable!("τ preserves A") };
                out.add_pair(*ga, *gb, c.clone() * ca.clone() * cb.clone());
            }
        }
    }
    out
}

/// Matrix of a linear map on `g` in the `basis_pairs` coordinates.
pub fn map_matrix(f: impl Fn(&SO8Element) -> SO8Element) -> Matrix<Eisenstein> {
    let cols: Vec<Vec<Eisenstein>> =
        SO8Element::basis_pairs().into_iter().map(|(a, b)| f(&SO8Element::pair(a, b)).to_vec()).collect();
    Matrix::from_cols(&cols)
}

/// Dimension of `{x : f(x) = λx}`.
pub fn eigenspace_dimension(f: impl Fn(&SO8Element) -> SO8Element, lambda: &Eisenstein) -> usize {
    let m = map_matrix(f);
    m.sub(&Matrix::identity(28).scale(lambda)).nullspace().len()
}

/// Whether `x` lies in the span of `basis`.
pub fn in_span(x: &SO8Element, basis: &[SO8Element]) -> bool {
    let cols: Vec<Vec<Eisenstein>> = basis.iter().map(SO8Element::to_vec).collect();
    Matrix::from_cols(&cols).solve(&x.to_vec()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<Gen> {
        Gen::all()
    }

    #[test]
    fn bracket_and_killing_examples() {
        let x = SO8Element::pair(Gen::a(1), Gen::a(2));
        assert_eq!(bracket(&SO8Element::h(1), &x), x);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(killing(&SO8Element::h(i), &SO8Element::h(j)), e(i64::from(i == j)));
            }
        }
    }

    #[test]
    fn action_examples() {
        let a1 = ChevalleyElement::gen(Gen::a(1));
        assert_eq!(g_action(&SO8Element::h(1), &a1), a1);
        let x = SO8Element::pair(Gen::a(1), Gen::a(2));
        assert_eq!(g_action(&x, &ChevalleyElement::gen(Gen::astar(2))), a1);
        // a_j has weight ε_j, a_j* has weight -ε_j
        for g in gens() {
            for i in 1..=4u8 {
                let w = if g.flavor == i {
                    if g.starred {
                        -1
                    } else {
                        1
                    }
                } else {
                    0
                };
                let u = ChevalleyElement::gen(g);
                assert_eq!(g_action(&SO8Element::h(i), &u), u.scale(&e(w)));
            }
        }
    }

    #[test]
    fn matrix_map_is_a_lie_isomorphism() {
        let basis = SO8Element::basis_pairs();
        for (a, b) in &basis {
            let x = SO8Element::pair(*a, *b);
            let mx = so8_matrix(&x);
            assert_eq!(from_so8_matrix(&mx), x);
            let op = operator_matrix(&x);
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(op.get(i, j), mx.get(i, j));
                }
            }
            for (c, d) in &basis {
                let y = SO8Element::pair(*c, *d);
                assert_eq!(so8_matrix(&bracket(&x, &y)), mx.commutator(&so8_matrix(&y)));
            }
        }
    }

    #[test]
    fn action_is_a_representation() {
        let basis = SO8Element::basis_pairs();
        let ops: Vec<Matrix<Eisenstein>> =
            basis.iter().map(|(a, b)| operator_matrix(&SO8Element::pair(*a, *b))).collect();
        for (i, (a, b)) in basis.iter().enumerate() {
            for (j, (c, d)) in basis.iter().enumerate() {
                let br = bracket(&SO8Element::pair(*a, *b), &SO8Element::pair(*c, *d));
                assert_eq!(operator_matrix(&br), ops[i].commutator(&ops[j]));
            }
        }
    }

    #[test]
    fn killing_is_invariant() {
        let basis = SO8Element::basis_pairs();
        let x = SO8Element::pair(basis[3].0, basis[3].1);
        for (a, b) in &basis {
            let y = SO8Element::pair(*a, *b);
            for (c, d) in &basis {
                let z = SO8Element::pair(*c, *d);
                assert_eq!(killing(&bracket(&x, &y), &z), killing(&x, &bracket(&y, &z)));
            }
        }
    }

    #[test]
    fn sigma_operator_is_conjugation() {
        use crate::chevalley::triality::sigma;
        let cols: Vec<Vec<Eisenstein>> =
            CLabel::all().into_iter().map(|l| sigma(&ChevalleyElement::basis(l)).to_vec()).collect();
        let s = Matrix::from_cols(&cols);
        let s_inv = s.mul(&s);
        for (a, b) in SO8Element::basis_pairs() {
            let x = SO8Element::pair(a, b);
            assert_eq!(sigma_operator(1, &x), s.mul(&operator_matrix(&x)).mul(&s_inv));
        }
    }

    #[test]
    fn triality_on_g() {
        let one = Eisenstein::one();
        assert_eq!(eigenspace_dimension(sigma_g, &one), 14);
        assert_eq!(eigenspace_dimension(tau_g, &one), 21);
        assert_eq!(eigenspace_dimension(sigma_g, &Eisenstein::xi()), 7);
        assert_eq!(eigenspace_dimension(sigma_g, &Eisenstein::xi2()), 7);
        assert_eq!(eigenspace_dimension(tau_g, &e(-1)), 7);
        for (a, b) in SO8Element::basis_pairs() {
            let x = SO8Element::pair(a, b);
            assert_eq!(sigma_g(&sigma_g(&sigma_g(&x))), x);
            assert_eq!(tau_g(&tau_g(&x)), x);
            assert_eq!(tau_g(&sigma_g(&tau_g(&x))), identify_operator(2, &x).unwrap());
            for (c, d) in SO8Element::basis_pairs() {
                let y = SO8Element::pair(c, d);
                assert_eq!(sigma_g(&bracket(&x, &y)), bracket(&sigma_g(&x), &sigma_g(&y)));
            }
        }
    }

    #[test]
    fn mixed_summands_rejected() {
        let p = ChevalleyElement::gen(Gen::a(1));
        let q = ChevalleyElement::cm(&[1]);
        assert_eq!(pair_operator(&p, &q).unwrap_err(), So8Error::MixedSummands);
    }
}

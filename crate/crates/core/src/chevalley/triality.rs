//! Triality automorphisms `σ = ρ(e1)ρ(e2)` and `τ = ρ(e1)`.

use super::algebra::*;
use crate::scalars::Eisenstein;

/// `e1 = a4 + a4*`.
pub fn e1() -> ChevalleyElement {
    ChevalleyElement::gen(Gen::a(4)).add(&ChevalleyElement::gen(Gen::astar(4)))
}

/// `e2 = v14 - v23`.
pub fn e2() -> ChevalleyElement {
    ChevalleyElement::cm(&[1, 4]).sub(&ChevalleyElement::cm(&[2, 3]))
}

/// `e3 = -v1 - v234`.
pub fn e3() -> ChevalleyElement {
    ChevalleyElement::zero().sub(&ChevalleyElement::cm(&[1])).sub(&ChevalleyElement::cm(&[2, 3, 4]))
}

fn reflect(u: &ChevalleyElement, e: &ChevalleyElement) -> ChevalleyElement {
    e.scale(&pairing(u, e)).sub(u)
}

/// `ρ(e)` for `e = e1` (`which = 1`) or `e = e2` (`which = 2`): a reflection on
/// the summand containing `e` and `e∘·` elsewhere.
pub fn rho_e(which: u8, u: &ChevalleyElement) -> ChevalleyElement {
    let (e, home) = match which {
        1 => (e1(), Summand::A),
        2 => (e2(), Summand::Cm0),
        _ => panic!("rho_e takes 1 or 2"),
    };
    u.map_linear(|l| {
        let b = ChevalleyElement::basis(l);
        if l.summand() == home {
            reflect(&b, &e)
        } else {
            circ_product(&e, &b)
        }
    })
}

pub fn sigma(u: &ChevalleyElement) -> ChevalleyElement {
    rho_e(1, &rho_e(2, u))
}

pub fn tau(u: &ChevalleyElement) -> ChevalleyElement {
    rho_e(1, u)
}

/// `σ^k`.
pub fn sigma_pow(k: usize, u: &ChevalleyElement) -> ChevalleyElement {
    (0..k % 3).fold(u.clone(), |acc, _| sigma(&acc))
}

/// `σ^{-1} = σ²`.
pub fn sigma_inv(u: &ChevalleyElement) -> ChevalleyElement {
    sigma_pow(2, u)
}

/// Dimension of the fixed space of a linear map on `𝒞` given on basis labels.
pub fn fixed_dimension(f: impl Fn(&ChevalleyElement) -> ChevalleyElement) -> usize {
    use crate::linalg::Matrix;
    let cols: Vec<Vec<Eisenstein>> = CLabel::all()
        .into_iter()
        .map(|l| {
            let b = ChevalleyElement::basis(l);
            f(&b).sub(&b).to_vec()
        })
        .collect();
    Matrix::from_cols(&cols).nullspace().len()
}

//! Explicit bases for the `G2` fixed points of `σ`, its two `ξ`-eigenspaces, the
//! `B3` fixed points of `τ`, and the `(-1)`-eigenspace of `τ`.

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use super::algebra::Gen;
use super::so8::*;
use crate::linalg::Matrix;
use crate::scalars::{rat, Eisenstein};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("{space}: bracket of {x} and {y} leaves the span")]
    Closure { space: &'static str, x: String, y: String },
    #[error("{space}: {name} is not an eigenvector with eigenvalue {lambda}")]
    Eigen { space: &'static str, name: String, lambda: String },
    #[error("{space}: expected dimension {expected}, basis spans {found}")]
    Dimension { space: &'static str, expected: usize, found: usize },
}

#[derive(Debug, Clone)]
pub struct NamedElement {
    pub name: String,
    pub element: SO8Element,
}

#[derive(Debug, Clone)]
pub struct SubalgebraBases {
    pub g0: Vec<NamedElement>,
    pub g1: Vec<NamedElement>,
    pub g2: Vec<NamedElement>,
    pub b1: Vec<NamedElement>,
    pub b_minus1: Vec<NamedElement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubalgebraSummary {
    pub space: &'static str,
    pub dimension: usize,
    pub automorphism: &'static str,
    pub eigenvalue: String,
    pub closed: Option<bool>,
}

fn a(i: u8) -> Gen {
    Gen::a(i)
}

fn s(i: u8) -> Gen {
    Gen::astar(i)
}

fn el(terms: &[(Eisenstein, Gen, Gen)]) -> SO8Element {
    let mut x = SO8Element::zero();
    for (c, p, q) in terms {
        x.add_pair(*p, *q, c.clone());
    }
    x
}

fn n(i: i64) -> Eisenstein {
    Eisenstein::from(i)
}

fn named(name: &str, element: SO8Element) -> NamedElement {
    NamedElement { name: name.to_string(), element }
}

/// `H1, H2` and the twelve root vectors, labelled by root in `β` coordinates.
pub fn g2_basis() -> Vec<NamedElement> {
    let third = Eisenstein::from_rational(rat(1, 3));
    let one = n(1);
    let m = n(-1);
    vec![
        named("H1", SO8Element::h(1).add(&SO8Element::h(3))),
        named("H2", SO8Element::h(2).sub(&SO8Element::h(3))),
        named("X(1,0)", el(&[(one.clone(), a(2), s(3))])),
        named("X(1,3)", el(&[(one.clone(), a(1), a(3))])),
        named("X(2,3)", el(&[(one.clone(), a(1), a(2))])),
        named("X(0,1)", el(&[(one.clone(), a(1), s(2)), (one.clone(), a(3), s(4)), (m.clone(), a(3), a(4))])),
        named("X(1,1)", el(&[(one.clone(), a(1), s(3)), (one.clone(), a(2), a(4)), (m.clone(), a(2), s(4))])),
        named("X(1,2)", el(&[(one.clone(), a(2), a(3)), (one.clone(), a(1), a(4)), (m.clone(), a(1), s(4))])),
        named("X(-1,0)", el(&[(one.clone(), a(3), s(2))])),
        named("X(-1,-3)", el(&[(one.clone(), s(3), s(1))])),
        named("X(-2,-3)", el(&[(one.clone(), s(2), s(1))])),
        named(
            "X(0,-1)",
            el(&[(one.clone(), a(2), s(1)), (one.clone(), a(4), s(3)), (m.clone(), s(4), s(3))]).scale(&third),
        ),
        named(
            "X(-1,-1)",
            el(&[(one.clone(), a(3), s(1)), (one.clone(), s(4), s(2)), (m.clone(), a(4), s(2))]).scale(&third),
        ),
        named("X(-1,-2)", el(&[(one.clone(), s(3), s(2)), (one, s(4), s(1)), (m, a(4), s(1))]).scale(&third)),
    ]
}

/// Basis of the `σ`-eigenspace for `ξ` (`conjugate = false`) or `ξ²` (`true`).
pub fn g2_module_basis(conjugate: bool) -> Vec<NamedElement> {
    let (x1, x2) =
        if conjugate { (Eisenstein::xi2(), Eisenstein::xi()) } else { (Eisenstein::xi(), Eisenstein::xi2()) };
    let one = n(1);
    let m2 = -x2.clone();
    let p1 = x1.clone();
    let m1 = -x1.clone();
    let tag = if conjugate { "ξ²" } else { "ξ" };
    let h = SO8Element::h(1)
        .sub(&SO8Element::h(2))
        .sub(&SO8Element::h(3))
        .add(&SO8Element::h(4).scale(&(x2.clone() - x1.clone())));
    let rows = [
        el(&[(one.clone(), a(1), s(2)), (m2.clone(), a(3), a(4)), (p1.clone(), a(3), s(4))]),
        el(&[(one.clone(), a(1), s(3)), (x2.clone(), a(2), a(4)), (m1.clone(), a(2), s(4))]),
        el(&[(one.clone(), a(2), a(3)), (m2.clone(), a(1), s(4)), (p1.clone(), a(1), a(4))]),
        el(&[(one.clone(), s(1), a(2)), (m2.clone(), s(3), s(4)), (p1.clone(), s(3), a(4))]),
        el(&[(one.clone(), s(1), a(3)), (x2.clone(), s(2), s(4)), (m1.clone(), s(2), a(4))]),
        el(&[(one, s(2), s(3)), (m2, s(1), a(4)), (p1, s(1), s(4))]),
    ];
    let mut out = vec![named(&format!("{tag}:0"), h)];
    out.extend(rows.into_iter().enumerate().map(|(i, x)| named(&format!("{tag}:{}", i + 1), x)));
    out
}

/// The 21 elements of the `B3` basis.
pub fn b3_basis() -> Vec<NamedElement> {
    let one = n(1);
    let m = n(-1);
    let half = Eisenstein::from_rational(rat(1, 2));
    let mut out = vec![named("h1", SO8Element::h(1)), named("h2", SO8Element::h(2)), named("h3", SO8Element::h(3))];
    for (p, q) in [(a(1), s(2)), (a(2), s(3)), (a(1), s(3)), (a(2), a(3)), (a(1), a(3)), (a(1), a(2))] {
        out.push(named(&format!("{p}{q}"), SO8Element::pair(p, q)));
    }
    for (p, q) in [(a(2), s(1)), (a(3), s(2)), (a(3), s(1)), (s(3), s(2)), (s(3), s(1)), (s(2), s(1))] {
        out.push(named(&format!("{p}{q}"), SO8Element::pair(p, q)));
    }
    for i in [3, 2, 1] {
        out.push(named(&format!("a{i}a4-a{i}a4*"), el(&[(one.clone(), a(i), a(4)), (m.clone(), a(i), s(4))])));
    }
    for i in [3, 2, 1] {
        let x = el(&[(one.clone(), s(4), s(i)), (m.clone(), a(4), s(i))]).scale(&half);
        out.push(named(&format!("(a4*a{i}*-a4a{i}*)/2"), x));
    }
    out
}

/// The seven elements of the `τ`-eigenspace for `-1`.
pub fn b3_module_basis() -> Vec<NamedElement> {
    let one = n(1);
    let mut out = vec![named("h4", SO8Element::h(4))];
    for i in 1..=3 {
        out.push(named(&format!("a{i}a4+a{i}a4*"), el(&[(one.clone(), a(i), a(4)), (one.clone(), a(i), s(4))])));
    }
    for i in 1..=3 {
        out.push(named(&format!("a{i}*a4+a{i}*a4*"), el(&[(one.clone(), s(i), a(4)), (one.clone(), s(i), s(4))])));
    }
    out
}

pub fn subalgebra_bases() -> SubalgebraBases {
    SubalgebraBases {
        g0: g2_basis(),
        g1: g2_module_basis(false),
        g2: g2_module_basis(true),
        b1: b3_basis(),
        b_minus1: b3_module_basis(),
    }
}

fn elements(v: &[NamedElement]) -> Vec<SO8Element> {
    v.iter().map(|x| x.element.clone()).collect()
}

fn span_rank(v: &[NamedElement]) -> usize {
    let cols: Vec<Vec<Eisenstein>> = v.iter().map(|x| x.element.to_vec()).collect();
    Matrix::from_cols(&cols).rank()
}

fn check_eigen(
    space: &'static str,
    v: &[NamedElement],
    f: impl Fn(&SO8Element) -> SO8Element,
    lambda: &Eisenstein,
) -> Result<(), SubalgebraError> {
    for x in v {
        if f(&x.element) != x.element.scale(lambda) {
            return Err(SubalgebraError::Eigen { space, name: x.name.clone(), lambda: lambda.to_string() });
        }
    }
    Ok(())
}

/// `[x, y] ∈ span(target)` for `x ∈ left`, `y ∈ right`.
fn check_brackets(
    space: &'static str,
    left: &[NamedElement],
    right: &[NamedElement],
    target: &[NamedElement],
) -> Result<(), SubalgebraError> {
    let span = elements(target);
    for x in left {
        for y in right {
            if !in_span(&bracket(&x.element, &y.element), &span) {
                return Err(SubalgebraError::Closure { space, x: x.name.clone(), y: y.name.clone() });
            }
        }
    }
    Ok(())
}

impl SubalgebraBases {
    /// Dimensions, eigenvalues, and bracket closure of every listed space.
    pub fn verify(&self) -> Result<Vec<SubalgebraSummary>, SubalgebraError> {
        let one = Eisenstein::one();
        let spaces: [(&'static str, &Vec<NamedElement>, usize, bool, Eisenstein); 5] = [
            ("g0", &self.g0, 14, true, one.clone()),
            ("g1", &self.g1, 7, true, Eisenstein::xi()),
            ("g2", &self.g2, 7, true, Eisenstein::xi2()),
            ("b1", &self.b1, 21, false, one),
            ("b-1", &self.b_minus1, 7, false, n(-1)),
        ];
        let mut out = Vec::new();
        for (space, basis, dim, is_sigma, lambda) in spaces {
            let found = span_rank(basis);
            if found != dim || basis.len() != dim {
                return Err(SubalgebraError::Dimension { space, expected: dim, found });
            }
            if is_sigma {
                check_eigen(space, basis, sigma_g, &lambda)?;
            } else {
                check_eigen(space, basis, tau_g, &lambda)?;
            }
            let closed = match space {
                "g0" | "b1" => {
                    check_brackets(space, basis, basis, basis)?;
                    Some(true)
                }
                _ => None,
            };
            out.push(SubalgebraSummary {
                space,
                dimension: dim,
                automorphism: if is_sigma { "σ" } else { "τ" },
                eigenvalue: lambda.to_string(),
                closed,
            });
        }
        check_brackets("g1", &self.g0, &self.g1, &self.g1)?;
        check_brackets("g2", &self.g0, &self.g2, &self.g2)?;
        check_brackets("b-1", &self.b1, &self.b_minus1, &self.b_minus1)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_verify() {
        let summary = subalgebra_bases().verify().unwrap();
        let dims: Vec<usize> = summary.iter().map(|s| s.dimension).collect();
        assert_eq!(dims, [14, 7, 7, 21, 7]);
    }

    #[test]
    fn spaces_decompose_g() {
        let b = subalgebra_bases();
        let all: Vec<NamedElement> = b.g0.iter().chain(&b.g1).chain(&b.g2).cloned().collect();
        assert_eq!(span_rank(&all), 28);
        let all: Vec<NamedElement> = b.b1.iter().chain(&b.b_minus1).cloned().collect();
        assert_eq!(span_rank(&all), 28);
    }

    #[test]
    fn cartan_pair_of_simple_root() {
        let g = g2_basis();
        let find = |name: &str| g.iter().find(|x| x.name == name).unwrap().element.clone();
        let br = bracket(&find("X(1,0)"), &find("X(-1,0)"));
        assert!(in_span(&br, &[find("H1"), find("H2")]));
        assert!(!br.is_zero());
    }

    #[test]
    fn root_vectors_have_additive_weights() {
        let g = g2_basis();
        let h: Vec<SO8Element> = g[..2].iter().map(|x| x.element.clone()).collect();
        let weight = |x: &SO8Element| -> Option<[Eisenstein; 2]> {
            let mut w = [n(0), n(0)];
            for (k, hk) in h.iter().enumerate() {
                let b = bracket(hk, x);
                let (&(p, q), c) = x.terms().next()?;
                w[k] = b.coeff(p, q) / c.clone();
                if b != x.scale(&w[k]) {
                    return None;
                }
            }
            Some(w)
        };
        let b1 = weight(&g[2].element).unwrap();
        let b2 = weight(&g[5].element).unwrap();
        for x in &g[2..] {
            let inner = x.name.trim_start_matches("X(").trim_end_matches(')');
            let (m, k) = inner.split_once(',').unwrap();
            let (m, k): (i64, i64) = (m.parse().unwrap(), k.parse().unwrap());
            let w = weight(&x.element).expect("ad-eigenvector");
            for j in 0..2 {
                assert_eq!(w[j], b1[j].clone() * n(m) + b2[j].clone() * n(k), "{}", x.name);
            }
        }
    }
}

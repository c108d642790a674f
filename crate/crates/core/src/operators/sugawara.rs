//! Sugawara conformal vectors and operators from finite bases of subalgebras of `so(8)`.

use num_traits::{One, Zero};

use super::*;
use crate::chevalley::{killing, NamedElement, SO8Element};
use crate::linalg::Matrix;
use crate::scalars::{rat, Eisenstein, Rational};

/// The current `X(n) = Σ c Σ_r ∘∘p(r)q(n−r)∘∘` of an element with rational coefficients.
pub fn current(x: &SO8Element, n: i64) -> Result<OperatorSpec, OperatorError> {
    let mut op = OperatorSpec::new(format!("X({n})"));
    for ((p, q), c) in x.terms() {
        let c = c.to_rational().map_err(|e| OperatorError::Inconsistent(e.to_string()))?;
        let fp = Fermion::new(p.flavor, p.starred);
        let fq = Fermion::new(q.flavor, q.starred);
        op.push(c, TermKind::Quadratic, &[fp, fq], n);
    }
    Ok(op)
}

/// The basis dual to `basis` under the invariant form.
pub fn dual_basis(basis: &[SO8Element]) -> Result<Vec<SO8Element>, OperatorError> {
    let n = basis.len();
    let mut gram = Matrix::<Eisenstein>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, killing(&basis[i], &basis[j]));
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Eisenstein::zero(); n];
        e[i] = Eisenstein::one();
        let coeffs = gram.solve(&e).ok_or_else(|| OperatorError::NonDual("degenerate form".into()))?;
        let dual = coeffs.iter().zip(basis).fold(SO8Element::zero(), |acc, (c, x)| acc.add(&x.scale(c)));
        out.push(dual);
    }
    Ok(out)
}

/// `(X_i, X^i)` pairs for a named basis.
pub fn dual_pairs(basis: &[NamedElement]) -> Result<Vec<(SO8Element, SO8Element)>, OperatorError> {
    let elems: Vec<SO8Element> = basis.iter().map(|x| x.element.clone()).collect();
    let duals = dual_basis(&elems)?;
    Ok(elems.into_iter().zip(duals).collect())
}

fn check_dual(pairs: &[(SO8Element, SO8Element)]) -> Result<(), OperatorError> {
    for (i, (x, _)) in pairs.iter().enumerate() {
        for (j, (_, y)) in pairs.iter().enumerate() {
            let expected = if i == j { Eisenstein::one() } else { Eisenstein::zero() };
            if killing(x, y) != expected {
                return Err(OperatorError::NonDual(format!("pair ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// `1/(2(h∨+1))`, the level-one Sugawara normalization.
pub fn sugawara_scale(dual_coxeter: i64) -> Rational {
    rat(1, 2 * (dual_coxeter + 1))
}

/// `S·Σ X_i(−1)X^i(−1)𝟏`.
pub fn sugawara_omega(pairs: &[(SO8Element, SO8Element)], dual_coxeter: i64) -> Result<FockVector, OperatorError> {
    check_dual(pairs)?;
    let vac = FockVector::vacuum(Sector::NS);
    let mut out = FockVector::zero(Sector::NS);
    for (x, y) in pairs {
        let inner = current(y, -1)?.apply(&vac);
        out.add_assign_scaled(&current(x, -1)?.apply(&inner), &Rational::one());
    }
    Ok(out.scale(&sugawara_scale(dual_coxeter)))
}

/// `L_k = S·Σ_i Σ_n •X_i(n)X^i(k−n)•`, with nonnegative modes acting first.
pub struct SugawaraL {
    pub k: i64,
    scale: Rational,
    pairs: Vec<(SO8Element, SO8Element)>,
}

impl SugawaraL {
    pub fn new(pairs: &[(SO8Element, SO8Element)], dual_coxeter: i64, k: i64) -> Result<Self, OperatorError> {
        check_dual(pairs)?;
        for (x, y) in pairs {
            current(x, 0)?;
            current(y, 0)?;
        }
        Ok(SugawaraL { k, scale: sugawara_scale(dual_coxeter), pairs: pairs.to_vec() })
    }
}

impl FockOperator for SugawaraL {
    fn apply_state(&self, s: &FockState) -> FockVector {
        let d2 = s.mode_depth2();
        let mut out = FockVector::zero(s.sector);
        if 2 * self.k > d2 {
            return out;
        }
        let v = FockVector::from_state(s.clone());
        let lo = self.k - d2.div_euclid(2) - 1;
        let hi = d2.div_euclid(2) + 1;
        for (x, y) in &self.pairs {
            for n in lo..=hi {
                let m = self.k - n;
                let (first, second) = if n < 0 {
                    (current(y, m).expect("checked"), current(x, n).expect("checked"))
                } else {
                    (current(x, n).expect("checked"), current(y, m).expect("checked"))
                };
                let w = first.apply(&v);
                if w.is_zero() {
                    continue;
                }
                out.add_assign_scaled(&second.apply(&w), &Rational::one());
            }
        }
        out.scale(&self.scale)
    }
}

/// Dual coxeter numbers of the subalgebras in play.
pub const H_DUAL_B3: i64 = 5;
pub const H_DUAL_G2: i64 = 4;

pub fn h_dual_scale_check() -> (Rational, Rational) {
    (sugawara_scale(H_DUAL_B3), sugawara_scale(H_DUAL_G2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{b3_basis, g2_basis};
    use crate::scalars::int;

    #[test]
    fn scales() {
        assert_eq!(h_dual_scale_check(), (rat(1, 12), rat(1, 10)));
    }

    #[test]
    fn b3_omega_from_sugawara() {
        let pairs = dual_pairs(&b3_basis()).unwrap();
        let w = sugawara_omega(&pairs, H_DUAL_B3).unwrap();
        assert_eq!(w, conformal_vectors().b3);
    }

    #[test]
    fn g2_omega_from_sugawara() {
        let pairs = dual_pairs(&g2_basis()).unwrap();
        let w = sugawara_omega(&pairs, H_DUAL_G2).unwrap();
        assert_eq!(w, conformal_vectors().g2);
    }

    #[test]
    fn csa_part_of_b3() {
        let b = b3_basis();
        let pairs = dual_pairs(&b[..3]).unwrap();
        let w = sugawara_omega(&pairs, H_DUAL_B3).unwrap().scale(&int(12));
        assert_eq!(w, parse_vector("11* + 1*1 + 22* + 2*2 + 33* + 3*3").unwrap());
    }

    #[test]
    fn non_dual_rejected() {
        let b = b3_basis();
        let pairs = vec![(b[0].element.clone(), b[1].element.clone())];
        assert!(sugawara_omega(&pairs, H_DUAL_B3).is_err());
    }

    #[test]
    fn sugawara_operators_match_vertex_modes() {
        let c = conformal_vectors();
        let b3 = dual_pairs(&b3_basis()).unwrap();
        let g2 = dual_pairs(&g2_basis()).unwrap();
        for sector in [Sector::NS, Sector::Ramond] {
            let basis = enumerate_basis(sector, int(2));
            for k in -1..=1 {
                for (pairs, h, w) in [(&b3, H_DUAL_B3, &c.b3), (&g2, H_DUAL_G2, &c.g2)] {
                    let sug = SugawaraL::new(pairs, h, k).unwrap();
                    let y = vertex_family(w, k, sector, "Y").unwrap();
                    for s in &basis {
                        assert_eq!(sug.apply_state(s), y.apply_state(s), "k={k} {}", render_state(s));
                    }
                }
            }
        }
    }
}

//! Published identification data for `g`, `σ(g)` and `σ²(g)`, and checks of
//! that data against the computed operators.

use serde::Serialize;

use super::algebra::*;
use super::so8::*;
use crate::scalars::{rat, Eisenstein};

const fn a(i: u8) -> Gen {
    Gen { starred: false, flavor: i }
}

const fn s(i: u8) -> Gen {
    Gen { starred: true, flavor: i }
}

/// `sign·∘∘v_P v_Q∘∘` with `P, Q` given as flavor lists.
pub type CmPair = (i64, &'static [u8], &'static [u8]);

/// `sign·∘∘ab∘∘` in `g`.
pub type APair = (i64, Gen, Gen);

/// Columns `g^(0) | g^(1) | g^(2)`: the images of the `g^(0)` entry under `σ` and `σ²`.
pub const ROOT_IMAGES: [(APair, CmPair, CmPair); 28] = [
    ((1, a(1), a(2)), (1, &[], &[3, 4]), (-1, &[4], &[3])),
    ((1, a(1), a(3)), (-1, &[], &[2, 4]), (1, &[4], &[2])),
    ((1, a(2), s(3)), (-1, &[3, 4], &[1, 3]), (1, &[3], &[1, 3, 4])),
    ((1, a(1), s(2)), (-1, &[], &[1, 2]), (-1, &[4], &[1, 2, 4])),
    ((-1, a(3), a(4)), (1, &[2, 4], &[1, 4]), (-1, &[2], &[2, 3, 4])),
    ((1, a(3), s(4)), (1, &[2, 4], &[2, 3]), (1, &[2], &[1])),
    ((1, a(1), s(3)), (-1, &[], &[1, 3]), (-1, &[4], &[1, 3, 4])),
    ((1, a(2), a(4)), (1, &[3, 4], &[1, 4]), (-1, &[3], &[2, 3, 4])),
    ((-1, a(2), s(4)), (1, &[3, 4], &[2, 3]), (1, &[3], &[1])),
    ((1, a(2), a(3)), (-1, &[3, 4], &[2, 4]), (-1, &[3], &[2])),
    ((-1, a(1), s(4)), (1, &[], &[2, 3]), (-1, &[4], &[1])),
    ((1, a(1), a(4)), (1, &[], &[1, 4]), (1, &[4], &[2, 3, 4])),
    ((1, s(1), s(2)), (-1, &[1, 2, 3, 4], &[1, 2]), (1, &[1, 2, 3], &[1, 2, 4])),
    ((1, s(1), s(3)), (-1, &[1, 2, 3, 4], &[1, 3]), (1, &[1, 2, 3], &[1, 3, 4])),
    ((1, s(2), a(3)), (1, &[1, 2], &[2, 4]), (-1, &[1, 2, 4], &[2])),
    ((1, s(1), a(2)), (1, &[1, 2, 3, 4], &[3, 4]), (1, &[1, 2, 3], &[3])),
    ((-1, s(3), s(4)), (-1, &[1, 3], &[2, 3]), (1, &[1, 3, 4], &[1])),
    ((1, s(3), a(4)), (-1, &[1, 3], &[1, 4]), (-1, &[1, 3, 4], &[2, 3, 4])),
    ((1, s(1), a(3)), (-1, &[1, 2, 3, 4], &[2, 4]), (-1, &[1, 2, 3], &[2])),
    ((1, s(2), s(4)), (1, &[1, 2], &[2, 3]), (-1, &[1, 2, 4], &[1])),
    ((-1, s(2), a(4)), (1, &[1, 2], &[1, 4]), (1, &[1, 2, 4], &[2, 3, 4])),
    ((1, s(2), s(3)), (1, &[1, 2], &[1, 3]), (1, &[1, 2, 4], &[1, 3, 4])),
    ((-1, s(1), a(4)), (-1, &[1, 2, 3, 4], &[1, 4]), (1, &[1, 2, 3], &[2, 3, 4])),
    ((1, s(1), s(4)), (-1, &[1, 2, 3, 4], &[2, 3]), (-1, &[1, 2, 3], &[1])),
    ((1, a(1), s(1)), (1, &[], &[1, 2, 3, 4]), (-1, &[4], &[1, 2, 3])),
    ((1, a(2), s(2)), (-1, &[3, 4], &[1, 2]), (1, &[3], &[1, 2, 4])),
    ((1, a(3), s(3)), (1, &[2, 4], &[1, 3]), (-1, &[2], &[1, 3, 4])),
    ((1, a(4), s(4)), (-1, &[1, 4], &[2, 3]), (1, &[2, 3, 4], &[1])),
];

/// Rows `g^(1) ⇌ g^(0) ⇌ g^(2)` for the positive root vectors.
pub const POSITIVE_IDENTIFICATION: [(CmPair, (Gen, Gen), CmPair); 12] = [
    ((1, &[], &[3, 4]), (a(1), a(2)), (-1, &[4], &[3])),
    ((-1, &[], &[2, 4]), (a(1), a(3)), (-1, &[4], &[2])),
    ((1, &[3, 4], &[1, 3]), (a(2), s(3)), (1, &[3], &[1, 3, 4])),
    ((-1, &[2, 4], &[2, 3]), (a(1), s(2)), (1, &[2], &[2, 3, 4])),
    ((1, &[2, 4], &[1, 4]), (a(3), s(4)), (-1, &[4], &[1, 2, 4])),
    ((1, &[], &[1, 2]), (a(3), a(4)), (1, &[2], &[1])),
    ((-1, &[], &[1, 3]), (a(2), a(4)), (1, &[3], &[1])),
    ((-1, &[3, 4], &[1, 4]), (a(2), s(4)), (1, &[4], &[1, 3, 4])),
    ((1, &[3, 4], &[2, 3]), (a(1), s(3)), (-1, &[3], &[2, 3, 4])),
    ((1, &[3, 4], &[2, 4]), (a(1), s(4)), (-1, &[4], &[2, 3, 4])),
    ((1, &[], &[2, 3]), (a(1), a(4)), (-1, &[3], &[2])),
    ((1, &[], &[1, 4]), (a(2), a(3)), (-1, &[4], &[1])),
];

/// The matrix `𝒜` (times 2) of `σ` on the CSA: `σ(h_j)` is column `j`.
pub const SIGMA_ON_CSA_TWICE: [[i64; 4]; 4] = [[1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [1, -1, -1, -1]];

#[derive(Debug, Clone, Serialize)]
pub struct IdentificationCheck {
    pub table: &'static str,
    pub entry: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

fn cm_label(flavors: &[u8]) -> (i64, CLabel) {
    CLabel::cm(flavors)
}

fn cm_pair_operator(p: &CmPair) -> crate::linalg::Matrix<Eisenstein> {
    let (s1, l1) = cm_label(p.1);
    let (s2, l2) = cm_label(p.2);
    pair_operator(&ChevalleyElement::basis(l1), &ChevalleyElement::basis(l2))
        .expect("pairs within one summand")
        .scale(&Eisenstein::from(p.0 * s1 * s2))
}

pub fn cm_pair_display(p: &CmPair) -> String {
    let name = |f: &[u8]| cm_label(f).1.to_string();
    format!("{}∘∘{}{}∘∘", if p.0 < 0 { "-" } else { "" }, name(p.1), name(p.2))
}

/// Identifies a listed `g^(1)` or `g^(2)` pair in `g`.
pub fn identify_cm_pair(p: &CmPair) -> Result<SO8Element, So8Error> {
    identify_matrix(&cm_pair_operator(p))
}

fn check(
    table: &'static str,
    entry: String,
    expected: &SO8Element,
    computed: Result<SO8Element, So8Error>,
) -> IdentificationCheck {
    let (computed, matches) = match computed {
        Ok(x) => (x.to_string(), &x == expected),
        Err(e) => (e.to_string(), false),
    };
    IdentificationCheck { table, entry, expected: expected.to_string(), computed, matches }
}

/// The positive root table: each listed `g^(1)` and `g^(2)` operator against its `g^(0)` partner.
pub fn check_positive_identification() -> Vec<IdentificationCheck> {
    let mut out = Vec::new();
    for (p1, (x, y), p2) in POSITIVE_IDENTIFICATION.iter() {
        let target = SO8Element::pair(*x, *y);
        for p in [p1, p2] {
            out.push(check("positive roots", cm_pair_display(p), &target, identify_cm_pair(p)));
        }
    }
    out
}

/// `σ(h_j)` and `σ²(h_j)`, both from the listed CM pairs and from `σ` applied to `h_j`,
/// against the columns and rows of `𝒜`.
pub fn check_csa_identification() -> Vec<IdentificationCheck> {
    let half = Eisenstein::from_rational(rat(1, 2));
    let h_combo = |coeffs: [i64; 4]| {
        (0..4).fold(SO8Element::zero(), |acc, i| {
            acc.add(&SO8Element::h(i as u8 + 1).scale(&(half.clone() * Eisenstein::from(coeffs[i]))))
        })
    };
    let m = SIGMA_ON_CSA_TWICE;
    let mut out = Vec::new();
    for j in 0..4 {
        let column = h_combo([m[0][j], m[1][j], m[2][j], m[3][j]]);
        let row = h_combo(m[j]);
        let (_, p1, p2) = &ROOT_IMAGES[24 + j];
        let hj = SO8Element::h(j as u8 + 1);
        out.push(check("CSA", cm_pair_display(p1), &column, identify_cm_pair(p1)));
        out.push(check("CSA", format!("σ(h{})", j + 1), &column, identify_operator(1, &hj)));
        out.push(check("CSA", cm_pair_display(p2), &row, identify_cm_pair(p2)));
        out.push(check("CSA", format!("σ²(h{})", j + 1), &row, identify_operator(2, &hj)));
    }
    out
}

/// Each listed image agrees, as an operator on `𝒞`, with `∘∘(σ^i a)(σ^i b)∘∘`.
pub fn check_root_images() -> Vec<IdentificationCheck> {
    let mut out = Vec::new();
    for (g0, p1, p2) in ROOT_IMAGES.iter() {
        let x = SO8Element::pair_scaled(Eisenstein::from(g0.0), g0.1, g0.2);
        for (i, p) in [(1, p1), (2, p2)] {
            let ok = sigma_operator(i, &x) == cm_pair_operator(p);
            out.push(IdentificationCheck {
                table: "root images",
                entry: format!("σ^{i}({x})"),
                expected: cm_pair_display(p),
                computed: if ok { cm_pair_display(p) } else { "different operator".into() },
                matches: ok,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_images_are_sigma_images() {
        for c in check_root_images() {
            assert!(c.matches, "{c:?}");
        }
    }

    #[test]
    fn csa_identification_matches() {
        let checks = check_csa_identification();
        assert_eq!(checks.len(), 16);
        for c in checks {
            assert!(c.matches, "{c:?}");
        }
    }

    #[test]
    fn positive_identification_sign_disagreements() {
        let bad: Vec<String> =
            check_positive_identification().into_iter().filter(|c| !c.matches).map(|c| c.entry).collect();
        // these five listed signs contradict σ³ = id; see the root image table
        assert_eq!(bad, ["-∘∘v4v2∘∘", "∘∘v34v13∘∘", "-∘∘v24v23∘∘", "∘∘v2v234∘∘", "∘∘v2v1∘∘"]);
    }

    #[test]
    fn sign_flipped_entries_are_consistent_with_order_three() {
        // σ fixes ∘∘a2a3*∘∘, so σ(∘∘a2a3*∘∘) = -∘∘v34v13∘∘ must identify with +∘∘a2a3*∘∘
        let x = SO8Element::pair(a(2), s(3));
        assert_eq!(sigma_g(&x), x);
        assert_eq!(identify_cm_pair(&(-1, &[3, 4], &[1, 3])).unwrap(), x);
    }
}

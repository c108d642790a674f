//! The order-three automorphism `σ̂` on the span of the depth-two conformal data.

use num_traits::{One, Zero};
use serde::Serialize;

use super::*;
use crate::linalg::Matrix;
use crate::scalars::{rat, Rational};

/// Basis of the seven-dimensional span that `σ̂` preserves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpanBasis {
    Omega,
    /// `44* + 4*4`
    P,
    /// `44 + 4*4*`
    Q,
    B1122,
    B2244,
    B1234,
    B1234s,
}

impl SpanBasis {
    pub fn all() -> [SpanBasis; 7] {
        use SpanBasis::*;
        [Omega, P, Q, B1122, B2244, B1234, B1234s]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            SpanBasis::Omega => "ω",
            SpanBasis::P => "(44* + 4*4)",
            SpanBasis::Q => "(44 + 4*4*)",
            SpanBasis::B1122 => Boxed::B1122.label(),
            SpanBasis::B2244 => Boxed::B2244.label(),
            SpanBasis::B1234 => Boxed::B1234.label(),
            SpanBasis::B1234s => Boxed::B1234s.label(),
        }
    }

    pub fn vector(self) -> FockVector {
        match self {
            SpanBasis::Omega => omega_d4(),
            SpanBasis::P => parse_vector("44* + 4*4").expect("static"),
            SpanBasis::Q => parse_vector("44 + 4*4*").expect("static"),
            SpanBasis::B1122 => Boxed::B1122.vector(),
            SpanBasis::B2244 => Boxed::B2244.vector(),
            SpanBasis::B1234 => Boxed::B1234.vector(),
            SpanBasis::B1234s => Boxed::B1234s.vector(),
        }
    }
}

/// Coordinates in [`SpanBasis`] order.
pub type SpanCoords = Vec<Rational>;

fn coords(parts: &[(SpanBasis, Rational)]) -> SpanCoords {
    let mut out = vec![Rational::zero(); 7];
    for (b, c) in parts {
        out[b.index()] += c;
    }
    out
}

/// `[44*]` in span coordinates.
pub fn boxed_44() -> SpanCoords {
    coords(&[(SpanBasis::P, Rational::one()), (SpanBasis::Q, Rational::one())])
}

/// Expands span coordinates into the Fock basis.
pub fn span_vector(c: &[Rational]) -> FockVector {
    let mut out = FockVector::zero(Sector::NS);
    for (b, x) in SpanBasis::all().iter().zip(c) {
        out.add_assign_scaled(&b.vector(), x);
    }
    out
}

/// Span coordinates of a Fock vector, if it lies in the span.
pub fn span_coords(v: &FockVector) -> Option<SpanCoords> {
    let vectors: Vec<FockVector> = SpanBasis::all().map(SpanBasis::vector).to_vec();
    let mut states: Vec<FockState> =
        vectors.iter().chain([v]).flat_map(|w| w.terms().map(|(s, _)| s.clone())).collect();
    states.sort();
    states.dedup();
    let cols: Vec<Vec<Rational>> = vectors.iter().map(|w| w.coordinates(&states).expect("listed states")).collect();
    let target = v.coordinates(&states)?;
    let sol = Matrix::from_cols(&cols).solve(&target)?;
    (span_vector(&sol) == *v).then_some(sol)
}

/// The matrix of `σ̂`, columns are images of the basis.
pub fn sigma_hat_matrix() -> Matrix<Rational> {
    use SpanBasis::*;
    let h = rat(1, 2);
    let images = [
        coords(&[(Omega, rat(1, 1))]),
        coords(&[(Omega, h.clone()), (B1122, -h.clone()), (B2244, -h.clone())]),
        coords(&[(B1234s, rat(1, 1))]),
        coords(&[(Omega, h.clone()), (P, rat(-1, 1)), (B1122, h.clone()), (B2244, -h.clone())]),
        coords(&[(Omega, -h.clone()), (P, rat(1, 1)), (B1122, h.clone()), (B2244, -h)]),
        coords(&[(Q, rat(-1, 1))]),
        coords(&[(B1234, rat(-1, 1))]),
    ];
    Matrix::from_cols(&images)
}

pub fn sigma_hat(c: &[Rational]) -> SpanCoords {
    sigma_hat_matrix().apply(c)
}

/// Renders span coordinates as `a·ω + b·[...]`, folding `P + Q` into `[44*]`.
pub fn render_span(c: &[Rational]) -> String {
    let mut parts: Vec<(Rational, &str)> = Vec::new();
    let (p, q) = (&c[SpanBasis::P.index()], &c[SpanBasis::Q.index()]);
    let fold = p == q;
    for b in SpanBasis::all() {
        let x = &c[b.index()];
        match b {
            SpanBasis::P if fold => parts.push((x.clone(), Boxed::B44.label())),
            SpanBasis::Q if fold => {}
            _ => parts.push((x.clone(), b.label())),
        }
    }
    let mut out = String::new();
    for (x, label) in parts.into_iter().filter(|(x, _)| !x.is_zero()) {
        let neg = x < Rational::zero();
        let mag = if neg { -x } else { x };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}·"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Images of the conformal data under `σ̂` and `σ̂²`, in span coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCosets {
    pub d4_b3: [SpanCoords; 2],
    pub b3_g2: [SpanCoords; 2],
    pub g2: [SpanCoords; 2],
}

pub fn twisted_cosets() -> TwistedCosets {
    let c = conformal_vectors();
    let m = sigma_hat_matrix();
    let m2 = m.mul(&m);
    let both = |v: &FockVector| {
        let x = span_coords(v).expect("conformal vectors lie in the span");
        [m.apply(&x), m2.apply(&x)]
    };
    TwistedCosets { d4_b3: both(&c.d4_b3), b3_g2: both(&c.b3_g2), g2: both(&c.g2) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;
    use SpanBasis::*;

    fn b44(c: Rational) -> [(SpanBasis, Rational); 2] {
        [(P, c.clone()), (Q, c)]
    }

    #[test]
    fn basis_is_independent_and_covers_conformal_vectors() {
        for b in SpanBasis::all() {
            let mut e = vec![Rational::zero(); 7];
            e[b.index()] = Rational::one();
            assert_eq!(span_coords(&b.vector()), Some(e));
        }
        for (_, v) in conformal_vectors().named() {
            assert!(span_coords(v).is_some());
        }
        assert_eq!(span_coords(&parse_vector("11*").unwrap()), None);
    }

    #[test]
    fn order_three_and_fixes_omega() {
        let m = sigma_hat_matrix();
        assert_eq!(m.mul(&m).mul(&m), Matrix::identity(7));
        assert_ne!(m, Matrix::identity(7));
        let w = coords(&[(Omega, int(1))]);
        assert_eq!(sigma_hat(&w), w);
    }

    #[test]
    fn squares_match_listed_images() {
        let m = sigma_hat_matrix();
        let m2 = m.mul(&m);
        let h = rat(1, 2);
        let mut b = b44(Rational::one()).to_vec();
        let expect44 = coords(&[(Omega, h.clone()), (B1122, -h.clone()), (B2244, h.clone()), (B1234, int(-1))]);
        assert_eq!(m2.apply(&coords(&b)), expect44);
        b.clear();
        let cases = [
            (B1122, coords(&[(Omega, h.clone()), (P, int(-1)), (B1122, h.clone()), (B2244, h.clone())])),
            (B2244, coords(&[(Omega, h.clone()), (P, int(-1)), (B1122, -h.clone()), (B2244, -h.clone())])),
            (B1234, coords(&[(B1234s, int(-1))])),
            (B1234s, coords(&[(Q, int(1))])),
        ];
        for (x, img) in cases {
            assert_eq!(m2.apply(&coords(&[(x, int(1))])), img, "{x:?}");
        }
    }

    #[test]
    fn twisted_cosets_match_and_scale() {
        let t = twisted_cosets();
        let e = rat(1, 8);
        let q = rat(1, 4);
        assert_eq!(
            t.d4_b3[0],
            coords(&[(Omega, e.clone()), (B1122, -e.clone()), (B2244, -e.clone()), (B1234s, q.clone())])
        );
        assert_eq!(t.d4_b3[1], coords(&[(Omega, e.clone()), (B1122, -e.clone()), (B2244, e.clone()), (B1234, -q)]));
        let mut bg1 = b44(rat(1, 5)).to_vec();
        bg1.extend([
            (Omega, rat(3, 40)),
            (B1122, rat(-3, 40)),
            (B2244, e.clone()),
            (B1234, rat(-1, 5)),
            (B1234s, rat(-1, 20)),
        ]);
        assert_eq!(t.b3_g2[0], coords(&bg1));
        let mut bg2 = b44(rat(1, 5)).to_vec();
        bg2.extend([(Omega, rat(3, 40)), (B1122, rat(-3, 40)), (B2244, -e), (B1234, rat(1, 20)), (B1234s, rat(1, 5))]);
        assert_eq!(t.b3_g2[1], coords(&bg2));
        let scaled = |c: &SpanCoords, k: i64| c.iter().map(|x| x * int(k)).collect::<Vec<_>>();
        assert_eq!(render_span(&scaled(&t.d4_b3[0], 8)), "ω - [11*22*] - [22*44*] + 2·[1*234*]");
        assert_eq!(render_span(&scaled(&t.d4_b3[1], 8)), "ω - [11*22*] + [22*44*] - 2·[1*234]");
        assert_eq!(
            render_span(&scaled(&t.b3_g2[0], 40)),
            "3·ω + 8·[44*] - 3·[11*22*] + 5·[22*44*] - 8·[1*234] - 2·[1*234*]"
        );
        assert_eq!(
            render_span(&scaled(&t.b3_g2[1], 40)),
            "3·ω + 8·[44*] - 3·[11*22*] - 5·[22*44*] + 2·[1*234] + 8·[1*234*]"
        );
    }

    #[test]
    fn g2_vector_is_fixed() {
        let t = twisted_cosets();
        let g2 = span_coords(&conformal_vectors().g2).unwrap();
        assert_eq!(t.g2, [g2.clone(), g2]);
    }

    #[test]
    fn twisted_half_is_virasoro() {
        let t = twisted_cosets();
        for sector in [Sector::NS, Sector::Ramond] {
            let v = span_vector(&t.d4_b3[0]);
            let family = |k| Cached::new(vertex_family(&v, k, sector, "L").unwrap());
            for r in virasoro_bracket_checks("L", &family, &rat(1, 2), sector, -1..=1, &int(1)) {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn twisted_seven_tenths_is_virasoro() {
        let t = twisted_cosets();
        let v = span_vector(&t.b3_g2[1]);
        let family = |k| Cached::new(vertex_family(&v, k, Sector::NS, "L").unwrap());
        for r in virasoro_bracket_checks("L", &family, &rat(7, 10), Sector::NS, -1..=1, &int(1)) {
            assert!(r.passed(), "{r:?}");
        }
    }
}

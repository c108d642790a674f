//! Root and weight data for D4, B3 and G2 in ε-coordinates, and the projection
//! from D4 weights onto the G2 weight plane.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D4Weight {
    pub e: [Rational; 4],
}

impl D4Weight {
    pub fn new(e: [Rational; 4]) -> Self {
        D4Weight { e }
    }

    pub fn from_ints(e: [i64; 4]) -> Self {
        D4Weight { e: e.map(int) }
    }

    pub fn zero() -> Self {
        D4Weight::from_ints([0; 4])
    }

    /// `ε_i`, 1-based.
    pub fn epsilon(i: usize) -> Self {
        let mut e = [0; 4];
        e[i - 1] = 1;
        D4Weight::from_ints(e)
    }

    pub fn dot(&self, o: &D4Weight) -> Rational {
        self.e.iter().zip(&o.e).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Rational) -> D4Weight {
        D4Weight { e: self.e.clone().map(|x| x * c) }
    }

    /// Coordinates in the simple-root basis `α_1..α_4`.
    pub fn alpha_coords(&self) -> [Rational; 4] {
        let [e1, e2, e3, e4] = self.e.clone();
        let half = rat(1, 2);
        [e1.clone(), &e1 + &e2, (&e1 + &e2 + &e3 - &e4) * &half, (e1 + e2 + e3 + e4) * half]
    }

    pub fn from_alpha_coords(a: &[Rational; 4]) -> D4Weight {
        let t = RootTables::get();
        let mut w = D4Weight::zero();
        for (c, al) in a.iter().zip(&t.d4_simple) {
            w = &w + &al.scale(c);
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Zero::is_zero)
    }
}

impl<'a> Add<&'a D4Weight> for &'a D4Weight {
    type Output = D4Weight;
    fn add(self, o: &D4Weight) -> D4Weight {
        D4Weight { e: std::array::from_fn(|i| &self.e[i] + &o.e[i]) }
    }
}

impl<'a> Sub<&'a D4Weight> for &'a D4Weight {
    type Output = D4Weight;
    fn sub(self, o: &D4Weight) -> D4Weight {
        D4Weight { e: std::array::from_fn(|i| &self.e[i] - &o.e[i]) }
    }
}

impl Neg for &D4Weight {
    type Output = D4Weight;
    fn neg(self) -> D4Weight {
        D4Weight { e: self.e.clone().map(|x| -x) }
    }
}

impl fmt::Display for D4Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `m1·λ̄1 + m2·λ̄2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct G2Weight {
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub m1: Rational,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub m2: Rational,
}

impl G2Weight {
    pub fn new(m1: Rational, m2: Rational) -> Self {
        G2Weight { m1, m2 }
    }

    pub fn from_ints(m1: i64, m2: i64) -> Self {
        G2Weight { m1: int(m1), m2: int(m2) }
    }

    /// From coordinates in the simple-root basis `β1, β2`.
    pub fn from_beta(b1: &Rational, b2: &Rational) -> Self {
        // β1 = 2λ̄1 - 3λ̄2, β2 = -λ̄1 + 2λ̄2
        G2Weight { m1: b1 * int(2) - b2, m2: b2 * int(2) - b1 * int(3) }
    }

    /// Coordinates in the `β1, β2` basis.
    pub fn to_beta(&self) -> (Rational, Rational) {
        // λ̄1 = 2β1 + 3β2, λ̄2 = β1 + 2β2
        (&self.m1 * int(2) + &self.m2, &self.m1 * int(3) + &self.m2 * int(2))
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.m1.is_integer() && self.m2.is_integer() && self.m1 >= int(0) && self.m2 >= int(0)
    }
}

impl fmt::Display for G2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·Λ1 + {}·Λ2", self.m1, self.m2)
    }
}

#[derive(Debug, Clone)]
pub struct RootTables {
    pub d4_simple: [D4Weight; 4],
    pub d4_theta: D4Weight,
    pub g2_simple: [D4Weight; 2],
    pub b3_simple: [D4Weight; 3],
    pub d4_fundamental: [D4Weight; 4],
    pub g2_fundamental: [D4Weight; 2],
}

impl RootTables {
    pub fn get() -> RootTables {
        let h = rat(1, 2);
        let third = rat(1, 3);
        let d4_simple = [
            D4Weight::from_ints([1, -1, 0, 0]),
            D4Weight::from_ints([0, 1, -1, 0]),
            D4Weight::from_ints([0, 0, 1, -1]),
            D4Weight::from_ints([0, 0, 1, 1]),
        ];
        let b3_simple = [d4_simple[0].clone(), d4_simple[1].clone(), &d4_simple[2] - &d4_simple[3]];
        RootTables {
            d4_theta: D4Weight::from_ints([1, 1, 0, 0]),
            g2_simple: [D4Weight::from_ints([0, 1, -1, 0]), D4Weight::from_ints([1, -1, 2, 0]).scale(&third)],
            b3_simple,
            d4_fundamental: [
                D4Weight::from_ints([1, 0, 0, 0]),
                D4Weight::from_ints([1, 1, 0, 0]),
                D4Weight::from_ints([1, 1, 1, -1]).scale(&h),
                D4Weight::from_ints([1, 1, 1, 1]).scale(&h),
            ],
            g2_fundamental: [D4Weight::from_ints([1, 1, 0, 0]), D4Weight::from_ints([2, 1, 1, 0]).scale(&third)],
            d4_simple,
        }
    }
}

/// All 24 roots `±ε_i ± ε_j`.
pub fn d4_roots() -> Vec<D4Weight> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut e = [0; 4];
                e[i] = si;
                e[j] = sj;
                out.push(D4Weight::from_ints(e));
            }
        }
    }
    out
}

/// The twelve roots of G2 in the `λ̄` basis.
pub fn g2_roots() -> Vec<G2Weight> {
    let pos = [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 3)];
    pos.iter()
        .flat_map(|&(b1, b2)| [G2Weight::from_beta(&int(b1), &int(b2)), G2Weight::from_beta(&int(-b1), &int(-b2))])
        .collect()
}

pub fn project_to_g2(w: &D4Weight) -> G2Weight {
    let [e1, e2, e3, _] = &w.e;
    G2Weight { m1: e2 - e3, m2: e1 - e2 + e3 * int(2) }
}

/// `Σ a_i α_i ↦ (a_2, a_1 + a_3 + a_4)` in the `β` basis.
pub fn project_alphas(a: &[Rational; 4]) -> (Rational, Rational) {
    (a[1].clone(), &a[0] + &a[2] + &a[3])
}

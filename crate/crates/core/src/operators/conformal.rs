//! Depth-two conformal vectors and the boxed combinations they are written in.

use serde::Serialize;

use crate::fock::*;
use crate::scalars::{rat, Rational};

/// Named depth-two NS combinations used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Boxed {
    B44,
    B1122,
    B2244,
    B1234,
    B1234s,
}

impl Boxed {
    pub fn all() -> [Boxed; 5] {
        [Boxed::B44, Boxed::B1122, Boxed::B2244, Boxed::B1234, Boxed::B1234s]
    }

    pub fn expansion(self) -> &'static str {
        match self {
            Boxed::B44 => "44* + 4*4 + 44 + 4*4*",
            Boxed::B1122 => "11*22* + 11*33* - 22*33*",
            Boxed::B2244 => "22*44* + 33*44* - 11*44*",
            Boxed::B1234 => "1*234 + 12*3*4*",
            Boxed::B1234s => "12*3*4 + 1*234*",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Boxed::B44 => "[44*]",
            Boxed::B1122 => "[11*22*]",
            Boxed::B2244 => "[22*44*]",
            Boxed::B1234 => "[1*234]",
            Boxed::B1234s => "[1*234*]",
        }
    }

    pub fn vector(self) -> FockVector {
        parse_vector(self.expansion()).expect("static expansion parses")
    }
}

pub fn omega_d4() -> FockVector {
    parse_vector("11* + 1*1 + 22* + 2*2 + 33* + 3*3 + 44* + 4*4").expect("static expansion parses").scale(&rat(1, 2))
}

fn combo(parts: &[(Rational, FockVector)]) -> FockVector {
    let mut out = FockVector::zero(Sector::NS);
    for (c, v) in parts {
        out.add_assign_scaled(v, c);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalVectors {
    pub d4: FockVector,
    pub b3: FockVector,
    pub g2: FockVector,
    pub d4_b3: FockVector,
    pub b3_g2: FockVector,
}

impl ConformalVectors {
    pub fn named(&self) -> [(&'static str, &FockVector); 5] {
        [("ω_D4", &self.d4), ("ω_B3", &self.b3), ("ω_G2", &self.g2), ("ω_D4-B3", &self.d4_b3), ("ω_B3-G2", &self.b3_g2)]
    }
}

/// The five conformal vectors, each expanded in the Fock basis.
pub fn conformal_vectors() -> ConformalVectors {
    let d4 = omega_d4();
    let [b44, b1122, _, b1234, b1234s] = Boxed::all().map(Boxed::vector);
    let b3 = combo(&[(rat(1, 1), d4.clone()), (rat(-1, 4), b44.clone())]);
    let g2 = combo(&[
        (rat(4, 5), d4.clone()),
        (rat(-1, 5), b44.clone()),
        (rat(1, 5), b1122.clone()),
        (rat(1, 5), b1234.clone()),
        (rat(-1, 5), b1234s.clone()),
    ]);
    let d4_b3 = b44.scale(&rat(1, 4));
    let b3_g2 = combo(&[
        (rat(1, 5), d4.clone()),
        (rat(-1, 20), b44),
        (rat(-1, 5), b1122),
        (rat(-1, 5), b1234),
        (rat(1, 5), b1234s),
    ]);
    ConformalVectors { d4, b3, g2, d4_b3, b3_g2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differences_are_cosets() {
        let c = conformal_vectors();
        assert_eq!(c.b3.add(&c.d4_b3), c.d4);
        assert_eq!(c.g2.add(&c.b3_g2), c.b3);
        for (_, v) in c.named() {
            assert_eq!(v.homogeneous_depth2(), Some(4));
            assert!(v.terms().all(|(s, _)| s.parity() == 0));
        }
    }

    #[test]
    fn shorthand_is_normal_ordered() {
        // ij and ji put the −3/2 mode on different flavors, so they are independent
        let v = parse_vector("14* + 4*1").unwrap();
        assert_eq!(v.len(), 2);
        let w = parse_vector("1234 - 2134").unwrap();
        assert_eq!(w, parse_vector("1234").unwrap().scale(&rat(2, 1)));
    }
}

//! Depth-truncated Neveu-Schwarz and Ramond Clifford modules.

mod action;
mod basis;
mod notation;

pub use action::*;
pub use basis::*;
pub use notation::*;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::roots::D4Weight;
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sector {
    NS,
    Ramond,
}

impl Sector {
    /// Parity of `mode2` for labels of this sector.
    pub fn mode2_parity(self) -> i32 {
        match self {
            Sector::NS => 1,
            Sector::Ramond => 0,
        }
    }

    /// Twice the vacuum depth.
    pub fn vacuum_depth2(self) -> i64 {
        match self {
            Sector::NS => 0,
            Sector::Ramond => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("generator {0} does not belong to the {1:?} sector")]
    SectorMismatch(String, Sector),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// `a_i(m)` or `a_i*(m)` with `m = mode2 / 2`. Ordered by mode, then flavor, then
/// unstarred before starred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorLabel {
    pub mode2: i32,
    pub flavor: u8,
    pub starred: bool,
}

impl GeneratorLabel {
    pub fn new(flavor: u8, starred: bool, mode2: i32) -> Self {
        assert!((1..=4).contains(&flavor), "flavor {flavor} out of range");
        GeneratorLabel { mode2, flavor, starred }
    }

    pub fn a(flavor: u8, mode2: i32) -> Self {
        GeneratorLabel::new(flavor, false, mode2)
    }

    pub fn astar(flavor: u8, mode2: i32) -> Self {
        GeneratorLabel::new(flavor, true, mode2)
    }

    pub fn sector(&self) -> Sector {
        if self.mode2.rem_euclid(2) == 1 {
            Sector::NS
        } else {
            Sector::Ramond
        }
    }

    pub fn mode(&self) -> Rational {
        rat(i64::from(self.mode2), 2)
    }

    /// Creation operators: negative modes, and starred zero modes.
    pub fn is_creator(&self) -> bool {
        self.mode2 < 0 || (self.mode2 == 0 && self.starred)
    }

    /// The label whose anticommutator with `self` is the identity.
    pub fn dual(&self) -> GeneratorLabel {
        GeneratorLabel { mode2: -self.mode2, flavor: self.flavor, starred: !self.starred }
    }

    pub fn with_mode2(&self, mode2: i32) -> GeneratorLabel {
        GeneratorLabel { mode2, ..*self }
    }
}

/// Flavor and star of a generator without a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fermion {
    pub flavor: u8,
    pub starred: bool,
}

impl Fermion {
    pub fn new(flavor: u8, starred: bool) -> Self {
        assert!((1..=4).contains(&flavor));
        Fermion { flavor, starred }
    }

    pub fn at(&self, mode2: i32) -> GeneratorLabel {
        GeneratorLabel::new(self.flavor, self.starred, mode2)
    }
}

impl fmt::Display for Fermion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.flavor, if self.starred { "*" } else { "" })
    }
}

/// A canonical basis monomial: strictly increasing creators applied to the vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState {
    pub sector: Sector,
    pub factors: Vec<GeneratorLabel>,
}

impl FockState {
    pub fn vacuum(sector: Sector) -> Self {
        FockState { sector, factors: Vec::new() }
    }

    /// Sorts `factors` into canonical order, returning the sign, or `None` if a label
    /// repeats or is not a creator of `sector`.
    pub fn from_factors(sector: Sector, factors: &[GeneratorLabel]) -> Option<(i64, FockState)> {
        if factors.iter().any(|g| g.sector() != sector || !g.is_creator()) {
            return None;
        }
        let (sign, sorted) = sort_with_sign(factors)?;
        Some((sign, FockState { sector, factors: sorted }))
    }

    /// Twice the depth, including the Ramond vacuum shift.
    pub fn depth2(&self) -> i64 {
        self.sector.vacuum_depth2() + self.mode_depth2()
    }

    /// Twice the sum of `|mode|` over the factors.
    pub fn mode_depth2(&self) -> i64 {
        self.factors.iter().map(|g| i64::from(g.mode2.abs())).sum()
    }

    pub fn depth(&self) -> Rational {
        rat(self.depth2(), 2)
    }

    pub fn parity(&self) -> u8 {
        (self.factors.len() % 2) as u8
    }

    pub fn d4_weight(&self) -> D4Weight {
        let mut w = match self.sector {
            Sector::NS => D4Weight::zero(),
            Sector::Ramond => D4Weight::new([rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]),
        };
        for g in &self.factors {
            let e = D4Weight::epsilon(g.flavor as usize);
            w = if g.starred { &w - &e } else { &w + &e };
        }
        w
    }

    /// Which of the four irreducible modules contains the state.
    pub fn module(&self) -> Module {
        match (self.sector, self.parity()) {
            (Sector::NS, 0) => Module::V0,
            (Sector::NS, _) => Module::V1,
            (Sector::Ramond, 0) => Module::V2,
            (Sector::Ramond, _) => Module::V3,
        }
    }
}

/// The four level-one modules `V̂⁰..V̂³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Module {
    V0,
    V1,
    V2,
    V3,
}

impl Module {
    pub fn all() -> [Module; 4] {
        [Module::V0, Module::V1, Module::V2, Module::V3]
    }

    pub fn sector(self) -> Sector {
        match self {
            Module::V0 | Module::V1 => Sector::NS,
            Module::V2 | Module::V3 => Sector::Ramond,
        }
    }

    pub fn parity(self) -> u8 {
        match self {
            Module::V0 | Module::V2 => 0,
            Module::V1 | Module::V3 => 1,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.index())
    }
}

impl std::str::FromStr for Module {
    type Err = FockError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().trim_start_matches(['V', 'v']) {
            "0" => Ok(Module::V0),
            "1" => Ok(Module::V1),
            "2" => Ok(Module::V2),
            "3" => Ok(Module::V3),
            _ => Err(FockError::Parse(s.to_string())),
        }
    }
}

/// Stable sort by canonical order, tracking the permutation sign. `None` on a repeat.
pub fn sort_with_sign(factors: &[GeneratorLabel]) -> Option<(i64, Vec<GeneratorLabel>)> {
    let mut v = factors.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((sign, v))
}

/// Rational combination of states from a single sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    pub sector: Sector,
    terms: BTreeMap<FockState, Rational>,
}

impl FockVector {
    pub fn zero(sector: Sector) -> Self {
        FockVector { sector, terms: BTreeMap::new() }
    }

    pub fn vacuum(sector: Sector) -> Self {
        FockVector::from_state(FockState::vacuum(sector))
    }

    pub fn from_state(s: FockState) -> Self {
        let mut v = FockVector::zero(s.sector);
        v.add_term(s, Rational::one());
        v
    }

    /// `c·(factors applied to the vacuum)` with factors in any order.
    pub fn monomial(sector: Sector, c: Rational, factors: &[GeneratorLabel]) -> Self {
        let mut v = FockVector::zero(sector);
        if let Some((sign, s)) = FockState::from_factors(sector, factors) {
            v.add_term(s, c * int(sign));
        }
        v
    }

    pub fn add_term(&mut self, s: FockState, c: Rational) {
        debug_assert_eq!(s.sector, self.sector);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockState, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &FockState) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = FockVector::zero(self.sector);
        if c.is_zero() {
            return out;
        }
        for (s, x) in &self.terms {
            out.terms.insert(s.clone(), x * c);
        }
        out
    }

    pub fn add_assign_scaled(&mut self, o: &FockVector, c: &Rational) {
        for (s, x) in &o.terms {
            self.add_term(s.clone(), x * c);
        }
    }

    pub fn add(&self, o: &FockVector) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(o, &Rational::one());
        out
    }

    pub fn sub(&self, o: &FockVector) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(o, &-Rational::one());
        out
    }

    /// Largest twice-mode-depth among the terms.
    pub fn max_mode_depth2(&self) -> i64 {
        self.terms.keys().map(FockState::mode_depth2).max().unwrap_or(0)
    }

    /// `Some(depth2)` if every term has the same depth.
    pub fn homogeneous_depth2(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(FockState::depth2);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Coordinates on a list of states; `None` if some term falls outside the list.
    pub fn coordinates(&self, basis: &[FockState]) -> Option<Vec<Rational>> {
        let index: std::collections::HashMap<&FockState, usize> =
            basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut out = vec![Rational::zero(); basis.len()];
        for (s, c) in &self.terms {
            out[*index.get(s)?] = c.clone();
        }
        Some(out)
    }

    pub fn from_coordinates(sector: Sector, basis: &[FockState], coords: &[Rational]) -> Self {
        let mut v = FockVector::zero(sector);
        for (s, c) in basis.iter().zip(coords) {
            v.add_term(s.clone(), c.clone());
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let x = GeneratorLabel::a(1, -3);
        let y = GeneratorLabel::astar(1, -1);
        let z = GeneratorLabel::a(2, -1);
        assert!(x < y && y < z);
        let (sign, s) = FockState::from_factors(Sector::NS, &[y, x, z]).unwrap();
        assert_eq!(s.factors, vec![x, y, z]);
        assert_eq!(sign, -1);
        let (sign, _) = FockState::from_factors(Sector::NS, &[z, y]).unwrap();
        assert_eq!(sign, -1);
        assert!(FockState::from_factors(Sector::NS, &[y, y]).is_none());
        assert!(FockState::from_factors(Sector::NS, &[GeneratorLabel::a(1, 1)]).is_none());
    }

    #[test]
    fn depth_weight_parity() {
        assert_eq!(FockState::vacuum(Sector::NS).depth(), rat(0, 1));
        assert_eq!(FockState::vacuum(Sector::Ramond).depth(), rat(1, 2));
        let (_, s) = FockState::from_factors(Sector::Ramond, &[GeneratorLabel::astar(4, 0)]).unwrap();
        assert_eq!(s.d4_weight(), D4Weight::new([rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2)]));
        let (_, s) = FockState::from_factors(Sector::NS, &[GeneratorLabel::a(1, -1)]).unwrap();
        assert_eq!(s.parity(), 1);
        assert_eq!(s.module(), Module::V1);
    }

    #[test]
    fn vector_cancellation() {
        let s = FockState::vacuum(Sector::NS);
        let mut v = FockVector::from_state(s.clone());
        v.add_term(s, -Rational::one());
        assert!(v.is_zero());
    }
}

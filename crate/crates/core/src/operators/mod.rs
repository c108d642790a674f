//! Operators on the Fock modules: `G2^(1)` simple-root operators, Virasoro
//! families, Sugawara assembly, Ramond corrections and commutator checks.

mod commutator;
mod conformal;
mod sigma_hat;
mod sugawara;
mod virasoro;

pub use commutator::*;
pub use conformal::*;
pub use sigma_hat::*;
pub use sugawara::*;
pub use virasoro::*;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::fock::*;
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("state {0} has no vertex operator in the supported families")]
    UnsupportedState(String),
    #[error("vector must lie in the Neveu-Schwarz sector")]
    NotNeveuSchwarz,
    #[error("basis is not dual under the invariant form: {0}")]
    NonDual(String),
    #[error("{0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TermKind {
    /// `Σ_n ∘∘a(k−n)b(n)∘∘`
    Quadratic,
    /// `Σ_n (n−k−½)∘∘a(k−n)b(n)∘∘`
    DerivativeQuadratic,
    /// `Σ_{r1+r2+r3+r4=k} ∘∘a(r1)b(r2)c(r3)d(r4)∘∘`
    Quartic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTerm {
    pub coeff: Rational,
    pub kind: TermKind,
    pub pattern: Vec<Fermion>,
    pub mode: i64,
}

impl OperatorTerm {
    pub fn apply_state(&self, s: &FockState) -> FockVector {
        let v = match self.kind {
            TermKind::Quadratic => apply_quadratic_state(self.pattern[0], self.pattern[1], self.mode, false, s),
            TermKind::DerivativeQuadratic => {
                apply_quadratic_state(self.pattern[0], self.pattern[1], self.mode, true, s)
            }
            TermKind::Quartic => {
                let p = [self.pattern[0], self.pattern[1], self.pattern[2], self.pattern[3]];
                apply_quartic_state(p, self.mode, s)
            }
        };
        v.scale(&self.coeff)
    }
}

impl fmt::Display for OperatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: String = self.pattern.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let kind = match self.kind {
            TermKind::Quadratic => "Q",
            TermKind::DerivativeQuadratic => "dQ",
            TermKind::Quartic => "Q4",
        };
        write!(f, "{}·{kind}[{fields}]_{}", self.coeff, self.mode)
    }
}

/// `scalar·I + Σ coeff·term`, applied term by term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpec {
    pub name: String,
    pub terms: Vec<OperatorTerm>,
    pub scalar: Rational,
}

impl OperatorSpec {
    pub fn new(name: impl Into<String>) -> Self {
        OperatorSpec { name: name.into(), terms: Vec::new(), scalar: Rational::zero() }
    }

    pub fn identity(c: Rational) -> Self {
        OperatorSpec { name: "I".into(), terms: Vec::new(), scalar: c }
    }

    pub fn zero() -> Self {
        OperatorSpec::new("0")
    }

    pub fn with_term(mut self, coeff: Rational, kind: TermKind, pattern: &[Fermion], mode: i64) -> Self {
        self.push(coeff, kind, pattern, mode);
        self
    }

    pub fn push(&mut self, coeff: Rational, kind: TermKind, pattern: &[Fermion], mode: i64) {
        if coeff.is_zero() {
            return;
        }
        if let Some(t) = self.terms.iter_mut().find(|t| t.kind == kind && t.pattern == pattern && t.mode == mode) {
            t.coeff += coeff;
        } else {
            self.terms.push(OperatorTerm { coeff, kind, pattern: pattern.to_vec(), mode });
        }
        self.terms.retain(|t| !t.coeff.is_zero());
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = OperatorSpec::new(self.name.clone());
        for t in &self.terms {
            out.push(&t.coeff * c, t.kind, &t.pattern, t.mode);
        }
        out.scalar = &self.scalar * c;
        out
    }

    pub fn plus(&self, o: &OperatorSpec) -> Self {
        let mut out = self.clone();
        for t in &o.terms {
            out.push(t.coeff.clone(), t.kind, &t.pattern, t.mode);
        }
        out.scalar += &o.scalar;
        out.name = format!("{} + {}", self.name, o.name);
        out
    }

    pub fn add_scalar(mut self, c: Rational) -> Self {
        self.scalar += c;
        self
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A linear operator on the Fock modules, given by its action on basis states.
pub trait FockOperator: Sync {
    fn apply_state(&self, s: &FockState) -> FockVector;

    fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(v.sector);
        for (s, c) in v.terms() {
            out.add_assign_scaled(&self.apply_state(s), c);
        }
        out
    }
}

impl FockOperator for OperatorSpec {
    fn apply_state(&self, s: &FockState) -> FockVector {
        let mut out = FockVector::zero(s.sector);
        if !self.scalar.is_zero() {
            out.add_term(s.clone(), self.scalar.clone());
        }
        for t in &self.terms {
            out.add_assign_scaled(&t.apply_state(s), &Rational::one());
        }
        out
    }
}

/// Memoizes an operator's action on states.
pub struct Cached<O> {
    pub op: O,
    cache: RwLock<HashMap<FockState, FockVector>>,
}

impl<O: FockOperator> Cached<O> {
    pub fn new(op: O) -> Self {
        Cached { op, cache: RwLock::new(HashMap::new()) }
    }
}

impl<O: FockOperator> FockOperator for Cached<O> {
    fn apply_state(&self, s: &FockState) -> FockVector {
        if let Some(v) = self.cache.read().expect("cache lock").get(s) {
            return v.clone();
        }
        let v = self.op.apply_state(s);
        self.cache.write().expect("cache lock").insert(s.clone(), v.clone());
        v
    }
}

impl<O: FockOperator + ?Sized> FockOperator for &O {
    fn apply_state(&self, s: &FockState) -> FockVector {
        (**self).apply_state(s)
    }
}

/// `Σ c_i·A_i` over boxed operators.
pub struct Combination<'a> {
    pub parts: Vec<(Rational, &'a dyn FockOperator)>,
    pub scalar: Rational,
}

impl<'a> Combination<'a> {
    pub fn new() -> Self {
        Combination { parts: Vec::new(), scalar: Rational::zero() }
    }

    pub fn with(mut self, c: Rational, op: &'a dyn FockOperator) -> Self {
        self.parts.push((c, op));
        self
    }

    pub fn with_scalar(mut self, c: Rational) -> Self {
        self.scalar += c;
        self
    }
}

impl Default for Combination<'_> {
    fn default() -> Self {
        Self::new()
    }
}

impl FockOperator for Combination<'_> {
    fn apply_state(&self, s: &FockState) -> FockVector {
        let mut out = FockVector::zero(s.sector);
        if !self.scalar.is_zero() {
            out.add_term(s.clone(), self.scalar.clone());
        }
        for (c, op) in &self.parts {
            out.add_assign_scaled(&op.apply_state(s), c);
        }
        out
    }
}

/// The mode `Y_k(v)` of the vertex operator of an NS vector built from
/// `a(−½)b(−½)𝟏`, `a(−3/2)b(−½)𝟏` and `a(−½)b(−½)c(−½)d(−½)𝟏` terms.
/// The scalar part is left at zero.
pub fn vertex_mode(v: &FockVector, k: i64) -> Result<OperatorSpec, OperatorError> {
    if v.sector != Sector::NS {
        return Err(OperatorError::NotNeveuSchwarz);
    }
    let mut out = OperatorSpec::new(format!("Y_{k}"));
    for (s, c) in v.terms() {
        let f = &s.factors;
        let fields: Vec<Fermion> = f.iter().map(|g| Fermion::new(g.flavor, g.starred)).collect();
        let modes: Vec<i32> = f.iter().map(|g| g.mode2).collect();
        let kind = match modes.as_slice() {
            [-1, -1] => TermKind::Quadratic,
            [-3, -1] => TermKind::DerivativeQuadratic,
            [-1, -1, -1, -1] => TermKind::Quartic,
            _ => return Err(OperatorError::UnsupportedState(render_state(s))),
        };
        out.push(c.clone(), kind, &fields, k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn vertex_mode_shapes() {
        let v = parse_vector("1*4 + 1/2·1234").unwrap();
        let y = vertex_mode(&v, 0).unwrap();
        assert_eq!(y.terms.len(), 2);
        assert!(vertex_mode(&parse_vector("1(-1/2)𝟏").unwrap(), 0).is_err());
    }

    #[test]
    fn cached_matches_direct() {
        let l = vertex_mode(&conformal_vectors().d4, 0).unwrap();
        let c = Cached::new(l.clone());
        for s in enumerate_basis(Sector::NS, int(2)) {
            assert_eq!(c.apply_state(&s), l.apply_state(&s));
            assert_eq!(c.apply_state(&s), l.apply_state(&s));
        }
    }
}

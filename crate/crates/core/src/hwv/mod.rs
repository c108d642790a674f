//! Simultaneous highest weight vectors for `G2^(1)` and both coset Virasoro algebras.

mod tables;

pub use tables::*;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::fock::*;
use crate::linalg::{char_poly, normalize_first, proportionality, rational_roots, Matrix};
use crate::operators::*;
use crate::roots::{project_to_g2, G2Weight};
use crate::scalars::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HwvError {
    #[error("L_0 restriction is not diagonalizable over the rationals in {0}")]
    NotDiagonalizable(String),
    #[error("L_0 leaves the candidate span in {0}")]
    NotInvariant(String),
    #[error("depth {0} is not on the grid of {1}")]
    BadDepth(Rational, Module),
    #[error("unknown G2 weight class {0:?}")]
    BadClass(String),
}

/// Top `G2` weight of the `G2^(1)` module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum G2Class {
    Omega0,
    Omega2,
}

impl G2Class {
    pub fn all() -> [G2Class; 2] {
        [G2Class::Omega0, G2Class::Omega2]
    }

    pub fn top_weight(self) -> G2Weight {
        match self {
            G2Class::Omega0 => G2Weight::from_ints(0, 0),
            G2Class::Omega2 => G2Weight::from_ints(0, 1),
        }
    }
}

impl fmt::Display for G2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G2Class::Omega0 => "Ω0",
            G2Class::Omega2 => "Ω2",
        })
    }
}

impl FromStr for G2Class {
    type Err = HwvError;
    fn from_str(s: &str) -> Result<Self, HwvError> {
        match s {
            "0" | "O0" | "Omega0" | "Ω0" => Ok(G2Class::Omega0),
            "2" | "O2" | "Omega2" | "Ω2" => Ok(G2Class::Omega2),
            _ => Err(HwvError::BadClass(s.to_string())),
        }
    }
}

/// A cell of the search: module, depth and top `G2` weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cell {
    pub module: Module,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub depth: Rational,
    pub class: G2Class,
}

impl Cell {
    pub fn new(module: Module, depth: Rational, class: G2Class) -> Self {
        Cell { module, depth, class }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.module, self.depth, self.class)
    }
}

fn on_grid(module: Module, depth: &Rational) -> bool {
    let twice = depth * int(2);
    if !twice.is_integer() || *depth < Rational::zero() {
        return false;
    }
    let d2 = twice.to_integer();
    let d2: i64 = i64::try_from(d2).unwrap_or(i64::MAX);
    match module {
        Module::V0 => d2 % 2 == 0,
        Module::V1 => d2 % 2 == 1,
        Module::V2 | Module::V3 => d2 >= 1 && d2 % 2 == 1,
    }
}

/// Basis states of the slice whose `D4` weight projects to the top `G2` weight.
pub fn candidate_basis(cell: &Cell) -> Vec<FockState> {
    let top = cell.class.top_weight();
    basis_slice(cell.module, &cell.depth).into_iter().filter(|s| project_to_g2(&s.d4_weight()) == top).collect()
}

/// `X_β1(0), X_β2(0), X_−θ(1), L_1^c, L_2^c` for both charges.
pub fn positive_operators(sector: Sector) -> Vec<OperatorSpec> {
    let mut out: Vec<OperatorSpec> = G2Simple::all().into_iter().map(g2_simple_op).collect();
    for charge in [Charge::Half, Charge::SevenTenths] {
        for k in 1..=2 {
            out.push(coset_l(k, charge, sector));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwvSolution {
    pub cell: Cell,
    #[serde(serialize_with = "ser_vector")]
    pub vector: FockVector,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub h_half: Rational,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub h_seven_tenths: Rational,
}

fn ser_vector<S: serde::Serializer>(v: &FockVector, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&shorthand_vector(v))
}

fn coords_of(v: &FockVector, basis: &[FockState], cell: &Cell) -> Result<Vec<Rational>, HwvError> {
    v.coordinates(basis).ok_or_else(|| HwvError::NotInvariant(cell.to_string()))
}

/// Matrix of `op` restricted to the span of `vectors`, which it must preserve.
fn restrict(
    op: &OperatorSpec,
    vectors: &[Vec<Rational>],
    basis: &[FockState],
    cell: &Cell,
) -> Result<Matrix<Rational>, HwvError> {
    let sector = cell.module.sector();
    let span = Matrix::from_cols(vectors);
    let cols = vectors
        .iter()
        .map(|x| {
            let img = op.apply(&FockVector::from_coordinates(sector, basis, x));
            let y = coords_of(&img, basis, cell)?;
            span.solve(&y).ok_or_else(|| HwvError::NotInvariant(cell.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_cols(&cols))
}

type Eigenspace = (Rational, Vec<Vec<Rational>>);

/// Eigenspaces of `m` as `(λ, basis)` with `λ` ascending.
fn eigenspaces(m: &Matrix<Rational>, cell: &Cell) -> Result<Vec<Eigenspace>, HwvError> {
    let n = m.rows();
    let (roots, complete) = rational_roots(&char_poly(m));
    if !complete {
        return Err(HwvError::NotDiagonalizable(cell.to_string()));
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (lambda, _) in roots {
        let mut shifted = m.clone();
        for i in 0..n {
            let d = shifted.get(i, i) - &lambda;
            shifted.set(i, i, d);
        }
        let space = shifted.nullspace();
        total += space.len();
        out.push((lambda, space));
    }
    if total != n {
        return Err(HwvError::NotDiagonalizable(cell.to_string()));
    }
    Ok(out)
}

fn combine(vectors: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); vectors.first().map_or(0, Vec::len)];
    for (v, c) in vectors.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x * c;
        }
    }
    out
}

/// Every simultaneous highest weight vector in the cell, split by the pair of
/// `L_0` eigenvalues and normalized so the first nonzero candidate coordinate is 1.
pub fn solve_hwv(cell: &Cell) -> Result<Vec<HwvSolution>, HwvError> {
    if !on_grid(cell.module, &cell.depth) {
        return Err(HwvError::BadDepth(cell.depth.clone(), cell.module));
    }
    let sector = cell.module.sector();
    let basis = candidate_basis(cell);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    // rows indexed by every state reached, so annihilation holds in the whole module
    let images: Vec<Vec<FockVector>> =
        positive_operators(sector).iter().map(|op| basis.iter().map(|s| op.apply_state(s)).collect()).collect();
    let mut targets: Vec<FockState> = images.iter().flatten().flat_map(|v| v.terms().map(|(s, _)| s.clone())).collect();
    targets.sort();
    targets.dedup();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for per_op in &images {
        rows.extend(targets.iter().map(|t| per_op.iter().map(|v| v.coeff(t)).collect::<Vec<_>>()));
    }
    let null = if rows.is_empty() {
        let id = Matrix::<Rational>::identity(basis.len());
        (0..basis.len()).map(|j| id.col(j)).collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    if null.is_empty() {
        return Ok(Vec::new());
    }
    let l_half = coset_l(0, Charge::Half, sector);
    let l_seven = coset_l(0, Charge::SevenTenths, sector);
    let mut out = Vec::new();
    for (h_half, space) in eigenspaces(&restrict(&l_half, &null, &basis, cell)?, cell)? {
        let sub: Vec<Vec<Rational>> = space.iter().map(|c| combine(&null, c)).collect();
        for (h_seven, inner) in eigenspaces(&restrict(&l_seven, &sub, &basis, cell)?, cell)? {
            for c in inner {
                let coords = normalize_first(&combine(&sub, &c));
                out.push(HwvSolution {
                    cell: cell.clone(),
                    vector: FockVector::from_coordinates(sector, &basis, &coords),
                    h_half: h_half.clone(),
                    h_seven_tenths: h_seven.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The labeled vectors, in the order `(a)`–`(h)` then Ramond `(a)`–`(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownHwv {
    pub tag: &'static str,
    pub cell: Cell,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub h_half: Rational,
    #[serde(serialize_with = "crate::scalars::ser_rational")]
    pub h_seven_tenths: Rational,
    pub expression: &'static str,
}

pub fn known_hwvs() -> Vec<KnownHwv> {
    use G2Class::*;
    use Module::*;
    let row = |tag, module, depth: Rational, h: Rational, g: Rational, class, expression| KnownHwv {
        tag,
        cell: Cell::new(module, depth, class),
        h_half: h,
        h_seven_tenths: g,
        expression,
    };
    let z = Rational::zero;
    let h = || rat(1, 2);
    vec![
        row("NS(a)", V0, z(), z(), z(), Omega0, "𝟏"),
        row("NS(b)", V0, int(1), h(), rat(1, 10), Omega2, "1(-1/2)4(-1/2)𝟏 + 1(-1/2)4*(-1/2)𝟏"),
        row("NS(c)", V0, int(1), z(), rat(3, 5), Omega2, "2·2(-1/2)3(-1/2)𝟏 - 1(-1/2)4(-1/2)𝟏 + 1(-1/2)4*(-1/2)𝟏"),
        row(
            "NS(d)",
            V0,
            int(2),
            h(),
            rat(3, 2),
            Omega0,
            "11*44* - 22*44* - 33*44* + 1*234 + 1*234* + 12*3*4 + 12*3*4*",
        ),
        row("NS(e)", V1, h(), h(), z(), Omega0, "4(-1/2)𝟏 + 4*(-1/2)𝟏"),
        row("NS(f)", V1, h(), z(), rat(1, 10), Omega2, "1(-1/2)𝟏"),
        row("NS(g)", V1, rat(3, 2), h(), rat(3, 5), Omega2, "234 + 234* - 144*"),
        row(
            "NS(h)",
            V1,
            rat(3, 2),
            z(),
            rat(3, 2),
            Omega0,
            "11*4 - 11*4* - 22*4 + 22*4* - 33*4 + 33*4* + 2·1*23 + 2·12*3*",
        ),
        row("R(a)", V2, h(), rat(1, 16), rat(3, 80), Omega2, "𝟏′"),
        row("R(b)", V2, h(), rat(1, 16), rat(7, 16), Omega0, "1*(0)4*(0)𝟏′ - 2*(0)3*(0)𝟏′"),
        row("R(c)", V3, h(), rat(1, 16), rat(3, 80), Omega2, "4*(0)𝟏′"),
        row("R(d)", V3, h(), rat(1, 16), rat(7, 16), Omega0, "1*(0)𝟏′ + 2*(0)3*(0)4*(0)𝟏′"),
    ]
}

/// Cells where the search must come back empty.
pub fn empty_cells() -> Vec<Cell> {
    vec![Cell::new(Module::V0, int(1), G2Class::Omega0), Cell::new(Module::V0, int(2), G2Class::Omega2)]
}

/// Every distinct cell of [`known_hwvs`], in first-appearance order.
pub fn labeled_cells() -> Vec<Cell> {
    let mut out: Vec<Cell> = Vec::new();
    for k in known_hwvs() {
        if !out.contains(&k.cell) {
            out.push(k.cell);
        }
    }
    out
}

impl KnownHwv {
    pub fn vector(&self) -> FockVector {
        parse_vector_in(self.cell.module.sector(), self.expression).expect("static expression parses")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwvCheck {
    pub tag: &'static str,
    pub cell: Cell,
    pub annihilated: bool,
    /// `(L_0^{1/2}, L_0^{7/10})` eigenvalues, if the vector is an eigenvector of both.
    pub eigenvalues: Option<(String, String)>,
    pub eigenvalues_match: bool,
    /// `c` with `solver output = c·labeled vector`.
    pub scalar: Option<String>,
    /// `h^{1/2} + h^{7/10} + h_{G2}` equals the depth.
    pub gradings_agree: bool,
}

impl HwvCheck {
    pub fn passed(&self) -> bool {
        self.annihilated && self.eigenvalues_match && self.scalar.is_some() && self.gradings_agree
    }
}

fn eigenvalue(op: &dyn FockOperator, v: &FockVector) -> Option<Rational> {
    let img = op.apply(v);
    let (s, c) = v.terms().next()?;
    let lambda = img.coeff(s) / c;
    (img == v.scale(&lambda)).then_some(lambda)
}

/// The `L_0` eigenvalue of the `G2` Sugawara operator on `v`.
pub fn g2_grading(v: &FockVector) -> Option<Rational> {
    let pairs = dual_pairs(&crate::chevalley::g2_basis()).ok()?;
    let l0 = SugawaraL::new(&pairs, H_DUAL_G2, 0).ok()?;
    eigenvalue(&l0, v)
}

/// Checks each labeled vector against the operators and the solver.
pub fn verify_known_hwvs() -> Result<Vec<HwvCheck>, HwvError> {
    let known = known_hwvs();
    let solved: Vec<(Cell, Vec<HwvSolution>)> =
        labeled_cells().into_par_iter().map(|c| solve_hwv(&c).map(|s| (c, s))).collect::<Result<_, _>>()?;
    Ok(known
        .par_iter()
        .map(|k| {
            let v = k.vector();
            let sector = k.cell.module.sector();
            let annihilated = positive_operators(sector).iter().all(|op| op.apply(&v).is_zero());
            let e_half = eigenvalue(&coset_l(0, Charge::Half, sector), &v);
            let e_seven = eigenvalue(&coset_l(0, Charge::SevenTenths, sector), &v);
            let eigenvalues_match = e_half.as_ref() == Some(&k.h_half) && e_seven.as_ref() == Some(&k.h_seven_tenths);
            let eigenvalues = match (&e_half, &e_seven) {
                (Some(a), Some(b)) => Some((a.to_string(), b.to_string())),
                _ => None,
            };
            let sols = &solved.iter().find(|(c, _)| *c == k.cell).expect("cell solved").1;
            let scalar = sols
                .iter()
                .filter(|s| s.h_half == k.h_half && s.h_seven_tenths == k.h_seven_tenths)
                .find_map(|s| {
                    let basis: Vec<FockState> = s.vector.terms().chain(v.terms()).map(|(x, _)| x.clone()).collect();
                    proportionality(&s.vector.coordinates(&basis)?, &v.coordinates(&basis)?)
                })
                .map(|c| c.to_string());
            let gradings_agree = g2_grading(&v).is_some_and(|h| &k.h_half + &k.h_seven_tenths + h == k.cell.depth);
            HwvCheck {
                tag: k.tag,
                cell: k.cell.clone(),
                annihilated,
                eigenvalues,
                eigenvalues_match,
                scalar,
                gradings_agree,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn states(text: &[&str]) -> Vec<FockState> {
        let mut out: Vec<FockState> =
            text.iter().map(|t| parse_vector(t).unwrap().terms().next().unwrap().0.clone()).collect();
        out.sort_by_key(|s| (s.mode_depth2(), s.clone()));
        out
    }

    fn sorted(mut v: Vec<FockState>) -> Vec<FockState> {
        v.sort_by_key(|s| (s.mode_depth2(), s.clone()));
        v
    }

    #[test]
    fn candidate_lists() {
        use G2Class::*;
        let c = |m, d, g| sorted(candidate_basis(&Cell::new(m, d, g)));
        assert_eq!(c(Module::V1, rat(3, 2), Omega2), states(&["1(-3/2)𝟏", "122*", "133*", "144*", "234", "234*"]));
        assert_eq!(
            c(Module::V1, rat(3, 2), Omega0),
            states(&["4(-3/2)𝟏", "4*(-3/2)𝟏", "11*4", "11*4*", "22*4", "22*4*", "33*4", "33*4*", "1*23", "12*3*"])
        );
        assert_eq!(c(Module::V0, int(1), Omega2), states(&["1(-1/2)4(-1/2)𝟏", "1(-1/2)4*(-1/2)𝟏", "2(-1/2)3(-1/2)𝟏"]));
        assert_eq!(c(Module::V1, rat(1, 2), Omega0), states(&["4(-1/2)𝟏", "4*(-1/2)𝟏"]));
        assert_eq!(c(Module::V1, rat(1, 2), Omega2), states(&["1(-1/2)𝟏"]));
        let quartic = states(&[
            "11*44*", "22*44*", "33*44*", "1*234", "1*234*", "12*3*4", "12*3*4*", "11*22*", "11*33*", "22*33*",
        ]);
        let full = c(Module::V0, int(2), Omega0);
        assert_eq!(full.len(), 20);
        assert_eq!(full.iter().filter(|s| s.factors.len() == 4).cloned().collect::<Vec<_>>(), quartic);
        let r = |t: &str| parse_vector_in(Sector::Ramond, t).unwrap().terms().next().unwrap().0.clone();
        assert_eq!(c(Module::V2, rat(1, 2), Omega2), vec![FockState::vacuum(Sector::Ramond)]);
        assert_eq!(sorted(c(Module::V2, rat(1, 2), Omega0)), sorted(vec![r("1*(0)4*(0)𝟏′"), r("2*(0)3*(0)𝟏′")]));
        assert_eq!(c(Module::V3, rat(1, 2), Omega2), vec![r("4*(0)𝟏′")]);
    }

    #[test]
    fn worked_example_cell() {
        let sols = solve_hwv(&Cell::new(Module::V1, rat(3, 2), G2Class::Omega2)).unwrap();
        assert_eq!(sols.len(), 1);
        let v = parse_vector("234 + 234* - 144*").unwrap();
        let s = &sols[0];
        assert!(s.vector == v || s.vector == v.scale(&int(-1)));
        assert_eq!((s.h_half.clone(), s.h_seven_tenths.clone()), (rat(1, 2), rat(3, 5)));
    }

    #[test]
    fn vacuum_cell() {
        let sols = solve_hwv(&Cell::new(Module::V0, int(0), G2Class::Omega0)).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].vector, FockVector::vacuum(Sector::NS));
    }

    #[test]
    fn off_grid_rejected() {
        assert!(solve_hwv(&Cell::new(Module::V0, rat(1, 2), G2Class::Omega0)).is_err());
        assert!(solve_hwv(&Cell::new(Module::V2, int(0), G2Class::Omega0)).is_err());
    }

    #[test]
    fn empty_cells_are_empty() {
        for c in empty_cells() {
            assert!(solve_hwv(&c).unwrap().is_empty(), "{c}");
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]
        #[test]
        fn solutions_are_simultaneous_eigenvectors(m in 0usize..4, d2 in 0i64..4, omega2 in proptest::bool::ANY) {
            let module = Module::all()[m];
            let class = if omega2 { G2Class::Omega2 } else { G2Class::Omega0 };
            let cell = Cell::new(module, rat(d2, 2), class);
            match solve_hwv(&cell) {
                Err(HwvError::BadDepth(..)) => proptest::prop_assert!(!on_grid(module, &cell.depth)),
                Err(e) => proptest::prop_assert!(false, "{e}"),
                Ok(sols) => {
                    let sector = module.sector();
                    for s in sols {
                        for op in positive_operators(sector) {
                            proptest::prop_assert!(op.apply(&s.vector).is_zero());
                        }
                        proptest::prop_assert_eq!(eigenvalue(&coset_l(0, Charge::Half, sector), &s.vector), Some(s.h_half.clone()));
                        proptest::prop_assert_eq!(eigenvalue(&coset_l(0, Charge::SevenTenths, sector), &s.vector), Some(s.h_seven_tenths.clone()));
                        for (st, _) in s.vector.terms() {
                            proptest::prop_assert_eq!(project_to_g2(&st.d4_weight()), class.top_weight());
                            proptest::prop_assert_eq!(st.module(), module);
                        }
                    }
                }
            }
        }
    }
}

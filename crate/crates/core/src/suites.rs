//! Check suites grouped the way the command line runs them.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::chevalley::*;
use crate::fock::{depth_counts, shorthand_vector, Sector};
use crate::hwv::*;
use crate::operators::*;
use crate::qseries::identities::*;
use crate::qseries::products::horizontal_gr;
use crate::qseries::Sector as QSector;
use crate::report::{CheckResult, Detail, Mismatch, Status};
use crate::scalars::{int, rat, Eisenstein, Rational};

/// Euler products, Rogers-Ramanujan, Watson and the Jacobi identities.
pub fn identities(order: usize) -> Vec<CheckResult> {
    let mut out = jtpi_check(order);
    out.extend(named_series_checks(order));
    out.extend(ramanujan_checks(order));
    out.extend(principal_checks(order));
    out.extend(jacobi_abs_check(order));
    out
}

/// Closed forms of the minimal-model characters.
pub fn characters(order: usize) -> Vec<CheckResult> {
    character_form_checks(order)
}

/// The branching series and the decomposition of each module.
pub fn branching(order: usize) -> Vec<CheckResult> {
    let mut out = branching_checks(order);
    out.extend(decomposition_identities(order));
    out.extend(master_branching_checks(order));
    out
}

/// Basis counts by depth against the horizontal products, up to `max_depth2 / 2`.
pub fn graded_dims(max_depth2: usize) -> Vec<CheckResult> {
    let order = max_depth2 + 1;
    let mut out = Vec::new();
    for (name, qs, sector, offset) in [
        ("NS basis counts = prod (1+q^{n-1/2})^8", QSector::NeveuSchwarz, Sector::NS, 0),
        ("Ramond basis counts = 16 prod (1+q^n)^8", QSector::Ramond, Sector::Ramond, 1),
    ] {
        let series = horizontal_gr(qs, order);
        let counts = depth_counts(sector, (max_depth2 + offset) as i64);
        let bad = (0..=max_depth2).find(|&j| series.coeff(j).to_integer().to_usize() != Some(counts[j + offset]));
        out.push(match bad {
            None => CheckResult::pass(name).with_message(format!("{:?}", &counts[offset..])),
            Some(j) => CheckResult {
                check: name.to_string(),
                status: Status::Fail,
                detail: Detail {
                    first_mismatch: Some(Mismatch {
                        exponent: j,
                        lhs: counts[j + offset].to_string(),
                        rhs: series.coeff(j).to_string(),
                    }),
                    ..Detail::default()
                },
            },
        });
    }
    out
}

fn all_pairs<T: Sync>(xs: &[T], f: impl Fn(&T, &T) -> bool + Sync) -> bool {
    xs.par_iter().all(|x| xs.iter().all(|y| f(x, y)))
}

/// Triality on the Chevalley algebra and on `g`, and the identification tables.
pub fn finite_algebra() -> Vec<CheckResult> {
    let basis: Vec<ChevalleyElement> = CLabel::all().into_iter().map(ChevalleyElement::basis).collect();
    let g: Vec<SO8Element> = SO8Element::basis_pairs().into_iter().map(|(a, b)| SO8Element::pair(a, b)).collect();
    let mut out = vec![
        CheckResult::from_bool(
            "σ³ = τ² = id and τστ = σ⁻¹ on the Chevalley algebra",
            basis.iter().all(|b| sigma_pow(3, b) == *b && tau(&tau(b)) == *b && tau(&sigma(&tau(b))) == sigma_inv(b)),
            "group relation fails",
        ),
        CheckResult::from_bool(
            "σ and τ are ∘-automorphisms",
            all_pairs(&basis, |x, y| {
                let p = circ_product(x, y);
                sigma(&p) == circ_product(&sigma(x), &sigma(y)) && tau(&p) == circ_product(&tau(x), &tau(y))
            }),
            "product not preserved",
        ),
    ];
    let one = Eisenstein::from(1);
    let (fs, ft) = (eigenspace_dimension(sigma_g, &one), eigenspace_dimension(tau_g, &one));
    out.push(
        CheckResult::from_bool("fixed spaces of σ and τ on g have dimensions 14 and 21", fs == 14 && ft == 21, "")
            .with_message(format!("dim g^σ = {fs}, dim g^τ = {ft}")),
    );
    out.push(CheckResult::from_bool(
        "σ, τ on g: order, relation and bracket",
        g.par_iter().all(|x| {
            sigma_g(&sigma_g(&sigma_g(x))) == *x
                && tau_g(&tau_g(x)) == *x
                && identify_operator(2, x).is_ok_and(|y| tau_g(&sigma_g(&tau_g(x))) == y)
                && g.iter().all(|y| sigma_g(&bracket(x, y)) == bracket(&sigma_g(x), &sigma_g(y)))
        }),
        "relation fails",
    ));
    out.push(CheckResult::from_bool(
        "g is isomorphic to the 8×8 matrix algebra",
        g.par_iter().all(|x| {
            let mx = so8_matrix(x);
            from_so8_matrix(&mx) == *x && g.iter().all(|y| so8_matrix(&bracket(x, y)) == mx.commutator(&so8_matrix(y)))
        }),
        "bracket not preserved",
    ));
    for (name, checks) in [
        ("positive root identification table", check_positive_identification()),
        ("Cartan identification table and matrix", check_csa_identification()),
        ("root images under σ and σ²", check_root_images()),
    ] {
        let bad: Vec<String> = checks.iter().filter(|c| !c.matches).map(|c| c.entry.clone()).collect();
        out.push(CheckResult::from_bool(
            name,
            bad.is_empty(),
            format!("{} of {} entries disagree in sign: {}", bad.len(), checks.len(), bad.join(", ")),
        ));
    }
    out
}

fn report(r: &IdentityReport) -> CheckResult {
    let name = format!("{} ({:?})", r.identity, r.sector);
    match &r.failure {
        None => CheckResult::pass(name),
        Some((s, v)) => CheckResult::fail(name, format!("on {s}: residual {v}")),
    }
}

/// Sugawara assembly of the conformal vectors.
pub fn sugawara_checks() -> Vec<CheckResult> {
    let c = conformal_vectors();
    let mut out = Vec::new();
    for (name, basis, h, expected) in [
        ("Sugawara ω_B3 = ω_D4 - [44*]/4", b3_basis(), H_DUAL_B3, &c.b3),
        ("Sugawara ω_G2 matches its closed form", g2_basis(), H_DUAL_G2, &c.g2),
    ] {
        let got = dual_pairs(&basis).and_then(|p| sugawara_omega(&p, h));
        out.push(match got {
            Ok(v) if v == *expected => CheckResult::pass(name),
            Ok(v) => CheckResult::fail(name, format!("got {}", shorthand_vector(&v))),
            Err(e) => CheckResult::fail(name, e.to_string()),
        });
    }
    out
}

/// Bracket relations of the three Virasoro families in both sectors.
pub fn virasoro_checks(max_depth: &Rational) -> Vec<CheckResult> {
    [Sector::NS, Sector::Ramond].iter().flat_map(|&s| conformal_suite(s, max_depth)).map(|r| report(&r)).collect()
}

/// The scalar part of the Ramond `L_0`.
pub fn ramond_checks() -> Vec<CheckResult> {
    let c = conformal_vectors();
    [("ω_D4", &c.d4, rat(1, 2)), ("ω_D4-B3", &c.d4_b3, rat(1, 16)), ("ω_B3-G2", &c.b3_g2, rat(7, 80))]
        .into_iter()
        .map(|(name, v, want)| {
            let got = delta_correction(v);
            CheckResult::from_bool(format!("Ramond shift of {name} = {want}"), got == want, format!("got {got}"))
        })
        .collect()
}

/// `σ̂` on the span of the depth-two conformal data.
pub fn sigma_hat_checks() -> Vec<CheckResult> {
    let m = sigma_hat_matrix();
    let id = crate::linalg::Matrix::identity(7);
    let omega = span_coords(&omega_d4()).expect("ω lies in the span");
    let t = twisted_cosets();
    let scaled = |c: &SpanCoords, k: i64| render_span(&c.iter().map(|x| x * int(k)).collect::<Vec<_>>());
    let listed = [
        (scaled(&t.d4_b3[0], 8), "ω - [11*22*] - [22*44*] + 2·[1*234*]"),
        (scaled(&t.d4_b3[1], 8), "ω - [11*22*] + [22*44*] - 2·[1*234]"),
        (scaled(&t.b3_g2[0], 40), "3·ω + 8·[44*] - 3·[11*22*] + 5·[22*44*] - 8·[1*234] - 2·[1*234*]"),
        (scaled(&t.b3_g2[1], 40), "3·ω + 8·[44*] - 3·[11*22*] - 5·[22*44*] + 2·[1*234] + 8·[1*234*]"),
    ];
    let bad: Vec<String> = listed.iter().filter(|(a, b)| a != b).map(|(a, _)| a.clone()).collect();
    vec![
        CheckResult::from_bool("σ̂³ = id on the span", m.mul(&m).mul(&m) == id && m != id, "order differs"),
        CheckResult::from_bool("σ̂ fixes ω_D4", sigma_hat(&omega) == omega, "ω moved"),
        CheckResult::from_bool("σ̂ images of the coset vectors", bad.is_empty(), bad.join("; ")),
    ]
}

/// Conformal vectors, Virasoro brackets, Ramond shifts and `σ̂`.
pub fn conformal(max_depth: &Rational) -> Vec<CheckResult> {
    let mut out = sugawara_checks();
    out.extend(virasoro_checks(max_depth));
    out.extend(ramond_checks());
    out.extend(sigma_hat_checks());
    out
}

/// The labeled highest weight vectors and the empty cells.
pub fn hwv() -> Vec<CheckResult> {
    let mut out = match verify_known_hwvs() {
        Ok(checks) => checks
            .into_iter()
            .map(|c| {
                let mut failures = Vec::new();
                if !c.annihilated {
                    failures.push("not annihilated");
                }
                if !c.eigenvalues_match {
                    failures.push("eigenvalues differ");
                }
                if c.scalar.is_none() {
                    failures.push("not proportional to a solver vector");
                }
                if !c.gradings_agree {
                    failures.push("gradings do not sum to the depth");
                }
                let mut r = CheckResult::from_bool(
                    format!("HWV {} in {}", c.tag, c.cell),
                    failures.is_empty(),
                    failures.join(", "),
                );
                r.detail.scalar = c.scalar;
                r.detail.eigenvalues = c.eigenvalues.map(|(a, b)| vec![a, b]);
                r
            })
            .collect(),
        Err(e) => vec![CheckResult::fail("HWV solver", e.to_string())],
    };
    for cell in labeled_cells() {
        let want = known_hwvs().iter().filter(|k| k.cell == cell).count();
        let got = solve_hwv(&cell).map(|s| s.len());
        out.push(CheckResult::from_bool(
            format!("solutions in {cell}"),
            got.as_ref() == Ok(&want),
            format!("expected {want}, got {got:?}"),
        ));
    }
    for cell in empty_cells() {
        let got = solve_hwv(&cell).map(|s| s.len());
        out.push(CheckResult::from_bool(format!("no HWV in {cell}"), got == Ok(0), format!("got {got:?}")));
    }
    out
}

/// Each regenerated table against its normalized reference.
pub fn tables() -> Vec<CheckResult> {
    table_ids()
        .into_par_iter()
        .map(|id| match (generate_table(id), normalized_reference(id)) {
            (Ok(t), Ok(reference)) => {
                let text = t.render_text();
                if text == reference {
                    return CheckResult::pass(format!("table {id}"));
                }
                let mism = check_table(id).map(|(_, m)| m).unwrap_or_default();
                let first = mism
                    .first()
                    .map(|m| {
                        format!(
                            "; first at row {} column {}: printed {} computed {}",
                            m.row, m.column, m.reference, m.computed
                        )
                    })
                    .unwrap_or_default();
                CheckResult::fail(format!("table {id}"), format!("{} cells differ{first}", mism.len()))
            }
            (Err(e), _) | (_, Err(e)) => CheckResult::fail(format!("table {id}"), e.to_string()),
        })
        .collect()
}

/// Parses a depth such as `3/2`.
pub fn parse_depth(text: &str) -> Option<Rational> {
    crate::scalars::parse_rational(text).ok()
}

//! Identity suites: each check expands both sides independently and compares
//! coefficients exactly.

use num_traits::{One, Signed};

use super::characters::{integral_exponent, minimal_character, Character, MinimalModelLabel};
use super::products::*;
use super::series::{Series, SeriesError};
use crate::report::CheckResult;
use crate::scalars::{int, rat, Rational};

fn half(s: &Series) -> Series {
    s.scale(&rat(1, 2))
}

fn ml(s: i64, t: i64, m: i64, n: i64) -> MinimalModelLabel {
    MinimalModelLabel::new(s, t, m, n)
}

fn fail_on_error(name: &str, e: impl std::fmt::Display) -> CheckResult {
    CheckResult::fail(name, e.to_string())
}

/// Named series shared by the suites, computed once per order.
#[derive(Debug, Clone)]
pub struct Basics {
    pub order: usize,
    pub phi: Series,
    pub a: Series,
    pub b: Series,
    pub v: Series,
    pub c: Series,
}

impl Basics {
    pub fn new(order: usize) -> Result<Self, QSeriesError> {
        Ok(Basics {
            order,
            phi: euler_phi(order),
            a: rr_a(order)?,
            b: rr_b(order)?,
            v: v_series(order)?,
            c: c_series(order)?,
        })
    }

    fn vm(&self) -> Series {
        self.v.negate_variable()
    }

    pub fn v_plus(&self) -> Series {
        half(&(&self.vm() + &self.v))
    }

    pub fn v_minus(&self) -> Series {
        half(&(&self.vm() - &self.v))
    }

    fn bracket(&self, x: &Series, plus: bool) -> Series {
        let p = &self.v * x;
        let m = p.negate_variable();
        if plus {
            half(&(&m + &p))
        } else {
            half(&(&m - &p))
        }
    }

    /// `[v b]_±`.
    pub fn vb(&self, plus: bool) -> Series {
        self.bracket(&self.b, plus)
    }

    /// `[v a]_±`.
    pub fn va(&self, plus: bool) -> Series {
        self.bracket(&self.a, plus)
    }
}

pub fn jtpi_check(order: usize) -> Vec<CheckResult> {
    vec![
        Series::check_equal("jtp-spec1 phi product = pentagonal sum", &euler_phi(order), &pentagonal_sum(order)),
        Series::check_equal("jtp-spec2 product = sum", &jtp_spec2_product(order), &jtp_spec2_sum(order)),
        Series::check_equal("jtp-spec3 product = sum", &jtp_spec3_product(order), &jtp_spec3_sum(order)),
    ]
}

/// Product and sum/ratio routes of `a`, `b`, `v`, `c` and `F`.
pub fn named_series_checks(order: usize) -> Vec<CheckResult> {
    vec![
        Series::check_equal("rr-a product = sum", &rr_a_product(order), &rr_a_sum(order)),
        Series::check_equal("rr-b product = sum", &rr_b_product(order), &rr_b_sum(order)),
        Series::check_equal("v product = phi ratio", &v_product(order), &v_ratio(order)),
        Series::check_equal("c phi ratio = 2/v^2", &c_ratio(order), &c_from_v(order)),
        Series::check_equal("F product = phi ratio", &g2_fock_product(order), &g2_fock_ratio(order)),
        Series::check_equal("F = v(u^3)/v(u)", &g2_fock_from_v(order), &g2_fock_ratio(order)),
    ]
}

struct Form {
    name: &'static str,
    label: MinimalModelLabel,
    p: usize,
    shift: Rational,
    rhs: Series,
}

/// The closed forms of the `c = 1/2` and `c = 7/10` characters (plus the two
/// Rogers-Ramanujan product characters at `c = -22/5`).
pub fn character_form_checks(order: usize) -> Vec<CheckResult> {
    let bs = match Basics::new(order) {
        Ok(b) => b,
        Err(e) => return vec![fail_on_error("character forms", e)],
    };
    let inv_v = bs.v.reciprocal().expect("unit constant term");
    let forms = vec![
        Form { name: "ch34-11 = v+", label: ml(3, 4, 1, 1), p: 2, shift: rat(1, 24), rhs: bs.v_plus() },
        Form { name: "ch34-13 = v-", label: ml(3, 4, 1, 3), p: 2, shift: rat(1, 24), rhs: bs.v_minus() },
        Form { name: "ch34-12 = 1/v", label: ml(3, 4, 1, 2), p: 1, shift: rat(-1, 24), rhs: inv_v.clone() },
        Form { name: "ch45-11 = [vb]+", label: ml(4, 5, 1, 1), p: 2, shift: rat(7, 120), rhs: bs.vb(true) },
        Form { name: "ch45-14 = [vb]-", label: ml(4, 5, 1, 4), p: 2, shift: rat(7, 120), rhs: bs.vb(false) },
        Form { name: "ch45-12 = [va]+", label: ml(4, 5, 1, 2), p: 2, shift: rat(-17, 120), rhs: bs.va(true) },
        Form { name: "ch45-13 = [va]-", label: ml(4, 5, 1, 3), p: 2, shift: rat(-17, 120), rhs: bs.va(false) },
        Form {
            name: "ch45-21 = a(q^2)/v",
            label: ml(4, 5, 2, 1),
            p: 1,
            shift: rat(-49, 120),
            rhs: &bs.a.substitute_power(2) * &inv_v,
        },
        Form {
            name: "ch45-22 = b(q^2)/v",
            label: ml(4, 5, 2, 2),
            p: 1,
            shift: rat(-1, 120),
            rhs: &bs.b.substitute_power(2) * &inv_v,
        },
        Form { name: "ch25-11 = a", label: ml(2, 5, 1, 1), p: 1, shift: rat(-11, 60), rhs: bs.a.clone() },
        Form { name: "ch25-12 = b", label: ml(2, 5, 1, 2), p: 1, shift: rat(1, 60), rhs: bs.b.clone() },
    ];
    forms
        .into_iter()
        .map(|f| {
            let ch = minimal_character(f.label, order);
            match ch.specialize(f.p, &f.shift) {
                Ok(lhs) => Series::check_equal(f.name, &lhs, &f.rhs),
                Err(e) => fail_on_error(f.name, e),
            }
        })
        .collect()
}

/// `A(t) = b(-t)v(-t)²`, `B(t) = a(-t)v(-t)²`.
pub fn branching_closed_form(bs: &Basics) -> (Series, Series) {
    let vm2 = bs.vm().pow(2);
    (&bs.b.negate_variable() * &vm2, &bs.a.negate_variable() * &vm2)
}

/// `D(t) = -a(t)b(-t) - a(-t)b(t)`.
pub fn determinant(bs: &Basics) -> Series {
    let x = &bs.a * &bs.b.negate_variable();
    let y = &bs.a.negate_variable() * &bs.b;
    -&(&x + &y)
}

/// `(A, B) = D^{-1}(-b(-t)c(t), -a(-t)c(t))`, the matrix route.
pub fn branching_matrix_route(bs: &Basics) -> (Series, Series) {
    let dinv = determinant(bs).reciprocal().expect("D has constant term -2");
    let a = -&(&(&bs.b.negate_variable() * &bs.c) * &dinv);
    let b = -&(&(&bs.a.negate_variable() * &bs.c) * &dinv);
    (a, b)
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("branching series routes disagree at t^{exponent}")]
pub struct RouteDisagreement {
    pub exponent: usize,
}

pub fn branching_series(order: usize) -> Result<(Series, Series), Box<dyn std::error::Error + Send + Sync>> {
    let bs = Basics::new(order)?;
    let (a1, b1) = branching_closed_form(&bs);
    let (a2, b2) = branching_matrix_route(&bs);
    if let Some(k) = a1.first_difference(&a2).or(b1.first_difference(&b2)) {
        return Err(Box::new(RouteDisagreement { exponent: k }));
    }
    Ok((a1, b1))
}

fn non_negative_integers(s: &Series) -> bool {
    s.coeffs().iter().all(|c| c.is_integer() && !c.is_negative())
}

pub fn branching_checks(order: usize) -> Vec<CheckResult> {
    let bs = match Basics::new(order) {
        Ok(b) => b,
        Err(e) => return vec![fail_on_error("branching", e)],
    };
    let (a, b) = branching_closed_form(&bs);
    let (ma, mb) = branching_matrix_route(&bs);
    let c2 = bs.c.substitute_power(2);
    let ratio = &bs.c * &c2.reciprocal().expect("unit constant");
    vec![
        Series::check_equal("A closed form = matrix route", &a, &ma),
        Series::check_equal("B closed form = matrix route", &b, &mb),
        Series::check_equal("c(t)/c(t^2) = v(-t)^2", &ratio, &bs.vm().pow(2)),
        Series::check_equal("sumeq A a + B b = c", &(&(&a * &bs.a) + &(&b * &bs.b)), &bs.c),
        Series::check_equal(
            "diffeq A(-t)a - B(-t)b = 0",
            &(&(&a.negate_variable() * &bs.a) - &(&b.negate_variable() * &bs.b)),
            &Series::zero(order),
        ),
        CheckResult::from_bool(
            "A, B constant terms 1",
            a.coeff(0).is_one() && b.coeff(0).is_one(),
            "constant term differs from 1",
        ),
        CheckResult::from_bool(
            "A, B coefficients are non-negative integers",
            non_negative_integers(&a) && non_negative_integers(&b),
            "negative or fractional multiplicity",
        ),
    ]
}

pub fn ramanujan_checks(order: usize) -> Vec<CheckResult> {
    let bs = match Basics::new(order) {
        Ok(b) => b,
        Err(e) => return vec![fail_on_error("ramanujan", e)],
    };
    let d = determinant(&bs);
    let t4 = |s: &Series| s.substitute_power(4);
    let watson_lhs = &(&bs.b * &t4(&bs.b)) + &(&bs.a * &t4(&bs.a)).shift(1);
    let phi2 = bs.phi.substitute_power(2);
    let den = &bs.phi.substitute_power(4).pow(2) * &bs.phi.pow(2);
    let watson_rhs = &phi2.pow(4) * &den.reciprocal().expect("unit constant");
    vec![
        Series::check_equal("D(t) = -c(t^2)", &d, &-&bs.c.substitute_power(2)),
        CheckResult::from_bool("D(t) constant term -2", d.coeff(0) == int(-2), "constant term differs"),
        CheckResult::from_bool("D(t) even", vanishes_on_parity(&d, 1), "odd exponent present"),
        Series::check_equal("watson b b(t^4) + t a a(t^4)", &watson_lhs, &watson_rhs),
        Series::check_equal("watson rhs = v(-t)^2", &watson_rhs, &bs.vm().pow(2)),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Omega {
    Zero,
    Two,
}

/// `t^e gr1(t²) gr2(t²)` for a pair of coset characters: `e = 2(h1 + h2)`,
/// less `1/5` on `W(Ω2)` whose top is `G2` conformal weight `2/5`.
pub fn pair_term(
    l1: MinimalModelLabel,
    l2: MinimalModelLabel,
    omega: Omega,
    order: usize,
) -> Result<Series, SeriesError> {
    let c1: Character = minimal_character(l1, order);
    let c2: Character = minimal_character(l2, order);
    let mut e = (l1.h() + l2.h()) * int(2);
    if omega == Omega::Two {
        e -= rat(1, 5);
    }
    let k = integral_exponent(&e)?;
    Ok((&c1.gr.substitute_power(2) * &c2.gr.substitute_power(2)).shift(k))
}

fn sum_terms(
    terms: &[(MinimalModelLabel, MinimalModelLabel)],
    omega: Omega,
    order: usize,
) -> Result<Series, SeriesError> {
    let mut acc = Series::zero(order);
    for &(l1, l2) in terms {
        acc = &acc + &pair_term(l1, l2, omega, order)?;
    }
    Ok(acc)
}

/// The six decomposition identities, in character form and in the
/// `v±`, `[vb]±`, `[va]±` form, plus the Ramond closed forms.
pub fn decomposition_identities(order: usize) -> Vec<CheckResult> {
    let bs = match Basics::new(order) {
        Ok(b) => b,
        Err(e) => return vec![fail_on_error("decomposition", e)],
    };
    let (a, b) = branching_closed_form(&bs);
    let (ae, ao, be, bo) = (a.even_part(), a.odd_part(), b.even_part(), b.odd_part());
    let (i11, i13, i12) = (ml(3, 4, 1, 1), ml(3, 4, 1, 3), ml(3, 4, 1, 2));
    let (t11, t12, t13, t14) = (ml(4, 5, 1, 1), ml(4, 5, 1, 2), ml(4, 5, 1, 3), ml(4, 5, 1, 4));
    let (t21, t22) = (ml(4, 5, 2, 1), ml(4, 5, 2, 2));
    let cases: Vec<(&str, &Series, Vec<(MinimalModelLabel, MinimalModelLabel)>, Omega)> = vec![
        ("V0 Omega0 characters", &ae, vec![(i11, t11), (i13, t14)], Omega::Zero),
        ("V1 Omega0 characters", &ao, vec![(i11, t14), (i13, t11)], Omega::Zero),
        ("V0 Omega2 characters", &bo, vec![(i11, t13), (i13, t12)], Omega::Two),
        ("V1 Omega2 characters", &be, vec![(i11, t12), (i13, t13)], Omega::Two),
        ("V2/V3 Omega0 characters", &ao, vec![(i12, t21)], Omega::Zero),
        ("V2/V3 Omega2 characters", &be, vec![(i12, t22)], Omega::Two),
    ];
    let mut out = Vec::new();
    let mut rhs_total = Series::zero(order);
    for (name, lhs, terms, omega) in cases {
        match sum_terms(&terms, omega, order) {
            Ok(rhs) => {
                if !name.starts_with("V2") {
                    rhs_total = &rhs_total + &rhs;
                }
                out.push(Series::check_equal(name, lhs, &rhs));
            }
            Err(e) => out.push(fail_on_error(name, e)),
        }
    }
    out.push(Series::check_equal("sum of the four NS identities = A + B", &rhs_total, &(&a + &b)));

    let (vp, vmi) = (bs.v_plus(), bs.v_minus());
    let (vbp, vbm, vap, vam) = (bs.vb(true), bs.vb(false), bs.va(true), bs.va(false));
    let mix = |x: &Series, y: &Series, z: &Series, w: &Series| &(x * y) + &(z * w);
    out.push(Series::check_equal("V0 Omega0 v-form", &ae, &mix(&vp, &vbp, &vmi, &vbm)));
    out.push(Series::check_equal("V1 Omega0 v-form", &ao, &mix(&vp, &vbm, &vmi, &vbp)));
    out.push(Series::check_equal("V0 Omega2 v-form", &bo, &mix(&vp, &vam, &vmi, &vap)));
    out.push(Series::check_equal("V1 Omega2 v-form", &be, &mix(&vp, &vap, &vmi, &vam)));
    let c2h = half(&bs.c.substitute_power(2));
    out.push(Series::check_equal(
        "V2/V3 Omega0 closed form t c(t^2) a(t^4)/2",
        &ao,
        &(&c2h * &bs.a.substitute_power(4)).shift(1),
    ));
    out.push(Series::check_equal("V2/V3 Omega2 closed form c(t^2) b(t^4)/2", &be, &(&c2h * &bs.b.substitute_power(4))));
    out
}

/// Branching against the principal graded dimensions: the simplified form
/// in `t` and the full form in `u` with `t = u³`.
pub fn master_branching_checks(order: usize) -> Vec<CheckResult> {
    let bs = match Basics::new(order) {
        Ok(b) => b,
        Err(e) => return vec![fail_on_error("master branching", e)],
    };
    let (a, b) = branching_closed_form(&bs);
    let lhs = &bs.phi.substitute_power(2).pow(2) * &bs.phi.pow(2).reciprocal().expect("unit");
    let even_odd = &(&a.even_part() * &bs.a) + &(&b.odd_part() * &bs.b);
    let odd_even = &(&a.odd_part() * &bs.a) + &(&b.even_part() * &bs.b);
    let mut out = vec![
        Series::check_equal("simplified V0: A_even a + B_odd b", &even_odd, &lhs),
        Series::check_equal("simplified V1/V2/V3: A_odd a + B_even b", &odd_even, &lhs),
    ];
    let w0 = g2_principal_gr(G2Module::Omega0, order);
    let w2 = g2_principal_gr(G2Module::Omega2, order);
    match (w0, w2) {
        (Ok(w0), Ok(w2)) => {
            let pr = clifford_principal_gr(order);
            let u = |s: &Series| s.substitute_power(3);
            let v0 = &(&u(&a.even_part()) * &w0) + &(&u(&b.odd_part()) * &w2);
            let v1 = &(&u(&a.odd_part()) * &w0) + &(&u(&b.even_part()) * &w2);
            out.push(Series::check_equal("principal V0 = A_even W(O0) + B_odd W(O2)", &v0, &pr));
            out.push(Series::check_equal("principal V1,V2,V3 = A_odd W(O0) + B_even W(O2)", &v1, &pr));
        }
        (Err(e), _) | (_, Err(e)) => out.push(fail_on_error("principal branching", e)),
    }
    out
}

pub fn principal_checks(order: usize) -> Vec<CheckResult> {
    let pr = clifford_principal_gr(order);
    let two = pr.scale(&int(2));
    vec![
        Series::check_equal("NS principal product = 2 phi ratio", &ns_principal_direct(order), &two),
        Series::check_equal("Ramond principal product = 2 phi ratio", &ramond_principal_direct(order), &two),
        CheckResult::from_bool("principal gr constant term 1", pr.coeff(0).is_one(), "constant term differs"),
    ]
}

pub fn jacobi_abs_check(order: usize) -> Vec<CheckResult> {
    let (plus, minus, rhs) = jacobi_parts(order);
    let diff = &plus - &minus;
    // ch_hor(V1)(q²) = ch_hor(V2)(q²) in the variable x = q^{1/2} squared
    let ns = horizontal_gr(Sector::NeveuSchwarz, order);
    let r = horizontal_gr(Sector::Ramond, order);
    vec![
        Series::check_equal("jacobi abstruse identity", &diff, &rhs),
        CheckResult::from_bool(
            "jacobi difference has only odd exponents",
            vanishes_on_parity(&diff, 0),
            "even exponent",
        ),
        Series::check_equal("horizontal NS = prod (1+q^{2n+1})^8", &ns, &plus),
        Series::check_equal("horizontal Ramond shifted = 16 q prod(1+q^{2n})^8", &r.shift(1), &rhs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    const N: usize = 60;

    fn show(rs: &[CheckResult]) -> String {
        rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
    }

    #[test]
    fn suites_pass_at_small_order() {
        for rs in [
            jtpi_check(N),
            named_series_checks(N),
            character_form_checks(N),
            branching_checks(N),
            ramanujan_checks(N),
            decomposition_identities(N),
            master_branching_checks(N),
            principal_checks(N),
            jacobi_abs_check(N),
        ] {
            assert!(all_passed(&rs), "{}", show(&rs));
        }
    }

    #[test]
    fn order_zero() {
        assert!(all_passed(&jtpi_check(0)));
        assert!(all_passed(&character_form_checks(0)));
    }

    #[test]
    fn branching_matches_partition_oracle() {
        // signed partition counts of a(-t), b(-t) times (1 + t^{2m-1})^2, expanded independently
        let want_a = [1, 1, 0, 2, 3, 3, 4, 6, 9, 10, 12, 16, 22];
        let want_b = [1, 2, 2, 3, 4, 6, 8, 9, 13, 18, 22, 27, 35];
        let (a, b) = branching_series(12).unwrap();
        for k in 0..=12 {
            assert_eq!(crate::scalars::to_i64(&a.coeff(k)), Some(want_a[k]));
            assert_eq!(crate::scalars::to_i64(&b.coeff(k)), Some(want_b[k]));
        }
    }

    #[test]
    fn broken_identity_is_reported() {
        let bs = Basics::new(20).unwrap();
        let r = Series::check_equal("bogus", &bs.a, &bs.b);
        assert!(!r.passed());
        assert_eq!(r.detail.first_mismatch.as_ref().unwrap().exponent, 1);
    }
}

//! Text forms of states and vectors.
//!
//! Canonical: `a1*(-3/2) a4(-1/2) |0>`, `a4*(0) |0'>`.
//! Shorthand: `𝟏`, `𝟏′`, `11*4` (all modes −½, three or more factors), `14*` (two
//! factors at −3/2 and −½), otherwise explicit factors such as `1*(-3/2)𝟏`.

use num_traits::{One, Signed};

use super::*;
use crate::scalars::{parse_rational, Rational};

pub const NS_VACUUM: &str = "𝟏";
pub const RAMOND_VACUUM: &str = "𝟏′";

fn mode_text(mode2: i32) -> String {
    if mode2 % 2 == 0 {
        (mode2 / 2).to_string()
    } else {
        format!("{mode2}/2")
    }
}

fn field_text(g: &GeneratorLabel) -> String {
    format!("{}{}", g.flavor, if g.starred { "*" } else { "" })
}

pub fn render_label(g: &GeneratorLabel) -> String {
    format!("a{}({})", field_text(g), mode_text(g.mode2))
}

pub fn render_state(s: &FockState) -> String {
    let vac = match s.sector {
        Sector::NS => "|0>",
        Sector::Ramond => "|0'>",
    };
    let mut parts: Vec<String> = s.factors.iter().map(render_label).collect();
    parts.push(vac.to_string());
    parts.join(" ")
}

pub fn shorthand_state(s: &FockState) -> String {
    let f = &s.factors;
    if s.sector == Sector::NS {
        if f.is_empty() {
            return NS_VACUUM.to_string();
        }
        if f.len() >= 3 && f.iter().all(|g| g.mode2 == -1) {
            return f.iter().map(field_text).collect();
        }
        if f.len() == 2 && f[0].mode2 == -3 && f[1].mode2 == -1 {
            return f.iter().map(field_text).collect();
        }
    }
    let vac = match s.sector {
        Sector::NS => NS_VACUUM,
        Sector::Ramond => RAMOND_VACUUM,
    };
    let body: String = f.iter().map(|g| format!("{}({})", field_text(g), mode_text(g.mode2))).collect();
    format!("{body}{vac}")
}

fn render_terms(v: &FockVector, state: impl Fn(&FockState) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (s, c)) in v.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}·"));
        }
        out.push_str(&state(s));
    }
    out
}

pub fn render_vector(v: &FockVector) -> String {
    render_terms(v, render_state)
}

pub fn shorthand_vector(v: &FockVector) -> String {
    render_terms(v, shorthand_state)
}

fn perr(s: &str) -> FockError {
    FockError::Parse(s.to_string())
}

/// Parses `i`, `i*`, `i(m)` or `i*(m)` starting at `chars[pos]`.
fn parse_factor(chars: &[char], pos: &mut usize, text: &str) -> Result<(u8, bool, Option<i32>), FockError> {
    let d = chars.get(*pos).and_then(|c| c.to_digit(10)).ok_or_else(|| perr(text))?;
    if !(1..=4).contains(&d) {
        return Err(perr(text));
    }
    *pos += 1;
    let starred = chars.get(*pos) == Some(&'*');
    if starred {
        *pos += 1;
    }
    let mut mode2 = None;
    if chars.get(*pos) == Some(&'(') {
        let close = chars[*pos..].iter().position(|&c| c == ')').ok_or_else(|| perr(text))? + *pos;
        let inner: String = chars[*pos + 1..close].iter().collect();
        let m = parse_rational(&inner.replace('−', "-")).map_err(|_| perr(text))?;
        let m2 = m * int(2);
        if !m2.is_integer() {
            return Err(perr(text));
        }
        mode2 = Some(i32::try_from(m2.to_integer()).map_err(|_| perr(text))?);
        *pos = close + 1;
    }
    Ok((d as u8, starred, mode2))
}

/// Parses one state in canonical or shorthand form, returning its sign relative to
/// the canonical ordering, or `None` when the product vanishes.
pub fn parse_state(text: &str) -> Result<Option<(i64, FockState)>, FockError> {
    let t = text.trim();
    if t.contains('|') {
        return parse_canonical_state(t);
    }
    let (body, sector, explicit) = if let Some(b) = t.strip_suffix(RAMOND_VACUUM).or_else(|| t.strip_suffix("1'")) {
        (b, Sector::Ramond, true)
    } else if let Some(b) = t.strip_suffix(NS_VACUUM) {
        (b, Sector::NS, true)
    } else {
        (t, Sector::NS, false)
    };
    let chars: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut raw = Vec::new();
    while pos < chars.len() {
        raw.push(parse_factor(&chars, &mut pos, text)?);
    }
    let labels: Vec<GeneratorLabel> = if explicit {
        raw.iter()
            .map(|(f, s, m)| m.map(|m| GeneratorLabel::new(*f, *s, m)).ok_or_else(|| perr(text)))
            .collect::<Result<_, _>>()?
    } else {
        if raw.iter().any(|r| r.2.is_some()) || raw.is_empty() || raw.len() == 1 {
            return Err(perr(text));
        }
        raw.iter()
            .enumerate()
            .map(|(i, (f, s, _))| {
                let m2 = if raw.len() == 2 && i == 0 { -3 } else { -1 };
                GeneratorLabel::new(*f, *s, m2)
            })
            .collect()
    };
    build(sector, &labels, text)
}

fn build(sector: Sector, labels: &[GeneratorLabel], text: &str) -> Result<Option<(i64, FockState)>, FockError> {
    if labels.iter().any(|g| g.sector() != sector || !g.is_creator()) {
        return Err(perr(text));
    }
    Ok(FockState::from_factors(sector, labels))
}

fn parse_canonical_state(t: &str) -> Result<Option<(i64, FockState)>, FockError> {
    let mut tokens: Vec<&str> = t.split_whitespace().collect();
    let sector = match tokens.pop() {
        Some("|0>") => Sector::NS,
        Some("|0'>") => Sector::Ramond,
        _ => return Err(perr(t)),
    };
    let mut labels = Vec::new();
    for tok in tokens {
        let chars: Vec<char> = tok.strip_prefix('a').ok_or_else(|| perr(t))?.chars().collect();
        let mut pos = 0;
        let (f, s, m) = parse_factor(&chars, &mut pos, t)?;
        if pos != chars.len() {
            return Err(perr(t));
        }
        labels.push(GeneratorLabel::new(f, s, m.ok_or_else(|| perr(t))?));
    }
    build(sector, &labels, t)
}

/// Splits at top-level `+` and `-`, keeping the sign with each term.
fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut neg = false;
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            '+' | '-' | '−' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push((neg, cur.trim().to_string()));
                }
                cur.clear();
                neg = c != '+';
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

/// Parses `c·state ± …` in either notation. A term may carry a rational coefficient
/// followed by `·`.
pub fn parse_vector(text: &str) -> Result<FockVector, FockError> {
    let t = text.trim();
    let terms = split_terms(t);
    let mut out: Option<FockVector> = None;
    for (neg, term) in terms {
        let (coeff, state) = match term.split_once('·') {
            Some((c, s)) => (parse_rational(c).map_err(|_| perr(text))?, s.trim().to_string()),
            None => (Rational::one(), term),
        };
        if state == "0" {
            continue;
        }
        let coeff = if neg { -coeff } else { coeff };
        let parsed = parse_state(&state)?;
        let sector = match &parsed {
            Some((_, s)) => s.sector,
            None => {
                if state.contains('′') || state.contains("|0'>") || state.ends_with("1'") {
                    Sector::Ramond
                } else {
                    Sector::NS
                }
            }
        };
        let v = out.get_or_insert_with(|| FockVector::zero(sector));
        if v.sector != sector {
            return Err(perr(text));
        }
        if let Some((sign, s)) = parsed {
            v.add_term(s, coeff * int(sign));
        }
    }
    out.ok_or_else(|| perr(text)).or_else(|e| if t == "0" { Ok(FockVector::zero(Sector::NS)) } else { Err(e) })
}

/// Parses a vector and checks it has no zero coefficient from a vanishing state.
pub fn parse_vector_in(sector: Sector, text: &str) -> Result<FockVector, FockError> {
    let v = parse_vector(text)?;
    if v.is_zero() {
        return Ok(FockVector::zero(sector));
    }
    if v.sector != sector {
        return Err(FockError::Parse(text.to_string()));
    }
    Ok(v)
}

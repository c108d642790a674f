//! Batch front end for the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use branching_core::fock::{shorthand_vector, Module};
use branching_core::hwv::{generate_table, solve_hwv, table_ids, Cell, G2Class};
use branching_core::report::all_passed;
use branching_core::scalars::{parse_rational, Rational};
use branching_core::{suites, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "branching", version, about = "Exact checks for the D4 to G2 branching of level-one modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Truncation order of q-series (at least 16).
    #[arg(long, global = true, env = "BRANCHING_ORDER", default_value_t = 200, value_parser = parse_order)]
    order: usize,
    /// Largest basis depth for operator identities, e.g. 3/2 (at most 3).
    #[arg(long, global = true, env = "BRANCHING_MAX_DEPTH", default_value = "2", value_parser = parse_max_depth)]
    max_depth: Rational,
    #[arg(long, global = true, env = "BRANCHING_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product, sum and Jacobi identities.
    Identities,
    /// Closed forms of the minimal-model characters.
    Characters,
    /// Branching series and module decompositions.
    Branching,
    /// Triality and the identification tables.
    FiniteAlgebra,
    /// Conformal vectors, Virasoro brackets, Ramond shifts and the twisted span.
    Conformal,
    /// Highest weight vectors, either the labeled list or one search cell.
    Hwv {
        #[arg(long, value_parser = parse_module)]
        module: Option<Module>,
        #[arg(long, value_parser = parse_depth)]
        depth: Option<Rational>,
        /// Top G2 weight: 0 or 2.
        #[arg(long, value_parser = parse_class)]
        class: Option<G2Class>,
    },
    /// Regenerated operator tables compared with their references.
    Tables {
        #[arg(long, value_parser = parse_table_id)]
        id: Option<String>,
    },
    /// Basis counts by depth against the horizontal products.
    GradedDims,
    /// Every suite above.
    All,
}

fn parse_order(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 16 {
        return Err("order must be at least 16".into());
    }
    Ok(n)
}

fn parse_depth(s: &str) -> Result<Rational, String> {
    let d = parse_rational(s).map_err(|e| e.to_string())?;
    let twice = &d * Rational::from_integer(2.into());
    if !twice.is_integer() || d < Rational::from_integer(0.into()) {
        return Err("depth must be a non-negative multiple of 1/2".into());
    }
    Ok(d)
}

fn parse_max_depth(s: &str) -> Result<Rational, String> {
    let d = parse_depth(s)?;
    if d > Rational::from_integer(3.into()) {
        return Err("max depth is at most 3".into());
    }
    Ok(d)
}

fn parse_module(s: &str) -> Result<Module, String> {
    Module::all()
        .into_iter()
        .find(|m| m.to_string().eq_ignore_ascii_case(s))
        .ok_or_else(|| format!("unknown module {s}"))
}

fn parse_class(s: &str) -> Result<G2Class, String> {
    s.parse().map_err(|e: branching_core::hwv::HwvError| e.to_string())
}

fn parse_table_id(s: &str) -> Result<String, String> {
    if table_ids().contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown table; choose from {}", table_ids().join(", ")))
    }
}

/// Solutions in one cell, or in both weight classes when none is given.
fn hwv_cells(module: Module, depth: &Rational, class: Option<G2Class>) -> Vec<CheckResult> {
    let classes = class.map_or_else(|| G2Class::all().to_vec(), |c| vec![c]);
    let mut out = Vec::new();
    for class in classes {
        let cell = Cell::new(module, depth.clone(), class);
        match solve_hwv(&cell) {
            Ok(sols) if sols.is_empty() => {
                out.push(CheckResult::pass(format!("{cell}")).with_message("no highest weight vectors"))
            }
            Ok(sols) => {
                for s in sols {
                    let mut r = CheckResult::pass(format!("{cell}")).with_message(shorthand_vector(&s.vector));
                    r.detail.eigenvalues = Some(vec![s.h_half.to_string(), s.h_seven_tenths.to_string()]);
                    out.push(r);
                }
            }
            Err(e) => out.push(CheckResult::fail(format!("{cell}"), e.to_string())),
        }
    }
    out
}

fn run(command: &Command, c: &Common) -> (Vec<CheckResult>, Option<String>) {
    match command {
        Command::Identities => (suites::identities(c.order), None),
        Command::Characters => (suites::characters(c.order), None),
        Command::Branching => (suites::branching(c.order), None),
        Command::FiniteAlgebra => (suites::finite_algebra(), None),
        Command::Conformal => (suites::conformal(&c.max_depth), None),
        Command::GradedDims => (suites::graded_dims(8), None),
        Command::Hwv { module: Some(m), depth: Some(d), class } => (hwv_cells(*m, d, *class), None),
        Command::Hwv { .. } => (suites::hwv(), None),
        Command::Tables { id: Some(id) } => {
            let checks: Vec<CheckResult> =
                suites::tables().into_iter().filter(|r| r.check == format!("table {id}")).collect();
            let rendered = generate_table(id).ok().map(|t| match c.format {
                Format::Markdown => t.render_markdown(),
                _ => t.render_text(),
            });
            (checks, rendered)
        }
        Command::Tables { id: None } => (suites::tables(), None),
        Command::All => {
            let mut out = suites::identities(c.order);
            out.extend(suites::characters(c.order));
            out.extend(suites::branching(c.order));
            out.extend(suites::finite_algebra());
            out.extend(suites::conformal(&c.max_depth));
            out.extend(suites::hwv());
            out.extend(suites::tables());
            out.extend(suites::graded_dims(8));
            (out, None)
        }
    }
}

fn emit(results: &[CheckResult], extra: Option<&str>, format: Format) -> String {
    let failed = results.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Json => {
            let body = serde_json::to_string_pretty(results).expect("reports serialize");
            match extra {
                Some(t) => format!(
                    "{{\"table\": {}, \"checks\": {body}}}\n",
                    serde_json::to_string(t).expect("strings serialize")
                ),
                None => format!("{body}\n"),
            }
        }
        Format::Text => {
            let mut s = extra.map(|t| format!("{t}\n")).unwrap_or_default();
            for r in results {
                s.push_str(&format!("{r}\n"));
            }
            s.push_str(&format!("{} checks, {failed} failed\n", results.len()));
            s
        }
        Format::Markdown => {
            let mut s = extra.map(|t| format!("{t}\n")).unwrap_or_default();
            s.push_str("| check | status | detail |\n|---|---|---|\n");
            for r in results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let full = r.to_string();
                let detail = full.split_once(&format!(": {status}")).map_or("", |(_, d)| d.trim());
                s.push_str(&format!(
                    "| {} | {status} | {} |\n",
                    r.check.replace('|', "\\|"),
                    detail.replace('|', "\\|")
                ));
            }
            s.push_str(&format!("\n{} checks, {failed} failed\n", results.len()));
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Hwv { module, depth, .. } = &cli.command {
        if module.is_some() != depth.is_some() {
            eprintln!("error: --module and --depth go together");
            return ExitCode::from(2);
        }
    }
    let (results, extra) = run(&cli.command, &cli.common);
    let text = emit(&results, extra.as_deref(), cli.common.format);
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if all_passed(&results) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_validation() {
        assert!(parse_order("15").is_err());
        assert_eq!(parse_order("16"), Ok(16));
        assert!(parse_max_depth("7/2").is_err());
        assert!(parse_max_depth("1/3").is_err());
        assert!(parse_max_depth("3/2").is_ok());
        assert_eq!(parse_module("v1"), Ok(Module::V1));
        assert!(parse_table_id("nope").is_err());
    }

    #[test]
    fn empty_report() {
        assert_eq!(emit(&[], None, Format::Text), "0 checks, 0 failed\n");
        assert_eq!(emit(&[], None, Format::Json), "[]\n");
    }

    #[test]
    fn json_schema() {
        let r = CheckResult::fail("x", "bad");
        let v: serde_json::Value = serde_json::from_str(&emit(&[r], None, Format::Json)).unwrap();
        assert_eq!(v[0]["check"], "x");
        assert_eq!(v[0]["status"], "FAIL");
        assert_eq!(v[0]["detail"]["message"], "bad");
    }
}

//! Command-line front end for the `eaqec` library.
//!
//! [`Cli`] is the parsed request and [`run`] executes it, returning the
//! report text and whether any verification failed.

pub mod codefile;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use eaqec::codes::{dual, eaqec_identities, min_distance, CodeError, EaqecCode};
use eaqec::enumerator::{
    weight_enumerator, Budget, EnumeratorError, IdentitySides, WeightEnumerator, DEFAULT_BUDGET_LOG2,
};
use eaqec::lpbound::{
    apply_overrides, lp_feasible_general_with, lp_feasible_with, lp_upper_bound_general, lp_upper_bound_with,
    FeasibilityRecord, LpOptions, DEFAULT_NODE_LIMIT,
};
use eaqec::registry::{extend_code, registry, CodeRegistryEntry, ExtendMode, Provenance};
use eaqec::table::build_table_with;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub use codefile::{parse_code_file, CodeFile, ParseError};

/// Environment variable holding the default enumeration budget.
pub const BUDGET_ENV: &str = "EAQEC_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Lengthen,
    Trade,
}

impl From<Mode> for ExtendMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Lengthen => ExtendMode::Lengthen,
            Mode::Trade => ExtendMode::Trade,
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "eaqec",
    version,
    about = "Entanglement-assisted quantum error-correcting codes"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Enumeration budget as log2 of the group size.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET_LOG2, global = true)]
    pub budget: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the dual code.
    Dual { path: PathBuf },
    /// Weight enumerators of the code's groups.
    Wenum { path: PathBuf },
    /// Minimum distance by enumeration.
    Distance { path: PathBuf },
    /// Check both code-level MacWilliams identities.
    VerifyMw { path: PathBuf },
    /// Linear-programming upper bound, or a single feasibility verdict with `--d`.
    LpBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Entanglement; defaults to `n - k`.
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        lp: LpArgs,
    },
    /// Bounds grid for maximal-entanglement codes.
    Table {
        #[arg(long, default_value_t = 15)]
        nmax: usize,
        #[command(flatten)]
        lp: LpArgs,
    },
    /// List registered codes.
    Registry,
    /// Apply an extension rule to `[[n,k,d;c]]`.
    Extend {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

#[derive(Debug, Clone, Copy, clap::Args)]
pub struct LpArgs {
    /// Require integral enumerator values.
    #[arg(long)]
    pub branch_and_bound: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: usize,
}

impl From<LpArgs> for LpOptions {
    fn from(a: LpArgs) -> Self {
        LpOptions {
            branch_and_bound: a.branch_and_bound,
            node_limit: a.node_limit,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Code(#[from] CodeError),
    #[error("{0}")]
    Enumeration(#[from] EnumeratorError),
    #[error("invalid arguments: {0}")]
    Argument(String),
}

/// Output of one command. `success` is false when a verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    pub success: bool,
}

impl Report {
    fn ok(output: String) -> Self {
        Self { output, success: true }
    }

    /// 0 on success, 1 on a failed verification.
    pub fn exit_code(&self) -> u8 {
        if self.success {
            0
        } else {
            1
        }
    }
}

/// Exit status for errors raised before or during dispatch.
pub const ERROR_EXIT: u8 = 2;

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let budget = Budget::new(cli.budget);
    let fmt = cli.format;
    match &cli.command {
        Command::Dual { path } => Ok(Report::ok(dual_report(&load(path)?, fmt))),
        Command::Wenum { path } => wenum_report(&load(path)?, budget, fmt).map(Report::ok),
        Command::Distance { path } => distance_report(&load(path)?, budget, fmt).map(Report::ok),
        Command::VerifyMw { path } => verify_report(&load(path)?, budget, fmt),
        Command::LpBound { n, k, c, d, lp } => lp_report(*n, *k, *c, *d, &(*lp).into(), fmt).map(Report::ok),
        Command::Table { nmax, lp } => table_report(*nmax, &(*lp).into(), fmt).map(Report::ok),
        Command::Registry => Ok(Report::ok(registry_report(fmt))),
        Command::Extend { n, k, d, c, mode } => extend_report(*n, *k, *d, *c, *mode, fmt).map(Report::ok),
    }
}

pub fn load(path: &PathBuf) -> Result<EaqecCode, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let file = parse_code_file(&bytes).map_err(|source| CliError::Parse {
        path: path.clone(),
        source,
    })?;
    Ok(file.to_code()?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn params(code: &EaqecCode) -> String {
    format!("[[{},{};{}]]", code.n(), code.k(), code.c())
}

fn dual_report(code: &EaqecCode, fmt: Format) -> String {
    let d = dual(code);
    let file = CodeFile::from_code(&d);
    match fmt {
        Format::Json => to_json(&file),
        Format::Text => format!("# dual of {}: {}\n{}", params(code), params(&d), file.to_text()),
    }
}

fn wenum_report(code: &EaqecCode, budget: Budget, fmt: Format) -> Result<String, CliError> {
    let groups = [
        ("simplified_stabilizer", code.simplified_stabilizer()),
        ("isotropic", code.isotropic_group()),
        ("logical_isotropic", code.logical_isotropic_group()),
        ("full", code.full_group()),
    ];
    let mut rows: Vec<(&str, WeightEnumerator)> = Vec::new();
    for (name, g) in groups {
        rows.push((name, weight_enumerator(&g, budget)?));
    }
    Ok(match fmt {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = rows
                .iter()
                .map(|(name, w)| (name.to_string(), serde_json::to_value(w).expect("serializable")))
                .collect();
            to_json(&map)
        }
        Format::Text => {
            let mut out = String::new();
            for (name, w) in &rows {
                let _ = writeln!(out, "{name:<22} {w}");
            }
            out
        }
    })
}

fn distance_report(code: &EaqecCode, budget: Budget, fmt: Format) -> Result<String, CliError> {
    let d = min_distance(code, budget)?;
    Ok(match fmt {
        Format::Json => to_json(&json!({"n": code.n(), "k": code.k(), "c": code.c(), "distance": d})),
        Format::Text => format!("[[{},{},{d};{}]]\n", code.n(), code.k(), code.c()),
    })
}

fn verify_report(code: &EaqecCode, budget: Budget, fmt: Format) -> Result<Report, CliError> {
    let ids = eaqec_identities(code, budget)?;
    let success = ids.holds();
    let output = match fmt {
        Format::Json => to_json(&json!({
            "logical_isotropic": sides_json(&ids.logical_isotropic),
            "isotropic": sides_json(&ids.isotropic),
            "holds": success,
        })),
        Format::Text => {
            let mut out = String::new();
            for (name, sides) in [
                ("W(L x S_I) vs transform of W(S_S x S_I)", &ids.logical_isotropic),
                ("W(S_I) vs transform of W(L x S_S x S_I)", &ids.isotropic),
            ] {
                let verdict = if sides.holds() { "ok" } else { "MISMATCH" };
                let _ = writeln!(out, "{name}: {verdict}");
                let _ = writeln!(out, "  lhs {}", sides.lhs);
                let _ = writeln!(out, "  rhs {}", sides.rhs);
            }
            out
        }
    };
    Ok(Report { output, success })
}

fn sides_json(s: &IdentitySides) -> serde_json::Value {
    json!({"lhs": s.lhs, "rhs": s.rhs, "holds": s.holds()})
}

fn lp_report(
    n: usize,
    k: usize,
    c: Option<usize>,
    d: Option<usize>,
    opts: &LpOptions,
    fmt: Format,
) -> Result<String, CliError> {
    if n == 0 || k > n {
        return Err(CliError::Argument(format!(
            "need 0 <= k <= n and n >= 1, got n={n} k={k}"
        )));
    }
    let c = c.unwrap_or(n - k);
    if c + k > n {
        return Err(CliError::Argument(format!("need c <= n - k, got n={n} k={k} c={c}")));
    }
    let maximal = c + k == n;
    if maximal && (k == 0 || k == n) {
        return Err(CliError::Argument(format!(
            "maximal entanglement needs 1 <= k < n, got n={n} k={k}"
        )));
    }
    if let Some(d) = d {
        if d == 0 || d > n {
            return Err(CliError::Argument(format!("need 1 <= d <= n, got d={d}")));
        }
        let feasible = if maximal {
            lp_feasible_with(n, k, d, opts)
        } else {
            lp_feasible_general_with(n, k, c, d, opts)
        };
        let record = FeasibilityRecord {
            n,
            k,
            c,
            d_trial: d,
            feasible,
        };
        return Ok(match fmt {
            Format::Json => to_json(&record),
            Format::Text => format!(
                "[[{n},{k},{d};{c}]] {}\n",
                if feasible { "feasible" } else { "infeasible" }
            ),
        });
    }
    let scan = if maximal {
        lp_upper_bound_with(n, k, opts)
    } else {
        lp_upper_bound_general(n, k, c, opts)
    };
    let bound = if maximal {
        apply_overrides(n, k, scan.bound)
    } else {
        scan.bound.min(n)
    };
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "n": n, "k": k, "c": c, "upper_bound": bound, "lp_bound": scan.bound, "certified": scan.certified,
        })),
        Format::Text => format!("{bound}\n"),
    })
}

fn table_report(n_max: usize, opts: &LpOptions, fmt: Format) -> Result<String, CliError> {
    if !(2..=64).contains(&n_max) {
        return Err(CliError::Argument(format!("--nmax must be in 2..=64, got {n_max}")));
    }
    let table = build_table_with(n_max, opts);
    Ok(match fmt {
        Format::Json => {
            let cells: Vec<_> = table.cells().collect();
            to_json(&json!({"n_max": n_max, "cells": cells}))
        }
        Format::Text => format!("{}\n{}", table.render_text(), table.render_provenance()),
    })
}

fn registry_report(fmt: Format) -> String {
    let entries = registry();
    match fmt {
        Format::Json => to_json(&entries),
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                let gens = if e.generators.is_some() { " (generators)" } else { "" };
                let _ = writeln!(out, "{:<16} {}{gens}", e.label(), e.source);
            }
            out
        }
    }
}

fn extend_report(n: usize, k: usize, d: usize, c: usize, mode: Mode, fmt: Format) -> Result<String, CliError> {
    if n == 0 || k + c > n || d > n {
        return Err(CliError::Argument(format!("invalid parameters [[{n},{k},{d};{c}]]")));
    }
    let seed = CodeRegistryEntry {
        n,
        k,
        c,
        d,
        source: Provenance::ExtensionRule,
        generators: None,
    };
    let out = extend_code(&seed, mode.into())?;
    Ok(match fmt {
        Format::Json => to_json(&out),
        Format::Text => format!("{} -> {}\n", seed.label(), out.label()),
    })
}

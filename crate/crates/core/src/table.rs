//! Assembly of the upper/lower bound grid for maximal-entanglement codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::lpbound::{apply_overrides, lp_upper_bound_with, LpOptions};
use crate::registry::{registry, CodeRegistryEntry, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperSource {
    /// Smallest infeasible trial distance minus one.
    LinearProgram,
    /// Capped by an even-length nonexistence fact.
    Override,
    /// No trial distance was infeasible; the bound is the length `n`.
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LowerSource {
    /// A registered code with these exact parameters.
    Registry { provenance: Provenance },
    /// Obtained by lengthening and/or trading from a registered code at `(n, k)`.
    Extension {
        seed_n: usize,
        seed_k: usize,
        provenance: Provenance,
    },
    /// Nothing registered; every code has distance at least one.
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsCell {
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
    /// Raw scan result before overrides.
    pub lp_bound: usize,
}

impl BoundsCell {
    /// `"a"` when the bounds meet, `"a-b"` otherwise.
    pub fn display(&self) -> String {
        if self.lower == self.upper {
            self.lower.to_string()
        } else {
            format!("{}-{}", self.lower, self.upper)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsTable {
    pub n_max: usize,
    cells: BTreeMap<(usize, usize), BoundsCell>,
}

impl BoundsTable {
    pub fn get(&self, n: usize, k: usize) -> Option<&BoundsCell> {
        self.cells.get(&(n, k))
    }

    pub fn cells(&self) -> impl Iterator<Item = &BoundsCell> {
        self.cells.values()
    }

    /// Text grid in blocks of seven `k` columns.
    pub fn render_text(&self) -> String {
        const BLOCK: usize = 7;
        let mut out = String::new();
        let k_max = self.n_max.saturating_sub(1);
        let mut first = 1;
        while first <= k_max {
            let last = (first + BLOCK - 1).min(k_max);
            if first > 1 {
                out.push('\n');
            }
            let mut header = format!("{:<6}", "n\\k");
            for k in first..=last {
                let _ = write!(header, "{k:>7}");
            }
            out.push_str(header.trim_end());
            out.push('\n');
            for n in (first + 1).max(2)..=self.n_max {
                let mut line = format!("{n:<6}");
                for k in first..=last {
                    let cell = self.get(n, k).map(|c| c.display()).unwrap_or_default();
                    let _ = write!(line, "{cell:>7}");
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            first = last + 1;
        }
        out
    }

    /// One line per cell with both provenances.
    pub fn render_provenance(&self) -> String {
        let mut out = String::new();
        for c in self.cells() {
            let lower = match c.lower_source {
                LowerSource::Registry { provenance } => provenance.to_string(),
                LowerSource::Extension {
                    seed_n,
                    seed_k,
                    provenance,
                } => {
                    format!("extension of ({seed_n},{seed_k}) {provenance}")
                }
                LowerSource::Trivial => "trivial".into(),
            };
            let upper = match c.upper_source {
                UpperSource::LinearProgram => "lp",
                UpperSource::Override => "override",
                UpperSource::Trivial => "trivial",
            };
            let _ = writeln!(
                out,
                "{:>2} {:>2} {:>5}  lower: {lower}; upper: {upper}",
                c.n,
                c.k,
                c.display()
            );
        }
        out
    }
}

fn provenance_rank(p: Provenance) -> u8 {
    match p {
        Provenance::ConstructionCitation(_) => 0,
        Provenance::ExtensionRule => 1,
        Provenance::PublishedTable => 2,
    }
}

fn direct_lower(entries: &[CodeRegistryEntry], n: usize, k: usize) -> Option<(usize, Provenance)> {
    entries
        .iter()
        .filter(|e| e.n == n && e.k == k && e.is_maximal_entanglement())
        .map(|e| (e.d, e.source))
        .min_by_key(|&(d, p)| (std::cmp::Reverse(d), provenance_rank(p)))
}

/// Lower bounds: best registered code at each cell, closed under
/// lengthening `(n, k) → (n+1, k)` and trading `(n, k) → (n, k-1)`.
/// Both rules keep `c = n - k`, so the closure stays on the grid.
fn lower_bounds(entries: &[CodeRegistryEntry], n_max: usize) -> BTreeMap<(usize, usize), (usize, LowerSource)> {
    let mut best: BTreeMap<(usize, usize), (usize, LowerSource)> = BTreeMap::new();
    for n in 2..=n_max {
        for k in (1..n).rev() {
            let mut cell = direct_lower(entries, n, k)
                .map(|(d, provenance)| (d, LowerSource::Registry { provenance }))
                .unwrap_or((1, LowerSource::Trivial));
            for from in [(n - 1, k), (n, k + 1)] {
                let Some(&(d, src)) = best.get(&from) else {
                    continue;
                };
                if d > cell.0 {
                    let source = match src {
                        LowerSource::Registry { provenance } => LowerSource::Extension {
                            seed_n: from.0,
                            seed_k: from.1,
                            provenance,
                        },
                        other => other,
                    };
                    cell = (d, source);
                }
            }
            best.insert((n, k), cell);
        }
    }
    best
}

pub fn build_table(n_max: usize) -> BoundsTable {
    build_table_with(n_max, &LpOptions::default())
}

pub fn build_table_with(n_max: usize, opts: &LpOptions) -> BoundsTable {
    let lower = lower_bounds(&registry(), n_max);
    let keys: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    let cells = keys
        .into_par_iter()
        .map(|(n, k)| {
            let scan = lp_upper_bound_with(n, k, opts);
            let upper = apply_overrides(n, k, scan.bound);
            let upper_source = if upper < scan.bound {
                UpperSource::Override
            } else if scan.certified {
                UpperSource::LinearProgram
            } else {
                UpperSource::Trivial
            };
            let (lo, lower_source) = lower[&(n, k)];
            let cell = BoundsCell {
                n,
                k,
                lower: lo,
                upper,
                lower_source,
                upper_source,
                lp_bound: scan.bound,
            };
            ((n, k), cell)
        })
        .collect();
    BoundsTable { n_max, cells }
}

//! Known codes and the two extension rules.
//!
//! Entries record claimed parameters with their provenance. Explicit
//! generators are stored only for families that can be written down
//! directly (entanglement-assisted repetition codes and the five-qubit code);
//! everything else is a parameter claim.

use std::fmt;

use serde::Serialize;

use crate::codes::{CodeError, EaqecCode};
use crate::pauli::{canonicalize, orthogonal_group, PauliOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Entanglement-assisted repetition codes.
    EaRepetition,
    FiveQubit,
    /// Built from a classical quaternary code.
    ClassicalQuaternary,
    Circulant,
    /// Converted from a standard stabilizer code.
    StabilizerConversion,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::EaRepetition => "ea-repetition",
            Construction::FiveQubit => "five-qubit",
            Construction::ClassicalQuaternary => "classical-quaternary",
            Construction::Circulant => "circulant",
            Construction::StabilizerConversion => "stabilizer-conversion",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::PublishedTable => f.write_str("published-table"),
            Provenance::ExtensionRule => f.write_str("extension-rule"),
            Provenance::ConstructionCitation(c) => f.write_str(c.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "construction")]
pub enum Provenance {
    /// Lower endpoint of a published bounds-table cell.
    PublishedTable,
    ConstructionCitation(Construction),
    ExtensionRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeRegistryEntry {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub d: usize,
    pub source: Provenance,
    /// Generators of the simplified stabilizer group, when known explicitly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<PauliOperator>>,
}

impl CodeRegistryEntry {
    fn claim(n: usize, k: usize, d: usize, c: usize, source: Provenance) -> Self {
        Self {
            n,
            k,
            c,
            d,
            source,
            generators: None,
        }
    }

    pub fn is_maximal_entanglement(&self) -> bool {
        self.c + self.k == self.n
    }

    /// Construct the code from its stored generators, if any.
    pub fn build(&self) -> Option<Result<EaqecCode, CodeError>> {
        self.generators
            .as_ref()
            .map(|g| EaqecCode::from_generators(self.n, self.k, g))
    }

    pub fn label(&self) -> String {
        format!("[[{},{},{};{}]]", self.n, self.k, self.d, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtendMode {
    /// `[[n,k,d;c]] → [[n+1,k,d;c+1]]`
    Lengthen,
    /// `[[n,k,d;c]] → [[n,k-1,≥d;c+1]]`
    Trade,
}

pub fn extend_code(entry: &CodeRegistryEntry, mode: ExtendMode) -> Result<CodeRegistryEntry, CodeError> {
    let (n, k, c) = match mode {
        ExtendMode::Lengthen => {
            if entry.c >= entry.n {
                return Err(CodeError::Argument(format!("cannot lengthen {}: c = n", entry.label())));
            }
            (entry.n + 1, entry.k, entry.c + 1)
        }
        ExtendMode::Trade => {
            if entry.k == 0 {
                return Err(CodeError::Argument(format!("cannot trade {}: k = 0", entry.label())));
            }
            (entry.n, entry.k - 1, entry.c + 1)
        }
    };
    Ok(CodeRegistryEntry::claim(n, k, entry.d, c, Provenance::ExtensionRule))
}

/// Published bounds for maximal-entanglement codes, `(n, k, lower, upper)`.
/// Rows `n = 3..=15`, columns `k = 1..n-1`.
pub const PUBLISHED_BOUNDS: &str = "
3: 3 2
4: 3 2-3 1
5: 5 3-4 2-3 2
6: 5 4 3-4 2 1
7: 7 5 4 3 2 2
8: 7 6 5 4 3 2 1
9: 9 6-7 5-6 5 4 3 2 2
10: 9 7-8 6-7 6 4-5 4 3 2 1
11: 11 8 7-8 6-7 6 5 3-4 3 2 2
12: 11 9 7-8 6-7 6-7 5-6 4-5 4 3 2 1
13: 13 10 9 6-8 6-7 6-7 4-6 4-5 4 3 2 2
14: 13 10-11 9-10 7-9 6-8 6-7 6-7 5-6 4-5 3-4 3 2 1
15: 15 11-12 9-11 8-10 8-9 7-8 6-7 6-7 5-6 4 3-4 2-3 2 2
";

/// Parse [`PUBLISHED_BOUNDS`] into `(n, k, lower, upper)` cells.
pub fn published_bounds() -> Vec<(usize, usize, usize, usize)> {
    let mut cells = Vec::new();
    for line in PUBLISHED_BOUNDS.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (n, rest) = line.split_once(':').expect("row label");
        let n: usize = n.parse().expect("row number");
        for (i, cell) in rest.split_whitespace().enumerate() {
            let (lo, hi) = match cell.split_once('-') {
                Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap()),
                None => {
                    let v = cell.parse().unwrap();
                    (v, v)
                }
            };
            cells.push((n, i + 1, lo, hi));
        }
    }
    cells
}

fn ops(n: usize, strings: impl IntoIterator<Item = String>) -> Vec<PauliOperator> {
    strings
        .into_iter()
        .map(|s| {
            let p: PauliOperator = s.parse().expect("valid Pauli string");
            debug_assert_eq!(p.n(), n);
            p
        })
        .collect()
}

/// Entanglement-assisted repetition code on `n ≥ 2` qubits: `[[n,1,n;n-1]]`
/// for odd `n` and `[[n,1,n-1;n-1]]` for even `n`.
///
/// The logical pair is `(X^n, Z^n)` for odd `n` and `(X^(n-1) I, Z^n)` for
/// even `n`; the stored generators span its orthogonal group.
pub fn ea_repetition(n: usize) -> CodeRegistryEntry {
    assert!(n >= 2);
    let logical = if n % 2 == 1 {
        vec!["X".repeat(n), "Z".repeat(n)]
    } else {
        vec![format!("{}I", "X".repeat(n - 1)), "Z".repeat(n)]
    };
    let l = canonicalize(n, &ops(n, logical)).expect("n within range");
    let d = if n % 2 == 1 { n } else { n - 1 };
    CodeRegistryEntry {
        generators: Some(orthogonal_group(&l).generators().to_vec()),
        ..CodeRegistryEntry::claim(
            n,
            1,
            d,
            n - 1,
            Provenance::ConstructionCitation(Construction::EaRepetition),
        )
    }
}

pub fn five_qubit() -> CodeRegistryEntry {
    let gens = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"].map(String::from);
    CodeRegistryEntry {
        generators: Some(ops(5, gens)),
        ..CodeRegistryEntry::claim(5, 1, 3, 0, Provenance::ConstructionCitation(Construction::FiveQubit))
    }
}

// (n, k, d, c)
const CLASSICAL_QUATERNARY: [(usize, usize, usize, usize); 17] = [
    (7, 2, 5, 5),
    (9, 4, 5, 5),
    (9, 5, 4, 4),
    (10, 4, 6, 6),
    (11, 5, 6, 6),
    (11, 4, 6, 7),
    (11, 6, 5, 5),
    (12, 2, 9, 10),
    (12, 8, 4, 4),
    (12, 5, 6, 7),
    (13, 2, 10, 11),
    (13, 3, 9, 10),
    (13, 6, 6, 7),
    (14, 7, 6, 7),
    (14, 8, 5, 6),
    (15, 9, 5, 6),
    (15, 8, 6, 7),
];

const CIRCULANT: [(usize, usize, usize, usize); 6] = [
    (7, 3, 4, 4),
    (8, 2, 6, 6),
    (10, 3, 6, 7),
    (11, 3, 7, 8),
    (15, 5, 8, 10),
    (15, 6, 7, 9),
];

// The first entry is listed with c = 5, which exceeds n - k = 4; it is
// recorded as the maximal-entanglement [[6,2,4;4]] that appears in the table.
const STABILIZER_CONVERSION: [(usize, usize, usize, usize); 15] = [
    (6, 2, 4, 4),
    (8, 4, 4, 4),
    (9, 6, 3, 3),
    (10, 6, 4, 4),
    (10, 7, 3, 3),
    (11, 8, 3, 3),
    (12, 6, 5, 6),
    (12, 7, 4, 5),
    (12, 9, 3, 3),
    (13, 5, 6, 8),
    (13, 9, 4, 4),
    (13, 10, 3, 3),
    (14, 11, 3, 3),
    (15, 4, 8, 11),
    (15, 10, 4, 5),
];

const EXTENDED: [(usize, usize, usize, usize); 5] = [
    (14, 3, 9, 11),
    (14, 9, 4, 5),
    (13, 8, 4, 5),
    (14, 10, 3, 4),
    (14, 6, 6, 8),
];

/// Every registered code: explicit-generator families, cited constructions,
/// extension-rule consequences and the lower endpoints of the bounds table.
pub fn registry() -> Vec<CodeRegistryEntry> {
    let mut out: Vec<CodeRegistryEntry> = (2..=15).map(ea_repetition).collect();
    out.push(five_qubit());
    let cited = [
        (&CLASSICAL_QUATERNARY[..], Construction::ClassicalQuaternary),
        (&CIRCULANT[..], Construction::Circulant),
        (&STABILIZER_CONVERSION[..], Construction::StabilizerConversion),
    ];
    for (list, construction) in cited {
        out.extend(
            list.iter().map(|&(n, k, d, c)| {
                CodeRegistryEntry::claim(n, k, d, c, Provenance::ConstructionCitation(construction))
            }),
        );
    }
    out.extend(
        EXTENDED
            .iter()
            .map(|&(n, k, d, c)| CodeRegistryEntry::claim(n, k, d, c, Provenance::ExtensionRule)),
    );
    out.extend(
        published_bounds()
            .into_iter()
            .map(|(n, k, lo, _)| CodeRegistryEntry::claim(n, k, lo, n - k, Provenance::PublishedTable)),
    );
    out
}

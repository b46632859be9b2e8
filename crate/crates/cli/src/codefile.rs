//! Code file formats.
//!
//! Text form: the first content line is `n k`, every following line one Pauli
//! string generating the simplified stabilizer group. `#` starts a comment.
//!
//! ```text
//! # five-qubit code
//! 5 1
//! XZZXI
//! IXZZX
//! XIXZZ
//! ZXIXZ
//! ```
//!
//! JSON form: `{"n": 2, "k": 1, "generators": ["XX", "ZI"], "logical_pairs": [["IX", "ZZ"]]}`,
//! with `logical_pairs` optional.

use std::fmt::Write as _;

use eaqec::codes::{CodeError, EaqecCode, Pair};
use eaqec::pauli::{PauliError, PauliOperator};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: operator has {found} qubits, header says n = {expected}")]
    Dimension { line: usize, expected: usize, found: usize },
    #[error("missing `n k` header")]
    MissingHeader,
    #[error("invalid JSON code file: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub n: usize,
    pub k: usize,
    pub generators: Vec<PauliOperator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logical_pairs: Option<Vec<Pair>>,
}

impl CodeFile {
    pub fn to_code(&self) -> Result<EaqecCode, CodeError> {
        let code = EaqecCode::from_generators(self.n, self.k, &self.generators)?;
        match &self.logical_pairs {
            None => Ok(code),
            Some(pairs) => EaqecCode::from_parts(
                self.n,
                code.symplectic_pairs().to_vec(),
                code.isotropic_generators().to_vec(),
                pairs.clone(),
            ),
        }
    }

    pub fn from_code(code: &EaqecCode) -> Self {
        Self {
            n: code.n(),
            k: code.k(),
            generators: code.stabilizer_generators(),
            logical_pairs: Some(code.logical_pairs().to_vec()),
        }
    }

    /// Text form; logical pairs are not part of it.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}

pub fn parse_code_file(bytes: &[u8]) -> Result<CodeFile, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::Syntax {
        line: 1,
        column: e.valid_up_to() + 1,
        message: "input is not UTF-8".into(),
    })?;
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    parse_text(text)
}

fn parse_json(text: &str) -> Result<CodeFile, ParseError> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let ops = file
        .generators
        .iter()
        .chain(file.logical_pairs.iter().flatten().flat_map(|(g, h)| [g, h]));
    for (i, op) in ops.enumerate() {
        if op.n() != file.n {
            return Err(ParseError::Dimension {
                line: i + 1,
                expected: file.n,
                found: op.n(),
            });
        }
    }
    Ok(file)
}

fn parse_text(text: &str) -> Result<CodeFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = content.len() - content.trim_start().len() + 1;
        let Some((n, _)) = header else {
            header = Some(parse_header(trimmed, line_no, column)?);
            continue;
        };
        let op: PauliOperator = trimmed.parse().map_err(|e| match e {
            PauliError::InvalidChar { ch, pos } => ParseError::Syntax {
                line: line_no,
                column: column + pos,
                message: format!("invalid Pauli character {ch:?}"),
            },
            other => ParseError::Syntax {
                line: line_no,
                column,
                message: other.to_string(),
            },
        })?;
        if op.n() != n {
            return Err(ParseError::Dimension {
                line: line_no,
                expected: n,
                found: op.n(),
            });
        }
        generators.push(op);
    }
    let (n, k) = header.ok_or(ParseError::MissingHeader)?;
    Ok(CodeFile {
        n,
        k,
        generators,
        logical_pairs: None,
    })
}

fn parse_header(line: &str, line_no: usize, column: usize) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = |message: String| ParseError::Syntax {
        line: line_no,
        column,
        message,
    };
    if fields.len() != 2 {
        return Err(bad(format!("expected header `n k`, found {line:?}")));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| bad(format!("invalid n {:?}", fields[0])))?;
    let k: usize = fields[1]
        .parse()
        .map_err(|_| bad(format!("invalid k {:?}", fields[1])))?;
    if n == 0 || n > eaqec::pauli::MAX_QUBITS {
        return Err(bad(format!("n = {n} outside 1..={}", eaqec::pauli::MAX_QUBITS)));
    }
    if k > n {
        return Err(bad(format!("k = {k} exceeds n = {n}")));
    }
    Ok((n, k))
}

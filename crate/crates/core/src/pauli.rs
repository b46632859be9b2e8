//! Phase-free Pauli operators and GF(2) symplectic linear algebra.
//!
//! An operator on `n` qubits is stored as `X^u Z^v` with `u` and `v` packed
//! into one machine word each (bit `i` is qubit `i`, leftmost in the string
//! form). Phases are never represented, so the product of two operators is
//! the componentwise XOR of their bit vectors.
//!
//! Subgroups are kept in a canonical reduced row-echelon form over the `2n`
//! columns `u_0 .. u_{n-1}, v_0 .. v_{n-1}`, which makes group equality a
//! structural comparison.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported qubit count: `u` and `v` each fit in a `u64`.
pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("qubit count {0} outside 1..={MAX_QUBITS}")]
    QubitCount(usize),
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("bits set above qubit {n}")]
    StrayBits { n: usize },
    #[error("invalid Pauli character {ch:?} at position {pos}")]
    InvalidChar { ch: char, pos: usize },
}

#[inline]
fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A phase-free `n`-qubit Pauli operator `X^u Z^v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    n: u8,
    u: u64,
    v: u64,
}

impl PauliOperator {
    pub fn new(n: usize, u: u64, v: u64) -> Result<Self, PauliError> {
        if n == 0 || n > MAX_QUBITS {
            return Err(PauliError::QubitCount(n));
        }
        let m = mask(n);
        if u & !m != 0 || v & !m != 0 {
            return Err(PauliError::StrayBits { n });
        }
        Ok(Self { n: n as u8, u, v })
    }

    pub fn identity(n: usize) -> Result<Self, PauliError> {
        Self::new(n, 0, 0)
    }

    /// `X` on qubit `q`.
    pub fn x(n: usize, q: usize) -> Result<Self, PauliError> {
        debug_assert!(q < n);
        Self::new(n, 1 << q, 0)
    }

    /// `Z` on qubit `q`.
    pub fn z(n: usize, q: usize) -> Result<Self, PauliError> {
        debug_assert!(q < n);
        Self::new(n, 0, 1 << q)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// X part.
    pub fn u(&self) -> u64 {
        self.u
    }

    /// Z part.
    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u == 0 && self.v == 0
    }

    /// Number of qubits on which the operator is not the identity.
    pub fn weight(&self) -> usize {
        (self.u | self.v).count_ones() as usize
    }

    /// Product with phases discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_dims(other)?;
        Ok(Self {
            n: self.n,
            u: self.u ^ other.u,
            v: self.v ^ other.v,
        })
    }

    /// `true` when the two operators anticommute.
    pub fn anticommutes(&self, other: &Self) -> bool {
        symplectic_bits(self.u, self.v, other.u, other.v)
    }

    fn check_dims(&self, other: &Self) -> Result<(), PauliError> {
        if self.n != other.n {
            return Err(PauliError::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// Symplectic vector `u ‖ v`: column `j < n` is `u_j`, column `n + j` is `v_j`.
    pub(crate) fn to_symplectic(self) -> u128 {
        self.u as u128 | ((self.v as u128) << self.n)
    }

    pub(crate) fn from_symplectic(n: usize, bits: u128) -> Self {
        let m = mask(n);
        Self {
            n: n as u8,
            u: (bits as u64) & m,
            v: ((bits >> n) as u64) & m,
        }
    }
}

/// Panics on a qubit-count mismatch; use [`PauliOperator::try_mul`] to get an error instead.
impl Mul for PauliOperator {
    type Output = PauliOperator;

    fn mul(self, rhs: Self) -> Self::Output {
        self.try_mul(&rhs).expect("Pauli product of mismatched qubit counts")
    }
}

#[inline]
pub(crate) fn symplectic_bits(u1: u64, v1: u64, u2: u64, v2: u64) -> bool {
    ((u1 & v2).count_ones() + (u2 & v1).count_ones()) & 1 == 1
}

/// `u_a·v_b + u_b·v_a mod 2`; `true` iff `a` and `b` anticommute.
pub fn symplectic_product(a: &PauliOperator, b: &PauliOperator) -> Result<bool, PauliError> {
    a.check_dims(b)?;
    Ok(a.anticommutes(b))
}

pub fn weight(a: &PauliOperator) -> usize {
    a.weight()
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            let ch = match ((self.u >> q) & 1, (self.v >> q) & 1) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s.chars().count();
        if n == 0 || n > MAX_QUBITS {
            return Err(PauliError::QubitCount(n));
        }
        let (mut u, mut v) = (0u64, 0u64);
        for (q, ch) in s.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => u |= 1 << q,
                'Z' => v |= 1 << q,
                'Y' => {
                    u |= 1 << q;
                    v |= 1 << q;
                }
                _ => return Err(PauliError::InvalidChar { ch, pos: q }),
            }
        }
        Self::new(n, u, v)
    }
}

impl serde::Serialize for PauliOperator {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for PauliOperator {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subgroup of the phase-free Pauli group, stored as independent generators
/// in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliGroup {
    n: usize,
    generators: Vec<PauliOperator>,
}

impl PauliGroup {
    pub fn trivial(n: usize) -> Result<Self, PauliError> {
        if n == 0 || n > MAX_QUBITS {
            return Err(PauliError::QubitCount(n));
        }
        Ok(Self {
            n,
            generators: Vec::new(),
        })
    }

    /// The whole phase-free Pauli group on `n` qubits.
    pub fn full(n: usize) -> Result<Self, PauliError> {
        let mut gens = Vec::with_capacity(2 * n);
        for q in 0..n {
            gens.push(PauliOperator::x(n, q)?);
        }
        for q in 0..n {
            gens.push(PauliOperator::z(n, q)?);
        }
        canonicalize(n, &gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Number of independent generators; the group has `2^rank` elements.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, a: &PauliOperator) -> Result<bool, PauliError> {
        if a.n() != self.n {
            return Err(PauliError::DimensionMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        Ok(reduce(&self.generators, a.to_symplectic()) == 0)
    }

    /// Subgroup generated by this group together with `other`.
    pub fn join(&self, other: &PauliGroup) -> Result<PauliGroup, PauliError> {
        let gens: Vec<_> = self.generators.iter().chain(other.generators.iter()).copied().collect();
        canonicalize(self.n, &gens)
    }

    /// Every element, in Gray-code order over the generators. Intended for small groups.
    pub fn elements(&self) -> impl Iterator<Item = PauliOperator> + '_ {
        let r = self.rank();
        let id = PauliOperator {
            n: self.n as u8,
            u: 0,
            v: 0,
        };
        let mut cur = id;
        (0u64..1u64 << r).map(move |i| {
            if i != 0 {
                let g = self.generators[i.trailing_zeros() as usize];
                cur.u ^= g.u;
                cur.v ^= g.v;
            }
            cur
        })
    }
}

fn reduce(rows: &[PauliOperator], mut bits: u128) -> u128 {
    for row in rows {
        let r = row.to_symplectic();
        let pivot = r.trailing_zeros();
        if bits >> pivot & 1 == 1 {
            bits ^= r;
        }
    }
    bits
}

/// Row-reduce 2n-bit vectors into reduced row-echelon form, pivots ascending.
fn rref(width: usize, mut rows: Vec<u128>) -> Vec<u128> {
    let mut rank = 0;
    for col in 0..width {
        let Some(found) = (rank..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Independent generators in canonical form spanning the same subgroup as `gens`.
pub fn canonicalize(n: usize, gens: &[PauliOperator]) -> Result<PauliGroup, PauliError> {
    if n == 0 || n > MAX_QUBITS {
        return Err(PauliError::QubitCount(n));
    }
    if let Some(bad) = gens.iter().find(|g| g.n() != n) {
        return Err(PauliError::DimensionMismatch {
            left: n,
            right: bad.n(),
        });
    }
    let rows = rref(2 * n, gens.iter().map(|g| g.to_symplectic()).collect());
    Ok(PauliGroup {
        n,
        generators: rows.into_iter().map(|r| PauliOperator::from_symplectic(n, r)).collect(),
    })
}

/// All operators whose symplectic product with every element of `group` is zero.
pub fn orthogonal_group(group: &PauliGroup) -> PauliGroup {
    let n = group.n;
    let width = 2 * n;
    // g * h = <g, swap(h)> under the ordinary dot product, so V^⊥ is the
    // nullspace of the matrix whose rows are the swapped generators.
    let swapped: Vec<u128> = group
        .generators
        .iter()
        .map(|g| PauliOperator { n: g.n, u: g.v, v: g.u }.to_symplectic())
        .collect();
    let rows = rref(width, swapped);
    let pivots: Vec<u32> = rows.iter().map(|r| r.trailing_zeros()).collect();
    let mut basis = Vec::with_capacity(width - rows.len());
    for free in 0..width as u32 {
        if pivots.contains(&free) {
            continue;
        }
        let mut vec = 1u128 << free;
        for (row, &p) in rows.iter().zip(&pivots) {
            if row >> free & 1 == 1 {
                vec |= 1u128 << p;
            }
        }
        basis.push(PauliOperator::from_symplectic(n, vec));
    }
    canonicalize(n, &basis).expect("nullspace vectors share the group's qubit count")
}

/// Output of [`symplectic_gram_schmidt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    /// Symplectic partners `(g, h)` with `g * h = 1`; all other cross products vanish.
    pub pairs: Vec<(PauliOperator, PauliOperator)>,
    /// Generators commuting with the whole group.
    pub isotropic: Vec<PauliOperator>,
}

/// Split a group into symplectic pairs and an isotropic part.
///
/// Generators are scanned left to right. The first remaining generator that
/// anticommutes with the current one becomes its partner, and both are then
/// eliminated from every later generator. A generator with no partner commutes
/// with everything still present and joins the isotropic list.
pub fn symplectic_gram_schmidt(group: &PauliGroup) -> SymplecticBasis {
    let mut rest = group.generators.clone();
    let mut pairs = Vec::new();
    let mut isotropic = Vec::new();
    rest.reverse();
    while let Some(g) = rest.pop() {
        // `rest` is stored reversed, so its end is the front of the scan order.
        let Some(pos) = rest.iter().rposition(|h| g.anticommutes(h)) else {
            isotropic.push(g);
            continue;
        };
        let h = rest.remove(pos);
        for x in rest.iter_mut() {
            let (with_g, with_h) = (x.anticommutes(&g), x.anticommutes(&h));
            if with_h {
                *x = *x * g;
            }
            if with_g {
                *x = *x * h;
            }
        }
        pairs.push((g, h));
    }
    SymplecticBasis { pairs, isotropic }
}

//! The entanglement-assisted code model.
//!
//! A code on `n` channel qubits is described by its simplified stabilizer
//! group `S' = S_S × S_I`, where `S_S` is generated by `c` symplectic pairs
//! (one per shared entangled pair) and `S_I` by `n - k - c` isotropic
//! generators, together with `k` logical pairs generating `L`. The orthogonal
//! group of `S'` is `L × S_I`.

use thiserror::Error;

use crate::enumerator::{gray_fold, identity_sides, Budget, EnumeratorError, IdentitySides};
use crate::pauli::{canonicalize, orthogonal_group, symplectic_gram_schmidt, PauliError, PauliGroup, PauliOperator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Enumeration(#[from] EnumeratorError),
    #[error("inconsistent code structure: {0}")]
    Structure(String),
    #[error("minimum distance undefined: every element of the orthogonal group lies in the isotropic subgroup")]
    UndefinedDistance,
    #[error("invalid argument: {0}")]
    Argument(String),
}

pub type Pair = (PauliOperator, PauliOperator);

/// An `[[n, k, d; c]]` entanglement-assisted code given by generator sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EaqecCode {
    n: usize,
    k: usize,
    c: usize,
    symplectic_pairs: Vec<Pair>,
    isotropic: Vec<PauliOperator>,
    logical_pairs: Vec<Pair>,
}

fn flatten(pairs: &[Pair]) -> impl Iterator<Item = PauliOperator> + '_ {
    pairs.iter().flat_map(|&(g, h)| [g, h])
}

impl EaqecCode {
    /// Build a code from generators of its simplified stabilizer group.
    ///
    /// The generators are canonicalized and split by symplectic Gram-Schmidt;
    /// the number of pairs found is `c`. Logical pairs are completed from the
    /// orthogonal group modulo `S_I`.
    pub fn from_generators(n: usize, k: usize, gens: &[PauliOperator]) -> Result<Self, CodeError> {
        if k > n {
            return Err(CodeError::Argument(format!("k = {k} exceeds n = {n}")));
        }
        let stabilizer = canonicalize(n, gens)?;
        let split = symplectic_gram_schmidt(&stabilizer);
        let c = split.pairs.len();
        let rank = stabilizer.rank();
        if rank != n - k + c {
            return Err(CodeError::Structure(format!(
                "{rank} independent generators with {c} symplectic pairs, expected n - k + c = {}",
                n as isize - k as isize + c as isize
            )));
        }
        let perp = orthogonal_group(&stabilizer);
        let completion = symplectic_gram_schmidt(&perp);
        if completion.pairs.len() != k || completion.isotropic.len() != split.isotropic.len() {
            return Err(CodeError::Structure(format!(
                "orthogonal group splits into {} pairs and {} isotropic generators",
                completion.pairs.len(),
                completion.isotropic.len()
            )));
        }
        let code = Self {
            n,
            k,
            c,
            symplectic_pairs: split.pairs,
            isotropic: split.isotropic,
            logical_pairs: completion.pairs,
        };
        debug_assert!(code.validate().is_ok());
        Ok(code)
    }

    /// Build a code from all three generator families, checking the
    /// commutation pattern and independence.
    pub fn from_parts(
        n: usize,
        symplectic_pairs: Vec<Pair>,
        isotropic: Vec<PauliOperator>,
        logical_pairs: Vec<Pair>,
    ) -> Result<Self, CodeError> {
        let c = symplectic_pairs.len();
        let k = logical_pairs.len();
        if c + k + isotropic.len() != n {
            return Err(CodeError::Structure(format!(
                "{c} symplectic pairs, {} isotropic generators and {k} logical pairs do not total n = {n}",
                isotropic.len()
            )));
        }
        let code = Self {
            n,
            k,
            c,
            symplectic_pairs,
            isotropic,
            logical_pairs,
        };
        code.validate()?;
        Ok(code)
    }

    fn validate(&self) -> Result<(), CodeError> {
        let all: Vec<PauliOperator> = flatten(&self.symplectic_pairs)
            .chain(flatten(&self.logical_pairs))
            .chain(self.isotropic.iter().copied())
            .collect();
        let group = canonicalize(self.n, &all)?;
        if group.rank() != all.len() {
            return Err(CodeError::Structure("generators are not independent".into()));
        }
        let paired: Vec<Pair> = self
            .symplectic_pairs
            .iter()
            .chain(self.logical_pairs.iter())
            .copied()
            .collect();
        for (i, (gi, hi)) in paired.iter().enumerate() {
            if !gi.anticommutes(hi) {
                return Err(CodeError::Structure(format!("pair {i} commutes")));
            }
            for (gj, hj) in &paired[i + 1..] {
                if gi.anticommutes(gj) || gi.anticommutes(hj) || hi.anticommutes(gj) || hi.anticommutes(hj) {
                    return Err(CodeError::Structure(format!(
                        "pair {i} fails to commute with a later pair"
                    )));
                }
            }
        }
        for s in &self.isotropic {
            if all.iter().any(|g| s.anticommutes(g)) {
                return Err(CodeError::Structure(format!("isotropic generator {s} anticommutes")));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn symplectic_pairs(&self) -> &[Pair] {
        &self.symplectic_pairs
    }

    pub fn isotropic_generators(&self) -> &[PauliOperator] {
        &self.isotropic
    }

    pub fn logical_pairs(&self) -> &[Pair] {
        &self.logical_pairs
    }

    pub fn is_maximal_entanglement(&self) -> bool {
        self.c == self.n - self.k
    }

    /// Generators of `S'` as listed: pairs flattened, then isotropic generators.
    pub fn stabilizer_generators(&self) -> Vec<PauliOperator> {
        flatten(&self.symplectic_pairs)
            .chain(self.isotropic.iter().copied())
            .collect()
    }

    fn group_of(&self, ops: impl Iterator<Item = PauliOperator>) -> PauliGroup {
        canonicalize(self.n, &ops.collect::<Vec<_>>()).expect("code operators share n")
    }

    /// `S' = S_S × S_I`.
    pub fn simplified_stabilizer(&self) -> PauliGroup {
        self.group_of(self.stabilizer_generators().into_iter())
    }

    /// `S_S`.
    pub fn symplectic_group(&self) -> PauliGroup {
        self.group_of(flatten(&self.symplectic_pairs))
    }

    /// `S_I`.
    pub fn isotropic_group(&self) -> PauliGroup {
        self.group_of(self.isotropic.iter().copied())
    }

    /// `L`.
    pub fn logical_group(&self) -> PauliGroup {
        self.group_of(flatten(&self.logical_pairs))
    }

    /// `L × S_I`, the orthogonal group of `S'`.
    pub fn logical_isotropic_group(&self) -> PauliGroup {
        self.group_of(flatten(&self.logical_pairs).chain(self.isotropic.iter().copied()))
    }

    /// `L × S_S × S_I`.
    pub fn full_group(&self) -> PauliGroup {
        self.group_of(
            flatten(&self.logical_pairs)
                .chain(flatten(&self.symplectic_pairs))
                .chain(self.isotropic.iter().copied()),
        )
    }

    /// Independent generator counts `(K, K')` of `S'` and its orthogonal group.
    pub fn generator_counts(&self) -> (usize, usize) {
        (self.n - self.k + self.c, self.n + self.k - self.c)
    }
}

/// The dual code: `L` and `S_S` swap roles, `S_I` is kept. `[[n,k,d;c]]` becomes `[[n,c,d';k]]`.
pub fn dual(code: &EaqecCode) -> EaqecCode {
    EaqecCode {
        n: code.n,
        k: code.c,
        c: code.k,
        symplectic_pairs: code.logical_pairs.clone(),
        isotropic: code.isotropic.clone(),
        logical_pairs: code.symplectic_pairs.clone(),
    }
}

/// Minimum weight over `(S')^⊥ \ S_I`, enumerating `L × S_I` in Gray-code order.
pub fn min_distance(code: &EaqecCode, budget: Budget) -> Result<usize, CodeError> {
    let s = code.isotropic.len();
    let basis: Vec<(u64, u64)> = code
        .isotropic
        .iter()
        .copied()
        .chain(flatten(&code.logical_pairs))
        .map(|g| (g.u(), g.v()))
        .collect();
    budget.check(basis.len())?;
    // Generators are independent and S_I occupies the low coefficient bits,
    // so an element lies outside S_I exactly when a logical bit is set.
    let best = gray_fold(
        &basis,
        || usize::MAX,
        |best, code_bits, u, v| {
            if code_bits >> s != 0 {
                *best = (*best).min((u | v).count_ones() as usize);
            }
        },
        usize::min,
    );
    if best == usize::MAX {
        return Err(CodeError::UndefinedDistance);
    }
    Ok(best)
}

/// Both sides of the two code-level MacWilliams identities.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EaqecIdentities {
    /// `W_{L×S_I}` against the transform of `W_{S_S×S_I}`.
    pub logical_isotropic: IdentitySides,
    /// `W_{S_I}` against the transform of `W_{L×S_S×S_I}`.
    pub isotropic: IdentitySides,
}

impl EaqecIdentities {
    pub fn holds(&self) -> bool {
        self.logical_isotropic.holds() && self.isotropic.holds()
    }
}

pub fn eaqec_identities(code: &EaqecCode, budget: Budget) -> Result<EaqecIdentities, CodeError> {
    let logical_isotropic = identity_sides(&code.logical_isotropic_group(), &code.simplified_stabilizer(), budget)?;
    let isotropic = identity_sides(&code.isotropic_group(), &code.full_group(), budget)?;
    Ok(EaqecIdentities {
        logical_isotropic,
        isotropic,
    })
}

/// Split an arbitrary list of operators into a code, inferring `k` from the decomposition.
pub fn code_from_any_generators(n: usize, gens: &[PauliOperator]) -> Result<EaqecCode, CodeError> {
    let split = symplectic_gram_schmidt(&canonicalize(n, gens)?);
    let k = n - split.pairs.len() - split.isotropic.len();
    EaqecCode::from_generators(n, k, gens)
}

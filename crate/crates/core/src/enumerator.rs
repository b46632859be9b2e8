//! Weight enumerators, Krawtchouk polynomials and the MacWilliams transform.
//!
//! Everything here is exact: tallies are integers, the transform uses
//! arbitrary-precision arithmetic and rejects any inexact division.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::pauli::{orthogonal_group, PauliGroup};

/// Default enumeration budget, as log2 of the number of group elements.
pub const DEFAULT_BUDGET_LOG2: u32 = 30;

/// Groups with at least this many generators are enumerated in parallel chunks.
const PARALLEL_RANK: usize = 18;
const CHUNK_LOG2: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumeratorError {
    #[error("group has 2^{rank} elements, budget is 2^{budget}")]
    BudgetExceeded { rank: usize, budget: u32 },
    #[error("Krawtchouk index out of range: w={w}, w'={w_prime}, n={n}")]
    KrawtchoukRange { w: usize, w_prime: usize, n: usize },
    #[error("group order {given} does not match coefficient sum {sum}")]
    OrderMismatch { given: BigUint, sum: BigUint },
    #[error("transform coefficient B_{w} is not a nonnegative integer ({numerator}/{denominator})")]
    Inconsistent {
        w: usize,
        numerator: BigInt,
        denominator: BigUint,
    },
}

/// Upper limit on the number of elements a single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub log2_elements: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            log2_elements: DEFAULT_BUDGET_LOG2,
        }
    }
}

impl Budget {
    pub fn new(log2_elements: u32) -> Self {
        Self { log2_elements }
    }

    pub fn check(&self, rank: usize) -> Result<(), EnumeratorError> {
        if rank > self.log2_elements as usize || rank >= 64 {
            return Err(EnumeratorError::BudgetExceeded {
                rank,
                budget: self.log2_elements,
            });
        }
        Ok(())
    }
}

/// Coefficients `coeffs[w]` = number of group elements of weight `w`, for `w = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "enumerator needs at least A_0");
        Self { coeffs }
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Enumerator of the trivial group: `x^n`.
    pub fn identity(n: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); n + 1];
        coeffs[0] = BigUint::one();
        Self { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [BigUint] {
        &mut self.coeffs
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest nonzero weight with a nonzero coefficient.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&w| !self.coeffs[w].is_zero())
    }

    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| c.to_u64()).collect()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// JSON form: array of decimal strings.
impl serde::Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(serde::de::Error::custom("empty enumerator"));
        }
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<Result<_, _>>()?;
        Ok(Self { coeffs })
    }
}

/// Fold over all `2^r` elements spanned by `basis`, visited in Gray-code order
/// so each step costs one XOR. `visit(acc, code, u, v)` receives the current
/// coefficient vector `code` (bit `j` set iff `basis[j]` is a factor).
pub(crate) fn gray_fold<T, F, M>(basis: &[(u64, u64)], init: fn() -> T, visit: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, u64, u64, u64) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let r = basis.len();
    let run = |start: u64, end: u64| {
        let mut acc = init();
        let gray = start ^ (start >> 1);
        let (mut u, mut v) = (0u64, 0u64);
        for (j, &(bu, bv)) in basis.iter().enumerate() {
            if gray >> j & 1 == 1 {
                u ^= bu;
                v ^= bv;
            }
        }
        visit(&mut acc, gray, u, v);
        let mut code = gray;
        for i in start + 1..end {
            let bit = i.trailing_zeros() as usize;
            let (bu, bv) = basis[bit];
            u ^= bu;
            v ^= bv;
            code ^= 1 << bit;
            visit(&mut acc, code, u, v);
        }
        acc
    };
    let total = 1u64 << r;
    if r < PARALLEL_RANK {
        return run(0, total);
    }
    let chunk = 1u64 << CHUNK_LOG2;
    (0..total / chunk)
        .into_par_iter()
        .map(|c| run(c * chunk, (c + 1) * chunk))
        .reduce(init, merge)
}

/// Weight distribution of every element of `group`.
pub fn weight_enumerator(group: &PauliGroup, budget: Budget) -> Result<WeightEnumerator, EnumeratorError> {
    budget.check(group.rank())?;
    let n = group.n();
    let basis: Vec<(u64, u64)> = group.generators().iter().map(|g| (g.u(), g.v())).collect();
    let counts = gray_fold(
        &basis,
        || [0u64; 65],
        |acc, _, u, v| acc[(u | v).count_ones() as usize] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(WeightEnumerator::from_u64(&counts[..=n]))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Quaternary Krawtchouk polynomial
/// `P_w(w', n) = Σ_u (-1)^u 3^(w-u) C(w', u) C(n-w', w-u)`.
pub fn krawtchouk(w: usize, w_prime: usize, n: usize) -> Result<BigInt, EnumeratorError> {
    if w > n || w_prime > n {
        return Err(EnumeratorError::KrawtchoukRange { w, w_prime, n });
    }
    let three = BigInt::from(3);
    let mut sum = BigInt::zero();
    for u in 0..=w {
        let term = num_traits::pow(three.clone(), w - u) * binomial(w_prime, u) * binomial(n - w_prime, w - u);
        if u % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// The `(n+1) × (n+1)` matrix `K[w][w'] = P_w(w', n)`.
pub fn krawtchouk_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|w| {
            (0..=n)
                .map(|wp| krawtchouk(w, wp, n).expect("indices within range"))
                .collect()
        })
        .collect()
}

/// `B_w = (1/|V^⊥|) Σ_{w'} P_w(w', n) A_{w'}` where `a` is the enumerator of
/// `V^⊥` and `group_order = |V^⊥|`.
pub fn macwilliams_transform(a: &WeightEnumerator, group_order: &BigUint) -> Result<WeightEnumerator, EnumeratorError> {
    let sum = a.total();
    if &sum != group_order {
        return Err(EnumeratorError::OrderMismatch {
            given: group_order.clone(),
            sum,
        });
    }
    let n = a.n();
    let order = BigInt::from_biguint(Sign::Plus, group_order.clone());
    let kraw = krawtchouk_matrix(n);
    let mut out = Vec::with_capacity(n + 1);
    for (w, row) in kraw.iter().enumerate() {
        let numerator: BigInt = row
            .iter()
            .zip(a.coeffs())
            .map(|(p, c)| p * BigInt::from_biguint(Sign::Plus, c.clone()))
            .sum();
        let (q, r) = numerator.div_rem(&order);
        if !r.is_zero() || q.is_negative() {
            return Err(EnumeratorError::Inconsistent {
                w,
                numerator,
                denominator: group_order.clone(),
            });
        }
        out.push(q.to_biguint().expect("nonnegative"));
    }
    Ok(WeightEnumerator::new(out))
}

/// Whether `w_v` is exactly the transform of `w_vperp` with order `vperp_order`.
/// Any malformed input counts as a failed identity.
pub fn macwilliams_holds(w_v: &WeightEnumerator, w_vperp: &WeightEnumerator, vperp_order: &BigUint) -> bool {
    if w_v.n() != w_vperp.n() {
        return false;
    }
    matches!(macwilliams_transform(w_vperp, vperp_order), Ok(b) if &b == w_v)
}

fn order_of(group: &PauliGroup) -> BigUint {
    BigUint::one() << group.rank()
}

/// Enumerate `V` and `V^⊥` directly and check the MacWilliams identity coefficientwise.
pub fn verify_macwilliams(group: &PauliGroup, budget: Budget) -> Result<bool, EnumeratorError> {
    let perp = orthogonal_group(group);
    let w_v = weight_enumerator(group, budget)?;
    let w_perp = weight_enumerator(&perp, budget)?;
    Ok(macwilliams_holds(&w_v, &w_perp, &order_of(&perp)))
}

/// Both sides of one MacWilliams identity.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentitySides {
    /// Enumerator computed directly.
    pub lhs: WeightEnumerator,
    /// Enumerator obtained by transforming the orthogonal group's enumerator.
    pub rhs: WeightEnumerator,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Direct enumerator of `v` alongside the transform of its orthogonal group's.
pub fn identity_sides(v: &PauliGroup, vperp: &PauliGroup, budget: Budget) -> Result<IdentitySides, EnumeratorError> {
    let lhs = weight_enumerator(v, budget)?;
    let rhs = macwilliams_transform(&weight_enumerator(vperp, budget)?, &order_of(vperp))?;
    Ok(IdentitySides { lhs, rhs })
}

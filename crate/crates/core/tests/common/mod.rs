//! Test-side oracles, written without reusing library algorithms.

#![allow(dead_code)]

use eaqec::codes::{code_from_any_generators, EaqecCode};
use eaqec::pauli::PauliOperator;
use num_bigint::{BigInt, BigUint};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn op(n: usize, u: u64, v: u64) -> PauliOperator {
    PauliOperator::new(n, u, v).unwrap()
}

pub fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn random_op(rng: &mut ChaCha8Rng, n: usize) -> PauliOperator {
    op(n, rng.gen::<u64>() & mask(n), rng.gen::<u64>() & mask(n))
}

pub fn random_ops(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<PauliOperator> {
    (0..count).map(|_| random_op(rng, n)).collect()
}

/// Commutation by comparing qubitwise letters: two single-qubit letters
/// anticommute iff both are non-identity and different.
pub fn anticommute_oracle(a: &PauliOperator, b: &PauliOperator) -> bool {
    let mut parity = false;
    for q in 0..a.n() {
        let la = ((a.u() >> q) & 1, (a.v() >> q) & 1);
        let lb = ((b.u() >> q) & 1, (b.v() >> q) & 1);
        if la != (0, 0) && lb != (0, 0) && la != lb {
            parity = !parity;
        }
    }
    parity
}

pub fn weight_oracle(p: &PauliOperator) -> usize {
    p.to_string().chars().filter(|&c| c != 'I').count()
}

/// Every operator on `n` qubits, as `(u, v)`.
pub fn all_paulis(n: usize) -> impl Iterator<Item = PauliOperator> {
    let m = 1u64 << n;
    (0..m).flat_map(move |u| (0..m).map(move |v| op(n, u, v)))
}

/// All products of subsets of `gens`, deduplicated and sorted.
pub fn span(n: usize, gens: &[PauliOperator]) -> Vec<PauliOperator> {
    let mut out = vec![op(n, 0, 0)];
    for g in gens {
        if out.contains(g) {
            continue;
        }
        let extra: Vec<PauliOperator> = out.iter().map(|x| op(n, x.u() ^ g.u(), x.v() ^ g.v())).collect();
        for e in extra {
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out.sort();
    out
}

/// Elements of `G_n` commuting with every generator, by exhaustive scan.
pub fn orthogonal_oracle(n: usize, gens: &[PauliOperator]) -> Vec<PauliOperator> {
    let mut out: Vec<PauliOperator> = all_paulis(n)
        .filter(|p| gens.iter().all(|g| !anticommute_oracle(p, g)))
        .collect();
    out.sort();
    out
}

pub fn enumerator_of(n: usize, elems: &[PauliOperator]) -> Vec<BigUint> {
    let mut counts = vec![0u64; n + 1];
    for e in elems {
        counts[weight_oracle(e)] += 1;
    }
    counts.into_iter().map(BigUint::from).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficient of `x^(n-w) y^w` in `(x + 3y)^(n-w') (x - y)^(w')`,
/// tracked as a polynomial in `y` alone.
pub fn krawtchouk_oracle(w: usize, w_prime: usize, n: usize) -> BigInt {
    let mut poly = vec![BigInt::from(1)];
    for _ in 0..(n - w_prime) {
        poly = poly_mul(&poly, &[BigInt::from(1), BigInt::from(3)]);
    }
    for _ in 0..w_prime {
        poly = poly_mul(&poly, &[BigInt::from(1), BigInt::from(-1)]);
    }
    poly.get(w).cloned().unwrap_or_default()
}

/// `(1/|order|) Σ_w' P_w(w') A_w'` with the oracle polynomials; `None` if inexact.
pub fn transform_oracle(a: &[BigUint], order: &BigUint) -> Option<Vec<BigUint>> {
    let n = a.len() - 1;
    let order = BigInt::from(order.clone());
    (0..=n)
        .map(|w| {
            let s: BigInt = (0..=n)
                .map(|wp| krawtchouk_oracle(w, wp, n) * BigInt::from(a[wp].clone()))
                .sum();
            let q = &s / &order;
            (&q * &order == s).then(|| q.to_biguint()).flatten()
        })
        .collect()
}

/// `min wt` over `(S')^⊥ \ S_I`, scanning all of `G_n`.
pub fn distance_oracle(code: &EaqecCode) -> Option<usize> {
    let n = code.n();
    let sprime = code.stabilizer_generators();
    let iso = span(n, code.isotropic_generators());
    all_paulis(n)
        .filter(|p| sprime.iter().all(|g| !anticommute_oracle(p, g)))
        .filter(|p| iso.binary_search(p).is_err())
        .map(|p| weight_oracle(&p))
        .min()
}

/// Random code on `n` qubits from a random generator list; `min_k` filters by `k`.
pub fn random_code(rng: &mut ChaCha8Rng, n: usize, min_k: usize) -> EaqecCode {
    loop {
        let count = rng.gen_range(0..=2 * n);
        let mut gens = random_ops(rng, n, count);
        // Bias towards isotropic parts by sometimes adding commuting operators.
        if rng.gen_bool(0.5) && !gens.is_empty() {
            let extra = random_ops(rng, n, 8);
            for e in extra {
                if gens.iter().all(|g| !anticommute_oracle(g, &e)) {
                    gens.push(e);
                }
            }
        }
        let code = code_from_any_generators(n, &gens).unwrap();
        if code.k() >= min_k {
            return code;
        }
    }
}

mod common;

use common::*;
use eaqec::codes::{min_distance, EaqecCode};
use eaqec::enumerator::{krawtchouk, macwilliams_transform, weight_enumerator, Budget, WeightEnumerator};
use eaqec::lpbound::{lp_feasible, lp_feasible_general, lp_upper_bound_general, LpInstance, LpOptions};
use eaqec::pauli::{canonicalize, orthogonal_group, symplectic_gram_schmidt, symplectic_product, PauliOperator};
use eaqec::registry::registry;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sp(a: &PauliOperator, b: &PauliOperator) -> bool {
    symplectic_product(a, b).unwrap()
}

fn mul(a: &PauliOperator, b: &PauliOperator) -> PauliOperator {
    a.try_mul(b).unwrap()
}

fn operator(n: usize) -> impl Strategy<Value = PauliOperator> {
    (any::<u64>(), any::<u64>()).prop_map(move |(u, v)| op(n, u & mask(n), v & mask(n)))
}

fn sized_ops(max_n: usize, max_count: usize) -> impl Strategy<Value = (usize, Vec<PauliOperator>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), proptest::collection::vec(operator(n), 0..=max_count)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symplectic_form_is_alternating_symmetric_bilinear(
        (a, b, c) in (1usize..=64).prop_flat_map(|n| (operator(n), operator(n), operator(n)))
    ) {
        prop_assert!(!sp(&a, &a));
        prop_assert_eq!(sp(&a, &b), sp(&b, &a));
        prop_assert_eq!(sp(&mul(&a, &b), &c), sp(&a, &c) ^ sp(&b, &c));
        prop_assert_eq!(sp(&a, &b), anticommute_oracle(&a, &b));
        prop_assert_eq!(a.weight(), weight_oracle(&a));
    }

    #[test]
    fn string_form_round_trips(a in (1usize..=64).prop_flat_map(operator)) {
        let s = a.to_string();
        prop_assert_eq!(s.len(), a.n());
        prop_assert_eq!(s.parse::<PauliOperator>().unwrap(), a);
    }

    #[test]
    fn canonical_form_is_basis_independent((n, gens) in sized_ops(6, 8), seed in any::<u64>()) {
        let g = canonicalize(n, &gens).unwrap();
        let mut shuffled = gens.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        shuffled.shuffle(&mut rng);
        // Multiply a generator into another; the span is unchanged.
        if shuffled.len() >= 2 {
            shuffled[0] = mul(&shuffled[0], &shuffled[1]);
        }
        prop_assert_eq!(canonicalize(n, &shuffled).unwrap(), g.clone());
        let elems = span(n, &gens);
        prop_assert_eq!(elems.len(), 1usize << g.rank());
        let mut listed: Vec<PauliOperator> = g.elements().collect();
        listed.sort();
        prop_assert_eq!(&listed, &elems);
        for p in all_paulis(n).take(256) {
            prop_assert_eq!(g.contains(&p).unwrap(), elems.binary_search(&p).is_ok());
        }
    }

    #[test]
    fn orthogonal_group_matches_exhaustive_scan((n, gens) in sized_ops(5, 10)) {
        let g = canonicalize(n, &gens).unwrap();
        let perp = orthogonal_group(&g);
        prop_assert_eq!(g.rank() + perp.rank(), 2 * n);
        let mut elems: Vec<PauliOperator> = perp.elements().collect();
        elems.sort();
        prop_assert_eq!(elems, orthogonal_oracle(n, &gens));
        prop_assert_eq!(orthogonal_group(&perp), g);
    }

    #[test]
    fn gram_schmidt_is_a_symplectic_basis((n, gens) in sized_ops(8, 12)) {
        let g = canonicalize(n, &gens).unwrap();
        let basis = symplectic_gram_schmidt(&g);
        let flat: Vec<PauliOperator> = basis
            .pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(basis.isotropic.iter().copied())
            .collect();
        prop_assert_eq!(flat.len(), g.rank());
        prop_assert_eq!(canonicalize(n, &flat).unwrap(), g);
        for (i, x) in flat.iter().enumerate() {
            for (j, y) in flat.iter().enumerate() {
                let partners = i < 2 * basis.pairs.len() && j < 2 * basis.pairs.len() && i / 2 == j / 2 && i != j;
                prop_assert_eq!(sp(x, y), partners, "basis elements {} and {}", i, j);
            }
        }
    }

    #[test]
    fn transform_is_an_involution((n, gens) in sized_ops(6, 12)) {
        let g = canonicalize(n, &gens).unwrap();
        let perp = orthogonal_group(&g);
        let w_g = weight_enumerator(&g, Budget::default()).unwrap();
        let w_perp = weight_enumerator(&perp, Budget::default()).unwrap();
        let order_g = BigUint::from(1u32) << g.rank();
        let order_perp = BigUint::from(1u32) << perp.rank();
        let b = macwilliams_transform(&w_perp, &order_perp).unwrap();
        prop_assert_eq!(&b, &w_g);
        prop_assert_eq!(b.total(), order_g.clone());
        prop_assert_eq!(macwilliams_transform(&b, &order_g).unwrap(), w_perp);
    }

    #[test]
    fn random_code_distance_matches_oracle(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&mut rng, n, 1);
        prop_assert_eq!(Some(min_distance(&code, Budget::default()).unwrap()), distance_oracle(&code));
    }
}

#[test]
fn transform_rejects_wrong_order_and_inexact_division() {
    let w = WeightEnumerator::from_u64(&[1, 3]);
    assert!(macwilliams_transform(&w, &BigUint::from(2u32)).is_err());
    // Enumerator of {I, X}.
    let w = WeightEnumerator::from_u64(&[1, 1]);
    assert!(macwilliams_transform(&w, &BigUint::from(2u32)).is_ok());
    let w = WeightEnumerator::from_u64(&[0, 2, 1]);
    assert!(macwilliams_transform(&w, &BigUint::from(3u32)).is_err());
}

/// `P_w(w')` equals the character sum `Σ_{wt(b)=w} (-1)^(a*b)` for any `a` of weight `w'`.
#[test]
fn krawtchouk_matches_character_sum() {
    for n in 1..=4 {
        for wp in 0..=n {
            // X on the first w' qubits.
            let a = op(n, mask(wp), 0);
            for w in 0..=n {
                let sum: i64 = all_paulis(n)
                    .filter(|b| weight_oracle(b) == w)
                    .map(|b| if anticommute_oracle(&a, &b) { -1 } else { 1 })
                    .sum();
                assert_eq!(krawtchouk(w, wp, n).unwrap(), BigInt::from(sum), "P_{w}({wp}, {n})");
            }
        }
    }
}

#[test]
fn krawtchouk_rejects_out_of_range() {
    assert!(krawtchouk(3, 0, 2).is_err());
    assert!(krawtchouk(0, 3, 2).is_err());
}

/// Groups of rank at least the parallel threshold are split into chunks;
/// the counts must equal a plain subset walk.
#[test]
fn parallel_enumeration_matches_subset_walk() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, rank) in [(10, 18), (12, 20)] {
        let mut gens = Vec::new();
        while canonicalize(n, &gens).unwrap().rank() < rank {
            gens.push(random_op(&mut rng, n));
        }
        let g = canonicalize(n, &gens).unwrap();
        let basis = g.generators();
        let mut counts = vec![0u64; n + 1];
        for mask_bits in 0u64..(1 << rank) {
            let (mut u, mut v) = (0u64, 0u64);
            for (i, b) in basis.iter().enumerate() {
                if mask_bits >> i & 1 == 1 {
                    u ^= b.u();
                    v ^= b.v();
                }
            }
            counts[(u | v).count_ones() as usize] += 1;
        }
        assert_eq!(
            weight_enumerator(&g, Budget::default()).unwrap(),
            WeightEnumerator::from_u64(&counts)
        );
    }
}

#[test]
fn budget_is_enforced() {
    let g = canonicalize(4, &[op(4, 0b1111, 0), op(4, 0, 0b1111), op(4, 1, 0)]).unwrap();
    assert!(weight_enumerator(&g, Budget::new(2)).is_err());
    assert!(weight_enumerator(&g, Budget::new(3)).is_ok());
}

#[test]
fn lp_verdicts_ignore_constraint_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, k) in [(5, 2), (6, 3), (7, 2), (8, 3)] {
        for d in 1..=n {
            let program = LpInstance::new(n, k, d).program();
            let verdict = program.solve().is_feasible();
            assert_eq!(verdict, lp_feasible(n, k, d));
            for _ in 0..3 {
                let mut shuffled = program.clone();
                shuffled.constraints.shuffle(&mut rng);
                assert_eq!(shuffled.solve().is_feasible(), verdict, "({n},{k},{d})");
            }
        }
    }
}

#[test]
fn lp_feasibility_is_monotone_in_d() {
    for n in 2..=9 {
        for k in 1..n {
            let verdicts: Vec<bool> = (1..=n).map(|d| lp_feasible(n, k, d)).collect();
            assert!(verdicts[0], "d = 1 always feasible for ({n},{k})");
            assert!(verdicts.windows(2).all(|w| w[0] || !w[1]), "({n},{k}): {verdicts:?}");
        }
    }
}

#[test]
fn lp_admits_every_registered_code() {
    for e in registry()
        .into_iter()
        .filter(|e| e.is_maximal_entanglement() && e.k >= 1 && e.n <= 12)
    {
        assert!(lp_feasible(e.n, e.k, e.d), "{} ruled out", e.label());
    }
}

#[test]
fn general_lp_admits_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let n = 2 + (rand::Rng::gen_range(&mut rng, 0..4));
        let code: EaqecCode = random_code(&mut rng, n, 1);
        let d = min_distance(&code, Budget::default()).unwrap();
        assert!(
            lp_feasible_general(n, code.k(), code.c(), d),
            "[[{n},{},{d};{}]] ruled out",
            code.k(),
            code.c()
        );
    }
}

#[test]
fn general_lp_bounds_five_qubit_parameters() {
    // The five-qubit code is an [[5,1,3;0]] code, so no bound may fall below 3.
    let opts = LpOptions::default();
    assert!(lp_upper_bound_general(5, 1, 0, &opts).bound >= 3);
    assert!(lp_upper_bound_general(5, 1, 2, &opts).bound >= 3);
}

//! Linear-programming upper bounds on the minimum distance.
//!
//! For a maximal-entanglement `[[n, k, d; n-k]]` code, `A` is the weight
//! distribution of the symplectic group `S_S` (order `4^(n-k)`) and `B` that
//! of the logical group `L` (order `4^k`). The two are tied by the MacWilliams
//! transform, and a distance `d` forces `B_1 = .. = B_{d-1} = 0`. If no
//! nonnegative rational `(A, B)` satisfies the system, no such code exists.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerator::krawtchouk_matrix;
use crate::simplex::{integer_feasible, IntegerOutcome, LinearProgram, Rational, Relation};

/// Default node limit for the optional branch-and-bound refinement.
pub const DEFAULT_NODE_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LpOptions {
    /// Also require integral enumerator values (integer program) via branch and bound.
    pub branch_and_bound: bool,
    pub node_limit: usize,
}

impl Default for LpOptions {
    fn default() -> Self {
        Self {
            branch_and_bound: false,
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn int(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// Feasibility system for a maximal-entanglement code with trial distance `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LpInstance {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl LpInstance {
    pub fn new(n: usize, k: usize, d: usize) -> Self {
        assert!(1 <= k && k < n, "need 1 <= k < n, got n={n} k={k}");
        assert!(1 <= d && d <= n, "need 1 <= d <= n, got d={d}");
        Self { n, k, d }
    }

    pub fn c(&self) -> usize {
        self.n - self.k
    }

    /// Variable index of `A_w`.
    pub fn a(&self, w: usize) -> usize {
        w
    }

    /// Variable index of `B_w`.
    pub fn b(&self, w: usize) -> usize {
        self.n + 1 + w
    }

    pub fn program(&self) -> LinearProgram {
        let n = self.n;
        let symplectic_order = pow2(2 * self.c());
        let logical_order = pow2(2 * self.k);
        let mut lp = LinearProgram::new(2 * (n + 1));
        let one = Rational::one();

        lp.add(vec![(self.a(0), one.clone())], Relation::Eq, one.clone());
        lp.add(vec![(self.b(0), one.clone())], Relation::Eq, one.clone());
        for w in 1..=n {
            lp.add(vec![(self.a(w), one.clone())], Relation::Le, int(&symplectic_order));
            lp.add(vec![(self.b(w), one.clone())], Relation::Le, int(&logical_order));
        }
        lp.add(
            (0..=n).map(|w| (self.a(w), one.clone())).collect(),
            Relation::Eq,
            int(&symplectic_order),
        );
        lp.add(
            (0..=n).map(|w| (self.b(w), one.clone())).collect(),
            Relation::Eq,
            int(&logical_order),
        );
        // |S_S| B_w - Σ_{w'} P_w(w', n) A_{w'} = 0
        for (w, row) in krawtchouk_matrix(n).iter().enumerate() {
            let mut terms = vec![(self.b(w), int(&symplectic_order))];
            terms.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(wp, p)| (self.a(wp), -int(p))),
            );
            lp.add(terms, Relation::Eq, Rational::zero());
        }
        for w in 1..self.d {
            lp.add(vec![(self.b(w), one.clone())], Relation::Eq, Rational::zero());
        }
        lp
    }
}

fn decide(lp: &LinearProgram, opts: &LpOptions) -> bool {
    if !lp.solve().is_feasible() {
        return false;
    }
    if !opts.branch_and_bound {
        return true;
    }
    let integral: Vec<usize> = (0..lp.num_vars).collect();
    // An undecided search cannot rule the code out.
    !matches!(
        integer_feasible(lp, &integral, opts.node_limit),
        IntegerOutcome::Infeasible
    )
}

/// Whether the rational relaxation for `[[n, k, d; n-k]]` has a solution.
pub fn lp_feasible(n: usize, k: usize, d: usize) -> bool {
    lp_feasible_with(n, k, d, &LpOptions::default())
}

pub fn lp_feasible_with(n: usize, k: usize, d: usize, opts: &LpOptions) -> bool {
    decide(&LpInstance::new(n, k, d).program(), opts)
}

/// Result of scanning trial distances upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub bound: usize,
    /// `false` when every trial distance up to `n` was feasible, so the bound is just `n`.
    pub certified: bool,
}

/// `d* - 1` for the smallest infeasible trial distance `d*`, or `n` if none.
pub fn lp_upper_bound(n: usize, k: usize) -> usize {
    lp_upper_bound_with(n, k, &LpOptions::default()).bound
}

pub fn lp_upper_bound_with(n: usize, k: usize, opts: &LpOptions) -> UpperBound {
    // Feasibility is monotone in d, so a linear scan finds d*.
    (1..=n)
        .find(|&d| !lp_feasible_with(n, k, d, opts))
        .map(|d| UpperBound {
            bound: d - 1,
            certified: true,
        })
        .unwrap_or(UpperBound {
            bound: n,
            certified: false,
        })
}

/// Even-length nonexistence facts: no `[[n,1,n;n-1]]` and no `[[n,n-1,2;1]]`
/// for even `n`. Every bound is also capped at `n`.
pub fn apply_overrides(n: usize, k: usize, lp_bound: usize) -> usize {
    let mut bound = lp_bound.min(n);
    if n.is_multiple_of(2) {
        if k == 1 {
            bound = bound.min(n - 1);
        }
        if k + 1 == n {
            bound = bound.min(1);
        }
    }
    bound
}

/// Feasibility system for `[[n, k, d; c]]` with `0 <= c <= n - k`.
///
/// Four enumerators are variables: `A` for `S_S × S_I`, `B` for `L × S_I`,
/// `C` for `S_I` and `D` for `L × S_S × S_I`. Both code-level MacWilliams
/// identities link them, the distance condition is `B_w = C_w` for
/// `1 <= w < d`, and group containment gives the coefficientwise dominance
/// rows `C ≤ A ≤ D`, `C ≤ B ≤ D` and `D_w ≤ 3^w C(n, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneralLpInstance {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub d: usize,
}

impl GeneralLpInstance {
    pub fn new(n: usize, k: usize, c: usize, d: usize) -> Self {
        assert!(k <= n && c + k <= n, "need c <= n - k, got n={n} k={k} c={c}");
        assert!(1 <= d && d <= n, "need 1 <= d <= n, got d={d}");
        Self { n, k, c, d }
    }

    fn var(&self, family: usize, w: usize) -> usize {
        family * (self.n + 1) + w
    }

    pub fn program(&self) -> LinearProgram {
        const A: usize = 0;
        const B: usize = 1;
        const C: usize = 2;
        const D: usize = 3;
        let n = self.n;
        let (k, c) = (self.k, self.c);
        let iso = n - k - c;
        let orders = [
            pow2(2 * c + iso),
            pow2(2 * k + iso),
            pow2(iso),
            pow2(2 * k + 2 * c + iso),
        ];
        let one = Rational::one();
        let mut lp = LinearProgram::new(4 * (n + 1));
        for fam in [A, B, C, D] {
            lp.add(vec![(self.var(fam, 0), one.clone())], Relation::Eq, one.clone());
            for w in 1..=n {
                lp.add(vec![(self.var(fam, w), one.clone())], Relation::Le, int(&orders[fam]));
            }
            lp.add(
                (0..=n).map(|w| (self.var(fam, w), one.clone())).collect(),
                Relation::Eq,
                int(&orders[fam]),
            );
        }
        let kraw = krawtchouk_matrix(n);
        // |V^⊥| W_V = transform(W_{V^⊥}) for (V, V^⊥) = (B, A) and (C, D).
        for (v, vperp) in [(B, A), (C, D)] {
            for (w, row) in kraw.iter().enumerate() {
                let mut terms = vec![(self.var(v, w), int(&orders[vperp]))];
                terms.extend(
                    row.iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(wp, p)| (self.var(vperp, wp), -int(p))),
                );
                lp.add(terms, Relation::Eq, Rational::zero());
            }
        }
        for w in 1..self.d {
            lp.add(
                vec![(self.var(B, w), one.clone()), (self.var(C, w), -one.clone())],
                Relation::Eq,
                Rational::zero(),
            );
        }
        let mut full = BigInt::one();
        for w in 1..=n {
            for (small, big) in [(C, A), (C, B), (A, D), (B, D)] {
                lp.add(
                    vec![(self.var(small, w), one.clone()), (self.var(big, w), -one.clone())],
                    Relation::Le,
                    Rational::zero(),
                );
            }
            // 3^w C(n, w), built incrementally.
            full = full * 3 * (n - w + 1) / w;
            lp.add(vec![(self.var(D, w), one.clone())], Relation::Le, int(&full));
        }
        lp
    }
}

pub fn lp_feasible_general(n: usize, k: usize, c: usize, d: usize) -> bool {
    lp_feasible_general_with(n, k, c, d, &LpOptions::default())
}

pub fn lp_feasible_general_with(n: usize, k: usize, c: usize, d: usize, opts: &LpOptions) -> bool {
    decide(&GeneralLpInstance::new(n, k, c, d).program(), opts)
}

/// Upper bound from the general system, scanning `d` upward.
pub fn lp_upper_bound_general(n: usize, k: usize, c: usize, opts: &LpOptions) -> UpperBound {
    (1..=n)
        .find(|&d| !lp_feasible_general_with(n, k, c, d, opts))
        .map(|d| UpperBound {
            bound: d - 1,
            certified: true,
        })
        .unwrap_or(UpperBound {
            bound: n,
            certified: false,
        })
}

/// One feasibility verdict, as emitted in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeasibilityRecord {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub d_trial: usize,
    pub feasible: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::LpOutcome;

    #[test]
    fn seven_two() {
        assert!(lp_feasible(7, 2, 5));
        assert!(!lp_feasible(7, 2, 6));
    }

    #[test]
    fn distance_one_always_feasible() {
        for n in 2..=8 {
            for k in 1..n {
                assert!(lp_feasible(n, k, 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn small_upper_bounds() {
        assert_eq!(lp_upper_bound(5, 2), 4);
        assert_eq!(lp_upper_bound(3, 1), 3);
        assert_eq!(lp_upper_bound(3, 2), 2);
        assert_eq!(lp_upper_bound(6, 3), 4);
    }

    #[test]
    fn overrides() {
        assert_eq!(apply_overrides(4, 1, 4), 3);
        assert_eq!(apply_overrides(6, 5, 2), 1);
        assert_eq!(apply_overrides(5, 1, 5), 5);
        assert_eq!(apply_overrides(5, 2, 9), 5);
        assert_eq!(apply_overrides(8, 3, 5), 5);
    }

    #[test]
    fn feasible_point_satisfies_program() {
        let lp = LpInstance::new(7, 2, 5).program();
        let LpOutcome::Optimal { x, .. } = lp.solve() else {
            panic!("expected feasible")
        };
        assert!(lp.is_satisfied_by(&x));
    }

    #[test]
    fn general_matches_maximal_in_the_limit() {
        for (n, k) in [(4, 1), (5, 2), (6, 2)] {
            for d in 1..=n {
                assert_eq!(
                    lp_feasible_general(n, k, n - k, d),
                    lp_feasible(n, k, d),
                    "n={n} k={k} d={d}"
                );
            }
        }
    }

    #[test]
    fn general_distance_one() {
        assert!(lp_feasible_general(5, 1, 2, 1));
        assert!(lp_feasible_general(6, 2, 1, 1));
    }

    #[test]
    fn branch_and_bound_agrees_on_small_cells() {
        let opts = LpOptions {
            branch_and_bound: true,
            node_limit: 2_000,
        };
        assert_eq!(lp_upper_bound_with(4, 2, &opts).bound, 3);
        assert_eq!(lp_upper_bound_with(5, 3, &opts).bound, 3);
    }
}

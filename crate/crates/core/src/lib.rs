//! Entanglement-assisted quantum error-correcting codes over the phase-free
//! Pauli group: the duality between a code and the code obtained by swapping
//! its logical and symplectic subgroups, the MacWilliams identities linking
//! their weight enumerators, and exact linear-programming bounds on the
//! minimum distance of maximal-entanglement codes.
//!
//! ```
//! use eaqec::{codes::{min_distance, EaqecCode}, enumerator::Budget, pauli::PauliOperator};
//!
//! let gens: Vec<PauliOperator> = ["XX", "ZI"].iter().map(|s| s.parse().unwrap()).collect();
//! let code = EaqecCode::from_generators(2, 1, &gens).unwrap();
//! assert_eq!(code.c(), 1);
//! assert_eq!(min_distance(&code, Budget::default()).unwrap(), 1);
//! ```

pub mod codes;
pub mod enumerator;
pub mod lpbound;
pub mod pauli;
pub mod registry;
pub mod simplex;
pub mod table;

pub use codes::{dual, eaqec_identities, min_distance, CodeError, EaqecCode};
pub use enumerator::{
    krawtchouk, macwilliams_transform, verify_macwilliams, weight_enumerator, Budget, WeightEnumerator,
};
pub use lpbound::{apply_overrides, lp_feasible, lp_feasible_general, lp_upper_bound, LpOptions};
pub use pauli::{
    canonicalize, orthogonal_group, symplectic_gram_schmidt, symplectic_product, PauliGroup, PauliOperator,
};
pub use registry::{extend_code, registry, CodeRegistryEntry, ExtendMode, Provenance};
pub use table::{build_table, BoundsTable};

//! Exact weight and character combinatorics for the general linear group
//! `GL_n` in type A, together with the constructions that produce
//! truncated-polynomial endomorphism algebras inside the Schur algebra
//! `S(n, r)` and its quantum analogue, and the representation-dimension
//! lower bounds that follow from them.
//!
//! Module map:
//!
//! * [`weight`]: the lattice `ℤⁿ`, dominance, orbits, p-adic digits.
//! * [`character`]: the group ring `ℤX(n)`, Weyl characters, Brauer's formula.
//! * [`oracle`]: independent brute-force checks of the character layer.
//! * [`injective`]: character and endomorphism descriptors of injective modules.
//! * [`planner`]: the digit construction of the weight μ and the bounds.
//! * [`json`]: the JSON schemas shared with the command-line front end.
//! * [`cli`]: argument parsing and dispatch for the `schur-repdim` binary.

pub mod character;
pub mod cli;
pub mod error;
pub mod injective;
pub mod json;
pub mod oracle;
pub mod planner;
pub mod weight;

pub use character::{
    brauer_expand, dot_normalize, orbit_sum, schur_character, weyl_character, zhat_character,
    Character, SignedChi,
};
pub use error::{Error, Result};
pub use injective::{
    determinant_shift, hook_injective_end, multiplicity_product_symbolic, pm_hook_injective,
    steinberg_tilting, tensor_factorization, AdmissibleIndex, EndAlgebra, InjectiveDescriptor,
    Multiplicity, TruncatedPolyAlgebra,
};
pub use planner::{
    construct_classical, construct_quantum, max_h_classical, max_h_quantum, min_r_classical,
    min_r_quantum, ClassicalParams, ConstructionResult, QuantumParams, Regime,
};
pub use weight::{dominance_leq, special_weight, DominantWeight, PAdicDecomposition, SpecialWeight, Weight};

//! Exact construction of the covariant irreducible representations of the
//! Lie superalgebra gl(m|n) in the supertableau basis.
//!
//! For a covariant highest weight lambda the crate enumerates the
//! supertableaux of the diagram Gamma_lambda, evaluates the closed-form
//! matrix elements of the Chevalley generators on that basis with exact
//! rational arithmetic, and exposes characters, dimensions, and the
//! Yangian data (highest weight series and Drinfeld polynomials) of the
//! multiplicity spaces. An independent tensor-power oracle and a relation
//! verifier cross-check the construction; nothing in the crate uses
//! floating point.

pub mod bundle;
pub mod character;
pub mod coeffs;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod pattern;
pub mod poly;
pub mod ratio;
pub mod serialize;
pub mod shape;
pub mod sparse;
pub mod tableau;
pub mod verify;
pub mod weight;
pub mod yangian;

pub use bundle::{build_bundle, derive_all_generators, RepresentationBundle};
pub use character::{character, dimension, CharacterPoly};
pub use diagram::{SkewDiagram, YoungDiagram};
pub use error::{Error, Result};
pub use oracle::{oracle_check_relations, oracle_module, OracleOutcome, TensorModule};
pub use pattern::{patterns_to_tableau, tableau_to_patterns, PatternPair};
pub use ratio::Ratio;
pub use shape::{admissible_mus, drinfeld_row_contents, initial_tableau, SkewShapeParams};
pub use sparse::SparseMatrix;
pub use tableau::{
    enumerate_supertableaux, for_each_supertableau, highest_tableau, Supertableau, DEFAULT_CAP,
};
pub use verify::{
    check_cyclic_generation, check_highest_vector, check_odd_structure, check_super_commutators,
};
pub use weight::{enumerate_covariant_weights, CovariantWeight, SuperDims, WeightVector};
pub use yangian::{
    check_drinfeld_relation, check_initial_tableau_identity, drinfeld_polynomials,
    highest_weight_series, DrinfeldSet, RationalFunction,
};

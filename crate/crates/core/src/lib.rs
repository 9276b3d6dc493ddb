//! Exact computational kernel for 0-Schur algebras and their degenerations.
//!
//! The algebras handled here all share the same combinatorial skeleton: a basis
//! indexed by n-by-n nonnegative integer matrices with fixed total sum r, and a
//! product that sends a pair of basis elements to a scalar multiple of a single
//! basis element (or to zero). On top of that skeleton the crate builds
//! structure-constant tables, idempotent ideals and quotients, the quiver
//! presentation with its relation families, and the centralizer algebras
//! (0-Hecke, nil-Hecke image, nil-Temperley-Lieb) together with machine checks
//! of the isomorphism and dimension theorems at desk scale.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and all
//! verification is zero-tolerance.
//!
//! The data-parallel sweeps (table construction, associativity and filtration
//! scans, relation checks) use rayon when the default `parallel` feature is
//! enabled; disabling it falls back to the sequential implementations, which
//! are always available under `*_seq` names.

pub mod composition;
pub mod error;
pub mod hecke;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod perm;
pub mod product;
pub mod quiver;
pub mod rational;
pub mod relations;
pub mod table;
pub mod verify;
pub mod word;

pub use composition::Composition;
pub use error::SchurError;
pub use hecke::{element_to_peaks, hecke0_build, nilhecke_graded_build, ntl_build, peaks_to_element, PeakSet};
pub use ideal::{
    boundary_ideal_basis, corner_algebra, ideal_closure, quotient_algebra, subalgebra_closure,
    verify_iso_by_bijection, IdealBasis,
};
pub use linalg::{rref, SparseVector, Subspace};
pub use matrix::{enumerate_basis, OrbitMatrix};
pub use perm::Permutation;
pub use product::{
    left_apply_e, left_apply_f, right_apply_e, right_apply_f, s0_multiply, star_multiply,
    t_multiply, ParamTuple, ProductKind, ScaledOrbit,
};
pub use quiver::{build_quiver, Arrow, ArrowKind, Quiver};
pub use rational::Rational;
pub use relations::{evaluate_relation, relation_set, RelationElement, RelationFamily, RelationReport};
pub use table::{build_table, build_table_seq, BasisLabel, StructureTable};
pub use word::{
    decompose_monomial, decompose_pbw, degree_vectors, evaluate_word, reduced_word_for,
    DegreeVector, GeneratorWord, Letter,
};

/// Largest total matrix weight the kernel accepts.
pub const MAX_WEIGHT: u32 = 64;

/// Default cap on the number of basis elements in a structure table.
pub const DEFAULT_MAX_DIM: usize = 5000;

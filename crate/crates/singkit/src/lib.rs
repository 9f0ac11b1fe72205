//! Exact computer algebra for isolated hypersurface singularities.
//!
//! The crate computes Milnor and Tjurina invariants with exact rational
//! (and simple algebraic) arithmetic, builds local standard bases by
//! Mora's algorithm, generates the closed-form modular ideals of the
//! hyperbolic T-series, validates the catalog of exceptional unimodal
//! normal forms, and decides isomorphy of Artinian local algebras through
//! a parameterized surjection search with certified verification.
//!
//! See the `examples/` directory for one runnable program per major
//! capability, and the `singkit` binary for the command-line interface.

pub mod algebra;
pub mod cases;
pub mod catalog;
pub mod error;
pub mod field;
pub mod ideal;
pub mod iso;
pub mod linalg;
pub mod modular;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod solve;
pub mod stdbasis;

pub use algebra::{
    annihilator_check, local_invariants_at, milnor_algebra, milnor_number, minimal_embedding,
    tjurina_algebra, tjurina_number, Dim, LocalAlgebra,
};
pub use cases::{certify_modular_isomorphism, certify_symmetric_exception, run_case, CaseReport};
pub use catalog::{
    add_square_variable, hesse_family, hesse_form, is_quasihomogeneous, limit_singularity,
    miniversal_deformation, remove_square_variable, splitting_family, splitting_fiber, t_series,
    t_series_in, Catalog, CatalogEntry,
};
pub use error::{Error, Result};
pub use field::{CoefficientField, FieldElement, Rational};
pub use ideal::{jacobian_ideal, tjurina_ideal, Ideal};
pub use iso::{
    check_ambient_isomorphism, coefficient_ideal, find_surjection, solve_diagonal, verify,
    AlgebraMap, Ansatz, IsoSearchOptions, VerificationReport, Verdict,
};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::{parse_ideal_file, parse_map_file, parse_polynomial};
pub use poly::{ecart, FieldCtx, FieldPoly, PolyCtx, Polynomial};
pub use stdbasis::{
    eliminate, ideal_membership, mora_normal_form, radical_membership, reduced_normal_form,
    standard_basis, StandardBasis,
};

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial is not squarefree, common factor: {0}")]
    NotSquarefree(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor detected, modulus factor: {0}")]
    ZeroDivisor(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("syntax error at byte {0}: {1}")]
    SyntaxError(usize, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial has no ecart")]
    ZeroPolynomial,
    #[error("nonzero constant term: not a germ at the origin")]
    NonGerm,
    #[error("term order mismatch between operands")]
    OrderMismatch,
    #[error("coefficient field mismatch between operands")]
    FieldMismatch,
    #[error("quotient is not Artinian: variable `{0}` has no pure power in the lead ideal")]
    NotArtinian(String),
    #[error("substitution diverged for `{0}`: non-Artinian quotient with self-referential tail")]
    SubstitutionDiverged(String),
    #[error("indices ({0},{1},{2}) violate 1/p + 1/q + 1/r <= 1")]
    IndexOutOfRange(u32, u32, u32),
    #[error("degenerate lambda for T({0},{1},{2})")]
    DegenerateLambda(u32, u32, u32),
    #[error("({0};{1},{2},{3}) is not one of the six sub-series families")]
    NotASubseries(u32, u32, u32, u32),
    #[error("deformation basis has {got} elements, expected {want}")]
    BasisWrongSize { want: usize, got: usize },
    #[error("deformation basis is not linearly independent modulo the Tjurina ideal")]
    BasisNotIndependent,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parabolic base: a({0},{1},{2}) = 0")]
    ParabolicBase(u32, u32, u32),
    #[error("({0},{1},{2}) has more than one vanishing coefficient; use the symmetric-exception targets")]
    SymmetricException(u32, u32, u32),
    #[error("not an ambient coordinate change: {0}")]
    NotAmbient(String),
    #[error("root of degree {0} is not supported here")]
    UnsupportedRootDegree(u32),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("{0}")]
    Io(String),
}

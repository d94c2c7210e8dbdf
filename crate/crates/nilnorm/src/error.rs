//! Crate-wide error type.

use alloc::string::String;

/// Errors surfaced by the library. Domain violations carry enough context to
/// name the offending rule and value.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Rank outside the admissible range for the family.
    #[error("inadmissible type: {0}")]
    InadmissibleType(String),
    /// Partition text that could not be parsed.
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    /// Partition violating the series constraints.
    #[error("invalid partition for {series}_{n}: {reason}")]
    InvalidPartition {
        series: &'static str,
        n: usize,
        reason: String,
    },
    /// The zero orbit `(1^N)` has no depth, type or bush.
    #[error("zero orbit (1^N) excluded: {0}")]
    ZeroOrbit(&'static str),
    /// Nilpotent-type orbits sit alone in their bush.
    #[error("orbit of nilpotent type ({0}) has no semisimple-type bush leader")]
    NilpotentTypeBush(String),
    /// Unknown Bala-Carter label; carries nearby labels of the same type.
    #[error("unknown orbit label `{label}` in {algebra}; nearest: {nearest}")]
    UnknownLabel {
        algebra: String,
        label: String,
        nearest: String,
    },
    /// Malformed normal-form or label text.
    #[error("malformed normal form: {0}")]
    MalformedNormalForm(String),
    /// Bracket of elements from different algebras.
    #[error("elements belong to different algebras")]
    MismatchedAlgebras,
    /// `ad h` has a non-integer eigenvalue, so `h` is not from a triple.
    #[error("non-integer ad-eigenvalue: {0}")]
    NonIntegerEigenvalue(String),
    /// The two-step linear solve for an sl2 triple has no solution.
    #[error("sl2 completion failed for {0}: inconsistent linear system")]
    Sl2Inconsistent(String),
    /// sl2 completion of zero.
    #[error("sl2 completion of the zero element")]
    Sl2OfZero,
    /// Dynkin label outside {0,1,2}.
    #[error("Dynkin label out of range: {0}")]
    LabelOutOfRange(String),
    /// No coefficient assignment realizes a table representative.
    #[error("no coefficient assignment realizes representative of `{0}`")]
    RepresentativeFailed(String),
    /// Matrix expected to be nilpotent is not.
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    /// Matrix operation on incompatible shapes.
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    /// `ad h` input not diagonal.
    #[error("ad-depth requires a diagonal h")]
    NonDiagonalH,
    /// A basis element of the algebra is not an eigenvector of `ad h`.
    #[error("basis element is not an ad-h eigenvector")]
    NotAnEigenvector,
    /// A factor that is not cyclotomic remained, signalling a model bug.
    #[error("polynomial has a non-cyclotomic factor: {0}")]
    NonCyclotomic(String),
    /// Catch-all for malformed embedded data (should never fire on the
    /// shipped dataset; guards the parser).
    #[error("corrupt dataset: {0}")]
    CorruptDataset(String),
}

use thiserror::Error;

/// Errors surfaced by the exact decision paths.
///
/// Most operations in this crate are total on valid inputs; the variants
/// here signal caller bugs (precondition violations) or genuine failures
/// of the numeric oracles, never "unknown" verdicts.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("polynomial is not squarefree (nonconstant gcd with its derivative)")]
    NotSquarefree,
    #[error("interval endpoints are not ordered (lo >= hi)")]
    EmptyInterval,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("Newton polygon has degree {0}, expected 6")]
    PolygonDegree(usize),
    #[error("cyclotomic index {0} is not one of 7, 9, 28, 36")]
    UnsupportedCyclotomic(u32),
    #[error("numeric root finder did not converge")]
    RootFinderDiverged,
}

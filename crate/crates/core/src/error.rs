use num::BigInt;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("|{0}| exceeds the factorization bound {1}")]
    BoundExceeded(BigInt, u64),
    #[error("{0} is not an odd prime")]
    EvenOrCompositeModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank {0} is not supported by this operation")]
    UnsupportedRank(usize),
    #[error("the basis-change matrix is singular")]
    SingularMatrix,
    #[error("structure constants are not antisymmetric")]
    NotAntisymmetric,
    #[error("structure constants violate the Jacobi identity")]
    JacobiFailed,
    #[error("the algebra is not simple")]
    NotSimple,
    #[error("the involution is not of Cartan type")]
    NotCartanType,
    #[error("the matrix is not an involutive automorphism with a one-dimensional fixed space")]
    NotInvolutiveAutomorphism,
    #[error("hypothesis violated: half the fixed-vector norm is a nonzero square")]
    HypothesisViolated,
    #[error("the algebra is split at the given place")]
    SplitLocally,
    #[error("the dyadic place is outside the scope of this criterion")]
    EvenPrime,
    #[error("the algebra is not obtainable")]
    NotObtainable,
    #[error("the class is trivial")]
    TrivialClass,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::boxed::Box;
use alloc::string::String;

use crate::algebra::Violation;
use crate::linalg::Matrix;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("malformed scalar {0:?}")]
    ScalarSyntax(String),
    #[error("{value} cannot be reduced mod {modulus}: denominator divisible by p")]
    NonReducible { value: String, modulus: u32 },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("operators {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("empty operator family")]
    EmptyInput,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("Leibniz identity fails: {0}")]
    IdentityViolated(Box<Violation>),
    #[error("invalid basis labels: {0}")]
    BadLabels(String),
    #[error("{operation} requires characteristic 0")]
    WrongCharacteristic { operation: &'static str },
    #[error("{operation} requires a prime field")]
    NeedsPrimeField { operation: &'static str },
    #[error("characteristic polynomial of {context} does not split over the ground field")]
    NonSplit {
        context: String,
        operator: Box<Matrix>,
    },
    #[error("lattice needs {required} subspaces, budget allows {allowed}")]
    BudgetExceeded { required: u128, allowed: u64 },
    #[error("lattice wall-clock budget of {seconds}s exhausted")]
    TimeBudgetExceeded { seconds: u64 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("characteristic clash: {0}")]
    CharacteristicClash(String),
    #[error("undecidable: {0}")]
    Undecidable(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

use std::io;

use thiserror::Error;

/// Violations of the composition input shape.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecViolation {
    #[error("transforming function must take at least one variable")]
    NullaryTransform,
    #[error(
        "transforming function has arity {expected} but {found} argument functions were given"
    )]
    ArgumentCount { expected: usize, found: usize },
    #[error(
        "argument function {position} uses a different alphabet than the transforming function"
    )]
    AlphabetMismatch { position: usize },
    #[error("argument function {position} has arity {found}, expected {expected}")]
    ArityMismatch {
        position: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet needs at least 2 symbols, got {0}")]
    RadixTooSmall(usize),
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("invalid symbol token {0:?}")]
    InvalidSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("digit {digit} out of range for radix {radix}")]
    InvalidDigit { digit: u32, radix: u32 },
    #[error("address {address} out of range for a table of {len} cells")]
    AddressOutOfRange { address: usize, len: usize },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("tuple has {found} components but the function has arity {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("tables are defined over different alphabets")]
    AlphabetMismatch,
    #[error("invalid composition: {0}")]
    CompositionSpec(#[from] SpecViolation),
    #[error("{radix}^{arity} cells exceeds the budget of {budget} cells")]
    ResourceLimit {
        radix: usize,
        arity: usize,
        budget: usize,
    },
    #[error(
        "inconsistent instance: argument addresses {first} and {second} map to transform address \
         {transform_address} but require different values"
    )]
    Inconsistent {
        first: usize,
        second: usize,
        transform_address: usize,
    },
    #[error("invalid position {position} for a transforming function of arity {arity}")]
    InvalidPosition { position: usize, arity: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("radix {0} does not fit in one byte per value")]
    UnsupportedRadix(usize),
    #[error("malformed binary table: {0}")]
    Format(String),
    #[error("payload truncated: needed byte at offset {offset}, file holds {len} bytes")]
    TruncatedPayload { offset: u64, len: u64 },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

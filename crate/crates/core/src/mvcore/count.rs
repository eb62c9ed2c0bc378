use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::mvcore::address::table_len;

/// Exponents above this are refused; `2^(2^28)` already occupies 32 MiB.
const MAX_EXPONENT: usize = 1 << 28;

/// An exact, arbitrary-precision count of functions or solutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SolutionCount(BigUint);

impl SolutionCount {
    pub fn zero() -> Self {
        SolutionCount(BigUint::zero())
    }

    pub fn one() -> Self {
        SolutionCount(BigUint::one())
    }

    /// `base^exp` computed exactly.
    pub fn power(base: usize, exp: usize) -> Self {
        let exp = u32::try_from(exp).expect("exponent exceeds u32");
        SolutionCount(BigUint::from(base).pow(exp))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for SolutionCount {
    fn from(v: BigUint) -> Self {
        SolutionCount(v)
    }
}

impl From<u64> for SolutionCount {
    fn from(v: u64) -> Self {
        SolutionCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for SolutionCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl std::iter::Product for SolutionCount {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        SolutionCount(iter.map(|c| c.0).product())
    }
}

impl fmt::Display for SolutionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Number of distinct r-valued functions of `arity` variables, `r^(r^n)`.
pub fn count_functions(radix: usize, arity: usize) -> Result<SolutionCount> {
    if radix < 2 {
        return Err(Error::RadixTooSmall(radix));
    }
    match table_len(radix, arity) {
        Some(cells) if cells <= MAX_EXPONENT => Ok(SolutionCount::power(radix, cells)),
        _ => Err(Error::ResourceLimit {
            radix,
            arity,
            budget: MAX_EXPONENT,
        }),
    }
}

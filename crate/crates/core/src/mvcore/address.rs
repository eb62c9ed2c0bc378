//! Mixed-radix addressing of argument tuples.
//!
//! A tuple `(t_1, ..., t_n)` over radix `r` has address
//! `t_1 * r^(n-1) + ... + t_n`, so the first variable is the most significant
//! digit and lexicographic tuple order coincides with numeric address order.

use std::fmt;

use crate::error::{Error, Result};
use crate::mvcore::alphabet::{Alphabet, Digit};

/// Number of cells `r^n` in a table, or `None` on overflow.
pub fn table_len(radix: usize, arity: usize) -> Option<usize> {
    let exp = u32::try_from(arity).ok()?;
    radix.checked_pow(exp)
}

/// An n-tuple of value indices; `n = 0` is the single empty tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArgTuple(Vec<Digit>);

impl ArgTuple {
    pub fn new(digits: Vec<Digit>) -> Self {
        ArgTuple(digits)
    }

    pub fn from_symbols<S: AsRef<str>>(alphabet: &Alphabet, symbols: &[S]) -> Result<Self> {
        alphabet.digits(symbols).map(ArgTuple)
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_digits(self) -> Vec<Digit> {
        self.0
    }

    pub fn address(&self, radix: usize) -> Result<usize> {
        address(&self.0, radix)
    }

    pub fn from_address(address: usize, radix: usize, arity: usize) -> Result<Self> {
        tuple_from_address(address, radix, arity)
    }

    pub fn to_symbols<'a>(&self, alphabet: &'a Alphabet) -> Result<Vec<&'a str>> {
        self.0.iter().map(|&d| alphabet.symbol(d)).collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayTuple {
            tuple: self,
            alphabet,
        }
    }
}

impl From<Vec<Digit>> for ArgTuple {
    fn from(digits: Vec<Digit>) -> Self {
        ArgTuple(digits)
    }
}

struct DisplayTuple<'a> {
    tuple: &'a ArgTuple,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayTuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &d) in self.tuple.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match self.alphabet.symbol(d) {
                Ok(s) => f.write_str(s)?,
                Err(_) => write!(f, "#{d}")?,
            }
        }
        f.write_str(")")
    }
}

/// Big-endian mixed-radix address of `digits`.
pub fn address(digits: &[Digit], radix: usize) -> Result<usize> {
    let mut acc: usize = 0;
    for &digit in digits {
        if digit as usize >= radix {
            return Err(Error::InvalidDigit {
                digit,
                radix: radix as u32,
            });
        }
        acc = acc
            .checked_mul(radix)
            .and_then(|v| v.checked_add(digit as usize))
            .ok_or(Error::ResourceLimit {
                radix,
                arity: digits.len(),
                budget: usize::MAX,
            })?;
    }
    Ok(acc)
}

/// Inverse of [`address`] for tuples of length `arity`.
pub fn tuple_from_address(address: usize, radix: usize, arity: usize) -> Result<ArgTuple> {
    let mut digits = vec![0; arity];
    write_digits(address, radix, &mut digits)?;
    Ok(ArgTuple(digits))
}

/// Decodes `address` into `out` in place, first slot most significant.
pub(crate) fn write_digits(address: usize, radix: usize, out: &mut [Digit]) -> Result<()> {
    let len = table_len(radix, out.len());
    if len.is_some_and(|len| address >= len) {
        return Err(Error::AddressOutOfRange {
            address,
            len: len.unwrap_or(usize::MAX),
        });
    }
    let mut rest = address;
    for slot in out.iter_mut().rev() {
        *slot = (rest % radix) as Digit;
        rest /= radix;
    }
    Ok(())
}

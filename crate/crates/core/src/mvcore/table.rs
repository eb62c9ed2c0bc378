use std::fmt;

use crate::error::{Error, Result};
use crate::mvcore::address::{address, table_len, write_digits, ArgTuple};
use crate::mvcore::alphabet::{Alphabet, Digit};

/// Largest table (in cells) that operations materialize by default.
pub const DEFAULT_CELL_BUDGET: usize = 1 << 28;

/// `r^n`, refused with [`Error::ResourceLimit`] when it exceeds `budget`.
pub fn cells_within(radix: usize, arity: usize, budget: usize) -> Result<usize> {
    match table_len(radix, arity) {
        Some(len) if len <= budget => Ok(len),
        _ => Err(Error::ResourceLimit {
            radix,
            arity,
            budget,
        }),
    }
}

/// A dense truth table of an r-valued function of `arity` variables.
///
/// `values[k]` is the function value at the argument tuple with address `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruthTable {
    alphabet: Alphabet,
    arity: usize,
    values: Vec<Digit>,
}

impl TruthTable {
    /// Builds a table from value indices in address order.
    pub fn new(alphabet: Alphabet, arity: usize, values: Vec<Digit>) -> Result<Self> {
        let expected = table_len(alphabet.radix(), arity).ok_or(Error::ResourceLimit {
            radix: alphabet.radix(),
            arity,
            budget: usize::MAX,
        })?;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: values.len(),
            });
        }
        for &v in &values {
            alphabet.check_digit(v)?;
        }
        Ok(TruthTable {
            alphabet,
            arity,
            values,
        })
    }

    /// Builds a table from value symbols in address order.
    pub fn from_symbols<S: AsRef<str>>(
        alphabet: Alphabet,
        arity: usize,
        values: &[S],
    ) -> Result<Self> {
        if let Some(expected) = table_len(alphabet.radix(), arity) {
            if values.len() != expected {
                return Err(Error::LengthMismatch {
                    expected,
                    found: values.len(),
                });
            }
        }
        let digits = alphabet.digits(values)?;
        TruthTable::new(alphabet, arity, digits)
    }

    /// Tabulates `f` over every argument tuple in ascending address order.
    pub fn from_fn<F>(alphabet: Alphabet, arity: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[Digit]) -> Digit,
    {
        let len = cells_within(alphabet.radix(), arity, DEFAULT_CELL_BUDGET)?;
        let radix = alphabet.radix();
        let mut tuple = vec![0; arity];
        let mut values = Vec::with_capacity(len);
        for k in 0..len {
            write_digits(k, radix, &mut tuple)?;
            values.push(f(&tuple));
        }
        TruthTable::new(alphabet, arity, values)
    }

    pub fn constant(alphabet: Alphabet, arity: usize, value: Digit) -> Result<Self> {
        alphabet.check_digit(value)?;
        let len = cells_within(alphabet.radix(), arity, DEFAULT_CELL_BUDGET)?;
        TruthTable::new(alphabet, arity, vec![value; len])
    }

    /// The function returning its `position`-th argument (0-based).
    pub fn projection(alphabet: Alphabet, arity: usize, position: usize) -> Result<Self> {
        if position >= arity {
            return Err(Error::InvalidPosition { position, arity });
        }
        TruthTable::from_fn(alphabet, arity, |t| t[position])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn radix(&self) -> usize {
        self.alphabet.radix()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: even an arity-0 table holds one cell.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Digit] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Digit> {
        self.values
    }

    pub fn value_at(&self, address: usize) -> Result<Digit> {
        self.values
            .get(address)
            .copied()
            .ok_or(Error::AddressOutOfRange {
                address,
                len: self.values.len(),
            })
    }

    /// Address formation followed by lookup.
    pub fn evaluate(&self, tuple: &ArgTuple) -> Result<Digit> {
        self.evaluate_digits(tuple.digits())
    }

    pub fn evaluate_digits(&self, digits: &[Digit]) -> Result<Digit> {
        if digits.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: digits.len(),
            });
        }
        Ok(self.values[address(digits, self.radix())?])
    }

    pub fn evaluate_symbols<S: AsRef<str>>(&self, symbols: &[S]) -> Result<&str> {
        if symbols.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: symbols.len(),
            });
        }
        let digits = self.alphabet.digits(symbols)?;
        let value = self.evaluate_digits(&digits)?;
        self.alphabet.symbol(value)
    }

    pub fn symbol_values(&self) -> impl Iterator<Item = &str> + '_ {
        self.values
            .iter()
            .map(move |&v| self.alphabet.symbols()[v as usize].as_str())
    }

    pub(crate) fn ensure_same_alphabet(&self, other: &TruthTable) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruthTable")
            .field("alphabet", &self.alphabet)
            .field("arity", &self.arity)
            .field("values", &self.symbol_values().collect::<Vec<_>>())
            .finish()
    }
}

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Value index into an [`Alphabet`].
pub type Digit = u32;

/// An ordered set of `r >= 2` distinct symbol tokens.
///
/// Symbol `i` has value index `i`. Cloning is cheap; tables built over the
/// same alphabet share one allocation.
#[derive(Clone)]
pub struct Alphabet {
    inner: Arc<Inner>,
}

struct Inner {
    symbols: Vec<String>,
    lookup: HashMap<String, Digit>,
}

/// A token is usable as a symbol when it survives every serialized form:
/// whitespace-separated text, bracketed vector lines and NUL-separated
/// binary symbol blocks.
pub fn is_valid_symbol(token: &str) -> bool {
    !token.is_empty()
        && !token
            .chars()
            .any(|c| c.is_whitespace() || c == '\0' || c == '[' || c == ']')
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() < 2 {
            return Err(Error::RadixTooSmall(symbols.len()));
        }
        if Digit::try_from(symbols.len()).is_err() {
            return Err(Error::UnsupportedRadix(symbols.len()));
        }
        let mut lookup = HashMap::with_capacity(symbols.len());
        for (index, symbol) in symbols.iter().enumerate() {
            if !is_valid_symbol(symbol) {
                return Err(Error::InvalidSymbol(symbol.clone()));
            }
            if lookup.insert(symbol.clone(), index as Digit).is_some() {
                return Err(Error::DuplicateSymbol(symbol.clone()));
            }
        }
        Ok(Alphabet {
            inner: Arc::new(Inner { symbols, lookup }),
        })
    }

    /// The first `r` lowercase letters, `a`, `b`, `c`, ...
    pub fn letters(radix: usize) -> Result<Self> {
        if radix > 26 {
            return Err(Error::UnsupportedRadix(radix));
        }
        Alphabet::new((b'a'..b'a' + radix as u8).map(|c| (c as char).to_string()))
    }

    pub fn radix(&self) -> usize {
        self.inner.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.inner.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Result<Digit> {
        self.inner
            .lookup
            .get(symbol)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_owned()))
    }

    pub fn symbol(&self, digit: Digit) -> Result<&str> {
        self.inner
            .symbols
            .get(digit as usize)
            .map(String::as_str)
            .ok_or(Error::InvalidDigit {
                digit,
                radix: self.radix() as u32,
            })
    }

    pub fn check_digit(&self, digit: Digit) -> Result<()> {
        if (digit as usize) < self.radix() {
            Ok(())
        } else {
            Err(Error::InvalidDigit {
                digit,
                radix: self.radix() as u32,
            })
        }
    }

    /// Resolves a sequence of symbols to value indices.
    pub fn digits<I, S>(&self, symbols: I) -> Result<Vec<Digit>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        symbols
            .into_iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.symbols == other.inner.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet")
            .field(&self.inner.symbols)
            .finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.symbols.join(", "))
    }
}

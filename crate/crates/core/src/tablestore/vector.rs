//! Bracketed vector lines, `[v v ... v]`.
//!
//! [`VectorOrder::Table`] lists values by ascending address;
//! [`VectorOrder::Paper`] lists them from the highest address down, the
//! customary way of writing a function as a single vector.

use crate::error::{Error, Result};
use crate::mvcore::{Alphabet, TruthTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VectorOrder {
    #[default]
    Table,
    Paper,
}

pub fn emit_vector_line(f: &TruthTable, order: VectorOrder) -> String {
    let mut values: Vec<&str> = f.symbol_values().collect();
    if order == VectorOrder::Paper {
        values.reverse();
    }
    format!("[{}]", values.join(" "))
}

/// Parses a vector line over `alphabet`, inferring the arity from its length.
pub fn parse_vector_line(
    line: &str,
    alphabet: &Alphabet,
    order: VectorOrder,
) -> Result<TruthTable> {
    let parse_err = |reason: &str| Error::Parse {
        line: 1,
        reason: reason.to_owned(),
    };
    let body = line
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err("vector line must be enclosed in `[` and `]`"))?;
    let mut values: Vec<&str> = body.split_whitespace().collect();
    if order == VectorOrder::Paper {
        values.reverse();
    }
    let arity = arity_for_len(alphabet.radix(), values.len()).ok_or_else(|| {
        parse_err(&format!(
            "{} values is not a power of the radix {}",
            values.len(),
            alphabet.radix()
        ))
    })?;
    TruthTable::from_symbols(alphabet.clone(), arity, &values)
}

fn arity_for_len(radix: usize, len: usize) -> Option<usize> {
    let mut cells = 1usize;
    let mut arity = 0;
    while cells < len {
        cells = cells.checked_mul(radix)?;
        arity += 1;
    }
    (cells == len).then_some(arity)
}

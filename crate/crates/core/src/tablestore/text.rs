//! Self-describing text form:
//!
//! ```text
//! mvlf 1
//! radix 4 arity 1
//! a b c d
//! a a c b
//! ```
//!
//! Values follow in ascending address order and may span several lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::mvcore::{table_len, Alphabet, TruthTable};

pub const TEXT_MAGIC: &str = "mvlf";
pub const TEXT_VERSION: u32 = 1;

pub fn emit_text(f: &TruthTable) -> String {
    let mut out = String::new();
    writeln!(out, "{TEXT_MAGIC} {TEXT_VERSION}").unwrap();
    writeln!(out, "radix {} arity {}", f.radix(), f.arity()).unwrap();
    out.push_str(&f.alphabet().symbols().join(" "));
    out.push('\n');
    for (i, s) in f.symbol_values().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(s);
    }
    out.push('\n');
    out
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn parse_text(doc: &str) -> Result<TruthTable> {
    let mut lines = doc.lines().map(|l| l.trim_end_matches('\r'));

    let magic = lines.next().ok_or_else(|| parse_err(1, "empty document"))?;
    match magic.split_whitespace().collect::<Vec<_>>()[..] {
        [TEXT_MAGIC, v] if v.parse() == Ok(TEXT_VERSION) => {}
        [TEXT_MAGIC, v] => return Err(parse_err(1, format!("unsupported version `{v}`"))),
        _ => return Err(parse_err(1, "expected `mvlf 1`")),
    }

    let header = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing `radix r arity n` line"))?;
    let (radix, arity) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["radix", r, "arity", n] => {
            let r: usize = r
                .parse()
                .map_err(|_| parse_err(2, format!("invalid radix `{r}`")))?;
            let n: usize = n
                .parse()
                .map_err(|_| parse_err(2, format!("invalid arity `{n}`")))?;
            (r, n)
        }
        _ => return Err(parse_err(2, "expected `radix r arity n`")),
    };

    let symbol_line = lines
        .next()
        .ok_or_else(|| parse_err(3, "missing symbol line"))?;
    let symbols: Vec<&str> = symbol_line.split_whitespace().collect();
    if symbols.len() != radix {
        return Err(parse_err(
            3,
            format!(
                "radix {radix} declared but {} symbols listed",
                symbols.len()
            ),
        ));
    }
    let alphabet =
        Alphabet::new(symbols.iter().copied()).map_err(|e| parse_err(3, e.to_string()))?;

    let expected = table_len(radix, arity)
        .ok_or_else(|| parse_err(2, format!("table of {radix}^{arity} cells is too large")))?;
    let values: Vec<&str> = lines.flat_map(str::split_whitespace).collect();
    if values.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: values.len(),
        });
    }
    TruthTable::from_symbols(alphabet, arity, &values)
}

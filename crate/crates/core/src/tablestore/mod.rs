//! Serialized forms of truth tables and evaluation from storage.

pub mod binary;
pub mod stored;
pub mod text;
pub mod vector;

use std::path::Path;

pub use binary::{read_binary, read_binary_header, to_binary_bytes, write_binary, BinaryHeader};
pub use stored::{PositionedRead, StoredTable};
pub use text::{emit_text, parse_text};
pub use vector::{emit_vector_line, parse_vector_line, VectorOrder};

use crate::error::{Error, Result};
use crate::mvcore::TruthTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Binary,
    Vector,
}

/// Guesses the format from the leading bytes.
pub fn detect_format(bytes: &[u8]) -> Option<Format> {
    if bytes.starts_with(&binary::MAGIC) {
        return Some(Format::Binary);
    }
    let text = std::str::from_utf8(bytes).ok()?.trim_start();
    if text.starts_with(text::TEXT_MAGIC) {
        Some(Format::Text)
    } else if text.starts_with('[') {
        Some(Format::Vector)
    } else {
        None
    }
}

/// Decodes a self-describing (text or binary) table.
pub fn decode_table(bytes: &[u8]) -> Result<TruthTable> {
    match detect_format(bytes) {
        Some(Format::Binary) => read_binary(bytes),
        Some(Format::Text) => parse_text(std::str::from_utf8(bytes).expect("checked by detect")),
        Some(Format::Vector) => Err(Error::Format(
            "a bare vector line carries no alphabet".into(),
        )),
        None => Err(Error::Format("unrecognized table format".into())),
    }
}

pub fn load_table(path: impl AsRef<Path>) -> Result<TruthTable> {
    decode_table(&std::fs::read(path)?)
}

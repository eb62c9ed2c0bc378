//! Binary table layout, all integers little-endian:
//!
//! | bytes | field                                         |
//! |-------|-----------------------------------------------|
//! | 4     | magic `ATLF`                                  |
//! | 1     | version `0x01`                                |
//! | 4     | radix `r` (u32)                               |
//! | 4     | arity `n` (u32)                               |
//! | 4     | symbol block length (u32)                     |
//! | ...   | symbols, each UTF-8 and terminated by NUL     |
//! | r^n   | payload, one value index per byte             |

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::mvcore::{table_len, Alphabet, TruthTable};

pub const MAGIC: [u8; 4] = *b"ATLF";
pub const VERSION: u8 = 1;
/// Bytes before the symbol block.
pub const FIXED_HEADER_LEN: usize = 17;

/// Decoded header of a binary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryHeader {
    pub alphabet: Alphabet,
    pub arity: usize,
    pub symbol_block_len: usize,
    pub cells: usize,
}

impl BinaryHeader {
    pub fn payload_offset(&self) -> u64 {
        (FIXED_HEADER_LEN + self.symbol_block_len) as u64
    }

    pub fn total_len(&self) -> u64 {
        self.payload_offset() + self.cells as u64
    }
}

fn symbol_block(alphabet: &Alphabet) -> Vec<u8> {
    let mut block = Vec::new();
    for s in alphabet.symbols() {
        block.extend_from_slice(s.as_bytes());
        block.push(0);
    }
    block
}

/// Writes `f` and returns the number of bytes written.
pub fn write_binary<W: Write>(f: &TruthTable, mut sink: W) -> Result<u64> {
    let radix = f.radix();
    if radix > u8::MAX as usize {
        return Err(Error::UnsupportedRadix(radix));
    }
    let arity = u32::try_from(f.arity()).map_err(|_| Error::Format("arity exceeds u32".into()))?;
    let block = symbol_block(f.alphabet());
    let block_len =
        u32::try_from(block.len()).map_err(|_| Error::Format("symbol block exceeds u32".into()))?;

    let mut header = Vec::with_capacity(FIXED_HEADER_LEN + block.len());
    header.extend_from_slice(&MAGIC);
    header.push(VERSION);
    header.extend_from_slice(&(radix as u32).to_le_bytes());
    header.extend_from_slice(&arity.to_le_bytes());
    header.extend_from_slice(&block_len.to_le_bytes());
    header.extend_from_slice(&block);
    sink.write_all(&header)?;

    let payload: Vec<u8> = f.values().iter().map(|&v| v as u8).collect();
    sink.write_all(&payload)?;
    sink.flush()?;
    Ok((header.len() + payload.len()) as u64)
}

pub fn to_binary_bytes(f: &TruthTable) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    write_binary(f, &mut out)?;
    Ok(out)
}

/// Validates the fixed header and returns `(radix, arity, symbol block length)`.
pub(crate) fn decode_fixed_header(bytes: &[u8; FIXED_HEADER_LEN]) -> Result<(usize, usize, usize)> {
    if bytes[..4] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    if bytes[4] != VERSION {
        return Err(Error::Format(format!("unsupported version {}", bytes[4])));
    }
    let word = |at: usize| u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap()) as usize;
    let (radix, arity, block_len) = (word(5), word(9), word(13));
    if !(2..=u8::MAX as usize).contains(&radix) {
        return Err(Error::Format(format!("radix {radix} out of range")));
    }
    Ok((radix, arity, block_len))
}

pub(crate) fn decode_symbol_block(
    block: &[u8],
    radix: usize,
    arity: usize,
) -> Result<BinaryHeader> {
    let body = block
        .strip_suffix(&[0])
        .ok_or_else(|| Error::Format("symbol block is not NUL-terminated".into()))?;
    let symbols = body
        .split(|&b| b == 0)
        .map(|s| {
            std::str::from_utf8(s)
                .map(str::to_owned)
                .map_err(|_| Error::Format("symbol is not valid UTF-8".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    if symbols.len() != radix {
        return Err(Error::Format(format!(
            "radix {radix} declared but {} symbols stored",
            symbols.len()
        )));
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| Error::Format(e.to_string()))?;
    let cells = table_len(radix, arity)
        .ok_or_else(|| Error::Format(format!("{radix}^{arity} cells overflow")))?;
    Ok(BinaryHeader {
        alphabet,
        arity,
        symbol_block_len: block.len(),
        cells,
    })
}

pub fn read_binary_header<R: Read>(mut source: R) -> Result<BinaryHeader> {
    let mut fixed = [0u8; FIXED_HEADER_LEN];
    read_exact_or_format(&mut source, &mut fixed)?;
    let (radix, arity, block_len) = decode_fixed_header(&fixed)?;
    let mut block = Vec::new();
    source
        .by_ref()
        .take(block_len as u64)
        .read_to_end(&mut block)?;
    if block.len() != block_len {
        return Err(Error::Format("truncated symbol block".into()));
    }
    decode_symbol_block(&block, radix, arity)
}

pub fn read_binary<R: Read>(mut source: R) -> Result<TruthTable> {
    let header = read_binary_header(&mut source)?;
    let mut payload = Vec::new();
    source
        .by_ref()
        .take(header.cells as u64)
        .read_to_end(&mut payload)?;
    if payload.len() != header.cells {
        return Err(Error::TruncatedPayload {
            offset: header.payload_offset() + payload.len() as u64,
            len: header.payload_offset() + payload.len() as u64,
        });
    }
    let mut extra = [0u8; 1];
    if source.read(&mut extra)? != 0 {
        return Err(Error::Format("trailing bytes after payload".into()));
    }
    let values = payload.into_iter().map(u32::from).collect();
    TruthTable::new(header.alphabet, header.arity, values).map_err(|e| Error::Format(e.to_string()))
}

fn read_exact_or_format<R: Read>(source: &mut R, buf: &mut [u8]) -> Result<()> {
    source.read_exact(buf).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::Format("truncated header".into())
        } else {
            Error::Io(e)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternary() -> TruthTable {
        TruthTable::from_symbols(Alphabet::letters(4).unwrap(), 1, &["a", "a", "c", "b"]).unwrap()
    }

    #[test]
    fn exact_bytes() {
        let bytes = to_binary_bytes(&quaternary()).unwrap();
        let mut expected = b"ATLF\x01".to_vec();
        expected.extend_from_slice(&[4, 0, 0, 0, 1, 0, 0, 0, 8, 0, 0, 0]);
        expected.extend_from_slice(b"a\0b\0c\0d\0");
        expected.extend_from_slice(&[0, 0, 2, 1]);
        assert_eq!(bytes.len(), 29);
        assert_eq!(bytes, expected);
        assert_eq!(read_binary(&bytes[..]).unwrap(), quaternary());
    }

    #[test]
    fn constant_payload_is_one_byte() {
        let f = TruthTable::constant(Alphabet::letters(3).unwrap(), 0, 2).unwrap();
        let bytes = to_binary_bytes(&f).unwrap();
        assert_eq!(bytes.len(), FIXED_HEADER_LEN + 6 + 1);
        assert_eq!(*bytes.last().unwrap(), 2);
    }

    #[test]
    fn radix_above_255_rejected() {
        let ab = Alphabet::new((0..256).map(|i| format!("s{i}"))).unwrap();
        let f = TruthTable::constant(ab, 0, 0).unwrap();
        assert!(matches!(
            write_binary(&f, Vec::new()),
            Err(Error::UnsupportedRadix(256))
        ));
    }

    #[test]
    fn corrupt_inputs() {
        let good = to_binary_bytes(&quaternary()).unwrap();

        let mut bad_magic = good.clone();
        bad_magic[0] = b'X';
        assert!(matches!(read_binary(&bad_magic[..]), Err(Error::Format(_))));

        let mut bad_version = good.clone();
        bad_version[4] = 2;
        assert!(matches!(
            read_binary(&bad_version[..]),
            Err(Error::Format(_))
        ));

        let mut bad_value = good.clone();
        *bad_value.last_mut().unwrap() = 4;
        assert!(matches!(read_binary(&bad_value[..]), Err(Error::Format(_))));

        assert!(matches!(
            read_binary(&good[..good.len() - 1]),
            Err(Error::TruncatedPayload { .. })
        ));
        assert!(matches!(read_binary(&good[..10]), Err(Error::Format(_))));

        let mut trailing = good.clone();
        trailing.push(0);
        assert!(matches!(read_binary(&trailing[..]), Err(Error::Format(_))));
    }
}

//! Evaluation against a binary table left in external storage: the argument
//! tuple is turned into an address and exactly one payload byte is read.

use std::fs::File;
use std::io;
use std::path::Path;

use crate::error::{Error, Result};
use crate::mvcore::{address, Alphabet, ArgTuple, Digit, TruthTable};
use crate::tablestore::binary::{
    decode_fixed_header, decode_symbol_block, BinaryHeader, FIXED_HEADER_LEN,
};

/// Stateless positioned reads; `&self` access allows concurrent readers.
pub trait PositionedRead {
    /// Reads up to `buf.len()` bytes at `offset`, returning how many were read.
    fn read_at(&self, buf: &mut [u8], offset: u64) -> io::Result<usize>;

    fn byte_len(&self) -> io::Result<u64>;
}

impl PositionedRead for [u8] {
    fn read_at(&self, buf: &mut [u8], offset: u64) -> io::Result<usize> {
        let start = usize::try_from(offset)
            .unwrap_or(usize::MAX)
            .min(self.len());
        let n = buf.len().min(self.len() - start);
        buf[..n].copy_from_slice(&self[start..start + n]);
        Ok(n)
    }

    fn byte_len(&self) -> io::Result<u64> {
        Ok(self.len() as u64)
    }
}

impl PositionedRead for Vec<u8> {
    fn read_at(&self, buf: &mut [u8], offset: u64) -> io::Result<usize> {
        self.as_slice().read_at(buf, offset)
    }

    fn byte_len(&self) -> io::Result<u64> {
        Ok(self.len() as u64)
    }
}

impl PositionedRead for File {
    #[cfg(unix)]
    fn read_at(&self, buf: &mut [u8], offset: u64) -> io::Result<usize> {
        std::os::unix::fs::FileExt::read_at(self, buf, offset)
    }

    #[cfg(windows)]
    fn read_at(&self, buf: &mut [u8], offset: u64) -> io::Result<usize> {
        std::os::windows::fs::FileExt::seek_read(self, buf, offset)
    }

    fn byte_len(&self) -> io::Result<u64> {
        Ok(self.metadata()?.len())
    }
}

fn read_full_at<S: PositionedRead + ?Sized>(
    source: &S,
    buf: &mut [u8],
    offset: u64,
) -> io::Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        match source.read_at(&mut buf[filled..], offset + filled as u64) {
            Ok(0) => break,
            Ok(n) => filled += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
            Err(e) => return Err(e),
        }
    }
    Ok(filled)
}

/// A binary table whose payload stays in `source`.
#[derive(Debug)]
pub struct StoredTable<S> {
    source: S,
    header: BinaryHeader,
}

impl StoredTable<File> {
    pub fn open_path(path: impl AsRef<Path>) -> Result<Self> {
        StoredTable::open(File::open(path)?)
    }
}

impl<S: PositionedRead> StoredTable<S> {
    /// Reads and validates the header only.
    pub fn open(source: S) -> Result<Self> {
        let mut fixed = [0u8; FIXED_HEADER_LEN];
        if read_full_at(&source, &mut fixed, 0)? != FIXED_HEADER_LEN {
            return Err(Error::Format("truncated header".into()));
        }
        let (radix, arity, block_len) = decode_fixed_header(&fixed)?;
        let available = source.byte_len()?.saturating_sub(FIXED_HEADER_LEN as u64);
        if (block_len as u64) > available {
            return Err(Error::Format("truncated symbol block".into()));
        }
        let mut block = vec![0u8; block_len];
        if read_full_at(&source, &mut block, FIXED_HEADER_LEN as u64)? != block_len {
            return Err(Error::Format("truncated symbol block".into()));
        }
        let header = decode_symbol_block(&block, radix, arity)?;
        Ok(StoredTable { source, header })
    }

    pub fn header(&self) -> &BinaryHeader {
        &self.header
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.header.alphabet
    }

    pub fn arity(&self) -> usize {
        self.header.arity
    }

    pub fn payload_offset(&self) -> u64 {
        self.header.payload_offset()
    }

    /// Value at `address`, read from storage.
    pub fn value_at(&self, address: usize) -> Result<Digit> {
        if address >= self.header.cells {
            return Err(Error::AddressOutOfRange {
                address,
                len: self.header.cells,
            });
        }
        let offset = self.payload_offset() + address as u64;
        let mut byte = [0u8; 1];
        if read_full_at(&self.source, &mut byte, offset)? == 0 {
            return Err(Error::TruncatedPayload {
                offset,
                len: self.source.byte_len()?,
            });
        }
        let value = Digit::from(byte[0]);
        if value as usize >= self.alphabet().radix() {
            return Err(Error::Format(format!(
                "payload byte {value} at offset {offset} exceeds radix"
            )));
        }
        Ok(value)
    }

    pub fn evaluate(&self, tuple: &ArgTuple) -> Result<Digit> {
        if tuple.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: tuple.len(),
            });
        }
        self.value_at(address(tuple.digits(), self.alphabet().radix())?)
    }

    pub fn evaluate_symbols<Sym: AsRef<str>>(&self, symbols: &[Sym]) -> Result<&str> {
        if symbols.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: symbols.len(),
            });
        }
        let tuple = ArgTuple::from_symbols(self.alphabet(), symbols)?;
        let value = self.evaluate(&tuple)?;
        self.alphabet().symbol(value)
    }

    /// Checks that storage holds exactly header plus payload.
    pub fn verify_length(&self) -> Result<()> {
        let len = self.source.byte_len()?;
        let want = self.header.total_len();
        if len < want {
            Err(Error::TruncatedPayload {
                offset: want - 1,
                len,
            })
        } else if len > want {
            Err(Error::Format("trailing bytes after payload".into()))
        } else {
            Ok(())
        }
    }

    /// Reads the whole payload into memory.
    pub fn load(&self) -> Result<TruthTable> {
        self.verify_length()?;
        let mut payload = vec![0u8; self.header.cells];
        read_full_at(&self.source, &mut payload, self.payload_offset())?;
        let values = payload.into_iter().map(Digit::from).collect();
        TruthTable::new(self.alphabet().clone(), self.arity(), values)
            .map_err(|e| Error::Format(e.to_string()))
    }

    pub fn into_inner(self) -> S {
        self.source
    }
}

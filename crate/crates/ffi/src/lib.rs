//! C ABI for the `mvlf` library.
//!
//! Tables, transform solutions and argument solution spaces cross the
//! boundary as opaque handles that the caller releases with the matching
//! `*_free` function. Every fallible call returns an [`MvlfStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`mvlf_last_error_message`]. Strings returned by the library are freed
//! with [`mvlf_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;
use std::slice;

use mvlf::inverse::{FSolutions, GSolutions};
use mvlf::tablestore::{emit_text, emit_vector_line, load_table, to_binary_bytes, VectorOrder};
use mvlf::{Alphabet, Cell, Error, FSolutionSpace, GSolution, TruthTable};

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvlfStatus {
    Ok = 0,
    /// A required pointer argument was null
    NullPointer = 1,
    /// A string argument was not valid UTF-8
    InvalidUtf8 = 2,
    /// Alphabet, symbol, digit, position or address outside its domain
    InvalidArgument = 3,
    /// Value count does not equal radix^arity
    LengthMismatch = 4,
    /// Tuple length or table arity does not match
    ArityMismatch = 5,
    /// Tables use different alphabets
    AlphabetMismatch = 6,
    /// No transforming function can satisfy the given arguments and result
    Inconsistent = 7,
    /// The operation would exceed the cell budget
    ResourceLimit = 8,
    /// Malformed text or binary input
    Format = 9,
    /// Underlying I/O failure
    Io = 10,
    /// An iterator has no further items
    Done = 11,
    /// A panic was caught at the boundary
    Internal = 12,
}

/// Opaque truth table.
pub struct MvlfTable(TruthTable);

/// Opaque result of recovering a transforming function.
pub struct MvlfGSolution(GSolution);

/// Opaque result of recovering unknown argument functions.
pub struct MvlfFSpace(FSolutionSpace);

/// Opaque iterator over transforming-function completions.
pub struct MvlfGIter {
    // borrows from `_owner`; declared first so it drops first
    iter: GSolutions<'static>,
    _owner: Box<GSolution>,
}

/// Opaque iterator over argument assignments.
pub struct MvlfFIter {
    iter: FSolutions<'static>,
    owner: Box<FSolutionSpace>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: MvlfStatus, message: String) -> MvlfStatus {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
    status
}

fn status_of(e: &Error) -> MvlfStatus {
    match e {
        Error::LengthMismatch { .. } => MvlfStatus::LengthMismatch,
        Error::ArityMismatch { .. } => MvlfStatus::ArityMismatch,
        Error::AlphabetMismatch => MvlfStatus::AlphabetMismatch,
        Error::CompositionSpec(mvlf::SpecViolation::AlphabetMismatch { .. }) => {
            MvlfStatus::AlphabetMismatch
        }
        Error::CompositionSpec(_) => MvlfStatus::ArityMismatch,
        Error::Inconsistent { .. } => MvlfStatus::Inconsistent,
        Error::ResourceLimit { .. } => MvlfStatus::ResourceLimit,
        Error::Parse { .. }
        | Error::Format(_)
        | Error::TruncatedPayload { .. }
        | Error::UnsupportedRadix(_) => MvlfStatus::Format,
        Error::Io(_) => MvlfStatus::Io,
        _ => MvlfStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> MvlfStatus {
    set_error(status_of(&e), e.to_string())
}

/// Runs `body`, converting panics into [`MvlfStatus::Internal`].
fn guard(body: impl FnOnce() -> Result<(), MvlfStatus>) -> MvlfStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(Ok(())) => MvlfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => set_error(MvlfStatus::Internal, "panic in mvlf".into()),
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, MvlfStatus> {
    p.as_ref()
        .ok_or_else(|| set_error(MvlfStatus::NullPointer, "null pointer argument".into()))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, MvlfStatus> {
    p.as_mut()
        .ok_or_else(|| set_error(MvlfStatus::NullPointer, "null output pointer".into()))
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, MvlfStatus> {
    if p.is_null() {
        return Err(set_error(
            MvlfStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| set_error(MvlfStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize) -> Result<&'a [T], MvlfStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(set_error(
            MvlfStatus::NullPointer,
            "null array argument".into(),
        ));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn tables_arg(
    p: *const *const MvlfTable,
    len: usize,
) -> Result<Vec<TruthTable>, MvlfStatus> {
    slice_arg(p, len)?
        .iter()
        .map(|&t| deref(t).map(|t| t.0.clone()))
        .collect()
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn mvlf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Frees a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mvlf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a table from `symbol_count` symbols and `value_count` value
/// indices in address order.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_new(
    symbols: *const *const c_char,
    symbol_count: usize,
    arity: usize,
    values: *const u32,
    value_count: usize,
    out: *mut *mut MvlfTable,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let symbols = slice_arg(symbols, symbol_count)?
            .iter()
            .map(|&s| str_arg(s))
            .collect::<Result<Vec<_>, _>>()?;
        let values = slice_arg(values, value_count)?.to_vec();
        let alphabet = Alphabet::new(symbols).map_err(fail)?;
        let table = TruthTable::new(alphabet, arity, values).map_err(fail)?;
        *out = Box::into_raw(Box::new(MvlfTable(table)));
        Ok(())
    })
}

/// Parses a text-format table.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_parse_text(
    text: *const c_char,
    out: *mut *mut MvlfTable,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let table = mvlf::tablestore::parse_text(str_arg(text)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(MvlfTable(table)));
        Ok(())
    })
}

/// Loads a text or binary table file.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_load(
    path: *const c_char,
    out: *mut *mut MvlfTable,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let table = load_table(Path::new(str_arg(path)?)).map_err(fail)?;
        *out = Box::into_raw(Box::new(MvlfTable(table)));
        Ok(())
    })
}

/// Writes a table in binary form.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_save_binary(
    table: *const MvlfTable,
    path: *const c_char,
) -> MvlfStatus {
    guard(|| {
        let table = deref(table)?;
        let bytes = to_binary_bytes(&table.0).map_err(fail)?;
        std::fs::write(str_arg(path)?, bytes).map_err(|e| fail(e.into()))
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_table_free(table: *mut MvlfTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_table_radix(table: *const MvlfTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.radix())
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_table_arity(table: *const MvlfTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.arity())
}

/// Number of cells, radix^arity.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_len(table: *const MvlfTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_table_value_at(
    table: *const MvlfTable,
    address: usize,
    out: *mut u32,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = deref(table)?.0.value_at(address).map_err(fail)?;
        Ok(())
    })
}

/// Evaluates at a tuple of `len` value indices.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_evaluate(
    table: *const MvlfTable,
    digits: *const u32,
    len: usize,
    out: *mut u32,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let digits = slice_arg(digits, len)?;
        *out = deref(table)?.0.evaluate_digits(digits).map_err(fail)?;
        Ok(())
    })
}

/// Copies the symbol of value index `digit` into a new string.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_symbol(
    table: *const MvlfTable,
    digit: u32,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let symbol = deref(table)?.0.alphabet().symbol(digit).map_err(fail)?;
        *out = into_c_string(symbol.to_owned());
        Ok(())
    })
}

/// Text form of a table.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_emit_text(
    table: *const MvlfTable,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = into_c_string(emit_text(&deref(table)?.0));
        Ok(())
    })
}

/// Bracketed vector line; `paper_order` lists values from the highest
/// address down.
#[no_mangle]
pub unsafe extern "C" fn mvlf_table_vector_line(
    table: *const MvlfTable,
    paper_order: bool,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let order = if paper_order {
            VectorOrder::Paper
        } else {
            VectorOrder::Table
        };
        *out = into_c_string(emit_vector_line(&deref(table)?.0, order));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_table_equal(a: *const MvlfTable, b: *const MvlfTable) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Composes `g` with `arg_count` argument tables.
#[no_mangle]
pub unsafe extern "C" fn mvlf_compose(
    g: *const MvlfTable,
    args: *const *const MvlfTable,
    arg_count: usize,
    out: *mut *mut MvlfTable,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let g = deref(g)?;
        let args = tables_arg(args, arg_count)?;
        let y = mvlf::compose_tables(&g.0, &args).map_err(fail)?;
        *out = Box::into_raw(Box::new(MvlfTable(y)));
        Ok(())
    })
}

/// Decimal string of radix^(radix^arity).
#[no_mangle]
pub unsafe extern "C" fn mvlf_count_functions(
    radix: usize,
    arity: usize,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let count = mvlf::count_functions(radix, arity).map_err(fail)?;
        *out = into_c_string(count.to_string());
        Ok(())
    })
}

/// Recovers the transforming function. On [`MvlfStatus::Inconsistent`] the
/// witness argument addresses are written to `witness` (two entries) when it
/// is non-null.
#[no_mangle]
pub unsafe extern "C" fn mvlf_solve_g(
    args: *const *const MvlfTable,
    arg_count: usize,
    y: *const MvlfTable,
    out: *mut *mut MvlfGSolution,
    witness: *mut usize,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let args = tables_arg(args, arg_count)?;
        let y = deref(y)?;
        match mvlf::solve_for_g(&args, &y.0) {
            Ok(sol) => {
                *out = Box::into_raw(Box::new(MvlfGSolution(sol)));
                Ok(())
            }
            Err(e) => {
                if let (Error::Inconsistent { first, second, .. }, false) = (&e, witness.is_null())
                {
                    *witness = *first;
                    *witness.add(1) = *second;
                }
                Err(fail(e))
            }
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_free(sol: *mut MvlfGSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_bound_count(sol: *const MvlfGSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.0.bound_count())
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_free_count(sol: *const MvlfGSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.0.free_count())
}

/// Cell of the partial transforming function: writes the bound value index,
/// or -1 for a free cell.
#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_cell(
    sol: *const MvlfGSolution,
    address: usize,
    out: *mut i64,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let cell = deref(sol)?.0.partial().cell(address).ok_or_else(|| {
            set_error(
                MvlfStatus::InvalidArgument,
                format!("address {address} out of range"),
            )
        })?;
        *out = match cell {
            Cell::Bound(v) => i64::from(v),
            Cell::Free => -1,
        };
        Ok(())
    })
}

/// Decimal string of the exact number of transforming functions.
#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_count(
    sol: *const MvlfGSolution,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = into_c_string(deref(sol)?.0.solution_count().to_string());
        Ok(())
    })
}

/// Iterator over all completions; independent of `sol`'s lifetime.
#[no_mangle]
pub unsafe extern "C" fn mvlf_gsolution_iter(
    sol: *const MvlfGSolution,
    out: *mut *mut MvlfGIter,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let owner = Box::new(deref(sol)?.0.clone());
        // SAFETY: the boxed solution lives at a stable address for as long as
        // the iterator, which is dropped before it.
        let iter = (*(owner.as_ref() as *const GSolution)).solutions();
        *out = Box::into_raw(Box::new(MvlfGIter {
            iter,
            _owner: owner,
        }));
        Ok(())
    })
}

/// Next completion, or [`MvlfStatus::Done`].
#[no_mangle]
pub unsafe extern "C" fn mvlf_giter_next(
    it: *mut MvlfGIter,
    out: *mut *mut MvlfTable,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let it = out_ptr(it)?;
        match it.iter.next() {
            Some(t) => {
                *out = Box::into_raw(Box::new(MvlfTable(t)));
                Ok(())
            }
            None => Err(MvlfStatus::Done),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_giter_free(it: *mut MvlfGIter) {
    if !it.is_null() {
        drop(Box::from_raw(it));
    }
}

/// Recovers the argument functions not listed in `known_positions`
/// (0-based positions of `g`'s variables, paired with `known_tables`).
#[no_mangle]
pub unsafe extern "C" fn mvlf_solve_f(
    g: *const MvlfTable,
    y: *const MvlfTable,
    known_positions: *const usize,
    known_tables: *const *const MvlfTable,
    known_count: usize,
    out: *mut *mut MvlfFSpace,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let positions = slice_arg(known_positions, known_count)?;
        let tables = tables_arg(known_tables, known_count)?;
        let mut known = BTreeMap::new();
        for (&p, t) in positions.iter().zip(tables) {
            if known.insert(p, t).is_some() {
                return Err(set_error(
                    MvlfStatus::InvalidArgument,
                    format!("position {p} given twice"),
                ));
            }
        }
        let space = mvlf::solve_for_f(&deref(g)?.0, &deref(y)?.0, &known).map_err(fail)?;
        *out = Box::into_raw(Box::new(MvlfFSpace(space)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_fspace_free(space: *mut MvlfFSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of unknown positions, i.e. tables per assignment.
#[no_mangle]
pub unsafe extern "C" fn mvlf_fspace_unknown_count(space: *const MvlfFSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.unknown_positions().len())
}

/// Writes the 0-based unknown positions into `out` (capacity `cap`).
#[no_mangle]
pub unsafe extern "C" fn mvlf_fspace_unknown_positions(
    space: *const MvlfFSpace,
    out: *mut usize,
    cap: usize,
) -> MvlfStatus {
    guard(|| {
        let positions = deref(space)?.0.unknown_positions();
        if cap < positions.len() {
            return Err(set_error(
                MvlfStatus::InvalidArgument,
                "buffer too small".into(),
            ));
        }
        if !positions.is_empty() {
            out_ptr(out)?;
            ptr::copy_nonoverlapping(positions.as_ptr(), out, positions.len());
        }
        Ok(())
    })
}

/// Decimal string of the exact number of assignments; `"0"` when none exist.
#[no_mangle]
pub unsafe extern "C" fn mvlf_fspace_count(
    space: *const MvlfFSpace,
    out: *mut *mut c_char,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = into_c_string(deref(space)?.0.solution_count().to_string());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_fspace_iter(
    space: *const MvlfFSpace,
    out: *mut *mut MvlfFIter,
) -> MvlfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let owner = Box::new(deref(space)?.0.clone());
        // SAFETY: see mvlf_gsolution_iter
        let iter = (*(owner.as_ref() as *const FSolutionSpace)).solutions();
        *out = Box::into_raw(Box::new(MvlfFIter { iter, owner }));
        Ok(())
    })
}

/// Next assignment: writes one new table per unknown position into `out`
/// (capacity `cap`), or returns [`MvlfStatus::Done`].
#[no_mangle]
pub unsafe extern "C" fn mvlf_fiter_next(
    it: *mut MvlfFIter,
    out: *mut *mut MvlfTable,
    cap: usize,
) -> MvlfStatus {
    guard(|| {
        let it = out_ptr(it)?;
        if cap < it.owner.unknown_positions().len() {
            return Err(set_error(
                MvlfStatus::InvalidArgument,
                "buffer too small".into(),
            ));
        }
        let tables = it.iter.next().ok_or(MvlfStatus::Done)?;
        if !tables.is_empty() {
            out_ptr(out)?;
        }
        for (i, t) in tables.into_iter().enumerate() {
            *out.add(i) = Box::into_raw(Box::new(MvlfTable(t)));
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mvlf_fiter_free(it: *mut MvlfFIter) {
    if !it.is_null() {
        drop(Box::from_raw(it));
    }
}

//! C ABI for the `isdecode` library.
//!
//! Codes and pattern enumerators are exposed as opaque handles. Every
//! fallible call returns an [`IsdStatus`]; on failure a human-readable
//! message is available from [`isd_last_error_message`] on the same thread.
//!
//! Words passed across the boundary are arrays of `uint32_t` residues in
//! the code's original column order.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isdecode::bounds::ball_volume;
use isdecode::{
    md_decode, unique_decode, CodeFile, DecodeOutcome, DecodeStatus, Error, FieldSpec, FqMatrix,
    FqVector, LinearCode, PatternEnumerator,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsdStatus {
    Ok = 0,
    /// No codeword within the decoding radius.
    Incomplete = 1,
    /// The enumerator has no further patterns.
    Exhausted = 2,
    NullPointer = 3,
    InvalidArgument = 4,
    DimensionMismatch = 5,
    NotPrime = 6,
    RankDeficient = 7,
    GuardExceeded = 8,
    UnknownDistance = 9,
    Parse = 10,
    Overflow = 11,
    Internal = 12,
}

/// Opaque linear code handle.
pub struct IsdCode {
    code: LinearCode,
}

/// Opaque pattern enumerator handle.
pub struct IsdEnumerator {
    inner: PatternEnumerator,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IsdDecodeStats {
    pub patterns_inspected: u64,
    pub syndrome_products: u64,
    /// Weight of the returned error; zero when incomplete.
    pub error_weight: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: &Error) -> IsdStatus {
    match err {
        Error::NotPrime(_) => IsdStatus::NotPrime,
        Error::DimensionMismatch { .. } | Error::FieldMismatch { .. } => IsdStatus::DimensionMismatch,
        Error::RankDeficient { .. } => IsdStatus::RankDeficient,
        Error::GuardExceeded { .. } => IsdStatus::GuardExceeded,
        Error::UnknownDistance => IsdStatus::UnknownDistance,
        Error::Parse { .. } => IsdStatus::Parse,
        _ => IsdStatus::InvalidArgument,
    }
}

struct Failure(IsdStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null() -> Failure {
    Failure(IsdStatus::NullPointer, "null pointer argument".into())
}

fn guard(f: impl FnOnce() -> Result<IsdStatus, Failure>) -> IsdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IsdStatus::Internal
        }
    }
}

unsafe fn code_ref<'a>(code: *const IsdCode) -> Result<&'a LinearCode, Failure> {
    code.as_ref().map(|c| &c.code).ok_or_else(null)
}

unsafe fn read_slice<'a>(data: *const u32, len: usize) -> Result<&'a [u32], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn write_slice(out: *mut u32, out_len: usize, src: &[u32]) -> Result<(), Failure> {
    if out_len != src.len() {
        return Err(Error::DimensionMismatch { expected: src.len(), found: out_len }.into());
    }
    if src.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null());
    }
    ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    Ok(())
}

unsafe fn read_word(code: &LinearCode, data: *const u32, len: usize) -> Result<FqVector, Failure> {
    let v = FqVector::new(code.field(), read_slice(data, len)?.to_vec())?;
    Ok(code.to_systematic_order(&v)?)
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<IsdStatus, Failure> {
    *out = Box::into_raw(Box::new(value));
    Ok(IsdStatus::Ok)
}

/// Copies the last error message of this thread into `buf` as a
/// NUL-terminated string, truncating if needed. Returns the full message
/// length in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must be null or valid for `buf_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn isd_last_error_message(buf: *mut c_char, buf_len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && buf_len > 0 {
            let n = msg.len().min(buf_len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Builds a code from a row-major `k x n` generator over GF(q).
/// `distance` is the known minimum distance, or 0 if unknown.
///
/// # Safety
/// `entries` must point to `k * n` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isd_code_from_generator(
    q: u32,
    k: usize,
    n: usize,
    entries: *const u32,
    distance: usize,
    out: *mut *mut IsdCode,
) -> IsdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let len = k.checked_mul(n).ok_or_else(|| Failure(IsdStatus::Overflow, "k * n overflows".into()))?;
        let field = FieldSpec::new(q)?;
        let g = FqMatrix::new(field, k, n, read_slice(entries, len)?.to_vec())?;
        let code = LinearCode::from_generator(&g, (distance > 0).then_some(distance))?;
        put_handle(out, IsdCode { code })
    })
}

/// Parses a code from the text file format used by the command-line tool.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isd_code_parse(text: *const c_char, out: *mut *mut IsdCode) -> IsdStatus {
    guard(|| {
        if out.is_null() || text.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(IsdStatus::Parse, "code text is not valid UTF-8".into()))?;
        let code = CodeFile::parse(text)?.to_code()?;
        put_handle(out, IsdCode { code })
    })
}

/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isd_code_free(code: *mut IsdCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isd_code_n(code: *const IsdCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.n())
}

/// # Safety
/// `code` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isd_code_k(code: *const IsdCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.k())
}

/// # Safety
/// `code` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isd_code_q(code: *const IsdCode) -> u32 {
    code.as_ref().map_or(0, |c| c.code.q())
}

/// Known minimum distance, or 0 if unknown.
///
/// # Safety
/// `code` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn isd_code_distance(code: *const IsdCode) -> usize {
    code.as_ref().and_then(|c| c.code.distance()).unwrap_or(0)
}

/// Computes the minimum distance by enumeration and stores it in the handle.
///
/// # Safety
/// `code` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isd_code_min_distance(code: *mut IsdCode, out: *mut usize) -> IsdStatus {
    guard(|| {
        let handle = code.as_mut().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let d = handle.code.min_distance()?;
        handle.code = handle.code.clone().with_distance(d)?;
        *out = d;
        Ok(IsdStatus::Ok)
    })
}

/// # Safety
/// `code` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isd_code_covering_radius(code: *const IsdCode, out: *mut usize) -> IsdStatus {
    guard(|| {
        let code = code_ref(code)?;
        if out.is_null() {
            return Err(null());
        }
        *out = code.covering_radius()?;
        Ok(IsdStatus::Ok)
    })
}

/// Encodes a length-`k` message through the systematic generator and
/// writes the length-`n` codeword.
///
/// # Safety
/// Pointers must be valid for the given lengths.
#[no_mangle]
pub unsafe extern "C" fn isd_encode(
    code: *const IsdCode,
    message: *const u32,
    message_len: usize,
    codeword: *mut u32,
    codeword_len: usize,
) -> IsdStatus {
    guard(|| {
        let code = code_ref(code)?;
        let x = FqVector::new(code.field(), read_slice(message, message_len)?.to_vec())?;
        let c = code.to_original_order(&code.encode(&x)?)?;
        write_slice(codeword, codeword_len, c.entries())?;
        Ok(IsdStatus::Ok)
    })
}

/// Writes the length-`(n - k)` syndrome of a length-`n` word.
///
/// # Safety
/// Pointers must be valid for the given lengths.
#[no_mangle]
pub unsafe extern "C" fn isd_syndrome(
    code: *const IsdCode,
    word: *const u32,
    word_len: usize,
    syndrome: *mut u32,
    syndrome_len: usize,
) -> IsdStatus {
    guard(|| {
        let code = code_ref(code)?;
        let y = read_word(code, word, word_len)?;
        write_slice(syndrome, syndrome_len, code.syndrome(&y)?.entries())?;
        Ok(IsdStatus::Ok)
    })
}

unsafe fn emit_outcome(
    code: &LinearCode,
    outcome: DecodeOutcome,
    codeword: *mut u32,
    error: *mut u32,
    stats: *mut IsdDecodeStats,
) -> Result<IsdStatus, Failure> {
    let outcome = outcome.to_original_order(code)?;
    let mut out_stats = IsdDecodeStats {
        patterns_inspected: outcome.stats.patterns_inspected,
        syndrome_products: outcome.stats.syndrome_products,
        error_weight: 0,
    };
    let status = match &outcome.status {
        DecodeStatus::Decoded { codeword: c, error: e, error_weight } => {
            if !codeword.is_null() {
                write_slice(codeword, code.n(), c.entries())?;
            }
            if !error.is_null() {
                write_slice(error, code.n(), e.entries())?;
            }
            out_stats.error_weight = *error_weight;
            IsdStatus::Ok
        }
        DecodeStatus::Incomplete => IsdStatus::Incomplete,
    };
    if let Some(s) = stats.as_mut() {
        *s = out_stats;
    }
    Ok(status)
}

/// Unique decoding up to `(d - 1) / 2`. Requires a known distance.
/// Returns `ISD_STATUS_INCOMPLETE` when no codeword lies within the radius.
/// `codeword`, `error` and `stats` may each be null; non-null buffers must
/// hold `n` values.
///
/// # Safety
/// Pointers must be valid for the given lengths.
#[no_mangle]
pub unsafe extern "C" fn isd_unique_decode(
    code: *const IsdCode,
    received: *const u32,
    received_len: usize,
    codeword: *mut u32,
    error: *mut u32,
    stats: *mut IsdDecodeStats,
) -> IsdStatus {
    guard(|| {
        let code = code_ref(code)?;
        let y = read_word(code, received, received_len)?;
        let outcome = unique_decode(code, &y)?;
        emit_outcome(code, outcome, codeword, error, stats)
    })
}

/// Minimum-distance decoding over information-set patterns of weight at
/// most `radius`. Buffer conventions match [`isd_unique_decode`].
///
/// # Safety
/// Pointers must be valid for the given lengths.
#[no_mangle]
pub unsafe extern "C" fn isd_md_decode(
    code: *const IsdCode,
    received: *const u32,
    received_len: usize,
    radius: usize,
    codeword: *mut u32,
    error: *mut u32,
    stats: *mut IsdDecodeStats,
) -> IsdStatus {
    guard(|| {
        let code = code_ref(code)?;
        let y = read_word(code, received, received_len)?;
        let outcome = md_decode(code, &y, radius)?;
        emit_outcome(code, outcome, codeword, error, stats)
    })
}

/// Number of q-ary words of length `n` within Hamming distance `t` of a
/// fixed word. Returns `ISD_STATUS_OVERFLOW` if it exceeds `uint64_t`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isd_ball_volume(n: usize, t: usize, q: u32, out: *mut u64) -> IsdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let v = ball_volume(n, t, q)?;
        *out = u64::try_from(&v).map_err(|_| Failure(IsdStatus::Overflow, format!("ball volume {v} exceeds u64")))?;
        Ok(IsdStatus::Ok)
    })
}

/// Enumerates all length-`k` vectors over GF(q) of weight at most
/// `max_weight`, in the decoder's pattern order.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isd_enum_new(
    q: u32,
    k: usize,
    max_weight: usize,
    out: *mut *mut IsdEnumerator,
) -> IsdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let field = FieldSpec::new(q)?;
        put_handle(out, IsdEnumerator { inner: PatternEnumerator::new(field, k, max_weight) })
    })
}

/// Writes the next pattern into `pattern` (length `k`), or returns
/// `ISD_STATUS_EXHAUSTED`.
///
/// # Safety
/// `it` must be a valid handle and `pattern` valid for `pattern_len` values.
#[no_mangle]
pub unsafe extern "C" fn isd_enum_next(it: *mut IsdEnumerator, pattern: *mut u32, pattern_len: usize) -> IsdStatus {
    guard(|| {
        let it = it.as_mut().ok_or_else(null)?;
        if pattern_len != it.inner.len_k() {
            return Err(Error::DimensionMismatch { expected: it.inner.len_k(), found: pattern_len }.into());
        }
        match it.inner.next() {
            Some(v) => {
                write_slice(pattern, pattern_len, v.entries())?;
                Ok(IsdStatus::Ok)
            }
            None => Ok(IsdStatus::Exhausted),
        }
    })
}

/// Patterns not yet returned. Returns `ISD_STATUS_OVERFLOW` if the count
/// exceeds `uint64_t`.
///
/// # Safety
/// `it` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isd_enum_remaining(it: *const IsdEnumerator, out: *mut u64) -> IsdStatus {
    guard(|| {
        let it = it.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let r = it.inner.count_remaining();
        *out = u64::try_from(&r).map_err(|_| Failure(IsdStatus::Overflow, format!("{r} patterns exceed u64")))?;
        Ok(IsdStatus::Ok)
    })
}

/// # Safety
/// `it` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isd_enum_free(it: *mut IsdEnumerator) {
    if !it.is_null() {
        drop(Box::from_raw(it));
    }
}

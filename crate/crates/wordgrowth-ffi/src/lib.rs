//! C ABI surface over words, word sets and the extraction driver.
//!
//! Handles returned by constructors are owned by the caller and released
//! with the matching `_free`; strings returned by `_format`/`_csv`/`_json`
//! calls are released with [`wg_string_free`]. Fallible calls return a
//! [`WgStatus`]; on failure a description is retrievable once via
//! [`wg_last_error_message`]. Handles are not thread-safe to share without
//! external synchronization, and the error slot is thread-local.
//!
//! Every pointer-taking function shares one safety contract: handle and
//! string arguments must be null or values obtained from this library (or,
//! for text, a valid null-terminated buffer) that have not yet been freed.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wordgrowth::extraction::lemma1_extract;
use wordgrowth::io::{extraction_json, format_word_set, growth_csv, parse_word_set};
use wordgrowth::periodicity::left_period;
use wordgrowth::setops::{SetError, WordSet, DEFAULT_SIZE_CAP};
use wordgrowth::word::{Alphabet, Word};

/// An owned freely reduced word.
pub struct WgWord(Word);

/// An owned, canonically sorted set of reduced words.
pub struct WgWordSet(WordSet);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    AlphabetMismatch = 4,
    SizeCapExceeded = 5,
    Precondition = 6,
    NotPeriodic = 7,
    InternalPanic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: WgStatus, message: impl AsRef<str>) -> WgStatus {
    let sanitized = message.as_ref().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(sanitized).unwrap_or_default());
    });
    status
}

fn set_error_status(e: &SetError) -> WgStatus {
    match e {
        SetError::AlphabetMismatch => WgStatus::AlphabetMismatch,
        SetError::WordOutsideAlphabet { .. } => WgStatus::ParseError,
        SetError::SizeCapExceeded { .. } | SetError::PowerSizeCapExceeded { .. } => {
            WgStatus::SizeCapExceeded
        }
        SetError::ZeroExponent => WgStatus::Precondition,
    }
}

/// Runs a fallible body under a panic guard.
fn guarded(body: impl FnOnce() -> WgStatus) -> WgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(WgStatus::InternalPanic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, WgStatus> {
    if text.is_null() {
        return Err(fail(WgStatus::NullArgument, "null text argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(WgStatus::InvalidUtf8, "text is not valid UTF-8"))
}

fn alphabet(rank: u32) -> Result<Alphabet, WgStatus> {
    Alphabet::new(rank).map_err(|e| fail(WgStatus::ParseError, e.to_string()))
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// The most recent error message for this thread, or null. The caller owns
/// the returned string and releases it with `wg_string_free`; the slot is
/// cleared by the call.
#[no_mangle]
pub extern "C" fn wg_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow_mut().take() {
        Some(message) => message.into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn wg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Words

/// Parses a word (e.g. `xYyx`, or `1` for the identity) over the first
/// `rank` generators and stores an owned handle in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_word_parse(
    text: *const c_char,
    rank: u32,
    out: *mut *mut WgWord,
) -> WgStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let alphabet = match alphabet(rank) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match Word::parse(text, alphabet) {
            Ok(word) => {
                *out = Box::into_raw(Box::new(WgWord(word)));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::ParseError, e.to_string()),
        }
    })
}

/// Releases a word handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn wg_word_free(word: *mut WgWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// The word rendered in letter notation (`1` for the identity), or null if
/// the handle is null.
#[no_mangle]
pub unsafe extern "C" fn wg_word_format(word: *const WgWord) -> *mut c_char {
    match word.as_ref() {
        Some(w) => give_string(w.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Number of letters; 0 for the identity or a null handle.
#[no_mangle]
pub unsafe extern "C" fn wg_word_length(word: *const WgWord) -> usize {
    word.as_ref().map_or(0, |w| w.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn wg_word_is_identity(word: *const WgWord) -> bool {
    word.as_ref().is_some_and(|w| w.0.is_identity())
}

/// Stores the reduced product `a·b` in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_word_concat(
    a: *const WgWord,
    b: *const WgWord,
    out: *mut *mut WgWord,
) -> WgStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return fail(WgStatus::NullArgument, "null word argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        *out = Box::into_raw(Box::new(WgWord(a.0.concat(&b.0))));
        WgStatus::Ok
    })
}

/// Stores `a⁻¹` in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_word_inverse(
    a: *const WgWord,
    out: *mut *mut WgWord,
) -> WgStatus {
    guarded(|| {
        let Some(a) = a.as_ref() else {
            return fail(WgStatus::NullArgument, "null word argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        *out = Box::into_raw(Box::new(WgWord(a.0.inverse())));
        WgStatus::Ok
    })
}

/// Stores the conjugate `by·w·by⁻¹` in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_word_conjugate(
    w: *const WgWord,
    by: *const WgWord,
    out: *mut *mut WgWord,
) -> WgStatus {
    guarded(|| {
        let (Some(w), Some(by)) = (w.as_ref(), by.as_ref()) else {
            return fail(WgStatus::NullArgument, "null word argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        *out = Box::into_raw(Box::new(WgWord(w.0.conjugated_by(&by.0))));
        WgStatus::Ok
    })
}

/// Stores whether `a·b = b·a` in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_word_commutes(
    a: *const WgWord,
    b: *const WgWord,
    out: *mut bool,
) -> WgStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return fail(WgStatus::NullArgument, "null word argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        *out = a.0.commutes(&b.0);
        WgStatus::Ok
    })
}

/// Decomposes `w = z^s·t` with `s ≥ 2` maximal and `t` a proper prefix of
/// `z`. Returns `WG_STATUS_NOT_PERIODIC` when no such decomposition exists;
/// out-arguments may individually be null when a component is not needed.
#[no_mangle]
pub unsafe extern "C" fn wg_word_left_period(
    w: *const WgWord,
    root_out: *mut *mut WgWord,
    exponent_out: *mut u32,
    tail_out: *mut *mut WgWord,
) -> WgStatus {
    guarded(|| {
        let Some(w) = w.as_ref() else {
            return fail(WgStatus::NullArgument, "null word argument");
        };
        let Some(decomposition) = left_period(&w.0) else {
            return fail(WgStatus::NotPeriodic, "the word has no periodic decomposition");
        };
        if !root_out.is_null() {
            *root_out = Box::into_raw(Box::new(WgWord(decomposition.period.clone())));
        }
        if !exponent_out.is_null() {
            *exponent_out = decomposition.exponent;
        }
        if !tail_out.is_null() {
            *tail_out = Box::into_raw(Box::new(WgWord(decomposition.tail.clone())));
        }
        WgStatus::Ok
    })
}

// ---------------------------------------------------------------------------
// Word sets

/// Parses a word set in list form — one word per line, `#` comments and
/// blank lines ignored — and stores an owned handle in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_parse(
    text: *const c_char,
    rank: u32,
    out: *mut *mut WgWordSet,
) -> WgStatus {
    guarded(|| {
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let alphabet = match alphabet(rank) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match parse_word_set(text, alphabet) {
            Ok(set) => {
                *out = Box::into_raw(Box::new(WgWordSet(set)));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::ParseError, e.to_string()),
        }
    })
}

/// Releases a set handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_free(set: *mut WgWordSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// The set in list form, one word per line in canonical order, or null for
/// a null handle.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_format(set: *const WgWordSet) -> *mut c_char {
    match set.as_ref() {
        Some(s) => give_string(format_word_set(&s.0)),
        None => ptr::null_mut(),
    }
}

/// Number of words; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_len(set: *const WgWordSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn wg_wordset_contains(
    set: *const WgWordSet,
    word: *const WgWord,
) -> bool {
    match (set.as_ref(), word.as_ref()) {
        (Some(s), Some(w)) => s.0.contains(&w.0),
        _ => false,
    }
}

/// Stores the pointwise product `A·B` in `out`; `max_size` of 0 selects the
/// default cap.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_product(
    a: *const WgWordSet,
    b: *const WgWordSet,
    max_size: usize,
    out: *mut *mut WgWordSet,
) -> WgStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return fail(WgStatus::NullArgument, "null set argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        let cap = if max_size == 0 { DEFAULT_SIZE_CAP } else { max_size };
        match a.0.product(&b.0, cap) {
            Ok(product) => {
                *out = Box::into_raw(Box::new(WgWordSet(product)));
                WgStatus::Ok
            }
            Err(e) => fail(set_error_status(&e), e.to_string()),
        }
    })
}

/// Stores the power `Aⁿ` (n ≥ 1) in `out`; `max_size` of 0 selects the
/// default cap.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_power(
    a: *const WgWordSet,
    n: u32,
    max_size: usize,
    out: *mut *mut WgWordSet,
) -> WgStatus {
    guarded(|| {
        let Some(a) = a.as_ref() else {
            return fail(WgStatus::NullArgument, "null set argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        let cap = if max_size == 0 { DEFAULT_SIZE_CAP } else { max_size };
        match a.0.power(n, cap) {
            Ok(power) => {
                *out = Box::into_raw(Box::new(WgWordSet(power)));
                WgStatus::Ok
            }
            Err(e) => fail(set_error_status(&e), e.to_string()),
        }
    })
}

/// Stores the growth table for `n = 1..=nmax` as CSV text in `out`.
#[no_mangle]
pub unsafe extern "C" fn wg_wordset_growth_csv(
    a: *const WgWordSet,
    nmax: u32,
    out: *mut *mut c_char,
) -> WgStatus {
    guarded(|| {
        let Some(a) = a.as_ref() else {
            return fail(WgStatus::NullArgument, "null set argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        let report = a.0.growth_table(nmax, DEFAULT_SIZE_CAP);
        *out = give_string(growth_csv(&report));
        WgStatus::Ok
    })
}

// ---------------------------------------------------------------------------
// Extraction

/// Runs the subset extraction on `a` and stores its trace as JSON in `out`.
/// Fails with `WG_STATUS_PRECONDITION` on an empty set or a rank-1 alphabet.
#[no_mangle]
pub unsafe extern "C" fn wg_lemma1_extract_json(
    a: *const WgWordSet,
    out: *mut *mut c_char,
) -> WgStatus {
    guarded(|| {
        let Some(a) = a.as_ref() else {
            return fail(WgStatus::NullArgument, "null set argument");
        };
        if out.is_null() {
            return fail(WgStatus::NullArgument, "null out argument");
        }
        match lemma1_extract(&a.0) {
            Ok(result) => {
                *out = give_string(extraction_json(&result));
                WgStatus::Ok
            }
            Err(e) => fail(WgStatus::Precondition, e.to_string()),
        }
    })
}

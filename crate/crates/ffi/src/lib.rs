//! C ABI over `braidcluster`.
//!
//! Words and points are opaque heap handles owned by the caller and released
//! with their `*_free` function. Every fallible call returns a [`BcStatus`];
//! on failure [`bc_last_error`] describes the problem. Strings handed out by
//! the library are released with [`bc_string_free`]. Panics never cross the
//! boundary: they are reported as [`BcStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use braidcluster::algebra::Rational;
use braidcluster::braid::{BraidWord, GroupKind};
use braidcluster::checker::{verify_presentation, CheckError, Limits};
use braidcluster::representation::{apply_word, default_base, invariant, EvalError, Point};

/// Result of every fallible call. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    NullOrEncoding = 1,
    /// Malformed word, point or group, or arity mismatch.
    Invalid = 2,
    /// The word hit a pole at the given point.
    Singular = 3,
    /// No nonsingular base point was found.
    Exhausted = 4,
    /// The input exceeds the symbolic cost limits.
    TooLarge = 5,
    /// A bug in the library; the message says where.
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcGroup {
    Braid = 0,
    FlatBraid = 1,
    Virtual = 2,
    FlatVirtual = 3,
}

impl From<BcGroup> for GroupKind {
    fn from(g: BcGroup) -> Self {
        match g {
            BcGroup::Braid => GroupKind::Braid,
            BcGroup::FlatBraid => GroupKind::FlatBraid,
            BcGroup::Virtual => GroupKind::Virtual,
            BcGroup::FlatVirtual => GroupKind::FlatVirtual,
        }
    }
}

/// A parsed braid word together with its group and strand count.
pub struct BcWord {
    inner: BraidWord,
}

/// A point with exact rational coordinates.
pub struct BcPoint {
    inner: Point<Rational>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BcStatus, String);

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        let status = match e {
            EvalError::SingularPoint { .. } => BcStatus::Singular,
            EvalError::Exhausted(_) => BcStatus::Exhausted,
            _ => BcStatus::Invalid,
        };
        Failure(status, e.to_string())
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Eval(inner) => inner.into(),
            CheckError::LengthLimitExceeded { .. } | CheckError::StrandLimitExceeded { .. } => {
                Failure(BcStatus::TooLarge, e.to_string())
            }
            other => Failure(BcStatus::Invalid, other.to_string()),
        }
    }
}

fn invalid(message: impl ToString) -> Failure {
    Failure(BcStatus::Invalid, message.to_string())
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `body`, recording the error message and containing panics.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("internal error: {what}"));
            BcStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BcStatus::NullOrEncoding, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BcStatus::NullOrEncoding, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BcStatus::NullOrEncoding, format!("null {what}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BcStatus::NullOrEncoding, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

/// Moves `value` to the heap only once `out` is known to be writable.
unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BcStatus::NullOrEncoding, "null output pointer".into()));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BcStatus::NullOrEncoding, "null output pointer".into()));
    }
    out.write(CString::new(s).expect("library strings have no nul bytes").into_raw());
    Ok(())
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on this
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn bc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn bc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word such as `"s1 r2 S1"` on `n` strands. `"1"` or an empty
/// string is the empty word.
///
/// # Safety
/// `word` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_word_parse(
    word: *const c_char,
    n: usize,
    group: BcGroup,
    out: *mut *mut BcWord,
) -> BcStatus {
    guard(|| {
        let w = BraidWord::parse(text(word)?, n, group.into()).map_err(invalid)?;
        write_boxed(out, BcWord { inner: w })
    })
}

/// # Safety
/// `w` must be null or a handle from [`bc_word_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_word_free(w: *mut BcWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of letters, or 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live word handle.
#[no_mangle]
pub unsafe extern "C" fn bc_word_len(w: *const BcWord) -> usize {
    w.as_ref().map_or(0, |w| w.inner.len())
}

/// Canonical text of the word; free with [`bc_string_free`].
///
/// # Safety
/// `w` must be a live word handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_word_to_string(w: *const BcWord, out: *mut *mut c_char) -> BcStatus {
    guard(|| write_string(out, handle(w, "word")?.inner.to_string()))
}

/// Parses comma-separated rationals, e.g. `"1,2,-3/4,1"`.
///
/// # Safety
/// `coords` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_point_parse(coords: *const c_char, out: *mut *mut BcPoint) -> BcStatus {
    guard(|| {
        let p: Point<Rational> = text(coords)?.parse()?;
        write_boxed(out, BcPoint { inner: p })
    })
}

/// The default base point for the word's group and strand count.
///
/// # Safety
/// `w` must be a live word handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_point_default(w: *const BcWord, out: *mut *mut BcPoint) -> BcStatus {
    guard(|| {
        let w = &handle(w, "word")?.inner;
        let p = default_base(w.group(), w.strands());
        write_boxed(out, BcPoint { inner: p })
    })
}

/// # Safety
/// `p` must be null or a point handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_point_free(p: *mut BcPoint) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of coordinates, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live point handle.
#[no_mangle]
pub unsafe extern "C" fn bc_point_arity(p: *const BcPoint) -> usize {
    p.as_ref().map_or(0, |p| p.inner.arity())
}

/// Comma-separated coordinates; free with [`bc_string_free`].
///
/// # Safety
/// `p` must be a live point handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_point_to_string(p: *const BcPoint, out: *mut *mut c_char) -> BcStatus {
    guard(|| write_string(out, handle(p, "point")?.inner.to_string()))
}

/// Image of `p` under the word, as a new point. No base-point retries: a
/// pole gives [`BcStatus::Singular`].
///
/// # Safety
/// `w` and `p` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_apply_word(w: *const BcWord, p: *const BcPoint, out: *mut *mut BcPoint) -> BcStatus {
    guard(|| {
        let image = apply_word(&handle(w, "word")?.inner, &handle(p, "point")?.inner)?;
        write_boxed(out, BcPoint { inner: image })
    })
}

/// Invariant report as JSON, with the same fields as the command line.
/// `base` may be null for the default base; a singular base is replaced by
/// seeded pseudo-random bases. Free the string with [`bc_string_free`].
///
/// # Safety
/// `w` must be a live word handle, `base` null or a live point handle, and
/// `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_invariant_json(
    w: *const BcWord,
    base: *const BcPoint,
    seed: u64,
    out: *mut *mut c_char,
) -> BcStatus {
    guard(|| {
        let w = &handle(w, "word")?.inner;
        let base = base.as_ref().map(|p| &p.inner);
        let report = invariant(w, base, seed)?;
        let json = serde_json::to_string(&report).map_err(|e| Failure(BcStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}

/// Sets `*distinct` to 1 when the two words send `p` to different points,
/// else 0. Both words must act on the same space as `p`.
///
/// # Safety
/// All handles must be live and `distinct` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_words_differ_at(
    w1: *const BcWord,
    w2: *const BcWord,
    p: *const BcPoint,
    distinct: *mut i32,
) -> BcStatus {
    guard(|| {
        let (w1, w2, p) = (
            &handle(w1, "word")?.inner,
            &handle(w2, "word")?.inner,
            &handle(p, "point")?.inner,
        );
        if (w1.group(), w1.strands()) != (w2.group(), w2.strands()) {
            return Err(invalid("words belong to different groups"));
        }
        let (a, b) = (apply_word(w1, p)?, apply_word(w2, p)?);
        write_out(distinct, i32::from(a != b))
    })
}

/// Checks every defining relation of the group on `n` strands symbolically.
/// `*passed` is 1 when all hold. Strand counts beyond the default symbolic
/// limit give [`BcStatus::TooLarge`].
///
/// # Safety
/// `passed` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_verify_presentation(group: BcGroup, n: usize, passed: *mut i32) -> BcStatus {
    guard(|| {
        let verdicts = verify_presentation(group.into(), n, Limits::default())?;
        write_out(passed, i32::from(verdicts.iter().all(|v| v.holds)))
    })
}

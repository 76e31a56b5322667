//! C ABI for `ordsemi`.
//!
//! Structures live behind an opaque [`OsgSemigroup`] handle. Every fallible
//! call returns an [`OsgStatus`]; on failure a message is available from
//! [`osg_last_error`] until the next failing call on the same thread. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`osg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ordsemi::config::{Limits, Readings};
use ordsemi::constructions::power_semigroup;
use ordsemi::predicate::Expr;
use ordsemi::verify::{theorem_suite, TheoremId};
use ordsemi::{Classifier, GreenKind, OrderedSemigroup, Verdict};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OsgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidStructure = 3,
    OutOfRange = 4,
    UnknownName = 5,
    SizeBound = 6,
    Internal = 7,
}

/// Three-valued answer of a predicate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OsgTruth {
    False = 0,
    True = 1,
    /// The predicate presupposes a hypothesis (usually regularity) that fails.
    NotApplicable = 2,
}

/// An ordered semigroup, owned by the library.
pub struct OsgSemigroup {
    inner: OrderedSemigroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: OsgStatus, msg: impl Into<Vec<u8>>) -> OsgStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> OsgStatus) -> OsgStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(OsgStatus::Internal, "internal error"))
}

unsafe fn handle<'a>(s: *const OsgSemigroup) -> Result<&'a OrderedSemigroup, OsgStatus> {
    if s.is_null() {
        return Err(fail(OsgStatus::NullArgument, "null semigroup handle"));
    }
    Ok(&(*s).inner)
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, OsgStatus> {
    if p.is_null() {
        return Err(fail(OsgStatus::NullArgument, format!("null {what}")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(OsgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T) -> OsgStatus {
    if out.is_null() {
        return fail(OsgStatus::NullArgument, "null output pointer");
    }
    out.write(value);
    OsgStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> OsgStatus {
    match CString::new(s) {
        Ok(c) => put(out, c.into_raw()),
        Err(_) => fail(OsgStatus::Internal, "string contains NUL"),
    }
}

fn truth(v: &Verdict) -> OsgTruth {
    match v {
        Verdict::Holds => OsgTruth::True,
        Verdict::Fails(_) => OsgTruth::False,
        Verdict::NotApplicable(_) => OsgTruth::NotApplicable,
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses an `osg v1` document into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_parse(text: *const c_char, out: *mut *mut OsgSemigroup) -> OsgStatus {
    guard(|| {
        let src = try_ffi!(read_str(text, "text"));
        match ordsemi::format::parse(src) {
            Ok(s) => put(out, Box::into_raw(Box::new(OsgSemigroup { inner: s }))),
            Err(d) => fail(OsgStatus::InvalidStructure, d.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn osg_free(s: *mut OsgSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of elements.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_size(s: *const OsgSemigroup, out: *mut usize) -> OsgStatus {
    guard(|| put(out, try_ffi!(handle(s)).n()))
}

/// Index of the product `a·b`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_multiply(
    s: *const OsgSemigroup,
    a: usize,
    b: usize,
    out: *mut usize,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        if a >= s.n() || b >= s.n() {
            return fail(
                OsgStatus::OutOfRange,
                format!("element index out of range 0..{}", s.n()),
            );
        }
        put(out, s.mul(a, b))
    })
}

/// Whether `a <= b`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_leq(
    s: *const OsgSemigroup,
    a: usize,
    b: usize,
    out: *mut bool,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        if a >= s.n() || b >= s.n() {
            return fail(
                OsgStatus::OutOfRange,
                format!("element index out of range 0..{}", s.n()),
            );
        }
        put(out, s.leq(a, b))
    })
}

/// Right inverse test.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_is_right_inverse(
    s: *const OsgSemigroup,
    out: *mut OsgTruth,
) -> OsgStatus {
    guard(|| {
        put(
            out,
            truth(&Classifier::new(try_ffi!(handle(s))).is_right_inverse()),
        )
    })
}

/// Truth of one classification name, e.g. `"right_clifford"`.
///
/// # Safety
/// `s` must be a live handle, `name` NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_class(
    s: *const OsgSemigroup,
    name: *const c_char,
    out: *mut OsgTruth,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        let name = try_ffi!(read_str(name, "name"));
        let report = Classifier::with(s, Readings::default(), Limits::from_env()).classify();
        match report.get(name) {
            Some(v) => put(out, truth(v)),
            None => fail(OsgStatus::UnknownName, format!("unknown class `{name}`")),
        }
    })
}

/// Evaluates a predicate expression such as `"regular and not has_zero"`.
///
/// # Safety
/// `s` must be a live handle, `expr` NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_eval(
    s: *const OsgSemigroup,
    expr: *const c_char,
    out: *mut bool,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        let src = try_ffi!(read_str(expr, "expression"));
        match Expr::parse(src) {
            Ok(e) => put(out, e.eval(s, Readings::default(), Limits::from_env())),
            Err(err) => fail(OsgStatus::UnknownName, err.to_string()),
        }
    })
}

/// Classification report as JSON; free the string with [`osg_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_classify_json(
    s: *const OsgSemigroup,
    out: *mut *mut c_char,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        let report = Classifier::with(s, Readings::default(), Limits::from_env()).classify();
        put_string(out, report.to_json(s).to_string())
    })
}

/// Theorem report as JSON under default readings; free with [`osg_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_theorems_json(
    s: *const OsgSemigroup,
    out: *mut *mut c_char,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        let report = theorem_suite(s, TheoremId::ALL, Readings::default(), Limits::from_env());
        put_string(out, report.to_json(s).to_string())
    })
}

/// Writes the class label of each element under Green's relation `relation`
/// (one of `L`, `R`, `J`, `H`) into `labels[0..len]`. Labels are the smallest
/// index in each class. `len` must equal the structure size.
///
/// # Safety
/// `s` must be a live handle, `relation` NUL-terminated, and `labels` valid
/// for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn osg_green_classes(
    s: *const OsgSemigroup,
    relation: *const c_char,
    labels: *mut usize,
    len: usize,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        let kind: GreenKind = match try_ffi!(read_str(relation, "relation")).parse() {
            Ok(k) => k,
            Err(e) => return fail(OsgStatus::UnknownName, e),
        };
        if labels.is_null() {
            return fail(OsgStatus::NullArgument, "null labels buffer");
        }
        if len != s.n() {
            return fail(
                OsgStatus::OutOfRange,
                format!("labels buffer has {len} slots, structure has {}", s.n()),
            );
        }
        let rel = ordsemi::green_relation(s, kind);
        ptr::copy_nonoverlapping(rel.class_ids().as_ptr(), labels, len);
        OsgStatus::Ok
    })
}

/// Power semigroup of a discretely ordered structure, as a new handle.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_power(
    s: *const OsgSemigroup,
    out: *mut *mut OsgSemigroup,
) -> OsgStatus {
    guard(|| {
        let s = try_ffi!(handle(s));
        match power_semigroup(s, Limits::from_env().max_n) {
            Ok(p) => put(out, Box::into_raw(Box::new(OsgSemigroup { inner: p }))),
            Err(e @ ordsemi::Error::SizeBound { .. }) => fail(OsgStatus::SizeBound, e.to_string()),
            Err(e) => fail(OsgStatus::InvalidStructure, e.to_string()),
        }
    })
}

/// The structure as an `osg v1` document; free with [`osg_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn osg_to_text(s: *const OsgSemigroup, out: *mut *mut c_char) -> OsgStatus {
    guard(|| put_string(out, ordsemi::format::write_osg(try_ffi!(handle(s)))))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must be null or a string from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn osg_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn osg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn osg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

//! C ABI for `wpsfol`.
//!
//! Every fallible entry point returns a [`WpsfolStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can be
//! read with [`wpsfol_last_error`]. Handles are opaque and must be released
//! with the matching `*_free` function; strings returned by the library are
//! released with [`wpsfol_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wpsfol::counts::count_ambient;
use wpsfol::extactic::{certify_invariant, extactic_polynomial};
use wpsfol::foliation::validate_field;
use wpsfol::poly::{format_rational, parse_polynomial};
use wpsfol::wps::h0;
use wpsfol::{Error, ExtacticReport, Polynomial, VectorField, WeightedDegree, Weights};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WpsfolStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Precondition = 5,
    Internal = 6,
}

/// Exact sparse polynomial.
pub struct WpsfolPolynomial(Polynomial);

/// Validated quasi-homogeneous vector field.
pub struct WpsfolField(VectorField);

/// Extactic of a field with respect to all sections of one degree.
pub struct WpsfolExtactic(ExtacticReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WpsfolStatus {
    match e {
        Error::Parse { .. } | Error::ProblemFile { .. } | Error::InvalidWeights(_) => {
            WpsfolStatus::Parse
        }
        Error::InvalidField(_)
        | Error::InvalidForm(_)
        | Error::NotQuasiHomogeneous(_)
        | Error::WeightsMismatch(_)
        | Error::VarCountMismatch { .. }
        | Error::Consistency(_) => WpsfolStatus::Validation,
        _ => WpsfolStatus::Precondition,
    }
}

enum Failure {
    Null(&'static str),
    Utf8,
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WpsfolStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            WpsfolStatus::Ok
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            WpsfolStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("string is not valid UTF-8".into());
            WpsfolStatus::InvalidUtf8
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            WpsfolStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn weights(w: *const u32, len: usize) -> Result<Weights, Failure> {
    if w.is_null() {
        return Err(Failure::Null("weights"));
    }
    Ok(Weights::new(std::slice::from_raw_parts(w, len).to_vec())?)
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn wpsfol_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of monomials of weighted degree `k`.
///
/// # Safety
/// `weights_ptr` must point to `len` readable values; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_h0(
    weights_ptr: *const u32,
    len: usize,
    k: i64,
    result: *mut u64,
) -> WpsfolStatus {
    guard(|| {
        let w = weights(weights_ptr, len)?;
        *out(result, "result")? = h0(&w, k);
        Ok(())
    })
}

/// # Safety
/// `text_ptr` must be a NUL-terminated string; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_polynomial_parse(
    text_ptr: *const c_char,
    nvars: usize,
    result: *mut *mut WpsfolPolynomial,
) -> WpsfolStatus {
    guard(|| {
        let s = text(text_ptr, "text")?;
        let slot = out(result, "result")?;
        let p = parse_polynomial(s, nvars)?;
        *slot = Box::into_raw(Box::new(WpsfolPolynomial(p)));
        Ok(())
    })
}

/// Canonical text of `p`, or NULL if `p` is NULL.
///
/// # Safety
/// `p` must be NULL or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_polynomial_to_string(p: *const WpsfolPolynomial) -> *mut c_char {
    match p.as_ref() {
        Some(p) => owned_string(p.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Weighted degree of a quasi-homogeneous polynomial; fails with
/// `Validation` otherwise.
///
/// # Safety
/// `p` must be a live handle, `weights_ptr` must point to `len` values and
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_polynomial_weighted_degree(
    p: *const WpsfolPolynomial,
    weights_ptr: *const u32,
    len: usize,
    result: *mut u64,
) -> WpsfolStatus {
    guard(|| {
        let p = handle(p, "polynomial")?;
        let w = weights(weights_ptr, len)?;
        match p.0.weighted_degree(&w)? {
            WeightedDegree::Value(d) => *out(result, "result")? = d,
            WeightedDegree::NotQuasiHomogeneous => {
                return Err(Error::NotQuasiHomogeneous(p.0.to_string()).into())
            }
        }
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_polynomial_free(p: *mut WpsfolPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Builds a field from `len` component strings, one per weight.
///
/// # Safety
/// `weights_ptr` and `components` must each point to `len` entries; every
/// component must be a NUL-terminated string; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_field_new(
    weights_ptr: *const u32,
    components: *const *const c_char,
    len: usize,
    result: *mut *mut WpsfolField,
) -> WpsfolStatus {
    guard(|| {
        let w = weights(weights_ptr, len)?;
        if components.is_null() {
            return Err(Failure::Null("components"));
        }
        let slot = out(result, "result")?;
        let comps = std::slice::from_raw_parts(components, len)
            .iter()
            .map(|&c| Ok(parse_polynomial(text(c, "component")?, len)?))
            .collect::<Result<Vec<_>, Failure>>()?;
        *slot = Box::into_raw(Box::new(WpsfolField(validate_field(&w, comps)?)));
        Ok(())
    })
}

/// # Safety
/// `x` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_field_degree(
    x: *const WpsfolField,
    result: *mut u64,
) -> WpsfolStatus {
    guard(|| {
        *out(result, "result")? = handle(x, "field")?.0.degree();
        Ok(())
    })
}

/// # Safety
/// `x` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_field_free(x: *mut WpsfolField) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Tests whether `f` defines an invariant hypersurface. On success
/// `invariant` is set, and when it is true and `cofactor` is non-NULL a new
/// cofactor handle is stored there.
///
/// # Safety
/// Handles must be live; `invariant` must be writable; `cofactor` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_certify_invariant(
    x: *const WpsfolField,
    f: *const WpsfolPolynomial,
    invariant: *mut bool,
    cofactor: *mut *mut WpsfolPolynomial,
) -> WpsfolStatus {
    guard(|| {
        let x = handle(x, "field")?;
        let f = handle(f, "polynomial")?;
        let flag = out(invariant, "invariant")?;
        let cert = certify_invariant(&x.0, &f.0)?;
        *flag = cert.is_some();
        if let (Some(c), Some(slot)) = (cert, cofactor.as_mut()) {
            *slot = Box::into_raw(Box::new(WpsfolPolynomial(c.cofactor)));
        }
        Ok(())
    })
}

/// # Safety
/// `x` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_extactic_new(
    x: *const WpsfolField,
    k: u64,
    result: *mut *mut WpsfolExtactic,
) -> WpsfolStatus {
    guard(|| {
        let x = handle(x, "field")?;
        let slot = out(result, "result")?;
        *slot = Box::into_raw(Box::new(WpsfolExtactic(extactic_polynomial(&x.0, k)?)));
        Ok(())
    })
}

/// # Safety
/// `e` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_extactic_is_zero(
    e: *const WpsfolExtactic,
    result: *mut bool,
) -> WpsfolStatus {
    guard(|| {
        *out(result, "result")? = handle(e, "extactic")?.0.is_zero;
        Ok(())
    })
}

/// Predicted weighted degree `C(η,2)(d−1) + ηk`.
///
/// # Safety
/// `e` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_extactic_degree(
    e: *const WpsfolExtactic,
    result: *mut u64,
) -> WpsfolStatus {
    guard(|| {
        *out(result, "result")? = handle(e, "extactic")?.0.predicted_degree;
        Ok(())
    })
}

/// # Safety
/// `e` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_extactic_to_string(e: *const WpsfolExtactic) -> *mut c_char {
    match e.as_ref() {
        Some(e) => owned_string(e.0.extactic.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `e` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_extactic_free(e: *mut WpsfolExtactic) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Orbifold Milnor sum of a generic degree-`d` foliation, as "p/q" text
/// stored in `result`.
///
/// # Safety
/// `weights_ptr` must point to `len` values and `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wpsfol_count_ambient(
    weights_ptr: *const u32,
    len: usize,
    d: u64,
    result: *mut *mut c_char,
) -> WpsfolStatus {
    guard(|| {
        let w = weights(weights_ptr, len)?;
        let slot = out(result, "result")?;
        *slot = owned_string(format_rational(&count_ambient(&w, d)?.total));
        Ok(())
    })
}

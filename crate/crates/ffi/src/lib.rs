//! C ABI over the qpark library.
//!
//! Conventions: every function returns a [`QparkStatus`] code (or is a
//! destructor), results come back through out-pointers, polynomials are
//! opaque handles released with [`qpark_poly_free`], and every string the
//! library hands out is NUL-terminated, heap-allocated, and released with
//! [`qpark_string_free`]. Coefficients cross the boundary as decimal
//! strings; they outgrow every fixed-width integer type quickly.
//!
//! All entry points taking pointers are `unsafe`: the caller vouches that
//! string arguments are NUL-terminated, that out-pointers are writable,
//! and that handles originate from this library and are still live.
//!
//! The matching header is generated into `include/qpark.h` at build time.

use std::ffi::{CStr, CString, c_char};
use std::str::FromStr;

use qpark::parkfun::ParkingFunction;
use qpark::routes::{Route, parkq_by_route};
use qpark::verify::{Suite, run_suite};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QparkStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text failed to parse or violated a validity invariant.
    ParseError = 3,
    /// A parameter was outside its documented domain.
    DomainError = 4,
    /// A verification suite found a counterexample.
    VerifyFailed = 5,
    /// The suite name is not one of the nine known suites.
    UnknownSuite = 6,
    /// The index is past the end of the polynomial.
    OutOfRange = 7,
}

/// Computation route for [`qpark_poly`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QparkMethod {
    Enumerate = 0,
    Formula = 1,
    Recursion = 2,
    QtBridge = 3,
}

/// Statistics of one parking function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QparkStats {
    pub n: usize,
    pub area: usize,
    pub coarea: usize,
    pub dinv_primary: usize,
    pub dinv_secondary: usize,
    pub dinv_total: usize,
}

/// Opaque handle to an exact integer polynomial in q.
pub struct QparkPoly(qpark::QPoly);

unsafe fn parse_arg(text: *const c_char) -> Result<String, QparkStatus> {
    if text.is_null() {
        return Err(QparkStatus::NullPointer);
    }
    // SAFETY: the caller passes a NUL-terminated string that outlives the call.
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map(str::to_owned)
        .map_err(|_| QparkStatus::InvalidUtf8)
}

unsafe fn give_string(s: String, out: *mut *mut c_char) -> QparkStatus {
    if out.is_null() {
        return QparkStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: out was checked non-NULL; ownership moves to the caller.
            unsafe { *out = c.into_raw() };
            QparkStatus::Ok
        }
        Err(_) => QparkStatus::ParseError,
    }
}

/// Parses `"u1,...,un;v1,...,vn"` and fills `out` with its statistics.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must point to writable
/// storage for one [`QparkStats`].
#[no_mangle]
pub unsafe extern "C" fn qpark_stats(text: *const c_char, out: *mut QparkStats) -> QparkStatus {
    let text = match unsafe { parse_arg(text) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    if out.is_null() {
        return QparkStatus::NullPointer;
    }
    let pf = match ParkingFunction::parse(&text) {
        Ok(pf) => pf,
        Err(_) => return QparkStatus::ParseError,
    };
    let dinv = pf.dinv();
    // SAFETY: out was checked non-NULL and points to caller-owned storage.
    unsafe {
        *out = QparkStats {
            n: pf.len(),
            area: pf.area(),
            coarea: pf.coarea(),
            dinv_primary: dinv.primary,
            dinv_secondary: dinv.secondary,
            dinv_total: dinv.total(),
        };
    }
    QparkStatus::Ok
}

/// Like [`qpark_stats`] but returns the full report as a JSON string,
/// including the diagonal word. Free the string with [`qpark_string_free`].
///
/// # Safety
/// `text` must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qpark_stats_json(
    text: *const c_char,
    out_json: *mut *mut c_char,
) -> QparkStatus {
    let text = match unsafe { parse_arg(text) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    let pf = match ParkingFunction::parse(&text) {
        Ok(pf) => pf,
        Err(_) => return QparkStatus::ParseError,
    };
    let dinv = pf.dinv();
    let report = serde_json::json!({
        "n": pf.len(),
        "area": pf.area(),
        "coarea": pf.coarea(),
        "dinv": {"primary": dinv.primary, "secondary": dinv.secondary, "total": dinv.total()},
        "diagonal_word": pf.diagonal_word(),
    });
    unsafe { give_string(report.to_string(), out_json) }
}

/// Computes the family polynomial in `q^(coarea+dinv)` form. Pass a
/// negative `r` or `s` to sum over that diagonal count. On success the
/// caller owns the handle written to `out` and must release it with
/// [`qpark_poly_free`].
///
/// # Safety
/// `out` must point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn qpark_poly(
    a: usize,
    b: usize,
    r: i64,
    s: i64,
    method: QparkMethod,
    out: *mut *mut QparkPoly,
) -> QparkStatus {
    if out.is_null() {
        return QparkStatus::NullPointer;
    }
    let r = if r < 0 { None } else { Some(r as usize) };
    let s = if s < 0 { None } else { Some(s as usize) };
    let route = match method {
        QparkMethod::Enumerate => Route::Enumerate,
        QparkMethod::Formula => Route::Formula,
        QparkMethod::Recursion => Route::Recursion,
        QparkMethod::QtBridge => Route::QtBridge,
    };
    match parkq_by_route(a, b, r, s, route) {
        Ok(poly) => {
            // SAFETY: out was checked non-NULL; the caller owns the box.
            unsafe { *out = Box::into_raw(Box::new(QparkPoly(poly))) };
            QparkStatus::Ok
        }
        Err(_) => QparkStatus::DomainError,
    }
}

/// Degree of the polynomial, or -1 for the zero polynomial. A NULL handle
/// also reports -1.
///
/// # Safety
/// `poly` must be NULL or a live handle from [`qpark_poly`].
#[no_mangle]
pub unsafe extern "C" fn qpark_poly_degree(poly: *const QparkPoly) -> i64 {
    if poly.is_null() {
        return -1;
    }
    // SAFETY: non-NULL handles originate from qpark_poly.
    let poly = unsafe { &*poly };
    poly.0.degree().map_or(-1, |d| d as i64)
}

/// Writes the coefficient of `q^index` as a decimal string.
///
/// # Safety
/// `poly` must be a live handle; `out_coeff` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qpark_poly_coeff(
    poly: *const QparkPoly,
    index: usize,
    out_coeff: *mut *mut c_char,
) -> QparkStatus {
    if poly.is_null() {
        return QparkStatus::NullPointer;
    }
    // SAFETY: non-NULL handles originate from qpark_poly.
    let poly = unsafe { &*poly };
    if index >= poly.0.coeffs().len() {
        return QparkStatus::OutOfRange;
    }
    unsafe { give_string(poly.0.coeff(index).to_string(), out_coeff) }
}

/// Serializes the polynomial as `{"var":"q","coeffs":["c0",...]}`.
///
/// # Safety
/// `poly` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qpark_poly_json(
    poly: *const QparkPoly,
    out_json: *mut *mut c_char,
) -> QparkStatus {
    if poly.is_null() {
        return QparkStatus::NullPointer;
    }
    // SAFETY: non-NULL handles originate from qpark_poly.
    let poly = unsafe { &*poly };
    unsafe { give_string(poly.0.to_json().to_string(), out_json) }
}

/// Coefficientwise equality. NULL handles compare equal to nothing.
///
/// # Safety
/// `x` and `y` must each be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn qpark_poly_eq(x: *const QparkPoly, y: *const QparkPoly) -> bool {
    if x.is_null() || y.is_null() {
        return false;
    }
    // SAFETY: non-NULL handles originate from qpark_poly.
    unsafe { (*x).0 == (*y).0 }
}

/// Runs one verification suite. Returns `Ok` when every check passes,
/// `VerifyFailed` on a counterexample, `UnknownSuite` for a bad name.
///
/// # Safety
/// `suite` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qpark_verify(suite: *const c_char, max_n: usize) -> QparkStatus {
    let name = match unsafe { parse_arg(suite) } {
        Ok(name) => name,
        Err(status) => return status,
    };
    let suite = match Suite::from_str(&name) {
        Ok(suite) => suite,
        Err(_) => return QparkStatus::UnknownSuite,
    };
    if run_suite(suite, max_n).passed() {
        QparkStatus::Ok
    } else {
        QparkStatus::VerifyFailed
    }
}

/// Releases a polynomial handle. NULL is a no-op.
///
/// # Safety
/// `poly` must have been returned by [`qpark_poly`] and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qpark_poly_free(poly: *mut QparkPoly) {
    if !poly.is_null() {
        // SAFETY: per the contract, this box came from qpark_poly.
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Releases a string produced by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have been returned by a qpark function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qpark_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: per the contract, the CString was produced by give_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

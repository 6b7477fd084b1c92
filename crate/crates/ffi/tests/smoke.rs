//! Exercises the C ABI from Rust: status codes, handle lifecycle, string
//! ownership, and agreement between computation routes across the boundary.

use std::ffi::{CStr, CString};
use std::ptr;

use qpark_ffi::*;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

fn zero_stats() -> QparkStats {
    QparkStats { n: 0, area: 0, coarea: 0, dinv_primary: 0, dinv_secondary: 0, dinv_total: 0 }
}

unsafe fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { qpark_string_free(ptr) };
    s
}

#[test]
fn stats_roundtrip() {
    let text = c("0,1,2,2,3,0,1,1;4,6,8,1,3,2,7,5");
    let mut stats = zero_stats();
    assert_eq!(unsafe { qpark_stats(text.as_ptr(), &mut stats) }, QparkStatus::Ok);
    assert_eq!(stats.n, 8);
    assert_eq!(stats.area, 10);
    assert_eq!(stats.coarea, 18);
    assert_eq!((stats.dinv_primary, stats.dinv_secondary, stats.dinv_total), (1, 3, 4));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qpark_stats_json(text.as_ptr(), &mut json) }, QparkStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&unsafe { take_string(json) }).unwrap();
    assert_eq!(report["diagonal_word"], serde_json::json!([3, 1, 8, 5, 7, 6, 2, 4]));
}

#[test]
fn stats_error_paths() {
    let mut stats = zero_stats();
    assert_eq!(unsafe { qpark_stats(ptr::null(), &mut stats) }, QparkStatus::NullPointer);
    let bad = c("0,2;1,2");
    assert_eq!(unsafe { qpark_stats(bad.as_ptr(), &mut stats) }, QparkStatus::ParseError);
    let text = c("0;1");
    assert_eq!(unsafe { qpark_stats(text.as_ptr(), ptr::null_mut()) }, QparkStatus::NullPointer);
}

#[test]
fn poly_lifecycle_and_route_agreement() {
    let methods = [
        QparkMethod::Enumerate,
        QparkMethod::Formula,
        QparkMethod::Recursion,
        QparkMethod::QtBridge,
    ];
    let mut handles = Vec::new();
    for method in methods {
        let mut handle = ptr::null_mut();
        assert_eq!(unsafe { qpark_poly(1, 2, 1, 1, method, &mut handle) }, QparkStatus::Ok);
        handles.push(handle);
    }
    for pair in handles.windows(2) {
        assert!(unsafe { qpark_poly_eq(pair[0], pair[1]) });
    }
    assert_eq!(unsafe { qpark_poly_degree(handles[0]) }, 3);

    let mut coeff = ptr::null_mut();
    assert_eq!(unsafe { qpark_poly_coeff(handles[0], 2, &mut coeff) }, QparkStatus::Ok);
    assert_eq!(unsafe { take_string(coeff) }, "1");
    assert_eq!(
        unsafe { qpark_poly_coeff(handles[0], 9, &mut coeff) },
        QparkStatus::OutOfRange
    );

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qpark_poly_json(handles[0], &mut json) }, QparkStatus::Ok);
    assert_eq!(unsafe { take_string(json) }, r#"{"coeffs":["0","0","1","1"],"var":"q"}"#);

    for handle in handles {
        unsafe { qpark_poly_free(handle) };
    }
    unsafe { qpark_poly_free(ptr::null_mut()) };
}

#[test]
fn poly_negative_means_summed() {
    let mut whole = ptr::null_mut();
    assert_eq!(
        unsafe { qpark_poly(1, 1, -1, -1, QparkMethod::Formula, &mut whole) },
        QparkStatus::Ok
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qpark_poly_json(whole, &mut json) }, QparkStatus::Ok);
    assert_eq!(unsafe { take_string(json) }, r#"{"coeffs":["1","1","1"],"var":"q"}"#);
    unsafe { qpark_poly_free(whole) };

    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { qpark_poly(1, 1, 5, -1, QparkMethod::Enumerate, &mut bad) },
        QparkStatus::DomainError
    );
}

#[test]
fn verify_across_the_boundary() {
    let suite = c("narayana");
    assert_eq!(unsafe { qpark_verify(suite.as_ptr(), 6) }, QparkStatus::Ok);
    let bogus = c("bogus");
    assert_eq!(unsafe { qpark_verify(bogus.as_ptr(), 3) }, QparkStatus::UnknownSuite);
    assert_eq!(unsafe { qpark_verify(ptr::null(), 3) }, QparkStatus::NullPointer);
}

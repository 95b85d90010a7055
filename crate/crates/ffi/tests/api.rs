use std::ffi::{CStr, CString};
use std::ptr;

use qw22_ffi::*;

fn parse(text: &str, profile: Qw22Profile) -> (Qw22Status, *mut Qw22Element) {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { qw22_parse(c.as_ptr(), profile, &mut out) };
    (status, out)
}

fn text(x: *const Qw22Element, json: bool) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { qw22_element_to_string(x, json, &mut s) },
        Qw22Status::Ok
    );
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { qw22_string_free(s) };
    out
}

fn last_error() -> String {
    let p = qw22_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_multiply_print() {
    let (s, a) = parse("L[2]", Qw22Profile::Standard);
    assert_eq!(s, Qw22Status::Ok);
    let (_, b) = parse("L[1]", Qw22Profile::Standard);
    let mut ab = ptr::null_mut();
    assert_eq!(unsafe { qw22_multiply(a, b, &mut ab) }, Qw22Status::Ok);
    assert_eq!(text(ab, false), "q^-2 * L[1] L[2] - q^-1 * L[3]");
    let (_, direct) = parse("L[2] L[1]", Qw22Profile::Standard);
    let mut eq = false;
    assert_eq!(
        unsafe { qw22_element_equal(ab, direct, &mut eq) },
        Qw22Status::Ok
    );
    assert!(eq);
    unsafe {
        qw22_element_free(a);
        qw22_element_free(b);
        qw22_element_free(ab);
        qw22_element_free(direct);
    }
}

#[test]
fn hopf_maps() {
    let (_, t) = parse("T", Qw22Profile::Standard);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { qw22_coproduct(t, &mut d) }, Qw22Status::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { qw22_tensor_to_string(d, false, &mut s) },
        Qw22Status::Ok
    );
    assert_eq!(
        unsafe { CStr::from_ptr(s) }.to_str().unwrap(),
        "(T) (x) (T)"
    );
    unsafe { qw22_string_free(s) };

    let mut st = ptr::null_mut();
    assert_eq!(unsafe { qw22_antipode(t, &mut st) }, Qw22Status::Ok);
    assert_eq!(text(st, false), "T^-1");

    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qw22_counit(t, true, &mut c) }, Qw22Status::Ok);
    assert_eq!(
        unsafe { CStr::from_ptr(c) }.to_str().unwrap(),
        r#"{"terms":[{"eq":0,"c":"1"}]}"#
    );
    unsafe {
        qw22_string_free(c);
        qw22_tensor_free(d);
        qw22_element_free(st);
        qw22_element_free(t);
    }
}

#[test]
fn error_codes() {
    let (s, x) = parse("L[1] +", Qw22Profile::Standard);
    assert_eq!(s, Qw22Status::ParseError);
    assert!(x.is_null());
    assert!(last_error().contains("parse error"));

    assert_eq!(
        parse("L[99999999]", Qw22Profile::Standard).0,
        Qw22Status::ArithmeticBound
    );
    assert_eq!(
        parse("T", Qw22Profile::Generalized).0,
        Qw22Status::UnsupportedProfile
    );
    assert_eq!(
        parse("L[1]^-1", Qw22Profile::Standard).0,
        Qw22Status::UnsupportedInverse
    );

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qw22_parse(ptr::null(), Qw22Profile::Standard, &mut out) },
        Qw22Status::NullPointer
    );
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { qw22_parse(bad.as_ptr().cast(), Qw22Profile::Standard, &mut out) },
        Qw22Status::InvalidUtf8
    );

    let (_, g) = parse("L[1]", Qw22Profile::Generalized);
    let (_, h) = parse("L[1]", Qw22Profile::Standard);
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { qw22_coproduct(g, &mut d) },
        Qw22Status::UnsupportedProfile
    );
    let mut gh = ptr::null_mut();
    assert_eq!(
        unsafe { qw22_multiply(g, h, &mut gh) },
        Qw22Status::UnsupportedProfile
    );
    unsafe {
        qw22_element_free(g);
        qw22_element_free(h);
        qw22_element_free(ptr::null_mut());
    }

    // a successful call clears the previous message
    let (s, x) = parse("1", Qw22Profile::Standard);
    assert_eq!(s, Qw22Status::Ok);
    assert!(qw22_last_error().is_null());
    unsafe { qw22_element_free(x) };
}

#[test]
fn generalized_json_has_p_exponents() {
    let (_, x) = parse("L[1] L[0]", Qw22Profile::Generalized);
    assert!(text(x, true).contains(r#""ep":"#));
    unsafe { qw22_element_free(x) };
}

#[test]
fn check_reports() {
    let suite = CString::new("q-identities").unwrap();
    let mut report = ptr::null_mut();
    let s = unsafe { qw22_check(suite.as_ptr(), 3, 2, -2, 2, 5, 1, &mut report) };
    assert_eq!(s, Qw22Status::Ok);
    let json = unsafe { CStr::from_ptr(report) }
        .to_str()
        .unwrap()
        .to_owned();
    assert!(json.contains(r#""cases_failed":0"#), "{json}");
    unsafe { qw22_string_free(report) };

    let suite = CString::new("relation-preservation").unwrap();
    let s = unsafe { qw22_check(suite.as_ptr(), 2, 2, -2, 2, 5, 1, &mut report) };
    assert_eq!(s, Qw22Status::VerificationFailed);
    unsafe { qw22_string_free(report) };

    let suite = CString::new("bogus").unwrap();
    let s = unsafe { qw22_check(suite.as_ptr(), 2, 2, -2, 2, 5, 1, &mut report) };
    assert_eq!(s, Qw22Status::InvalidArgument);
}

//! C ABI over `qw22-core`.
//!
//! Elements and tensors are opaque heap handles released with the matching
//! `*_free` function. Strings returned through `char **` out-parameters are
//! owned by the caller and released with [`qw22_string_free`]. Every call
//! returns a [`Qw22Status`]; on failure [`qw22_last_error`] describes the
//! problem until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qw22_core::algebra::{Algebra, DeformationProfile, Element};
use qw22_core::expr::parse_element;
use qw22_core::format::{element_json, poly_json, tensor_json};
use qw22_core::hopf::{Hopf, TensorElement};
use qw22_core::suites::{self, Bounds, Suite};
use qw22_core::Error;

/// Result code of every call. Values 0-3 match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qw22Status {
    Ok = 0,
    VerificationFailed = 1,
    InvalidArgument = 2,
    ArithmeticBound = 3,
    ParseError = 4,
    UnsupportedProfile = 5,
    UnsupportedInverse = 6,
    NullPointer = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qw22Profile {
    Standard = 0,
    Generalized = 1,
}

impl From<Qw22Profile> for DeformationProfile {
    fn from(p: Qw22Profile) -> Self {
        match p {
            Qw22Profile::Standard => DeformationProfile::Standard,
            Qw22Profile::Generalized => DeformationProfile::Generalized,
        }
    }
}

/// An element of the algebra together with its deformation profile.
pub struct Qw22Element {
    profile: DeformationProfile,
    value: Element,
}

/// An element of the tensor square (standard profile).
pub struct Qw22Tensor {
    value: TensorElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(Qw22Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => Qw22Status::ParseError,
            Error::UnsupportedProfile { .. } | Error::RelationProfileMismatch { .. } => {
                Qw22Status::UnsupportedProfile
            }
            Error::UnsupportedInverse(_) => Qw22Status::UnsupportedInverse,
            _ if e.exit_code() == 3 => Qw22Status::ArithmeticBound,
            _ => Qw22Status::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<Qw22Status, Failure>;

fn guard(f: impl FnOnce() -> Outcome) -> Qw22Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            Qw22Status::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(Qw22Status::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(Qw22Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| {
        Failure(
            Qw22Status::InvalidArgument,
            "output contains a nul byte".into(),
        )
    })?;
    write(out, c.into_raw())
}

fn boxed(profile: DeformationProfile, value: Element) -> *mut Qw22Element {
    Box::into_raw(Box::new(Qw22Element { profile, value }))
}

fn require_standard(x: &Qw22Element) -> Result<(), Failure> {
    if x.profile == DeformationProfile::Standard {
        Ok(())
    } else {
        Err(Failure(
            Qw22Status::UnsupportedProfile,
            "the Hopf structure exists for the standard profile only".into(),
        ))
    }
}

/// Parses an expression and stores its normal form in `*out`.
///
/// # Safety
/// `expr` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_parse(
    expr: *const c_char,
    profile: Qw22Profile,
    out: *mut *mut Qw22Element,
) -> Qw22Status {
    guard(|| {
        let text = read_str(expr, "expr")?;
        let profile = DeformationProfile::from(profile);
        let value = parse_element(text, &Algebra::new(profile))?;
        write(out, boxed(profile, value))?;
        Ok(Qw22Status::Ok)
    })
}

/// Normal form of the product `x * y`; both operands must share a profile.
///
/// # Safety
/// `x` and `y` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_multiply(
    x: *const Qw22Element,
    y: *const Qw22Element,
    out: *mut *mut Qw22Element,
) -> Qw22Status {
    guard(|| {
        let (x, y) = (read(x, "x")?, read(y, "y")?);
        if x.profile != y.profile {
            return Err(Failure(
                Qw22Status::UnsupportedProfile,
                "operands use different profiles".into(),
            ));
        }
        let value = Algebra::new(x.profile).multiply(&x.value, &y.value)?;
        write(out, boxed(x.profile, value))?;
        Ok(Qw22Status::Ok)
    })
}

/// # Safety
/// `x` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_coproduct(
    x: *const Qw22Element,
    out: *mut *mut Qw22Tensor,
) -> Qw22Status {
    guard(|| {
        let x = read(x, "x")?;
        require_standard(x)?;
        let value = Hopf::new().coproduct(&x.value)?;
        write(out, Box::into_raw(Box::new(Qw22Tensor { value })))?;
        Ok(Qw22Status::Ok)
    })
}

/// # Safety
/// `x` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_antipode(
    x: *const Qw22Element,
    out: *mut *mut Qw22Element,
) -> Qw22Status {
    guard(|| {
        let x = read(x, "x")?;
        require_standard(x)?;
        let value = Hopf::new().antipode(&x.value)?;
        write(out, boxed(x.profile, value))?;
        Ok(Qw22Status::Ok)
    })
}

/// Counit of `x`, written as a Laurent polynomial (text, or JSON when `json` is set).
///
/// # Safety
/// `x` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_counit(
    x: *const Qw22Element,
    json: bool,
    out: *mut *mut c_char,
) -> Qw22Status {
    guard(|| {
        let x = read(x, "x")?;
        require_standard(x)?;
        let c = Hopf::new().counit(&x.value);
        let s = if json {
            poly_json(&c, x.profile.vars()).to_string()
        } else {
            c.to_string()
        };
        write_string(out, s)?;
        Ok(Qw22Status::Ok)
    })
}

/// # Safety
/// `x` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_element_to_string(
    x: *const Qw22Element,
    json: bool,
    out: *mut *mut c_char,
) -> Qw22Status {
    guard(|| {
        let x = read(x, "x")?;
        let s = if json {
            element_json(&x.value, x.profile.vars()).to_string()
        } else {
            x.value.to_string()
        };
        write_string(out, s)?;
        Ok(Qw22Status::Ok)
    })
}

/// # Safety
/// `t` must be a live tensor handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_tensor_to_string(
    t: *const Qw22Tensor,
    json: bool,
    out: *mut *mut c_char,
) -> Qw22Status {
    guard(|| {
        let t = read(t, "t")?;
        let s = if json {
            tensor_json(&t.value).to_string()
        } else {
            t.value.to_string()
        };
        write_string(out, s)?;
        Ok(Qw22Status::Ok)
    })
}

/// Stores true in `*equal` when both handles hold the same element and profile.
///
/// # Safety
/// `x` and `y` must be live element handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_element_equal(
    x: *const Qw22Element,
    y: *const Qw22Element,
    equal: *mut bool,
) -> Qw22Status {
    guard(|| {
        let (x, y) = (read(x, "x")?, read(y, "y")?);
        write(equal, x.profile == y.profile && x.value == y.value)?;
        Ok(Qw22Status::Ok)
    })
}

/// Runs a named verification suite and stores the JSON report array in
/// `*report`. Returns `QW22_STATUS_VERIFICATION_FAILED` when any case fails;
/// the report is written in that case too.
///
/// # Safety
/// `suite` must be a nul-terminated string; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw22_check(
    suite: *const c_char,
    max_index: i64,
    max_len: usize,
    k_min: i64,
    k_max: i64,
    cases: usize,
    seed: u64,
    report: *mut *mut c_char,
) -> Qw22Status {
    guard(|| {
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let bounds = Bounds {
            max_index,
            max_len,
            k_min,
            k_max,
            cases,
        };
        let reports = suites::run(suite, &bounds, seed)?;
        let json = serde_json::to_string(&reports).expect("reports serialize");
        write_string(report, json)?;
        Ok(if reports.iter().all(|r| r.passed()) {
            Qw22Status::Ok
        } else {
            Qw22Status::VerificationFailed
        })
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qw22_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `x` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw22_element_free(x: *mut Qw22Element) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `t` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw22_tensor_free(t: *mut Qw22Tensor) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw22_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        let Failure(s, _) = Error::ArithmeticBound("x".into()).into();
        assert_eq!(s, Qw22Status::ArithmeticBound);
        let Failure(s, _) = Error::IndexCap {
            index: 1 << 30,
            cap: 1 << 20,
        }
        .into();
        assert_eq!(s, Qw22Status::ArithmeticBound);
        let Failure(s, _) = Error::Usage("x".into()).into();
        assert_eq!(s, Qw22Status::InvalidArgument);
    }

    #[test]
    fn panics_are_contained() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, Qw22Status::Panic);
        assert!(!qw22_last_error().is_null());
    }
}

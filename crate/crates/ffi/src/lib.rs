//! C ABI over the `schurlie` library.
//!
//! Every fallible function returns a [`SchurlieStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`schurlie_last_error`] on the same thread. Handles are opaque and must be
//! released with the matching `*_free` function; strings returned by the
//! library are released with [`schurlie_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use schurlie::bracketing::bracketing_function;
use schurlie::error::Error;
use schurlie::lie::{BracketShape, LieElement};
use schurlie::parse::parse_lie;
use schurlie::schur::SchurElement;
use schurlie::transfer::star;
use schurlie::verify::{run_suite, Suite, VerifyOptions};

/// Result codes. `SCHURLIE_STATUS_OK` is zero; everything else is an error.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurlieStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Range = 4,
    Argument = 5,
    Dimension = 6,
    NotFound = 7,
    Resource = 8,
    NotInFiltration = 9,
    InvariantViolation = 10,
    Panic = 11,
}

/// An element of the free Lie algebra in Lyndon coordinates.
pub struct SchurlieLie(LieElement);

/// A Schur algebra element in orbit-coefficient form.
pub struct SchurlieSchur(SchurElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SchurlieStatus {
    match e {
        Error::Syntax { .. } => SchurlieStatus::Syntax,
        Error::Range { .. } => SchurlieStatus::Range,
        Error::Argument(_) => SchurlieStatus::Argument,
        Error::Dimension(_) => SchurlieStatus::Dimension,
        Error::NotFound(_) => SchurlieStatus::NotFound,
        Error::Resource(_) => SchurlieStatus::Resource,
        Error::NotInFiltration(_) => SchurlieStatus::NotInFiltration,
        Error::InvariantViolation(_) => SchurlieStatus::InvariantViolation,
    }
}

struct Failure(SchurlieStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and the last-error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SchurlieStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SchurlieStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SchurlieStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(SchurlieStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(SchurlieStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SchurlieStatus::InvariantViolation, "output contains a nul byte".into()))?;
    write_out(out, c.into_raw())
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn schurlie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn schurlie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a Lie expression such as `[x1,[x1,x2]] - 2*[x2,x1]` in rank `n`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_lie_parse(text: *const c_char, n: usize, out: *mut *mut SchurlieLie) -> SchurlieStatus {
    guard(|| {
        let a = parse_lie(read_str(text)?, n)?;
        write_out(out, Box::into_raw(Box::new(SchurlieLie(a))))
    })
}

/// Text form in the Lyndon basis.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_lie_to_string(a: *const SchurlieLie, out: *mut *mut c_char) -> SchurlieStatus {
    guard(|| write_string(out, borrow(a)?.0.to_string()))
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_lie_degree(a: *const SchurlieLie, out: *mut usize) -> SchurlieStatus {
    guard(|| write_out(out, borrow(a)?.0.degree()))
}

/// `[a, b]` as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_lie_bracket(a: *const SchurlieLie, b: *const SchurlieLie, out: *mut *mut SchurlieLie) -> SchurlieStatus {
    guard(|| {
        let c = borrow(a)?.0.bracket(&borrow(b)?.0)?;
        write_out(out, Box::into_raw(Box::new(SchurlieLie(c))))
    })
}

/// # Safety
/// `a` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn schurlie_lie_free(a: *mut SchurlieLie) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Reads the JSON form `{"n":..,"q":..,"entries":[{"u":..,"key":..,"coeff":..}]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_from_json(json: *const c_char, out: *mut *mut SchurlieSchur) -> SchurlieStatus {
    guard(|| {
        let f = SchurElement::from_json(read_str(json)?)?;
        write_out(out, Box::into_raw(Box::new(SchurlieSchur(f))))
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_to_json(f: *const SchurlieSchur, out: *mut *mut c_char) -> SchurlieStatus {
    guard(|| write_string(out, borrow(f)?.0.to_json()))
}

/// `f ∘ g` (apply `g` first).
///
/// # Safety
/// `f`, `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_compose(f: *const SchurlieSchur, g: *const SchurlieSchur, out: *mut *mut SchurlieSchur) -> SchurlieStatus {
    guard(|| {
        let h = borrow(f)?.0.compose(&borrow(g)?.0)?;
        write_out(out, Box::into_raw(Box::new(SchurlieSchur(h))))
    })
}

/// Star product `f ⋆ g` of degree `deg f + deg g`.
///
/// # Safety
/// `f`, `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_star(f: *const SchurlieSchur, g: *const SchurlieSchur, out: *mut *mut SchurlieSchur) -> SchurlieStatus {
    guard(|| {
        let h = star(&borrow(f)?.0, &borrow(g)?.0)?;
        write_out(out, Box::into_raw(Box::new(SchurlieSchur(h))))
    })
}

/// Applies `f` to a Lie element of the same degree.
///
/// # Safety
/// `f`, `a` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_apply_to_lie(f: *const SchurlieSchur, a: *const SchurlieLie, out: *mut *mut SchurlieLie) -> SchurlieStatus {
    guard(|| {
        let b = borrow(f)?.0.apply_to_lie(&borrow(a)?.0)?;
        write_out(out, Box::into_raw(Box::new(SchurlieLie(b))))
    })
}

/// # Safety
/// `f` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn schurlie_schur_free(f: *mut SchurlieSchur) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Group-ring element of a bracket shape such as `[[,],]`, in cycle notation.
///
/// # Safety
/// `shape` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_bracketing_function(shape: *const c_char, out: *mut *mut c_char) -> SchurlieStatus {
    guard(|| {
        let s: BracketShape = read_str(shape)?.parse()?;
        write_string(out, bracketing_function(&s).to_string())
    })
}

/// Runs a verification suite and writes its JSON report. `n` and
/// `max_degree` of 0 select the suite defaults. `passed` receives 1 or 0.
///
/// # Safety
/// `suite` must be a nul-terminated string; `passed` and `report_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurlie_verify(
    suite: *const c_char,
    n: usize,
    max_degree: usize,
    seed: u64,
    passed: *mut i32,
    report_json: *mut *mut c_char,
) -> SchurlieStatus {
    guard(|| {
        let suite: Suite = read_str(suite)?.parse()?;
        if passed.is_null() || report_json.is_null() {
            return Err(null());
        }
        let options = VerifyOptions {
            n: (n > 0).then_some(n),
            max_degree: (max_degree > 0).then_some(max_degree),
            seed,
            samples: None,
            generators: None,
        };
        let report = run_suite(suite, &options)?;
        write_out(passed, i32::from(report.passed))?;
        write_string(report_json, report.to_json())
    })
}

//! C ABI over the `horadam` crate.
//!
//! Objects cross the boundary as opaque handles created by `*_new` style
//! functions and released with the matching `*_free`. Every fallible call
//! returns a [`HoradamStatus`]; on failure a message is kept per thread and
//! can be read with [`horadam_last_error_message`]. Strings handed out by
//! the library must be released with [`horadam_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use horadam::{
    family_sample, general_triple, monomial_triple, parse_poly, render_identity, verify_triple,
    ClosedFormTriple, DegeneracyKind, Error, Format, SeqParams,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    Parse = 3,
    InvalidUtf8 = 4,
    NonDegenerate = 5,
    Json = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamFormat {
    Latex = 0,
    Text = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamDegeneracy {
    NonDegenerate = 0,
    DegenerateJ1 = 1,
    DegenerateJ2 = 2,
}

/// Opaque sequence parameters `(a, b, c0, c1)`.
pub struct HoradamParams(SeqParams);

/// Opaque closed-form triple `(F, G, H)` with its weight and parameters.
pub struct HoradamTriple(ClosedFormTriple);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> HoradamStatus {
    match e {
        Error::InvalidParams(_) => HoradamStatus::InvalidParams,
        Error::Parse { .. } | Error::Unsupported { .. } => HoradamStatus::Parse,
        Error::NonDegenerate => HoradamStatus::NonDegenerate,
        _ => HoradamStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status plus stored message.
fn guard(f: impl FnOnce() -> Result<(), (HoradamStatus, String)>) -> HoradamStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HoradamStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HoradamStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (HoradamStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (HoradamStatus, String) {
    (HoradamStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HoradamStatus, String)> {
    if p.is_null() {
        return Err(null_err(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HoradamStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

fn emit_triple(t: ClosedFormTriple, out: *mut *mut HoradamTriple) {
    unsafe { *out = Box::into_raw(Box::new(HoradamTriple(t))) };
}

/// Last error message on this thread, or null. Valid until the next failing
/// call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn horadam_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn horadam_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates and stores `(a, b, c0, c1)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_new(
    a: i64,
    b: i64,
    c0: i64,
    c1: i64,
    out: *mut *mut HoradamParams,
) -> HoradamStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        let p = SeqParams::new(a, b, c0, c1).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(HoradamParams(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from [`horadam_params_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_free(p: *mut HoradamParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degeneracy class. When degenerate and `ratio_root_out` is non-null, it
/// receives the geometric ratio as a `"num/den"` string to be released with
/// [`horadam_string_free`]; otherwise it is set to null.
///
/// # Safety
/// Pointers must be valid; `ratio_root_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_classify(
    p: *const HoradamParams,
    kind_out: *mut HoradamDegeneracy,
    ratio_root_out: *mut *mut c_char,
) -> HoradamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null_err("params"))?;
        if kind_out.is_null() {
            return Err(null_err("kind_out"));
        }
        let class = p.0.classify();
        *kind_out = match class.kind {
            DegeneracyKind::NonDegenerate => HoradamDegeneracy::NonDegenerate,
            DegeneracyKind::DegenerateJ1 => HoradamDegeneracy::DegenerateJ1,
            DegeneracyKind::DegenerateJ2 => HoradamDegeneracy::DegenerateJ2,
        };
        if !ratio_root_out.is_null() {
            *ratio_root_out = class
                .ratio_root
                .map_or(ptr::null_mut(), |r| into_c_string(r.to_string()));
        }
        Ok(())
    })
}

/// Canonical triple for the weight polynomial `poly` (a string in `k`, such
/// as `"k^2 + 3k - 1/2"`).
///
/// # Safety
/// Pointers must be valid and `poly` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_general(
    p: *const HoradamParams,
    poly: *const c_char,
    out: *mut *mut HoradamTriple,
) -> HoradamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null_err("params"))?;
        let text = read_str(poly, "poly")?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        let w = parse_poly(text).map_err(lib_err)?;
        emit_triple(general_triple(&w, &p.0), out);
        Ok(())
    })
}

/// Triple for the weight `k^d`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_monomial(
    p: *const HoradamParams,
    d: u32,
    out: *mut *mut HoradamTriple,
) -> HoradamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null_err("params"))?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        emit_triple(monomial_triple(d as usize, &p.0), out);
        Ok(())
    })
}

/// Family member with `F = free_poly` for a degenerate sequence.
/// Returns [`HoradamStatus::NonDegenerate`] when no family exists.
///
/// # Safety
/// Pointers must be valid and strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_family(
    p: *const HoradamParams,
    poly: *const c_char,
    free_poly: *const c_char,
    out: *mut *mut HoradamTriple,
) -> HoradamStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null_err("params"))?;
        let w = parse_poly(read_str(poly, "poly")?).map_err(lib_err)?;
        let free = parse_poly(read_str(free_poly, "free_poly")?).map_err(lib_err)?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        let t = family_sample(&w, &p.0, &free).map_err(lib_err)?;
        emit_triple(t, out);
        Ok(())
    })
}

/// Reads a triple from its JSON form.
///
/// # Safety
/// Pointers must be valid and `json` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_from_json(
    json: *const c_char,
    out: *mut *mut HoradamTriple,
) -> HoradamStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        let t: ClosedFormTriple = serde_json::from_str(text)
            .map_err(|e| (HoradamStatus::Json, format!("malformed triple JSON: {e}")))?;
        emit_triple(t, out);
        Ok(())
    })
}

/// # Safety
/// `t` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_free(t: *mut HoradamTriple) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Renders the identity. The string must be released with
/// [`horadam_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_render(
    t: *const HoradamTriple,
    format: HoradamFormat,
    out: *mut *mut c_char,
) -> HoradamStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null_err("triple"))?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        let format = match format {
            HoradamFormat::Latex => Format::Latex,
            HoradamFormat::Text => Format::Text,
            HoradamFormat::Json => Format::Json,
        };
        *out = into_c_string(render_identity(&t.0, format));
        Ok(())
    })
}

/// Checks the identity for `n = 1..=n_max`. `ok_out` receives the verdict;
/// `first_failure_out`, when non-null, receives the first failing `n` or 0.
///
/// # Safety
/// Pointers must be valid; `first_failure_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_verify(
    t: *const HoradamTriple,
    n_max: usize,
    ok_out: *mut bool,
    first_failure_out: *mut usize,
) -> HoradamStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null_err("triple"))?;
        if ok_out.is_null() {
            return Err(null_err("ok_out"));
        }
        let report = verify_triple(&t.0, n_max);
        *ok_out = report.ok;
        if !first_failure_out.is_null() {
            *first_failure_out = report.first_failure.map_or(0, |f| f.n);
        }
        Ok(())
    })
}

/// Verification report as JSON, released with [`horadam_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn horadam_triple_verify_json(
    t: *const HoradamTriple,
    n_max: usize,
    out: *mut *mut c_char,
) -> HoradamStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null_err("triple"))?;
        if out.is_null() {
            return Err(null_err("out"));
        }
        let report = verify_triple(&t.0, n_max);
        *out = into_c_string(serde_json::to_string(&report).expect("report serializes"));
        Ok(())
    })
}

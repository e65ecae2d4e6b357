//! C ABI over `aluffi_kit`.
//!
//! Every function returns an [`AkStatus`]; on failure a message is available
//! from [`ak_last_error_message`] on the same thread. Reports are opaque
//! handles released with [`ak_report_free`]; strings handed out by the library
//! are released with [`ak_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use aluffi_kit::limits::{self, Limits};
use aluffi_kit::report::{analyze_text, AnalysisReport, AnalyzeOptions};
use aluffi_kit::Error;

/// Result code of every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input: syntax errors, unknown variables, bad rings.
    InvalidInput = 3,
    /// The input violates a precondition (not reduced, singularities not isolated, ...).
    Precondition = 4,
    /// A resource ceiling or timeout was hit.
    ResourceLimit = 5,
    /// Independent computations disagreed.
    Inconsistent = 6,
    /// An index argument was out of range.
    IndexOutOfRange = 7,
    /// The library panicked; this is a bug.
    Panic = 8,
}

/// Analysis options. Zero limits mean "use the library default".
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AkOptions {
    pub projective: bool,
    pub presentations: bool,
    pub deep: bool,
    pub max_pairs: usize,
    pub max_terms: usize,
    /// Wall-clock budget in milliseconds, 0 for none.
    pub timeout_ms: u64,
}

/// Opaque analysis report.
pub struct AkReport {
    inner: AnalysisReport,
}

impl AkReport {
    pub fn report(&self) -> &AnalysisReport {
        &self.inner
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> AkStatus {
    match err {
        Error::ResourceLimit(_) => AkStatus::ResourceLimit,
        Error::Inconsistent(_) => AkStatus::Inconsistent,
        e if e.is_precondition() => AkStatus::Precondition,
        _ => AkStatus::InvalidInput,
    }
}

struct Failure(AkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AkStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            AkStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(AkStatus::NullArgument, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(AkStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn report<'a>(r: *const AkReport) -> Result<&'a AnalysisReport, Failure> {
    r.as_ref().map(|r| &r.inner).ok_or_else(|| null("report"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Default options: affine, no presentations, default limits.
#[no_mangle]
pub extern "C" fn ak_options_default() -> AkOptions {
    let l = Limits::default();
    AkOptions {
        projective: false,
        presentations: false,
        deep: false,
        max_pairs: l.max_pairs,
        max_terms: l.max_terms,
        timeout_ms: 0,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ak_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn ak_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Analyze the hypersurface `poly = 0` in the variables `vars` (comma
/// separated). `options` may be null for defaults. On success `*out` holds a
/// report to be released with `ak_report_free`.
///
/// # Safety
/// `vars` and `poly` must be null or NUL-terminated strings, `options` null or
/// valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_analyze(
    vars: *const c_char,
    poly: *const c_char,
    options: *const AkOptions,
    out: *mut *mut AkReport,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let vars = text(vars, "vars")?;
        let poly = text(poly, "poly")?;
        let o = options
            .as_ref()
            .copied()
            .unwrap_or_else(|| ak_options_default());
        let defaults = Limits::default();
        let lim = Limits {
            max_pairs: if o.max_pairs == 0 {
                defaults.max_pairs
            } else {
                o.max_pairs
            },
            max_terms: if o.max_terms == 0 {
                defaults.max_terms
            } else {
                o.max_terms
            },
            timeout: (o.timeout_ms > 0).then(|| Duration::from_millis(o.timeout_ms)),
        };
        let opts = AnalyzeOptions {
            projective: o.projective,
            presentations: o.presentations,
            deep: o.deep,
        };
        let inner = limits::scoped(lim, || analyze_text(vars, poly, opts))?;
        *out = Box::into_raw(Box::new(AkReport { inner }));
        Ok(())
    })
}

/// Parse a report from its JSON form.
///
/// # Safety
/// `json` must be null or a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_from_json(
    json: *const c_char,
    out: *mut *mut AkReport,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let inner = AnalysisReport::from_json(text(json, "json")?)
            .map_err(|e| Failure(AkStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(AkReport { inner }));
        Ok(())
    })
}

/// Release a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ak_report_free(report: *mut AkReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// JSON form of the report; release with `ak_string_free`.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_json(
    report: *const AkReport,
    out: *mut *mut c_char,
) -> AkStatus {
    guard(|| {
        let json = self::report(report)?.to_json();
        let c = CString::new(json).map_err(|e| Failure(AkStatus::Panic, e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// Human-readable summary of the report; release with `ak_string_free`.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_text(
    report: *const AkReport,
    out: *mut *mut c_char,
) -> AkStatus {
    guard(|| {
        let text = self::report(report)?.to_text().replace('\0', " ");
        let c = CString::new(text).expect("interior nuls removed");
        write(out, c.into_raw(), "out")
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ak_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether the hypersurface is locally Eulerian at every singular point.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_locally_eulerian(
    report: *const AkReport,
    out: *mut bool,
) -> AkStatus {
    guard(|| write(out, self::report(report)?.verdicts.locally_eulerian, "out"))
}

/// Whether the Jacobian ideal is of linear type.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_jacobian_linear_type(
    report: *const AkReport,
    out: *mut bool,
) -> AkStatus {
    guard(|| {
        write(
            out,
            self::report(report)?.verdicts.jacobian_linear_type,
            "out",
        )
    })
}

/// Gradient linear type of a projective hypersurface: 1 yes, 0 no, -1 when
/// the report is affine.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_gradient_linear_type(
    report: *const AkReport,
    out: *mut i32,
) -> AkStatus {
    guard(|| {
        let v = match self::report(report)?.verdicts.gradient_linear_type {
            Some(true) => 1,
            Some(false) => 0,
            None => -1,
        };
        write(out, v, "out")
    })
}

/// Number of rational singular points listed in the report.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_report_singular_point_count(
    report: *const AkReport,
    out: *mut usize,
) -> AkStatus {
    guard(|| write(out, self::report(report)?.singular_points.len(), "out"))
}

/// Milnor and Tjurina numbers at singular point `index`.
///
/// # Safety
/// `report` must be a live handle and `milnor`, `tjurina` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ak_report_milnor_tjurina(
    report: *const AkReport,
    index: usize,
    milnor: *mut u64,
    tjurina: *mut u64,
) -> AkStatus {
    guard(|| {
        let points = &self::report(report)?.singular_points;
        let p = points.get(index).ok_or_else(|| {
            Failure(
                AkStatus::IndexOutOfRange,
                format!("index {index} out of range for {} points", points.len()),
            )
        })?;
        if milnor.is_null() || tjurina.is_null() {
            return Err(null("out"));
        }
        milnor.write(p.milnor);
        tjurina.write(p.tjurina);
        Ok(())
    })
}

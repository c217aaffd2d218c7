//! C ABI over `painleve-core`.
//!
//! Every object crosses the boundary as an opaque pointer created by a
//! `plv_*_new` or computing function and released by the matching
//! `plv_*_free`. Functions return a [`PlvStatus`]; on failure the message is
//! available from [`plv_last_error`] on the same thread. Strings returned
//! through `char **` are owned by the caller and released with
//! [`plv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use painleve::cli::verify_report;
use painleve::elliptic::{half_period, EllipticCase};
use painleve::exact::mp::format_truncated;
use painleve::exact::{format_fraction, parse_rational, CoefficientTable, Params, Precision, Rational};
use painleve::laurent::{laurent_coeffs, pentagonal_coeffs};
use painleve::poles::{gamma_constant, pole_map_csv, trusted_zeros, PoleSet};
use painleve::tau::{tau_coeffs, TauMethod};
use painleve::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlvStatus {
    Ok = 0,
    NullPointer = 1,
    /// Unparseable rational, invalid UTF-8 or an argument outside the domain.
    InvalidArgument = 2,
    Unsupported = 3,
    IndexOutOfRange = 4,
    /// Non-convergence, non-generic configuration or insufficient order.
    NumericalFailure = 5,
    /// Independent computations disagreed, or a verification check failed.
    Inconsistency = 6,
    Io = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlvTauMethod {
    Bilinear = 0,
    Quartic = 1,
    TripleSum = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlvEllipticCase {
    Equianharmonic = 0,
    Lemniscatic = 1,
}

/// Exact parameters `(g2, lambda, g3)`.
pub struct PlvParams {
    inner: Params,
}

/// Exact coefficient table `a_start..=a_order`.
pub struct PlvTable {
    inner: CoefficientTable<Rational>,
}

/// Trusted zeros of a truncated tau-function.
pub struct PlvPoleSet {
    inner: PoleSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(error: &Error) -> PlvStatus {
    match error {
        Error::Parse(_) | Error::Domain(_) | Error::TruncationOrder { .. } | Error::Coverage { .. } => {
            PlvStatus::InvalidArgument
        }
        Error::Unsupported(_) => PlvStatus::Unsupported,
        Error::NumericalFailure { .. } | Error::NonGeneric(_) | Error::InsufficientOrder(_) | Error::Pole => {
            PlvStatus::NumericalFailure
        }
        Error::Inconsistency(_) => PlvStatus::Inconsistency,
        Error::Io(_) | Error::CacheVersion { .. } | Error::CacheCorrupt(_) => PlvStatus::Io,
    }
}

struct Failure(PlvStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PlvStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics to a status and recording the message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PlvStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PlvStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PlvStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PlvStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).unwrap().into_raw();
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn plv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn plv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses three exact rationals (`"3/22"`, `"-0.05"`, `"7"`).
///
/// # Safety
/// The strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_params_new(
    g2: *const c_char,
    lambda: *const c_char,
    g3: *const c_char,
    out: *mut *mut PlvParams,
) -> PlvStatus {
    guard(|| {
        let p = Params::new(
            parse_rational(read_str(g2, "g2")?)?,
            parse_rational(read_str(lambda, "lambda")?)?,
            parse_rational(read_str(g3, "g3")?)?,
        );
        write_out(out, PlvParams { inner: p })
    })
}

/// # Safety
/// `p` must be null or a handle from [`plv_params_new`].
#[no_mangle]
pub unsafe extern "C" fn plv_params_free(p: *mut PlvParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Laurent coefficients `c_0..=c_order`.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_laurent_coeffs(
    params: *const PlvParams,
    order: usize,
    out: *mut *mut PlvTable,
) -> PlvStatus {
    guard(|| {
        let p = borrow(params, "params")?;
        write_out(out, PlvTable { inner: laurent_coeffs(&p.inner, order).table().clone() })
    })
}

/// Tau coefficients `C_0..=C_order` by the chosen recursion.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_tau_coeffs(
    params: *const PlvParams,
    order: usize,
    method: PlvTauMethod,
    out: *mut *mut PlvTable,
) -> PlvStatus {
    guard(|| {
        let p = borrow(params, "params")?;
        let method = match method {
            PlvTauMethod::Bilinear => TauMethod::Bilinear,
            PlvTauMethod::Quartic => TauMethod::Quartic,
            PlvTauMethod::TripleSum => TauMethod::TripleSum,
        };
        write_out(out, PlvTable { inner: tau_coeffs(&p.inner, order, method).table().clone() })
    })
}

/// `v_1..=v_count` of the pentagonal solution.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_pentagonal_coeffs(count: usize, out: *mut *mut PlvTable) -> PlvStatus {
    guard(|| write_out(out, PlvTable { inner: pentagonal_coeffs(count) }))
}

/// First index held by the table.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plv_table_start(table: *const PlvTable) -> usize {
    table.as_ref().map_or(0, |t| t.inner.start())
}

/// Number of coefficients held.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plv_table_len(table: *const PlvTable) -> usize {
    table.as_ref().map_or(0, |t| t.inner.len())
}

/// Coefficient at `index` as an exact `p/q` string.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_table_get(table: *const PlvTable, index: usize, out: *mut *mut c_char) -> PlvStatus {
    guard(|| {
        let t = borrow(table, "table")?;
        let c = t.inner.get(index).ok_or_else(|| {
            Failure(
                PlvStatus::IndexOutOfRange,
                format!("index {index} outside {}..={}", t.inner.start(), t.inner.order()),
            )
        })?;
        write_string(out, format_fraction(c))
    })
}

/// # Safety
/// `table` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn plv_table_free(table: *mut PlvTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Zeros of the order-`order` truncated tau-function that persist at a
/// higher order, to `digits` digits.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_trusted_zeros(
    params: *const PlvParams,
    order: usize,
    digits: u32,
    out: *mut *mut PlvPoleSet,
) -> PlvStatus {
    guard(|| {
        let p = borrow(params, "params")?;
        write_out(out, PlvPoleSet { inner: trusted_zeros(&p.inner, order, digits)? })
    })
}

/// # Safety
/// `set` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plv_pole_set_len(set: *const PlvPoleSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.zeros.len())
}

/// Zero `i` rounded to doubles, with its stability (distance to the nearest
/// zero of the comparison truncation).
///
/// # Safety
/// `set` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_pole_set_get(
    set: *const PlvPoleSet,
    i: usize,
    re: *mut f64,
    im: *mut f64,
    stability: *mut f64,
) -> PlvStatus {
    guard(|| {
        let s = borrow(set, "pole set")?;
        let z = s.inner.zeros.get(i).ok_or_else(|| {
            Failure(PlvStatus::IndexOutOfRange, format!("zero {i} of {}", s.inner.zeros.len()))
        })?;
        if re.is_null() || im.is_null() || stability.is_null() {
            return Err(null("output pointer"));
        }
        let (x, y) = z.value.to_f64();
        *re = x;
        *im = y;
        *stability = z.stability.to_f64();
        Ok(())
    })
}

/// The set as `re,im,stability` CSV with `decimals` places.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_pole_set_csv(set: *const PlvPoleSet, decimals: u32, out: *mut *mut c_char) -> PlvStatus {
    guard(|| {
        let s = borrow(set, "pole set")?;
        write_string(out, pole_map_csv(&s.inner, decimals)?)
    })
}

/// # Safety
/// `set` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn plv_pole_set_free(set: *mut PlvPoleSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// The pentagonal constant `gamma` to `digits` decimals (at most 40),
/// confirmed by two independent methods.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_gamma_constant(digits: u32, out: *mut *mut c_char) -> PlvStatus {
    guard(|| {
        let g = gamma_constant(digits)?;
        write_string(out, format_truncated(&g.value, digits))
    })
}

/// Real half-period `omega_1` to `digits` decimals.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plv_half_period(case: PlvEllipticCase, digits: u32, out: *mut *mut c_char) -> PlvStatus {
    guard(|| {
        let case = match case {
            PlvEllipticCase::Equianharmonic => EllipticCase::equianharmonic(),
            PlvEllipticCase::Lemniscatic => EllipticCase::lemniscatic(),
        };
        let w = half_period(&case, Precision::digits(digits + 10))?;
        write_string(out, format_truncated(&w, digits))
    })
}

/// Runs the exact cross-check suite at order `order`. Returns
/// [`PlvStatus::Inconsistency`] if any check fails.
///
/// # Safety
/// `params` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn plv_verify(params: *const PlvParams, order: usize) -> PlvStatus {
    guard(|| {
        let p = borrow(params, "params")?;
        let (report, ok) = verify_report(&p.inner, order)?;
        if ok {
            return Ok(());
        }
        let failed: Vec<&str> =
            report.sections[0].rows.iter().filter(|r| r[1] == "fail").map(|r| r[0].as_str()).collect();
        Err(Failure(PlvStatus::Inconsistency, format!("failed checks: {}", failed.join(", "))))
    })
}

//! C interface to the order-polynomial engines.
//!
//! Polynomials cross the boundary as opaque handles. Every fallible call
//! returns an [`OrderpolyStatus`]; on failure the message is available from
//! [`orderpoly_last_error`] on the same thread. Strings returned through out
//! parameters are owned by the caller and released with
//! [`orderpoly_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use orderpoly::cli::{omega_of_named, omega_of_shape, Engine};
use orderpoly::detformulas::{kreweras_value, DetError};
use orderpoly::exactpoly::{analyze, factorial, rational_to_string, Polynomial, Rational};
use orderpoly::geometry::GeometryError;
use orderpoly::posets::PosetError;
use orderpoly::schubert::SchubertError;
use orderpoly::shapes::{parse_shape, Shape};
use orderpoly::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderpolyStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    MalformedShape = 3,
    UnknownPoset = 4,
    InvalidInput = 5,
    CapExceeded = 6,
    EngineMismatch = 7,
    OutOfRange = 8,
    Internal = 9,
    Panic = 10,
}

/// Engine selection; `Default` picks the natural engine for the input.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderpolyEngine {
    Default = 0,
    Bruteforce = 1,
    Kreweras = 2,
    Gk = 3,
    Macdonald = 4,
    Recursion = 5,
}

/// Output syntax for [`orderpoly_polynomial_format`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderpolyFormat {
    Plain = 0,
    Latex = 1,
    Json = 2,
}

/// Exact rational polynomial. Opaque to C.
pub struct OrderpolyPolynomial {
    poly: Polynomial,
    /// Number of poset elements, when the polynomial is an order polynomial.
    size: usize,
}

/// Root statistics filled by [`orderpoly_polynomial_analyze`].
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderpolyAnalysis {
    pub nonnegative_coeffs: bool,
    pub log_concave: bool,
    pub unimodal: bool,
    pub real_rooted: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: Error) -> OrderpolyStatus {
    let e = e.root();
    set_error(&e.to_string());
    match e {
        Error::Shape(_) => OrderpolyStatus::MalformedShape,
        Error::Poset(PosetError::UnknownName(_)) => OrderpolyStatus::UnknownPoset,
        Error::Poset(PosetError::CapExceeded { .. } | PosetError::TooLarge { .. })
        | Error::Schubert(SchubertError::CapExceeded { .. }) => OrderpolyStatus::CapExceeded,
        Error::EngineMismatch(_) => OrderpolyStatus::EngineMismatch,
        Error::Poset(_)
        | Error::Det(DetError::EmptyShape | DetError::NotRibbon | DetError::NotClosed | DetError::NotProper(_))
        | Error::Geometry(GeometryError::BadArc { .. })
        | Error::Schubert(_) => OrderpolyStatus::InvalidInput,
        _ => OrderpolyStatus::Internal,
    }
}

/// Runs `f`, turning panics into [`OrderpolyStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), OrderpolyStatus>) -> OrderpolyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            OrderpolyStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            OrderpolyStatus::Panic
        }
    }
}

fn fail(status: OrderpolyStatus, msg: &str) -> OrderpolyStatus {
    set_error(msg);
    status
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, OrderpolyStatus> {
    if s.is_null() {
        return Err(fail(OrderpolyStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(OrderpolyStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn poly_ref<'a>(p: *const OrderpolyPolynomial) -> Result<&'a OrderpolyPolynomial, OrderpolyStatus> {
    p.as_ref().ok_or_else(|| fail(OrderpolyStatus::NullArgument, "null polynomial handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), OrderpolyStatus> {
    if out.is_null() {
        return Err(fail(OrderpolyStatus::NullArgument, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), OrderpolyStatus> {
    let c = CString::new(s).map_err(|_| fail(OrderpolyStatus::Internal, "string contains NUL"))?;
    write_out(out, c.into_raw())
}

fn engine_of(e: OrderpolyEngine) -> Option<Engine> {
    match e {
        OrderpolyEngine::Default => None,
        OrderpolyEngine::Bruteforce => Some(Engine::Bruteforce),
        OrderpolyEngine::Kreweras => Some(Engine::Kreweras),
        OrderpolyEngine::Gk => Some(Engine::Gk),
        OrderpolyEngine::Macdonald => Some(Engine::Macdonald),
        OrderpolyEngine::Recursion => Some(Engine::Recursion),
    }
}

fn boxed(poly: Polynomial, size: usize) -> *mut OrderpolyPolynomial {
    Box::into_raw(Box::new(OrderpolyPolynomial { poly, size }))
}

/// Order polynomial of a skew (`"6533/21"`), cylindric (`"442/2/2"`) or
/// shifted (`"shifted:42/1"`) shape.
///
/// # Safety
/// `shape` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_omega_shape(
    shape: *const c_char,
    engine: OrderpolyEngine,
    out: *mut *mut OrderpolyPolynomial,
) -> OrderpolyStatus {
    guard(|| {
        let text = read_str(shape)?;
        if out.is_null() {
            return Err(fail(OrderpolyStatus::NullArgument, "null output pointer"));
        }
        let (p, n) = omega_of_shape(text, engine_of(engine)).map_err(status_of)?;
        write_out(out, boxed(p, n))
    })
}

/// Order polynomial of a named poset such as `"zigzag:6"` or `"fig-2covers"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_omega_named(
    name: *const c_char,
    engine: OrderpolyEngine,
    out: *mut *mut OrderpolyPolynomial,
) -> OrderpolyStatus {
    guard(|| {
        let text = read_str(name)?;
        if out.is_null() {
            return Err(fail(OrderpolyStatus::NullArgument, "null output pointer"));
        }
        let (p, n) = omega_of_named(text, engine_of(engine)).map_err(status_of)?;
        write_out(out, boxed(p, n))
    })
}

/// `Ω(P_{λ/μ}; t)` for a skew shape as a decimal string. This counts plane
/// partitions with entries below `t`.
///
/// # Safety
/// `shape` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_kreweras_value(
    shape: *const c_char,
    t: u64,
    out: *mut *mut c_char,
) -> OrderpolyStatus {
    guard(|| {
        let text = read_str(shape)?;
        let s = match parse_shape(text).map_err(|e| status_of(e.into()))? {
            Shape::Skew(s) => s,
            _ => return Err(fail(OrderpolyStatus::MalformedShape, "expected a skew shape")),
        };
        let v = kreweras_value(&s, t).map_err(|e| status_of(e.into()))?;
        write_string(out, v.to_string())
    })
}

/// Degree, or -1 for the zero polynomial and for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_degree(p: *const OrderpolyPolynomial) -> i64 {
    p.as_ref().and_then(|p| p.poly.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of `t^k` as `"num/den"` or `"num"`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_coeff(
    p: *const OrderpolyPolynomial,
    k: usize,
    out: *mut *mut c_char,
) -> OrderpolyStatus {
    guard(|| {
        let p = poly_ref(p)?;
        write_string(out, rational_to_string(&p.poly.coeff(k)))
    })
}

/// Value at an integer point as `"num/den"` or `"num"`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_eval(
    p: *const OrderpolyPolynomial,
    t: i64,
    out: *mut *mut c_char,
) -> OrderpolyStatus {
    guard(|| {
        let p = poly_ref(p)?;
        write_string(out, rational_to_string(&p.poly.eval_int(t)))
    })
}

/// Renders the polynomial; with `normalize`, multiplied by `|P|!` first.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_format(
    p: *const OrderpolyPolynomial,
    format: OrderpolyFormat,
    normalize: bool,
    out: *mut *mut c_char,
) -> OrderpolyStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let poly = if normalize {
            if p.size == 0 {
                return Err(fail(OrderpolyStatus::InvalidInput, "polynomial has no poset size"));
            }
            p.poly.scale(&Rational::from_integer(factorial(p.size).into()))
        } else {
            p.poly.clone()
        };
        let text = match format {
            OrderpolyFormat::Plain => poly.to_string(),
            OrderpolyFormat::Latex => poly.to_latex(),
            OrderpolyFormat::Json => poly.to_json(),
        };
        write_string(out, text)
    })
}

/// Parses the JSON polynomial form `{"coeffs":[["num","den"],...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_from_json(
    json: *const c_char,
    out: *mut *mut OrderpolyPolynomial,
) -> OrderpolyStatus {
    guard(|| {
        let text = read_str(json)?;
        let poly = Polynomial::from_json(text).map_err(|e| fail(OrderpolyStatus::InvalidInput, &e.to_string()))?;
        write_out(out, boxed(poly, 0))
    })
}

/// Exact coefficient and root statistics.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_analyze(
    p: *const OrderpolyPolynomial,
    out: *mut OrderpolyAnalysis,
) -> OrderpolyStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let a = analyze(&p.poly).map_err(|e| fail(OrderpolyStatus::OutOfRange, &e.to_string()))?;
        write_out(
            out,
            OrderpolyAnalysis {
                nonnegative_coeffs: a.nonnegative_coeffs,
                log_concave: a.log_concave,
                unimodal: a.unimodal,
                real_rooted: a.real_rooted,
            },
        )
    })
}

/// Releases a polynomial handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_polynomial_free(p: *mut OrderpolyPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orderpoly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn orderpoly_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn orderpoly_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version has no interior NUL"),
    };
    VERSION.as_ptr()
}

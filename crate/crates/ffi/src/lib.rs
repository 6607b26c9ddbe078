//! C ABI over `landau-core`.
//!
//! Every function returns a [`LandauStatus`]; results go through out
//! pointers. On a non-zero status, `landau_last_error_message` describes the
//! failure for the calling thread. Handles are opaque and must be released
//! with their matching `_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::CString;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use num_complex::Complex64;

use landau::verify::{generate_admissible, run_suite, SuiteConfig, SuiteMode};
use landau::{build_extremal, landau_radii, profile_value, sharpness_witness, ExtremalSpec, LandauError, Variant};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LandauStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    Domain = 3,
    Singular = 4,
    UnsupportedKind = 5,
    Bracket = 6,
    Precondition = 7,
    ResampleExhausted = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LandauVariant {
    T1 = 0,
    T2 = 1,
    T3 = 2,
    T4 = 3,
    T5 = 4,
    Tc = 5,
    Classical = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LandauSuiteMode {
    Admissible = 0,
    Extremal = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LandauRadii {
    pub radius: f64,
    /// Meaningful only when `has_schlicht` is set.
    pub schlicht_radius: f64,
    pub has_schlicht: bool,
    pub degenerate: bool,
    pub schlicht_clamped: bool,
    pub residual: f64,
    pub iterations: usize,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LandauWirtinger {
    pub fz_re: f64,
    pub fz_im: f64,
    pub fzbar_re: f64,
    pub fzbar_im: f64,
    pub jacobian: f64,
    pub lambda_big: f64,
    pub lambda_small: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LandauWitness {
    pub x1: f64,
    pub x2: f64,
    pub image_gap: f64,
    pub capped: bool,
}

/// Validated theorem parameters.
pub struct LandauParams(landau::LandauParams);

/// A poly-analytic or reduced poly-analytic function.
pub struct LandauPolyFn(landau::PolyFn);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &LandauError) -> LandauStatus {
    match e {
        LandauError::Domain(_) => LandauStatus::Domain,
        LandauError::Singular(_) => LandauStatus::Singular,
        LandauError::InvalidParams(_) => LandauStatus::InvalidParams,
        LandauError::UnsupportedKind(_) => LandauStatus::UnsupportedKind,
        LandauError::Bracket(_) => LandauStatus::Bracket,
        LandauError::Precondition(_) => LandauStatus::Precondition,
        LandauError::ResampleExhausted(_) => LandauStatus::ResampleExhausted,
    }
}

struct Fail(LandauStatus, String);

impl From<LandauError> for Fail {
    fn from(e: LandauError) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LandauStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> LandauStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LandauStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LandauStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], Fail> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

fn variant(v: LandauVariant) -> Variant {
    match v {
        LandauVariant::T1 => Variant::T1,
        LandauVariant::T2 => Variant::T2,
        LandauVariant::T3 => Variant::T3,
        LandauVariant::T4 => Variant::T4,
        LandauVariant::T5 => Variant::T5,
        LandauVariant::Tc => Variant::TC,
        LandauVariant::Classical => Variant::Classical,
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn landau_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a parameter set. `bounds` holds `m` values, `orders` holds
/// `n_orders` vanishing orders (T1 only, `m - 1` of them).
///
/// # Safety
/// `bounds` and `orders` must point to that many readable elements (or be
/// NULL when the count is zero); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn landau_params_new(
    variant_: LandauVariant,
    bounds: *const f64,
    m: usize,
    orders: *const u32,
    n_orders: usize,
    out: *mut *mut LandauParams,
) -> LandauStatus {
    guard(|| {
        let bounds = slice(bounds, m, "bounds")?.to_vec();
        let orders = slice(orders, n_orders, "orders")?.to_vec();
        let params = landau::LandauParams::new(variant(variant_), bounds, orders)?;
        write_out(out, Box::into_raw(Box::new(LandauParams(params))))
    })
}

/// # Safety
/// `params` must come from `landau_params_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn landau_params_free(params: *mut LandauParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Value of the radius profile at `r`.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_profile_value(params: *const LandauParams, r: f64, out: *mut f64) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        write_out(out, profile_value(&p.0, r)?)
    })
}

/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_radii_solve(params: *const LandauParams, out: *mut LandauRadii) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        let r = landau_radii(&p.0)?;
        write_out(
            out,
            LandauRadii {
                radius: r.radius,
                schlicht_radius: r.schlicht_radius.unwrap_or(0.0),
                has_schlicht: r.schlicht_radius.is_some(),
                degenerate: r.degenerate,
                schlicht_clamped: r.schlicht_clamped,
                residual: r.residual,
                iterations: r.iterations,
                bracket_lo: r.bracket.0,
                bracket_hi: r.bracket.1,
            },
        )
    })
}

fn extremal_spec(p: &landau::LandauParams) -> Result<ExtremalSpec, Fail> {
    match p.variant() {
        Variant::T1 => Ok(ExtremalSpec::G1(p.clone())),
        Variant::T4 => Ok(ExtremalSpec::G4(p.clone())),
        Variant::Classical => Ok(ExtremalSpec::ClassicalF0 { bound: p.bounds()[0] }),
        v => Err(Fail(LandauStatus::InvalidParams, format!("no extremal function for {v}"))),
    }
}

/// Sharpness extremal for T1, T4 or classical parameters.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_extremal_new(params: *const LandauParams, out: *mut *mut LandauPolyFn) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        let f = build_extremal(&extremal_spec(&p.0)?)?;
        write_out(out, Box::into_raw(Box::new(LandauPolyFn(f))))
    })
}

/// Seeded random function satisfying the hypotheses of `params`.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_admissible_new(
    params: *const LandauParams,
    degree: usize,
    seed: u64,
    out: *mut *mut LandauPolyFn,
) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        let f = generate_admissible(&p.0, degree, seed)?;
        write_out(out, Box::into_raw(Box::new(LandauPolyFn(f))))
    })
}

/// # Safety
/// `f` must come from one of the constructors and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn landau_polyfn_free(f: *mut LandauPolyFn) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_polyfn_eval(
    f: *const LandauPolyFn,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> LandauStatus {
    guard(|| {
        let f = as_ref(f, "function")?;
        if out_re.is_null() || out_im.is_null() {
            return Err(null("output pointer"));
        }
        let w = f.0.eval(Complex64::new(re, im))?;
        write_out(out_re, w.re)?;
        write_out(out_im, w.im)
    })
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_polyfn_wirtinger(
    f: *const LandauPolyFn,
    re: f64,
    im: f64,
    out: *mut LandauWirtinger,
) -> LandauStatus {
    guard(|| {
        let f = as_ref(f, "function")?;
        let w = f.0.wirtinger(Complex64::new(re, im))?;
        write_out(
            out,
            LandauWirtinger {
                fz_re: w.f_z.re,
                fz_im: w.f_z.im,
                fzbar_re: w.f_zbar.re,
                fzbar_im: w.f_zbar.im,
                jacobian: w.jacobian,
                lambda_big: w.lambda_big,
                lambda_small: w.lambda_small,
            },
        )
    })
}

/// Two real points in `|z| < r` with equal extremal image (T1 or T4).
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_sharpness_witness(
    params: *const LandauParams,
    r: f64,
    out: *mut LandauWitness,
) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        let w = sharpness_witness(&extremal_spec(&p.0)?, r)?;
        write_out(out, LandauWitness { x1: w.x1, x2: w.x2, image_gap: w.image_gap, capped: w.capped })
    })
}

/// Runs the default verification suite and returns the report as a JSON
/// string (free with `landau_string_free`). `passed` receives the verdict.
///
/// # Safety
/// `params` must be a live handle; `out_json` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn landau_verify_json(
    params: *const LandauParams,
    mode: LandauSuiteMode,
    seed: u64,
    out_json: *mut *mut c_char,
    passed: *mut bool,
) -> LandauStatus {
    guard(|| {
        let p = as_ref(params, "params")?;
        if out_json.is_null() || passed.is_null() {
            return Err(null("output pointer"));
        }
        let mode = match mode {
            LandauSuiteMode::Admissible => SuiteMode::Admissible,
            LandauSuiteMode::Extremal => SuiteMode::Extremal,
        };
        let report = run_suite(&p.0, mode, seed, &SuiteConfig::default())?;
        let text = serde_json::to_string(&report).map_err(|e| Fail(LandauStatus::Panic, e.to_string()))?;
        let c = CString::new(text).map_err(|e| Fail(LandauStatus::Panic, e.to_string()))?;
        write_out(passed, report.passed())?;
        write_out(out_json, c.into_raw())
    })
}

/// # Safety
/// `s` must be a string returned by this library and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn landau_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

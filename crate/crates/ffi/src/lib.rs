//! C ABI for the compact-hypergroup Fourier analysis library.
//!
//! Conventions:
//!
//! * handles (`HfInstance`, `HfPolynomial`) are opaque pointers created and
//!   released by the paired `*_new` / `*_free` functions;
//! * every fallible call returns an [`HfStatus`] code and writes its result
//!   through out-pointers, which are untouched on failure;
//! * strings returned through out-pointers are NUL-terminated, UTF-8, and
//!   must be released with [`hf_string_free`].
//!
//! The generated header lives at `include/hyperf.h`.

use std::ffi::{c_char, CStr, CString};

use num_complex::Complex64;

use hyperf_core::cli::{self, ExperimentConfig, OutputFormat};
use hyperf_core::conj_su2::{self, ConjSu2, QuantumIndex};
use hyperf_core::dunkl_ramirez::{DunklRamirez, Finite, HaParameter, Infinity};
use hyperf_core::hypergroup::{CharacterPolynomial, Hypergroup};
use hyperf_core::inequalities as ineq;
use hyperf_core::multipliers::{self, MultiplierSymbol};
use hyperf_core::spectra;
use hyperf_core::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A numeric or domain argument was out of range.
    InvalidParameter = 2,
    /// An experiment configuration was rejected.
    InvalidConfig = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// The run completed but at least one hard check failed.
    HardFailure = 5,
}

fn status_of(err: &Error) -> HfStatus {
    match err {
        Error::Config(_) => HfStatus::InvalidConfig,
        _ => HfStatus::InvalidParameter,
    }
}

enum InstanceImpl {
    Conj(ConjSu2),
    Ha(DunklRamirez),
}

/// Opaque hypergroup instance handle.
pub struct HfInstance(InstanceImpl);

/// Opaque character-polynomial handle (a function `f = Σ c_χ χ`).
pub struct HfPolynomial(CharacterPolynomial);

macro_rules! dispatch {
    ($instance:expr, $inst:ident => $body:expr) => {
        match &$instance.0 {
            InstanceImpl::Conj($inst) => $body,
            InstanceImpl::Ha($inst) => $body,
        }
    };
}

/// New `Conj(SU(2))` instance. Never fails; release with
/// [`hf_instance_free`].
#[no_mangle]
pub extern "C" fn hf_conj_su2_new() -> *mut HfInstance {
    Box::into_raw(Box::new(HfInstance(InstanceImpl::Conj(ConjSu2))))
}

/// New `H_a` instance with `a = numer/denom ∈ (0, 1/2]`.
///
/// # Safety
/// `out` must be a valid pointer to an instance-handle slot.
#[no_mangle]
pub unsafe extern "C" fn hf_dunkl_ramirez_new(
    numer: i64,
    denom: i64,
    out: *mut *mut HfInstance,
) -> HfStatus {
    if out.is_null() {
        return HfStatus::NullPointer;
    }
    match HaParameter::from_ratio(numer, denom) {
        Ok(a) => {
            let handle = Box::new(HfInstance(InstanceImpl::Ha(DunklRamirez::new(a))));
            unsafe { *out = Box::into_raw(handle) };
            HfStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Releases an instance handle (NULL is ignored).
///
/// # Safety
/// `instance` must be a handle returned by an instance constructor, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn hf_instance_free(instance: *mut HfInstance) {
    if !instance.is_null() {
        drop(unsafe { Box::from_raw(instance) });
    }
}

/// Hyperdimension `k_π` of the dual point with the given label.
///
/// # Safety
/// `instance` must be a live instance handle and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_hyperdimension(
    instance: *const HfInstance,
    label: u32,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), false) = (unsafe { instance.as_ref() }, out.is_null()) else {
        return HfStatus::NullPointer;
    };
    let k = dispatch!(instance, inst => inst.dual_point(label).hyperdim);
    unsafe { *out = k };
    HfStatus::Ok
}

/// `χ_m(t)` on `Conj(SU(2)) ≅ [0, 1]`.
///
/// # Safety
/// `out` must be a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_conj_su2_character(label: u32, t: f64, out: *mut f64) -> HfStatus {
    if out.is_null() {
        return HfStatus::NullPointer;
    }
    if !(0.0..=1.0).contains(&t) {
        return HfStatus::InvalidParameter;
    }
    unsafe { *out = conj_su2::character_eval(QuantumIndex(label), t) };
    HfStatus::Ok
}

/// `χ_n(x)` on `H_a`, where `x` is the finite point `point` or `∞` when
/// `at_infinity` is set.
///
/// # Safety
/// `instance` must be a live `H_a` handle and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_dunkl_ramirez_character(
    instance: *const HfInstance,
    label: u32,
    point: u32,
    at_infinity: bool,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), false) = (unsafe { instance.as_ref() }, out.is_null()) else {
        return HfStatus::NullPointer;
    };
    let InstanceImpl::Ha(inst) = &instance.0 else {
        return HfStatus::InvalidParameter;
    };
    let x = if at_infinity { Infinity } else { Finite(point) };
    unsafe { *out = inst.character(label, &x) };
    HfStatus::Ok
}

/// Builds a character polynomial from parallel label/re/im arrays of length
/// `len`. Duplicate labels keep the last value.
///
/// # Safety
/// `labels`, `re`, `im` must point to `len` readable elements; `out` must be
/// a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn hf_polynomial_new(
    labels: *const u32,
    re: *const f64,
    im: *const f64,
    len: usize,
    out: *mut *mut HfPolynomial,
) -> HfStatus {
    if out.is_null() || (len > 0 && (labels.is_null() || re.is_null() || im.is_null())) {
        return HfStatus::NullPointer;
    }
    let labels = unsafe { std::slice::from_raw_parts(labels, len) };
    let re = unsafe { std::slice::from_raw_parts(re, len) };
    let im = unsafe { std::slice::from_raw_parts(im, len) };
    let poly = CharacterPolynomial::from_coeffs(
        labels
            .iter()
            .zip(re.iter().zip(im))
            .map(|(&l, (&re, &im))| (l, Complex64::new(re, im))),
    );
    unsafe { *out = Box::into_raw(Box::new(HfPolynomial(poly))) };
    HfStatus::Ok
}

/// Releases a polynomial handle (NULL is ignored).
///
/// # Safety
/// `poly` must be a handle returned by [`hf_polynomial_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_polynomial_free(poly: *mut HfPolynomial) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Exact Fourier coefficient `f̂(χ_label) = c_label / k_label`.
///
/// # Safety
/// `instance` and `poly` must be live handles; `out_re`, `out_im` valid
/// f64 slots.
#[no_mangle]
pub unsafe extern "C" fn hf_fourier_coefficient(
    instance: *const HfInstance,
    poly: *const HfPolynomial,
    label: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HfStatus {
    let (Some(instance), Some(poly)) = (unsafe { instance.as_ref() }, unsafe { poly.as_ref() })
    else {
        return HfStatus::NullPointer;
    };
    if out_re.is_null() || out_im.is_null() {
        return HfStatus::NullPointer;
    }
    let value =
        dispatch!(instance, inst => inst.algebraic_transform(&poly.0).value(label));
    unsafe {
        *out_re = value.re;
        *out_im = value.im;
    }
    HfStatus::Ok
}

/// `L^p(K)` norm of the polynomial through the instance quadrature sized for
/// `level`; pass `p = INFINITY` for the sup norm.
///
/// # Safety
/// `instance` and `poly` must be live handles and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_lp_norm(
    instance: *const HfInstance,
    poly: *const HfPolynomial,
    p: f64,
    level: u32,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), Some(poly)) = (unsafe { instance.as_ref() }, unsafe { poly.as_ref() })
    else {
        return HfStatus::NullPointer;
    };
    if out.is_null() {
        return HfStatus::NullPointer;
    }
    match dispatch!(instance, inst => inst.lp_norm(&poly.0, p, level)) {
        Ok(norm) => {
            unsafe { *out = norm };
            HfStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// `‖f‖₂` through the exact Plancherel sum `(Σ |c_χ|²/k_χ)^{1/2}`.
///
/// # Safety
/// `instance` and `poly` must be live handles and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_l2_norm_algebraic(
    instance: *const HfInstance,
    poly: *const HfPolynomial,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), Some(poly)) = (unsafe { instance.as_ref() }, unsafe { poly.as_ref() })
    else {
        return HfStatus::NullPointer;
    };
    if out.is_null() {
        return HfStatus::NullPointer;
    }
    let norm = dispatch!(instance, inst => inst.l2_norm_algebraic(&poly.0));
    unsafe { *out = norm };
    HfStatus::Ok
}

/// Paley functional `M_φ` for the preset weight `φ(π) = k_π^{-beta}` over
/// the dual truncated at `level`.
///
/// # Safety
/// `instance` must be a live handle and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_mphi(
    instance: *const HfInstance,
    level: u32,
    beta: f64,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), false) = (unsafe { instance.as_ref() }, out.is_null()) else {
        return HfStatus::NullPointer;
    };
    let value = dispatch!(instance, inst => {
        ineq::paley_weight_preset(inst, level, beta)
    });
    unsafe { *out = spectra::mphi(&value) };
    HfStatus::Ok
}

/// Hörmander functional `sup_y y (Σ_{|σ|≥y} k²)^{1/p-1/q}` of a scalar
/// symbol given by its magnitudes on labels `0..len`.
///
/// # Safety
/// `sigma_abs` must point to `len` readable f64 values; `instance` must be a
/// live handle and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_hormander_functional(
    instance: *const HfInstance,
    sigma_abs: *const f64,
    len: usize,
    p: f64,
    q: f64,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), false) = (unsafe { instance.as_ref() }, out.is_null()) else {
        return HfStatus::NullPointer;
    };
    if len == 0 || sigma_abs.is_null() {
        return HfStatus::NullPointer;
    }
    let values = unsafe { std::slice::from_raw_parts(sigma_abs, len) };
    let level = (len - 1) as u32;
    let symbol = MultiplierSymbol::new(
        values.iter().enumerate().map(|(i, &v)| (i as u32, Complex64::new(v, 0.0))),
        level,
    );
    let result = dispatch!(instance, inst => {
        multipliers::hormander_functional(&symbol, &inst.dual(level), p, q)
    });
    match result {
        Ok(value) => {
            unsafe { *out = value };
            HfStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Empirical lower bound on the `L^p → L^q` norm of the diagonal multiplier
/// with the given complex symbol values on labels `0..len`.
///
/// # Safety
/// `sigma_re`/`sigma_im` must point to `len` readable f64 values; `instance`
/// must be a live handle and `out` a valid f64 slot.
#[no_mangle]
pub unsafe extern "C" fn hf_opnorm_lower_bound(
    instance: *const HfInstance,
    sigma_re: *const f64,
    sigma_im: *const f64,
    len: usize,
    p: f64,
    q: f64,
    trials: u32,
    seed: u64,
    out: *mut f64,
) -> HfStatus {
    let (Some(instance), false) = (unsafe { instance.as_ref() }, out.is_null()) else {
        return HfStatus::NullPointer;
    };
    if len == 0 || sigma_re.is_null() || sigma_im.is_null() {
        return HfStatus::NullPointer;
    }
    let re = unsafe { std::slice::from_raw_parts(sigma_re, len) };
    let im = unsafe { std::slice::from_raw_parts(sigma_im, len) };
    let level = (len - 1) as u32;
    let symbol = MultiplierSymbol::new(
        re.iter()
            .zip(im)
            .enumerate()
            .map(|(i, (&re, &im))| (i as u32, Complex64::new(re, im))),
        level,
    );
    let result = dispatch!(instance, inst => {
        multipliers::opnorm_lower_bound(inst, &symbol, p, q, trials, seed, level)
    });
    match result {
        Ok(estimate) => {
            unsafe { *out = estimate.lower_bound };
            HfStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Runs a full experiment from config text (same `key = value` format as the
/// CLI) and returns the rendered report through `out_report`.
///
/// Returns `Ok` when every hard check passed, `HardFailure` when the run
/// completed with failing hard checks (the report is still produced), and a
/// config status otherwise.
///
/// # Safety
/// `config_text` must be a NUL-terminated string and `out_report` a valid
/// slot; release the report with [`hf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hf_run_config(
    config_text: *const c_char,
    out_report: *mut *mut c_char,
) -> HfStatus {
    if config_text.is_null() || out_report.is_null() {
        return HfStatus::NullPointer;
    }
    let Ok(text) = unsafe { CStr::from_ptr(config_text) }.to_str() else {
        return HfStatus::InvalidUtf8;
    };
    let config = match ExperimentConfig::parse(text) {
        Ok(config) => config,
        Err(err) => return status_of(&err),
    };
    let document = match cli::run(&config) {
        Ok(document) => document,
        Err(err) => return status_of(&err),
    };
    let rendered = match config.format {
        OutputFormat::Text => document.render_text(),
        OutputFormat::Csv => document.render_csv(),
    };
    let Ok(rendered) = CString::new(rendered) else {
        return HfStatus::InvalidUtf8;
    };
    unsafe { *out_report = rendered.into_raw() };
    if document.hard_failures() > 0 {
        HfStatus::HardFailure
    } else {
        HfStatus::Ok
    }
}

/// Releases a string returned by this library (NULL is ignored).
///
/// # Safety
/// `s` must originate from this library and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static library version string (do not free).
#[no_mangle]
pub extern "C" fn hf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

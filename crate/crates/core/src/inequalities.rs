//! Verification harness for the Fourier inequalities over seeded test
//! families.
//!
//! The inequalities with an unknown implicit constant (Paley,
//! Hardy-Littlewood, Hausdorff-Young-Paley, the duality bound) are verified
//! as bounded-ratio properties: per-function `LHS/RHS` ratios are reported
//! together with the family supremum, which must be finite, scale-invariant
//! and stable under truncation refinement. Hausdorff-Young carries constant
//! 1 and is asserted outright; the weak-type internals of the Paley argument
//! carry explicit constants (2 for the weight-sum lemma and the weak (1,1)
//! bound, 1 for weak (2,2)) and are asserted on grids.
//!
//! All left-hand sides are evaluated on the algebraic path (`f̂ = c_χ/k_χ`
//! exactly), so inequality verdicts carry no quadrature error beyond the
//! `L^p(K)` norm on the right-hand side.

use num_complex::Complex64;
use num_rational::{BigRational, Rational64};
use num_traits::One;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dunkl_ramirez::DunklRamirez;
use crate::hypergroup::{CharacterPolynomial, Hypergroup};
use crate::spectra::{self, SpectralSequence, WeightFunction};
use crate::{Error, Result};

/// Relative slack for assertions that can be exact equalities in floats.
const FLOAT_SLACK: f64 = 1e-12;

/// How a test family is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// One character per function.
    Spike,
    /// Coefficients at every label with envelope `|c_χ| ≤ k_χ^{-decay}`.
    RandomDecay,
    /// Same envelope on power-of-two labels only.
    Lacunary,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Spike => "spike",
            FamilyKind::RandomDecay => "random-decay",
            FamilyKind::Lacunary => "lacunary",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "spike" => Ok(FamilyKind::Spike),
            "random-decay" => Ok(FamilyKind::RandomDecay),
            "lacunary" => Ok(FamilyKind::Lacunary),
            other => Err(Error::Config(format!("unknown family kind {other:?}"))),
        }
    }
}

/// A reproducible family of test functions on one instance.
#[derive(Debug, Clone)]
pub struct TestFamily {
    pub kind: FamilyKind,
    pub seed: u64,
    pub level: u32,
    pub decay: f64,
    pub functions: Vec<CharacterPolynomial>,
}

impl TestFamily {
    /// The same family with every function scaled by `c`.
    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            functions: self.functions.iter().map(|f| f.scaled(c)).collect(),
            ..self.clone()
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// RNG for one coefficient, derived from `(seed, function index, label)` so
/// that regenerating a family at a higher truncation level extends the
/// lower-level family coefficient-for-coefficient.
fn coefficient_rng(seed: u64, index: u32, label: u32) -> ChaCha8Rng {
    let mixed = splitmix64(splitmix64(splitmix64(seed) ^ (index as u64 + 1)) ^ (label as u64 + 1));
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Deterministic family generation; coefficients obey the envelope
/// `|c_χ| ≤ k_χ^{-decay}` for the decay-controlled kinds.
pub fn generate_family<H: Hypergroup>(
    instance: &H,
    kind: FamilyKind,
    seed: u64,
    count: u32,
    level: u32,
    decay: f64,
) -> TestFamily {
    let functions = (0..count)
        .map(|index| match kind {
            FamilyKind::Spike => {
                let mut rng = coefficient_rng(seed, index, u32::MAX);
                let label = (rng.random::<u64>() % (level as u64 + 1)) as u32;
                let phase = rng.random::<f64>() * std::f64::consts::TAU;
                let magnitude = 0.5 + rng.random::<f64>();
                CharacterPolynomial::from_coeffs([(
                    label,
                    Complex64::from_polar(magnitude, phase),
                )])
            }
            FamilyKind::RandomDecay => CharacterPolynomial::from_coeffs(
                (0..=level)
                    .map(|label| (label, envelope_coefficient(instance, seed, index, label, decay))),
            ),
            FamilyKind::Lacunary => {
                let labels = std::iter::successors(Some(1u32), |l| l.checked_mul(2))
                    .take_while(|l| *l <= level);
                CharacterPolynomial::from_coeffs(labels.map(|label| {
                    (label, envelope_coefficient(instance, seed, index, label, decay))
                }))
            }
        })
        .collect();
    TestFamily { kind, seed, level, decay, functions }
}

fn envelope_coefficient<H: Hypergroup>(
    instance: &H,
    seed: u64,
    index: u32,
    label: u32,
    decay: f64,
) -> Complex64 {
    let mut rng = coefficient_rng(seed, index, label);
    let envelope = instance.hyperdim(label).powf(-decay);
    // Strictly positive magnitude keeps every function nonzero.
    let magnitude = (0.1 + 0.9 * rng.random::<f64>()) * envelope;
    let phase = rng.random::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(magnitude, phase)
}

/// Upper bound on the `L²` truncation tail of an envelope-decay family:
/// `‖f - f_level‖₂² ≤ Σ_{m > level} k_m^{-2·decay - 1}`, summed far past the
/// level with a doubled geometric-extrapolation residual on top.
pub fn envelope_l2_tail_bound<H: Hypergroup>(instance: &H, level: u32, decay: f64) -> f64 {
    let exponent = -2.0 * decay - 1.0;
    let terms: Vec<f64> =
        (level + 1..=level + 400).map(|m| instance.hyperdim(m).powf(exponent)).collect();
    let sum: f64 = terms.iter().sum();
    let last = *terms.last().expect("nonempty tail window");
    let prev = terms[terms.len() - 2];
    let ratio = if prev > 0.0 { last / prev } else { 0.0 };
    let residual = if ratio < 0.999 { 2.0 * last * ratio / (1.0 - ratio) } else { f64::INFINITY };
    (sum + residual).sqrt()
}

/// One function's contribution to a ratio report.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioEntry {
    pub index: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Per-family record of an inequality check: per-function sides and ratios,
/// the family supremum and a truncation-tail note.
#[derive(Debug, Clone)]
pub struct RatioReport {
    pub suite: &'static str,
    pub params: Vec<(String, String)>,
    pub entries: Vec<RatioEntry>,
    pub sup_ratio: f64,
    pub level: u32,
    pub tail_note: String,
}

impl RatioReport {
    fn new(
        suite: &'static str,
        params: Vec<(String, String)>,
        entries: Vec<RatioEntry>,
        level: u32,
        tail_note: String,
    ) -> Self {
        let sup_ratio = entries.iter().map(|e| e.ratio).fold(0.0f64, f64::max);
        Self { suite, params, entries, sup_ratio, level, tail_note }
    }
}

fn tail_note<H: Hypergroup>(instance: &H, family: &TestFamily) -> String {
    match family.kind {
        FamilyKind::Spike => "exact support, no truncation tail".to_string(),
        _ => format!(
            "envelope l2 tail bound {:.3e}",
            envelope_l2_tail_bound(instance, family.level, family.decay)
        ),
    }
}

/// One quadrature serving every function in the family.
fn family_quadrature<H: Hypergroup>(
    instance: &H,
    family: &TestFamily,
) -> crate::hypergroup::HaarQuadrature<H::Point> {
    let top = family
        .functions
        .iter()
        .filter_map(|f| f.max_label())
        .fold(family.level, u32::max);
    instance.haar_quadrature(top)
}

fn conjugate_exponent(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else {
        p / (p - 1.0)
    }
}

fn validate_open_range(p: f64, name: &'static str) -> Result<()> {
    if p > 1.0 && p <= 2.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent { name, value: p, expected: "(1, 2]" })
    }
}

/// Scalar spectral sequence of `f̂` over the instance dual up to `level`.
fn transform_sequence<H: Hypergroup>(
    instance: &H,
    f: &CharacterPolynomial,
    level: u32,
) -> SpectralSequence {
    let coeffs = instance.algebraic_transform(f);
    SpectralSequence::from_scalars(instance.dual(level).into_iter().map(|point| {
        let value = coeffs.value(point.label);
        (point, value)
    }))
}

/// Hausdorff-Young: both dual norms of `f̂` against `‖f‖_p`, each with
/// constant 1, plus the norm ordering `ℓ^{p'} ≤ ℓ^{p'}_sch` (valid since
/// `p' ≥ 2`).
#[derive(Debug, Clone)]
pub struct HausdorffYoungReport {
    pub hs: RatioReport,
    pub sch: RatioReport,
    pub ordering_holds: bool,
}

pub fn verify_hausdorff_young<H: Hypergroup>(
    instance: &H,
    family: &TestFamily,
    p: f64,
) -> Result<HausdorffYoungReport> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::InvalidExponent { name: "p", value: p, expected: "[1, 2]" });
    }
    let q = conjugate_exponent(p);
    let quad = family_quadrature(instance, family);
    let mut hs_entries = Vec::new();
    let mut sch_entries = Vec::new();
    let mut ordering_holds = true;
    for (index, f) in family.functions.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let sigma = transform_sequence(instance, f, family.level);
        let lhs_hs = spectra::lp_hs_norm(&sigma, q)?;
        let lhs_sch = spectra::lp_sch_norm(&sigma, q)?;
        let rhs = instance.lp_norm_with(f, p, &quad)?;
        ordering_holds &= lhs_hs <= lhs_sch * (1.0 + FLOAT_SLACK);
        hs_entries.push(RatioEntry { index: index as u32, lhs: lhs_hs, rhs, ratio: lhs_hs / rhs });
        sch_entries.push(RatioEntry {
            index: index as u32,
            lhs: lhs_sch,
            rhs,
            ratio: lhs_sch / rhs,
        });
    }
    let note = tail_note(instance, family);
    let params = vec![("p".to_string(), format!("{p}"))];
    Ok(HausdorffYoungReport {
        hs: RatioReport::new("hy", params.clone(), hs_entries, family.level, note.clone()),
        sch: RatioReport::new("hy-sch", params, sch_entries, family.level, note),
        ordering_holds,
    })
}

/// Paley: `(Σ k² (|f̂|/√k)^p φ^{2-p})^{1/p} ≲ M_φ^{(2-p)/p} ‖f‖_p`.
pub fn verify_paley<H: Hypergroup>(
    instance: &H,
    phi: &WeightFunction,
    family: &TestFamily,
    p: f64,
) -> Result<RatioReport> {
    validate_open_range(p, "p")?;
    let m_phi = spectra::mphi(phi);
    if !(m_phi > 0.0 && m_phi.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Paley functional must be positive and finite, got {m_phi}"
        )));
    }
    let quad = family_quadrature(instance, family);
    let mut entries = Vec::new();
    for (index, f) in family.functions.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let coeffs = instance.algebraic_transform(f);
        let mut sum = 0.0f64;
        for (point, weight) in phi.values() {
            let transform = coeffs.value(point.label).norm();
            if transform == 0.0 {
                continue;
            }
            let k = point.hyperdim;
            sum += k * k * (transform / k.sqrt()).powf(p) * weight.powf(2.0 - p);
        }
        let lhs = sum.powf(1.0 / p);
        let rhs = m_phi.powf((2.0 - p) / p) * instance.lp_norm_with(f, p, &quad)?;
        entries.push(RatioEntry { index: index as u32, lhs, rhs, ratio: lhs / rhs });
    }
    let note = tail_note(instance, family);
    let params = vec![
        ("p".to_string(), format!("{p}")),
        ("mphi".to_string(), format!("{m_phi:.17e}")),
    ];
    Ok(RatioReport::new("paley", params, entries, family.level, note))
}

/// Value and tail information for the growth condition `Σ_π k_π²/μ_π^β < ∞`.
#[derive(Debug, Clone)]
pub struct HlCondition {
    pub partial_sum: f64,
    /// Analytic bound on the dropped tail (preset weights only).
    pub tail_bound: Option<f64>,
    pub convergent: bool,
    /// Closed form of the full sum when it is rational in `a`.
    pub exact: Option<BigRational>,
}

/// Growth condition for the quantum-weight preset `μ_m = (m+1)²` with
/// `k_m = (m+1)²`: the sum telescopes to `Σ_n n^{4-2β}`, convergent for
/// `β > 5/2`; at `β = 3` it is `Σ 1/n² → π²/6` with tail below `1/N`.
pub fn conj_su2_hl_condition(beta: f64, level: u32) -> HlCondition {
    let convergent = beta > 2.5;
    let partial_sum: f64 = (1..=level + 1).map(|n| (n as f64).powf(4.0 - 2.0 * beta)).sum();
    let tail_bound = if convergent {
        // ∫_{N}^∞ x^{4-2β} dx with N = level + 1.
        let n = (level + 1) as f64;
        Some(n.powf(5.0 - 2.0 * beta) / (2.0 * beta - 5.0))
    } else {
        None
    };
    HlCondition { partial_sum, tail_bound, convergent, exact: None }
}

/// Growth condition for the `H_a` preset `μ_n = k_n`: terms
/// `((1-a)a^{-n})^{2-β}` decay geometrically once `β > 2`; for integer
/// `β ≥ 3` the full sum is the exact rational
/// `1 + (1-a)^{2-β} a^{β-2} / (1 - a^{β-2})` (at `β = 3`: `1 + a/(1-a)²`).
pub fn dunkl_hl_condition(instance: &DunklRamirez, beta: f64, level: u32) -> HlCondition {
    let convergent = beta > 2.0;
    let a = instance.parameter().value();
    let term = |n: u32| -> f64 {
        if n == 0 {
            1.0
        } else {
            ((1.0 - a) * a.powi(-(n as i32))).powf(2.0 - beta)
        }
    };
    let partial_sum: f64 = (0..=level).map(term).sum();
    let tail_bound = if convergent {
        let ratio = a.powf(beta - 2.0);
        Some(term(level + 1) / (1.0 - ratio))
    } else {
        None
    };
    let exact = if convergent && beta.fract() == 0.0 {
        let a = instance.parameter().exact().clone();
        let one = BigRational::one();
        let b = beta as u32;
        let mut a_pow = BigRational::one();
        for _ in 0..(b - 2) {
            a_pow *= &a;
        }
        let mut one_minus_a_pow = BigRational::one();
        for _ in 0..(b - 2) {
            one_minus_a_pow *= &one - &a;
        }
        Some(&one + (&a_pow / one_minus_a_pow) / (&one - &a_pow))
    } else {
        None
    };
    HlCondition { partial_sum, tail_bound, convergent, exact }
}

/// Truncated condition sum for an arbitrary growth weight (no tail
/// information).
pub fn hl_condition_partial(mu: &WeightFunction, beta: f64) -> f64 {
    mu.values()
        .iter()
        .map(|(point, growth)| point.hyperdim * point.hyperdim / growth.powf(beta))
        .sum()
}

/// Hardy-Littlewood with growth weight `μ` and exponent `β`:
/// `(Σ k^{2-p/2} μ^{β(p-2)} |f̂|^p)^{1/p} ≲ ‖f‖_p` (the 1-homogeneous form).
pub fn verify_hardy_littlewood<H: Hypergroup>(
    instance: &H,
    mu: &WeightFunction,
    beta: f64,
    family: &TestFamily,
    p: f64,
    condition: &HlCondition,
) -> Result<RatioReport> {
    validate_open_range(p, "p")?;
    if !condition.convergent {
        return Err(Error::DivergentCondition(format!(
            "Σ k²/μ^β diverges for β = {beta}; partial sum {:.6e} keeps growing",
            condition.partial_sum
        )));
    }
    let quad = family_quadrature(instance, family);
    let mut entries = Vec::new();
    for (index, f) in family.functions.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let coeffs = instance.algebraic_transform(f);
        let mut sum = 0.0f64;
        for (point, growth) in mu.values() {
            let transform = coeffs.value(point.label).norm();
            if transform == 0.0 {
                continue;
            }
            let k = point.hyperdim;
            sum += k * k * growth.powf(beta * (p - 2.0)) * (transform / k.sqrt()).powf(p);
        }
        let lhs = sum.powf(1.0 / p);
        let rhs = instance.lp_norm_with(f, p, &quad)?;
        entries.push(RatioEntry { index: index as u32, lhs, rhs, ratio: lhs / rhs });
    }
    let note = tail_note(instance, family);
    let params = vec![
        ("p".to_string(), format!("{p}")),
        ("beta".to_string(), format!("{beta}")),
    ];
    Ok(RatioReport::new("hl", params, entries, family.level, note))
}

/// Both routes to the printed Hardy-Littlewood exponent on `Conj(SU(2))`,
/// as exact rationals in `p`: the generic weights give
/// `2(2 - p/2) + 2·3(p - 2)` on the base `2l+1`, the printed form is
/// `5p - 8`.
pub fn conj_su2_hl_exponents(p: Rational64) -> (Rational64, Rational64) {
    let two = Rational64::from_integer(2);
    let derived = two * (two - p / two) + Rational64::from_integer(6) * (p - two);
    let printed = Rational64::from_integer(5) * p - Rational64::from_integer(8);
    (derived, printed)
}

/// Both routes to the printed exponent on `H_a`, on the base `(1-a)a^{-n}`:
/// generic `(2 - p/2) + 3(p - 2)` versus printed `p(5/2 - 4/p) = (5/2)p - 4`.
pub fn dunkl_hl_exponents(p: Rational64) -> (Rational64, Rational64) {
    let two = Rational64::from_integer(2);
    let derived = (two - p / two) + Rational64::from_integer(3) * (p - two);
    let printed = Rational64::new(5, 2) * p - Rational64::from_integer(4);
    (derived, printed)
}

/// Hausdorff-Young-Paley: for `1 < p ≤ b ≤ p'`,
/// `(Σ k² (|f̂|/√k · φ^{1/b - 1/p'})^b)^{1/b} ≲ M_φ^{1/b - 1/p'} ‖f‖_p`.
pub fn verify_hyp<H: Hypergroup>(
    instance: &H,
    phi: &WeightFunction,
    family: &TestFamily,
    p: f64,
    b: f64,
) -> Result<RatioReport> {
    validate_open_range(p, "p")?;
    let p_conj = conjugate_exponent(p);
    if !(b >= p && b <= p_conj) {
        return Err(Error::InvalidExponent { name: "b", value: b, expected: "[p, p']" });
    }
    let m_phi = spectra::mphi(phi);
    if !(m_phi > 0.0 && m_phi.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Paley functional must be positive and finite, got {m_phi}"
        )));
    }
    let exponent = 1.0 / b - 1.0 / p_conj;
    let quad = family_quadrature(instance, family);
    let mut entries = Vec::new();
    for (index, f) in family.functions.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let coeffs = instance.algebraic_transform(f);
        let mut sum = 0.0f64;
        for (point, weight) in phi.values() {
            let transform = coeffs.value(point.label).norm();
            if transform == 0.0 {
                continue;
            }
            let k = point.hyperdim;
            sum += k * k * (transform / k.sqrt() * weight.powf(exponent)).powf(b);
        }
        let lhs = sum.powf(1.0 / b);
        let rhs = m_phi.powf(exponent) * instance.lp_norm_with(f, p, &quad)?;
        entries.push(RatioEntry { index: index as u32, lhs, rhs, ratio: lhs / rhs });
    }
    let note = tail_note(instance, family);
    let params = vec![
        ("p".to_string(), format!("{p}")),
        ("b".to_string(), format!("{b}")),
        ("mphi".to_string(), format!("{m_phi:.17e}")),
    ];
    Ok(RatioReport::new("hyp", params, entries, family.level, note))
}

/// The dual-side bound on `Conj(SU(2))` for `p ≥ 2`: reports
/// `‖f‖_p / (Σ (2l+1)^{5p-8} |f̂(l)|^p)^{1/p}` per function.
pub fn verify_duality_bound(
    instance: &crate::conj_su2::ConjSu2,
    family: &TestFamily,
    p: f64,
) -> Result<RatioReport> {
    if !(p >= 2.0 && p.is_finite()) {
        return Err(Error::InvalidExponent { name: "p", value: p, expected: "[2, ∞)" });
    }
    let quad = family_quadrature(instance, family);
    let mut entries = Vec::new();
    for (index, f) in family.functions.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let coeffs = instance.algebraic_transform(f);
        let mut sum = 0.0f64;
        for (label, value) in coeffs.iter() {
            let base = (label + 1) as f64;
            sum += base.powf(5.0 * p - 8.0) * value.norm().powf(p);
        }
        let rhs = sum.powf(1.0 / p);
        let lhs = instance.lp_norm_with(f, p, &quad)?;
        entries.push(RatioEntry { index: index as u32, lhs, rhs, ratio: lhs / rhs });
    }
    let note = tail_note(instance, family);
    let params = vec![("p".to_string(), format!("{p}"))];
    Ok(RatioReport::new("duality", params, entries, family.level, note))
}

/// Grid check of the weak-type internals of the Paley argument for one
/// function, with the explicit proof constants.
#[derive(Debug, Clone)]
pub struct PaleyInternals {
    /// `Σ_{φ≤w} φ²k² ≤ 2·M_φ·w` over the w-grid.
    pub weight_sum_ok: bool,
    /// `y²·ν(y; Af) ≤ ‖f‖₂²` over the y-grid (constant 1, via Plancherel).
    pub weak22_ok: bool,
    /// `ν(y; Af) ≤ 2·M_φ·‖f‖₁/y` over the y-grid.
    pub weak11_ok: bool,
    pub grid_size: usize,
}

pub fn check_paley_internals<H: Hypergroup>(
    instance: &H,
    phi: &WeightFunction,
    f: &CharacterPolynomial,
    grid_size: usize,
) -> Result<PaleyInternals> {
    let m_phi = spectra::mphi(phi);
    let coeffs = instance.algebraic_transform(f);
    // Af(π) = |f̂(π)| / (√k_π φ(π)).
    let amplitudes: Vec<f64> = phi
        .values()
        .iter()
        .map(|(point, weight)| coeffs.value(point.label).norm() / (point.hyperdim.sqrt() * weight))
        .collect();
    let l2_squared: f64 = f.coeffs().map(|(l, c)| c.norm_sqr() / instance.hyperdim(l)).sum();
    let l1 = instance.lp_norm(f, 1.0, coeffs.truncation_level())?;

    // Log-spaced w-grid around the range of φ.
    let phi_min = phi.values().iter().map(|(_, w)| *w).fold(f64::INFINITY, f64::min);
    let phi_max = phi.values().iter().map(|(_, w)| *w).fold(0.0f64, f64::max);
    let mut weight_sum_ok = true;
    for w in log_grid(phi_min * 0.5, phi_max * 2.0, grid_size) {
        let sum = spectra::paley_weight_sum(phi, w)?;
        weight_sum_ok &= sum <= 2.0 * m_phi * w * (1.0 + FLOAT_SLACK);
    }

    // Log-spaced y-grid below the peak amplitude.
    let peak = amplitudes.iter().copied().fold(0.0f64, f64::max);
    let mut weak22_ok = true;
    let mut weak11_ok = true;
    if peak > 0.0 {
        let grid: Vec<f64> = log_grid(peak * 1e-4, peak * 1.05, grid_size).collect();
        let report = spectra::distribution_function(&amplitudes, phi, &grid)?;
        for (y, mass) in report.thresholds.iter().zip(&report.masses) {
            weak22_ok &= y * y * mass <= l2_squared * (1.0 + FLOAT_SLACK);
            weak11_ok &= *mass <= 2.0 * m_phi * l1 / y * (1.0 + FLOAT_SLACK);
        }
    }
    Ok(PaleyInternals { weight_sum_ok, weak22_ok, weak11_ok, grid_size })
}

fn log_grid(lo: f64, hi: f64, size: usize) -> impl Iterator<Item = f64> {
    let (lo, hi) = (lo.max(1e-300), hi.max(1e-299));
    let step = (hi / lo).ln() / (size.max(2) as f64 - 1.0);
    (0..size).map(move |i| lo * (step * i as f64).exp())
}

/// Instance-preset Hardy-Littlewood growth weight `μ_π = k_π` on the dual
/// truncated at `level` (both instances use the Plancherel weight).
pub fn hl_weight_preset<H: Hypergroup>(instance: &H, level: u32) -> WeightFunction {
    WeightFunction::from_fn(&instance.dual(level), |point| point.hyperdim)
        .expect("hyperdimensions are positive")
}

/// Instance-preset Paley weight `φ_π = k_π^{-β}` on the truncated dual.
pub fn paley_weight_preset<H: Hypergroup>(instance: &H, level: u32, beta: f64) -> WeightFunction {
    WeightFunction::from_fn(&instance.dual(level), |point| point.hyperdim.powf(-beta))
        .expect("inverse powers of hyperdimensions are positive")
}

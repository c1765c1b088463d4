//! Abstract compact commutative hypergroup interface and Fourier transforms.
//!
//! A hypergroup instance exposes its truncated dual, real-valued characters,
//! and a Haar quadrature (nodes and weights already multiplied by the Haar
//! density) that integrates products of two characters up to a stated label
//! exactly or to machine precision. Everything else — transforms, inversion,
//! convolution, `L^p` norms — is derived here.
//!
//! Functions live in two representations:
//!
//! * algebraic: a [`CharacterPolynomial`] `f = Σ c_χ χ`, for which the
//!   transform is exact (`f̂(χ) = c_χ / k_χ` by orthogonality);
//! * sampled: an arbitrary function handle integrated by the instance
//!   quadrature.
//!
//! The inequality suites run entirely on the algebraic side; the sampled side
//! exists to validate the instances' Haar integration against it.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::{Error, Result};

/// One element of the truncated dual `K̂`.
///
/// `hyperdim` is the constant `k_π ≥ d_π` from the orthogonality relation
/// `∫ χ_π χ̄_π' dλ = δ_ππ' · d_π / k_π`; it equals the Plancherel weight on
/// commutative instances (where `dim = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualPoint {
    pub label: u32,
    pub hyperdim: f64,
    pub dim: u32,
}

impl DualPoint {
    pub fn new(label: u32, hyperdim: f64, dim: u32) -> Result<Self> {
        if !(hyperdim > 0.0 && hyperdim.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "hyperdimension must be positive and finite, got {hyperdim}"
            )));
        }
        if dim < 1 {
            return Err(Error::InvalidParameter("matrix dimension must be at least 1".into()));
        }
        if hyperdim < dim as f64 {
            return Err(Error::InvalidParameter(format!(
                "hyperdimension {hyperdim} below matrix dimension {dim}"
            )));
        }
        Ok(Self { label, hyperdim, dim })
    }

    /// A one-dimensional dual point (the commutative case).
    pub fn scalar(label: u32, hyperdim: f64) -> Self {
        Self::new(label, hyperdim, 1).expect("scalar dual point with invalid hyperdimension")
    }
}

/// A finite linear combination of characters, `f = Σ c_χ χ`, keyed by label.
///
/// Exact zeros are pruned so the support is canonical.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CharacterPolynomial {
    coeffs: BTreeMap<u32, Complex64>,
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single character `χ_label`.
    pub fn character(label: u32) -> Self {
        Self::from_coeffs([(label, Complex64::new(1.0, 0.0))])
    }

    /// The constant function `c` (the trivial character carries label 0).
    pub fn constant(c: Complex64) -> Self {
        Self::from_coeffs([(0, c)])
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Complex64)>>(coeffs: I) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
            .collect();
        Self { coeffs }
    }

    /// Coefficient `c_χ` at a label (zero off the support).
    pub fn coefficient(&self, label: u32) -> Complex64 {
        self.coeffs.get(&label).copied().unwrap_or_default()
    }

    /// Support/coefficient pairs in label order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, Complex64)> + '_ {
        self.coeffs.iter().map(|(&l, &c)| (l, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self::from_coeffs(self.coeffs().map(|(l, v)| (l, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (l, c) in other.coeffs() {
            let entry = out.entry(l).or_default();
            *entry += c;
        }
        Self::from_coeffs(out)
    }

    /// Replaces the coefficient at one label (removing it when zero).
    pub fn with_coefficient(&self, label: u32, c: Complex64) -> Self {
        let mut out = self.coeffs.clone();
        if c.re == 0.0 && c.im == 0.0 {
            out.remove(&label);
        } else {
            out.insert(label, c);
        }
        Self { coeffs: out }
    }
}

/// Fourier coefficients `f̂(χ)` on the dual truncated at `truncation_level`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    values: BTreeMap<u32, Complex64>,
    truncation_level: u32,
}

impl FourierCoefficients {
    pub fn from_values<I: IntoIterator<Item = (u32, Complex64)>>(
        values: I,
        truncation_level: u32,
    ) -> Self {
        let values = values
            .into_iter()
            .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
            .collect();
        Self { values, truncation_level }
    }

    pub fn value(&self, label: u32) -> Complex64 {
        self.values.get(&label).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Complex64)> + '_ {
        self.values.iter().map(|(&l, &c)| (l, c))
    }

    pub fn truncation_level(&self) -> u32 {
        self.truncation_level
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }
}

/// Haar-weighted integration nodes: `∫ f dλ ≈ Σ w_i f(x_i)`.
///
/// Weighted sums over the nodes integrate products of two characters with
/// labels at most `max_label` exactly (discrete instances) or to roughly
/// machine precision (quadrature instances).
#[derive(Debug, Clone)]
pub struct HaarQuadrature<P> {
    pub nodes: Vec<(P, f64)>,
    pub max_label: u32,
}

/// A compact commutative hypergroup with countable dual, normalized so the
/// Haar measure has total mass 1 and characters are real.
pub trait Hypergroup {
    /// A point of the underlying compact space.
    type Point: Clone + PartialEq + std::fmt::Debug;

    fn name(&self) -> &'static str;

    /// The dual point carrying `k_π` and `d_π` for a label.
    fn dual_point(&self, label: u32) -> DualPoint;

    /// Character `χ_label` evaluated at a point.
    fn character(&self, label: u32, x: &Self::Point) -> f64;

    /// Haar-weighted nodes resolving products of characters up to `max_label`.
    fn haar_quadrature(&self, max_label: u32) -> HaarQuadrature<Self::Point>;

    /// Dual points with labels `0..=level`, in label order.
    fn dual(&self, level: u32) -> Vec<DualPoint> {
        (0..=level).map(|l| self.dual_point(l)).collect()
    }

    fn hyperdim(&self, label: u32) -> f64 {
        self.dual_point(label).hyperdim
    }

    /// Pointwise evaluation of a character polynomial.
    fn evaluate(&self, f: &CharacterPolynomial, x: &Self::Point) -> Complex64 {
        f.coeffs().map(|(l, c)| c * self.character(l, x)).sum()
    }

    /// `∫ f dλ` through the instance quadrature at the given resolution.
    fn haar_integrate<F: Fn(&Self::Point) -> Complex64>(&self, max_label: u32, f: F) -> Complex64 {
        let quad = self.haar_quadrature(max_label);
        quad.nodes.iter().map(|(x, w)| f(x) * *w).sum()
    }

    /// Sampled-path Fourier transform `f̂(χ) = ∫ f χ̄ dλ` for labels `0..=level`.
    ///
    /// The quadrature is sized for `level` only; for a handle hiding higher
    /// frequencies the coefficients carry the corresponding aliasing error.
    /// Use [`Hypergroup::fourier_transform_polynomial`] when the max frequency
    /// is known.
    fn fourier_transform<F: Fn(&Self::Point) -> Complex64>(
        &self,
        f: F,
        level: u32,
    ) -> FourierCoefficients {
        let quad = self.haar_quadrature(level);
        let values = (0..=level).map(|l| {
            let value: Complex64 = quad
                .nodes
                .iter()
                .map(|(x, w)| f(x) * self.character(l, x) * *w)
                .sum();
            (l, value)
        });
        FourierCoefficients::from_values(values, level)
    }

    /// Sampled-path transform of a character polynomial through an explicit
    /// quadrature, rejecting rules that cannot resolve the integrands.
    fn fourier_transform_with(
        &self,
        f: &CharacterPolynomial,
        level: u32,
        quad: &HaarQuadrature<Self::Point>,
    ) -> Result<FourierCoefficients> {
        let required = f.max_label().unwrap_or(0).max(level);
        if quad.max_label < required {
            return Err(Error::QuadratureResolution {
                required,
                available: quad.max_label,
            });
        }
        let values = (0..=level).map(|l| {
            let value: Complex64 = quad
                .nodes
                .iter()
                .map(|(x, w)| self.evaluate(f, x) * self.character(l, x) * *w)
                .sum();
            (l, value)
        });
        Ok(FourierCoefficients::from_values(values, level))
    }

    /// Sampled-path transform of a character polynomial with an internally
    /// sized quadrature (always adequate).
    fn fourier_transform_polynomial(
        &self,
        f: &CharacterPolynomial,
        level: u32,
    ) -> FourierCoefficients {
        let required = f.max_label().unwrap_or(0).max(level);
        let quad = self.haar_quadrature(required);
        self.fourier_transform_with(f, level, &quad)
            .expect("internally sized quadrature cannot under-resolve")
    }

    /// Algebraic (exact) transform: `f̂(χ) = c_χ / k_χ` by orthogonality.
    fn algebraic_transform(&self, f: &CharacterPolynomial) -> FourierCoefficients {
        let level = f.max_label().unwrap_or(0);
        FourierCoefficients::from_values(
            f.coeffs().map(|(l, c)| (l, c / self.hyperdim(l))),
            level,
        )
    }

    /// Fourier inversion `f = Σ k_χ f̂(χ) χ` for finitely supported coefficients.
    fn inverse_fourier(&self, coeffs: &FourierCoefficients) -> CharacterPolynomial {
        CharacterPolynomial::from_coeffs(
            coeffs.iter().map(|(l, v)| (l, v * self.hyperdim(l))),
        )
    }

    /// `L^p(K, λ)` norm of a character polynomial via the sampled path;
    /// `p = ∞` is the max over quadrature nodes.
    fn lp_norm(&self, f: &CharacterPolynomial, p: f64, level: u32) -> Result<f64> {
        let resolution = f.max_label().unwrap_or(0).max(level);
        self.lp_norm_fn(|x| self.evaluate(f, x), p, resolution)
    }

    /// `L^p` norm of an arbitrary handle through the quadrature at `max_label`
    /// resolution.
    fn lp_norm_fn<F: Fn(&Self::Point) -> Complex64>(
        &self,
        f: F,
        p: f64,
        max_label: u32,
    ) -> Result<f64> {
        let quad = self.haar_quadrature(max_label);
        self.lp_norm_fn_with(f, p, &quad)
    }

    /// `L^p` norm through a prebuilt quadrature (callers that evaluate many
    /// norms at the same resolution avoid rebuilding the rule).
    fn lp_norm_fn_with<F: Fn(&Self::Point) -> Complex64>(
        &self,
        f: F,
        p: f64,
        quad: &HaarQuadrature<Self::Point>,
    ) -> Result<f64> {
        if !(p >= 1.0) {
            return Err(Error::InvalidExponent { name: "p", value: p, expected: "[1, ∞]" });
        }
        if p.is_infinite() {
            let sup = quad
                .nodes
                .iter()
                .map(|(x, _)| f(x).norm())
                .fold(0.0f64, f64::max);
            return Ok(sup);
        }
        let integral: f64 = quad.nodes.iter().map(|(x, w)| f(x).norm().powf(p) * *w).sum();
        Ok(integral.max(0.0).powf(1.0 / p))
    }

    /// Polynomial `L^p` norm through a prebuilt quadrature, rejecting rules
    /// that cannot resolve the polynomial's frequencies.
    fn lp_norm_with(
        &self,
        f: &CharacterPolynomial,
        p: f64,
        quad: &HaarQuadrature<Self::Point>,
    ) -> Result<f64> {
        let required = f.max_label().unwrap_or(0);
        if quad.max_label < required {
            return Err(Error::QuadratureResolution { required, available: quad.max_label });
        }
        self.lp_norm_fn_with(|x| self.evaluate(f, x), p, quad)
    }

    /// `‖f‖₂` by Plancherel on the algebraic path: `(Σ |c_χ|² / k_χ)^{1/2}`.
    fn l2_norm_algebraic(&self, f: &CharacterPolynomial) -> f64 {
        f.coeffs()
            .map(|(l, c)| c.norm_sqr() / self.hyperdim(l))
            .sum::<f64>()
            .sqrt()
    }

    /// Convolution on the algebraic path: `(f ∗ g)^ = f̂ ĝ` pointwise, i.e.
    /// the coefficient at `χ` is `c_f c_g / k_χ`.
    fn convolve(&self, f: &CharacterPolynomial, g: &CharacterPolynomial) -> CharacterPolynomial {
        CharacterPolynomial::from_coeffs(f.coeffs().filter_map(|(l, cf)| {
            let cg = g.coefficient(l);
            if cg.re == 0.0 && cg.im == 0.0 {
                None
            } else {
                Some((l, cf * cg / self.hyperdim(l)))
            }
        }))
    }
}

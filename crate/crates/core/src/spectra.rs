//! Weighted sequence spaces on the dual and the weak-type machinery behind
//! the Paley inequality.
//!
//! A [`SpectralSequence`] assigns a `d_π × d_π` complex matrix to each dual
//! point (scalars on commutative instances). Two families of norms compete:
//!
//! ```text
//! ‖σ‖_{ℓ^p_sch} = (Σ_π k_π ‖σ(π)‖_{S^p}^p)^{1/p}        (Schatten weights)
//! ‖σ‖_{ℓ^p}     = (Σ_π k_π^{2-p/2} ‖σ(π)‖_HS^p)^{1/p}   (Hilbert-Schmidt)
//! ```
//!
//! with `sup_π ‖σ(π)‖_op` and `sup_π k_π^{-1/2} ‖σ(π)‖_HS` at `p = ∞`. They
//! coincide at `p = 2` and embed continuously into each other on either side
//! of 2 ([`check_embeddings`]).
//!
//! The Paley functional `M_φ = sup_{y>0} y Σ_{φ(π) ≥ y} k_π²` measures a
//! weight `φ` against the dual mass `ν({π}) = φ(π)² k_π²`; the map
//! `y ↦ y·Σ_{φ≥y} k²` is piecewise linear with breakpoints at the values of
//! `φ` and increases between them, so the sup is attained at a breakpoint
//! and [`mphi`] is exact on a truncated dual.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::hypergroup::DualPoint;
use crate::{Error, Result};

/// Singular values below this fraction of the largest are treated as zero in
/// rank decisions.
pub const RANK_THRESHOLD: f64 = 1e-12;

fn validate_p(p: f64) -> Result<()> {
    if p >= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent { name: "p", value: p, expected: "[1, ∞]" })
    }
}

/// Singular values of a square complex matrix, in descending order.
pub fn singular_values(m: &DMatrix<Complex64>) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Schatten p-norm `(Σ s_j^p)^{1/p}` over the singular values; the operator
/// norm at `p = ∞`.
pub fn schatten_norm(m: &DMatrix<Complex64>, p: f64) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::InvalidParameter("Schatten norm of a non-square matrix".into()));
    }
    validate_p(p)?;
    let sv = singular_values(m);
    if p.is_infinite() {
        return Ok(sv.first().copied().unwrap_or(0.0));
    }
    Ok(sv.iter().map(|s| s.powf(p)).sum::<f64>().powf(1.0 / p))
}

/// Hilbert-Schmidt (Frobenius) norm, summed directly over entries.
pub fn hs_norm(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Operator norm (largest singular value).
pub fn operator_norm(m: &DMatrix<Complex64>) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Numerical rank at [`RANK_THRESHOLD`] relative to the top singular value.
pub fn numerical_rank(m: &DMatrix<Complex64>) -> usize {
    let sv = singular_values(m);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|s| **s > RANK_THRESHOLD * top).count()
}

/// A matrix-valued family on the truncated dual, entry shapes `d_π × d_π`.
#[derive(Debug, Clone)]
pub struct SpectralSequence {
    entries: Vec<(DualPoint, DMatrix<Complex64>)>,
}

impl SpectralSequence {
    pub fn new(entries: Vec<(DualPoint, DMatrix<Complex64>)>) -> Result<Self> {
        for (point, matrix) in &entries {
            let d = point.dim as usize;
            if matrix.nrows() != d || matrix.ncols() != d {
                return Err(Error::InvalidParameter(format!(
                    "entry at label {} has shape {}x{}, expected {d}x{d}",
                    point.label,
                    matrix.nrows(),
                    matrix.ncols()
                )));
            }
        }
        Ok(Self { entries })
    }

    /// Scalar-valued sequence (commutative dual, `d_π = 1`).
    pub fn from_scalars<I: IntoIterator<Item = (DualPoint, Complex64)>>(values: I) -> Self {
        let entries = values
            .into_iter()
            .map(|(point, v)| (point, DMatrix::from_element(1, 1, v)))
            .collect();
        Self { entries }
    }

    pub fn entries(&self) -> &[(DualPoint, DMatrix<Complex64>)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `‖σ‖_{ℓ^p_sch}`: Schatten norms against the plain weight `k_π`.
pub fn lp_sch_norm(sigma: &SpectralSequence, p: f64) -> Result<f64> {
    validate_p(p)?;
    if p.is_infinite() {
        let sup = sigma
            .entries()
            .iter()
            .map(|(_, m)| operator_norm(m))
            .fold(0.0f64, f64::max);
        return Ok(sup);
    }
    let mut sum = 0.0;
    for (point, m) in sigma.entries() {
        sum += point.hyperdim * schatten_norm(m, p)?.powf(p);
    }
    Ok(sum.powf(1.0 / p))
}

/// `‖σ‖_{ℓ^p}`: Hilbert-Schmidt norms against the weight `k_π^{2-p/2}`.
pub fn lp_hs_norm(sigma: &SpectralSequence, p: f64) -> Result<f64> {
    validate_p(p)?;
    if p.is_infinite() {
        let sup = sigma
            .entries()
            .iter()
            .map(|(point, m)| hs_norm(m) / point.hyperdim.sqrt())
            .fold(0.0f64, f64::max);
        return Ok(sup);
    }
    let mut sum = 0.0;
    for (point, m) in sigma.entries() {
        sum += point.hyperdim.powf(2.0 - p / 2.0) * hs_norm(m).powf(p);
    }
    Ok(sum.powf(1.0 / p))
}

/// A strictly positive weight `φ` on the truncated dual.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    values: Vec<(DualPoint, f64)>,
}

impl WeightFunction {
    pub fn new(values: Vec<(DualPoint, f64)>) -> Result<Self> {
        for (point, phi) in &values {
            if !(*phi > 0.0 && phi.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "weight at label {} must be positive and finite, got {phi}",
                    point.label
                )));
            }
        }
        Ok(Self { values })
    }

    pub fn from_fn<F: FnMut(&DualPoint) -> f64>(dual: &[DualPoint], mut f: F) -> Result<Self> {
        Self::new(dual.iter().map(|point| (*point, f(point))).collect())
    }

    pub fn values(&self) -> &[(DualPoint, f64)] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.values.iter().map(|(point, phi)| (*point, phi * c)).collect())
    }
}

/// The Paley functional `M_φ = sup_{y>0} y Σ_{φ(π) ≥ y} k_π²`, computed
/// exactly as a max over the breakpoints `y ∈ {φ(π)}` (ties `φ(π) = y` are
/// included in the sum). Returns 0 on an empty dual.
pub fn mphi(phi: &WeightFunction) -> f64 {
    let mut pairs: Vec<(f64, f64)> = phi
        .values()
        .iter()
        .map(|(point, phi)| (*phi, point.hyperdim * point.hyperdim))
        .collect();
    // Descending by φ, so prefix sums accumulate the superlevel sets.
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut best = 0.0f64;
    let mut mass = 0.0f64;
    let mut i = 0;
    while i < pairs.len() {
        let y = pairs[i].0;
        // Pull the whole tie group into the superlevel set before scoring y.
        while i < pairs.len() && pairs[i].0 == y {
            mass += pairs[i].1;
            i += 1;
        }
        best = best.max(y * mass);
    }
    best
}

/// Distribution-function report: masses `ν_{K̂}(y) = Σ_{|a(π)| ≥ y} φ(π)²k_π²`
/// per threshold, nonincreasing in `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionReport {
    pub thresholds: Vec<f64>,
    pub masses: Vec<f64>,
}

/// Evaluates the distribution function of the amplitude sequence `a` against
/// the mass `φ²k²`, on a positive ascending grid of thresholds.
pub fn distribution_function(
    amplitudes: &[f64],
    phi: &WeightFunction,
    y_grid: &[f64],
) -> Result<DistributionReport> {
    if amplitudes.len() != phi.len() {
        return Err(Error::InvalidParameter(format!(
            "amplitude sequence has {} entries, weight has {}",
            amplitudes.len(),
            phi.len()
        )));
    }
    for pair in y_grid.windows(2) {
        if pair[0] > pair[1] {
            return Err(Error::InvalidParameter("threshold grid must be ascending".into()));
        }
    }
    if y_grid.iter().any(|y| !(*y > 0.0)) {
        return Err(Error::InvalidParameter("thresholds must be positive".into()));
    }
    let masses = y_grid
        .iter()
        .map(|&y| {
            amplitudes
                .iter()
                .zip(phi.values())
                .filter(|(a, _)| a.abs() >= y)
                .map(|(_, (point, phi))| phi * phi * point.hyperdim * point.hyperdim)
                .sum()
        })
        .collect();
    Ok(DistributionReport { thresholds: y_grid.to_vec(), masses })
}

/// The sublevel mass `Σ_{φ(π) ≤ w} φ(π)² k_π²`; it is bounded by `2·M_φ·w`
/// (asserted as a property in the verification suites).
pub fn paley_weight_sum(phi: &WeightFunction, w: f64) -> Result<f64> {
    if !(w > 0.0) {
        return Err(Error::InvalidParameter(format!("sublevel bound must be positive, got {w}")));
    }
    Ok(phi
        .values()
        .iter()
        .filter(|(_, phi)| *phi <= w)
        .map(|(point, phi)| phi * phi * point.hyperdim * point.hyperdim)
        .sum())
}

/// Relative slack for norm comparisons that can be exact equalities.
const EMBED_SLACK: f64 = 1e-12;

/// Both dual norms and whether the continuous-embedding direction holds:
/// `ℓ^p ↪ ℓ^p_sch` for `p ≤ 2` and `ℓ^p_sch ↪ ℓ^p` for `p ≥ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingCheck {
    pub lp_hs: f64,
    pub lp_sch: f64,
    pub holds: bool,
}

pub fn check_embeddings(sigma: &SpectralSequence, p: f64) -> Result<EmbeddingCheck> {
    validate_p(p)?;
    let lp_hs = lp_hs_norm(sigma, p)?;
    let lp_sch = lp_sch_norm(sigma, p)?;
    let (smaller, larger) = if p <= 2.0 { (lp_sch, lp_hs) } else { (lp_hs, lp_sch) };
    let holds = smaller <= larger + EMBED_SLACK * (1.0 + larger);
    Ok(EmbeddingCheck { lp_hs, lp_sch, holds })
}

/// The pointwise Schatten/HS comparison `‖M‖_{S^p}^p ≤ d^{(2-p)/2} ‖M‖_HS^p`
/// for `p ≤ 2`: returns (left side, right side, holds).
pub fn scht_pointwise_check(m: &DMatrix<Complex64>, p: f64) -> Result<(f64, f64, bool)> {
    validate_p(p)?;
    if p > 2.0 {
        return Err(Error::InvalidExponent { name: "p", value: p, expected: "[1, 2]" });
    }
    let d = m.nrows() as f64;
    let lhs = schatten_norm(m, p)?.powf(p);
    let rhs = d.powf((2.0 - p) / 2.0) * hs_norm(m).powf(p);
    let holds = lhs <= rhs + EMBED_SLACK * (1.0 + rhs);
    Ok((lhs, rhs, holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngExt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Independent singular-value oracle: embed the Hermitian matrix `M*M`
    /// as a real symmetric matrix of doubled size and diagonalize it with a
    /// cyclic Jacobi sweep; singular values are square roots of the (doubled)
    /// spectrum. No nalgebra code on this path.
    fn singular_values_oracle(m: &DMatrix<Complex64>) -> Vec<f64> {
        let d = m.nrows();
        let gram = m.adjoint() * m;
        // Hermitian B + iC -> real symmetric [[B, -C], [C, B]].
        let n = 2 * d;
        let mut a = vec![vec![0.0f64; n]; n];
        for i in 0..d {
            for j in 0..d {
                let z = gram[(i, j)];
                a[i][j] = z.re;
                a[i + d][j + d] = z.re;
                a[i][j + d] = -z.im;
                a[i + d][j] = z.im;
            }
        }
        // Cyclic Jacobi on the real symmetric embedding.
        for _sweep in 0..60 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[p][q] * a[p][q];
                }
            }
            if off.sqrt() < 1e-14 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    if a[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for i in 0..n {
                        let aip = a[i][p];
                        let aiq = a[i][q];
                        a[i][p] = c * aip - s * aiq;
                        a[i][q] = s * aip + c * aiq;
                    }
                    for i in 0..n {
                        let api = a[p][i];
                        let aqi = a[q][i];
                        a[p][i] = c * api - s * aqi;
                        a[q][i] = s * api + c * aqi;
                    }
                }
            }
        }
        let mut eigen: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        eigen.sort_by(|x, y| y.total_cmp(x));
        // Each eigenvalue of the complex Gram matrix appears twice.
        eigen.iter().step_by(2).map(|&e| e.max(0.0).sqrt()).collect()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<Complex64> {
        DMatrix::from_fn(d, d, |_, _| {
            Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)
        })
    }

    fn point(label: u32, k: f64, d: u32) -> DualPoint {
        DualPoint::new(label, k, d).unwrap()
    }

    #[test]
    fn schatten_norm_of_identity() {
        for d in [1usize, 3, 6] {
            let id = DMatrix::<Complex64>::identity(d, d);
            for p in [1.0, 1.5, 2.0, 3.0] {
                let norm = schatten_norm(&id, p).unwrap();
                assert!((norm - (d as f64).powf(1.0 / p)).abs() < 1e-12);
            }
            assert!((schatten_norm(&id, f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn schatten_two_is_hilbert_schmidt() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4);
            let s2 = schatten_norm(&m, 2.0).unwrap();
            assert!((s2 - hs_norm(&m)).abs() < 1e-12 * (1.0 + s2));
        }
    }

    #[test]
    fn singular_values_match_jacobi_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for trial in 0..30 {
            let m = random_matrix(&mut rng, 3);
            let got = singular_values(&m);
            let want = singular_values_oracle(&m);
            assert_eq!(got.len(), want.len());
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-12, "trial {trial}: {g} vs {w}");
            }
        }
    }

    #[test]
    fn schatten_rejects_bad_input() {
        let id = DMatrix::<Complex64>::identity(2, 2);
        assert!(schatten_norm(&id, 0.5).is_err());
        let rect = DMatrix::<Complex64>::zeros(2, 3);
        assert!(schatten_norm(&rect, 1.0).is_err());
    }

    #[test]
    fn sequence_norms_on_a_single_scalar_point() {
        let k = 9.0;
        let v = Complex64::new(-0.3, 0.4); // |v| = 0.5
        let sigma = SpectralSequence::from_scalars([(point(0, k, 1), v)]);
        for p in [1.0, 1.5, 2.0, 4.0] {
            let sch = lp_sch_norm(&sigma, p).unwrap();
            assert!((sch - k.powf(1.0 / p) * 0.5).abs() < 1e-13, "sch at p={p}");
            let hs = lp_hs_norm(&sigma, p).unwrap();
            assert!((hs - k.powf((2.0 - p / 2.0) / p) * 0.5).abs() < 1e-13, "hs at p={p}");
        }
        assert!((lp_sch_norm(&sigma, f64::INFINITY).unwrap() - 0.5).abs() < 1e-14);
        assert!((lp_hs_norm(&sigma, f64::INFINITY).unwrap() - 0.5 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn sequence_norms_match_direct_summation() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        let entries: Vec<(DualPoint, DMatrix<Complex64>)> = (0..5u32)
            .map(|label| {
                let d = 1 + (rng.random::<f64>() * 4.0) as usize;
                let k = d as f64 + rng.random::<f64>() * 5.0;
                (point(label, k, d as u32), random_matrix(&mut rng, d))
            })
            .collect();
        let sigma = SpectralSequence::new(entries.clone()).unwrap();
        for p in [1.0, 1.7, 2.0, 3.2] {
            let mut sch = 0.0f64;
            let mut hs = 0.0f64;
            for (pt, m) in &entries {
                let sv = singular_values_oracle(m);
                sch += pt.hyperdim * sv.iter().map(|s| s.powf(p)).sum::<f64>();
                let fro: f64 = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                hs += pt.hyperdim.powf(2.0 - p / 2.0) * fro.powf(p);
            }
            let got_sch = lp_sch_norm(&sigma, p).unwrap();
            let got_hs = lp_hs_norm(&sigma, p).unwrap();
            assert!((got_sch - sch.powf(1.0 / p)).abs() < 1e-11 * (1.0 + got_sch), "p = {p}");
            assert!((got_hs - hs.powf(1.0 / p)).abs() < 1e-11 * (1.0 + got_hs), "p = {p}");
        }
    }

    #[test]
    fn sequence_shape_validation() {
        let bad = vec![(point(0, 4.0, 2), DMatrix::<Complex64>::zeros(3, 3))];
        assert!(SpectralSequence::new(bad).is_err());
    }

    #[test]
    fn mphi_reference_values() {
        // Quantum weight φ(m) = (m+1)^{-6} with k = (m+1)²: the breakpoint
        // candidate at n = m+1 scores n^{-6} Σ_{j≤n} j^4, maximal at n = 1.
        let dual: Vec<DualPoint> =
            (0..=30u32).map(|m| point(m, ((m + 1) as f64).powi(2), 1)).collect();
        let phi = WeightFunction::from_fn(&dual, |pt| ((pt.label + 1) as f64).powi(-6)).unwrap();
        // Brute force over all breakpoints as an oracle.
        let brute = (1..=31u32)
            .map(|n| {
                let y = (n as f64).powi(-6);
                let mass: f64 = (1..=n).map(|j| (j as f64).powi(4)).sum();
                y * mass
            })
            .fold(0.0f64, f64::max);
        let got = mphi(&phi);
        assert_eq!(got, 1.0);
        assert!((got - brute).abs() < 1e-15);

        // Single point φ = c, k = 1.
        let single = WeightFunction::new(vec![(point(0, 1.0, 1), 0.7)]).unwrap();
        assert_eq!(mphi(&single), 0.7);

        // Constant weight: one breakpoint, value c·Σk².
        let constant = WeightFunction::from_fn(&dual, |_| 0.25).unwrap();
        let total_k2: f64 = dual.iter().map(|pt| pt.hyperdim * pt.hyperdim).sum();
        assert!((mphi(&constant) - 0.25 * total_k2).abs() < 1e-9 * total_k2);

        // Empty dual.
        let empty = WeightFunction::new(vec![]).unwrap();
        assert_eq!(mphi(&empty), 0.0);
    }

    #[test]
    fn mphi_is_positively_homogeneous_and_monotone_in_level() {
        let dual: Vec<DualPoint> =
            (0..=25u32).map(|m| point(m, ((m + 1) as f64).powi(2), 1)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let phi = WeightFunction::from_fn(&dual, |_| 0.01 + rng.random::<f64>()).unwrap();
            let m1 = mphi(&phi);
            for c in [2.0, 3.7, 0.125] {
                let m2 = mphi(&phi.scaled(c).unwrap());
                assert!((m2 - c * m1).abs() < 1e-12 * (1.0 + m2));
            }
            // Truncation monotonicity: dropping dual points cannot increase M_φ.
            let shorter = WeightFunction::new(phi.values()[..10].to_vec()).unwrap();
            assert!(mphi(&shorter) <= m1 + 1e-15);
        }
    }

    #[test]
    fn distribution_function_matches_filter_oracle() {
        let dual: Vec<DualPoint> =
            (0..=12u32).map(|m| point(m, ((m + 1) as f64).powi(2), 1)).collect();
        let phi = WeightFunction::from_fn(&dual, |pt| 1.0 / (1.0 + pt.label as f64)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let amplitudes: Vec<f64> = (0..phi.len()).map(|_| rng.random::<f64>()).collect();
        let grid: Vec<f64> = (1..=20).map(|i| i as f64 / 20.0).collect();
        let report = distribution_function(&amplitudes, &phi, &grid).unwrap();
        for (y, mass) in report.thresholds.iter().zip(&report.masses) {
            let want: f64 = amplitudes
                .iter()
                .zip(phi.values())
                .filter(|(a, _)| a.abs() >= *y)
                .map(|(_, (pt, w))| w * w * pt.hyperdim * pt.hyperdim)
                .sum();
            assert_eq!(*mass, want);
        }
        // Nonincreasing in y; zero above the max; full mass near zero.
        for pair in report.masses.windows(2) {
            assert!(pair[0] >= pair[1]);
        }
        let above = distribution_function(&amplitudes, &phi, &[2.0]).unwrap();
        assert_eq!(above.masses[0], 0.0);
        let tiny = distribution_function(&amplitudes, &phi, &[1e-300]).unwrap();
        let total: f64 =
            phi.values().iter().map(|(pt, w)| w * w * pt.hyperdim * pt.hyperdim).sum();
        assert_eq!(tiny.masses[0], total);
    }

    #[test]
    fn distribution_function_validates_grid() {
        let phi = WeightFunction::new(vec![(point(0, 1.0, 1), 1.0)]).unwrap();
        assert!(distribution_function(&[1.0], &phi, &[0.5, 0.2]).is_err());
        assert!(distribution_function(&[1.0], &phi, &[0.0, 0.2]).is_err());
        assert!(distribution_function(&[1.0, 2.0], &phi, &[0.5]).is_err());
    }

    #[test]
    fn paley_weight_sum_reference_values() {
        // w below the minimum: empty sum.
        let single = WeightFunction::new(vec![(point(0, 1.0, 1), 0.5)]).unwrap();
        assert_eq!(paley_weight_sum(&single, 0.1).unwrap(), 0.0);
        // Single point: c² ≤ 2·c·w for w ≥ c.
        let c = 0.5;
        let got = paley_weight_sum(&single, 1.0).unwrap();
        assert_eq!(got, c * c);
        assert!(got <= 2.0 * mphi(&single) * 1.0);
        // φ(m) = (m+1)^{-6}, w = 1: Σ n^{-8} ≈ 1.00408 < 2·M_φ·1 = 2.
        let dual: Vec<DualPoint> =
            (0..=60u32).map(|m| point(m, ((m + 1) as f64).powi(2), 1)).collect();
        let phi = WeightFunction::from_fn(&dual, |pt| ((pt.label + 1) as f64).powi(-6)).unwrap();
        let sum = paley_weight_sum(&phi, 1.0).unwrap();
        assert!((sum - 1.00408).abs() < 1e-5, "Σ n^-8 partial = {sum}");
        assert!(sum <= 2.0 * mphi(&phi));
        assert!(paley_weight_sum(&phi, 0.0).is_err());
    }

    #[test]
    fn weight_sum_lemma_with_constant_two() {
        // Σ_{φ≤w} φ²k² ≤ 2·M_φ·w on random weights and a w-grid.
        let dual: Vec<DualPoint> =
            (0..=30u32).map(|m| point(m, ((m + 1) as f64).powi(2), 1)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..25 {
            let phi = WeightFunction::from_fn(&dual, |pt| {
                (0.01 + rng.random::<f64>()) * (1.0 + pt.label as f64).powi(-4)
            })
            .unwrap();
            let m = mphi(&phi);
            for i in 1..=50 {
                let w = i as f64 / 10.0;
                let sum = paley_weight_sum(&phi, w).unwrap();
                assert!(sum <= 2.0 * m * w * (1.0 + 1e-12), "w = {w}: {sum} vs {}", 2.0 * m * w);
            }
        }
    }

    #[test]
    fn embeddings_coincide_at_two_and_order_correctly() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..50 {
            let entries: Vec<(DualPoint, DMatrix<Complex64>)> = (0..4u32)
                .map(|label| {
                    let d = 1 + (rng.random::<f64>() * 3.0) as usize;
                    let k = d as f64 + rng.random::<f64>() * 8.0;
                    (point(label, k, d as u32), random_matrix(&mut rng, d))
                })
                .collect();
            let sigma = SpectralSequence::new(entries).unwrap();
            let at_two = check_embeddings(&sigma, 2.0).unwrap();
            assert!(
                (at_two.lp_hs - at_two.lp_sch).abs() < 1e-12 * (1.0 + at_two.lp_hs),
                "trial {trial}: p=2 norms differ"
            );
            for p in [1.0, 1.5, 3.0, f64::INFINITY] {
                let check = check_embeddings(&sigma, p).unwrap();
                assert!(check.holds, "trial {trial}, p = {p}: {check:?}");
            }
        }
    }

    #[test]
    fn embeddings_equal_for_unit_hyperdimension_scalars() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let sigma = SpectralSequence::from_scalars((0..6u32).map(|label| {
            (point(label, 1.0, 1), Complex64::new(rng.random::<f64>(), rng.random::<f64>()))
        }));
        for p in [1.0, 1.3, 2.0, 5.0] {
            let check = check_embeddings(&sigma, p).unwrap();
            assert!((check.lp_hs - check.lp_sch).abs() < 1e-13 * (1.0 + check.lp_hs), "p = {p}");
        }
    }

    #[test]
    fn pointwise_schatten_bound() {
        // Identity: equality d = d^{(2-p)/2} d^{p/2}.
        let id = DMatrix::<Complex64>::identity(5, 5);
        let (lhs, rhs, holds) = scht_pointwise_check(&id, 1.4).unwrap();
        assert!(holds);
        assert!((lhs - 5.0).abs() < 1e-12);
        assert!((rhs - 5.0).abs() < 1e-12);
        // 1x1 rank-one: both sides are s₁^p.
        let one = DMatrix::from_element(1, 1, Complex64::new(0.0, -2.0));
        let (lhs, rhs, _) = scht_pointwise_check(&one, 1.3).unwrap();
        assert!((lhs - 2.0f64.powf(1.3)).abs() < 1e-12);
        assert!((rhs - lhs).abs() < 1e-12);
        // Rank-one d×d: left side is s₁^p and the bound holds.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let col =
            DMatrix::from_fn(4, 1, |_, _| Complex64::new(rng.random::<f64>(), rng.random::<f64>()));
        let row =
            DMatrix::from_fn(1, 4, |_, _| Complex64::new(rng.random::<f64>(), rng.random::<f64>()));
        let rank_one = col * row;
        let s1 = operator_norm(&rank_one);
        let (lhs, _, holds) = scht_pointwise_check(&rank_one, 1.3).unwrap();
        assert!(holds);
        assert!((lhs - s1.powf(1.3)).abs() < 1e-11 * (1.0 + lhs));
        assert_eq!(numerical_rank(&rank_one), 1);
        // Random 4×4 at p = 1.3 via the oracle.
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4);
            let (lhs, rhs, holds) = scht_pointwise_check(&m, 1.3).unwrap();
            assert!(holds, "{lhs} vs {rhs}");
        }
        assert!(scht_pointwise_check(&id, 2.5).is_err());
    }
}

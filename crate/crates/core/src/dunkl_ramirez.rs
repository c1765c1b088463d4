//! The countable compact hypergroup `H_a` on `ℕ₀ ∪ {∞}`, for `0 < a ≤ 1/2`.
//!
//! Point convolution is `δ_m ∗ δ_n = δ_min{m,n}` for `m ≠ n`, `δ_m ∗ δ_∞ =
//! δ_m`, and the self-convolution spreads mass geometrically upward:
//!
//! ```text
//! (δ_m ∗ δ_m)({t}) = (1-2a)/(1-a)  at t = m,
//!                  = a^k           at t = m + k, k ≥ 1,
//!                  = 0             at t = ∞ and below m.
//! ```
//!
//! The Haar measure is `λ({k}) = a^k (1-a)`, `λ({∞}) = 0`; the characters are
//! `χ_n(k) = 0` for `k < n-1`, `a/(a-1)` at `k = n-1`, and `1` for `k ≥ n`
//! (including `∞`), with Plancherel weights `ω(χ_0) = 1`,
//! `ω(χ_n) = (1-a) a^{-n}`.
//!
//! Everything in the measure algebra is rational in `a`, so the tables,
//! masses and character pairings are computed with exact [`BigRational`]
//! arithmetic; only norms with non-integer exponents go through floats. The
//! closure class of point-mass convolutions is captured exactly by
//! [`GeometricTailMeasure`] (finite atoms + geometric tails + an atom at ∞),
//! and integrands by [`EventuallyConstant`] functions, so pairings sum in
//! closed form. General measure∗measure convolution is not represented
//! (tail∗tail escapes the descriptor class); the algebra structure is instead
//! verified through characters, which separate all measures appearing here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hypergroup::{DualPoint, HaarQuadrature, Hypergroup};
use crate::{Error, Result};

/// The parameter `a ∈ (0, 1/2]`, kept both as an exact rational and a float.
#[derive(Debug, Clone, PartialEq)]
pub struct HaParameter {
    exact: BigRational,
    float: f64,
}

impl HaParameter {
    pub fn new(exact: BigRational) -> Result<Self> {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        if exact <= BigRational::zero() || exact > half {
            return Err(Error::InvalidParameter(format!(
                "H_a parameter must lie in (0, 1/2], got {exact}"
            )));
        }
        let float = exact.to_f64().expect("parameter in (0, 1/2] converts to f64");
        Ok(Self { exact, float })
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidParameter("H_a parameter denominator is zero".into()));
        }
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Parses `"num/den"` (or a bare integer numerator).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let numer: i64 = num
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad H_a parameter {text:?}")))?;
        let denom: i64 = den
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad H_a parameter {text:?}")))?;
        Self::from_ratio(numer, denom)
    }

    pub fn value(&self) -> f64 {
        self.float
    }

    pub fn exact(&self) -> &BigRational {
        &self.exact
    }
}

impl std::fmt::Display for HaParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.exact)
    }
}

/// A point of `ℕ₀* = ℕ₀ ∪ {∞}`. The derived order puts `∞` on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointOrInfinity {
    Finite(u32),
    Infinity,
}

pub use PointOrInfinity::{Finite, Infinity};

/// One geometric tail `Σ_{j≥1} scale · a^j · δ_{start+j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricTail {
    pub start: u32,
    pub scale: BigRational,
}

/// A measure on `ℕ₀*` as finite atoms + geometric tails + an atom at `∞`.
///
/// This class contains every `δ_x ∗ δ_y` and is closed under the pairings
/// used here; its total mass has a closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricTailMeasure {
    pub atoms: BTreeMap<u32, BigRational>,
    pub tails: Vec<GeometricTail>,
    pub infinity_atom: BigRational,
}

impl GeometricTailMeasure {
    pub fn dirac(x: PointOrInfinity) -> Self {
        let mut atoms = BTreeMap::new();
        let mut infinity_atom = BigRational::zero();
        match x {
            Finite(k) => {
                atoms.insert(k, BigRational::one());
            }
            Infinity => infinity_atom = BigRational::one(),
        }
        Self { atoms, tails: Vec::new(), infinity_atom }
    }
}

/// A function on `ℕ₀*` determined by finitely many prefix values and a
/// constant from `prefix.len()` on; the value at `∞` equals the tail
/// constant (the continuous extension). Characters live here: `χ_n` has
/// tail 1 from index `n` on.
#[derive(Debug, Clone, PartialEq)]
pub struct EventuallyConstant {
    prefix: Vec<BigRational>,
    tail: BigRational,
}

impl EventuallyConstant {
    pub fn new(mut prefix: Vec<BigRational>, tail: BigRational) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Self { prefix, tail }
    }

    pub fn constant(value: BigRational) -> Self {
        Self { prefix: Vec::new(), tail: value }
    }

    /// Index from which the function is constant.
    pub fn tail_start(&self) -> u32 {
        self.prefix.len() as u32
    }

    pub fn tail_value(&self) -> &BigRational {
        &self.tail
    }

    pub fn eval(&self, x: PointOrInfinity) -> BigRational {
        match x {
            Finite(k) => self
                .prefix
                .get(k as usize)
                .cloned()
                .unwrap_or_else(|| self.tail.clone()),
            Infinity => self.tail.clone(),
        }
    }

    fn zip_with<F: Fn(&BigRational, &BigRational) -> BigRational>(
        &self,
        other: &Self,
        op: F,
    ) -> Self {
        let len = self.prefix.len().max(other.prefix.len());
        let prefix = (0..len as u32)
            .map(|k| op(&self.eval(Finite(k)), &other.eval(Finite(k))))
            .collect();
        Self::new(prefix, op(&self.tail, &other.tail))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x * y)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.prefix.iter().map(|v| v * c).collect(), &self.tail * c)
    }

    /// Sup of `|f|` over `ℕ₀*`, including the value at `∞`.
    pub fn sup_abs(&self) -> BigRational {
        self.prefix
            .iter()
            .map(|v| v.abs())
            .fold(self.tail.abs(), |acc, v| if v > acc { v } else { acc })
    }
}

fn rational_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// The `H_a` hypergroup instance.
#[derive(Debug, Clone, PartialEq)]
pub struct DunklRamirez {
    a: HaParameter,
}

impl DunklRamirez {
    pub fn new(a: HaParameter) -> Self {
        Self { a }
    }

    pub fn parameter(&self) -> &HaParameter {
        &self.a
    }

    fn a(&self) -> &BigRational {
        self.a.exact()
    }

    /// `λ({k}) = a^k (1-a)`; `λ({∞}) = 0`.
    pub fn haar_weight(&self, x: PointOrInfinity) -> BigRational {
        match x {
            Finite(k) => rational_pow(self.a(), k) * (BigRational::one() - self.a()),
            Infinity => BigRational::zero(),
        }
    }

    /// The Haar measure as a geometric-tail descriptor:
    /// atom `1-a` at 0 plus the tail `Σ_{j≥1} (1-a) a^j δ_j`.
    pub fn haar_measure(&self) -> GeometricTailMeasure {
        let one_minus_a = BigRational::one() - self.a();
        let mut atoms = BTreeMap::new();
        atoms.insert(0, one_minus_a.clone());
        GeometricTailMeasure {
            atoms,
            tails: vec![GeometricTail { start: 0, scale: one_minus_a }],
            infinity_atom: BigRational::zero(),
        }
    }

    /// `χ_n(x)` exactly.
    pub fn character_exact(&self, n: u32, x: PointOrInfinity) -> BigRational {
        if n == 0 {
            return BigRational::one();
        }
        match x {
            Infinity => BigRational::one(),
            Finite(k) => {
                if k + 1 < n {
                    BigRational::zero()
                } else if k + 1 == n {
                    // a / (a - 1)
                    self.a() / (self.a() - BigRational::one())
                } else {
                    BigRational::one()
                }
            }
        }
    }

    /// `χ_n` as an eventually constant function (tail 1 from index `n` on).
    pub fn character_function(&self, n: u32) -> EventuallyConstant {
        let prefix = (0..n).map(|k| self.character_exact(n, Finite(k))).collect();
        EventuallyConstant::new(prefix, BigRational::one())
    }

    /// Plancherel weight `ω(χ_0) = 1`, `ω(χ_n) = (1-a) a^{-n}` for `n ≥ 1`;
    /// equals the hyperdimension `k_χ`.
    pub fn plancherel_weight(&self, n: u32) -> BigRational {
        if n == 0 {
            BigRational::one()
        } else {
            (BigRational::one() - self.a()) / rational_pow(self.a(), n)
        }
    }

    /// `δ_m ∗ δ_n`, exactly.
    pub fn point_convolve(
        &self,
        m: PointOrInfinity,
        n: PointOrInfinity,
    ) -> GeometricTailMeasure {
        match (m, n) {
            (Infinity, Infinity) => GeometricTailMeasure::dirac(Infinity),
            (Finite(m), Infinity) | (Infinity, Finite(m)) => {
                GeometricTailMeasure::dirac(Finite(m))
            }
            (Finite(m), Finite(n)) if m != n => GeometricTailMeasure::dirac(Finite(m.min(n))),
            (Finite(m), Finite(_)) => {
                // (1-2a)/(1-a) at m, weight a^k at m+k.
                let one = BigRational::one();
                let two = BigRational::from(BigInt::from(2));
                let atom = (&one - two * self.a()) / (&one - self.a());
                let mut atoms = BTreeMap::new();
                if !atom.is_zero() {
                    atoms.insert(m, atom);
                }
                GeometricTailMeasure {
                    atoms,
                    tails: vec![GeometricTail { start: m, scale: BigRational::one() }],
                    infinity_atom: BigRational::zero(),
                }
            }
        }
    }

    /// Total mass of a geometric-tail measure, in closed form:
    /// `Σ atoms + Σ scale · a/(1-a) + infinity_atom`.
    pub fn measure_mass(&self, mu: &GeometricTailMeasure) -> BigRational {
        let geometric = self.a() / (BigRational::one() - self.a());
        let atoms: BigRational = mu.atoms.values().sum();
        let tails: BigRational = mu.tails.iter().map(|t| &t.scale * &geometric).sum();
        atoms + tails + &mu.infinity_atom
    }

    /// `∫ f dμ`, exactly; geometric tails against the eventually constant
    /// part sum in closed form.
    pub fn integrate_against(
        &self,
        mu: &GeometricTailMeasure,
        f: &EventuallyConstant,
    ) -> BigRational {
        let mut out = BigRational::zero();
        for (&k, w) in &mu.atoms {
            out += w * f.eval(Finite(k));
        }
        let prefix_end = f.tail_start();
        for tail in &mu.tails {
            // Explicit terms while start + j lands in the prefix.
            let first_constant_j =
                if prefix_end > tail.start { prefix_end - tail.start } else { 1 };
            for j in 1..first_constant_j {
                out += &tail.scale * rational_pow(self.a(), j) * f.eval(Finite(tail.start + j));
            }
            // Constant part: Σ_{j ≥ J} a^j = a^J / (1-a).
            let j0 = first_constant_j.max(1);
            let geometric = rational_pow(self.a(), j0) / (BigRational::one() - self.a());
            out += &tail.scale * geometric * f.tail_value();
        }
        out += &mu.infinity_atom * f.eval(Infinity);
        out
    }

    /// Dual convolution `δ_χm ∗ δ_χn` on `ℕ₀ ≅ Ĥ_a`, dictated by the
    /// pointwise product `χ_m χ_n = Σ_j c_j χ_j`. Exact; total mass 1.
    pub fn dual_convolve(&self, m: u32, n: u32) -> BTreeMap<u32, BigRational> {
        let mut out = BTreeMap::new();
        if m != n {
            out.insert(m.max(n), BigRational::one());
            return out;
        }
        if m == 0 {
            out.insert(0, BigRational::one());
            return out;
        }
        let one = BigRational::one();
        let one_minus_a = &one - self.a();
        out.insert(0, rational_pow(self.a(), n) / &one_minus_a);
        for k in 1..n {
            out.insert(k, rational_pow(self.a(), n - k));
        }
        let top = (&one - BigRational::from(BigInt::from(2)) * self.a()) / &one_minus_a;
        if !top.is_zero() {
            out.insert(n, top);
        }
        out
    }

    /// `‖f‖₂²` exactly: `Σ_{k<N} |f(k)|² a^k(1-a) + |tail|² a^N`.
    pub fn l2_norm_squared_exact(&self, f: &EventuallyConstant) -> BigRational {
        self.integrate_against(&self.haar_measure(), &f.mul(f))
    }

    /// `L^p(H_a)` norm with the tail mass `Σ_{k≥N} a^k(1-a) = a^N` in closed
    /// form; the final root (and any non-integer power) is floating point.
    /// `p = ∞` is the sup over the prefix, tail and `∞`.
    pub fn lp_norm_exact(&self, f: &EventuallyConstant, p: f64) -> Result<f64> {
        if !(p >= 1.0) {
            return Err(Error::InvalidExponent { name: "p", value: p, expected: "[1, ∞]" });
        }
        if p.is_infinite() {
            return Ok(f.sup_abs().to_f64().expect("sup of rational values"));
        }
        let a = self.a.value();
        let n = f.tail_start();
        let mut sum = 0.0f64;
        for k in 0..n {
            let v = f.eval(Finite(k)).to_f64().expect("prefix value");
            sum += v.abs().powf(p) * a.powi(k as i32) * (1.0 - a);
        }
        let tail = f.tail_value().to_f64().expect("tail value");
        sum += tail.abs().powf(p) * a.powi(n as i32);
        Ok(sum.powf(1.0 / p))
    }
}

impl Hypergroup for DunklRamirez {
    type Point = PointOrInfinity;

    fn name(&self) -> &'static str {
        "dunkl_ramirez"
    }

    fn dual_point(&self, label: u32) -> DualPoint {
        // Float route of ω(χ_n) = (1-a)a^{-n}; the exact rational weight
        // stays on the measure-algebra side.
        let a = self.a.value();
        let k = if label == 0 { 1.0 } else { (1.0 - a) * a.powi(-(label as i32)) };
        assert!(
            k.is_finite(),
            "Plancherel weight overflows f64 at label {label}; lower the truncation level"
        );
        DualPoint::scalar(label, k)
    }

    fn character(&self, label: u32, x: &PointOrInfinity) -> f64 {
        let a = self.a.value();
        if label == 0 {
            return 1.0;
        }
        match *x {
            Infinity => 1.0,
            Finite(k) => {
                if k + 1 < label {
                    0.0
                } else if k + 1 == label {
                    a / (a - 1.0)
                } else {
                    1.0
                }
            }
        }
    }

    /// Exact finite quadrature for functions that are constant from
    /// `max_label` on: points `0..max_label` with Haar weights, plus one
    /// node at `max_label` carrying the whole tail mass `a^max_label`.
    fn haar_quadrature(&self, max_label: u32) -> HaarQuadrature<PointOrInfinity> {
        let a = self.a.value();
        let mut nodes = Vec::with_capacity(max_label as usize + 1);
        for k in 0..max_label {
            nodes.push((Finite(k), a.powi(k as i32) * (1.0 - a)));
        }
        nodes.push((Finite(max_label), a.powi(max_label as i32)));
        HaarQuadrature { nodes, max_label }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergroup::CharacterPolynomial;
    use num_complex::Complex64;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn third() -> DunklRamirez {
        DunklRamirez::new(HaParameter::from_ratio(1, 3).unwrap())
    }

    #[test]
    fn parameter_range_is_enforced() {
        assert!(HaParameter::from_ratio(1, 3).is_ok());
        assert!(HaParameter::from_ratio(1, 2).is_ok());
        assert!(HaParameter::from_ratio(2, 3).is_err());
        assert!(HaParameter::from_ratio(0, 1).is_err());
        assert!(HaParameter::from_ratio(-1, 3).is_err());
        assert!(HaParameter::parse("1/4").is_ok());
        assert!(HaParameter::parse("junk").is_err());
    }

    #[test]
    fn haar_weights() {
        let h = third();
        assert_eq!(h.haar_weight(Finite(0)), rat(2, 3));
        assert_eq!(h.haar_weight(Finite(2)), rat(2, 27));
        assert_eq!(h.haar_weight(Infinity), BigRational::zero());
        // Prefix plus closed-form tail is exactly 1.
        for n in [1u32, 5, 12] {
            let prefix: BigRational = (0..n).map(|k| h.haar_weight(Finite(k))).sum();
            assert_eq!(prefix + rational_pow(h.a(), n), BigRational::one());
        }
    }

    #[test]
    fn character_table_values() {
        let h = third();
        for x in [Finite(0), Finite(7), Infinity] {
            assert_eq!(h.character_exact(0, x), BigRational::one());
        }
        assert_eq!(h.character_exact(1, Finite(0)), rat(-1, 2)); // a/(a-1)
        assert_eq!(h.character_exact(2, Finite(0)), BigRational::zero());
        assert_eq!(h.character_exact(2, Finite(5)), BigRational::one());
        assert_eq!(h.character_exact(9, Infinity), BigRational::one());
    }

    #[test]
    fn plancherel_weights_match_orthogonality() {
        let h = third();
        assert_eq!(h.plancherel_weight(0), BigRational::one());
        assert_eq!(h.plancherel_weight(2), BigRational::from(BigInt::from(6)));
        // ∫ |χ_n|² dλ = 1/ω(χ_n), exactly; e.g. n = 1 gives a/(1-a) = 1/2.
        assert_eq!(h.l2_norm_squared_exact(&h.character_function(1)), rat(1, 2));
        for n in 0..=8u32 {
            let norm_sq = h.l2_norm_squared_exact(&h.character_function(n));
            assert_eq!(norm_sq * h.plancherel_weight(n), BigRational::one(), "n = {n}");
        }
    }

    #[test]
    fn hyperdimension_dominates_dimension() {
        for (num, den) in [(1i64, 4i64), (1, 3), (1, 2)] {
            let h = DunklRamirez::new(HaParameter::from_ratio(num, den).unwrap());
            for n in 0..=20 {
                assert!(h.plancherel_weight(n) >= BigRational::one());
            }
        }
    }

    #[test]
    fn point_convolution_table() {
        let h = third();
        assert_eq!(h.point_convolve(Finite(1), Finite(3)), GeometricTailMeasure::dirac(Finite(1)));
        assert_eq!(h.point_convolve(Finite(4), Infinity), GeometricTailMeasure::dirac(Finite(4)));
        assert_eq!(h.point_convolve(Infinity, Infinity), GeometricTailMeasure::dirac(Infinity));
        let self_conv = h.point_convolve(Finite(1), Finite(1));
        assert_eq!(self_conv.atoms.get(&1), Some(&rat(1, 2)));
        assert_eq!(self_conv.tails.len(), 1);
        assert_eq!(self_conv.tails[0].start, 1);
        assert_eq!(self_conv.tails[0].scale, BigRational::one());
        assert_eq!(self_conv.infinity_atom, BigRational::zero());
        assert_eq!(h.measure_mass(&self_conv), BigRational::one());
    }

    #[test]
    fn convolutions_are_probability_measures_and_commute() {
        for (num, den) in [(1i64, 4i64), (1, 3), (1, 2)] {
            let h = DunklRamirez::new(HaParameter::from_ratio(num, den).unwrap());
            let points: Vec<PointOrInfinity> = (0..=6).map(Finite).chain([Infinity]).collect();
            for &m in &points {
                for &n in &points {
                    let mu = h.point_convolve(m, n);
                    assert_eq!(h.measure_mass(&mu), BigRational::one(), "mass δ{m:?}∗δ{n:?}");
                    assert_eq!(mu, h.point_convolve(n, m), "commutativity at {m:?},{n:?}");
                }
            }
        }
    }

    #[test]
    fn dual_convolution_table() {
        let h = third();
        // a/(1-a) = 1/2 and (1-2a)/(1-a) = 1/2 at a = 1/3.
        let d11 = h.dual_convolve(1, 1);
        assert_eq!(d11.get(&0), Some(&rat(1, 2)));
        assert_eq!(d11.get(&1), Some(&rat(1, 2)));
        assert_eq!(d11.len(), 2);
        let d25 = h.dual_convolve(2, 5);
        assert_eq!(d25.get(&5), Some(&BigRational::one()));
        assert_eq!(d25.len(), 1);
        let d00 = h.dual_convolve(0, 0);
        assert_eq!(d00.get(&0), Some(&BigRational::one()));
        assert_eq!(d00.len(), 1);
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                let mass: BigRational = h.dual_convolve(m, n).values().sum();
                assert_eq!(mass, BigRational::one(), "dual mass at ({m},{n})");
            }
        }
    }

    #[test]
    fn integrate_against_reference_values() {
        let h = third();
        // δ_x pairs to a point evaluation.
        let f = h.character_function(3);
        for x in [Finite(0), Finite(2), Finite(9), Infinity] {
            assert_eq!(h.integrate_against(&GeometricTailMeasure::dirac(x), &f), f.eval(x));
        }
        // (δ_1 ∗ δ_1) paired with χ_1: (1/2)·1 + Σ_{k≥1} 3^{-k} = 1 = χ_1(1)².
        let mu = h.point_convolve(Finite(1), Finite(1));
        assert_eq!(h.integrate_against(&mu, &h.character_function(1)), BigRational::one());
        // Same measure against χ_2: a²/(1-a)² = 1/4 = χ_2(1)².
        assert_eq!(h.integrate_against(&mu, &h.character_function(2)), rat(1, 4));
    }

    #[test]
    fn characters_are_multiplicative_on_convolutions() {
        // (δ_m ∗ δ_k)(χ_n) = χ_n(m) χ_n(k), exactly — the defining property.
        for (num, den) in [(1i64, 4i64), (1, 3), (1, 2)] {
            let h = DunklRamirez::new(HaParameter::from_ratio(num, den).unwrap());
            let points: Vec<PointOrInfinity> = (0..=6).map(Finite).chain([Infinity]).collect();
            for &m in &points {
                for &k in &points {
                    let mu = h.point_convolve(m, k);
                    for n in 0..=6u32 {
                        let lhs = h.integrate_against(&mu, &h.character_function(n));
                        let rhs = h.character_exact(n, m) * h.character_exact(n, k);
                        assert_eq!(lhs, rhs, "m={m:?} k={k:?} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn dual_table_expands_pointwise_products() {
        // χ_m(k) χ_n(k) = Σ_j (δ_χm ∗ δ_χn)({j}) χ_j(k), exactly.
        for (num, den) in [(1i64, 4i64), (1, 3), (1, 2)] {
            let h = DunklRamirez::new(HaParameter::from_ratio(num, den).unwrap());
            for m in 0..=6u32 {
                for n in 0..=6u32 {
                    let conv = h.dual_convolve(m, n);
                    for k in (0..=8).map(Finite).chain([Infinity]) {
                        let lhs = h.character_exact(m, k) * h.character_exact(n, k);
                        let rhs: BigRational =
                            conv.iter().map(|(&j, c)| c * h.character_exact(j, k)).sum();
                        assert_eq!(lhs, rhs, "m={m} n={n} k={k:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn exact_gram_is_diagonal() {
        let h = third();
        let haar = h.haar_measure();
        assert_eq!(h.measure_mass(&haar), BigRational::one());
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let product = h.character_function(m).mul(&h.character_function(n));
                let pairing = h.integrate_against(&haar, &product);
                let want = if m == n {
                    BigRational::one() / h.plancherel_weight(m)
                } else {
                    BigRational::zero()
                };
                assert_eq!(pairing, want, "Gram({m},{n})");
            }
        }
    }

    #[test]
    fn lp_norm_reference_values() {
        let h = third();
        let one = EventuallyConstant::constant(BigRational::one());
        assert!((h.lp_norm_exact(&one, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((h.lp_norm_exact(&one, 3.5).unwrap() - 1.0).abs() < 1e-15);
        // ‖χ_1‖₂ = (a/(1-a))^{1/2} = (1/2)^{1/2} at a = 1/3.
        let chi1 = h.character_function(1);
        let l2 = h.lp_norm_exact(&chi1, 2.0).unwrap();
        assert!((l2 - 0.5f64.sqrt()).abs() < 1e-15);
        // Indicator of {0} in L¹: mass of the atom, 1 - a.
        let ind = EventuallyConstant::new(vec![BigRational::one()], BigRational::zero());
        assert!((h.lp_norm_exact(&ind, 1.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        // Sup norm includes the tail (and ∞) value.
        let f = EventuallyConstant::new(vec![rat(1, 2)], rat(-3, 1));
        assert!((h.lp_norm_exact(&f, f64::INFINITY).unwrap() - 3.0).abs() < 1e-15);
        assert!(h.lp_norm_exact(&one, 0.5).is_err());
    }

    #[test]
    fn float_quadrature_matches_exact_orthogonality() {
        let h = third();
        let level = 12;
        let quad = h.haar_quadrature(level);
        let total: f64 = quad.nodes.iter().map(|(_, w)| w).sum();
        assert!((total - 1.0).abs() < 1e-15);
        for m in 0..=level {
            for n in 0..=level {
                let value: f64 = quad
                    .nodes
                    .iter()
                    .map(|(x, w)| h.character(m, x) * h.character(n, x) * w)
                    .sum();
                let want = if m == n { 1.0 / h.dual_point(m).hyperdim } else { 0.0 };
                assert!((value - want).abs() < 1e-13, "Gram({m},{n}) = {value}");
            }
        }
    }

    #[test]
    fn algebraic_and_sampled_transforms_agree() {
        let h = third();
        let f = CharacterPolynomial::from_coeffs([
            (0, Complex64::new(0.3, -0.1)),
            (2, Complex64::new(-1.25, 0.5)),
            (5, Complex64::new(0.0, 2.0)),
        ]);
        let exact = h.algebraic_transform(&f);
        let sampled = h.fourier_transform_polynomial(&f, 6);
        for l in 0..=6 {
            let err = (exact.value(l) - sampled.value(l)).norm();
            assert!(err < 1e-12, "label {l}: {err:e}");
        }
    }
}

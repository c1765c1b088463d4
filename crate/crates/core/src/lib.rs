//! Fourier analysis on compact commutative hypergroups.
//!
//! A compact commutative hypergroup `K` carries a normalized Haar measure and
//! a countable dual `K̂` of real characters satisfying the orthogonality
//! relation `∫ χ_π χ̄_π' dλ = δ_ππ' / k_π`, where `k_π ≥ 1` is the
//! hyperdimension of `π` (the Plancherel weight in the commutative case).
//! Unlike compact groups, `k_π` generally exceeds the matrix dimension, which
//! changes the weights in every classical Fourier inequality.
//!
//! Two concrete instances are provided:
//!
//! * [`conj_su2::ConjSu2`] — the hypergroup of conjugacy classes of SU(2),
//!   identified with `[0,1]`, with characters `sin((m+1)πt)/((m+1)sin(πt))`
//!   and hyperdimensions `(m+1)²`;
//! * [`dunkl_ramirez::DunklRamirez`] — the countable compact hypergroup `H_a`
//!   on `ℕ₀ ∪ {∞}` for `0 < a ≤ 1/2`, with an exact rational measure algebra.
//!
//! On top of the transforms sit weighted sequence norms on the dual
//! ([`spectra`]), verification suites for the Hausdorff-Young, Paley,
//! Hardy-Littlewood and Hausdorff-Young-Paley inequalities
//! ([`inequalities`]), diagonal Fourier multipliers with a Hörmander-type
//! `L^p → L^q` bound ([`multipliers`]), and a batch experiment runner
//! ([`cli`]) behind the `hyperf` binary.

pub mod cli;
pub mod conj_su2;
pub mod dunkl_ramirez;
pub mod error;
pub mod hypergroup;
pub mod inequalities;
pub mod multipliers;
pub mod parallel;
pub mod quadrature;
pub mod spectra;

pub use error::Error;
pub use hypergroup::{CharacterPolynomial, DualPoint, FourierCoefficients, Hypergroup};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

//! Transform-layer contracts on both instances: orthogonality-driven
//! coefficients, inversion, convolution, and the two norm routes.

use num_complex::Complex64;

use hyperf_core::conj_su2::ConjSu2;
use hyperf_core::dunkl_ramirez::{DunklRamirez, HaParameter};
use hyperf_core::hypergroup::{CharacterPolynomial, FourierCoefficients, Hypergroup};
use hyperf_core::inequalities::{self as ineq, FamilyKind};

fn dunkl_third() -> DunklRamirez {
    DunklRamirez::new(HaParameter::from_ratio(1, 3).unwrap())
}

fn single_character_transform_is_delta<H: Hypergroup>(instance: &H) {
    let level = 8;
    let l = 3u32;
    let f = CharacterPolynomial::character(l);
    // Sampled path: f̂(l') = δ_{l l'} / k_l by orthogonality.
    let coeffs = instance.fourier_transform_polynomial(&f, level);
    for lp in 0..=level {
        let want = if lp == l { 1.0 / instance.hyperdim(l) } else { 0.0 };
        let got = coeffs.value(lp);
        assert!((got.re - want).abs() < 1e-12, "{}: f̂({lp}) = {got}", instance.name());
        assert!(got.im.abs() < 1e-12);
    }
}

#[test]
fn single_character_transforms() {
    single_character_transform_is_delta(&ConjSu2);
    single_character_transform_is_delta(&dunkl_third());
}

fn constant_function_transform<H: Hypergroup>(instance: &H) {
    let one = CharacterPolynomial::constant(Complex64::new(1.0, 0.0));
    let coeffs = instance.fourier_transform_polynomial(&one, 6);
    assert!((coeffs.value(0).re - 1.0).abs() < 1e-12, "{}", instance.name());
    for l in 1..=6 {
        assert!(coeffs.value(l).norm() < 1e-12);
    }
    // ‖1‖_p = 1 for every p on a probability space.
    for p in [1.0, 1.7, 2.0, 5.0, f64::INFINITY] {
        let norm = instance.lp_norm(&one, p, 6).unwrap();
        assert!((norm - 1.0).abs() < 1e-12, "{} p = {p}: {norm}", instance.name());
    }
}

#[test]
fn constant_function_transforms_and_norms() {
    constant_function_transform(&ConjSu2);
    constant_function_transform(&dunkl_third());
}

fn inversion_examples<H: Hypergroup>(instance: &H) {
    // f̂ = {χ_0 ↦ 1} inverts to the constant 1.
    let coeffs = FourierCoefficients::from_values([(0u32, Complex64::new(1.0, 0.0))], 0);
    let f = instance.inverse_fourier(&coeffs);
    assert_eq!(f, CharacterPolynomial::constant(Complex64::new(1.0, 0.0)));
    // f̂ = {l ↦ 1/k_l} inverts to χ_l.
    let l = 4u32;
    let coeffs = FourierCoefficients::from_values(
        [(l, Complex64::new(1.0 / instance.hyperdim(l), 0.0))],
        l,
    );
    let f = instance.inverse_fourier(&coeffs);
    assert!((f.coefficient(l).re - 1.0).abs() < 1e-15, "{}", instance.name());
    assert_eq!(f.support_len(), 1);
}

#[test]
fn inverse_transform_examples() {
    inversion_examples(&ConjSu2);
    inversion_examples(&dunkl_third());
}

fn roundtrips<H: Hypergroup>(instance: &H) {
    let family = ineq::generate_family(instance, FamilyKind::RandomDecay, 314, 20, 15, 2.0);
    for f in &family.functions {
        // Algebraic round trip is exact to rounding.
        let back = instance.inverse_fourier(&instance.algebraic_transform(f));
        for (label, c) in f.coeffs() {
            assert!((back.coefficient(label) - c).norm() <= 1e-10 * c.norm());
        }
        // Quadrature transform matches the coefficient rule c_χ/k_χ.
        let sampled = instance.fourier_transform_polynomial(f, 15);
        let exact = instance.algebraic_transform(f);
        for l in 0..=15 {
            assert!(
                (sampled.value(l) - exact.value(l)).norm() < 1e-10,
                "{} label {l}",
                instance.name()
            );
        }
        // The closure-based transform is the same sampled path.
        let handle = instance.fourier_transform(|x| instance.evaluate(f, x), 15);
        for l in 0..=15 {
            assert!((handle.value(l) - exact.value(l)).norm() < 1e-10);
        }
    }
}

#[test]
fn transform_round_trips_on_both_instances() {
    roundtrips(&ConjSu2);
    roundtrips(&dunkl_third());
}

fn convolution_examples<H: Hypergroup>(instance: &H) {
    let mut coeffs = vec![(0u32, Complex64::new(0.7, 0.0))];
    coeffs.push((3, Complex64::new(-1.0, 0.5)));
    let f = CharacterPolynomial::from_coeffs(coeffs);

    // Convolving with the normalized trivial character keeps only the
    // χ_0 component: ĝ is supported at χ_0 with ĝ(χ_0) = 1.
    let g = CharacterPolynomial::constant(Complex64::new(1.0, 0.0));
    let product = instance.convolve(&f, &g);
    assert_eq!(product.support_len(), 1);
    assert!((product.coefficient(0) - f.coefficient(0)).norm() < 1e-15);

    // χ_l ∗ χ_l carries the single coefficient 1/k_l.
    let l = 2u32;
    let chi = CharacterPolynomial::character(l);
    let square = instance.convolve(&chi, &chi);
    assert_eq!(square.support_len(), 1);
    assert!(
        (square.coefficient(l).re - 1.0 / instance.hyperdim(l)).abs() < 1e-15,
        "{}",
        instance.name()
    );

    // Plancherel cross-check: ‖f∗g‖₂² = Σ k |f̂ ĝ|².
    let family = ineq::generate_family(instance, FamilyKind::RandomDecay, 158, 6, 10, 2.0);
    for pair in family.functions.windows(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let product = instance.convolve(f, g);
        let lhs = instance.l2_norm_algebraic(&product).powi(2);
        let f_hat = instance.algebraic_transform(f);
        let g_hat = instance.algebraic_transform(g);
        let rhs: f64 = f_hat
            .iter()
            .map(|(l, v)| instance.hyperdim(l) * (v * g_hat.value(l)).norm_sqr())
            .sum();
        assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
    }
}

#[test]
fn convolution_follows_the_pointwise_product_rule() {
    convolution_examples(&ConjSu2);
    convolution_examples(&dunkl_third());
}

#[test]
fn scaled_characters_are_orthonormal() {
    // {k^{1/2} χ} is an orthonormal family in L²(K) on both instances.
    let conj = ConjSu2;
    let quad = conj.haar_quadrature(10);
    for m in 0..=10u32 {
        for n in 0..=10u32 {
            let value: f64 = quad
                .nodes
                .iter()
                .map(|(t, w)| {
                    (conj.hyperdim(m) * conj.hyperdim(n)).sqrt()
                        * conj.character(m, t)
                        * conj.character(n, t)
                        * w
                })
                .sum();
            let want = if m == n { 1.0 } else { 0.0 };
            assert!((value - want).abs() < 1e-10, "conj ({m},{n}): {value}");
        }
    }
    let ha = dunkl_third();
    let quad = ha.haar_quadrature(10);
    for m in 0..=10u32 {
        for n in 0..=10u32 {
            let value: f64 = quad
                .nodes
                .iter()
                .map(|(x, w)| {
                    (ha.hyperdim(m) * ha.hyperdim(n)).sqrt()
                        * ha.character(m, x)
                        * ha.character(n, x)
                        * w
                })
                .sum();
            let want = if m == n { 1.0 } else { 0.0 };
            assert!((value - want).abs() < 1e-10, "H_a ({m},{n}): {value}");
        }
    }
}

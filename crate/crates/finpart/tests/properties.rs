//! Property tests for the algebraic and analytic laws the library is built
//! on: special-function recurrences, Taylor-recentering composition, the
//! reflection between origin-form and endpoint-form finite parts, agreement
//! of series expansions with direct quadrature, and the cross-checks between
//! independently derived hypergeometric assemblies.

use finpart::entire::EntireFunction;
use finpart::fpi::{
    fp_endpoint, fp_epsilon_oracle_semi_infinite, fp_origin_noninteger, fp_singular_term,
};
use finpart::oracle::stieltjes_oracle;
use finpart::specfun::{
    binom_real, digamma, erfc_continued_fraction, erfc_series, gamma, sinpi,
};
use finpart::stieltjes::{dominant_term, eval_stieltjes, eval_sqrt_transform};
use finpart::{apps, quadrature};
use finpart::{entire, Error, SeriesConfig, UpperLimit};
use finpart::{DominantSource, EpsilonLadder, StieltjesQuery};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

/// |a − b| relative to |b|, with an absolute floor of 1 so values near zero
/// are compared absolutely.
fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// A small pool of entire functions with distinct analytic character:
/// pure exponential decay, Gaussian-type decay, a polynomial with a zero at
/// the origin, and one with an exponential prefactor and a higher-order zero.
fn pool(pick: usize) -> EntireFunction {
    match pick % 4 {
        0 => EntireFunction::exp_neg(),
        1 => EntireFunction::gauss_exp(0.8, 0.4).unwrap(),
        2 => EntireFunction::beta_poly(2, 5).unwrap(),
        _ => EntireFunction::power_exp(3).unwrap(),
    }
}

/// x ↦ g(c − x) as an explicit polynomial truncation: recenter g at c, then
/// flip the sign of the odd coefficients.
fn reflect_about(g: &EntireFunction, c: f64) -> EntireFunction {
    let d = entire::shift(g, c, 200, 10_000).unwrap();
    let pairs: Vec<(usize, f64)> = (0..d.len())
        .map(|j| (j, if j % 2 == 0 { d.coeff(j) } else { -d.coeff(j) }))
        .collect();
    EntireFunction::from_pairs("reflected", &pairs).unwrap()
}

// ---------------------------------------------------------------------------
// Special-function laws.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Γ(x+1) = x·Γ(x) across the positive range used by the series code.
    #[test]
    fn gamma_recurrence_holds(x in 0.1f64..30.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs());
    }
}

proptest! {
    /// Γ(x)Γ(1−x) sin(πx)/π = 1 on (0,1), away from the half-integer point
    /// where sin(πx) has an extremum and the product is least conditioned.
    #[test]
    fn gamma_reflection_holds(x in 1e-3f64..0.999) {
        prop_assume!((x - 0.5).abs() >= 1e-3);
        let product = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * sinpi(x)
            / std::f64::consts::PI;
        prop_assert!((product - 1.0).abs() <= 1e-11);
    }

    /// ψ(x+1) − ψ(x) = 1/x.
    #[test]
    fn digamma_recurrence_holds(x in 0.1f64..30.0) {
        let diff = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        let target = 1.0 / x;
        prop_assert!((diff - target).abs() <= 1e-12 * target.max(1.0));
    }

    /// Pascal's rule for real upper argument:
    /// C(μ, j) = C(μ−1, j) + C(μ−1, j−1).
    #[test]
    fn binomial_pascal_rule(mu in -4.0f64..6.0, j in 1usize..12) {
        let lhs = binom_real(mu, j);
        let t1 = binom_real(mu - 1.0, j);
        let t2 = binom_real(mu - 1.0, j - 1);
        let scale = t1.abs().max(t2.abs()).max(1e-30);
        prop_assert!((lhs - (t1 + t2)).abs() <= 1e-12 * scale);
    }

    /// The Taylor-series and continued-fraction routes for erfc agree in
    /// the window where both carry full accuracy. (The series route's
    /// relative error grows like x·e^{2x²}·ulp from cancellation against
    /// the peak term, so the honest overlap closes near x ≈ 2.2.)
    #[test]
    fn erfc_routes_agree(x in 1.0f64..2.0) {
        let a = erfc_series(x);
        let b = erfc_continued_fraction(x);
        prop_assert!((a - b).abs() <= 1e-11 * a.abs());
    }
}

// ---------------------------------------------------------------------------
// Taylor-recentering laws.
// ---------------------------------------------------------------------------

proptest! {
    /// Recentering is a group action on centers: recentering at u, then
    /// recentering the result at v, matches recentering once at u+v.
    #[test]
    fn recentering_composes(
        u in -1.5f64..1.5,
        v in -1.5f64..1.5,
        pick in 0usize..3,
    ) {
        let f = match pick {
            0 => EntireFunction::exp_neg(),
            1 => EntireFunction::gauss_exp(0.7, 0.3).unwrap(),
            _ => EntireFunction::beta_poly(2, 5).unwrap(),
        };
        // First stage keeps enough coefficients that the truncation error
        // is far below the comparison tolerance.
        let stage1 = entire::shift(&f, u, 80, 10_000).unwrap();
        let pairs: Vec<(usize, f64)> =
            (0..stage1.len()).map(|k| (k, stage1.coeff(k))).collect();
        let g = EntireFunction::from_pairs("recentered", &pairs).unwrap();
        let stage2 = entire::shift(&g, v, 10, 10_000).unwrap();
        let direct = entire::shift(&f, u + v, 10, 10_000).unwrap();
        for k in 0..=10 {
            let d = direct.coeff(k);
            prop_assert!(
                (stage2.coeff(k) - d).abs() <= 1e-10 * d.abs().max(1.0),
                "coefficient {} differs: {} vs {}", k, stage2.coeff(k), d
            );
        }
    }

    /// The recurrence-generated Taylor coefficients of e^{−αx²+βx} match the
    /// closed double-factorial sums for the scaled odd/even coefficients.
    #[test]
    fn gaussian_taylor_matches_closed_sums(
        alpha in 0.3f64..1.5,
        beta in 0.1f64..1.5,
        j in 0usize..=8,
    ) {
        let f = EntireFunction::gauss_exp(alpha, beta).unwrap();
        let a_j = apps::gaussian_coeff_odd(alpha, beta, j).unwrap();
        let b_j = apps::gaussian_coeff_even(alpha, beta, j).unwrap();
        let c_odd = f.coeff(2 * j + 1);
        let c_even = f.coeff(2 * j);
        prop_assert!(
            (a_j * beta.powi(2 * j as i32 + 1) - c_odd).abs()
                <= 1e-9 * c_odd.abs().max(1e-12)
        );
        prop_assert!(
            (b_j * beta.powi(2 * j as i32) - c_even).abs()
                <= 1e-9 * c_even.abs().max(1e-12)
        );
    }
}

// ---------------------------------------------------------------------------
// Finite-part laws.
// ---------------------------------------------------------------------------

proptest! {
    /// Substituting x → c−x converts the endpoint form into the origin form:
    /// the finite part of g(x)(c−x)^{−ρ} over [0,c] equals the finite part
    /// of g(c−x)·x^{−ρ} over [0,c].
    #[test]
    fn endpoint_reflection_matches_origin(
        c in 0.5f64..2.2,
        n in 1u32..=3,
        alpha in 0.1f64..0.9,
        pick in 0usize..4,
    ) {
        let g = pool(pick);
        let rho = n as f64 + alpha;
        let direct = fp_endpoint(&g, c, rho, &cfg()).unwrap().value;
        let reflected = reflect_about(&g, c);
        let via = fp_origin_noninteger(&reflected, UpperLimit::Finite(c), rho, &cfg())
            .unwrap()
            .value;
        prop_assert!(rel(direct, via) <= 1e-10, "direct {} vs reflected {}", direct, via);
    }

    /// When the integrand is not actually singular (the zero of f at the
    /// origin is deep enough), the finite part reduces to the ordinary
    /// integral and matches adaptive quadrature.
    #[test]
    fn regular_integrand_matches_quadrature(
        n in 1u32..=2,
        extra in 1u32..4,
        alpha in 0.1f64..0.9,
        a in 0.5f64..3.0,
    ) {
        let m = n + extra;
        let rho = n as f64 + alpha;
        let p = m as f64 - rho; // exponent of the reduced integrand, ≥ 1−α > 0
        let f = EntireFunction::monomial(m);
        let fp = fp_origin_noninteger(&f, UpperLimit::Finite(a), rho, &cfg())
            .unwrap()
            .value;
        let quad = quadrature::integrate(|x: f64| x.powf(p), 0.0, a, 1e-12)
            .unwrap()
            .value;
        let closed = a.powf(p + 1.0) / (p + 1.0);
        prop_assert!(rel(fp, quad) <= 1e-9);
        prop_assert!(rel(fp, closed) <= 1e-12);
    }

    /// The singular series in shifted powers of ω equals (minus) the
    /// endpoint-form finite part of the reflected integrand at c = ω.
    #[test]
    fn shifted_power_series_matches_endpoint_route(
        omega in 0.05f64..0.8,
        n in 1u32..=3,
        alpha in 0.1f64..0.9,
        pick in 0usize..3,
    ) {
        let f = match pick {
            0 => EntireFunction::exp_neg(),
            1 => EntireFunction::gauss_exp(0.8, 0.4).unwrap(),
            _ => EntireFunction::beta_poly(2, 4).unwrap(),
        };
        let direct = fp_singular_term(&f, omega, n, alpha, &cfg()).unwrap().value;
        let via = fp_endpoint(&f.reflect(), omega, n as f64 + alpha, &cfg())
            .unwrap()
            .value;
        prop_assert!(rel(direct, -via) <= 1e-10);
    }
}

/// ⨍₀^∞ e^{−x} x^{−(j+α+1)} dx has the closed form
/// (−1)^{j+1} π / (sin(πα) Γ(j+α+1)), which is Γ(−j−α) by reflection; the
/// library value must match both the closed form and the ε-limit oracle.
#[test]
fn exponential_catalog_matches_epsilon_limit() {
    let f = EntireFunction::exp_neg();
    for j in 0u32..=6 {
        for &alpha in &[0.25f64, 0.5, 0.75] {
            let rho = j as f64 + alpha + 1.0;
            let value = fp_origin_noninteger(&f, UpperLimit::Infinite, rho, &cfg())
                .unwrap()
                .value;
            let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
            let closed =
                sign * std::f64::consts::PI / (sinpi(alpha) * gamma(j as f64 + alpha + 1.0).unwrap());
            assert!(
                rel(value, closed) <= 1e-12,
                "closed form mismatch at j={j}, α={alpha}: {value} vs {closed}"
            );
            let ladder = EpsilonLadder::default_for(1.0, rho).unwrap();
            let report = fp_epsilon_oracle_semi_infinite(&f, j + 1, alpha, &ladder).unwrap();
            assert!(
                rel(value, report.value) <= 1e-6,
                "ε-limit mismatch at j={j}, α={alpha}: {value} vs {} (est {:.1e})",
                report.value,
                report.error_estimate
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Quadrature laws.
// ---------------------------------------------------------------------------

proptest! {
    /// A tighter requested tolerance is honored: the deviation from a
    /// tol = 1e-13 reference stays within each requested tolerance.
    #[test]
    fn tighter_tolerance_is_honored(c in 0.5f64..4.0) {
        let f = |x: f64| 1.0 / (1.0 + c * x * x);
        let reference = quadrature::integrate(f, 0.0, 2.0, 1e-13).unwrap().value;
        for &tol in &[1e-5f64, 1e-8, 1e-11] {
            let got = quadrature::integrate(f, 0.0, 2.0, tol).unwrap().value;
            prop_assert!((got - reference).abs() <= tol * reference.abs().max(1.0));
        }
    }

    /// ∫₀^a (x+ω)^{−3/2} dx = 2(ω^{−1/2} − (a+ω)^{−1/2}).
    #[test]
    fn inverse_sqrt_shift_closed_form(omega in 0.1f64..2.0, a in 0.5f64..5.0) {
        let got = quadrature::integrate(|x: f64| (x + omega).powf(-1.5), 0.0, a, 1e-13)
            .unwrap()
            .value;
        let closed = 2.0 * (omega.powf(-0.5) - (a + omega).powf(-0.5));
        prop_assert!(rel(got, closed) <= 1e-12);
    }

    /// ∫₀^∞ e^{−λx} dx = 1/λ through the semi-infinite path.
    #[test]
    fn semi_infinite_exponential(lambda in 0.5f64..3.0) {
        let got = quadrature::integrate_semi_infinite(|x: f64| (-lambda * x).exp(), 0.0, 1e-13)
            .unwrap()
            .value;
        prop_assert!(rel(got, 1.0 / lambda) <= 1e-12);
    }
}

// ---------------------------------------------------------------------------
// Expansion laws.
// ---------------------------------------------------------------------------

/// Random finite-range transforms: the series assembly agrees with direct
/// quadrature of f(x)(x+ω)^{−n−α} within the larger of 1e-8 and ten times
/// the expansion's own tail estimate; and the reported assembly identity
/// total = (last naive partial sum) + singular term holds bitwise.
#[test]
fn expansion_matches_oracle_on_finite_ranges() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2001);
    for case in 0..10 {
        let f = pool(rng.gen_range(0usize..4));
        let a = rng.gen_range(0.8f64..3.0);
        let omega = a * rng.gen_range(0.02f64..0.4);
        let n = rng.gen_range(1u32..=3);
        let alpha = rng.gen_range(0.1f64..0.9);
        let q = StieltjesQuery::new(omega, UpperLimit::Finite(a), n, alpha).unwrap();
        let r = eval_stieltjes(&f, &q, &cfg()).unwrap();
        let o = stieltjes_oracle(&f, &q, 1e-11).unwrap();
        let bound = (1e-8 * o.abs().max(1.0)).max(10.0 * r.tail_estimate);
        assert!(
            (r.total - o).abs() <= bound,
            "case {case} ({}, a={a:.3}, ω={omega:.4}, n={n}, α={alpha:.3}): \
             {} vs {o} (bound {bound:.2e})",
            f.name(),
            r.total
        );
        let last = *r.naive_partial_sums.last().unwrap();
        assert_eq!(r.total, last + r.singular_term, "assembly identity, case {case}");
    }
}

/// Semi-infinite transforms with catalog closed forms agree with direct
/// quadrature over [0, ∞).
#[test]
fn expansion_matches_oracle_on_semi_infinite_range() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2002);
    for case in 0..6 {
        let f = match case % 3 {
            0 => EntireFunction::exp_neg(),
            1 => EntireFunction::power_exp(2).unwrap(),
            _ => EntireFunction::power_exp(3).unwrap(),
        };
        let omega = rng.gen_range(0.05f64..0.5);
        let n = rng.gen_range(1u32..=2);
        let alpha = rng.gen_range(0.1f64..0.9);
        let q = StieltjesQuery::new(omega, UpperLimit::Infinite, n, alpha).unwrap();
        let r = eval_stieltjes(&f, &q, &cfg()).unwrap();
        let o = stieltjes_oracle(&f, &q, 1e-11).unwrap();
        let bound = (1e-8 * o.abs().max(1.0)).max(10.0 * r.tail_estimate);
        assert!(
            (r.total - o).abs() <= bound,
            "case {case} ({}, ω={omega:.4}, n={n}, α={alpha:.3}): {} vs {o}",
            f.name(),
            r.total
        );
    }
}

/// Gaussian-type integrands admit no closed semi-infinite catalog form for
/// nonintegral power kernels; the evaluator must refuse rather than guess.
#[test]
fn gaussian_semi_infinite_power_kernel_is_refused() {
    let f = EntireFunction::gauss_exp(1.0, 0.5).unwrap();
    let q = StieltjesQuery::new(0.1, UpperLimit::Infinite, 2, 0.5).unwrap();
    let err = eval_stieltjes(&f, &q, &cfg()).unwrap_err();
    assert!(matches!(err, Error::MissingClosedForm { .. }), "got {err}");
}

/// The small-ω dominance analyzer's prediction improves as ω shrinks: the
/// ratio of the true transform to coefficient·ω^power approaches 1.
#[test]
fn dominance_prediction_improves_toward_zero() {
    let a = 1.0f64;
    let cases: [(EntireFunction, u32, f64, DominantSource); 3] = [
        (EntireFunction::monomial(0), 2, 0.5, DominantSource::Singular),
        (EntireFunction::power_exp(2).unwrap(), 2, 0.5, DominantSource::Singular),
        (EntireFunction::monomial(3), 1, 0.25, DominantSource::Naive),
    ];
    for (f, n, alpha, expect) in cases {
        let deviation = |omega: f64| -> f64 {
            let q = StieltjesQuery::new(omega, UpperLimit::Finite(a), n, alpha).unwrap();
            let (coeff, power, source) = dominant_term(&f, &q, &cfg()).unwrap();
            assert_eq!(source, expect, "{}", f.name());
            let total = eval_stieltjes(&f, &q, &cfg()).unwrap().total;
            (total / (coeff * omega.powf(power)) - 1.0).abs()
        };
        let coarse = deviation(1e-2 * a);
        let fine = deviation(1e-4 * a);
        assert!(
            fine < coarse,
            "{}: deviation did not improve ({fine:.3e} at 1e-4 vs {coarse:.3e} at 1e-2)",
            f.name()
        );
    }
}

/// The square-root-kernel residual beyond the leading logarithmic profile
/// carries the ω²(c₁ + c₂ ln ω) structure: two sample points determine the
/// pair (c₁, c₂), which then predicts the third sample, and the whole
/// residual sits inside an O(ω² ln ω) envelope.
#[test]
fn sqrt_kernel_residual_has_square_log_structure() {
    for &(alpha, beta) in &[(1.0f64, 2.0f64), (1.5, 0.5)] {
        let omegas = [0.02f64, 0.04, 0.08];
        let scaled: Vec<f64> = omegas
            .iter()
            .map(|&w| {
                let total = apps::gaussian_sqrt(alpha, beta, w, 4000).unwrap();
                let leading = apps::gaussian_sqrt_leading(alpha, beta, w, 4000).unwrap();
                let residual = total - leading;
                let envelope = 8.0 * w * w * (1.0 + w.ln().abs());
                assert!(
                    residual.abs() <= envelope,
                    "α={alpha}, β={beta}, ω={w}: residual {residual:.3e} outside {envelope:.3e}"
                );
                residual / (w * w)
            })
            .collect();
        // Fit residual/ω² = c₁ + c₂ ln ω through the first two points and
        // predict the third.
        let (l0, l1, l2) = (omegas[0].ln(), omegas[1].ln(), omegas[2].ln());
        let c2 = (scaled[1] - scaled[0]) / (l1 - l0);
        let c1 = scaled[0] - c2 * l0;
        let predicted = (c1 + c2 * l2) * omegas[2] * omegas[2];
        let actual = scaled[2] * omegas[2] * omegas[2];
        let slack = 0.15 * actual.abs().max(omegas[2] * omegas[2]);
        assert!(
            (actual - predicted).abs() <= slack,
            "α={alpha}, β={beta}: third point {actual:.4e} vs predicted {predicted:.4e}"
        );
    }
}

proptest! {
    /// Beyond the convergence radius the evaluator reports non-convergence
    /// (exit code 3); the boundary point ω = a itself is rejected as an
    /// invalid query (exit code 2).
    #[test]
    fn divergence_beyond_radius_is_flagged(
        factor in 1.0001f64..3.0,
        a in 0.5f64..2.0,
    ) {
        let f = EntireFunction::exp_neg();
        let q = StieltjesQuery::new(factor * a, UpperLimit::Finite(a), 1, 0.5).unwrap();
        let err = eval_stieltjes(&f, &q, &cfg()).unwrap_err();
        prop_assert!(matches!(err, Error::NonConvergence { .. }), "got {}", err);
        prop_assert_eq!(err.exit_code(), 3);

        let boundary = StieltjesQuery::new(a, UpperLimit::Finite(a), 1, 0.5).unwrap_err();
        prop_assert!(matches!(boundary, Error::InvalidParameter(_)));
        prop_assert_eq!(boundary.exit_code(), 2);
    }
}

// ---------------------------------------------------------------------------
// Hypergeometric assembly laws.
// ---------------------------------------------------------------------------

proptest! {
    /// The descending-series assembly of the Gauss function agrees with the
    /// independent two-series route built from raw hypergeometric sums.
    #[test]
    fn gauss_assemblies_agree(
        n in 1u32..=4,
        alpha in 0.05f64..0.95,
        r in 1u32..=4,
        step in 1u32..=4,
        ln_zeta in 0.2f64..3.7,
    ) {
        let p = apps::Gauss2F1Params::new(n, alpha, r, r + step, ln_zeta.exp()).unwrap();
        let a = apps::gauss2f1_expansion(&p, 4000).unwrap();
        let b = apps::gauss2f1_two_f1(&p, 4000).unwrap();
        prop_assert!(rel(a, b) <= 1e-9, "{} vs {}", a, b);
    }

    /// The confluent-function assembly agrees with the independent
    /// two-series route.
    #[test]
    fn kummer_assemblies_agree(
        n in 1u32..=4,
        alpha in 0.05f64..0.95,
        omega in 0.02f64..3.0,
    ) {
        let p = apps::KummerParams::new(n, alpha, omega).unwrap();
        let a = apps::kummer_u(&p, 4000).unwrap();
        let b = apps::kummer_u_one_f1(&p, 4000).unwrap();
        prop_assert!(rel(a, b) <= 1e-9, "{} vs {}", a, b);
    }

    /// The three closed-form coefficient families match their defining
    /// finite sums.
    #[test]
    fn coefficient_identities_hold(
        n in 1u32..=4,
        alpha in 0.05f64..0.95,
        r in 1u32..=4,
        step in 1u32..=3,
        j in 0usize..=20,
    ) {
        let s = r + step;
        let pairs = [
            (
                apps::gauss2f1_coeff_closed(n, alpha, r, s, j),
                apps::gauss2f1_coeff_sum(n, alpha, r, s, j),
            ),
            (
                apps::endpoint_coeff_closed(n, alpha, j),
                apps::endpoint_coeff_sum(n, alpha, j),
            ),
            (
                apps::analytic_coeff_closed(n, alpha, j),
                apps::analytic_coeff_sum(n, alpha, j),
            ),
        ];
        for (idx, (closed, sum)) in pairs.iter().enumerate() {
            prop_assert!(
                (closed - sum).abs() <= 1e-10 * closed.abs().max(1e-300),
                "family {}: {} vs {}", idx, closed, sum
            );
        }
    }
}

/// The modified-Bessel evaluator refuses arguments beyond its validated
/// accuracy window instead of silently degrading.
#[test]
fn bessel_k0_beyond_window_is_refused() {
    let err = apps::bessel_k0(6.0, 4000).unwrap_err();
    assert!(matches!(err, Error::AccuracyLoss(_)), "got {err}");
    assert_eq!(err.exit_code(), 3);
}

/// The square-root-kernel evaluation over a finite range matches direct
/// quadrature of f(x)/√(ω²+x²).
#[test]
fn sqrt_transform_matches_quadrature() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2003);
    for case in 0..4 {
        let f = match case % 2 {
            0 => EntireFunction::gauss_exp(0.9, 0.3).unwrap(),
            _ => EntireFunction::exp_neg(),
        };
        let a = rng.gen_range(1.0f64..2.5);
        let omega = a * rng.gen_range(0.02f64..0.2);
        let r = eval_sqrt_transform(&f, omega, UpperLimit::Finite(a), &cfg()).unwrap();
        let o = quadrature::integrate(
            |x: f64| f.eval(x).unwrap() / (omega * omega + x * x).sqrt(),
            0.0,
            a,
            1e-12,
        )
        .unwrap()
        .value;
        let bound = (1e-8 * o.abs().max(1.0)).max(10.0 * r.tail_estimate);
        assert!(
            (r.total - o).abs() <= bound,
            "case {case}: {} vs {o} (bound {bound:.2e})",
            r.total
        );
    }
}

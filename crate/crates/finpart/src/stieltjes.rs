//! Evaluators for the generalized Stieltjes transform
//! ∫₀^a f(x)/(ω+x)^{n+α} dx and the companion transform
//! ∫₀^a f(x)/√(ω²+x²) dx, both as exact term-by-term expansions:
//! a naive binomial series whose coefficients are finite-part integrals,
//! plus a singular correction carrying the non-analytic ω-dependence
//! (ω^{1−n−α} powers for the shifted power kernel, ln ω terms for the
//! square-root kernel). A small-ω dominance analyzer classifies which part
//! carries the leading behavior from the order of the zero of f at 0.

use crate::config::{SeriesConfig, StopRule};
use crate::entire::EntireFunction;
use crate::error::{Error, Result};
use crate::fpi::{
    fp_origin_integer, fp_origin_noninteger, fp_singular_term, FinitePartValue, UpperLimit,
};
use crate::specfun::{binom_real, harmonic};

/// Parameters of a generalized Stieltjes transform query.
///
/// ω = a is rejected outright (the expansion's series converges for ω < a
/// only); ω > a is accepted at construction and fails at evaluation time
/// with a convergence error, so divergence is detected and reported rather
/// than presumed.
#[derive(Debug, Clone, Copy)]
pub struct StieltjesQuery {
    omega: f64,
    a: UpperLimit,
    n: u32,
    alpha: f64,
}

impl StieltjesQuery {
    pub fn new(omega: f64, a: UpperLimit, n: u32, alpha: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidParameter(format!("ω must be positive, got {omega}")));
        }
        if n < 1 {
            return Err(Error::InvalidParameter(format!("n must be ≥ 1, got {n}")));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "α must lie strictly in (0,1), got {alpha}"
            )));
        }
        if let UpperLimit::Finite(a_val) = a {
            UpperLimit::finite(a_val)?;
            if omega == a_val {
                return Err(Error::InvalidParameter(format!(
                    "ω = a = {omega} sits exactly on the convergence boundary; \
                     the expansion requires ω < a"
                )));
            }
        }
        Ok(StieltjesQuery { omega, a, n, alpha })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn a(&self) -> UpperLimit {
        self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// Full diagnostic decomposition of an expansion evaluation.
#[derive(Debug, Clone)]
pub struct ExpansionResult {
    /// Cumulative partial sums of the naive series over its index.
    pub naive_partial_sums: Vec<f64>,
    /// The singular correction added to the naive series.
    pub singular_term: f64,
    /// Last naive partial sum plus the singular term (exact assembly).
    pub total: f64,
    /// Absolute tail bound: dropped naive terms plus the correction's own
    /// truncation tail.
    pub tail_estimate: f64,
    /// Terms consumed by the naive series.
    pub terms_used: usize,
}

impl ExpansionResult {
    fn assemble(
        naive_partial_sums: Vec<f64>,
        singular: FinitePartValue,
        naive_tail: f64,
    ) -> Self {
        let last = naive_partial_sums.last().copied().unwrap_or(0.0);
        ExpansionResult {
            terms_used: naive_partial_sums.len(),
            total: last + singular.value,
            singular_term: singular.value,
            tail_estimate: naive_tail + singular.tail_estimate,
            naive_partial_sums,
        }
    }
}

/// The naive series in powers of ω has convergence radius exactly a for any
/// entire integrand that is not identically zero, so ω > a is divergent a
/// priori; report it without burning the term budget (whose inner
/// finite-part values grow like a^{−j} and can overrun f64 range long
/// before the outer terms reveal the growth).
fn check_radius(f: &EntireFunction, omega: f64, a: UpperLimit) -> Result<()> {
    if let UpperLimit::Finite(a_val) = a {
        if omega > a_val && f.zero_order(512).is_some() {
            return Err(Error::NonConvergence { terms: 0, last_ratio: omega / a_val });
        }
    }
    Ok(())
}

/// Classify a non-finite naive term: a series whose consecutive-term ratio
/// was last seen above 1 overran f64 range through sustained geometric
/// growth, which is divergence; anything else is an accuracy failure.
fn overflow_error(terms: usize, last_ratio: f64) -> Error {
    if terms >= 2 && last_ratio > 1.0 {
        Error::NonConvergence { terms, last_ratio }
    } else {
        Error::AccuracyLoss(format!("naive term {terms} is not finite"))
    }
}

/// Naive-series term budget: the series converges like (ω/a)^j, so the
/// needed depth is ≈ log(tol)/log(ω/a), allowed up to 10× for the binomial
/// growth, and never beyond the configured cap.
fn naive_budget(omega: f64, a: UpperLimit, cfg: &SeriesConfig) -> usize {
    if let UpperLimit::Finite(a_val) = a {
        if omega < a_val {
            let est = cfg.rel_tol.ln() / (omega / a_val).ln();
            let capped = (10.0 * est).ceil() as usize;
            return capped.clamp(16, cfg.term_cap);
        }
    }
    cfg.term_cap
}

/// Evaluate the generalized Stieltjes transform of f:
/// Σ_j (−n−α choose j) ω^j ⨍₀^a f(x)/x^{n+α+j} dx + Δ_sc, where Δ_sc is
/// the singular correction −Σ_j f^{(j)}(−ω)/j! · ω^{j+1−n−α}/(j+1−n−α).
pub fn eval_stieltjes(
    f: &EntireFunction,
    q: &StieltjesQuery,
    cfg: &SeriesConfig,
) -> Result<ExpansionResult> {
    check_radius(f, q.omega, q.a)?;
    let rho0 = q.n as f64 + q.alpha;
    let budget = naive_budget(q.omega, q.a, cfg);
    let naive_cfg = SeriesConfig { rel_tol: cfg.rel_tol, term_cap: budget };
    let mut rule = StopRule::new(naive_cfg);
    let mut partial = Vec::new();
    let mut sum = 0.0f64;
    let mut omega_pow = 1.0f64;
    let mut naive_tail = 0.0f64;
    let mut recent = [0.0f64; 3];
    let mut prev_abs = 0.0f64;
    let mut last_ratio = f64::NAN;
    for j in 0.. {
        let fp = fp_origin_noninteger(f, q.a, rho0 + j as f64, cfg)?;
        let term = binom_real(-rho0, j) * omega_pow * fp.value;
        if !term.is_finite() {
            return Err(overflow_error(j, last_ratio));
        }
        if prev_abs > 0.0 {
            last_ratio = term.abs() / prev_abs;
        }
        prev_abs = term.abs();
        sum += term;
        partial.push(sum);
        recent[j % 3] = term.abs();
        if rule.update(term, sum) {
            naive_tail = recent.iter().copied().fold(0.0f64, f64::max);
            break;
        }
        if rule.exhausted() {
            return Err(rule.failure());
        }
        omega_pow *= q.omega;
    }
    let singular = fp_singular_term(f, q.omega, q.n, q.alpha, cfg)?;
    Ok(ExpansionResult::assemble(partial, singular, naive_tail))
}

/// Which part of the decomposition carries the small-ω leading behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantSource {
    Singular,
    Naive,
}

/// Small-ω dominance analyzer: from the exact order m of the zero of f at
/// the origin, returns (coefficient, power, source) such that the transform
/// behaves like coefficient·ω^power as ω → 0.
///
/// - m < n (write s = n−m ≥ 1): the singular part dominates with the
///   divergent power ω^{−(s+α−1)} and coefficient
///   c_m · m! · Σ_{j=0}^{m} (−1)^{m−j} / (j!(m−j)!(n+α−j−1)).
/// - m ≥ n: the integrand is integrable at 0; the ordinary integral
///   ⨍₀^a f/x^{n+α} (the leading naive term) dominates, power 0.
pub fn dominant_term(
    f: &EntireFunction,
    q: &StieltjesQuery,
    cfg: &SeriesConfig,
) -> Result<(f64, f64, DominantSource)> {
    let m = f
        .zero_order(512)
        .ok_or_else(|| Error::InvalidParameter("zero function has no dominant term".into()))?;
    let n = q.n as usize;
    if m < n {
        let s = n - m;
        let mut inner = 0.0f64;
        let mut mfac = 1.0f64; // m!
        for i in 1..=m {
            mfac *= i as f64;
        }
        for j in 0..=m {
            let sign = if (m - j) % 2 == 0 { 1.0 } else { -1.0 };
            let mut jfac = 1.0;
            for i in 1..=j {
                jfac *= i as f64;
            }
            let mut mjfac = 1.0;
            for i in 1..=(m - j) {
                mjfac *= i as f64;
            }
            inner += sign / (jfac * mjfac * (q.n as f64 + q.alpha - j as f64 - 1.0));
        }
        let coefficient = f.coeff(m) * mfac * inner;
        let power = -(s as f64 + q.alpha - 1.0);
        Ok((coefficient, power, DominantSource::Singular))
    } else {
        let fp = fp_origin_noninteger(f, q.a, q.n as f64 + q.alpha, cfg)?;
        Ok((fp.value, 0.0, DominantSource::Naive))
    }
}

/// Evaluate ∫₀^a f(x)/√(ω²+x²) dx as the even binomial series over
/// integer-order finite parts plus the log-bearing singular correction
///
/// Δ_sc = −Σ_j (−1)^j Γ(j+½)/(2√π j!) c_{2j} ω^{2j} (H_{j−1/2} − H_j + 2 ln ω)
///        −Σ_j (−1)^j (√π/2) j!/Γ(j+3/2) c_{2j+1} ω^{2j+1},
///
/// written directly on the Taylor coefficients c_k of f. The correction does
/// not depend on a.
pub fn eval_sqrt_transform(
    f: &EntireFunction,
    omega: f64,
    a: UpperLimit,
    cfg: &SeriesConfig,
) -> Result<ExpansionResult> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter(format!("ω must be positive, got {omega}")));
    }
    if let UpperLimit::Finite(a_val) = a {
        UpperLimit::finite(a_val)?;
        if omega == a_val {
            return Err(Error::InvalidParameter(format!(
                "ω = a = {omega} sits exactly on the convergence boundary; \
                 the expansion requires ω < a"
            )));
        }
    }
    check_radius(f, omega, a)?;
    // Naive series over k with integer order m = 2k+1.
    let budget = naive_budget(omega, a, cfg);
    let naive_cfg = SeriesConfig { rel_tol: cfg.rel_tol, term_cap: budget };
    let mut rule = StopRule::new(naive_cfg);
    let mut partial = Vec::new();
    let mut sum = 0.0f64;
    let mut omega_sq_pow = 1.0f64;
    let mut naive_tail = 0.0f64;
    let mut recent = [0.0f64; 3];
    let mut prev_abs = 0.0f64;
    let mut last_ratio = f64::NAN;
    for k in 0.. {
        let fp = fp_origin_integer(f, a, 2 * k as u32 + 1, cfg)?;
        let term = binom_real(-0.5, k) * omega_sq_pow * fp.value;
        if !term.is_finite() {
            return Err(overflow_error(k, last_ratio));
        }
        if prev_abs > 0.0 {
            last_ratio = term.abs() / prev_abs;
        }
        prev_abs = term.abs();
        sum += term;
        partial.push(sum);
        recent[k % 3] = term.abs();
        if rule.update(term, sum) {
            naive_tail = recent.iter().copied().fold(0.0f64, f64::max);
            break;
        }
        if rule.exhausted() {
            return Err(rule.failure());
        }
        omega_sq_pow *= omega * omega;
    }
    let singular = sqrt_singular_correction(f, omega, cfg)?;
    Ok(ExpansionResult::assemble(partial, singular, naive_tail))
}

/// The √-kernel singular correction Δ_sc (see [`eval_sqrt_transform`]),
/// summed with running Γ-ratio and harmonic-number updates.
pub fn sqrt_singular_correction(
    f: &EntireFunction,
    omega: f64,
    cfg: &SeriesConfig,
) -> Result<FinitePartValue> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter(format!("ω must be positive, got {omega}")));
    }
    let two_ln_omega = 2.0 * omega.ln();
    let sqrt_pi = std::f64::consts::PI.sqrt();
    // gamma_half_over_fact = Γ(j+½)/j!; fact_over_gamma = j!/Γ(j+3/2).
    let mut gamma_half_over_fact = sqrt_pi;
    let mut fact_over_gamma = 1.0 / (0.5 * sqrt_pi);
    let mut h_half = harmonic(-0.5)?; // H_{j−1/2} at j = 0
    let mut h_int = 0.0f64; // H_j at j = 0
    let mut sign = 1.0f64;
    let mut omega_even = 1.0f64; // ω^{2j}
    let mut rule = StopRule::new(*cfg);
    let mut sum = 0.0f64;
    let support = f.support();
    for j in 0usize.. {
        let jf = j as f64;
        let t_even = -sign * gamma_half_over_fact / (2.0 * sqrt_pi)
            * f.coeff(2 * j)
            * omega_even
            * (h_half - h_int + two_ln_omega);
        let t_odd =
            -sign * (sqrt_pi / 2.0) * fact_over_gamma * f.coeff(2 * j + 1) * omega_even * omega;
        if !(t_even.is_finite() && t_odd.is_finite()) {
            return Err(Error::AccuracyLoss(format!("correction term {j} is not finite")));
        }
        sum += t_even;
        let stop_a = rule.update(t_even, sum);
        sum += t_odd;
        let stop_b = rule.update(t_odd, sum);
        let past_support = support.map_or(true, |s| 2 * j + 1 >= s);
        if stop_a && stop_b && past_support {
            let tail = t_even.abs().max(t_odd.abs());
            return Ok(FinitePartValue { value: sum, terms_used: rule.terms, tail_estimate: tail });
        }
        if rule.exhausted() {
            return Err(rule.failure());
        }
        gamma_half_over_fact *= (jf + 0.5) / (jf + 1.0);
        fact_over_gamma *= (jf + 1.0) / (jf + 1.5);
        h_half += 1.0 / (jf + 0.5);
        h_int += 1.0 / (jf + 1.0);
        sign = -sign;
        omega_even *= omega * omega;
    }
    unreachable!("loop exits via stop rule or exhaustion")
}

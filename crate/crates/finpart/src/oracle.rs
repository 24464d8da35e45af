//! Independent quadrature oracles for every transform the expansion
//! machinery evaluates. Each oracle computes the defining integral by
//! adaptive quadrature only — no series, no finite parts — so agreement
//! with the expansion routes is evidence, not circularity.

use crate::apps::{Gauss2F1Params, KummerParams};
use crate::entire::EntireFunction;
use crate::error::{Error, Result};
use crate::fpi::UpperLimit;
use crate::quadrature::{integrate, integrate_semi_infinite};
use crate::specfun::factorial;
use crate::stieltjes::StieltjesQuery;

/// Split point between the head panel and the mapped semi-infinite tail.
/// Chosen where the decaying integrands used here are already negligible
/// relative to the head.
const HEAD_SPLIT: f64 = 1.0;

/// ∫₀^a f(x)/(ω+x)^{n+α} dx by direct quadrature. Infinite upper limits
/// need an evaluator on f and integrable decay; both are checked.
pub fn stieltjes_oracle(f: &EntireFunction, q: &StieltjesQuery, tol: f64) -> Result<f64> {
    let rho = q.n() as f64 + q.alpha();
    let omega = q.omega();
    let eval = require_eval(f)?;
    let integrand = move |x: f64| eval(x) / (omega + x).powf(rho);
    match q.a() {
        UpperLimit::Finite(a) => Ok(integrate(integrand, 0.0, a, tol)?.value),
        UpperLimit::Infinite => {
            let head = integrate(&integrand, 0.0, HEAD_SPLIT, tol)?.value;
            let tail = integrate_semi_infinite(&integrand, HEAD_SPLIT, tol)?.value;
            Ok(head + tail)
        }
    }
}

/// ∫₀^a f(x)/√(ω²+x²) dx by direct quadrature.
pub fn sqrt_transform_oracle(
    f: &EntireFunction,
    omega: f64,
    a: UpperLimit,
    tol: f64,
) -> Result<f64> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter(format!("ω must be positive, got {omega}")));
    }
    let eval = require_eval(f)?;
    let integrand = move |x: f64| eval(x) / (omega * omega + x * x).sqrt();
    match a {
        UpperLimit::Finite(a_val) => Ok(integrate(integrand, 0.0, a_val, tol)?.value),
        UpperLimit::Infinite => {
            let split = decay_split(f)?;
            let head = integrate(&integrand, 0.0, split, tol)?.value;
            let tail = integrate_semi_infinite(&integrand, split, tol)?.value;
            Ok(head + tail)
        }
    }
}

/// U(n, 1−α, ω) from its defining integral,
/// ω^α/(n−1)! ∫₀^∞ e^{−x} x^{n−1}/(ω+x)^{n+α} dx, by quadrature.
pub fn kummer_oracle(p: &KummerParams, tol: f64) -> Result<f64> {
    let (n, alpha, omega) = (p.n(), p.alpha(), p.omega());
    let f = EntireFunction::power_exp(n)?;
    let q = StieltjesQuery::new(omega, UpperLimit::Infinite, n, alpha)?;
    Ok(omega.powf(alpha) / factorial(n as usize - 1) * stieltjes_oracle(&f, &q, tol)?)
}

/// ₂F₁(n+α, r; s; −ζ) from the Euler integral
/// (s−1)!/((r−1)!(s−r−1)!) · ζ^{−n−α} ∫₀¹ x^{r−1}(1−x)^{s−r−1}(ζ^{−1}+x)^{−n−α} dx
/// by quadrature.
pub fn gauss2f1_oracle(p: &Gauss2F1Params, tol: f64) -> Result<f64> {
    let na = p.n() as f64 + p.alpha();
    let (r, s) = (p.r() as usize, p.s() as usize);
    let inv_zeta = 1.0 / p.zeta();
    let integrand = move |x: f64| {
        x.powi(r as i32 - 1) * (1.0 - x).powi((s - r) as i32 - 1) / (inv_zeta + x).powf(na)
    };
    let prefactor =
        factorial(s - 1) / (factorial(r - 1) * factorial(s - r - 1)) * inv_zeta.powf(na);
    Ok(prefactor * integrate(integrand, 0.0, 1.0, tol)?.value)
}

/// ∫₀^∞ e^{−αx²+βx}/√(ω²+x²) dx by quadrature, split where the Gaussian
/// has decayed far below the head contribution (x = β/(2α) + 10/√α).
pub fn gaussian_sqrt_oracle(alpha: f64, beta: f64, omega: f64, tol: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParameter(format!("α must be positive, got {alpha}")));
    }
    let f = EntireFunction::gauss_exp(alpha, beta)?;
    sqrt_transform_oracle(&f, omega, UpperLimit::Infinite, tol)
}

fn require_eval(f: &EntireFunction) -> Result<impl Fn(f64) -> f64 + '_> {
    if !f.has_eval() {
        return Err(Error::MissingClosedForm {
            function: f.name().to_string(),
            context: "quadrature oracle needs a pointwise evaluator".to_string(),
        });
    }
    Ok(move |x: f64| f.eval(x).expect("evaluator presence checked above"))
}

/// Head/tail split for semi-infinite quadrature of a decaying integrand:
/// past the Gaussian peak plus ten standard widths, or a fixed panel for
/// the plain exponentials.
fn decay_split(f: &EntireFunction) -> Result<f64> {
    use crate::entire::FunctionKind;
    Ok(match f.kind() {
        FunctionKind::GaussExp { alpha, beta } => beta.max(0.0) / (2.0 * alpha) + 10.0 / alpha.sqrt(),
        _ => HEAD_SPLIT,
    })
}

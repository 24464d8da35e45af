//! Entire functions represented by their Taylor coefficient stream about 0,
//! c_k = f^{(k)}(0)/k!, with re-expansion about arbitrary centers.
//!
//! Every expansion in this crate consumes such a stream: the naive series
//! needs c_k directly, the singular corrections need derivatives at shifted
//! points f^{(j)}(x₀), and the reflection identities need the stream of
//! x ↦ f(−x). Coefficients are produced lazily from per-function recurrences
//! and memoized behind a mutex, so one instance can be shared across threads.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::specfun::binom_real;

/// Structural family tag. The finite-part engine dispatches its
/// infinite-upper-limit closed forms on this, because those closed forms
/// exist per family, not per generic coefficient stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionKind {
    /// e^{−x}
    ExpNeg,
    /// e^{−x} x^{n−1}, n ≥ 1
    PowerExp { n: u32 },
    /// x^{r−1}(1−x)^{s−r−1}, s ≥ r+1 (polynomial)
    BetaPoly { r: u32, s: u32 },
    /// e^{−αx² + βx}, α > 0
    GaussExp { alpha: f64, beta: f64 },
    /// x^m
    Monomial { m: u32 },
    /// Anything else (user coefficient lists, derived views).
    Custom,
}

type CoeffRule = dyn Fn(usize, &[f64]) -> f64 + Send + Sync;
type Evaluator = dyn Fn(f64) -> f64 + Send + Sync;

struct Inner {
    name: String,
    kind: FunctionKind,
    /// Produces c_k given all previously computed coefficients c_0..c_{k−1}.
    rule: Box<CoeffRule>,
    /// Optional closed-form evaluator, used only by oracles and diagnostics.
    eval: Option<Box<Evaluator>>,
    /// Highest index of a nonzero coefficient, when finitely supported
    /// (polynomials and user lists). Lets series code distinguish "ended"
    /// from "a run of interior zeros".
    support: Option<usize>,
    memo: Mutex<Vec<f64>>,
}

/// An entire function as a deterministic Taylor coefficient stream about 0,
/// an optional pointwise evaluator, and a display name.
#[derive(Clone)]
pub struct EntireFunction(Arc<Inner>);

impl fmt::Debug for EntireFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntireFunction")
            .field("name", &self.0.name)
            .field("kind", &self.0.kind)
            .finish()
    }
}

impl EntireFunction {
    fn build(
        name: String,
        kind: FunctionKind,
        rule: Box<CoeffRule>,
        eval: Option<Box<Evaluator>>,
        support: Option<usize>,
    ) -> Self {
        EntireFunction(Arc::new(Inner { name, kind, rule, eval, support, memo: Mutex::new(Vec::new()) }))
    }

    /// k-th Taylor coefficient c_k = f^{(k)}(0)/k!. Deterministic and
    /// memoized.
    pub fn coeff(&self, k: usize) -> f64 {
        let mut memo = self.0.memo.lock().expect("coefficient memo poisoned");
        while memo.len() <= k {
            let next = (self.0.rule)(memo.len(), &memo);
            memo.push(next);
        }
        memo[k]
    }

    /// Closed-form evaluation when available (builtins have it, user
    /// coefficient lists do not).
    pub fn eval(&self, x: f64) -> Option<f64> {
        self.0.eval.as_ref().map(|e| e(x))
    }

    pub fn has_eval(&self) -> bool {
        self.0.eval.is_some()
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn kind(&self) -> FunctionKind {
        self.0.kind
    }

    /// Highest nonzero coefficient index for finitely supported functions.
    pub fn support(&self) -> Option<usize> {
        self.0.support
    }

    /// The derived view x ↦ f(−x), sharing this coefficient stream:
    /// coefficients pick up (−1)^k, the evaluator composes with negation.
    pub fn reflect(&self) -> EntireFunction {
        let src = self.clone();
        let kind = match self.0.kind {
            FunctionKind::GaussExp { alpha, beta } => FunctionKind::GaussExp { alpha, beta: -beta },
            _ => FunctionKind::Custom,
        };
        let eval: Option<Box<Evaluator>> = if self.0.eval.is_some() {
            let src_eval = self.clone();
            Some(Box::new(move |x| src_eval.eval(-x).expect("evaluator present")))
        } else {
            None
        };
        EntireFunction::build(
            format!("reflect({})", self.0.name),
            kind,
            Box::new(move |k, _| {
                let c = src.coeff(k);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            }),
            eval,
            self.0.support,
        )
    }

    /// Index of the first coefficient considered nonzero, scanning up to
    /// `scan_limit`. A coefficient counts as zero when
    /// |c_k| < 1e−14 · max_{j≤k} |c_j|, which tolerates floating-point dust
    /// in derived streams. Returns None when all scanned coefficients
    /// vanish.
    pub fn zero_order(&self, scan_limit: usize) -> Option<usize> {
        let mut running_max = 0.0f64;
        for k in 0..=scan_limit {
            let c = self.coeff(k).abs();
            running_max = running_max.max(c);
            if c > 0.0 && c >= 1e-14 * running_max {
                return Some(k);
            }
        }
        None
    }

    // ----- constructors -------------------------------------------------

    /// e^{−x}: c_k = (−1)^k / k!.
    pub fn exp_neg() -> Self {
        EntireFunction::build(
            "exp_neg".into(),
            FunctionKind::ExpNeg,
            Box::new(|k, prev| if k == 0 { 1.0 } else { -prev[k - 1] / k as f64 }),
            Some(Box::new(|x| (-x).exp())),
            None,
        )
    }

    /// e^{−x} x^{n−1}: zero of order n−1 at the origin, then the shifted
    /// exponential tail c_k = (−1)^{k−n+1}/(k−n+1)!.
    pub fn power_exp(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("power_exp needs n ≥ 1, got {n}")));
        }
        let zero_ord = (n - 1) as usize;
        Ok(EntireFunction::build(
            format!("power_exp[{n}]"),
            FunctionKind::PowerExp { n },
            Box::new(move |k, prev| {
                if k < zero_ord {
                    0.0
                } else if k == zero_ord {
                    1.0
                } else {
                    -prev[k - 1] / (k - zero_ord) as f64
                }
            }),
            Some(Box::new(move |x| {
                if x == 0.0 {
                    return if n == 1 { 1.0 } else { 0.0 };
                }
                if x > 0.0 {
                    if x.is_infinite() {
                        return 0.0;
                    }
                    // exp/ln form avoids 0·∞ at huge mapped-tail samples.
                    (-x + (n as f64 - 1.0) * x.ln()).exp()
                } else {
                    x.powi(n as i32 - 1) * (-x).exp()
                }
            })),
            None,
        ))
    }

    /// x^{r−1}(1−x)^{s−r−1}, the Euler-integral numerator; polynomial of
    /// degree s−2 with coefficients c_{r−1+i} = (−1)^i (s−r−1 choose i).
    pub fn beta_poly(r: u32, s: u32) -> Result<Self> {
        if r < 1 || s < r + 1 {
            return Err(Error::InvalidParameter(format!(
                "beta_poly needs r ≥ 1 and s ≥ r+1, got r={r} s={s}"
            )));
        }
        let lo = (r - 1) as usize;
        let deg = (s - 2) as usize;
        let top = (s - r - 1) as f64;
        Ok(EntireFunction::build(
            format!("beta_poly[{r},{s}]"),
            FunctionKind::BetaPoly { r, s },
            Box::new(move |k, _| {
                if k < lo || k > deg {
                    0.0
                } else {
                    let i = k - lo;
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    sign * binom_real(top, i)
                }
            }),
            Some(Box::new(move |x: f64| {
                x.powi(r as i32 - 1) * (1.0 - x).powi((s - r - 1) as i32)
            })),
            Some(deg),
        ))
    }

    /// e^{−αx² + βx}: coefficients from (k+1)c_{k+1} = β c_k − 2α c_{k−1},
    /// the derivative recurrence of the exponent.
    pub fn gauss_exp(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "gauss_exp needs finite α > 0 and finite β, got α={alpha} β={beta}"
            )));
        }
        Ok(EntireFunction::build(
            format!("gauss_exp[{alpha},{beta}]"),
            FunctionKind::GaussExp { alpha, beta },
            Box::new(move |k, prev| match k {
                0 => 1.0,
                1 => beta,
                _ => (beta * prev[k - 1] - 2.0 * alpha * prev[k - 2]) / k as f64,
            }),
            Some(Box::new(move |x: f64| (-x * (alpha * x - beta)).exp())),
            None,
        ))
    }

    /// x^m.
    pub fn monomial(m: u32) -> Self {
        EntireFunction::build(
            format!("monomial[{m}]"),
            FunctionKind::Monomial { m },
            Box::new(move |k, _| if k == m as usize { 1.0 } else { 0.0 }),
            Some(Box::new(move |x: f64| x.powi(m as i32))),
            Some(m as usize),
        )
    }

    /// User-defined entire function from an explicit (k, c_k) list; all
    /// unlisted coefficients are zero, so this represents a polynomial (or a
    /// truncation the caller vouches for). No evaluator.
    pub fn from_pairs(name: &str, pairs: &[(usize, f64)]) -> Result<Self> {
        for &(k, c) in pairs {
            if !c.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "coefficient c_{k} must be finite, got {c}"
                )));
            }
        }
        let max_k = pairs.iter().map(|&(k, _)| k).max().unwrap_or(0);
        let mut dense = vec![0.0f64; max_k + 1];
        for &(k, c) in pairs {
            dense[k] += c;
        }
        let support = dense.iter().rposition(|&c| c != 0.0).unwrap_or(0);
        Ok(EntireFunction::build(
            name.into(),
            FunctionKind::Custom,
            Box::new(move |k, _| dense.get(k).copied().unwrap_or(0.0)),
            None,
            Some(support),
        ))
    }

    /// Parse a user coefficient list: either a JSON array of [k, c_k] pairs
    /// (e.g. `[[0, 1.0], [2, -0.5]]`) or plain text with one `k c_k` pair
    /// per line (# comments allowed).
    pub fn parse_coefficient_list(name: &str, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let mut pairs: Vec<(usize, f64)> = Vec::new();
        if trimmed.starts_with('[') {
            let parsed: Vec<(u64, f64)> = serde_json::from_str(trimmed).map_err(|e| {
                Error::InvalidParameter(format!("coefficient list is not valid JSON pairs: {e}"))
            })?;
            for (k, c) in parsed {
                pairs.push((k as usize, c));
            }
        } else {
            for (line_no, line) in trimmed.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let mut it = line.split_whitespace();
                let (Some(ks), Some(cs)) = (it.next(), it.next()) else {
                    return Err(Error::InvalidParameter(format!(
                        "line {}: expected `k c_k`",
                        line_no + 1
                    )));
                };
                let k: usize = ks.parse().map_err(|_| {
                    Error::InvalidParameter(format!("line {}: bad index {ks}", line_no + 1))
                })?;
                let c: f64 = cs.parse().map_err(|_| {
                    Error::InvalidParameter(format!("line {}: bad coefficient {cs}", line_no + 1))
                })?;
                pairs.push((k, c));
            }
        }
        EntireFunction::from_pairs(name, &pairs)
    }
}

/// Registry of built-in entire functions, keyed by bracketed names:
/// `exp_neg`, `power_exp[n]`, `beta_poly[r,s]`, `gauss_exp[alpha,beta]`,
/// `monomial[m]`.
pub struct BuiltinLibrary;

/// The built-in function catalog.
pub fn builtin_library() -> BuiltinLibrary {
    BuiltinLibrary
}

impl BuiltinLibrary {
    /// Template names with their parameter arity.
    pub fn templates(&self) -> &'static [&'static str] {
        &[
            "exp_neg",
            "power_exp[n]",
            "beta_poly[r,s]",
            "gauss_exp[alpha,beta]",
            "monomial[m]",
        ]
    }

    /// Resolve a registry key such as `gauss_exp[1,2]` into a function.
    pub fn resolve(&self, key: &str) -> Result<EntireFunction> {
        let key = key.trim();
        let (head, args) = match key.find('[') {
            Some(i) => {
                if !key.ends_with(']') {
                    return Err(Error::InvalidParameter(format!(
                        "malformed function name `{key}`: missing closing bracket"
                    )));
                }
                let inner = &key[i + 1..key.len() - 1];
                let args: Vec<&str> = inner.split(',').map(str::trim).collect();
                (&key[..i], args)
            }
            None => (key, Vec::new()),
        };
        let want = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "function `{head}` takes {n} parameter(s), got {}",
                    args.len()
                )))
            }
        };
        let int_arg = |s: &str| -> Result<u32> {
            s.parse().map_err(|_| {
                Error::InvalidParameter(format!("expected a nonnegative integer, got `{s}`"))
            })
        };
        let real_arg = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::InvalidParameter(format!("expected a real number, got `{s}`")))
        };
        match head {
            "exp_neg" => {
                want(0)?;
                Ok(EntireFunction::exp_neg())
            }
            "power_exp" => {
                want(1)?;
                EntireFunction::power_exp(int_arg(args[0])?)
            }
            "beta_poly" => {
                want(2)?;
                EntireFunction::beta_poly(int_arg(args[0])?, int_arg(args[1])?)
            }
            "gauss_exp" => {
                want(2)?;
                EntireFunction::gauss_exp(real_arg(args[0])?, real_arg(args[1])?)
            }
            "monomial" => {
                want(1)?;
                Ok(EntireFunction::monomial(int_arg(args[0])?))
            }
            other => Err(Error::InvalidParameter(format!(
                "unknown function `{other}`; built-ins are {:?}",
                self.templates()
            ))),
        }
    }
}

/// Taylor expansion of f about a center x₀: coefficients
/// d_k = f^{(k)}(x₀)/k!.
#[derive(Debug, Clone)]
pub struct ShiftedExpansion {
    center: f64,
    coeffs: Vec<f64>,
}

impl ShiftedExpansion {
    pub fn center(&self) -> f64 {
        self.center
    }

    /// d_k; panics if k exceeds the requested order.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Relative tail tolerance for the inner re-expansion sums; fixed tight so
/// shifted coefficients carry full double precision into downstream series.
const INNER_REL_TOL: f64 = 1e-16;

/// Default term budget for each inner re-expansion sum.
pub const DEFAULT_SHIFT_BUDGET: usize = SeriesConfig::inner_cap();

/// Re-expand f about x₀, producing d_k = f^{(k)}(x₀)/k! for k = 0..=kmax.
///
/// Each d_k = Σ_{m≥k} c_m (m choose k) x₀^{m−k}; the inner sum stops when
/// three consecutive terms fall below the relative tail tolerance, and
/// errors if `budget` terms do not reach it.
pub fn shift(
    f: &EntireFunction,
    x0: f64,
    kmax: usize,
    budget: usize,
) -> Result<ShiftedExpansion> {
    if !x0.is_finite() {
        return Err(Error::InvalidParameter(format!("shift center must be finite, got {x0}")));
    }
    let mut coeffs = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        coeffs.push(shift_coeff(f, x0, k, budget)?);
    }
    Ok(ShiftedExpansion { center: x0, coeffs })
}

fn shift_coeff(f: &EntireFunction, x0: f64, k: usize, budget: usize) -> Result<f64> {
    let mut sum = 0.0f64;
    // binom(m, k) grown multiplicatively; power = x0^{m−k}.
    let mut binom = 1.0f64;
    let mut power = 1.0f64;
    let mut below = 0u32;
    // Finitely supported functions may have interior zero runs; suppress
    // early stopping until past the support.
    let support_end = f.0.support;
    for m in k..k + budget {
        let term = f.coeff(m) * binom * power;
        sum += term;
        let tiny = term.abs() <= INNER_REL_TOL * sum.abs().max(f64::MIN_POSITIVE);
        below = if tiny { below + 1 } else { 0 };
        let past_support = support_end.map_or(true, |s| m >= s);
        if below >= 3 && past_support {
            return Ok(sum);
        }
        // Advance binom(m+1, k) = binom(m, k) · (m+1)/(m+1−k).
        binom *= (m + 1) as f64 / (m + 1 - k) as f64;
        power *= x0;
    }
    Err(Error::NonConvergence { terms: budget, last_ratio: f64::NAN })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn exp_neg_coefficients() {
        let f = EntireFunction::exp_neg();
        assert_eq!(f.coeff(0), 1.0);
        assert_eq!(f.coeff(1), -1.0);
        assert!(rel(f.coeff(4), 1.0 / 24.0) < 1e-15);
        assert!(rel(f.coeff(5), -1.0 / 120.0) < 1e-15);
    }

    #[test]
    fn beta_poly_coefficients() {
        // x^{r−1}(1−x)^{s−r−1}: r=2, s=4 is x(1−x) = x − x².
        let f = EntireFunction::beta_poly(2, 4).unwrap();
        assert_eq!(
            (0..5).map(|k| f.coeff(k)).collect::<Vec<_>>(),
            vec![0.0, 1.0, -1.0, 0.0, 0.0]
        );
        // r=2, s=3 is x·(1−x)⁰ = x.
        let g = EntireFunction::beta_poly(2, 3).unwrap();
        assert_eq!((0..4).map(|k| g.coeff(k)).collect::<Vec<_>>(), vec![0.0, 1.0, 0.0, 0.0]);
        assert!(EntireFunction::beta_poly(2, 2).is_err());
    }

    #[test]
    fn gauss_exp_coefficients_match_series_product() {
        let f = EntireFunction::gauss_exp(1.0, 2.0).unwrap();
        // Convolve e^{βx} and e^{−αx²} series directly.
        let product = |k: usize| -> f64 {
            let mut acc = 0.0;
            for n in 0..=k / 2 {
                let mut t = 1.0;
                for i in 0..n {
                    t *= -1.0 / (i as f64 + 1.0);
                }
                let mut p = 1.0;
                for i in 0..k - 2 * n {
                    p *= 2.0 / (i as f64 + 1.0);
                }
                acc += t * p;
            }
            acc
        };
        for k in 0..20 {
            assert!(
                rel(f.coeff(k), product(k)) < 1e-12,
                "k={k}: {} vs {}",
                f.coeff(k),
                product(k)
            );
        }
        assert!(rel(f.coeff(3), -2.0 / 3.0) < 1e-15);
    }

    #[test]
    fn partial_sums_approach_evaluator() {
        for f in [
            EntireFunction::exp_neg(),
            EntireFunction::gauss_exp(1.0, 2.0).unwrap(),
            EntireFunction::power_exp(3).unwrap(),
        ] {
            for x in [0.3, 0.9] {
                let mut sum = 0.0;
                let mut p = 1.0;
                for k in 0..60 {
                    sum += f.coeff(k) * p;
                    p *= x;
                }
                let exact = f.eval(x).unwrap();
                assert!(rel(sum, exact) < 1e-12, "{} at {x}: {sum} vs {exact}", f.name());
            }
        }
    }

    #[test]
    fn shift_of_exponential_is_scaled_exponential() {
        // f = e^{−x} about x₀ = −ω: d_k = e^{ω}(−1)^k/k!.
        let f = EntireFunction::exp_neg();
        let omega = 0.37;
        let s = shift(&f, -omega, 12, DEFAULT_SHIFT_BUDGET).unwrap();
        let mut kfac = 1.0;
        for k in 0..=12 {
            if k > 0 {
                kfac *= k as f64;
            }
            let expect = omega.exp() * if k % 2 == 0 { 1.0 } else { -1.0 } / kfac;
            assert!(rel(s.coeff(k), expect) < 1e-13, "k={k}");
        }
    }

    #[test]
    fn shift_of_square_monomial() {
        let f = EntireFunction::monomial(2);
        let s = shift(&f, 1.0, 5, DEFAULT_SHIFT_BUDGET).unwrap();
        assert_eq!(s.coeffs(), &[1.0, 2.0, 1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn shift_reaches_past_interior_zeros() {
        let f = EntireFunction::monomial(9);
        let s = shift(&f, 2.0, 0, DEFAULT_SHIFT_BUDGET).unwrap();
        assert!(rel(s.coeff(0), 512.0) < 1e-15);
    }

    #[test]
    fn double_shift_composes() {
        for f in [EntireFunction::exp_neg(), EntireFunction::beta_poly(2, 5).unwrap()] {
            let (u, v) = (0.4, -0.15);
            let once = shift(&f, u + v, 8, DEFAULT_SHIFT_BUDGET).unwrap();
            let inner = shift(&f, u, 40, DEFAULT_SHIFT_BUDGET).unwrap();
            let g = EntireFunction::from_pairs(
                "shifted",
                &inner.coeffs().iter().copied().enumerate().collect::<Vec<_>>(),
            )
            .unwrap();
            let twice = shift(&g, v, 8, DEFAULT_SHIFT_BUDGET).unwrap();
            for k in 0..=8 {
                assert!(
                    (once.coeff(k) - twice.coeff(k)).abs()
                        <= 1e-10 * once.coeff(k).abs().max(1.0),
                    "{} k={k}: {} vs {}",
                    f.name(),
                    once.coeff(k),
                    twice.coeff(k)
                );
            }
        }
    }

    #[test]
    fn shifted_value_matches_evaluator() {
        for f in [
            EntireFunction::exp_neg(),
            EntireFunction::gauss_exp(0.8, -1.1).unwrap(),
            EntireFunction::power_exp(2).unwrap(),
        ] {
            for x0 in [-0.6, 0.25, 1.7] {
                let s = shift(&f, x0, 0, DEFAULT_SHIFT_BUDGET).unwrap();
                let exact = f.eval(x0).unwrap();
                assert!(
                    (s.coeff(0) - exact).abs() <= 1e-10 * exact.abs().max(1.0),
                    "{} at {x0}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn shift_budget_exhaustion_is_reported() {
        let f = EntireFunction::exp_neg();
        let err = shift(&f, 30.0, 0, 12).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn reflection_view() {
        let f = EntireFunction::gauss_exp(1.0, 2.0).unwrap();
        let g = f.reflect();
        for k in 0..10 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(g.coeff(k), sign * f.coeff(k));
        }
        assert!(rel(g.eval(0.5).unwrap(), f.eval(-0.5).unwrap()) < 1e-15);
        assert_eq!(g.kind(), FunctionKind::GaussExp { alpha: 1.0, beta: -2.0 });
    }

    #[test]
    fn zero_order_detection() {
        assert_eq!(EntireFunction::power_exp(3).unwrap().zero_order(64), Some(2));
        assert_eq!(EntireFunction::exp_neg().zero_order(64), Some(0));
        assert_eq!(EntireFunction::monomial(7).zero_order(64), Some(7));
        let z = EntireFunction::from_pairs("zero", &[]).unwrap();
        assert_eq!(z.zero_order(64), None);
    }

    #[test]
    fn library_resolution() {
        let lib = builtin_library();
        assert_eq!(lib.resolve("exp_neg").unwrap().coeff(1), -1.0);
        let g = lib.resolve("gauss_exp[1, 2]").unwrap();
        assert_eq!(g.kind(), FunctionKind::GaussExp { alpha: 1.0, beta: 2.0 });
        assert_eq!(lib.resolve("monomial[4]").unwrap().coeff(4), 1.0);
        assert!(lib.resolve("power_exp[2]").is_ok());
        assert!(lib.resolve("beta_poly[2,4]").is_ok());
        assert!(lib.resolve("nope").is_err());
        assert!(lib.resolve("gauss_exp[1]").is_err());
        assert!(lib.resolve("gauss_exp[0,1]").is_err());
    }

    #[test]
    fn coefficient_list_parsing() {
        let j = EntireFunction::parse_coefficient_list("u", "[[0, 1.0], [2, -0.5]]").unwrap();
        assert_eq!(j.coeff(0), 1.0);
        assert_eq!(j.coeff(1), 0.0);
        assert_eq!(j.coeff(2), -0.5);
        assert_eq!(j.coeff(3), 0.0);
        let t = EntireFunction::parse_coefficient_list("v", "# c\n0 1.0\n3 2.5\n").unwrap();
        assert_eq!(t.coeff(3), 2.5);
        assert!(EntireFunction::parse_coefficient_list("w", "0 abc").is_err());
    }

    #[test]
    fn coefficients_are_deterministic_across_threads() {
        let f = EntireFunction::gauss_exp(0.7, 1.3).unwrap();
        let expect: Vec<f64> = (0..64).map(|k| f.coeff(k)).collect();
        std::thread::scope(|scope| {
            for _ in 0..4 {
                let f = f.clone();
                let expect = expect.clone();
                scope.spawn(move || {
                    for (k, e) in expect.iter().enumerate() {
                        assert_eq!(f.coeff(k), *e);
                    }
                });
            }
        });
    }
}

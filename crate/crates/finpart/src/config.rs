//! Shared truncation control for every series summation in the crate.
//!
//! All infinite series here are summed with one stopping rule: stop once
//! `|term| <= rel_tol * |partial sum|` holds for three consecutive terms, with
//! a hard cap on the number of terms. Keeping the rule and its knobs in a
//! single type makes every evaluator's truncation behavior reproducible from
//! one configuration value.

use crate::error::{Error, Result};

/// Truncation control: relative tolerance plus a hard term cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Stop once three consecutive terms are below this fraction of the
    /// running partial sum.
    pub rel_tol: f64,
    /// Hard cap on the number of terms; exceeding it is a convergence error.
    pub term_cap: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { rel_tol: 1e-10, term_cap: 2000 }
    }
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, term_cap: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol must be finite and positive, got {rel_tol}"
            )));
        }
        if term_cap < 4 {
            return Err(Error::InvalidParameter(format!(
                "term_cap must be at least 4, got {term_cap}"
            )));
        }
        Ok(SeriesConfig { rel_tol, term_cap })
    }

    /// Tight configuration for inner re-expansion sums (Taylor shifts), which
    /// feed outer series and therefore run at near machine precision.
    pub fn inner() -> Self {
        SeriesConfig { rel_tol: 1e-16, term_cap: Self::inner_cap() }
    }

    /// Term budget of the inner configuration.
    pub const fn inner_cap() -> usize {
        10_000
    }
}

/// Incremental application of the shared stopping rule.
///
/// Feed each new term with [`StopRule::update`]; it reports `true` once three
/// consecutive terms have fallen below `rel_tol * |partial sum|`.
#[derive(Debug, Clone)]
pub struct StopRule {
    cfg: SeriesConfig,
    below: u32,
    pub terms: usize,
    pub last_ratio: f64,
}

impl StopRule {
    pub fn new(cfg: SeriesConfig) -> Self {
        StopRule { cfg, below: 0, terms: 0, last_ratio: f64::INFINITY }
    }

    /// Record one term against the current partial sum. Returns `true` when
    /// the rule is satisfied and summation may stop.
    pub fn update(&mut self, term: f64, partial_sum: f64) -> bool {
        self.terms += 1;
        let scale = partial_sum.abs().max(f64::MIN_POSITIVE);
        self.last_ratio = term.abs() / scale;
        if term.abs() <= self.cfg.rel_tol * scale {
            self.below += 1;
        } else {
            self.below = 0;
        }
        self.below >= 3
    }

    /// Whether the term budget is exhausted.
    pub fn exhausted(&self) -> bool {
        self.terms >= self.cfg.term_cap
    }

    /// Convergence error snapshot for the current state.
    pub fn failure(&self) -> Error {
        Error::NonConvergence { terms: self.terms, last_ratio: self.last_ratio }
    }
}

/// A validated finite real parameter.
///
/// Constructors of parameter bundles funnel raw floats through this type so
/// NaN and infinities are rejected at the boundary rather than deep inside a
/// series loop.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RealParam(f64);

impl RealParam {
    pub fn new(value: f64, name: &str) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::InvalidParameter(format!("{name} must be finite, got {value}")));
        }
        Ok(RealParam(value))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stop_rule_requires_three_consecutive_small_terms() {
        let mut rule = StopRule::new(SeriesConfig { rel_tol: 1e-3, term_cap: 100 });
        assert!(!rule.update(1.0, 1.0));
        assert!(!rule.update(1e-5, 1.0));
        assert!(!rule.update(1e-5, 1.0));
        // A large term resets the counter.
        assert!(!rule.update(0.5, 1.5));
        assert!(!rule.update(1e-5, 1.5));
        assert!(!rule.update(1e-5, 1.5));
        assert!(rule.update(1e-5, 1.5));
    }

    #[test]
    fn real_param_rejects_non_finite() {
        assert!(RealParam::new(f64::NAN, "x").is_err());
        assert!(RealParam::new(f64::INFINITY, "x").is_err());
        assert_eq!(RealParam::new(2.5, "x").unwrap().get(), 2.5);
    }

    #[test]
    fn series_config_validates() {
        assert!(SeriesConfig::new(0.0, 100).is_err());
        assert!(SeriesConfig::new(1e-10, 2).is_err());
        assert!(SeriesConfig::new(1e-8, 50).is_ok());
    }
}

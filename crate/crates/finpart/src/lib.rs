//! Evaluation of generalized Stieltjes transforms and related integral
//! transforms of entire functions by exact term-by-term expansions built on
//! Hadamard finite-part integrals, with independent numerical oracles.
//!
//! The crate is organized bottom-up:
//! - [`specfun`]: scalar special-function kernel (Γ, ψ, erfc, …).
//! - [`quadrature`]: adaptive Gauss–Kronrod integration, the independent
//!   cross-check for everything else.
//! - [`entire`]: entire functions as Taylor coefficient streams with
//!   re-expansion about arbitrary centers.
//! - [`fpi`]: finite-part integrals — closed forms plus the ε-limit oracle.
//! - [`stieltjes`]: the transform evaluators assembled from naive series
//!   plus singular corrections.
//! - [`apps`]: named special-function expansions (₂F₁, Kummer U, K₀,
//!   Gaussian √-kernel transform) with cross-validating assemblies.
//! - [`oracle`]: quadrature-based reference evaluations.
//! - [`verify`]: the acceptance check suite shared by tests and the CLI.

pub mod config;
pub mod entire;
pub mod error;
pub mod fpi;
pub mod apps;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod stieltjes;
pub mod verify;

pub use config::{RealParam, SeriesConfig, StopRule};
pub use entire::{builtin_library, shift, EntireFunction, FunctionKind, ShiftedExpansion};
pub use error::{Error, Result};
pub use fpi::{EpsilonLadder, FinitePartValue, OracleReport, UpperLimit};
pub use apps::{
    bessel_k0, bessel_k0_reference, bessel_k0_with_terms, gauss2f1_expansion,
    gauss2f1_expansion_with_terms, gauss2f1_two_f1, gaussian_sqrt, gaussian_sqrt_leading,
    kummer_u, kummer_u_leading, kummer_u_one_f1, kummer_u_with_terms, Gauss2F1Params,
    KummerParams,
};
pub use quadrature::QuadResult;
pub use stieltjes::{
    dominant_term, eval_sqrt_transform, eval_stieltjes, DominantSource, ExpansionResult,
    StieltjesQuery,
};

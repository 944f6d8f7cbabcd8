//! Algebraic data attached to global solutions of the tt*-Toda
//! equations, and the conversions among its three equivalent forms:
//!
//! * asymptotic data `(γ_0, …, γ_n)` at `t = 0`, equivalently
//!   `m_i = -γ_i/2`;
//! * Stokes parameters `(s_1, …, s_n)` at `t = ∞`, the elementary
//!   symmetric functions of the unit numbers
//!   `x_j = exp((n - 2j - γ_j) πi/(n+1))`;
//! * Higgs exponents `(k_0, …, k_n)` with normalization
//!   `N = n + 1 + Σ k_i`, related to `m` by
//!   `m_{i-1} - m_i + 1 = ((n+1)/N)(k_i + 1)`.
//!
//! The Stokes parameters are packaged into the Steinberg cross-section
//! matrix `M^(0)`, the companion-form element of `SL_{n+1}` whose
//! characteristic polynomial carries `±s_i` and whose semisimple part is
//! `exp(2πi(m+ρ)/(n+1))`.

mod asymptotic;
mod higgs;
mod steinberg;
mod stokes;

pub use asymptotic::{
    alcove_point, in_fundamental_alcove, satisfies_interior_inequalities, validate_gamma,
    AsymptoticData,
};
pub use higgs::{higgs_to_gamma, higgs_to_m, t_from_q, GammaConvention, HiggsExponents};
pub use steinberg::{steinberg_matrix, SteinbergMatrix};
pub use stokes::{semisimple_spectrum, stokes_from_gamma, StokesParameters};

pub(crate) use higgs::m_from_exponents_rational;

use std::fmt;
use thiserror::Error;

/// Which constraint of the data failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    /// `γ_{i+1} - γ_i ≥ -2`
    Slope,
    /// `γ_i + γ_{n-i} = 0`
    Antisymmetry,
    /// `k_i ≥ -1`
    ExponentRange,
    /// `n + 1 + Σ k_i = N`
    ExponentSum,
    /// `k_i = k_{n-i+1}` for `i = 1, …, n`
    ExponentPalindrome,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let desc = match self {
            ConstraintKind::Slope => "slope bound gamma[i+1] - gamma[i] >= -2",
            ConstraintKind::Antisymmetry => "antisymmetry gamma[i] + gamma[n-i] = 0",
            ConstraintKind::ExponentRange => "exponent bound k[i] >= -1",
            ConstraintKind::ExponentSum => "normalization n + 1 + sum(k) = N",
            ConstraintKind::ExponentPalindrome => "palindrome k[i] = k[n-i+1]",
        };
        f.write_str(desc)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StokesDataError {
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("constraint violated at index {index}: {kind}")]
    ConstraintViolation { index: usize, kind: ConstraintKind },
    #[error("normalization N must be positive, got {0}")]
    NonPositiveNormalization(i64),
    #[error("cyclic closure identity off by {defect:e}")]
    InconsistentClosure { defect: f64 },
}

/// Validation tolerance for float inputs on the equality constraints;
/// exact (e.g. integer-valued) inputs pass with zero slack.
pub(crate) const VALIDATION_TOL: f64 = 1e-12;

//! Global radial solutions of the tt*-Toda equations
//!
//! ```text
//! 2 (w_i)_{tt̄} = -e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})},   w_i + w_{n-i} = 0,
//! ```
//!
//! solved numerically as a two-point boundary-value problem in
//! `r = |t|` on `[ε, R]`, and extraction of the Stokes parameters `s_k`
//! from the exponentially small tail at large `r`. The inner boundary
//! carries the logarithmic data `w_i ~ -m_i log r`; the outer boundary
//! is a decay (Robin) condition at the slowest rate `2 L_1`.

mod csv_io;
mod extract;
mod grid;
mod residual;
mod solver;

pub use extract::{
    default_window, extract_stokes, painleve3_roundtrip, RoundTrip, StokesFit,
};
pub use grid::{GridParams, RadialGrid};
pub use residual::radial_residual;
pub use solver::{solve_global, SolveOptions};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TodaError {
    #[error("Newton iteration failed after {iterations} steps (scaled residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("grid too coarse: two-grid deviation {deviation:e} exceeds {threshold:e}")]
    GridTooCoarse { deviation: f64, threshold: f64 },
    #[error("tail signal below noise floor (max |signal| = {max_signal:e})")]
    SignalBelowNoise { max_signal: f64 },
    #[error("empty fitting window for k = {k} (got [{lo}, {hi}])")]
    EmptyWindow { k: usize, lo: f64, hi: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("gamma_0 must lie in (-1, 1), got {0}")]
    GammaOutOfRange(f64),
    #[error("antisymmetry defect {0:e} exceeds 1e-10")]
    AntisymmetryViolated(f64),
    #[error("solution values must be finite")]
    NonFiniteValues,
    #[error("csv: {0}")]
    Csv(String),
}

/// The slowest-to-fastest tail rates `L_k = 2 sin(kπ/(n+1))`.
pub fn decay_rate(n: usize, k: usize) -> f64 {
    2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).sin()
}

/// The universal tail profile `F(x) = ½ (πx)^{-1/2} e^{-2x}`.
pub fn asymptotic_profile(x: f64) -> f64 {
    0.5 / (std::f64::consts::PI * x).sqrt() * (-2.0 * x).exp()
}

/// Grid values of a radial solution `(w_0, …, w_n)` on `[ε, R]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    n: usize,
    grid: RadialGrid,
    w: Vec<Vec<f64>>,
    boundary_m: Option<Vec<f64>>,
}

impl RadialSolution {
    /// Validating constructor: shapes must match, values must be finite,
    /// and the antisymmetry `w_i + w_{n-i} = 0` must hold to 1e-10. The
    /// boundary data is `Some` when the solution came from the solver
    /// and `None` when it was read back from a file.
    pub fn new(
        n: usize,
        grid: RadialGrid,
        w: Vec<Vec<f64>>,
        boundary_m: Option<Vec<f64>>,
    ) -> Result<Self, TodaError> {
        if w.len() != n + 1 || w.iter().any(|row| row.len() != grid.len()) {
            return Err(TodaError::Csv(format!(
                "value table must be (n+1) × M = {} × {}",
                n + 1,
                grid.len()
            )));
        }
        if w.iter().flatten().any(|x| !x.is_finite()) {
            return Err(TodaError::NonFiniteValues);
        }
        let sol = RadialSolution {
            n,
            grid,
            w,
            boundary_m,
        };
        let defect = sol.antisymmetry_defect();
        if defect > 1e-10 {
            return Err(TodaError::AntisymmetryViolated(defect));
        }
        Ok(sol)
    }

    /// Builds the full component table from the reduced (folded)
    /// unknowns of the solver; antisymmetry then holds exactly.
    pub(crate) fn from_reduced(
        n: usize,
        grid: RadialGrid,
        u: &[f64],
        m: Vec<f64>,
    ) -> Result<Self, TodaError> {
        let p = (n + 1) / 2;
        debug_assert_eq!(u.len(), p * grid.len());
        let mut w = vec![vec![0.0; grid.len()]; n + 1];
        for j in 0..grid.len() {
            for i in 0..p {
                let value = u[j * p + i];
                w[i][j] = value;
                w[n - i][j] = -value;
            }
        }
        RadialSolution::new(n, grid, w, Some(m))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    /// Component values, `values()[i][j]` being `w_i(r_j)`.
    pub fn values(&self) -> &[Vec<f64>] {
        &self.w
    }

    /// The asymptotic data `m` used as boundary input, when known.
    pub fn boundary_m(&self) -> Option<&[f64]> {
        self.boundary_m.as_deref()
    }

    /// Worst violation of `w_i(r) + w_{n-i}(r) = 0` over the grid.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..=self.n / 2 {
            for j in 0..self.grid.len() {
                worst = worst.max((self.w[i][j] + self.w[self.n - i][j]).abs());
            }
        }
        worst
    }
}

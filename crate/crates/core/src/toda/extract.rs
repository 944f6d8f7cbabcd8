use super::{asymptotic_profile, decay_rate, GridParams, RadialSolution, SolveOptions, TodaError};
use crate::stokesdata::validate_gamma;

/// Result of fitting the large-`t` asymptotics of a solution.
#[derive(Debug, Clone, PartialEq)]
pub struct StokesFit {
    pub k: usize,
    /// The fitted Stokes parameter `s_k`.
    pub s: f64,
    /// Window of radii actually used.
    pub window: (f64, f64),
    pub nodes_used: usize,
    /// RMS of the fit residual relative to the fitted signal.
    pub relative_residual: f64,
}

/// Default fitting window for mode `k`: radii in `[R/2, R]` where the
/// profile `F(L_k r)` lies in `[1e-10, 1e-3]`, balancing asymptotic
/// validity against floating-point noise.
pub fn default_window(sol: &RadialSolution, k: usize) -> (f64, f64) {
    let rate = decay_rate(sol.rank(), k);
    let outer = sol.grid().outer();
    let mut lo = outer / 2.0;
    let mut hi = outer;
    // F is monotone decreasing, so the band is an interval
    let mut r = lo;
    let step = (hi - lo) / 4096.0;
    while r < hi && asymptotic_profile(rate * r) > 1e-3 {
        r += step;
    }
    lo = r;
    r = hi;
    while r > lo && asymptotic_profile(rate * r) < 1e-10 {
        r -= step;
    }
    hi = r;
    (lo, hi)
}

/// Extracts the Stokes parameter `s_k` from the tail of a solution by a
/// least-squares fit of
///
/// ```text
/// -(4/(n+1)) Σ_{p=0}^{⌊(n-1)/2⌋} w_p(r) sin((2p+1)kπ/(n+1))  ≈  s_k F(L_k r)
/// ```
///
/// over the window, with `F(x) = ½ (πx)^{-1/2} e^{-2x}` and
/// `L_k = 2 sin(kπ/(n+1))`. An identically-zero signal is the zero
/// solution and fits `s_k = 0` exactly; a nonzero signal entirely below
/// `1e-12` is indistinguishable from noise and is rejected.
pub fn extract_stokes(
    sol: &RadialSolution,
    k: usize,
    window: Option<(f64, f64)>,
) -> Result<StokesFit, TodaError> {
    let n = sol.rank();
    assert!((1..=n).contains(&k), "Stokes index must lie in 1..={n}");
    let (lo, hi) = window.unwrap_or_else(|| default_window(sol, k));
    if !(lo < hi) {
        return Err(TodaError::EmptyWindow { k, lo, hi });
    }
    let rate = decay_rate(n, k);
    let n1 = n as f64 + 1.0;
    let mut rs = Vec::new();
    let mut signal = Vec::new();
    for (j, &r) in sol.grid().nodes().iter().enumerate() {
        if r < lo || r > hi {
            continue;
        }
        let mut acc = 0.0;
        for p in 0..=(n.saturating_sub(1)) / 2 {
            let weight = ((2 * p + 1) as f64 * k as f64 * std::f64::consts::PI / n1).sin();
            acc += sol.values()[p][j] * weight;
        }
        rs.push(r);
        signal.push(-4.0 / n1 * acc);
    }
    if rs.is_empty() {
        return Err(TodaError::EmptyWindow { k, lo, hi });
    }
    let max_signal = signal.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max_signal == 0.0 {
        return Ok(StokesFit {
            k,
            s: 0.0,
            window: (lo, hi),
            nodes_used: rs.len(),
            relative_residual: 0.0,
        });
    }
    if max_signal < 1e-12 {
        return Err(TodaError::SignalBelowNoise { max_signal });
    }
    let profile: Vec<f64> = rs.iter().map(|&r| asymptotic_profile(rate * r)).collect();
    let num: f64 = signal.iter().zip(&profile).map(|(s, f)| s * f).sum();
    let den: f64 = profile.iter().map(|f| f * f).sum();
    let s = num / den;
    let model_sq: f64 = profile.iter().map(|f| (s * f).powi(2)).sum();
    let resid_sq: f64 = signal
        .iter()
        .zip(&profile)
        .map(|(sig, f)| (sig - s * f).powi(2))
        .sum();
    Ok(StokesFit {
        k,
        s,
        window: (lo, hi),
        nodes_used: rs.len(),
        relative_residual: (resid_sq / model_sq.max(f64::MIN_POSITIVE)).sqrt(),
    })
}

/// Result of the closed-form cross-check available at rank one.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrip {
    pub gamma_0: f64,
    pub s_numeric: f64,
    /// `2 sin(π γ_0 / 2)`.
    pub s_exact: f64,
    /// `|s_numeric - s_exact| / |s_exact|`, absent at `γ_0 = 0`.
    pub relative_error: Option<f64>,
}

/// Solves the rank-one system (radial sinh-Gordon, a special case of
/// Painlevé III) for `γ_0 ∈ (-1, 1)` and compares the extracted Stokes
/// parameter with the closed form `2 sin(π γ_0/2)`.
pub fn painleve3_roundtrip(
    gamma_0: f64,
    grid: &GridParams,
    opts: &SolveOptions,
) -> Result<RoundTrip, TodaError> {
    if !gamma_0.is_finite() || gamma_0.abs() >= 1.0 {
        return Err(TodaError::GammaOutOfRange(gamma_0));
    }
    let data = validate_gamma(1, &[gamma_0, -gamma_0])
        .expect("|γ_0| < 1 is always admissible at rank one");
    let sol = super::solve_global(1, &data, grid, opts)?;
    let fit = extract_stokes(&sol, 1, None)?;
    let s_exact = 2.0 * (std::f64::consts::FRAC_PI_2 * gamma_0).sin();
    let relative_error = if s_exact == 0.0 {
        None
    } else {
        Some(((fit.s - s_exact) / s_exact).abs())
    };
    Ok(RoundTrip {
        gamma_0,
        s_numeric: fit.s,
        s_exact,
        relative_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::RadialGrid;

    fn zero_solution(n: usize) -> RadialSolution {
        let grid = RadialGrid::log_then_uniform(1e-2, 6.0, 64).unwrap();
        let w = vec![vec![0.0; grid.len()]; n + 1];
        RadialSolution::new(n, grid, w, None).unwrap()
    }

    #[test]
    fn zero_solution_fits_zero() {
        let fit = extract_stokes(&zero_solution(2), 1, None).unwrap();
        assert_eq!(fit.s, 0.0);
    }

    #[test]
    fn pure_profile_recovers_amplitude() {
        // synthesize w_0 = -(s/2) F(2r) at rank one: the fit must return s
        let grid = RadialGrid::log_then_uniform(1e-2, 6.0, 800).unwrap();
        let s_true = 1.37;
        let w0: Vec<f64> = grid
            .nodes()
            .iter()
            .map(|&r| -0.5 * s_true * asymptotic_profile(2.0 * r))
            .collect();
        let w1: Vec<f64> = w0.iter().map(|x| -x).collect();
        let sol = RadialSolution::new(1, grid, vec![w0, w1], None).unwrap();
        let fit = extract_stokes(&sol, 1, None).unwrap();
        assert!((fit.s - s_true).abs() < 1e-10, "fit {} vs {s_true}", fit.s);
        assert!(fit.relative_residual < 1e-10);
    }

    #[test]
    fn window_outside_band_is_rejected() {
        let sol = zero_solution(1);
        assert!(matches!(
            extract_stokes(&sol, 1, Some((5.9, 5.8))),
            Err(TodaError::EmptyWindow { .. })
        ));
    }

    #[test]
    fn tiny_but_nonzero_signal_is_noise() {
        let grid = RadialGrid::log_then_uniform(1e-2, 6.0, 64).unwrap();
        let w0: Vec<f64> = grid.nodes().iter().map(|_| 1e-14).collect();
        let w1: Vec<f64> = w0.iter().map(|x| -x).collect();
        let sol = RadialSolution::new(1, grid, vec![w0, w1], None).unwrap();
        assert!(matches!(
            extract_stokes(&sol, 1, None),
            Err(TodaError::SignalBelowNoise { .. })
        ));
    }

    #[test]
    fn out_of_range_gamma_is_rejected() {
        assert!(matches!(
            painleve3_roundtrip(1.0, &GridParams::default(), &SolveOptions::default()),
            Err(TodaError::GammaOutOfRange(_))
        ));
    }

    #[test]
    fn zero_gamma_round_trip_is_trivial() {
        let grid = GridParams {
            nodes: 200,
            ..GridParams::default()
        };
        let rt = painleve3_roundtrip(0.0, &grid, &SolveOptions::default()).unwrap();
        assert_eq!(rt.s_numeric, 0.0);
        assert_eq!(rt.s_exact, 0.0);
        assert!(rt.relative_error.is_none());
    }
}

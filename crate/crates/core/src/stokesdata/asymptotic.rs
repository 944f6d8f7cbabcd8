use super::{ConstraintKind, StokesDataError, VALIDATION_TOL};

/// Asymptotic data `(γ_0, …, γ_n)` of a global radial tt*-Toda solution:
/// `2 w_i(|t|) ~ γ_i log|t|` as `t → 0`.
///
/// Admissibility means `γ_{i+1} - γ_i ≥ -2` and `γ_i + γ_{n-i} = 0`.
/// Antisymmetry is enforced exactly on construction (float inputs may
/// carry defects up to the validation tolerance; they are symmetrized
/// away), so the derived `m_i = -γ_i/2` satisfy `m_i + m_{n-i} = 0` to
/// the last bit.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticData {
    n: usize,
    gamma: Vec<f64>,
}

/// Checks the admissibility constraints and returns the validated data.
pub fn validate_gamma(n: usize, gamma: &[f64]) -> Result<AsymptoticData, StokesDataError> {
    if gamma.len() != n + 1 {
        return Err(StokesDataError::LengthMismatch {
            expected: n + 1,
            got: gamma.len(),
        });
    }
    for i in 0..=n / 2 {
        if (gamma[i] + gamma[n - i]).abs() > VALIDATION_TOL {
            return Err(StokesDataError::ConstraintViolation {
                index: i,
                kind: ConstraintKind::Antisymmetry,
            });
        }
    }
    let mut sym: Vec<f64> = (0..=n)
        .map(|i| 0.5 * (gamma[i] - gamma[n - i]))
        .collect();
    if n % 2 == 0 {
        sym[n / 2] = 0.0;
    }
    for i in 0..n {
        if sym[i + 1] - sym[i] < -2.0 - VALIDATION_TOL {
            return Err(StokesDataError::ConstraintViolation {
                index: i,
                kind: ConstraintKind::Slope,
            });
        }
    }
    Ok(AsymptoticData { n, gamma: sym })
}

impl AsymptoticData {
    /// See [`validate_gamma`].
    pub fn new(n: usize, gamma: &[f64]) -> Result<Self, StokesDataError> {
        validate_gamma(n, gamma)
    }

    /// The data of the distinguished solution attached to `CP^n`:
    /// `γ = (n, n-2, …, -n)`, i.e. `m = -ρ`.
    pub fn projective_space(n: usize) -> Self {
        let gamma: Vec<f64> = (0..=n).map(|i| (n as f64) - 2.0 * i as f64).collect();
        AsymptoticData { n, gamma }
    }

    /// Converts `m` back to `γ = -2m` (exact involution with
    /// [`AsymptoticData::m`]).
    pub fn from_m(m: &[f64]) -> Result<Self, StokesDataError> {
        let gamma: Vec<f64> = m.iter().map(|&x| -2.0 * x).collect();
        validate_gamma(gamma.len().saturating_sub(1), &gamma)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    /// The exponents `m_i = -γ_i/2` (`w_i ~ -m_i log|t|` as `t → 0`).
    pub fn m(&self) -> Vec<f64> {
        self.gamma.iter().map(|&g| -0.5 * g).collect()
    }

    /// Whether the polytope inequalities `m_{i-1} - m_i + 1 ≥ 0` (taken
    /// cyclically) all hold strictly, i.e. the data lies in the interior
    /// of the admissible region.
    pub fn is_strictly_interior(&self, margin: f64) -> bool {
        satisfies_interior_inequalities(&self.m(), margin)
    }
}

/// The cyclic inequalities `m_{i-1} - m_i + 1 > margin` for
/// `i = 0, …, n` with `m_{-1} = m_n`. With `margin = 0` this is the
/// (open) admissibility polytope.
pub fn satisfies_interior_inequalities(m: &[f64], margin: f64) -> bool {
    let len = m.len();
    (0..len).all(|i| {
        let prev = m[(i + len - 1) % len];
        prev - m[i] + 1.0 > margin
    })
}

/// The alcove representative `(m + ρ)/(n+1)` of the data, where
/// `ρ = (n/2, n/2 - 1, …, -n/2)`. Requires `Σ m_i = 0`.
pub fn alcove_point(m: &[f64]) -> Vec<f64> {
    assert!(!m.is_empty());
    let sum: f64 = m.iter().sum();
    assert!(
        sum.abs() < 1e-9,
        "alcove points are defined for trace-zero m (Σ m_i = {sum})"
    );
    let n = m.len() - 1;
    m.iter()
        .enumerate()
        .map(|(j, &mj)| (mj + rho_coord(n, j)) / (n as f64 + 1.0))
        .collect()
}

pub(crate) fn rho_coord(n: usize, j: usize) -> f64 {
    n as f64 / 2.0 - j as f64
}

/// Membership in the closed Fundamental Weyl Alcove of `sl_{n+1}`, in
/// the coordinate convention of [`alcove_point`]: the coordinates are
/// weakly decreasing and the first minus the last is at most 1.
pub fn in_fundamental_alcove(point: &[f64], tol: f64) -> bool {
    let decreasing = point.windows(2).all(|w| w[0] >= w[1] - tol);
    let affine = point[0] - point[point.len() - 1] <= 1.0 + tol;
    decreasing && affine
}

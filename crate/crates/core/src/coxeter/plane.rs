use num_complex::Complex64;

use super::roots::{coxeter_element, Root, RootSystemA};
use super::CoxeterError;

/// A root together with its orthogonal projection to the Coxeter plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedRoot {
    pub root: Root,
    /// Plane coordinates. The frame is orthonormal up to a common scale,
    /// chosen so the distance from the origin equals the soliton mass
    /// `2 sin(dπ/(n+1))` of the root's class.
    pub x: f64,
    pub y: f64,
    /// Coxeter-orbit index `(i - j) mod (n+1)`, in `1..=n`.
    pub orbit: usize,
    /// Ray direction in `[0, 2π)`.
    pub ray_angle: f64,
}

/// The projection of the `A_n` root system onto the Coxeter plane.
#[derive(Debug, Clone, PartialEq)]
pub struct CoxeterProjection {
    n: usize,
    entries: Vec<ProjectedRoot>,
}

/// Projects the roots onto the plane spanned by the real and imaginary
/// parts of the Coxeter-element eigenvector with eigenvalue
/// `exp(2πi/(n+1))`, normalized to unit first coordinate.
///
/// In the plane the Coxeter element acts by rotation through
/// `2π/(n+1)`. The projection of the root `x_a - x_b` has complex
/// coordinate `ω^a - ω^b` with `ω = exp(2πi/(n+1))`; rank 1 is rejected
/// because the plane degenerates there.
pub fn coxeter_plane(n: usize) -> Result<CoxeterProjection, CoxeterError> {
    if n < 2 {
        return Err(CoxeterError::DegeneratePlane(n));
    }
    let element = coxeter_element(n);
    let s = n as f64 + 1.0;
    let omega: Vec<Complex64> = (0..=n)
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / s))
        .collect();
    // v_j = ω^{-j} is the eigenvector of e_j ↦ e_{σ(j)} with eigenvalue
    // ω (the relation reads v_j = ω v_{σ(j)}); check rather than assume.
    for j in 0..=n {
        let v_j = omega[(n + 1 - j) % (n + 1)];
        let v_sigma_j = omega[(n + 1 - element.image(j)) % (n + 1)];
        debug_assert!((v_j - omega[1] * v_sigma_j).norm() < 1e-12);
    }
    let entries = RootSystemA::new(n)
        .roots()
        .into_iter()
        .map(|root| {
            let z = omega[root.i] - omega[root.j];
            let mut angle = z.arg();
            if angle < 0.0 {
                angle += std::f64::consts::TAU;
            }
            ProjectedRoot {
                root,
                x: z.re,
                y: z.im,
                orbit: root.orbit(n),
                ray_angle: angle,
            }
        })
        .collect();
    Ok(CoxeterProjection { n, entries })
}

impl CoxeterProjection {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[ProjectedRoot] {
        &self.entries
    }

    /// Rotation angle `2π/(n+1)` of the projected Coxeter action.
    pub fn rotation_angle(&self) -> f64 {
        std::f64::consts::TAU / (self.n as f64 + 1.0)
    }

    /// Entries grouped by orbit index `1..=n`.
    pub fn orbits(&self) -> Vec<Vec<&ProjectedRoot>> {
        let mut out = vec![Vec::new(); self.n];
        for e in &self.entries {
            out[e.orbit - 1].push(e);
        }
        out
    }
}

use nalgebra::{DMatrix, DVector};

use super::residual::lap_weights;
use super::{decay_rate, GridParams, RadialGrid, RadialSolution, TodaError};
use crate::stokesdata::AsymptoticData;

/// Knobs of the global solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    /// Convergence target for the scaled max-norm residual (each row is
    /// scaled by `1 + |e⁺| + |e⁻|` so the criterion stays meaningful
    /// where the exponential terms are huge near the inner boundary).
    pub tol: f64,
    pub max_iterations: usize,
    /// When set, re-solve on a half-resolution grid and reject with
    /// [`TodaError::GridTooCoarse`] if the two solutions deviate by more
    /// than ten times this value. Off by default: it doubles the cost
    /// and the default grid is far inside the safe regime.
    pub grid_check: Option<f64>,
    /// Number of ramp steps of the continuation fallback used for
    /// boundary-admissible data.
    pub continuation_steps: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tol: 1e-10,
            max_iterations: 60,
            grid_check: None,
            continuation_steps: 6,
        }
    }
}

/// Antisymmetry folding: component `i` of the full field is
/// `sign * u[index]` for the reduced unknowns `u`, or identically zero
/// for the middle component of even-rank systems.
#[derive(Debug, Clone, Copy)]
struct ComponentMap {
    n: usize,
    p: usize,
}

impl ComponentMap {
    fn new(n: usize) -> Self {
        ComponentMap { n, p: (n + 1) / 2 }
    }

    fn fold(&self, full: usize) -> Option<(usize, f64)> {
        if full < self.p {
            Some((full, 1.0))
        } else if 2 * full == self.n {
            None
        } else {
            Some((self.n - full, -1.0))
        }
    }

    fn coeff(&self, full: usize, reduced: usize) -> f64 {
        match self.fold(full) {
            Some((idx, sign)) if idx == reduced => sign,
            _ => 0.0,
        }
    }
}

struct System<'a> {
    n: usize,
    p: usize,
    map: ComponentMap,
    grid: &'a RadialGrid,
    m: Vec<f64>,
    outer_rate: f64,
}

impl<'a> System<'a> {
    fn new(n: usize, grid: &'a RadialGrid, m: &[f64]) -> Self {
        let map = ComponentMap::new(n);
        System {
            n,
            p: map.p,
            map,
            grid,
            m: m[..map.p].to_vec(),
            outer_rate: decay_rate(n, 1),
        }
    }

    fn unknowns(&self) -> usize {
        self.p * self.grid.len()
    }

    /// Scaled residual; optionally also the Jacobian blocks
    /// (lower, diagonal, upper) of the block-tridiagonal system.
    fn assemble(
        &self,
        u: &[f64],
        mut jac: Option<&mut Blocks>,
    ) -> Vec<f64> {
        let (n, p) = (self.n, self.p);
        let r = self.grid.nodes();
        let last = r.len() - 1;
        let mut residual = vec![0.0; self.unknowns()];
        let at = |u: &[f64], j: usize, i: usize| u[j * p + i];

        // inner boundary: (w_1 - w_0)/Δξ = -m_i  (ξ = log r, exact on
        // the log profile)
        let dxi = (r[1] / r[0]).ln();
        for i in 0..p {
            let value = (at(u, 1, i) - at(u, 0, i)) / dxi + self.m[i];
            residual[i] = value / (1.0 + self.m[i].abs());
            if let Some(b) = jac.as_deref_mut() {
                let scale = 1.0 / (1.0 + self.m[i].abs());
                b.diag[0][(i, i)] = -scale / dxi;
                b.upper[0][(i, i)] = scale / dxi;
            }
        }

        // interior collocation rows
        for j in 1..last {
            let (a, bw, c) = lap_weights(r[j - 1], r[j], r[j + 1]);
            let full_at = |i: usize| -> f64 {
                self.map
                    .fold(i)
                    .map(|(idx, s)| s * at(u, j, idx))
                    .unwrap_or(0.0)
            };
            for i in 0..p {
                let up = (i + 1) % (n + 1);
                let down = (i + n) % (n + 1);
                let e_plus = (2.0 * (full_at(up) - full_at(i))).exp();
                let e_minus = (2.0 * (full_at(i) - full_at(down))).exp();
                let lap = a * at(u, j - 1, i) + bw * at(u, j, i) + c * at(u, j + 1, i);
                let scale = 1.0 / (1.0 + e_plus + e_minus);
                residual[j * p + i] = (0.5 * lap + e_plus - e_minus) * scale;
                if let Some(b) = jac.as_deref_mut() {
                    b.lower[j][(i, i)] = 0.5 * a * scale;
                    b.upper[j][(i, i)] = 0.5 * c * scale;
                    for col in 0..p {
                        let d_up = self.map.coeff(up, col);
                        let d_self = self.map.coeff(i, col);
                        let d_down = self.map.coeff(down, col);
                        let mut d = 2.0 * e_plus * (d_up - d_self)
                            - 2.0 * e_minus * (d_self - d_down);
                        if col == i {
                            d += 0.5 * bw;
                        }
                        // the scale factor is frozen, not differentiated:
                        // it only reweights rows of the linear system
                        b.diag[j][(i, col)] = d * scale;
                    }
                }
            }
        }

        // outer boundary: midpoint Robin  w' + 2 L_1 w = 0
        let h = r[last] - r[last - 1];
        for i in 0..p {
            let value = (at(u, last, i) - at(u, last - 1, i)) / h
                + self.outer_rate * (at(u, last, i) + at(u, last - 1, i));
            residual[last * p + i] = value;
            if let Some(b) = jac.as_deref_mut() {
                b.diag[last][(i, i)] = 1.0 / h + self.outer_rate;
                b.lower[last][(i, i)] = -1.0 / h + self.outer_rate;
            }
        }
        residual
    }

    fn max_norm(residual: &[f64]) -> f64 {
        residual.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }
}

struct Blocks {
    lower: Vec<DMatrix<f64>>,
    diag: Vec<DMatrix<f64>>,
    upper: Vec<DMatrix<f64>>,
}

impl Blocks {
    fn zeros(nodes: usize, p: usize) -> Self {
        let make = || (0..nodes).map(|_| DMatrix::zeros(p, p)).collect();
        Blocks {
            lower: make(),
            diag: make(),
            upper: make(),
        }
    }

    /// Solves the block-tridiagonal system in place for the right-hand
    /// side `rhs`, by block Thomas elimination.
    fn solve(&mut self, rhs: &[f64], p: usize) -> Result<Vec<f64>, TodaError> {
        let nodes = self.diag.len();
        let mut rhs: Vec<DVector<f64>> = (0..nodes)
            .map(|j| DVector::from_column_slice(&rhs[j * p..(j + 1) * p]))
            .collect();
        let singular = || TodaError::NoConvergence {
            iterations: 0,
            residual: f64::NAN,
        };
        for j in 1..nodes {
            // blocks are tiny (p ≤ a handful), explicit inverses are fine
            let dinv = self.diag[j - 1].clone().try_inverse().ok_or_else(singular)?;
            let a_dinv = &self.lower[j] * &dinv;
            self.diag[j] = &self.diag[j] - &a_dinv * &self.upper[j - 1];
            let correction = &a_dinv * &rhs[j - 1];
            rhs[j] -= correction;
        }
        let mut x = vec![DVector::zeros(p); nodes];
        x[nodes - 1] = self.diag[nodes - 1]
            .clone()
            .lu()
            .solve(&rhs[nodes - 1])
            .ok_or_else(singular)?;
        for j in (0..nodes - 1).rev() {
            let rhs_j = &rhs[j] - &self.upper[j] * &x[j + 1];
            x[j] = self.diag[j].clone().lu().solve(&rhs_j).ok_or_else(singular)?;
        }
        let mut flat = Vec::with_capacity(nodes * p);
        for v in &x {
            flat.extend_from_slice(v.as_slice());
        }
        Ok(flat)
    }
}

/// Solves the radial tt*-Toda boundary-value problem on `[ε, R]` with
/// asymptotic data `a`: Robin conditions `r w_i'(ε) = -m_i` at the inner
/// boundary (the logarithmic data) and `w_i'(R) + 2 L_1 w_i(R) = 0` at
/// the outer boundary (the slowest decay rate), damped Newton iteration
/// in between. Antisymmetry `w_i + w_{n-i} = 0` is built into the
/// unknowns, halving the system.
///
/// Data on the boundary of the admissible polytope (where some
/// inequality `m_{i-1} - m_i + 1 > 0` degenerates to equality) is run
/// under a continuation ramp in `m` with the inner radius tightened to
/// `1e-4`; this is best-effort, as the analysis is hardest exactly
/// there.
pub fn solve_global(
    n: usize,
    a: &AsymptoticData,
    grid_params: &GridParams,
    opts: &SolveOptions,
) -> Result<RadialSolution, TodaError> {
    assert!(n >= 1, "the rank must be at least 1");
    assert_eq!(a.rank(), n, "asymptotic data of the wrong rank");
    let m = a.m();
    let interior = a.is_strictly_interior(1e-9);

    let mut params = grid_params.clone();
    if !interior {
        params.eps = params.eps.min(1e-4);
    }
    let grid = params.build(n)?;

    let solve_on = |grid: &RadialGrid| -> Result<Vec<f64>, TodaError> {
        if interior {
            let mut u = initial_guess(n, grid, &m);
            newton(n, grid, &m, &mut u, opts)?;
            Ok(u)
        } else {
            // continuation ramp λ: m_λ = λ m stays strictly admissible
            // for λ < 1 because the admissible polytope is convex and
            // contains 0 in its interior
            let steps = opts.continuation_steps.max(2);
            let mut lambda = 0.5;
            let mut m_ramp: Vec<f64> = m.iter().map(|x| x * lambda).collect();
            let mut u = initial_guess(n, grid, &m_ramp);
            newton(n, grid, &m_ramp, &mut u, opts)?;
            for step in 1..=steps {
                lambda = 0.5 + 0.5 * step as f64 / steps as f64;
                m_ramp = m.iter().map(|x| x * lambda).collect();
                newton(n, grid, &m_ramp, &mut u, opts)?;
            }
            Ok(u)
        }
    };

    let u = solve_on(&grid)?;

    if let Some(gtol) = opts.grid_check {
        let coarse_params = GridParams {
            nodes: (params.nodes / 2).max(16),
            ..params.clone()
        };
        let coarse_grid = coarse_params.build(n)?;
        let u_coarse = solve_on(&coarse_grid)?;
        let deviation = two_grid_deviation(&grid, &u, &coarse_grid, &u_coarse, (n + 1) / 2);
        let threshold = 10.0 * gtol;
        if deviation > threshold {
            return Err(TodaError::GridTooCoarse {
                deviation,
                threshold,
            });
        }
    }

    RadialSolution::from_reduced(n, grid, &u, m)
}

fn initial_guess(n: usize, grid: &RadialGrid, m: &[f64]) -> Vec<f64> {
    // -m_i log(r) e^{-r²}: right log singularity, switched off smoothly
    let p = (n + 1) / 2;
    let mut u = vec![0.0; p * grid.len()];
    for (j, &r) in grid.nodes().iter().enumerate() {
        let damp = (-r * r).exp();
        for i in 0..p {
            u[j * p + i] = -m[i] * r.ln() * damp;
        }
    }
    u
}

fn newton(
    n: usize,
    grid: &RadialGrid,
    m: &[f64],
    u: &mut Vec<f64>,
    opts: &SolveOptions,
) -> Result<(), TodaError> {
    let system = System::new(n, grid, m);
    let p = system.p;
    let mut residual = system.assemble(u, None);
    let mut norm = System::max_norm(&residual);
    for iteration in 0..opts.max_iterations {
        if norm < opts.tol {
            return Ok(());
        }
        let mut blocks = Blocks::zeros(grid.len(), p);
        residual = system.assemble(u, Some(&mut blocks));
        let neg_rhs: Vec<f64> = residual.iter().map(|x| -x).collect();
        let delta = blocks.solve(&neg_rhs, p).map_err(|_| TodaError::NoConvergence {
            iterations: iteration,
            residual: norm,
        })?;
        // damped line search on the scaled residual norm
        let mut step = 1.0;
        loop {
            let trial: Vec<f64> = u
                .iter()
                .zip(&delta)
                .map(|(x, d)| x + step * d)
                .collect();
            let trial_residual = system.assemble(&trial, None);
            let trial_norm = System::max_norm(&trial_residual);
            if trial_norm < norm || trial_norm < opts.tol {
                *u = trial;
                norm = trial_norm;
                break;
            }
            step *= 0.5;
            if step < 1.0 / 1024.0 {
                return Err(TodaError::NoConvergence {
                    iterations: iteration,
                    residual: norm,
                });
            }
        }
    }
    if norm < opts.tol {
        Ok(())
    } else {
        Err(TodaError::NoConvergence {
            iterations: opts.max_iterations,
            residual: norm,
        })
    }
}

fn two_grid_deviation(
    fine_grid: &RadialGrid,
    fine: &[f64],
    coarse_grid: &RadialGrid,
    coarse: &[f64],
    p: usize,
) -> f64 {
    let rf = fine_grid.nodes();
    let mut worst: f64 = 0.0;
    for (j, &r) in coarse_grid.nodes().iter().enumerate() {
        // bracket r in the fine grid
        let pos = rf.partition_point(|&x| x < r).clamp(1, rf.len() - 1);
        let (r0, r1) = (rf[pos - 1], rf[pos]);
        let t = ((r - r0) / (r1 - r0)).clamp(0.0, 1.0);
        for i in 0..p {
            let interp = (1.0 - t) * fine[(pos - 1) * p + i] + t * fine[pos * p + i];
            worst = worst.max((interp - coarse[j * p + i]).abs());
        }
    }
    worst
}

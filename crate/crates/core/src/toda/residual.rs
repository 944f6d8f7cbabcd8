use super::RadialGrid;

/// Weights `(a, b, c)` of the second-order three-point stencil for the
/// radial Laplacian `w'' + w'/r` on a possibly nonuniform grid:
/// `a w_{j-1} + b w_j + c w_{j+1}`.
pub(crate) fn lap_weights(r_prev: f64, r: f64, r_next: f64) -> (f64, f64, f64) {
    let hl = r - r_prev;
    let hr = r_next - r;
    let denom = hl + hr;
    // second derivative
    let a2 = 2.0 / (hl * denom);
    let b2 = -2.0 / (hl * hr);
    let c2 = 2.0 / (hr * denom);
    // first derivative
    let a1 = -hr / (hl * denom);
    let b1 = (hr - hl) / (hl * hr);
    let c1 = hl / (hr * denom);
    (a2 + a1 / r, b2 + b1 / r, c2 + c1 / r)
}

/// Pointwise residual of the radial tt*-Toda system
///
/// ```text
/// residual_i(r) = ½ (w_i'' + w_i'/r) + e^{2(w_{i+1}-w_i)} - e^{2(w_i-w_{i-1})}
/// ```
///
/// with indices cyclic (`w_{n+1} = w_0`, `w_{-1} = w_n`) and the radial
/// Laplacian coming from `∂_t ∂_t̄ = ¼ (d²/dr² + (1/r) d/dr)` on radial
/// functions. Derivatives are taken by second-order central differences;
/// the returned vectors cover the `M-2` interior nodes, component by
/// component.
pub fn radial_residual(n: usize, grid: &RadialGrid, w: &[Vec<f64>]) -> Vec<Vec<f64>> {
    assert_eq!(w.len(), n + 1, "one value row per component");
    for row in w {
        assert_eq!(row.len(), grid.len(), "one value per grid node");
    }
    let r = grid.nodes();
    let m = grid.len();
    let mut out = vec![Vec::with_capacity(m - 2); n + 1];
    for j in 1..m - 1 {
        let (a, b, c) = lap_weights(r[j - 1], r[j], r[j + 1]);
        for i in 0..=n {
            let up = (i + 1) % (n + 1);
            let down = (i + n) % (n + 1);
            let lap = a * w[i][j - 1] + b * w[i][j] + c * w[i][j + 1];
            let e_plus = (2.0 * (w[up][j] - w[i][j])).exp();
            let e_minus = (2.0 * (w[i][j] - w[down][j])).exp();
            out[i].push(0.5 * lap + e_plus - e_minus);
        }
    }
    out
}

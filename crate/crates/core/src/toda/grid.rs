use super::{decay_rate, TodaError};

/// Radial collocation grid `ε = r_0 < r_1 < … < r_{M-1} = R`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    nodes: Vec<f64>,
}

impl RadialGrid {
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self, TodaError> {
        if nodes.len() < 3 {
            return Err(TodaError::InvalidGrid(format!(
                "need at least 3 nodes, got {}",
                nodes.len()
            )));
        }
        if !nodes[0].is_finite() || nodes[0] <= 0.0 {
            return Err(TodaError::InvalidGrid(format!(
                "inner radius must be positive, got {}",
                nodes[0]
            )));
        }
        for w in nodes.windows(2) {
            if !w[1].is_finite() || w[1] <= w[0] {
                return Err(TodaError::InvalidGrid(format!(
                    "nodes must increase strictly ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        Ok(RadialGrid { nodes })
    }

    /// Geometric spacing on `[ε, 1]` and uniform spacing on `[1, R]`,
    /// splitting the node budget evenly; the geometric part resolves the
    /// logarithmic behaviour at the origin, the uniform part the
    /// exponential tail. Falls back to pure geometric spacing when the
    /// interval does not straddle 1.
    pub fn log_then_uniform(eps: f64, r_max: f64, count: usize) -> Result<Self, TodaError> {
        if !(eps.is_finite() && r_max.is_finite()) || eps <= 0.0 || r_max <= eps {
            return Err(TodaError::InvalidGrid(format!(
                "bad radial interval [{eps}, {r_max}]"
            )));
        }
        if count < 16 {
            return Err(TodaError::InvalidGrid(format!(
                "need at least 16 nodes, got {count}"
            )));
        }
        let nodes = if eps >= 1.0 || r_max <= 1.0 {
            geometric(eps, r_max, count)
        } else {
            let n_log = count / 2;
            let mut nodes = geometric(eps, 1.0, n_log);
            let n_uni = count - n_log;
            let h = (r_max - 1.0) / n_uni as f64;
            for j in 1..=n_uni {
                nodes.push(1.0 + h * j as f64);
            }
            nodes
        };
        RadialGrid::from_nodes(nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn inner(&self) -> f64 {
        self.nodes[0]
    }

    pub fn outer(&self) -> f64 {
        *self.nodes.last().unwrap()
    }
}

fn geometric(a: f64, b: f64, count: usize) -> Vec<f64> {
    let ratio = (b / a).ln() / (count - 1) as f64;
    let mut nodes: Vec<f64> = (0..count).map(|j| a * (ratio * j as f64).exp()).collect();
    // pin the endpoints against rounding
    nodes[0] = a;
    *nodes.last_mut().unwrap() = b;
    nodes
}

/// Parameters for building the default solver grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridParams {
    /// Inner radius; the boundary condition carries the `log` data here.
    pub eps: f64,
    /// Outer radius; defaults to `12/L_1`, far enough that the slowest
    /// tail `e^{-2 L_1 r}` decays below everything measurable.
    pub r_max: Option<f64>,
    /// Total node count.
    pub nodes: usize,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            eps: 1e-3,
            r_max: None,
            nodes: 2000,
        }
    }
}

impl GridParams {
    pub fn resolved_r_max(&self, n: usize) -> f64 {
        self.r_max.unwrap_or(12.0 / decay_rate(n, 1))
    }

    pub fn build(&self, n: usize) -> Result<RadialGrid, TodaError> {
        RadialGrid::log_then_uniform(self.eps, self.resolved_r_max(n), self.nodes)
    }
}

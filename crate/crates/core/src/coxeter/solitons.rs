use super::k_subsets;
use super::roots::Root;

/// A solitonic particle tunnelling between two vacua (weight vectors)
/// whose weights differ by a single root.
#[derive(Debug, Clone, PartialEq)]
pub struct Soliton {
    /// Indices into [`SolitonSpectrum::weights`].
    pub from: usize,
    pub to: usize,
    /// The connecting root `x_i - x_j`.
    pub root: Root,
    /// `2 sin(|i-j| π/(n+1))`.
    pub mass: f64,
    /// Mass class of the connecting root (its Coxeter orbit up to sign).
    pub class: usize,
}

/// The soliton content of the polytopic model for the fundamental
/// representation `∧^k` of `sl_{n+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolitonSpectrum {
    n: usize,
    rep: usize,
    weights: Vec<Vec<i64>>,
    solitons: Vec<Soliton>,
}

/// Weights of `∧^k` of the standard representation (sums of `k` distinct
/// `x_i`), together with all soliton pairs: unordered weight pairs whose
/// difference is a root. The adjacency is found by an explicit
/// difference check, not by subset combinatorics.
pub fn soliton_spectrum(n: usize, k: usize) -> SolitonSpectrum {
    assert!(
        (1..=n).contains(&k),
        "fundamental representation index must lie in 1..=n"
    );
    let weights: Vec<Vec<i64>> = k_subsets(n + 1, k)
        .into_iter()
        .map(|subset| {
            let mut v = vec![0i64; n + 1];
            for idx in subset {
                v[idx] = 1;
            }
            v
        })
        .collect();
    let mut solitons = Vec::new();
    for a in 0..weights.len() {
        for b in a + 1..weights.len() {
            if let Some(root) = root_difference(&weights[a], &weights[b]) {
                let d = root.i.abs_diff(root.j);
                solitons.push(Soliton {
                    from: a,
                    to: b,
                    root,
                    mass: 2.0 * (d as f64 * std::f64::consts::PI / (n as f64 + 1.0)).sin(),
                    class: root.mass_class(n),
                });
            }
        }
    }
    SolitonSpectrum {
        n,
        rep: k,
        weights,
        solitons,
    }
}

/// `Some(x_i - x_j)` when `a - b` is exactly a root.
fn root_difference(a: &[i64], b: &[i64]) -> Option<Root> {
    let mut plus = None;
    let mut minus = None;
    for (idx, diff) in a.iter().zip(b).map(|(x, y)| x - y).enumerate() {
        match diff {
            0 => {}
            1 if plus.is_none() => plus = Some(idx),
            -1 if minus.is_none() => minus = Some(idx),
            _ => return None,
        }
    }
    match (plus, minus) {
        (Some(i), Some(j)) => Some(Root::new(i, j)),
        _ => None,
    }
}

impl SolitonSpectrum {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// The fundamental-representation index `k`.
    pub fn representation(&self) -> usize {
        self.rep
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn solitons(&self) -> &[Soliton] {
        &self.solitons
    }

    /// Number of solitons in each mass class `1..=⌊(n+1)/2⌋`.
    pub fn counts_by_class(&self) -> Vec<(usize, usize)> {
        let max_class = (self.n + 1) / 2;
        (1..=max_class)
            .map(|d| (d, self.solitons.iter().filter(|s| s.class == d).count()))
            .collect()
    }
}

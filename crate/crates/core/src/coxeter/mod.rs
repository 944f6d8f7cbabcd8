//! The root system of type `A_n`, its Coxeter element and plane, soliton
//! spectra of polytopic models, and exterior powers of matrices.
//!
//! Roots are the `n(n+1)` vectors `x_i - x_j` in the trace-zero
//! hyperplane of `R^{n+1}`; root and weight arithmetic is exact integer
//! arithmetic, with floating point entering only for projections and
//! eigenvalue computations.

mod plane;
mod roots;
mod solitons;
mod wedge;

pub use plane::{coxeter_plane, CoxeterProjection, ProjectedRoot};
pub use roots::{coxeter_element, CoxeterElement, Root, RootSystemA};
pub use solitons::{soliton_spectrum, Soliton, SolitonSpectrum};
pub use wedge::wedge_matrix;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("the Coxeter plane is degenerate for rank {0} (needs n >= 2)")]
    DegeneratePlane(usize),
}

/// All `k`-element subsets of `{0, …, n_items-1}` in lexicographic
/// order.
pub(crate) fn k_subsets(n_items: usize, k: usize) -> Vec<Vec<usize>> {
    assert!(k <= n_items);
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still be advanced
        let mut i = k;
        while i > 0 && cur[i - 1] == i - 1 + n_items - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

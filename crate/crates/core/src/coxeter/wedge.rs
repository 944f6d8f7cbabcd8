use nalgebra::{ComplexField, DMatrix};

use super::k_subsets;

/// The exterior power `∧^k M`: the `C(m,k) × C(m,k)` matrix of `k×k`
/// minors of `M`, rows and columns indexed by `k`-subsets in
/// lexicographic order. Its eigenvalues are the `k`-fold products of the
/// eigenvalues of `M`.
pub fn wedge_matrix<T: ComplexField>(m: &DMatrix<T>, k: usize) -> DMatrix<T> {
    let size = m.nrows();
    assert_eq!(size, m.ncols(), "exterior powers act on square matrices");
    assert!(
        (1..=size).contains(&k),
        "wedge index must lie in 1..={size}"
    );
    let subsets = k_subsets(size, k);
    let dim = subsets.len();
    DMatrix::from_fn(dim, dim, |r, c| {
        let minor = DMatrix::from_fn(k, k, |a, b| m[(subsets[r][a], subsets[c][b])].clone());
        minor.determinant()
    })
}

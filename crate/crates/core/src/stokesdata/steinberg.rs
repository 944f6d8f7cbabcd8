use nalgebra::DMatrix;
use num_complex::Complex64;

use super::StokesParameters;

/// The Steinberg cross-section element `M^(0) = C(s_1, …, s_n)` of
/// `SL_{n+1}`, realized in companion form.
///
/// Sign convention: the characteristic polynomial is
///
/// ```text
/// λ^{n+1} - s_1 λ^n + s_2 λ^{n-1} - ⋯ + (-1)^n s_n λ + (-1)^{n+1}
/// ```
///
/// so the determinant is 1 and, for `s` coming from admissible
/// asymptotic data, the eigenvalues are the unit numbers
/// `exp(2πi(m_j + ρ_j)/(n+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteinbergMatrix {
    n: usize,
    mat: DMatrix<f64>,
}

/// Builds the companion-form cross-section from Stokes parameters.
pub fn steinberg_matrix(s: &StokesParameters) -> SteinbergMatrix {
    let n = s.rank();
    let size = n + 1;
    // monic coefficients c_j of λ^j
    let mut c = vec![0.0; size + 1];
    c[size] = 1.0;
    for i in 1..=n {
        c[size - i] = if i % 2 == 0 { s.get(i) } else { -s.get(i) };
    }
    c[0] = if size % 2 == 0 { 1.0 } else { -1.0 };
    let mat = DMatrix::from_fn(size, size, |r, col| {
        if col == size - 1 {
            -c[r]
        } else if r == col + 1 {
            1.0
        } else {
            0.0
        }
    });
    SteinbergMatrix { n, mat }
}

impl SteinbergMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn determinant(&self) -> f64 {
        self.mat.clone().lu().determinant()
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.mat
            .clone()
            .complex_eigenvalues()
            .iter()
            .map(|z| Complex64::new(z.re, z.im))
            .collect()
    }

    /// Monic characteristic polynomial coefficients `c_0, …, c_{n+1}`
    /// (ascending powers of `λ`), recomputed from the spectrum rather
    /// than read off the companion structure.
    pub fn char_poly(&self) -> Vec<f64> {
        let eig = self.eigenvalues();
        // expand Π (λ - μ) incrementally, coefficients ascending in λ
        let mut coeffs = vec![Complex64::ZERO; eig.len() + 1];
        coeffs[0] = Complex64::ONE;
        let mut degree = 0usize;
        for mu in &eig {
            degree += 1;
            for i in (1..=degree).rev() {
                let lower = coeffs[i - 1];
                coeffs[i] = coeffs[i] * (-mu) + lower;
            }
            coeffs[0] *= -mu;
        }
        coeffs.iter().map(|z| z.re).collect()
    }

    /// Reads `s_1, …, s_n` back from [`SteinbergMatrix::char_poly`],
    /// undoing the sign convention.
    pub fn stokes_round_trip(&self) -> Vec<f64> {
        let c = self.char_poly();
        let size = self.n + 1;
        (1..=self.n)
            .map(|i| {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                sign * c[size - i]
            })
            .collect()
    }
}

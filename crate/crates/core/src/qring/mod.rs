//! Small quantum cohomology of `CP^n` and its differential equation.
//!
//! The cohomology of `CP^n` is the truncated algebra on the degree-2
//! generator `b` with `b^{n+1} = 0`; the quantum product deforms this to
//! `b^{n+1} = q`. The corresponding quantum differential equation is
//! `(ħ∂)^{n+1} y = q y` with `∂ = q d/dq`, solved near `q = 0` by the
//! J-function. This module also carries the degree-3 hypersurface
//! operator, semiclassical symbols, and the gamma class `Γ(1+b)^{n+1}`.

mod gamma;
mod jfunction;
mod operator;
mod truncated;

pub use gamma::gamma_class;
pub use jfunction::JFunction;
pub use operator::{
    cpn_operator, cubic_hypersurface_operator, semiclassical_symbol, PolyQ, PolyQH, QDEOperator,
    SymbolPoly,
};
pub use truncated::TruncatedClass;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QRingError {
    #[error("hbar must be nonzero")]
    ZeroHbar,
    #[error("the J-function is evaluated away from the singular point q = 0")]
    ZeroQ,
}

/// The small quantum cohomology ring of `CP^n`: truncated-class
/// arithmetic with the extra reduction `b^{n+1} = q`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumRing {
    n: usize,
    q: Complex64,
}

impl QuantumRing {
    pub fn new(n: usize, q: Complex64) -> Self {
        QuantumRing { n, q }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    /// Quantum product: ordinary polynomial product followed by folding
    /// every overflow power through `b^{n+1} = q`. Setting `q = 0`
    /// recovers the truncated (cup) product.
    pub fn product(&self, a: &TruncatedClass, b: &TruncatedClass) -> TruncatedClass {
        assert_eq!(a.dim(), self.n);
        assert_eq!(b.dim(), self.n);
        let n = self.n;
        let mut full = vec![Complex64::ZERO; 2 * n + 1];
        for i in 0..=n {
            for j in 0..=n {
                full[i + j] += a.coeff(i) * b.coeff(j);
            }
        }
        // degrees n+1 .. 2n wrap exactly once
        let mut out = full[..=n].to_vec();
        for (r, c) in full[n + 1..].iter().enumerate() {
            out[r] += self.q * c;
        }
        TruncatedClass::from_coeffs(out)
    }

    /// `b^j` reduced through `b^{n+1} = q`.
    pub fn reduce_power(&self, j: usize) -> TruncatedClass {
        quantum_reduce(self.n, j, self.q)
    }
}

/// Reduces the monomial `b^j` in the quantum ring:
/// `b^j = q^{⌊j/(n+1)⌋} · b^{j mod (n+1)}`.
pub fn quantum_reduce(n: usize, j: usize, q: Complex64) -> TruncatedClass {
    let wraps = (j / (n + 1)) as u32;
    let rem = j % (n + 1);
    let mut out = TruncatedClass::zero(n);
    let mut coeffs = out.coeffs().to_vec();
    coeffs[rem] = q.powu(wraps);
    out = TruncatedClass::from_coeffs(coeffs);
    out
}

/// Matrix of quantum multiplication by `b` in the basis `1, b, …, b^n`:
/// ones on the subdiagonal and `q` in the top-right corner.
pub fn chiral_matrix(n: usize, q: Complex64) -> DMatrix<Complex64> {
    let size = n + 1;
    DMatrix::from_fn(size, size, |r, c| {
        if r == 0 && c == n {
            q
        } else if c + 1 == r {
            Complex64::ONE
        } else {
            Complex64::ZERO
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn reduce_first_wrap() {
        // b^3 = q at n = 2
        let got = quantum_reduce(2, 3, re(5.0));
        assert_eq!(got.coeff(0), re(5.0));
        assert_eq!(got.coeff(1), Complex64::ZERO);
        assert_eq!(got.coeff(2), Complex64::ZERO);
    }

    #[test]
    fn reduce_below_truncation() {
        let got = quantum_reduce(2, 2, re(7.0));
        assert_eq!(got, TruncatedClass::generator(2).pow(2));
    }

    #[test]
    fn reduce_repeated_wraps_matches_ring_multiplication() {
        // b^9 at n = 3: brute-force product of nine b's in the ring.
        let ring = QuantumRing::new(3, re(2.0));
        let b = TruncatedClass::generator(3);
        let mut acc = TruncatedClass::one(3);
        for _ in 0..9 {
            acc = ring.product(&acc, &b);
        }
        let reduced = quantum_reduce(3, 9, re(2.0));
        assert!(acc.approx_eq(&reduced, 1e-14));
        assert_eq!(reduced.coeff(1), re(4.0)); // q^2 b = 4 b
    }

    #[test]
    fn reduce_at_q_zero_is_classical() {
        for j in 0..12 {
            let got = quantum_reduce(2, j, Complex64::ZERO);
            if j > 2 {
                assert_eq!(got, TruncatedClass::zero(2), "b^{j} should vanish classically");
            } else {
                assert_eq!(got, TruncatedClass::generator(2).pow(j as u32));
            }
        }
    }

    #[test]
    fn chiral_matrix_layout() {
        let q = re(3.0);
        let m = chiral_matrix(2, q);
        let expect = DMatrix::from_row_slice(
            3,
            3,
            &[
                Complex64::ZERO,
                Complex64::ZERO,
                q,
                Complex64::ONE,
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::ZERO,
            ],
        );
        assert_eq!(m, expect);
    }

    #[test]
    fn chiral_matrix_degenerate_dimension() {
        let m = chiral_matrix(0, re(4.0));
        assert_eq!(m.nrows(), 1);
        assert_eq!(m[(0, 0)], re(4.0));
    }

    #[test]
    fn chiral_characteristic_polynomial_is_power_minus_q() {
        // det(λI - C) = λ^{n+1} - q, cross-checked by LU determinants.
        for n in 0..6 {
            let q = Complex64::new(0.8, 0.4);
            let c = chiral_matrix(n, q);
            for sample in [
                Complex64::new(0.3, 0.9),
                Complex64::new(-1.1, 0.2),
                Complex64::new(2.0, -0.5),
            ] {
                let m = DMatrix::from_diagonal_element(n + 1, n + 1, sample) - &c;
                let det = m.lu().determinant();
                let expect = sample.powu(n as u32 + 1) - q;
                assert!((det - expect).norm() < 1e-10 * expect.norm().max(1.0));
            }
        }
    }

    proptest! {
        #[test]
        fn chiral_power_is_q_times_identity(n in 0usize..7, qre in -2.0f64..2.0, qim in -2.0f64..2.0) {
            let q = Complex64::new(qre, qim);
            let c = chiral_matrix(n, q);
            let mut acc = DMatrix::from_diagonal_element(n + 1, n + 1, Complex64::ONE);
            for _ in 0..=n {
                acc = &acc * &c;
            }
            let expect = DMatrix::from_diagonal_element(n + 1, n + 1, q);
            prop_assert!((acc - expect).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-12);
        }

        #[test]
        fn quantum_product_at_q_zero_truncates(j in 0usize..16, n in 1usize..6) {
            let classical = quantum_reduce(n, j, Complex64::ZERO);
            if j > n {
                prop_assert_eq!(classical, TruncatedClass::zero(n));
            } else {
                prop_assert_eq!(classical, TruncatedClass::generator(n).pow(j as u32));
            }
        }
    }
}

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Element of the truncated polynomial algebra `C[b] / (b^{n+1})` on the
/// degree-2 generator `b`.
///
/// A value stores the `n+1` complex coefficients of `Σ_j c_j b^j`; every
/// product discards powers above `b^n`. For `CP^n` this is the cohomology
/// vector space with basis `1, b, b^2, …, b^n`, and it is where the
/// J-function components and the gamma class live.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedClass {
    coeffs: Vec<Complex64>,
}

impl TruncatedClass {
    /// The zero class in the rank-`n` algebra.
    pub fn zero(n: usize) -> Self {
        TruncatedClass {
            coeffs: vec![Complex64::ZERO; n + 1],
        }
    }

    /// The multiplicative identity `(1, 0, …, 0)`.
    pub fn one(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = Complex64::ONE;
        c
    }

    /// The generator `b` (zero when `n = 0`, where `b` truncates away).
    pub fn generator(n: usize) -> Self {
        let mut c = Self::zero(n);
        if n >= 1 {
            c.coeffs[1] = Complex64::ONE;
        }
        c
    }

    /// Builds a class from explicit coefficients `c_0, …, c_n`.
    ///
    /// Panics on an empty list; the algebra always contains the constants.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated class needs c_0");
        TruncatedClass { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Truncation degree `n`.
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `b^j` (zero above the truncation degree).
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Max modulus of the coefficients. This is the norm used by all
    /// residual checks in this crate.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        TruncatedClass {
            coeffs: self.coeffs.iter().map(|c| c * z).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, when the constant term is nonzero.
    ///
    /// Writes the class as `c_0 (1 + u)` with `u` nilpotent and expands
    /// the finite Neumann series `Σ_{m=0}^{n} (-u)^m / c_0`.
    pub fn inv(&self) -> Option<Self> {
        let c0 = self.coeffs[0];
        if c0 == Complex64::ZERO {
            return None;
        }
        let n = self.dim();
        let mut u = self.scale(1.0 / c0);
        u.coeffs[0] = Complex64::ZERO;
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        for _ in 0..n {
            term = (&term * &u).scale(Complex64::new(-1.0, 0.0));
            acc = &acc + &term;
        }
        Some(acc.scale(1.0 / c0))
    }

    /// Exponential `exp(c_0) · Σ_{m=0}^{n} u^m / m!` with `u` the
    /// nilpotent part.
    pub fn exp(&self) -> Self {
        let n = self.dim();
        let mut u = self.clone();
        u.coeffs[0] = Complex64::ZERO;
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        for m in 1..=n {
            term = (&term * &u).scale(Complex64::new(1.0 / m as f64, 0.0));
            acc = &acc + &term;
        }
        acc.scale(self.coeffs[0].exp())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && (self - other).norm() <= tol
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "truncated classes live in algebras of different rank"
        );
    }
}

impl Add for &TruncatedClass {
    type Output = TruncatedClass;
    fn add(self, rhs: &TruncatedClass) -> TruncatedClass {
        self.assert_same_dim(rhs);
        TruncatedClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedClass {
    type Output = TruncatedClass;
    fn sub(self, rhs: &TruncatedClass) -> TruncatedClass {
        self.assert_same_dim(rhs);
        TruncatedClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &TruncatedClass {
    type Output = TruncatedClass;
    fn neg(self) -> TruncatedClass {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &TruncatedClass {
    type Output = TruncatedClass;
    fn mul(self, rhs: &TruncatedClass) -> TruncatedClass {
        self.assert_same_dim(rhs);
        let n = self.dim();
        let mut out = TruncatedClass::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == Complex64::ZERO {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn generator_truncates() {
        let b = TruncatedClass::generator(2);
        assert_eq!(b.pow(2).coeff(2), Complex64::ONE);
        assert_eq!(b.pow(3), TruncatedClass::zero(2));
    }

    #[test]
    fn identity_is_neutral() {
        let one = TruncatedClass::one(3);
        let x = TruncatedClass::from_real(&[1.5, -0.25, 0.0, 2.0]);
        assert_eq!(&one * &x, x);
    }

    #[test]
    fn inverse_of_shifted_generator() {
        // (b + 2)^-1 (b + 2) = 1
        let n = 4;
        let x = &TruncatedClass::generator(n) + &TruncatedClass::one(n).scale(c(2.0, 0.0));
        let inv = x.inv().unwrap();
        assert!((&inv * &x).approx_eq(&TruncatedClass::one(n), 1e-14));
    }

    #[test]
    fn constant_term_zero_is_not_invertible() {
        assert!(TruncatedClass::generator(3).inv().is_none());
    }

    #[test]
    fn exp_of_nilpotent_matches_series() {
        // exp(t b) = Σ t^m b^m / m!
        let n = 3;
        let t = c(0.7, -0.3);
        let e = TruncatedClass::generator(n).scale(t).exp();
        for m in 0..=n {
            let mut fact = 1.0;
            for i in 1..=m {
                fact *= i as f64;
            }
            assert!((e.coeff(m) - t.powu(m as u32) / fact).norm() < 1e-14);
        }
    }

    fn arb_class(n: usize) -> impl Strategy<Value = TruncatedClass> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n + 1).prop_map(|v| {
            TruncatedClass::from_coeffs(v.into_iter().map(|(re, im)| c(re, im)).collect())
        })
    }

    proptest! {
        #[test]
        fn multiplication_commutes_and_associates(
            n in 0usize..6,
            seed in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 21),
        ) {
            let take = |offset: usize| {
                TruncatedClass::from_coeffs(
                    seed[offset..offset + n + 1]
                        .iter()
                        .map(|&(re, im)| c(re, im))
                        .collect(),
                )
            };
            let (a, b, x) = (take(0), take(7), take(14));
            prop_assert!((&(&a * &b) - &(&b * &a)).norm() < 1e-12);
            prop_assert!((&(&(&a * &b) * &x) - &(&a * &(&b * &x))).norm() < 1e-12);
        }

        #[test]
        fn inverse_round_trips(n in 0usize..6, cls in arb_class(5)) {
            let mut coeffs = cls.coeffs()[..(n + 1).min(cls.coeffs().len())].to_vec();
            coeffs.resize(n + 1, Complex64::ZERO);
            coeffs[0] += c(3.0, 0.0); // keep the constant term away from 0
            let x = TruncatedClass::from_coeffs(coeffs);
            let inv = x.inv().unwrap();
            prop_assert!((&inv * &x).approx_eq(&TruncatedClass::one(n), 1e-12));
        }
    }
}

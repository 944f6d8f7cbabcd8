use num_complex::Complex64;

use super::truncated::TruncatedClass;
use super::QRingError;

/// Givental's J-function for `CP^n`, truncated at series order `K`:
///
/// ```text
/// J(q) = q^{b/ħ} Σ_{k=0}^{K} q^k / [(b+ħ)(b+2ħ)⋯(b+kħ)]^{n+1}
/// ```
///
/// computed in [`TruncatedClass`] arithmetic, where `q^{b/ħ}` means
/// `exp((log q / ħ) b)` on the chosen branch of the logarithm and each
/// factor `(b+jħ)^{-1}` is the finite nilpotent series
/// `(1/(jħ)) Σ_{m=0}^{n} (-b/(jħ))^m`. The coefficients of the result
/// are the Frobenius solutions `y^[0], …, y^[n]` of the quantum
/// differential equation `(ħ∂)^{n+1} y = q y`.
#[derive(Debug, Clone, PartialEq)]
pub struct JFunction {
    n: usize,
    hbar: Complex64,
    truncation: usize,
    branch: i32,
}

impl JFunction {
    pub const DEFAULT_TRUNCATION: usize = 25;

    /// Creates the J-function of `CP^n` with the principal branch of
    /// `log q` shifted by `2πi · branch`. Rejects `ħ = 0`.
    pub fn new(n: usize, hbar: Complex64, truncation: usize, branch: i32) -> Result<Self, QRingError> {
        if hbar == Complex64::ZERO {
            return Err(QRingError::ZeroHbar);
        }
        Ok(JFunction {
            n,
            hbar,
            truncation,
            branch,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn hbar(&self) -> Complex64 {
        self.hbar
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn branch(&self) -> i32 {
        self.branch
    }

    fn log_q(&self, q: Complex64) -> Complex64 {
        q.ln() + Complex64::new(0.0, std::f64::consts::TAU * self.branch as f64)
    }

    /// `q^{b/ħ} = exp((log q / ħ) b)` as a truncated class.
    fn prefactor(&self, q: Complex64) -> TruncatedClass {
        TruncatedClass::generator(self.n)
            .scale(self.log_q(q) / self.hbar)
            .exp()
    }

    /// Cumulative factors `c_k = Π_{j=1}^{k} (b + jħ)^{-(n+1)}` for
    /// `k = 0, …, K`.
    fn cumulative_factors(&self) -> Vec<TruncatedClass> {
        let n = self.n;
        let mut factors = Vec::with_capacity(self.truncation + 1);
        let mut acc = TruncatedClass::one(n);
        factors.push(acc.clone());
        for k in 1..=self.truncation {
            let shift = TruncatedClass::one(n).scale(self.hbar * k as f64);
            let linear = &TruncatedClass::generator(n) + &shift;
            let inv = linear
                .inv()
                .expect("b + kħ has nonzero constant term for ħ ≠ 0");
            acc = &acc * &inv.pow(n as u32 + 1);
            factors.push(acc.clone());
        }
        factors
    }

    /// Evaluates the truncated series at `q ≠ 0`.
    ///
    /// On the principal branch the `b^0` component tends to 1 as
    /// `q → 0`.
    pub fn evaluate(&self, q: Complex64) -> Result<TruncatedClass, QRingError> {
        if q == Complex64::ZERO {
            return Err(QRingError::ZeroQ);
        }
        let mut sum = TruncatedClass::zero(self.n);
        let mut q_pow = Complex64::ONE;
        for c_k in self.cumulative_factors() {
            sum = &sum + &c_k.scale(q_pow);
            q_pow *= q;
        }
        Ok(&self.prefactor(q) * &sum)
    }

    /// Norm of `(ħ∂)^{n+1} J - q J` at `q`, with `ħ∂` applied
    /// analytically term by term: on the monomial `q^{k + b/ħ}` it acts
    /// as multiplication by `kħ + b`.
    ///
    /// For the series truncated at order `K` everything telescopes except
    /// a single boundary term, so the residual is
    /// `‖q^{K+1} q^{b/ħ} Π_{j=1}^{K}(b+jħ)^{-(n+1)}‖`: it is bounded by
    /// `|q|^{K+1} / (K! |ħ|^K)^{n+1}` times a polynomial factor
    /// `(n+1)! (1 + |log q / ħ|)^n Σ_m H_K^m`, and in particular decays
    /// factorially in `K` at fixed `q`. The residual is nevertheless
    /// assembled from the full sums here, so it also witnesses rounding.
    pub fn qde_residual(&self, q: Complex64) -> Result<f64, QRingError> {
        if q == Complex64::ZERO {
            return Err(QRingError::ZeroQ);
        }
        let n = self.n;
        let b = TruncatedClass::generator(n);
        let mut applied = TruncatedClass::zero(n);
        let mut sum = TruncatedClass::zero(n);
        let mut q_pow = Complex64::ONE;
        for (k, c_k) in self.cumulative_factors().into_iter().enumerate() {
            let shift = &b + &TruncatedClass::one(n).scale(self.hbar * k as f64);
            applied = &applied + &(&shift.pow(n as u32 + 1) * &c_k).scale(q_pow);
            sum = &sum + &c_k.scale(q_pow);
            q_pow *= q;
        }
        let prefactor = self.prefactor(q);
        let lhs = &prefactor * &applied;
        let rhs = (&prefactor * &sum).scale(q);
        Ok((&lhs - &rhs).norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Rat = Ratio<i128>;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn rat(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    /// Independent symbolic oracle: exact rational arithmetic in the
    /// nilpotent algebra `Q[b]/(b^{n+1})`, separate from the `Complex64`
    /// production path.
    #[derive(Clone, Debug, PartialEq)]
    struct RatPoly(Vec<Rat>);

    impl RatPoly {
        fn one(n: usize) -> Self {
            let mut v = vec![rat(0, 1); n + 1];
            v[0] = rat(1, 1);
            RatPoly(v)
        }
        fn mul(&self, other: &Self) -> Self {
            let n = self.0.len() - 1;
            let mut out = vec![rat(0, 1); n + 1];
            for i in 0..=n {
                for j in 0..=n - i {
                    out[i + j] += self.0[i] * other.0[j];
                }
            }
            RatPoly(out)
        }
        /// Inverse of `b + j` expanded as `(1/j) Σ (-b/j)^m`.
        fn inv_b_plus(j: i128, n: usize) -> Self {
            let mut v = vec![rat(0, 1); n + 1];
            for (m, coeff) in v.iter_mut().enumerate() {
                let sign = if m % 2 == 0 { 1 } else { -1 };
                *coeff = rat(sign, j.pow(m as u32 + 1));
            }
            RatPoly(v)
        }
    }

    /// J at ħ = 1, q = 1, principal branch, computed exactly.
    fn rational_j(n: usize, big_k: usize) -> Vec<Rat> {
        let mut c_k = RatPoly::one(n);
        let mut sum = c_k.0.clone();
        for k in 1..=big_k {
            let single = RatPoly::inv_b_plus(k as i128, n);
            let mut factor = single.clone();
            for _ in 0..n {
                factor = factor.mul(&single);
            }
            c_k = c_k.mul(&factor);
            for (s, c) in sum.iter_mut().zip(&c_k.0) {
                *s += c;
            }
        }
        sum // prefactor is 1 at q = 1 on the principal branch
    }

    #[test]
    fn k_zero_at_q_one_is_identity() {
        let j = JFunction::new(1, re(1.0), 0, 0).unwrap();
        let val = j.evaluate(re(1.0)).unwrap();
        assert!((val.coeff(0) - re(1.0)).norm() < 1e-15);
        assert!(val.coeff(1).norm() < 1e-15);
    }

    #[test]
    fn low_order_expansion_matches_rational_oracle() {
        // n = 1, ħ = 1, K = 2, q = 1: the oracle gives (9/4, -11/4).
        let oracle = rational_j(1, 2);
        assert_eq!(oracle[0], rat(9, 4));
        assert_eq!(oracle[1], rat(-11, 4));

        let j = JFunction::new(1, re(1.0), 2, 0).unwrap();
        let val = j.evaluate(re(1.0)).unwrap();
        assert!((val.coeff(0) - re(2.25)).norm() < 1e-14);
        assert!((val.coeff(1) - re(-2.75)).norm() < 1e-14);
    }

    #[test]
    fn rational_oracle_cross_checks_production_path() {
        for n in 1..=3 {
            let oracle = rational_j(n, 6);
            let j = JFunction::new(n, re(1.0), 6, 0).unwrap();
            let val = j.evaluate(re(1.0)).unwrap();
            for i in 0..=n {
                let expect = *oracle[i].numer() as f64 / *oracle[i].denom() as f64;
                assert!(
                    (val.coeff(i) - re(expect)).norm() < 1e-12,
                    "component {i} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn constant_component_tends_to_one_near_zero() {
        let j = JFunction::new(2, re(1.0), 10, 0).unwrap();
        let val = j.evaluate(re(1e-8)).unwrap();
        assert!((val.coeff(0) - re(1.0)).norm() < 1e-7);
    }

    #[test]
    fn branch_shift_multiplies_by_exponential() {
        let q = Complex64::new(0.3, 0.4);
        let hbar = Complex64::new(1.0, 0.5);
        let j0 = JFunction::new(2, hbar, 8, 0).unwrap();
        let j1 = JFunction::new(2, hbar, 8, 1).unwrap();
        let twist = TruncatedClass::generator(2)
            .scale(Complex64::new(0.0, std::f64::consts::TAU) / hbar)
            .exp();
        let expect = &twist * &j0.evaluate(q).unwrap();
        assert!(j1.evaluate(q).unwrap().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn residual_is_tiny_at_default_truncation() {
        let j25 = JFunction::new(1, re(1.0), 25, 0).unwrap();
        let r25 = j25.qde_residual(re(1.0)).unwrap();
        assert!(r25 < 1e-10, "K = 25 residual {r25:e}");
        // at K = 25 the analytic tail is already below the f64 rounding
        // floor of the assembled sums; a K = 50 run stays there too
        let j50 = JFunction::new(1, re(1.0), 50, 0).unwrap();
        let r50 = j50.qde_residual(re(1.0)).unwrap();
        assert!(r50 < 1e-10, "K = 50 residual {r50:e}");
    }

    #[test]
    fn residual_vanishes_with_q_at_truncation_zero() {
        let j = JFunction::new(2, re(2.0), 0, 0).unwrap();
        let r3 = j.qde_residual(re(1e-3)).unwrap();
        let r6 = j.qde_residual(re(1e-6)).unwrap();
        assert!(r6 < 1e-4);
        assert!(r6 < 1e-2 * r3, "residual must vanish in the q → 0 limit");
    }

    #[test]
    fn residual_decays_factorially_in_truncation() {
        for n in [1usize, 2] {
            for theta in [0.0, 1.2, 2.9] {
                let q = Complex64::from_polar(1.0, theta);
                let r5 = JFunction::new(n, re(1.0), 5, 0).unwrap().qde_residual(q).unwrap();
                let r10 = JFunction::new(n, re(1.0), 10, 0).unwrap().qde_residual(q).unwrap();
                assert!(r10 < 1e-3 * r5, "n = {n}, θ = {theta}: {r10:e} vs {r5:e}");
            }
        }
    }

    /// With `y = u`, `q = x²`, `ħ = 2`, `n = 1` the operator
    /// `(ħ∂)² - q` equals `x²(u'' + u'/x - u)`, the 1857 Stokes
    /// equation scaled by `x²`. Checked as an operator identity on
    /// sampled functions, with `∂ = d/d(log q)` taken by central
    /// differences.
    #[test]
    fn n_one_operator_is_stokes_equation() {
        let alpha = 0.37;
        let u = |x: f64| (alpha * x).exp();
        let du = |x: f64| alpha * (alpha * x).exp();
        let ddu = |x: f64| alpha * alpha * (alpha * x).exp();
        let y = |q: f64| u(q.sqrt());

        let h = 1e-4; // step in log q
        for x in [0.5f64, 1.0, 1.7, 2.4] {
            let q = x * x;
            let lq = q.ln();
            // (2 d/dlog q)^2 y = 4 y''(log q)
            let second = (y((lq + h).exp()) - 2.0 * y(q) + y((lq - h).exp())) / (h * h);
            let lhs = 4.0 * second - q * y(q);
            let rhs = x * x * (ddu(x) + du(x) / x - u(x));
            assert!(
                (lhs - rhs).abs() < 1e-5 * rhs.abs().max(1.0),
                "x = {x}: {lhs} vs {rhs}"
            );
        }
    }
}

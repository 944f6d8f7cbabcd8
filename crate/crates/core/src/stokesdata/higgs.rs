use num_complex::Complex64;
use num_rational::Rational64;

use super::{AsymptoticData, ConstraintKind, StokesDataError};

/// Higgs (chiral) exponents `(k_0, …, k_n)` of a global tt*-Toda
/// solution at normalization `N`: the entries of the holomorphic chiral
/// matrix are `q^{k_i}`, with `k_i ≥ -1`, `n + 1 + Σ k_i = N`, and
/// `k_i = k_{n-i+1}` for `i = 1, …, n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiggsExponents {
    n: usize,
    big_n: i64,
    k: Vec<i64>,
}

impl HiggsExponents {
    pub fn new(n: usize, big_n: i64, k: Vec<i64>) -> Result<Self, StokesDataError> {
        if big_n <= 0 {
            return Err(StokesDataError::NonPositiveNormalization(big_n));
        }
        if k.len() != n + 1 {
            return Err(StokesDataError::LengthMismatch {
                expected: n + 1,
                got: k.len(),
            });
        }
        for (i, &ki) in k.iter().enumerate() {
            if ki < -1 {
                return Err(StokesDataError::ConstraintViolation {
                    index: i,
                    kind: ConstraintKind::ExponentRange,
                });
            }
        }
        if n as i64 + 1 + k.iter().sum::<i64>() != big_n {
            return Err(StokesDataError::ConstraintViolation {
                index: 0,
                kind: ConstraintKind::ExponentSum,
            });
        }
        for i in 1..=n {
            if k[i] != k[n - i + 1] {
                return Err(StokesDataError::ConstraintViolation {
                    index: i,
                    kind: ConstraintKind::ExponentPalindrome,
                });
            }
        }
        Ok(HiggsExponents { n, big_n, k })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The normalization `N = n + 1 + Σ k_i`.
    pub fn normalization(&self) -> i64 {
        self.big_n
    }

    pub fn exponents(&self) -> &[i64] {
        &self.k
    }
}

/// Exact solution of `m_{i-1} - m_i + 1 = ((n+1)/N)(k_i + 1)` for
/// `i = 1, …, n`, normalized by `Σ m_i = 0`.
///
/// For palindromic `k` (as in [`HiggsExponents`]) the trace-zero
/// solution is also antisymmetric, `m_i + m_{n-i} = 0`; the trace-zero
/// form is what stays meaningful for the non-palindromic fixed-point
/// data of the minimal-model module.
pub(crate) fn m_from_exponents_rational(n: usize, big_n: i64, k: &[i64]) -> Vec<Rational64> {
    debug_assert_eq!(k.len(), n + 1);
    let ratio = Rational64::new(n as i64 + 1, big_n);
    // differences d_i = m_{i-1} - m_i
    let diffs: Vec<Rational64> = (1..=n)
        .map(|i| ratio * Rational64::from_integer(k[i] + 1) - Rational64::from_integer(1))
        .collect();
    // Σ m_j = 0 pins m_0 = Σ_i (n+1-i) d_i / (n+1)
    let mut weighted = Rational64::from_integer(0);
    for (idx, d) in diffs.iter().enumerate() {
        let i = idx as i64 + 1;
        weighted += Rational64::from_integer(n as i64 + 1 - i) * d;
    }
    let m0 = weighted / Rational64::from_integer(n as i64 + 1);
    let mut m = Vec::with_capacity(n + 1);
    let mut cur = m0;
    m.push(cur);
    for d in &diffs {
        cur -= d;
        m.push(cur);
    }
    m
}

/// Asymptotic exponents `m_i` from Higgs data, through the difference
/// relation above. Checks the cyclic closure identity
/// `Σ_{i=0}^{n} (m_{i-1} - m_i + 1) = n + 1 = ((n+1)/N) Σ (k_i + 1)`
/// (indices mod `n+1`) before returning; a failure beyond 1e-12 cannot
/// happen for valid data and would indicate a rounding bug.
pub fn higgs_to_m(h: &HiggsExponents) -> Result<Vec<f64>, StokesDataError> {
    let exact = m_from_exponents_rational(h.n, h.big_n, &h.k);
    let m: Vec<f64> = exact
        .iter()
        .map(|r| *r.numer() as f64 / *r.denom() as f64)
        .collect();
    let len = m.len();
    let closure: f64 = (0..len)
        .map(|i| m[(i + len - 1) % len] - m[i] + 1.0)
        .sum();
    let defect = (closure - len as f64).abs();
    if defect > 1e-12 {
        return Err(StokesDataError::InconsistentClosure { defect });
    }
    Ok(m)
}

/// Which printed form of the exponent/asymptotic-data relation to use.
///
/// The two differ by a factor of 2 on the `γ` differences; the
/// `m`-difference relation is the canonical one here, and the inline
/// `γ`-relation is available behind this explicit flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GammaConvention {
    /// `m_{i-1} - m_i + 1 = ((n+1)/N)(k_i + 1)` with `γ = -2m`.
    #[default]
    MDifference,
    /// `γ_i - γ_{i-1} + 1 = ((n+1)/N)(k_i + 1)`.
    InlineGamma,
}

/// Asymptotic data from Higgs data under the chosen convention,
/// normalized antisymmetrically.
pub fn higgs_to_gamma(
    h: &HiggsExponents,
    convention: GammaConvention,
) -> Result<AsymptoticData, StokesDataError> {
    match convention {
        GammaConvention::MDifference => {
            let m = higgs_to_m(h)?;
            AsymptoticData::from_m(&m)
        }
        GammaConvention::InlineGamma => {
            let n = h.n;
            let ratio = (n as f64 + 1.0) / h.big_n as f64;
            let diffs: Vec<f64> = (1..=n)
                .map(|i| ratio * (h.k[i] + 1) as f64 - 1.0)
                .collect();
            let total: f64 = diffs.iter().sum();
            let mut gamma = Vec::with_capacity(n + 1);
            let mut cur = -0.5 * total;
            gamma.push(cur);
            for d in &diffs {
                cur += d;
                gamma.push(cur);
            }
            AsymptoticData::new(n, &gamma)
        }
    }
}

/// The variable change `t = ((n+1)/N) q^{N/(n+1)}` relating the chiral
/// variable `q` to the tt*-Toda variable `t`, on the chosen branch of
/// the power map.
pub fn t_from_q(h: &HiggsExponents, q: Complex64, branch: i32) -> Complex64 {
    assert!(q != Complex64::ZERO, "the power map needs q != 0");
    let n1 = h.n as f64 + 1.0;
    let exponent = h.big_n as f64 / n1;
    let log_q = q.ln() + Complex64::new(0.0, std::f64::consts::TAU * branch as f64);
    (log_q * exponent).exp() * (n1 / h.big_n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_catches_each_constraint() {
        assert!(HiggsExponents::new(1, 5, vec![1, 2]).is_ok());
        assert!(matches!(
            HiggsExponents::new(1, 5, vec![-2, 5]),
            Err(StokesDataError::ConstraintViolation {
                kind: ConstraintKind::ExponentRange,
                ..
            })
        ));
        assert!(matches!(
            HiggsExponents::new(1, 6, vec![1, 2]),
            Err(StokesDataError::ConstraintViolation {
                kind: ConstraintKind::ExponentSum,
                ..
            })
        ));
        assert!(matches!(
            HiggsExponents::new(2, 6, vec![1, 0, 2]),
            Err(StokesDataError::ConstraintViolation {
                kind: ConstraintKind::ExponentPalindrome,
                ..
            })
        ));
    }

    #[test]
    fn lee_yang_exponents() {
        // n = 1, N = 5, k = (1, 2): 2 m_0 + 1 = (2/5)(k_1 + 1) gives
        // m = (1/10, -1/10)
        let h = HiggsExponents::new(1, 5, vec![1, 2]).unwrap();
        let m = higgs_to_m(&h).unwrap();
        assert!((m[0] - 0.1).abs() < 1e-15);
        assert!((m[1] + 0.1).abs() < 1e-15);
    }

    #[test]
    fn minus_one_tail_gives_minus_rho() {
        // k_i = -1 for i = 1..n forces each difference to -1, so m = -ρ
        for (n, big_n) in [(2usize, 4i64), (3, 2), (4, 9)] {
            let mut k = vec![-1i64; n + 1];
            k[0] = big_n - 1; // n+1+Σk = N
            let h = HiggsExponents::new(n, big_n, k).unwrap();
            let m = higgs_to_m(&h).unwrap();
            for (j, &mj) in m.iter().enumerate() {
                let rho_j = n as f64 / 2.0 - j as f64;
                assert!((mj + rho_j).abs() < 1e-14, "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn closure_identity_holds_for_valid_data() {
        for (n, big_n, k) in [
            (1usize, 5i64, vec![1i64, 2]),
            (2, 7, vec![2, 1, 1]),
            (3, 4, vec![2, -1, 0, -1]),
        ] {
            let h = HiggsExponents::new(n, big_n, k).unwrap();
            assert!(higgs_to_m(&h).is_ok());
        }
    }

    #[test]
    fn m_route_yields_admissible_gamma() {
        // m-difference route stays admissible whenever k_i ≥ -1
        for (n, big_n, k) in [
            (2usize, 4i64, vec![1i64, 0, 0]),
            (3, 9, vec![1, 2, 0, 2]),
            (4, 5, vec![4, -1, -1, -1, -1]),
        ] {
            let h = HiggsExponents::new(n, big_n, k).unwrap();
            let a = higgs_to_gamma(&h, GammaConvention::MDifference).unwrap();
            assert_eq!(a.rank(), n);
        }
    }

    #[test]
    fn inline_convention_differs_by_factor_two_on_slopes() {
        let h = HiggsExponents::new(1, 5, vec![1, 2]).unwrap();
        let md = higgs_to_gamma(&h, GammaConvention::MDifference).unwrap();
        let inline = higgs_to_gamma(&h, GammaConvention::InlineGamma).unwrap();
        let slope_md = md.gamma()[1] - md.gamma()[0];
        let slope_inline = inline.gamma()[1] - inline.gamma()[0];
        // m-relation: slope = 2((2/5)(k_1+1) - 1); inline: half of that
        assert!((slope_md - 2.0 * (0.4 * 3.0 - 1.0)).abs() < 1e-14);
        assert!((2.0 * slope_inline - slope_md).abs() < 1e-14);
    }

    #[test]
    fn power_map_identity_cases() {
        // N = n+1 is the identity map
        let h = HiggsExponents::new(2, 3, vec![0, 0, 0]).unwrap();
        let q = Complex64::new(0.3, 1.1);
        assert!((t_from_q(&h, q, 0) - q).norm() < 1e-14);

        // n = 1, N = 2, q = 4: t = (2/2) 4^{2/2} = 4
        let h = HiggsExponents::new(1, 2, vec![0, 0]).unwrap();
        let t = t_from_q(&h, Complex64::new(4.0, 0.0), 0);
        assert!((t - Complex64::new(4.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn power_map_branch_continuation() {
        // t(q e^{2πi}) on the continued branch is t(q) e^{2πiN/(n+1)}
        let h = HiggsExponents::new(2, 5, vec![0, 1, 1]).unwrap();
        let q = Complex64::new(0.8, 0.2);
        let continued = t_from_q(&h, q, 1);
        let phase = Complex64::from_polar(
            1.0,
            std::f64::consts::TAU * h.normalization() as f64 / 3.0,
        );
        assert!((continued - t_from_q(&h, q, 0) * phase).norm() < 1e-12);
    }
}

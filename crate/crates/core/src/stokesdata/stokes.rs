use num_complex::Complex64;

use super::AsymptoticData;

/// The Stokes parameters `s_1, …, s_n` of a global tt*-Toda solution.
///
/// They are real and palindromic, `s_i = s_{n-i+1}`, because the unit
/// numbers they are symmetric functions of close up under complex
/// conjugation.
#[derive(Debug, Clone, PartialEq)]
pub struct StokesParameters {
    n: usize,
    s: Vec<f64>,
}

impl StokesParameters {
    /// Wraps raw values `s_1, …, s_n` (e.g. read back from a fit).
    pub fn from_values(s: Vec<f64>) -> Self {
        StokesParameters { n: s.len(), s }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.s
    }

    /// `s_k`, 1-based.
    pub fn get(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.n, "Stokes index out of range");
        self.s[k - 1]
    }
}

/// The unit numbers `x_j = exp((n - 2j - γ_j) πi/(n+1))`, which are both
/// the arguments of the symmetric functions below and the eigenvalues of
/// the Steinberg cross-section: `x_j = exp(2πi(m_j + ρ_j)/(n+1))`.
pub fn semisimple_spectrum(a: &AsymptoticData) -> Vec<Complex64> {
    let n = a.rank();
    a.gamma()
        .iter()
        .enumerate()
        .map(|(j, &g)| {
            let theta =
                (n as f64 - 2.0 * j as f64 - g) * std::f64::consts::PI / (n as f64 + 1.0);
            Complex64::from_polar(1.0, theta)
        })
        .collect()
}

/// Stokes parameters from asymptotic data: `s_i` is the `i`-th
/// elementary symmetric function of the `x_j` of
/// [`semisimple_spectrum`]. Imaginary parts are discarded after checking
/// they are below 1e-12.
pub fn stokes_from_gamma(a: &AsymptoticData) -> StokesParameters {
    let n = a.rank();
    let xs = semisimple_spectrum(a);
    // coefficients of Π_j (1 + x_j t); entry i is e_i
    let mut elem = vec![Complex64::ZERO; n + 2];
    elem[0] = Complex64::ONE;
    for (count, x) in xs.iter().enumerate() {
        for i in (1..=count + 1).rev() {
            let lower = elem[i - 1];
            elem[i] += x * lower;
        }
    }
    let s = elem[1..=n]
        .iter()
        .map(|e| {
            assert!(
                e.im.abs() < 1e-12,
                "Stokes parameters of admissible data are real (imag = {:e})",
                e.im
            );
            e.re
        })
        .collect();
    StokesParameters { n, s }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stokesdata::validate_gamma;
    use rand::Rng;
    use rand::SeedableRng;

    fn binomial(n: usize, k: usize) -> f64 {
        let mut acc = 1.0;
        for i in 0..k {
            acc = acc * (n - i) as f64 / (i + 1) as f64;
        }
        acc
    }

    #[test]
    fn projective_space_gives_binomials() {
        for n in 1..=10 {
            let s = stokes_from_gamma(&AsymptoticData::projective_space(n));
            for k in 1..=n {
                assert!(
                    (s.get(k) - binomial(n + 1, k)).abs() < 1e-9,
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn rank_one_zero_data() {
        // x_0 = i, x_1 = -i sum to zero
        let s = stokes_from_gamma(&validate_gamma(1, &[0.0, 0.0]).unwrap());
        assert!(s.get(1).abs() < 1e-15);
    }

    #[test]
    fn rank_one_matches_sine_closed_form() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let g0: f64 = rng.random_range(-1.0..1.0);
            let s = stokes_from_gamma(&validate_gamma(1, &[g0, -g0]).unwrap());
            let closed = 2.0 * (std::f64::consts::FRAC_PI_2 * g0).sin();
            assert!((s.get(1) - closed).abs() < 1e-12, "γ_0 = {g0}");
        }
    }

    #[test]
    fn real_and_palindromic_on_random_data() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.random_range(1..=8);
            let a = crate::stokesdata::testdata::random_admissible(&mut rng, n, 0.05);
            let s = stokes_from_gamma(&a);
            for k in 1..=n {
                assert!(
                    (s.get(k) - s.get(n + 1 - k)).abs() < 1e-10,
                    "palindrome fails at n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn spectrum_product_is_one() {
        // Σγ = 0 makes the determinant of the cross-section 1
        let a = validate_gamma(3, &[1.2, 0.3, -0.3, -1.2]).unwrap();
        let prod: Complex64 = semisimple_spectrum(&a).iter().product();
        assert!((prod - Complex64::ONE).norm() < 1e-14);
    }
}

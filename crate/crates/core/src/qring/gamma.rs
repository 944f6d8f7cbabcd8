use super::truncated::TruncatedClass;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// The gamma class of `CP^n`, i.e. `Γ(1+b)^{n+1}` expanded in the
/// truncated algebra.
///
/// The tangent bundle of `CP^n` is given the Euler-sequence convention
/// of `n+1` Chern roots all equal to `b`, and the expansion uses
///
/// ```text
/// log Γ(1+x) = -γ_E x + Σ_{k≥2} (-1)^k ζ(k) x^k / k
/// ```
///
/// truncated at degree `n`.
pub fn gamma_class(n: usize) -> TruncatedClass {
    let mut log_coeffs = vec![0.0; n + 1];
    if n >= 1 {
        log_coeffs[1] = -EULER_GAMMA * (n as f64 + 1.0);
    }
    for k in 2..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        log_coeffs[k] = (n as f64 + 1.0) * sign * zeta(k) / k as f64;
    }
    TruncatedClass::from_real(&log_coeffs).exp()
}

/// Riemann zeta at integer arguments `s ≥ 2`, by Euler-Maclaurin with
/// Bernoulli corrections through `B_8`; accurate to full f64 precision
/// for this range.
pub(crate) fn zeta(s: usize) -> f64 {
    assert!(s >= 2, "zeta is needed here only for s >= 2");
    let s = s as f64;
    const J: usize = 32;
    let jf = J as f64;
    let mut sum = 0.0;
    for j in 1..J {
        sum += (j as f64).powf(-s);
    }
    sum += jf.powf(-s) / 2.0;
    sum += jf.powf(1.0 - s) / (s - 1.0);
    // B_{2i}/(2i)! * s(s+1)...(s+2i-2) * J^{-s-2i+1}
    let bernoulli_over_fact = [
        1.0 / 12.0,        // B_2 / 2!
        -1.0 / 720.0,      // B_4 / 4!
        1.0 / 30240.0,     // B_6 / 6!
        -1.0 / 1_209_600.0, // B_8 / 8!
    ];
    let mut rising = s;
    let mut power = jf.powf(-s - 1.0);
    for (i, b) in bernoulli_over_fact.iter().enumerate() {
        sum += b * rising * power;
        rising *= (s + 2.0 * i as f64 + 1.0) * (s + 2.0 * i as f64 + 2.0);
        power /= jf * jf;
    }
    sum
}

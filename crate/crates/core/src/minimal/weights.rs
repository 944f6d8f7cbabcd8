use num_rational::Rational64;

/// Rational coordinates (in the `x`-basis of `R^{n+1}`) of the Weyl
/// vector `ρ = (n/2, n/2 - 1, …, -n/2)`.
pub fn rho(n: usize) -> Vec<Rational64> {
    (0..=n)
        .map(|j| Rational64::new(n as i64 - 2 * j as i64, 2))
        .collect()
}

/// Coordinates of the basic weight `ε_i` (1-based, `1 ≤ i ≤ n`), defined
/// by `⟨α_j, ε_i⟩ = δ_{ij}` for the simple roots `α_j = x_{j-1} - x_j`:
///
/// ```text
/// ε_i = x_0 + ⋯ + x_{i-1} - (i/(n+1)) (x_0 + ⋯ + x_n)
/// ```
pub fn basic_weight(n: usize, i: usize) -> Vec<Rational64> {
    assert!((1..=n).contains(&i), "basic weight index out of range");
    let shift = Rational64::new(i as i64, n as i64 + 1);
    (0..=n)
        .map(|j| {
            let indicator = Rational64::from_integer(i64::from(j < i));
            indicator - shift
        })
        .collect()
}

/// Euclidean inner product of rational coordinate vectors. On trace-zero
/// vectors this is the inner product of the weight space.
pub fn dot(a: &[Rational64], b: &[Rational64]) -> Rational64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq(a: &[Rational64]) -> Rational64 {
    dot(a, a)
}

/// `a + c·b` componentwise.
pub fn axpy(a: &[Rational64], c: Rational64, b: &[Rational64]) -> Vec<Rational64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn rho_norm_closed_form() {
        // |ρ|² = n(n+1)(n+2)/12
        for n in 1..=8 {
            let r = rho(n);
            let expect = rat(
                (n as i64) * (n as i64 + 1) * (n as i64 + 2),
                12,
            );
            assert_eq!(norm_sq(&r), expect, "rank {n}");
        }
    }

    #[test]
    fn basic_weights_are_dual_to_simple_roots() {
        for n in 1..=6usize {
            for i in 1..=n {
                let eps = basic_weight(n, i);
                assert_eq!(
                    eps.iter().sum::<Rational64>(),
                    rat(0, 1),
                    "ε_{i} must be trace-zero"
                );
                for j in 1..=n {
                    // α_j in coordinates
                    let mut alpha = vec![rat(0, 1); n + 1];
                    alpha[j - 1] = rat(1, 1);
                    alpha[j] = rat(-1, 1);
                    let expect = rat(i64::from(i == j), 1);
                    assert_eq!(dot(&alpha, &eps), expect, "⟨α_{j}, ε_{i}⟩ at rank {n}");
                }
            }
        }
    }

    #[test]
    fn first_basic_weight_of_sl2() {
        assert_eq!(basic_weight(1, 1), vec![rat(1, 2), rat(-1, 2)]);
    }

    #[test]
    fn rho_is_sum_of_basic_weights() {
        for n in 1..=5usize {
            let mut acc = vec![rat(0, 1); n + 1];
            for i in 1..=n {
                acc = axpy(&acc, rat(1, 1), &basic_weight(n, i));
            }
            assert_eq!(acc, rho(n));
        }
    }
}

//! Fixed-point (Higgs) data at coprime normalization and the
//! minimal-model quantities it determines: dominant weights, levels,
//! alcove identities, and the effective central charge computed two
//! ways. Everything here runs in exact rational arithmetic; floats
//! appear only at the reporting boundary.

pub mod weights;

use num_integer::Integer;
use num_rational::Rational64;
use thiserror::Error;

use crate::stokesdata::m_from_exponents_rational;
use weights::{axpy, basic_weight, norm_sq, rho};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinimalError {
    #[error("exponents must be nonnegative, got k[{index}] = {value}")]
    NegativeExponent { index: usize, value: i64 },
    #[error("normalization mismatch: n + 1 + sum(k) = {got}, expected N = {expected}")]
    NormalizationMismatch { expected: i64, got: i64 },
    #[error("N = {big_n} and k = {k_sum} are not coprime")]
    NotCoprime { big_n: i64, k_sum: i64 },
    #[error("the two central-charge routes disagree: {a} vs {b}")]
    IdentityViolation { a: Rational64, b: Rational64 },
}

/// A Higgs field fixed under the circle action: exponents
/// `(k_0, …, k_n)` with `k_i ≥ 0`, `n + 1 + Σ k_i = N`, and `N` coprime
/// to `k = Σ k_i`. Unlike the tt*-Toda exponents these need not be
/// palindromic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    n: usize,
    big_n: i64,
    k: Vec<i64>,
}

impl FixedPointData {
    pub fn new(n: usize, big_n: i64, k: Vec<i64>) -> Result<Self, MinimalError> {
        for (index, &value) in k.iter().enumerate() {
            if value < 0 {
                return Err(MinimalError::NegativeExponent { index, value });
            }
        }
        let got = n as i64 + 1 + k.iter().sum::<i64>();
        if got != big_n || k.len() != n + 1 {
            return Err(MinimalError::NormalizationMismatch {
                expected: big_n,
                got,
            });
        }
        let k_sum: i64 = k.iter().sum();
        if k_sum.gcd(&big_n) != 1 {
            return Err(MinimalError::NotCoprime { big_n, k_sum });
        }
        Ok(FixedPointData { n, big_n, k })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn normalization(&self) -> i64 {
        self.big_n
    }

    pub fn exponents(&self) -> &[i64] {
        &self.k
    }

    /// `k = Σ k_i`, the level of the associated representation.
    pub fn k_sum(&self) -> i64 {
        self.k.iter().sum()
    }
}

/// All fixed points at rank `n` and normalization `N`; empty when the
/// coprimality `gcd(Σk, N) = 1` fails (the total `Σk = N - n - 1` is the
/// same for every tuple).
pub fn enumerate_fixed_points(n: usize, big_n: i64) -> Vec<FixedPointData> {
    let total = big_n - (n as i64 + 1);
    if total < 1 || total.gcd(&big_n) != 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; n + 1];
    compositions(total, 0, &mut cur, &mut out, n, big_n);
    out
}

fn compositions(
    remaining: i64,
    pos: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<FixedPointData>,
    n: usize,
    big_n: i64,
) {
    if pos == n {
        cur[pos] = remaining;
        out.push(FixedPointData {
            n,
            big_n,
            k: cur.clone(),
        });
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        compositions(remaining - v, pos + 1, cur, out, n, big_n);
    }
}

/// A dominant weight `Λ = Σ_{i=1}^{n} c_i ε_i` together with the level
/// bound it is known to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    n: usize,
    coeffs: Vec<i64>,
    level_bound: i64,
}

impl DominantWeight {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The level `Σ c_i`.
    pub fn level(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn level_bound(&self) -> i64 {
        self.level_bound
    }

    /// Rational coordinates in the `x`-basis.
    pub fn coordinates(&self) -> Vec<Rational64> {
        weight_coordinates(self.n, &self.coeffs)
    }
}

fn weight_coordinates(n: usize, coeffs: &[i64]) -> Vec<Rational64> {
    let mut acc = vec![Rational64::from_integer(0); n + 1];
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            acc = axpy(&acc, Rational64::from_integer(c), &basic_weight(n, i + 1));
        }
    }
    acc
}

/// The dominant weight `Λ = Σ_{i=1}^{n} k_i ε_i` of a fixed point
/// (`k_0` does not enter), of level at most `k = Σ_{i=0}^{n} k_i`.
pub fn dominant_weight(f: &FixedPointData) -> DominantWeight {
    let coeffs: Vec<i64> = f.k[1..].to_vec();
    let level_bound = f.k_sum();
    debug_assert!(coeffs.iter().sum::<i64>() <= level_bound);
    DominantWeight {
        n: f.n,
        coeffs,
        level_bound,
    }
}

/// The effective central charge of a fixed point, exactly, by both
/// routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharge {
    /// `n - 12 ((n+1)/N) |Λ - (k/(n+1)) ρ|²`
    pub from_weight: Rational64,
    /// `n - 12 (N/(n+1)) |m|²`
    pub from_m: Rational64,
}

impl CentralCharge {
    pub fn value(&self) -> f64 {
        *self.from_m.numer() as f64 / *self.from_m.denom() as f64
    }
}

/// Computes the effective central charge both ways and checks the
/// underlying identity `Λ - (k/(n+1))ρ = (N/(n+1)) m` exactly; a
/// disagreement would mean a conversion bug, not bad input.
pub fn ceff(f: &FixedPointData) -> Result<CentralCharge, MinimalError> {
    let n = f.n;
    let n1 = Rational64::from_integer(n as i64 + 1);
    let big_n = Rational64::from_integer(f.big_n);
    let twelve = Rational64::from_integer(12);
    let rank = Rational64::from_integer(n as i64);

    let lambda = weight_coordinates(n, &f.k[1..]);
    let shift = Rational64::new(-f.k_sum(), n as i64 + 1);
    let displaced = axpy(&lambda, shift, &rho(n));
    let from_weight = rank - twelve * (n1 / big_n) * norm_sq(&displaced);

    let m = m_from_exponents_rational(n, f.big_n, &f.k);
    let from_m = rank - twelve * (big_n / n1) * norm_sq(&m);

    // the displaced weight must equal (N/(n+1)) m componentwise
    let ratio = big_n / n1;
    for (d, mi) in displaced.iter().zip(&m) {
        if *d != ratio * mi {
            return Err(MinimalError::IdentityViolation {
                a: from_weight,
                b: from_m,
            });
        }
    }
    if from_weight != from_m {
        return Err(MinimalError::IdentityViolation {
            a: from_weight,
            b: from_m,
        });
    }
    Ok(CentralCharge { from_weight, from_m })
}

/// Report of the alcove identity `P_l + ρ = P_+ ∩ (l+n+1)Å`: the two
/// sides as coefficient vectors over the basic weights, and their
/// symmetric difference (empty when the identity holds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveCheck {
    pub shifted_level_weights: Vec<Vec<i64>>,
    pub interior_weights: Vec<Vec<i64>>,
    pub only_shifted: Vec<Vec<i64>>,
    pub only_interior: Vec<Vec<i64>>,
}

impl AlcoveCheck {
    pub fn holds(&self) -> bool {
        self.only_shifted.is_empty() && self.only_interior.is_empty()
    }
}

/// Verifies the alcove identity by exhaustive enumeration.
///
/// The left side shifts the level-`≤ l` dominant weights by `ρ`. The
/// right side enumerates dominant weights and tests membership in the
/// open dilated alcove geometrically, through coordinates: strictly
/// decreasing entries and first-minus-last strictly below `l + n + 1`.
pub fn alcove_identity_check(n: usize, l: i64) -> AlcoveCheck {
    assert!(l >= 0);
    // P_l + ρ = { Σ (k_i + 1) ε_i : k_i ≥ 0, Σ k_i ≤ l }
    let mut shifted = Vec::new();
    let mut cur = vec![0i64; n];
    enumerate_bounded(&mut cur, 0, l, &mut |c| {
        shifted.push(c.iter().map(|x| x + 1).collect::<Vec<i64>>())
    });
    shifted.sort();

    // P_+ ∩ (l+n+1)Å, scanning a safe box of dominant weights
    let mut interior = Vec::new();
    let bound = l + n as i64 + 1;
    let mut cur = vec![0i64; n];
    enumerate_bounded(&mut cur, 0, bound * n as i64, &mut |c| {
        let coords = weight_coordinates(n, c);
        let strictly_decreasing = coords.windows(2).all(|w| w[0] > w[1]);
        let width = coords[0] - coords[n];
        if strictly_decreasing && width < Rational64::from_integer(bound) {
            interior.push(c.to_vec());
        }
    });
    interior.sort();

    let only_shifted: Vec<Vec<i64>> = shifted
        .iter()
        .filter(|w| interior.binary_search(w).is_err())
        .cloned()
        .collect();
    let only_interior: Vec<Vec<i64>> = interior
        .iter()
        .filter(|w| shifted.binary_search(w).is_err())
        .cloned()
        .collect();
    AlcoveCheck {
        shifted_level_weights: shifted,
        interior_weights: interior,
        only_shifted,
        only_interior,
    }
}

/// All nonnegative integer vectors with entry sum at most `budget`.
fn enumerate_bounded(cur: &mut Vec<i64>, pos: usize, budget: i64, visit: &mut impl FnMut(&[i64])) {
    if pos == cur.len() {
        visit(cur);
        return;
    }
    for v in 0..=budget {
        cur[pos] = v;
        enumerate_bounded(cur, pos + 1, budget - v, visit);
    }
}

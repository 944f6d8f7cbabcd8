use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

/// Polynomial in `q` and `ħ` with real coefficients, used for the
/// coefficients of quantum differential operators.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyQH {
    // (power of q, power of hbar) -> coefficient
    terms: BTreeMap<(u32, u32), f64>,
}

impl PolyQH {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::from_terms(&[(0, 0, c)])
    }

    /// Builds from `(q_power, hbar_power, coefficient)` triples.
    pub fn from_terms(terms: &[(u32, u32, f64)]) -> Self {
        let mut map = BTreeMap::new();
        for &(qp, hp, c) in terms {
            if c != 0.0 {
                *map.entry((qp, hp)).or_insert(0.0) += c;
            }
        }
        map.retain(|_, c| *c != 0.0);
        PolyQH { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a numeric `ħ`, leaving a polynomial in `q`.
    pub fn eval_hbar(&self, hbar: Complex64) -> PolyQ {
        let mut out: BTreeMap<u32, Complex64> = BTreeMap::new();
        for (&(qp, hp), &c) in &self.terms {
            *out.entry(qp).or_insert(Complex64::ZERO) += hbar.powu(hp) * c;
        }
        out.retain(|_, c| *c != Complex64::ZERO);
        PolyQ { terms: out }
    }

    /// The part surviving `ħ = 0`.
    fn at_hbar_zero(&self) -> BTreeMap<u32, f64> {
        self.terms
            .iter()
            .filter(|((_, hp), _)| *hp == 0)
            .map(|(&(qp, _), &c)| (qp, c))
            .collect()
    }

    pub fn eval(&self, q: Complex64, hbar: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&(qp, hp), &c)| q.powu(qp) * hbar.powu(hp) * c)
            .sum()
    }
}

/// Polynomial in `q` alone, with complex coefficients (an ħ-evaluated
/// operator coefficient).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyQ {
    terms: BTreeMap<u32, Complex64>,
}

impl PolyQ {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_power: u32) -> Complex64 {
        self.terms.get(&q_power).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn eval(&self, q: Complex64) -> Complex64 {
        self.terms.iter().map(|(&qp, &c)| q.powu(qp) * c).sum()
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&qp, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            if qp > 0 {
                write!(f, "*q^{qp}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in the generator `b` and the deformation parameter `q`:
/// the semiclassical symbol of a quantum differential operator.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SymbolPoly {
    // (power of b, power of q) -> coefficient
    terms: BTreeMap<(u32, u32), f64>,
}

impl SymbolPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `(b_power, q_power, coefficient)` triples.
    pub fn from_terms(terms: &[(u32, u32, f64)]) -> Self {
        let mut map = BTreeMap::new();
        for &(bp, qp, c) in terms {
            if c != 0.0 {
                *map.entry((bp, qp)).or_insert(0.0) += c;
            }
        }
        map.retain(|_, c| *c != 0.0);
        SymbolPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.terms.iter().map(|(&(bp, qp), &c)| (bp, qp, c))
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest b-power first reads like the displayed operators
        let mut first = true;
        for (&(bp, qp), &c) in self.terms.iter().rev() {
            let (sign, mag) = if c < 0.0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit_mag = mag == 1.0 && (bp > 0 || qp > 0);
            if !unit_mag {
                write!(f, "{mag}")?;
            }
            if qp > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "q")?;
                if qp > 1 {
                    write!(f, "^{qp}")?;
                }
                if bp > 0 {
                    write!(f, "*")?;
                }
            } else if bp > 0 && !unit_mag {
                write!(f, "*")?;
            }
            if bp > 0 {
                write!(f, "b")?;
                if bp > 1 {
                    write!(f, "^{bp}")?;
                }
            }
        }
        Ok(())
    }
}

/// Linear differential operator `Σ_j c_j(q, ħ) (ħ∂)^j` with `∂ = q d/dq`.
///
/// The coefficients stay symbolic in both `q` and `ħ`; the stored `hbar`
/// is the evaluation point used by [`QDEOperator::coefficient_list`].
/// The leading coefficient is always the constant 1.
#[derive(Debug, Clone, PartialEq)]
pub struct QDEOperator {
    coeffs: Vec<PolyQH>,
    hbar: Complex64,
}

impl QDEOperator {
    /// Builds an operator from coefficients listed by ascending power of
    /// `(ħ∂)`. Panics unless the leading coefficient is the constant 1.
    pub fn new(coeffs: Vec<PolyQH>, hbar: Complex64) -> Self {
        assert!(
            coeffs.last() == Some(&PolyQH::constant(1.0)),
            "leading coefficient of a QDE operator must be 1"
        );
        QDEOperator { coeffs, hbar }
    }

    /// Order of the operator (highest power of `ħ∂`).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn hbar(&self) -> Complex64 {
        self.hbar
    }

    pub fn symbolic_coefficients(&self) -> &[PolyQH] {
        &self.coeffs
    }

    /// Coefficients by ascending power of `(ħ∂)`, with the stored `ħ`
    /// substituted, as polynomials in `q`.
    pub fn coefficient_list(&self) -> Vec<PolyQ> {
        self.coeffs.iter().map(|c| c.eval_hbar(self.hbar)).collect()
    }
}

/// The operator `(ħ∂)^{n+1} - q` of the quantum differential equation
/// for `CP^n`.
pub fn cpn_operator(n: usize, hbar: Complex64) -> QDEOperator {
    let mut coeffs = vec![PolyQH::zero(); n + 2];
    coeffs[0] = PolyQH::from_terms(&[(1, 0, -1.0)]);
    coeffs[n + 1] = PolyQH::constant(1.0);
    QDEOperator::new(coeffs, hbar)
}

/// The quantum differential operator of a smooth cubic hypersurface in
/// `CP^4`: `(ħ∂)^4 - 27q(ħ∂)^2 - 27ħq(ħ∂) - 6ħ²q`.
pub fn cubic_hypersurface_operator(hbar: Complex64) -> QDEOperator {
    QDEOperator::new(
        vec![
            PolyQH::from_terms(&[(1, 2, -6.0)]),
            PolyQH::from_terms(&[(1, 1, -27.0)]),
            PolyQH::from_terms(&[(1, 0, -27.0)]),
            PolyQH::zero(),
            PolyQH::constant(1.0),
        ],
        hbar,
    )
}

/// Replaces `(ħ∂)` by `b` in each term and then sets `ħ = 0` in the
/// coefficients.
pub fn semiclassical_symbol(op: &QDEOperator) -> SymbolPoly {
    let mut terms = Vec::new();
    for (j, c) in op.symbolic_coefficients().iter().enumerate() {
        for (qp, coeff) in c.at_hbar_zero() {
            terms.push((j as u32, qp, coeff));
        }
    }
    SymbolPoly::from_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn cubic_coefficients_at_hbar_one() {
        let op = cubic_hypersurface_operator(re(1.0));
        let list = op.coefficient_list();
        assert_eq!(list.len(), 5);
        assert_eq!(list[0].coeff(1), re(-6.0));
        assert_eq!(list[1].coeff(1), re(-27.0));
        assert_eq!(list[2].coeff(1), re(-27.0));
        assert!(list[3].is_zero());
        assert_eq!(list[4].coeff(0), re(1.0));
    }

    #[test]
    fn cubic_coefficients_at_hbar_zero() {
        let op = cubic_hypersurface_operator(Complex64::ZERO);
        let list = op.coefficient_list();
        assert!(list[0].is_zero());
        assert!(list[1].is_zero());
        assert_eq!(list[2].coeff(1), re(-27.0));
        assert!(list[3].is_zero());
        assert_eq!(list[4].coeff(0), re(1.0));
    }

    #[test]
    fn symbol_of_cpn_operator() {
        for n in 1..=10 {
            let sym = semiclassical_symbol(&cpn_operator(n, re(1.0)));
            let expect = SymbolPoly::from_terms(&[(n as u32 + 1, 0, 1.0), (0, 1, -1.0)]);
            assert_eq!(sym, expect, "b^{{n+1}} - q at n = {n}");
        }
    }

    #[test]
    fn symbol_of_cubic_operator() {
        let sym = semiclassical_symbol(&cubic_hypersurface_operator(re(2.0)));
        assert_eq!(sym, SymbolPoly::from_terms(&[(4, 0, 1.0), (2, 1, -27.0)]));
        assert_eq!(sym.to_string(), "b^4 - 27*q*b^2");
    }

    #[test]
    fn symbol_of_zero_terms_is_zero() {
        // an operator that is purely (ħ∂)^2 with zero lower part
        let op = QDEOperator::new(
            vec![PolyQH::zero(), PolyQH::zero(), PolyQH::constant(1.0)],
            re(1.0),
        );
        let sym = semiclassical_symbol(&op);
        assert_eq!(sym, SymbolPoly::from_terms(&[(2, 0, 1.0)]));
        assert!(SymbolPoly::zero().is_zero());
    }

    #[test]
    fn symbol_display_reads_naturally() {
        let sym = semiclassical_symbol(&cpn_operator(2, re(1.0)));
        assert_eq!(sym.to_string(), "b^3 - q");
    }
}

//! Exactness certificates for quadrature rules on spline spaces.
//!
//! A rule is checked against the truncated-power basis
//! {(x - a)^j, j = 0..D} and {(x - t_k)_+^m, m = c+1..D} of S_{D,c}, whose
//! integrals over [a, b] have closed forms. Nothing here depends on how the
//! rule was constructed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The space of piecewise polynomials of degree `degree` on [a, b] with
/// C^`continuity` joins at the inner knots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplineSpace {
    pub degree: usize,
    pub continuity: usize,
    pub knots: Vec<f64>,
    pub a: f64,
    pub b: f64,
}

impl SplineSpace {
    pub fn new(degree: usize, continuity: usize, knots: Vec<f64>, a: f64, b: f64) -> Result<Self> {
        if degree <= continuity {
            return Err(Error::InvalidInput(format!(
                "degree {degree} must exceed continuity {continuity}"
            )));
        }
        if a.is_nan() || b.is_nan() || a >= b {
            return Err(Error::InvalidInput(format!("empty interval [{a}, {b}]")));
        }
        let inside = knots.iter().all(|&t| a < t && t < b);
        let increasing = knots.windows(2).all(|w| w[0] < w[1]);
        if !inside || !increasing {
            return Err(Error::InvalidInput(
                "inner knots must be strictly increasing inside (a, b)".into(),
            ));
        }
        Ok(Self {
            degree,
            continuity,
            knots,
            a,
            b,
        })
    }

    /// (D + 1) + (S - 1)(D - c).
    pub fn dim(&self) -> usize {
        self.degree + 1 + self.knots.len() * (self.degree - self.continuity)
    }
}

/// One element of the truncated-power basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisElement {
    /// (x - a)^power.
    Monomial { power: usize },
    /// (x - knot)_+^power.
    TruncatedPower { knot: f64, power: usize },
}

impl BasisElement {
    pub fn eval(&self, space: &SplineSpace, x: f64) -> f64 {
        match *self {
            BasisElement::Monomial { power } => (x - space.a).powi(power as i32),
            BasisElement::TruncatedPower { knot, power } => {
                if x > knot {
                    (x - knot).powi(power as i32)
                } else {
                    0.0
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            BasisElement::Monomial { power } => format!("(x-a)^{power}"),
            BasisElement::TruncatedPower { knot, power } => format!("(x-{knot})_+^{power}"),
        }
    }
}

/// The truncated-power basis of `space`; its length equals `space.dim()`.
pub fn basis(space: &SplineSpace) -> Vec<BasisElement> {
    let mut out: Vec<BasisElement> = (0..=space.degree)
        .map(|power| BasisElement::Monomial { power })
        .collect();
    for &knot in &space.knots {
        for power in space.continuity + 1..=space.degree {
            out.push(BasisElement::TruncatedPower { knot, power });
        }
    }
    out
}

/// Integral of `element` over [a, b].
pub fn exact_integral(element: &BasisElement, space: &SplineSpace) -> f64 {
    let (from, power) = match *element {
        BasisElement::Monomial { power } => (space.a, power),
        BasisElement::TruncatedPower { knot, power } => (knot, power),
    };
    (space.b - from).powi(power as i32 + 1) / (power + 1) as f64
}

/// Quadrature error of one basis element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisResidual {
    pub element: BasisElement,
    pub exact: f64,
    pub quadrature: f64,
    pub residual: f64,
}

/// Per-element errors of a rule on a spline space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub per_basis: Vec<BasisResidual>,
    pub max_residual: f64,
    pub min_weight: f64,
}

/// Relative residual |Σ w f(x) - ∫f| / max(1, |∫f|) of every basis element.
pub fn residuals(rule: &[(f64, f64)], space: &SplineSpace) -> ResidualReport {
    let per_basis: Vec<BasisResidual> = basis(space)
        .into_iter()
        .map(|element| {
            let exact = exact_integral(&element, space);
            let quadrature: f64 = rule.iter().map(|&(x, w)| w * element.eval(space, x)).sum();
            BasisResidual {
                element,
                exact,
                quadrature,
                residual: (quadrature - exact).abs() / exact.abs().max(1.0),
            }
        })
        .collect();
    let max_residual = per_basis.iter().map(|r| r.residual).fold(0.0, f64::max);
    let min_weight = rule.iter().map(|&(_, w)| w).fold(f64::INFINITY, f64::min);
    ResidualReport {
        per_basis,
        max_residual,
        min_weight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_knots() -> Vec<f64> {
        vec![1.0, 3.0, 6.0, 7.0, 8.0]
    }

    #[test]
    fn basis_sizes() {
        let s = SplineSpace::new(2, 0, vec![0.5], 0.0, 1.0).unwrap();
        assert_eq!(basis(&s).len(), 5);
        let s = SplineSpace::new(3, 1, fixture_knots(), 0.0, 9.0).unwrap();
        assert_eq!((basis(&s).len(), s.dim()), (14, 14));
        let s = SplineSpace::new(3, 0, fixture_knots(), 0.0, 9.0).unwrap();
        assert_eq!((basis(&s).len(), s.dim()), (19, 19));
    }

    #[test]
    fn closed_form_integrals() {
        let s = SplineSpace::new(3, 1, fixture_knots(), 0.0, 9.0).unwrap();
        assert_eq!(
            exact_integral(&BasisElement::Monomial { power: 0 }, &s),
            9.0
        );
        let e = BasisElement::TruncatedPower {
            knot: 3.0,
            power: 2,
        };
        assert_eq!(exact_integral(&e, &s), 72.0);
        let e = BasisElement::TruncatedPower {
            knot: 8.0,
            power: 3,
        };
        assert_eq!(exact_integral(&e, &s), 0.25);
    }

    #[test]
    fn two_point_gauss_is_cubic_exact() {
        let g = 1.0 / 3f64.sqrt();
        let s = SplineSpace::new(3, 1, vec![], -1.0, 1.0).unwrap();
        let r = residuals(&[(-g, 1.0), (g, 1.0)], &s);
        assert!(r.max_residual <= 1e-14);
        assert_eq!(r.min_weight, 1.0);
    }

    #[test]
    fn rejects_bad_spaces() {
        assert!(SplineSpace::new(1, 1, vec![], 0.0, 1.0).is_err());
        assert!(SplineSpace::new(3, 1, vec![2.0], 0.0, 1.0).is_err());
        assert!(SplineSpace::new(3, 1, vec![0.6, 0.4], 0.0, 1.0).is_err());
    }
}

//! Formulae for the C0 spaces.
//!
//! The boundary polynomials Q_n(α, x) are built on the Jacobi polynomials
//! P^{(1,0)}, the middle polynomials M_n(α_L, α_R, x) on Legendre
//! polynomials. A single parameter α carries the state of a sweep from one
//! subinterval to the next.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orthopoly::{
    combine, jet, jet_or_zero, real_roots, EvalTriple, PolyFamily, DEFAULT_BRACKET,
};

/// Recursion state of a C0 sweep. `alpha = 0` is the state of an end subinterval.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ParamC0 {
    pub alpha: f64,
}

impl ParamC0 {
    pub fn new(alpha: f64) -> Self {
        Self { alpha }
    }
}

/// Nodes and weights on the reference interval [-1, 1].
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ReferenceRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl ReferenceRule {
    /// Roots `f` (value, derivative) of exact degree `degree` and weights each
    /// root with `weight(x, f'(x))`.
    pub(crate) fn from_rooted<F, W>(f: F, degree: usize, weight: W) -> Result<Self>
    where
        F: Fn(f64) -> (f64, f64),
        W: Fn(f64, f64) -> Result<f64>,
    {
        let nodes = real_roots(&f, degree, DEFAULT_BRACKET)?;
        let weights = nodes
            .iter()
            .map(|&x| weight(x, f(x).1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { nodes, weights })
    }

    /// The rule with nodes reflected through the origin, still sorted.
    pub fn reflected(&self) -> Self {
        Self {
            nodes: self.nodes.iter().rev().map(|x| -x).collect(),
            weights: self.weights.iter().rev().copied().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

pub(crate) fn nonzero(v: f64, context: &'static str) -> Result<f64> {
    if v == 0.0 || !v.is_finite() {
        Err(Error::DegenerateDenominator { context })
    } else {
        Ok(v)
    }
}

fn f_c0(alpha: f64, n: f64) -> f64 {
    1.0 + alpha * n * (n + 1.0)
}

fn h_c0(l: f64, r: f64, n: f64) -> f64 {
    1.0 + n * n * (l + r + (n - 1.0) * (n + 1.0) * l * r)
}

/// Q_n(α, x) with its first two derivatives. `n = 0` gives the constant 1.
pub fn q_eval_c0(p: ParamC0, n: usize, x: f64) -> EvalTriple {
    let a = p.alpha;
    let nf = n as f64;
    let j = jet(PolyFamily::Jacobi10, n, x);
    combine(&[(f_c0(a, nf) + a * nf, 0.0), (a, -a)], &j, x)
}

/// M_n(α_L, α_R, x) with its first two derivatives. `n = 0` gives the constant 1.
pub fn m_eval_c0(left: ParamC0, right: ParamC0, n: usize, x: f64) -> EvalTriple {
    let (l, r) = (left.alpha, right.alpha);
    let nf = n as f64;
    let h = h_c0(l, r, nf);
    let h1 = l + r + 2.0 * nf * (nf + 1.0) * l * r;
    let (h2l, h2r) = (f_c0(l, nf), f_c0(r, nf));
    let j = jet(PolyFamily::Legendre, n, x);
    combine(
        &[(h + nf * h1, 0.0), (l * h2r - r * h2l, -l * h2r - r * h2l)],
        &j,
        x,
    )
}

fn plus_omega(hi: EvalTriple, lo: EvalTriple, omega: f64) -> (f64, f64) {
    (hi.value + omega * lo.value, hi.d1 + omega * lo.d1)
}

/// Boundary rule from the roots of Q_n, or of Q_n + ωQ_{n-1} when `omega` is given.
pub fn boundary_rule_c0(p: ParamC0, n: usize, omega: Option<f64>) -> Result<ReferenceRule> {
    if n == 0 {
        return Err(Error::InvalidInput("boundary rule needs n >= 1".into()));
    }
    let w = omega.unwrap_or(0.0);
    let nf = n as f64;
    let f = f_c0(p.alpha, nf);
    let numer = 2.0 * (2.0 * nf + 1.0) * f * f;
    ReferenceRule::from_rooted(
        |x| plus_omega(q_eval_c0(p, n, x), q_eval_c0(p, n - 1, x), w),
        n,
        |x, d| {
            let one_minus = nonzero(1.0 - x, "boundary weight (node at x = 1)")?;
            let lower = q_eval_c0(p, n - 1, x).value;
            Ok(numer / nonzero(nf * (nf + 1.0) * d * lower * one_minus, "boundary weight")?)
        },
    )
}

/// One step of the α recursion to the neighbouring subinterval.
///
/// `lambda` is the length of the next subinterval over the current one.
/// Without `omega` the plain map is used (and `n = 0` is accepted, the step
/// across a subinterval without nodes); with `omega` the half-rule map.
pub fn step_alpha(p: ParamC0, n: usize, lambda: f64, omega: Option<f64>) -> Result<ParamC0> {
    let a = p.alpha;
    let nf = n as f64;
    let next = match omega {
        None => {
            let gamma = (nf + 1.0) * (1.0 + nf * (nf + 2.0) * a);
            (1.0 + (nf + 1.0).powi(2) * a) / nonzero((nf + 1.0) * gamma, "alpha step")?
        }
        Some(w) => {
            if n == 0 {
                return Err(Error::InvalidInput("half-rule step needs n >= 1".into()));
            }
            let gamma = (nf + 1.0) * (1.0 + nf * (nf + 2.0) * a)
                + w * nf * (1.0 + (nf - 1.0) * (nf + 1.0) * a);
            (nf * (1.0 + (nf + 1.0).powi(2) * a) + w * (nf + 1.0) * (1.0 + nf * nf * a))
                / nonzero(nf * (nf + 1.0) * gamma, "alpha step")?
        }
    };
    Ok(ParamC0::new(next / lambda))
}

/// The ω of a half-rule pair step, where `lambda` is the second length of the pair over the first.
pub fn omega_pair_c0(p: ParamC0, n: usize, lambda: f64) -> Result<f64> {
    let a = p.alpha;
    let nf = n as f64;
    let num =
        nf * (1.0 + (nf + 1.0).powi(2) * a) + lambda * (nf + 1.0) * (1.0 + nf * (nf + 2.0) * a);
    let den = (nf + 1.0) * (1.0 + nf * nf * a) + lambda * nf * (1.0 + (nf - 1.0) * (nf + 1.0) * a);
    Ok(-num / nonzero(den, "omega pair")?)
}

/// Middle rule from the roots of M_n + ωM_{n-1}.
pub fn middle_rule_c0(
    left: ParamC0,
    right: ParamC0,
    n: usize,
    omega: f64,
) -> Result<ReferenceRule> {
    if n == 0 {
        return Err(Error::InvalidInput("middle rule needs n >= 1".into()));
    }
    let nf = n as f64;
    let h = h_c0(left.alpha, right.alpha, nf);
    ReferenceRule::from_rooted(
        |x| {
            plus_omega(
                m_eval_c0(left, right, n, x),
                m_eval_c0(left, right, n - 1, x),
                omega,
            )
        },
        n,
        |x, d| {
            let lower = m_eval_c0(left, right, n - 1, x).value;
            Ok(2.0 * h * h / nonzero(nf * d * lower, "middle weight")?)
        },
    )
}

/// Parameters (α_{R,M}, α_{L,M}) of the two middle subintervals of an even-S half rule.
pub fn middle_pair_params_c0(omega_free: f64, lambda: f64) -> (ParamC0, ParamC0) {
    (ParamC0::new(omega_free), ParamC0::new(-omega_free / lambda))
}

fn c32(k: isize, x: f64) -> f64 {
    jet_or_zero(PolyFamily::Gegenbauer32, k, x)[0]
}

/// Q_n evaluated as a sum of Gegenbauer C^{(3/2)} polynomials.
pub fn gegenbauer_oracle_q_c0(p: ParamC0, n: usize, x: f64) -> f64 {
    let k = n as isize;
    let nf = n as f64;
    (c32(k, x) * f_c0(p.alpha, nf) + c32(k - 1, x) * f_c0(p.alpha, nf + 1.0)) / (nf + 1.0)
}

/// M_n evaluated as a sum of Gegenbauer C^{(3/2)} polynomials.
pub fn gegenbauer_oracle_m_c0(left: ParamC0, right: ParamC0, n: usize, x: f64) -> f64 {
    let (l, r) = (left.alpha, right.alpha);
    let k = n as isize;
    let nf = n as f64;
    (c32(k, x) * h_c0(l, r, nf) - c32(k - 2, x) * h_c0(l, r, nf + 1.0)) / (2.0 * nf + 1.0)
        + c32(k - 1, x) * (l - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::eval;

    const Z: ParamC0 = ParamC0 { alpha: 0.0 };

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn zero_state_is_jacobi() {
        for i in 0..=10 {
            let x = -1.0 + 0.2 * i as f64;
            assert!(close(
                q_eval_c0(Z, 3, x).value,
                eval(PolyFamily::Jacobi10, 3, x).value,
                1e-14
            ));
        }
        assert!(q_eval_c0(Z, 1, -1.0 / 3.0).value.abs() < 1e-15);
    }

    #[test]
    fn one_node_boundary_rule() {
        let r = boundary_rule_c0(Z, 1, None).unwrap();
        assert!(close(r.nodes[0], -1.0 / 3.0, 1e-15));
        assert!(close(r.weights[0], 1.5, 1e-15));
    }

    #[test]
    fn omega_shifted_boundary_rule() {
        let r = boundary_rule_c0(Z, 1, Some(-1.0)).unwrap();
        assert!(close(r.nodes[0], 1.0 / 3.0, 1e-15));
    }

    #[test]
    fn first_half_rule_subinterval() {
        let r = boundary_rule_c0(Z, 2, Some(-8.0 / 7.0)).unwrap();
        let s22 = 22f64.sqrt();
        let want = [4.0 / 7.0 - s22 / 14.0, 4.0 / 7.0 + s22 / 14.0];
        let wts = [2.0 / 3.0 - s22 / 44.0, 2.0 / 3.0 + s22 / 44.0];
        for i in 0..2 {
            assert!(close((r.nodes[i] + 1.0) / 2.0, want[i], 1e-14));
            assert!(close(r.weights[i] / 2.0, wts[i], 1e-14));
        }
        assert!(close(omega_pair_c0(Z, 2, 2.0).unwrap(), -8.0 / 7.0, 1e-15));
    }

    #[test]
    fn alpha_steps() {
        assert!(close(
            step_alpha(Z, 1, 1.0, None).unwrap().alpha,
            0.25,
            1e-16
        ));
        assert!(close(
            step_alpha(Z, 1, 2.0, None).unwrap().alpha,
            0.125,
            1e-16
        ));
        assert!(close(
            step_alpha(Z, 1, 1.0, Some(0.0)).unwrap().alpha,
            0.25,
            1e-16
        ));
    }

    #[test]
    fn omega_pairs() {
        for n in 1..8 {
            assert!(close(omega_pair_c0(Z, n, 1.0).unwrap(), -1.0, 1e-15));
        }
        assert!(close(omega_pair_c0(Z, 1, 2.0).unwrap(), -1.25, 1e-15));
        assert!(close(
            omega_pair_c0(ParamC0::new(0.25), 1, 1.0).unwrap(),
            -11.0 / 7.0,
            1e-15
        ));
    }

    #[test]
    fn zero_middle_is_gauss_legendre() {
        let r = middle_rule_c0(Z, Z, 2, 0.0).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!(close(r.nodes[0], -s, 1e-15) && close(r.nodes[1], s, 1e-15));
        assert!(close(r.weights[0], 1.0, 1e-15) && close(r.weights[1], 1.0, 1e-15));
        let m = middle_rule_c0(Z, Z, 1, 0.0).unwrap();
        assert!(m.nodes[0].abs() < 1e-16 && close(m.weights[0], 2.0, 1e-15));
    }

    #[test]
    fn middle_pair() {
        assert_eq!(middle_pair_params_c0(0.0, 1.0), (Z, ParamC0::new(-0.0)));
        assert_eq!(
            middle_pair_params_c0(0.3, 1.0),
            (ParamC0::new(0.3), ParamC0::new(-0.3))
        );
        assert_eq!(
            middle_pair_params_c0(0.3, 2.0),
            (ParamC0::new(0.3), ParamC0::new(-0.15))
        );
    }

    #[test]
    fn oracles_agree() {
        let p = ParamC0::new(0.25);
        for i in 0..=20 {
            let x = (std::f64::consts::PI * (i as f64 + 0.5) / 21.0).cos();
            assert!(close(
                q_eval_c0(p, 2, x).value,
                gegenbauer_oracle_q_c0(p, 2, x),
                1e-12
            ));
            assert!(close(
                m_eval_c0(p, p, 4, x).value,
                gegenbauer_oracle_m_c0(p, p, 4, x),
                1e-11
            ));
        }
    }
}

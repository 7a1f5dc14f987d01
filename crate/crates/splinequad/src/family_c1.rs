//! Formulae for the C1 spaces.
//!
//! The boundary polynomials Q_n(α, β, x) are built on the Jacobi polynomials
//! P^{(2,0)}, the middle polynomials M_n(α_L, β_L, α_R, β_R, x) on Legendre
//! polynomials. Two parameters (α, β) carry the state of a sweep.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family_c0::{nonzero, ReferenceRule};
use crate::orthopoly::{combine, jet, jet_or_zero, EvalTriple, PolyFamily};

/// Recursion state of a C1 sweep. `(0, 0)` is the state of an end subinterval.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ParamC1 {
    pub alpha: f64,
    pub beta: f64,
}

impl ParamC1 {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta }
    }
}

/// Sign of the square root taken when solving a quadratic for a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

fn f_c1(a: f64, b: f64, n: f64) -> f64 {
    1.0 + n
        * (n + 2.0)
        * (a + 6.0 * (n * n + 2.0 * n - 1.0) * b
            - 3.0 * (n - 1.0) * n * (n + 1.0).powi(2) * (n + 2.0) * (n + 3.0) * b * b)
}

fn e_c1(a: f64, b: f64, n: f64) -> f64 {
    1.0 + (n + 1.0)
        * (n + 2.0)
        * (a + 3.0 * n * (n + 3.0) * b * (2.0 - (n - 1.0) * (n + 1.0) * (n + 2.0) * (n + 4.0) * b))
}

fn h0(n: f64, a: f64, b: f64) -> f64 {
    1.0 + n
        * (n - 1.0)
        * (a + (n + 1.0) * (n - 2.0) * b * (6.0 - 3.0 * b * (n + 2.0) * n * (n - 1.0) * (n - 3.0)))
}

fn h_c1(l: ParamC1, r: ParamC1, n: f64) -> f64 {
    (h0(n, l.alpha, l.beta) * h0(n + 1.0, r.alpha, r.beta)
        + h0(n, r.alpha, r.beta) * h0(n + 1.0, l.alpha, l.beta))
        / 2.0
        - 36.0 * (n - 1.0) * n * n * (n + 1.0) * (l.beta - r.beta).powi(2)
}

/// Q_n(α, β, x) with its first two derivatives. `n = 0` gives the constant 1.
pub fn q_eval_c1(p: ParamC1, n: usize, x: f64) -> EvalTriple {
    let (a, b) = (p.alpha, p.beta);
    let nf = n as f64;
    let f = f_c1(a, b, nf);
    let f1 = a + 12.0
        * b
        * ((nf * nf + 3.0 * nf + 1.0)
            - nf * (nf + 1.0).powi(2) * (nf + 2.0).powi(2) * (nf + 3.0) * b);
    let f2 = b * (1.0 - 3.0 * nf * (nf + 1.0) * (nf + 2.0) * (nf + 3.0) * b);
    let j = jet(PolyFamily::Jacobi20, n, x);
    combine(
        &[
            (f + nf * f1, 0.0),
            (f1 - 36.0 * f2, -f1),
            (12.0 * f2, -12.0 * f2),
        ],
        &j,
        x,
    )
}

/// M_n(α_L, β_L, α_R, β_R, x) with its first two derivatives. `n = 0` gives the constant 1.
pub fn m_eval_c1(left: ParamC1, right: ParamC1, n: usize, x: f64) -> EvalTriple {
    let (al, bl, ar, br) = (left.alpha, left.beta, right.alpha, right.beta);
    let nf = n as f64;
    let nn = nf * (nf + 1.0);
    let hil = h0(nf + 1.0, al, bl);
    let hir = h0(nf + 1.0, ar, br);
    let h1 = |a: f64, b: f64| {
        a + 12.0 * nn * b * (1.0 - (nf - 1.0) * (nf + 2.0) * (nf * nf + nf + 3.0) * b)
    };
    let h2 = |b: f64| b * (1.0 - 3.0 * (nf - 1.0) * nn * (nf + 2.0) * b);
    let h3 = |a: f64, b: f64| h0(nf + 1.0, a, b) + 24.0 * nn * h2(b);
    let h4 = |a: f64, b: f64| {
        1.0 + nn
            * (2.0 * a
                + 3.0 * (nf - 1.0) * nn * (nf + 2.0) * (13.0 * nf * nf + 13.0 * nf - 18.0) * b * b)
    };
    let d = bl - br;
    let (h1l, h1r) = (h1(al, bl) * hir, h1(ar, br) * hil);
    let (h2l, h2r) = (h2(bl) * hir, h2(br) * hil);
    let p0 = (h3(al, bl) * hir + h3(ar, br) * hil) / 2.0 - 36.0 * d * d * nn * nn;
    let p1 = h1l - h1r + 12.0 * (h2(br) * h4(al, bl) - h2(bl) * h4(ar, br));
    let q1 = -(h1l + h1r) + 72.0 * d * d * nn;
    let p2 = 12.0 * (h2l + h2r) - 72.0 * d * d * nn;
    let q2 = 12.0 * (h2r - h2l)
        + 72.0 * nn * d * (bl + br - 6.0 * (nf - 1.0) * nn * (nf + 2.0) * bl * br);
    let j = jet(PolyFamily::Legendre, n, x);
    combine(&[(p0, 0.0), (p1, q1), (p2, q2)], &j, x)
}

fn plus_omega(hi: EvalTriple, lo: EvalTriple, omega: f64) -> (f64, f64) {
    (hi.value + omega * lo.value, hi.d1 + omega * lo.d1)
}

/// Boundary rule from the roots of Q_n, or of Q_n + ωQ_{n-1} when `omega` is given.
pub fn boundary_rule_c1(p: ParamC1, n: usize, omega: Option<f64>) -> Result<ReferenceRule> {
    if n == 0 {
        return Err(Error::InvalidInput("boundary rule needs n >= 1".into()));
    }
    let w = omega.unwrap_or(0.0);
    let nf = n as f64;
    let f = f_c1(p.alpha, p.beta, nf);
    let numer = 8.0 * (nf + 1.0) * f * f;
    ReferenceRule::from_rooted(
        |x| plus_omega(q_eval_c1(p, n, x), q_eval_c1(p, n - 1, x), w),
        n,
        |x, d| {
            let one_minus = nonzero(1.0 - x, "boundary weight (node at x = 1)")?;
            let lower = q_eval_c1(p, n - 1, x).value;
            let den = nf * (nf + 2.0) * d * lower * one_minus * one_minus;
            Ok(numer / nonzero(den, "boundary weight")?)
        },
    )
}

/// One step of the (α, β) recursion to the neighbouring subinterval.
///
/// `lambda` is the length of the next subinterval over the current one.
/// Without `omega` the plain map is used (and `n = 0` is accepted, the step
/// across a subinterval without nodes); with `omega` the half-rule map.
pub fn step_ab(p: ParamC1, n: usize, lambda: f64, omega: Option<f64>) -> Result<ParamC1> {
    let (a, b) = (p.alpha, p.beta);
    let n = n as f64;
    let (alpha, beta) = match omega {
        None => {
            let gamma = (n + 1.0)
                * (n + 2.0)
                * (1.0 + n * (n + 3.0) * a + 6.0 * n * (n + 3.0) * (n * n + 3.0 * n - 1.0) * b
                    - 3.0
                        * n
                        * n
                        * (n - 1.0)
                        * (n + 1.0)
                        * (n + 2.0)
                        * (n + 3.0).powi(2)
                        * (n + 4.0)
                        * b
                        * b)
                / 2.0;
            let gamma = nonzero(gamma, "alpha-beta step")?;
            let e = e_c1(a, b, n);
            let g = 1.0 - 3.0 * n * (n + 1.0) * (n + 2.0) * (n + 3.0) * b;
            let inner = (11.0 * n * n + 33.0 * n + 16.0) * a
                + 12.0 * (4.0 * n.powi(4) + 24.0 * n.powi(3) + 34.0 * n * n - 6.0 * n - 8.0) * b
                + 3.0
                    * n
                    * (n + 1.0)
                    * (n + 2.0)
                    * (n + 3.0)
                    * (-4.0 * (n + 1.0) * (n + 2.0) * (2.0 * n * n + 6.0 * n - 5.0) * b * b
                        - 3.0
                            * (n - 1.0)
                            * n
                            * (n + 1.0)
                            * (n + 2.0)
                            * (n + 3.0)
                            * (n + 4.0)
                            * a
                            * b
                            * b
                        + 2.0 * (3.0 * n * n + 9.0 * n - 6.0) * a * b
                        + a * a);
            let alpha = -a
                + e * (4.0 * (2.0 * n * n + 6.0 * n + 3.0) + n * (n + 3.0) * inner)
                    / (12.0 * gamma * gamma);
            let beta = b + e * g / (6.0 * (n + 1.0) * (n + 2.0) * gamma);
            (alpha, beta)
        }
        Some(w) => {
            if n == 0.0 {
                return Err(Error::InvalidInput("half-rule step needs n >= 1".into()));
            }
            let gamma = nonzero(gamma_32(n, a, b, w), "alpha-beta step")?;
            let alpha = 4.0 / 3.0 * a_32(n, a, b, w) / ((n + 1.0) * gamma).powi(2);
            let beta = b_32(n, a, b, w) / (3.0 * gamma * (n + 1.0).powi(2) * (n + 2.0) * n);
            (alpha, beta)
        }
    };
    Ok(ParamC1::new(alpha / lambda, beta / (lambda * lambda)))
}

fn gamma_32(n: f64, a: f64, b: f64, w: f64) -> f64 {
    -(n + 2.0)
        * (1.0 + n * (n + 3.0) * a + 6.0 * n * (n + 3.0) * (n.powi(2) + 3.0 * n - 1.0) * b
            - 3.0
                * n.powi(2)
                * (n - 1.0)
                * (n + 1.0)
                * (n + 2.0)
                * (n + 3.0).powi(2)
                * (n + 4.0)
                * b.powi(2))
        + w * (-a * n * (n + 2.0) * (n - 1.0)
            + 3.0
                * b
                * n
                * (n + 2.0)
                * (n - 1.0)
                * (b * n * (n - 2.0) * (n + 3.0) * (n + 1.0) * (n + 2.0) * (n - 1.0)
                    - 2.0 * (n.powi(2) + n - 3.0))
            - n)
}

fn a_32(n: f64, a: f64, b: f64, w: f64) -> f64 {
    w.powi(2)
        * (a.powi(2) * n * (n - 1.0) * (n + 2.0) * (n + 1.0) * (2.0 * n.powi(2) + 2.0 * n - 3.0)
            + a * (-3.0
                * b.powi(2)
                * n.powi(2)
                * (2.0 * n.powi(2) + 2.0 * n - 9.0)
                * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                * (n - 1.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 6.0
                    * b
                    * n
                    * (n - 1.0)
                    * (n + 2.0)
                    * (n + 1.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 5.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                + (2.0 * n.powi(2) + 2.0 * n - 3.0) * (2.0 * n.powi(2) + 2.0 * n - 1.0))
            + 9.0
                * b.powi(4)
                * n.powi(4)
                * (n - 2.0)
                * (n + 3.0)
                * (2.0 * n.powi(2) + 2.0 * n - 9.0)
                * (n + 2.0).powi(3)
                * (n - 1.0).powi(3)
                * (n + 1.0).powi(4)
            - 36.0
                * b.powi(3)
                * n.powi(2)
                * (2.0 * n.powi(4) + 4.0 * n.powi(3) - 9.0 * n.powi(2) - 11.0 * n + 6.0)
                * (n.powi(2) + n - 3.0)
                * (n - 1.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
            + 6.0
                * b.powi(2)
                * n
                * (n - 1.0)
                * (n + 2.0)
                * (n + 1.0)
                * (10.0 * n.powi(6) + 30.0 * n.powi(5) - 35.0 * n.powi(4) - 120.0 * n.powi(3)
                    + 67.0 * n.powi(2)
                    + 132.0 * n
                    - 72.0)
            + 12.0
                * b
                * (n + 2.0)
                * (n - 1.0)
                * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                * (n.powi(2) + n - 1.0)
            + 2.0 * n.powi(2)
            + 2.0 * n
            - 1.0)
        + w * (2.0
            * a.powi(2)
            * n
            * (n + 2.0)
            * (2.0 * n.powi(2) + 4.0 * n - 3.0)
            * (n + 1.0).powi(2)
            + a * (-6.0
                * b.powi(2)
                * n.powi(2)
                * (n + 3.0)
                * (n - 1.0)
                * (4.0 * n.powi(4) + 16.0 * n.powi(3) + 20.0 * n.powi(2) + 8.0 * n - 27.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 12.0
                    * b
                    * n
                    * (n + 2.0)
                    * (n + 1.0).powi(2)
                    * (2.0 * n.powi(2) + 4.0 * n - 3.0).powi(2)
                + 2.0 * (2.0 * n.powi(2) + 4.0 * n - 1.0) * (2.0 * n.powi(2) + 4.0 * n + 3.0))
            + 18.0
                * b.powi(4)
                * n.powi(3)
                * (2.0 * n.powi(4) + 8.0 * n.powi(3) - 5.0 * n.powi(2) - 26.0 * n + 12.0)
                * (n + 3.0).powi(2)
                * (n - 1.0).powi(2)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(4)
            - 72.0
                * b.powi(3)
                * n.powi(2)
                * (n + 3.0)
                * (n - 1.0)
                * (2.0 * n.powi(2) + 4.0 * n - 7.0)
                * (n.powi(4) + 4.0 * n.powi(3) + 4.0 * n.powi(2) - 3.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
            + 12.0
                * b.powi(2)
                * n
                * (n - 1.0)
                * (n + 3.0)
                * (n + 2.0)
                * (10.0 * n.powi(4) + 40.0 * n.powi(3) - n.powi(2) - 82.0 * n + 30.0)
                * (n + 1.0).powi(2)
            + b * (72.0 + 600.0 * n.powi(4) - 192.0 * n
                + 288.0 * n.powi(5)
                + 480.0 * n.powi(3)
                + 48.0 * n.powi(6))
            + 6.0
            + 8.0 * n
            + 4.0 * n.powi(2))
        + a.powi(2) * n * (n + 3.0) * (n + 2.0) * (n + 1.0) * (2.0 * n.powi(2) + 6.0 * n + 1.0)
        + a * (-3.0
            * b.powi(2)
            * n.powi(2)
            * (2.0 * n.powi(2) + 6.0 * n - 5.0)
            * (2.0 * n.powi(2) + 6.0 * n + 1.0)
            * (n + 3.0).powi(2)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
            + 6.0
                * b
                * n
                * (n + 3.0)
                * (n + 2.0)
                * (n + 1.0)
                * (2.0 * n.powi(2) + 6.0 * n - 1.0)
                * (2.0 * n.powi(2) + 6.0 * n + 1.0)
            + (2.0 * n.powi(2) + 6.0 * n + 1.0) * (2.0 * n.powi(2) + 6.0 * n + 3.0))
        + 9.0
            * b.powi(4)
            * n.powi(3)
            * (n - 1.0)
            * (n + 4.0)
            * (2.0 * n.powi(2) + 6.0 * n - 5.0)
            * (n + 3.0).powi(3)
            * (n + 2.0).powi(4)
            * (n + 1.0).powi(4)
        - 36.0
            * b.powi(3)
            * n.powi(2)
            * (2.0 * n.powi(4) + 12.0 * n.powi(3) + 15.0 * n.powi(2) - 9.0 * n - 8.0)
            * (n.powi(2) + 3.0 * n - 1.0)
            * (n + 3.0).powi(2)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
        + 6.0
            * b.powi(2)
            * n
            * (n + 3.0)
            * (n + 2.0)
            * (n + 1.0)
            * (10.0 * n.powi(6) + 90.0 * n.powi(5) + 265.0 * n.powi(4) + 240.0 * n.powi(3)
                - 53.0 * n.powi(2)
                - 24.0 * n
                + 12.0)
        + 12.0 * b * n * (n + 3.0) * (n.powi(2) + 3.0 * n + 1.0) * (2.0 * n.powi(2) + 6.0 * n + 1.0)
        + 2.0 * n.powi(2)
        + 6.0 * n
        + 3.0
}

fn b_32(n: f64, a: f64, b: f64, w: f64) -> f64 {
    w * (-a * n * (n + 2.0) * (n + 1.0)
        + 3.0 * b.powi(2) * n.powi(3) * (n - 1.0) * (n + 2.0).powi(2) * (n + 1.0).powi(3)
        - 6.0 * b * n * (n + 2.0) * (n + 1.0) * (n.powi(2) + n - 1.0)
        - 2.0
        - n)
        - a * n * (n + 2.0) * (n + 1.0)
        + 3.0 * b.powi(2) * n.powi(2) * (n + 3.0) * (n + 2.0).powi(3) * (n + 1.0).powi(3)
        - 6.0 * b * n * (n + 2.0) * (n + 1.0) * (n.powi(2) + 3.0 * n + 1.0)
        - n
}

fn a_11(n: f64, a: f64, b: f64, lam: f64) -> f64 {
    a.powi(2)
        * (3.0
            * lam.powi(4)
            * n.powi(2)
            * (n - 1.0).powi(2)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
            + 4.0
                * lam.powi(3)
                * n.powi(2)
                * (n - 1.0)
                * (n + 1.0)
                * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                * (n + 2.0).powi(2)
            + 6.0
                * lam.powi(2)
                * n.powi(2)
                * (n - 1.0)
                * (n + 1.0)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n + 2.0).powi(2)
            - n.powi(2) * (n - 1.0) * (n + 3.0) * (n + 2.0).powi(2) * (n + 1.0).powi(2))
        + a * (b.powi(2)
            * (-18.0
                * lam.powi(4)
                * n.powi(3)
                * (n - 2.0)
                * (n + 3.0)
                * (n - 1.0).powi(3)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(3)
                - 12.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (2.0 * n.powi(2) + 2.0 * n - 9.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                    * (n - 1.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 36.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n.powi(2) + n - 3.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n - 1.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 6.0
                    * n.powi(4)
                    * (n + 3.0)
                    * (n - 1.0).powi(2)
                    * (n + 2.0).powi(3)
                    * (n + 1.0).powi(4))
            + b * (36.0
                * lam.powi(4)
                * n.powi(2)
                * (n.powi(2) + n - 3.0)
                * (n - 1.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 24.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 1.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 5.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                    * (n + 2.0).powi(2)
                + 72.0
                    * lam.powi(2)
                    * n.powi(2)
                    * (n + 1.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n - 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 12.0
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (n.powi(2) + n - 1.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2))
            + 6.0 * lam.powi(4) * n.powi(2) * (n + 2.0) * (n - 1.0) * (n + 1.0).powi(2)
            + 4.0
                * lam.powi(3)
                * n
                * (n + 2.0)
                * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                * (2.0 * n.powi(2) + 2.0 * n - 1.0)
            + 12.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + n - 1.0)
                * (n.powi(2) + 2.0 * n - 1.0)
            - 2.0 * n * (n - 1.0) * (n + 3.0) * (n + 1.0) * (n + 2.0).powi(2))
        + b.powi(4)
            * (27.0
                * lam.powi(4)
                * n.powi(4)
                * (n - 2.0).powi(2)
                * (n + 3.0).powi(2)
                * (n - 1.0).powi(4)
                * (n + 2.0).powi(4)
                * (n + 1.0).powi(4)
                + 36.0
                    * lam.powi(3)
                    * n.powi(5)
                    * (n - 2.0)
                    * (n + 3.0)
                    * (2.0 * n.powi(2) + 2.0 * n - 9.0)
                    * (n - 1.0).powi(3)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4)
                + 54.0
                    * lam.powi(2)
                    * n.powi(5)
                    * (n - 2.0)
                    * (n + 3.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n - 1.0).powi(3)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4)
                - 9.0
                    * n.powi(6)
                    * (n + 3.0)
                    * (n - 1.0).powi(3)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(6))
        + b.powi(3)
            * (-108.0
                * lam.powi(4)
                * n.powi(3)
                * (n - 2.0)
                * (n + 3.0)
                * (n.powi(2) + n - 3.0)
                * (n - 1.0).powi(3)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(3)
                - 144.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (2.0 * n.powi(4) + 4.0 * n.powi(3) - 9.0 * n.powi(2) - 11.0 * n + 6.0)
                    * (n.powi(2) + n - 3.0)
                    * (n - 1.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 216.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n.powi(4) + 2.0 * n.powi(3) - 4.0 * n.powi(2) - 5.0 * n + 3.0)
                    * (n - 1.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 36.0
                    * n.powi(4)
                    * (n + 3.0)
                    * (n.powi(2) + n - 1.0)
                    * (n - 1.0).powi(2)
                    * (n + 2.0).powi(3)
                    * (n + 1.0).powi(4))
        + b.powi(2)
            * (18.0
                * lam.powi(4)
                * n.powi(2)
                * (5.0 * n.powi(4) + 10.0 * n.powi(3) - 25.0 * n.powi(2) - 30.0 * n + 54.0)
                * (n - 1.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 24.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 1.0)
                    * (10.0 * n.powi(6) + 30.0 * n.powi(5) - 35.0 * n.powi(4) - 120.0 * n.powi(3)
                        + 67.0 * n.powi(2)
                        + 132.0 * n
                        - 72.0)
                    * (n + 2.0).powi(2)
                + 36.0
                    * lam.powi(2)
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 1.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (5.0 * n.powi(4) + 10.0 * n.powi(3) - 15.0 * n.powi(2) - 20.0 * n + 12.0)
                    * (n + 2.0).powi(2)
                - 6.0
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (5.0 * n.powi(4) + 10.0 * n.powi(3) - 5.0 * n.powi(2) - 10.0 * n + 6.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2))
        + b * (36.0
            * lam.powi(4)
            * n.powi(2)
            * (n + 2.0)
            * (n - 1.0)
            * (n.powi(2) + n - 3.0)
            * (n + 1.0).powi(2)
            + 48.0
                * lam.powi(3)
                * n
                * (n - 1.0)
                * (2.0 * n.powi(2) + 2.0 * n - 3.0)
                * (n.powi(2) + n - 1.0)
                * (n + 2.0).powi(2)
            + 72.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n.powi(4) + 2.0 * n.powi(3) - 2.0 * n.powi(2) - 3.0 * n + 3.0)
            - 12.0
                * n
                * (n - 1.0)
                * (n + 3.0)
                * (n + 1.0)
                * (n.powi(2) + n - 1.0)
                * (n + 2.0).powi(2))
        + 3.0 * lam.powi(4) * n.powi(2) * (n + 1.0).powi(2)
        + 4.0 * lam.powi(3) * n * (n + 2.0) * (2.0 * n.powi(2) + 2.0 * n - 1.0)
        + 6.0 * lam.powi(2) * n * (n + 2.0) * (n.powi(2) + 2.0 * n - 1.0)
        - (n - 1.0) * (n + 3.0) * (n + 2.0).powi(2)
}

fn b_11(n: f64, a: f64, b: f64, lam: f64) -> f64 {
    a.powi(2)
        * (6.0
            * lam.powi(4)
            * n.powi(2)
            * (n - 1.0)
            * (n + 3.0)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
            + 8.0
                * lam.powi(3)
                * n.powi(2)
                * (2.0 * n.powi(2) + 4.0 * n - 3.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
            + 12.0
                * lam.powi(2)
                * n.powi(2)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
            - 2.0 * n.powi(2) * (n - 1.0) * (n + 3.0) * (n + 2.0).powi(2) * (n + 1.0).powi(2))
        + a * (b.powi(2)
            * (-36.0
                * lam.powi(4)
                * n.powi(3)
                * (n - 1.0).powi(2)
                * (n + 3.0).powi(2)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(4)
                - 24.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (4.0 * n.powi(4) + 16.0 * n.powi(3) + 20.0 * n.powi(2) + 8.0 * n - 27.0)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 72.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (n.powi(2) + 2.0 * n + 4.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 12.0
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (3.0 + 2.0 * n + n.powi(2))
                    * (n + 2.0).powi(3)
                    * (n + 1.0).powi(4))
            + b * (72.0
                * lam.powi(4)
                * n.powi(2)
                * (n - 1.0)
                * (n + 3.0)
                * (n.powi(2) + 2.0 * n - 2.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 48.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (2.0 * n.powi(2) + 4.0 * n - 3.0).powi(2)
                + 144.0
                    * lam.powi(2)
                    * n.powi(2)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n.powi(2) + 2.0 * n - 1.0).powi(2)
                - 24.0 * n.powi(3) * (n - 1.0) * (n + 3.0) * (n + 1.0).powi(2) * (n + 2.0).powi(3))
            + 12.0 * lam.powi(4) * n * (n + 2.0) * (n.powi(2) + 2.0 * n - 1.0) * (n + 1.0).powi(2)
            + 8.0
                * lam.powi(3)
                * n
                * (n + 2.0)
                * (2.0 * n.powi(2) + 4.0 * n - 1.0)
                * (2.0 * n.powi(2) + 4.0 * n + 3.0)
            + 24.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + 2.0 * n + 2.0)
                * (n.powi(2) + 2.0 * n - 1.0)
            - 4.0 * n * (n - 1.0) * (n + 3.0) * (n + 2.0) * (n + 1.0).powi(2))
        + b.powi(4)
            * (54.0
                * lam.powi(4)
                * n.powi(4)
                * (n + 4.0)
                * (n - 2.0)
                * (n - 1.0).powi(3)
                * (n + 3.0).powi(3)
                * (n + 2.0).powi(4)
                * (n + 1.0).powi(4)
                + 72.0
                    * lam.powi(3)
                    * n.powi(4)
                    * (2.0 * n.powi(4) + 8.0 * n.powi(3) - 5.0 * n.powi(2) - 26.0 * n + 12.0)
                    * (n - 1.0).powi(2)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4)
                + 108.0
                    * lam.powi(2)
                    * n.powi(4)
                    * (n.powi(2) + 2.0 * n - 2.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n - 1.0).powi(2)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4)
                - 18.0
                    * n.powi(5)
                    * (n - 1.0).powi(2)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(5)
                    * (n + 1.0).powi(6))
        + b.powi(3)
            * (-216.0
                * lam.powi(4)
                * n.powi(3)
                * (n.powi(2) + 2.0 * n - 5.0)
                * (n - 1.0).powi(2)
                * (n + 3.0).powi(2)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(4)
                - 288.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (2.0 * n.powi(2) + 4.0 * n - 7.0)
                    * (n.powi(4) + 4.0 * n.powi(3) + 4.0 * n.powi(2) - 3.0)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 432.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (n.powi(2) + 2.0 * n + 2.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n.powi(2) + 2.0 * n - 2.0)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 72.0
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (n.powi(4) + 4.0 * n.powi(3) + 4.0 * n.powi(2) - 3.0)
                    * (n + 2.0).powi(3)
                    * (n + 1.0).powi(4))
        + b.powi(2)
            * (36.0
                * lam.powi(4)
                * n.powi(2)
                * (n - 1.0)
                * (n + 3.0)
                * (5.0 * n.powi(4) + 20.0 * n.powi(3) - 13.0 * n.powi(2) - 66.0 * n + 16.0)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 48.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (10.0 * n.powi(4) + 40.0 * n.powi(3) - n.powi(2) - 82.0 * n + 30.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2)
                + 72.0
                    * lam.powi(2)
                    * n.powi(2)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (5.0 * n.powi(4) + 20.0 * n.powi(3) - 3.0 * n.powi(2) - 46.0 * n + 36.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2)
                - 12.0
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (5.0 * n.powi(4) + 20.0 * n.powi(3) + 7.0 * n.powi(2) - 26.0 * n - 12.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2))
        + b * (72.0
            * lam.powi(4)
            * n
            * (n + 2.0)
            * (n.powi(4) + 4.0 * n.powi(3) + 2.0 * n.powi(2) - 4.0 * n + 3.0)
            * (n + 1.0).powi(2)
            + 96.0
                * lam.powi(3)
                * n
                * (n + 2.0)
                * (3.0 + 25.0 * n.powi(4) - 8.0 * n
                    + 12.0 * n.powi(5)
                    + 20.0 * n.powi(3)
                    + 2.0 * n.powi(6))
            + 144.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n.powi(4) + 4.0 * n.powi(3) + 6.0 * n.powi(2) + 4.0 * n - 2.0)
            - 24.0 * n * (n - 1.0) * (n + 3.0) * (n + 2.0) * (n + 1.0).powi(4))
        + 6.0 * lam.powi(4) * n * (n + 2.0) * (n + 1.0).powi(2)
        + 8.0 * lam.powi(3) * n * (n + 2.0) * (2.0 * n.powi(2) + 4.0 * n + 3.0)
        + 12.0 * lam.powi(2) * (n.powi(2) + 2.0 * n + 2.0) * (n.powi(2) + 2.0 * n - 1.0)
        - 2.0 * n * (n - 1.0) * (n + 3.0) * (n + 2.0)
}

fn c_11(n: f64, a: f64, b: f64, lam: f64) -> f64 {
    a.powi(2)
        * (3.0
            * lam.powi(4)
            * n.powi(2)
            * (n + 3.0).powi(2)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
            + 4.0
                * lam.powi(3)
                * n.powi(2)
                * (n + 3.0)
                * (n + 1.0)
                * (2.0 * n.powi(2) + 6.0 * n + 1.0)
                * (n + 2.0).powi(2)
            + 6.0
                * lam.powi(2)
                * n.powi(2)
                * (n + 3.0)
                * (n + 1.0)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n + 2.0).powi(2)
            - n.powi(2) * (n - 1.0) * (n + 3.0) * (n + 2.0).powi(2) * (n + 1.0).powi(2))
        + a * (b.powi(2)
            * (-18.0
                * lam.powi(4)
                * n.powi(3)
                * (n - 1.0)
                * (n + 4.0)
                * (n + 3.0).powi(3)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(3)
                - 12.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (2.0 * n.powi(2) + 6.0 * n - 5.0)
                    * (2.0 * n.powi(2) + 6.0 * n + 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 36.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n.powi(2) + 3.0 * n - 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 6.0
                    * n.powi(3)
                    * (n - 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4))
            + b * (36.0
                * lam.powi(4)
                * n.powi(2)
                * (n.powi(2) + 3.0 * n - 1.0)
                * (n + 3.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 24.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n + 3.0)
                    * (n + 1.0)
                    * (2.0 * n.powi(2) + 6.0 * n - 1.0)
                    * (2.0 * n.powi(2) + 6.0 * n + 1.0)
                    * (n + 2.0).powi(2)
                + 72.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n + 1.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(2)
                - 12.0
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (n.powi(2) + 3.0 * n + 1.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2))
            + 6.0 * lam.powi(4) * n * (n + 3.0) * (n + 2.0).powi(2) * (n + 1.0).powi(2)
            + 4.0
                * lam.powi(3)
                * n
                * (n + 2.0)
                * (2.0 * n.powi(2) + 6.0 * n + 1.0)
                * (2.0 * n.powi(2) + 6.0 * n + 3.0)
            + 12.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + 3.0 * n + 1.0)
                * (n.powi(2) + 2.0 * n - 1.0)
            - 2.0 * n.powi(2) * (n - 1.0) * (n + 3.0) * (n + 2.0) * (n + 1.0))
        + b.powi(4)
            * (27.0
                * lam.powi(4)
                * n.powi(4)
                * (n - 1.0).powi(2)
                * (n + 4.0).powi(2)
                * (n + 3.0).powi(4)
                * (n + 2.0).powi(4)
                * (n + 1.0).powi(4)
                + 36.0
                    * lam.powi(3)
                    * n.powi(4)
                    * (n - 1.0)
                    * (n + 4.0)
                    * (2.0 * n.powi(2) + 6.0 * n - 5.0)
                    * (n + 3.0).powi(3)
                    * (n + 1.0).powi(4)
                    * (n + 2.0).powi(5)
                + 54.0
                    * lam.powi(2)
                    * n.powi(4)
                    * (n - 1.0)
                    * (n + 4.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n + 3.0).powi(3)
                    * (n + 1.0).powi(4)
                    * (n + 2.0).powi(5)
                - 9.0
                    * n.powi(4)
                    * (n - 1.0)
                    * (n + 3.0).powi(3)
                    * (n + 2.0).powi(6)
                    * (n + 1.0).powi(6))
        + b.powi(3)
            * (-108.0
                * lam.powi(4)
                * n.powi(3)
                * (n - 1.0)
                * (n + 4.0)
                * (n.powi(2) + 3.0 * n - 1.0)
                * (n + 3.0).powi(3)
                * (n + 2.0).powi(3)
                * (n + 1.0).powi(3)
                - 144.0
                    * lam.powi(3)
                    * n.powi(3)
                    * (2.0 * n.powi(4) + 12.0 * n.powi(3) + 15.0 * n.powi(2) - 9.0 * n - 8.0)
                    * (n.powi(2) + 3.0 * n - 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                - 216.0
                    * lam.powi(2)
                    * n.powi(3)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (n.powi(4) + 6.0 * n.powi(3) + 8.0 * n.powi(2) - 3.0 * n - 3.0)
                    * (n + 3.0).powi(2)
                    * (n + 1.0).powi(2)
                    * (n + 2.0).powi(3)
                + 36.0
                    * n.powi(3)
                    * (n - 1.0)
                    * (n.powi(2) + 3.0 * n + 1.0)
                    * (n + 3.0).powi(2)
                    * (n + 2.0).powi(4)
                    * (n + 1.0).powi(4))
        + b.powi(2)
            * (18.0
                * lam.powi(4)
                * n.powi(2)
                * (5.0 * n.powi(4) + 30.0 * n.powi(3) + 35.0 * n.powi(2) - 30.0 * n + 14.0)
                * (n + 3.0).powi(2)
                * (n + 2.0).powi(2)
                * (n + 1.0).powi(2)
                + 24.0
                    * lam.powi(3)
                    * n.powi(2)
                    * (n + 3.0)
                    * (n + 1.0)
                    * (10.0 * n.powi(6) + 90.0 * n.powi(5) + 265.0 * n.powi(4) + 240.0 * n.powi(3)
                        - 53.0 * n.powi(2)
                        - 24.0 * n
                        + 12.0)
                    * (n + 2.0).powi(2)
                + 36.0
                    * lam.powi(2)
                    * n.powi(2)
                    * (n + 3.0)
                    * (n + 1.0)
                    * (n.powi(2) + 2.0 * n - 1.0)
                    * (5.0 * n.powi(4) + 30.0 * n.powi(3) + 45.0 * n.powi(2) - 8.0)
                    * (n + 2.0).powi(2)
                - 6.0
                    * n.powi(2)
                    * (n - 1.0)
                    * (n + 3.0)
                    * (5.0 * n.powi(4) + 30.0 * n.powi(3) + 55.0 * n.powi(2) + 30.0 * n + 6.0)
                    * (n + 2.0).powi(2)
                    * (n + 1.0).powi(2))
        + b * (36.0
            * lam.powi(4)
            * n
            * (n + 3.0)
            * (n.powi(2) + 3.0 * n - 1.0)
            * (n + 2.0).powi(2)
            * (n + 1.0).powi(2)
            + 48.0
                * lam.powi(3)
                * n.powi(2)
                * (n + 3.0)
                * (n + 2.0)
                * (n.powi(2) + 3.0 * n + 1.0)
                * (2.0 * n.powi(2) + 6.0 * n + 1.0)
            + 72.0
                * lam.powi(2)
                * n
                * (n + 2.0)
                * (n.powi(2) + 2.0 * n - 1.0)
                * (n.powi(4) + 6.0 * n.powi(3) + 10.0 * n.powi(2) + 3.0 * n + 1.0)
            - 12.0
                * n.powi(2)
                * (n - 1.0)
                * (n + 3.0)
                * (n + 2.0)
                * (n + 1.0)
                * (n.powi(2) + 3.0 * n + 1.0))
        + 3.0 * lam.powi(4) * (n + 2.0).powi(2) * (n + 1.0).powi(2)
        + 4.0 * lam.powi(3) * n * (n + 2.0) * (2.0 * n.powi(2) + 6.0 * n + 3.0)
        + 6.0 * lam.powi(2) * n * (n + 2.0) * (n.powi(2) + 2.0 * n - 1.0)
        - n.powi(2) * (n - 1.0) * (n + 3.0)
}

/// The ω of a half-rule pair step, a root of A ω² + B ω + C = 0.
///
/// `lambda` is the second length of the pair over the first.
pub fn omega_pair_c1(p: ParamC1, n: usize, lambda: f64, branch: Branch) -> Result<f64> {
    let (a, b, nf) = (p.alpha, p.beta, n as f64);
    let qa = nonzero(a_11(nf, a, b, lambda), "omega pair")?;
    let qb = b_11(nf, a, b, lambda);
    let qc = c_11(nf, a, b, lambda);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant {
            context: "omega pair",
        });
    }
    Ok((-qb + branch.sign() * disc.sqrt()) / (2.0 * qa))
}

/// Middle rule from the roots of M_n + ωM_{n-1}.
pub fn middle_rule_c1(
    left: ParamC1,
    right: ParamC1,
    n: usize,
    omega: f64,
) -> Result<ReferenceRule> {
    if n == 0 {
        return Err(Error::InvalidInput("middle rule needs n >= 1".into()));
    }
    let nf = n as f64;
    let h = h_c1(left, right, nf);
    ReferenceRule::from_rooted(
        |x| {
            plus_omega(
                m_eval_c1(left, right, n, x),
                m_eval_c1(left, right, n - 1, x),
                omega,
            )
        },
        n,
        |x, d| {
            let lower = m_eval_c1(left, right, n - 1, x).value;
            Ok(2.0 * h * h / nonzero(nf * d * lower, "middle weight")?)
        },
    )
}

fn pair_coefficients(p: ParamC1, n: f64) -> [f64; 4] {
    let (a, b) = (p.alpha, p.beta);
    let qa = 9.0
        * n
        * n
        * (n + 2.0).powi(2)
        * (n + 1.0).powi(4)
        * (-a * (n + 3.0) * (n - 1.0)
            + 3.0
                * b
                * b
                * n
                * (n + 4.0)
                * (n - 2.0)
                * (n + 2.0)
                * (n + 3.0).powi(2)
                * (n - 1.0).powi(2)
            - 6.0 * b * (n + 3.0) * (n - 1.0) * (n * n + 2.0 * n - 4.0)
            - 1.0);
    let qb = 18.0
        * n
        * (n + 2.0)
        * (n + 1.0).powi(2)
        * (a * (n * n + 2.0 * n - 1.0)
            - 3.0
                * b
                * b
                * n
                * (n - 1.0)
                * (n + 3.0)
                * (n + 2.0)
                * (n * n + 2.0 * n - 4.0)
                * (n + 1.0).powi(2)
            + 6.0 * b * (n * n + 2.0 * n - 2.0) * (n * n + 2.0 * n - 1.0)
            + 1.0);
    let qc = 3.0
        * (a * (n + 1.0).powi(2) - 3.0 * b * b * n * n * (n + 2.0).powi(2) * (n + 1.0).powi(4)
            + 6.0 * b * n * (n + 2.0) * (n + 1.0).powi(2)
            + 1.0);
    let qd = 3.0
        * (n + 1.0).powi(2)
        * (a * n * (n + 2.0)
            - 3.0 * b * b * n * n * (n + 3.0) * (n - 1.0) * (n + 2.0).powi(2) * (n + 1.0).powi(2)
            + 6.0 * b * n * (n + 2.0) * (n * n + 2.0 * n - 1.0)
            + 1.0);
    [qa, qb, qc, qd]
}

/// Parameters of the two middle subintervals of an even-S half rule.
///
/// Returns (right parameters of the left middle subinterval, left parameters
/// of the right middle subinterval). `lambda` is the length of the right
/// middle subinterval over the left one.
pub fn middle_pair_params_c1(
    left: ParamC1,
    right: ParamC1,
    n: usize,
    lambda: f64,
) -> Result<(ParamC1, ParamC1)> {
    let nf = n as f64;
    let [a1, b1, c1, d1] = pair_coefficients(left, nf);
    let [a2, b2, c2, d2] = pair_coefficients(right, nf);
    let (b2, c2, d2) = (
        b2 * lambda.powi(2),
        c2 * lambda.powi(4),
        -d2 * lambda.powi(3),
    );
    let a3 = d2 * a1 - d1 * a2;
    let b3 = d2 * b1 - d1 * b2;
    let c3 = d2 * c1 - d1 * c2;
    let b4 = a2 * b1 - a1 * b2;
    let c4 = a2 * c1 - a1 * c2;
    let d4 = a2 * d1 - a1 * d2;
    let sq = b3 * b3 - 4.0 * a3 * c3;
    if sq < 0.0 {
        return Err(Error::NegativeDiscriminant {
            context: "middle pair",
        });
    }
    let beta = (-b3 - sq.sqrt()) / (2.0 * nonzero(a3, "middle pair")?);
    let alpha = -(c4 + b4 * beta) / nonzero(d4, "middle pair")?;
    Ok((
        ParamC1::new(alpha, beta),
        ParamC1::new(-alpha / lambda, beta / (lambda * lambda)),
    ))
}

fn c52(k: isize, x: f64) -> f64 {
    jet_or_zero(PolyFamily::Gegenbauer52, k, x)[0]
}

/// Q_n evaluated as a sum of Gegenbauer C^{(5/2)} polynomials.
pub fn gegenbauer_oracle_q_c1(p: ParamC1, n: usize, x: f64) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    let k = n as isize;
    let n = n as f64;
    c52(k, x) * 6.0 * f_c1(a, b, n) / ((n + 2.0) * (2.0 * n + 3.0))
        + c52(k - 1, x) * 6.0 * e_c1(a, b, n) / ((n + 1.0) * (n + 2.0))
        + c52(k - 2, x) * 6.0 * f_c1(a, b, n + 1.0) / ((n + 1.0) * (2.0 * n + 3.0))
}

/// M_n evaluated as a sum of Gegenbauer C^{(5/2)} polynomials.
pub fn gegenbauer_oracle_m_c1(left: ParamC1, right: ParamC1, n: usize, x: f64) -> f64 {
    let (al, bl, ar, br) = (left.alpha, left.beta, right.alpha, right.beta);
    let k = n as isize;
    let n = n as f64;
    let j0 = |a: f64, b: f64| {
        1.0 + (3.0 + n + n * n) * a + 6.0 * (6.0 + n * n + 2.0 * n.powi(3) + n.powi(4)) * b
            - 3.0
                * (n - 3.0)
                * (n - 2.0)
                * (n - 1.0)
                * n
                * (n + 1.0)
                * (n + 2.0)
                * (n + 3.0)
                * (n + 4.0)
                * b
                * b
    };
    let j1 = |a: f64, b: f64| {
        1.0 + n
            * (n + 1.0)
            * (a + 3.0
                * (n - 1.0)
                * (n + 2.0)
                * b
                * (2.0 - (n - 2.0) * n * (n + 1.0) * (n + 3.0) * b))
    };
    let j = (j0(al, bl) * j1(ar, br) + j0(ar, br) * j1(al, bl)) / 2.0
        + 108.0 * (n - 1.0) * n * (n + 1.0) * (n + 2.0) * (bl - br).powi(2);
    let bs = bl + br;
    let cc1 = (al - ar)
        * (3.0 * n * bs * (n - 1.0) * (n + 1.0) * (n + 2.0) - 2.0)
        * (3.0 * n * bs * (n - 2.0) * (n - 1.0) * (n + 1.0) - 2.0);
    let cc3 = (al - ar)
        * (3.0 * n * bs * (n - 1.0) * (n + 1.0) * (n + 2.0) - 2.0)
        * (3.0 * n * bs * (n + 1.0) * (n + 2.0) * (n + 3.0) - 2.0);
    let f13 = |m: f64| {
        let q = (m - 1.0).powi(2) * (m + 1.0).powi(2);
        (bl - br)
            * m
            * m
            * (48.0 - 144.0 * (m - 2.0) * (m + 2.0) * (m * m - 6.0) * q * bl * br
                + 12.0 * (m - 1.0) * (m + 1.0) * (al + ar)
                - 48.0 * q * bs
                - 9.0
                    * (m - 2.0)
                    * (m + 2.0)
                    * q
                    * (3.0 * bl * ar + 3.0 * al * br + bl * al + ar * br))
    };
    c52(k, x) * 3.0 * h_c1(left, right, n) / ((2.0 * n + 1.0) * (2.0 * n + 3.0))
        - c52(k - 2, x) * 6.0 * j / ((2.0 * n - 1.0) * (2.0 * n + 3.0))
        + c52(k - 4, x) * 3.0 * h_c1(left, right, n + 1.0) / ((2.0 * n - 1.0) * (2.0 * n + 1.0))
        + (c52(k - 1, x) * (cc1 + f13(n)) - c52(k - 3, x) * (cc3 + f13(n + 1.0))) * 3.0
            / ((2.0 * n + 1.0) * 4.0)
}

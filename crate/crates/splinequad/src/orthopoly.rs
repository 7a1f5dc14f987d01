//! Classical orthogonal polynomials and a real-root finder.
//!
//! The five families used by the rule constructions are evaluated through
//! their three-term recurrences, differentiated term by term so that values
//! and derivatives come out of a single O(n) pass.
//!
//! Roots are found by sampling at Chebyshev points, forming the colleague
//! matrix of the recovered Chebyshev series and polishing each real
//! eigenvalue with Newton's method on the analytic derivative.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default search bracket for roots on the reference interval.
pub const DEFAULT_BRACKET: (f64, f64) = (-1.0 - 1e-10, 1.0 + 1e-10);

const IMAG_TOL: f64 = 1e-8;
const RESIDUAL_TOL: f64 = 1e-13;
const MAX_NEWTON: usize = 60;

/// The polynomial families the rule constructions are built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyFamily {
    /// Legendre P_n.
    Legendre,
    /// Jacobi P_n^{(1,0)}.
    Jacobi10,
    /// Jacobi P_n^{(2,0)}.
    Jacobi20,
    /// Gegenbauer C_n^{(3/2)}.
    Gegenbauer32,
    /// Gegenbauer C_n^{(5/2)}.
    Gegenbauer52,
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 5] = [
        PolyFamily::Legendre,
        PolyFamily::Jacobi10,
        PolyFamily::Jacobi20,
        PolyFamily::Gegenbauer32,
        PolyFamily::Gegenbauer52,
    ];

    /// Recurrence coefficients (a, b, c) of p_k = (a x + b) p_{k-1} - c p_{k-2}.
    fn recurrence(self, k: usize) -> (f64, f64, f64) {
        let k = k as f64;
        match self {
            PolyFamily::Legendre => jacobi_a0(0.0, k),
            PolyFamily::Jacobi10 => jacobi_a0(1.0, k),
            PolyFamily::Jacobi20 => jacobi_a0(2.0, k),
            PolyFamily::Gegenbauer32 => gegenbauer(1.5, k),
            PolyFamily::Gegenbauer52 => gegenbauer(2.5, k),
        }
    }

    /// Value at x = 1 under the classical normalization.
    pub fn value_at_one(self, n: usize) -> f64 {
        let (top, _) = match self {
            PolyFamily::Legendre => (0, 0),
            PolyFamily::Jacobi10 => (1, 0),
            PolyFamily::Jacobi20 => (2, 0),
            PolyFamily::Gegenbauer32 => (2, 0),
            PolyFamily::Gegenbauer52 => (4, 0),
        };
        binomial(n + top, n)
    }
}

fn jacobi_a0(a: f64, k: f64) -> (f64, f64, f64) {
    if k == 1.0 {
        return ((a + 2.0) / 2.0, a / 2.0, 0.0);
    }
    let d = 2.0 * k * (k + a) * (2.0 * k + a - 2.0);
    let s = 2.0 * k + a - 1.0;
    (
        s * (2.0 * k + a) * (2.0 * k + a - 2.0) / d,
        s * a * a / d,
        2.0 * (k + a - 1.0) * (k - 1.0) * (2.0 * k + a) / d,
    )
}

fn gegenbauer(lambda: f64, k: f64) -> (f64, f64, f64) {
    (
        2.0 * (k + lambda - 1.0) / k,
        0.0,
        (k + 2.0 * lambda - 2.0) / k,
    )
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Value and first two derivatives of a polynomial at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EvalTriple {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Value and derivatives up to order four.
pub(crate) type Jet = [f64; 5];

/// Evaluates `family` of degree `n` at `x` with first and second derivatives.
pub fn eval(family: PolyFamily, n: usize, x: f64) -> EvalTriple {
    let j = jet(family, n, x);
    EvalTriple {
        value: j[0],
        d1: j[1],
        d2: j[2],
    }
}

/// Value and derivatives up to order four of `family` of degree `n` at `x`.
pub(crate) fn jet(family: PolyFamily, n: usize, x: f64) -> Jet {
    let mut prev: Jet = [0.0; 5];
    let mut cur: Jet = [1.0, 0.0, 0.0, 0.0, 0.0];
    for k in 1..=n {
        let (a, b, c) = family.recurrence(k);
        let mut next = [0.0; 5];
        for d in 0..5 {
            next[d] = (a * x + b) * cur[d] - c * prev[d];
            if d > 0 {
                next[d] += d as f64 * a * cur[d - 1];
            }
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Jet of a polynomial of degree `n` in `family`, zero for negative degree.
pub(crate) fn jet_or_zero(family: PolyFamily, n: isize, x: f64) -> Jet {
    if n < 0 {
        [0.0; 5]
    } else {
        jet(family, n as usize, x)
    }
}

/// Evaluates sum_i (p_i + q_i x) P^{(i)}(x) and its first two derivatives.
///
/// `terms[i] = (p_i, q_i)` multiplies the i-th derivative of the base
/// polynomial whose jet is `j`.
pub(crate) fn combine(terms: &[(f64, f64)], j: &Jet, x: f64) -> EvalTriple {
    let mut out = EvalTriple::default();
    for (i, &(p, q)) in terms.iter().enumerate() {
        let u = p + q * x;
        out.value += u * j[i];
        out.d1 += q * j[i] + u * j[i + 1];
        out.d2 += 2.0 * q * j[i + 1] + u * j[i + 2];
    }
    out
}

/// All real roots of a polynomial of exact degree `degree` inside `bracket`.
///
/// `f` returns the value and first derivative. Exactly `degree` distinct
/// roots must lie in the bracket, otherwise [`Error::RootCountMismatch`] is
/// returned.
pub fn real_roots<F>(f: F, degree: usize, bracket: (f64, f64)) -> Result<Vec<f64>>
where
    F: Fn(f64) -> (f64, f64),
{
    if degree == 0 {
        return Ok(Vec::new());
    }
    let coeffs = chebyshev_coefficients(|x| f(x).0, degree);
    let width = bracket.1 - bracket.0;
    let mut roots = Vec::with_capacity(degree);
    for z in colleague_eigenvalues(&coeffs) {
        if !z.re.is_finite() || z.im.abs() > IMAG_TOL * (1.0 + z.re.abs()) {
            continue;
        }
        if z.re < bracket.0 - 1e-3 * width || z.re > bracket.1 + 1e-3 * width {
            continue;
        }
        let x = polish(&f, z.re)?;
        if x >= bracket.0 && x <= bracket.1 {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
    if roots.len() != degree {
        return Err(Error::RootCountMismatch {
            expected: degree,
            found: roots.len(),
        });
    }
    Ok(roots)
}

fn polish<F>(f: &F, mut x: f64) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    for iter in 0..MAX_NEWTON {
        let (v, d) = f(x);
        if v == 0.0 {
            return Ok(x);
        }
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let step = v / d;
        x -= step;
        let settled = step.abs() <= 1e-15 * x.abs().max(1.0);
        if settled || (iter >= 2 && v.abs() <= RESIDUAL_TOL * d.abs().max(1.0)) {
            return Ok(x);
        }
    }
    let (v, d) = f(x);
    if v.abs() <= RESIDUAL_TOL * d.abs().max(1.0) {
        Ok(x)
    } else {
        Err(Error::ConvergenceFailure { x })
    }
}

/// Chebyshev coefficients c_0..c_n of the degree-n interpolant at first-kind points.
fn chebyshev_coefficients<F: Fn(f64) -> f64>(f: F, n: usize) -> Vec<f64> {
    let m = n + 1;
    let theta: Vec<f64> = (0..m)
        .map(|j| std::f64::consts::PI * (j as f64 + 0.5) / m as f64)
        .collect();
    let values: Vec<f64> = theta.iter().map(|t| f(t.cos())).collect();
    (0..m)
        .map(|k| {
            let s: f64 = values
                .iter()
                .zip(&theta)
                .map(|(v, t)| v * (k as f64 * t).cos())
                .sum();
            let c = 2.0 * s / m as f64;
            if k == 0 {
                c / 2.0
            } else {
                c
            }
        })
        .collect()
}

/// Eigenvalues of the colleague matrix of sum_k c_k T_k.
fn colleague_eigenvalues(c: &[f64]) -> Vec<nalgebra::Complex<f64>> {
    let n = c.len() - 1;
    let lead = c[n];
    if n == 1 {
        return vec![nalgebra::Complex::new(-c[0] / lead, 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    m[(0, 1)] = 1.0;
    for k in 1..n {
        m[(k, k - 1)] = 0.5;
        if k + 1 < n {
            m[(k, k + 1)] = 0.5;
        }
    }
    for k in 0..n {
        m[(n - 1, k)] -= c[k] / (2.0 * lead);
    }
    m.complex_eigenvalues().iter().copied().collect()
}

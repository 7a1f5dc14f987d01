//! Limit rules for the interior subintervals of a long uniform partition.
//!
//! On a uniform partition the parameter recursion has an attracting fixed
//! point, and the boundary rule at that point is the rule of an interior
//! subinterval as S grows. The closed forms are built on Gegenbauer
//! polynomials; [`fixed_point`] iterates the recursion to certify them.

use serde::{Deserialize, Serialize};

use crate::engine::Family;
use crate::error::{Error, Result};
use crate::family_c0::{nonzero, omega_pair_c0, step_alpha, ParamC0, ReferenceRule};
use crate::family_c1::{omega_pair_c1, step_ab, Branch, ParamC1};
use crate::orthopoly::{jet, jet_or_zero, PolyFamily};

const MAX_ITERATIONS: usize = 500;
const STEP_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitFamily {
    C0Interior,
    C1Interior,
}

/// Nodes and weights on [-1, 1] of an interior subinterval in the limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub family: LimitFamily,
}

/// Limit rule for C0 full rules with `n` nodes per subinterval.
///
/// The nodes are the roots of C_n + δC_{n-1}, δ = √((n+2)/n), with
/// C = C^{(3/2)}; they are not symmetric about 0 for n ≥ 2.
pub fn realline_rule_c0(n: usize) -> Result<LimitRule> {
    realline_rule_c0_signed(n, 1.0)
}

/// As [`realline_rule_c0`] with δ replaced by `sign`·δ, which reflects the rule.
pub fn realline_rule_c0_signed(n: usize, sign: f64) -> Result<LimitRule> {
    if n == 0 {
        return Err(Error::InvalidInput("limit rule needs n >= 1".into()));
    }
    let k = n as isize;
    let nf = n as f64;
    let delta = sign * ((nf + 2.0) / nf).sqrt();
    let g = PolyFamily::Gegenbauer32;
    let rule = ReferenceRule::from_rooted(
        |x| {
            let hi = jet(g, n, x);
            let lo = jet_or_zero(g, k - 1, x);
            (hi[0] + delta * lo[0], hi[1] + delta * lo[1])
        },
        n,
        |x, d| {
            let s = jet_or_zero(g, k - 1, x)[0] * (2.0 * nf + 1.0 + delta * x * nf)
                - jet_or_zero(g, k - 2, x)[0] * (nf + 1.0) * x;
            Ok(2.0 * (nf + 1.0) * (2.0 * nf + 1.0) / nonzero(d * s, "limit weight")?)
        },
    )?;
    Ok(LimitRule {
        nodes: rule.nodes,
        weights: rule.weights,
        family: LimitFamily::C0Interior,
    })
}

/// Limit rule for C1 full rules with `n` nodes per subinterval.
///
/// The first node is -1; the others are the roots of C_{n-1}^{(5/2)}.
pub fn realline_rule_c1(n: usize) -> Result<LimitRule> {
    if n < 2 {
        return Err(Error::InvalidInput("limit rule needs n >= 2".into()));
    }
    let k = n as isize;
    let nf = n as f64;
    let g = PolyFamily::Gegenbauer52;
    let inner = ReferenceRule::from_rooted(
        |x| {
            let j = jet(g, n - 1, x);
            (j[0], j[1])
        },
        n - 1,
        |x, d| {
            let lower = jet_or_zero(g, k - 2, x)[0];
            let den = d * lower * (1.0 - x * x).powi(2);
            Ok(2.0 / 9.0 * nf * (nf + 1.0) * (nf + 2.0) / nonzero(den, "limit weight")?)
        },
    )?;
    let w1 =
        16.0 * (2.0 * nf * nf + 6.0 * nf + 1.0) / (3.0 * nf * (nf + 1.0) * (nf + 2.0) * (nf + 3.0));
    let mut nodes = vec![-1.0];
    nodes.extend(inner.nodes);
    let mut weights = vec![w1];
    weights.extend(inner.weights);
    Ok(LimitRule {
        nodes,
        weights,
        family: LimitFamily::C1Interior,
    })
}

/// A parameter state of either continuity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitParams {
    C0(ParamC0),
    C1(ParamC1),
}

/// The limit of a recursion and the number of map applications it took.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub params: LimitParams,
    pub iterations: usize,
}

/// One application of the uniform-partition map.
///
/// Full mode steps once with `n` nodes; half mode applies the two-subinterval
/// composite of a half-rule pair (n nodes with ω, then n - 1 nodes).
pub fn uniform_map(params: LimitParams, mode: Family, n: usize) -> Result<LimitParams> {
    Ok(match (params, mode) {
        (LimitParams::C0(p), Family::Full) => LimitParams::C0(step_alpha(p, n, 1.0, None)?),
        (LimitParams::C1(p), Family::Full) => LimitParams::C1(step_ab(p, n, 1.0, None)?),
        (LimitParams::C0(p), Family::Half) => {
            let w = omega_pair_c0(p, n, 1.0)?;
            let mid = step_alpha(p, n, 1.0, Some(w))?;
            LimitParams::C0(step_alpha(mid, n - 1, 1.0, None)?)
        }
        (LimitParams::C1(p), Family::Half) => {
            let w = omega_pair_c1(p, n, 1.0, Branch::Plus)?;
            let mid = step_ab(p, n, 1.0, Some(w))?;
            LimitParams::C1(step_ab(mid, n - 1, 1.0, None)?)
        }
    })
}

fn distance(a: LimitParams, b: LimitParams) -> f64 {
    match (a, b) {
        (LimitParams::C0(x), LimitParams::C0(y)) => (x.alpha - y.alpha).abs(),
        (LimitParams::C1(x), LimitParams::C1(y)) => {
            (x.alpha - y.alpha).abs().max((x.beta - y.beta).abs())
        }
        _ => f64::INFINITY,
    }
}

/// Iterates [`uniform_map`] from the zero state until successive states
/// differ by less than 1e-13.
pub fn fixed_point(continuity: usize, mode: Family, n: usize) -> Result<FixedPoint> {
    if n == 0 || (mode == Family::Half && n < 2) {
        return Err(Error::InvalidInput(format!(
            "no fixed-point map for n = {n}"
        )));
    }
    let mut p = match continuity {
        0 => LimitParams::C0(ParamC0::default()),
        1 => LimitParams::C1(ParamC1::default()),
        c => {
            return Err(Error::InvalidInput(format!(
                "continuity must be 0 or 1, got {c}"
            )))
        }
    };
    for iterations in 1..=MAX_ITERATIONS {
        let next = uniform_map(p, mode, n)?;
        let d = distance(p, next);
        p = next;
        if d < STEP_TOL {
            return Ok(FixedPoint {
                params: p,
                iterations,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Fixed points of the C1 full map found by Newton's method from a grid of seeds.
///
/// Besides the attractor reached from the zero state the map can have other
/// fixed points; they are reported here but no rule is built from them.
pub fn fixed_points_c1(n: usize) -> Vec<ParamC1> {
    let nf = n as f64;
    let scale_a = 1.0 / (nf + 1.0).powi(2);
    let scale_b = scale_a * scale_a;
    let residual = |p: ParamC1| -> Option<(f64, f64)> {
        let q = step_ab(p, n, 1.0, None).ok()?;
        Some((q.alpha - p.alpha, q.beta - p.beta))
    };
    let mut found: Vec<ParamC1> = Vec::new();
    for i in -4..=4 {
        for j in -4..=4 {
            let mut p = ParamC1::new(i as f64 * scale_a, j as f64 * scale_b);
            let mut converged = false;
            for _ in 0..60 {
                let Some((fa, fb)) = residual(p) else { break };
                if fa.abs() < 1e-14 * scale_a.max(p.alpha.abs())
                    && fb.abs() < 1e-14 * scale_b.max(p.beta.abs())
                {
                    converged = true;
                    break;
                }
                let (ha, hb) = (
                    1e-7 * scale_a.max(p.alpha.abs()),
                    1e-7 * scale_b.max(p.beta.abs()),
                );
                let (Some(ra), Some(rb)) = (
                    residual(ParamC1::new(p.alpha + ha, p.beta)),
                    residual(ParamC1::new(p.alpha, p.beta + hb)),
                ) else {
                    break;
                };
                let (j11, j21) = ((ra.0 - fa) / ha, (ra.1 - fb) / ha);
                let (j12, j22) = ((rb.0 - fa) / hb, (rb.1 - fb) / hb);
                let det = j11 * j22 - j12 * j21;
                if det == 0.0 || !det.is_finite() {
                    break;
                }
                p = ParamC1::new(
                    p.alpha - (j22 * fa - j12 * fb) / det,
                    p.beta - (-j21 * fa + j11 * fb) / det,
                );
            }
            let fresh = found.iter().all(|q| {
                (q.alpha - p.alpha).abs() > 1e-9 * scale_a.max(p.alpha.abs())
                    || (q.beta - p.beta).abs() > 1e-9 * scale_b.max(p.beta.abs())
            });
            if converged && fresh {
                found.push(p);
            }
        }
    }
    found.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    found
}

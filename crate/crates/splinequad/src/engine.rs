//! Assembly of spline quadrature rules on a partition.
//!
//! A full rule sweeps from both ends towards the middle subinterval S_M,
//! emitting N nodes per subinterval and closing with N + 1 nodes in S_M. A
//! half rule sweeps in pairs of subintervals carrying N and N - 1 nodes and
//! closes with one (odd S) or two (even S) middle subintervals.
//!
//! Every reference rule on [-1, 1] is mapped to subinterval s by
//! x -> t_{s-1} + (x + 1) L_s / 2 and w -> w L_s / 2; the right sweep is run
//! on mirrored geometry and emits reflected nodes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family_c0::{self as c0, ParamC0, ReferenceRule};
use crate::family_c1::{self as c1, Branch, ParamC1};
use crate::splinecheck::SplineSpace;

const MAX_LENGTH_RATIO: f64 = 1e8;
const PIN_TOL: f64 = 1e-12;

/// The interval [a, b] cut into subintervals of the given lengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub a: f64,
    pub b: f64,
    pub lengths: Vec<f64>,
}

impl Partition {
    /// Validates that the lengths are positive and add up to b - a.
    pub fn new(a: f64, b: f64, lengths: Vec<f64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidInput(
                "partition needs at least one subinterval".into(),
            ));
        }
        if let Some(i) = lengths.iter().position(|l| !(l.is_finite() && *l > 0.0)) {
            return Err(Error::InvalidInput(format!(
                "subinterval {} has non-positive length {}",
                i + 1,
                lengths[i]
            )));
        }
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidInput(format!("invalid interval [{a}, {b}]")));
        }
        let (lo, hi) = lengths
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), &l| {
                (lo.min(l), hi.max(l))
            });
        if hi / lo > MAX_LENGTH_RATIO {
            return Err(Error::InvalidInput(format!(
                "length ratio {:e} exceeds {MAX_LENGTH_RATIO:e}",
                hi / lo
            )));
        }
        let sum: f64 = lengths.iter().sum();
        if (sum - (b - a)).abs() > 1e-12 * (b - a).abs().max(sum) {
            return Err(Error::InvalidInput(format!(
                "lengths sum to {sum}, interval has length {}",
                b - a
            )));
        }
        Ok(Self { a, b, lengths })
    }

    /// The partition of [a, a + sum(lengths)].
    pub fn from_lengths(a: f64, lengths: Vec<f64>) -> Result<Self> {
        let b = a + lengths.iter().sum::<f64>();
        Self::new(a, b, lengths)
    }

    /// `count` equal subintervals of [a, b].
    pub fn uniform(a: f64, b: f64, count: usize) -> Result<Self> {
        Self::new(a, b, vec![(b - a) / count as f64; count])
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// Breakpoints t_0 = a, ..., t_S = b.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut t = Vec::with_capacity(self.len() + 1);
        t.push(self.a);
        let mut acc = self.a;
        for (i, l) in self.lengths.iter().enumerate() {
            acc = if i + 1 == self.len() { self.b } else { acc + l };
            t.push(acc);
        }
        t
    }

    /// Inner breakpoints t_1, ..., t_{S-1}.
    pub fn inner_knots(&self) -> Vec<f64> {
        let t = self.breakpoints();
        t[1..t.len() - 1].to_vec()
    }

    /// The partition traversed from b to a, as a partition of [a, b].
    pub fn reversed(&self) -> Self {
        Self {
            a: self.a,
            b: self.b,
            lengths: self.lengths.iter().rev().copied().collect(),
        }
    }
}

/// Which family of rules to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// S_{2N,0} and S_{2N+1,1}.
    Full,
    /// S_{2N-1,0} and S_{2N,1}.
    Half,
}

/// How the free parameter of a one-parameter family is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeParameter {
    DefaultZero,
    Value(f64),
    PinNode(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleRequest {
    /// 0 or 1.
    pub continuity: usize,
    /// N.
    pub nodes_per_subinterval: usize,
    pub family: Family,
    /// S_M, one-based.
    pub middle_index: usize,
    pub free_parameter: FreeParameter,
}

impl RuleRequest {
    /// Polynomial degree D of the target spline space.
    pub fn degree(&self) -> usize {
        let n = self.nodes_per_subinterval;
        match (self.continuity, self.family) {
            (0, Family::Full) => 2 * n,
            (0, Family::Half) => 2 * n - 1,
            (_, Family::Full) => 2 * n + 1,
            (_, Family::Half) => 2 * n,
        }
    }

    /// Whether the rules form a one-parameter family on `s` subintervals.
    pub fn has_free_parameter(&self, s: usize) -> bool {
        match (self.continuity, self.family) {
            (0, Family::Full) => true,
            (0, Family::Half) => s.is_multiple_of(2),
            (_, Family::Full) => false,
            (_, Family::Half) => s % 2 == 1,
        }
    }

    fn validate(&self, part: &Partition) -> Result<()> {
        let s = part.len();
        if self.continuity > 1 {
            return Err(Error::InvalidInput(format!(
                "continuity must be 0 or 1, got {}",
                self.continuity
            )));
        }
        if self.nodes_per_subinterval == 0 {
            return Err(Error::InvalidInput(
                "nodes per subinterval must be at least 1".into(),
            ));
        }
        if self.middle_index == 0 || self.middle_index > s {
            return Err(Error::InvalidInput(format!(
                "middle index {} outside 1..={s}",
                self.middle_index
            )));
        }
        if self.family == Family::Half && self.middle_index.is_multiple_of(2) {
            return Err(Error::UnsupportedConfiguration(format!(
                "half rules need an odd middle index, got {}",
                self.middle_index
            )));
        }
        let free = self.has_free_parameter(s);
        match self.free_parameter {
            FreeParameter::Value(v) if !v.is_finite() => Err(Error::InvalidInput(format!(
                "free parameter {v} is not finite"
            ))),
            FreeParameter::PinNode(x) if !x.is_finite() => {
                Err(Error::InvalidInput(format!("pin target {x} is not finite")))
            }
            FreeParameter::Value(v) if !free && v != 0.0 => Err(Error::UnsupportedConfiguration(
                "this family has no free parameter".into(),
            )),
            FreeParameter::PinNode(_) if !free => Err(Error::UnsupportedConfiguration(
                "this family has no free parameter to pin".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Node counts of a request on a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub counts: Vec<usize>,
    pub total: usize,
    pub degree: usize,
    pub dimension: usize,
}

impl Plan {
    /// 2 * total - dim: 0 for Gaussian rules, 1 for one-parameter families.
    pub fn excess(&self) -> isize {
        2 * self.total as isize - self.dimension as isize
    }
}

/// Nodes per subinterval for `req` on `part`.
pub fn plan(req: &RuleRequest, part: &Partition) -> Result<Plan> {
    req.validate(part)?;
    let s = part.len();
    let m = req.middle_index;
    let n = req.nodes_per_subinterval;
    let mut counts = vec![n; s];
    match req.family {
        Family::Full => counts[m - 1] = n + 1,
        Family::Half => {
            for i in (1..m - 1).step_by(2) {
                counts[i] = n - 1;
            }
            let right_end = if s % 2 == 1 { m + 1 } else { m + 2 };
            for k in (0..s + 1 - right_end).step_by(2) {
                counts[s - 2 - k] = n - 1;
            }
            if s % 2 == 1 && req.continuity == 1 {
                counts[m - 1] = n + 1;
            }
        }
    }
    let total = counts.iter().sum();
    let degree = req.degree();
    let dimension = degree + 1 + (s - 1) * (degree - req.continuity);
    let plan = Plan {
        counts,
        total,
        degree,
        dimension,
    };
    let expected = if req.has_free_parameter(s) { 1 } else { 0 };
    debug_assert_eq!(plan.excess(), expected);
    Ok(plan)
}

/// The nodes and weights of one subinterval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubintervalRule {
    /// One-based subinterval index.
    pub index: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleMeta {
    pub degree: usize,
    pub continuity: usize,
    pub dimension: usize,
    pub total_nodes: usize,
    /// The free parameter used, for one-parameter families.
    pub free_parameter: Option<f64>,
    /// The square-root branch taken for ω in C1 half rules.
    pub omega_branch: Option<Branch>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub per_subinterval: Vec<SubintervalRule>,
    /// All (node, weight) pairs sorted by node.
    pub flat: Vec<(f64, f64)>,
    pub meta: RuleMeta,
}

impl QuadratureRule {
    /// The spline space the rule is built to integrate exactly.
    pub fn space(&self, part: &Partition) -> Result<SplineSpace> {
        SplineSpace::new(
            self.meta.degree,
            self.meta.continuity,
            part.inner_knots(),
            part.a,
            part.b,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum State {
    C0(ParamC0),
    C1(ParamC1),
}

impl State {
    fn zero(continuity: usize) -> Self {
        if continuity == 0 {
            State::C0(ParamC0::default())
        } else {
            State::C1(ParamC1::default())
        }
    }

    fn boundary(self, n: usize, omega: Option<f64>) -> Result<ReferenceRule> {
        if n == 0 {
            return Ok(ReferenceRule::default());
        }
        match self {
            State::C0(p) => c0::boundary_rule_c0(p, n, omega),
            State::C1(p) => c1::boundary_rule_c1(p, n, omega),
        }
    }

    fn step(self, n: usize, lambda: f64, omega: Option<f64>) -> Result<Self> {
        Ok(match self {
            State::C0(p) => State::C0(c0::step_alpha(p, n, lambda, omega)?),
            State::C1(p) => State::C1(c1::step_ab(p, n, lambda, omega)?),
        })
    }

    fn omega_pair(self, n: usize, lambda: f64, branch: Branch) -> Result<f64> {
        match self {
            State::C0(p) => c0::omega_pair_c0(p, n, lambda),
            State::C1(p) => c1::omega_pair_c1(p, n, lambda, branch),
        }
    }
}

fn middle(left: State, right: State, n: usize, omega: f64) -> Result<ReferenceRule> {
    match (left, right) {
        (State::C0(l), State::C0(r)) => c0::middle_rule_c0(l, r, n, omega),
        (State::C1(l), State::C1(r)) => c1::middle_rule_c1(l, r, n, omega),
        _ => unreachable!("sweeps share the continuity"),
    }
}

/// Reference rules of one sweep in processing order, and the final state.
struct Sweep {
    rules: Vec<ReferenceRule>,
    state: State,
}

/// A full-rule sweep over `lengths[..count]`, in processing order.
fn full_sweep(continuity: usize, n: usize, lengths: &[f64], count: usize) -> Result<Sweep> {
    let mut state = State::zero(continuity);
    let mut rules = Vec::with_capacity(count);
    for i in 0..count {
        rules.push(state.boundary(n, None).map_err(|e| e.at(i))?);
        state = state
            .step(n, lengths[i + 1] / lengths[i], None)
            .map_err(|e| e.at(i))?;
    }
    Ok(Sweep { rules, state })
}

/// A half-rule sweep over `lengths[..count]` in pairs, in processing order.
fn half_sweep(
    continuity: usize,
    n: usize,
    lengths: &[f64],
    count: usize,
    branch: Branch,
) -> Result<Sweep> {
    let mut state = State::zero(continuity);
    let mut rules = Vec::with_capacity(count);
    for i in (0..count).step_by(2) {
        let lambda = lengths[i + 1] / lengths[i];
        let omega = state.omega_pair(n, lambda, branch).map_err(|e| e.at(i))?;
        rules.push(state.boundary(n, Some(omega)).map_err(|e| e.at(i))?);
        state = state.step(n, lambda, Some(omega)).map_err(|e| e.at(i))?;
        rules.push(state.boundary(n - 1, None).map_err(|e| e.at(i + 1))?);
        state = state
            .step(n - 1, lengths[i + 2] / lengths[i + 1], None)
            .map_err(|e| e.at(i + 1))?;
    }
    Ok(Sweep { rules, state })
}

/// Parameter states reaching the middle from both ends, with the side rules.
struct Sides {
    left: Sweep,
    right: Sweep,
}

fn sweeps(req: &RuleRequest, part: &Partition, branch: Branch) -> Result<Sides> {
    let s = part.len();
    let m = req.middle_index;
    let n = req.nodes_per_subinterval;
    let c = req.continuity;
    let rev: Vec<f64> = part.lengths.iter().rev().copied().collect();
    // Errors carry zero-based positions in processing order until remapped.
    let remap_left = |e: Error| remap(e, |i| i + 1);
    let remap_right = |e: Error| remap(e, |i| s - i);
    match req.family {
        Family::Full => Ok(Sides {
            left: full_sweep(c, n, &part.lengths, m - 1).map_err(remap_left)?,
            right: full_sweep(c, n, &rev, s - m).map_err(remap_right)?,
        }),
        Family::Half => {
            let right_count = if s % 2 == 1 { s - m } else { s - m - 1 };
            Ok(Sides {
                left: half_sweep(c, n, &part.lengths, m - 1, branch).map_err(remap_left)?,
                right: half_sweep(c, n, &rev, right_count, branch).map_err(remap_right)?,
            })
        }
    }
}

fn remap(e: Error, f: impl Fn(usize) -> usize) -> Error {
    match e {
        Error::AtSubinterval { index, source } => Error::AtSubinterval {
            index: f(index),
            source,
        },
        other => other,
    }
}

/// The ω-dependent middle rules, as (one-based index, reference rule).
fn middle_rules(
    req: &RuleRequest,
    part: &Partition,
    sides: &Sides,
    free: f64,
) -> Result<Vec<(usize, ReferenceRule)>> {
    let s = part.len();
    let m = req.middle_index;
    let n = req.nodes_per_subinterval;
    let (l, r) = (sides.left.state, sides.right.state);
    let at = |e: Error| e.at(m);
    match (req.family, s % 2 == 1, l, r) {
        (Family::Full, _, _, State::C0(_)) => Ok(vec![(m, middle(l, r, n + 1, free).map_err(at)?)]),
        (Family::Full, _, _, _) => Ok(vec![(m, middle(l, r, n + 1, 0.0).map_err(at)?)]),
        (Family::Half, true, _, State::C0(_)) => Ok(vec![(m, middle(l, r, n, 0.0).map_err(at)?)]),
        (Family::Half, true, _, _) => Ok(vec![(m, middle(l, r, n + 1, free).map_err(at)?)]),
        (Family::Half, false, _, _) => {
            let lambda = part.lengths[m] / part.lengths[m - 1];
            let (rm, lm) = match (l, r) {
                (State::C0(_), _) => {
                    let (rm, lm) = c0::middle_pair_params_c0(free, lambda);
                    (State::C0(rm), State::C0(lm))
                }
                (State::C1(lp), State::C1(rp)) => {
                    let (rm, lm) = c1::middle_pair_params_c1(lp, rp, n, lambda).map_err(at)?;
                    (State::C1(rm), State::C1(lm))
                }
                _ => unreachable!("sweeps share the continuity"),
            };
            Ok(vec![
                (m, middle(l, rm, n, 0.0).map_err(at)?),
                (m + 1, middle(lm, r, n, 0.0).map_err(|e| e.at(m + 1))?),
            ])
        }
    }
}

fn to_subinterval(
    index: usize,
    rule: &ReferenceRule,
    part: &Partition,
    t: &[f64],
) -> SubintervalRule {
    let half = part.lengths[index - 1] / 2.0;
    SubintervalRule {
        index,
        nodes: rule
            .nodes
            .iter()
            .map(|x| t[index - 1] + (x + 1.0) * half)
            .collect(),
        weights: rule.weights.iter().map(|w| w * half).collect(),
    }
}

fn assemble(
    req: &RuleRequest,
    part: &Partition,
    plan: &Plan,
    branch: Branch,
    free: f64,
) -> Result<QuadratureRule> {
    let s = part.len();
    let sides = sweeps(req, part, branch)?;
    let mids = middle_rules(req, part, &sides, free)?;
    let t = part.breakpoints();
    let mut per: Vec<SubintervalRule> = Vec::with_capacity(s);
    for (i, r) in sides.left.rules.iter().enumerate() {
        per.push(to_subinterval(i + 1, r, part, &t));
    }
    for (idx, r) in &mids {
        per.push(to_subinterval(*idx, r, part, &t));
    }
    for (i, r) in sides.right.rules.iter().enumerate() {
        per.push(to_subinterval(s - i, &r.reflected(), part, &t));
    }
    per.sort_by_key(|r| r.index);
    debug_assert!(per
        .iter()
        .zip(&plan.counts)
        .all(|(r, &c)| r.nodes.len() == c));
    let mut flat: Vec<(f64, f64)> = per
        .iter()
        .flat_map(|r| r.nodes.iter().copied().zip(r.weights.iter().copied()))
        .collect();
    flat.sort_by(|a, b| a.0.total_cmp(&b.0));
    let has_free = req.has_free_parameter(s);
    let uses_omega = req.continuity == 1 && req.family == Family::Half && s > 1;
    Ok(QuadratureRule {
        per_subinterval: per,
        flat,
        meta: RuleMeta {
            degree: plan.degree,
            continuity: req.continuity,
            dimension: plan.dimension,
            total_nodes: plan.total,
            free_parameter: has_free.then_some(free),
            omega_branch: uses_omega.then_some(branch),
        },
    })
}

fn is_root_count(e: &Error) -> bool {
    matches!(e.root_cause(), Error::RootCountMismatch { .. })
}

/// Builds the rule with a given value of the free parameter, retrying the
/// minus branch of ω when the plus branch leaves a polynomial without
/// enough roots.
fn generate_with(
    req: &RuleRequest,
    part: &Partition,
    plan: &Plan,
    free: f64,
) -> Result<QuadratureRule> {
    match assemble(req, part, plan, Branch::Plus, free) {
        Err(e) if is_root_count(&e) && req.continuity == 1 && req.family == Family::Half => {
            assemble(req, part, plan, Branch::Minus, free).map_err(|_| e)
        }
        other => other,
    }
}

/// Builds the quadrature rule of `req` on `part`.
pub fn generate(req: &RuleRequest, part: &Partition) -> Result<QuadratureRule> {
    let plan = plan(req, part)?;
    let free = match req.free_parameter {
        FreeParameter::DefaultZero => 0.0,
        FreeParameter::Value(v) => v,
        FreeParameter::PinNode(x) => pin_free_parameter(req, part, x)?,
    };
    generate_with(req, part, &plan, free)
}

/// The free parameter for which the rule has a node at `x_target`.
///
/// The polynomial rooted in each ω-dependent middle subinterval is affine in
/// the free parameter, so its value at the target is solved for directly.
pub fn pin_free_parameter(req: &RuleRequest, part: &Partition, x_target: f64) -> Result<f64> {
    let req = RuleRequest {
        free_parameter: FreeParameter::DefaultZero,
        ..req.clone()
    };
    let plan = plan(&req, part)?;
    if !req.has_free_parameter(part.len()) {
        return Err(Error::UnsupportedConfiguration(
            "this family has no free parameter to pin".into(),
        ));
    }
    let unreachable = Error::TargetUnreachable { target: x_target };
    if !(part.a..=part.b).contains(&x_target) {
        return Err(unreachable);
    }
    let t = part.breakpoints();
    let m = req.middle_index;
    let candidates: Vec<usize> = match (req.family, part.len() % 2) {
        (Family::Half, 0) => vec![m, m + 1],
        _ => vec![m],
    };
    for branch in [Branch::Plus, Branch::Minus] {
        let Ok(sides) = sweeps(&req, part, branch) else {
            continue;
        };
        for &idx in &candidates {
            if x_target < t[idx - 1] || x_target > t[idx] {
                continue;
            }
            let xi = 2.0 * (x_target - t[idx - 1]) / part.lengths[idx - 1] - 1.0;
            let g = |free: f64| pinned_value(&req, part, &sides, idx, free, xi);
            let (g0, g1) = (g(0.0), g(1.0));
            if g1 == g0 || !(g0.is_finite() && g1.is_finite()) {
                continue;
            }
            let free = -g0 / (g1 - g0);
            let Ok(rule) = generate_with(&req, part, &plan, free) else {
                continue;
            };
            let hit = rule
                .flat
                .iter()
                .any(|&(x, _)| (x - x_target).abs() <= PIN_TOL * x_target.abs().max(1.0));
            if hit {
                return Ok(free);
            }
        }
    }
    Err(unreachable)
}

/// Value at reference abscissa `xi` of the polynomial rooted in middle subinterval `idx`.
fn pinned_value(
    req: &RuleRequest,
    part: &Partition,
    sides: &Sides,
    idx: usize,
    free: f64,
    xi: f64,
) -> f64 {
    let n = req.nodes_per_subinterval;
    let m = req.middle_index;
    let (l, r) = (sides.left.state, sides.right.state);
    match (l, r) {
        (State::C0(lp), State::C0(rp)) => match req.family {
            Family::Full => {
                c0::m_eval_c0(lp, rp, n + 1, xi).value + free * c0::m_eval_c0(lp, rp, n, xi).value
            }
            Family::Half => {
                let lambda = part.lengths[m] / part.lengths[m - 1];
                let (rm, lm) = c0::middle_pair_params_c0(free, lambda);
                if idx == m {
                    c0::m_eval_c0(lp, rm, n, xi).value
                } else {
                    c0::m_eval_c0(lm, rp, n, xi).value
                }
            }
        },
        (State::C1(lp), State::C1(rp)) => {
            c1::m_eval_c1(lp, rp, n + 1, xi).value + free * c1::m_eval_c1(lp, rp, n, xi).value
        }
        _ => unreachable!("sweeps share the continuity"),
    }
}

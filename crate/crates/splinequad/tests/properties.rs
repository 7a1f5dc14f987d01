mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use splinequad::engine::{generate, plan, Family, FreeParameter, Partition, RuleRequest};
use splinequad::family_c0::{
    boundary_rule_c0, gegenbauer_oracle_m_c0, gegenbauer_oracle_q_c0, m_eval_c0, q_eval_c0,
    step_alpha, ParamC0,
};
use splinequad::family_c1::{
    boundary_rule_c1, gegenbauer_oracle_m_c1, gegenbauer_oracle_q_c1, m_eval_c1, q_eval_c1,
    step_ab, ParamC1,
};
use splinequad::orthopoly::{eval, PolyFamily};
use splinequad::realline::{
    fixed_point, realline_rule_c0, realline_rule_c1, uniform_map, LimitParams,
};
use splinequad::splinecheck::{basis, exact_integral, residuals, SplineSpace};
use splinequad::Error;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn no_rule(e: &Error) -> bool {
    matches!(
        e.root_cause(),
        Error::RootCountMismatch { .. } | Error::NegativeDiscriminant { .. }
    )
}

fn partition_strategy(max_s: usize) -> impl Strategy<Value = Partition> {
    (1..=max_s, any::<u64>()).prop_map(|(s, seed)| {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        Partition::from_lengths(0.0, ratio_bounded_lengths(&mut rng, s)).unwrap()
    })
}

/// C0 states reached from an end subinterval after a few steps.
fn c0_state() -> impl Strategy<Value = (ParamC0, usize)> {
    (1..=8usize, prop::collection::vec(0.25..4.0f64, 0..4)).prop_map(|(n, lambdas)| {
        let p = lambdas.iter().fold(ParamC0::default(), |p, &l| {
            step_alpha(p, n, l, None).unwrap()
        });
        (p, n)
    })
}

fn c1_state() -> impl Strategy<Value = (ParamC1, usize)> {
    (1..=8usize, prop::collection::vec(0.25..4.0f64, 0..4)).prop_map(|(n, lambdas)| {
        let p = lambdas
            .iter()
            .fold(ParamC1::default(), |p, &l| step_ab(p, n, l, None).unwrap());
        (p, n)
    })
}

fn family_strategy() -> impl Strategy<Value = PolyFamily> {
    prop::sample::select(PolyFamily::ALL.to_vec())
}

proptest! {
    #[test]
    fn derivatives_match_finite_differences(fam in family_strategy(), n in 0..12usize, x in -0.95..0.95f64) {
        let h = 1e-5;
        let t = eval(fam, n, x);
        let (lo, hi) = (eval(fam, n, x - h), eval(fam, n, x + h));
        let scale = fam.value_at_one(n) * (n * n + 1) as f64;
        prop_assert!((t.d1 - (hi.value - lo.value) / (2.0 * h)).abs() <= 1e-6 * scale);
        prop_assert!((t.d2 - (hi.d1 - lo.d1) / (2.0 * h)).abs() <= 1e-6 * scale * (n * n + 1) as f64);
    }

    #[test]
    fn derivative_identities(n in 1..15usize, x in -1.0..1.0f64) {
        let p = eval(PolyFamily::Legendre, n, x);
        let c = eval(PolyFamily::Gegenbauer32, n - 1, x);
        prop_assert!(close(p.d1, c.value, 1e-12));
        let c3 = eval(PolyFamily::Gegenbauer32, n, x);
        let c5 = eval(PolyFamily::Gegenbauer52, n - 1, x);
        prop_assert!(close(c3.d1, 3.0 * c5.value, 1e-12));
    }

    #[test]
    fn boundary_roots_interlace_c0((p, n) in c0_state()) {
        prop_assume!(n >= 2);
        let hi = boundary_rule_c0(p, n, None).unwrap().nodes;
        let lo = boundary_rule_c0(p, n - 1, None).unwrap().nodes;
        for (i, &x) in lo.iter().enumerate() {
            prop_assert!(hi[i] < x && x < hi[i + 1]);
        }
    }

    #[test]
    fn boundary_roots_interlace_c1((p, n) in c1_state()) {
        prop_assume!(n >= 2);
        let (Ok(hi), Ok(lo)) = (boundary_rule_c1(p, n, None), boundary_rule_c1(p, n - 1, None)) else {
            return Ok(());
        };
        let (hi, lo) = (hi.nodes, lo.nodes);
        for (i, &x) in lo.iter().enumerate() {
            prop_assert!(hi[i] < x && x < hi[i + 1]);
        }
    }

    #[test]
    fn zero_state_reduces_to_jacobi(n in 1..12usize, x in -1.0..1.0f64) {
        prop_assert!(close(q_eval_c0(ParamC0::default(), n, x).value, eval(PolyFamily::Jacobi10, n, x).value, 1e-13));
        prop_assert!(close(q_eval_c1(ParamC1::default(), n, x).value, eval(PolyFamily::Jacobi20, n, x).value, 1e-13));
        let z0 = ParamC0::default();
        let z1 = ParamC1::default();
        prop_assert!(close(m_eval_c0(z0, z0, n, x).value, eval(PolyFamily::Legendre, n, x).value, 1e-13));
        prop_assert!(close(m_eval_c1(z1, z1, n, x).value, eval(PolyFamily::Legendre, n, x).value, 1e-13));
    }

    #[test]
    fn boundary_polynomial_has_exact_degree((p, n) in c1_state()) {
        match boundary_rule_c1(p, n, None) {
            Ok(r) => prop_assert_eq!(r.len(), n),
            Err(e) => {
                let expected_n = matches!(e, Error::RootCountMismatch { expected, .. } if expected == n);
                prop_assert!(expected_n, "{e}");
            }
        }
    }

    #[test]
    fn gegenbauer_oracles_agree(
        n in 1..=10usize,
        x in -1.0..1.0f64,
        a in (-1.0..1.0f64, -1.0..1.0f64),
        b in (-0.01..0.01f64, -0.01..0.01f64),
    ) {
        let scale = |v: f64, w: f64| v.abs().max(w.abs()).max(1.0);
        let (l0, r0) = (ParamC0::new(a.0), ParamC0::new(a.1));
        let v = q_eval_c0(l0, n, x).value;
        let w = gegenbauer_oracle_q_c0(l0, n, x);
        prop_assert!((v - w).abs() <= 1e-10 * scale(v, w) * (n * n) as f64);
        let v = m_eval_c0(l0, r0, n, x).value;
        let w = gegenbauer_oracle_m_c0(l0, r0, n, x);
        prop_assert!((v - w).abs() <= 1e-10 * scale(v, w) * (n * n) as f64);
        let (l1, r1) = (ParamC1::new(a.0, b.0), ParamC1::new(a.1, b.1));
        let v = q_eval_c1(l1, n, x).value;
        let w = gegenbauer_oracle_q_c1(l1, n, x);
        prop_assert!((v - w).abs() <= 1e-10 * scale(v, w) * (n * n) as f64);
        let v = m_eval_c1(l1, r1, n, x).value;
        let w = gegenbauer_oracle_m_c1(l1, r1, n, x);
        prop_assert!((v - w).abs() <= 1e-10 * scale(v, w) * (n * n) as f64);
    }

    #[test]
    fn generated_rules_are_exact(
        part in partition_strategy(6),
        c in 0..=1usize,
        n in 1..=3usize,
        half in any::<bool>(),
        m in any::<prop::sample::Index>(),
    ) {
        let family = if half { Family::Half } else { Family::Full };
        let mut middle = m.index(part.len()) + 1;
        if half && middle % 2 == 0 {
            middle -= 1;
        }
        let rule = match generate(&request(c, n, family, middle), &part) {
            Ok(r) => r,
            Err(e) => {
                prop_assert!(no_rule(&e), "{e}");
                return Ok(());
            }
        };
        let report = residuals(&rule.flat, &rule.space(&part).unwrap());
        prop_assert!(report.max_residual <= 1e-9, "{:e}", report.max_residual);
        let sum: f64 = rule.flat.iter().map(|p| p.1).sum();
        prop_assert!(close(sum, part.b - part.a, 1e-12));
        prop_assert!(rule.flat.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn reflection_equivariance(part in partition_strategy(6), n in 1..=3usize, c in 0..=1usize, m in any::<prop::sample::Index>()) {
        let s = part.len();
        let middle = m.index(s) + 1;
        let fwd = generate(&request(c, n, Family::Full, middle), &part);
        let back = generate(&request(c, n, Family::Full, s + 1 - middle), &part.reversed());
        match (fwd, back) {
            (Ok(f), Ok(b)) => {
                let span = part.b - part.a;
                for (&(x, w), &(y, v)) in f.flat.iter().zip(b.flat.iter().rev()) {
                    prop_assert!((x - (part.a + part.b - y)).abs() <= 1e-10 * span);
                    prop_assert!(close(w, v, 1e-10));
                }
            }
            (Err(e), Err(g)) => prop_assert!(no_rule(&e) && no_rule(&g)),
            (f, b) => prop_assert!(false, "only one side exists: {:?} / {:?}", f.err(), b.err()),
        }
    }

    #[test]
    fn counting_law(s in 1..=10usize, n in 1..=5usize, c in 0..=1usize, half in any::<bool>(), m in any::<prop::sample::Index>()) {
        let family = if half { Family::Half } else { Family::Full };
        let mut middle = m.index(s) + 1;
        if half && middle % 2 == 0 {
            middle -= 1;
        }
        let part = Partition::uniform(0.0, 1.0, s).unwrap();
        let req = request(c, n, family, middle);
        let p = plan(&req, &part).unwrap();
        let expected = match (c, family) {
            (1, Family::Full) => 0,
            (1, Family::Half) => (s % 2) as isize,
            (_, Family::Half) => 1 - (s % 2) as isize,
            _ => 1,
        };
        prop_assert_eq!(p.excess(), expected);
        prop_assert_eq!(p.counts.iter().sum::<usize>(), p.total);
        prop_assert_eq!(p.dimension, p.degree + 1 + (s - 1) * (p.degree - c));
    }

    #[test]
    fn scaling_the_partition_scales_the_rule(part in partition_strategy(5), k in 0.01..100.0f64, c in 0..=1usize, n in 1..=3usize) {
        let scaled = Partition::from_lengths(0.0, part.lengths.iter().map(|l| l * k).collect()).unwrap();
        let req = request(c, n, Family::Full, 1);
        if let (Ok(r), Ok(q)) = (generate(&req, &part), generate(&req, &scaled)) {
            for (&(x, w), &(y, v)) in r.flat.iter().zip(&q.flat) {
                prop_assert!(close(x * k, y, 1e-10) && close(w * k, v, 1e-10));
            }
        }
    }

    #[test]
    fn closed_form_integrals_match_numeric(part in partition_strategy(5), degree in 1..=6usize, c in 0..=1usize) {
        prop_assume!(degree > c);
        let space = SplineSpace::new(degree, c, part.inner_knots(), part.a, part.b).unwrap();
        let gl = gauss_legendre(degree);
        let t = part.breakpoints();
        for e in basis(&space) {
            let numeric: f64 = t.windows(2).map(|s| {
                let (mid, half) = ((s[0] + s[1]) / 2.0, (s[1] - s[0]) / 2.0);
                gl.iter().map(|&(x, w)| w * half * e.eval(&space, mid + half * x)).sum::<f64>()
            }).sum();
            prop_assert!(close(numeric, exact_integral(&e, &space), 1e-12));
        }
    }
}

#[test]
fn pinned_node_lands_on_target() {
    let part = fixture_partition();
    for target in [3.0, 3.2, 5.0] {
        let req = RuleRequest {
            free_parameter: FreeParameter::PinNode(target),
            ..request(0, 2, Family::Half, 3)
        };
        let rule = generate(&req, &part).unwrap();
        assert!(rule
            .flat
            .iter()
            .any(|&(x, _)| (x - target).abs() <= 1e-12 * target));
    }
}

#[test]
fn c1_limit_weights_are_positive() {
    for n in 2..=12 {
        let r = realline_rule_c1(n).unwrap();
        assert!(r.weights.iter().all(|&w| w > 0.0), "n = {n}");
        assert_eq!(r.nodes[0], -1.0);
        assert!(close(r.weights.iter().sum(), 2.0, 1e-12));
    }
}

#[test]
fn c0_limit_nodes_are_asymmetric() {
    for n in 2..=10 {
        let r = realline_rule_c0(n).unwrap();
        let gap = r
            .nodes
            .iter()
            .zip(r.nodes.iter().rev())
            .map(|(x, y)| (x + y).abs())
            .fold(0.0, f64::max);
        assert!(gap > 1e-3, "n = {n}");
        assert!(close(r.weights.iter().sum(), 2.0, 1e-12));
    }
}

#[test]
fn fixed_points_are_stationary() {
    for c in 0..=1 {
        for n in 1..=6 {
            let fp = fixed_point(c, Family::Full, n).unwrap();
            let next = uniform_map(fp.params, Family::Full, n).unwrap();
            let d = match (fp.params, next) {
                (LimitParams::C0(a), LimitParams::C0(b)) => (a.alpha - b.alpha).abs(),
                (LimitParams::C1(a), LimitParams::C1(b)) => {
                    (a.alpha - b.alpha).abs().max((a.beta - b.beta).abs())
                }
                _ => unreachable!(),
            };
            assert!(d < 1e-12, "c = {c}, n = {n}: {d:e}");
        }
    }
}

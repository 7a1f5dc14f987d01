//! Helpers shared by the integration tests.

#![allow(dead_code)]

use splinequad::engine::{Family, FreeParameter, Partition, RuleRequest};

pub fn request(continuity: usize, n: usize, family: Family, middle: usize) -> RuleRequest {
    RuleRequest {
        continuity,
        nodes_per_subinterval: n,
        family,
        middle_index: middle,
        free_parameter: FreeParameter::DefaultZero,
    }
}

pub fn fixture_partition() -> Partition {
    Partition::new(0.0, 9.0, vec![1.0, 2.0, 3.0, 1.0, 1.0, 1.0]).unwrap()
}

pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

/// Gaussian C1 cubic rule on the fixture partition, as closed forms.
pub fn c1_cubic_expected() -> Vec<(f64, f64)> {
    let sq = 3556830148073443658426871391555f64.sqrt();
    let den = 210841059447710038.0;
    let c = 680708157408100153033959853904.0 / 9821909391090899005165052208283642169650184625.0;
    let d = 1361950761199921.0 / 613649356446150.0;
    vec![
        (1.0 / 4.0, 16.0 / 27.0),
        (76.0 / 61.0, 453962.0 / 309123.0),
        ((922485522061455153.0 - 135.0 * sq) / den, c * sq + d),
        ((922485522061455153.0 + 135.0 * sq) / den, -c * sq + d),
        (662139.0 / 94604.0, 211674482615216.0 / 212276904201675.0),
        (733.0 / 92.0, 194672.0 / 213867.0),
        (35.0 / 4.0, 16.0 / 27.0),
    ]
}

/// C0 cubic half rule with a node pinned at 3, as closed forms.
pub fn c0_cubic_expected() -> Vec<(f64, f64)> {
    let (s1, s2, s3) = (22f64.sqrt(), 113f64.sqrt(), 41f64.sqrt());
    vec![
        (4.0 / 7.0 - s1 / 14.0, -s1 / 44.0 + 2.0 / 3.0),
        (4.0 / 7.0 + s1 / 14.0, s1 / 44.0 + 2.0 / 3.0),
        (2.0, 4.0 / 3.0),
        (3.0, 5.0 / 6.0),
        (4.5, 2.0),
        (181.0 / 28.0 - s2 / 28.0, 3.0 / 226.0 * s2 + 5.0 / 6.0),
        (181.0 / 28.0 + s2 / 28.0, -3.0 / 226.0 * s2 + 5.0 / 6.0),
        (7.5, 2.0 / 3.0),
        (169.0 / 20.0 - s3 / 20.0, s3 / 164.0 + 7.0 / 12.0),
        (169.0 / 20.0 + s3 / 20.0, -s3 / 164.0 + 7.0 / 12.0),
    ]
}

/// Largest relative error of a rule against expected (node, weight) pairs.
pub fn max_rel(got: &[(f64, f64)], want: &[(f64, f64)]) -> f64 {
    assert_eq!(got.len(), want.len());
    got.iter()
        .zip(want)
        .map(|(&(x, w), &(ex, ew))| rel(x, ex).max(rel(w, ew)))
        .fold(0.0, f64::max)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss-Legendre rule on [-1, 1] from the Jacobi matrix, refined by Newton.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    if n == 0 {
        return Vec::new();
    }
    let jm = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        let k = i.max(j) as f64;
        if i.abs_diff(j) == 1 {
            k / (4.0 * k * k - 1.0).sqrt()
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = jm.symmetric_eigenvalues().iter().copied().collect();
    nodes.sort_by(f64::total_cmp);
    nodes
        .into_iter()
        .map(|mut x| {
            for _ in 0..3 {
                let (p, d) = legendre(n, x);
                x -= p / d;
            }
            let d = legendre(n, x).1;
            (x, 2.0 / ((1.0 - x * x) * d * d))
        })
        .collect()
}

/// Lengths L_1 = 1, L_{i+1} = L_i 4^u with u uniform in [-1, 1].
pub fn ratio_bounded_lengths<R: rand::Rng>(rng: &mut R, s: usize) -> Vec<f64> {
    let mut lengths = vec![1.0f64];
    for _ in 1..s {
        let last = *lengths.last().unwrap();
        lengths.push(last * 4f64.powf(rng.random_range(-1.0..=1.0)));
    }
    lengths
}

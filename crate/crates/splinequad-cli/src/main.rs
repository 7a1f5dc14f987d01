//! Command-line front end for the spline quadrature rule generator.
//!
//! Exit status is 0 on success, 2 for invalid requests and 3 when the
//! numerics fail (no admissible roots, negative discriminant, ...).

mod fixtures;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use splinequad::engine::{generate, Family, FreeParameter, Partition, QuadratureRule, RuleRequest};
use splinequad::family_c1::Branch;
use splinequad::realline::{
    fixed_point, realline_rule_c0, realline_rule_c1, FixedPoint, LimitRule,
};
use splinequad::splinecheck::{residuals, ResidualReport};
use splinequad::Error;

const FIXTURE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Full,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RealLine {
    C0,
    C1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FixtureArg {
    #[value(name = "5.1")]
    C1Cubic,
    #[value(name = "9.1")]
    C0Cubic,
}

/// Gaussian and one-parameter optimal quadrature rules for C0 and C1 splines.
#[derive(Debug, Parser)]
#[command(name = "splinequad", version)]
struct Cli {
    /// Continuity of the spline space.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    continuity: Option<u8>,

    /// Nodes per subinterval N.
    #[arg(long)]
    nodes: Option<usize>,

    /// Subinterval lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<f64>>,

    /// Interval end points; defaults to [0, sum of lengths].
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<f64>>,

    /// One-based index of the middle subinterval.
    #[arg(long)]
    middle: Option<usize>,

    #[arg(long, value_enum, default_value = "full")]
    family: FamilyArg,

    /// zero, value=V or pin=X.
    #[arg(long, default_value = "zero", value_parser = parse_free)]
    free: FreeParameter,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Attach exactness residuals on the target spline space.
    #[arg(long)]
    verify: bool,

    /// Print the interior limit rule instead of generating on a partition.
    #[arg(long, value_enum, requires = "n", conflicts_with_all = ["lengths", "fixture"])]
    realline: Option<RealLine>,

    /// Nodes of the limit rule.
    #[arg(long, requires = "realline")]
    n: Option<usize>,

    /// Run a built-in golden configuration and compare with its exact values.
    #[arg(long, value_enum, conflicts_with = "lengths")]
    fixture: Option<FixtureArg>,
}

fn parse_free(s: &str) -> Result<FreeParameter, String> {
    let number = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    match s.split_once('=') {
        None if s == "zero" => Ok(FreeParameter::DefaultZero),
        Some(("value", v)) => Ok(FreeParameter::Value(number(v)?)),
        Some(("pin", v)) => Ok(FreeParameter::PinNode(number(v)?)),
        _ => Err(format!("expected zero, value=V or pin=X, got {s:?}")),
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Provenance {
    tool: String,
    version: String,
    free_parameter: Option<f64>,
    omega_branch: Option<Branch>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FixtureCheck {
    name: String,
    max_relative_error: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct RuleDocument {
    request: RuleRequest,
    partition: Partition,
    rule: QuadratureRule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residuals: Option<ResidualReport>,
    provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fixture: Option<FixtureCheck>,
}

#[derive(Debug, Serialize)]
struct LimitDocument {
    n: usize,
    rule: LimitRule,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_point: Option<FixedPoint>,
    provenance: Provenance,
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numeric() {
            Failure::Numeric(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn provenance(rule: Option<&QuadratureRule>) -> Provenance {
    Provenance {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        free_parameter: rule.and_then(|r| r.meta.free_parameter),
        omega_branch: rule.and_then(|r| r.meta.omega_branch),
    }
}

fn request_from(cli: &Cli) -> Result<(RuleRequest, Partition), Failure> {
    let missing = |flag: &str| Failure::Usage(format!("--{flag} is required"));
    let lengths = cli.lengths.clone().ok_or_else(|| missing("lengths"))?;
    let continuity = cli.continuity.ok_or_else(|| missing("continuity"))?;
    let nodes = cli.nodes.ok_or_else(|| missing("nodes"))?;
    let middle = cli.middle.ok_or_else(|| missing("middle"))?;
    let partition = match cli.interval.as_deref() {
        Some(&[a, b]) => Partition::new(a, b, lengths)?,
        _ => Partition::from_lengths(0.0, lengths)?,
    };
    let request = RuleRequest {
        continuity: continuity as usize,
        nodes_per_subinterval: nodes,
        family: match cli.family {
            FamilyArg::Full => Family::Full,
            FamilyArg::Half => Family::Half,
        },
        middle_index: middle,
        free_parameter: cli.free,
    };
    Ok((request, partition))
}

fn rule_document(
    request: RuleRequest,
    partition: Partition,
    verify: bool,
) -> Result<RuleDocument, Failure> {
    let rule = generate(&request, &partition)?;
    let residuals = if verify {
        Some(residuals(&rule.flat, &rule.space(&partition)?))
    } else {
        None
    };
    Ok(RuleDocument {
        provenance: provenance(Some(&rule)),
        request,
        partition,
        rule,
        residuals,
        fixture: None,
    })
}

fn check_fixture(golden: &fixtures::Golden, rule: &QuadratureRule) -> FixtureCheck {
    let parse = |s: &str| s.parse::<f64>().expect("fixture values are numbers");
    let max_relative_error = if rule.flat.len() == golden.expected.len() {
        rule.flat
            .iter()
            .zip(golden.expected)
            .flat_map(|(&(x, w), &(ex, ew))| [(x, parse(ex)), (w, parse(ew))])
            .map(|(got, want)| (got - want).abs() / want.abs().max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    FixtureCheck {
        name: golden.name.into(),
        max_relative_error,
        tolerance: FIXTURE_TOL,
        passed: max_relative_error <= FIXTURE_TOL,
    }
}

fn csv_rows(rows: impl IntoIterator<Item = (usize, f64, f64)>) -> Result<String, Failure> {
    let mut out = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Numeric(e.to_string());
    out.write_record(["subinterval", "x", "w"]).map_err(io)?;
    for (s, x, w) in rows {
        out.write_record([s.to_string(), x.to_string(), w.to_string()])
            .map_err(io)?;
    }
    let bytes = out
        .into_inner()
        .map_err(|e| Failure::Numeric(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit_rule(doc: &RuleDocument, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc).expect("document serializes") + "\n"),
        Format::Csv => {
            let mut rows: Vec<(usize, f64, f64)> = doc
                .rule
                .per_subinterval
                .iter()
                .flat_map(|s| {
                    s.nodes
                        .iter()
                        .zip(&s.weights)
                        .map(move |(&x, &w)| (s.index, x, w))
                })
                .collect();
            rows.sort_by(|a, b| a.1.total_cmp(&b.1));
            csv_rows(rows)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if let Some(kind) = cli.realline {
        let n = cli.n.expect("clap enforces --n with --realline");
        let (rule, fixed_point) = match kind {
            RealLine::C0 => (realline_rule_c0(n)?, fixed_point(0, Family::Full, n).ok()),
            RealLine::C1 => (realline_rule_c1(n)?, fixed_point(1, Family::Full, n).ok()),
        };
        let text = match cli.format {
            Format::Json => {
                let doc = LimitDocument {
                    n,
                    rule,
                    fixed_point,
                    provenance: provenance(None),
                };
                serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
            }
            Format::Csv => csv_rows(
                rule.nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&x, &w)| (1, x, w)),
            )?,
        };
        return Ok((text, true));
    }
    if let Some(which) = cli.fixture {
        let golden = match which {
            FixtureArg::C1Cubic => fixtures::c1_cubic(),
            FixtureArg::C0Cubic => fixtures::c0_cubic(),
        };
        let mut doc = rule_document(golden.request.clone(), golden.partition.clone(), cli.verify)?;
        let check = check_fixture(&golden, &doc.rule);
        let passed = check.passed;
        doc.fixture = Some(check);
        return Ok((emit_rule(&doc, cli.format)?, passed));
    }
    let (request, partition) = request_from(cli)?;
    let doc = rule_document(request, partition, cli.verify)?;
    Ok((emit_rule(&doc, cli.format)?, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: fixture values differ beyond {FIXTURE_TOL:e}");
                ExitCode::from(3)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

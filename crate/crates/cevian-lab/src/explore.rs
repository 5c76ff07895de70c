//! Parameter-space exploration: limiting-family sweeps, the best-constant
//! probe and the exploratory incidence probe.
//!
//! Everything here is exact. "Arbitrarily small/large" claims are
//! operationalized as strict monotonicity across a declared finite grid plus
//! an optional threshold crossing at the last grid point; grids are rational
//! and depth-capped so coefficient growth stays bounded.

use crate::forms::{rigby_refinement_factor, rst_over_g_ratio, rst_over_h_ratio};
use crate::kernel::{incident, join, meet, HLine, Rational};
use crate::report::{Report, ReportInputs, Verdict, Witness, WitnessValue};
use crate::sample::Sampler;
use crate::scene::{build_default_scene, RatioParams};
use crate::verify::point_text;
use crate::{Error, Result};
use num_traits::{One, Signed};
use std::fmt;
use std::str::FromStr;

/// Deepest grid value allowed on either side of 1; the family definitions
/// square ε into denominators, so this caps coefficient bit growth.
const DEPTH_CAP: u64 = 1_000_000;

/// The parametric families the explorer knows how to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// λ₁=λ₂=ε, λ₃=ε², u=v=ε, w=1/ε²; sweeps the RST-to-G area ratio.
    Ratio11,
    /// λ₁=λ₂=λ₃=1, u=ε, v=1, w=1/ε²; sweeps the RST-to-H area ratio.
    Ratio16,
    /// The refinement factor F(ε,ε,ε), probed for its infimum of 1.
    BestConstant,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Ratio11 => "ratio11",
            Family::Ratio16 => "ratio16",
            Family::BestConstant => "best_constant",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ratio11" => Ok(Family::Ratio11),
            "ratio16" => Ok(Family::Ratio16),
            "best_constant" => Ok(Family::BestConstant),
            other => Err(Error::Parse(format!("unknown family: {other}"))),
        }
    }
}

/// Which end of the parameter range a sweep walks toward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToZero,
    ToInfinity,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::ToZero => "to_zero",
            Direction::ToInfinity => "to_infinity",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "to_zero" => Ok(Direction::ToZero),
            "to_infinity" => Ok(Direction::ToInfinity),
            other => Err(Error::Parse(format!("unknown direction: {other}"))),
        }
    }
}

/// A validated sweep request: family, grid, walking direction and an
/// optional threshold the final value must cross.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    family: Family,
    epsilons: Vec<Rational>,
    direction: Direction,
    threshold: Option<Rational>,
}

impl SweepSpec {
    pub fn new(
        family: Family,
        epsilons: Vec<Rational>,
        direction: Direction,
        threshold: Option<Rational>,
    ) -> Result<Self> {
        if epsilons.is_empty() {
            return Err(Error::InvalidGrid("grid must not be empty".to_string()));
        }
        let cap = Rational::from_integer(DEPTH_CAP.into());
        let floor = cap.recip();
        for eps in &epsilons {
            if !eps.is_positive() {
                return Err(Error::InvalidGrid(format!(
                    "grid values must be positive, got {eps}"
                )));
            }
            if eps < &floor || eps > &cap {
                return Err(Error::InvalidGrid(format!(
                    "grid value {eps} outside the supported depth range [1/{DEPTH_CAP}, {DEPTH_CAP}]"
                )));
            }
        }
        let ordered = epsilons.windows(2).all(|pair| match direction {
            Direction::ToZero => pair[0] > pair[1],
            Direction::ToInfinity => pair[0] < pair[1],
        });
        if !ordered {
            return Err(Error::InvalidGrid(format!(
                "grid must be strictly monotone toward the sweep direction ({direction})"
            )));
        }
        if let Some(t) = &threshold {
            if !t.is_positive() {
                return Err(Error::InvalidGrid(format!(
                    "threshold must be positive, got {t}"
                )));
            }
        }
        Ok(SweepSpec {
            family,
            epsilons,
            direction,
            threshold,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn epsilons(&self) -> &[Rational] {
        &self.epsilons
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn threshold(&self) -> Option<&Rational> {
        self.threshold.as_ref()
    }
}

fn ratio11_params(eps: &Rational) -> Result<RatioParams> {
    let eps_sq = eps * eps;
    RatioParams::new(
        eps.clone(),
        eps.clone(),
        eps_sq.clone(),
        eps.clone(),
        eps.clone(),
        eps_sq.recip(),
    )
}

fn ratio16_params(eps: &Rational) -> Result<RatioParams> {
    let one = Rational::one();
    RatioParams::new(
        one.clone(),
        one.clone(),
        one.clone(),
        eps.clone(),
        one,
        (eps * eps).recip(),
    )
}

/// Exact value of a family at one grid point. Degenerate points (ε = 1 for
/// the ratio families) surface as the corresponding closed-form error.
pub fn evaluate_family_point(family: Family, eps: &Rational) -> Result<Rational> {
    match family {
        Family::Ratio11 => rst_over_g_ratio(&ratio11_params(eps)?),
        Family::Ratio16 => rst_over_h_ratio(&ratio16_params(eps)?),
        Family::BestConstant => rigby_refinement_factor(eps, eps, eps),
    }
}

fn grid_point_report(family: Family, eps: &Rational, value: &Rational) -> Report {
    let mut witness = Witness::new();
    witness.rational("value", value.clone());
    witness.count("value_numer_bits", value.numer().bits());
    witness.count("value_denom_bits", value.denom().bits());
    Report::new(
        family.as_str(),
        ReportInputs::GridPoint {
            family: family.as_str().to_string(),
            epsilon: eps.clone(),
        },
        Verdict::Holds,
    )
    .with_witness(witness)
}

/// Whether the family's claimed trend along this direction is increasing.
fn expected_increasing(family: Family, direction: Direction) -> bool {
    match (family, direction) {
        // The RST/G family is claimed to vanish toward 0 and blow up toward
        // infinity; the RST/H family the other way round.
        (Family::Ratio11, Direction::ToZero) => false,
        (Family::Ratio11, Direction::ToInfinity) => true,
        (Family::Ratio16, Direction::ToZero) => true,
        (Family::Ratio16, Direction::ToInfinity) => false,
        // The best-constant probe has its own report shape; it never routes
        // through a trend report.
        (Family::BestConstant, _) => false,
    }
}

fn strictly_monotone(values: &[Rational], increasing: bool) -> bool {
    values.windows(2).all(|pair| {
        if increasing {
            pair[0] < pair[1]
        } else {
            pair[0] > pair[1]
        }
    })
}

fn trend_report(spec: &SweepSpec, values: &[Rational]) -> Report {
    let increasing = expected_increasing(spec.family, spec.direction);
    let monotone = strictly_monotone(values, increasing);
    let trend_name = if increasing {
        "strictly_increasing"
    } else {
        "strictly_decreasing"
    };
    let mut witness = Witness::new();
    witness.push("values", WitnessValue::Rationals(values.to_vec()));
    witness.flag(trend_name, monotone);
    let mut crossed = true;
    if let Some(threshold) = &spec.threshold {
        let last = values.last().expect("validated grid is non-empty");
        crossed = if increasing {
            last > threshold
        } else {
            last < threshold
        };
        witness.rational("threshold", threshold.clone());
        witness.flag("threshold_crossed", crossed);
    }
    let verdict = if monotone && crossed {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut report = Report::new(
        spec.family.as_str(),
        ReportInputs::Grid {
            family: spec.family.as_str().to_string(),
            epsilons: spec.epsilons.clone(),
        },
        verdict,
    )
    .with_witness(witness);
    // The RST/G family cannot grow toward infinity: it takes the same exact
    // value at ε and 1/ε (relabel the triangle cyclically twice to swap the
    // two directions), so both limits vanish. Say so when the expected
    // growth fails to materialize.
    if spec.family == Family::Ratio11
        && spec.direction == Direction::ToInfinity
        && !monotone
        && strictly_monotone(values, false)
    {
        report = report.with_notes(
            "exact values strictly decrease: this family takes equal values at \
             \u{3b5} and 1/\u{3b5}, so it vanishes in both limits",
        );
    }
    report
}

fn run_family_sweep(spec: &SweepSpec, expected: Family) -> Result<Vec<Report>> {
    if spec.family != expected {
        return Err(Error::PreconditionViolated(format!(
            "sweep specialized to family {expected} received {}",
            spec.family
        )));
    }
    let mut reports = Vec::with_capacity(spec.epsilons.len() + 1);
    let mut values = Vec::with_capacity(spec.epsilons.len());
    for eps in &spec.epsilons {
        let value = evaluate_family_point(spec.family, eps)?;
        reports.push(grid_point_report(spec.family, eps, &value));
        values.push(value);
    }
    reports.push(trend_report(spec, &values));
    Ok(reports)
}

/// Sweeps the RST-to-G area ratio along λ₁=λ₂=ε, λ₃=ε², u=v=ε, w=1/ε².
/// Emits one exact-value report per grid point plus a trailing trend report.
pub fn sweep_ratio_11(spec: &SweepSpec) -> Result<Vec<Report>> {
    run_family_sweep(spec, Family::Ratio11)
}

/// Sweeps the RST-to-H area ratio along λ=1, u=ε, v=1, w=1/ε².
pub fn sweep_ratio_16(spec: &SweepSpec) -> Result<Vec<Report>> {
    run_family_sweep(spec, Family::Ratio16)
}

/// Evaluates the refinement factor F(ε,ε,ε) over a decreasing grid. The
/// verdict certifies that every value exceeds 1, the sequence strictly
/// decreases, and the final value sits within `gap` of 1 — the desk-scale
/// evidence that 1 is the sharp constant.
pub fn best_constant_probe(grid: &[Rational], gap: &Rational) -> Result<Report> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid must not be empty".to_string()));
    }
    for eps in grid {
        if !eps.is_positive() {
            return Err(Error::InvalidGrid(format!(
                "grid values must be positive, got {eps}"
            )));
        }
    }
    if !strictly_monotone(grid, false) {
        return Err(Error::InvalidGrid(
            "best-constant grid must strictly decrease toward 0".to_string(),
        ));
    }
    if !gap.is_positive() {
        return Err(Error::InvalidGrid(format!(
            "target gap must be positive, got {gap}"
        )));
    }
    let one = Rational::one();
    let mut values = Vec::with_capacity(grid.len());
    for eps in grid {
        values.push(rigby_refinement_factor(eps, eps, eps)?);
    }
    let all_above_one = values.iter().all(|v| v > &one);
    let decreasing = strictly_monotone(&values, false);
    let final_gap = values.last().expect("non-empty grid") - &one;
    let gap_met = final_gap < *gap;
    let mut witness = Witness::new();
    witness.push("values", WitnessValue::Rationals(values));
    witness.flag("all_above_one", all_above_one);
    witness.flag("strictly_decreasing", decreasing);
    witness.rational("final_gap", final_gap);
    witness.rational("target_gap", gap.clone());
    witness.flag("gap_met", gap_met);
    let verdict = if all_above_one && decreasing && gap_met {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new(
        "best_constant",
        ReportInputs::Grid {
            family: Family::BestConstant.as_str().to_string(),
            epsilons: grid.to_vec(),
        },
        verdict,
    )
    .with_witness(witness))
}

const VERTEX_LABELS: [&str; 3] = ["V1", "V2", "V3"];
const CEVIAN_LABELS: [&str; 3] = ["AK", "BL", "CM"];
const MATCHINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn degenerate_probe(inputs: ReportInputs, notes: String) -> Report {
    Report::new("open_problem", inputs, Verdict::Degenerate).with_notes(notes)
}

/// Exploratory probe: do the vertices of the triangle cut out by lines G₁S,
/// G₂T, G₃R land on the cevians AK, BL, CM?
///
/// Requires u·v·w = 1 (so DN, EQ, FP concur and R, S, T are tied to a single
/// configuration the question is about) and λ₁λ₂λ₃ ≠ 1 (distinct G
/// vertices). The verdict is exploratory data: holds iff some assignment of
/// the three vertices to the three cevians makes every incidence exact.
pub fn open_problem_probe(params: &RatioParams) -> Result<Report> {
    if !params.uvw_product().is_one() {
        return Err(Error::PreconditionViolated(
            "open-problem probe requires u\u{b7}v\u{b7}w = 1".to_string(),
        ));
    }
    if params.lambda_product().is_one() {
        return Err(Error::PreconditionViolated(
            "open-problem probe requires lambda1\u{b7}lambda2\u{b7}lambda3 != 1 \
             (the G vertices must be distinct)"
                .to_string(),
        ));
    }
    let scene = build_default_scene(params)?;
    let inputs = ReportInputs::Ratios(params.clone());
    if !scene.degeneracies.is_empty() {
        let flags: Vec<String> = scene.degeneracies.iter().map(|d| d.to_string()).collect();
        return Ok(degenerate_probe(
            inputs,
            format!("construction degeneracies: {}", flags.join(", ")),
        ));
    }
    let endpoints = [
        ("G1S", &scene.g1, &scene.s),
        ("G2T", &scene.g2, &scene.t),
        ("G3R", &scene.g3, &scene.r),
    ];
    let mut lines: Vec<HLine> = Vec::with_capacity(3);
    for (label, p, q) in endpoints {
        match join(p, q) {
            Ok(line) => lines.push(line),
            Err(Error::IdenticalPoints) => {
                return Ok(degenerate_probe(
                    inputs.clone(),
                    format!("line {label} undefined: its endpoints coincide"),
                ));
            }
            Err(e) => return Err(e),
        }
    }
    let line_labels = ["G1S", "G2T", "G3R"];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if lines[i].coincides(&lines[j]) {
            return Ok(degenerate_probe(
                inputs.clone(),
                format!(
                    "lines {} and {} coincide: no triangle is formed",
                    line_labels[i], line_labels[j]
                ),
            ));
        }
    }
    // Vertex i sits opposite line i.
    let vertices = [
        meet(&lines[1], &lines[2])?,
        meet(&lines[2], &lines[0])?,
        meet(&lines[0], &lines[1])?,
    ];
    let cevians = [scene.line_ak()?, scene.line_bl()?, scene.line_cm()?];
    let mut entries = [[false; 3]; 3];
    for (i, vertex) in vertices.iter().enumerate() {
        for (j, cevian) in cevians.iter().enumerate() {
            entries[i][j] = incident(vertex, cevian);
        }
    }
    let matching = MATCHINGS
        .into_iter()
        .find(|assignment| (0..3).all(|i| entries[i][assignment[i]]));
    let mut witness = Witness::new();
    witness.push("incidence", WitnessValue::Matrix(entries));
    witness.flag("matching_found", matching.is_some());
    let matching_text = match matching {
        Some(assignment) => (0..3)
            .map(|i| format!("{}->{}", VERTEX_LABELS[i], CEVIAN_LABELS[assignment[i]]))
            .collect::<Vec<_>>()
            .join(","),
        None => "none".to_string(),
    };
    witness.text("matching", matching_text);
    for (label, vertex) in VERTEX_LABELS.iter().zip(&vertices) {
        witness.text(&label.to_lowercase(), point_text(vertex));
    }
    let verdict = if matching.is_some() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new("open_problem", inputs, verdict).with_witness(witness))
}

/// Seeded batch of probes plus a trailing aggregate summary. Sampling is
/// constrained to the probe's precondition (u·v·w = 1, λ₁λ₂λ₃ ≠ 1); the
/// whole batch is a pure function of (seed, samples, bound).
pub fn open_problem_batch(seed: u64, samples: usize, bound: u64) -> Result<Vec<Report>> {
    if samples == 0 {
        return Err(Error::PreconditionViolated(
            "samples must be at least 1".to_string(),
        ));
    }
    let mut sampler = Sampler::new(seed, bound);
    let mut reports = Vec::with_capacity(samples + 1);
    let (mut holds, mut fails, mut degenerate) = (0u64, 0u64, 0u64);
    for _ in 0..samples {
        let report = open_problem_probe(&sampler.params_h_point_g_proper())?;
        match report.verdict {
            Verdict::Holds => holds += 1,
            Verdict::Fails => fails += 1,
            Verdict::Degenerate => degenerate += 1,
        }
        reports.push(report);
    }
    let mut witness = Witness::new();
    witness.count("samples", samples as u64);
    witness.count("holds", holds);
    witness.count("fails", fails);
    witness.count("degenerate", degenerate);
    reports.push(
        Report::new("open_problem_summary", ReportInputs::None, Verdict::Holds)
            .with_witness(witness),
    );
    Ok(reports)
}

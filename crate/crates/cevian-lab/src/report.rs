//! Structured outcomes for checks, sweeps and probes.
//!
//! Every report serializes to one JSON object with a fixed field order
//! (`schema`, `check_name`, `params`, `verdict`, `witness`, `notes`) so that
//! identical runs produce byte-identical output. Exact rationals appear as
//! reduced `"p/q"` strings; certified enclosures as `["lo","hi"]` pairs.
//! Decimal rendering is deliberately absent here — that is the CLI's job.

use crate::kernel::{format_rational, Rational};
use crate::scene::RatioParams;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::fmt;

/// Version tag stamped on every emitted JSON object.
pub const SCHEMA: &str = "cevian-lab/1";

/// Outcome of a single check.
///
/// `Degenerate` means the check's hypothesis was not met (for conditional
/// claims) or the configuration hit a recorded degeneracy; it is not a
/// failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Degenerate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One named value inside a witness map.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessValue {
    /// Exact rational, rendered as a reduced "p/q" string.
    Rational(Rational),
    /// Certified enclosure of an irrational quantity, rendered ["lo","hi"].
    Enclosure(Rational, Rational),
    /// List of exact rationals (e.g. a sweep's value column).
    Rationals(Vec<Rational>),
    Bool(bool),
    Count(u64),
    Text(String),
    /// Row-major 3×3 boolean incidence matrix.
    Matrix([[bool; 3]; 3]),
}

impl Serialize for WitnessValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WitnessValue::Rational(r) => serializer.serialize_str(&format_rational(r)),
            WitnessValue::Enclosure(lo, hi) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&format_rational(lo))?;
                seq.serialize_element(&format_rational(hi))?;
                seq.end()
            }
            WitnessValue::Rationals(values) => {
                let mut seq = serializer.serialize_seq(Some(values.len()))?;
                for v in values {
                    seq.serialize_element(&format_rational(v))?;
                }
                seq.end()
            }
            WitnessValue::Bool(b) => serializer.serialize_bool(*b),
            WitnessValue::Count(n) => serializer.serialize_u64(*n),
            WitnessValue::Text(s) => serializer.serialize_str(s),
            WitnessValue::Matrix(m) => {
                let mut seq = serializer.serialize_seq(Some(3))?;
                for row in m {
                    seq.serialize_element(&row.to_vec())?;
                }
                seq.end()
            }
        }
    }
}

/// Insertion-ordered map of named witness values.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Witness {
    entries: Vec<(String, WitnessValue)>,
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn push(&mut self, name: &str, value: WitnessValue) {
        self.entries.push((name.to_string(), value));
    }

    pub fn rational(&mut self, name: &str, value: Rational) {
        self.push(name, WitnessValue::Rational(value));
    }

    pub fn enclosure(&mut self, name: &str, lo: Rational, hi: Rational) {
        self.push(name, WitnessValue::Enclosure(lo, hi));
    }

    pub fn flag(&mut self, name: &str, value: bool) {
        self.push(name, WitnessValue::Bool(value));
    }

    pub fn count(&mut self, name: &str, value: u64) {
        self.push(name, WitnessValue::Count(value));
    }

    pub fn text(&mut self, name: &str, value: impl Into<String>) {
        self.push(name, WitnessValue::Text(value.into()));
    }

    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &WitnessValue)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), v))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (name, value) in &self.entries {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

/// The inputs a report was produced from.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportInputs {
    /// Six side-division ratios (canonical triangle implied).
    Ratios(RatioParams),
    /// Ratios evaluated over an explicit triangle.
    RatiosInTriangle {
        params: RatioParams,
        triangle: Box<[(Rational, Rational); 3]>,
    },
    /// Just a triangle (checks that need no ratios).
    Triangle(Box<[(Rational, Rational); 3]>),
    /// A positive triple (l₁,l₂,l₃) for the cevian-intersection inequalities.
    Triple(Rational, Rational, Rational),
    /// One grid point of a sweep family.
    GridPoint { family: String, epsilon: Rational },
    /// A whole sweep grid (trend/summary reports).
    Grid {
        family: String,
        epsilons: Vec<Rational>,
    },
    /// No structured inputs.
    None,
}

fn triangle_doc(triangle: &[(Rational, Rational); 3]) -> Vec<[String; 2]> {
    triangle
        .iter()
        .map(|(x, y)| [format_rational(x), format_rational(y)])
        .collect()
}

impl Serialize for ReportInputs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ReportInputs::Ratios(params) => params.serialize(serializer),
            ReportInputs::RatiosInTriangle { params, triangle } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("ratios", params)?;
                map.serialize_entry("triangle", &triangle_doc(triangle))?;
                map.end()
            }
            ReportInputs::Triangle(triangle) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("triangle", &triangle_doc(triangle))?;
                map.end()
            }
            ReportInputs::Triple(l1, l2, l3) => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("l1", &format_rational(l1))?;
                map.serialize_entry("l2", &format_rational(l2))?;
                map.serialize_entry("l3", &format_rational(l3))?;
                map.end()
            }
            ReportInputs::GridPoint { family, epsilon } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("family", family)?;
                map.serialize_entry("epsilon", &format_rational(epsilon))?;
                map.end()
            }
            ReportInputs::Grid { family, epsilons } => {
                let eps: Vec<String> = epsilons.iter().map(format_rational).collect();
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("family", family)?;
                map.serialize_entry("epsilons", &eps)?;
                map.end()
            }
            ReportInputs::None => {
                let map = serializer.serialize_map(Some(0))?;
                map.end()
            }
        }
    }
}

/// Structured outcome of one check, grid point or probe.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check_name: String,
    pub params: ReportInputs,
    pub verdict: Verdict,
    pub witness: Witness,
    pub notes: String,
}

impl Report {
    pub fn new(check_name: &str, params: ReportInputs, verdict: Verdict) -> Self {
        Report {
            check_name: check_name.to_string(),
            params,
            verdict,
            witness: Witness::new(),
            notes: String::new(),
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    /// One line of JSON, schema-stamped, fixed field order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("schema", SCHEMA)?;
        map.serialize_entry("check_name", &self.check_name)?;
        map.serialize_entry("params", &self.params)?;
        map.serialize_entry("verdict", &self.verdict)?;
        map.serialize_entry("witness", &self.witness)?;
        map.serialize_entry("notes", &self.notes)?;
        map.end()
    }
}

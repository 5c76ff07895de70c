//! Exact-arithmetic kernel for cevian configurations of a triangle.
//!
//! Everything in this crate runs on arbitrary-precision rationals: homogeneous
//! points and lines, cevian scenes, the closed-form area-ratio formulas of
//! Routh's theorem and its relatives, and the concurrency theorems of Ceva,
//! Schlömilch and Zetel. No floating point enters any predicate or comparison;
//! cube roots (which appear in the Hölder-type bounds) are handled by exact
//! sign determination in the cubic extension field.
//!
//! Module map:
//!
//! - [`kernel`] — rationals, homogeneous points/lines, joins, meets, areas.
//! - [`scene`] — construction of the full named-point configuration from a
//!   triangle and six side-division ratios.
//! - [`certified`] — exact reals of the form `a + b·t + c·t²` with `t = ∛s`.
//! - [`forms`] — scalar closed forms for every area ratio the kernel measures.
//! - [`report`] — structured verification results and JSON-lines output.
//! - [`sample`] — seeded rational samplers, with exact constraint solving.
//! - [`verify`] — executable statements of the theorems and counterexamples.
//! - [`explore`] — limiting sweeps, best-constant probe, open-problem probe.

pub mod certified;
pub mod explore;
pub mod forms;
pub mod kernel;
pub mod report;
pub mod sample;
pub mod scene;
pub mod verify;

pub use kernel::{HLine, HPoint, Rational};
pub use report::{Report, Verdict};
pub use scene::{RatioParams, Scene, TriangleName};

use std::fmt;

/// Errors raised by kernel operations, scene construction and the checks.
///
/// Degenerate inputs never produce garbage values; each maps to a named
/// variant here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A homogeneous triple was (0, 0, 0).
    ZeroVector,
    /// Two points handed to `join` (or a section) are the same projective point.
    IdenticalPoints,
    /// Two lines handed to `meet` or `concurrent` are the same projective line.
    IdenticalLines,
    /// A section ratio was not strictly positive.
    InvalidRatio,
    /// A finite point was required but the argument has W = 0.
    InfinitePoint,
    /// `division_ratio` arguments are not collinear.
    NotCollinear,
    /// `division_ratio` point is not strictly between the endpoints.
    NotInterior,
    /// Triangle vertices are collinear.
    DegenerateTriangle,
    /// A named vertex needed for an area is at infinity.
    InfiniteVertex,
    /// The denominator triangle of an area ratio has zero area.
    ZeroDenominator,
    /// A quantity that must be strictly positive was not.
    NonPositiveRatio,
    /// λ₁λ₂λ₃ = 1 was required but does not hold.
    CevaViolation,
    /// uvw = 1 makes the H-triangle degenerate where a proper one is needed.
    DegenerateH,
    /// λ₁λ₂λ₃ = 1 makes the G-triangle degenerate where a proper one is needed.
    DegenerateG,
    /// A check was invoked outside its stated hypothesis.
    PreconditionViolated(String),
    /// `run_suite` was asked for a check name it does not know.
    UnknownCheck(String),
    /// A sweep grid violates its contract (empty, non-monotone, below the
    /// depth cap, or containing a degenerate family point).
    InvalidGrid(String),
    /// A rational or coordinate string failed to parse.
    Parse(String),
    /// A rational had denominator zero.
    ZeroDenominatorParse,
    /// Scene JSON could not be decoded.
    SceneDecode(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector => write!(f, "homogeneous triple must not be (0,0,0)"),
            Error::IdenticalPoints => write!(f, "points coincide projectively"),
            Error::IdenticalLines => write!(f, "lines coincide projectively"),
            Error::InvalidRatio => write!(f, "section ratio must be strictly positive"),
            Error::InfinitePoint => write!(f, "point at infinity where a finite point is required"),
            Error::NotCollinear => write!(f, "points are not collinear"),
            Error::NotInterior => write!(f, "point is not strictly between the endpoints"),
            Error::DegenerateTriangle => write!(f, "triangle vertices are collinear"),
            Error::InfiniteVertex => write!(f, "triangle vertex at infinity"),
            Error::ZeroDenominator => write!(f, "denominator triangle has zero area"),
            Error::NonPositiveRatio => write!(f, "ratio must be strictly positive"),
            Error::CevaViolation => write!(f, "lambda product must equal 1"),
            Error::DegenerateH => write!(f, "uvw = 1: H-triangle degenerates to a point"),
            Error::DegenerateG => write!(f, "lambda product = 1: G-triangle degenerates to a point"),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::UnknownCheck(name) => write!(f, "unknown check: {name}"),
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            Error::Parse(s) => write!(f, "cannot parse rational from {s:?}"),
            Error::ZeroDenominatorParse => write!(f, "rational denominator must not be zero"),
            Error::SceneDecode(msg) => write!(f, "scene decode error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

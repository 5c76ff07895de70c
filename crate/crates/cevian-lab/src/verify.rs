//! Executable statements of the theorems, counterexample claims and
//! containment conditionals, each producing a structured [`Report`].
//!
//! Every comparison in this module is exact: rational equality, exact
//! determinant vanishing, or certified sign determination for the one bound
//! that involves a cube root. No epsilons.

use crate::certified::CertifiedReal;
use crate::forms::{holder_bound_rhs, rigby_areas, rigby_lhs, rigby_refinement_factor};
use crate::kernel::{
    format_rational, incident, join, meet, section_point, signed_area, HLine, HPoint, Rational,
};
use crate::report::{Report, ReportInputs, Verdict, Witness};
use crate::sample::Sampler;
use crate::scene::{build_default_scene, point_in_triangle, RatioParams, Scene, TriangleName};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Dyadic precision used when a certified bound must be reported as an
/// enclosure.
const ENCLOSURE_BITS: u32 = 64;

/// The named checks the suite can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    Theorem21,
    Corollary22,
    Zetel,
    Schlomilch,
    Moebius,
    Rigby,
    Theorem24,
    Claim10,
    Claim15,
}

impl CheckId {
    pub fn all() -> [CheckId; 9] {
        [
            CheckId::Theorem21,
            CheckId::Corollary22,
            CheckId::Zetel,
            CheckId::Schlomilch,
            CheckId::Moebius,
            CheckId::Rigby,
            CheckId::Theorem24,
            CheckId::Claim10,
            CheckId::Claim15,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Theorem21 => "theorem21",
            CheckId::Corollary22 => "corollary22",
            CheckId::Zetel => "zetel",
            CheckId::Schlomilch => "schlomilch",
            CheckId::Moebius => "moebius",
            CheckId::Rigby => "rigby",
            CheckId::Theorem24 => "theorem24",
            CheckId::Claim10 => "claim10",
            CheckId::Claim15 => "claim15",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem21" => Ok(CheckId::Theorem21),
            "corollary22" => Ok(CheckId::Corollary22),
            "zetel" => Ok(CheckId::Zetel),
            "schlomilch" => Ok(CheckId::Schlomilch),
            "moebius" => Ok(CheckId::Moebius),
            "rigby" => Ok(CheckId::Rigby),
            "theorem24" => Ok(CheckId::Theorem24),
            "claim10" => Ok(CheckId::Claim10),
            "claim15" => Ok(CheckId::Claim15),
            other => Err(Error::UnknownCheck(other.to_string())),
        }
    }
}

fn push_certified(witness: &mut Witness, name: &str, value: &CertifiedReal) {
    match value.as_exact() {
        Some(r) => witness.rational(name, r.clone()),
        None => {
            let (lo, hi) = value.enclosure(ENCLOSURE_BITS);
            witness.enclosure(name, lo, hi);
        }
    }
}

pub(crate) fn point_text(p: &HPoint) -> String {
    match p.to_affine() {
        Some((x, y)) => format!("{},{}", format_rational(&x), format_rational(&y)),
        None => "at_infinity".to_string(),
    }
}

/// The sharp bound: Area(RST)/Area(DEF) never exceeds
/// (s−1)²/(s^(2/3)+s^(1/3)+1) ³ with s the product of all six ratios.
pub fn check_theorem_2_1(params: &RatioParams) -> Result<Report> {
    let scene = build_default_scene(params)?;
    let inputs = ReportInputs::Ratios(params.clone());
    if !scene.degeneracies.is_empty() {
        let flags: Vec<String> = scene.degeneracies.iter().map(|d| d.to_string()).collect();
        return Ok(Report::new("theorem21", inputs, Verdict::Degenerate)
            .with_notes(format!("construction degeneracies: {}", flags.join(", "))));
    }
    let lhs = crate::scene::geometric_ratio(&scene, TriangleName::Rst, TriangleName::Def)?;
    let product = params.full_product();
    let bound = holder_bound_rhs(&product)?;
    let within = bound.cmp_rational(&lhs) != Ordering::Less;
    let mut witness = Witness::new();
    witness.rational("area_ratio", lhs.clone());
    push_certified(&mut witness, "bound", &bound);
    witness.rational("product", product);
    if let Some(exact) = bound.as_exact() {
        witness.flag("equality", exact == &lhs);
    }
    let verdict = if within { Verdict::Holds } else { Verdict::Fails };
    Ok(Report::new("theorem21", inputs, verdict).with_witness(witness))
}

fn concurrency_report(check_name: &str, params: &RatioParams) -> Result<Report> {
    let scene = build_default_scene(params)?;
    let dn = scene.line_dn()?;
    let eq = scene.line_eq()?;
    let fp = scene.line_fp()?;
    // Proportional lines share every point, so a coincident pair counts as
    // concurrent.
    let concurrent = match crate::kernel::concurrent(&dn, &eq, &fp) {
        Ok(flag) => flag,
        Err(Error::IdenticalLines) => true,
        Err(e) => return Err(e),
    };
    let rst_area = scene.area(TriangleName::Rst)?;
    let mut witness = Witness::new();
    witness.flag("concurrent", concurrent);
    witness.rational("rst_area", rst_area.clone());
    witness.text("common_point", point_text(&scene.r));
    let verdict = if concurrent && rst_area.is_zero() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new(check_name, ReportInputs::Ratios(params.clone()), verdict)
        .with_witness(witness))
}

/// If the product of all six ratios is exactly 1, the three inner cevians
/// DN, EQ, FP are concurrent.
pub fn check_corollary_2_2(params: &RatioParams) -> Result<Report> {
    if !params.full_product().is_one() {
        return Err(Error::PreconditionViolated(
            "corollary22 requires the product of all six ratios to equal 1".to_string(),
        ));
    }
    concurrency_report("corollary22", params)
}

/// Concurrency of DN, EQ, FP when both cevian trios are themselves
/// concurrent (λ₁λ₂λ₃ = 1 and uvw = 1); a special case kept separate for
/// reporting.
pub fn check_zetel(params: &RatioParams) -> Result<Report> {
    if !params.lambda_product().is_one() || !params.uvw_product().is_one() {
        return Err(Error::PreconditionViolated(
            "zetel requires both ratio products to equal 1".to_string(),
        ));
    }
    concurrency_report("zetel", params)
}

/// Exact foot of the perpendicular from `p` onto the line through `q`, `r`.
fn perpendicular_foot(p: &HPoint, q: &HPoint, r: &HPoint) -> Result<HPoint> {
    let (px, py) = p.to_affine().ok_or(Error::InfinitePoint)?;
    let (qx, qy) = q.to_affine().ok_or(Error::InfinitePoint)?;
    let (rx, ry) = r.to_affine().ok_or(Error::InfinitePoint)?;
    let dx = &rx - &qx;
    let dy = &ry - &qy;
    let len2 = &dx * &dx + &dy * &dy;
    if len2.is_zero() {
        return Err(Error::IdenticalPoints);
    }
    let t = ((&px - &qx) * &dx + (&py - &qy) * &dy) / len2;
    Ok(HPoint::affine(qx + &t * dx, qy + t * dy))
}

fn squared_distance(p: &HPoint, q: &HPoint) -> Result<Rational> {
    let (px, py) = p.to_affine().ok_or(Error::InfinitePoint)?;
    let (qx, qy) = q.to_affine().ok_or(Error::InfinitePoint)?;
    let dx = px - qx;
    let dy = py - qy;
    Ok(&dx * &dx + &dy * &dy)
}

/// Exact symmedian point: the barycentric combination of the vertices
/// weighted by the squared lengths of their opposite sides.
pub fn symmedian_point(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<HPoint> {
    let wa = squared_distance(b, c)?;
    let wb = squared_distance(c, a)?;
    let wc = squared_distance(a, b)?;
    let total = &wa + &wb + &wc;
    let (ax, ay) = a.to_affine().ok_or(Error::InfinitePoint)?;
    let (bx, by) = b.to_affine().ok_or(Error::InfinitePoint)?;
    let (cx, cy) = c.to_affine().ok_or(Error::InfinitePoint)?;
    Ok(HPoint::affine(
        (&wa * ax + &wb * bx + &wc * cx) / &total,
        (wa * ay + wb * by + wc * cy) / total,
    ))
}

fn triangle_inputs(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<ReportInputs> {
    let mut coords = Vec::with_capacity(3);
    for p in [a, b, c] {
        coords.push(p.to_affine().ok_or(Error::InfinitePoint)?);
    }
    Ok(ReportInputs::Triangle(Box::new([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
    ])))
}

/// The lines joining each side midpoint to the midpoint of the altitude
/// dropped onto that side are concurrent at the symmedian point.
///
/// Right triangles make two of the three lines coincide (two altitude feet
/// land on the right-angle vertex); the common point is then pinned by the
/// remaining distinct pair. The verdict demands that every line passes
/// through the symmedian point exactly.
pub fn check_schlomilch(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<Report> {
    let inputs = triangle_inputs(a, b, c)?;
    if signed_area(a, b, c)?.is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let one = Rational::one();
    let mid = |p: &HPoint, q: &HPoint| section_point(p, q, &one);
    // Side midpoints: D on BC, E on CA, F on AB.
    let d = mid(b, c)?;
    let e = mid(c, a)?;
    let f = mid(a, b)?;
    // Altitude midpoints: halfway from each vertex to its foot.
    let ma = mid(a, &perpendicular_foot(a, b, c)?)?;
    let mb = mid(b, &perpendicular_foot(b, c, a)?)?;
    let mc = mid(c, &perpendicular_foot(c, a, b)?)?;
    // Each side midpoint differs from its altitude midpoint (else the apex
    // would lie on the opposite side), so all three joins are well-defined.
    let lines = [join(&d, &ma)?, join(&e, &mb)?, join(&f, &mc)?];
    let symmedian = symmedian_point(a, b, c)?;
    let all_through = lines.iter().all(|l| incident(&symmedian, l));
    // Cross-check by direct intersection of a distinct pair.
    let mut distinct_pair: Option<(&HLine, &HLine)> = None;
    let mut coincident_pair = false;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if lines[i].coincides(&lines[j]) {
            coincident_pair = true;
        } else if distinct_pair.is_none() {
            distinct_pair = Some((&lines[i], &lines[j]));
        }
    }
    let meet_matches = match distinct_pair {
        Some((l, m)) => meet(l, m)?.coincides(&symmedian),
        // All three lines coincident cannot happen for a proper triangle.
        None => false,
    };
    let verdict = if all_through && meet_matches {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut witness = Witness::new();
    witness.text("point", point_text(&symmedian));
    witness.flag("all_lines_through_point", all_through);
    witness.flag("intersection_matches", meet_matches);
    witness.flag("coincident_line_pair", coincident_pair);
    let mut report = Report::new("schlomilch", inputs, verdict).with_witness(witness);
    if coincident_pair {
        report = report.with_notes(
            "right triangle: two altitude-midpoint lines coincide; concurrency judged \
             through the remaining distinct pair",
        );
    }
    Ok(report)
}

/// At concurrency (product exactly 1) the cevian-intersection form
/// x³+(p+q+r)x²−4pqr vanishes identically.
pub fn check_moebius(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Report> {
    if !(l1 * l2 * l3).is_one() {
        return Err(Error::PreconditionViolated(
            "moebius requires l1·l2·l3 = 1".to_string(),
        ));
    }
    let areas = rigby_areas(l1, l2, l3, &Rational::one())?;
    let lhs = rigby_lhs(&areas);
    let mut witness = Witness::new();
    witness.rational("lhs", lhs.clone());
    let verdict = if lhs.is_zero() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new(
        "moebius",
        ReportInputs::Triple(l1.clone(), l2.clone(), l3.clone()),
        verdict,
    )
    .with_witness(witness))
}

/// x³+(p+q+r)x²−4pqr ≥ 0 for all positive ratios, vanishing exactly at
/// concurrency.
pub fn check_rigby(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Report> {
    let areas = rigby_areas(l1, l2, l3, &Rational::one())?;
    let lhs = rigby_lhs(&areas);
    let product = l1 * l2 * l3;
    let equality_iff_concurrent = lhs.is_zero() == product.is_one();
    let mut witness = Witness::new();
    witness.rational("lhs", lhs.clone());
    witness.rational("product", product);
    witness.flag("equality", lhs.is_zero());
    let verdict = if !lhs.is_negative() && equality_iff_concurrent {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new(
        "rigby",
        ReportInputs::Triple(l1.clone(), l2.clone(), l3.clone()),
        verdict,
    )
    .with_witness(witness))
}

/// The sharpened form x³+(p+q+r)x² − 4pqr ≥ x²y, with the exact multiplier
/// F = lhs/(x²y) strictly above 1 whenever y > 0.
pub fn check_theorem_2_4(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Report> {
    let areas = rigby_areas(l1, l2, l3, &Rational::one())?;
    let lhs = rigby_lhs(&areas);
    let x2y = &areas.x * &areas.x * &areas.y;
    let factor = rigby_refinement_factor(l1, l2, l3)?;
    let refinement_holds = lhs >= x2y;
    let factor_sharp = areas.y.is_zero() || factor > Rational::one();
    let mut witness = Witness::new();
    witness.rational("lhs", lhs.clone());
    witness.rational("x2y", x2y.clone());
    witness.rational("factor", factor.clone());
    witness.flag("factor_exceeds_one", factor > Rational::one());
    let verdict = if refinement_holds && factor_sharp {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(Report::new(
        "theorem24",
        ReportInputs::Triple(l1.clone(), l2.clone(), l3.clone()),
        verdict,
    )
    .with_witness(witness))
}

/// Shared body of the two conditional containment claims: hypothesis point
/// inside the reference triangle ⇒ Area(RST) strictly below the reference
/// area. When the hypothesis fails the claim is silent (degenerate verdict)
/// and the exact area ratio is recorded — that is where the counterexamples
/// live.
fn containment_claim(
    check_name: &str,
    params: &RatioParams,
    scene: &Scene,
    hypothesis_point: &HPoint,
    point_label: &str,
    reference: TriangleName,
) -> Result<Report> {
    let inputs = ReportInputs::Ratios(params.clone());
    let inside = point_in_triangle(scene, hypothesis_point, reference)?;
    let [v1, v2, v3] = scene.vertices(reference);
    let on_boundary = inside
        && (incident(hypothesis_point, &join(v1, v2)?)
            || incident(hypothesis_point, &join(v2, v3)?)
            || incident(hypothesis_point, &join(v3, v1)?));
    let rst_area = scene.area(TriangleName::Rst)?;
    let reference_area = scene.area(reference)?;
    let ratio = &rst_area / &reference_area;
    let mut witness = Witness::new();
    witness.flag(point_label, inside);
    witness.flag("on_boundary", on_boundary);
    witness.rational("rst_area", rst_area.clone());
    witness.rational("reference_area", reference_area.clone());
    witness.rational("ratio", ratio.clone());
    witness.flag("exceeds_one", ratio > Rational::one());
    if !inside {
        return Ok(
            Report::new(check_name, inputs, Verdict::Degenerate)
                .with_witness(witness)
                .with_notes("hypothesis not met; exact area ratio recorded"),
        );
    }
    // Exploratory side-question: does the full containment RST ⊆ reference
    // hold, not just the area consequence? Flagged, never part of the
    // verdict.
    let vertices_inside = point_in_triangle(scene, &scene.r, reference)?
        && point_in_triangle(scene, &scene.s, reference)?
        && point_in_triangle(scene, &scene.t, reference)?;
    witness.flag("rst_vertices_inside", vertices_inside);
    let strict = rst_area < reference_area;
    let verdict = if strict { Verdict::Holds } else { Verdict::Fails };
    let mut report = Report::new(check_name, inputs, verdict).with_witness(witness);
    if !vertices_inside {
        report = report.with_notes(
            "area inequality judged as stated, but a vertex of RST escapes the reference \
             triangle; flagged for investigation",
        );
    }
    Ok(report)
}

/// Conditional claim: H inside the G-triangle ⇒ Area(RST) < Area(G₁G₂G₃).
/// Requires a proper G-triangle (λ₁λ₂λ₃ ≠ 1) and concurrent second trio
/// (uvw = 1) so that H is a single point.
pub fn check_claim_10(params: &RatioParams) -> Result<Report> {
    if params.lambda_product().is_one() {
        return Err(Error::PreconditionViolated(
            "claim10 requires lambda1·lambda2·lambda3 != 1".to_string(),
        ));
    }
    if !params.uvw_product().is_one() {
        return Err(Error::PreconditionViolated(
            "claim10 requires u·v·w = 1".to_string(),
        ));
    }
    let scene = build_default_scene(params)?;
    debug_assert!(scene.h1.coincides(&scene.h2) && scene.h2.coincides(&scene.h3));
    let h = scene.h1.clone();
    containment_claim("claim10", params, &scene, &h, "h_inside", TriangleName::G1G2G3)
}

/// Conditional claim: G inside the H-triangle ⇒ Area(RST) < Area(H₁H₂H₃).
/// Requires concurrent first trio (λ₁λ₂λ₃ = 1) and a proper H-triangle
/// (uvw ≠ 1).
pub fn check_claim_15(params: &RatioParams) -> Result<Report> {
    if !params.lambda_product().is_one() {
        return Err(Error::PreconditionViolated(
            "claim15 requires lambda1·lambda2·lambda3 = 1".to_string(),
        ));
    }
    if params.uvw_product().is_one() {
        return Err(Error::PreconditionViolated(
            "claim15 requires u·v·w != 1".to_string(),
        ));
    }
    let scene = build_default_scene(params)?;
    debug_assert!(scene.g1.coincides(&scene.g2) && scene.g2.coincides(&scene.g3));
    let g = scene.g1.clone();
    containment_claim("claim15", params, &scene, &g, "g_inside", TriangleName::H1H2H3)
}

/// Runs `samples` freshly sampled instances of each named check, in order.
/// Sampling honors each check's precondition by construction; the whole run
/// is a pure function of (seed, samples, bound, checks).
pub fn run_suite(
    seed: u64,
    samples: usize,
    bound: u64,
    checks: &[CheckId],
) -> Result<Vec<Report>> {
    if samples == 0 {
        return Err(Error::PreconditionViolated(
            "samples must be at least 1".to_string(),
        ));
    }
    let mut sampler = Sampler::new(seed, bound);
    let mut reports = Vec::with_capacity(samples * checks.len());
    for check in checks {
        for _ in 0..samples {
            let report = match check {
                CheckId::Theorem21 => check_theorem_2_1(&sampler.params_free())?,
                CheckId::Corollary22 => check_corollary_2_2(&sampler.params_full_product_one())?,
                CheckId::Zetel => check_zetel(&sampler.params_double_ceva())?,
                CheckId::Schlomilch => {
                    let (a, b, c) = sampler.triangle();
                    check_schlomilch(&a, &b, &c)?
                }
                CheckId::Moebius => {
                    let (l1, l2, l3) = sampler.triple_product_one();
                    check_moebius(&l1, &l2, &l3)?
                }
                CheckId::Rigby => {
                    let (l1, l2, l3) = sampler.triple();
                    check_rigby(&l1, &l2, &l3)?
                }
                CheckId::Theorem24 => {
                    let (l1, l2, l3) = sampler.triple();
                    check_theorem_2_4(&l1, &l2, &l3)?
                }
                CheckId::Claim10 => check_claim_10(&sampler.params_h_point_g_proper())?,
                CheckId::Claim15 => check_claim_15(&sampler.params_g_point_h_proper())?,
            };
            reports.push(report);
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_int};
    use crate::report::WitnessValue;

    fn params(vals: [(i64, i64); 6]) -> RatioParams {
        RatioParams::new(
            rat(vals[0].0, vals[0].1),
            rat(vals[1].0, vals[1].1),
            rat(vals[2].0, vals[2].1),
            rat(vals[3].0, vals[3].1),
            rat(vals[4].0, vals[4].1),
            rat(vals[5].0, vals[5].1),
        )
        .unwrap()
    }

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::all() {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!(
            "nosuch".parse::<CheckId>(),
            Err(Error::UnknownCheck("nosuch".to_string()))
        );
    }

    #[test]
    fn theorem21_equality_witness_is_exact() {
        let report =
            check_theorem_2_1(&params([(1, 1), (1, 1), (8, 1), (9, 8), (4, 9), (2, 1)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("area_ratio"),
            Some(&WitnessValue::Rational(rat(1, 7)))
        );
        assert_eq!(
            report.witness.get("bound"),
            Some(&WitnessValue::Rational(rat(1, 7)))
        );
        assert_eq!(report.witness.get("equality"), Some(&WitnessValue::Bool(true)));
    }

    #[test]
    fn theorem21_all_ones_is_zero_vs_zero() {
        let report = check_theorem_2_1(&RatioParams::all_ones()).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("area_ratio"),
            Some(&WitnessValue::Rational(rat_int(0)))
        );
    }

    #[test]
    fn theorem21_certified_path_on_non_cube_product() {
        // product = 2 is not a rational cube: bound reported as enclosure.
        let report =
            check_theorem_2_1(&params([(2, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(matches!(
            report.witness.get("bound"),
            Some(&WitnessValue::Enclosure(_, _))
        ));
    }

    #[test]
    fn corollary22_concurrency() {
        let report = check_corollary_2_2(&RatioParams::all_ones()).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        // λ=(2,3,1/6), (u,v,w)=(5,1/2,2/5): full product exactly 1.
        let report =
            check_corollary_2_2(&params([(2, 1), (3, 1), (1, 6), (5, 1), (1, 2), (2, 5)]))
                .unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(matches!(
            check_corollary_2_2(&params([(2, 1), (2, 1), (2, 1), (1, 1), (1, 1), (1, 1)])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn zetel_double_ceva() {
        let report =
            check_zetel(&params([(1, 1), (1, 1), (1, 1), (2, 1), (3, 1), (1, 6)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        let report =
            check_zetel(&params([(2, 1), (1, 2), (1, 1), (1, 2), (2, 1), (1, 1)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(matches!(
            check_zetel(&params([(2, 1), (2, 1), (2, 1), (1, 1), (1, 1), (1, 1)])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn schlomilch_generic_triangle() {
        let report = check_schlomilch(
            &HPoint::from_ints(0, 0),
            &HPoint::from_ints(4, 0),
            &HPoint::from_ints(1, 3),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("point"),
            Some(&WitnessValue::Text("14/11,12/11".to_string()))
        );
        assert_eq!(
            report.witness.get("coincident_line_pair"),
            Some(&WitnessValue::Bool(false))
        );
    }

    #[test]
    fn schlomilch_right_isoceles_degenerates_gracefully() {
        let report = check_schlomilch(
            &HPoint::from_ints(0, 0),
            &HPoint::from_ints(1, 0),
            &HPoint::from_ints(0, 1),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("point"),
            Some(&WitnessValue::Text("1/4,1/4".to_string()))
        );
        assert_eq!(
            report.witness.get("coincident_line_pair"),
            Some(&WitnessValue::Bool(true))
        );
    }

    #[test]
    fn schlomilch_isoceles_point_on_axis() {
        // A(0,0), B(2,0), C(1,h): the common point must lie on x = 1.
        for h in [1, 2, 5] {
            let report = check_schlomilch(
                &HPoint::from_ints(0, 0),
                &HPoint::from_ints(2, 0),
                &HPoint::from_ints(1, h),
            )
            .unwrap();
            assert_eq!(report.verdict, Verdict::Holds);
            match report.witness.get("point") {
                Some(WitnessValue::Text(s)) => assert!(s.starts_with("1/1,")),
                other => panic!("unexpected point witness {other:?}"),
            }
        }
    }

    #[test]
    fn schlomilch_obtuse_triangle_feet_outside() {
        // Obtuse at A: the foot from B lands outside segment CA.
        let report = check_schlomilch(
            &HPoint::from_ints(0, 0),
            &HPoint::from_ints(10, 1),
            &HPoint::from_ints(-1, 2),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn schlomilch_rejects_collinear_input() {
        assert_eq!(
            check_schlomilch(
                &HPoint::from_ints(0, 0),
                &HPoint::from_ints(1, 1),
                &HPoint::from_ints(3, 3),
            ),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn moebius_zero_at_concurrency() {
        let report = check_moebius(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        let report = check_moebius(&rat_int(2), &rat_int(3), &rat(1, 6)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("lhs"),
            Some(&WitnessValue::Rational(rat_int(0)))
        );
        assert!(matches!(
            check_moebius(&rat_int(2), &rat_int(2), &rat_int(2)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn rigby_nonnegative_with_sharp_equality() {
        let report = check_rigby(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.witness.get("equality"), Some(&WitnessValue::Bool(true)));
        let report = check_rigby(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("lhs"),
            Some(&WitnessValue::Rational(rat(49, 729)))
        );
    }

    #[test]
    fn theorem24_refinement() {
        let report = check_theorem_2_4(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        let report = check_theorem_2_4(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("factor"),
            Some(&WitnessValue::Rational(rat(343, 81)))
        );
        let report = check_theorem_2_4(&rat(1, 10), &rat(1, 10), &rat(1, 10)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness.get("factor"),
            Some(&WitnessValue::Rational(rat(1367631, 1002001)))
        );
    }

    #[test]
    fn claim10_holds_when_hypothesis_met() {
        let report =
            check_claim_10(&params([(2, 1), (2, 1), (2, 1), (1, 1), (2, 1), (1, 2)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.witness.get("h_inside"), Some(&WitnessValue::Bool(true)));
    }

    #[test]
    fn claim10_counterexample_parameters_are_degenerate_with_large_ratio() {
        let report = check_claim_10(&params([
            (1, 1),
            (1, 1000),
            (1, 1),
            (1, 3),
            (3, 40),
            (40, 1),
        ]))
        .unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert_eq!(report.witness.get("h_inside"), Some(&WitnessValue::Bool(false)));
        assert_eq!(
            report.witness.get("ratio"),
            Some(&WitnessValue::Rational(rat(722522520720, 669650786047)))
        );
        assert_eq!(report.witness.get("exceeds_one"), Some(&WitnessValue::Bool(true)));
    }

    #[test]
    fn claim10_preconditions() {
        assert!(matches!(
            check_claim_10(&RatioParams::all_ones()),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_claim_10(&params([(2, 1), (2, 1), (2, 1), (2, 1), (1, 1), (1, 1)])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn claim15_holds_when_hypothesis_met() {
        let report =
            check_claim_15(&params([(1, 1), (1, 1), (1, 1), (2, 1), (2, 1), (2, 1)])).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.witness.get("g_inside"), Some(&WitnessValue::Bool(true)));
    }

    #[test]
    fn claim15_counterexample_parameters_are_degenerate_with_large_ratio() {
        let report = check_claim_15(&params([
            (1, 1),
            (1, 1),
            (1, 1),
            (1, 100),
            (1, 1),
            (20, 1),
        ]))
        .unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert_eq!(
            report.witness.get("ratio"),
            Some(&WitnessValue::Rational(rat(36040, 30217)))
        );
        assert_eq!(report.witness.get("exceeds_one"), Some(&WitnessValue::Bool(true)));
    }

    #[test]
    fn claim15_preconditions() {
        assert!(matches!(
            check_claim_15(&params([(2, 1), (1, 1), (1, 1), (1, 100), (1, 1), (20, 1)])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_claim_15(&params([(1, 1), (1, 1), (1, 1), (1, 2), (2, 1), (1, 1)])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn suite_is_deterministic_and_routed() {
        let checks = [CheckId::Moebius];
        let run1 = run_suite(42, 10, 20, &checks).unwrap();
        let run2 = run_suite(42, 10, 20, &checks).unwrap();
        assert_eq!(run1.len(), 10);
        let lines1: Vec<String> = run1.iter().map(Report::to_json_line).collect();
        let lines2: Vec<String> = run2.iter().map(Report::to_json_line).collect();
        assert_eq!(lines1, lines2);
        for report in &run1 {
            assert_eq!(report.verdict, Verdict::Holds);
        }
    }

    #[test]
    fn suite_rejects_zero_samples_and_propagates_order() {
        assert!(matches!(
            run_suite(1, 0, 20, &[CheckId::Rigby]),
            Err(Error::PreconditionViolated(_))
        ));
        let reports = run_suite(7, 3, 20, &[CheckId::Moebius, CheckId::Rigby]).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports[..3].iter().all(|r| r.check_name == "moebius"));
        assert!(reports[3..].iter().all(|r| r.check_name == "rigby"));
    }
}

//! Construction of the full cevian configuration.
//!
//! From a triangle ABC and six positive side-division ratios the builder
//! places two points on each side (D and K on BC, E and L on CA, F and M on
//! AB), then derives every named intersection the area theorems measure:
//!
//! - N = AK∩EF, Q = BL∩DF, P = CM∩DE;
//! - R = DN∩EQ, S = FP∩EQ, T = FP∩DN (the inner cevian triangle of DEF);
//! - G₁ = BE∩CF, G₂ = AD∩CF, G₃ = AD∩BE (Routh triangle of the first trio);
//! - H₁ = BL∩CM, H₂ = AK∩CM, H₃ = AK∩BL (Routh triangle of the second trio).
//!
//! All coordinates stay rational; every stored point is exactly incident to
//! both of its defining lines.

use crate::kernel::{
    division_ratio, format_rational, incident, join, meet, parse_rational, section_point,
    signed_area, HLine, HPoint, Rational,
};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// The six positive ratios fixing a configuration:
/// λ₁ = |BD|/|DC|, λ₂ = |CE|/|EA|, λ₃ = |AF|/|FB|,
/// u = |BK|/|KC|, v = |CL|/|LA|, w = |AM|/|MB|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioParams {
    lambda1: Rational,
    lambda2: Rational,
    lambda3: Rational,
    u: Rational,
    v: Rational,
    w: Rational,
}

impl RatioParams {
    /// Validates that all six ratios are strictly positive.
    pub fn new(
        lambda1: Rational,
        lambda2: Rational,
        lambda3: Rational,
        u: Rational,
        v: Rational,
        w: Rational,
    ) -> Result<Self> {
        for r in [&lambda1, &lambda2, &lambda3, &u, &v, &w] {
            if !r.is_positive() {
                return Err(Error::NonPositiveRatio);
            }
        }
        Ok(RatioParams {
            lambda1,
            lambda2,
            lambda3,
            u,
            v,
            w,
        })
    }

    /// The fully symmetric configuration: all six ratios equal to 1.
    pub fn all_ones() -> Self {
        let one = Rational::one;
        RatioParams::new(one(), one(), one(), one(), one(), one()).expect("1 > 0")
    }

    pub fn lambda1(&self) -> &Rational {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &Rational {
        &self.lambda2
    }

    pub fn lambda3(&self) -> &Rational {
        &self.lambda3
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn w(&self) -> &Rational {
        &self.w
    }

    /// λ₁λ₂λ₃ — equals 1 exactly when AD, BE, CF are concurrent (Ceva).
    pub fn lambda_product(&self) -> Rational {
        &self.lambda1 * &self.lambda2 * &self.lambda3
    }

    /// uvw — equals 1 exactly when AK, BL, CM are concurrent (Ceva).
    pub fn uvw_product(&self) -> Rational {
        &self.u * &self.v * &self.w
    }

    /// λ₁λ₂λ₃uvw, the quantity the Hölder-type bound is expressed in.
    pub fn full_product(&self) -> Rational {
        self.lambda_product() * self.uvw_product()
    }
}

impl Serialize for RatioParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("lambda1", &format_rational(&self.lambda1))?;
        map.serialize_entry("lambda2", &format_rational(&self.lambda2))?;
        map.serialize_entry("lambda3", &format_rational(&self.lambda3))?;
        map.serialize_entry("u", &format_rational(&self.u))?;
        map.serialize_entry("v", &format_rational(&self.v))?;
        map.serialize_entry("w", &format_rational(&self.w))?;
        map.end()
    }
}

/// The triangles whose areas the formulas compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleName {
    Abc,
    Def,
    G1G2G3,
    H1H2H3,
    Rst,
    Aef,
    Bfd,
    Cde,
}

impl fmt::Display for TriangleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleName::Abc => "ABC",
            TriangleName::Def => "DEF",
            TriangleName::G1G2G3 => "G1G2G3",
            TriangleName::H1H2H3 => "H1H2H3",
            TriangleName::Rst => "RST",
            TriangleName::Aef => "AEF",
            TriangleName::Bfd => "BFD",
            TriangleName::Cde => "CDE",
        };
        f.write_str(s)
    }
}

/// Non-fatal construction degeneracies: a derived intersection landed at
/// infinity. Area operations touching such a point raise
/// [`Error::InfiniteVertex`] instead of guessing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degeneracy {
    NAtInfinity,
    QAtInfinity,
    PAtInfinity,
    RAtInfinity,
    SAtInfinity,
    TAtInfinity,
}

impl Degeneracy {
    fn as_str(&self) -> &'static str {
        match self {
            Degeneracy::NAtInfinity => "N_at_infinity",
            Degeneracy::QAtInfinity => "Q_at_infinity",
            Degeneracy::PAtInfinity => "P_at_infinity",
            Degeneracy::RAtInfinity => "R_at_infinity",
            Degeneracy::SAtInfinity => "S_at_infinity",
            Degeneracy::TAtInfinity => "T_at_infinity",
        }
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Degeneracy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N_at_infinity" => Ok(Degeneracy::NAtInfinity),
            "Q_at_infinity" => Ok(Degeneracy::QAtInfinity),
            "P_at_infinity" => Ok(Degeneracy::PAtInfinity),
            "R_at_infinity" => Ok(Degeneracy::RAtInfinity),
            "S_at_infinity" => Ok(Degeneracy::SAtInfinity),
            "T_at_infinity" => Ok(Degeneracy::TAtInfinity),
            other => Err(Error::SceneDecode(format!("unknown degeneracy {other:?}"))),
        }
    }
}

/// A fully constructed configuration. Immutable after build; cheap to clone
/// and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    pub a: HPoint,
    pub b: HPoint,
    pub c: HPoint,
    pub d: HPoint,
    pub e: HPoint,
    pub f: HPoint,
    pub k: HPoint,
    pub l: HPoint,
    pub m: HPoint,
    pub n: HPoint,
    pub q: HPoint,
    pub p: HPoint,
    pub r: HPoint,
    pub s: HPoint,
    pub t: HPoint,
    pub g1: HPoint,
    pub g2: HPoint,
    pub g3: HPoint,
    pub h1: HPoint,
    pub h2: HPoint,
    pub h3: HPoint,
    pub degeneracies: BTreeSet<Degeneracy>,
}

/// The canonical frame used when only ratios are given: A=(0,0), B=(1,0),
/// C=(0,1). Area ratios are affine-invariant, so this frame loses nothing.
pub fn default_triangle() -> (HPoint, HPoint, HPoint) {
    (
        HPoint::from_ints(0, 0),
        HPoint::from_ints(1, 0),
        HPoint::from_ints(0, 1),
    )
}

/// Builds the whole configuration from a triangle and the six ratios.
pub fn build_scene(a: &HPoint, b: &HPoint, c: &HPoint, params: &RatioParams) -> Result<Scene> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::InfinitePoint);
    }
    if signed_area(a, b, c)?.is_zero() {
        return Err(Error::DegenerateTriangle);
    }

    let d = section_point(b, c, params.lambda1())?;
    let e = section_point(c, a, params.lambda2())?;
    let f = section_point(a, b, params.lambda3())?;
    let k = section_point(b, c, params.u())?;
    let l = section_point(c, a, params.v())?;
    let m = section_point(a, b, params.w())?;

    let ak = join(a, &k)?;
    let bl = join(b, &l)?;
    let cm = join(c, &m)?;
    let ef = join(&e, &f)?;
    let df = join(&d, &f)?;
    let de = join(&d, &e)?;

    let n = meet(&ak, &ef)?;
    let q = meet(&bl, &df)?;
    let p = meet(&cm, &de)?;

    let dn = join(&d, &n)?;
    let eq = join(&e, &q)?;
    let fp = join(&f, &p)?;

    let r = meet(&dn, &eq)?;
    let s = meet(&fp, &eq)?;
    let t = meet(&fp, &dn)?;

    let ad = join(a, &d)?;
    let be = join(b, &e)?;
    let cf = join(c, &f)?;

    let g1 = meet(&be, &cf)?;
    let g2 = meet(&ad, &cf)?;
    let g3 = meet(&ad, &be)?;

    let h1 = meet(&bl, &cm)?;
    let h2 = meet(&ak, &cm)?;
    let h3 = meet(&ak, &bl)?;

    let mut degeneracies = BTreeSet::new();
    for (point, flag) in [
        (&n, Degeneracy::NAtInfinity),
        (&q, Degeneracy::QAtInfinity),
        (&p, Degeneracy::PAtInfinity),
        (&r, Degeneracy::RAtInfinity),
        (&s, Degeneracy::SAtInfinity),
        (&t, Degeneracy::TAtInfinity),
    ] {
        if !point.is_finite() {
            degeneracies.insert(flag);
        }
    }

    debug_assert!(incident(&n, &ak) && incident(&n, &ef));
    debug_assert!(incident(&q, &bl) && incident(&q, &df));
    debug_assert!(incident(&p, &cm) && incident(&p, &de));
    debug_assert!(incident(&r, &dn) && incident(&r, &eq));
    debug_assert!(incident(&s, &fp) && incident(&s, &eq));
    debug_assert!(incident(&t, &fp) && incident(&t, &dn));

    Ok(Scene {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        d,
        e,
        f,
        k,
        l,
        m,
        n,
        q,
        p,
        r,
        s,
        t,
        g1,
        g2,
        g3,
        h1,
        h2,
        h3,
        degeneracies,
    })
}

/// Builds the configuration in the canonical frame.
pub fn build_default_scene(params: &RatioParams) -> Result<Scene> {
    let (a, b, c) = default_triangle();
    build_scene(&a, &b, &c, params)
}

/// Recovers the six ratios from the stored points; exact inverse of
/// [`build_scene`].
pub fn scene_ratios(scene: &Scene) -> Result<RatioParams> {
    RatioParams::new(
        division_ratio(&scene.b, &scene.c, &scene.d)?,
        division_ratio(&scene.c, &scene.a, &scene.e)?,
        division_ratio(&scene.a, &scene.b, &scene.f)?,
        division_ratio(&scene.b, &scene.c, &scene.k)?,
        division_ratio(&scene.c, &scene.a, &scene.l)?,
        division_ratio(&scene.a, &scene.b, &scene.m)?,
    )
}

impl Scene {
    /// The vertex triple of a named triangle.
    pub fn vertices(&self, name: TriangleName) -> [&HPoint; 3] {
        match name {
            TriangleName::Abc => [&self.a, &self.b, &self.c],
            TriangleName::Def => [&self.d, &self.e, &self.f],
            TriangleName::G1G2G3 => [&self.g1, &self.g2, &self.g3],
            TriangleName::H1H2H3 => [&self.h1, &self.h2, &self.h3],
            TriangleName::Rst => [&self.r, &self.s, &self.t],
            TriangleName::Aef => [&self.a, &self.e, &self.f],
            TriangleName::Bfd => [&self.b, &self.f, &self.d],
            TriangleName::Cde => [&self.c, &self.d, &self.e],
        }
    }

    /// Unsigned area of a named triangle.
    pub fn area(&self, name: TriangleName) -> Result<Rational> {
        let [p1, p2, p3] = self.vertices(name);
        if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
            return Err(Error::InfiniteVertex);
        }
        Ok(signed_area(p1, p2, p3)?.abs())
    }

    pub fn line_ak(&self) -> Result<HLine> {
        join(&self.a, &self.k)
    }

    pub fn line_bl(&self) -> Result<HLine> {
        join(&self.b, &self.l)
    }

    pub fn line_cm(&self) -> Result<HLine> {
        join(&self.c, &self.m)
    }

    pub fn line_dn(&self) -> Result<HLine> {
        join(&self.d, &self.n)
    }

    pub fn line_eq(&self) -> Result<HLine> {
        join(&self.e, &self.q)
    }

    pub fn line_fp(&self) -> Result<HLine> {
        join(&self.f, &self.p)
    }
}

/// |Area(num)| / |Area(den)| measured purely from coordinates.
pub fn geometric_ratio(scene: &Scene, num: TriangleName, den: TriangleName) -> Result<Rational> {
    let numerator = scene.area(num)?;
    let denominator = scene.area(den)?;
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(numerator / denominator)
}

/// Closed-triangle containment by consistent signs of the three sub-areas.
///
/// A zero-area triangle is handled honestly: if its vertices coincide the
/// test degenerates to point equality, if they are collinear it becomes
/// membership in the segment hull.
pub fn point_in_triangle(scene: &Scene, x: &HPoint, tri: TriangleName) -> Result<bool> {
    if !x.is_finite() {
        return Err(Error::InfiniteVertex);
    }
    let [v1, v2, v3] = scene.vertices(tri);
    if !(v1.is_finite() && v2.is_finite() && v3.is_finite()) {
        return Err(Error::InfiniteVertex);
    }
    let area = signed_area(v1, v2, v3)?;
    if area.is_zero() {
        return degenerate_containment(x, v1, v2, v3);
    }
    let s1 = signed_area(x, v1, v2)?;
    let s2 = signed_area(x, v2, v3)?;
    let s3 = signed_area(x, v3, v1)?;
    let all_non_neg = !s1.is_negative() && !s2.is_negative() && !s3.is_negative();
    let all_non_pos = !s1.is_positive() && !s2.is_positive() && !s3.is_positive();
    Ok(all_non_neg || all_non_pos)
}

fn degenerate_containment(x: &HPoint, v1: &HPoint, v2: &HPoint, v3: &HPoint) -> Result<bool> {
    if v1.coincides(v2) && v2.coincides(v3) {
        return Ok(x.coincides(v1));
    }
    // Collinear vertices: X must sit on their line, inside the bounding box.
    let (anchor, other) = if v1.coincides(v2) { (v1, v3) } else { (v1, v2) };
    if !signed_area(anchor, other, x)?.is_zero() {
        return Ok(false);
    }
    let (xx, xy) = x.to_affine().expect("checked finite");
    let affine: Vec<(Rational, Rational)> = [v1, v2, v3]
        .iter()
        .map(|p| p.to_affine().expect("checked finite"))
        .collect();
    let within = |val: &Rational, axis: usize| {
        let mut lo = if axis == 0 { &affine[0].0 } else { &affine[0].1 };
        let mut hi = lo;
        for coords in &affine[1..] {
            let c = if axis == 0 { &coords.0 } else { &coords.1 };
            if c < lo {
                lo = c;
            }
            if c > hi {
                hi = c;
            }
        }
        lo <= val && val <= hi
    };
    Ok(within(&xx, 0) && within(&xy, 1))
}

// --- JSON serialization ------------------------------------------------------
//
// The document stores each point as its exact homogeneous triple of "p/q"
// strings under the point's name, plus the degeneracy flag list. Round-trips
// are bit-exact because representatives are serialized as stored.

#[derive(Serialize, Deserialize)]
struct SceneDoc {
    #[serde(rename = "A")]
    a: [String; 3],
    #[serde(rename = "B")]
    b: [String; 3],
    #[serde(rename = "C")]
    c: [String; 3],
    #[serde(rename = "D")]
    d: [String; 3],
    #[serde(rename = "E")]
    e: [String; 3],
    #[serde(rename = "F")]
    f: [String; 3],
    #[serde(rename = "K")]
    k: [String; 3],
    #[serde(rename = "L")]
    l: [String; 3],
    #[serde(rename = "M")]
    m: [String; 3],
    #[serde(rename = "N")]
    n: [String; 3],
    #[serde(rename = "Q")]
    q: [String; 3],
    #[serde(rename = "P")]
    p: [String; 3],
    #[serde(rename = "R")]
    r: [String; 3],
    #[serde(rename = "S")]
    s: [String; 3],
    #[serde(rename = "T")]
    t: [String; 3],
    #[serde(rename = "G1")]
    g1: [String; 3],
    #[serde(rename = "G2")]
    g2: [String; 3],
    #[serde(rename = "G3")]
    g3: [String; 3],
    #[serde(rename = "H1")]
    h1: [String; 3],
    #[serde(rename = "H2")]
    h2: [String; 3],
    #[serde(rename = "H3")]
    h3: [String; 3],
    degeneracies: Vec<String>,
}

fn point_doc(p: &HPoint) -> [String; 3] {
    let c = p.coords();
    [
        format_rational(&c[0]),
        format_rational(&c[1]),
        format_rational(&c[2]),
    ]
}

fn point_from_doc(doc: &[String; 3]) -> Result<HPoint> {
    HPoint::new(
        parse_rational(&doc[0])?,
        parse_rational(&doc[1])?,
        parse_rational(&doc[2])?,
    )
}

impl Scene {
    /// Serializes the scene to its JSON document.
    pub fn to_json(&self) -> String {
        let doc = SceneDoc {
            a: point_doc(&self.a),
            b: point_doc(&self.b),
            c: point_doc(&self.c),
            d: point_doc(&self.d),
            e: point_doc(&self.e),
            f: point_doc(&self.f),
            k: point_doc(&self.k),
            l: point_doc(&self.l),
            m: point_doc(&self.m),
            n: point_doc(&self.n),
            q: point_doc(&self.q),
            p: point_doc(&self.p),
            r: point_doc(&self.r),
            s: point_doc(&self.s),
            t: point_doc(&self.t),
            g1: point_doc(&self.g1),
            g2: point_doc(&self.g2),
            g3: point_doc(&self.g3),
            h1: point_doc(&self.h1),
            h2: point_doc(&self.h2),
            h3: point_doc(&self.h3),
            degeneracies: self.degeneracies.iter().map(|d| d.to_string()).collect(),
        };
        serde_json::to_string(&doc).expect("scene document serializes")
    }

    /// Decodes a scene from its JSON document.
    pub fn from_json(json: &str) -> Result<Scene> {
        let doc: SceneDoc =
            serde_json::from_str(json).map_err(|e| Error::SceneDecode(e.to_string()))?;
        let mut degeneracies = BTreeSet::new();
        for flag in &doc.degeneracies {
            degeneracies.insert(Degeneracy::from_str(flag)?);
        }
        Ok(Scene {
            a: point_from_doc(&doc.a)?,
            b: point_from_doc(&doc.b)?,
            c: point_from_doc(&doc.c)?,
            d: point_from_doc(&doc.d)?,
            e: point_from_doc(&doc.e)?,
            f: point_from_doc(&doc.f)?,
            k: point_from_doc(&doc.k)?,
            l: point_from_doc(&doc.l)?,
            m: point_from_doc(&doc.m)?,
            n: point_from_doc(&doc.n)?,
            q: point_from_doc(&doc.q)?,
            p: point_from_doc(&doc.p)?,
            r: point_from_doc(&doc.r)?,
            s: point_from_doc(&doc.s)?,
            t: point_from_doc(&doc.t)?,
            g1: point_from_doc(&doc.g1)?,
            g2: point_from_doc(&doc.g2)?,
            g3: point_from_doc(&doc.g3)?,
            h1: point_from_doc(&doc.h1)?,
            h2: point_from_doc(&doc.h2)?,
            h3: point_from_doc(&doc.h3)?,
            degeneracies,
        })
    }
}

//! Exact rational arithmetic and projective-affine primitives.
//!
//! Points and lines live in homogeneous coordinates over [`Rational`]. Triples
//! are never renormalized after an operation; two triples denote the same
//! projective element iff they are proportional, and every predicate here is
//! scale-invariant, so the stored representative does not matter.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::str::FromStr;

/// The single numeric currency of the kernel: an arbitrary-precision fraction,
/// always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational constant.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for a small integer constant.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or a plain integer `"p"`. Decimal notation is rejected:
/// exactness at the boundary is the point.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(num_str.trim()).map_err(|_| Error::Parse(s.to_string()))?;
    let denom = BigInt::from_str(den_str.trim()).map_err(|_| Error::Parse(s.to_string()))?;
    if denom.is_zero() {
        return Err(Error::ZeroDenominatorParse);
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as a reduced `"p/q"` string, denominator always explicit.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn triple_is_zero(t: &[Rational; 3]) -> bool {
    t.iter().all(Zero::is_zero)
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn proportional(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
    triple_is_zero(&cross(a, b))
}

/// A projective point (X, Y, W); finite iff W ≠ 0, with affine coordinates
/// (X/W, Y/W).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPoint {
    coords: [Rational; 3],
}

impl HPoint {
    /// Builds a point from a homogeneous triple; rejects (0,0,0).
    pub fn new(x: Rational, y: Rational, w: Rational) -> Result<Self> {
        let coords = [x, y, w];
        if triple_is_zero(&coords) {
            return Err(Error::ZeroVector);
        }
        Ok(HPoint { coords })
    }

    /// A finite point from affine coordinates, stored with W = 1.
    pub fn affine(x: Rational, y: Rational) -> Self {
        HPoint {
            coords: [x, y, Rational::one()],
        }
    }

    /// A finite point from small integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        HPoint::affine(rat_int(x), rat_int(y))
    }

    pub fn x(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn y(&self) -> &Rational {
        &self.coords[1]
    }

    pub fn w(&self) -> &Rational {
        &self.coords[2]
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    pub fn is_finite(&self) -> bool {
        !self.coords[2].is_zero()
    }

    /// Affine coordinates (X/W, Y/W), or `None` for a point at infinity.
    pub fn to_affine(&self) -> Option<(Rational, Rational)> {
        if !self.is_finite() {
            return None;
        }
        Some((
            &self.coords[0] / &self.coords[2],
            &self.coords[1] / &self.coords[2],
        ))
    }

    /// Projective equality: the triples are proportional. (`==` compares the
    /// stored representatives componentwise.)
    pub fn coincides(&self, other: &HPoint) -> bool {
        proportional(&self.coords, &other.coords)
    }

    /// The same point with every coordinate multiplied by a nonzero scalar.
    pub fn scaled(&self, k: &Rational) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(HPoint {
            coords: [k * &self.coords[0], k * &self.coords[1], k * &self.coords[2]],
        })
    }
}

/// A projective line with coefficient triple (a, b, c); its points satisfy
/// aX + bY + cW = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HLine {
    coeffs: [Rational; 3],
}

impl HLine {
    /// Builds a line from a coefficient triple; rejects (0,0,0).
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let coeffs = [a, b, c];
        if triple_is_zero(&coeffs) {
            return Err(Error::ZeroVector);
        }
        Ok(HLine { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    /// Projective equality of lines.
    pub fn coincides(&self, other: &HLine) -> bool {
        proportional(&self.coeffs, &other.coeffs)
    }

    /// The same line with every coefficient multiplied by a nonzero scalar.
    pub fn scaled(&self, k: &Rational) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(HLine {
            coeffs: [k * &self.coeffs[0], k * &self.coeffs[1], k * &self.coeffs[2]],
        })
    }
}

/// The unique line through two distinct points.
pub fn join(p: &HPoint, q: &HPoint) -> Result<HLine> {
    let c = cross(&p.coords, &q.coords);
    if triple_is_zero(&c) {
        return Err(Error::IdenticalPoints);
    }
    let [a, b, w] = c;
    Ok(HLine { coeffs: [a, b, w] })
}

/// The intersection point of two distinct lines; a point at infinity when the
/// lines are parallel.
pub fn meet(l: &HLine, m: &HLine) -> Result<HPoint> {
    let c = cross(&l.coeffs, &m.coeffs);
    if triple_is_zero(&c) {
        return Err(Error::IdenticalLines);
    }
    let [x, y, w] = c;
    Ok(HPoint { coords: [x, y, w] })
}

/// Exact incidence: the point satisfies the line equation.
pub fn incident(p: &HPoint, l: &HLine) -> bool {
    dot(&p.coords, &l.coeffs).is_zero()
}

/// The point X on segment PQ with |PX|/|XQ| = ratio, for finite distinct P, Q
/// and ratio > 0.
pub fn section_point(p: &HPoint, q: &HPoint, ratio: &Rational) -> Result<HPoint> {
    if !ratio.is_positive() {
        return Err(Error::InvalidRatio);
    }
    let (px, py) = p.to_affine().ok_or(Error::InfinitePoint)?;
    let (qx, qy) = q.to_affine().ok_or(Error::InfinitePoint)?;
    if p.coincides(q) {
        return Err(Error::IdenticalPoints);
    }
    let denom = Rational::one() + ratio;
    Ok(HPoint::affine(
        (&px + ratio * &qx) / &denom,
        (&py + ratio * &qy) / &denom,
    ))
}

/// Recovers |PX|/|XQ| for a point X strictly between P and Q; exact inverse of
/// [`section_point`].
pub fn division_ratio(p: &HPoint, q: &HPoint, x: &HPoint) -> Result<Rational> {
    let (px, py) = p.to_affine().ok_or(Error::InfinitePoint)?;
    let (qx, qy) = q.to_affine().ok_or(Error::InfinitePoint)?;
    let (xx, xy) = x.to_affine().ok_or(Error::InfinitePoint)?;
    if p.coincides(q) {
        return Err(Error::IdenticalPoints);
    }
    if !signed_area(p, q, x)?.is_zero() {
        return Err(Error::NotCollinear);
    }
    // Measure along whichever axis separates P and Q.
    let (from_p, to_q) = if px != qx {
        (&xx - &px, &qx - &xx)
    } else {
        (&xy - &py, &qy - &xy)
    };
    if from_p.is_zero() || to_q.is_zero() || from_p.is_positive() != to_q.is_positive() {
        return Err(Error::NotInterior);
    }
    Ok(from_p / to_q)
}

/// Signed area of triangle PQR, positive for counter-clockwise orientation,
/// zero iff collinear. Requires finite points.
pub fn signed_area(p: &HPoint, q: &HPoint, r: &HPoint) -> Result<Rational> {
    if !(p.is_finite() && q.is_finite() && r.is_finite()) {
        return Err(Error::InfinitePoint);
    }
    let det = dot(&p.coords, &cross(&q.coords, &r.coords));
    let scale = rat_int(2) * p.w() * q.w() * r.w();
    Ok(det / scale)
}

/// True iff the three pairwise-distinct lines share a common point (possibly
/// at infinity): the determinant of their coefficient triples vanishes.
pub fn concurrent(l: &HLine, m: &HLine, n: &HLine) -> Result<bool> {
    if l.coincides(m) || m.coincides(n) || l.coincides(n) {
        return Err(Error::IdenticalLines);
    }
    Ok(dot(&l.coeffs, &cross(&m.coeffs, &n.coeffs)).is_zero())
}

/// Exact comparison helper: sign of a rational as an `Ordering` against zero.
pub fn sign(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

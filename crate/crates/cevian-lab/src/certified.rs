//! Certified real values of the form a + b·t + c·t² with t = s^(1/3).
//!
//! The sharp bounds this crate checks genuinely involve cube roots, so
//! floating point is off the table. A [`CertifiedReal`] is either an exact
//! rational (the radicand was a perfect rational cube and the root
//! collapsed) or an element of the cubic field ℚ(t), t³ = s, stored by its
//! exact rational coordinates. Arithmetic reduces modulo t³ − s; division
//! inverts via the extended Euclidean algorithm on polynomials.
//!
//! Sign determination is exact, not numeric-with-fingers-crossed: when s is
//! not a perfect cube, x³ − s is irreducible over ℚ, so no nonzero
//! polynomial of degree ≤ 2 vanishes at t. A dyadic enclosure of t is then
//! refined (integer comparisons only) until interval evaluation of
//! a + b·x + c·x² excludes zero, which must happen after finitely many
//! steps. Enclosures with outward rounding are exported for reporting.

use crate::kernel::Rational;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// An exactly represented element of ℚ or of ℚ(s^(1/3)).
#[derive(Debug, Clone, PartialEq)]
pub enum CertifiedReal {
    Exact(Rational),
    Algebraic {
        /// Radicand; positive and not a perfect rational cube.
        s: Rational,
        a: Rational,
        b: Rational,
        c: Rational,
    },
}

/// Exact cube root of a non-negative rational if it is one, else None.
fn rational_cbrt(s: &Rational) -> Option<Rational> {
    if s.is_negative() {
        return None;
    }
    let pr = s.numer().cbrt();
    let qr = s.denom().cbrt();
    if &(&pr * &pr * &pr) == s.numer() && &(&qr * &qr * &qr) == s.denom() {
        Some(Rational::new(pr, qr))
    } else {
        None
    }
}

/// Dyadic bounds n/2^bits ≤ s^(1/3) ≤ (n+1)/2^bits, by integer arithmetic.
fn cbrt_bounds(s: &Rational, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << (3 * bits as usize);
    let target = s.numer() * &scale; // want largest n with n³·denom ≤ target
    let mut n = (&target / s.denom()).cbrt();
    while (&n + BigInt::one()).pow(3) * s.denom() <= target {
        n += 1;
    }
    while n.pow(3) * s.denom() > target {
        n -= 1;
    }
    let denom = BigInt::one() << (bits as usize);
    (
        Rational::new(n.clone(), denom.clone()),
        Rational::new(n + 1, denom),
    )
}

/// Interval evaluation of a + b·x + c·x² over 0 ≤ lo ≤ x ≤ hi.
fn quad_interval(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    lo: &Rational,
    hi: &Rational,
) -> (Rational, Rational) {
    let mut out_lo = a.clone();
    let mut out_hi = a.clone();
    let mono = |coeff: &Rational, pow_lo: Rational, pow_hi: Rational| {
        if coeff.is_negative() {
            (coeff * pow_hi, coeff * pow_lo)
        } else {
            (coeff * pow_lo, coeff * pow_hi)
        }
    };
    let (l, h) = mono(b, lo.clone(), hi.clone());
    out_lo += l;
    out_hi += h;
    let (l, h) = mono(c, lo * lo, hi * hi);
    out_lo += l;
    out_hi += h;
    (out_lo, out_hi)
}

// --- polynomials over ℚ, ascending coefficients, for field inversion --------

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut quo = vec![Rational::zero(); num.len().saturating_sub(den.len()) + 1];
    let lead = den.last().unwrap();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let coeff = rem.last().unwrap() / lead;
        quo[shift] = coeff.clone();
        let mut scaled = vec![Rational::zero(); shift];
        scaled.extend(den.iter().map(|d| d * &coeff));
        rem = poly_sub(&rem, &scaled);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quo);
    (quo, rem)
}

/// Inverse of `elem` (degree ≤ 2, nonzero) modulo x³ − s, via extended Euclid.
fn poly_inverse_mod_cubic(elem: &[Rational], s: &Rational) -> Vec<Rational> {
    let modulus = vec![-s.clone(), Rational::zero(), Rational::zero(), Rational::one()];
    let mut r0 = modulus;
    let mut r1 = elem.to_vec();
    poly_trim(&mut r1);
    let mut t0: Vec<Rational> = Vec::new();
    let mut t1 = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r2) = poly_divmod(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    // x³ − s irreducible and elem ≠ 0 ⇒ gcd is a nonzero constant.
    let unit = r1.first().expect("element invertible in the cubic field");
    t1.iter().map(|c| c / unit).collect()
}

impl CertifiedReal {
    pub fn from_rational(r: Rational) -> Self {
        CertifiedReal::Exact(r)
    }

    pub fn zero() -> Self {
        CertifiedReal::Exact(Rational::zero())
    }

    /// The real cube root of a strictly positive rational, exact whenever
    /// the radicand is a perfect cube.
    pub fn cbrt(s: &Rational) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::NonPositiveRatio);
        }
        if let Some(root) = rational_cbrt(s) {
            return Ok(CertifiedReal::Exact(root));
        }
        Ok(CertifiedReal::Algebraic {
            s: s.clone(),
            a: Rational::zero(),
            b: Rational::one(),
            c: Rational::zero(),
        })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CertifiedReal::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            CertifiedReal::Exact(r) => Some(r),
            CertifiedReal::Algebraic { .. } => None,
        }
    }

    fn coords(&self, field: &Rational) -> Result<(Rational, Rational, Rational)> {
        match self {
            CertifiedReal::Exact(r) => Ok((r.clone(), Rational::zero(), Rational::zero())),
            CertifiedReal::Algebraic { s, a, b, c } => {
                if s != field {
                    return Err(Error::PreconditionViolated(
                        "certified values live in different cubic fields".to_string(),
                    ));
                }
                Ok((a.clone(), b.clone(), c.clone()))
            }
        }
    }

    fn field(&self, other: &CertifiedReal) -> Option<Rational> {
        match (self, other) {
            (CertifiedReal::Algebraic { s, .. }, _) => Some(s.clone()),
            (_, CertifiedReal::Algebraic { s, .. }) => Some(s.clone()),
            _ => None,
        }
    }

    fn assemble(s: Rational, a: Rational, b: Rational, c: Rational) -> CertifiedReal {
        if b.is_zero() && c.is_zero() {
            CertifiedReal::Exact(a)
        } else {
            CertifiedReal::Algebraic { s, a, b, c }
        }
    }

    pub fn add(&self, other: &CertifiedReal) -> Result<CertifiedReal> {
        match self.field(other) {
            None => match (self, other) {
                (CertifiedReal::Exact(x), CertifiedReal::Exact(y)) => {
                    Ok(CertifiedReal::Exact(x + y))
                }
                _ => unreachable!("no field implies both exact"),
            },
            Some(s) => {
                let (a1, b1, c1) = self.coords(&s)?;
                let (a2, b2, c2) = other.coords(&s)?;
                Ok(CertifiedReal::assemble(s, a1 + a2, b1 + b2, c1 + c2))
            }
        }
    }

    pub fn neg(&self) -> CertifiedReal {
        match self {
            CertifiedReal::Exact(r) => CertifiedReal::Exact(-r),
            CertifiedReal::Algebraic { s, a, b, c } => CertifiedReal::Algebraic {
                s: s.clone(),
                a: -a,
                b: -b,
                c: -c,
            },
        }
    }

    pub fn sub(&self, other: &CertifiedReal) -> Result<CertifiedReal> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CertifiedReal) -> Result<CertifiedReal> {
        match self.field(other) {
            None => match (self, other) {
                (CertifiedReal::Exact(x), CertifiedReal::Exact(y)) => {
                    Ok(CertifiedReal::Exact(x * y))
                }
                _ => unreachable!("no field implies both exact"),
            },
            Some(s) => {
                let (a1, b1, c1) = self.coords(&s)?;
                let (a2, b2, c2) = other.coords(&s)?;
                // (a1 + b1 t + c1 t²)(a2 + b2 t + c2 t²) with t³ = s, t⁴ = s t.
                let a = &a1 * &a2 + &s * (&b1 * &c2 + &c1 * &b2);
                let b = &a1 * &b2 + &b1 * &a2 + &s * (&c1 * &c2);
                let c = &a1 * &c2 + &b1 * &b2 + &c1 * &a2;
                Ok(CertifiedReal::assemble(s, a, b, c))
            }
        }
    }

    pub fn inverse(&self) -> Result<CertifiedReal> {
        match self {
            CertifiedReal::Exact(r) => {
                if r.is_zero() {
                    Err(Error::ZeroDenominator)
                } else {
                    Ok(CertifiedReal::Exact(r.recip()))
                }
            }
            CertifiedReal::Algebraic { s, a, b, c } => {
                // (b,c) ≠ (0,0) by the assemble invariant, so nonzero.
                let inv = poly_inverse_mod_cubic(&[a.clone(), b.clone(), c.clone()], s);
                let mut coords = inv.into_iter();
                let ia = coords.next().unwrap_or_else(Rational::zero);
                let ib = coords.next().unwrap_or_else(Rational::zero);
                let ic = coords.next().unwrap_or_else(Rational::zero);
                Ok(CertifiedReal::assemble(s.clone(), ia, ib, ic))
            }
        }
    }

    pub fn div(&self, other: &CertifiedReal) -> Result<CertifiedReal> {
        self.mul(&other.inverse()?)
    }

    /// Exact sign. Terminates because a nonzero quadratic in t cannot vanish
    /// when t has degree 3 over ℚ.
    pub fn sign(&self) -> Ordering {
        match self {
            CertifiedReal::Exact(r) => r.cmp(&Rational::zero()),
            CertifiedReal::Algebraic { s, a, b, c } => {
                let mut bits = 8;
                loop {
                    let (lo, hi) = cbrt_bounds(s, bits);
                    let (vlo, vhi) = quad_interval(a, b, c, &lo, &hi);
                    if vlo.is_positive() {
                        return Ordering::Greater;
                    }
                    if vhi.is_negative() {
                        return Ordering::Less;
                    }
                    assert!(bits < 1 << 14, "sign refinement failed to converge");
                    bits *= 2;
                }
            }
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.sub(&CertifiedReal::Exact(r.clone()))
            .expect("rational subtraction stays in field")
            .sign()
    }

    pub fn cmp_certified(&self, other: &CertifiedReal) -> Result<Ordering> {
        Ok(self.sub(other)?.sign())
    }

    pub fn is_zero_value(&self) -> bool {
        match self {
            CertifiedReal::Exact(r) => r.is_zero(),
            // Nonzero by the assemble invariant plus irreducibility.
            CertifiedReal::Algebraic { .. } => false,
        }
    }

    /// Outward-rounded rational enclosure; exact values give a point
    /// interval. `bits` controls the dyadic precision of the t-enclosure.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        match self {
            CertifiedReal::Exact(r) => (r.clone(), r.clone()),
            CertifiedReal::Algebraic { s, a, b, c } => {
                let (lo, hi) = cbrt_bounds(s, bits);
                quad_interval(a, b, c, &lo, &hi)
            }
        }
    }
}

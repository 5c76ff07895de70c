//! Closed-form area ratios for cevian configurations.
//!
//! Everything here is pure scalar arithmetic on rationals (plus certified
//! cube roots for the sharp bound); no geometry. The verifier cross-checks
//! each formula against coordinate computations on built scenes, so these
//! functions deliberately know nothing about `Scene`.
//!
//! Notation matches the builder: λ₁ = |BD|/|DC|, λ₂ = |CE|/|EA|,
//! λ₃ = |AF|/|FB| for the first cevian trio and u, v, w likewise for the
//! second. The recurring factor xy + x + 1 is written `cevian_factor`.

use crate::certified::CertifiedReal;
use crate::kernel::Rational;
use crate::scene::RatioParams;
use crate::{Error, Result};
use num_traits::{One, Signed};

fn require_positive<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<()> {
    for v in values {
        if !v.is_positive() {
            return Err(Error::NonPositiveRatio);
        }
    }
    Ok(())
}

/// The ubiquitous factor xy + x + 1.
fn cevian_factor(x: &Rational, y: &Rational) -> Rational {
    x * y + x + Rational::one()
}

/// Product of the three cyclically paired factors
/// (l₁l₂+l₁+1)(l₂l₃+l₂+1)(l₃l₁+l₃+1).
fn cyclic_factor_product(l1: &Rational, l2: &Rational, l3: &Rational) -> Rational {
    cevian_factor(l1, l2) * cevian_factor(l2, l3) * cevian_factor(l3, l1)
}

/// Routh's ratio: the area of the central triangle cut out by cevians
/// AD, BE, CF with side ratios (l₁,l₂,l₃), relative to the host triangle:
///
/// (l₁l₂l₃ − 1)² / ((l₁l₂+l₁+1)(l₂l₃+l₂+1)(l₃l₁+l₃+1))
pub fn routh_ratio(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Rational> {
    require_positive([l1, l2, l3])?;
    let product = l1 * l2 * l3;
    let excess = &product - Rational::one();
    Ok(&excess * &excess / cyclic_factor_product(l1, l2, l3))
}

/// Area of the cevian-foot triangle DEF relative to the host triangle:
///
/// (l₁l₂l₃ + 1) / ((l₁+1)(l₂+1)(l₃+1))
pub fn def_ratio(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Rational> {
    require_positive([l1, l2, l3])?;
    let one = Rational::one();
    Ok((l1 * l2 * l3 + &one) / ((l1 + &one) * (l2 + &one) * (l3 + &one)))
}

/// The section ratios the second cevian trio induces on the sides of the
/// foot triangle DEF: α = |FN|/|NE|, β = |DQ|/|QF|, γ = |EP|/|PD|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedRatios {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl DerivedRatios {
    /// αβγ; equals λ₁λ₂λ₃·uvw for the generating parameters.
    pub fn product(&self) -> Rational {
        &self.alpha * &self.beta * &self.gamma
    }
}

/// α = uλ₃(1+λ₂)/(1+λ₃), β = vλ₁(1+λ₃)/(1+λ₁), γ = wλ₂(1+λ₁)/(1+λ₂).
pub fn derived_ratios(params: &RatioParams) -> DerivedRatios {
    let one = Rational::one();
    let alpha = params.u() * params.lambda3() * (&one + params.lambda2())
        / (&one + params.lambda3());
    let beta = params.v() * params.lambda1() * (&one + params.lambda3())
        / (&one + params.lambda1());
    let gamma = params.w() * params.lambda2() * (&one + params.lambda1())
        / (&one + params.lambda2());
    DerivedRatios { alpha, beta, gamma }
}

/// Product of the reverse-cyclically paired factors
/// (αγ+α+1)(βα+β+1)(γβ+γ+1) — the orientation flips because the inner
/// cevians traverse DEF against the outer orientation.
fn reverse_cyclic_factor_product(d: &DerivedRatios) -> Rational {
    cevian_factor(&d.alpha, &d.gamma)
        * cevian_factor(&d.beta, &d.alpha)
        * cevian_factor(&d.gamma, &d.beta)
}

/// Area(RST)/Area(DEF): Routh's ratio inside the foot triangle, expressed
/// through the derived section ratios:
///
/// (αβγ − 1)² / ((αγ+α+1)(βα+β+1)(γβ+γ+1))
pub fn rst_def_ratio(params: &RatioParams) -> Rational {
    let d = derived_ratios(params);
    let excess = d.product() - Rational::one();
    &excess * &excess / reverse_cyclic_factor_product(&d)
}

/// The sharp upper bound for Area(RST)/Area(DEF) in terms of the single
/// product s = λ₁λ₂λ₃uvw:
///
/// (s − 1)² / (t² + t + 1)³ with t = s^(1/3)
///
/// Exact whenever s is a perfect rational cube, a certified enclosure
/// otherwise.
pub fn holder_bound_rhs(product: &Rational) -> Result<CertifiedReal> {
    if !product.is_positive() {
        return Err(Error::NonPositiveRatio);
    }
    let t = CertifiedReal::cbrt(product)?;
    let one = CertifiedReal::from_rational(Rational::one());
    let quad = t.mul(&t)?.add(&t)?.add(&one)?;
    let cubed = quad.mul(&quad)?.mul(&quad)?;
    let excess = product - Rational::one();
    CertifiedReal::from_rational(&excess * &excess).div(&cubed)
}

/// The three-term power-mean slack behind the sharp bound:
///
/// (αγ+α+1)(βα+β+1)(γβ+γ+1) − (t²+t+1)³, t = (αβγ)^(1/3)
///
/// Certified non-negative; zero exactly when α = β = γ.
pub fn holder_three_term_gap(d: &DerivedRatios) -> Result<CertifiedReal> {
    require_positive([&d.alpha, &d.beta, &d.gamma])?;
    let t = CertifiedReal::cbrt(&d.product())?;
    let one = CertifiedReal::from_rational(Rational::one());
    let quad = t.mul(&t)?.add(&t)?.add(&one)?;
    let cubed = quad.mul(&quad)?.mul(&quad)?;
    CertifiedReal::from_rational(reverse_cyclic_factor_product(d)).sub(&cubed)
}

/// Area(H₁H₂H₃)/Area(ABC) for the triangle bounded by the second cevian
/// trio — Routh's ratio again, in (u,v,w).
pub fn h_triangle_ratio(u: &Rational, v: &Rational, w: &Rational) -> Result<Rational> {
    routh_ratio(u, v, w)
}

/// Area(RST)/Area(H₁H₂H₃) in the concurrent-first-trio case (λ₁λ₂λ₃ = 1):
///
/// [(uv+u+1)(vw+v+1)(wu+w+1) / ((αγ+α+1)(βα+β+1)(γβ+γ+1))]
///   · 2/((λ₁+1)(λ₂+1)(λ₃+1))
pub fn rst_over_h_ratio(params: &RatioParams) -> Result<Rational> {
    if !params.lambda_product().is_one() {
        return Err(Error::CevaViolation);
    }
    if params.uvw_product().is_one() {
        return Err(Error::DegenerateH);
    }
    let d = derived_ratios(params);
    let one = Rational::one();
    let numerator = cyclic_factor_product(params.u(), params.v(), params.w());
    let lambda_sums = (params.lambda1() + &one) * (params.lambda2() + &one)
        * (params.lambda3() + &one);
    Ok(numerator / reverse_cyclic_factor_product(&d) * Rational::from_integer(2.into())
        / lambda_sums)
}

/// Area(RST)/Area(G₁G₂G₃): the product of the three component identities
/// [RST/DEF] · [DEF/ABC] / [G₁G₂G₃/ABC], valid whenever the G-triangle is
/// proper (λ₁λ₂λ₃ ≠ 1).
pub fn rst_over_g_ratio(params: &RatioParams) -> Result<Rational> {
    if params.lambda_product().is_one() {
        return Err(Error::DegenerateG);
    }
    let routh = routh_ratio(params.lambda1(), params.lambda2(), params.lambda3())?;
    let def = def_ratio(params.lambda1(), params.lambda2(), params.lambda3())?;
    Ok(rst_def_ratio(params) * def / routh)
}

/// The five areas in the cevian-intersection inequality, in units fixed by
/// `total`: the corner triangles p = Area(AEF), q = Area(BFD), r = Area(CDE),
/// the foot triangle x = Area(DEF), and the central triangle y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigbyAreas {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub x: Rational,
    pub y: Rational,
}

/// Computes the five areas from side ratios. Corner areas come from the
/// side-fraction products, e.g. Area(AEF) = (|AE|/|AC|)·(|AF|/|AB|)·total =
/// [1/(1+λ₂)]·[λ₃/(1+λ₃)]·total, cyclically.
pub fn rigby_areas(
    l1: &Rational,
    l2: &Rational,
    l3: &Rational,
    total: &Rational,
) -> Result<RigbyAreas> {
    require_positive([l1, l2, l3, total])?;
    let one = Rational::one();
    let p = &one / (l2 + &one) * l3 / (l3 + &one) * total;
    let q = &one / (l3 + &one) * l1 / (l1 + &one) * total;
    let r = &one / (l1 + &one) * l2 / (l2 + &one) * total;
    let x = def_ratio(l1, l2, l3)? * total;
    let y = routh_ratio(l1, l2, l3)? * total;
    Ok(RigbyAreas { p, q, r, x, y })
}

/// The left side of the cevian-intersection inequality:
/// x³ + (p+q+r)x² − 4pqr. Non-negative for genuine cevian configurations,
/// with zero exactly at concurrency.
pub fn rigby_lhs(a: &RigbyAreas) -> Rational {
    let x2 = &a.x * &a.x;
    &a.x * &x2 + (&a.p + &a.q + &a.r) * x2
        - Rational::from_integer(4.into()) * &a.p * &a.q * &a.r
}

/// The exact factor F with rigby_lhs = F·x²·y:
///
/// F = (l₁l₂+l₁+1)(l₂l₃+l₂+1)(l₃l₁+l₃+1) / (l₁l₂l₃+1)²
///
/// F > 1 for all positive ratios and approaches 1 in degenerate limits,
/// which is exactly why x³+(p+q+r)x² − 4pqr ≥ x²y is sharp.
pub fn rigby_refinement_factor(l1: &Rational, l2: &Rational, l3: &Rational) -> Result<Rational> {
    require_positive([l1, l2, l3])?;
    let shifted = l1 * l2 * l3 + Rational::one();
    Ok(cyclic_factor_product(l1, l2, l3) / (&shifted * &shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_int};
    use std::cmp::Ordering;

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
    fn routh_ratio_values() {
        assert_eq!(
            routh_ratio(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap(),
            rat(1, 7)
        );
        assert_eq!(
            routh_ratio(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap(),
            rat_int(0)
        );
        assert_eq!(
            routh_ratio(&rat_int(1), &rat_int(2), &rat_int(3)).unwrap(),
            rat(25, 252)
        );
        assert_eq!(
            routh_ratio(&rat_int(0), &rat_int(1), &rat_int(1)),
            Err(Error::NonPositiveRatio)
        );
    }

    #[test]
    fn def_ratio_values() {
        assert_eq!(
            def_ratio(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap(),
            rat(1, 4)
        );
        assert_eq!(
            def_ratio(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            def_ratio(&rat_int(1), &rat_int(2), &rat_int(3)).unwrap(),
            rat(7, 24)
        );
    }

    #[test]
    fn derived_ratios_values() {
        let d = derived_ratios(&RatioParams::all_ones());
        assert_eq!(
            d,
            DerivedRatios {
                alpha: rat_int(1),
                beta: rat_int(1),
                gamma: rat_int(1)
            }
        );
        // The exact equality-case witness: all three collapse to 2.
        let d = derived_ratios(&params([(1, 1), (1, 1), (8, 1), (9, 8), (4, 9), (2, 1)]));
        assert_eq!(
            d,
            DerivedRatios {
                alpha: rat_int(2),
                beta: rat_int(2),
                gamma: rat_int(2)
            }
        );
    }

    #[test]
    fn derived_product_identity() {
        // αβγ = λ₁λ₂λ₃·uvw, here = (1/1000)·(1/3·3/40·40) = 1/1000.
        let p = params([(1, 1), (1, 1000), (1, 1), (1, 3), (3, 40), (40, 1)]);
        let d = derived_ratios(&p);
        assert_eq!(d.alpha, rat(1001, 6000));
        assert_eq!(d.beta, rat(3, 40));
        assert_eq!(d.gamma, rat(80, 1001));
        assert_eq!(d.product(), rat(1, 1000));
        assert_eq!(d.product(), p.full_product());
    }

    #[test]
    fn rst_def_ratio_values() {
        assert_eq!(rst_def_ratio(&RatioParams::all_ones()), rat_int(0));
        // Equality witness: α=β=γ=2 gives (8−1)²/7³ = 1/7.
        assert_eq!(
            rst_def_ratio(&params([(1, 1), (1, 1), (8, 1), (9, 8), (4, 9), (2, 1)])),
            rat(1, 7)
        );
        // λ=(2,2,2), unit second trio also collapses to α=β=γ=2.
        assert_eq!(
            rst_def_ratio(&params([(2, 1), (2, 1), (2, 1), (1, 1), (1, 1), (1, 1)])),
            rat(1, 7)
        );
    }

    #[test]
    fn holder_bound_values() {
        assert_eq!(
            holder_bound_rhs(&rat_int(1)).unwrap().as_exact(),
            Some(&rat_int(0))
        );
        assert_eq!(
            holder_bound_rhs(&rat_int(8)).unwrap().as_exact(),
            Some(&rat(1, 7))
        );
        // s = 1/1000: t = 1/10 exactly, so (999/1000)²/(111/100)³ = 27/37.
        assert_eq!(
            holder_bound_rhs(&rat(1, 1000)).unwrap().as_exact(),
            Some(&rat(27, 37))
        );
        assert_eq!(holder_bound_rhs(&rat_int(0)), Err(Error::NonPositiveRatio));
        // Non-cube radicand: still a usable certified value, just inexact.
        let bound = holder_bound_rhs(&rat_int(2)).unwrap();
        assert!(!bound.is_exact());
        assert_eq!(bound.sign(), Ordering::Greater);
    }

    #[test]
    fn holder_gap_values() {
        let gap = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
            holder_three_term_gap(&DerivedRatios {
                alpha: rat(a.0, a.1),
                beta: rat(b.0, b.1),
                gamma: rat(c.0, c.1),
            })
            .unwrap()
        };
        assert_eq!(gap((1, 1), (1, 1), (1, 1)).as_exact(), Some(&rat_int(0)));
        assert_eq!(gap((2, 1), (2, 1), (2, 1)).as_exact(), Some(&rat_int(0)));
        // (1,2,4): t = 2 exactly; 6·5·13 − 343 = 47.
        assert_eq!(gap((1, 1), (2, 1), (4, 1)).as_exact(), Some(&rat_int(47)));
        // A non-cube product still certifies as strictly positive.
        assert_eq!(gap((1, 1), (1, 1), (2, 1)).sign(), Ordering::Greater);
    }

    #[test]
    fn h_triangle_ratio_values() {
        assert_eq!(
            h_triangle_ratio(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap(),
            rat(1, 7)
        );
        assert_eq!(
            h_triangle_ratio(&rat(1, 100), &rat_int(1), &rat_int(20)).unwrap(),
            rat(40, 29733)
        );
    }

    #[test]
    fn rst_over_h_counterexample_value() {
        // λ all ones (concurrent), (u,v,w) = (1/100, 1, 20):
        // the ratio exceeds 1 — the central triangle is *larger*.
        let value =
            rst_over_h_ratio(&params([(1, 1), (1, 1), (1, 1), (1, 100), (1, 1), (20, 1)]))
                .unwrap();
        assert_eq!(value, rat(36040, 30217));
        assert!(value > rat_int(1));
    }

    #[test]
    fn rst_over_h_preconditions() {
        assert_eq!(
            rst_over_h_ratio(&params([(2, 1), (1, 1), (1, 1), (1, 100), (1, 1), (20, 1)])),
            Err(Error::CevaViolation)
        );
        assert_eq!(
            rst_over_h_ratio(&params([(1, 1), (1, 1), (1, 1), (1, 2), (2, 1), (1, 1)])),
            Err(Error::DegenerateH)
        );
    }

    #[test]
    fn rst_over_g_counterexample_value() {
        // λ=(1, 1/1000, 1), (u,v,w)=(1/3, 3/40, 40): again exceeds 1.
        let value = rst_over_g_ratio(&params([
            (1, 1),
            (1, 1000),
            (1, 1),
            (1, 3),
            (3, 40),
            (40, 1),
        ]))
        .unwrap();
        assert_eq!(value, rat(722522520720, 669650786047));
        assert!(value > rat_int(1));
    }

    #[test]
    fn rst_over_g_matches_printed_product_when_second_trio_concurrent() {
        // With uvw = 1 the chain reduces to the direct product
        // [(Λ+1)/∏(λᵢ+1)] · [∏(λᵢλⱼ+λᵢ+1)/∏(αγ+α+1)…]; check one instance.
        let p = params([(1, 1), (1, 1000), (1, 1), (1, 3), (3, 40), (40, 1)]);
        let d = derived_ratios(&p);
        let printed = def_ratio(p.lambda1(), p.lambda2(), p.lambda3()).unwrap()
            * cyclic_factor_product(p.lambda1(), p.lambda2(), p.lambda3())
            / reverse_cyclic_factor_product(&d);
        assert_eq!(rst_over_g_ratio(&p).unwrap(), printed);
    }

    #[test]
    fn rst_over_g_simple_value() {
        // λ=(2,2,2), unit second trio: RST/DEF = 1/7, DEF/ABC = 1/3,
        // G/ABC = 1/7, so RST/G = 1/3.
        assert_eq!(
            rst_over_g_ratio(&params([(2, 1), (2, 1), (2, 1), (1, 1), (1, 1), (1, 1)]))
                .unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            rst_over_g_ratio(&params([(1, 1), (1, 1), (1, 1), (2, 1), (1, 1), (1, 1)])),
            Err(Error::DegenerateG)
        );
    }

    #[test]
    fn rigby_area_values() {
        let a = rigby_areas(&rat_int(1), &rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(
            a,
            RigbyAreas {
                p: rat(1, 4),
                q: rat(1, 4),
                r: rat(1, 4),
                x: rat(1, 4),
                y: rat_int(0)
            }
        );
        let a = rigby_areas(&rat_int(2), &rat_int(2), &rat_int(2), &rat_int(1)).unwrap();
        assert_eq!(
            a,
            RigbyAreas {
                p: rat(2, 9),
                q: rat(2, 9),
                r: rat(2, 9),
                x: rat(1, 3),
                y: rat(1, 7)
            }
        );
        let a = rigby_areas(&rat_int(1), &rat_int(2), &rat_int(3), &rat_int(1)).unwrap();
        assert_eq!(
            a,
            RigbyAreas {
                p: rat(1, 4),
                q: rat(1, 8),
                r: rat(1, 3),
                x: rat(7, 24),
                y: rat(25, 252)
            }
        );
    }

    #[test]
    fn rigby_lhs_values() {
        let medial = rigby_areas(&rat_int(1), &rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(rigby_lhs(&medial), rat_int(0));
        let a = rigby_areas(&rat_int(2), &rat_int(2), &rat_int(2), &rat_int(1)).unwrap();
        assert_eq!(rigby_lhs(&a), rat(49, 729));
        let a = rigby_areas(&rat_int(1), &rat_int(2), &rat_int(3), &rat_int(1)).unwrap();
        assert_eq!(rigby_lhs(&a), rat(25, 576));
    }

    #[test]
    fn refinement_factor_values() {
        assert_eq!(
            rigby_refinement_factor(&rat_int(1), &rat_int(1), &rat_int(1)).unwrap(),
            rat(27, 4)
        );
        assert_eq!(
            rigby_refinement_factor(&rat_int(2), &rat_int(2), &rat_int(2)).unwrap(),
            rat(343, 81)
        );
        let small = rigby_refinement_factor(&rat(1, 10), &rat(1, 10), &rat(1, 10)).unwrap();
        assert_eq!(small, rat(1367631, 1002001));
        assert!(small > rat_int(1));
        assert!(small < rat(27, 4));
    }

    #[test]
    fn refinement_identity_lhs_equals_factor_times_x2y() {
        for (l1, l2, l3) in [
            (rat_int(1), rat_int(2), rat_int(3)),
            (rat_int(2), rat_int(2), rat_int(2)),
            (rat(1, 7), rat(3, 5), rat(9, 2)),
        ] {
            let a = rigby_areas(&l1, &l2, &l3, &rat_int(1)).unwrap();
            let factor = rigby_refinement_factor(&l1, &l2, &l3).unwrap();
            assert_eq!(rigby_lhs(&a), factor * &a.x * &a.x * &a.y);
        }
    }
}

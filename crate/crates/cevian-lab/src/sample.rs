//! Deterministic random generation of configuration parameters.
//!
//! Several theorems live on measure-zero constraint surfaces (products of
//! ratios exactly 1, or exactly a perfect cube); unconstrained random
//! rationals would never land there. Each sampler therefore draws all free
//! parameters uniformly and solves for the last one exactly.
//!
//! Randomness comes from a ChaCha stream cipher seeded with a caller-chosen
//! integer: identical (seed, bound, call sequence) triples yield identical
//! samples on every platform, which the reproducibility contract depends on.

use crate::kernel::{signed_area, HPoint, Rational};
use crate::scene::RatioParams;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default size bound for random numerators and denominators.
pub const DEFAULT_BOUND: u64 = 20;

/// Seeded generator of rationals, ratio bundles and triangles.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: u64,
}

impl Sampler {
    /// `bound` is clamped to at least 1.
    pub fn new(seed: u64, bound: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: bound.max(1),
        }
    }

    /// A positive rational with numerator and denominator uniform in 1..=B.
    pub fn rational(&mut self) -> Rational {
        let numer = self.rng.gen_range(1..=self.bound) as i64;
        let denom = self.rng.gen_range(1..=self.bound) as i64;
        Rational::new(numer.into(), denom.into())
    }

    /// A signed rational with numerator uniform in -B..=B (possibly zero).
    fn signed_rational(&mut self) -> Rational {
        let b = self.bound as i64;
        let numer = self.rng.gen_range(-b..=b);
        let denom = self.rng.gen_range(1..=self.bound) as i64;
        Rational::new(numer.into(), denom.into())
    }

    fn params(&mut self, ratios: [Rational; 6]) -> RatioParams {
        let [l1, l2, l3, u, v, w] = ratios;
        RatioParams::new(l1, l2, l3, u, v, w).expect("sampled ratios are positive")
    }

    /// Six unconstrained positive ratios.
    pub fn params_free(&mut self) -> RatioParams {
        let ratios = [
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
        ];
        self.params(ratios)
    }

    /// λ₁λ₂λ₃uvw = 1 exactly: five free, w solved.
    pub fn params_full_product_one(&mut self) -> RatioParams {
        let l1 = self.rational();
        let l2 = self.rational();
        let l3 = self.rational();
        let u = self.rational();
        let v = self.rational();
        let w = (&l1 * &l2 * &l3 * &u * &v).recip();
        self.params([l1, l2, l3, u, v, w])
    }

    /// λ₁λ₂λ₃ = 1 and uvw = 1 simultaneously (both cevian trios concurrent).
    pub fn params_double_ceva(&mut self) -> RatioParams {
        let l1 = self.rational();
        let l2 = self.rational();
        let l3 = (&l1 * &l2).recip();
        let u = self.rational();
        let v = self.rational();
        let w = (&u * &v).recip();
        self.params([l1, l2, l3, u, v, w])
    }

    /// uvw = 1 with λ₁λ₂λ₃ ≠ 1 (proper G-triangle, H a single point).
    pub fn params_h_point_g_proper(&mut self) -> RatioParams {
        let (l1, l2, l3) = loop {
            let l1 = self.rational();
            let l2 = self.rational();
            let l3 = self.rational();
            if !(&l1 * &l2 * &l3).is_one() {
                break (l1, l2, l3);
            }
        };
        let u = self.rational();
        let v = self.rational();
        let w = (&u * &v).recip();
        self.params([l1, l2, l3, u, v, w])
    }

    /// λ₁λ₂λ₃ = 1 with uvw ≠ 1 (G a single point, proper H-triangle).
    pub fn params_g_point_h_proper(&mut self) -> RatioParams {
        let l1 = self.rational();
        let l2 = self.rational();
        let l3 = (&l1 * &l2).recip();
        let (u, v, w) = loop {
            let u = self.rational();
            let v = self.rational();
            let w = self.rational();
            if !(&u * &v * &w).is_one() {
                break (u, v, w);
            }
        };
        self.params([l1, l2, l3, u, v, w])
    }

    /// λ₁λ₂λ₃uvw a perfect rational cube: five free, w solved so the full
    /// product is c³ for a sampled c. Keeps cube-root comparisons exact.
    pub fn params_cube_product(&mut self) -> RatioParams {
        let l1 = self.rational();
        let l2 = self.rational();
        let l3 = self.rational();
        let u = self.rational();
        let v = self.rational();
        let c = self.rational();
        let w = &c * &c * &c / (&l1 * &l2 * &l3 * &u * &v);
        self.params([l1, l2, l3, u, v, w])
    }

    /// Three unconstrained positive ratios.
    pub fn triple(&mut self) -> (Rational, Rational, Rational) {
        (self.rational(), self.rational(), self.rational())
    }

    /// Three positive ratios with product exactly 1.
    pub fn triple_product_one(&mut self) -> (Rational, Rational, Rational) {
        let l1 = self.rational();
        let l2 = self.rational();
        let l3 = (&l1 * &l2).recip();
        (l1, l2, l3)
    }

    /// A non-degenerate triangle with rational coordinates; resamples until
    /// the vertices are affinely independent.
    pub fn triangle(&mut self) -> (HPoint, HPoint, HPoint) {
        loop {
            let a = HPoint::affine(self.signed_rational(), self.signed_rational());
            let b = HPoint::affine(self.signed_rational(), self.signed_rational());
            let c = HPoint::affine(self.signed_rational(), self.signed_rational());
            let area = signed_area(&a, &b, &c).expect("affine points are finite");
            if !area.is_zero() {
                return (a, b, c);
            }
        }
    }
}

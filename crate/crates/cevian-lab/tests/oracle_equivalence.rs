//! Dual-route equivalence: every closed-form ratio must agree exactly with
//! the area quotient measured on an independently constructed scene.
//!
//! Each test drives a seeded sampler through a few hundred parameter sets,
//! builds the full incidence scene, and compares formula output against
//! `geometric_ratio` (which knows nothing about the formulas). Comparisons
//! are exact rational equality, never approximate.

use cevian_lab::forms::{
    def_ratio, derived_ratios, h_triangle_ratio, rigby_areas, routh_ratio, rst_def_ratio,
    rst_over_g_ratio, rst_over_h_ratio,
};
use cevian_lab::kernel::division_ratio;
use cevian_lab::sample::Sampler;
use cevian_lab::scene::{build_default_scene, build_scene, geometric_ratio, Scene};
use cevian_lab::{RatioParams, TriangleName};
use num_traits::One;

const SEED: u64 = 0x0ac1e;
const BOUND: u64 = 20;

/// Builds the canonical-frame scene, skipping samples that degenerate
/// (parallel construction lines and the like); returns None for those.
fn proper_scene(params: &RatioParams) -> Option<Scene> {
    let scene = build_default_scene(params).expect("positive ratios build a scene");
    scene.degeneracies.is_empty().then_some(scene)
}

#[test]
fn first_trio_formulas_match_measured_areas() {
    let mut sampler = Sampler::new(SEED, BOUND);
    let mut checked = 0;
    while checked < 200 {
        let params = sampler.params_free();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let (l1, l2, l3) = (params.lambda1(), params.lambda2(), params.lambda3());

        let def_measured = geometric_ratio(&scene, TriangleName::Def, TriangleName::Abc).unwrap();
        assert_eq!(def_ratio(l1, l2, l3).unwrap(), def_measured);

        if !params.lambda_product().is_one() {
            let g_measured =
                geometric_ratio(&scene, TriangleName::G1G2G3, TriangleName::Abc).unwrap();
            assert_eq!(routh_ratio(l1, l2, l3).unwrap(), g_measured);
        }
        checked += 1;
    }
}

#[test]
fn second_trio_formula_matches_measured_h_triangle() {
    let mut sampler = Sampler::new(SEED ^ 1, BOUND);
    let mut checked = 0;
    while checked < 200 {
        let params = sampler.params_free();
        if params.uvw_product().is_one() {
            continue;
        }
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let h_measured = geometric_ratio(&scene, TriangleName::H1H2H3, TriangleName::Abc).unwrap();
        assert_eq!(
            h_triangle_ratio(params.u(), params.v(), params.w()).unwrap(),
            h_measured
        );
        checked += 1;
    }
}

#[test]
fn inner_triangle_formula_matches_measured_areas() {
    let mut sampler = Sampler::new(SEED ^ 2, BOUND);
    let mut checked = 0;
    while checked < 200 {
        let params = sampler.params_free();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let rst_measured = geometric_ratio(&scene, TriangleName::Rst, TriangleName::Def).unwrap();
        assert_eq!(rst_def_ratio(&params), rst_measured);
        checked += 1;
    }
}

#[test]
fn corner_area_decomposition_matches_measured_areas() {
    let mut sampler = Sampler::new(SEED ^ 3, BOUND);
    let mut checked = 0;
    while checked < 200 {
        let params = sampler.params_free();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let total = scene.area(TriangleName::Abc).unwrap();
        let areas = rigby_areas(
            params.lambda1(),
            params.lambda2(),
            params.lambda3(),
            &total,
        )
        .unwrap();
        assert_eq!(areas.p, scene.area(TriangleName::Aef).unwrap());
        assert_eq!(areas.q, scene.area(TriangleName::Bfd).unwrap());
        assert_eq!(areas.r, scene.area(TriangleName::Cde).unwrap());
        assert_eq!(areas.x, scene.area(TriangleName::Def).unwrap());
        if !params.lambda_product().is_one() {
            assert_eq!(areas.y, scene.area(TriangleName::G1G2G3).unwrap());
        }
        checked += 1;
    }
}

#[test]
fn derived_ratios_match_measured_segment_divisions() {
    let mut sampler = Sampler::new(SEED ^ 4, BOUND);
    let mut checked = 0;
    while checked < 200 {
        let params = sampler.params_free();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let d = derived_ratios(&params);
        // N divides FE, Q divides DF, P divides ED.
        assert_eq!(d.alpha, division_ratio(&scene.f, &scene.e, &scene.n).unwrap());
        assert_eq!(d.beta, division_ratio(&scene.d, &scene.f, &scene.q).unwrap());
        assert_eq!(d.gamma, division_ratio(&scene.e, &scene.d, &scene.p).unwrap());
        // Their product collapses to the full six-ratio product.
        assert_eq!(&d.alpha * &d.beta * &d.gamma, params.full_product());
        checked += 1;
    }
}

#[test]
fn central_comparison_matches_measured_areas_when_g_is_a_point() {
    let mut sampler = Sampler::new(SEED ^ 5, BOUND);
    let mut checked = 0;
    while checked < 150 {
        let params = sampler.params_h_point_g_proper();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let measured = geometric_ratio(&scene, TriangleName::Rst, TriangleName::G1G2G3).unwrap();
        assert_eq!(rst_over_g_ratio(&params).unwrap(), measured);
        checked += 1;
    }
}

#[test]
fn central_comparison_matches_measured_areas_when_h_is_a_point() {
    let mut sampler = Sampler::new(SEED ^ 6, BOUND);
    let mut checked = 0;
    while checked < 150 {
        let params = sampler.params_g_point_h_proper();
        let Some(scene) = proper_scene(&params) else {
            continue;
        };
        let measured = geometric_ratio(&scene, TriangleName::Rst, TriangleName::H1H2H3).unwrap();
        assert_eq!(rst_over_h_ratio(&params).unwrap(), measured);
        checked += 1;
    }
}

#[test]
fn formulas_are_frame_independent() {
    use cevian_lab::kernel::HPoint;

    // A deliberately lopsided frame: same ratios, same answers.
    let a = HPoint::from_ints(-7, 3);
    let b = HPoint::from_ints(12, -2);
    let c = HPoint::from_ints(4, 19);

    let mut sampler = Sampler::new(SEED ^ 7, BOUND);
    let mut checked = 0;
    while checked < 60 {
        let params = sampler.params_free();
        let scene = build_scene(&a, &b, &c, &params).unwrap();
        if !scene.degeneracies.is_empty() {
            continue;
        }
        let (l1, l2, l3) = (params.lambda1(), params.lambda2(), params.lambda3());
        assert_eq!(
            def_ratio(l1, l2, l3).unwrap(),
            geometric_ratio(&scene, TriangleName::Def, TriangleName::Abc).unwrap()
        );
        assert_eq!(
            rst_def_ratio(&params),
            geometric_ratio(&scene, TriangleName::Rst, TriangleName::Def).unwrap()
        );
        if !params.lambda_product().is_one() {
            assert_eq!(
                routh_ratio(l1, l2, l3).unwrap(),
                geometric_ratio(&scene, TriangleName::G1G2G3, TriangleName::Abc).unwrap()
            );
        }
        checked += 1;
    }
}

//! Cross-module property tests: the solver's evidence, the cap windows, and
//! the agreement between closed-form extremal values and brute-force series
//! evaluation of the same mappings.

use bohr_core::functional::{eval_functional, extremal_mapping, extremal_value, SchwarzTriple};
use bohr_core::lemmas::{lemma_suite, PairSample};
use bohr_core::functional::DilatationMode;
use bohr_core::radius::{Params, RadiusProblem, Variant};
use proptest::prelude::*;

fn distortion_strategy() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(1.0),
        Just(f64::INFINITY),
        (1.0f64..200.0),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The returned bracket straddles a sign change and contains the root.
    #[test]
    fn solver_evidence_is_self_consistent(
        variant_idx in 0usize..7,
        p in 1u32..=5,
        m in 1u32..=5,
        q in 1u32..=5,
        distortion in distortion_strategy(),
    ) {
        let variant = Variant::all()[variant_idx];
        let params = Params::new(p, m, q, distortion).expect("valid parameters");
        let problem = RadiusProblem::new(variant, params);
        let root = problem.solve_radius(1e-12).expect("solvable");
        let (lo, hi) = root.bracket;
        prop_assert!(lo <= root.value && root.value <= hi);
        let f_lo = problem.defining_function(lo).expect("inside the disk");
        let f_hi = problem.defining_function(hi).expect("inside the disk");
        prop_assert!(f_lo <= 0.0, "f(lo) = {f_lo}");
        prop_assert!(f_hi >= 0.0, "f(hi) = {f_hi}");
        prop_assert!(root.residual.abs() <= 1e-10);
    }

    // Solved radii stay inside their validity caps (majorant: when m >= p).
    #[test]
    fn radius_stays_within_cap(
        variant_idx in 0usize..3,
        p in 1u32..=5,
        extra_m in 0u32..=4,
        q in 1u32..=5,
        distortion in distortion_strategy(),
    ) {
        let variant = [Variant::Majorant, Variant::ValueDeriv, Variant::ValueSqDeriv][variant_idx];
        let m = if variant == Variant::Majorant { p + extra_m } else { 1 + extra_m };
        let params = Params::new(p, m, q, distortion).expect("valid parameters");
        let problem = RadiusProblem::new(variant, params);
        let radius = problem.solve_radius(1e-12).expect("solvable").value;
        let cap = problem.cap_radius().expect("variant has a cap");
        prop_assert!(radius <= cap + 1e-12, "radius {radius} vs cap {cap}");
    }

    // Closed-form extremal values agree with evaluating the Bohr functional
    // on the actually-expanded extremal mapping.
    #[test]
    fn extremal_closed_forms_match_series_evaluation(
        variant_idx in 0usize..4,
        a in 0.0f64..0.95,
        r in 0.05f64..0.5,
        p in 1u32..=3,
        m in 1u32..=3,
        q in 1u32..=3,
        distortion in distortion_strategy(),
    ) {
        let variant = [
            Variant::Majorant,
            Variant::ValueDeriv,
            Variant::ValueSqDeriv,
            Variant::Refined,
        ][variant_idx];
        let params = Params::new(p, m, q, distortion).expect("valid parameters");
        let closed = extremal_value(variant, a, &params, r).expect("closed form");
        let mapping = extremal_mapping(variant, a, &params, 256).expect("expandable");
        let schwarz = SchwarzTriple::monomials(p, m, q).expect("positive degrees");
        let series = eval_functional(variant, &mapping, &schwarz, r).expect("series evaluation");
        prop_assert!(
            (closed - series).abs() <= 1e-7,
            "closed {closed} vs series {series}"
        );
    }

    // Random admissible pairs expand reproducibly from their seed.
    #[test]
    fn pair_samples_are_reproducible(seed in any::<u64>()) {
        let first = PairSample::random(seed, DilatationMode::Standard);
        let second = PairSample::random(seed, DilatationMode::Standard);
        let (h1, g1) = first.coefficient_pair(64).expect("expandable");
        let (h2, g2) = second.coefficient_pair(64).expect("expandable");
        for n in 0..=64 {
            prop_assert_eq!(h1.coeff(n), h2.coeff(n));
            prop_assert_eq!(g1.coeff(n), g2.coeff(n));
        }
    }
}

#[test]
fn lemma_suite_is_bitwise_reproducible() {
    let a = lemma_suite(7, 25);
    let b = lemma_suite(7, 25);
    assert_eq!(a, b);
}

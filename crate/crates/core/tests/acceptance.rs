//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with --nocapture). All checks are exact; tolerance is
//! zero throughout. Counts and fields are pinned here and match the
//!-- documented contract of the crate.

use compalg_core::compalg::{AlgKind, AlgebraTag, CompElement};
use compalg_core::cubic27::{
    beta_gradient, build_structure, evaluate_beta, theta_map,
    theta_map_inverse, GridTriple, GRID_CENSUS, INCIDENCE_GROUP_ORDER,
};
use compalg_core::field::{FieldContext, Scalar};
use compalg_core::jordan::{
    classify_rank_one_octonion, jordan_rank_one, nu2_preimage_exists, octonion_quadrics, veronese,
    HermitianMatrix, RankOneClass,
};
use compalg_core::jsonio;
use compalg_core::linalg::Matrix;
use compalg_core::rightmod::enumerate_submodules;
use compalg_core::sample;
use compalg_core::verify::{self, trial_rng, CheckItem};
use std::time::{Duration, Instant};

fn f(p: u64) -> FieldContext {
    FieldContext::prime(p).unwrap()
}

fn q() -> FieldContext {
    FieldContext::Rationals
}

fn report(n: u32, item: &CheckItem) {
    let state = if item.pass { "PASS" } else { "FAIL" };
    println!("criterion {n:2}: {state} {} ({})", item.name, item.detail);
    assert!(item.pass, "criterion {n} failed: {} ({})", item.name, item.detail);
}

fn report_line(n: u32, pass: bool, text: &str) {
    let state = if pass { "PASS" } else { "FAIL" };
    println!("criterion {n:2}: {state} {text}");
    assert!(pass, "criterion {n} failed: {text}");
}

#[test]
fn acceptance_01_composition_identities() {
    let start = Instant::now();
    for ctx in [f(5), f(7), q()] {
        report(1, &verify::check_composition_law(ctx, 10_000, 101));
        report(1, &verify::check_alternativity(ctx, 10_000, 102));
    }
    println!("criterion  1: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_02_isotropic_images_exhaustive_f3() {
    let start = Instant::now();
    report(2, &verify::check_isotropic_octonions_exhaustive_f3());
    report(2, &verify::check_membership_bullet_random(f(3), 100_000, 201));
    println!("criterion  2: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_03_triality_bullets() {
    let start = Instant::now();
    report(3, &verify::check_triality_random(f(5), 10_000, 301));
    report(3, &verify::check_triality_random(f(7), 10_000, 302));
    // the statement carries no field hypothesis; probe more fields
    // rather than assuming universality
    report(3, &verify::check_triality_random(f(3), 2_000, 303));
    report(3, &verify::check_triality_random(q(), 500, 304));
    println!("criterion  3: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_04_rank_one_equivalences() {
    let start = Instant::now();
    // The A^2 = tr(A) A leg of the stated five-way equivalence fails in
    // characteristic 2 at exactly the identity matrix (tr Id = 3 = 1
    // there); the check asserts the four-way equivalence everywhere and
    // pins that exception set instead of hiding it.
    report(4, &verify::check_rank_one_equivalences_exhaustive_f2(AlgKind::C, 3));
    report(4, &verify::check_rank_one_equivalences_exhaustive_f2(AlgKind::H, 2));
    report(4, &verify::check_rank_one_equivalences_random_q(200, 401));
    println!("criterion  4: elapsed {:?}", start.elapsed());
}

#[test]
#[ignore = "optional long sweep over H_3(H_F2), 2^15 elements"]
fn acceptance_04_long_h3_quaternions() {
    report(4, &verify::check_rank_one_equivalences_exhaustive_f2(AlgKind::H, 3));
}

#[test]
fn acceptance_05_det3_theta_beta_symbolic() {
    let start = Instant::now();
    report(5, &verify::check_symbolic_identities());
    // both expansions carry exactly 45 unit monomials
    let beta = compalg_core::cubic27::beta_poly();
    let composed = compalg_core::cubic27::det3_theta_poly();
    report_line(
        5,
        beta.num_terms() == 45 && composed == beta,
        "both expansions have exactly 45 monomials with coefficients in {+1, -1}",
    );
    println!("criterion  5: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_06_three_grid_sign_identity() {
    let start = Instant::now();
    let s = build_structure();
    let first = s.enumerate_3grids();
    let second = s.enumerate_3grids();
    report_line(
        6,
        first == second && first.len() == GRID_CENSUS,
        &format!("grid census {} recorded and stable across runs", first.len()),
    );
    report(6, &verify::check_theta_grid_suite());
    println!("criterion  6: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_07_beta_invariance() {
    let start = Instant::now();
    report(7, &verify::check_beta_invariance(f(7), 1000, 701));
    println!("criterion  7: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_08_singular_locus() {
    let start = Instant::now();
    report(8, &verify::check_singular_locus(f(5), 10_000, 801));
    // 10^3 constructed rank-one points pass all three predicates
    let tag = AlgebraTag::new(AlgKind::O, f(5));
    for trial in 0..1000u64 {
        let mut rng = trial_rng(802, trial);
        let z = sample::embedded_quaternion_tuple(tag, 3, 4, &mut rng);
        let a = veronese(&z).unwrap();
        let t = theta_map_inverse(&a);
        assert_eq!(theta_map(&t), a);
        let grad_zero = beta_gradient(&t).iter().all(|s| s.is_zero());
        let quadrics_zero = octonion_quadrics(&a).unwrap().iter().all(|s| s.is_zero());
        let rank_le_one = a.is_zero() || jordan_rank_one(&a).unwrap();
        assert!(grad_zero && quadrics_zero && rank_le_one, "trial {trial}");
    }
    report_line(8, true, "1000 constructed rank-one points pass all three predicates");
    println!("criterion  8: elapsed {:?}", start.elapsed());
}

fn shipped_witness() -> HermitianMatrix {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/x0_witness.json");
    let text = std::fs::read_to_string(path).expect("shipped witness file");
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonio::hermitian_from_json(&value).unwrap()
}

#[test]
fn acceptance_09_x0_x1_classification() {
    let start = Instant::now();
    // the shipped X0 witness over Q
    let w = shipped_witness();
    let quadrics_pass = octonion_quadrics(&w).unwrap().iter().all(|s| s.is_zero());
    let is_x0 = matches!(classify_rank_one_octonion(&w), Ok(RankOneClass::X0 { .. }));
    // reduce mod 3 and run the exhaustive preimage sweep
    let t3 = AlgebraTag::new(AlgKind::O, f(3));
    let coords3: Vec<Scalar> = w
        .coords()
        .iter()
        .map(|s| {
            let v = s.to_integer_lift().expect("witness entries are integers");
            Scalar::from_i64(f(3), v)
        })
        .collect();
    let w3 = HermitianMatrix::from_coords(t3, 3, &coords3);
    let no_preimage = !nu2_preimage_exists(&w3).unwrap();
    report_line(
        9,
        quadrics_pass && is_x0 && no_preimage,
        "shipped X0 witness: quadrics pass, class X0, no Veronese preimage over F_3",
    );
    // the witness construction itself (search + lift) is reproducible
    report(9, &verify::check_x0_witness());
    report(9, &verify::check_x1_roundtrip(f(5), 1000, 901));
    println!("criterion  9: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_10_grassmannian_census_and_duality() {
    let start = Instant::now();
    report(10, &verify::check_census_c2_f2());
    report(10, &verify::check_extract_regeneration_f2());
    report(10, &verify::check_duality(f(3), 500, 1001));
    report(10, &verify::check_duality(q(), 500, 1002));
    println!("criterion 10: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_11_structure_group_invariance() {
    let start = Instant::now();
    report(11, &verify::check_structure_group(f(5), 200, 1101));
    println!("criterion 11: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_12_octonionic_scaling_failure() {
    let start = Instant::now();
    report(12, &verify::check_zak_witness());
    println!("criterion 12: elapsed {:?}", start.elapsed());
}

#[test]
fn acceptance_13_automorphism_census() {
    let start = Instant::now();
    report(13, &verify::check_automorphism_census(Duration::from_secs(300)));
    report_line(
        13,
        INCIDENCE_GROUP_ORDER == 51840,
        "recorded census constant is 51840",
    );
    println!("criterion 13: elapsed {:?}", start.elapsed());
}

// Supporting assertions used by several criteria: the exchange formats
// round-trip, and the census JSON carries the reproducibility data.
#[test]
fn acceptance_interfaces() {
    let tag = AlgebraTag::new(AlgKind::O, f(7));
    let mut rng = trial_rng(1400, 0);
    let a = sample::hermitian(tag, 3, 5, &mut rng);
    let json = jsonio::hermitian_to_json(&a);
    assert_eq!(jsonio::hermitian_from_json(&json).unwrap(), a);

    let census = enumerate_submodules(AlgebraTag::new(AlgKind::C, f(2)), 2, 2).unwrap();
    let json = jsonio::census_to_json(&census, Some(7));
    assert_eq!(json["groups"].as_array().unwrap().len(), 3);
    assert_eq!(json["free_count"], 9);
    assert_eq!(json["seed"], 7);

    let inc = jsonio::incidence_to_json(build_structure());
    assert_eq!(inc["planes"].as_array().unwrap().len(), 45);
    assert_eq!(inc["points"].as_array().unwrap().len(), 27);

    // beta evaluated through the incidence structure agrees with the
    // matrix route on random field points
    let s = build_structure();
    for trial in 0..100u64 {
        let mut rng = trial_rng(1401, trial);
        let t = GridTriple::new(
            sample::matrix(f(7), 3, 3, 6, &mut rng),
            sample::matrix(f(7), 3, 3, 6, &mut rng),
            sample::matrix(f(7), 3, 3, 6, &mut rng),
        );
        assert_eq!(s.evaluate_alpha(f(7), &t.coords()), evaluate_beta(&t));
    }

    // deterministic reports: same seed, same bytes
    let cfg = verify::SuiteConfig::new(f(5), 50, 99);
    let r1 = verify::verify_compalg(&cfg);
    let r2 = verify::verify_compalg(&cfg);
    assert_eq!(r1.render(), r2.render());
}

// Exercises the error paths named by the operation contracts.
#[test]
fn acceptance_error_paths() {
    let tag = AlgebraTag::new(AlgKind::O, q());
    let zero = HermitianMatrix::zero(tag, 3);
    assert!(jordan_rank_one(&zero).is_err());
    assert!(classify_rank_one_octonion(&HermitianMatrix::identity(tag, 3)).is_err());
    assert!(FieldContext::prime(0).is_err());
    assert!(FieldContext::prime(15).is_err());
    let htag = AlgebraTag::new(AlgKind::H, q());
    let mut rng = trial_rng(1500, 0);
    let x = sample::comp_element(htag, 3, &mut rng);
    let one = CompElement::one(htag);
    // inversion is exposed only through conj(x)/Q(x) with a guard
    assert_eq!(one.inverse().unwrap(), one);
    let e11 = CompElement::basis(htag, 0);
    assert!(e11.inverse().is_err());
    assert!(Matrix::identity(q(), 2).inverse().is_ok());
    let _ = x;
}

//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Every tolerance is pinned here, not configurable.

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use minsurf::boundary::{circle_length, mean_ratio_profile, schwarz_report, QuadratureSpec};
use minsurf::equality::{
    boundary_speed, conformality_check, equality_certificate, AffineCoefficients, VerdictKind,
};
use minsurf::mobius::{precompose, pullback_identity_residual, DiskMobius};
use minsurf::series::PowerSeries;
use minsurf::subharmonic::{laplacian_identity_residual, riesz_balance};
use minsurf::surface::{MinimalSurface, PolarGrid, Surface};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn enneper() -> Surface {
    Surface::from_pq(
        PowerSeries::from_real(&[1.0]),
        PowerSeries::from_real(&[0.0, 1.0]),
    )
}

fn planar() -> Surface {
    Surface::from_pq(
        PowerSeries::from_real(&[1.0]),
        PowerSeries::from_real(&[0.0]),
    )
}

fn affine_tilt() -> Surface {
    Surface::from_pq(
        PowerSeries::from_real(&[1.0]),
        PowerSeries::new(vec![c(0.0, 0.5)]),
    )
}

fn random_series(rng: &mut ChaCha8Rng, max_deg: usize) -> PowerSeries {
    let deg = rng.gen_range(0..=max_deg);
    PowerSeries::new(
        (0..=deg)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

/// Coefficients on the 1/16 lattice keep every convolution in the phi
/// construction exact in f64, so algebraic identities hold to machine zero.
fn random_dyadic_series(rng: &mut ChaCha8Rng, max_deg: usize) -> PowerSeries {
    let deg = rng.gen_range(0..=max_deg);
    PowerSeries::new(
        (0..=deg)
            .map(|_| {
                c(
                    rng.gen_range(-16i32..=16) as f64 / 16.0,
                    rng.gen_range(-16i32..=16) as f64 / 16.0,
                )
            })
            .collect(),
    )
}

fn report(criterion: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {criterion}: {detail}");
}

#[test]
fn criterion_1_enneper_benchmark() {
    let start = Instant::now();
    let quad = QuadratureSpec::default();
    let s = enneper();

    let r_big = circle_length(&s, 1.0, &quad).unwrap() / TAU;
    let l_half = circle_length(&s, 0.5, &quad).unwrap();
    let grid = PolarGrid::new(200, 256, 0.999).unwrap();
    let rep = schwarz_report(&s, &grid, &quad).unwrap();
    let elapsed = start.elapsed();

    let pass = (r_big - 2.0).abs() < 1e-9
        && (l_half - 1.25 * PI).abs() < 1e-9
        && (rep.sup_value - 1.0).abs() < 1e-9
        && rep.argmax.norm() < 1e-3
        && rep.holds
        && (rep.ratio - 0.5).abs() < 1e-6
        && elapsed.as_secs_f64() < 5.0;
    report(
        "criterion 1 (Enneper benchmark)",
        pass,
        &format!(
            "R={r_big:.12}, l_0.5={l_half:.12}, sup={:.12}, |argmax|={:.2e}, ratio={:.9}, {:.2?}",
            rep.sup_value,
            rep.argmax.norm(),
            rep.ratio,
            elapsed
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_2_equality_cases() {
    let quad = QuadratureSpec::default();
    let grid = PolarGrid::new(100, 128, 0.999).unwrap();
    let mut pass = true;
    let mut details = Vec::new();
    for (name, s, r_expect) in [("planar", planar(), 1.0), ("affine", affine_tilt(), 1.25)] {
        let rep = schwarz_report(&s, &grid, &quad).unwrap();
        let verdict = equality_certificate(&s, &grid, &quad).unwrap();
        let witness = verdict.witness.map(|w| w.norm()).unwrap_or(f64::INFINITY);
        let ok = rep.equality_within_tol
            && verdict.kind == VerdictKind::Equality
            && witness < 1e-6
            && verdict.margin.abs() <= r_expect * 1e-6
            && verdict.affine_detected;
        details.push(format!(
            "{name}: equality={}, |witness|={witness:.2e}, margin={:.2e}, affine={}",
            rep.equality_within_tol, verdict.margin, verdict.affine_detected
        ));
        pass &= ok;
    }
    report("criterion 2 (equality cases)", pass, &details.join("; "));
    assert!(pass);
}

#[test]
fn criterion_3_mobius_machinery() {
    let quad = QuadratureSpec {
        rel_tol: 1e-12,
        abs_tol: 1e-13,
        ..QuadratureSpec::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut max_residual: f64 = 0.0;
    let mut max_length_gap: f64 = 0.0;
    for _ in 0..50 {
        let s = Surface::from_pq(random_series(&mut rng, 5), random_series(&mut rng, 5));
        let a = Complex64::from_polar(rng.gen_range(0.0..=0.7), rng.gen_range(0.0..TAU));
        max_residual = max_residual.max(pullback_identity_residual(&s, a).unwrap());
        let h = precompose(&s, DiskMobius::new(a).unwrap());
        let l_base = circle_length(&s, 1.0, &quad).unwrap();
        let l_derived = circle_length(&h, 1.0, &quad).unwrap();
        max_length_gap = max_length_gap.max((l_base - l_derived).abs());
    }
    let pass = max_residual < 1e-12 && max_length_gap < 1e-7;
    report(
        "criterion 3 (Mobius machinery)",
        pass,
        &format!("max pullback residual {max_residual:.2e}, max |l1(FoM)-l1(F)| {max_length_gap:.2e}"),
    );
    assert!(pass);
}

#[test]
fn criterion_4_riesz_balance() {
    let s = enneper();
    let grid = PolarGrid::new(200, 256, 0.9).unwrap();
    let mut pass = true;
    let mut details = Vec::new();
    for r in [0.3, 0.5, 0.9] {
        let rep = riesz_balance(&s, r, &grid, 1e-3).unwrap();
        let expect = r * r;
        let ok = (rep.circle_mean_minus_center - expect).abs() < 5e-4
            && (rep.weighted_mass - expect).abs() < 5e-4;
        details.push(format!(
            "r={r}: LHS={:.6}, RHS={:.6}",
            rep.circle_mean_minus_center, rep.weighted_mass
        ));
        pass &= ok;
    }
    let coarse = riesz_balance(&s, 0.5, &grid, 1e-3).unwrap();
    let fine_grid = PolarGrid::new(400, 512, 0.9).unwrap();
    let fine = riesz_balance(&s, 0.5, &fine_grid, 5e-4).unwrap();
    let refined = fine.residual <= coarse.residual / 2.0;
    details.push(format!(
        "refinement {:.2e} -> {:.2e}",
        coarse.residual, fine.residual
    ));
    pass &= refined;
    report("criterion 4 (Riesz balance)", pass, &details.join("; "));
    assert!(pass);
}

#[test]
fn criterion_5_laplacian_identity() {
    let s = enneper();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut max_residual: f64 = 0.0;
    for _ in 0..20 {
        let z = Complex64::from_polar(rng.gen_range(0.2..=0.8), rng.gen_range(0.0..TAU));
        max_residual = max_residual.max(laplacian_identity_residual(&s, z, 1e-3).unwrap());
    }
    let pass = max_residual < 1e-3;
    report(
        "criterion 5 (Laplacian identity)",
        pass,
        &format!("max residual {max_residual:.2e} over 20 points"),
    );
    assert!(pass);
}

#[test]
fn criterion_6_theorem_property_suite() {
    let quad = QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 1e-14,
        ..QuadratureSpec::default()
    };
    let grid = PolarGrid::new(40, 64, 0.99).unwrap();
    let radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(616);
    let mut worst_excess = f64::NEG_INFINITY;
    let mut worst_monotonicity = f64::NEG_INFINITY;
    let mut worst_first_gap = f64::NEG_INFINITY;
    for _ in 0..200 {
        let s = Surface::from_pq(random_series(&mut rng, 6), random_series(&mut rng, 6));
        let r_big = circle_length(&s, 1.0, &quad).unwrap() / TAU;
        for z in grid.points() {
            let v = s.lambda(z) * (1.0 - z.norm_sqr());
            worst_excess = worst_excess.max(v - r_big * (1.0 + 1e-9));
        }
        let profile = mean_ratio_profile(&s, &radii, &quad).unwrap();
        for w in profile.windows(2) {
            worst_monotonicity = worst_monotonicity.max(w[0].1 - w[1].1);
        }
        worst_first_gap = worst_first_gap.max(s.lambda(c(0.0, 0.0)) - 1e-10 - profile[0].1);
    }
    let pass = worst_excess <= 0.0 && worst_monotonicity <= 1e-10 && worst_first_gap <= 0.0;
    report(
        "criterion 6 (Theorem 1 property suite)",
        pass,
        &format!(
            "200 surfaces: max bound excess {worst_excess:.2e}, max profile decrease {worst_monotonicity:.2e}, max first-value gap {worst_first_gap:.2e}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_7_algebraic_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let grid = PolarGrid::new(20, 32, 0.95).unwrap();
    let mut max_coeff: f64 = 0.0;
    let mut max_iso: f64 = 0.0;
    for _ in 0..100 {
        let s = Surface::from_pq(
            random_dyadic_series(&mut rng, 6),
            random_dyadic_series(&mut rng, 6),
        );
        max_coeff = max_coeff.max(s.sum_of_squares_residual().max_coeff_from(0));
        let iso = s.isothermal_report(&grid);
        max_iso = max_iso
            .max(iso.max_norm_gap)
            .max(iso.max_dot)
            .max(iso.max_lambda_gap);
    }
    let pass = max_coeff < 1e-14 && max_iso < 1e-10;
    report(
        "criterion 7 (algebraic identities)",
        pass,
        &format!("max sum-of-squares coefficient {max_coeff:.2e}, max isothermal residual {max_iso:.2e}"),
    );
    assert!(pass);
}

#[test]
fn criterion_8_remark_constraints() {
    let tilt = AffineCoefficients {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 0.6,
        e: 0.0,
        f: 0.8,
    };
    let (ok, r1, r2) = conformality_check(&tilt, 0.0);
    let conformal_pass = ok && r1 == 0.0 && r2 == 0.0;

    let mut max_speed_dev: f64 = 0.0;
    for k in 0..256 {
        let t = TAU * k as f64 / 256.0;
        max_speed_dev = max_speed_dev.max((boundary_speed(&tilt, t).unwrap() - 1.0).abs());
    }
    let speed_pass = max_speed_dev <= 1e-12;

    let demo = Surface::from_pq(
        PowerSeries::from_real(&[1.0, 0.3]),
        PowerSeries::from_real(&[0.0]),
    );
    let grid = PolarGrid::new(200, 256, 0.999).unwrap();
    let quad = QuadratureSpec::default();
    let verdict = equality_certificate(&demo, &grid, &quad).unwrap();
    let rep = schwarz_report(&demo, &grid, &quad).unwrap();
    let strict_pass = verdict.kind == VerdictKind::Strict && verdict.margin > 0.01 * rep.r_boundary;

    let pass = conformal_pass && speed_pass && strict_pass;
    report(
        "criterion 8 (Remark constraints)",
        pass,
        &format!(
            "conformality residuals ({r1:e}, {r2:e}); max speed deviation {max_speed_dev:.2e}; \
             demo kind={:?}, margin={:.6e}, R={:.6e}, margin/R={:.4e} (required > 1e-2)",
            verdict.kind,
            verdict.margin,
            rep.r_boundary,
            verdict.margin / rep.r_boundary
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_9_cli_and_formats() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_minsurf");

    let out = Command::new(bin)
        .args(["verify", "--surface", "enneper"])
        .output()
        .unwrap();
    let verify_pass = out.status.code() == Some(0)
        && serde_json::from_slice::<serde_json::Value>(&out.stdout)
            .map(|doc| {
                doc["tool_version"].is_string()
                    && doc["schwarz"]["R"].is_number()
                    && doc["schwarz"]["holds"].as_bool() == Some(true)
            })
            .unwrap_or(false);

    let dir = tempfile::tempdir().unwrap();
    let (n_r, n_theta) = (4usize, 6usize);
    let mesh = format!("{n_r},{n_theta},0.9");
    let paths = [dir.path().join("a.obj"), dir.path().join("b.obj")];
    for p in &paths {
        let status = Command::new(bin)
            .args(["export", "--surface", "enneper", "--mesh", &mesh])
            .arg("--out")
            .arg(p)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    let b = std::fs::read(&paths[1]).unwrap();
    let text = String::from_utf8_lossy(&a);
    let vertices = text.lines().filter(|l| l.starts_with("v ")).count();
    let faces = text.lines().filter(|l| l.starts_with("f ")).count();
    let mesh_pass = a == b
        && vertices == 1 + n_r * n_theta
        && faces == n_theta + 2 * n_theta * (n_r - 1);

    let pass = verify_pass && mesh_pass;
    report(
        "criterion 9 (CLI and formats)",
        pass,
        &format!("verify exit ok={verify_pass}; mesh vertices={vertices}, faces={faces}, byte-identical={}", a == b),
    );
    assert!(pass);
}

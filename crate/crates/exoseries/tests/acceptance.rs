//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use exoseries::catalog::{self, Params};
use exoseries::exact::{self, ratio, Rational};
use exoseries::poly;
use exoseries::series::{self, CoeffFamily};
use exoseries::special;
use exoseries::verify::{self, Verdict};

use num::traits::One;

const E: f64 = std::f64::consts::E;
const PI: f64 = std::f64::consts::PI;

/// AC-1: the all-ones family at x = y = 1 sums to e; dropping the n = 0
/// term leaves exactly 1.
#[test]
fn ac1_geometric_sums_at_one() {
    let start = Instant::now();
    let fam = CoeffFamily::ones();
    let full = series::sum_series(&fam, 1.0, 1.0, 1e-12).unwrap().value;
    let tail = series::sum_series_from(&fam, 1, 1.0, 1.0, 1e-12)
        .unwrap()
        .value;
    let elapsed = start.elapsed();
    assert!((full - E).abs() <= 1e-10, "sum = {full}");
    assert!((tail - 1.0).abs() <= 1e-10, "tail sum = {tail}");
    assert!(
        elapsed.as_secs_f64() < 0.1,
        "took {:?}, budget 0.1 s",
        elapsed
    );
    println!(
        "acceptance AC-1 (remainder sums at x=y=1: e and 1, <=1e-10, {:?}): pass",
        elapsed
    );
}

/// AC-2: binomial-coefficient family at x = y = 1 sums to e/(k+1)! for
/// k = 0..8.
#[test]
fn ac2_binomial_sums_at_one() {
    for k in 0..=8u32 {
        let fam = CoeffFamily::binomial(k);
        let v = series::sum_series(&fam, 1.0, 1.0, 1e-12).unwrap().value;
        let expect = E * exact::to_f64(&(Rational::one() / exact::factorial(k + 1)));
        assert!(
            (v - expect).abs() <= 1e-9,
            "k = {k}: {v} vs e/(k+1)! = {expect}"
        );
    }
    println!("acceptance AC-2 (binomial sums equal e/(k+1)!, k=0..8, <=1e-9): pass");
}

/// AC-3: three-way agreement (series, quadrature, closed form) at 1e-9 on
/// every standard grid, full sweep within the 30 s budget.
#[test]
fn ac3_three_way_agreement_on_standard_grids() {
    let start = Instant::now();
    let reports = verify::verify_all(1e-9);
    let elapsed = start.elapsed();
    assert_eq!(reports.len(), catalog::catalog().len());

    let required = [
        "id-geom",
        "id-binom",
        "id-powers",
        "id-bern",
        "id-bern-xm1",
        "id-stirling",
        "id-exppoly-xm1",
        "id-harmonic-x1",
        "id-factorial",
        "id-centralbinom-half",
        "id-catalan-half",
        "id-laguerre-egf",
    ];
    for id in required {
        let r = reports.iter().find(|r| r.identity == id).unwrap();
        assert!(r.errors.is_empty(), "{id}: {:?}", r.errors);
        assert!(
            r.max_deviation() <= 1e-9,
            "{id}: max dev {} > 1e-9",
            r.max_deviation()
        );
        match r.verdict {
            Verdict::Pass => {}
            Verdict::PrintedFormRejected => {
                assert_eq!(id, "id-stirling", "only the flagged ids may reject")
            }
            Verdict::Fail => panic!("{id} failed"),
        }
    }
    // nothing in the catalog may outright fail
    for r in &reports {
        assert_ne!(r.verdict, Verdict::Fail, "{} failed", r.identity);
    }
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "verify_all took {:?}, budget 30 s",
        elapsed
    );
    println!(
        "acceptance AC-3 (three-way <=1e-9 on standard grids, {} identities, {:?}): pass",
        reports.len(),
        elapsed
    );
}

/// AC-4: the two disputed published forms are rejected against both
/// oracles while their corrected forms pass.
#[test]
fn ac4_typo_adjudication() {
    let tol = 1e-9;

    // published x = 1 Bernoulli form: off by >= 1e-3 somewhere on [0.25, 3]
    let bern = catalog::find("id-bern-x1").unwrap();
    let report = verify::verify_identity(bern, &bern.standard_grid(), tol);
    assert_eq!(report.verdict, Verdict::PrintedFormRejected);
    assert!(report.max_deviation() <= tol, "corrected form passes");
    let mut rejected_somewhere = false;
    for p in report.points.iter().filter(|p| !p.skipped) {
        assert!((0.25..=3.0).contains(&p.y));
        let printed = p.closed.unwrap();
        let dev_series = (printed - p.series.unwrap()).abs();
        let dev_quad = (printed - p.quadrature.unwrap()).abs();
        if dev_series >= 1e-3 && dev_quad >= 1e-3 {
            rejected_somewhere = true;
        }
    }
    assert!(rejected_somewhere, "printed form never deviated by 1e-3");

    // published Stirling sign (-1)^j: wrong for odd k, harmless for even k
    let stir = catalog::find("id-stirling").unwrap();
    let report = verify::verify_identity(stir, &stir.standard_grid(), tol);
    assert_eq!(report.verdict, Verdict::PrintedFormRejected);
    assert!(report.max_deviation() <= tol, "corrected sign passes");
    for p in report.points.iter().filter(|p| !p.skipped) {
        let k = p.params.k.unwrap();
        let printed = p.closed.unwrap();
        let corrected = p.closed_corrected.unwrap();
        if k % 2 == 0 {
            assert_eq!(printed, corrected, "even k: same form");
        } else if p.series.unwrap().abs() > 1e-3 {
            let dev_series = (printed - p.series.unwrap()).abs();
            let dev_quad = (printed - p.quadrature.unwrap()).abs();
            assert!(
                dev_series > 1e3 * tol && dev_quad > 1e3 * tol,
                "odd k = {k} at ({}, {}): printed form should fail",
                p.x,
                p.y
            );
        }
    }
    println!("acceptance AC-4 (printed forms rejected, corrected forms pass): pass");
}

/// Independent Bernoulli oracle: the Akiyama–Tanigawa transform
/// a_j <- (j+1)(a_j − a_{j+1}) over the seed row 1/(j+1), mapped from the
/// B⁺ to the B⁻ convention by (−1)ⁿ.
fn bernoulli_akiyama_tanigawa(n: u32) -> Rational {
    let mut row: Vec<Rational> = (0..=n).map(|j| ratio(1, j as i64 + 1)).collect();
    for i in 1..=(n as usize) {
        for j in 0..=(n as usize - i) {
            row[j] = (row[j].clone() - row[j + 1].clone()) * ratio(j as i64 + 1, 1);
        }
    }
    let b_plus = row[0].clone();
    if n % 2 == 1 {
        -b_plus
    } else {
        b_plus
    }
}

/// AC-5: exact-arithmetic suite; every comparison is an exact equality of
/// big rationals.
#[test]
fn ac5_exact_arithmetic_suite() {
    // Bernoulli recurrence vs Akiyama–Tanigawa for n <= 60
    for n in 0..=60u32 {
        assert_eq!(
            exact::bernoulli(n),
            bernoulli_akiyama_tanigawa(n),
            "B_{n} mismatch"
        );
    }
    // derangement recurrence vs the alternating factorial sum for n <= 30
    for n in 0..=30u32 {
        let mut alt = Rational::default();
        for j in 0..=n {
            let term = exact::factorial(n) / exact::factorial(j);
            alt += if j % 2 == 0 { term } else { -term };
        }
        assert_eq!(exact::derangement_number(n), alt, "D_{n} mismatch");
    }
    // phi_p(1) = Bell(p) for p <= 15
    for p in 0..=15u32 {
        assert_eq!(
            poly::exp_poly(p).eval_exact(&Rational::one()),
            poly::bell_number(p),
            "phi_{p}(1) vs Bell"
        );
    }
    // d_n(1) = D_n for n <= 20
    for n in 0..=20u32 {
        assert_eq!(
            poly::derangement_poly(n).eval_exact(&Rational::one()),
            exact::derangement_number(n),
            "d_{n}(1) vs D_{n}"
        );
    }
    // sum_k S(p,k)·x(x−1)⋯(x−k+1) = x^p for integer x <= 6, p <= 8
    for x in 0..=6i64 {
        for p in 0..=8u32 {
            let mut sum = Rational::default();
            for k in 0..=p {
                let mut falling = Rational::one();
                for i in 0..k {
                    falling *= ratio(x - i as i64, 1);
                }
                sum += exact::stirling2(p, k) * falling;
            }
            assert_eq!(sum, ratio(x, 1).pow(p as i32), "x={x} p={p}");
        }
    }
    println!("acceptance AC-5 (exact-arithmetic identities, all exact equality): pass");
}

/// AC-6: property suite across the engine and the special functions.
#[test]
fn ac6_property_suite() {
    // ODE residual of u_y − u = F(xy) decays at second order: halving h
    // shrinks the residual by a factor in [3, 5] at 10 smooth points
    let smooth_points: [(&str, Params, f64, f64); 10] = [
        ("id-geom", Params::default(), 1.0, 0.5),
        ("id-geom", Params::default(), 0.5, 1.0),
        ("id-binom", Params::with_p(1), 0.5, 1.0),
        ("id-binom", Params::with_p(3), -0.5, 1.5),
        ("id-powers", Params::with_p(2), 0.5, 1.0),
        ("id-bern", Params::default(), 0.5, 1.0),
        ("id-bern", Params::default(), 0.25, 2.0),
        ("id-stirling", Params::with_k(1), 0.5, 1.0),
        ("id-harmonic-x1", Params::default(), 0.5, 1.0),
        ("id-laguerre-egf", Params::default(), 1.0, 1.0),
    ];
    let h = 2e-3;
    for (id, params, x, y) in smooth_points {
        let spec = catalog::find(id).unwrap();
        let fam = spec.family(&params);
        let gen = spec.gen_fn(&params);
        let r1 = series::ode_residual(&fam, &gen, x, y, h).unwrap();
        let r2 = series::ode_residual(&fam, &gen, x, y, h / 2.0).unwrap();
        let factor = r1 / r2;
        assert!(
            (3.0..=5.0).contains(&factor),
            "{id} at ({x}, {y}): residuals {r1:.3e}/{r2:.3e}, factor {factor:.2}"
        );
    }

    // Lagrange-form bound |E_n(y)| <= e^{|y|} |y|^{n+1}/(n+1)! for n <= 40
    for n in 0..=40u32 {
        for iy in -10..=10i32 {
            let y = iy as f64 * 0.5;
            if y == 0.0 {
                continue;
            }
            let mut lead = 1.0f64;
            for j in 1..=(n + 1) {
                lead *= y.abs() / j as f64;
            }
            let bound = y.abs().exp() * lead;
            assert!(
                series::exp_remainder(n, y).value.abs() <= bound,
                "n={n} y={y}"
            );
        }
    }

    // dilogarithm reflection at five points
    for z in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let lhs = special::li2(z).unwrap().value + special::li2(1.0 - z).unwrap().value;
        let rhs = PI * PI / 6.0 - z.ln() * (1.0 - z).ln();
        assert!((lhs - rhs).abs() <= 1e-11, "reflection at {z}");
    }

    // Ein: series route equals quadrature of the defining integral on [-3, 3]
    let integrand = |u: f64| {
        if u == 0.0 {
            1.0
        } else {
            -f64::exp_m1(-u) / u
        }
    };
    for iz in -12..=12i32 {
        let z = iz as f64 * 0.25;
        if z == 0.0 {
            continue;
        }
        let (a, b, sign) = if z > 0.0 {
            (0.0, z, 1.0)
        } else {
            (z, 0.0, -1.0)
        };
        let q = series::adaptive_simpson(&integrand, a, b, 1e-13).unwrap();
        assert!(
            (special::ein(z).value - sign * q.value).abs() <= 1e-10,
            "Ein({z})"
        );
    }

    // derangement-polynomial EGF: partial sums of sum d_n(x) z^n/n! track
    // e^{-z}/(1-xz) within the first-omitted-term bound, |xz| <= 0.5, N = 30
    const N: u32 = 30;
    for (x, z) in [
        (1.0, 0.5),
        (1.0, -0.5),
        (-1.0, 0.5),
        (0.5, 1.0),
        (-0.5, 1.0),
        (0.25, 2.0),
        (0.5, -1.0),
    ] {
        let xr = Rational::from_float(x).unwrap();
        let mut partial = 0.0;
        let mut abs_mass = 0.0;
        let mut zp = 1.0; // z^n/n!
        for n in 0..=N {
            let dn = exact::to_f64(&poly::derangement_poly(n).eval_exact(&xr));
            partial += dn * zp;
            abs_mass += (dn * zp).abs();
            zp *= z / (n + 1) as f64;
        }
        let closed = (-z).exp() / (1.0 - x * z);
        let d_next = exact::to_f64(&poly::derangement_poly(N + 1).eval_exact(&xr));
        // first-omitted-term bound for the geometric tail, plus the f64
        // rounding mass of the partial sum itself
        let bound = (d_next * zp).abs() / (1.0 - (x * z).abs())
            + (N + 10) as f64 * f64::EPSILON * (abs_mass + closed.abs());
        assert!(
            (partial - closed).abs() <= bound,
            "x={x} z={z}: |{partial} - {closed}| > {bound:.3e}"
        );
    }
    println!("acceptance AC-6 (ODE residual O(h^2), remainder bound, reflection, Ein, EGF): pass");
}

/// AC-7: the harmonic identity's closed form equals its own series
/// e^y Σ (−1)^{n−1} y^{n+1}/(n! n (n+1)) to 1e-11 across |y| <= 3.
#[test]
fn ac7_harmonic_dual_form() {
    let spec = catalog::find("id-harmonic-x1").unwrap();
    let pr = Params::default();
    for iy in -12..=12i32 {
        let y = iy as f64 * 0.25;
        let closed = spec.closed_form(1.0, y, &pr).unwrap().value;
        let dual = spec.alternate_form(1.0, y, &pr).unwrap().unwrap().value;
        assert!(
            (closed - dual).abs() <= 1e-11,
            "y = {y}: closed {closed} vs series {dual}"
        );
    }
    println!("acceptance AC-7 (harmonic dual forms agree to 1e-11 on |y| <= 3): pass");
}

/// AC-8: two consecutive `verify --all --format json` runs emit identical
/// bytes, both through the binary and in-process.
#[test]
fn ac8_determinism() {
    let out1 = std::process::Command::new(env!("CARGO_BIN_EXE_exoseries"))
        .args(["verify", "--all", "--format", "json"])
        .output()
        .expect("binary runs");
    let out2 = std::process::Command::new(env!("CARGO_BIN_EXE_exoseries"))
        .args(["verify", "--all", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out1.status.success());
    assert!(out2.status.success());
    assert!(!out1.stdout.is_empty());
    assert_eq!(out1.stdout, out2.stdout, "byte-identical JSON payloads");

    let a = verify::emit_all(&verify::verify_all(1e-9), verify::ReportFormat::Json);
    let b = verify::emit_all(&verify::verify_all(1e-9), verify::ReportFormat::Json);
    assert_eq!(a, b);
    println!("acceptance AC-8 (verify --all --format json is byte-deterministic): pass");
}

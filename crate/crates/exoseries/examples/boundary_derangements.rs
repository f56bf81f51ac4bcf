//! Conditional summation on the convergence boundary: the factorial family
//! at x = 1, y = −1 gives Σ (n!/e − D_n), which converges only by sign
//! alternation. The boundary mode sums it in index order and reports the
//! honest alternating-series tail bound.
//!
//! ```text
//! cargo run --example boundary_derangements
//! ```

use exoseries::series::{integral_repr, sum_series, sum_series_opts, CoeffFamily, GenFn, SumOpts};

fn main() {
    let fam = CoeffFamily::factorial();

    // strict evaluation refuses the boundary |xy| = radius
    match sum_series(&fam, 1.0, -1.0, 1e-9) {
        Err(e) => println!("strict mode: {e}"),
        Ok(_) => unreachable!(),
    }

    // opt in to ordered boundary summation
    let r = sum_series_opts(
        &fam,
        1.0,
        -1.0,
        1e-9,
        SumOpts {
            start: 0,
            allow_boundary: true,
        },
    )
    .unwrap();
    println!(
        "boundary mode: sum (n!/e - D_n) = {:.6} with tail bound {:.2e} ({} terms)",
        r.value, r.abs_error_bound, r.terms_used
    );

    // the quadrature oracle for the same point converges quickly
    let gen = GenFn::new("1/(1 - z)", (f64::NEG_INFINITY, 1.0), |z: f64| {
        1.0 / (1.0 - z)
    });
    let q = integral_repr(&gen, 1.0, -1.0, 1e-12).unwrap();
    println!("quadrature:    e^{{-1}} int_0^-1 e^-t/(1-t) dt = {:.12}", q.value);
    println!(
        "agreement within the boundary tail bound: {}",
        (r.value - q.value).abs() <= r.abs_error_bound + q.abs_error_bound
    );
}

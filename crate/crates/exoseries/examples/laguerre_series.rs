//! The Laguerre connection: summing E_n(y) xⁿ/n! equals the alternating
//! Laguerre series e^y Σ (−1)ⁿ L_n(x) y^{n+1}/(n+1)!, with the quadrature
//! route running through F(z) = Σ zⁿ/(n!)².
//!
//! ```text
//! cargo run --example laguerre_series
//! ```

use exoseries::catalog::{self, Params};
use exoseries::poly;
use exoseries::verify::evaluate_point;

fn main() {
    let spec = catalog::find("id-laguerre-egf").unwrap();
    println!("{}\n", spec.statement);
    println!("x      y      series               laguerre closed      quadrature           max dev");
    for (x, y) in [(0.5, 1.0), (3.0, 2.5), (-2.0, 1.0), (1.0, -2.0)] {
        let ev = evaluate_point(spec, x, y, &Params::default(), 1e-10).unwrap();
        println!(
            "{x:<6} {y:<6} {:<20.15} {:<20.15} {:<20.15} {:.2e}",
            ev.series.value,
            ev.closed.value,
            ev.quadrature.value,
            ev.max_dev()
        );
    }

    // the polynomials themselves, from the binomial representation
    println!("\nL_n(2) by recurrence vs materialized coefficients:");
    for n in 0..=6u32 {
        let rec = poly::laguerre(n, 2.0);
        let coef = poly::laguerre_poly(n).eval(2.0);
        println!("  n={n}: {rec:.15} vs {coef:.15}");
    }
}

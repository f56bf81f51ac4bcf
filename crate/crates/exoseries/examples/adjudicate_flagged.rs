//! The two disputed published closed forms, adjudicated numerically: the
//! printed variant is compared against both oracles next to the corrected
//! variant.
//!
//! ```text
//! cargo run --example adjudicate_flagged
//! ```

use exoseries::catalog::{self, Params};
use exoseries::verify::evaluate_point;

fn main() {
    // x = 1 Bernoulli identity: the printed form misplaces the pi^2/6 and
    // constant terms relative to the e^y factor
    let spec = catalog::find("id-bern-x1").unwrap();
    println!("{}\n", spec.statement);
    println!("y      series          printed         corrected       |printed-series|");
    for y in [0.25, 0.5, 1.0, 2.0, 3.0] {
        let ev = evaluate_point(spec, 1.0, y, &Params::default(), 1e-10).unwrap();
        let printed = ev.printed.unwrap();
        println!(
            "{y:<6} {:<15.10} {:<15.10} {:<15.10} {:.2e}",
            ev.series.value,
            printed.value,
            ev.closed.value,
            (printed.value - ev.series.value).abs()
        );
    }

    // Stirling identity: the printed sign (-1)^j flips the whole sum for
    // odd k; the expansion of (e^{xt}-1)^k carries (-1)^{k-j}
    let spec = catalog::find("id-stirling").unwrap();
    println!("\n{}\n", spec.statement);
    println!("k      series          printed         corrected");
    for k in 0..=4u32 {
        let pr = Params::with_k(k);
        let ev = evaluate_point(spec, 0.5, 1.0, &pr, 1e-10).unwrap();
        println!(
            "{k:<6} {:<15.10} {:<15.10} {:<15.10}",
            ev.series.value,
            ev.printed.unwrap().value,
            ev.closed.value,
        );
    }
    println!("\n(odd k: printed = -corrected; even k: identical)");
}

//! The building block E_n(y) = e^y − 1 − y/1! − ⋯ − yⁿ/n!, evaluated as a
//! forward tail sum, with its Lagrange-form bound e^{|y|}|y|^{n+1}/(n+1)!.
//!
//! ```text
//! cargo run --example exponential_remainders
//! ```

use exoseries::series::exp_remainder;

fn main() {
    let y = 1.0f64;
    println!("E_n({y}) with the Lagrange-form bound:");
    println!("n    E_n(y)                  bound");
    for n in 0..=12u32 {
        let mut b = 1.0f64;
        for k in 1..=(n + 1) {
            b *= y.abs() / k as f64;
        }
        let r = exp_remainder(n, y);
        println!("{n:<4} {:<23.16e} {:.3e}", r.value, y.abs().exp() * b);
    }

    // E_2(1) = e − 5/2, a value small enough that subtracting the partial
    // sum from e^1 would already cost digits
    let e2 = exp_remainder(2, 1.0);
    println!("\nE_2(1) = {:.16} (e - 2.5 = {:.16})", e2.value, std::f64::consts::E - 2.5);

    // the link E_n = E_{n-1} − yⁿ/n! holds to working precision
    let y = -2.5;
    let mut pw = 1.0f64;
    for n in 1..=6u32 {
        pw *= y / n as f64;
        let lhs = exp_remainder(n, y).value;
        let rhs = exp_remainder(n - 1, y).value - pw;
        println!("n={n}: E_n({y}) = {lhs:.15e}, link residual {:.1e}", (lhs - rhs).abs());
    }
}

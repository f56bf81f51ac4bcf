//! Exact tables of the special-number families used as series coefficients.
//!
//! ```text
//! cargo run --example special_numbers
//! ```

use exoseries::exact;
use exoseries::poly;

fn main() {
    println!("n    B_n          H_n        D_n      C_n     Bell_n   S(n,3)");
    for n in 0..=10u32 {
        println!(
            "{n:<4} {:<12} {:<10} {:<8} {:<7} {:<8} {}",
            exact::bernoulli(n).to_string(),
            exact::harmonic(n).to_string(),
            exact::derangement_number(n).to_string(),
            exact::catalan(n).to_string(),
            poly::bell_number(n).to_string(),
            exact::stirling2(n, 3),
        );
    }

    // the polynomial families carry the same data as coefficient vectors
    let phi3 = poly::exp_poly(3);
    println!("\nphi_3 coefficients (x^0..x^3): {:?}", phi3.coefficients);
    let d4 = poly::derangement_poly(4);
    println!("d_4 coefficients:              {:?}", d4.coefficients);
    println!("d_4(1) = {} = D_4", d4.eval_exact(&exact::ratio(1, 1)));
    println!("L_2(2) = {}", poly::laguerre(2, 2.0));
}

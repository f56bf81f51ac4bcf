//! The real-argument special functions behind the closed forms: Ein, Li₂,
//! the Lerch transcendent, modified Bessel I₀/I₁ and modified Struve L₀/L₁.
//!
//! ```text
//! cargo run --example special_functions
//! ```

use std::f64::consts::PI;

use exoseries::special::{bessel_i0, bessel_i1, ein, int_i0, lerch_phi, li2, struve_l0, struve_l1};

fn main() {
    println!("Ein(1)      = {:.15}  ({} terms)", ein(1.0).value, ein(1.0).terms_used);
    println!("Li2(1/2)    = {:.15}", li2(0.5).unwrap().value);
    println!("pi^2/12 - ln^2(2)/2 = {:.15}", PI * PI / 12.0 - 0.5 * f64::ln(2.0).powi(2));
    println!("Li2(1)      = {:.15} (= pi^2/6)", li2(1.0).unwrap().value);

    // Lerch transcendent specializations
    let zeta2 = lerch_phi(1.0, 2, 1.0).unwrap();
    println!("Phi(1,2,1)  = {:.15} (= zeta(2))", zeta2.value);
    let phi = lerch_phi(0.3, 1, 1.0).unwrap();
    println!("Phi(0.3,1,1) = {:.15} (= -ln(0.7)/0.3)", phi.value);

    println!("\nI0(2)       = {:.15}", bessel_i0(2.0).value);
    println!("I1(2)       = {:.15}", bessel_i1(2.0).value);
    println!("L0(1)       = {:.15}", struve_l0(1.0).value);
    println!("L1(1)       = {:.15}", struve_l1(1.0).value);

    // two routes to the same antiderivative of I0
    for y in [1.0, 2.0, 3.0] {
        let series = int_i0(y).value;
        let bracket = bessel_i0(y).value * struve_l1(y).value
            - bessel_i1(y).value * struve_l0(y).value;
        let struve = y * bessel_i0(y).value + PI * y / 2.0 * bracket;
        println!(
            "\nint_0^{y} I0: series form {series:.15}\n             Struve form {struve:.15}  (dev {:.1e})",
            (series - struve).abs()
        );
    }

    // every evaluation carries an a-posteriori error bound
    let e = ein(3.0);
    println!(
        "\nEin(3) = {:.15} with |error| <= {:.2e} after {} terms",
        e.value, e.abs_error_bound, e.terms_used
    );
}

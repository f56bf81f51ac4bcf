//! Polynomial families with exact rational coefficients: exponential (Bell)
//! polynomials φ_p(x) = Σ_k S(p, k) xᵏ, derangement polynomials
//! d_n(x) = n! Σ_j (−1)ʲ x^{n−j}/j!, and Laguerre polynomials in their
//! binomial representation L_n(x) = Σ_k C(n, k)(−1)ᵏ xᵏ/k!.
//!
//! Polynomials are materialized as coefficient vectors so the identity
//! catalog can reuse them in both the exact and the floating pipelines, and
//! so the coefficients themselves can be tested against the defining
//! recurrences.

use num::traits::Zero;

use crate::exact::{self, Rational};

/// Which family a [`PolySpec`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    Exponential,
    Derangement,
    Laguerre,
}

/// A materialized polynomial: `coefficients[i]` multiplies x^i and the
/// vector always has length `degree + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpec {
    pub family: PolyFamily,
    pub degree: u32,
    pub coefficients: Vec<Rational>,
}

impl PolySpec {
    /// Exact Horner evaluation at a rational point.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation over f64-rounded coefficients.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coefficients.iter().rev() {
            acc = acc * x + exact::to_f64(c);
        }
        acc
    }
}

/// Exponential polynomial φ_p with coefficients S(p, k) for k = 0..p; φ_0 = 1.
pub fn exp_poly(p: u32) -> PolySpec {
    let coefficients = (0..=p).map(|k| exact::stirling2(p, k)).collect();
    PolySpec {
        family: PolyFamily::Exponential,
        degree: p,
        coefficients,
    }
}

/// Derangement polynomial d_n; the coefficient of x^{n−j} is (−1)ʲ n!/j!,
/// so d_n(1) = D_n exactly.
pub fn derangement_poly(n: u32) -> PolySpec {
    let mut coefficients = vec![Rational::zero(); n as usize + 1];
    for j in 0..=n {
        let c = exact::factorial(n) / exact::factorial(j);
        coefficients[(n - j) as usize] = if j % 2 == 0 { c } else { -c };
    }
    PolySpec {
        family: PolyFamily::Derangement,
        degree: n,
        coefficients,
    }
}

/// Laguerre polynomial L_n as a coefficient vector, C(n, k)(−1)ᵏ/k! at xᵏ.
pub fn laguerre_poly(n: u32) -> PolySpec {
    let coefficients = (0..=n)
        .map(|k| {
            let c = exact::binomial(n, k) / exact::factorial(k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    PolySpec {
        family: PolyFamily::Laguerre,
        degree: n,
        coefficients,
    }
}

/// L_n(x) by the three-term recurrence
/// (n+1) L_{n+1}(x) = (2n+1−x) L_n(x) − n L_{n−1}(x),
/// which is well conditioned for the degree range used here. The exact
/// binomial representation is available through [`laguerre_poly`] for
/// rational arguments.
pub fn laguerre(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for m in 1..n {
        let mf = m as f64;
        let next = ((2.0 * mf + 1.0 - x) * cur - mf * prev) / (mf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Bell number: the Stirling row sum Σ_k S(p, k) = φ_p(1).
pub fn bell_number(p: u32) -> Rational {
    (0..=p).map(|k| exact::stirling2(p, k)).sum()
}

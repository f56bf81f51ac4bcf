//! Exact big-rational generators for the integer-indexed number families
//! used as series coefficients: Bernoulli numbers, Stirling numbers of the
//! second kind, harmonic numbers, derangement numbers, factorials, binomial
//! coefficients, central binomial coefficients and Catalan numbers.
//!
//! Everything here is computed in exact arithmetic and converted to `f64`
//! only at the series-engine boundary, so coefficient error can never leak
//! into identity-verification tolerances. Memo caches are append-only,
//! keyed by index, and guarded by mutexes for concurrent use.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction. Denominators stay positive and values are
/// fully reduced by construction; `Display` prints `p/q` (or `p` when the
/// denominator is one).
pub type Rational = num::BigRational;

/// Shorthand for small rational literals.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact-rounded conversion to `f64` (round to nearest, ties to even).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

fn factorial_int(n: u32) -> BigInt {
    let mut tab = FACTORIALS.lock().unwrap();
    if tab.is_empty() {
        tab.push(BigInt::one());
    }
    while tab.len() <= n as usize {
        let next = tab.last().unwrap() * BigInt::from(tab.len());
        tab.push(next);
    }
    tab[n as usize].clone()
}

/// n! as an exact rational.
pub fn factorial(n: u32) -> Rational {
    Rational::from_integer(factorial_int(n))
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let num = factorial_int(n);
    let den = factorial_int(k) * factorial_int(n - k);
    Rational::from_integer(num / den)
}

/// Central binomial coefficient C(2n, n).
pub fn central_binomial(n: u32) -> Rational {
    binomial(2 * n, n)
}

/// Catalan number C(2n, n)/(n + 1). Integer-valued.
pub fn catalan(n: u32) -> Rational {
    central_binomial(n) / Rational::from_integer(BigInt::from(n + 1))
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number B_n in the convention of the generating function
/// z/(e^z − 1), so B_1 = −1/2 and B_n = 0 for odd n ≥ 3.
///
/// Computed by the recurrence Σ_{k=0}^{n} C(n+1, k) B_k = 0 and memoized.
pub fn bernoulli(n: u32) -> Rational {
    let mut tab = BERNOULLI.lock().unwrap();
    if tab.is_empty() {
        tab.push(Rational::one());
    }
    while tab.len() <= n as usize {
        let m = tab.len() as u32;
        let mut acc = Rational::zero();
        for k in 0..m {
            acc += binomial(m + 1, k) * &tab[k as usize];
        }
        tab.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    tab[n as usize].clone()
}

static STIRLING_ROWS: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

fn stirling_entry(n: u32, k: u32) -> BigInt {
    let mut rows = STIRLING_ROWS.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n as usize {
        let m = rows.len();
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::zero());
        for j in 1..=m {
            let up = if j < m {
                &prev[j] * BigInt::from(j)
            } else {
                BigInt::zero()
            };
            row.push(up + &prev[j - 1]);
        }
        rows.push(row);
    }
    rows[n as usize][k as usize].clone()
}

/// Stirling number of the second kind S(n, k) via the triangle recurrence
/// S(n, k) = k·S(n−1, k) + S(n−1, k−1), with S(n, k) = 0 for n < k and
/// S(0, 0) = 1. Integer-valued.
pub fn stirling2(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling_entry(n, k))
}

static HARMONIC: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Harmonic number H_n = 1 + 1/2 + ⋯ + 1/n, with H_0 = 0.
pub fn harmonic(n: u32) -> Rational {
    let mut tab = HARMONIC.lock().unwrap();
    if tab.is_empty() {
        tab.push(Rational::zero());
    }
    while tab.len() <= n as usize {
        let m = tab.len() as i64;
        let next = tab.last().unwrap() + ratio(1, m);
        tab.push(next);
    }
    tab[n as usize].clone()
}

static DERANGEMENTS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// Derangement number D_n via D_n = n·D_{n−1} + (−1)ⁿ with D_0 = 1;
/// equals n! Σ_{k≤n} (−1)ᵏ/k!. Integer-valued.
pub fn derangement_number(n: u32) -> Rational {
    let mut tab = DERANGEMENTS.lock().unwrap();
    if tab.is_empty() {
        tab.push(BigInt::one());
    }
    while tab.len() <= n as usize {
        let m = tab.len();
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let next = tab.last().unwrap() * BigInt::from(m) + BigInt::from(sign);
        tab.push(next);
    }
    Rational::from_integer(tab[n as usize].clone())
}

/// True when the rational is an integer with no fractional part.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Signum helper used by a few display paths.
pub fn is_negative(r: &Rational) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_known_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(7), Rational::zero());
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        for n in (3..=61).step_by(2) {
            assert_eq!(bernoulli(n), Rational::zero(), "B_{n} should be 0");
        }
    }

    #[test]
    fn stirling_known_values() {
        assert_eq!(stirling2(0, 0), Rational::one());
        assert_eq!(stirling2(3, 5), Rational::zero());
        assert_eq!(stirling2(4, 2), ratio(7, 1));
        assert_eq!(stirling2(10, 3), ratio(9330, 1));
    }

    #[test]
    fn harmonic_known_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(1), Rational::one());
        assert_eq!(harmonic(4), ratio(25, 12));
    }

    #[test]
    fn derangement_recurrence_matches_alternating_sum() {
        for n in 0..=30u32 {
            let mut alt = Rational::zero();
            for k in 0..=n {
                let term = factorial(n) / factorial(k);
                alt += if k % 2 == 0 { term } else { -term };
            }
            assert_eq!(derangement_number(n), alt, "D_{n}");
        }
        assert_eq!(derangement_number(0), Rational::one());
        assert_eq!(derangement_number(1), Rational::zero());
        assert_eq!(derangement_number(4), ratio(9, 1));
    }

    #[test]
    fn catalan_and_binomials() {
        assert_eq!(catalan(0), Rational::one());
        assert_eq!(catalan(3), ratio(5, 1));
        assert_eq!(central_binomial(4), ratio(70, 1));
        assert_eq!(binomial(5, 7), Rational::zero());
        // catalan(n)·(n+1) = central_binomial(n)
        for n in 0..=20u32 {
            let lhs = catalan(n) * Rational::from_integer(BigInt::from(n + 1));
            assert_eq!(lhs, central_binomial(n));
        }
    }

    #[test]
    fn conversion_is_exact_for_dyadics() {
        assert_eq!(to_f64(&ratio(-3, 8)), -0.375);
        assert_eq!(to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(to_f64(&bernoulli(2)), 1.0 / 6.0);
    }
}

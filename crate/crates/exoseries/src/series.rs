//! The series engine: exponential Taylor remainders E_n(y), the generic
//! coefficient-family evaluator u(x, y) = Σ a_n E_n(y) xⁿ, and adaptive
//! quadrature of the equivalent representation e^y ∫₀^y e^{−t} F(xt) dt.
//!
//! E_n(y) is always produced as the forward tail Σ_{k>n} yᵏ/k!. Subtracting
//! the degree-n Taylor partial sum from e^y loses all significant digits as
//! soon as the partial sum agrees with e^y to working precision, so that
//! route is never taken. Internally each term of u is assembled as
//!
//! ```text
//! a_n E_n(y) xⁿ = [a_n/(n+1)!] · (xy)ⁿ · y · M_n(y),
//! M_n(y) = Σ_{j≥0} yʲ (n+1)!/(n+1+j)!  (so |M_n(y)| ≤ e^{|y|}),
//! ```
//!
//! where the bracketed factor is computed in exact rational arithmetic and
//! rounded once. This keeps every intermediate finite even for families like
//! n! whose raw coefficients overflow f64 long before the series terms do.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Mutex;

use num::traits::One;

use crate::exact::{self, Rational};
use crate::poly;

/// How an [`EvalResult`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Quadrature,
    ClosedForm,
}

/// A floating value plus a-posteriori diagnostics.
#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    pub value: f64,
    /// Absolute error bound: truncation tail estimate plus accumulated
    /// rounding mass.
    pub abs_error_bound: f64,
    /// Series terms summed, or accepted quadrature intervals.
    pub terms_used: u32,
    pub method: Method,
}

impl EvalResult {
    fn zero(method: Method) -> Self {
        EvalResult {
            value: 0.0,
            abs_error_bound: 0.0,
            terms_used: 0,
            method,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvalError {
    /// |x·y| is at or beyond the family's EGF radius.
    OutsideDomain { xy: f64, radius: f64 },
    /// The term cap was reached before the tolerance was met.
    NoConvergence { n_max: u32 },
    /// Adaptive quadrature exceeded the refinement depth cap.
    QuadratureDepth { depth: u32 },
    /// The integrand is undefined or non-finite on the integration path.
    BadIntegrand { detail: String },
    /// Malformed request: non-finite input or nonpositive tolerance.
    BadInput { detail: String },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::OutsideDomain { xy, radius } => {
                write!(f, "|x*y| = {} is outside the convergence radius {}", xy.abs(), radius)
            }
            EvalError::NoConvergence { n_max } => {
                write!(f, "series did not converge within {n_max} terms")
            }
            EvalError::QuadratureDepth { depth } => {
                write!(f, "quadrature exceeded refinement depth {depth}")
            }
            EvalError::BadIntegrand { detail } => write!(f, "bad integrand: {detail}"),
            EvalError::BadInput { detail } => write!(f, "bad input: {detail}"),
        }
    }
}

impl std::error::Error for EvalError {}

/// Series term cap. Every in-domain desk-scale point converges well before
/// this; the cap turns domain mistakes into clean errors.
pub const N_MAX: u32 = 500;

/// Quadrature refinement depth cap.
pub const MAX_QUAD_DEPTH: u32 = 30;

/// Neumaier-compensated accumulator that also tracks Σ|term| so rounding
/// can be folded into reported error bounds.
#[derive(Clone, Copy, Debug, Default)]
struct CompensatedSum {
    s: f64,
    c: f64,
    abs: f64,
}

impl CompensatedSum {
    fn add(&mut self, t: f64) {
        self.abs += t.abs();
        let u = self.s + t;
        if self.s.abs() >= t.abs() {
            self.c += (self.s - u) + t;
        } else {
            self.c += (t - u) + self.s;
        }
        self.s = u;
    }

    fn value(&self) -> f64 {
        self.s + self.c
    }

    fn rounding_bound(&self) -> f64 {
        4.0 * f64::EPSILON * self.abs
    }
}

/// M_n(y) = E_n(y)·(n+1)!/y^{n+1} = Σ_{j≥0} yʲ (n+1)!/(n+1+j)!, the
/// remainder normalized by its leading term. 1 ≤ M_n(y) ≤ e^y for y > 0 and
/// |M_n(y)| ≤ e^{|y|} in general.
pub(crate) fn remainder_factor(n: u32, y: f64) -> (f64, u32) {
    let mut m = 1.0;
    let mut t = 1.0;
    let mut j = 0u32;
    loop {
        j += 1;
        t *= y / (n + 1 + j) as f64;
        m += t;
        if (t.abs() <= 0.25 * f64::EPSILON * m.abs().max(1e-290)
            && (n + 1 + j) as f64 > y.abs())
            || j >= 500
        {
            return (m, j);
        }
    }
}

/// E_n(y) = e^y − 1 − y/1! − ⋯ − yⁿ/n!, as the forward tail series.
pub fn exp_remainder(n: u32, y: f64) -> EvalResult {
    if y == 0.0 {
        return EvalResult::zero(Method::Series);
    }
    let mut lead = 1.0f64; // y^{n+1}/(n+1)!
    for k in 1..=(n + 1) {
        lead *= y / k as f64;
    }
    let (m, terms) = remainder_factor(n, y);
    let value = lead * m;
    EvalResult {
        value,
        abs_error_bound: 4.0 * f64::EPSILON * (n + terms + 2) as f64
            * lead.abs()
            * y.abs().exp(),
        terms_used: terms + 1,
        method: Method::Series,
    }
}

/// A named coefficient sequence a_n with exact and floating access, plus the
/// radius of convergence of its EGF Σ a_n zⁿ/n!, which bounds the evaluable
/// region of the remainder series through |x·y| < radius.
pub struct CoeffFamily {
    kind: FamilyKind,
    scaled: Mutex<Vec<f64>>,
}

#[derive(Clone, Debug)]
enum FamilyKind {
    Ones,
    Binomial(u32),
    Powers(u32),
    Bernoulli,
    Stirling(u32),
    BellPoly(Rational),
    Harmonic,
    Factorial,
    CentralBinomial,
    Catalan,
    InvFactorial,
}

impl CoeffFamily {
    fn new(kind: FamilyKind) -> Self {
        CoeffFamily {
            kind,
            scaled: Mutex::new(Vec::new()),
        }
    }

    /// a_n = 1 (EGF e^z).
    pub fn ones() -> Self {
        Self::new(FamilyKind::Ones)
    }

    /// a_n = C(n, p) (EGF z^p e^z/p!).
    pub fn binomial(p: u32) -> Self {
        Self::new(FamilyKind::Binomial(p))
    }

    /// a_n = nᵖ with 0⁰ = 1 (EGF φ_p(z) e^z).
    pub fn powers(p: u32) -> Self {
        Self::new(FamilyKind::Powers(p))
    }

    /// a_n = B_n (EGF z/(e^z − 1), radius 2π).
    pub fn bernoulli() -> Self {
        Self::new(FamilyKind::Bernoulli)
    }

    /// a_n = S(n, k) (EGF (e^z − 1)ᵏ/k!).
    pub fn stirling(k: u32) -> Self {
        Self::new(FamilyKind::Stirling(k))
    }

    /// a_n = φ_n(λ), exponential polynomials at a fixed rational argument
    /// (EGF e^{λ(e^z − 1)}).
    pub fn bell_poly(lambda: Rational) -> Self {
        Self::new(FamilyKind::BellPoly(lambda))
    }

    /// a_n = H_n (EGF e^z Ein(z)).
    pub fn harmonic() -> Self {
        Self::new(FamilyKind::Harmonic)
    }

    /// a_n = n! (EGF 1/(1 − z), radius 1).
    pub fn factorial() -> Self {
        Self::new(FamilyKind::Factorial)
    }

    /// a_n = C(2n, n) (EGF e^{2z} I₀(2z)).
    pub fn central_binomial() -> Self {
        Self::new(FamilyKind::CentralBinomial)
    }

    /// a_n = C_n, the Catalan numbers (EGF e^{2z}(I₀(2z) − I₁(2z))).
    pub fn catalan() -> Self {
        Self::new(FamilyKind::Catalan)
    }

    /// a_n = 1/n! (EGF Σ zⁿ/(n!)² = I₀(2√z)).
    pub fn inv_factorial() -> Self {
        Self::new(FamilyKind::InvFactorial)
    }

    pub fn name(&self) -> String {
        match &self.kind {
            FamilyKind::Ones => "ones".into(),
            FamilyKind::Binomial(p) => format!("binomial(p={p})"),
            FamilyKind::Powers(p) => format!("powers(p={p})"),
            FamilyKind::Bernoulli => "bernoulli".into(),
            FamilyKind::Stirling(k) => format!("stirling(k={k})"),
            FamilyKind::BellPoly(l) => format!("exp-poly(lambda={l})"),
            FamilyKind::Harmonic => "harmonic".into(),
            FamilyKind::Factorial => "factorial".into(),
            FamilyKind::CentralBinomial => "central-binomial".into(),
            FamilyKind::Catalan => "catalan".into(),
            FamilyKind::InvFactorial => "inverse-factorial".into(),
        }
    }

    /// Radius of convergence of the EGF: 2π for Bernoulli, 1 for factorial,
    /// ∞ for the entire families.
    pub fn egf_radius(&self) -> f64 {
        match self.kind {
            FamilyKind::Bernoulli => TAU,
            FamilyKind::Factorial => 1.0,
            _ => f64::INFINITY,
        }
    }

    /// Exact coefficient a_n.
    pub fn exact_at(&self, n: u32) -> Rational {
        match &self.kind {
            FamilyKind::Ones => Rational::one(),
            FamilyKind::Binomial(p) => exact::binomial(n, *p),
            FamilyKind::Powers(p) => {
                Rational::from_integer(num::BigInt::from(n).pow(*p))
            }
            FamilyKind::Bernoulli => exact::bernoulli(n),
            FamilyKind::Stirling(k) => exact::stirling2(n, *k),
            FamilyKind::BellPoly(l) => poly::exp_poly(n).eval_exact(l),
            FamilyKind::Harmonic => exact::harmonic(n),
            FamilyKind::Factorial => exact::factorial(n),
            FamilyKind::CentralBinomial => exact::central_binomial(n),
            FamilyKind::Catalan => exact::catalan(n),
            FamilyKind::InvFactorial => Rational::one() / exact::factorial(n),
        }
    }

    /// a_n rounded to f64.
    pub fn float_at(&self, n: u32) -> f64 {
        exact::to_f64(&self.exact_at(n))
    }

    /// Largest index with a nonzero coefficient, for finitely supported
    /// sequences. Only S(n, 0) = δ_{n0} qualifies here.
    fn support_end(&self) -> Option<u32> {
        match self.kind {
            FamilyKind::Stirling(0) => Some(0),
            _ => None,
        }
    }

    /// a_n/(n+1)! rounded once from the exact ratio; cached.
    pub(crate) fn scaled_at(&self, n: u32) -> f64 {
        let mut cache = self.scaled.lock().unwrap();
        while cache.len() <= n as usize {
            let m = cache.len() as u32;
            let v = exact::to_f64(&(self.exact_at(m) / exact::factorial(m + 1)));
            cache.push(v);
        }
        cache[n as usize]
    }
}

/// Predicate |x·y| < radius describing where [`sum_series`] converges.
#[derive(Clone, Copy, Debug)]
pub struct ConvergenceDomain {
    pub radius: f64,
}

impl ConvergenceDomain {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        (x * y).abs() < self.radius
    }
}

/// The family's convergence predicate; pure metadata lookup.
pub fn convergence_domain(family: &CoeffFamily) -> ConvergenceDomain {
    ConvergenceDomain {
        radius: family.egf_radius(),
    }
}

/// Options for [`sum_series_opts`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SumOpts {
    /// First index included in the sum.
    pub start: u32,
    /// Permit |x·y| exactly on the family radius, summing in index order
    /// with an alternating-series tail bound. Off by default: convergence
    /// there is conditional and the bound decays only like the last term.
    pub allow_boundary: bool,
}

/// u(x, y) = Σ_{n≥0} a_n E_n(y) xⁿ to the requested absolute-ish tolerance
/// (the cutoff tests against tol·max(1, |partial|)).
pub fn sum_series(
    family: &CoeffFamily,
    x: f64,
    y: f64,
    tol: f64,
) -> Result<EvalResult, EvalError> {
    sum_series_opts(family, x, y, tol, SumOpts::default())
}

/// Same as [`sum_series`] but starting from index `start`.
pub fn sum_series_from(
    family: &CoeffFamily,
    start: u32,
    x: f64,
    y: f64,
    tol: f64,
) -> Result<EvalResult, EvalError> {
    sum_series_opts(
        family,
        x,
        y,
        tol,
        SumOpts {
            start,
            ..SumOpts::default()
        },
    )
}

pub fn sum_series_opts(
    family: &CoeffFamily,
    x: f64,
    y: f64,
    tol: f64,
    opts: SumOpts,
) -> Result<EvalResult, EvalError> {
    if tol.is_nan() || tol <= 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(EvalError::BadInput {
            detail: format!("x = {x}, y = {y}, tol = {tol}"),
        });
    }
    let radius = family.egf_radius();
    let xy = x * y;
    let boundary = opts.allow_boundary && xy.abs() == radius;
    if xy.abs() >= radius && !boundary {
        return Err(EvalError::OutsideDomain { xy, radius });
    }
    if y == 0.0 {
        // every E_n(0) = 0
        return Ok(EvalResult::zero(Method::Series));
    }
    if xy == 0.0 {
        // only n = 0 can contribute
        if opts.start > 0 {
            return Ok(EvalResult::zero(Method::Series));
        }
        let (m, _) = remainder_factor(0, y);
        let value = family.scaled_at(0) * y * m;
        return Ok(EvalResult {
            value,
            abs_error_bound: 8.0 * f64::EPSILON * value.abs(),
            terms_used: 1,
            method: Method::Series,
        });
    }
    if boundary {
        return sum_boundary(family, xy, y, tol, opts.start);
    }
    if let Some(end) = family.support_end() {
        // finitely supported coefficients: the tail is exactly zero
        let mut sum = CompensatedSum::default();
        let mut pow = powi_checked(xy, opts.start)?;
        for n in opts.start..=end.max(opts.start) {
            if n <= end {
                sum.add(family.scaled_at(n) * pow * y * remainder_factor(n, y).0);
            }
            pow *= xy;
        }
        return Ok(EvalResult {
            value: sum.value(),
            abs_error_bound: sum.rounding_bound() + 8.0 * f64::EPSILON * sum.value().abs(),
            terms_used: (end.max(opts.start) - opts.start) + 1,
            method: Method::Series,
        });
    }

    let ey = y.abs().exp();
    let mut sum = CompensatedSum::default();
    let mut pow = powi_checked(xy, opts.start)?;
    // last nonzero per-term bound, and per-step growth ratios between the
    // most recent nonzero bounds (gap-normalized to survive structural zeros
    // like the odd Bernoulli numbers)
    let mut last_nonzero: Option<(u32, f64)> = None;
    let mut ratios: [f64; 3] = [f64::INFINITY; 3];
    let mut seen_ratios = 0usize;
    let mut streak = 0u32;

    for n in opts.start..=N_MAX {
        let r = family.scaled_at(n);
        let bound = if r == 0.0 {
            0.0
        } else {
            (r * pow * y).abs() * ey
        };
        if bound > 0.0 {
            let term = r * pow * y * remainder_factor(n, y).0;
            if !term.is_finite() {
                return Err(EvalError::NoConvergence { n_max: N_MAX });
            }
            sum.add(term);
            if let Some((pn, pb)) = last_nonzero {
                let gap = (n - pn) as f64;
                let step = (bound / pb).powf(1.0 / gap);
                ratios[seen_ratios % 3] = step;
                seen_ratios += 1;
            }
            last_nonzero = Some((n, bound));
        }

        // convergence: recent growth ratios below 1 and the geometric tail
        // extrapolated from the last nonzero bound under tolerance, for a
        // few consecutive indices
        let scale = sum.value().abs().max(1.0);
        let converged = if seen_ratios >= 2 && n >= opts.start + 6 {
            let rho = ratios[..seen_ratios.min(3)]
                .iter()
                .fold(0.0f64, |a, &b| a.max(b));
            if rho < 1.0 {
                let rho = rho.min(0.99);
                let b_last = last_nonzero.map(|(_, b)| b).unwrap_or(0.0);
                let tail = b_last * rho / (1.0 - rho);
                b_last <= 0.5 * tol * scale && tail <= 0.5 * tol * scale
            } else {
                false
            }
        } else {
            false
        };
        if converged {
            streak += 1;
            if streak >= 3 {
                let rho = ratios[..seen_ratios.min(3)]
                    .iter()
                    .fold(0.0f64, |a, &b| a.max(b))
                    .min(0.99);
                let b_last = last_nonzero.map(|(_, b)| b).unwrap_or(0.0);
                let tail = b_last * rho / (1.0 - rho) + b_last;
                return Ok(EvalResult {
                    value: sum.value(),
                    abs_error_bound: tail + sum.rounding_bound(),
                    terms_used: n - opts.start + 1,
                    method: Method::Series,
                });
            }
        } else {
            streak = 0;
        }

        pow *= xy;
        if !pow.is_finite() {
            return Err(EvalError::NoConvergence { n_max: N_MAX });
        }
    }
    Err(EvalError::NoConvergence { n_max: N_MAX })
}

/// Ordered summation on the boundary |x·y| = radius; valid only while the
/// terms alternate with decreasing magnitude, which bounds the tail by the
/// next term.
fn sum_boundary(
    family: &CoeffFamily,
    xy: f64,
    y: f64,
    tol: f64,
    start: u32,
) -> Result<EvalResult, EvalError> {
    let mut sum = CompensatedSum::default();
    let mut pow = powi_checked(xy, start)?;
    let mut prev: Option<f64> = None;
    let mut alternating_run = 0u32;
    let mut last_term = f64::INFINITY;
    let mut terms = 0u32;
    for n in start..=N_MAX {
        let r = family.scaled_at(n);
        let term = r * pow * y * remainder_factor(n, y).0;
        if !term.is_finite() {
            return Err(EvalError::NoConvergence { n_max: N_MAX });
        }
        sum.add(term);
        terms = n - start + 1;
        if let Some(p) = prev {
            if p * term < 0.0 && term.abs() < p.abs() {
                alternating_run += 1;
            } else {
                alternating_run = 0;
            }
        }
        prev = Some(term);
        last_term = term.abs();
        if alternating_run >= 4 && last_term <= tol * sum.value().abs().max(1.0) {
            break;
        }
        pow *= xy;
    }
    if alternating_run >= 4 {
        Ok(EvalResult {
            value: sum.value(),
            abs_error_bound: last_term + sum.rounding_bound(),
            terms_used: terms,
            method: Method::Series,
        })
    } else {
        Err(EvalError::NoConvergence { n_max: N_MAX })
    }
}

fn powi_checked(base: f64, exp: u32) -> Result<f64, EvalError> {
    let v = base.powi(exp as i32);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::BadInput {
            detail: format!("(x*y)^{exp} overflows"),
        })
    }
}

/// A generating function F(z) usable as the quadrature integrand factor,
/// with the open interval on which it is defined.
pub struct GenFn {
    name: String,
    /// Open interval of valid arguments.
    pub domain: (f64, f64),
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl GenFn {
    pub fn new(
        name: impl Into<String>,
        domain: (f64, f64),
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        GenFn {
            name: name.into(),
            domain,
            f: Box::new(f),
        }
    }

    /// A function defined on the whole real line.
    pub fn entire(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(name, (f64::NEG_INFINITY, f64::INFINITY), f)
    }

    pub fn eval(&self, z: f64) -> f64 {
        (self.f)(z)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for GenFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenFn({})", self.name)
    }
}

/// Raw adaptive-Simpson quadrature of f over [a, b] with Richardson error
/// control. Deterministic: the recursion order is fixed.
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub intervals: u32,
}

pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult, EvalError> {
    if tol.is_nan() || tol <= 0.0 || !a.is_finite() || !b.is_finite() {
        return Err(EvalError::BadInput {
            detail: format!("a = {a}, b = {b}, tol = {tol}"),
        });
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            intervals: 0,
        });
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    for (t, v) in [(a, fa), (m, fm), (b, fb)] {
        if !v.is_finite() {
            return Err(EvalError::BadIntegrand {
                detail: format!("f({t}) is not finite"),
            });
        }
    }
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut err = 0.0;
    let mut leaves = 0u32;
    let value = simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, &mut err, &mut leaves)?;
    Ok(QuadResult {
        value,
        error_estimate: err,
        intervals: leaves,
    })
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    err: &mut f64,
    leaves: &mut u32,
) -> Result<f64, EvalError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    if !flm.is_finite() || !frm.is_finite() {
        return Err(EvalError::BadIntegrand {
            detail: format!("f not finite inside [{a}, {b}]"),
        });
    }
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || (b - a).abs() < 1e-14 * (a.abs() + b.abs() + 1.0) {
        *err += delta.abs() / 15.0;
        *leaves += 2;
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_QUAD_DEPTH {
        return Err(EvalError::QuadratureDepth {
            depth: MAX_QUAD_DEPTH,
        });
    }
    let half = 0.5 * tol;
    let l = simpson_rec(f, a, m, fa, flm, fm, left, half, depth + 1, err, leaves)?;
    let r = simpson_rec(f, m, b, fm, frm, fb, right, half, depth + 1, err, leaves)?;
    Ok(l + r)
}

/// u(x, y) by the representation e^y ∫₀^y e^{−t} F(xt) dt; y < 0 integrates
/// the oriented interval. Errors if F is undefined anywhere on the path
/// {x·t : t between 0 and y}.
pub fn integral_repr(gen: &GenFn, x: f64, y: f64, tol: f64) -> Result<EvalResult, EvalError> {
    if tol.is_nan() || tol <= 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(EvalError::BadInput {
            detail: format!("x = {x}, y = {y}, tol = {tol}"),
        });
    }
    if y == 0.0 {
        return Ok(EvalResult::zero(Method::Quadrature));
    }
    let xy = x * y;
    let (zlo, zhi) = (xy.min(0.0), xy.max(0.0));
    if !(gen.domain.0 < zlo && zhi < gen.domain.1) {
        return Err(EvalError::BadIntegrand {
            detail: format!(
                "path [{zlo}, {zhi}] leaves the domain of {}",
                gen.name
            ),
        });
    }
    let ey = y.exp();
    let g = |t: f64| (-t).exp() * gen.eval(x * t);
    let (a, b, sign) = if y > 0.0 { (0.0, y, 1.0) } else { (y, 0.0, -1.0) };
    let inner_tol = (tol / ey).max(1e-14);
    let q = adaptive_simpson(&g, a, b, inner_tol)?;
    let value = sign * ey * q.value;
    Ok(EvalResult {
        value,
        abs_error_bound: ey * q.error_estimate * 4.0 + 8.0 * f64::EPSILON * value.abs(),
        terms_used: q.intervals,
        method: Method::Quadrature,
    })
}

/// |(u(x, y+h) − u(x, y−h))/(2h) − u(x, y) − F(xy)|: the central-difference
/// residual of the defining relation u_y − u = F(xy). Decays like O(h²) at
/// smooth points.
pub fn ode_residual(
    family: &CoeffFamily,
    gen: &GenFn,
    x: f64,
    y: f64,
    h: f64,
) -> Result<f64, EvalError> {
    const TOL: f64 = 1e-13;
    let up = sum_series(family, x, y + h, TOL)?.value;
    let um = sum_series(family, x, y - h, TOL)?.value;
    let u0 = sum_series(family, x, y, TOL)?.value;
    Ok(((up - um) / (2.0 * h) - u0 - gen.eval(x * y)).abs())
}

//! Scalar special functions: log-gamma, Pochhammer symbols and the
//! single-variable generalized hypergeometric series pFq with its common
//! specializations 0F1, 1F1 and 2F1.
//!
//! All parameters and arguments are real. Series are summed term by term from
//! the ratio recurrence
//!
//! ```text
//! t_{k+1} / t_k = prod_i (alpha_i + k) / prod_j (beta_j + k) * x / (k + 1)
//! ```
//!
//! and stop once two consecutive terms fall below `tol * |partial sum|` and the
//! geometric tail estimate agrees. Terminating series (an upper parameter equal
//! to `-n`) are summed over every nonzero term.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default relative tolerance for every series evaluation.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

/// A denominator parameter closer than this to `0, -1, -2, ...` is a pole.
pub const POLE_GUARD: f64 = 1e-10;

const EPS: f64 = f64::EPSILON;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Reduction,
    Continuation,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Reduction => "reduction",
            Method::Continuation => "continuation",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value together with its error estimate and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: f64,
    pub abs_error: f64,
    pub terms: usize,
    pub method: Method,
}

impl Evaluation {
    pub fn new(value: f64, abs_error: f64, terms: usize, method: Method) -> Self {
        Evaluation {
            value,
            abs_error: abs_error.abs(),
            terms,
            method,
        }
    }

    pub fn closed_form(value: f64) -> Self {
        Evaluation::new(value, 4.0 * EPS * value.abs(), 1, Method::ClosedForm)
    }

    /// Multiply by a constant, scaling the error estimate along with it.
    pub fn scaled(self, factor: f64) -> Self {
        Evaluation {
            value: self.value * factor,
            abs_error: (self.abs_error * factor).abs() + 2.0 * EPS * (self.value * factor).abs(),
            ..self
        }
    }

    pub fn with_method(self, method: Method) -> Self {
        Evaluation { method, ..self }
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }

    /// Sum of magnitudes of everything added so far.
    pub fn magnitude(&self) -> f64 {
        self.abs_sum
    }
}

/// `Some(n)` when `x` equals `-n` exactly.
pub fn exact_nonpositive_integer(x: f64) -> Option<u64> {
    if x <= 0.0 && x == x.round() && x > -1e15 {
        Some((-x) as u64)
    } else {
        None
    }
}

/// `Some(n)` when `x` lies within [`POLE_GUARD`] of `-n`.
pub fn near_nonpositive_integer(x: f64) -> Option<u64> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() <= POLE_GUARD {
        Some((-r) as u64)
    } else {
        None
    }
}

/// `Some(n)` when `x` lies within `tol` of the nonnegative integer `n`.
pub(crate) fn near_nonnegative_integer(x: f64, tol: f64) -> Option<u32> {
    let r = x.round();
    if r >= 0.0 && (x - r).abs() <= tol && r < u32::MAX as f64 {
        Some(r as u32)
    } else {
        None
    }
}

/// Real power with an explicit branch check: a negative base is only accepted
/// with an integer exponent.
pub fn real_pow(base: f64, exponent: f64) -> Result<f64> {
    if base > 0.0 {
        Ok(base.powf(exponent))
    } else if base == 0.0 {
        if exponent > 0.0 {
            Ok(0.0)
        } else if exponent == 0.0 {
            Ok(1.0)
        } else {
            Err(Error::Domain(format!("0 raised to negative power {exponent}")))
        }
    } else if exponent == exponent.round() {
        Ok(base.powf(exponent))
    } else {
        Err(Error::Branch(format!(
            "negative base {base} with non-integer exponent {exponent}"
        )))
    }
}

const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

fn ln_gamma_positive(x: f64) -> f64 {
    if x == x.round() && x <= 30.0 {
        let mut f = 1.0f64;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return f.ln();
    }
    let tmp = x + LANCZOS_G;
    let tmp = (x + 0.5) * tmp.ln() - tmp;
    let mut ser = 0.999_999_999_999_997_092;
    let mut y = x;
    for c in LANCZOS_COEFFS {
        y += 1.0;
        ser += c / y;
    }
    tmp + (2.506_628_274_631_000_5 * ser / x).ln()
}

/// sin(pi x) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == r.round() {
        return 0.0;
    }
    (std::f64::consts::PI * r).sin()
}

/// `ln|Gamma(x)|` and the sign of `Gamma(x)`.
pub fn ln_gamma(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(Error::Parameter("ln_gamma of NaN".into()));
    }
    if exact_nonpositive_integer(x).is_some() {
        return Err(Error::Pole {
            function: "gamma",
            at: x,
        });
    }
    if x >= 0.5 {
        return Ok((ln_gamma_positive(x), 1.0));
    }
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    let s = sin_pi(x);
    let value = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma_positive(1.0 - x);
    Ok((value, s.signum()))
}

/// Gamma(x) for real non-pole x.
pub fn gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x == x.round() && x <= 171.0 {
        let mut f = 1.0f64;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return Ok(f);
    }
    let (lg, sign) = ln_gamma(x)?;
    Ok(sign * lg.exp())
}

/// 1 / Gamma(x), zero at the poles.
pub fn recip_gamma(x: f64) -> f64 {
    match ln_gamma(x) {
        Ok((lg, sign)) => sign * (-lg).exp(),
        Err(_) => 0.0,
    }
}

/// The shifted factorial `(delta)_m = delta (delta + 1) ... (delta + m - 1)`.
pub fn pochhammer(delta: f64, m: usize) -> f64 {
    let mut p = 1.0;
    for j in 0..m {
        p *= delta + j as f64;
    }
    p
}

/// `m!` as a float.
pub fn factorial(m: usize) -> f64 {
    pochhammer(1.0, m)
}

/// Binomial coefficient `C(n, k)` as a float; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> f64 {
    if k < 0 || n < 0 || k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0;
    for j in 0..k {
        c = c * (n - j) as f64 / (j + 1) as f64;
    }
    c.round()
}

/// Parameters of `pFq(upper; lower; argument)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub argument: f64,
}

impl PfqParams {
    pub fn new(upper: &[f64], lower: &[f64], argument: f64) -> Self {
        PfqParams {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            argument,
        }
    }

    /// Degree of the terminating polynomial, if any upper parameter is `-n`.
    pub fn termination_degree(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter_map(|&a| exact_nonpositive_integer(a))
            .min()
    }

    /// Reject lower parameters at (or within [`POLE_GUARD`] of) a
    /// nonpositive integer, unless the series terminates before the zero
    /// factor is reached.
    fn check_lower(&self) -> Result<()> {
        let degree = self.termination_degree();
        for &b in &self.lower {
            if !b.is_finite() {
                return Err(Error::Parameter(format!("lower parameter {b} is not finite")));
            }
            if let Some(l) = near_nonpositive_integer(b) {
                match degree {
                    Some(m) if m <= l => {}
                    _ => {
                        return Err(Error::Parameter(format!(
                            "lower parameter {b} is a nonpositive integer"
                        )))
                    }
                }
            }
        }
        Ok(())
    }
}

/// Generalized hypergeometric series `pFq`.
pub fn pfq(params: &PfqParams, tol: f64) -> Result<Evaluation> {
    params.check_lower()?;
    let x = params.argument;
    if !x.is_finite() || params.upper.iter().any(|a| !a.is_finite()) {
        return Err(Error::Parameter("non-finite pFq input".into()));
    }
    let p = params.upper.len();
    let q = params.lower.len();
    let degree = params.termination_degree();

    if let Some(n) = degree {
        return Ok(sum_terminating(&params.upper, &params.lower, x, n as usize));
    }
    if x == 0.0 {
        return Ok(Evaluation::new(1.0, 0.0, 1, Method::Series));
    }
    let asymptotic_ratio = if p <= q {
        0.0
    } else if p == q + 1 {
        let ax = x.abs();
        if ax > 1.0 {
            return Err(Error::Divergence(format!(
                "{p}F{q} with |x| = {ax} > 1 and no terminating parameter"
            )));
        }
        if ax == 1.0 {
            let excess: f64 =
                params.lower.iter().sum::<f64>() - params.upper.iter().sum::<f64>();
            if excess <= 0.0 {
                return Err(Error::Divergence(format!(
                    "{p}F{q} at |x| = 1 needs sum(lower) - sum(upper) > 0, got {excess}"
                )));
            }
        }
        ax
    } else {
        return Err(Error::Divergence(format!(
            "{p}F{q} with p > q + 1 diverges for x != 0 unless it terminates"
        )));
    };
    sum_infinite(&params.upper, &params.lower, x, asymptotic_ratio, tol)
}

fn term_ratio(upper: &[f64], lower: &[f64], x: f64, k: f64) -> f64 {
    let mut r = x / (k + 1.0);
    for &a in upper {
        r *= a + k;
    }
    for &b in lower {
        r /= b + k;
    }
    r
}

fn sum_terminating(upper: &[f64], lower: &[f64], x: f64, degree: usize) -> Evaluation {
    let mut acc = CompensatedSum::new();
    let mut term = 1.0;
    let mut used = 0;
    for k in 0..=degree {
        acc.add(term);
        used += 1;
        if k < degree {
            term *= term_ratio(upper, lower, x, k as f64);
            if term == 0.0 {
                break;
            }
        }
    }
    Evaluation::new(
        acc.value(),
        4.0 * EPS * acc.magnitude(),
        used,
        Method::Series,
    )
}

fn sum_infinite(
    upper: &[f64],
    lower: &[f64],
    x: f64,
    asymptotic_ratio: f64,
    tol: f64,
) -> Result<Evaluation> {
    let mut acc = CompensatedSum::new();
    let mut term = 1.0f64;
    let mut small_run = 0;
    for k in 0..MAX_TERMS {
        acc.add(term);
        let next = term * term_ratio(upper, lower, x, k as f64);
        let sum = acc.value().abs();
        if term.abs() <= tol * sum {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 2 || next == 0.0 {
            let ratio = if term != 0.0 {
                (next / term).abs()
            } else {
                0.0
            };
            let rho = ratio.max(asymptotic_ratio);
            if rho < 1.0 {
                let tail = next.abs() / (1.0 - rho);
                if tail <= tol * sum || next == 0.0 {
                    let err = tail + 4.0 * EPS * acc.magnitude();
                    return Ok(Evaluation::new(acc.value(), err, k + 1, Method::Series));
                }
            }
        }
        term = next;
        if !term.is_finite() {
            return Err(Error::NonConvergence {
                what: "hypergeometric series (overflow)".into(),
                terms: k + 1,
            });
        }
    }
    Err(Error::NonConvergence {
        what: format!("{}F{} series", upper.len(), lower.len()),
        terms: MAX_TERMS,
    })
}

fn check_denominator(name: &str, b: f64, numerators: &[f64]) -> Result<()> {
    if let Some(l) = near_nonpositive_integer(b) {
        let degree = numerators
            .iter()
            .filter_map(|&a| exact_nonpositive_integer(a))
            .min();
        if !matches!(degree, Some(m) if m <= l) {
            return Err(Error::Parameter(format!(
                "{name} = {b} is zero or a negative integer"
            )));
        }
    }
    Ok(())
}

/// `0F1(-; b; x)`.
pub fn hyp0f1(b: f64, x: f64, tol: f64) -> Result<Evaluation> {
    pfq(&PfqParams::new(&[], &[b], x), tol)
}

/// Kummer's confluent function `1F1(a; b; x)`.
///
/// Negative arguments of non-terminating series go through Kummer's
/// transformation `M(a, b, x) = e^x M(b - a, b, -x)`, which turns an
/// alternating sum into a positive one.
pub fn hyp1f1(a: f64, b: f64, x: f64, tol: f64) -> Result<Evaluation> {
    check_denominator("b", b, &[a])?;
    if exact_nonpositive_integer(a).is_some() || x >= 0.0 {
        return pfq(&PfqParams::new(&[a], &[b], x), tol);
    }
    let inner = pfq(&PfqParams::new(&[b - a], &[b], -x), tol)?;
    Ok(inner.scaled(x.exp()))
}

/// Gauss's function `2F1(a, b; c; x)` on the real line.
///
/// * `|x| < 1/2` and `0 <= x < 1`: direct series.
/// * `x <= -1/2`: Pfaff's transformation
///   `2F1(a, b; c; x) = (1 - x)^{-a} 2F1(a, c - b; c; x / (x - 1))`,
///   which maps every negative argument into `[0, 1)`.
/// * `x = 1`: Gauss's sum `Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
/// * Terminating series are summed exactly for any `x`; at `x = 1` they
///   take the Chu-Vandermonde value `(c - b)_n / (c)_n` for `a = -n`.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64, tol: f64) -> Result<Evaluation> {
    check_denominator("c", c, &[a, b])?;
    if !(a.is_finite() && b.is_finite() && c.is_finite() && x.is_finite()) {
        return Err(Error::Parameter("non-finite 2F1 input".into()));
    }
    let degree = match (exact_nonpositive_integer(a), exact_nonpositive_integer(b)) {
        (Some(n), Some(m)) if m < n => Some((m, a)),
        (Some(n), _) => Some((n, b)),
        (None, Some(m)) => Some((m, a)),
        (None, None) => None,
    };
    if let (Some((n, other)), true) = (degree, x == 1.0) {
        let n = n as usize;
        let value = pochhammer(c - other, n) / pochhammer(c, n);
        return Ok(Evaluation::new(value, 4.0 * (n as f64 + 1.0) * EPS * value.abs(), n.max(1), Method::ClosedForm));
    }
    if degree.is_some() || x == 0.0 {
        return pfq(&PfqParams::new(&[a, b], &[c], x), tol);
    }
    if x == 1.0 {
        let excess = c - a - b;
        if excess <= 0.0 {
            return Err(Error::Pole {
                function: "2F1 at x = 1 (c - a - b <= 0)",
                at: excess,
            });
        }
        let value = gamma(c)? * gamma(excess)? * recip_gamma(c - a) * recip_gamma(c - b);
        return Ok(Evaluation::new(value, 64.0 * EPS * value.abs(), 1, Method::ClosedForm));
    }
    if x > 1.0 {
        return Err(Error::Divergence(format!(
            "2F1({a}, {b}; {c}; {x}) has x > 1 and does not terminate"
        )));
    }
    if x <= -0.5 {
        let z = x / (x - 1.0);
        // Prefer the Pfaff image that terminates.
        let (lead, other) = if exact_nonpositive_integer(c - a).is_some()
            && exact_nonpositive_integer(c - b).is_none()
        {
            (b, a)
        } else {
            (a, b)
        };
        let inner = pfq(&PfqParams::new(&[lead, c - other], &[c], z), tol)?;
        return Ok(inner.scaled((1.0 - x).powf(-lead)));
    }
    if x >= 0.5 {
        // Euler's transformation makes the series terminate when c - a or
        // c - b is a nonpositive integer.
        if exact_nonpositive_integer(c - a).is_some() || exact_nonpositive_integer(c - b).is_some()
        {
            let inner = pfq(&PfqParams::new(&[c - a, c - b], &[c], x), tol)?;
            return Ok(inner.scaled((1.0 - x).powf(c - a - b)));
        }
    }
    pfq(&PfqParams::new(&[a, b], &[c], x), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ln_gamma_reference_values() {
        assert_eq!(ln_gamma(1.0).unwrap(), (0.0, 1.0));
        assert_relative_eq!(
            ln_gamma(0.5).unwrap().0,
            0.572_364_942_924_700_1,
            max_relative = 1e-14
        );
        assert_relative_eq!(ln_gamma(5.0).unwrap().0, 24f64.ln(), max_relative = 1e-15);
        // mpmath: loggamma(200.5), loggamma(0.1), gamma(-2.5)
        assert_relative_eq!(
            ln_gamma(200.5).unwrap().0,
            860.582_203_509_782_5,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            ln_gamma(0.1).unwrap().0,
            2.252_712_651_734_206,
            max_relative = 1e-14
        );
        assert_relative_eq!(gamma(-2.5).unwrap(), -0.945_308_720_482_941_9, max_relative = 1e-13);
        assert_eq!(ln_gamma(-1.5).unwrap().1, 1.0);
        assert_eq!(ln_gamma(-0.5).unwrap().1, -1.0);
    }

    #[test]
    fn ln_gamma_poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(ln_gamma(x), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(3.0, 4), 360.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
    }

    #[test]
    fn pfq_examples() {
        let v = pfq(&PfqParams::new(&[2.0], &[], 0.5), DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 4.0, max_relative = 1e-12);
        let v = pfq(&PfqParams::new(&[1.0, 1.0], &[2.0], 0.5), DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 2.0 * 2f64.ln(), max_relative = 1e-12);
        let v = pfq(&PfqParams::new(&[-1.0, 2.0, 3.0], &[4.0, 5.0], 1.0), DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 0.7, max_relative = 1e-15);
        assert_eq!(v.terms, 2);
    }

    #[test]
    fn pfq_domain_errors() {
        let e = pfq(&PfqParams::new(&[1.0, 1.0], &[2.0], 1.5), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Divergence(_))));
        // sum(lower) - sum(upper) = 0 at x = 1
        let e = pfq(&PfqParams::new(&[1.0, 1.0], &[2.0], 1.0), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Divergence(_))));
        let e = pfq(&PfqParams::new(&[1.0], &[-2.0], 0.3), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Parameter(_))));
        let e = pfq(&PfqParams::new(&[1.0], &[-2.0 + 1e-12], 0.3), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Parameter(_))));
        let e = pfq(&PfqParams::new(&[1.0, 2.0, 3.0], &[4.0], 0.1), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Divergence(_))));
    }

    #[test]
    fn pfq_terminates_before_lower_zero() {
        // (-2)_k stops at k = 2, before (-3)_k vanishes at k = 4.
        let v = pfq(&PfqParams::new(&[-2.0, 1.0], &[-3.0], 0.5), DEFAULT_TOL).unwrap();
        let exact = 1.0 + (-2.0 * 1.0 / -3.0) * 0.5 + (2.0 * 2.0 / 6.0) * 0.25 / 2.0;
        assert_relative_eq!(v.value, exact, max_relative = 1e-15);
    }

    #[test]
    fn hyp1f1_examples() {
        let v = hyp1f1(2.3, 2.3, 1.7, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 1.7f64.exp(), max_relative = 1e-13);
        let v = hyp1f1(-1.0, 2.0, 3.0, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, -0.5, max_relative = 1e-15);
        assert_eq!(hyp1f1(0.0, 5.0, 9.0, DEFAULT_TOL).unwrap().value, 1.0);
        assert!(hyp1f1(1.0, -3.0, 1.0, DEFAULT_TOL).is_err());
        // e^{-x} from Kummer's transformation of 1F1(b; b; -x)
        let v = hyp1f1(0.7, 0.7, -30.0, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, (-30f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn hyp2f1_examples() {
        let v = hyp2f1(2.0, 3.0, 3.0, 0.5, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 4.0, max_relative = 1e-12);
        let v = hyp2f1(1.0, 1.0, 3.0, 1.0, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 2.0, max_relative = 1e-14);
        assert!(matches!(
            hyp2f1(1.0, 1.0, 2.0, 1.0, DEFAULT_TOL),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            hyp2f1(1.0, 1.0, 2.0, 1.2, DEFAULT_TOL),
            Err(Error::Divergence(_))
        ));
        // polynomial evaluates anywhere
        let v = hyp2f1(-2.0, 1.0, 1.0, 3.0, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 4.0, max_relative = 1e-15);
    }

    #[test]
    fn hyp2f1_negative_argument_matches_brute_force() {
        // Brute-force partial sums of the direct series at x = -0.7 (alternating,
        // so the partial sums bracket the limit).
        let (a, b, c, x) = (0.5, 1.5, 2.5, -0.7);
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 0..400 {
            sum += term;
            term *= (a + k as f64) * (b + k as f64) / ((c + k as f64) * (k as f64 + 1.0)) * x;
        }
        let v = hyp2f1(a, b, c, x, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, sum, max_relative = 1e-12);
        let direct = pfq(&PfqParams::new(&[a, b], &[c], x), DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, direct.value, max_relative = 1e-12);
    }

    #[test]
    fn real_pow_branches() {
        assert_eq!(real_pow(-2.0, 3.0).unwrap(), -8.0);
        assert!(matches!(real_pow(-2.0, 0.5), Err(Error::Branch(_))));
        assert_eq!(real_pow(0.0, 0.0).unwrap(), 1.0);
    }
}

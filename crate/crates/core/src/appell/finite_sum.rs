use crate::error::{Error, Result};
use crate::special::{binomial, CompensatedSum, Evaluation, Method};

/// Closed finite-sum form of
/// `Gamma(a+1) Gamma(d+1) / Gamma(a+d+2) * F1(a+1; s+1, t+1; a+d+2; x, y)`
/// for nonnegative integers `a, s, t, d` and `x != y`, both nonzero.
///
/// Inner terms whose exponent `k + j - t` (or `j + k - s`) vanishes are the
/// removable singularities of `[1 - (1-y)^e] / e`; their limit is the
/// logarithmic term, which only exists when the excluded index lies inside
/// the binomial range.
pub fn f1_finite_sum(a: u32, s: u32, t: u32, d: u32, x: f64, y: f64) -> Result<Evaluation> {
    if x == y || x == 0.0 || y == 0.0 {
        return Err(Error::Degenerate(format!(
            "finite sum needs x != y and both nonzero, got ({x}, {y})"
        )));
    }
    if !(x.abs() < 1.0 && y.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "finite sum needs |x| < 1 and |y| < 1, got ({x}, {y})"
        )));
    }
    let (a, s, t, d) = (a as i64, s as i64, t as i64, d as i64);
    let ln1y = (-y).ln_1p();
    let ln1x = (-x).ln_1p();
    let sign = |k: i64| if k % 2 == 0 { 1.0 } else { -1.0 };

    let mut total = CompensatedSum::new();
    let mut terms = 0usize;
    for m in 0..=d {
        let am = a + m;
        let mut first = CompensatedSum::new();
        for j in 0..=t {
            let inner = log_binomial_sum(am, t - j, ln1y);
            terms += am as usize + 1;
            first.add(
                binomial(j + s, s) * (-x).powi(j as i32) / (y - x).powi((s + j + 1) as i32)
                    * inner,
            );
        }
        let mut second = CompensatedSum::new();
        for k in 0..=s {
            let inner = log_binomial_sum(am, s - k, ln1x);
            terms += am as usize + 1;
            second.add(
                binomial(k + t, t) * (-y).powi(k as i32) / (x - y).powi((t + k + 1) as i32)
                    * inner,
            );
        }
        let bracket = y.powi((s - a - m) as i32) * first.value()
            + x.powi((t - a - m) as i32) * second.value();
        total.add(binomial(d, m) * sign(m) * bracket);
    }
    // The terms cancel heavily as x -> y; scale the rounding estimate by the
    // size of the individual contributions.
    let err = 64.0 * f64::EPSILON * total.magnitude();
    Ok(Evaluation::new(total.value(), err, terms.max(1), Method::ClosedForm))
}

/// `sum_{k != excluded} C(n, k) (-1)^k [1 - (1-z)^{k-excluded}] / (k-excluded)
///  - C(n, excluded) (-1)^excluded ln(1-z)`, given `ln1z = ln(1-z)`.
fn log_binomial_sum(n: i64, excluded: i64, ln1z: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in 0..=n {
        let e = k - excluded;
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        if e == 0 {
            acc.add(-binomial(n, k) * sgn * ln1z);
        } else {
            // [1 - (1-z)^e] / e without cancellation for small z
            let diff = -(e as f64 * ln1z).exp_m1();
            acc.add(binomial(n, k) * sgn * diff / e as f64);
        }
    }
    acc.value()
}

use super::{F1Params, F2Params};
use crate::error::{Error, Result};
use crate::special::{
    exact_nonpositive_integer, hyp2f1, near_nonpositive_integer, CompensatedSum, Evaluation,
    Method, MAX_TERMS,
};

const EPS: f64 = f64::EPSILON;

/// Longest diagonal walked by the lattice summation.
const MAX_DIAGONALS: usize = 20_000;

/// Ratio `num / den` that is zero whenever the numerator vanishes, so a
/// terminated index never produces `0 / 0`.
fn safe_ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Sums a two-index series along the diagonals `m + n = t`.
///
/// `step_m(m, n)` is `T(m+1, n) / T(m, n)` and `step_n(m, n)` is
/// `T(m, n+1) / T(m, n)`. Each diagonal is generated from the previous one, so
/// terms are only ever formed at their actual magnitude. `m_max`/`n_max` bound
/// terminating indices; with both present the sum is finite.
struct DiagonalSum<FM, FN> {
    step_m: FM,
    step_n: FN,
    m_max: Option<usize>,
    n_max: Option<usize>,
    asymptotic_ratio: f64,
}

impl<FM, FN> DiagonalSum<FM, FN>
where
    FM: Fn(f64, f64) -> f64,
    FN: Fn(f64, f64) -> f64,
{
    fn run(&self, tol: f64, what: &str) -> Result<Evaluation> {
        let finite = self.m_max.is_some() && self.n_max.is_some();
        let last_diag = match (self.m_max, self.n_max) {
            (Some(m), Some(n)) => m + n,
            _ => MAX_DIAGONALS,
        };
        let mut acc = CompensatedSum::new();
        let mut diag: Vec<f64> = vec![1.0];
        let mut terms = 1usize;
        acc.add(1.0);
        let mut prev_abs = 1.0f64;
        let mut small_run = 0;

        for t in 1..=last_diag {
            let mut next = Vec::with_capacity(t + 1);
            // T(0, t) from T(0, t - 1)
            let n_ok = self.n_max.is_none_or(|n| t <= n);
            next.push(if n_ok {
                diag[0] * (self.step_n)(0.0, (t - 1) as f64)
            } else {
                0.0
            });
            for m in 1..=t {
                let n = t - m;
                let in_range = self.m_max.is_none_or(|mm| m <= mm)
                    && self.n_max.is_none_or(|nn| n <= nn);
                let v = if in_range {
                    diag[m - 1] * (self.step_m)((m - 1) as f64, n as f64)
                } else {
                    0.0
                };
                next.push(v);
            }
            let mut diag_abs = 0.0;
            for &v in &next {
                acc.add(v);
                diag_abs += v.abs();
            }
            terms += t + 1;
            diag = next;
            if !diag_abs.is_finite() {
                return Err(Error::NonConvergence {
                    what: format!("{what} (overflow)"),
                    terms,
                });
            }
            if finite {
                continue;
            }
            let total = acc.value().abs();
            if diag_abs <= tol * total {
                small_run += 1;
            } else {
                small_run = 0;
            }
            if diag_abs == 0.0 && small_run >= 2 {
                return Ok(Evaluation::new(
                    acc.value(),
                    4.0 * EPS * acc.magnitude(),
                    terms,
                    Method::Series,
                ));
            }
            if small_run >= 2 {
                let observed = if prev_abs > 0.0 { diag_abs / prev_abs } else { 0.0 };
                let q = observed.max(self.asymptotic_ratio);
                if q < 1.0 {
                    let tail = diag_abs * q / (1.0 - q);
                    if tail <= tol * total {
                        return Ok(Evaluation::new(
                            acc.value(),
                            tail + 4.0 * EPS * acc.magnitude(),
                            terms,
                            Method::Series,
                        ));
                    }
                }
            }
            prev_abs = diag_abs;
            if terms > 50 * MAX_TERMS {
                break;
            }
        }
        if finite {
            return Ok(Evaluation::new(
                acc.value(),
                4.0 * EPS * acc.magnitude(),
                terms,
                Method::Series,
            ));
        }
        Err(Error::NonConvergence {
            what: what.to_string(),
            terms,
        })
    }
}

/// Denominator check allowing a nonpositive integer when the matching
/// numerator terminates first.
fn check_denominator(name: &str, b: f64, numerator: f64) -> Result<()> {
    if let Some(l) = near_nonpositive_integer(b) {
        match exact_nonpositive_integer(numerator) {
            Some(m) if m <= l => Ok(()),
            _ => Err(Error::Parameter(format!(
                "{name} = {b} is zero or a negative integer"
            ))),
        }
    } else if !b.is_finite() {
        Err(Error::Parameter(format!("{name} is not finite")))
    } else {
        Ok(())
    }
}

/// Direct summation of `F2` along the diagonals `m + n = t`.
///
/// Accepts the absolute-convergence region `|x| + |y| < 1`, and any `x, y`
/// when both `a` and `a'` are nonpositive integers (finite double sum).
pub fn f2_series(p: &F2Params, tol: f64) -> Result<Evaluation> {
    check_denominator("b", p.b, p.a)?;
    check_denominator("b'", p.b_prime, p.a_prime)?;
    if !(p.x.is_finite() && p.y.is_finite() && p.d.is_finite()) {
        return Err(Error::Parameter("non-finite F2 input".into()));
    }
    let m_max = exact_nonpositive_integer(p.a).map(|n| n as usize);
    let n_max = exact_nonpositive_integer(p.a_prime).map(|n| n as usize);
    let terminating = m_max.is_some() && n_max.is_some();
    if !terminating && !p.in_series_domain() {
        return Err(Error::Divergence(format!(
            "F2 series needs |x| + |y| < 1, got {}",
            p.x.abs() + p.y.abs()
        )));
    }
    let F2Params {
        d,
        a,
        a_prime,
        b,
        b_prime,
        x,
        y,
    } = *p;
    let sum = DiagonalSum {
        step_m: move |m: f64, n: f64| safe_ratio((d + m + n) * (a + m) * x, (b + m) * (m + 1.0)),
        step_n: move |m: f64, n: f64| {
            safe_ratio((d + m + n) * (a_prime + n) * y, (b_prime + n) * (n + 1.0))
        },
        m_max,
        n_max,
        asymptotic_ratio: x.abs() + y.abs(),
    };
    sum.run(tol, "F2 series")
}

/// `F1` by direct summation, or through the single sum
/// `F1 = sum_r (a)_r (b)_r x^r / ((c)_r r!) 2F1(a + r, b'; c + r; y)` when `b`
/// (or `b'`) is a nonpositive integer, which holds for any `x`.
pub fn f1_series(p: &F1Params, tol: f64) -> Result<Evaluation> {
    check_denominator("c", p.c, p.a)?;
    if !(p.x.is_finite() && p.y.is_finite()) {
        return Err(Error::Parameter("non-finite F1 input".into()));
    }
    if let Some(mb) = exact_nonpositive_integer(p.b) {
        return f1_single_sum(p.a, p.b, p.b_prime, p.c, p.x, p.y, mb as usize, tol);
    }
    if let Some(mb) = exact_nonpositive_integer(p.b_prime) {
        return f1_single_sum(p.a, p.b_prime, p.b, p.c, p.y, p.x, mb as usize, tol);
    }
    let F1Params {
        a,
        b,
        b_prime,
        c,
        x,
        y,
    } = *p;
    let total_max = exact_nonpositive_integer(a).map(|n| n as usize);
    if total_max.is_none() && !p.in_series_domain() {
        return Err(Error::Divergence(format!(
            "F1 series needs |x| < 1 and |y| < 1, got ({x}, {y})"
        )));
    }
    let sum = DiagonalSum {
        step_m: move |m: f64, n: f64| {
            safe_ratio((a + m + n) * (b + m) * x, (c + m + n) * (m + 1.0))
        },
        step_n: move |m: f64, n: f64| {
            safe_ratio((a + m + n) * (b_prime + n) * y, (c + m + n) * (n + 1.0))
        },
        m_max: total_max,
        n_max: total_max,
        asymptotic_ratio: x.abs().max(y.abs()),
    };
    sum.run(tol, "F1 series")
}

#[allow(clippy::too_many_arguments)]
fn f1_single_sum(
    a: f64,
    b_term: f64,
    b_other: f64,
    c: f64,
    x: f64,
    y: f64,
    degree: usize,
    tol: f64,
) -> Result<Evaluation> {
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for r in 0..=degree {
        let rf = r as f64;
        if coef != 0.0 {
            let inner = hyp2f1(a + rf, b_other, c + rf, y, tol)?;
            acc.add(coef * inner.value);
            err += (coef * inner.abs_error).abs();
            terms += inner.terms;
        }
        coef *= safe_ratio((a + rf) * (b_term + rf) * x, (c + rf) * (rf + 1.0));
    }
    Ok(Evaluation::new(
        acc.value(),
        err + 4.0 * EPS * acc.magnitude(),
        terms.max(1),
        Method::Series,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{factorial, pochhammer, DEFAULT_TOL};
    use approx::assert_relative_eq;

    /// Row-by-row brute force with explicit Pochhammer products.
    fn f1_brute(p: &F1Params, n: usize) -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n - i {
                s += pochhammer(p.a, i + j) * pochhammer(p.b, i) * pochhammer(p.b_prime, j)
                    / (pochhammer(p.c, i + j) * factorial(i) * factorial(j))
                    * p.x.powi(i as i32)
                    * p.y.powi(j as i32);
            }
        }
        s
    }

    #[test]
    fn f2_trivial_values() {
        let v = f2_series(&F2Params::new(1.3, 0.2, 0.7, 1.1, 2.2, 0.0, 0.0), DEFAULT_TOL).unwrap();
        assert_eq!(v.value, 1.0);
        let v = f2_series(&F2Params::new(2.0, 1.0, 1.0, 1.0, 1.0, 0.25, 0.25), DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 4.0, max_relative = 1e-12);
    }

    #[test]
    fn f2_domain_and_parameter_errors() {
        let e = f2_series(&F2Params::new(2.0, 1.0, 1.0, 1.0, 1.0, 0.6, 0.5), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Divergence(_))));
        let e = f2_series(&F2Params::new(2.0, 1.0, 1.0, -1.0, 1.0, 0.1, 0.1), DEFAULT_TOL);
        assert!(matches!(e, Err(Error::Parameter(_))));
    }

    #[test]
    fn f2_terminating_outside_domain() {
        // F2(g; -n, -m; g, g; 1, 1) = n!/(g)_n delta_nm
        for n in 0..6usize {
            for m in 0..6usize {
                let g = 1.7;
                let v = f2_series(
                    &F2Params::new(g, -(n as f64), -(m as f64), g, g, 1.0, 1.0),
                    DEFAULT_TOL,
                )
                .unwrap();
                let expect = if n == m {
                    factorial(n) / pochhammer(g, n)
                } else {
                    0.0
                };
                assert!((v.value - expect).abs() < 1e-12, "{n} {m} {}", v.value);
            }
        }
    }

    #[test]
    fn f1_examples() {
        let v = f1_series(&F1Params::new(1.2, 0.3, 0.4, 2.0, 0.0, 0.0), DEFAULT_TOL).unwrap();
        assert_eq!(v.value, 1.0);
        let p = F1Params::new(1.0, 2.0, 2.0, 2.0, 0.2, 0.3);
        let v = f1_series(&p, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, f1_brute(&p, 60), max_relative = 1e-12);
        // b = -1 terminates the x index; value from mpmath.appellf1
        let p = F1Params::new(2.0, -1.0, 1.0, 3.0, 0.5, 0.25);
        let v = f1_series(&p, DEFAULT_TOL).unwrap();
        assert_relative_eq!(v.value, 0.794_173_681_543_010_3, max_relative = 1e-13);
        assert_relative_eq!(v.value, f1_brute(&p, 60), max_relative = 1e-13);
    }
}

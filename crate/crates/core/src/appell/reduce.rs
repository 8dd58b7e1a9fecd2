use super::{close, f1_series, F1Params, F2Params, OFFSET_TOL};
use crate::error::{Error, Result};
use crate::special::{
    exact_nonpositive_integer, hyp2f1, near_nonnegative_integer, pfq, pochhammer, real_pow,
    CompensatedSum, Evaluation, Method, PfqParams, DEFAULT_TOL,
};

type Pattern = fn(&F2Params, f64) -> Option<Result<Evaluation>>;

const PATTERNS: &[(&str, Pattern)] = &[
    ("vanishing numerator or argument", vanishing),
    ("elementary closed forms", elementary),
    ("equal denominators and first parameter", equal_denominators),
    ("first parameter equal to a denominator", f1_reduction),
    ("denominators offset by an integer", shifted_denominators),
    ("terminating at unit argument", unit_argument),
];

/// Closed-form reduction of `F2` when the parameters match a known pattern.
///
/// Patterns are tried in a fixed priority order:
///
/// 1. `a = 0`, `a' = 0`, `x = 0` or `y = 0`: a single `2F1`.
/// 2. `(a, a') = (b, b')`, `(b, b') = (d, a')` or `(b, b') = (a, d)`:
///    elementary powers of `1 - x`, `1 - y`, `1 - x - y`.
/// 3. `b = b' = d`: `(1-x)^{-a} (1-y)^{-a'} 2F1(a, a'; d; xy / ((1-x)(1-y)))`.
/// 4. `b = d` or `b' = d`: an `F1` of transformed arguments.
/// 5. `b' = b + s` with `d = b'`, or the mirror image: a finite sum of `2F1`.
/// 6. `a = -n`, `a' = -m` with `y = 1` and/or `x = 1`: a `3F2` at `x` (or
///    `y`), falling back to a finite sum of terminating `2F1` when the `3F2`
///    has a colliding lower parameter.
///
/// Returns `Ok(None)` when nothing matches. A pattern that matches but cannot
/// be evaluated passes control to the next one; if every matching pattern
/// fails, the last error is returned.
pub fn f2_reduce(p: &F2Params) -> Result<Option<Evaluation>> {
    f2_reduce_tol(p, DEFAULT_TOL)
}

pub(crate) fn f2_reduce_tol(p: &F2Params, tol: f64) -> Result<Option<Evaluation>> {
    let mut last_err = None;
    for (_, pattern) in PATTERNS {
        match pattern(p, tol) {
            None => {}
            Some(Ok(ev)) if ev.value.is_finite() => {
                return Ok(Some(ev.with_method(Method::Reduction)))
            }
            Some(Ok(ev)) => {
                last_err = Some(Error::Domain(format!(
                    "reduction produced a non-finite value {}",
                    ev.value
                )))
            }
            Some(Err(e)) => last_err = Some(e),
        }
    }
    match last_err {
        Some(e) => Err(e),
        None => Ok(None),
    }
}

/// Names of the reduction patterns, in the order they are tried.
pub(crate) fn pattern_names() -> impl Iterator<Item = &'static str> {
    PATTERNS.iter().map(|(name, _)| *name)
}

fn below_one(v: f64) -> Result<()> {
    if v < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("argument {v} must be below 1")))
    }
}

fn vanishing(p: &F2Params, tol: f64) -> Option<Result<Evaluation>> {
    if close(p.a, 0.0) || close(p.x, 0.0) {
        Some(hyp2f1(p.d, p.a_prime, p.b_prime, p.y, tol))
    } else if close(p.a_prime, 0.0) || close(p.y, 0.0) {
        Some(hyp2f1(p.d, p.a, p.b, p.x, tol))
    } else {
        None
    }
}

fn elementary(p: &F2Params, _tol: f64) -> Option<Result<Evaluation>> {
    let s = 1.0 - p.x - p.y;
    let value = if close(p.a, p.b) && close(p.a_prime, p.b_prime) {
        real_pow(s, -p.d)
    } else if close(p.b, p.d) && close(p.b_prime, p.a_prime) {
        real_pow(1.0 - p.y, p.a - p.d).and_then(|u| Ok(u * real_pow(s, -p.a)?))
    } else if close(p.b, p.a) && close(p.b_prime, p.d) {
        real_pow(1.0 - p.x, p.a_prime - p.d).and_then(|u| Ok(u * real_pow(s, -p.a_prime)?))
    } else {
        return None;
    };
    Some(value.map(Evaluation::closed_form))
}

fn equal_denominators(p: &F2Params, tol: f64) -> Option<Result<Evaluation>> {
    if !(close(p.b, p.d) && close(p.b_prime, p.d)) {
        return None;
    }
    Some((|| {
        below_one(p.x)?;
        below_one(p.y)?;
        let z = p.x * p.y / ((1.0 - p.x) * (1.0 - p.y));
        let pre = (1.0 - p.x).powf(-p.a) * (1.0 - p.y).powf(-p.a_prime);
        Ok(hyp2f1(p.a, p.a_prime, p.d, z, tol)?.scaled(pre))
    })())
}

fn f1_reduction(p: &F2Params, tol: f64) -> Option<Result<Evaluation>> {
    if close(p.b, p.d) {
        Some((|| {
            below_one(p.x)?;
            let inner = f1_series(
                &F1Params::new(p.a_prime, p.a, p.d - p.a, p.b_prime, p.y / (1.0 - p.x), p.y),
                tol,
            )?;
            Ok(inner.scaled((1.0 - p.x).powf(-p.a)))
        })())
    } else if close(p.b_prime, p.d) {
        Some((|| {
            below_one(p.y)?;
            let inner = f1_series(
                &F1Params::new(p.a, p.d - p.a_prime, p.a_prime, p.b, p.x, p.x / (1.0 - p.y)),
                tol,
            )?;
            Ok(inner.scaled((1.0 - p.y).powf(-p.a_prime)))
        })())
    } else {
        None
    }
}

/// `F2(c+s; a, a'; c, c+s; x, y)` as the finite sum
/// `(1-x)^{-a} (1-y)^{-a'} sum_{r<=s} (a)_r (-s)_r / ((c)_r r!) (x/(x-1))^r
///  2F1(a+r, a'; c+r; xy/((1-x)(1-y)))`.
fn shifted_denominators(p: &F2Params, tol: f64) -> Option<Result<Evaluation>> {
    if close(p.b_prime, p.d) {
        let s = near_nonnegative_integer(p.d - p.b, OFFSET_TOL)?;
        Some(equal_shift_sum(p.b, s, p.a, p.a_prime, p.x, p.y, tol))
    } else if close(p.b, p.d) {
        let s = near_nonnegative_integer(p.d - p.b_prime, OFFSET_TOL)?;
        Some(equal_shift_sum(p.b_prime, s, p.a_prime, p.a, p.y, p.x, tol))
    } else {
        None
    }
}

pub(crate) fn equal_shift_sum(
    c: f64,
    s: u32,
    a: f64,
    a_prime: f64,
    x: f64,
    y: f64,
    tol: f64,
) -> Result<Evaluation> {
    below_one(x)?;
    below_one(y)?;
    let z = x * y / ((1.0 - x) * (1.0 - y));
    let w = x / (x - 1.0);
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for r in 0..=s {
        let rf = r as f64;
        let inner = hyp2f1(a + rf, a_prime, c + rf, z, tol)?;
        acc.add(coef * inner.value);
        err += (coef * inner.abs_error).abs();
        terms += inner.terms;
        coef *= (a + rf) * (rf - s as f64) / ((c + rf) * (rf + 1.0)) * w;
    }
    let pre = (1.0 - x).powf(-a) * (1.0 - y).powf(-a_prime);
    Ok(Evaluation::new(acc.value(), err + 4.0 * f64::EPSILON * acc.magnitude(), terms, Method::Reduction)
        .scaled(pre))
}

fn unit_argument(p: &F2Params, tol: f64) -> Option<Result<Evaluation>> {
    let n = exact_nonpositive_integer(p.a)?;
    let m = exact_nonpositive_integer(p.a_prime)?;
    if close(p.y, 1.0) {
        Some(terminating_unit_y(p.d, n, m, p.b, p.b_prime, p.x, tol))
    } else if close(p.x, 1.0) {
        Some(terminating_unit_y(p.d, m, n, p.b_prime, p.b, p.y, tol))
    } else {
        None
    }
}

/// `F2(d; -n, -m; b, b'; x, 1)`.
pub(crate) fn terminating_unit_y(
    d: f64,
    n: u64,
    m: u64,
    b: f64,
    b_prime: f64,
    x: f64,
    tol: f64,
) -> Result<Evaluation> {
    let (nf, mf) = (n as f64, m as f64);
    let lower = 1.0 - b_prime + d - mf;
    let pre = pochhammer(b_prime - d, m as usize) / pochhammer(b_prime, m as usize);
    let three_f_two = pfq(
        &PfqParams::new(&[-nf, d, 1.0 - b_prime + d], &[b, lower], x),
        tol,
    );
    match three_f_two {
        Ok(ev) if pre.is_finite() && ev.value.is_finite() => Ok(ev.scaled(pre)),
        _ => unit_y_by_rows(d, n, m, b, b_prime, x, tol),
    }
}

/// `sum_k (d)_k (-m)_k / ((b')_k k!) 2F1(d+k, -n; b; x)`.
fn unit_y_by_rows(
    d: f64,
    n: u64,
    m: u64,
    b: f64,
    b_prime: f64,
    x: f64,
    tol: f64,
) -> Result<Evaluation> {
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for k in 0..=m {
        let kf = k as f64;
        let inner = hyp2f1(d + kf, -(n as f64), b, x, tol)?;
        acc.add(coef * inner.value);
        err += (coef * inner.abs_error).abs();
        terms += inner.terms;
        coef *= (d + kf) * (kf - m as f64) / ((b_prime + kf) * (kf + 1.0));
    }
    Ok(Evaluation::new(
        acc.value(),
        err + 4.0 * f64::EPSILON * acc.magnitude(),
        terms,
        Method::Reduction,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::f2_series;
    use crate::special::factorial;
    use approx::assert_relative_eq;

    fn reduce(p: F2Params) -> Evaluation {
        f2_reduce(&p).unwrap().expect("pattern should match")
    }

    #[test]
    fn vanishing_numerator() {
        let p = F2Params::new(1.4, 0.0, 0.6, 2.0, 1.7, 0.3, 0.4);
        let v = reduce(p);
        let expect = hyp2f1(1.4, 0.6, 1.7, 0.4, DEFAULT_TOL).unwrap().value;
        assert_relative_eq!(v.value, expect, max_relative = 1e-14);
        assert_eq!(v.method, Method::Reduction);
    }

    #[test]
    fn elementary_forms() {
        let v = reduce(F2Params::new(3.0, 1.0, 2.0, 1.0, 2.0, 0.2, 0.3));
        assert_relative_eq!(v.value, 8.0, max_relative = 1e-14);
        // F2(d; a, a'; d, a'; x, y) = (1-y)^{a-d} (1-x-y)^{-a}
        let v = reduce(F2Params::new(3.0, 1.0, 2.0, 3.0, 2.0, 0.2, 0.3));
        assert_relative_eq!(v.value, 0.7f64.powi(-2) * 2.0, max_relative = 1e-14);
    }

    #[test]
    fn reductions_match_series() {
        let cases = [
            F2Params::new(1.3, 0.4, 0.9, 1.3, 1.3, 0.3, -0.2),
            F2Params::new(2.1, 0.4, 0.9, 2.1, 1.6, 0.25, 0.35),
            F2Params::new(2.1, 0.4, 0.9, 0.7, 2.1, -0.25, 0.35),
            F2Params::new(2.6, 0.4, 0.9, 2.6, 0.6, 0.25, 0.35),
        ];
        for p in cases {
            let r = reduce(p).value;
            let s = f2_series(&p, DEFAULT_TOL).unwrap().value;
            assert_relative_eq!(r, s, max_relative = 1e-11);
        }
    }

    #[test]
    fn shifted_denominator_sum_matches_series() {
        for s in 0..4u32 {
            let (c, a, ap, x, y) = (1.7, 0.4, 0.6, 0.2, 0.25);
            let v = equal_shift_sum(c, s, a, ap, x, y, DEFAULT_TOL).unwrap().value;
            let sf = s as f64;
            let r = f2_series(&F2Params::new(c + sf, a, ap, c, c + sf, x, y), DEFAULT_TOL)
                .unwrap()
                .value;
            assert_relative_eq!(v, r, max_relative = 1e-11);
        }
    }

    #[test]
    fn orthogonality_route() {
        let g = 1.8;
        for n in 0..6u64 {
            for m in 0..6u64 {
                let v = reduce(F2Params::new(g, -(n as f64), -(m as f64), g, g, 1.0, 1.0)).value;
                let expect = if n == m {
                    factorial(n as usize) / pochhammer(g, n as usize)
                } else {
                    0.0
                };
                assert!((v - expect).abs() < 1e-12, "{n} {m}: {v}");
            }
        }
    }

    #[test]
    fn unit_argument_mirror() {
        let (d, n, m, b, bp, t) = (1.3, 3u64, 2u64, 1.9, 2.4, 0.35);
        let one = terminating_unit_y(d, n, m, b, bp, t, DEFAULT_TOL).unwrap().value;
        let p = F2Params::new(d, -(m as f64), -(n as f64), bp, b, 1.0, t);
        let two = reduce(p).value;
        assert_relative_eq!(one, two, max_relative = 1e-12);
        let brute = f2_series(&F2Params::new(d, -(n as f64), -(m as f64), b, bp, t, 1.0), DEFAULT_TOL)
            .unwrap()
            .value;
        assert_relative_eq!(one, brute, max_relative = 1e-12);
    }

    #[test]
    fn no_match() {
        let p = F2Params::new(2.5, 0.5, 1.5, 2.0, 3.0, 0.3, 0.4);
        assert_eq!(f2_reduce(&p).unwrap(), None);
    }
}

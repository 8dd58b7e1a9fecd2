use super::continuation::{f2_continuation_lemma6, f2_continuation_lemma8, f2_equal_params_lemma9};
use super::reduce::{f2_reduce_tol, pattern_names};
use super::{close, f2_series, ContinuationForm, ContinuationParams, F2Params, OFFSET_TOL};
use crate::error::{Error, Result};
use crate::special::{
    exact_nonpositive_integer, hyp2f1, near_nonnegative_integer, CompensatedSum, Evaluation,
    Method,
};

/// Largest `|x| + |y|` at which the plain series is preferred to a
/// continuation.
const SERIES_FIRST: f64 = 0.9;

/// Evaluate `F2` by the first strategy that applies:
///
/// 1. closed-form reductions ([`super::f2_reduce`]),
/// 2. the finite double sum when `a` and `a'` are both nonpositive integers,
/// 3. the series when `|x| + |y| <= 0.9`, with negative arguments first
///    mapped to positive ones,
/// 4. the finite continuations for `F2(c+s; a, a'; c, c -/+ p; x, y)` (either
///    orientation) and for `F2(d; a, a; c, c; x, y)`,
/// 5. the series anywhere inside `|x| + |y| < 1`,
/// 6. a finite sum of `2F1` when one of `a`, `a'` is a nonpositive integer.
///
/// The method tag of the result records which path produced it.
pub fn f2_eval(p: &F2Params, tol: f64) -> Result<Evaluation> {
    let mut tried = Vec::new();

    match f2_reduce_tol(p, tol) {
        Ok(Some(ev)) => return Ok(ev),
        Ok(None) => tried.push(format!(
            "reductions ({}): no match",
            pattern_names().collect::<Vec<_>>().join(", ")
        )),
        Err(e) => tried.push(format!("reductions: {e}")),
    }

    let terminating =
        exact_nonpositive_integer(p.a).is_some() && exact_nonpositive_integer(p.a_prime).is_some();
    let radius = p.x.abs() + p.y.abs();
    if terminating || radius <= SERIES_FIRST {
        match interior_series(p, tol) {
            Ok(ev) => return Ok(ev),
            Err(e) => tried.push(format!("series: {e}")),
        }
    }

    for q in [*p, p.swapped()] {
        for (label, cp) in shifted_families(&q) {
            let attempt = match label {
                Family::Lower => f2_continuation_lemma6(&cp, ContinuationForm::Hyp2F1, tol),
                Family::Upper => f2_continuation_lemma8(&cp, ContinuationForm::Hyp2F1, tol),
            };
            match attempt {
                Ok(ev) if ev.value.is_finite() => return Ok(ev),
                Ok(_) => tried.push(format!("{label:?} continuation: non-finite value")),
                Err(e) => tried.push(format!("{label:?} continuation: {e}")),
            }
        }
    }
    if close(p.a, p.a_prime) && close(p.b, p.b_prime) {
        match f2_equal_params_lemma9(p.d, p.a, p.b, p.x, p.y, 1.0, tol) {
            Ok(ev) => return Ok(ev),
            Err(e) => tried.push(format!("equal-parameter continuation: {e}")),
        }
    } else {
        tried.push("equal-parameter continuation: parameters differ".into());
    }

    if !terminating && radius > SERIES_FIRST {
        if radius < 1.0 {
            match interior_series(p, tol) {
                Ok(ev) => return Ok(ev),
                Err(e) => tried.push(format!("series: {e}")),
            }
        } else {
            tried.push(format!("series: needs |x| + |y| < 1, got {radius}"));
        }
    }

    for (q, label) in [(*p, "a"), (p.swapped(), "a'")] {
        if let Some(n) = exact_nonpositive_integer(q.a) {
            match single_termination(&q, n as usize, tol) {
                Ok(ev) => return Ok(ev),
                Err(e) => tried.push(format!("sum terminating in {label}: {e}")),
            }
        }
    }
    Err(Error::NoStrategy { tried })
}

/// The series after Euler's transformations move every negative argument
/// whose index does not terminate to a positive one:
/// `F2 = (1-x)^{-d} F2(d; b-a, a'; b, b'; x/(x-1), y/(1-x))`, its mirror in
/// `y`, and `(1-x-y)^{-d} F2(d; b-a, b'-a'; b, b'; x/(x+y-1), y/(x+y-1))`.
/// Each keeps `|x| + |y| < 1` and removes the alternation that otherwise
/// costs digits near the boundary.
fn interior_series(p: &F2Params, tol: f64) -> Result<Evaluation> {
    let flip_x = p.x < 0.0 && exact_nonpositive_integer(p.a).is_none();
    let flip_y = p.y < 0.0 && exact_nonpositive_integer(p.a_prime).is_none();
    let (pre, q) = match (flip_x, flip_y) {
        (false, false) => return f2_series(p, tol),
        (true, false) => {
            let w = 1.0 - p.x;
            (w, F2Params { a: p.b - p.a, x: -p.x / w, y: p.y / w, ..*p })
        }
        (false, true) => {
            let w = 1.0 - p.y;
            (w, F2Params { a_prime: p.b_prime - p.a_prime, x: p.x / w, y: -p.y / w, ..*p })
        }
        (true, true) => {
            let w = 1.0 - p.x - p.y;
            (
                w,
                F2Params {
                    a: p.b - p.a,
                    a_prime: p.b_prime - p.a_prime,
                    x: -p.x / w,
                    y: -p.y / w,
                    ..*p
                },
            )
        }
    };
    let scale = pre.powf(-p.d);
    let ev = f2_series(&q, tol)?;
    Ok(Evaluation::new(scale * ev.value, scale * ev.abs_error, ev.terms, ev.method))
}

#[derive(Debug, Clone, Copy)]
enum Family {
    /// `F2(c+s; a, a'; c, c-p; ...)`
    Lower,
    /// `F2(c+s; a, a'; c, c+p; ...)` with `s >= p`
    Upper,
}

fn shifted_families(p: &F2Params) -> Vec<(Family, ContinuationParams)> {
    let mut out = Vec::new();
    let Some(s) = near_nonnegative_integer(p.d - p.b, OFFSET_TOL) else {
        return out;
    };
    let cp = |pp: u32| ContinuationParams::new(p.b, s, pp, p.a, p.a_prime, p.x, p.y, 1.0);
    if let Some(pp) = near_nonnegative_integer(p.b - p.b_prime, OFFSET_TOL) {
        out.push((Family::Lower, cp(pp)));
    }
    if let Some(pp) = near_nonnegative_integer(p.b_prime - p.b, OFFSET_TOL) {
        if pp <= s {
            out.push((Family::Upper, cp(pp)));
        }
    }
    out
}

/// `sum_{m<=n} (d)_m (-n)_m / ((b)_m m!) x^m 2F1(d+m, a'; b'; y)` for `a = -n`.
fn single_termination(p: &F2Params, n: usize, tol: f64) -> Result<Evaluation> {
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for m in 0..=n {
        let mf = m as f64;
        let f = hyp2f1(p.d + mf, p.a_prime, p.b_prime, p.y, tol)?;
        acc.add(coef * f.value);
        err += (coef * f.abs_error).abs();
        terms += f.terms;
        coef *= (p.d + mf) * (mf - n as f64) * p.x / ((p.b + mf) * (mf + 1.0));
    }
    Ok(Evaluation::new(
        acc.value(),
        err + 4.0 * f64::EPSILON * acc.magnitude(),
        terms.max(1),
        Method::Series,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::DEFAULT_TOL;
    use approx::assert_relative_eq;

    #[test]
    fn negative_arguments_keep_precision() {
        // mpmath appellf2 at 30 digits
        let p = F2Params::new(
            3.3796195496983112,
            2.807353045716221,
            1.4249011419962732,
            0.5,
            0.5,
            -0.47756151782676676,
            0.4166525259784288,
        );
        let reference = -0.435313157279212178528;
        for q in [p, p.swapped()] {
            let ev = f2_eval(&q, DEFAULT_TOL).unwrap();
            assert_relative_eq!(ev.value, reference, max_relative = 2e-12);
        }
        let both = F2Params::new(2.5, 0.5, 1.5, 2.0, 3.0, -0.3, -0.4);
        let direct = f2_series(&both, DEFAULT_TOL).unwrap().value;
        assert_relative_eq!(f2_eval(&both, DEFAULT_TOL).unwrap().value, direct, max_relative = 1e-12);
    }

    #[test]
    fn dispatch_tags() {
        let ev = f2_eval(&F2Params::new(2.0, 1.0, 1.0, 1.0, 1.0, 0.25, 0.25), DEFAULT_TOL).unwrap();
        assert_eq!(ev.method, Method::Reduction);
        assert_relative_eq!(ev.value, 4.0, max_relative = 1e-14);

        let p = F2Params::new(2.5, 0.5, 1.5, 2.0, 3.0, 0.3, 0.4);
        let ev = f2_eval(&p, DEFAULT_TOL).unwrap();
        assert_eq!(ev.method, Method::Series);
    }

    #[test]
    fn continuation_outside_series_domain() {
        // F2(g+1; a, a'; g, g; x, y) with x + y > 1 and a terminating
        let p = F2Params::new(3.0, -2.0, 0.7, 2.0, 2.0, 0.6, 0.55);
        let ev = f2_eval(&p, DEFAULT_TOL).unwrap();
        assert_eq!(ev.method, Method::Continuation);
        let direct = single_termination(&p, 2, DEFAULT_TOL).unwrap().value;
        assert_relative_eq!(ev.value, direct, max_relative = 1e-12);
        let ev2 = f2_eval(&p.swapped(), DEFAULT_TOL).unwrap();
        assert_relative_eq!(ev.value, ev2.value, max_relative = 1e-12);

        // opposite-sign arguments with |x| + |y| > 1, nothing terminating
        let p = F2Params::new(3.0, 0.5, 0.7, 2.0, 2.0, 0.6, -0.7);
        let ev = f2_eval(&p, DEFAULT_TOL).unwrap();
        assert_eq!(ev.method, Method::Continuation);
        let f1_form = f2_continuation_lemma6(
            &ContinuationParams::new(2.0, 1, 0, 0.5, 0.7, 0.6, -0.7, 1.0),
            ContinuationForm::F1,
            DEFAULT_TOL,
        )
        .unwrap()
        .value;
        assert_relative_eq!(ev.value, f1_form, max_relative = 1e-11);
    }

    #[test]
    fn single_termination_matches_series() {
        let p = F2Params::new(1.6, -3.0, 0.7, 1.2, 2.3, 0.3, 0.4);
        let v = single_termination(&p, 3, DEFAULT_TOL).unwrap().value;
        let r = f2_series(&p, DEFAULT_TOL).unwrap().value;
        assert_relative_eq!(v, r, max_relative = 1e-12);
    }

    #[test]
    fn no_strategy_lists_attempts() {
        let p = F2Params::new(2.3, 0.5, 0.7, 1.1, 1.9, 0.8, 0.7);
        match f2_eval(&p, DEFAULT_TOL) {
            Err(Error::NoStrategy { tried }) => assert!(tried.len() >= 3, "{tried:?}"),
            other => panic!("expected NoStrategy, got {other:?}"),
        }
    }
}

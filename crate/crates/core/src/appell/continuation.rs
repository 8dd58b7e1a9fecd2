use serde::{Deserialize, Serialize};

use super::{f1_series, ContinuationParams, F1Params};
use crate::error::{Error, Result};
use crate::special::{
    hyp2f1, near_nonpositive_integer, pfq, real_pow, CompensatedSum, Evaluation, Method,
    PfqParams, MAX_TERMS,
};

const EPS: f64 = f64::EPSILON;
const SINGULAR_TOL: f64 = 1e-12;

/// Which finite re-expansion to use for the shifted-denominator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuationForm {
    /// Outer finite sum of `F1` values.
    F1,
    /// Nested finite sums of `2F1` values.
    Hyp2F1,
}

/// Common checks and derived quantities for both families.
struct Setup {
    /// `k / (k - h)`, the ratio raised to `r`.
    u: f64,
    /// `k' / (k' - h)`, the ratio raised to `m`.
    v: f64,
    /// `k k' / ((h - k')(h - k))`.
    z: f64,
}

fn setup(cp: &ContinuationParams) -> Result<Setup> {
    let ContinuationParams { c, h, k, k_prime, .. } = *cp;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Parameter(format!("h must be positive, got {h}")));
    }
    if ![c, cp.a, cp.a_prime, k, k_prime].iter().all(|v| v.is_finite()) {
        return Err(Error::Parameter("non-finite continuation parameter".into()));
    }
    let guard = SINGULAR_TOL * h.abs();
    for (name, v) in [("h - k", h - k), ("h - k'", h - k_prime), ("h - k - k'", h - k - k_prime)] {
        if v.abs() <= guard {
            return Err(Error::Singular(format!("{name} vanishes ({v:e})")));
        }
    }
    if near_nonpositive_integer(c).is_some() {
        return Err(Error::Parameter(format!("c = {c} is zero or a negative integer")));
    }
    Ok(Setup {
        u: k / (k - h),
        v: k_prime / (k_prime - h),
        z: k * k_prime / ((h - k_prime) * (h - k)),
    })
}

/// Ratio of successive outer coefficients, with a termination-safe zero.
fn step(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// `sum_{r=0}^{s+m} (a)_r (-s-m)_r / ((c)_r r!) u^r 2F1(a+r, a'+m; c+r; z)`.
fn inner_gauss_sum(
    cp: &ContinuationParams,
    m: u32,
    setup: &Setup,
    tol: f64,
) -> Result<(f64, f64, usize)> {
    let top = cp.s + m;
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for r in 0..=top {
        let rf = r as f64;
        if coef != 0.0 {
            let f = hyp2f1(cp.a + rf, cp.a_prime + m as f64, cp.c + rf, setup.z, tol)?;
            acc.add(coef * f.value);
            err += (coef * f.abs_error).abs();
            terms += f.terms;
        }
        coef *= step((cp.a + rf) * (rf - top as f64) * setup.u, (cp.c + rf) * (rf + 1.0));
    }
    Ok((acc.value(), err + 4.0 * EPS * acc.magnitude(), terms))
}

/// Outer sum over `m <= top` with first-parameter shift `shift` and
/// denominator `lower`: coefficients `(a')_m (shift)_m / ((lower)_m m!) v^m`.
fn outer_sum<F>(top: u32, shift: f64, lower: f64, cp: &ContinuationParams, setup: &Setup, mut inner: F) -> Result<Evaluation>
where
    F: FnMut(u32) -> Result<(f64, f64, usize)>,
{
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0;
    for m in 0..=top {
        let mf = m as f64;
        if coef != 0.0 {
            let (value, e, t) = inner(m)?;
            acc.add(coef * value);
            err += (coef * e).abs();
            terms += t;
        }
        coef *= step((cp.a_prime + mf) * (shift + mf) * setup.v, (lower + mf) * (mf + 1.0));
    }
    Ok(Evaluation::new(
        acc.value(),
        err + 4.0 * EPS * acc.magnitude(),
        terms.max(1),
        Method::Continuation,
    ))
}

fn prefactor(cp: &ContinuationParams, with_k: bool) -> Result<f64> {
    let kp = real_pow(1.0 - cp.k_prime / cp.h, -cp.a_prime)?;
    if with_k {
        Ok(kp * real_pow(1.0 - cp.k / cp.h, -cp.a)?)
    } else {
        Ok(kp)
    }
}

/// `F2(c+s; a, a'; c, c-p; k/h, k'/h)` through a finite re-expansion.
///
/// The `F1` form is
/// `(1 - k'/h)^{-a'} sum_{m<=s+p} (a')_m (-s-p)_m / ((c-p)_m m!) (k'/(k'-h))^m
///  F1(a; c+s-a', m+a'; c; k/h, k/(h-k'))`
/// and needs both `F1` arguments inside the unit interval. The `2F1` form
/// additionally pulls out `(1 - k/h)^{-a}` and expands each `F1` into at most
/// `s + m + 1` Gauss functions of `k k' / ((h-k')(h-k))`, which reaches
/// arguments far outside `|k| + |k'| < h`.
pub fn f2_continuation_lemma6(
    cp: &ContinuationParams,
    form: ContinuationForm,
    tol: f64,
) -> Result<Evaluation> {
    let setup = setup(cp)?;
    let lower = cp.c - cp.p as f64;
    if near_nonpositive_integer(lower).is_some() {
        return Err(Error::Parameter(format!(
            "c - p = {lower} is zero or a negative integer"
        )));
    }
    let top = cp.s + cp.p;
    let shift = -(top as f64);
    match form {
        ContinuationForm::F1 => {
            let x1 = cp.k / cp.h;
            let y1 = cp.k / (cp.h - cp.k_prime);
            let pre = prefactor(cp, false)?;
            let ev = outer_sum(top, shift, lower, cp, &setup, |m| {
                let f = f1_series(
                    &F1Params::new(
                        cp.a,
                        cp.c + cp.s as f64 - cp.a_prime,
                        m as f64 + cp.a_prime,
                        cp.c,
                        x1,
                        y1,
                    ),
                    tol,
                )?;
                Ok((f.value, f.abs_error, f.terms))
            })?;
            Ok(ev.scaled(pre))
        }
        ContinuationForm::Hyp2F1 => {
            let pre = prefactor(cp, true)?;
            let ev = outer_sum(top, shift, lower, cp, &setup, |m| {
                inner_gauss_sum(cp, m, &setup, tol)
            })?;
            Ok(ev.scaled(pre))
        }
    }
}

/// `F2(c+s; a, a'; c, c+p; k/h, k'/h)` for `s >= p`.
///
/// Both forms share the prefactor `(1 - k/h)^{-a} (1 - k'/h)^{-a'}` and the
/// outer sum `sum_{m<=s-p} (p-s)_m (a')_m / ((c+p)_m m!) (k'/(k'-h))^m`; the
/// `F1` form evaluates `F1(a; -s-m, m+a'; c; k/(k-h), k k'/((h-k')(h-k)))`,
/// the `2F1` form expands it explicitly. With `s = p` only `m = 0` remains.
pub fn f2_continuation_lemma8(
    cp: &ContinuationParams,
    form: ContinuationForm,
    tol: f64,
) -> Result<Evaluation> {
    if cp.s < cp.p {
        return Err(Error::Precondition(format!(
            "needs s >= p, got s = {}, p = {}",
            cp.s, cp.p
        )));
    }
    let setup = setup(cp)?;
    let lower = cp.c + cp.p as f64;
    if near_nonpositive_integer(lower).is_some() {
        return Err(Error::Parameter(format!(
            "c + p = {lower} is zero or a negative integer"
        )));
    }
    let top = cp.s - cp.p;
    let shift = -(top as f64);
    let pre = prefactor(cp, true)?;
    let ev = match form {
        ContinuationForm::F1 => outer_sum(top, shift, lower, cp, &setup, |m| {
            let f = f1_series(
                &F1Params::new(
                    cp.a,
                    -((cp.s + m) as f64),
                    m as f64 + cp.a_prime,
                    cp.c,
                    setup.u,
                    setup.z,
                ),
                tol,
            )?;
            Ok((f.value, f.abs_error, f.terms))
        })?,
        ContinuationForm::Hyp2F1 => outer_sum(top, shift, lower, cp, &setup, |m| {
            inner_gauss_sum(cp, m, &setup, tol)
        })?,
    };
    Ok(ev.scaled(pre))
}

fn check_lemma9(c: f64, h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Parameter(format!("h must be positive, got {h}")));
    }
    if near_nonpositive_integer(c).is_some() {
        return Err(Error::Parameter(format!("c = {c} is zero or a negative integer")));
    }
    Ok(())
}

/// `F2(d; a, a; c, c; k/h, k'/h)` as
/// `sum_r (a)_r (c-a)_r (d)_{2r} / ((c)_r (c)_{2r} r!) (-k k'/h^2)^r
///  2F1(d+2r, a+r; c+2r; (k+k')/h)`.
pub fn lemma9_gauss_sum(d: f64, a: f64, c: f64, k: f64, k_prime: f64, h: f64, tol: f64) -> Result<Evaluation> {
    check_lemma9(c, h)?;
    if k.abs() + k_prime.abs() >= h {
        return Err(Error::Divergence(format!(
            "needs |k| + |k'| < h, got {} >= {h}",
            k.abs() + k_prime.abs()
        )));
    }
    let w = (k + k_prime) / h;
    let q = -k * k_prime / (h * h);
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut terms = 0;
    let mut coef = 1.0f64;
    let mut small_run = 0;
    for r in 0..MAX_TERMS {
        let rf = r as f64;
        let f = hyp2f1(d + 2.0 * rf, a + rf, c + 2.0 * rf, w, tol)?;
        let term = coef * f.value;
        acc.add(term);
        err += (coef * f.abs_error).abs();
        terms += f.terms;
        if term.abs() <= tol * acc.value().abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        coef *= step(
            (a + rf) * (c - a + rf) * (d + 2.0 * rf) * (d + 2.0 * rf + 1.0) * q,
            (c + rf) * (c + 2.0 * rf) * (c + 2.0 * rf + 1.0) * (rf + 1.0),
        );
        if coef == 0.0 || small_run >= 2 {
            return Ok(Evaluation::new(
                acc.value(),
                err + term.abs() + 4.0 * EPS * acc.magnitude(),
                terms.max(1),
                Method::Continuation,
            ));
        }
        if !coef.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence {
        what: "equal-parameter Gauss sum".into(),
        terms,
    })
}

/// `F2(d; a, a; c, c; k/h, -k/h)
///  = 4F3(a, c-a, d/2, (d+1)/2; c, c/2, (c+1)/2; k^2/h^2)` for `2|k| < h`.
pub fn lemma9_antisymmetric(d: f64, a: f64, c: f64, k: f64, h: f64, tol: f64) -> Result<Evaluation> {
    check_lemma9(c, h)?;
    if 2.0 * k.abs() >= h {
        return Err(Error::Divergence(format!("needs 2|k| < h, got 2|k| = {}", 2.0 * k.abs())));
    }
    let ev = pfq(
        &PfqParams::new(
            &[a, c - a, d / 2.0, (d + 1.0) / 2.0],
            &[c, c / 2.0, (c + 1.0) / 2.0],
            k * k / (h * h),
        ),
        tol,
    )?;
    Ok(ev.with_method(Method::Continuation))
}

/// `F2(d; a, a; c, c; k/h, k'/h)`, through the `4F3` when `k' = -k` and the
/// Gauss sum otherwise.
pub fn f2_equal_params_lemma9(
    d: f64,
    a: f64,
    c: f64,
    k: f64,
    k_prime: f64,
    h: f64,
    tol: f64,
) -> Result<Evaluation> {
    if (k + k_prime).abs() <= SINGULAR_TOL * h.abs() {
        lemma9_antisymmetric(d, a, c, k, h, tol)
    } else {
        lemma9_gauss_sum(d, a, c, k, k_prime, h, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::{f2_series, F2Params};
    use crate::special::{hyp2f1, DEFAULT_TOL};
    use approx::assert_relative_eq;

    fn series(p: F2Params) -> f64 {
        f2_series(&p, DEFAULT_TOL).unwrap().value
    }

    #[test]
    fn lemma6_zero_shift_is_equal_denominator_form() {
        let (c, a, ap, k, kp, h) = (1.7, 0.4, 0.9, 0.2, 0.35, 1.0);
        let cp = ContinuationParams::new(c, 0, 0, a, ap, k, kp, h);
        let closed = (1.0 - k / h).powf(-a)
            * (1.0 - kp / h).powf(-ap)
            * hyp2f1(a, ap, c, k * kp / ((h - k) * (h - kp)), DEFAULT_TOL).unwrap().value;
        for form in [ContinuationForm::F1, ContinuationForm::Hyp2F1] {
            let v = f2_continuation_lemma6(&cp, form, DEFAULT_TOL).unwrap();
            assert_relative_eq!(v.value, closed, max_relative = 1e-12);
            assert_eq!(v.method, Method::Continuation);
        }
    }

    #[test]
    fn lemma6_matches_series() {
        for cp in [
            ContinuationParams::new(2.0, 1, 0, 0.5, 0.7, 0.2, 0.3, 1.0),
            ContinuationParams::new(3.3, 2, 1, 0.5, 0.7, 0.2, 0.3, 1.0),
            ContinuationParams::new(2.5, 1, 2, -0.4, 1.3, -0.3, 0.25, 1.4),
        ] {
            let r = series(cp.lemma6_target());
            for form in [ContinuationForm::F1, ContinuationForm::Hyp2F1] {
                let v = f2_continuation_lemma6(&cp, form, DEFAULT_TOL).unwrap().value;
                assert_relative_eq!(v, r, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn lemma6_singular_configurations() {
        let cp = ContinuationParams::new(2.0, 1, 0, 0.5, 0.7, 1.0, 0.3, 1.0);
        assert!(matches!(
            f2_continuation_lemma6(&cp, ContinuationForm::Hyp2F1, DEFAULT_TOL),
            Err(Error::Singular(_))
        ));
        let cp = ContinuationParams::new(2.0, 1, 0, 0.5, 0.7, 0.4, 0.6, 1.0);
        assert!(matches!(
            f2_continuation_lemma6(&cp, ContinuationForm::Hyp2F1, DEFAULT_TOL),
            Err(Error::Singular(_))
        ));
        let cp = ContinuationParams::new(2.0, 1, 2, 0.5, 0.7, 0.2, 0.3, 1.0);
        assert!(matches!(
            f2_continuation_lemma6(&cp, ContinuationForm::Hyp2F1, DEFAULT_TOL),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn lemma8_matches_series() {
        for cp in [
            ContinuationParams::new(2.0, 1, 1, 0.4, 0.6, 0.2, 0.25, 1.0),
            ContinuationParams::new(1.5, 2, 1, 0.3, 0.8, 0.15, 0.2, 1.0),
            ContinuationParams::new(1.5, 3, 0, 0.3, 0.8, -0.15, 0.4, 1.0),
        ] {
            let r = series(cp.lemma8_target());
            for form in [ContinuationForm::F1, ContinuationForm::Hyp2F1] {
                let v = f2_continuation_lemma8(&cp, form, DEFAULT_TOL).unwrap().value;
                assert_relative_eq!(v, r, max_relative = 1e-11);
            }
        }
        let cp = ContinuationParams::new(1.5, 1, 2, 0.3, 0.8, 0.15, 0.2, 1.0);
        assert!(matches!(
            f2_continuation_lemma8(&cp, ContinuationForm::F1, DEFAULT_TOL),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma9_paths() {
        let v = f2_equal_params_lemma9(2.0, 0.5, 1.5, 0.2, 0.3, 1.0, DEFAULT_TOL).unwrap().value;
        let r = series(F2Params::new(2.0, 0.5, 0.5, 1.5, 1.5, 0.2, 0.3));
        assert_relative_eq!(v, r, max_relative = 1e-11);

        let sum = lemma9_gauss_sum(1.2, 0.7, 2.0, 0.3, -0.3, 1.0, DEFAULT_TOL).unwrap().value;
        let four = lemma9_antisymmetric(1.2, 0.7, 2.0, 0.3, 1.0, DEFAULT_TOL).unwrap().value;
        assert_relative_eq!(sum, four, max_relative = 1e-11);
        let r = series(F2Params::new(1.2, 0.7, 0.7, 2.0, 2.0, 0.3, -0.3));
        assert_relative_eq!(four, r, max_relative = 1e-11);

        let one = f2_equal_params_lemma9(1.0, 0.4, 1.3, 0.0, 0.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(one.value, 1.0);
    }
}

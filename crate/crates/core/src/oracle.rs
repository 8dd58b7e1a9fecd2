//! Independent reference backends: adaptive Gauss–Legendre quadrature on the
//! half-line and a slow, tail-bounded brute-force `F2` double sum.
//!
//! Nothing here calls the fast evaluation paths of [`crate::appell`].

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::appell::F2Params;
use crate::error::{Error, Result};
use crate::special::{exact_nonpositive_integer, CompensatedSum};

const EPS: f64 = f64::EPSILON;
const GL_ORDER: usize = 20;

/// Error floor, in ulps of `int |f|`, below which refinement stops.
const ROUNDING_FLOOR: f64 = 100.0;

/// Default evaluation budget for one quadrature call.
pub const QUADRATURE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nodes and weights of the Gauss–Legendre rule on `[-1, 1]`, from Newton
/// iteration on the Legendre recurrence.
fn gauss_legendre() -> &'static ([f64; GL_ORDER], [f64; GL_ORDER]) {
    static RULE: OnceLock<([f64; GL_ORDER], [f64; GL_ORDER])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut nodes = [0.0; GL_ORDER];
        let mut weights = [0.0; GL_ORDER];
        for i in 0..n.div_ceil(2) {
            let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, 0.0);
                for j in 0..n {
                    let p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
                }
                dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
                let dz = p0 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        (nodes, weights)
    })
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    tail: bool,
    value: f64,
    abs_value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then(other.lo.total_cmp(&self.lo))
    }
}

struct Integrator<'f, F: Fn(f64) -> f64> {
    f: &'f F,
    split: f64,
    decay: f64,
    evaluations: usize,
}

impl<F: Fn(f64) -> f64> Integrator<'_, F> {
    /// Integrand in the working variable: `t` on `(0, split]`, and on the
    /// tail `u` with `t = split - decay ln u`, `dt = decay / u du`.
    fn eval(&mut self, tail: bool, u: f64) -> Result<f64> {
        self.evaluations += 1;
        let v = if tail {
            let t = self.split - self.decay * u.ln();
            let ft = (self.f)(t);
            if ft == 0.0 {
                0.0
            } else {
                ft * self.decay / u
            }
        } else {
            (self.f)(u)
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Quadrature(format!("integrand is not finite near {u}")))
        }
    }

    fn rule(&mut self, tail: bool, lo: f64, hi: f64) -> Result<(f64, f64)> {
        let (nodes, weights) = gauss_legendre();
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut s = CompensatedSum::new();
        let mut s_abs = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            let v = self.eval(tail, mid + half * x)?;
            s.add(w * v);
            s_abs += w * v.abs();
        }
        Ok((s.value() * half, s_abs * half))
    }

    /// Estimate on `[lo, hi]` with the bisection error `|I - (I_l + I_r)|`.
    fn segment(&mut self, tail: bool, lo: f64, hi: f64, whole: Option<f64>) -> Result<[Segment; 2]> {
        let mid = 0.5 * (lo + hi);
        let whole = match whole {
            Some(w) => w,
            None => self.rule(tail, lo, hi)?.0,
        };
        let (l, la) = self.rule(tail, lo, mid)?;
        let (r, ra) = self.rule(tail, mid, hi)?;
        let err = (whole - (l + r)).abs();
        // Split the parent error between the halves; each half is re-estimated
        // when it is bisected in turn.
        Ok([
            Segment { lo, hi: mid, tail, value: l, abs_value: la, error: 0.5 * err },
            Segment { lo: mid, hi, tail, value: r, abs_value: ra, error: 0.5 * err },
        ])
    }
}

/// `int_0^inf f(t) dt` for an integrand with exponential decay, split at
/// `t = 1` with a unit decay length for the tail map.
pub fn integrate_semiinfinite<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadratureResult> {
    integrate_semiinfinite_scaled(f, tol, 1.0, 1.0)
}

/// `int_0^inf f(t) dt`, splitting at `split` and mapping `[split, inf)` onto
/// `(0, 1]` through `t = split - decay_length * ln u`.
///
/// `decay_length` should be about `1 / rate` for an integrand decaying like
/// `exp(-rate t)`; `split` about where the integrand peaks. Segments are
/// refined globally, worst first, until the summed error estimate is below
/// `tol * |value|` or at the rounding floor of `int |f|`.
pub fn integrate_semiinfinite_scaled<F: Fn(f64) -> f64>(
    f: F,
    tol: f64,
    split: f64,
    decay_length: f64,
) -> Result<QuadratureResult> {
    if !(tol > 0.0) || !(split > 0.0) || !(decay_length > 0.0) {
        return Err(Error::Parameter(format!(
            "quadrature needs positive tol, split and decay length, got {tol}, {split}, {decay_length}"
        )));
    }
    let mut it = Integrator {
        f: &f,
        split,
        decay: decay_length,
        evaluations: 0,
    };
    let mut heap = BinaryHeap::new();
    // Seed with a few panels on each piece so early estimates are not fooled
    // by an integrand that happens to vanish at the first nodes.
    let seeds = 4;
    for i in 0..seeds {
        let (lo, hi) = (split * i as f64 / seeds as f64, split * (i + 1) as f64 / seeds as f64);
        for s in it.segment(false, lo, hi, None)? {
            heap.push(s);
        }
        let (lo, hi) = (i as f64 / seeds as f64, (i + 1) as f64 / seeds as f64);
        for s in it.segment(true, lo, hi, None)? {
            heap.push(s);
        }
    }
    let mut frozen_value = CompensatedSum::new();
    let mut frozen_abs = 0.0;
    let mut frozen_err = 0.0;

    loop {
        let mut value = CompensatedSum::new();
        let mut abs_total = frozen_abs;
        let mut err_total = frozen_err;
        value.add(frozen_value.value());
        for s in heap.iter() {
            value.add(s.value);
            abs_total += s.abs_value;
            err_total += s.error;
        }
        let v = value.value();
        // Integrands built from alternating polynomials carry evaluation
        // noise well above one ulp of their modulus.
        let floor = ROUNDING_FLOOR * EPS * abs_total;
        if err_total <= tol * v.abs() || err_total <= floor {
            let converged = err_total <= tol * v.abs().max(1.0);
            return Ok(QuadratureResult {
                value: v,
                abs_error: err_total.max(floor),
                evaluations: it.evaluations,
                converged,
            });
        }
        if it.evaluations > QUADRATURE_BUDGET {
            return Err(Error::NonConvergence {
                what: format!("quadrature (error {err_total:e} on value {v:e}, integral of modulus {abs_total:e})"),
                terms: it.evaluations,
            });
        }
        // Refine a batch of the worst segments before re-totalling.
        let batch = (heap.len() / 8).max(16);
        for _ in 0..batch {
            let Some(worst) = heap.pop() else { break };
            let width = worst.hi - worst.lo;
            if width <= 4.0 * EPS * worst.lo.abs().max(worst.hi.abs()) || width < 1e-300 {
                frozen_value.add(worst.value);
                frozen_abs += worst.abs_value;
                frozen_err += worst.error;
                continue;
            }
            for s in it.segment(worst.tail, worst.lo, worst.hi, Some(worst.value))? {
                heap.push(s);
            }
        }
    }
}

/// Brute-force `F2` by summing the rectangle `m, n <= N` row by row in
/// compensated arithmetic, growing `N` until the tail bound
/// `sum_{t>N} |(d)_t| / t! A_t B_t (|x| + |y|)^t` drops below
/// `10^-target_digits` of the partial sum. Here `A_t` bounds
/// `|(a)_m / (b)_m|` for `m <= t` (and `B_t` likewise).
pub fn f2_bruteforce(p: &F2Params, target_digits: u32) -> Result<f64> {
    let F2Params { a, a_prime, b, b_prime, x, y, .. } = *p;
    for (name, v) in [("b", b), ("b'", b_prime)] {
        if exact_nonpositive_integer(v).is_some() {
            return Err(Error::Parameter(format!("{name} = {v} is a nonpositive integer")));
        }
    }
    let rho = x.abs() + y.abs();
    let na = exact_nonpositive_integer(a);
    let nb = exact_nonpositive_integer(a_prime);
    if let (Some(m), Some(n)) = (na, nb) {
        return Ok(rectangle(p, m.max(n) as usize));
    }
    if rho > 0.95 {
        return Err(Error::Domain(format!(
            "brute force needs |x| + |y| <= 0.95, got {rho}"
        )));
    }
    let target = 10f64.powi(-(target_digits as i32));
    let mut n_max = 32usize;
    loop {
        let sum = rectangle(p, n_max);
        let tail = tail_bound(p, n_max);
        if tail <= target * sum.abs() || tail == 0.0 {
            return Ok(sum);
        }
        if n_max > 8192 {
            return Err(Error::NonConvergence {
                what: "brute-force F2".into(),
                terms: (n_max + 1) * (n_max + 1),
            });
        }
        n_max *= 2;
    }
}

fn rectangle(p: &F2Params, n_max: usize) -> f64 {
    let F2Params { d, a, a_prime, b, b_prime, x, y } = *p;
    let mut total = CompensatedSum::new();
    let mut row_head = 1.0f64;
    for m in 0..=n_max {
        if m > 0 {
            let mf = (m - 1) as f64;
            row_head *= (d + mf) * (a + mf) * x / ((b + mf) * (mf + 1.0));
        }
        let mut row = CompensatedSum::new();
        let mut term = row_head;
        for n in 0..=n_max {
            if n > 0 {
                let nf = (n - 1) as f64;
                term *= (d + m as f64 + nf) * (a_prime + nf) * y / ((b_prime + nf) * (nf + 1.0));
            }
            row.add(term);
        }
        total.add(row.value());
    }
    total.value()
}

fn tail_bound(p: &F2Params, n_max: usize) -> f64 {
    let F2Params { d, a, a_prime, b, b_prime, x, y } = *p;
    let rho = x.abs() + y.abs();
    if rho == 0.0 {
        return 0.0;
    }
    // ln of |(d)_t| / t! A_t B_t rho^t at t = N + 1
    let t1 = n_max + 1;
    let mut ln_bound = 0.0;
    for i in 0..t1 {
        let fi = i as f64;
        ln_bound += ((d + fi).abs() / (fi + 1.0)).ln();
        ln_bound += ((a + fi).abs() / (b + fi).abs()).max(1.0).ln();
        ln_bound += ((a_prime + fi).abs() / (b_prime + fi).abs()).max(1.0).ln();
        ln_bound += rho.ln();
    }
    let nf = n_max as f64;
    if nf + 1.0 + b <= 0.0 || nf + 1.0 + b_prime <= 0.0 {
        return f64::INFINITY;
    }
    let q = rho
        * (1.0 + (d - 1.0).abs() / (nf + 2.0))
        * (1.0 + (a - b).abs() / (nf + 1.0 + b))
        * (1.0 + (a_prime - b_prime).abs() / (nf + 1.0 + b_prime));
    if q >= 1.0 {
        return f64::INFINITY;
    }
    ln_bound.exp() / (1.0 - q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let (nodes, weights) = gauss_legendre();
        let total: f64 = weights.iter().sum();
        assert_relative_eq!(total, 2.0, max_relative = 1e-14);
        // int_{-1}^{1} x^38 = 2/39
        let m: f64 = nodes.iter().zip(weights).map(|(x, w)| w * x.powi(38)).sum();
        assert_relative_eq!(m, 2.0 / 39.0, max_relative = 1e-13);
    }

    #[test]
    fn gamma_integrals() {
        let r = integrate_semiinfinite(|t| (-t).exp(), 1e-12).unwrap();
        assert_relative_eq!(r.value, 1.0, max_relative = 1e-12);
        assert!(r.converged);
        let r = integrate_semiinfinite(|t| t * (-2.0 * t).exp(), 1e-12).unwrap();
        assert_relative_eq!(r.value, 0.25, max_relative = 1e-12);
        let r = integrate_semiinfinite(|t: f64| t.powf(1.5) * (-t).exp(), 1e-12).unwrap();
        assert_relative_eq!(r.value, 0.75 * PI.sqrt(), max_relative = 1e-12);
        for d in [0.5f64, 1.0, 2.5, 7.0] {
            for h in [0.5f64, 1.0, 3.0] {
                let r = integrate_semiinfinite_scaled(
                    |t: f64| t.powf(d - 1.0) * (-h * t).exp(),
                    1e-12,
                    (d / h).max(1.0),
                    1.0 / h,
                )
                .unwrap();
                let exact = gamma(d).unwrap() * h.powf(-d);
                assert_relative_eq!(r.value, exact, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn non_finite_integrand() {
        assert!(matches!(
            integrate_semiinfinite(|t| 1.0 / (t - 0.5), 1e-10),
            Err(Error::Quadrature(_)) | Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn bruteforce_values() {
        let p = F2Params::new(1.7, 0.3, 0.8, 1.1, 2.4, 0.0, 0.0);
        assert_eq!(f2_bruteforce(&p, 15).unwrap(), 1.0);
        // F2(d; a, a'; d, a'; x, y) = (1-y)^{a-d} (1-x-y)^{-a}
        let p = F2Params::new(3.0, 1.0, 2.0, 3.0, 2.0, 0.2, 0.3);
        assert_relative_eq!(f2_bruteforce(&p, 15).unwrap(), 2.0 / 0.49, max_relative = 1e-13);
        // mpmath.appellf2(2.5, 0.5, 1.5, 2, 3, 0.3, 0.4)
        let p = F2Params::new(2.5, 0.5, 1.5, 2.0, 3.0, 0.3, 0.4);
        assert_relative_eq!(
            f2_bruteforce(&p, 15).unwrap(),
            2.609_473_465_631_305,
            max_relative = 1e-13
        );
        let p = F2Params::new(2.5, 0.5, 1.5, 2.0, 3.0, 0.6, 0.4);
        assert!(matches!(f2_bruteforce(&p, 15), Err(Error::Domain(_))));
    }
}

use crate::error::{Error, Result};
use crate::oracle::{integrate_semiinfinite_scaled, QuadratureResult};
use crate::special::{exact_nonpositive_integer, hyp1f1, pochhammer, factorial};

/// Term tolerance for series evaluated inside quadrature integrands.
pub(crate) const INTEGRAND_TOL: f64 = 1e-16;

/// Margin, in e-folds, between the envelope peak and the truncation point.
const TAIL_MARGIN: f64 = 60.0;

/// Asymptotic shape `t^power e^{-rate t}` of an integrand. It places the
/// quadrature split, the tail map's length scale, and a truncation point
/// beyond which the integrand is negligible and its factors might overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub power: f64,
    pub rate: f64,
}

impl Envelope {
    pub fn new(power: f64, rate: f64) -> Self {
        Envelope { power, rate }
    }

    fn reference(&self) -> f64 {
        if self.power > 0.0 {
            self.power / self.rate
        } else {
            1.0 / self.rate
        }
    }

    pub fn split(&self) -> f64 {
        self.reference().max(1.0)
    }

    /// Smallest `t` (up to a factor 1.5) past the peak where the envelope has
    /// dropped by `e^-60`.
    pub fn cutoff(&self) -> f64 {
        let p = self.power.max(0.0);
        let g = |t: f64| self.rate * t - p * t.ln();
        let t0 = self.reference();
        let target = g(t0) + TAIL_MARGIN;
        let mut t = t0 + TAIL_MARGIN / self.rate;
        while g(t) < target {
            t *= 1.5;
        }
        t
    }

    /// Quadrature of `f` over the half-line, truncated at [`Self::cutoff`].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, tol: f64) -> Result<QuadratureResult> {
        if !(self.rate > 0.0) || !self.rate.is_finite() {
            return Err(Error::Domain(format!(
                "integrand does not decay (rate {})",
                self.rate
            )));
        }
        let cut = self.cutoff();
        integrate_semiinfinite_scaled(
            |t| if t > cut { 0.0 } else { f(t) },
            tol,
            self.split(),
            1.0 / self.rate,
        )
    }
}

/// One factor `1F1(a; b; kt)` of an integrand, evaluated as
/// `e^{-max(k,0) t} 1F1(a; b; kt)` so the exponential growth is carried by the
/// weight instead. Terminating factors are expanded into explicit polynomial
/// coefficients once.
#[derive(Debug, Clone, PartialEq)]
pub struct KummerFactor {
    pub a: f64,
    pub b: f64,
    pub k: f64,
    poly: Option<Vec<f64>>,
}

impl KummerFactor {
    pub fn new(a: f64, b: f64, k: f64) -> Self {
        let poly = exact_nonpositive_integer(a).map(|n| {
            let n = n as usize;
            (0..=n)
                .map(|j| pochhammer(a, j) / pochhammer(b, j) * k.powi(j as i32) / factorial(j))
                .collect()
        });
        KummerFactor { a, b, k, poly }
    }

    pub fn is_polynomial(&self) -> bool {
        self.poly.is_some()
    }

    /// Exponential growth rate of the factor in `t`.
    pub fn growth_rate(&self) -> f64 {
        if self.poly.is_some() {
            0.0
        } else {
            self.k.max(0.0)
        }
    }

    /// `|k|` unless the factor is a polynomial.
    pub fn abs_growth(&self) -> f64 {
        if self.poly.is_some() {
            0.0
        } else {
            self.k.abs()
        }
    }

    /// Rough power of `t` in the large-`t` behaviour after damping.
    pub fn power_bound(&self) -> f64 {
        match &self.poly {
            Some(c) => (c.len() - 1) as f64,
            None if self.k > 0.0 => (self.a - self.b).max(0.0),
            None if self.k < 0.0 => (-self.a).max(0.0),
            None => 0.0,
        }
    }

    /// `e^{-max(k,0) t} 1F1(a; b; kt)`, undamped for polynomials; NaN if the
    /// series fails.
    pub fn damped(&self, t: f64) -> f64 {
        let x = self.k * t;
        match &self.poly {
            Some(c) => c.iter().rev().fold(0.0, |acc, &cj| acc * t + cj),
            // Kummer's transformation: e^{-x} M(a, b, x) = M(b - a, b, -x).
            None if x > 0.0 => hyp1f1(self.b - self.a, self.b, -x, INTEGRAND_TOL)
                .map_or(f64::NAN, |e| e.value),
            None => hyp1f1(self.a, self.b, x, INTEGRAND_TOL).map_or(f64::NAN, |e| e.value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn damped_factors() {
        let f = KummerFactor::new(0.7, 0.7, 2.0);
        assert_relative_eq!(f.damped(3.0), 1.0, max_relative = 1e-13);
        let p = KummerFactor::new(-2.0, 3.0, 1.5);
        assert!(p.is_polynomial());
        // 1F1(-2; 3; x) = 1 - 2x/3 + x^2/12
        let x: f64 = 1.5 * 2.0;
        assert_relative_eq!(
            p.damped(2.0),
            1.0 - 2.0 * x / 3.0 + x * x / 12.0,
            max_relative = 1e-14
        );
        let n = KummerFactor::new(0.5, 1.5, -4.0);
        assert_relative_eq!(
            n.damped(1.0),
            hyp1f1(0.5, 1.5, -4.0, 1e-15).unwrap().value,
            max_relative = 1e-14
        );
    }

    #[test]
    fn envelope_integrates_gamma() {
        let env = Envelope::new(2.5, 0.7);
        assert!(env.cutoff() > 60.0 / 0.7);
        let q = env.integrate(|t| t.powf(2.5) * (-0.7 * t).exp(), 1e-12).unwrap();
        let exact = crate::special::gamma(3.5).unwrap() * 0.7f64.powf(-3.5);
        assert_relative_eq!(q.value, exact, max_relative = 1e-11);
        assert!(Envelope::new(1.0, 0.0).integrate(|_| 1.0, 1e-10).is_err());
    }
}

//! Laplace-type integrals `int_0^inf t^{d-1} e^{-ht} 1F1(a; b; kt) 1F1(a'; b'; k't) dt`
//! and the closed forms derived from them.
//!
//! The closed routes go through [`crate::appell::f2_eval`]; every one of them
//! has a quadrature counterpart built on [`crate::oracle`] so it can be
//! checked independently.

mod catalog;
mod integrand;
mod landau;
mod squares;

pub use catalog::{appendix_entry, appendix_identity, AppendixEntry, APPENDIX};
pub use integrand::{Envelope, KummerFactor};
pub use landau::{landau_lifshitz_j, landau_lifshitz_j_check, JMethod, JspParams};
pub use squares::confluent_square_checks;

use serde::{Deserialize, Serialize};

use crate::appell::{f2_eval, F2Params};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{exact_nonpositive_integer, gamma, hyp2f1, Evaluation, Method};

/// Tolerance handed to the quadrature oracle when cross-checking closed forms.
pub const ORACLE_TOL: f64 = 1e-11;

/// `int_0^inf t^{d-1} e^{-ht} 1F1(a; b; kt) 1F1(a'; b'; k't) dt`.
///
/// The second factor is optional; without it the integral is the single
/// confluent transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaplaceProductSpec {
    pub d: f64,
    pub h: f64,
    pub a: f64,
    pub b: f64,
    pub k: f64,
    pub second: Option<SecondFactor>,
}

/// The triple `(a', b', k')` of the second confluent factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecondFactor {
    pub a_prime: f64,
    pub b_prime: f64,
    pub k_prime: f64,
}

impl LaplaceProductSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(d: f64, h: f64, a: f64, b: f64, k: f64, a_prime: f64, b_prime: f64, k_prime: f64) -> Self {
        LaplaceProductSpec {
            d,
            h,
            a,
            b,
            k,
            second: Some(SecondFactor { a_prime, b_prime, k_prime }),
        }
    }

    pub fn single(d: f64, h: f64, a: f64, b: f64, k: f64) -> Self {
        LaplaceProductSpec { d, h, a, b, k, second: None }
    }

    /// The second factor, with `1F1(0; 1; 0) = 1` standing in when absent.
    fn second_or_unit(&self) -> SecondFactor {
        self.second.unwrap_or(SecondFactor {
            a_prime: 0.0,
            b_prime: 1.0,
            k_prime: 0.0,
        })
    }

    fn factors(&self) -> [KummerFactor; 2] {
        let s = self.second_or_unit();
        [
            KummerFactor::new(self.a, self.b, self.k),
            KummerFactor::new(s.a_prime, s.b_prime, s.k_prime),
        ]
    }

    /// Check `d > 0`, `h > 0` and absolute convergence: the `|k|` of every
    /// non-terminating factor must sum to less than `h`.
    pub fn validate(&self) -> Result<()> {
        let all = [self.d, self.h, self.a, self.b, self.k];
        let s = self.second_or_unit();
        if !all.iter().chain(&[s.a_prime, s.b_prime, s.k_prime]).all(|v| v.is_finite()) {
            return Err(Error::Parameter("non-finite integral parameter".into()));
        }
        if !(self.d > 0.0) {
            return Err(Error::Domain(format!("needs d > 0, got {}", self.d)));
        }
        if !(self.h > 0.0) {
            return Err(Error::Domain(format!("needs h > 0, got {}", self.h)));
        }
        let growth: f64 = self.factors().iter().map(|f| f.abs_growth()).sum();
        if !(growth < self.h) {
            return Err(Error::Domain(format!(
                "needs |k| + |k'| < h over the non-terminating factors, got {growth} >= {}",
                self.h
            )));
        }
        Ok(())
    }

    /// `F2(d; a, a'; b, b'; k/h, k'/h)`.
    pub fn f2_params(&self) -> F2Params {
        let s = self.second_or_unit();
        F2Params::new(
            self.d,
            self.a,
            s.a_prime,
            self.b,
            s.b_prime,
            self.k / self.h,
            s.k_prime / self.h,
        )
    }

    /// The integrand and its envelope, for the quadrature oracle.
    pub fn integrand(&self) -> (impl Fn(f64) -> f64 + '_, Envelope) {
        let [f, g] = self.factors();
        let rate = self.h - f.growth_rate() - g.growth_rate();
        let power = self.d - 1.0 + f.power_bound() + g.power_bound();
        let d = self.d;
        let func = move |t: f64| t.powf(d - 1.0) * (-rate * t).exp() * f.damped(t) * g.damped(t);
        (func, Envelope::new(power, rate))
    }
}

/// `Gamma(d) h^{-d}`, through logarithms so large `d` does not overflow early.
fn gamma_weight(d: f64, h: f64) -> Result<f64> {
    if d < 170.0 {
        Ok(gamma(d)? * h.powf(-d))
    } else {
        let (lg, sign) = crate::special::ln_gamma(d)?;
        Ok(sign * (lg - d * h.ln()).exp())
    }
}

/// The product integral as `Gamma(d) h^{-d} F2(d; a, a'; b, b'; k/h, k'/h)`.
pub fn laplace_product(spec: &LaplaceProductSpec, tol: f64) -> Result<Evaluation> {
    spec.validate()?;
    let scale = gamma_weight(spec.d, spec.h)?;
    Ok(f2_eval(&spec.f2_params(), tol)?.scaled(scale))
}

/// `int_0^inf t^{d-1} e^{-ht} 1F1(a; b; kt) dt = Gamma(d) h^{-d} 2F1(d, a; b; k/h)`.
///
/// Converges for `k < h`, or for any `k` when `a` is a nonpositive integer.
pub fn laplace_single(d: f64, h: f64, a: f64, b: f64, k: f64, tol: f64) -> Result<Evaluation> {
    if !(d > 0.0) || !(h > 0.0) {
        return Err(Error::Domain(format!("needs d > 0 and h > 0, got d = {d}, h = {h}")));
    }
    if exact_nonpositive_integer(a).is_none() && !(k < h) {
        return Err(Error::Domain(format!("needs k < h, got k = {k}, h = {h}")));
    }
    let scale = gamma_weight(d, h)?;
    Ok(hyp2f1(d, a, b, k / h, tol)?
        .scaled(scale)
        .with_method(Method::ClosedForm))
}

/// The closed route of [`laplace_product`] against quadrature of the
/// integrand. `lhs` is the quadrature value.
pub fn laplace_product_check(spec: &LaplaceProductSpec, tol: f64) -> Result<IdentityReport> {
    let closed = laplace_product(spec, tol).map_err(|e| e.on_side("rhs"))?;
    let (f, env) = spec.integrand();
    let quad = env.integrate(f, ORACLE_TOL.max(tol)).map_err(|e| e.on_side("lhs"))?;
    Ok(IdentityReport::new(
        "laplace_product",
        quad.value,
        closed.value,
        Method::Quadrature,
        closed.method,
    ))
}

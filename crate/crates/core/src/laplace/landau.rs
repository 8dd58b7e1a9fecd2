use serde::{Deserialize, Serialize};

use super::integrand::{Envelope, KummerFactor};
use super::ORACLE_TOL;
use crate::appell::{f2_continuation_lemma6, f2_eval, ContinuationForm, ContinuationParams};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{
    exact_nonpositive_integer, gamma, hyp2f1, near_nonpositive_integer, real_pow, Evaluation,
    Method,
};

/// Relative tolerance on `h = (k + k')/2` for the closed form.
const MIDPOINT_TOL: f64 = 1e-12;

/// `J = int_0^inf t^{g-1+s} e^{-ht} 1F1(a; g; kt) 1F1(a'; g-p; k't) dt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JspParams {
    pub gamma: f64,
    pub s: u32,
    pub p: u32,
    pub a: f64,
    pub a_prime: f64,
    pub k: f64,
    pub k_prime: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JMethod {
    /// The continuation, falling back to the general `F2` evaluator.
    Auto,
    /// The `2F1` closed form for `s = p = 0` and `h = (k + k')/2`.
    Gordon,
    /// The finite `2F1` re-expansion of `F2(g+s; a, a'; g, g-p; k/h, k'/h)`.
    Continuation,
}

impl JspParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(gamma: f64, s: u32, p: u32, a: f64, a_prime: f64, k: f64, k_prime: f64, h: f64) -> Self {
        JspParams { gamma, s, p, a, a_prime, k, k_prime, h }
    }

    fn terminating(&self) -> bool {
        exact_nonpositive_integer(self.a).is_some()
            && exact_nonpositive_integer(self.a_prime).is_some()
    }

    pub fn validate(&self) -> Result<()> {
        let JspParams { gamma, p, k, k_prime, h, .. } = *self;
        if ![gamma, self.a, self.a_prime, k, k_prime, h].iter().all(|v| v.is_finite()) {
            return Err(Error::Parameter("non-finite J parameter".into()));
        }
        if !(h > 0.0) {
            return Err(Error::Domain(format!("needs h > 0, got {h}")));
        }
        let lower = gamma - p as f64;
        if near_nonpositive_integer(gamma).is_some() || near_nonpositive_integer(lower).is_some() {
            return Err(Error::Parameter(format!(
                "gamma = {gamma} and gamma - p = {lower} must not be nonpositive integers"
            )));
        }
        if !(gamma + self.s as f64 > 0.0) {
            return Err(Error::Domain(format!(
                "needs gamma + s > 0, got {}",
                gamma + self.s as f64
            )));
        }
        if !self.terminating() && !(k.abs() + k_prime.abs() < h) {
            return Err(Error::Domain(format!(
                "needs |k| + |k'| < h unless a and a' are nonpositive integers, got |k| + |k'| = {}, h = {h}",
                k.abs() + k_prime.abs()
            )));
        }
        Ok(())
    }

    fn continuation_params(&self) -> ContinuationParams {
        ContinuationParams::new(self.gamma, self.s, self.p, self.a, self.a_prime, self.k, self.k_prime, self.h)
    }

    /// `h^{-g-s} Gamma(g+s)`.
    fn weight(&self) -> Result<f64> {
        let e = self.gamma + self.s as f64;
        Ok(gamma(e)? * self.h.powf(-e))
    }

    /// The integrand, with terminating factors expanded as polynomials.
    pub fn integrand(&self) -> (impl Fn(f64) -> f64, Envelope) {
        let f = KummerFactor::new(self.a, self.gamma, self.k);
        let g = KummerFactor::new(self.a_prime, self.gamma - self.p as f64, self.k_prime);
        let rate = self.h - f.growth_rate() - g.growth_rate();
        let e = self.gamma - 1.0 + self.s as f64;
        let env = Envelope::new(e + f.power_bound() + g.power_bound(), rate);
        (move |t: f64| t.powf(e) * (-rate * t).exp() * f.damped(t) * g.damped(t), env)
    }
}

/// `J` for `s = p = 0`, `h = (k + k')/2`:
/// `2^g Gamma(g) (k+k')^{a+a'-g} (k'-k)^{-a} (k-k')^{-a'} 2F1(a, a'; g; -4kk'/(k'-k)^2)`.
///
/// One of `k' - k`, `k - k'` is negative, so the matching exponent must be an
/// integer; otherwise the branch is ambiguous and a branch error is returned.
fn gordon(p: &JspParams, tol: f64) -> Result<Evaluation> {
    if p.s != 0 || p.p != 0 {
        return Err(Error::Method(format!(
            "closed form needs s = p = 0, got s = {}, p = {}",
            p.s, p.p
        )));
    }
    let JspParams { gamma: g, a, a_prime, k, k_prime, h, .. } = *p;
    let mid = 0.5 * (k + k_prime);
    if (h - mid).abs() > MIDPOINT_TOL * h {
        return Err(Error::Precondition(format!(
            "closed form needs h = (k + k')/2 = {mid}, got h = {h}"
        )));
    }
    if k == k_prime {
        return Err(Error::Singular("closed form needs k != k'".into()));
    }
    let pre = 2f64.powf(g)
        * gamma(g)?
        * real_pow(k + k_prime, a + a_prime - g)?
        * real_pow(k_prime - k, -a)?
        * real_pow(k - k_prime, -a_prime)?;
    let z = -4.0 * k * k_prime / ((k_prime - k) * (k_prime - k));
    Ok(hyp2f1(a, a_prime, g, z, tol)?
        .scaled(pre)
        .with_method(Method::ClosedForm))
}

fn continuation(p: &JspParams, tol: f64) -> Result<Evaluation> {
    let ev = f2_continuation_lemma6(&p.continuation_params(), ContinuationForm::Hyp2F1, tol)?;
    if !ev.value.is_finite() {
        return Err(Error::NonConvergence {
            what: "finite continuation (non-finite value)".into(),
            terms: ev.terms,
        });
    }
    Ok(ev.scaled(p.weight()?))
}

/// Evaluate `J = h^{-g-s} Gamma(g+s) F2(g+s; a, a'; g, g-p; k/h, k'/h)`.
pub fn landau_lifshitz_j(p: &JspParams, method: JMethod, tol: f64) -> Result<Evaluation> {
    p.validate()?;
    match method {
        JMethod::Gordon => gordon(p, tol),
        JMethod::Continuation => continuation(p, tol),
        JMethod::Auto => continuation(p, tol).or_else(|first| {
            let target = p.continuation_params().lemma6_target();
            f2_eval(&target, tol)
                .map(|ev| ev.scaled(p.weight().unwrap_or(f64::NAN)))
                .map_err(|e| match e {
                    Error::NoStrategy { mut tried } => {
                        tried.insert(0, format!("continuation: {first}"));
                        Error::NoStrategy { tried }
                    }
                    other => other,
                })
        }),
    }
}

/// [`landau_lifshitz_j`] against quadrature of the integrand (`lhs`).
pub fn landau_lifshitz_j_check(p: &JspParams, method: JMethod, tol: f64) -> Result<IdentityReport> {
    let closed = landau_lifshitz_j(p, method, tol).map_err(|e| e.on_side("rhs"))?;
    let (f, env) = p.integrand();
    let quad = env.integrate(f, ORACLE_TOL.max(tol)).map_err(|e| e.on_side("lhs"))?;
    Ok(IdentityReport::new("J", quad.value, closed.value, Method::Quadrature, closed.method))
}

use serde::{Deserialize, Serialize};

use super::kummer_polynomial;
use crate::error::{Error, Result};
use crate::laplace::Envelope;
use crate::oracle::QuadratureResult;
use crate::special::{factorial, gamma, ln_gamma, pochhammer, CompensatedSum};

/// Eigenbasis of `-d^2/dx^2 + x^2 + A/x^2` on the half-line with a
/// Dirichlet condition at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorBasis {
    /// The `A/x^2` coupling.
    #[serde(rename = "A")]
    pub coupling: f64,
    /// `1 + sqrt(1 + 4A)/2`.
    pub gamma: f64,
}

impl OscillatorBasis {
    pub fn from_coupling(coupling: f64) -> Result<Self> {
        if !(coupling >= 0.0) || !coupling.is_finite() {
            return Err(Error::Parameter(format!("needs A >= 0, got {coupling}")));
        }
        Ok(OscillatorBasis {
            coupling,
            gamma: 1.0 + 0.5 * (1.0 + 4.0 * coupling).sqrt(),
        })
    }

    pub fn from_gamma(gamma: f64) -> Result<Self> {
        if !(gamma >= 1.5) || !gamma.is_finite() {
            return Err(Error::Parameter(format!("needs gamma >= 3/2, got {gamma}")));
        }
        let root = 2.0 * (gamma - 1.0);
        Ok(OscillatorBasis {
            coupling: ((root * root - 1.0) / 4.0).max(0.0),
            gamma,
        })
    }

    /// `ln (gamma)_n`.
    fn ln_poch(&self, n: usize) -> f64 {
        ln_gamma(self.gamma + n as f64).map_or(f64::NAN, |v| v.0)
            - ln_gamma(self.gamma).map_or(f64::NAN, |v| v.0)
    }
}

/// `E_n = 2(2n + gamma)`.
pub fn gk_energy(n: usize, basis: &OscillatorBasis) -> f64 {
    2.0 * (2.0 * n as f64 + basis.gamma)
}

/// `(-1)^n sqrt(2 (g)_n / (n! Gamma(g))) x^{g-1/2} e^{-x^2/2} 1F1(-n; g; x^2)`,
/// assembled from logarithms so the power and the Gaussian cannot overflow
/// against each other.
pub fn gk_wavefunction(n: usize, basis: &OscillatorBasis, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let g = basis.gamma;
    let poly = kummer_polynomial(n, g, x * x);
    if poly == 0.0 {
        return 0.0;
    }
    let ln_norm = 0.5
        * (2f64.ln() + basis.ln_poch(n) - ln_gamma(n as f64 + 1.0).map_or(f64::NAN, |v| v.0)
            - ln_gamma(g).map_or(f64::NAN, |v| v.0));
    let ln_mag = ln_norm + (g - 0.5) * x.ln() - 0.5 * x * x + poly.abs().ln();
    let sign = if n % 2 == 1 { -1.0 } else { 1.0 } * poly.signum();
    sign * ln_mag.exp()
}

/// `<psi_n | psi_m>` from `F2(g; -n, -m; g, g; 1, 1) = n! delta_nm / (g)_n`,
/// with the normalisations of both states applied.
///
/// The double sum is taken row by row, each row being the terminating Gauss
/// sum `2F1(-m, g + i; g; 1) = (-i)_m / (g)_m`; summing the rectangle
/// directly loses about `10^-8` to cancellation by `n = 10`.
pub fn gk_overlap(n: usize, m: usize, basis: &OscillatorBasis) -> Result<f64> {
    let g = basis.gamma;
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::Parameter(format!("needs gamma > 0, got {g}")));
    }
    let mut acc = CompensatedSum::new();
    // (g)_i (-n)_i / ((g)_i i!) = (-n)_i / i!
    let mut lead = 1.0;
    for i in 0..=n {
        acc.add(lead * pochhammer(-(i as f64), m));
        lead *= (i as f64 - n as f64) / (i as f64 + 1.0);
    }
    let f2 = acc.value() / pochhammer(g, m);
    let sign = if (n + m) % 2 == 1 { -1.0 } else { 1.0 };
    let norm = (0.5 * (basis.ln_poch(n) + basis.ln_poch(m))).exp()
        / (factorial(n) * factorial(m)).sqrt();
    Ok(sign * norm * f2)
}

/// `<psi_m | x^{-alpha} | psi_n>` in closed form, for `2 gamma > alpha`.
///
/// The terminating `3F2(-m, g - alpha/2, 1 - alpha/2; g, 1 - alpha/2 - n; 1)`
/// is summed with `(alpha/2)_n` absorbed into each term,
/// `(alpha/2)_n / (1 - alpha/2 - n)_k = (-1)^n (1 - alpha/2 - n + k)_{n-k}` for
/// `k <= n` and `(-1)^n / (1 - alpha/2)_{k-n}` beyond, so a lower parameter at a
/// nonpositive integer never divides and neither orientation can fail.
pub fn spiked_matrix_element(n: usize, m: usize, basis: &OscillatorBasis, alpha: f64) -> Result<f64> {
    let g = basis.gamma;
    if !(2.0 * g > alpha) || !alpha.is_finite() {
        return Err(Error::Domain(format!("needs 2 gamma > alpha, got gamma = {g}, alpha = {alpha}")));
    }
    let h = alpha / 2.0;
    let mut acc = CompensatedSum::new();
    // (-m)_k (g - h)_k / ((g)_k k!)
    let mut lead = 1.0;
    for k in 0..=m {
        let absorbed = if k <= n {
            pochhammer(1.0 - h, k) * pochhammer(1.0 - h - n as f64 + k as f64, n - k)
        } else {
            pochhammer(1.0 - h + (k - n) as f64, n)
        };
        acc.add(lead * absorbed);
        let kf = k as f64;
        lead *= (kf - m as f64) * (g - h + kf) / ((g + kf) * (kf + 1.0));
    }
    let parity = if m % 2 == 1 { -1.0 } else { 1.0 };
    let pre = parity * gamma(g - h)? / gamma(g)? / pochhammer(g, n)
        * (pochhammer(g, n) * pochhammer(g, m) / (factorial(n) * factorial(m))).sqrt();
    Ok(pre * acc.value())
}

/// `<psi_n | x^{-alpha} | psi_m>` by quadrature in `u = x^2`.
pub fn gk_element_quadrature(
    n: usize,
    m: usize,
    basis: &OscillatorBasis,
    alpha: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    let env = Envelope::new(basis.gamma - 1.0 - alpha / 2.0 + (n + m) as f64, 1.0);
    env.integrate(
        |u| {
            let x = u.sqrt();
            gk_wavefunction(n, basis, x) * gk_wavefunction(m, basis, x) * u.powf(-alpha / 2.0) / (2.0 * x)
        },
        tol,
    )
}

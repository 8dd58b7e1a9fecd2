use serde::{Deserialize, Serialize};

use super::kummer_polynomial;
use crate::error::{Error, Result};
use crate::laplace::Envelope;
use crate::oracle::QuadratureResult;
use crate::special::{
    factorial, gamma, hyp2f1, ln_gamma, pochhammer, CompensatedSum, DEFAULT_TOL,
};

/// Radial eigenbasis of the potential `-B/r + A/r^2` at angular momentum `l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KratzerBasis {
    #[serde(rename = "A")]
    pub coupling: f64,
    #[serde(rename = "B")]
    pub strength: f64,
    pub l: u32,
    /// `-1/2 + sqrt(4A + (2l+1)^2)/2`.
    pub s: f64,
}

impl KratzerBasis {
    pub fn new(coupling: f64, strength: f64, l: u32) -> Result<Self> {
        if !(coupling >= 0.0) || !coupling.is_finite() {
            return Err(Error::Parameter(format!("needs A >= 0, got {coupling}")));
        }
        if !(strength > 0.0) || !strength.is_finite() {
            return Err(Error::Parameter(format!("needs B > 0, got {strength}")));
        }
        let w = 2.0 * l as f64 + 1.0;
        let s = if coupling == 0.0 {
            l as f64
        } else {
            -0.5 + 0.5 * (4.0 * coupling + w * w).sqrt()
        };
        Ok(KratzerBasis { coupling, strength, l, s })
    }

    /// `B / (n + s + 1)`, the decay constant of state `n`.
    fn beta(&self, n: usize) -> f64 {
        self.strength / (n as f64 + self.s + 1.0)
    }
}

/// `E_n = -B^2 / (4 (n + s + 1)^2)`.
pub fn kratzer_energy(n: usize, basis: &KratzerBasis) -> f64 {
    let q = n as f64 + basis.s + 1.0;
    -basis.strength * basis.strength / (4.0 * q * q)
}

/// `C_n` with `C_n^{-2} = 2 B^{-2s-3} (s+n+1)^{2s+4} Gamma(2s+2) n! / (2s+2)_n`.
pub fn kratzer_normalization(n: usize, basis: &KratzerBasis) -> f64 {
    let s = basis.s;
    let nf = n as f64;
    let ln_inv_sq = 2f64.ln() - (2.0 * s + 3.0) * basis.strength.ln()
        + (2.0 * s + 4.0) * (s + nf + 1.0).ln()
        + ln_gamma(nf + 1.0).map_or(f64::NAN, |v| v.0)
        + ln_gamma(2.0 * s + 2.0).map_or(f64::NAN, |v| v.0)
        - (ln_gamma(2.0 * s + 2.0 + nf).map_or(f64::NAN, |v| v.0)
            - ln_gamma(2.0 * s + 2.0).map_or(f64::NAN, |v| v.0));
    (-0.5 * ln_inv_sq).exp()
}

/// Normalised `C_n r^s e^{-beta r/2} 1F1(-n; 2s+2; beta r)`, `beta = B/(n+s+1)`.
pub fn kratzer_wavefunction(n: usize, basis: &KratzerBasis, r: f64) -> f64 {
    if r < 0.0 {
        return f64::NAN;
    }
    let beta = basis.beta(n);
    let poly = kummer_polynomial(n, 2.0 * basis.s + 2.0, beta * r);
    kratzer_normalization(n, basis) * r.powf(basis.s) * (-0.5 * beta * r).exp() * poly
}

/// `<psi_n | r^alpha | psi_m>` in closed form, `alpha > 0`.
///
/// Off the diagonal this is the finite sum
/// `sum_{k<=n} (D)_k (-n)_k / ((2s+2)_k k!) X^k 2F1(D+k, -m; 2s+2; Y)` with
/// `D = 2s+3+alpha`, `X = 2(m+s+1)/(n+m+2s+2)`, `Y = 2(n+s+1)/(n+m+2s+2)`.
/// On it, the terminating `3F2(-n, D, 2+alpha; 2s+2, 2+alpha-n; 1)` with
/// `(-1-alpha)_n` absorbed term by term.
pub fn kratzer_matrix_element(n: usize, m: usize, basis: &KratzerBasis, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("needs alpha > 0, got {alpha}")));
    }
    if n == m {
        diagonal(n, basis, alpha)
    } else {
        off_diagonal(n, m, basis, alpha)
    }
}

fn off_diagonal(n: usize, m: usize, basis: &KratzerBasis, alpha: f64) -> Result<f64> {
    let s = basis.s;
    let d = 2.0 * s + 3.0 + alpha;
    let c = 2.0 * s + 2.0;
    let (nf, mf) = (n as f64, m as f64);
    let total = nf + mf + c;
    let x = 2.0 * (mf + s + 1.0) / total;
    let y = 2.0 * (nf + s + 1.0) / total;
    let mut acc = CompensatedSum::new();
    let mut coef = 1.0;
    for k in 0..=n {
        let kf = k as f64;
        acc.add(coef * hyp2f1(d + kf, -mf, c, y, DEFAULT_TOL)?.value);
        coef *= (d + kf) * (kf - nf) * x / ((c + kf) * (kf + 1.0));
    }
    let rate = 0.5 * (basis.beta(n) + basis.beta(m));
    let pre = (ln_gamma(d)?.0 - d * rate.ln()).exp()
        * kratzer_normalization(n, basis)
        * kratzer_normalization(m, basis);
    Ok(pre * acc.value())
}

fn diagonal(n: usize, basis: &KratzerBasis, alpha: f64) -> Result<f64> {
    let s = basis.s;
    let d = 2.0 * s + 3.0 + alpha;
    let c = 2.0 * s + 2.0;
    let nf = n as f64;
    // (-n)_k (D)_k (2+alpha)_k / ((2s+2)_k k!) times
    // (-1-alpha)_n / (2+alpha-n)_k = (-1)^n (2+alpha-n+k)_{n-k}
    let mut acc = CompensatedSum::new();
    let mut lead = 1.0;
    for k in 0..=n {
        let kf = k as f64;
        acc.add(lead * pochhammer(2.0 + alpha - nf + kf, n - k));
        lead *= (kf - nf) * (d + kf) * (2.0 + alpha + kf) / ((c + kf) * (kf + 1.0));
    }
    let parity = if n % 2 == 1 { -1.0 } else { 1.0 };
    let pre = 0.5
        * basis.strength.powf(-alpha)
        * (nf + s + 1.0).powf(alpha - 1.0)
        * gamma(d)?
        / gamma(c)?
        / factorial(n);
    Ok(parity * pre * acc.value())
}

/// `<psi_n | r^alpha | psi_m>` with the weight `r^2` by quadrature;
/// `alpha = 0` gives the overlap.
pub fn kratzer_element_quadrature(
    n: usize,
    m: usize,
    basis: &KratzerBasis,
    alpha: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    let rate = 0.5 * (basis.beta(n) + basis.beta(m));
    let env = Envelope::new(2.0 * basis.s + 2.0 + alpha + (n + m) as f64, rate);
    env.integrate(
        |r| {
            kratzer_wavefunction(n, basis, r) * kratzer_wavefunction(m, basis, r) * r.powf(2.0 + alpha)
        },
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hydrogen_like_values() {
        let b = KratzerBasis::new(0.0, 2.0, 0).unwrap();
        assert_eq!(b.s, 0.0);
        assert_eq!(kratzer_energy(0, &b), -1.0);
        assert_eq!(kratzer_energy(1, &b), -0.25);
        assert_relative_eq!(kratzer_normalization(0, &b), 2.0, max_relative = 1e-14);
        assert_relative_eq!(kratzer_matrix_element(0, 0, &b, 1.0).unwrap(), 1.5, max_relative = 1e-14);
        assert_eq!(KratzerBasis::new(0.0, 1.0, 3).unwrap().s, 3.0);
        assert!(KratzerBasis::new(1.0, 0.0, 0).is_err());
        assert!(matches!(kratzer_matrix_element(0, 1, &b, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn normalised_states() {
        for b in [KratzerBasis::new(0.0, 2.0, 0).unwrap(), KratzerBasis::new(1.3, 1.5, 2).unwrap()] {
            for n in 0..5 {
                let q = kratzer_element_quadrature(n, n, &b, 0.0, 1e-12).unwrap().value;
                assert_relative_eq!(q, 1.0, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn elements_against_quadrature() {
        for b in [
            KratzerBasis::new(0.0, 2.0, 0).unwrap(),
            KratzerBasis::new(1.0, 2.0, 0).unwrap(),
            KratzerBasis::new(0.0, 2.0, 1).unwrap(),
        ] {
            for alpha in [0.5, 1.0, 2.0, 3.0] {
                for (n, m) in [(0, 0), (1, 0), (2, 3), (4, 4), (5, 2), (5, 5)] {
                    let c = kratzer_matrix_element(n, m, &b, alpha).unwrap();
                    let q = kratzer_element_quadrature(n, m, &b, alpha, 1e-12).unwrap().value;
                    assert!(
                        (c - q).abs() <= 1e-9 * c.abs().max(q.abs()),
                        "{b:?} alpha={alpha} ({n},{m}): {c} vs {q}"
                    );
                    let t = kratzer_matrix_element(m, n, &b, alpha).unwrap();
                    assert_relative_eq!(c, t, max_relative = 1e-10);
                }
            }
        }
    }
}

use std::collections::BTreeMap;

use rand::{Rng, RngCore};

use super::integrand::{Envelope, KummerFactor, INTEGRAND_TOL};
use super::ORACLE_TOL;
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{gamma, hyp0f1, hyp2f1, near_nonpositive_integer, Method};

/// One closed-form Laplace transform: an integrand over `(0, inf)` and the
/// value it integrates to, with the parameter region where that holds.
pub struct AppendixEntry {
    pub id: &'static str,
    pub params: &'static [&'static str],
    /// Human-readable domain conditions.
    pub condition: &'static str,
    in_domain: fn(&[f64]) -> bool,
    rhs: fn(&[f64], f64) -> Result<f64>,
    integrand: fn(&[f64], f64) -> f64,
    envelope: fn(&[f64]) -> Envelope,
    sample: fn(&mut dyn RngCore, usize) -> Vec<f64>,
}

impl std::fmt::Debug for AppendixEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AppendixEntry")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("condition", &self.condition)
            .finish()
    }
}

impl AppendixEntry {
    pub fn in_domain(&self, values: &[f64]) -> bool {
        values.len() == self.params.len()
            && values.iter().all(|v| v.is_finite())
            && (self.in_domain)(values)
    }

    pub fn rhs(&self, values: &[f64], tol: f64) -> Result<f64> {
        self.require(values)?;
        (self.rhs)(values, tol)
    }

    /// The integrand at `t`; NaN if a series inside it fails.
    pub fn integrand(&self, values: &[f64], t: f64) -> f64 {
        (self.integrand)(values, t)
    }

    /// An in-domain parameter point. `index` selects special points: the
    /// printed spot values, and the logarithmic branch where there is one.
    pub fn sample(&self, rng: &mut dyn RngCore, index: usize) -> Vec<f64> {
        (self.sample)(rng, index)
    }

    fn require(&self, values: &[f64]) -> Result<()> {
        if values.len() != self.params.len() {
            return Err(Error::Parameter(format!(
                "{} takes {} parameters ({}), got {}",
                self.id,
                self.params.len(),
                self.params.join(", "),
                values.len()
            )));
        }
        if !self.in_domain(values) {
            return Err(Error::Domain(format!(
                "{} needs {}, got {}",
                self.id,
                self.condition,
                self.describe(values)
            )));
        }
        Ok(())
    }

    pub fn describe(&self, values: &[f64]) -> String {
        self.params
            .iter()
            .zip(values)
            .map(|(n, v)| format!("{n} = {v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Quadrature of the integrand (`lhs`) against the closed form (`rhs`).
    pub fn check(&self, values: &[f64], tol: f64) -> Result<IdentityReport> {
        self.require(values)?;
        let rhs = (self.rhs)(values, tol).map_err(|e| e.on_side("rhs"))?;
        let env = (self.envelope)(values);
        let quad = env
            .integrate(|t| (self.integrand)(values, t), ORACLE_TOL.max(tol))
            .map_err(|e| e.on_side("lhs"))?;
        Ok(IdentityReport::new(
            self.id,
            quad.value,
            rhs,
            Method::Quadrature,
            Method::ClosedForm,
        ))
    }
}

pub fn appendix_entry(id: &str) -> Result<&'static AppendixEntry> {
    APPENDIX
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Check one catalogued transform at named parameter values.
pub fn appendix_identity(id: &str, params: &BTreeMap<String, f64>, tol: f64) -> Result<IdentityReport> {
    let entry = appendix_entry(id)?;
    if let Some(extra) = params.keys().find(|k| !entry.params.contains(&k.as_str())) {
        return Err(Error::Parameter(format!(
            "{} has no parameter `{extra}` (expects {})",
            entry.id,
            entry.params.join(", ")
        )));
    }
    let values = entry
        .params
        .iter()
        .map(|name| {
            params.get(*name).copied().ok_or_else(|| {
                Error::Parameter(format!("{} needs parameter `{name}`", entry.id))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    entry.check(&values, tol)
}

fn ok_lower(b: f64) -> bool {
    near_nonpositive_integer(b).is_none()
}

/// `t^power e^{-ht} 1F1(a; b; kt)` with the growth folded into the weight.
fn confluent(power: f64, h: f64, a: f64, b: f64, k: f64, t: f64) -> f64 {
    let f = KummerFactor::new(a, b, k);
    t.powf(power) * (-(h - f.growth_rate()) * t).exp() * f.damped(t)
}

fn confluent_envelope(power: f64, h: f64, a: f64, b: f64, k: f64) -> Envelope {
    let f = KummerFactor::new(a, b, k);
    Envelope::new(power + f.power_bound(), h - f.growth_rate())
}

/// `1/2 + sqrt(1 - k/h)/2`.
fn half_root(h: f64, k: f64) -> f64 {
    0.5 + 0.5 * (1.0 - k / h).sqrt()
}

/// `e^{-|k| t/2} 0F1(; b; k^2 t^2 / 16)`, which stays bounded in `t`.
fn damped_0f1(b: f64, k: f64, t: f64) -> f64 {
    let x = k * t;
    hyp0f1(b, x * x / 16.0, INTEGRAND_TOL).map_or(f64::NAN, |e| e.value) * (-0.5 * x.abs()).exp()
}

fn h_k(rng: &mut dyn RngCore) -> (f64, f64) {
    let h = rng.gen_range(0.5..3.0);
    let k = h * rng.gen_range(-0.7..0.7);
    (h, k)
}

fn nonzero_k(rng: &mut dyn RngCore, h: f64) -> f64 {
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    sign * h * rng.gen_range(0.1..0.7)
}

fn a_h_k(rng: &mut dyn RngCore, lo: f64) -> Vec<f64> {
    let a = rng.gen_range(lo..3.0);
    let (h, k) = h_k(rng);
    vec![a, h, k]
}

const A_H_K: &[&str] = &["a", "h", "k"];

/// The catalogued transforms, in printed order.
pub static APPENDIX: [AppendixEntry; 21] = [
    AppendixEntry {
        id: "I.1",
        params: &["d", "h", "k", "a"],
        condition: "d > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1] && ok_lower(p[0]),
        rhs: |p, _| Ok(gamma(p[0])? * p[1].powf(-p[0]) * (1.0 - p[2] / p[1]).powf(-p[3])),
        integrand: |p, t| confluent(p[0] - 1.0, p[1], p[3], p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[1], p[3], p[0], p[2]),
        sample: |rng, _| {
            let d = rng.gen_range(0.5..4.0);
            let (h, k) = h_k(rng);
            vec![d, h, k, rng.gen_range(0.2..3.0)]
        },
    },
    AppendixEntry {
        id: "I.2",
        params: &["d", "a", "h"],
        condition: "d > 0, h > 0 and (a + d + 1)/2 not a nonpositive integer",
        in_domain: |p| p[0] > 0.0 && p[2] > 0.0 && ok_lower((p[1] + p[0] + 1.0) / 2.0),
        rhs: |p, _| {
            let (d, a, h) = (p[0], p[1], p[2]);
            Ok(gamma(d)? * h.powf(-d) * gamma(0.5)? * gamma((a + d + 1.0) / 2.0)?
                / (gamma((1.0 + d) / 2.0)? * gamma((1.0 + a) / 2.0)?))
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[2], p[1], (p[1] + p[0] + 1.0) / 2.0, p[2] / 2.0, t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[2], p[1], (p[1] + p[0] + 1.0) / 2.0, p[2] / 2.0),
        sample: |rng, _| vec![rng.gen_range(0.5..4.0), rng.gen_range(0.2..4.0), rng.gen_range(0.5..3.0)],
    },
    AppendixEntry {
        id: "I.3",
        params: &["a", "b", "h"],
        condition: "a > 0, h > 0, a != b and (a + b + 2)/2 not a nonpositive integer",
        in_domain: |p| {
            p[0] > 0.0 && p[2] > 0.0 && (p[0] - p[1]).abs() > 1e-8 && ok_lower((p[0] + p[1] + 2.0) / 2.0)
        },
        rhs: |p, _| {
            let (a, b, h) = (p[0], p[1], p[2]);
            let bracket = 1.0 / (gamma(a / 2.0)? * gamma((b + 1.0) / 2.0)?)
                - 1.0 / (gamma(b / 2.0)? * gamma((a + 1.0) / 2.0)?);
            Ok(2.0 * gamma(a)? * h.powf(-a) * gamma(0.5)? * gamma((a + b) / 2.0 + 1.0)? / (a - b) * bracket)
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[2], p[1], (p[0] + p[1] + 2.0) / 2.0, p[2] / 2.0, t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[2], p[1], (p[0] + p[1] + 2.0) / 2.0, p[2] / 2.0),
        sample: |rng, _| {
            let a: f64 = rng.gen_range(0.3..4.0);
            let mut b = rng.gen_range(0.2..4.0);
            if (a - b).abs() < 0.1 {
                b += 0.5;
            }
            vec![a, b, rng.gen_range(0.5..3.0)]
        },
    },
    AppendixEntry {
        id: "I.4",
        params: A_H_K,
        condition: "a > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(2.0 * a)? * (h + k) * (h - k).powf(-2.0 * a - 1.0))
        },
        integrand: |p, t| confluent(2.0 * p[0] - 1.0, p[1], p[0] + 1.0, p[0], p[2], t),
        envelope: |p| confluent_envelope(2.0 * p[0] - 1.0, p[1], p[0] + 1.0, p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.3),
    },
    AppendixEntry {
        id: "I.5",
        params: A_H_K,
        condition: "a > -1, a not a nonpositive integer, and |k| < h",
        in_domain: |p| p[0] > -1.0 && ok_lower(p[0]) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 1.0)? * h.powf(-a - 1.0) * (1.0 + k / h) * (1.0 - k / h).powf(-2.0 * a - 1.0))
        },
        integrand: |p, t| confluent(p[0], p[1], 2.0 * p[0], p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0], p[1], 2.0 * p[0], p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.6",
        params: A_H_K,
        condition: "a > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a)? * h.powf(-a) * (1.0 - k / h).powf(-0.5) * half_root(h, k).powf(1.0 - 2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.3),
    },
    AppendixEntry {
        id: "I.7",
        params: A_H_K,
        condition: "a > -1/2, a != 0, and |k| < h",
        in_domain: |p| p[0] > -0.5 && ok_lower(2.0 * p[0]) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 0.5)? * h.powf(-a - 0.5) * (1.0 - k / h).powf(-0.5) * half_root(h, k).powf(1.0 - 2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 0.5, p[1], p[0], 2.0 * p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0] - 0.5, p[1], p[0], 2.0 * p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.8",
        params: A_H_K,
        condition: "a > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a)? * h.powf(-a) * half_root(h, k).powf(1.0 - 2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[1], p[0] - 0.5, 2.0 * p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[1], p[0] - 0.5, 2.0 * p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.3),
    },
    AppendixEntry {
        id: "I.9",
        params: A_H_K,
        condition: "a > 1/2 and |k| < h",
        in_domain: |p| p[0] > 0.5 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a - 0.5)? * h.powf(0.5 - a) * half_root(h, k).powf(1.0 - 2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 1.5, p[1], p[0], 2.0 * p[0], p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.5, p[1], p[0], 2.0 * p[0], p[2]),
        sample: |rng, _| a_h_k(rng, 0.8),
    },
    AppendixEntry {
        id: "I.10",
        params: A_H_K,
        condition: "a > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a)? * h.powf(-a) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.3),
    },
    AppendixEntry {
        id: "I.11",
        params: A_H_K,
        condition: "a > -1/2 and |k| < h",
        in_domain: |p| p[0] > -0.5 && ok_lower(2.0 * p[0] + 1.0) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 0.5)? * h.powf(-a - 0.5) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 0.5, p[1], p[0], 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0] - 0.5, p[1], p[0], 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.12",
        params: A_H_K,
        condition: "a > -1, 2a + 1 != 0, and |k| < h",
        in_domain: |p| p[0] > -1.0 && ok_lower(2.0 * p[0] + 1.0) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 1.0)? * h.powf(-a - 1.0) * (1.0 - k / h).powf(-0.5) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0], p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0], p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.13",
        params: A_H_K,
        condition: "a > -1/2 and |k| < h",
        in_domain: |p| p[0] > -0.5 && ok_lower(2.0 * p[0] + 1.0) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 0.5)? * h.powf(-a - 0.5) * (1.0 - k / h).powf(-0.5) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 0.5, p[1], p[0] + 1.0, 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0] - 0.5, p[1], p[0] + 1.0, 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.14",
        params: A_H_K,
        condition: "a > -1/2 and |k| < h",
        in_domain: |p| p[0] > -0.5 && ok_lower(2.0 * p[0] + 1.0) && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a + 0.5)? * h.powf(-a - 0.5) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 0.5, p[1], p[0], 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0] - 0.5, p[1], p[0], 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.2),
    },
    AppendixEntry {
        id: "I.15",
        params: A_H_K,
        condition: "a > 0 and |k| < h",
        in_domain: |p| p[0] > 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a)? * h.powf(-a) * half_root(h, k).powf(-2.0 * a))
        },
        integrand: |p, t| confluent(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2], t),
        envelope: |p| confluent_envelope(p[0] - 1.0, p[1], p[0] + 0.5, 2.0 * p[0] + 1.0, p[2]),
        sample: |rng, _| a_h_k(rng, 0.3),
    },
    AppendixEntry {
        id: "I.16",
        params: A_H_K,
        condition: "a > -1, a != 0, k != 0 and |k| < h",
        in_domain: |p| p[0] > -1.0 && ok_lower(p[0]) && p[2] != 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            Ok(gamma(a)? / k * ((h - k).powf(-a) - h.powf(-a)))
        },
        integrand: |p, t| confluent(p[0], p[1], 1.0, 2.0, p[2], t),
        envelope: |p| confluent_envelope(p[0], p[1], 1.0, 2.0, p[2]),
        sample: |rng, _| {
            let a = rng.gen_range(0.2..3.0);
            let h = rng.gen_range(0.5..3.0);
            vec![a, h, nonzero_k(rng, h)]
        },
    },
    AppendixEntry {
        id: "I.17",
        params: A_H_K,
        condition: "k != 0 and |k| < h",
        in_domain: |p| p[2] != 0.0 && p[2].abs() < p[1],
        rhs: |p, _| {
            let (a, h, k) = (p[0], p[1], p[2]);
            if a.abs() <= 1e-12 {
                Ok(-(-k / h).ln_1p() / k)
            } else {
                Ok((-1.0 / a + h.powf(a) / (a * (h - k).powf(a))) / k)
            }
        },
        integrand: |p, t| confluent(0.0, p[1], p[0] + 1.0, 2.0, p[2], t),
        envelope: |p| confluent_envelope(0.0, p[1], p[0] + 1.0, 2.0, p[2]),
        sample: |rng, i| {
            // index 0 is the logarithmic branch a = 0
            let a = if i == 0 {
                0.0
            } else {
                let mag: f64 = rng.gen_range(0.1..2.5);
                if rng.gen_bool(0.3) { -mag.min(0.9) } else { mag }
            };
            let h = rng.gen_range(0.5..3.0);
            vec![a, h, nonzero_k(rng, h)]
        },
    },
    AppendixEntry {
        id: "I.18",
        params: &["h", "k"],
        condition: "k != 0 and |k| < h",
        in_domain: |p| p[1] != 0.0 && p[1].abs() < p[0],
        rhs: |p, _| {
            let (h, k) = (p[0], p[1]);
            Ok(-2.0 / k * (1.0 + h / k * (-k / h).ln_1p()))
        },
        integrand: |p, t| confluent(0.0, p[0], 2.0, 3.0, p[1], t),
        envelope: |p| confluent_envelope(0.0, p[0], 2.0, 3.0, p[1]),
        sample: |rng, i| {
            if i == 0 {
                return vec![2.0, 1.0];
            }
            let h = rng.gen_range(0.5..3.0);
            vec![h, nonzero_k(rng, h)]
        },
    },
    AppendixEntry {
        id: "I.19",
        params: &["a", "s", "k", "k'"],
        condition: "a > 0 and s > (|k| + |k'|)/2",
        in_domain: |p| p[0] > 0.0 && p[1] > 0.5 * (p[2].abs() + p[3].abs()),
        rhs: |p, tol| {
            let (a, s, k, kp) = (p[0], p[1], p[2], p[3]);
            let den = 4.0 * s * s - (k - kp) * (k - kp);
            let f = hyp2f1(a, a, 2.0 * a, 4.0 * k * kp / den, tol)?.value;
            Ok(4f64.powf(a) * gamma(2.0 * a)? * den.powf(-a) * f)
        },
        integrand: |p, t| {
            let (a, s, k, kp) = (p[0], p[1], p[2], p[3]);
            let rate = s - 0.5 * (k.abs() + kp.abs());
            t.powf(2.0 * a - 1.0) * (-rate * t).exp() * damped_0f1(a + 0.5, k, t) * damped_0f1(a + 0.5, kp, t)
        },
        envelope: |p| Envelope::new(2.0 * p[0] - 1.0, p[1] - 0.5 * (p[2].abs() + p[3].abs())),
        sample: |rng, _| {
            let a = rng.gen_range(0.3..3.0);
            let k = rng.gen_range(-1.5..1.5);
            let kp = rng.gen_range(-1.5..1.5);
            let s = 0.5 * (f64::abs(k) + f64::abs(kp)) * rng.gen_range(1.3..2.5) + rng.gen_range(0.1..0.5);
            vec![a, s, k, kp]
        },
    },
    AppendixEntry {
        id: "I.20",
        params: &["a", "s", "k"],
        condition: "a > 0 and s > |k|",
        in_domain: |p| p[0] > 0.0 && p[1] > p[2].abs(),
        rhs: |p, tol| {
            let (a, s, k) = (p[0], p[1], p[2]);
            let f = hyp2f1(a, a, 2.0 * a, k * k / (s * s), tol)?.value;
            Ok(gamma(2.0 * a)? * s.powf(-2.0 * a) * f)
        },
        integrand: |p, t| {
            let (a, s, k) = (p[0], p[1], p[2]);
            let g = damped_0f1(a + 0.5, k, t);
            t.powf(2.0 * a - 1.0) * (-(s - k.abs()) * t).exp() * g * g
        },
        envelope: |p| Envelope::new(2.0 * p[0] - 1.0, p[1] - p[2].abs()),
        sample: |rng, _| {
            let a = rng.gen_range(0.3..3.0);
            let k = rng.gen_range(-1.5..1.5);
            let s = f64::abs(k) * rng.gen_range(1.3..2.5) + rng.gen_range(0.1..0.5);
            vec![a, s, k]
        },
    },
    AppendixEntry {
        id: "I.21",
        params: &["s", "k"],
        condition: "k != 0 and s > |k|",
        in_domain: |p| p[1] != 0.0 && p[0] > p[1].abs(),
        rhs: |p, _| {
            let (s, k) = (p[0], p[1]);
            Ok(-(-(k * k) / (s * s)).ln_1p() / (k * k))
        },
        integrand: |p, t| {
            let (s, k) = (p[0], p[1]);
            let g = damped_0f1(1.5, k, t);
            t * (-(s - k.abs()) * t).exp() * g * g
        },
        envelope: |p| Envelope::new(1.0, p[0] - p[1].abs()),
        sample: |rng, i| {
            if i == 0 {
                return vec![2.0, 1.0];
            }
            let k = rng.gen_range(0.2..1.5) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            vec![f64::abs(k) * rng.gen_range(1.3..2.5) + rng.gen_range(0.1..0.5), k]
        },
    },
];

//! Seeded verification suites. Each suite draws its cases from a counter-based
//! generator (one ChaCha stream per case), evaluates them in parallel and
//! reports them in case order, so a seed reproduces a report byte for byte.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::appell::{
    f1_finite_sum, f1_series, f2_continuation_lemma6, f2_continuation_lemma8,
    f2_recurrence_residual, f2_series, kummer_product_expansion, lemma9_antisymmetric,
    lemma9_gauss_sum, ramanujan_product, ContinuationForm, ContinuationParams, F1Params, F2Params,
    Recurrence,
};
use crate::error::{Error, Result};
use crate::laplace::{
    confluent_square_checks, landau_lifshitz_j, laplace_product_check, JMethod, JspParams,
    LaplaceProductSpec, APPENDIX,
};
use crate::physics::{
    gk_element_quadrature, gk_overlap, kratzer_element_quadrature, kratzer_matrix_element,
    spiked_matrix_element, KratzerBasis, OscillatorBasis,
};
use crate::special::gamma;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Appendix,
    Recurrences,
    Continuations,
    Products,
    Laplace,
    Gordon,
    FiniteSum,
    Physics,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Appendix,
        Suite::Recurrences,
        Suite::Continuations,
        Suite::Products,
        Suite::Laplace,
        Suite::Gordon,
        Suite::FiniteSum,
        Suite::Physics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Appendix => "appendix",
            Suite::Recurrences => "recurrences",
            Suite::Continuations => "continuations",
            Suite::Products => "products",
            Suite::Laplace => "laplace",
            Suite::Gordon => "gordon",
            Suite::FiniteSum => "finite_sum",
            Suite::Physics => "physics",
            Suite::All => "all",
        }
    }

    fn stream_tag(self) -> u64 {
        Suite::EACH.iter().position(|&s| s == self).unwrap_or(0) as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(&s.replace('-', "_")))
            .ok_or_else(|| Error::Parameter(format!("unknown suite `{s}`")))
    }
}

/// How a case's two sides are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Residual {
    Relative,
    Absolute,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub suite: &'static str,
    pub case: usize,
    pub identity_id: String,
    pub params: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub residual: Option<f64>,
    pub residual_kind: Residual,
    pub threshold: f64,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub tol: f64,
    pub total: usize,
    pub failed: usize,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

type Job = Box<dyn Fn(f64) -> Result<(f64, f64)> + Send + Sync>;

struct Case {
    suite: Suite,
    id: String,
    params: String,
    kind: Residual,
    threshold: f64,
    job: Job,
}

impl Case {
    fn rel(suite: Suite, id: impl Into<String>, params: String, threshold: f64, job: Job) -> Self {
        Case { suite, id: id.into(), params, kind: Residual::Relative, threshold, job }
    }

    fn abs(suite: Suite, id: impl Into<String>, params: String, threshold: f64, job: Job) -> Self {
        Case { suite, id: id.into(), params, kind: Residual::Absolute, threshold, job }
    }

    fn run(&self, index: usize, tol: f64) -> CaseReport {
        let mut report = CaseReport {
            suite: self.suite.name(),
            case: index,
            identity_id: self.id.clone(),
            params: self.params.clone(),
            lhs: None,
            rhs: None,
            residual: None,
            residual_kind: self.kind,
            threshold: self.threshold,
            passed: false,
            error: None,
        };
        match (self.job)(tol) {
            Ok((lhs, rhs)) => {
                let diff = (lhs - rhs).abs();
                let residual = match self.kind {
                    Residual::Absolute => diff,
                    Residual::Relative => diff / lhs.abs().max(rhs.abs()).max(1e-300),
                };
                report.lhs = Some(lhs).filter(|v| v.is_finite());
                report.rhs = Some(rhs).filter(|v| v.is_finite());
                report.residual = Some(residual).filter(|v| v.is_finite());
                report.passed = residual <= self.threshold;
            }
            Err(e) => report.error = Some(e.to_string()),
        }
        report
    }
}

/// One generator per case: the seed picks the key, the suite and case index
/// pick the stream.
fn case_rng(seed: u64, suite: Suite, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite.stream_tag() << 32) | index as u64);
    rng
}

fn uni(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

fn sign(rng: &mut ChaCha8Rng) -> f64 {
    if rng.gen_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

fn signed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    sign(rng) * uni(rng, lo, hi)
}

/// Run a suite; `All` concatenates every suite in a fixed order.
pub fn run_suite(suite: Suite, seed: u64, tol: f64) -> Result<VerifyReport> {
    if !(tol > 0.0 && tol <= 1e-2) {
        return Err(Error::Parameter(format!("tolerance must lie in (0, 1e-2], got {tol}")));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let cases: Vec<Case> = suites.into_iter().flat_map(|s| build_cases(s, seed)).collect();
    let reports: Vec<CaseReport> = cases
        .par_iter()
        .enumerate()
        .map(|(i, c)| c.run(i, tol))
        .collect();
    let failed = reports.iter().filter(|r| !r.passed).count();
    Ok(VerifyReport { suite, seed, tol, total: reports.len(), failed, cases: reports })
}

fn build_cases(suite: Suite, seed: u64) -> Vec<Case> {
    let mut counter = 0usize;
    let mut next = || {
        let rng = case_rng(seed, suite, counter);
        counter += 1;
        rng
    };
    match suite {
        Suite::Appendix => appendix_cases(&mut next),
        Suite::Recurrences => recurrence_cases(&mut next),
        Suite::Continuations => continuation_cases(&mut next),
        Suite::Products => product_cases(&mut next),
        Suite::Laplace => laplace_cases(&mut next),
        Suite::Gordon => gordon_cases(&mut next),
        Suite::FiniteSum => finite_sum_cases(&mut next),
        Suite::Physics => physics_cases(),
        Suite::All => Vec::new(),
    }
}

const APPENDIX_POINTS: usize = 5;
const APPENDIX_TOL: f64 = 1e-8;

fn appendix_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    for entry in APPENDIX.iter() {
        for i in 0..APPENDIX_POINTS {
            let mut rng = next();
            let values = entry.sample(&mut rng, i);
            let params = entry.describe(&values);
            out.push(Case::rel(
                Suite::Appendix,
                entry.id,
                params,
                APPENDIX_TOL,
                Box::new(move |tol| {
                    let r = entry.check(&values, tol)?;
                    Ok((r.lhs, r.rhs))
                }),
            ));
        }
    }
    // The two printed logarithmic values, against quadrature.
    for (id, values, exact) in [
        ("I.18", vec![2.0, 1.0], 4.0 * 2f64.ln() - 2.0),
        ("I.21", vec![2.0, 1.0], (4.0f64 / 3.0).ln()),
    ] {
        let entry = crate::laplace::appendix_entry(id).expect("catalogued");
        out.push(Case::rel(
            Suite::Appendix,
            format!("{id} spot"),
            entry.describe(&values),
            APPENDIX_TOL,
            Box::new(move |tol| Ok((entry.check(&values, tol)?.lhs, exact))),
        ));
    }
    out
}

const RECURRENCE_POINTS: usize = 100;
const RECURRENCE_TOL: f64 = 1e-9;

fn recurrence_point(id: Recurrence, rng: &mut ChaCha8Rng) -> F2Params {
    let x = signed(rng, 0.1, 0.4);
    let y = uni(rng, -0.3, 0.3);
    let a_prime = uni(rng, 0.2, 2.5);
    let mut a = uni(rng, 0.2, 2.5);
    let b = uni(rng, 1.3, 3.0);
    let b_prime = uni(rng, 0.5, 3.0);
    match id {
        Recurrence::R3_18 => {
            let s = rng.gen_range(1..=3) as f64;
            F2Params::new(b_prime + s, a, a_prime, b, b_prime, x, y)
        }
        Recurrence::R3_19 => F2Params::new(b_prime + 1.0, a, a_prime, b, b_prime, x, y),
        Recurrence::R3_20 => F2Params::new(b + 1.0, a, a_prime, b, b, x, y),
        _ => {
            if id == Recurrence::R3_22 && (a + 1.0 - b).abs() < 0.2 {
                a += 0.5;
            }
            F2Params::new(uni(rng, 1.3, 4.0), a, a_prime, b, b_prime, x, y)
        }
    }
}

fn recurrence_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    for id in Recurrence::ALL {
        for _ in 0..RECURRENCE_POINTS {
            let p = recurrence_point(id, &mut next());
            out.push(Case::rel(
                Suite::Recurrences,
                id.id(),
                f2_describe(&p),
                RECURRENCE_TOL,
                Box::new(move |tol| {
                    let r = f2_recurrence_residual(id, &p, tol)?;
                    Ok((r.lhs, r.rhs))
                }),
            ));
        }
    }
    out
}

fn f2_describe(p: &F2Params) -> String {
    format!(
        "d = {}, a = {}, a' = {}, b = {}, b' = {}, x = {}, y = {}",
        p.d, p.a, p.a_prime, p.b, p.b_prime, p.x, p.y
    )
}

const CONTINUATION_POINTS: usize = 50;
const CONTINUATION_QUADRATURE_POINTS: usize = 20;
const CONTINUATION_TOL: f64 = 1e-9;

/// `(k, k', h)` with `|k| + |k'| <= 0.75 h` and `|k| <= kmax h`.
fn overlap_arguments(rng: &mut ChaCha8Rng, kmax: f64) -> (f64, f64, f64) {
    let h = uni(rng, 0.5, 3.0);
    let k = uni(rng, -kmax, kmax);
    let room = 0.75 - k.abs();
    let kp = uni(rng, -room, room);
    (k * h, kp * h, h)
}

fn continuation_point(rng: &mut ChaCha8Rng, lemma8: bool) -> ContinuationParams {
    let (s, p) = if lemma8 {
        let p = rng.gen_range(0..=2u32);
        (p + rng.gen_range(0..=2u32), p)
    } else {
        (rng.gen_range(0..=3u32), rng.gen_range(0..=2u32))
    };
    let c = p as f64 + uni(rng, 0.3, 2.5);
    let (k, kp, h) = overlap_arguments(rng, if lemma8 { 0.4 } else { 0.75 });
    ContinuationParams::new(c, s, p, uni(rng, 0.2, 2.5), uni(rng, 0.2, 2.5), k, kp, h)
}

fn continuation_describe(cp: &ContinuationParams) -> String {
    format!(
        "c = {}, s = {}, p = {}, a = {}, a' = {}, k = {}, k' = {}, h = {}",
        cp.c, cp.s, cp.p, cp.a, cp.a_prime, cp.k, cp.k_prime, cp.h
    )
}

fn continuation_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    let forms = [("3.1", ContinuationForm::F1), ("3.2", ContinuationForm::Hyp2F1)];
    for (id, form) in forms {
        for _ in 0..CONTINUATION_POINTS {
            let cp = continuation_point(&mut next(), false);
            out.push(Case::rel(
                Suite::Continuations,
                id,
                continuation_describe(&cp),
                CONTINUATION_TOL,
                Box::new(move |tol| {
                    let v = f2_continuation_lemma6(&cp, form, tol)?.value;
                    Ok((v, f2_series(&cp.lemma6_target(), tol)?.value))
                }),
            ));
        }
    }
    let forms = [
        ("3.6", ContinuationForm::F1, false),
        ("3.7", ContinuationForm::Hyp2F1, false),
        ("3.9", ContinuationForm::Hyp2F1, true),
    ];
    for (id, form, equal) in forms {
        for _ in 0..CONTINUATION_POINTS {
            let mut cp = continuation_point(&mut next(), true);
            if equal {
                cp.s = cp.p;
            }
            out.push(Case::rel(
                Suite::Continuations,
                id,
                continuation_describe(&cp),
                CONTINUATION_TOL,
                Box::new(move |tol| {
                    let v = f2_continuation_lemma8(&cp, form, tol)?.value;
                    Ok((v, f2_series(&cp.lemma8_target(), tol)?.value))
                }),
            ));
        }
    }
    for _ in 0..CONTINUATION_POINTS {
        let mut rng = next();
        let (d, a, c) = (uni(&mut rng, 0.3, 4.0), uni(&mut rng, 0.2, 2.5), uni(&mut rng, 0.5, 3.0));
        let (k, kp, h) = overlap_arguments(&mut rng, 0.75);
        out.push(Case::rel(
            Suite::Continuations,
            "3.10",
            format!("d = {d}, a = {a}, c = {c}, k = {k}, k' = {kp}, h = {h}"),
            CONTINUATION_TOL,
            Box::new(move |tol| {
                let v = lemma9_gauss_sum(d, a, c, k, kp, h, tol)?.value;
                Ok((v, f2_series(&F2Params::new(d, a, a, c, c, k / h, kp / h), tol)?.value))
            }),
        ));
    }
    for _ in 0..CONTINUATION_POINTS {
        let mut rng = next();
        let (d, a, c) = (uni(&mut rng, 0.3, 4.0), uni(&mut rng, 0.2, 2.5), uni(&mut rng, 0.5, 3.0));
        let h = uni(&mut rng, 0.5, 3.0);
        let k = signed(&mut rng, 0.01, 0.45) * h;
        out.push(Case::rel(
            Suite::Continuations,
            "3.11",
            format!("d = {d}, a = {a}, c = {c}, k = {k}, h = {h}"),
            CONTINUATION_TOL,
            Box::new(move |tol| {
                let v = lemma9_antisymmetric(d, a, c, k, h, tol)?.value;
                Ok((v, f2_series(&F2Params::new(d, a, a, c, c, k / h, -k / h), tol)?.value))
            }),
        ));
    }
    // Terminating cases beyond the double series, against the integral.
    let mut made = 0;
    while made < CONTINUATION_QUADRATURE_POINTS {
        let mut rng = next();
        let p = rng.gen_range(0..=2u32);
        let s = rng.gen_range(0..=2u32);
        let gamma = p as f64 + uni(&mut rng, 0.4, 2.5);
        let a = -(rng.gen_range(0..=3u32) as f64);
        let a_prime = -(rng.gen_range(0..=3u32) as f64);
        let h = uni(&mut rng, 0.5, 2.0);
        let total = uni(&mut rng, 1.05, 1.6) * h;
        let share = uni(&mut rng, 0.15, 0.85);
        let k = sign(&mut rng) * share * total;
        let kp = sign(&mut rng) * (1.0 - share) * total;
        let guard = 0.1 * h;
        if (h - k).abs() < guard || (h - kp).abs() < guard || (h - k - kp).abs() < guard {
            continue;
        }
        made += 1;
        let j = JspParams::new(gamma, s, p, a, a_prime, k, kp, h);
        out.push(Case::rel(
            Suite::Continuations,
            "3.2 quadrature",
            format!("gamma = {gamma}, s = {s}, p = {p}, a = {a}, a' = {a_prime}, k = {k}, k' = {kp}, h = {h}"),
            CONTINUATION_TOL,
            Box::new(move |tol| {
                let r = crate::laplace::landau_lifshitz_j_check(&j, JMethod::Continuation, tol)?;
                Ok((r.rhs, r.lhs))
            }),
        ));
    }
    out
}

const PRODUCT_POINTS: usize = 100;
const PRODUCT_TOL: f64 = 1e-10;
const SQUARE_POINTS: usize = 20;
const SQUARE_TOL: f64 = 1e-8;

fn product_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    for _ in 0..PRODUCT_POINTS {
        let mut rng = next();
        let (a, c) = (uni(&mut rng, 0.2, 3.0), uni(&mut rng, 0.5, 3.0));
        let (x, y) = (uni(&mut rng, -2.0, 2.0), uni(&mut rng, -2.0, 2.0));
        out.push(Case::rel(
            Suite::Products,
            "3.12",
            format!("a = {a}, c = {c}, x = {x}, y = {y}"),
            PRODUCT_TOL,
            Box::new(move |tol| {
                let r = kummer_product_expansion(a, c, x, y, tol)?;
                Ok((r.lhs, r.rhs))
            }),
        ));
    }
    for _ in 0..PRODUCT_POINTS {
        let mut rng = next();
        let (a, c) = (uni(&mut rng, 0.2, 3.0), uni(&mut rng, 0.5, 3.0));
        let x = uni(&mut rng, -3.0, 3.0);
        out.push(Case::rel(
            Suite::Products,
            "3.15",
            format!("a = {a}, c = {c}, x = {x}"),
            PRODUCT_TOL,
            Box::new(move |tol| {
                let r = ramanujan_product(a, c, x, tol)?;
                Ok((r.lhs, r.rhs))
            }),
        ));
    }
    for i in 0..SQUARE_POINTS {
        let mut rng = next();
        let (d, h) = (uni(&mut rng, 0.5, 4.0), uni(&mut rng, 0.5, 3.0));
        let (a, b) = (uni(&mut rng, 0.2, 3.0), uni(&mut rng, 0.5, 3.0));
        let k = signed(&mut rng, 0.01, 0.45) * h;
        let which = i % 2;
        out.push(Case::rel(
            Suite::Products,
            if which == 0 { "3.13" } else { "3.14" },
            format!("d = {d}, h = {h}, a = {a}, b = {b}, k = {k}"),
            SQUARE_TOL,
            Box::new(move |tol| {
                let r = &confluent_square_checks(d, h, a, b, k, tol)?[which];
                Ok((r.lhs, r.rhs))
            }),
        ));
    }
    out
}

pub const LAPLACE_POINTS: usize = 300;
const LAPLACE_TOL: f64 = 1e-8;

/// A random two-factor integral with `|k| + |k'| <= 0.8 h`.
pub fn sample_laplace_spec(rng: &mut ChaCha8Rng) -> LaplaceProductSpec {
    let d = uni(rng, 0.5, 6.0);
    let h = uni(rng, 0.5, 3.0);
    let k = uni(rng, -0.8, 0.8);
    let room = 0.8 - k.abs();
    let kp = uni(rng, -room, room);
    let mut p = || uni(rng, 0.2, 5.0);
    let (a, b, a_prime, b_prime) = (p(), p(), p(), p());
    LaplaceProductSpec::new(d, h, a, b, k * h, a_prime, b_prime, kp * h)
}

fn laplace_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    (0..LAPLACE_POINTS)
        .map(|_| {
            let spec = sample_laplace_spec(&mut next());
            let second = spec.second.expect("two factors");
            Case::rel(
                Suite::Laplace,
                "laplace_product",
                format!(
                    "d = {}, h = {}, a = {}, b = {}, k = {}, a' = {}, b' = {}, k' = {}",
                    spec.d, spec.h, spec.a, spec.b, spec.k, second.a_prime, second.b_prime, second.k_prime
                ),
                LAPLACE_TOL,
                Box::new(move |tol| {
                    let r = laplace_product_check(&spec, tol)?;
                    Ok((r.rhs, r.lhs))
                }),
            )
        })
        .collect()
}

const GORDON_POINTS: usize = 12;
const GORDON_TOL: f64 = 1e-9;

fn gordon_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    while out.len() < GORDON_POINTS {
        let mut rng = next();
        let gamma = uni(&mut rng, 0.6, 4.0);
        let a = -(rng.gen_range(0..=3u32) as f64);
        let a_prime = -(rng.gen_range(0..=4u32) as f64);
        let k = uni(&mut rng, -3.0, 3.0);
        let kp = uni(&mut rng, -3.0, 3.0);
        if k + kp < 0.2 || (k - kp).abs() < 0.2 || (gamma - gamma.round()).abs() < 0.05 {
            continue;
        }
        let j = JspParams::new(gamma, 0, 0, a, a_prime, k, kp, 0.5 * (k + kp));
        out.push(Case::rel(
            Suite::Gordon,
            "J",
            format!("gamma = {gamma}, a = {a}, a' = {a_prime}, k = {k}, k' = {kp}, h = {}", j.h),
            GORDON_TOL,
            Box::new(move |tol| {
                Ok((
                    landau_lifshitz_j(&j, JMethod::Gordon, tol)?.value,
                    landau_lifshitz_j(&j, JMethod::Continuation, tol)?.value,
                ))
            }),
        ));
    }
    out
}

const FINITE_SUM_POINTS: usize = 24;
const FINITE_SUM_TOL: f64 = 1e-10;

fn finite_sum_cases(next: &mut dyn FnMut() -> ChaCha8Rng) -> Vec<Case> {
    let mut out = Vec::new();
    while out.len() < FINITE_SUM_POINTS {
        let mut rng = next();
        let mut int = || rng.gen_range(0..=3u32);
        let (a, s, t, d) = (int(), int(), int(), int());
        let x = uni(&mut rng, -0.8, 0.8);
        let y = uni(&mut rng, -0.8, 0.8);
        // Negative powers of x and y cancel heavily near the axes.
        if x.abs() < 0.2 || y.abs() < 0.2 || (x - y).abs() < 0.2 {
            continue;
        }
        out.push(Case::rel(
            Suite::FiniteSum,
            "finite_sum",
            format!("a = {a}, s = {s}, t = {t}, d = {d}, x = {x}, y = {y}"),
            FINITE_SUM_TOL,
            Box::new(move |tol| {
                let (af, df) = (a as f64, d as f64);
                let weight = gamma(af + 1.0)? * gamma(df + 1.0)? / gamma(af + df + 2.0)?;
                let p = F1Params::new(af + 1.0, s as f64 + 1.0, t as f64 + 1.0, af + df + 2.0, x, y);
                Ok((f1_finite_sum(a, s, t, d, x, y)?.value, weight * f1_series(&p, tol)?.value))
            }),
        ));
    }
    out
}

pub const ORTHONORMAL_SIZE: usize = 11;
const ORTHONORMAL_TOL: f64 = 1e-10;
const ELEMENT_MAX: usize = 5;
const ELEMENT_TOL: f64 = 1e-8;
pub const ELEMENT_ALPHAS: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
pub const OSCILLATOR_GAMMAS: [f64; 3] = [1.6, 2.0, 3.0];
pub const KRATZER_PARAMS: [(f64, f64, u32); 3] = [(0.0, 2.0, 0), (1.0, 2.0, 0), (0.0, 2.0, 1)];

fn physics_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let suite = Suite::Physics;
    let delta = |n: usize, m: usize| if n == m { 1.0 } else { 0.0 };
    for g in [1.5, 2.0, 3.5] {
        let b = OscillatorBasis::from_gamma(g).expect("valid gamma");
        for n in 0..ORTHONORMAL_SIZE {
            for m in n..ORTHONORMAL_SIZE {
                out.push(Case::abs(
                    suite,
                    "oscillator overlap",
                    format!("gamma = {g}, n = {n}, m = {m}"),
                    ORTHONORMAL_TOL,
                    Box::new(move |_| Ok((gk_overlap(n, m, &b)?, delta(n, m)))),
                ));
            }
        }
    }
    for (a, bb, l) in [(0.0, 2.0, 0), (1.0, 2.0, 0)] {
        let b = KratzerBasis::new(a, bb, l).expect("valid basis");
        for n in 0..ORTHONORMAL_SIZE {
            for m in n..ORTHONORMAL_SIZE {
                out.push(Case::abs(
                    suite,
                    "kratzer overlap",
                    format!("A = {a}, B = {bb}, l = {l}, n = {n}, m = {m}"),
                    ORTHONORMAL_TOL,
                    Box::new(move |tol| Ok((kratzer_element_quadrature(n, m, &b, 0.0, tol)?.value, delta(n, m)))),
                ));
            }
        }
    }
    for g in OSCILLATOR_GAMMAS {
        let b = OscillatorBasis::from_gamma(g).expect("valid gamma");
        for alpha in ELEMENT_ALPHAS {
            for n in 0..=ELEMENT_MAX {
                for m in n..=ELEMENT_MAX {
                    out.push(Case::rel(
                        suite,
                        "spiked element",
                        format!("gamma = {g}, alpha = {alpha}, n = {n}, m = {m}"),
                        ELEMENT_TOL,
                        Box::new(move |tol| {
                            Ok((
                                spiked_matrix_element(n, m, &b, alpha)?,
                                gk_element_quadrature(n, m, &b, alpha, tol)?.value,
                            ))
                        }),
                    ));
                }
            }
        }
    }
    for (a, bb, l) in KRATZER_PARAMS {
        let b = KratzerBasis::new(a, bb, l).expect("valid basis");
        for alpha in ELEMENT_ALPHAS {
            for n in 0..=ELEMENT_MAX {
                for m in n..=ELEMENT_MAX {
                    out.push(Case::rel(
                        suite,
                        "kratzer element",
                        format!("A = {a}, B = {bb}, l = {l}, alpha = {alpha}, n = {n}, m = {m}"),
                        ELEMENT_TOL,
                        Box::new(move |tol| {
                            Ok((
                                kratzer_matrix_element(n, m, &b, alpha)?,
                                kratzer_element_quadrature(n, m, &b, alpha, tol)?.value,
                            ))
                        }),
                    ));
                }
            }
        }
    }
    let b = OscillatorBasis::from_gamma(2.0).expect("valid gamma");
    out.push(Case::rel(
        suite,
        "spiked spot",
        "gamma = 2, alpha = 2, n = 0, m = 0".into(),
        ELEMENT_TOL,
        Box::new(move |_| Ok((spiked_matrix_element(0, 0, &b, 2.0)?, 1.0))),
    ));
    let k = KratzerBasis::new(0.0, 2.0, 0).expect("valid basis");
    out.push(Case::rel(
        suite,
        "kratzer spot",
        "A = 0, B = 2, l = 0, alpha = 1, n = 0, m = 0".into(),
        ELEMENT_TOL,
        Box::new(move |_| Ok((kratzer_matrix_element(0, 0, &k, 1.0)?, 1.5))),
    ));
    out
}

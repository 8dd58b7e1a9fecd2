//! Acceptance criteria 1-10. Prints one line per criterion and exits nonzero
//! if any fails. Tolerances and counts are pinned here, independently of the
//! thresholds the verify suites carry.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};

use appell_core::appell::{f2_eval, F2Params};
use appell_core::special::{factorial, pochhammer};
use appell_core::verify::{run_suite, CaseReport, Residual, Suite, VerifyReport, DEFAULT_SEED, LAPLACE_POINTS};
use appell_core::DEFAULT_TOL;

const SEED: u64 = DEFAULT_SEED;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(s: Suite) -> Result<VerifyReport, String> {
    run_suite(s, SEED, DEFAULT_TOL).map_err(|e| e.to_string())
}

fn params(case: &CaseReport) -> BTreeMap<String, f64> {
    case.params
        .split(", ")
        .filter_map(|kv| {
            let (k, v) = kv.split_once(" = ")?;
            Some((k.to_string(), v.parse().ok()?))
        })
        .collect()
}

/// Every case with this id passes with a residual at or below `tol`; returns
/// how many there were.
fn within<'a>(cases: impl IntoIterator<Item = &'a CaseReport>, tol: f64, kind: Residual) -> Result<usize, String> {
    let mut count = 0;
    for c in cases {
        count += 1;
        if c.residual_kind != kind {
            return Err(format!("{} #{} uses a {:?} residual", c.identity_id, c.case, c.residual_kind));
        }
        match c.residual {
            Some(r) if c.passed && r <= tol => {}
            _ => {
                return Err(format!(
                    "{} #{} [{}]: residual {:?} > {tol:e}{}",
                    c.identity_id,
                    c.case,
                    c.params,
                    c.residual,
                    c.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()
                ))
            }
        }
    }
    Ok(count)
}

fn with_id<'a>(report: &'a VerifyReport, id: &'a str) -> impl Iterator<Item = &'a CaseReport> + 'a {
    report.cases.iter().filter(move |c| c.identity_id == id)
}

fn at_least(what: &str, got: usize, want: usize) -> Result<(), String> {
    if got >= want {
        Ok(())
    } else {
        Err(format!("{what}: {got} cases, need {want}"))
    }
}

fn criterion_1() -> Outcome {
    let report = suite(Suite::Laplace)?;
    for c in &report.cases {
        let p = params(c);
        let (d, h, k, kp) = (p["d"], p["h"], p["k"], p["k'"]);
        let ok = d > 0.5 && d <= 6.0
            && (0.5..=3.0).contains(&h)
            && k.abs() + kp.abs() <= 0.8 * h * (1.0 + 1e-12)
            && ["a", "b", "a'", "b'"].iter().all(|n| p[*n] > 0.2 && p[*n] <= 5.0);
        if !ok {
            return Err(format!("case #{} outside the sampling region: {}", c.case, c.params));
        }
    }
    let n = within(&report.cases, 1e-8, Residual::Relative)?;
    at_least("laplace", n, 300)?;
    at_least("sampled", LAPLACE_POINTS, 300)?;
    Ok(format!("{n} product integrals within 1e-8 of quadrature"))
}

fn criterion_2() -> Outcome {
    let report = suite(Suite::Appendix)?;
    for i in 1..=21 {
        let id = format!("I.{i}");
        let n = within(with_id(&report, &id), 1e-8, Residual::Relative)?;
        at_least(&id, n, 5)?;
    }
    let branches: Vec<f64> = with_id(&report, "I.17").map(|c| params(c)["a"]).collect();
    if !(branches.contains(&0.0) && branches.iter().any(|a| *a != 0.0)) {
        return Err(format!("I.17 branches not both sampled: a = {branches:?}"));
    }
    let spots = within(with_id(&report, "I.18 spot").chain(with_id(&report, "I.21 spot")), 1e-8, Residual::Relative)?;
    at_least("spot values", spots, 2)?;
    let lhs: Vec<f64> = with_id(&report, "I.18 spot").chain(with_id(&report, "I.21 spot")).filter_map(|c| c.lhs).collect();
    let exact = [4.0 * 2f64.ln() - 2.0, (4.0f64 / 3.0).ln()];
    if lhs.len() != 2 || lhs.iter().zip(exact).any(|(q, e)| (q - e).abs() > 1e-8 * e) {
        return Err(format!("spot quadratures {lhs:?} vs {exact:?}"));
    }
    Ok("21 identities x 5 points, both I.17 branches, spots 4 ln 2 - 2 and ln(4/3)".into())
}

fn criterion_3() -> Outcome {
    let report = suite(Suite::Continuations)?;
    let mut parts = Vec::new();
    for id in ["3.1", "3.2", "3.6", "3.7", "3.9", "3.10", "3.11"] {
        let n = within(with_id(&report, id), 1e-9, Residual::Relative)?;
        at_least(id, n, 50)?;
        parts.push(format!("{id}:{n}"));
    }
    let quad: Vec<&CaseReport> = with_id(&report, "3.2 quadrature").collect();
    for c in &quad {
        let p = params(c);
        let terminating = p["a"].fract() == 0.0 && p["a"] <= 0.0 && p["a'"].fract() == 0.0 && p["a'"] <= 0.0;
        if !terminating || (p["k"].abs() + p["k'"].abs()) / p["h"] <= 1.0 {
            return Err(format!("case #{} is not terminating outside the series domain: {}", c.case, c.params));
        }
    }
    let n = within(quad, 1e-9, Residual::Relative)?;
    at_least("3.2 quadrature", n, 20)?;
    Ok(format!("{} against the series, {n} terminating cases against quadrature", parts.join(" ")))
}

fn criterion_4() -> Outcome {
    let report = suite(Suite::Recurrences)?;
    let mut ids: Vec<&str> = report.cases.iter().map(|c| c.identity_id.as_str()).collect();
    ids.dedup();
    if ids.len() != 7 {
        return Err(format!("expected 7 recurrences, got {ids:?}"));
    }
    for id in &ids {
        at_least(id, within(with_id(&report, id), 1e-9, Residual::Relative)?, 100)?;
    }
    Ok(format!("{} x 100 residuals within 1e-9", ids.join(" ")))
}

fn criterion_5() -> Outcome {
    let report = suite(Suite::Products)?;
    for id in ["3.12", "3.15"] {
        at_least(id, within(with_id(&report, id), 1e-10, Residual::Relative)?, 100)?;
    }
    let squares = within(with_id(&report, "3.13").chain(with_id(&report, "3.14")), 1e-8, Residual::Relative)?;
    at_least("3.13/3.14", squares, 20)?;
    Ok(format!("3.12, 3.15 x 100 within 1e-10; {squares} square integrals within 1e-8"))
}

fn criterion_6() -> Outcome {
    let report = suite(Suite::Physics)?;
    let size = 11;
    let pairs = size * (size + 1) / 2;
    let osc = within(with_id(&report, "oscillator overlap"), 1e-10, Residual::Absolute)?;
    let kr = within(with_id(&report, "kratzer overlap"), 1e-10, Residual::Absolute)?;
    at_least("oscillator overlaps", osc, 2 * pairs)?;
    at_least("kratzer overlaps", kr, 2 * pairs)?;
    // the delta through F2(g; -n, -m; g, g; 1, 1) = n! delta_nm / (g)_n
    let mut worst = 0f64;
    for g in [1.5, 2.0, 3.5] {
        for n in 0..size {
            for m in 0..size {
                let f2 = f2_eval(&F2Params::new(g, -(n as f64), -(m as f64), g, g, 1.0, 1.0), DEFAULT_TOL)
                    .map_err(|e| e.to_string())?
                    .value;
                let norm = (pochhammer(g, n) * pochhammer(g, m) / (factorial(n) * factorial(m))).sqrt();
                let delta = if n == m { 1.0 } else { 0.0 };
                worst = worst.max((norm * f2 - delta).abs());
            }
        }
    }
    if worst > 1e-10 {
        return Err(format!("F2 route deviates from the identity by {worst:e}"));
    }
    Ok(format!("{osc} oscillator and {kr} Kratzer overlaps within 1e-10; F2 route max deviation {worst:.1e}"))
}

fn criterion_7() -> Outcome {
    let report = suite(Suite::Physics)?;
    let spiked = within(with_id(&report, "spiked element"), 1e-8, Residual::Relative)?;
    let kratzer = within(with_id(&report, "kratzer element"), 1e-8, Residual::Relative)?;
    // n <= m <= 5 over 4 alphas and 3 parameter sets each
    at_least("spiked elements", spiked, 21 * 4 * 3)?;
    at_least("kratzer elements", kratzer, 21 * 4 * 3)?;
    let spots = within(with_id(&report, "spiked spot").chain(with_id(&report, "kratzer spot")), 1e-8, Residual::Relative)?;
    at_least("spot checks", spots, 2)?;
    Ok(format!("{spiked} spiked and {kratzer} Kratzer elements within 1e-8; both spot values"))
}

fn criterion_8() -> Outcome {
    let report = suite(Suite::Gordon)?;
    for c in &report.cases {
        let p = params(c);
        if (p["h"] - 0.5 * (p["k"] + p["k'"])).abs() > 1e-12 * p["h"].abs() {
            return Err(format!("case #{} has h != (k + k')/2", c.case));
        }
    }
    let n = within(&report.cases, 1e-9, Residual::Relative)?;
    at_least("gordon", n, 10)?;
    Ok(format!("{n} configurations within 1e-9"))
}

fn criterion_9() -> Outcome {
    let report = suite(Suite::FiniteSum)?;
    // An excluded index k = t - j falls inside the binomial range 0..=a+m.
    let logarithmic = report
        .cases
        .iter()
        .filter(|c| {
            let p = params(c);
            let (a, t, d) = (p["a"] as i64, p["t"] as i64, p["d"] as i64);
            (0..=d).any(|m| (0..=t).any(|j| t - j <= a + m))
        })
        .count();
    if logarithmic == 0 {
        return Err("no case reaches the logarithmic terms".into());
    }
    let n = within(&report.cases, 1e-10, Residual::Relative)?;
    at_least("finite sum", n, 20)?;
    Ok(format!("{n} cases within 1e-10, {logarithmic} with logarithmic terms"))
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_appell"))
            .args(["verify", "all", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    if !first.status.success() || first.status.code() != Some(0) {
        return Err(format!("exit status {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(format!("exit 0, {} identical bytes twice", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("product integrals", criterion_1),
        ("tabulated transforms", criterion_2),
        ("continuation correctness", criterion_3),
        ("recurrences", criterion_4),
        ("product identities", criterion_5),
        ("physics orthonormality", criterion_6),
        ("matrix elements", criterion_7),
        ("J closed form vs continuation", criterion_8),
        ("finite sum", criterion_9),
        ("verify all determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

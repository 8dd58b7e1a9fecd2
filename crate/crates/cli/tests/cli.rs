use std::process::{Command, Output};

use serde_json::Value;

fn appell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_appell"))
        .args(args)
        .env_remove("APPELL_TOL")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = appell(args);
    let code = out.status.code().expect("exit code");
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (code, value)
}

fn value(v: &Value) -> f64 {
    v["result"]["value"].as_f64().expect("numeric value")
}

#[test]
fn f2_reduction_and_origin() {
    let (code, v) = json(&["f2", "--d", "2", "--a", "1", "--ap", "1", "--b", "1", "--bp", "1", "--x", "0.25", "--y", "0.25"]);
    assert_eq!(code, 0);
    assert!((value(&v) - 4.0).abs() <= 1e-14);
    assert_eq!(v["result"]["method"], "reduction");
    assert_eq!(v["command"], "f2");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "result"]);

    let (code, v) = json(&["f2", "--d", "2.5", "--a", "0.5", "--ap", "1.5", "--b", "2", "--bp", "3", "--x", "0", "--y", "0"]);
    assert_eq!(code, 0);
    assert_eq!(value(&v), 1.0);
}

#[test]
fn f2_matches_brute_force() {
    let point = ["f2", "--d", "2.5", "--a", "0.5", "--ap", "1.5", "--b", "2", "--bp", "3", "--x", "0.3", "--y", "-0.4"];
    let (_, series) = json(&point);
    let mut brute = point.to_vec();
    brute.push("--brute-force");
    let (code, brute) = json(&brute);
    assert_eq!(code, 0);
    let (s, b) = (value(&series), value(&brute));
    assert!((s - b).abs() <= 1e-10 * b.abs(), "{s} vs {b}");
}

#[test]
fn integral_checks() {
    let (code, v) = json(&[
        "integral", "product", "--d", "1", "--h", "2", "--a", "0.7", "--b", "0.7", "--k", "0.5", "--ap", "1.3", "--bp",
        "1.3", "--kp", "0.5", "--check",
    ]);
    assert_eq!(code, 0);
    assert!((value(&v) - 1.0).abs() <= 1e-14);
    assert!(v["check"]["rel_residual"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["check"]["passed"], true);

    let (code, v) = json(&[
        "integral", "j", "--gamma", "2", "--s", "1", "--a", "-1", "--ap", "-1", "--k", "0.3", "--kp", "0.4", "--h", "1",
        "--check",
    ]);
    assert_eq!(code, 0);
    assert!(v["check"]["rel_residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn domain_errors_exit_2() {
    let out = appell(&["integral", "product", "--d", "1", "--h", "0", "--a", "1", "--b", "2", "--k", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(body["error"].as_str().unwrap().contains('h'));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = appell(&[
        "integral", "product", "--d", "1", "--h", "1", "--a", "0.5", "--b", "2", "--k", "0.6", "--ap", "0.5", "--bp",
        "2", "--kp", "0.6",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("|k| + |k'| < h"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(appell(&["f2", "--d", "2"]).status.code(), Some(2));
    assert_eq!(appell(&["--tol", "0.5", "verify", "gordon"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(appell(&["appendix", "I.99"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_appell"))
        .args(["verify", "gordon"])
        .env("APPELL_TOL", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["appendix", "recurrences", "physics"] {
        let (code, v) = json(&["verify", suite, "--seed", "7"]);
        assert_eq!(code, 0, "{suite}");
        assert_eq!(v["result"]["passed"], true);
        assert_eq!(v["result"]["failed"], 0);
        assert_eq!(v["inputs"]["seed"], 7);
    }
    let (_, v) = json(&["verify", "appendix"]);
    assert_eq!(v["result"]["total"], 21 * 5 + 2);
    let (_, v) = json(&["verify", "recurrences"]);
    assert_eq!(v["result"]["total"], 700);
}

#[test]
fn verify_reports_are_seeded() {
    let a = appell(&["verify", "laplace", "--seed", "3"]).stdout;
    let b = appell(&["verify", "laplace", "--seed", "3"]).stdout;
    let c = appell(&["verify", "laplace", "--seed", "4"]).stdout;
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn matrix_entries() {
    let (code, v) = json(&["matrix", "spiked", "--gamma", "2", "--alpha", "2", "--n", "1"]);
    assert_eq!(code, 0);
    assert!((v["result"]["entries"][0][0].as_f64().unwrap() - 1.0).abs() <= 1e-14);

    let (code, v) = json(&["matrix", "kratzer", "--A", "0", "--B", "2", "--l", "0", "--alpha", "1", "--n", "1"]);
    assert_eq!(code, 0);
    assert!((v["result"]["entries"][0][0].as_f64().unwrap() - 1.5).abs() <= 1e-14);

    let (_, v) = json(&["matrix", "spiked", "--gamma", "2", "--alpha", "1", "--n", "4", "--variational", "--lambda", "0.1", "--h0"]);
    let rows: Vec<Vec<f64>> = serde_json::from_value(v["result"]["entries"].clone()).unwrap();
    assert_eq!(rows.len(), 4);
    for (n, row) in rows.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            assert_eq!(*v, rows[m][n]);
        }
    }
    assert_eq!(v["result"]["h0"].as_array().unwrap().len(), 4);
    let eig: Vec<f64> = serde_json::from_value(v["result"]["eigenvalues"].clone()).unwrap();
    assert!(eig.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn matrix_csv_is_lossless() {
    let out = appell(&["--format", "csv", "matrix", "spiked", "--gamma", "2.5", "--alpha", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,value"));
    let (_, v) = json(&["matrix", "spiked", "--gamma", "2.5", "--alpha", "1", "--n", "3"]);
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let (n, m): (usize, usize) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        let parsed: f64 = f[2].parse().unwrap();
        assert_eq!(parsed, v["result"]["entries"][n][m].as_f64().unwrap());
        let mantissa = f[2].split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
    }
}

#[test]
fn element_errors_carry_indices() {
    let out = appell(&["matrix", "spiked", "--gamma", "1.5", "--alpha", "3.5", "--n", "2"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(0, 0)"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn appendix_listing_and_sampling() {
    let (code, v) = json(&["appendix"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 21);

    let (code, v) = json(&["appendix", "I.18", "h=2", "k=1"]);
    assert_eq!(code, 0);
    assert!((value(&v) - (4.0 * 2f64.ln() - 2.0)).abs() <= 1e-12);
    assert_eq!(v["check"]["passed"], true);

    let (code, a) = json(&["appendix", "I.6"]);
    assert_eq!(code, 0);
    let (_, b) = json(&["appendix", "I.6"]);
    assert_eq!(a, b);
}

#[test]
fn plain_and_csv_evaluations() {
    let out = appell(&["--format", "plain", "f1", "--a", "1", "--b", "2", "--bp", "2", "--c", "4", "--x", "0.2", "--y", "0.3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("f1 = 1.334520781603"));
    let out = appell(&["--format", "csv", "f2", "--d", "2", "--a", "1", "--ap", "1", "--b", "1", "--bp", "1", "--x", "0.25", "--y", "0.25"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("command,value,abs_error,method,terms"));
}

use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{hyp1f1, pfq, CompensatedSum, Method, PfqParams, MAX_TERMS};

fn product(a: f64, c: f64, x: f64, y: f64, tol: f64) -> Result<f64> {
    Ok(hyp1f1(a, c, x, tol)?.value * hyp1f1(a, c, y, tol)?.value)
}

/// `1F1(a; c; x) 1F1(a; c; y)` against
/// `sum_r (a)_r (c-a)_r / ((c)_r (c)_{2r} r!) (-xy)^r 1F1(a+r; c+2r; x+y)`.
pub fn kummer_product_expansion(a: f64, c: f64, x: f64, y: f64, tol: f64) -> Result<IdentityReport> {
    let lhs = product(a, c, x, y, tol).map_err(|e| e.on_side("lhs"))?;
    let rhs = (|| -> Result<f64> {
        let mut acc = CompensatedSum::new();
        let mut coef = 1.0f64;
        let mut small_run = 0;
        for r in 0..MAX_TERMS {
            let rf = r as f64;
            let term = coef * hyp1f1(a + rf, c + 2.0 * rf, x + y, tol)?.value;
            acc.add(term);
            if term.abs() <= tol * acc.value().abs() {
                small_run += 1;
            } else {
                small_run = 0;
            }
            coef *= (a + rf) * (c - a + rf) * (-x * y)
                / ((c + rf) * (c + 2.0 * rf) * (c + 2.0 * rf + 1.0) * (rf + 1.0));
            if coef == 0.0 || small_run >= 2 {
                return Ok(acc.value());
            }
        }
        Err(Error::NonConvergence {
            what: "confluent product expansion".into(),
            terms: MAX_TERMS,
        })
    })()
    .map_err(|e| e.on_side("rhs"))?;
    Ok(IdentityReport::new("3.12", lhs, rhs, Method::Series, Method::Series))
}

/// `1F1(a; c; x) 1F1(a; c; -x)` against
/// `2F3(a, c-a; c, c/2, (c+1)/2; x^2/4)`.
pub fn ramanujan_product(a: f64, c: f64, x: f64, tol: f64) -> Result<IdentityReport> {
    let lhs = product(a, c, x, -x, tol).map_err(|e| e.on_side("lhs"))?;
    let rhs = pfq(
        &PfqParams::new(&[a, c - a], &[c, c / 2.0, (c + 1.0) / 2.0], x * x / 4.0),
        tol,
    )
    .map_err(|e| e.on_side("rhs"))?
    .value;
    Ok(IdentityReport::new("3.15", lhs, rhs, Method::Series, Method::Series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::DEFAULT_TOL;

    #[test]
    fn product_identities() {
        let r = kummer_product_expansion(0.7, 1.9, 0.8, -1.3, DEFAULT_TOL).unwrap();
        assert!(r.rel_residual < 1e-12, "{r:?}");
        let r = ramanujan_product(0.7, 1.9, 0.8, DEFAULT_TOL).unwrap();
        assert!(r.rel_residual < 1e-12, "{r:?}");
        // 1F1(b; b; x) 1F1(b; b; -x) = 1
        let r = ramanujan_product(1.3, 1.3, 2.0, DEFAULT_TOL).unwrap();
        assert!((r.rhs - 1.0).abs() < 1e-13);
    }
}

use super::integrand::{Envelope, KummerFactor, INTEGRAND_TOL};
use super::{gamma_weight, ORACLE_TOL};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{pfq, Method, PfqParams};

/// The transform of `1F1(a; b; kt) 1F1(a; b; -kt)` in two integral forms,
/// the product itself (`"3.13"`) and its `2F3(a, b-a; b, b/2, (b+1)/2; k^2 t^2/4)`
/// expansion (`"3.14"`), each against the closed value
/// `Gamma(d) h^{-d} 4F3(d/2, (d+1)/2, a, b-a; b, b/2, (b+1)/2; k^2/h^2)`.
///
/// Needs `d > 0` and `2|k| < h`.
pub fn confluent_square_checks(
    d: f64,
    h: f64,
    a: f64,
    b: f64,
    k: f64,
    tol: f64,
) -> Result<[IdentityReport; 2]> {
    if !(d > 0.0) || !(2.0 * k.abs() < h) {
        return Err(Error::Domain(format!(
            "needs d > 0 and 2|k| < h, got d = {d}, k = {k}, h = {h}"
        )));
    }
    let closed = pfq(
        &PfqParams::new(
            &[d / 2.0, (d + 1.0) / 2.0, a, b - a],
            &[b, b / 2.0, (b + 1.0) / 2.0],
            k * k / (h * h),
        ),
        tol,
    )
    .map_err(|e| e.on_side("rhs"))?
    .scaled(gamma_weight(d, h)?);

    let plus = KummerFactor::new(a, b, k);
    let minus = KummerFactor::new(a, b, -k);
    let growth = plus.growth_rate() + minus.growth_rate();
    let env = Envelope::new(d - 1.0 + plus.power_bound() + minus.power_bound(), h - growth);
    let rate = h - growth;
    let product = env
        .integrate(
            |t| t.powf(d - 1.0) * (-rate * t).exp() * plus.damped(t) * minus.damped(t),
            ORACLE_TOL.max(tol),
        )
        .map_err(|e| e.on_side("lhs"))?;

    // The 2F3 grows like e^{|k| t}; carry that in the weight.
    let ak = k.abs();
    let upper = [a, b - a];
    let lower = [b, b / 2.0, (b + 1.0) / 2.0];
    let env = Envelope::new(d - 1.0 + (2.0 * a - b).abs(), h - ak);
    let expanded = env
        .integrate(
            |t| {
                let x = ak * t;
                let f = pfq(&PfqParams::new(&upper, &lower, x * x / 4.0), INTEGRAND_TOL)
                    .map_or(f64::NAN, |e| e.value);
                t.powf(d - 1.0) * (-h * t).exp() * f
            },
            ORACLE_TOL.max(tol),
        )
        .map_err(|e| e.on_side("lhs"))?;

    Ok([
        IdentityReport::new("3.13", product.value, closed.value, Method::Quadrature, Method::Series),
        IdentityReport::new("3.14", expanded.value, closed.value, Method::Quadrature, Method::Series),
    ])
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{close, f2_eval, F2Params};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::special::{hyp2f1, near_nonnegative_integer, CompensatedSum, Method};

/// Contiguous relations of `F2` inherited from those of `1F1`. Below
/// `x = k/h` and only the parameters that change are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Recurrence {
    /// `x (d-1) F2(d) = (a-b) F2(d-1; a-1) + (b-2a) F2(d-1) + a F2(d-1; a+1)`,
    /// for `d > -1`.
    #[serde(rename = "R3.17")]
    R3_17,
    /// The same relation with `d = b' + s`, `s` a positive integer.
    #[serde(rename = "R3.18")]
    R3_18,
    /// The same relation with `d = b' + 1`.
    #[serde(rename = "R3.19")]
    R3_19,
    /// `b x F2(b+1; a, a'; b, b)` against three equal-denominator closed forms.
    #[serde(rename = "R3.20")]
    R3_20,
    /// `x (d-1)/b F2(d; b+1, b'+1) = F2(d-1; b, b'+1) - F2(d-1; a-1; b, b'+1)`.
    #[serde(rename = "R3.21")]
    R3_21,
    /// `(a+1-b) F2 = a F2(a+1) - (b-1) F2(b-1)`.
    #[serde(rename = "R3.22")]
    R3_22,
    /// `b F2(d; b) = b(b-1)/((d-1) x) [F2(d-1; b-1) - F2(d-1; b)] + (b-a) F2(d; b+1)`.
    #[serde(rename = "R3.23")]
    R3_23,
}

impl Recurrence {
    pub const ALL: [Recurrence; 7] = [
        Recurrence::R3_17,
        Recurrence::R3_18,
        Recurrence::R3_19,
        Recurrence::R3_20,
        Recurrence::R3_21,
        Recurrence::R3_22,
        Recurrence::R3_23,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Recurrence::R3_17 => "R3.17",
            Recurrence::R3_18 => "R3.18",
            Recurrence::R3_19 => "R3.19",
            Recurrence::R3_20 => "R3.20",
            Recurrence::R3_21 => "R3.21",
            Recurrence::R3_22 => "R3.22",
            Recurrence::R3_23 => "R3.23",
        }
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Recurrence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Recurrence::ALL
            .into_iter()
            .find(|r| r.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// A linear combination `sum_i w_i F2(p_i)` evaluated term by term.
fn combination(terms: &[(f64, F2Params)], tol: f64) -> Result<(f64, Method)> {
    let mut acc = CompensatedSum::new();
    let mut method = None;
    for (w, p) in terms {
        if *w == 0.0 {
            continue;
        }
        let ev = f2_eval(p, tol)?;
        method.get_or_insert(ev.method);
        acc.add(w * ev.value);
    }
    Ok((acc.value(), method.unwrap_or(Method::ClosedForm)))
}

fn with(p: &F2Params, f: impl FnOnce(&mut F2Params)) -> F2Params {
    let mut q = *p;
    f(&mut q);
    q
}

/// Weighted `F2` terms summed on one side of a recurrence.
type Side = Vec<(f64, F2Params)>;

fn lowered_d_sides(p: &F2Params) -> (Side, Side) {
    let F2Params { d, a, b, x, .. } = *p;
    let down = with(p, |q| q.d -= 1.0);
    (
        vec![(x * (d - 1.0), *p)],
        vec![
            (a - b, with(&down, |q| q.a -= 1.0)),
            (b - 2.0 * a, down),
            (a, with(&down, |q| q.a += 1.0)),
        ],
    )
}

/// Evaluate both sides of a contiguous relation at `p` independently.
///
/// Every `F2` instance goes through [`f2_eval`]. A failure on either side is
/// reported with the side it came from.
pub fn f2_recurrence_residual(id: Recurrence, p: &F2Params, tol: f64) -> Result<IdentityReport> {
    let F2Params { d, a, b, b_prime, x, .. } = *p;
    let (lhs_terms, rhs_terms) = match id {
        Recurrence::R3_17 => {
            if !(d > -1.0) {
                return Err(Error::Precondition(format!("needs d > -1, got {d}")));
            }
            lowered_d_sides(p)
        }
        Recurrence::R3_18 | Recurrence::R3_19 => {
            let s = near_nonnegative_integer(d - b_prime, 1e-10).filter(|&s| s >= 1);
            match (id, s) {
                (Recurrence::R3_18, Some(_)) | (Recurrence::R3_19, Some(1)) => {}
                _ => {
                    let need = if id == Recurrence::R3_19 { "1" } else { "a positive integer" };
                    return Err(Error::Precondition(format!(
                        "needs d - b' = {need}, got {}",
                        d - b_prime
                    )));
                }
            }
            lowered_d_sides(p)
        }
        Recurrence::R3_20 => return equal_denominator_relation(p, tol),
        Recurrence::R3_21 => {
            let top = with(p, |q| {
                q.b += 1.0;
                q.b_prime += 1.0;
            });
            let base = with(p, |q| {
                q.d -= 1.0;
                q.b_prime += 1.0;
            });
            (
                vec![(x * (d - 1.0) / b, top)],
                vec![(1.0, base), (-1.0, with(&base, |q| q.a -= 1.0))],
            )
        }
        Recurrence::R3_22 => (
            vec![(a + 1.0 - b, *p)],
            vec![
                (a, with(p, |q| q.a += 1.0)),
                (-(b - 1.0), with(p, |q| q.b -= 1.0)),
            ],
        ),
        Recurrence::R3_23 => {
            let w = b * (b - 1.0) / ((d - 1.0) * x);
            let down = with(p, |q| q.d -= 1.0);
            (
                vec![(b, *p)],
                vec![
                    (w, with(&down, |q| q.b -= 1.0)),
                    (-w, down),
                    (b - a, with(p, |q| q.b += 1.0)),
                ],
            )
        }
    };
    let (lhs, lm) = combination(&lhs_terms, tol).map_err(|e| e.on_side("lhs"))?;
    let (rhs, rm) = combination(&rhs_terms, tol).map_err(|e| e.on_side("rhs"))?;
    Ok(IdentityReport::new(id.id(), lhs, rhs, lm, rm))
}

/// `b x F2(b+1; a, a'; b, b; x, y)` against
/// `sum_j w_j (1-x)^{-a_j} (1-y)^{-a'} 2F1(a_j, a'; b; z)`, `z = xy/((1-x)(1-y))`,
/// with `a_j = a-1, a, a+1` and weights `a-b, b-2a, a`.
fn equal_denominator_relation(p: &F2Params, tol: f64) -> Result<IdentityReport> {
    let F2Params { d, a, a_prime, b, b_prime, x, y } = *p;
    if !(close(d, b + 1.0) && close(b_prime, b)) {
        return Err(Error::Precondition(format!(
            "needs d = b + 1 and b' = b, got d = {d}, b = {b}, b' = {b_prime}"
        )));
    }
    if !(x < 1.0 && y < 1.0) {
        return Err(Error::Domain(format!("needs x < 1 and y < 1, got ({x}, {y})")));
    }
    let (lhs, lm) = combination(&[(b * x, *p)], tol).map_err(|e| e.on_side("lhs"))?;
    let z = x * y / ((1.0 - x) * (1.0 - y));
    let rhs = (|| -> Result<f64> {
        let mut acc = CompensatedSum::new();
        for (w, aj) in [(a - b, a - 1.0), (b - 2.0 * a, a), (a, a + 1.0)] {
            let f = hyp2f1(aj, a_prime, b, z, tol)?;
            acc.add(w * (1.0 - x).powf(-aj) * (1.0 - y).powf(-a_prime) * f.value);
        }
        Ok(acc.value())
    })()
    .map_err(|e| e.on_side("rhs"))?;
    Ok(IdentityReport::new(
        Recurrence::R3_20.id(),
        lhs,
        rhs,
        lm,
        Method::ClosedForm,
    ))
}

use serde::Serialize;

use crate::special::Method;

/// Both sides of one verified identity instance and their disagreement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub lhs_method: Method,
    pub rhs_method: Method,
}

impl IdentityReport {
    pub fn new(
        identity_id: impl Into<String>,
        lhs: f64,
        rhs: f64,
        lhs_method: Method,
        rhs_method: Method,
    ) -> Self {
        let abs_residual = (lhs - rhs).abs();
        let scale = lhs.abs().max(rhs.abs()).max(1e-300);
        IdentityReport {
            identity_id: identity_id.into(),
            lhs,
            rhs,
            abs_residual,
            rel_residual: abs_residual / scale,
            lhs_method,
            rhs_method,
        }
    }

    /// Whether the relative residual is within `tol`. NaN never passes.
    pub fn passes(&self, tol: f64) -> bool {
        self.rel_residual <= tol
    }
}

//! Appell's double series F1 and F2.
//!
//! ```text
//! F2(d; a, a'; b, b'; x, y) = sum_{m,n} (d)_{m+n} (a)_m (a')_n / ((b)_m (b')_n m! n!) x^m y^n
//! F1(a; b, b'; c; x, y)     = sum_{m,n} (a)_{m+n} (b)_m (b')_n / ((c)_{m+n} m! n!) x^m y^n
//! ```
//!
//! F2 converges absolutely for `|x| + |y| < 1`, F1 for `|x| < 1, |y| < 1`.
//! Beyond that, [`f2_eval`] combines closed-form reductions, terminating sums
//! and the finite re-expansions in [`continuation`] that express F2 through
//! F1 and 2F1 of transformed arguments.

mod continuation;
mod eval;
mod finite_sum;
mod product;
mod recurrence;
mod reduce;
mod series;

use serde::Serialize;

pub use continuation::{
    f2_continuation_lemma6, f2_continuation_lemma8, f2_equal_params_lemma9, lemma9_antisymmetric,
    lemma9_gauss_sum, ContinuationForm,
};
pub use eval::f2_eval;
pub use finite_sum::f1_finite_sum;
pub use product::{kummer_product_expansion, ramanujan_product};
pub use recurrence::{f2_recurrence_residual, Recurrence};
pub use reduce::f2_reduce;
pub use series::{f1_series, f2_series};

/// Tolerance for matching real parameters against a reduction pattern.
pub const PATTERN_TOL: f64 = 1e-12;

/// Tolerance for recognizing an integer offset between parameters.
pub const OFFSET_TOL: f64 = 1e-10;

/// Parameters of `F2(d; a, a'; b, b'; x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct F2Params {
    pub d: f64,
    pub a: f64,
    pub a_prime: f64,
    pub b: f64,
    pub b_prime: f64,
    pub x: f64,
    pub y: f64,
}

impl F2Params {
    pub fn new(d: f64, a: f64, a_prime: f64, b: f64, b_prime: f64, x: f64, y: f64) -> Self {
        F2Params {
            d,
            a,
            a_prime,
            b,
            b_prime,
            x,
            y,
        }
    }

    /// Whether the double series converges absolutely.
    pub fn in_series_domain(&self) -> bool {
        self.x.abs() + self.y.abs() < 1.0
    }

    /// The same function with the two index directions exchanged.
    pub fn swapped(&self) -> Self {
        F2Params {
            d: self.d,
            a: self.a_prime,
            a_prime: self.a,
            b: self.b_prime,
            b_prime: self.b,
            x: self.y,
            y: self.x,
        }
    }
}

/// Parameters of `F1(a; b, b'; c; x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct F1Params {
    pub a: f64,
    pub b: f64,
    pub b_prime: f64,
    pub c: f64,
    pub x: f64,
    pub y: f64,
}

impl F1Params {
    pub fn new(a: f64, b: f64, b_prime: f64, c: f64, x: f64, y: f64) -> Self {
        F1Params {
            a,
            b,
            b_prime,
            c,
            x,
            y,
        }
    }

    pub fn in_series_domain(&self) -> bool {
        self.x.abs() < 1.0 && self.y.abs() < 1.0
    }
}

/// The family `F2(c + s; a, a'; c, c -/+ p; k/h, k'/h)` handled by the
/// finite continuations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContinuationParams {
    pub c: f64,
    pub s: u32,
    pub p: u32,
    pub a: f64,
    pub a_prime: f64,
    pub k: f64,
    pub k_prime: f64,
    pub h: f64,
}

impl ContinuationParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(c: f64, s: u32, p: u32, a: f64, a_prime: f64, k: f64, k_prime: f64, h: f64) -> Self {
        ContinuationParams {
            c,
            s,
            p,
            a,
            a_prime,
            k,
            k_prime,
            h,
        }
    }

    /// `F2(c + s; a, a'; c, c - p; k/h, k'/h)`.
    pub fn lemma6_target(&self) -> F2Params {
        F2Params::new(
            self.c + self.s as f64,
            self.a,
            self.a_prime,
            self.c,
            self.c - self.p as f64,
            self.k / self.h,
            self.k_prime / self.h,
        )
    }

    /// `F2(c + s; a, a'; c, c + p; k/h, k'/h)`.
    pub fn lemma8_target(&self) -> F2Params {
        F2Params::new(
            self.c + self.s as f64,
            self.a,
            self.a_prime,
            self.c,
            self.c + self.p as f64,
            self.k / self.h,
            self.k_prime / self.h,
        )
    }
}

pub(crate) fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= PATTERN_TOL
}

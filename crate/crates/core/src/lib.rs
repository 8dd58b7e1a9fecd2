#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

//! Appell's F2 double series, its reductions, recurrences and analytic
//! continuations, and the Laplace-type integrals of products of confluent
//! hypergeometric functions built on it.
//!
//! Every closed form in this crate can be checked against the independent
//! quadrature and brute-force backends in [`oracle`].

pub mod appell;
pub mod error;
pub mod laplace;
pub mod oracle;
pub mod physics;
pub mod report;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use report::IdentityReport;
pub use special::{Evaluation, Method, DEFAULT_TOL};

//! Matrix elements in two exactly solvable bases: the spiked oscillator with
//! `x^{-alpha}` perturbations and the Kratzer potential with `r^alpha`
//! perturbations, plus assembly of the perturbation block.

mod kratzer;
mod matrix;
mod oscillator;

/// `1F1(-n; c; x)` by the Laguerre three-term recurrence
/// `(c+k) M_{k+1} = (2k+c-x) M_k - k M_{k-1}`, which avoids the cancellation
/// of the alternating power series at large `x`.
pub(crate) fn kummer_polynomial(n: usize, c: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0 - x / c);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + c - x) * cur - kf * prev) / (c + kf);
        prev = cur;
        cur = next;
    }
    cur
}

pub use kratzer::{
    kratzer_element_quadrature, kratzer_energy, kratzer_matrix_element, kratzer_normalization,
    kratzer_wavefunction, KratzerBasis,
};
pub use matrix::{build_perturbation_matrix, Basis, MatrixBlock};
pub use oscillator::{
    gk_element_quadrature, gk_energy, gk_overlap, gk_wavefunction, spiked_matrix_element,
    OscillatorBasis,
};

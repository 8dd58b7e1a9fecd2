use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kratzer::{kratzer_energy, kratzer_matrix_element, KratzerBasis};
use super::oscillator::{gk_energy, spiked_matrix_element, OscillatorBasis};
use crate::error::{Error, Result};

/// Relative tolerance for the sampled symmetry check before mirroring.
const SYMMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Basis {
    /// Perturbation `x^{-alpha}`.
    Spiked(OscillatorBasis),
    /// Perturbation `r^alpha`.
    Kratzer(KratzerBasis),
}

impl Basis {
    pub fn element(&self, n: usize, m: usize, alpha: f64) -> Result<f64> {
        match self {
            Basis::Spiked(b) => spiked_matrix_element(n, m, b, alpha),
            Basis::Kratzer(b) => kratzer_matrix_element(n, m, b, alpha),
        }
    }

    pub fn energy(&self, n: usize) -> f64 {
        match self {
            Basis::Spiked(b) => gk_energy(n, b),
            Basis::Kratzer(b) => kratzer_energy(n, b),
        }
    }
}

/// The `N x N` block of perturbation matrix elements, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixBlock {
    pub size: usize,
    pub alpha: f64,
    pub basis: Basis,
    pub entries: Vec<Vec<f64>>,
}

impl MatrixBlock {
    pub fn get(&self, n: usize, m: usize) -> f64 {
        self.entries[n][m]
    }

    /// Largest relative asymmetry over all pairs.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for n in 0..self.size {
            for m in n + 1..self.size {
                let (a, b) = (self.entries[n][m], self.entries[m][n]);
                let scale = a.abs().max(b.abs());
                if scale > 0.0 {
                    worst = worst.max((a - b).abs() / scale);
                }
            }
        }
        worst
    }

    /// Ascending eigenvalues of `diag(E_n) + lambda * block`.
    pub fn variational_eigenvalues(&self, lambda: f64) -> Vec<f64> {
        let h = DMatrix::from_fn(self.size, self.size, |n, m| {
            let e0 = if n == m { self.basis.energy(n) } else { 0.0 };
            e0 + lambda * self.entries[n][m]
        });
        let mut ev: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

/// Fills the block from the upper triangle in parallel and mirrors it, after
/// checking both orientations of each first-row entry and of the
/// first superdiagonal agree.
pub fn build_perturbation_matrix(basis: Basis, alpha: f64, size: usize) -> Result<MatrixBlock> {
    if size == 0 {
        return Err(Error::Parameter("matrix size must be positive".into()));
    }
    let element = |n: usize, m: usize| {
        basis.element(n, m, alpha).map_err(|e| Error::Element {
            n,
            m,
            source: Box::new(e),
        })
    };
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|n| (n..size).map(move |m| (n, m)))
        .collect();
    let upper: Vec<f64> = pairs
        .par_iter()
        .map(|&(n, m)| element(n, m))
        .collect::<Result<_>>()?;

    let samples = (1..size).map(|m| (0, m)).chain((1..size.saturating_sub(1)).map(|n| (n, n + 1)));
    for (n, m) in samples {
        let idx = pairs.iter().position(|&p| p == (n, m)).expect("pair in triangle");
        let (a, b) = (upper[idx], element(m, n)?);
        if (a - b).abs() > SYMMETRY_TOL * a.abs().max(b.abs()) {
            return Err(Error::Element {
                n,
                m,
                source: Box::new(Error::Singular(format!("asymmetric element: {a} vs {b}"))),
            });
        }
    }

    let mut entries = vec![vec![0.0; size]; size];
    for (&(n, m), &v) in pairs.iter().zip(&upper) {
        entries[n][m] = v;
        entries[m][n] = v;
    }
    Ok(MatrixBlock { size, alpha, basis, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::physics::kratzer_element_quadrature;
    use crate::special::{factorial, gamma, pochhammer};
    use approx::assert_relative_eq;

    #[test]
    fn single_entries() {
        let b = Basis::Spiked(OscillatorBasis::from_gamma(2.0).unwrap());
        let m = build_perturbation_matrix(b, 2.0, 1).unwrap();
        assert_relative_eq!(m.get(0, 0), 1.0, max_relative = 1e-14);
        let k = Basis::Kratzer(KratzerBasis::new(0.0, 2.0, 0).unwrap());
        assert_relative_eq!(build_perturbation_matrix(k, 1.0, 1).unwrap().get(0, 0), 1.5, max_relative = 1e-14);
        assert!(build_perturbation_matrix(b, 2.0, 0).is_err());
    }

    #[test]
    fn spiked_block_first_column() {
        let (g, alpha) = (2.0, 1.0);
        let b = Basis::Spiked(OscillatorBasis::from_gamma(g).unwrap());
        let m = build_perturbation_matrix(b, alpha, 4).unwrap();
        assert_eq!(m.max_asymmetry(), 0.0);
        for n in 1..4 {
            let expect = if n % 2 == 1 { -1.0 } else { 1.0 }
                * (pochhammer(g, n) / factorial(n)).sqrt()
                * gamma(g - alpha / 2.0).unwrap()
                / gamma(g).unwrap()
                * pochhammer(alpha / 2.0, n)
                / pochhammer(g, n);
            assert_relative_eq!(m.get(n, 0), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn kratzer_block_against_quadrature() {
        let kb = KratzerBasis::new(0.0, 2.0, 0).unwrap();
        let m = build_perturbation_matrix(Basis::Kratzer(kb), 1.0, 3).unwrap();
        for n in 0..3 {
            for j in 0..3 {
                let q = kratzer_element_quadrature(n, j, &kb, 1.0, 1e-12).unwrap().value;
                assert!((m.get(n, j) - q).abs() <= 1e-8 * q.abs(), "({n},{j})");
            }
        }
    }

    #[test]
    fn element_errors_carry_indices() {
        let b = Basis::Spiked(OscillatorBasis::from_gamma(1.5).unwrap());
        let err = build_perturbation_matrix(b, 3.0, 2).unwrap_err();
        assert!(matches!(err, Error::Element { .. }));
        assert!(err.is_input_error());
    }

    #[test]
    fn variational_spectrum() {
        let b = Basis::Spiked(OscillatorBasis::from_gamma(2.0).unwrap());
        let m = build_perturbation_matrix(b, 1.0, 5).unwrap();
        let ev = m.variational_eigenvalues(0.0);
        assert_eq!(ev, vec![4.0, 8.0, 12.0, 16.0, 20.0]);
        let ev = m.variational_eigenvalues(0.1);
        assert!(ev[0] > 4.0 && ev.windows(2).all(|w| w[0] <= w[1]));
    }
}

//! Dense complex matrices for one and two qubits, partial traces and
//! von Neumann entropy.
//!
//! Two-qubit matrices use the ordering `|a, b⟩ -> 2a + b`, with subsystem A
//! as the left tensor factor.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance shared by the Hermiticity, trace and positivity checks.
pub const STATE_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix of dimension 2 or 4, stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvalidConfig(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| ZERO)
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { ONE } else { ZERO })
    }

    /// Real diagonal matrix. Panics unless `diag` has length 2 or 4.
    pub fn diagonal(diag: &[f64]) -> Self {
        assert!(diag.len() == 2 || diag.len() == 4);
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Pauli matrix `σ_index`; index 0 is the 2x2 identity.
    ///
    /// Panics for an index outside `0..=3`.
    pub fn pauli(index: usize) -> Self {
        let e = match index {
            0 => [ONE, ZERO, ZERO, ONE],
            1 => [ZERO, ONE, ONE, ZERO],
            2 => [ZERO, -I, I, ZERO],
            3 => [ONE, ZERO, ZERO, -ONE],
            _ => panic!("Pauli index {index} out of range"),
        };
        Self {
            dim: 2,
            entries: e.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `op · self · op†`.
    pub fn conjugate_by(&self, op: &ComplexMatrix) -> Self {
        &(op * self) * &op.adjoint()
    }

    /// Largest entrywise modulus of `self - self†`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus of `self - other`. Dimensions must agree.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn require_dim(&self, expected: usize) -> Result<()> {
        if self.dim == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                got: self.dim,
            })
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, " ")?;
            for j in 0..self.dim {
                let z = self.get(i, j);
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sum dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix difference dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Which qubit of a two-qubit system to keep when tracing out the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Kronecker product of two single-qubit matrices.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.require_dim(2)?;
    b.require_dim(2)?;
    Ok(ComplexMatrix::from_fn(4, |r, c| {
        a.get(r / 2, c / 2) * b.get(r % 2, c % 2)
    }))
}

/// Partial trace of a 4x4 matrix, keeping `keep`. Works for any 4x4
/// matrix, not only states.
pub fn partial_trace(m: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    m.require_dim(4)?;
    let out = match keep {
        Subsystem::A => {
            ComplexMatrix::from_fn(2, |i, j| m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1))
        }
        Subsystem::B => ComplexMatrix::from_fn(2, |i, j| m.get(i, j) + m.get(2 + i, 2 + j)),
    };
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix in descending order.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let dev = m.hermitian_deviation();
    if dev > STATE_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let mut eigs = match m.dim {
        2 => {
            let a = m.get(0, 0).re;
            let d = m.get(1, 1).re;
            let b = m.get(0, 1);
            let mean = 0.5 * (a + d);
            let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            vec![mean + radius, mean - radius]
        }
        4 => {
            let mat = Matrix4::from_fn(|i, j| {
                // Symmetrize so the solver sees an exactly Hermitian input.
                0.5 * (m.get(i, j) + m.get(j, i).conj())
            });
            SymmetricEigen::new(mat)
                .eigenvalues
                .iter()
                .copied()
                .collect()
        }
        d => return Err(Error::UnsupportedDimension(d)),
    };
    eigs.sort_by(|a, b| b.total_cmp(a));
    Ok(eigs)
}

/// Shannon entropy in bits of a spectrum, applying `0 log 0 = 0` and
/// clipping roundoff negatives down to `-STATE_TOL`.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -STATE_TOL {
            return Err(Error::NotPositive(l));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let dev = mat.hermitian_deviation();
        if dev > STATE_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let tr = mat.trace();
        if (tr - ONE).norm() > STATE_TOL {
            return Err(Error::NotUnitTrace(tr.re));
        }
        let min = hermitian_eigenvalues(&mat)?
            .last()
            .copied()
            .unwrap_or_default();
        if min < -STATE_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { mat })
    }

    /// Divides by `trace` and symmetrizes away roundoff asymmetry, then
    /// validates.
    pub(crate) fn from_unnormalized(mat: &ComplexMatrix, trace: f64) -> Result<Self> {
        let herm = (mat + &mat.adjoint()).scale_real(0.5 / trace);
        Self::new(herm)
    }

    /// `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self {
            mat: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        })
    }

    /// `|ψ⟩⟨ψ|` for a normalized amplitude vector of length 2 or 4.
    pub fn pure(amplitudes: &[Complex64]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let n = amplitudes.len();
        let mat = ComplexMatrix::new(
            n,
            (0..n * n)
                .map(|k| amplitudes[k / n] * amplitudes[k % n].conj() / (norm * norm))
                .collect(),
        )?;
        Self::new(mat)
    }

    pub fn dim(&self) -> usize {
        self.mat.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Reduced state of one qubit of a two-qubit state.
    pub fn partial_trace(&self, keep: Subsystem) -> Result<DensityMatrix> {
        let reduced = partial_trace(&self.mat, keep)?;
        Ok(Self {
            mat: (&reduced + &reduced.adjoint()).scale_real(0.5),
        })
    }

    /// Product state `a ⊗ b` of two single-qubit states.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        Ok(Self {
            mat: tensor_product(&self.mat, &other.mat)?,
        })
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.mat).expect("density matrices are Hermitian")
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.mat)
    }
}

/// `S(ρ) = -Σ λ log₂ λ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    spectrum_entropy(&hermitian_eigenvalues(&rho.mat)?)
}

//! Bell-diagonal two-qubit states `¼(I + Σ c_i σ_i ⊗ σ_i)`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::qcore::{tensor_product, ComplexMatrix, DensityMatrix, STATE_TOL};

/// Largest tolerated off-pattern Pauli component when reading a density
/// matrix back as a Bell-diagonal state.
pub const BELL_DIAGONAL_TOL: f64 = 1e-10;

/// Correlation triple `(c1, c2, c3)` of a Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalState {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

/// The four eigenvalues `(1 ± c1 ± c2 ± c3)/4` in the fixed order
/// `(−,−,−), (−,+,+), (+,−,+), (+,+,−)`.
pub fn bell_eigenvalues(c1: f64, c2: f64, c3: f64) -> [f64; 4] {
    [
        (1.0 - c1 - c2 - c3) / 4.0,
        (1.0 - c1 + c2 + c3) / 4.0,
        (1.0 + c1 - c2 + c3) / 4.0,
        (1.0 + c1 + c2 - c3) / 4.0,
    ]
}

/// Whether `(c1, c2, c3)` describes a physical Bell-diagonal state.
pub fn validate(c1: f64, c2: f64, c3: f64) -> bool {
    [c1, c2, c3].iter().all(|c| c.is_finite() && c.abs() <= 1.0)
        && bell_eigenvalues(c1, c2, c3)
            .iter()
            .all(|&l| l >= -STATE_TOL)
}

/// `Tr[m (σ_i ⊗ σ_j)]`, the Pauli-basis coefficient of a 4x4 matrix.
pub fn pauli_component(m: &ComplexMatrix, i: usize, j: usize) -> Result<f64> {
    let basis = tensor_product(&ComplexMatrix::pauli(i), &ComplexMatrix::pauli(j))?;
    Ok((m * &basis).trace().re)
}

impl BellDiagonalState {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        if validate(c1, c2, c3) {
            Ok(Self { c1, c2, c3 })
        } else {
            Err(Error::InvalidBellState { c1, c2, c3 })
        }
    }

    pub fn from_components(c: [f64; 3]) -> Result<Self> {
        Self::new(c[0], c[1], c[2])
    }

    pub fn components(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        bell_eigenvalues(self.c1, self.c2, self.c3)
    }

    /// `max |c_i|`, which selects the optimal measurement axis.
    pub fn max_abs_component(&self) -> f64 {
        self.c1.abs().max(self.c2.abs()).max(self.c3.abs())
    }

    /// Index (1-based) of the Pauli axis with the largest `|c_i|`, lowest
    /// index on ties.
    pub fn dominant_axis(&self) -> usize {
        let c = self.components();
        let mut best = 0;
        for k in 1..3 {
            if c[k].abs() > c[best].abs() {
                best = k;
            }
        }
        best + 1
    }

    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        if !validate(self.c1, self.c2, self.c3) {
            return Err(Error::InvalidBellState {
                c1: self.c1,
                c2: self.c2,
                c3: self.c3,
            });
        }
        let mut acc = ComplexMatrix::identity(4);
        for (k, c) in self.components().into_iter().enumerate() {
            let s = ComplexMatrix::pauli(k + 1);
            acc = &acc + &tensor_product(&s, &s)?.scale_real(c);
        }
        DensityMatrix::new(acc.scale_real(0.25))
    }

    /// Reads `c_i = Tr[ρ σ_i⊗σ_i]`, rejecting any other Pauli component
    /// above [`BELL_DIAGONAL_TOL`].
    pub fn from_density_matrix(rho: &DensityMatrix) -> Result<Self> {
        let m = rho.matrix();
        if m.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: m.dim(),
            });
        }
        let mut c = [0.0; 3];
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                if i == 0 && j == 0 {
                    continue;
                }
                let t = pauli_component(m, i, j)?;
                if i == j {
                    c[i - 1] = t;
                } else {
                    worst = worst.max(t.abs());
                }
            }
        }
        if worst > BELL_DIAGONAL_TOL {
            return Err(Error::NotBellDiagonal(worst));
        }
        for ck in &mut c {
            if ck.abs() > 1.0 && ck.abs() <= 1.0 + STATE_TOL {
                *ck = ck.signum();
            }
        }
        Self::from_components(c)
    }

    /// Uniform on `[-1, 1]³` with rejection against [`validate`].
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let c1 = rng.random_range(-1.0..=1.0);
            let c2 = rng.random_range(-1.0..=1.0);
            let c3 = rng.random_range(-1.0..=1.0);
            if validate(c1, c2, c3) {
                return Self { c1, c2, c3 };
            }
        }
    }
}

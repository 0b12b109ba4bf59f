#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use weakdiscord_core::qcore::tensor_product;
use weakdiscord_core::{ComplexMatrix, DensityMatrix};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_matrix<R: Rng>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let entries = (0..dim * dim)
        .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::new(dim, entries).unwrap()
}

/// Mixture of three random pure states.
pub fn random_state<R: Rng>(rng: &mut R, dim: usize) -> DensityMatrix {
    let mut acc = ComplexMatrix::zeros(dim);
    let mut total = 0.0;
    for _ in 0..3 {
        let w: f64 = rng.random_range(0.0..1.0);
        let psi: Vec<Complex64> = (0..dim)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let pure = DensityMatrix::pure(&psi).unwrap();
        acc = &acc + &pure.matrix().scale_real(w);
        total += w;
    }
    let m = acc.scale_real(1.0 / total);
    let herm = (&m + &m.adjoint()).scale_real(0.5);
    DensityMatrix::new(herm).unwrap()
}

/// `exp(-i a n·σ)` for a random axis and angle.
pub fn random_qubit_unitary<R: Rng>(rng: &mut R) -> ComplexMatrix {
    let a: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let th: f64 = rng.random_range(0.0..std::f64::consts::PI);
    let ph: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let n = [th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos()];
    let mut u = ComplexMatrix::identity(2).scale_real(a.cos());
    for (k, nk) in n.iter().enumerate() {
        u = &u + &ComplexMatrix::pauli(k + 1).scale(c(0.0, -a.sin() * nk));
    }
    let phase: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    u.scale(Complex64::from_polar(1.0, phase))
}

/// Local unitaries around a CNOT, so the result is entangling.
pub fn random_two_qubit_unitary<R: Rng>(rng: &mut R) -> ComplexMatrix {
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let cnot = ComplexMatrix::new(
        4,
        vec![
            one, zero, zero, zero, zero, one, zero, zero, zero, zero, zero, one, zero, zero, one,
            zero,
        ],
    )
    .unwrap();
    let before = tensor_product(&random_qubit_unitary(rng), &random_qubit_unitary(rng)).unwrap();
    let after = tensor_product(&random_qubit_unitary(rng), &random_qubit_unitary(rng)).unwrap();
    &(&after * &cnot) * &before
}

//! Projective and weak two-outcome measurements on qubit B.
//!
//! For a Bloch direction `n` the projector pair is `Π₀ = (I + n·σ)/2`,
//! `Π₁ = (I − n·σ)/2`, and the weak pair of strength `x` is
//! `P(±x) = √((1 ∓ tanh x)/2) Π₀ + √((1 ± tanh x)/2) Π₁`.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{Error, Result};
use crate::qcore::{hermitian_eigenvalues, spectrum_entropy, ComplexMatrix, DensityMatrix};

/// Outcomes less likely than this have no conditional state.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;

/// Polar/azimuthal angles of a unit Bloch vector, `θ ∈ [0, π]`,
/// `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochDirection {
    theta: f64,
    phi: f64,
}

impl BlochDirection {
    /// Builds a direction from arbitrary real angles, folding them into the
    /// canonical ranges.
    pub fn new(theta: f64, phi: f64) -> Self {
        let [x, y, z] = bloch_vector(theta, phi);
        let theta = z.clamp(-1.0, 1.0).acos();
        let mut phi = if x == 0.0 && y == 0.0 {
            0.0
        } else {
            y.atan2(x)
        };
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// Direction of Pauli axis `σ_k`, `k ∈ {1, 2, 3}`. Panics otherwise.
    pub fn axis(k: usize) -> Self {
        match k {
            1 => Self::new(FRAC_PI_2, 0.0),
            2 => Self::new(FRAC_PI_2, FRAC_PI_2),
            3 => Self::new(0.0, 0.0),
            _ => panic!("Pauli axis {k} out of range"),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn vector(&self) -> [f64; 3] {
        bloch_vector(self.theta, self.phi)
    }

    /// `|n · n'|`; 1 when the two directions define the same measurement.
    pub fn alignment(&self, other: &BlochDirection) -> f64 {
        let a = self.vector();
        let b = other.vector();
        (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).abs()
    }
}

fn bloch_vector(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

fn n_dot_sigma(n: [f64; 3]) -> ComplexMatrix {
    (1..=3).fold(ComplexMatrix::zeros(2), |acc, k| {
        &acc + &ComplexMatrix::pauli(k).scale_real(n[k - 1])
    })
}

/// `(Π₀, Π₁) = ((I + n·σ)/2, (I − n·σ)/2)`.
pub fn projectors(d: &BlochDirection) -> (ComplexMatrix, ComplexMatrix) {
    let id = ComplexMatrix::identity(2);
    let ns = n_dot_sigma(d.vector());
    ((&id + &ns).scale_real(0.5), (&id - &ns).scale_real(0.5))
}

/// Weak measurement of strength `x` along a Bloch direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakMeasurementPair {
    direction: BlochDirection,
    x: f64,
}

impl WeakMeasurementPair {
    /// `x = +∞` is accepted and yields the projective pair.
    pub fn new(direction: BlochDirection, x: f64) -> Result<Self> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::NegativeStrength(x));
        }
        Ok(Self { direction, x })
    }

    pub fn direction(&self) -> BlochDirection {
        self.direction
    }

    pub fn strength(&self) -> f64 {
        self.x
    }
}

/// `(P(+x), P(−x))`.
pub fn weak_operators(m: &WeakMeasurementPair) -> (ComplexMatrix, ComplexMatrix) {
    let (pi0, pi1) = projectors(&m.direction);
    let t = m.x.tanh();
    let lo = ((1.0 - t) / 2.0).sqrt();
    let hi = ((1.0 + t) / 2.0).sqrt();
    let plus = &pi0.scale_real(lo) + &pi1.scale_real(hi);
    let minus = &pi0.scale_real(hi) + &pi1.scale_real(lo);
    (plus, minus)
}

/// How a measurement on B is performed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strength {
    Projective,
    Weak(f64),
}

impl Strength {
    /// The two measurement operators along `d`.
    pub fn operators(&self, d: &BlochDirection) -> Result<[ComplexMatrix; 2]> {
        match *self {
            Strength::Projective => {
                let (a, b) = projectors(d);
                Ok([a, b])
            }
            Strength::Weak(x) => {
                let (a, b) = weak_operators(&WeakMeasurementPair::new(*d, x)?);
                Ok([a, b])
            }
        }
    }
}

/// Applies `I_A ⊗ m` to a two-qubit state and returns the normalized
/// post-measurement state of A with the outcome probability.
pub fn conditioned_state_prob(
    rho: &DensityMatrix,
    m: &ComplexMatrix,
) -> Result<(DensityMatrix, f64)> {
    let (unnormalized, prob) = unnormalized_conditional(rho, m)?;
    if prob < MIN_OUTCOME_PROBABILITY {
        return Err(Error::ZeroProbability(prob));
    }
    Ok((DensityMatrix::from_unnormalized(&unnormalized, prob)?, prob))
}

/// `Tr_B[(I ⊗ m) ρ (I ⊗ m)†]` and its trace, evaluated blockwise as
/// `[Tr(m†m ρ_ij)]_ij` over the 2x2 blocks `ρ_ij` of ρ.
fn unnormalized_conditional(
    rho: &DensityMatrix,
    m: &ComplexMatrix,
) -> Result<(ComplexMatrix, f64)> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: m.dim(),
        });
    }
    let effect = &m.adjoint() * m;
    let r = rho.matrix();
    let mut entries = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let mut z = num_complex::Complex64::new(0.0, 0.0);
            for k in 0..2 {
                for l in 0..2 {
                    z += effect.get(l, k) * r.get(2 * i + k, 2 * j + l);
                }
            }
            entries.push(z);
        }
    }
    let reduced = ComplexMatrix::new(2, entries)?;
    let prob = reduced.trace().re;
    Ok((reduced, prob))
}

/// `Σ_k p_k S(ρ_{A|k})` over the outcomes of `ops`; outcomes below
/// [`MIN_OUTCOME_PROBABILITY`] contribute nothing.
pub fn average_conditional_entropy(rho: &DensityMatrix, ops: &[ComplexMatrix]) -> Result<f64> {
    let mut total = 0.0;
    for m in ops {
        let (reduced, prob) = unnormalized_conditional(rho, m)?;
        if prob < MIN_OUTCOME_PROBABILITY {
            continue;
        }
        let herm = (&reduced + &reduced.adjoint()).scale_real(0.5 / prob);
        total += prob * spectrum_entropy(&hermitian_eigenvalues(&herm)?)?;
    }
    Ok(total)
}

/// Conditional entropy objective for direction angles `(θ, φ)`, accepting
/// any real angles.
pub fn conditional_entropy_at(
    rho: &DensityMatrix,
    strength: Strength,
    theta: f64,
    phi: f64,
) -> Result<f64> {
    let d = BlochDirection::new(theta, phi);
    average_conditional_entropy(rho, &strength.operators(&d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{partial_trace, tensor_product, Subsystem};
    use crate::states::BellDiagonalState;
    use std::f64::consts::PI;

    fn near(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
        a.max_abs_diff(b) <= tol
    }

    #[test]
    fn direction_canonicalization() {
        let d = BlochDirection::new(-0.3, 7.0);
        assert!((0.0..=PI).contains(&d.theta()));
        assert!((0.0..TAU).contains(&d.phi()));
        assert!(d.alignment(&BlochDirection::new(-0.3, 7.0)) > 1.0 - 1e-15);
        let [x, y, z] = d.vector();
        assert!(((x * x + y * y + z * z) - 1.0).abs() < 1e-12);
        assert_eq!(BlochDirection::new(0.0, 1.3).phi(), 0.0);
    }

    #[test]
    fn z_and_x_basis_projectors() {
        let (p0, p1) = projectors(&BlochDirection::axis(3));
        assert!(near(&p0, &ComplexMatrix::diagonal(&[1.0, 0.0]), 1e-15));
        assert!(near(&p1, &ComplexMatrix::diagonal(&[0.0, 1.0]), 1e-15));

        let (p0, p1) = projectors(&BlochDirection::new(FRAC_PI_2, 0.0));
        let id = ComplexMatrix::identity(2);
        let x = ComplexMatrix::pauli(1);
        assert!(near(&p0, &(&id + &x).scale_real(0.5), 1e-15));
        assert!(near(&p1, &(&id - &x).scale_real(0.5), 1e-15));
    }

    #[test]
    fn weak_operators_at_zero_strength() {
        let m = WeakMeasurementPair::new(BlochDirection::new(1.1, 2.3), 0.0).unwrap();
        let (plus, minus) = weak_operators(&m);
        let target = ComplexMatrix::identity(2).scale_real(std::f64::consts::FRAC_1_SQRT_2);
        assert!(near(&plus, &target, 1e-15));
        assert!(near(&minus, &target, 1e-15));
    }

    #[test]
    fn weak_operators_strong_limit() {
        let d = BlochDirection::new(0.7, 4.0);
        let (pi0, pi1) = projectors(&d);
        let (plus, minus) = weak_operators(&WeakMeasurementPair::new(d, 40.0).unwrap());
        assert!(near(&plus, &pi1, 1e-15));
        assert!(near(&minus, &pi0, 1e-15));
        let (plus, minus) = weak_operators(&WeakMeasurementPair::new(d, f64::INFINITY).unwrap());
        assert!(near(&plus, &pi1, 0.0) && near(&minus, &pi0, 0.0));
    }

    #[test]
    fn weak_operator_z_direction_at_half() {
        let t = 0.5f64.tanh();
        assert!((t - 0.46212).abs() < 1e-5);
        let (plus, _) =
            weak_operators(&WeakMeasurementPair::new(BlochDirection::axis(3), 0.5).unwrap());
        let expected =
            ComplexMatrix::diagonal(&[((1.0 - t) / 2.0).sqrt(), ((1.0 + t) / 2.0).sqrt()]);
        assert!(near(&plus, &expected, 1e-15));
    }

    #[test]
    fn negative_strength_rejected() {
        assert!(WeakMeasurementPair::new(BlochDirection::axis(1), -0.1).is_err());
        assert!(WeakMeasurementPair::new(BlochDirection::axis(1), f64::NAN).is_err());
    }

    #[test]
    fn maximally_mixed_conditioning() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        let (pi0, _) = projectors(&BlochDirection::new(0.4, 1.0));
        let (cond, prob) = conditioned_state_prob(&rho, &pi0).unwrap();
        assert!((prob - 0.5).abs() < 1e-15);
        let half = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(near(cond.matrix(), half.matrix(), 1e-15));
    }

    #[test]
    fn zero_strength_leaves_marginal() {
        let s = BellDiagonalState::new(0.2, -0.5, 0.1).unwrap();
        let rho_a = DensityMatrix::new(ComplexMatrix::diagonal(&[0.9, 0.1])).unwrap();
        let rho = rho_a
            .tensor(&DensityMatrix::maximally_mixed(2).unwrap())
            .unwrap();
        for state in [s.to_density_matrix().unwrap(), rho] {
            let m = WeakMeasurementPair::new(BlochDirection::new(2.0, 0.5), 0.0).unwrap();
            let (plus, _) = weak_operators(&m);
            let (cond, prob) = conditioned_state_prob(&state, &plus).unwrap();
            assert!((prob - 0.5).abs() < 1e-15);
            let marginal = state.partial_trace(Subsystem::A).unwrap();
            assert!(near(cond.matrix(), marginal.matrix(), 1e-15));
        }
    }

    #[test]
    fn workbench_z_projector_matches_explicit_arithmetic() {
        let rho = BellDiagonalState::new(1.0, -0.6, 0.6)
            .unwrap()
            .to_density_matrix()
            .unwrap();
        let (pi0, _) = projectors(&BlochDirection::axis(3));
        let (cond, prob) = conditioned_state_prob(&rho, &pi0).unwrap();

        // I ⊗ diag(1, 0) keeps rows/cols with b = 0 (indices 0 and 2).
        let m = rho.matrix();
        let p = m.get(0, 0).re + m.get(2, 2).re;
        assert!((prob - p).abs() < 1e-15);
        let expected = ComplexMatrix::new(
            2,
            vec![
                m.get(0, 0) / p,
                m.get(0, 2) / p,
                m.get(2, 0) / p,
                m.get(2, 2) / p,
            ],
        )
        .unwrap();
        assert!(near(cond.matrix(), &expected, 1e-15));
        // Generic direction against the full (I ⊗ m) ρ (I ⊗ m)† product.
        let (_, pi1) = projectors(&BlochDirection::new(1.2, 0.4));
        let post = rho
            .matrix()
            .conjugate_by(&tensor_product(&ComplexMatrix::identity(2), &pi1).unwrap());
        let direct = partial_trace(&post, Subsystem::A).unwrap();
        let p1 = direct.trace().re;
        let (cond1, prob1) = conditioned_state_prob(&rho, &pi1).unwrap();
        assert!((prob1 - p1).abs() < 1e-15);
        assert!(near(cond1.matrix(), &direct.scale_real(1.0 / p1), 1e-14));

        // c3 = 0.6 along z: conditional Bloch vector (0, 0, 0.6).
        assert!((prob - 0.5).abs() < 1e-15);
        assert!((cond.matrix().get(0, 0).re - 0.8).abs() < 1e-15);
    }

    #[test]
    fn zero_probability_outcome() {
        let rho_b = DensityMatrix::new(ComplexMatrix::diagonal(&[1.0, 0.0])).unwrap();
        let rho = DensityMatrix::maximally_mixed(2)
            .unwrap()
            .tensor(&rho_b)
            .unwrap();
        let (_, pi1) = projectors(&BlochDirection::axis(3));
        assert!(matches!(
            conditioned_state_prob(&rho, &pi1),
            Err(Error::ZeroProbability(_))
        ));
        let ops = Strength::Projective
            .operators(&BlochDirection::axis(3))
            .unwrap();
        assert!((average_conditional_entropy(&rho, &ops).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_single_qubit_input() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let (pi0, _) = projectors(&BlochDirection::axis(3));
        assert!(conditioned_state_prob(&rho, &pi0).is_err());
    }
}

//! Local Pauli dephasing channels acting identically on both qubits.
//!
//! A channel of kind σ_k has Kraus pair `√(1 − p/2) I`, `√(p/2) σ_k` with
//! `p(t) = 1 − e^{−γt}`. On a Bell-diagonal state it preserves `c_k` and
//! damps the other two coefficients by `(1 − p)² = e^{−2γt}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qcore::{tensor_product, ComplexMatrix, DensityMatrix};
use crate::states::BellDiagonalState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    PhaseFlip,
    BitFlip,
    BitPhaseFlip,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [Self::PhaseFlip, Self::BitFlip, Self::BitPhaseFlip];

    /// Index of the Pauli operator in the second Kraus element, which is
    /// also the (1-based) Bell-diagonal coefficient left untouched.
    pub fn pauli_index(self) -> usize {
        match self {
            Self::BitFlip => 1,
            Self::BitPhaseFlip => 2,
            Self::PhaseFlip => 3,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Self::PhaseFlip => "phase",
            Self::BitFlip => "bit",
            Self::BitPhaseFlip => "bitphase",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ChannelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "phase" => Ok(Self::PhaseFlip),
            "bit" => Ok(Self::BitFlip),
            "bitphase" => Ok(Self::BitPhaseFlip),
            other => Err(format!(
                "unknown channel `{other}` (expected phase, bit or bitphase)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliChannel {
    kind: ChannelKind,
    gamma: f64,
}

impl PauliChannel {
    pub fn new(kind: ChannelKind, gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma >= 0.0) {
            return Err(Error::InvalidRate(gamma));
        }
        Ok(Self { kind, gamma })
    }

    /// Channel with unit rate, so that times are measured in `γt`.
    pub fn unit_rate(kind: ChannelKind) -> Self {
        Self { kind, gamma: 1.0 }
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Mixing parameter `p(t) = 1 − e^{−γt}`.
    pub fn mixing(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        Ok(-(-self.gamma * t).exp_m1())
    }

    /// Factor `e^{−2γt}` applied to the two damped Bell coefficients.
    pub fn damping(&self, t: f64) -> Result<f64> {
        check_time(t)?;
        Ok((-2.0 * self.gamma * t).exp())
    }
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 {
        Ok(())
    } else {
        Err(Error::NegativeTime(t))
    }
}

/// Single-qubit Kraus operators of a channel.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    ops: Vec<ComplexMatrix>,
}

impl KrausSet {
    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    /// `Σ E_k† E_k`, which equals the identity for a trace-preserving set.
    pub fn completeness(&self) -> ComplexMatrix {
        self.ops
            .iter()
            .map(|e| &e.adjoint() * e)
            .fold(ComplexMatrix::zeros(2), |acc, m| &acc + &m)
    }
}

pub fn kraus_operators(ch: &PauliChannel, t: f64) -> Result<KrausSet> {
    let p = ch.mixing(t)?;
    let keep = ComplexMatrix::identity(2).scale_real((1.0 - p / 2.0).sqrt());
    let flip = ComplexMatrix::pauli(ch.kind.pauli_index()).scale_real((p / 2.0).sqrt());
    Ok(KrausSet {
        ops: vec![keep, flip],
    })
}

/// `ρ(t) = Σ_{ij} (E_i ⊗ E_j) ρ (E_i ⊗ E_j)†` with the same channel on
/// both qubits.
pub fn kraus_apply(rho: &DensityMatrix, ch: &PauliChannel, t: f64) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let kraus = kraus_operators(ch, t)?;
    let mut out = ComplexMatrix::zeros(4);
    for ei in kraus.ops() {
        for ej in kraus.ops() {
            let local = tensor_product(ei, ej)?;
            out = &out + &rho.matrix().conjugate_by(&local);
        }
    }
    DensityMatrix::from_unnormalized(&out, 1.0)
}

/// Closed-form flow of the Bell coefficients under the channel.
pub fn evolve_c(s: &BellDiagonalState, ch: &PauliChannel, t: f64) -> Result<BellDiagonalState> {
    let damp = ch.damping(t)?;
    let keep = ch.kind.pauli_index() - 1;
    let mut c = s.components();
    for (k, ck) in c.iter_mut().enumerate() {
        if k != keep {
            *ck *= damp;
        }
    }
    BellDiagonalState::from_components(c)
}

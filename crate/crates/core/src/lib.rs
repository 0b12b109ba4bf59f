//! Quantum discord and super quantum discord (discord under weak
//! measurements) of two-qubit states, Pauli dephasing dynamics of
//! Bell-diagonal states, and detection of sudden changes in the resulting
//! correlation trajectories.
//!
//! All entropies and correlation measures are in bits.

pub mod channels;
pub mod correlations;
pub mod dynamics;
pub mod error;
pub mod measurements;
pub mod optimize;
pub mod qcore;
pub mod states;

pub use channels::{evolve_c, kraus_apply, kraus_operators, ChannelKind, KrausSet, PauliChannel};
pub use correlations::{
    classical_correlation_numeric, discord_bell_closed, discord_numeric, mutual_information,
    sqd_bell_closed, sqd_numeric, CorrelationResult, CorrelationSummary, Method,
};
pub use dynamics::{
    detect_kink, strongest_kink, sweep, transition_time_analytic, KinkReport, Series, SweepConfig,
    TrajectoryPoint,
};
pub use error::{Error, Result};
pub use measurements::{BlochDirection, Strength, WeakMeasurementPair};
pub use qcore::{ComplexMatrix, DensityMatrix, Subsystem};
pub use states::BellDiagonalState;

//! Correlation trajectories under a dephasing channel and detection of the
//! slope discontinuity ("sudden change") they show when the optimal
//! measurement axis switches.

use rayon::prelude::*;
use serde::Serialize;

use crate::channels::{evolve_c, PauliChannel};
use crate::correlations::{summary_closed, summary_numeric, CorrelationSummary, Method};
use crate::error::{Error, Result};
use crate::states::BellDiagonalState;

/// Default flagging threshold for slope jumps, bits per unit `γt`.
pub const DEFAULT_KINK_THRESHOLD: f64 = 0.5;

/// One-sided slope window, in grid intervals.
pub const SLOPE_WINDOW: usize = 3;

/// Local maxima of the jump profile at or below this are not reported.
pub const JUMP_NOISE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub initial: BellDiagonalState,
    pub channel: PauliChannel,
    pub x_values: Vec<f64>,
    /// End of the grid in units of `γt`.
    pub t_max: f64,
    pub steps: usize,
    pub method: Method,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "t_max must be positive, got {}",
                self.t_max
            )));
        }
        if self.channel.gamma() <= 0.0 {
            return Err(Error::InvalidConfig(
                "sweeps need a positive dephasing rate".into(),
            ));
        }
        if let Some(&x) = self.x_values.iter().find(|x| x.is_nan() || **x < 0.0) {
            return Err(Error::NegativeStrength(x));
        }
        Ok(())
    }

    /// Uniform `γt` grid including both endpoints.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.t_max
                } else {
                    self.t_max * i as f64 / last
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub gamma_t: f64,
    pub mutual_info: f64,
    pub classical: f64,
    pub discord: f64,
    /// `(x, D_w(x))` in the order the strengths were requested.
    pub sqd: Vec<(f64, f64)>,
}

impl TrajectoryPoint {
    fn from_summary(gamma_t: f64, xs: &[f64], s: CorrelationSummary) -> Self {
        Self {
            gamma_t,
            mutual_info: s.mutual_info,
            classical: s.classical,
            discord: s.discord,
            sqd: xs.iter().copied().zip(s.sqd).collect(),
        }
    }
}

/// Evaluates every measure on the configured grid. Points are computed in
/// parallel and returned in grid order.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<TrajectoryPoint>> {
    cfg.validate()?;
    let gamma = cfg.channel.gamma();
    cfg.grid()
        .into_par_iter()
        .map(|gamma_t| {
            let state = evolve_c(&cfg.initial, &cfg.channel, gamma_t / gamma)?;
            let summary = match cfg.method {
                Method::ClosedForm => summary_closed(&state, &cfg.x_values)?,
                Method::Numeric => summary_numeric(&state.to_density_matrix()?, &cfg.x_values)?,
            };
            Ok(TrajectoryPoint::from_summary(
                gamma_t,
                &cfg.x_values,
                summary,
            ))
        })
        .collect()
}

/// A named column of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Series {
    MutualInfo,
    Classical,
    Discord,
    /// Index into the requested strengths.
    Sqd(usize),
}

impl Series {
    pub fn name(&self, x_values: &[f64]) -> String {
        match self {
            Series::MutualInfo => "mutual_info".into(),
            Series::Classical => "classical".into(),
            Series::Discord => "discord".into(),
            Series::Sqd(k) => format!("sqd_x={}", x_values[*k]),
        }
    }

    pub fn extract(&self, points: &[TrajectoryPoint]) -> Vec<(f64, f64)> {
        points
            .iter()
            .map(|p| {
                let v = match self {
                    Series::MutualInfo => p.mutual_info,
                    Series::Classical => p.classical,
                    Series::Discord => p.discord,
                    Series::Sqd(k) => p.sqd[*k].1,
                };
                (p.gamma_t, v)
            })
            .collect()
    }
}

/// `γt` at which a damped Bell coefficient falls to the magnitude of the
/// preserved one; `None` when the preserved coefficient is already
/// dominant, is zero, or the channel has zero rate.
pub fn transition_time_analytic(s: &BellDiagonalState, ch: &PauliChannel) -> Option<f64> {
    if ch.gamma() <= 0.0 {
        return None;
    }
    let keep = ch.kind().pauli_index() - 1;
    let c = s.components();
    let preserved = c[keep].abs();
    let damped = (0..3)
        .filter(|&k| k != keep)
        .map(|k| c[k].abs())
        .fold(0.0, f64::max);
    (preserved > 0.0 && damped > preserved).then(|| 0.5 * (damped / preserved).ln())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KinkReport {
    pub series_name: String,
    pub gamma_t_star: f64,
    /// `|right slope − left slope|`, bits per unit `γt`.
    pub slope_jump: f64,
    pub flagged: bool,
}

/// `(index, |right − left|)` for every interior point at least one slope
/// window away from both ends.
fn jump_profile(series: &[(f64, f64)]) -> Result<(usize, Vec<(usize, f64)>)> {
    let n = series.len();
    if n < 7 {
        return Err(Error::GridTooCoarse(n));
    }
    let dt = (series[n - 1].0 - series[0].0) / (n - 1) as f64;
    if dt.is_nan()
        || dt <= 0.0
        || series
            .windows(2)
            .any(|w| ((w[1].0 - w[0].0) - dt).abs() > 1e-6 * dt + 1e-8)
    {
        return Err(Error::NonUniformGrid);
    }
    let w = SLOPE_WINDOW.min((n - 1) / 6);
    let span = w as f64 * dt;
    // Signed right-minus-left slope difference at every point with a full
    // window on both sides.
    let raw: Vec<f64> = (w..n - w)
        .map(|i| {
            let left = (series[i].1 - series[i - w].1) / span;
            let right = (series[i + w].1 - series[i].1) / span;
            right - left
        })
        .collect();
    // Smooth curvature makes the raw difference nonzero everywhere; the
    // mean of the two values 2w away (outside the kink's footprint)
    // estimates that background and is subtracted.
    let profile = (2 * w..raw.len() - 2 * w)
        .map(|k| {
            let background = 0.5 * (raw[k - 2 * w] + raw[k + 2 * w]);
            (k + w, (raw[k] - background).abs())
        })
        .collect();
    Ok((w, profile))
}

fn report(
    name: &str,
    series: &[(f64, f64)],
    (i, jump): (usize, f64),
    threshold: f64,
) -> KinkReport {
    KinkReport {
        series_name: name.to_string(),
        gamma_t_star: series[i].0,
        slope_jump: jump,
        flagged: jump > threshold,
    }
}

/// Interior local maxima of the slope jump along a uniformly sampled
/// series, each flagged when its jump exceeds `threshold`.
///
/// Slopes come from one-sided differences over [`SLOPE_WINDOW`] intervals,
/// with the smooth-curvature background subtracted. The first and last
/// candidate points are never maxima, so a slope that diverges at an
/// endpoint (as the entropy does when an eigenvalue starts at zero) does
/// not register as a kink.
pub fn detect_kink(name: &str, series: &[(f64, f64)], threshold: f64) -> Result<Vec<KinkReport>> {
    let (w, profile) = jump_profile(series)?;
    Ok(local_maxima(&profile, 2 * w)
        .map(|p| report(name, series, p, threshold))
        .collect())
}

/// Points of the profile that dominate everything within `radius` on
/// either side (earlier neighbours strictly), excluding both ends. The
/// background subtraction leaves half-height side lobes exactly `radius`
/// away from a true kink, which this suppresses.
fn local_maxima(
    profile: &[(usize, f64)],
    radius: usize,
) -> impl Iterator<Item = (usize, f64)> + '_ {
    let n = profile.len();
    (1..n.saturating_sub(1)).filter_map(move |k| {
        let v = profile[k].1;
        let before = profile[k.saturating_sub(radius)..k].iter().all(|p| v > p.1);
        let after = profile[k + 1..(k + radius + 1).min(n)]
            .iter()
            .all(|p| v >= p.1);
        (before && after && v > JUMP_NOISE_FLOOR).then_some(profile[k])
    })
}

/// The largest interior local maximum of the slope jump (earliest on
/// ties), reported whether or not it is flagged. A series without one
/// reports its largest jump anywhere.
pub fn strongest_kink(name: &str, series: &[(f64, f64)], threshold: f64) -> Result<KinkReport> {
    let (w, profile) = jump_profile(series)?;
    let pick = |best: (usize, f64), p: (usize, f64)| if p.1 > best.1 { p } else { best };
    let best = local_maxima(&profile, 2 * w)
        .reduce(pick)
        .or_else(|| profile.iter().copied().reduce(pick))
        .ok_or(Error::GridTooCoarse(series.len()))?;
    Ok(report(name, series, best, threshold))
}

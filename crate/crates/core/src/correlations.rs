//! Mutual information, classical correlation, discord and super quantum
//! discord (weak-measurement discord), all in bits.
//!
//! Every measure has a numeric path, which minimizes the conditional
//! entropy of A over measurement directions on B, and a closed form
//! valid for Bell-diagonal states. The two paths are independent and are
//! checked against each other in the test suites.
//!
//! At `x = 0` the weak operators are `I/√2`, so the weak conditional
//! entropy equals `S(ρ_A)` and the super quantum discord equals the mutual
//! information, not the projective discord.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measurements::{conditional_entropy_at, BlochDirection, Strength};
use crate::optimize::SphereMinimizer;
use crate::qcore::{DensityMatrix, Subsystem};
use crate::states::BellDiagonalState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Numeric,
    #[serde(rename = "closed")]
    ClosedForm,
}

impl Method {
    pub fn token(self) -> &'static str {
        match self {
            Method::Numeric => "numeric",
            Method::ClosedForm => "closed",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "numeric" => Ok(Method::Numeric),
            "closed" => Ok(Method::ClosedForm),
            other => Err(format!(
                "unknown method `{other}` (expected closed or numeric)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationResult {
    pub value: f64,
    /// Minimizing measurement direction on B; absent for closed forms.
    pub argmin: Option<BlochDirection>,
    pub method: Method,
}

impl CorrelationResult {
    fn numeric(value: f64, argmin: BlochDirection) -> Self {
        Self {
            value,
            argmin: Some(argmin),
            method: Method::Numeric,
        }
    }

    fn closed(value: f64) -> Self {
        Self {
            value,
            argmin: None,
            method: Method::ClosedForm,
        }
    }
}

fn xlog2x(v: f64) -> f64 {
    if v > 0.0 {
        v * v.log2()
    } else {
        0.0
    }
}

/// `((1 − u)/2) log₂(1 − u) + ((1 + u)/2) log₂(1 + u)`, i.e.
/// `1 − H₂((1 + u)/2)`, for `u ∈ [0, 1]`.
pub fn binary_information(u: f64) -> f64 {
    let u = u.clamp(-1.0, 1.0);
    0.5 * (xlog2x(1.0 - u) + xlog2x(1.0 + u))
}

/// `¼ Σ (1 ± c1 ± c2 ± c3) log₂(1 ± c1 ± c2 ± c3)`, which is `2 − S(ρ_AB)`
/// and therefore the mutual information of the state.
fn bell_spectrum_term(s: &BellDiagonalState) -> f64 {
    s.eigenvalues().iter().map(|l| xlog2x(4.0 * l)).sum::<f64>() / 4.0
}

fn check_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() == 4 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        })
    }
}

fn check_strength(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        Err(Error::NegativeStrength(x))
    } else {
        Ok(())
    }
}

/// `I = S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    check_two_qubit(rho)?;
    let s_a = rho.partial_trace(Subsystem::A)?.entropy()?;
    let s_b = rho.partial_trace(Subsystem::B)?.entropy()?;
    Ok(s_a + s_b - rho.entropy()?)
}

/// Minimum over directions on B of the average conditional entropy of A.
pub fn min_conditional_entropy(
    rho: &DensityMatrix,
    strength: Strength,
) -> Result<(f64, BlochDirection)> {
    min_conditional_entropy_with(rho, strength, &SphereMinimizer::default())
}

pub fn min_conditional_entropy_with(
    rho: &DensityMatrix,
    strength: Strength,
    minimizer: &SphereMinimizer,
) -> Result<(f64, BlochDirection)> {
    check_two_qubit(rho)?;
    if let Strength::Weak(x) = strength {
        check_strength(x)?;
    }
    let m = minimizer.minimize(|theta, phi| conditional_entropy_at(rho, strength, theta, phi))?;
    Ok((m.value, BlochDirection::new(m.theta, m.phi)))
}

/// `C = S(ρ_A) − min Σ p_k S(ρ_{A|k})` over projective measurements on B.
pub fn classical_correlation_numeric(rho: &DensityMatrix) -> Result<CorrelationResult> {
    let (min, dir) = min_conditional_entropy(rho, Strength::Projective)?;
    let s_a = rho.partial_trace(Subsystem::A)?.entropy()?;
    Ok(CorrelationResult::numeric(s_a - min, dir))
}

/// `D = S(ρ_B) − S(ρ_AB) + min Σ p_k S(ρ_{A|k})`.
pub fn discord_numeric(rho: &DensityMatrix) -> Result<CorrelationResult> {
    let (min, dir) = min_conditional_entropy(rho, Strength::Projective)?;
    let s_b = rho.partial_trace(Subsystem::B)?.entropy()?;
    Ok(CorrelationResult::numeric(s_b - rho.entropy()? + min, dir))
}

/// `D_w = S(ρ_B) − S(ρ_AB) + min S_w(A | P^B(x))`.
pub fn sqd_numeric(rho: &DensityMatrix, x: f64) -> Result<CorrelationResult> {
    check_strength(x)?;
    let (min, dir) = min_conditional_entropy(rho, Strength::Weak(x))?;
    let s_b = rho.partial_trace(Subsystem::B)?.entropy()?;
    Ok(CorrelationResult::numeric(s_b - rho.entropy()? + min, dir))
}

/// Mutual information of a Bell-diagonal state from its spectrum.
pub fn mutual_information_bell(s: &BellDiagonalState) -> f64 {
    bell_spectrum_term(s)
}

/// `C = binary_information(max |c_i|)` for a Bell-diagonal state.
pub fn classical_bell_closed(s: &BellDiagonalState) -> CorrelationResult {
    CorrelationResult::closed(binary_information(s.max_abs_component()))
}

/// `D = I − C` for a Bell-diagonal state.
pub fn discord_bell_closed(s: &BellDiagonalState) -> CorrelationResult {
    CorrelationResult::closed(bell_spectrum_term(s) - binary_information(s.max_abs_component()))
}

/// Closed-form super quantum discord of a Bell-diagonal state,
/// `−binary_information(c · tanh x) + ¼ Σ (1 ± c1 ± c2 ± c3) log₂(…)`
/// with `c = max |c_i|`.
pub fn sqd_bell_closed(s: &BellDiagonalState, x: f64) -> Result<CorrelationResult> {
    check_strength(x)?;
    let u = (s.max_abs_component() * x.tanh()).min(1.0);
    Ok(CorrelationResult::closed(
        bell_spectrum_term(s) - binary_information(u),
    ))
}

/// All measures of one state, sharing the projective minimization between
/// the classical correlation and the discord.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSummary {
    pub mutual_info: f64,
    pub classical: f64,
    pub discord: f64,
    /// One value per requested strength, in request order.
    pub sqd: Vec<f64>,
    pub discord_argmin: Option<BlochDirection>,
    pub sqd_argmin: Vec<Option<BlochDirection>>,
}

pub fn summary_closed(s: &BellDiagonalState, xs: &[f64]) -> Result<CorrelationSummary> {
    let sqd = xs
        .iter()
        .map(|&x| sqd_bell_closed(s, x).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrelationSummary {
        mutual_info: mutual_information_bell(s),
        classical: classical_bell_closed(s).value,
        discord: discord_bell_closed(s).value,
        sqd,
        discord_argmin: None,
        sqd_argmin: vec![None; xs.len()],
    })
}

pub fn summary_numeric(rho: &DensityMatrix, xs: &[f64]) -> Result<CorrelationSummary> {
    check_two_qubit(rho)?;
    let s_a = rho.partial_trace(Subsystem::A)?.entropy()?;
    let s_b = rho.partial_trace(Subsystem::B)?.entropy()?;
    let s_ab = rho.entropy()?;
    let (min, dir) = min_conditional_entropy(rho, Strength::Projective)?;
    let mut sqd = Vec::with_capacity(xs.len());
    let mut sqd_argmin = Vec::with_capacity(xs.len());
    for &x in xs {
        check_strength(x)?;
        let (w, d) = min_conditional_entropy(rho, Strength::Weak(x))?;
        sqd.push(s_b - s_ab + w);
        sqd_argmin.push(Some(d));
    }
    Ok(CorrelationSummary {
        mutual_info: s_a + s_b - s_ab,
        classical: s_a - min,
        discord: s_b - s_ab + min,
        sqd,
        discord_argmin: Some(dir),
        sqd_argmin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::ComplexMatrix;

    fn workbench() -> BellDiagonalState {
        BellDiagonalState::new(1.0, -0.6, 0.6).unwrap()
    }

    /// `−0.8 log₂ 0.8 − 0.2 log₂ 0.2`, the joint entropy at the start.
    fn workbench_joint_entropy() -> f64 {
        -0.8 * 0.8f64.log2() - 0.2 * 0.2f64.log2()
    }

    #[test]
    fn mutual_information_examples() {
        let a = DensityMatrix::new(ComplexMatrix::diagonal(&[0.3, 0.7])).unwrap();
        let b = DensityMatrix::new(ComplexMatrix::diagonal(&[0.9, 0.1])).unwrap();
        assert!(mutual_information(&a.tensor(&b).unwrap()).unwrap().abs() < 1e-12);

        let bell = BellDiagonalState::new(1.0, -1.0, 1.0).unwrap();
        let i = mutual_information(&bell.to_density_matrix().unwrap()).unwrap();
        assert!((i - 2.0).abs() < 1e-12);

        let rho = workbench().to_density_matrix().unwrap();
        let expected = 2.0 - workbench_joint_entropy();
        assert!((mutual_information(&rho).unwrap() - expected).abs() < 1e-12);
        assert!((mutual_information_bell(&workbench()) - expected).abs() < 1e-12);
        assert!((expected - 1.27807).abs() < 1e-5);
    }

    #[test]
    fn classical_correlation_of_workbench() {
        let rho = workbench().to_density_matrix().unwrap();
        let c = classical_correlation_numeric(&rho).unwrap();
        assert!((c.value - 1.0).abs() < 1e-9, "{}", c.value);
        assert_eq!(c.method, Method::Numeric);
        let dir = c.argmin.unwrap();
        assert!(dir.alignment(&BlochDirection::axis(1)) > 1.0 - 1e-3);
        assert_eq!(classical_bell_closed(&workbench()).value, 1.0);
    }

    #[test]
    fn product_state_has_no_classical_correlation() {
        let a = DensityMatrix::new(ComplexMatrix::diagonal(&[0.3, 0.7])).unwrap();
        let b = DensityMatrix::new(ComplexMatrix::diagonal(&[0.4, 0.6])).unwrap();
        let c = classical_correlation_numeric(&a.tensor(&b).unwrap()).unwrap();
        assert!(c.value.abs() < 1e-9);
    }

    #[test]
    fn discord_examples() {
        let bell = BellDiagonalState::new(1.0, -1.0, 1.0).unwrap();
        let d = discord_numeric(&bell.to_density_matrix().unwrap()).unwrap();
        assert!((d.value - 1.0).abs() < 1e-9);
        assert!((discord_bell_closed(&bell).value - 1.0).abs() < 1e-12);

        let expected = 2.0 - workbench_joint_entropy() - 1.0;
        let rho = workbench().to_density_matrix().unwrap();
        assert!((discord_numeric(&rho).unwrap().value - expected).abs() < 1e-9);
        assert!((discord_bell_closed(&workbench()).value - expected).abs() < 1e-12);
        assert!((expected - 0.27807).abs() < 1e-5);
        assert_eq!(
            discord_bell_closed(&BellDiagonalState::new(0.0, 0.0, 0.0).unwrap()).value,
            0.0
        );
    }

    #[test]
    fn classically_correlated_states_have_zero_discord() {
        for c1 in [0.1, 0.5, 0.9, 1.0] {
            let s = BellDiagonalState::new(c1, 0.0, 0.0).unwrap();
            let d = discord_numeric(&s.to_density_matrix().unwrap()).unwrap();
            assert!(d.value.abs() < 1e-9, "c1 = {c1}: {}", d.value);
        }
    }

    #[test]
    fn sqd_workbench_anchor() {
        // Independent evaluation: I − binary_information(tanh 0.5) with c = 1.
        let t = 0.5f64.tanh();
        let h = 0.5 * ((1.0 - t) * (1.0 - t).log2() + (1.0 + t) * (1.0 + t).log2());
        let expected = 2.0 - workbench_joint_entropy() - h;
        let closed = sqd_bell_closed(&workbench(), 0.5).unwrap();
        assert!((closed.value - expected).abs() < 1e-12);
        assert!((closed.value - 1.118013).abs() < 1e-6);
        let rho = workbench().to_density_matrix().unwrap();
        let numeric = sqd_numeric(&rho, 0.5).unwrap();
        assert!((numeric.value - expected).abs() < 1e-9, "{}", numeric.value);
    }

    #[test]
    fn sqd_limits() {
        let rho = workbench().to_density_matrix().unwrap();
        let d = discord_numeric(&rho).unwrap().value;
        assert!((sqd_numeric(&rho, 15.0).unwrap().value - d).abs() < 1e-5);
        let i = mutual_information(&rho).unwrap();
        assert!((sqd_numeric(&rho, 0.0).unwrap().value - i).abs() < 1e-9);

        let s = workbench();
        assert!(
            (sqd_bell_closed(&s, 0.0).unwrap().value - mutual_information_bell(&s)).abs() < 1e-15
        );
        let strong = sqd_bell_closed(&s, f64::INFINITY).unwrap().value;
        assert!((strong - discord_bell_closed(&s).value).abs() < 1e-15);
    }

    #[test]
    fn negative_strength_is_rejected() {
        assert!(sqd_bell_closed(&workbench(), -1.0).is_err());
        let rho = workbench().to_density_matrix().unwrap();
        assert!(sqd_numeric(&rho, -1.0).is_err());
    }

    #[test]
    fn numeric_paths_reject_single_qubit_states() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(mutual_information(&rho).is_err());
        assert!(discord_numeric(&rho).is_err());
    }

    #[test]
    fn summaries_agree() {
        let s = BellDiagonalState::new(0.4, -0.3, 0.2).unwrap();
        let xs = [0.5, 2.0];
        let closed = summary_closed(&s, &xs).unwrap();
        let numeric = summary_numeric(&s.to_density_matrix().unwrap(), &xs).unwrap();
        assert!((closed.mutual_info - numeric.mutual_info).abs() < 1e-9);
        assert!((closed.classical - numeric.classical).abs() < 1e-6);
        assert!((closed.discord - numeric.discord).abs() < 1e-6);
        for (a, b) in closed.sqd.iter().zip(&numeric.sqd) {
            assert!((a - b).abs() < 1e-6);
        }
        assert!(numeric.sqd_argmin.iter().all(Option::is_some));
    }
}

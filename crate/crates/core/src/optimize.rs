//! Minimization of a smooth objective over Bloch-sphere angles.
//!
//! A fixed `θ × φ` grid picks the best few cells, each of which seeds a
//! Nelder–Mead refinement (restarted once) in the unconstrained `(θ, φ)`
//! plane. The result
//! depends only on the objective values, so it is deterministic.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMinimizer {
    /// Polar samples, spanning `[0, π]` inclusive.
    pub theta_points: usize,
    /// Azimuthal samples, spanning `[0, 2π)`.
    pub phi_points: usize,
    /// Number of best grid cells refined locally.
    pub starts: usize,
    /// Refinement stops once the simplex objective spread drops below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SphereMinimizer {
    fn default() -> Self {
        Self {
            theta_points: 64,
            phi_points: 128,
            starts: 3,
            tolerance: 1e-10,
            max_iterations: 5000,
        }
    }
}

/// Best point found, in raw (not canonicalized) angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMinimum {
    pub theta: f64,
    pub phi: f64,
    pub value: f64,
}

impl SphereMinimizer {
    fn grid_point(&self, index: usize) -> (f64, f64) {
        let i = index / self.phi_points;
        let j = index % self.phi_points;
        let theta = if self.theta_points > 1 {
            PI * i as f64 / (self.theta_points - 1) as f64
        } else {
            0.0
        };
        (theta, TAU * j as f64 / self.phi_points as f64)
    }

    fn steps(&self) -> (f64, f64) {
        (
            PI / (self.theta_points.max(2) - 1) as f64,
            TAU / self.phi_points.max(1) as f64,
        )
    }

    pub fn minimize<F>(&self, objective: F) -> Result<SphereMinimum>
    where
        F: Fn(f64, f64) -> Result<f64>,
    {
        let n = self.theta_points * self.phi_points;
        let mut scored = Vec::with_capacity(n);
        for index in 0..n {
            let (theta, phi) = self.grid_point(index);
            scored.push((objective(theta, phi)?, index));
        }
        // Stable on (value, index), so ties go to the lowest grid index.
        scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

        let (value, index) = scored[0];
        let (theta, phi) = self.grid_point(index);
        let mut best = SphereMinimum { theta, phi, value };

        let (dt, dp) = self.steps();
        for &(_, index) in scored.iter().take(self.starts) {
            let (theta, phi) = self.grid_point(index);
            let first = self.nelder_mead(&objective, [theta, phi], [dt, dp])?;
            // A collapsed simplex can stall short of the minimum; one
            // restart with a fresh, smaller simplex recovers it.
            let again =
                self.nelder_mead(&objective, [first.theta, first.phi], [0.1 * dt, 0.1 * dp])?;
            let refined = if again.value < first.value {
                again
            } else {
                first
            };
            if refined.value < best.value {
                best = refined;
            }
        }
        Ok(best)
    }

    fn nelder_mead<F>(&self, f: &F, start: [f64; 2], step: [f64; 2]) -> Result<SphereMinimum>
    where
        F: Fn(f64, f64) -> Result<f64>,
    {
        let eval = |p: [f64; 2]| -> Result<(f64, [f64; 2])> { Ok((f(p[0], p[1])?, p)) };
        let mut simplex = [
            eval(start)?,
            eval([start[0] + step[0], start[1]])?,
            eval([start[0], start[1] + step[1]])?,
        ];

        let mut spread = f64::INFINITY;
        for _ in 0..self.max_iterations {
            simplex.sort_by(|a, b| a.0.total_cmp(&b.0));
            spread = simplex[2].0 - simplex[0].0;
            if spread < self.tolerance || diameter(&simplex) < 1e-14 {
                let (value, [theta, phi]) = simplex[0];
                return Ok(SphereMinimum { theta, phi, value });
            }

            let best = simplex[0].1;
            let worst = simplex[2];
            let centroid = [
                0.5 * (simplex[0].1[0] + simplex[1].1[0]),
                0.5 * (simplex[0].1[1] + simplex[1].1[1]),
            ];
            let along = |t: f64| {
                [
                    centroid[0] + t * (centroid[0] - worst.1[0]),
                    centroid[1] + t * (centroid[1] - worst.1[1]),
                ]
            };

            let reflected = eval(along(1.0))?;
            if reflected.0 < simplex[0].0 {
                let expanded = eval(along(2.0))?;
                simplex[2] = if expanded.0 < reflected.0 {
                    expanded
                } else {
                    reflected
                };
                continue;
            }
            if reflected.0 < simplex[1].0 {
                simplex[2] = reflected;
                continue;
            }
            let contracted = if reflected.0 < worst.0 {
                let c = eval(along(0.5))?;
                (c.0 <= reflected.0).then_some(c)
            } else {
                let c = eval(along(-0.5))?;
                (c.0 < worst.0).then_some(c)
            };
            match contracted {
                Some(c) => simplex[2] = c,
                None => {
                    for vertex in simplex.iter_mut().skip(1) {
                        let p = [
                            best[0] + 0.5 * (vertex.1[0] - best[0]),
                            best[1] + 0.5 * (vertex.1[1] - best[1]),
                        ];
                        *vertex = eval(p)?;
                    }
                }
            }
        }
        Err(Error::OptimizerFailure {
            spread,
            iterations: self.max_iterations,
        })
    }
}

fn diameter(simplex: &[(f64, [f64; 2]); 3]) -> f64 {
    let mut d = 0.0f64;
    for a in 0..3 {
        for b in a + 1..3 {
            let dx = simplex[a].1[0] - simplex[b].1[0];
            let dy = simplex[a].1[1] - simplex[b].1[1];
            d = d.max(dx.hypot(dy));
        }
    }
    d
}

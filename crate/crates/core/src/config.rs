//! Physical configuration of the vortex crystal and its derived scales.

use crate::error::CoreError;
use std::f64::consts::PI;

/// N equal vortices of circulation `circulation` on a regular polygon of
/// radius `radius`, plus a central vortex of circulation `gamma * circulation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrystalConfig {
    pub n_vortices: usize,
    pub gamma: f64,
    pub circulation: f64,
    pub viscosity: f64,
    pub radius: f64,
}

impl CrystalConfig {
    pub fn new(
        n_vortices: usize,
        gamma: f64,
        circulation: f64,
        viscosity: f64,
        radius: f64,
    ) -> Result<Self, CoreError> {
        if n_vortices < 2 {
            return Err(CoreError::InvalidConfig(format!(
                "need N >= 2 exterior vortices, got {n_vortices}"
            )));
        }
        if !(radius > 0.0) {
            return Err(CoreError::InvalidConfig(format!("radius must be positive, got {radius}")));
        }
        if !(viscosity > 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "viscosity must be positive, got {viscosity}"
            )));
        }
        if circulation == 0.0 || !circulation.is_finite() {
            return Err(CoreError::InvalidConfig(format!(
                "circulation must be nonzero and finite, got {circulation}"
            )));
        }
        if !gamma.is_finite() {
            return Err(CoreError::InvalidConfig(format!("gamma must be finite, got {gamma}")));
        }
        Ok(Self { n_vortices, gamma, circulation, viscosity, radius })
    }

    /// Characteristic distance d = min(r, side length of the polygon).
    pub fn distance(&self) -> f64 {
        let side = 2.0 * self.radius * (PI / self.n_vortices as f64).sin();
        self.radius.min(side)
    }

    /// Angular speed of the rigidly rotating crystal.
    pub fn omega_rot(&self) -> f64 {
        self.circulation * (self.n_vortices as f64 - 1.0 + 2.0 * self.gamma)
            / (4.0 * PI * self.radius * self.radius)
    }

    /// Critical central circulation ratio at which the leading elliptical
    /// deformation of the exterior vortices vanishes.
    pub fn gamma_star(&self) -> f64 {
        let n = self.n_vortices as f64;
        (n - 1.0) * (n - 5.0) / 12.0
    }
}

/// All derived dimensionless quantities and time scales.
///
/// `delta` keeps the sign of the circulation; the time scales use its modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    pub d: f64,
    pub delta: f64,
    pub t_adv: f64,
    pub t_diff: f64,
    pub omega_rot: f64,
    pub gamma_star: f64,
}

pub fn derive_scales(cfg: &CrystalConfig) -> DerivedScales {
    let d = cfg.distance();
    DerivedScales {
        d,
        delta: cfg.viscosity / cfg.circulation,
        t_adv: d * d / cfg.circulation.abs(),
        t_diff: d * d / cfg.viscosity,
        omega_rot: cfg.omega_rot(),
        gamma_star: cfg.gamma_star(),
    }
}

/// Aspect ratio between the viscous core size and the inter-vortex distance.
pub fn eps(cfg: &CrystalConfig, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    (cfg.viscosity * t).sqrt() / cfg.distance()
}

/// Exact point-vortex trajectory: the N polygon vertices rotating rigidly at
/// `omega_rot`, followed by the central vortex fixed at the origin.
pub fn pv_positions(cfg: &CrystalConfig, t: f64) -> Vec<[f64; 2]> {
    let a = cfg.omega_rot();
    let n = cfg.n_vortices;
    let mut out = Vec::with_capacity(n + 1);
    for j in 1..=n {
        let th = 2.0 * PI * j as f64 / n as f64 + a * t;
        out.push([cfg.radius * th.cos(), cfg.radius * th.sin()]);
    }
    out.push([0.0, 0.0]);
    out
}

//! Numerical laboratory for viscous polygonal vortex crystals.
//!
//! The crate covers the inviscid side (point-vortex dynamics of the regular
//! polygon with an optional central vortex, conserved quantities, linear
//! stability of the crystal family) and the viscous side (radial special
//! functions of the Lamb–Oseen vortex, Nyström inversion of the linearized
//! advection operator on angular Fourier modes, the second- and third-order
//! self-similar correction profiles, and the drift coefficients α₄ and r₆
//! that perturb the crystal's angular speed and radius).

pub mod config;
pub mod constants;
pub mod corrections;
pub mod error;
pub mod field;
pub mod kernels;
pub mod lambda;
pub mod linalg;
pub mod pointvortex;
pub mod radial;

pub use config::{derive_scales, eps, pv_positions, CrystalConfig, DerivedScales};
pub use error::CoreError;

//! Relativistic theory of Dirac fermions confined to ideal Aharonov-Bohm
//! rings and cylinders.
//!
//! The library works throughout in natural units (ħ = c = e = 1) with every
//! length measured in units of the ring/cylinder radius R. All public
//! quantities are dimensionless:
//!
//! * energies are reported as `E*R`,
//! * circular currents as `I*2piR`,
//! * persistent currents as the coefficient `c` multiplying `I_max = beta/(pi R)`,
//! * momenta as `k*R`, longitudinal positions as `z/L` (finite cylinders)
//!   or `z/R` (infinite cylinders).
//!
//! SI quantities enter only through [`params`], which converts masses, radii,
//! magnetic fields and Fermi energies into the dimensionless parameters
//! `mu = M R`, `beta = e B R^2 / 2`, `aspect = pi R / L` and `alpha`.

// Guard clauses are written `!(x > 0.0)` on purpose: the negation rejects
// NaN inputs, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Frozen oracle values are kept at their full printed precision.
#![allow(clippy::excessive_precision)]

pub mod cylinder;
pub mod error;
pub mod gamma;
pub mod halfint;
pub mod numeric;
pub mod params;
pub mod quad;
pub mod ring;
pub mod spinor;
pub mod table;
pub mod verify;
pub mod wavepacket;

pub use error::{Error, Result};
pub use halfint::HalfInteger;
pub use params::{CylinderConfig, PhysicalInput, RingConfig};

/// Complex scalar used for spinor amplitudes.
pub type C64 = num_complex::Complex64;

//! Guided modes of a cylindrical dielectric waveguide and the efficiency of
//! spontaneous parametric down-conversion of normally incident light into
//! counter-propagating guided photon pairs.
//!
//! All internal math is dimensionless: lengths in units of the waveguide
//! radius `a`, frequencies as `w = omega a / c`, axial wave vectors as `qa`.
//! The numeric kernels are generic over the scalar type through [`Real`];
//! `f64` is the validated precision and the one used by the concrete aliases
//! at the crate root.

pub mod error;
pub mod green;
pub mod illumination;
pub mod linalg;
pub mod quadrature;
pub mod real;
pub mod specfun;
pub mod spdc;
pub mod waveguide;

pub use error::{CoreError, Result};
pub use real::Real;












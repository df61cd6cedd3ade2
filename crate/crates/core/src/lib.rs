//! Fourth-order dual numbers (truncated Taylor jets) and what they are good
//! for: higher-order directional derivatives by polarization, a forward
//! finite-difference comparator of arbitrary order, and point kinematics up
//! to snap, cross-checked against infinitesimal screw theory.
//!
//! ```
//! use jetdiff::{Elementary, Jet4};
//!
//! let u = Jet4::variable(2.0_f64);
//! let y = u * u * u * u;
//! assert_eq!(y.into_coeffs(), [16.0, 32.0, 48.0, 48.0, 24.0]);
//! assert_eq!(Jet4::variable(0.0_f64).sin().into_coeffs(), [0.0, 1.0, 0.0, -1.0, 0.0]);
//! ```

pub mod cli;
pub mod dd;
pub mod error;
pub mod fmfd;
pub mod jet;
pub mod kinematics;
pub mod mlform;
pub mod models;
pub mod reference;
pub mod scalar;
pub mod screws;

pub use dd::DoubleDouble;
pub use error::{Error, Result};
pub use jet::Jet4;
pub use num_complex::Complex64;
pub use scalar::{Elementary, RealScalar, Scalar};

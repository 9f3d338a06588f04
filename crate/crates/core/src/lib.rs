//! Six-vertex model with domain wall boundary conditions: exact and
//! high-precision partition functions, boundary correlators, and the
//! alternating sign matrix enumerations they encode.

pub mod asm;
pub mod closedform;
pub mod error;
pub mod exactmath;
pub mod numerics;
pub mod inhomog;
pub mod oracle;
pub mod orthopoly;

pub use error::{Error, Result};
pub use exactmath::{ExactRational, Field, GaussianRational, Jet, MPoly, Poly, QSqrt3, Real, Ring};

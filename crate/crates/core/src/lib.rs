//! Mapping class group dynamics on the relative SL(2) character variety of the
//! four-holed sphere, in trace coordinates.
//!
//! Everything that can be exact is generic over [`Field`], with
//! [`Rational`] for exact work and `f64` for sampling and plotting.

pub mod angle;
pub mod error;
pub mod orbits;
pub mod parse;
pub mod rep;
pub mod scalar;
pub mod surface;
pub mod trigdioph;
pub mod twists;

pub use angle::AngleFraction;
pub use error::{Error, Result};
pub use scalar::{Field, Mode, Rational, Scalar};
pub use surface::{Axis, BoundaryTraces, ComponentClass, TracePoint};
pub use twists::{TwistGenerator, TwistWord};

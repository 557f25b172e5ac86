//! Symbolic and ordinary powers of homogeneous ideals: an exact Groebner
//! engine, minimal free resolutions, the strand complexes resolving powers of
//! codimension-two perfect ideals, and point configurations in P^1 x P^1.

pub mod error;
pub mod groebner;
pub mod ideals;
pub mod polyring;
pub mod resolve;
pub mod schemes;
pub mod symbolic;

pub use error::{Error, ErrorClass, Result};

//! Plane geometry for pedal-triangle configurations.
//!
//! The crate is layered bottom-up:
//!
//! * [`projective`]: homogeneous points and lines, incidence, cross-ratio and
//!   the Euclidean measurements built on them.
//! * [`conic`]: symmetric-form conics, five-point fitting, pole/polar duality.
//! * [`circle`]: circles, power of a point, radical axes.
//! * [`triangle`]: centers, pedal and reflection triangles, offsets,
//!   isogonal conjugation, Steiner lines, orthologic centers.
//! * [`theorems`]: full scene construction and the randomized residual
//!   checks, with seeded per-trial sampling.

pub mod circle;
pub mod conic;
pub mod error;
pub mod projective;
pub mod theorems;
pub mod triangle;

pub use error::{GeomError, Result};
pub use projective::{HLine, HPoint, Tolerance};

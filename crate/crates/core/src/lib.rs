//! Simplicial complexes, their homology, d-boxicity bounds, Steiner systems
//! and exactly verified convex representations.

pub mod boxicity;
pub mod complex;
pub mod designs;
pub mod error;
pub mod face;
pub mod geometry;
pub mod homology;
pub mod io;
#[cfg(any(test, feature = "oracles"))]
pub mod oracle;

pub use complex::SimplicialComplex;
pub use error::Error;
pub use face::Face;

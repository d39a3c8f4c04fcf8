//! germkit computes the classical invariants of a polynomial map germ
//! f: (C^n, 0) -> (C^{n+1}, 0): the reduced equation of its image, the
//! conductor and ramification ideals, the Jacobian-type modules attached to
//! the germ and its unfoldings, the Ae-codimension (by three independent
//! routes), and a Cohen-Macaulay certificate that decides whether the image
//! Milnor number equals the module dimension.
//!
//! All arithmetic is exact over Q. Local behaviour at the origin is computed
//! with standard bases under local monomial orders (Mora normal form), so
//! polynomial representatives with extra singularities away from the origin
//! are handled correctly.
//!
//! Entry points:
//! - [`germ::MapGerm`] / [`germ::Unfolding`]: the input objects.
//! - [`report::analyze`]: the full single-germ pipeline.
//! - `examples/`: one runnable example per capability.

pub mod dimension;
pub mod engine;
pub mod error;
pub mod germ;
pub mod germfile;
pub mod ideal;
pub mod image;
pub mod jets;
pub mod limits;
pub mod linalg;
pub mod matrix;
pub mod mond;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod unfolding;

pub use dimension::Dim;
pub use error::{Error, Result};
pub use germ::{MapGerm, Unfolding, WeightData};
pub use ideal::{Ideal, Resolution, RingMap, Submodule};
pub use limits::Limits;
pub use poly::Poly;
pub use ring::{Ring, RingRc};

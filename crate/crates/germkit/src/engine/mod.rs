//! The basis engine: scale-free arithmetic over Z (representing Q), ordinary
//! and Mora normal forms, Buchberger's pair loop, syzygies, staircase
//! dimensions and minimal free resolutions.

pub mod buchberger;
pub mod dim;
pub mod modp;
pub mod reduce;
pub mod resolution;
pub mod scalar;
pub mod syzygy;
pub mod vector;

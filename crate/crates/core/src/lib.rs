//! Exact computation with the standard representation of the braid group and
//! its extensions to the singular braid group `SB_n` and the virtual singular
//! braid group `VSB_2`.
//!
//! Everything is exact: entries live in `Z[t, t^-1]`, its fraction field, or
//! the rationals after specializing `t`.

pub mod laurent;
pub mod matrix;
pub mod presentation;
pub mod ratfunc;
pub mod rep;
pub mod sample;
pub mod solver;
pub mod ring;
pub mod cli;
pub mod irreducibility;
pub mod kernel;

pub use laurent::LaurentPoly;
pub use matrix::{Matrix, Subspace};
pub use presentation::{Gen, Kind, Mode, Presentation, Word};
pub use ratfunc::RationalFunction;
pub use rep::{ExtensionParams, InvolutionFamily, Representation};
pub use ring::{Field, Ring, Q};

//! Consta-dihedral and dihedral codes over finite fields.
//!
//! The crate builds the twisted dihedral group algebra
//! `F[G]* = FH + FH v` (with `v^2 = -1`) and the ordinary dihedral algebra
//! (`v^2 = +1`) over GF(q), decomposes them into matrix blocks, constructs
//! self-dual, self-orthogonal and LCD codes as left ideals, and checks weight,
//! balance and counting properties exhaustively at small parameters.

pub mod algebra;
pub mod cli;
pub mod analysis;
pub mod code;
pub mod error;
pub mod cyclic;
pub mod dihedral;
pub mod field;
pub mod linalg;
pub mod util;
pub mod verify;

pub use error::{Error, Result};

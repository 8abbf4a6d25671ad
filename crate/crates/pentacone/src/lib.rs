//! Exact projective constructions for conics on five points and quadrics on
//! nine points, built from pencils of degenerate members, together with the
//! kinematic placement of a planar five-point array on a right circular cone
//! and the recovery of the congruent translated cone through the same section.
//!
//! The pencil side ([`conic`], [`quadric`]) works over arbitrary-precision
//! rationals so printed integer coefficients reproduce bit-exactly; the
//! kinematic side ([`dualquat`], [`cone_solver`], [`cone_pair`]) is
//! floating-point, since placement solutions are algebraic irrationals.

pub mod cone_pair;
pub mod cone_solver;
pub mod conic;
pub mod dualquat;
pub mod error;
pub mod fixtures;
pub mod flop;
pub mod projective;
pub mod quadric;
pub mod rat;

mod quat;

pub use error::{Error, Result};
pub use rat::Rat;

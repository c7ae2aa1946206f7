//! Path combinatorics for snake modules of quantum affine algebras of types
//! A and B, the folding and Langlands-duality maps between them, and exact
//! verifiers for the resulting character identities.
//!
//! Everything here is `no_std` with `alloc`; IO and the command line live in
//! the companion `snakes` crate.

#![no_std]

extern crate alloc;

pub mod duality;
pub mod error;
pub mod lattice;
pub mod limits;
pub mod monomial;
pub mod paths;
pub mod segments;
pub mod snakes;

pub use error::{Error, Result};
pub use lattice::{Character, Family, Weight};
pub use limits::Limits;
pub use monomial::{QCharacter, Sign, Var, YMonomial, ZMonomial};
pub use paths::{EpsInt, PathA, PathB};
pub use snakes::{SnakeA, SnakeB};

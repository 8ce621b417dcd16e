//! Graded free resolutions, Betti numbers, regularity, Tor and Ext over
//! polynomial rings on prime fields, plus the checkers built on them.

mod error;
pub mod constructions;
pub mod groebner;
pub mod homalg;
pub mod reesalg;
pub mod resolution;
pub mod ring;
pub mod source;
pub mod verify;

pub use error::{Error, Result};

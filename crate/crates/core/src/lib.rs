//! Primary decomposition of ideals and submodules of free modules over
//! `Q[x_1, ..., x_n]`, by way of equidimensional hulls computed from Ext.

pub mod error;
pub mod groebner;
pub mod homology;
pub mod polyring;
pub mod primdec;
pub mod verify;

pub use error::{Error, Result};

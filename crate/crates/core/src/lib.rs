//! Exact link invariants for testing the inequality `deg Q < det` on
//! quasi-alternating candidates.

pub mod braid3;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod kanenobu;
pub mod montesinos;
pub mod poly;
pub mod qpoly;

pub use error::{Error, Result};

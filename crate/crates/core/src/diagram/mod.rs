//! Planar-diagram codes and the moves on them.

mod canon;
mod generate;
mod moves;
mod pd;

pub use canon::Symmetry;
pub use moves::Smoothing;
pub use pd::{PdDiagram, Slot};

//! The unoriented Q-polynomial, computed by skein recursion.

mod engine;
mod traversal;

pub use engine::{QCache, QEngine, QResult, Q_MAX_CROSSINGS};

use crate::diagram::{PdDiagram, Smoothing};
use crate::error::{Error, Result};
use crate::poly::IntLaurent;

/// `μ = 2x⁻¹ − 1`, the value of an extra split component.
pub fn mu() -> IntLaurent {
    IntLaurent::from_terms([(-1, 2), (0, -1)])
}

pub fn q_polynomial(d: &PdDiagram) -> Result<IntLaurent> {
    QEngine::new().q_polynomial(d)
}

/// Degree of `Q`.
pub fn q_degree(d: &PdDiagram) -> Result<i64> {
    Ok(q_polynomial(d)?.degree())
}

/// Whether `deg Q(D) ≤ max(deg Q(D_A), deg Q(D_B)) + 1` at `index`.
pub fn check_lemma22(d: &PdDiagram, index: usize) -> Result<bool> {
    if d.crossing_count() == 0 {
        return Err(Error::InvalidArgument("diagram has no crossings".into()));
    }
    let e = QEngine::new();
    let q = e.q_polynomial(d)?;
    let a = e.q_polynomial(&d.smooth(index, Smoothing::A)?)?;
    let b = e.q_polynomial(&d.smooth(index, Smoothing::B)?)?;
    Ok(q.degree() <= a.degree().max(b.degree()) + 1)
}

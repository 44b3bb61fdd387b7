//! Jones polynomial via the Kauffman bracket, determinant and breadth.

mod bracket;
mod obstruction;
mod oriented;

use num_rational::Ratio;

pub use obstruction::{obstruction_check, obstruction_check_with, verdict_for, Evidence, Verdict};
pub use oriented::OrientedDiagram;

use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::poly::{HalfLaurent, Integer};

/// Default crossing bound for the Jones computations.
pub const JONES_MAX_CROSSINGS: usize = 16;

/// `V(t)` in `s = √t`, normalized to `V(unknot) = 1`.
pub fn jones_polynomial(d: &OrientedDiagram) -> Result<HalfLaurent> {
    jones_polynomial_bounded(d, JONES_MAX_CROSSINGS)
}

pub fn jones_polynomial_bounded(d: &OrientedDiagram, max_crossings: usize) -> Result<HalfLaurent> {
    let n = d.base().crossing_count();
    if n > max_crossings {
        return Err(Error::ResourceBound { what: "Jones crossings", found: n, limit: max_crossings });
    }
    if n == 0 && d.base().free_loops() == 0 {
        return Err(Error::InvalidArgument("empty diagram has no Jones polynomial".into()));
    }
    let w = d.writhe();
    let br = bracket::bracket(d.base());
    // (−A³)^(−w)⟨D⟩, then A^k = t^(−k/4) = s^(−k/2).
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut v = HalfLaurent::zero();
    for (k, c) in br.terms() {
        let e = k - 3 * w;
        if e % 2 != 0 {
            return Err(Error::Internal(format!("odd A-exponent {e} in normalized bracket")));
        }
        v.add_term(-e / 2, &(c * &Integer::from(sign)));
    }
    Ok(v)
}

/// Jones polynomial with the canonical orientation.
pub fn jones_of(d: &PdDiagram) -> Result<HalfLaurent> {
    jones_polynomial(&OrientedDiagram::canonical(d))
}

/// `|V(−1)|`, evaluated at `s = i`.
pub fn determinant(d: &PdDiagram) -> Result<Integer> {
    determinant_bounded(d, JONES_MAX_CROSSINGS)
}

pub fn determinant_bounded(d: &PdDiagram, max_crossings: usize) -> Result<Integer> {
    let v = jones_polynomial_bounded(&OrientedDiagram::canonical(d), max_crossings)?;
    det_from_jones(&v)
}

pub fn det_from_jones(v: &HalfLaurent) -> Result<Integer> {
    v.eval_at_s_equals_i().axis_abs()
}

/// Span of the Jones polynomial in powers of `t`.
pub fn breadth(d: &PdDiagram) -> Result<Ratio<i64>> {
    breadth_bounded(d, JONES_MAX_CROSSINGS)
}

pub fn breadth_bounded(d: &PdDiagram, max_crossings: usize) -> Result<Ratio<i64>> {
    let v = jones_polynomial_bounded(&OrientedDiagram::canonical(d), max_crossings)?;
    v.breadth_t().map_err(|_| Error::Internal("zero Jones polynomial".into()))
}

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{det_from_jones, jones_polynomial_bounded, OrientedDiagram, JONES_MAX_CROSSINGS};
use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::qpoly::QEngine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// `deg Q ≥ det`, so the link cannot be quasi-alternating.
    NotQuasiAlternating,
    /// The inequality holds; this proves nothing either way.
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NotQuasiAlternating => "not quasi-alternating",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// The numbers behind a verdict. Breadth is informational only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub deg_q: i64,
    pub det: u64,
    pub breadth: Ratio<i64>,
}

impl Evidence {
    pub fn verdict(&self) -> Verdict {
        verdict_for(self.deg_q, self.det)
    }
}

pub fn verdict_for(deg_q: i64, det: u64) -> Verdict {
    if deg_q >= det as i64 {
        Verdict::NotQuasiAlternating
    } else {
        Verdict::Inconclusive
    }
}

/// Computes `deg Q`, `det` and Jones breadth and compares the first two.
pub fn obstruction_check(d: &PdDiagram) -> Result<(Verdict, Evidence)> {
    obstruction_check_with(d, &QEngine::new(), JONES_MAX_CROSSINGS)
}

pub fn obstruction_check_with(
    d: &PdDiagram,
    engine: &QEngine,
    jones_max_crossings: usize,
) -> Result<(Verdict, Evidence)> {
    let q = engine.q_polynomial(d)?;
    let v = jones_polynomial_bounded(&OrientedDiagram::canonical(d), jones_max_crossings)?;
    let det = det_from_jones(&v)?
        .to_i64()
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::Internal("determinant out of range".into()))?;
    let breadth = v.breadth_t().map_err(|_| Error::Internal("zero Jones polynomial".into()))?;
    let ev = Evidence { deg_q: q.degree(), det, breadth };
    Ok((ev.verdict(), ev))
}

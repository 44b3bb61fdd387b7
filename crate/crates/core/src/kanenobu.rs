//! Closed-form Q-polynomials of the Kanenobu knots `K(p, q)`.

use serde::{Deserialize, Serialize};

use crate::poly::{sigma, IntLaurent};

/// Every Kanenobu knot has determinant 25.
pub const KANENOBU_DET: u64 = 25;

/// `Q(8₈) = 1 + 4x + 6x² − 10x³ − 14x⁴ + 4x⁵ + 8x⁶ + 2x⁷`.
pub fn q_8_8() -> IntLaurent {
    IntLaurent::from_terms([(0, 1), (1, 4), (2, 6), (3, -10), (4, -14), (5, 4), (6, 8), (7, 2)])
}

/// `Q(8₉) = −7 + 4x + 16x² − 10x³ − 16x⁴ + 4x⁵ + 8x⁶ + 2x⁷`.
pub fn q_8_9() -> IntLaurent {
    IntLaurent::from_terms([(0, -7), (1, 4), (2, 16), (3, -10), (4, -16), (5, 4), (6, 8), (7, 2)])
}

/// `Q(K(p,q)) = −σ_p σ_q (Q(8₉) − 1) + x⁻¹(σ_{p+1}σ_{q+1} + σ_{p−1}σ_{q−1})(Q(8₈) − 1) + 1`.
pub fn kanenobu_q(p: i64, q: i64) -> IntLaurent {
    let one = IntLaurent::one();
    let a = &(&sigma(p) * &sigma(q)) * &(&q_8_9() - &one);
    let b = &(&sigma(p + 1) * &sigma(q + 1)) + &(&sigma(p - 1) * &sigma(q - 1));
    let b = &b.shift(-1) * &(&q_8_8() - &one);
    &(&b - &a) + &one
}

/// `|p| + |q| + 6` when `pq ≥ 0`, else `|p| + |q| + 5`.
pub fn kanenobu_degree(p: i64, q: i64) -> i64 {
    let base = p.abs() + q.abs();
    if p * q >= 0 {
        base + 6
    } else {
        base + 5
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KanenobuParams {
    pub p: i64,
    pub q: i64,
}

/// All `(p, q)` with `deg Q < 25`: the only Kanenobu knots that can be
/// quasi-alternating. Sorted.
pub fn qa_candidate_scan() -> Vec<KanenobuParams> {
    // deg ≥ |p| + |q| + 5, so |p|, |q| ≤ 19 covers everything.
    let r = 20;
    let mut out = Vec::new();
    for p in -r..=r {
        for q in -r..=r {
            if kanenobu_degree(p, q) < KANENOBU_DET as i64 {
                out.push(KanenobuParams { p, q });
            }
        }
    }
    out
}

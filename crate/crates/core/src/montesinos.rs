//! Montesinos and pretzel formulas: determinant, crossing count, and the
//! obstruction for families with a growing final tangle.

use num_integer::Integer as _;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jones::Verdict;

type Q64 = Ratio<i128>;

/// `M(e; (α₁,β₁), …, (α_r,β_r), (α,β))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosPresentation {
    pub e: i64,
    pub tangles: Vec<(i64, i64)>,
    pub final_tangle: (i64, i64),
}

impl MontesinosPresentation {
    /// Tangles need `α ≥ 2`, `0 < β < α`, coprime; the final tangle only
    /// needs `α ≠ 0`, `β ≠ 0` and coprimality.
    pub fn new(e: i64, tangles: Vec<(i64, i64)>, final_tangle: (i64, i64)) -> Result<Self> {
        for &(a, b) in &tangles {
            if a < 2 || b <= 0 || b >= a {
                return Err(Error::InvalidArgument(format!("tangle ({a},{b}) needs 0 < β < α")));
            }
            if a.gcd(&b) != 1 {
                return Err(Error::InvalidArgument(format!("tangle ({a},{b}) is not coprime")));
            }
        }
        let (a, b) = final_tangle;
        if a == 0 || b == 0 || a.gcd(&b) != 1 {
            return Err(Error::InvalidArgument(format!("final tangle ({a},{b}) must be coprime and nonzero")));
        }
        Ok(Self { e, tangles, final_tangle })
    }

    fn all_tangles(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.tangles.iter().copied().chain(std::iter::once(self.final_tangle))
    }

    pub fn beta_sum(&self) -> Ratio<i64> {
        self.tangles.iter().map(|&(a, b)| Ratio::new(b, a)).sum()
    }
}

/// `|α∏α_i · (−1 + Σβ_i/α_i + β/α)|`, valid for `e = 1`.
pub fn montesinos_det(m: &MontesinosPresentation) -> Result<u64> {
    if m.e != 1 {
        return Err(Error::Precondition(format!("determinant formula needs e = 1, got {}", m.e)));
    }
    let prod: i128 = m.all_tangles().map(|(a, _)| a as i128).product();
    let s: Q64 = m.all_tangles().map(|(a, b)| Q64::new(b as i128, a as i128)).sum();
    let v = (s - Q64::from_integer(1)) * Q64::from_integer(prod);
    if !v.is_integer() {
        return Err(Error::Precondition(format!("determinant formula gave non-integer {v}")));
    }
    u64::try_from(v.to_integer().abs()).map_err(|_| Error::Internal("determinant overflow".into()))
}

/// Coefficients of the Euclidean continued fraction of `a/b`, `a, b > 0`.
pub fn continued_fraction(mut a: i64, mut b: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while b != 0 {
        out.push(a / b);
        (a, b) = (b, a % b);
    }
    out
}

fn cf_crossings(a: i64, b: i64) -> Result<i64> {
    if b == 0 {
        return Err(Error::InvalidArgument("tangle with β = 0".into()));
    }
    Ok(continued_fraction(a.abs(), b.abs()).iter().sum())
}

/// `|e|` plus the continued-fraction coefficient sums of all tangles.
pub fn montesinos_crossing_number(m: &MontesinosPresentation) -> Result<i64> {
    let mut c = m.e.abs();
    for (a, b) in m.all_tangles() {
        c += cf_crossings(a, b)?;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cor26Outcome {
    pub verdict: Verdict,
    pub det: u64,
    pub crossing_number: i64,
    /// From this `k` on, the verdict is always not quasi-alternating.
    pub threshold_k: i64,
}

/// The family `M(1; tangles, (l + kβ, β))` with `Σβ_i/α_i = 1`: the
/// determinant is `β∏α_i` whatever `k` is, while the crossing count grows
/// with `k`.
pub fn corollary26_obstruction(tangles: &[(i64, i64)], beta: i64, l: i64, k: i64) -> Result<Cor26Outcome> {
    if beta < 1 || !(0..beta).contains(&l) || k < 1 {
        return Err(Error::InvalidArgument(format!("need β ≥ 1, 0 ≤ l < β, k ≥ 1; got β={beta}, l={l}, k={k}")));
    }
    let alpha = l + k * beta;
    let m = MontesinosPresentation::new(1, tangles.to_vec(), (alpha, beta))?;
    if m.beta_sum() != Ratio::from_integer(1) {
        return Err(Error::Hypothesis(format!("Σβ_i/α_i = {} instead of 1", m.beta_sum())));
    }
    let det = montesinos_det(&m)?;
    let short: i64 = beta * tangles.iter().map(|t| t.0).product::<i64>();
    if det != short as u64 {
        return Err(Error::Internal(format!("determinant forms disagree: {det} vs {short}")));
    }
    let c = montesinos_crossing_number(&m)?;
    // c(k) = 1 + Σ(tangles) + k + (coefficients of β/l when l > 0).
    let fixed = c - k;
    let threshold_k = (det as i64 + 2 - fixed).max(1);
    let verdict = if c - 2 >= det as i64 { Verdict::NotQuasiAlternating } else { Verdict::Inconclusive };
    Ok(Cor26Outcome { verdict, det, crossing_number: c, threshold_k })
}

/// `α_i/(α_i − β_i) ≤ min(min_{j≠i} α_j/β_j, α/β)` for every `i`, and
/// `α/(α − β) ≤ min_j α_j/β_j`. A vanishing denominator fails.
pub fn standard_form_check(m: &MontesinosPresentation) -> bool {
    let ratio = |a: i64, b: i64| (b != 0).then(|| Q64::new(a as i128, b as i128));
    let (fa, fb) = m.final_tangle;
    let Some(final_ratio) = ratio(fa, fb) else { return false };
    for (i, &(a, b)) in m.tangles.iter().enumerate() {
        let Some(lhs) = ratio(a, a - b) else { return false };
        let mut bound = final_ratio;
        for (j, &(aj, bj)) in m.tangles.iter().enumerate() {
            if j != i {
                bound = bound.min(Q64::new(aj as i128, bj as i128));
            }
        }
        if lhs > bound {
            return false;
        }
    }
    let Some(lhs) = ratio(fa, fa - fb) else { return false };
    m.tangles.iter().all(|&(aj, bj)| lhs <= Q64::new(aj as i128, bj as i128))
}

/// `L(m, n)` written with `e = 1` so that the first two tangles sum to 1:
/// `M(1; (m²+1, m), (m²+1, m²+1−m), (n, 1))`, up to mirror image. The
/// determinant is `(m²+1)²` for every `n`.
pub fn l_family(m: i64, n: i64) -> Result<MontesinosPresentation> {
    if m < 1 || n < 2 {
        return Err(Error::InvalidArgument(format!("L(m, n) needs m ≥ 1, n ≥ 2; got ({m}, {n})")));
    }
    let a = m * m + 1;
    MontesinosPresentation::new(1, vec![(a, m), (a, a - m)], (n, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PretzelFamily {
    /// `P(r+2, r+1, −r)`, odd `r > 3`.
    A,
    /// `P(r+1, r+1, −r)`, odd `r > 3`.
    B,
    /// `P(n, n, −n)`, `n ≥ 3`.
    C,
}

impl std::str::FromStr for PretzelFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            _ => Err(Error::Parse(format!("unknown pretzel family {s:?}"))),
        }
    }
}

impl PretzelFamily {
    /// Pretzel entries for parameter `r` (or `n`), without hypothesis checks.
    pub fn entries(self, r: i64) -> Vec<i64> {
        match self {
            Self::A => vec![r + 2, r + 1, -r],
            Self::B => vec![r + 1, r + 1, -r],
            Self::C => vec![r, r, -r],
        }
    }

    /// Closed-form `(deg Q, det)`.
    pub fn closed_form(self, r: i64) -> (i64, i64) {
        match self {
            Self::A => (3 * r + 1, r * r - 2),
            Self::B => (3 * r + 2, r * r - 1),
            Self::C => (3 * r - 2, r * r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PretzelFamilyReport {
    pub entries: Vec<i64>,
    pub deg_q: i64,
    pub det: i64,
    pub satisfies_theorem_inequality: bool,
}

pub fn pretzel_family_report(family: PretzelFamily, param: i64) -> Result<PretzelFamilyReport> {
    let ok = match family {
        PretzelFamily::A | PretzelFamily::B => param > 3 && param % 2 == 1,
        PretzelFamily::C => param >= 3,
    };
    if !ok {
        return Err(Error::Hypothesis(format!("parameter {param} outside the family's range")));
    }
    let (deg_q, det) = family.closed_form(param);
    Ok(PretzelFamilyReport { entries: family.entries(param), deg_q, det, satisfies_theorem_inequality: deg_q < det })
}

/// `|pq + qr + rp|` for a three-strand pretzel.
pub fn pretzel3_det(p: i64, q: i64, r: i64) -> u64 {
    (p * q + q * r + r * p).unsigned_abs()
}

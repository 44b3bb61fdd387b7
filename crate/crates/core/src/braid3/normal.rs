use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::{Error, Result};

/// Conjugacy-class representatives of 3-braids, with `h = (σ₁σ₂)³`:
/// `h^n σ₁^{p₁} σ₂^{−q₁} ⋯ σ₁^{p_s} σ₂^{−q_s}`, `h^n σ₂^m`, and
/// `h^n σ₁^m σ₂⁻¹` with `m ∈ {−1, −2, −3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum B3NormalForm {
    #[serde(rename = "1")]
    Family1 { n: i64, pairs: Vec<(u32, u32)> },
    #[serde(rename = "2")]
    Family2 { n: i64, m: i64 },
    #[serde(rename = "3")]
    Family3 { n: i64, m: i64 },
}

impl B3NormalForm {
    pub fn validate(&self) -> Result<()> {
        match self {
            B3NormalForm::Family1 { pairs, .. } => {
                if pairs.is_empty() {
                    return Err(Error::InvalidArgument("family 1 needs at least one (p, q) pair".into()));
                }
                if pairs.iter().any(|(p, q)| *p == 0 || *q == 0) {
                    return Err(Error::InvalidArgument("family 1 exponents must be positive".into()));
                }
            }
            B3NormalForm::Family2 { .. } => {}
            B3NormalForm::Family3 { m, .. } => {
                if !(-3..=-1).contains(m) {
                    return Err(Error::InvalidArgument(format!("family 3 needs m in -3..=-1, got {m}")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> i64 {
        match self {
            B3NormalForm::Family1 { n, .. } | B3NormalForm::Family2 { n, .. } | B3NormalForm::Family3 { n, .. } => *n,
        }
    }

    /// `(Σp_i, Σq_i)` for family 1.
    pub fn pq(&self) -> Option<(u64, u64)> {
        match self {
            B3NormalForm::Family1 { pairs, .. } => {
                Some((pairs.iter().map(|p| p.0 as u64).sum(), pairs.iter().map(|p| p.1 as u64).sum()))
            }
            _ => None,
        }
    }

    /// The literal word; `h⁻¹` is written `(σ₂⁻¹σ₁⁻¹)³`.
    pub fn to_word(&self) -> Result<BraidWord> {
        self.validate()?;
        let n = self.n();
        let mut letters: Vec<i32> = Vec::new();
        let unit: [i32; 2] = if n >= 0 { [1, 2] } else { [-2, -1] };
        for _ in 0..3 * n.unsigned_abs() {
            letters.extend_from_slice(&unit);
        }
        let mut w = BraidWord::new(3, letters)?;
        match self {
            B3NormalForm::Family1 { pairs, .. } => {
                for (p, q) in pairs {
                    w.push_power(1, *p as i64);
                    w.push_power(2, -(*q as i64));
                }
            }
            B3NormalForm::Family2 { m, .. } => w.push_power(2, *m),
            B3NormalForm::Family3 { m, .. } => {
                w.push_power(1, *m);
                w.push_power(2, -1);
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let w = B3NormalForm::Family2 { n: 0, m: 3 }.to_word().unwrap();
        assert_eq!(w.letters(), &[2, 2, 2]);
        let w = B3NormalForm::Family1 { n: 1, pairs: vec![(1, 1)] }.to_word().unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2, 1, -2]);
        let w = B3NormalForm::Family3 { n: 0, m: -1 }.to_word().unwrap();
        assert_eq!(w.letters(), &[-1, -2]);
        let w = B3NormalForm::Family2 { n: -1, m: 0 }.to_word().unwrap();
        assert_eq!(w.letters(), &[-2, -1, -2, -1, -2, -1]);
    }

    #[test]
    fn validation() {
        assert!(B3NormalForm::Family3 { n: 0, m: -4 }.to_word().is_err());
        assert!(B3NormalForm::Family1 { n: 0, pairs: vec![] }.to_word().is_err());
        assert!(B3NormalForm::Family1 { n: 0, pairs: vec![(0, 1)] }.to_word().is_err());
    }

    #[test]
    fn json_round_trip() {
        let nf = B3NormalForm::Family1 { n: -1, pairs: vec![(2, 1), (1, 3)] };
        let s = serde_json::to_string(&nf).unwrap();
        assert_eq!(s, r#"{"family":"1","n":-1,"pairs":[[2,1],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<B3NormalForm>(&s).unwrap(), nf);
        let f2: B3NormalForm = serde_json::from_str(r#"{"family":"2","n":1,"m":-2}"#).unwrap();
        assert_eq!(f2, B3NormalForm::Family2 { n: 1, m: -2 });
    }
}

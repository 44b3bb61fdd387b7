use std::ops::Mul;

use super::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{Integer, TLaurent};

/// Reduced Burau matrix of a 3-braid, entries in `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix(pub [[TLaurent; 2]; 2]);

impl BurauMatrix {
    pub fn identity() -> Self {
        Self([[TLaurent::one(), TLaurent::zero()], [TLaurent::zero(), TLaurent::one()]])
    }

    /// `ψ(σ₁) = [−t 1; 0 1]`, `ψ(σ₂) = [1 0; t −t]`.
    pub fn generator(i: u32) -> Result<Self> {
        let t = TLaurent::var();
        let one = TLaurent::one();
        let zero = TLaurent::zero();
        match i {
            1 => Ok(Self([[-t, one.clone()], [zero, one]])),
            2 => Ok(Self([[one, zero], [t.clone(), -t]])),
            _ => Err(Error::InvalidArgument(format!("B3 has no generator {i}"))),
        }
    }

    pub fn det(&self) -> TLaurent {
        let [[a, b], [c, d]] = &self.0;
        &(a * d) - &(b * c)
    }

    /// Exact inverse; the determinant must be a unit `±tᵏ`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let (c, k) = det
            .as_monomial()
            .filter(|(c, _)| c.abs() == Integer::from(1))
            .ok_or_else(|| Error::Internal(format!("Burau determinant {det} is not a unit")))?;
        let [[a, b], [cc, d]] = &self.0;
        let inv = |p: &TLaurent| p.div_monomial(&c, k);
        Ok(Self([[inv(d)?, inv(&-b)?], [inv(&-cc)?, inv(a)?]]))
    }

    pub fn trace(&self) -> TLaurent {
        &self.0[0][0] + &self.0[1][1]
    }

    /// Entries evaluated at `t = −1`.
    pub fn at_minus_one(&self) -> Result<[[Integer; 2]; 2]> {
        let e = |p: &TLaurent| p.eval_unit(-1);
        Ok([[e(&self.0[0][0])?, e(&self.0[0][1])?], [e(&self.0[1][0])?, e(&self.0[1][1])?]])
    }
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        let a = &self.0;
        let b = &rhs.0;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        BurauMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

/// Product of generator matrices along the word.
pub fn burau(w: &BraidWord) -> Result<BurauMatrix> {
    if w.strands() != 3 {
        return Err(Error::InvalidArgument(format!("Burau matrices need 3 strands, got {}", w.strands())));
    }
    let gens = [BurauMatrix::generator(1)?, BurauMatrix::generator(2)?];
    let invs = [gens[0].inverse()?, gens[1].inverse()?];
    let mut m = BurauMatrix::identity();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        m = &m * if l > 0 { &gens[i] } else { &invs[i] };
    }
    Ok(m)
}

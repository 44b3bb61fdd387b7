use num_rational::Ratio;
use num_traits::{One, Zero};

use super::gaussian::GaussianInt;
use super::integer::Integer;
use super::laurent::{Laurent, TLaurent};
use crate::error::Result;

/// Polynomial in `s = t^(1/2)`, used for Jones polynomials.
pub type HalfLaurent = Laurent<'s'>;

impl Laurent<'s'> {
    /// Embeds a polynomial in `t` via `t = s²`.
    pub fn from_t(p: &TLaurent) -> Self {
        p.rename::<'s'>().inflate(2)
    }

    /// Back to `t` when only even powers of `s` occur.
    pub fn to_t(&self) -> Option<TLaurent> {
        if self.terms().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        Some(TLaurent::from_terms(self.terms().map(|(e, c)| (e / 2, c.clone()))))
    }

    /// `(-s)^e`, i.e. `(-√t)^e`.
    pub fn neg_sqrt_t_pow(e: i64) -> Self {
        let c = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(c, e)
    }

    /// Substitutes `s = i`, so `t = -1`.
    pub fn eval_at_s_equals_i(&self) -> GaussianInt {
        let mut re = Integer::zero();
        let mut im = Integer::zero();
        for (e, c) in self.terms() {
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        GaussianInt::new(re, im)
    }

    /// Highest minus lowest power of `t`.
    pub fn breadth_t(&self) -> Result<Ratio<i64>> {
        let lo = self.low_degree()?;
        Ok(Ratio::new(self.degree() - lo, 2))
    }

    /// Renders in `t`, with half-integer exponents as `t^(k/2)`.
    pub fn render_t(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let abs = c.abs();
            if e == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push('t');
            if e % 2 == 0 {
                if e != 2 {
                    out.push_str(&format!("^{}", e / 2));
                }
            } else {
                out.push_str(&format!("^({e}/2)"));
            }
        }
        out
    }
}

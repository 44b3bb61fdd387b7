use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::integer::Integer;
use crate::error::{Error, Result};

/// `re + im·i` with arbitrary-precision parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: Integer,
    pub im: Integer,
}

impl GaussianInt {
    pub fn new(re: Integer, im: Integer) -> Self {
        Self { re, im }
    }

    pub fn from_re(re: i64) -> Self {
        Self::new(Integer::from(re), Integer::zero())
    }

    pub fn i() -> Self {
        Self::new(Integer::zero(), Integer::from(1))
    }

    /// Modulus of a value on the real or imaginary axis. Anything else has an
    /// irrational modulus in general and is rejected.
    pub fn axis_abs(&self) -> Result<Integer> {
        if self.im.is_zero() {
            Ok(self.re.abs())
        } else if self.re.is_zero() {
            Ok(self.im.abs())
        } else {
            Err(Error::Internal(format!("{self} lies off both axes; modulus is not an integer")))
        }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&(&self.re * &rhs.re) - &(&self.im * &rhs.im), &(&self.re * &rhs.im) + &(&self.im * &rhs.re))
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        let i = GaussianInt::i();
        assert_eq!(&i * &i, GaussianInt::from_re(-1));
    }

    #[test]
    fn axis_abs() {
        assert_eq!(GaussianInt::from_re(-7).axis_abs().unwrap(), Integer::from(7));
        let g = GaussianInt::new(Integer::zero(), Integer::from(-4));
        assert_eq!(g.axis_abs().unwrap(), Integer::from(4));
        let off = GaussianInt::new(Integer::from(1), Integer::from(1));
        assert!(off.axis_abs().is_err());
    }

    #[test]
    fn ring_laws_small() {
        let vals: Vec<GaussianInt> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |b| GaussianInt::new(Integer::from(a), Integer::from(b))))
            .collect();
        for a in &vals {
            for b in &vals {
                assert_eq!(a * b, b * a);
                for c in vals.iter().step_by(7) {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }
}

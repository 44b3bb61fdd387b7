use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::integer::Integer;
use crate::error::{Error, Result};

/// Laurent polynomial in one variable with integer coefficients.
///
/// The variable name is part of the type so that polynomials in `x`
/// (Q-polynomials), `t` (Burau entries) and `s = t^(1/2)` (Jones) cannot be
/// mixed up. Zero coefficients are never stored, so the zero polynomial is
/// the empty map and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<const V: char> {
    terms: BTreeMap<i64, Integer>,
}

/// Polynomial in `x`.
pub type IntLaurent = Laurent<'x'>;
/// Polynomial in `t`.
pub type TLaurent = Laurent<'t'>;

impl<const V: char> Laurent<V> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<Integer>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<Integer>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Integer {
        self.terms.get(&exp).cloned().unwrap_or_else(Integer::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Integer)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Highest exponent, or −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().next_back().copied().unwrap_or(-1)
    }

    /// Lowest exponent. Undefined for zero.
    pub fn low_degree(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn add_term(&mut self, exp: i64, c: &Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `var -> var^k`.
    pub fn inflate(&self, k: i64) -> Self {
        if k == 0 {
            let total = self.terms.values().fold(Integer::zero(), |a, c| &a + c);
            return Self::constant(total);
        }
        Self { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// Same coefficients, different variable.
    pub fn rename<const W: char>(&self) -> Laurent<W> {
        Laurent { terms: self.terms.clone() }
    }

    /// Evaluates at an integer point. Negative exponents require `at = ±1`.
    pub fn eval_unit(&self, at: i64) -> Result<Integer> {
        if at != 1 && at != -1 && self.terms.keys().any(|e| *e < 0) {
            return Err(Error::InvalidArgument(format!(
                "cannot evaluate a Laurent polynomial with negative powers at {at}"
            )));
        }
        let base = Integer::from(at);
        let mut acc = Integer::zero();
        for (e, c) in &self.terms {
            let p = if at == -1 {
                if e.rem_euclid(2) == 0 {
                    Integer::one()
                } else {
                    -Integer::one()
                }
            } else if at == 1 {
                Integer::one()
            } else {
                base.pow(*e as u32)
            };
            acc += &(c * &p);
        }
        Ok(acc)
    }

    /// Exact division by a monomial `c * var^k` (every coefficient must be
    /// divisible by `c`).
    pub fn div_monomial(&self, c: &Integer, k: i64) -> Result<Self> {
        let mut out = BTreeMap::new();
        let cb = c.to_bigint();
        if num_traits::Zero::is_zero(&cb) {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        for (e, v) in &self.terms {
            let vb = v.to_bigint();
            let (q, r) = num_integer::Integer::div_rem(&vb, &cb);
            if !num_traits::Zero::is_zero(&r) {
                return Err(Error::InvalidArgument(format!("{v} is not divisible by {c}")));
            }
            out.insert(e - k, Integer::from(q));
        }
        Ok(Self { terms: out })
    }

    /// If the polynomial is a single term, returns `(coefficient, exponent)`.
    pub fn as_monomial(&self) -> Option<(Integer, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }
}

impl<const V: char> Zero for Laurent<V> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const V: char> One for Laurent<V> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<'a, const V: char> Add<&'a Laurent<V>> for &'a Laurent<V> {
    type Output = Laurent<V>;

    fn add(self, rhs: &'a Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, const V: char> Sub<&'a Laurent<V>> for &'a Laurent<V> {
    type Output = Laurent<V>;

    fn sub(self, rhs: &'a Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, const V: char> Mul<&'a Laurent<V>> for &'a Laurent<V> {
    type Output = Laurent<V>;

    fn mul(self, rhs: &'a Laurent<V>) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl<const V: char> Neg for &Laurent<V> {
    type Output = Laurent<V>;

    fn neg(self) -> Laurent<V> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<const V: char> Neg for Laurent<V> {
    type Output = Laurent<V>;

    fn neg(self) -> Laurent<V> {
        -&self
    }
}

impl<const V: char> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<const V: char> SubAssign<&Laurent<V>> for Laurent<V> {
    fn sub_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const V: char> $tr<Laurent<V>> for Laurent<V> {
            type Output = Laurent<V>;
            fn $m(self, rhs: Laurent<V>) -> Laurent<V> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, const V: char> $tr<&'a Laurent<V>> for Laurent<V> {
            type Output = Laurent<V>;
            fn $m(self, rhs: &'a Laurent<V>) -> Laurent<V> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const V: char> Sum for Laurent<V> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<const V: char> fmt::Display for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{V}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<const V: char> fmt::Debug for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const V: char> FromStr for Laurent<V> {
    type Err = Error;

    /// Accepts the rendered form (`2x^2+2x-3`) plus optional `*`,
    /// whitespace and parenthesised exponents (`x^(-2)`).
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let err = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let mut out = Self::zero();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1i64;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(err("expected '+' or '-'"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let has_coeff = !digits.is_empty();
            let mut coeff =
                if has_coeff { digits.parse::<Integer>().map_err(|_| err("bad coefficient"))? } else { Integer::one() };
            if i < chars.len() && chars[i] == '*' {
                if !has_coeff {
                    return Err(err("'*' without coefficient"));
                }
                i += 1;
            }
            let mut exp = 0i64;
            if i < chars.len() && chars[i] == V {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let paren = i < chars.len() && chars[i] == '(';
                    if paren {
                        i += 1;
                    }
                    let es = i;
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let et: String = chars[es..i].iter().collect();
                    exp = et.parse().map_err(|_| err("bad exponent"))?;
                    if paren {
                        if i >= chars.len() || chars[i] != ')' {
                            return Err(err("unclosed '('"));
                        }
                        i += 1;
                    }
                }
            } else if !has_coeff {
                return Err(err("expected a term"));
            }
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(exp, &coeff);
        }
        Ok(out)
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A braid word: letter `i > 0` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidArgument(format!("generator {l} is not valid on {strands} strands")));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidArgument("braids on different strand counts".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `g^e` appended as `|e|` letters.
    pub fn push_power(&mut self, g: i32, e: i64) {
        let l = if e < 0 { -g } else { g };
        self.letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
    }

    /// Parses `s1 s2^-1 s1^3` or `1 2 -1`, on `strands` strands.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',' || c == '*') {
            if tok.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("bad braid letter {tok:?}"));
            if let Some(rest) = tok.strip_prefix(['s', 'σ']) {
                let (g, e) = match rest.split_once('^') {
                    Some((g, e)) => (g, e.trim_matches(|c| c == '(' || c == ')')),
                    None => (rest, "1"),
                };
                let g: i32 = g.parse().map_err(|_| bad())?;
                let e: i64 = e.parse().map_err(|_| bad())?;
                if g <= 0 {
                    return Err(bad());
                }
                let l = if e < 0 { -g } else { g };
                letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
            } else {
                letters.push(tok.parse().map_err(|_| bad())?);
            }
        }
        Self::new(strands, letters)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Strand count is one more than the largest generator used.
    fn from_str(s: &str) -> Result<Self> {
        let w = Self::parse(s, usize::MAX)?;
        let strands = w.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::new(strands, w.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.letters.iter().map(|l| if *l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

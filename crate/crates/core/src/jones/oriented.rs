use crate::diagram::{PdDiagram, Smoothing};
use crate::error::{Error, Result};

/// A diagram with every component oriented.
///
/// Crossings are stored rotated so the understrand enters at slot 0 and
/// leaves at slot 2 (a half-turn keeps the over/under data). Whether the
/// overstrand enters at slot 3 (a positive crossing) or slot 1 is kept
/// alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    base: PdDiagram,
    positive: Vec<bool>,
}

impl OrientedDiagram {
    /// Orients component `i` of `pd.strands()` backwards when
    /// `reversed[i]` is set.
    pub fn new(pd: &PdDiagram, reversed: &[bool]) -> Result<Self> {
        let strands = pd.strands();
        if reversed.len() != strands.len() {
            return Err(Error::InvalidArgument(format!(
                "{} orientation flags for {} components with crossings",
                reversed.len(),
                strands.len()
            )));
        }
        let n = pd.crossing_count();
        let mut under_in = vec![usize::MAX; n];
        let mut over_in = vec![usize::MAX; n];
        for (walk, rev) in strands.iter().zip(reversed) {
            for &(x, s) in walk {
                let s = if *rev { (s + 2) % 4 } else { s };
                if s % 2 == 0 {
                    under_in[x] = s;
                } else {
                    over_in[x] = s;
                }
            }
        }
        let mut crossings = pd.crossings().to_vec();
        let mut positive = Vec::with_capacity(n);
        for x in 0..n {
            positive.push(over_in[x] == (under_in[x] + 3) % 4);
            crossings[x].rotate_left(under_in[x]);
        }
        let base = PdDiagram::new(crossings, pd.free_loops())?;
        Ok(Self { base, positive })
    }

    /// Orientation in which each component runs from slot 0 to slot 2 at
    /// the first crossing where it passes under (any direction when it
    /// never does). Codes written with the incoming understrand first get
    /// their intended orientation.
    pub fn canonical(pd: &PdDiagram) -> Self {
        let reversed: Vec<bool> = pd
            .strands()
            .iter()
            .map(|walk| walk.iter().find(|(_, s)| s % 2 == 0).is_some_and(|(_, s)| *s == 2))
            .collect();
        Self::new(pd, &reversed).expect("one flag per component")
    }

    pub fn base(&self) -> &PdDiagram {
        &self.base
    }

    /// `+1`/`-1` per crossing.
    pub fn signs(&self) -> Vec<i8> {
        self.positive.iter().map(|p| if *p { 1 } else { -1 }).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.positive.iter().map(|p| if *p { 1 } else { -1 }).sum()
    }

    /// Sum of the signs of crossings between different components, halved.
    pub fn linking_number_total(&self) -> Result<i64> {
        let strands = self.base.strands();
        let mut comp = vec![[usize::MAX; 2]; self.base.crossing_count()];
        for (i, walk) in strands.iter().enumerate() {
            for &(x, s) in walk {
                comp[x][s % 2] = i;
            }
        }
        let mixed: i64 =
            comp.iter().zip(&self.positive).filter(|(c, _)| c[0] != c[1]).map(|(_, p)| if *p { 1 } else { -1 }).sum();
        if mixed % 2 != 0 {
            return Err(Error::Internal("odd count of mixed crossings".into()));
        }
        Ok(mixed / 2)
    }

    pub fn mirror(&self) -> Self {
        let n = self.base.crossing_count();
        (0..n).fold(self.clone(), |d, x| d.switch(x).expect("index in range"))
    }

    /// Crossing change keeping orientations.
    pub fn switch(&self, x: usize) -> Result<Self> {
        let mut out = self.clone();
        let mut c = self.base.crossings().to_vec();
        if x >= c.len() {
            return Err(Error::IndexOutOfRange { index: x, len: c.len() });
        }
        // Rotate by one so the old overstrand, which entered at slot 3
        // (positive) or slot 1, now enters at slot 0 as the understrand.
        if self.positive[x] {
            c[x].rotate_right(1);
        } else {
            c[x].rotate_left(1);
        }
        out.base = PdDiagram::new(c, self.base.free_loops())?;
        out.positive[x] = !self.positive[x];
        Ok(out)
    }

    /// The orientation-respecting smoothing of crossing `x`.
    pub fn smooth_oriented(&self, x: usize) -> Result<Self> {
        let kind = if self.positive[x] { Smoothing::A } else { Smoothing::B };
        let base = self.base.smooth(x, kind)?;
        let mut positive = self.positive.clone();
        positive.remove(x);
        Ok(Self { base, positive })
    }
}

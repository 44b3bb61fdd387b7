use super::pd::{PdDiagram, UnionFind};
use crate::braid3::BraidWord;
use crate::error::{Error, Result};

/// Builds crossings between vertical strands running downward. Arc labels
/// are provisional; `finish` merges identified labels.
struct Builder {
    next: u32,
    crossings: Vec<[u32; 4]>,
    glue: Vec<(u32, u32)>,
}

impl Builder {
    fn new() -> Self {
        Self { next: 0, crossings: Vec::new(), glue: Vec::new() }
    }

    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next
    }

    fn strands(&mut self, k: usize) -> Vec<u32> {
        (0..k).map(|_| self.fresh()).collect()
    }

    /// Crosses positions `j` and `j + 1`. A positive letter is a positive
    /// crossing for downward orientation: the strand from top right to
    /// bottom left passes over. Tuples start at the incoming understrand.
    fn cross(&mut self, cur: &mut [u32], j: usize, positive: bool) {
        let (tl, tr) = (cur[j], cur[j + 1]);
        let (bl, br) = (self.fresh(), self.fresh());
        // Counterclockwise around the crossing: TL, BL, BR, TR.
        let x = if positive { [tl, bl, br, tr] } else { [tr, tl, bl, br] };
        self.crossings.push(x);
        cur[j] = bl;
        cur[j + 1] = br;
    }

    fn join(&mut self, a: u32, b: u32) {
        self.glue.push((a, b));
    }

    fn finish(self) -> Result<PdDiagram> {
        let n = self.next as usize;
        let mut uf = UnionFind::new(n + 1);
        for (a, b) in &self.glue {
            uf.union(*a as usize, *b as usize);
        }
        let mut used = vec![false; n + 1];
        let crossings: Vec<[u32; 4]> = self
            .crossings
            .iter()
            .map(|c| {
                c.map(|l| {
                    let r = uf.find(l as usize);
                    used[r] = true;
                    r as u32
                })
            })
            .collect();
        let loops = (1..=n).filter(|&l| uf.find(l) == l && !used[l]).count();
        PdDiagram::new(crossings, loops)
    }
}

impl PdDiagram {
    /// Closure of a braid: bottom end of each strand joined to its top.
    pub fn close_braid(word: &BraidWord) -> Result<PdDiagram> {
        let mut b = Builder::new();
        let top = b.strands(word.strands());
        let mut cur = top.clone();
        for &l in word.letters() {
            b.cross(&mut cur, l.unsigned_abs() as usize - 1, l > 0);
        }
        for (t, c) in top.iter().zip(&cur) {
            b.join(*t, *c);
        }
        b.finish()
    }

    /// Pretzel link `P(p_1, ..., p_k)`: vertical twist regions of `p_i`
    /// half-twists, neighbours joined by caps above and below.
    pub fn pretzel(entries: &[i64]) -> Result<PdDiagram> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("pretzel needs at least one entry".into()));
        }
        if let Some(i) = entries.iter().position(|p| *p == 0) {
            return Err(Error::InvalidArgument(format!("pretzel entry {i} is zero")));
        }
        let k = entries.len();
        let mut b = Builder::new();
        let top = b.strands(2 * k);
        let mut cur = top.clone();
        for (i, &p) in entries.iter().enumerate() {
            for _ in 0..p.unsigned_abs() {
                b.cross(&mut cur, 2 * i, p > 0);
            }
        }
        for ends in [&top, &cur] {
            for i in 0..k - 1 {
                b.join(ends[2 * i + 1], ends[2 * i + 2]);
            }
            b.join(ends[0], ends[2 * k - 1]);
        }
        b.finish()
    }
}

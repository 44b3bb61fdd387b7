use super::pd::{other_end, PdDiagram, Slot};
use crate::error::{Error, Result};

/// The two ways of resolving a crossing. `A` joins slots (0,1) and (2,3),
/// `B` joins slots (0,3) and (1,2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    fn joins(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

const STRAIGHT: [(usize, usize); 2] = [(0, 2), (1, 3)];

impl PdDiagram {
    /// Deletes crossings, connecting their slots pairwise as given. Paths
    /// through deleted crossings become single arcs; closed paths become
    /// free loops.
    pub(crate) fn splice(&self, removed: &[(usize, [(usize, usize); 2])]) -> PdDiagram {
        let n = self.crossings.len();
        let mut join: Vec<Option<[usize; 4]>> = vec![None; n];
        for (x, pairs) in removed {
            let mut j = [0; 4];
            for (a, b) in pairs {
                j[*a] = *b;
                j[*b] = *a;
            }
            join[*x] = Some(j);
        }
        let occ = self.occurrences();
        let mut labels = vec![[0u32; 4]; n];
        let mut visited = vec![[false; 4]; n];
        let mut next = 1u32;

        for x in 0..n {
            if join[x].is_some() {
                continue;
            }
            for s in 0..4 {
                if labels[x][s] != 0 {
                    continue;
                }
                let mut cur: Slot = (x, s);
                let end = loop {
                    let l = self.crossings[cur.0][cur.1] as usize;
                    let (y, t) = other_end(&occ[l], cur);
                    match join[y] {
                        None => break (y, t),
                        Some(j) => {
                            visited[y][t] = true;
                            visited[y][j[t]] = true;
                            cur = (y, j[t]);
                        }
                    }
                };
                labels[x][s] = next;
                labels[end.0][end.1] = next;
                next += 1;
            }
        }

        let mut loops = 0;
        for y in 0..n {
            if join[y].is_none() {
                continue;
            }
            for t in 0..4 {
                if visited[y][t] {
                    continue;
                }
                loops += 1;
                let mut cur: Slot = (y, t);
                while !visited[cur.0][cur.1] {
                    let jj = join[cur.0].expect("closed paths stay in removed crossings");
                    visited[cur.0][cur.1] = true;
                    let out = (cur.0, jj[cur.1]);
                    visited[out.0][out.1] = true;
                    let l = self.crossings[out.0][out.1] as usize;
                    cur = other_end(&occ[l], out);
                }
            }
        }

        let kept = (0..n).filter(|x| join[*x].is_none()).map(|x| labels[x]).collect();
        PdDiagram::from_planar(kept, self.free_loops + loops)
    }

    /// Resolves crossing `index`.
    pub fn smooth(&self, index: usize, kind: Smoothing) -> Result<PdDiagram> {
        self.check_index(index)?;
        Ok(self.splice(&[(index, kind.joins())]))
    }

    /// Exchanges over and under strands at crossing `index`.
    pub fn switch(&self, index: usize) -> Result<PdDiagram> {
        self.check_index(index)?;
        let mut d = self.clone();
        d.crossings[index].rotate_left(1);
        Ok(d)
    }

    pub fn mirror(&self) -> PdDiagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.rotate_left(1);
        }
        d
    }

    /// Applies Reidemeister I and II reductions until none applies.
    pub fn simplify(&self) -> PdDiagram {
        let mut d = self.clone();
        loop {
            if let Some(x) = d.find_r1() {
                d = d.splice(&[(x, STRAIGHT)]);
            } else if let Some((x, y)) = d.find_r2() {
                d = d.splice(&[(x, STRAIGHT), (y, STRAIGHT)]);
            } else {
                return d;
            }
        }
    }

    fn find_r1(&self) -> Option<usize> {
        self.crossings.iter().position(|c| (0..4).any(|s| c[s] == c[(s + 1) % 4]))
    }

    /// A bigon face whose two edges both pass over (or both under).
    fn find_r2(&self) -> Option<(usize, usize)> {
        let occ = self.occurrences();
        for (x, c) in self.crossings.iter().enumerate() {
            for i in 0..4 {
                let (e, f) = (c[i], c[(i + 1) % 4]);
                if e == f {
                    continue;
                }
                let (y, j) = other_end(&occ[f as usize], (x, (i + 1) % 4));
                if y == x {
                    continue;
                }
                let k = (j + 1) % 4;
                if self.crossings[y][k] != e || other_end(&occ[e as usize], (x, i)) != (y, k) {
                    continue;
                }
                if i % 2 == k % 2 {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Connected sum, cutting arc `arc1` of `self` and `arc2` of `other`.
    /// A crossingless summand is an unknot and must have a free loop to cut.
    pub fn connected_sum(&self, arc1: u32, other: &PdDiagram, arc2: u32) -> Result<PdDiagram> {
        match (self.crossings.is_empty(), other.crossings.is_empty()) {
            (true, _) => {
                if self.free_loops == 0 {
                    return Err(Error::InvalidArgument("empty diagram in connected sum".into()));
                }
                let mut d = other.clone();
                d.free_loops += self.free_loops - 1;
                return Ok(d);
            }
            (false, true) => return other.connected_sum(arc2, self, arc1),
            _ => {}
        }
        let check = |d: &PdDiagram, a: u32| {
            if a == 0 || a as usize > d.arc_count() {
                Err(Error::IndexOutOfRange { index: a as usize, len: d.arc_count() })
            } else {
                Ok(())
            }
        };
        check(self, arc1)?;
        check(other, arc2)?;
        let off = self.arc_count() as u32;
        let a = off + other.arc_count() as u32 + 1;
        let b = a + 1;
        let mut crossings = self.crossings.clone();
        let o1 = self.occurrences()[arc1 as usize];
        crossings[o1[0].0][o1[0].1] = a;
        crossings[o1[1].0][o1[1].1] = b;
        let mut tail: Vec<[u32; 4]> = other.crossings.iter().map(|c| c.map(|l| l + off)).collect();
        let o2 = other.occurrences()[arc2 as usize];
        tail[o2[0].0][o2[0].1] = a;
        tail[o2[1].0][o2[1].1] = b;
        crossings.extend(tail);
        Ok(PdDiagram::from_planar(crossings, self.free_loops + other.free_loops))
    }

    /// Splits into crossing-connected pieces. Free loops are returned
    /// separately as a count.
    pub fn split(&self) -> (Vec<PdDiagram>, usize) {
        let pieces = self.crossing_pieces();
        if pieces.len() == 1 {
            let mut d = self.clone();
            d.free_loops = 0;
            return (vec![d], self.free_loops);
        }
        (pieces.iter().map(|p| self.sub_diagram(p)).collect(), self.free_loops)
    }
}

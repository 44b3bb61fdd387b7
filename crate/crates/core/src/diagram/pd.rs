use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Position of an arc end: crossing index and slot `0..4`.
pub type Slot = (usize, usize);

/// A planar-diagram code of an unoriented link.
///
/// Each crossing lists its four arcs counterclockwise; the understrand
/// occupies slots 0 and 2, the overstrand slots 1 and 3. Arc labels are
/// kept dense in `1..=2n` (order-preserving compaction of whatever the
/// caller supplied), so every label occurs exactly twice. Crossingless
/// unknotted components are counted in `free_loops`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PdDiagram {
    pub(crate) crossings: Vec<[u32; 4]>,
    pub(crate) free_loops: usize,
}

impl PdDiagram {
    /// Validates arc multiplicities and compacts the labels.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &crossings {
            for l in x {
                *count.entry(*l).or_default() += 1;
            }
        }
        if let Some((l, c)) = count.iter().find(|(_, c)| **c != 2) {
            return Err(Error::MalformedDiagram(format!(
                "arc {l} occurs {c} time(s); every arc must occur exactly twice"
            )));
        }
        let remap: HashMap<u32, u32> = count.keys().enumerate().map(|(i, l)| (*l, i as u32 + 1)).collect();
        let crossings = crossings.into_iter().map(|x| x.map(|l| remap[&l])).collect();
        let d = Self { crossings, free_loops };
        let faces = d.face_count();
        let expected = d.crossings.len() + 2 * d.crossing_pieces().len();
        if faces != expected {
            return Err(Error::MalformedDiagram(format!("code is not planar: {faces} faces, expected {expected}")));
        }
        Ok(d)
    }

    /// Like [`PdDiagram::new`] for codes produced by planar moves; only
    /// compacts labels.
    pub(crate) fn from_planar(crossings: Vec<[u32; 4]>, free_loops: usize) -> Self {
        let mut labels: Vec<u32> = crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        debug_assert_eq!(labels.len() * 2, crossings.len() * 4);
        let max = labels.last().copied().unwrap_or(0) as usize;
        let mut remap = vec![0u32; max + 1];
        for (i, l) in labels.iter().enumerate() {
            remap[*l as usize] = i as u32 + 1;
        }
        let crossings = crossings.into_iter().map(|x| x.map(|l| remap[l as usize])).collect();
        Self { crossings, free_loops }
    }

    /// Faces of the projection: arriving at slot `k`, a face boundary leaves
    /// through slot `k + 1`.
    fn face_count(&self) -> usize {
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut seen = vec![false; 4 * n];
        let mut faces = 0;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut dart = start;
            while !seen[dart] {
                seen[dart] = true;
                let (x, s) = (dart / 4, dart % 4);
                let out = (x, (s + 1) % 4);
                let (y, t) = other_end(&occ[self.crossings[x][out.1] as usize], out);
                dart = 4 * y + t;
            }
        }
        faces
    }

    /// Unknot drawn without crossings.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(k: usize) -> Self {
        Self { crossings: Vec::new(), free_loops: k }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Both ends of every arc, indexed by label (index 0 unused).
    pub(crate) fn occurrences(&self) -> Vec<[Slot; 2]> {
        let mut occ = vec![[(usize::MAX, 0); 2]; self.arc_count() + 1];
        let mut seen = vec![0u8; self.arc_count() + 1];
        for (x, c) in self.crossings.iter().enumerate() {
            for (s, l) in c.iter().enumerate() {
                let l = *l as usize;
                occ[l][seen[l] as usize] = (x, s);
                seen[l] += 1;
            }
        }
        occ
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.crossings.len() {
            return Err(Error::IndexOutOfRange { index, len: self.crossings.len() });
        }
        Ok(())
    }

    /// Number of link components.
    pub fn num_components(&self) -> usize {
        let n = self.arc_count();
        let mut uf = UnionFind::new(n + 1);
        for c in &self.crossings {
            uf.union(c[0] as usize, c[2] as usize);
            uf.union(c[1] as usize, c[3] as usize);
        }
        let classes = (1..=n).filter(|&l| uf.find(l) == l).count();
        classes + self.free_loops
    }

    /// Components of the link as cyclic walks. Each entry is the sequence of
    /// `(crossing, entry slot)` visits along one strand, starting from the
    /// smallest arc label of that component. Free loops are not included.
    pub fn strands(&self) -> Vec<Vec<Slot>> {
        let occ = self.occurrences();
        let n = self.arc_count();
        let mut used = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if used[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut label = start;
            // Enter through the first recorded end of the starting arc.
            let mut at = occ[label][0];
            loop {
                used[label] = true;
                walk.push(at);
                let (x, s) = at;
                let exit = (x, (s + 2) % 4);
                label = self.crossings[x][exit.1] as usize;
                at = other_end(&occ[label], exit);
                if label == start {
                    break;
                }
            }
            out.push(walk);
        }
        out
    }

    /// Crossing graph components (crossings sharing an arc are adjacent).
    pub(crate) fn crossing_pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let occ = self.occurrences();
        let mut uf = UnionFind::new(n);
        for pair in occ.iter().skip(1) {
            uf.union(pair[0].0, pair[1].0);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            groups.entry(uf.find(x)).or_default().push(x);
        }
        groups.into_values().collect()
    }

    /// Diagram made of the given crossings only (which must be closed under
    /// arc adjacency).
    pub(crate) fn sub_diagram(&self, xs: &[usize]) -> PdDiagram {
        let crossings = xs.iter().map(|&x| self.crossings[x]).collect();
        PdDiagram::from_planar(crossings, 0)
    }

    /// Parses the JSON array-of-4-tuples form, e.g. `[[1,5,2,4],[3,1,4,6],[5,3,6,2]]`.
    pub fn from_json_array(text: &str) -> Result<Self> {
        let v: Vec<[u32; 4]> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("PD array: {e}")))?;
        if v.is_empty() {
            return Ok(Self::unknot());
        }
        Self::new(v, 0)
    }

    pub fn to_json_array(&self) -> String {
        serde_json::to_string(&self.crossings).expect("serializable")
    }
}

pub(crate) fn other_end(pair: &[Slot; 2], from: Slot) -> Slot {
    if pair[0] == from {
        pair[1]
    } else {
        pair[0]
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Display for PdDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.crossings {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "X({},{},{},{})", c[0], c[1], c[2], c[3])?;
        }
        if self.free_loops > 0 || self.crossings.is_empty() {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "O({})", self.free_loops)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PdDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PdDiagram({self})")
    }
}

impl FromStr for PdDiagram {
    type Err = Error;

    /// Grammar: `X(a,b,c,d)` terms (square brackets also accepted) separated
    /// by `;`, `,` or whitespace, plus optional `O(n)` terms adding `n` free
    /// loops. An optional `PD[...]` wrapper is ignored. Text starting with
    /// `[` is read as the JSON array form.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            return Self::from_json_array(t);
        }
        let body = strip_wrapper(t);
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        let mut crossings = Vec::new();
        let mut free = 0usize;
        let mut saw_term = false;
        let perr = |msg: String| Error::Parse(format!("{msg} in PD code {text:?}"));
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == ';' || c == ',' {
                i += 1;
                continue;
            }
            let kind = c;
            if kind != 'X' && kind != 'O' {
                return Err(perr(format!("unexpected {c:?} at position {i}")));
            }
            i += 1;
            let close = match chars.get(i) {
                Some('(') => ')',
                Some('[') => ']',
                _ => return Err(perr(format!("expected '(' after {kind}"))),
            };
            i += 1;
            let start = i;
            while i < chars.len() && chars[i] != close {
                i += 1;
            }
            if i >= chars.len() {
                return Err(perr(format!("unterminated {kind} term")));
            }
            let inner: String = chars[start..i].iter().collect();
            i += 1;
            let nums: Vec<u32> = inner
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| perr(format!("bad number list {inner:?}")))?;
            saw_term = true;
            match kind {
                'X' => {
                    let arr: [u32; 4] = nums.try_into().map_err(|_| perr("X term needs exactly 4 arcs".into()))?;
                    crossings.push(arr);
                }
                _ => {
                    if nums.len() != 1 {
                        return Err(perr("O term needs exactly one count".into()));
                    }
                    free += nums[0] as usize;
                }
            }
        }
        if !saw_term {
            return Err(perr("no terms".into()));
        }
        PdDiagram::new(crossings, free)
    }
}

fn strip_wrapper(t: &str) -> &str {
    for (open, close) in [("PD[", ']'), ("PD(", ')')] {
        if let Some(rest) = t.strip_prefix(open) {
            if let Some(inner) = rest.strip_suffix(close) {
                return inner;
            }
        }
    }
    t
}

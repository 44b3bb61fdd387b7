use std::cmp::Ordering;

use super::pd::{other_end, PdDiagram, Slot};

/// Which symmetries the canonical code should forget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Relabelings and orientation-preserving homeomorphisms of the sphere.
    Isotopy,
    /// Also identifies a diagram with its mirror image.
    WithMirror,
}

impl PdDiagram {
    /// Lexicographically minimal encoding over all breadth-first
    /// renumberings. Equal codes mean equal diagrams up to relabeling and
    /// the chosen symmetries. Disconnected diagrams are encoded piece by
    /// piece, pieces sorted, followed by the free-loop count.
    pub fn canonical_code(&self, sym: Symmetry) -> Vec<u32> {
        let mut codes: Vec<Vec<u32>> = self.crossing_pieces().iter().map(|xs| connected_code(self, xs, sym)).collect();
        codes.sort();
        let mut out = Vec::with_capacity(5 * self.crossings.len() + codes.len() + 1);
        for c in codes {
            out.push(c.len() as u32);
            out.extend(c);
        }
        out.push(u32::MAX - self.free_loops as u32);
        out
    }
}

/// Minimal code of one crossing-connected piece.
fn connected_code(d: &PdDiagram, xs: &[usize], sym: Symmetry) -> Vec<u32> {
    let occ = d.occurrences();
    // (direction step, flip bit). Reversing the rotation is a reflection of
    // the plane, which mirrors the link; pairing it with a crossing switch
    // undoes that.
    let variants: &[(usize, u32)] = match sym {
        Symmetry::Isotopy => &[(1, 0), (3, 1)],
        Symmetry::WithMirror => &[(1, 0), (3, 1), (1, 1), (3, 0)],
    };
    let mut enc = Encoder::new(d);
    let mut best: Option<Vec<u32>> = None;
    for &x in xs {
        for s in 0..4 {
            for &(dir, flip) in variants {
                if enc.run(d, &occ, (x, s), dir, flip, best.as_deref()) {
                    best = Some(enc.code.clone());
                }
            }
        }
    }
    best.unwrap_or_default()
}

struct Encoder {
    code: Vec<u32>,
    pos_of: Vec<u32>,
    label_of: Vec<u32>,
    queue: Vec<Slot>,
}

const UNSEEN: u32 = u32::MAX;

impl Encoder {
    fn new(d: &PdDiagram) -> Self {
        Self {
            code: Vec::with_capacity(5 * d.crossings.len()),
            pos_of: vec![UNSEEN; d.crossings.len()],
            label_of: vec![UNSEEN; d.arc_count() + 1],
            queue: Vec::with_capacity(d.crossings.len()),
        }
    }

    /// Encodes from `start`; returns true when the result beats `best`.
    /// Abandons the walk as soon as it is known to lose.
    fn run(
        &mut self,
        d: &PdDiagram,
        occ: &[[Slot; 2]],
        start: Slot,
        dir: usize,
        flip: u32,
        best: Option<&[u32]>,
    ) -> bool {
        self.code.clear();
        self.queue.clear();
        self.pos_of.iter_mut().for_each(|p| *p = UNSEEN);
        self.label_of.iter_mut().for_each(|p| *p = UNSEEN);
        let mut next_label = 1;
        let mut state = match best {
            None => Ordering::Less,
            Some(_) => Ordering::Equal,
        };
        let mut push = |code: &mut Vec<u32>, v: u32| -> bool {
            if state == Ordering::Equal {
                let b = best.expect("equal implies a best code")[code.len()];
                state = v.cmp(&b);
                if state == Ordering::Greater {
                    return false;
                }
            }
            code.push(v);
            true
        };

        self.pos_of[start.0] = 0;
        self.queue.push(start);
        let mut head = 0;
        while head < self.queue.len() {
            let (x, entry) = self.queue[head];
            head += 1;
            if !push(&mut self.code, (entry as u32 & 1) ^ flip) {
                return false;
            }
            for r in 0..4 {
                let slot = (entry + dir * r) % 4;
                let l = d.crossings[x][slot] as usize;
                if self.label_of[l] == UNSEEN {
                    self.label_of[l] = next_label;
                    next_label += 1;
                }
                if !push(&mut self.code, self.label_of[l]) {
                    return false;
                }
                let (y, t) = other_end(&occ[l], (x, slot));
                if self.pos_of[y] == UNSEEN {
                    self.pos_of[y] = self.queue.len() as u32;
                    self.queue.push((y, t));
                }
            }
        }
        state == Ordering::Less
    }
}

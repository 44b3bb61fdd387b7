#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;

use qalt::braid3::BraidWord;
use qalt::catalog::{load_catalog, CatalogEntry};
use qalt::diagram::{PdDiagram, Smoothing};
use qalt::jones::OrientedDiagram;
use qalt::poly::{HalfLaurent, IntLaurent, Integer, Laurent};
use qalt::qpoly::mu;

pub const TREFOIL: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
pub const FIGURE8: &str = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
pub const HOPF: &str = "X(1,4,2,3);X(3,2,4,1)";

pub fn pd(s: &str) -> PdDiagram {
    s.parse().unwrap()
}

pub fn data(name: &str) -> Vec<CatalogEntry> {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    load_catalog(&p).unwrap()
}

pub fn fixture(name: &str) -> PdDiagram {
    ["fixtures.csv", "table1.csv", "table2.csv"]
        .iter()
        .flat_map(|f| data(f))
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no fixture {name}"))
        .pd
}

pub fn braid_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(move |k| {
        let g = (k - 1) as i32;
        let letter = (1..=g, any::<bool>()).prop_map(|(a, neg)| if neg { -a } else { a });
        prop::collection::vec(letter, 1..=max_len).prop_map(move |letters| BraidWord::new(k, letters).unwrap())
    })
}

/// Closed braids, which gives knots and links with R1/R2-reducible spots.
pub fn diagram(max_len: usize) -> impl Strategy<Value = PdDiagram> {
    braid_word(max_len).prop_map(|w| PdDiagram::close_braid(&w).unwrap())
}

/// Closed braids with at least one crossing and no free loops.
pub fn crossed_diagram(max_len: usize) -> impl Strategy<Value = PdDiagram> {
    diagram(max_len).prop_filter("needs crossings, no free loops", |d| d.crossing_count() > 0 && d.free_loops() == 0)
}

/// Component traversals as `(crossing, passes under)`, chosen from labels
/// and crossing indices only, so switching a crossing keeps the walk.
fn walks(d: &PdDiagram) -> Vec<Vec<(usize, bool)>> {
    let cs = d.crossings();
    let arcs = 2 * cs.len();
    let mut occ = vec![Vec::new(); arcs + 1];
    for (x, c) in cs.iter().enumerate() {
        for (s, &l) in c.iter().enumerate() {
            occ[l as usize].push((x, s));
        }
    }
    let walk = |start: (usize, usize)| -> Vec<(usize, usize)> {
        let mut out = vec![start];
        let (mut x, mut s) = start;
        loop {
            let exit = (x, (s + 2) % 4);
            let l = cs[exit.0][exit.1] as usize;
            let next = if occ[l][0] == exit { occ[l][1] } else { occ[l][0] };
            if next == start {
                return out;
            }
            out.push(next);
            (x, s) = next;
        }
    };
    let mut used = vec![false; arcs + 1];
    let mut out = Vec::new();
    for l in 1..=arcs {
        if used[l] {
            continue;
        }
        let first = walk(occ[l][0]);
        let labels: Vec<usize> = first.iter().map(|&(x, s)| cs[x][s] as usize).collect();
        for &m in &labels {
            used[m] = true;
        }
        let start = labels
            .iter()
            .copied()
            .filter(|&m| occ[m][0].0 != occ[m][1].0)
            .min()
            .map(|m| *occ[m].iter().min_by_key(|o| o.0).unwrap())
            .unwrap_or_else(|| {
                let x = first[0].0;
                (x, 1)
            });
        out.push(walk(start).into_iter().map(|(x, s)| (x, s % 2 == 0)).collect());
    }
    out
}

/// `Q` by the plain skein recursion: switch the first crossing met from
/// below until the diagram is descending.
pub fn q_naive(d: &PdDiagram) -> IntLaurent {
    let ws = walks(d);
    let mut seen = vec![false; d.crossing_count()];
    let mut bad = None;
    'outer: for w in &ws {
        for &(x, under) in w {
            if !seen[x] {
                seen[x] = true;
                if under {
                    bad = Some(x);
                    break 'outer;
                }
            }
        }
    }
    match bad {
        None => mu().pow((ws.len() + d.free_loops() - 1) as u32),
        Some(x) => {
            let a = q_naive(&d.smooth(x, Smoothing::A).unwrap());
            let b = q_naive(&d.smooth(x, Smoothing::B).unwrap());
            let s = q_naive(&d.switch(x).unwrap());
            &(&a + &b).shift(1) - &s
        }
    }
}

pub type APoly = Laurent<'A'>;

/// Kauffman bracket as a sum over all `2ⁿ` states.
pub fn bracket_states(d: &PdDiagram) -> APoly {
    let n = d.crossing_count();
    let delta = APoly::from_terms([(2, -1), (-2, -1)]);
    let mut total = APoly::zero();
    for mask in 0u64..(1 << n) {
        let mut e = d.clone();
        for i in (0..n).rev() {
            let k = if mask >> i & 1 == 0 { Smoothing::A } else { Smoothing::B };
            e = e.smooth(i, k).unwrap();
        }
        let a = n as i64 - 2 * mask.count_ones() as i64;
        total += &delta.pow((e.free_loops() - 1) as u32).shift(a);
    }
    total
}

/// Jones polynomial from the state sum, `(−A³)^(−w)⟨D⟩` with `A = s^(−1/2)`.
pub fn jones_states(od: &OrientedDiagram) -> HalfLaurent {
    let w = od.writhe();
    let br = bracket_states(od.base());
    let sign = Integer::from(if w % 2 == 0 { 1 } else { -1 });
    let mut v = HalfLaurent::zero();
    for (k, c) in br.terms() {
        let e = k - 3 * w;
        assert!(e % 2 == 0, "odd exponent in normalized bracket");
        v.add_term(-e / 2, &(c * &sign));
    }
    v
}

/// `(−2)^(k−1)`, the value of `V` at `t = 1` for a `k`-component link.
pub fn jones_at_one(components: usize) -> Integer {
    Integer::from(-2).pow(components as u32 - 1)
}

use std::collections::HashMap;

use crate::diagram::PdDiagram;
use crate::poly::Laurent;

/// Polynomials in the bracket variable `A`.
pub(crate) type APoly = Laurent<'A'>;

/// `δ = −A² − A⁻²`, the value of an extra loop.
fn delta() -> APoly {
    APoly::from_terms([(2, -1), (-2, -1)])
}

/// Open paths at the cut: each dangling arc label paired with the label at
/// the other end of its path, stored sorted as `(min, max)` pairs. The flag
/// records whether a loop has been closed yet (the first one counts 1).
type Frontier = (Vec<(u32, u32)>, bool);

/// Kauffman bracket `⟨D⟩` with `⟨O⟩ = 1`, summed over states by sweeping
/// crossings one at a time and merging states with the same frontier.
pub(crate) fn bracket(d: &PdDiagram) -> APoly {
    let n = d.crossing_count();
    let free = d.free_loops();
    if n == 0 {
        return delta().pow(free.saturating_sub(1) as u32);
    }
    let order = sweep_order(d);
    let a = APoly::monomial(1, 1);
    let a_inv = APoly::monomial(1, -1);
    let dl = delta();

    let mut states: HashMap<Frontier, APoly> = HashMap::new();
    states.insert((Vec::new(), false), APoly::one());
    for x in order {
        let c = d.crossings()[x];
        let mut next: HashMap<Frontier, APoly> = HashMap::with_capacity(states.len() * 2);
        for ((pairs, seen), coeff) in &states {
            for (w, joins) in [(&a, [(0, 1), (2, 3)]), (&a_inv, [(0, 3), (1, 2)])] {
                let mut m: HashMap<u32, u32> = pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
                let mut loops = 0;
                for (i, j) in joins {
                    loops += join(&mut m, c[i], c[j]);
                }
                let mut seen = *seen;
                let mut term = coeff * w;
                for _ in 0..loops {
                    if seen {
                        term = &term * &dl;
                    }
                    seen = true;
                }
                let mut key: Vec<(u32, u32)> = m.iter().filter(|(u, v)| u < v).map(|(u, v)| (*u, *v)).collect();
                key.sort_unstable();
                *next.entry((key, seen)).or_insert_with(APoly::zero) += &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut total = APoly::zero();
    for ((pairs, _), p) in states {
        debug_assert!(pairs.is_empty());
        total += &p;
    }
    &total * &dl.pow(free as u32)
}

/// Connects arc ends `u` and `v` inside the current crossing. Returns the
/// number of loops closed (0 or 1).
fn join(m: &mut HashMap<u32, u32>, u: u32, v: u32) -> usize {
    if u == v {
        return 1;
    }
    match (m.remove(&u), m.remove(&v)) {
        (Some(pu), Some(pv)) => {
            if pu == v {
                1
            } else {
                m.insert(pu, pv);
                m.insert(pv, pu);
                0
            }
        }
        (Some(pu), None) => {
            m.insert(pu, v);
            m.insert(v, pu);
            0
        }
        (None, Some(pv)) => {
            m.insert(pv, u);
            m.insert(u, pv);
            0
        }
        (None, None) => {
            m.insert(u, v);
            m.insert(v, u);
            0
        }
    }
}

/// Greedy order keeping the frontier small: next is the crossing with the
/// most arcs already cut open.
fn sweep_order(d: &PdDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut open = vec![0u8; 2 * n + 1];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let score =
            |x: usize| -> i32 { d.crossings()[x].iter().map(|l| if open[*l as usize] == 1 { 1 } else { -1 }).sum() };
        let x =
            (0..n).filter(|x| !done[*x]).max_by_key(|x| (score(*x), std::cmp::Reverse(*x))).expect("crossings remain");
        done[x] = true;
        for l in d.crossings()[x] {
            open[l as usize] += 1;
        }
        order.push(x);
    }
    order
}

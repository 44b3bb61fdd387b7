use itertools::Itertools;

use crate::diagram::PdDiagram;

/// Crossings first reached on the understrand, in traversal order, for the
/// basepoints, directions and component order that make this list
/// shortest. Switching them all yields a descending diagram, which is an
/// unlink.
pub(crate) fn bad_crossings(d: &PdDiagram) -> Vec<usize> {
    let walks = d.strands();
    let k = walks.len();
    let n = d.crossing_count();
    let mut comp_under = vec![usize::MAX; n];
    let mut comp_over = vec![usize::MAX; n];
    for (i, w) in walks.iter().enumerate() {
        for &(x, s) in w {
            if s % 2 == 0 {
                comp_under[x] = i;
            } else {
                comp_over[x] = i;
            }
        }
    }

    // Best start and direction per component for its self-crossings.
    let mut sequences: Vec<Vec<(usize, bool)>> = Vec::with_capacity(k);
    for w in &walks {
        let len = w.len();
        let mut best: Option<(usize, Vec<(usize, bool)>)> = None;
        for b in 0..len {
            for fwd in [true, false] {
                let seq: Vec<(usize, bool)> = (0..len)
                    .map(|r| {
                        let p = if fwd { (b + r) % len } else { (b + len - r) % len };
                        (w[p].0, w[p].1 % 2 == 0)
                    })
                    .collect();
                let bad = count_self_bad(&seq, n);
                if best.as_ref().is_none_or(|(c, _)| bad < *c) {
                    best = Some((bad, seq));
                }
            }
        }
        sequences.push(best.map(|(_, s)| s).unwrap_or_default());
    }

    // Order components so mixed crossings are met on the overstrand first.
    let mut weight = vec![vec![0usize; k]; k];
    for x in 0..n {
        let (u, o) = (comp_under[x], comp_over[x]);
        if u != o {
            weight[u][o] += 1;
        }
    }
    let cost = |order: &[usize]| -> usize {
        let mut c = 0;
        for (a, &i) in order.iter().enumerate() {
            for &j in &order[a + 1..] {
                c += weight[i][j];
            }
        }
        c
    };
    let order: Vec<usize> =
        if k <= 6 { (0..k).permutations(k).min_by_key(|p| cost(p)).unwrap_or_default() } else { greedy_order(&weight) };

    let mut seen = vec![false; n];
    let mut bad = Vec::new();
    for i in order {
        for &(x, under) in &sequences[i] {
            if !seen[x] {
                seen[x] = true;
                if under {
                    bad.push(x);
                }
            }
        }
    }
    bad
}

fn count_self_bad(seq: &[(usize, bool)], n: usize) -> usize {
    let mut first_under = vec![None; n];
    let mut bad = 0;
    for &(x, under) in seq {
        match first_under[x] {
            None => first_under[x] = Some(under),
            Some(true) => bad += 1,
            Some(false) => {}
        }
    }
    bad
}

/// Repeatedly takes the component that is under the fewest remaining ones.
fn greedy_order(weight: &[Vec<usize>]) -> Vec<usize> {
    let k = weight.len();
    let mut left: Vec<usize> = (0..k).collect();
    let mut order = Vec::with_capacity(k);
    while !left.is_empty() {
        let (pos, _) = left
            .iter()
            .enumerate()
            .min_by_key(|(_, &i)| left.iter().map(|&j| weight[i][j]).sum::<usize>())
            .expect("nonempty");
        order.push(left.remove(pos));
    }
    order
}

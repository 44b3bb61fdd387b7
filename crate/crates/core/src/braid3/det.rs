use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::B3NormalForm;
use crate::error::{Error, Result};
use crate::poly::Integer;

/// Undirected multigraph; loops are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    pub fn new(vertices: usize) -> Self {
        Self { vertices, edges: BTreeMap::new() }
    }

    pub fn add_edges(&mut self, a: usize, b: usize, count: u64) {
        assert!(a < self.vertices && b < self.vertices, "vertex out of range");
        if a != b && count > 0 {
            *self.edges.entry((a.min(b), a.max(b))).or_default() += count;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }
}

/// Cycle `u_0 … u_{q−1}` plus a hub joined to the first vertex of the
/// `i`-th block of `q_i` cycle vertices by `p_i` parallel edges.
pub fn tutte_graph(pairs: &[(u32, u32)]) -> Result<Multigraph> {
    if pairs.is_empty() || pairs.iter().any(|(p, q)| *p == 0 || *q == 0) {
        return Err(Error::InvalidArgument("need nonempty positive (p, q) pairs".into()));
    }
    let q: usize = pairs.iter().map(|p| p.1 as usize).sum();
    let hub = q;
    let mut g = Multigraph::new(q + 1);
    for i in 0..q {
        g.add_edges(i, (i + 1) % q, 1);
    }
    let mut start = 0;
    for (p, qi) in pairs {
        g.add_edges(hub, start, *p as u64);
        start += *qi as usize;
    }
    Ok(g)
}

/// Matrix-tree theorem with fraction-free elimination.
pub fn spanning_tree_count(g: &Multigraph) -> Integer {
    let n = g.vertices;
    if n <= 1 {
        return Integer::from(1);
    }
    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for (&(a, b), &c) in &g.edges {
        let c = BigInt::from(c);
        lap[a][a] += &c;
        lap[b][b] += &c;
        lap[a][b] -= &c;
        lap[b][a] -= &c;
    }
    lap.pop();
    for row in &mut lap {
        row.pop();
    }
    Integer::from(bareiss_det(lap).abs())
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    m[n - 1][n - 1].clone() * sign
}

/// Determinant by the case analysis for each family. Family 1 counts trees
/// of the hub-and-cycle graph block by block and adds 4 for odd `n`.
pub fn det_formula(nf: &B3NormalForm) -> Result<Integer> {
    nf.validate()?;
    Ok(match nf {
        B3NormalForm::Family1 { n, pairs } => {
            let t = family1_tree_sum(pairs);
            if n.rem_euclid(2) == 1 {
                &t + &Integer::from(4)
            } else {
                t
            }
        }
        B3NormalForm::Family2 { n, .. } => Integer::from(if n.rem_euclid(2) == 0 { 0 } else { 4 }),
        B3NormalForm::Family3 { n, m } => {
            if *m == -2 {
                Integer::from(2)
            } else {
                Integer::from(2 + if (3 * n + m).rem_euclid(2) == 0 { 1 } else { -1 })
            }
        }
    })
}

/// `pq` plus, for every choice `i_1 < … < i_k` (k ≥ 2), the product of the
/// chosen `p`s, the consecutive `q`-block sums between them, and the
/// remaining wrap-around block.
fn family1_tree_sum(pairs: &[(u32, u32)]) -> Integer {
    let s = pairs.len();
    let p: i64 = pairs.iter().map(|x| x.0 as i64).sum();
    let q: i64 = pairs.iter().map(|x| x.1 as i64).sum();
    let mut prefix = vec![0i64; s + 1];
    for i in 0..s {
        prefix[i + 1] = prefix[i] + pairs[i].1 as i64;
    }
    let mut total = Integer::from(p * q);
    for mask in 1u64..(1 << s) {
        if mask.count_ones() < 2 {
            continue;
        }
        let idx: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).collect();
        let mut term = Integer::from(1);
        for &i in &idx {
            term *= &Integer::from(pairs[i].0 as i64);
        }
        for w in idx.windows(2) {
            term *= &Integer::from(prefix[w[1]] - prefix[w[0]]);
        }
        let span = prefix[*idx.last().unwrap()] - prefix[idx[0]];
        term *= &Integer::from(q - span);
        total += &term;
    }
    total
}

/// The quasi-alternating classification of closed 3-braids.
pub fn baldwin_is_qa(nf: &B3NormalForm) -> Result<bool> {
    nf.validate()?;
    Ok(match *nf {
        B3NormalForm::Family1 { n, .. } => (-1..=1).contains(&n),
        B3NormalForm::Family2 { n, m } => (n == 1 && (-3..=-1).contains(&m)) || (n == -1 && (1..=3).contains(&m)),
        B3NormalForm::Family3 { n, .. } => n == 0 || n == 1,
    })
}

/// Crossing-number bounds from explicit shorter words, for family 1 with
/// `|n| ≤ 1`. For `n = 0` this is the crossing count of the reduced
/// alternating closure; `n = −1` is the mirror of `n = 1` with the roles
/// of `p` and `q` exchanged.
pub fn crossing_upper_bound(nf: &B3NormalForm) -> Result<u64> {
    nf.validate()?;
    let B3NormalForm::Family1 { n, pairs } = nf else {
        return Err(Error::Unsupported("crossing bound only for family 1".into()));
    };
    let (p, q) = nf.pq().expect("family 1");
    let single = pairs.len() == 1;
    match n {
        // A lone σ₁ or σ₂⁻¹ is a nugatory crossing.
        0 => Ok(match (single, p, q) {
            (true, 1, 1) => 0,
            (true, 1, q) => q,
            (true, p, 1) => p,
            _ => p + q,
        }),
        1 | -1 => {
            let (p, q) = if *n == 1 { (p, q) } else { (q, p) };
            Ok(if !single || (p > 1 && q > 1) {
                4 + p + q
            } else if p == 1 && q > 1 {
                3 + q
            } else if p > 1 && q == 1 {
                p + 4
            } else {
                5
            })
        }
        _ => Err(Error::Unsupported(format!("crossing bound needs |n| <= 1, got n = {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(x: i64) -> Integer {
        Integer::from(x)
    }

    #[test]
    fn classical_counts() {
        let mut tri = Multigraph::new(3);
        tri.add_edges(0, 1, 1);
        tri.add_edges(1, 2, 1);
        tri.add_edges(2, 0, 1);
        assert_eq!(spanning_tree_count(&tri), i(3));
        let mut par = Multigraph::new(2);
        par.add_edges(0, 1, 4);
        assert_eq!(spanning_tree_count(&par), i(4));
        let mut split = Multigraph::new(3);
        split.add_edges(0, 1, 2);
        assert_eq!(spanning_tree_count(&split), i(0));
        // K4 has 16 trees.
        let mut k4 = Multigraph::new(4);
        for a in 0..4 {
            for b in a + 1..4 {
                k4.add_edges(a, b, 1);
            }
        }
        assert_eq!(spanning_tree_count(&k4), i(16));
    }

    #[test]
    fn single_block_gives_pq() {
        for p in 1..=5 {
            for q in 1..=5 {
                let g = tutte_graph(&[(p, q)]).unwrap();
                assert_eq!(g.vertex_count(), q as usize + 1);
                assert_eq!(spanning_tree_count(&g), i((p * q) as i64));
            }
        }
        assert_eq!(spanning_tree_count(&tutte_graph(&[(1, 1), (1, 1)]).unwrap()), i(5));
    }

    #[test]
    fn tree_sum_matches_matrix_tree() {
        let vals = [1u32, 2, 3];
        let mut seen = 0;
        for s in 1..=3usize {
            let total = vals.len().pow(2 * s as u32);
            for code in 0..total {
                let mut c = code;
                let pairs: Vec<(u32, u32)> = (0..s)
                    .map(|_| {
                        let p = vals[c % 3];
                        c /= 3;
                        let q = vals[c % 3];
                        c /= 3;
                        (p, q)
                    })
                    .collect();
                let g = tutte_graph(&pairs).unwrap();
                assert_eq!(family1_tree_sum(&pairs), spanning_tree_count(&g), "{pairs:?}");
                seen += 1;
            }
        }
        assert_eq!(seen, 9 + 81 + 729);
    }

    #[test]
    fn det_examples() {
        use B3NormalForm::*;
        assert_eq!(det_formula(&Family2 { n: 1, m: -2 }).unwrap(), i(4));
        assert_eq!(det_formula(&Family3 { n: 0, m: -1 }).unwrap(), i(1));
        assert_eq!(det_formula(&Family1 { n: 0, pairs: vec![(1, 1), (1, 1)] }).unwrap(), i(5));
        assert_eq!(det_formula(&Family1 { n: 1, pairs: vec![(1, 1)] }).unwrap(), i(5));
    }

    #[test]
    fn baldwin() {
        use B3NormalForm::*;
        assert!(baldwin_is_qa(&Family1 { n: 1, pairs: vec![(2, 5), (1, 1)] }).unwrap());
        assert!(!baldwin_is_qa(&Family1 { n: 2, pairs: vec![(1, 1)] }).unwrap());
        assert!(!baldwin_is_qa(&Family2 { n: 0, m: 5 }).unwrap());
        assert!(baldwin_is_qa(&Family2 { n: -1, m: 3 }).unwrap());
        assert!(!baldwin_is_qa(&Family3 { n: 2, m: -3 }).unwrap());
    }

    #[test]
    fn crossing_bounds() {
        use B3NormalForm::*;
        let f = |pairs: Vec<(u32, u32)>| crossing_upper_bound(&Family1 { n: 1, pairs }).unwrap();
        assert_eq!(f(vec![(1, 1)]), 5);
        assert_eq!(f(vec![(3, 1)]), 7);
        assert_eq!(f(vec![(2, 2)]), 8);
        assert_eq!(f(vec![(1, 4)]), 7);
        let g = |n, pairs: Vec<(u32, u32)>| crossing_upper_bound(&Family1 { n, pairs }).unwrap();
        assert_eq!(g(-1, vec![(1, 4)]), 8);
        assert_eq!(g(-1, vec![(4, 1)]), 7);
        assert_eq!(g(0, vec![(1, 1)]), 0);
        assert_eq!(g(0, vec![(1, 3)]), 3);
        assert_eq!(g(0, vec![(1, 1), (1, 1)]), 4);
        assert!(crossing_upper_bound(&Family2 { n: 1, m: -1 }).is_err());
        assert!(crossing_upper_bound(&Family1 { n: 2, pairs: vec![(1, 1)] }).is_err());
    }
}

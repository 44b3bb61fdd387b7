use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::mu;
use super::traversal::bad_crossings;
use crate::diagram::{PdDiagram, Smoothing, Symmetry};
use crate::error::{Error, Result};
use crate::poly::IntLaurent;

/// Default crossing bound for Q computations.
pub const Q_MAX_CROSSINGS: usize = 14;

/// Memo of Q values for connected reduced diagrams, keyed by canonical
/// code up to mirror image (Q does not see chirality). Safe to share
/// between threads; values are exact, so sharing never changes results.
#[derive(Debug, Default)]
pub struct QCache {
    map: RwLock<HashMap<Vec<u32>, IntLaurent>>,
}

impl QCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &[u32]) -> Option<IntLaurent> {
        self.map.read().expect("cache lock").get(key).cloned()
    }

    fn put(&self, key: Vec<u32>, q: IntLaurent) {
        self.map.write().expect("cache lock").insert(key, q);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QResult {
    pub q: IntLaurent,
    pub diagram_components: usize,
}

#[derive(Clone, Debug)]
pub struct QEngine {
    max_crossings: usize,
    cache: Arc<QCache>,
}

impl Default for QEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl QEngine {
    /// Engine with a private cache and the default crossing bound.
    pub fn new() -> Self {
        Self { max_crossings: Q_MAX_CROSSINGS, cache: Arc::new(QCache::new()) }
    }

    pub fn with_max_crossings(mut self, n: usize) -> Self {
        self.max_crossings = n;
        self
    }

    pub fn with_cache(mut self, cache: Arc<QCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn cache(&self) -> &Arc<QCache> {
        &self.cache
    }

    pub fn max_crossings(&self) -> usize {
        self.max_crossings
    }

    pub fn q_polynomial(&self, d: &PdDiagram) -> Result<IntLaurent> {
        let n = d.crossing_count();
        if n > self.max_crossings {
            return Err(Error::ResourceBound { what: "Q crossings", found: n, limit: self.max_crossings });
        }
        if n == 0 && d.free_loops() == 0 {
            return Err(Error::InvalidArgument("empty diagram has no Q-polynomial".into()));
        }
        Ok(self.q_any(d))
    }

    pub fn q_result(&self, d: &PdDiagram) -> Result<QResult> {
        Ok(QResult { q: self.q_polynomial(d)?, diagram_components: d.num_components() })
    }

    fn q_any(&self, d: &PdDiagram) -> IntLaurent {
        let d = d.simplify();
        let (pieces, loops) = d.split();
        let extra = pieces.len() + loops - 1;
        let mut q = mu().pow(extra as u32);
        for p in &pieces {
            q = &q * &self.q_connected(p);
        }
        q
    }

    /// `d` is reduced and its crossing graph is connected.
    fn q_connected(&self, d: &PdDiagram) -> IntLaurent {
        let key = d.canonical_code(Symmetry::WithMirror);
        if let Some(q) = self.cache.get(&key) {
            return q;
        }
        // Q(D) = x(Q(D_A) + Q(D_B)) − Q(D') at each crossing; switching the
        // bad crossings one after another ends at a descending diagram.
        let bad = bad_crossings(d);
        let x = IntLaurent::var();
        let mut sum = IntLaurent::zero();
        let mut cur = d.clone();
        for (j, &c) in bad.iter().enumerate() {
            let a = cur.smooth(c, Smoothing::A).expect("index in range");
            let b = cur.smooth(c, Smoothing::B).expect("index in range");
            let term = &x * &(&self.q_any(&a) + &self.q_any(&b));
            if j % 2 == 0 {
                sum += &term;
            } else {
                sum -= &term;
            }
            cur = cur.switch(c).expect("index in range");
        }
        let k = d.num_components();
        let tail = mu().pow(k as u32 - 1);
        if bad.len().is_multiple_of(2) {
            sum += &tail;
        } else {
            sum -= &tail;
        }
        self.cache.put(key, sum.clone());
        sum
    }
}

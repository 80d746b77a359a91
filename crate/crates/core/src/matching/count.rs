use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hexsystem::Graph;

/// Number of perfect matchings of `g`.
pub fn count_perfect_matchings(g: &Graph) -> BigUint {
    count_matchings_containing(g, &[]).expect("the empty edge set is valid")
}

/// Number of perfect matchings of `g` that contain every edge of `required`.
///
/// The endpoints of `required` are removed and the rest is counted by
/// lowest-uncovered-vertex branching, memoised on the covered set. With vertices
/// numbered along the chain the memo table stays narrow.
pub fn count_matchings_containing(g: &Graph, required: &[usize]) -> Result<BigUint> {
    let n = g.vertex_count();
    let mut required = required.to_vec();
    required.sort_unstable();
    required.dedup();
    let mut covered = FixedBitSet::with_capacity(n);
    for &e in &required {
        if e >= g.edge_count() {
            return Err(Error::invalid(format!("edge index {e} out of range")));
        }
        let (a, b) = g.edge(e);
        if covered.contains(a) || covered.contains(b) {
            return Ok(BigUint::zero());
        }
        covered.insert(a);
        covered.insert(b);
    }
    if (n - covered.count_ones(..)) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let mut memo = HashMap::new();
    Ok(count_memo(g, covered, &mut memo))
}

fn count_memo(
    g: &Graph,
    covered: FixedBitSet,
    memo: &mut HashMap<FixedBitSet, BigUint>,
) -> BigUint {
    let Some(v) = covered.zeroes().next() else {
        return BigUint::one();
    };
    if let Some(hit) = memo.get(&covered) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for &(u, _) in g.neighbors(v) {
        if covered.contains(u) {
            continue;
        }
        let mut next = covered.clone();
        next.insert(v);
        next.insert(u);
        total += count_memo(g, next, memo);
    }
    memo.insert(covered, total.clone());
    total
}

/// Counts perfect matchings with some vertices pre-covered and some edges
/// deleted, stopping as soon as `cap` completions have been seen.
pub(crate) struct CappedCounter<'g> {
    graph: &'g Graph,
    covered: Vec<bool>,
    deleted: Vec<bool>,
}

impl<'g> CappedCounter<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        CappedCounter {
            graph,
            covered: vec![false; graph.vertex_count()],
            deleted: vec![false; graph.edge_count()],
        }
    }

    /// Matchings that contain all of `edges` (assumed pairwise disjoint).
    pub(crate) fn count_containing(&mut self, edges: &[usize], cap: usize) -> usize {
        for &e in edges {
            let (a, b) = self.graph.edge(e);
            self.covered[a] = true;
            self.covered[b] = true;
        }
        let count = self.run(cap);
        for &e in edges {
            let (a, b) = self.graph.edge(e);
            self.covered[a] = false;
            self.covered[b] = false;
        }
        count
    }

    /// Matchings of the graph with `edges` deleted.
    pub(crate) fn count_without(&mut self, edges: &[usize], cap: usize) -> usize {
        for &e in edges {
            self.deleted[e] = true;
        }
        let count = self.run(cap);
        for &e in edges {
            self.deleted[e] = false;
        }
        count
    }

    fn run(&mut self, cap: usize) -> usize {
        let mut found = 0;
        self.search(0, cap, &mut found);
        found
    }

    fn search(&mut self, from: usize, cap: usize, found: &mut usize) {
        let Some(v) = (from..self.covered.len()).find(|&v| !self.covered[v]) else {
            *found += 1;
            return;
        };
        self.covered[v] = true;
        for &(u, e) in self.graph.neighbors(v) {
            if self.covered[u] || self.deleted[e] {
                continue;
            }
            self.covered[u] = true;
            self.search(v + 1, cap, found);
            self.covered[u] = false;
            if *found >= cap {
                break;
            }
        }
        self.covered[v] = false;
    }
}

//! Perfect matchings: enumeration, counting, and alternating-cycle structure.

mod alternating;
mod count;
mod mis;

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hexsystem::Graph;

pub use alternating::{
    alternating_hexagons, is_alternating_cycle, max_compatible_restricted, max_compatible_set,
    max_disjoint_alternating_hexagons, AltSetReport, CandidateCycle,
};
pub(crate) use alternating::{face_candidates, max_disjoint_among, restricted_candidates};
pub(crate) use count::CappedCounter;
pub use count::{count_matchings_containing, count_perfect_matchings};
pub(crate) use mis::maximum_independent_set;

/// Subset of a graph's edge indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet(FixedBitSet);

impl EdgeSet {
    pub fn new(edge_count: usize) -> Self {
        EdgeSet(FixedBitSet::with_capacity(edge_count))
    }

    pub fn from_indices(edge_count: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::new(edge_count);
        for e in edges {
            set.insert(e);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, e: usize) {
        self.0.insert(e);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.0.clone();
        out.symmetric_difference_with(&other.0);
        EdgeSet(out)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for EdgeSet {
    /// Lexicographic on the ascending index sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A perfect matching of a specific host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: EdgeSet,
    host: u64,
}

impl Matching {
    /// Validates that `edges` is a perfect matching of `g`.
    pub fn from_edges(g: &Graph, edges: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = EdgeSet::new(g.edge_count());
        let mut covered = vec![false; g.vertex_count()];
        for e in edges {
            if e >= g.edge_count() {
                return Err(Error::invalid(format!("edge index {e} out of range")));
            }
            if set.contains(e) {
                continue;
            }
            let (a, b) = g.edge(e);
            if covered[a] || covered[b] {
                return Err(Error::invalid(format!(
                    "edge {e} touches an already covered vertex"
                )));
            }
            covered[a] = true;
            covered[b] = true;
            set.insert(e);
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::invalid(format!("vertex {v} is not covered")));
        }
        Ok(Matching {
            edges: set,
            host: g.fingerprint(),
        })
    }

    pub(crate) fn from_set_unchecked(g: &Graph, edges: EdgeSet) -> Self {
        Matching {
            edges,
            host: g.fingerprint(),
        }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn edge_indices(&self) -> Vec<usize> {
        self.edges.iter().collect()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn host(&self) -> u64 {
        self.host
    }

    pub fn check_host(&self, g: &Graph) -> Result<()> {
        if self.host == g.fingerprint() && self.edges.capacity() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::invalid("matching belongs to a different graph"))
        }
    }

    /// `self △ edges`, provided the result is again a perfect matching.
    pub fn flip(&self, g: &Graph, edges: &EdgeSet) -> Result<Matching> {
        self.check_host(g)?;
        let flipped = self.edges.symmetric_difference(edges);
        Matching::from_edges(g, flipped.iter())
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.edges.iter())
    }
}

/// All perfect matchings of `g`, sorted lexicographically by edge indices.
/// Graphs with an odd number of vertices have none; the null graph has one.
pub fn enumerate_perfect_matchings(g: &Graph) -> Vec<Matching> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut covered = vec![false; n];
    let mut chosen = Vec::with_capacity(n / 2);
    extend_matchings(g, 0, &mut covered, &mut chosen, &mut out);
    let mut matchings: Vec<Matching> = out
        .into_iter()
        .map(|edges| Matching::from_set_unchecked(g, EdgeSet::from_indices(g.edge_count(), edges)))
        .collect();
    matchings.sort();
    matchings
}

// Branches on the lowest uncovered vertex.
fn extend_matchings(
    g: &Graph,
    from: usize,
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(v) = (from..covered.len()).find(|&v| !covered[v]) else {
        out.push(chosen.clone());
        return;
    };
    covered[v] = true;
    for &(u, e) in g.neighbors(v) {
        if covered[u] {
            continue;
        }
        covered[u] = true;
        chosen.push(e);
        extend_matchings(g, v + 1, covered, chosen, out);
        chosen.pop();
        covered[u] = false;
    }
    covered[v] = false;
}

/// Kekulé count of `g`.
pub fn phi(g: &Graph) -> BigUint {
    count_perfect_matchings(g)
}

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{maximum_independent_set, Matching};
use crate::error::{Error, Result};
use crate::hexsystem::{Cycle, Graph, HexSystem, Instance};

/// Size of a maximum set of alternating cycles, plus one set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AltSetReport {
    pub size: usize,
    pub witnesses: Vec<Cycle>,
}

fn alternates(m: &Matching, edges: &[usize]) -> bool {
    let len = edges.len();
    len % 2 == 0 && (0..len).all(|k| m.contains(edges[k]) != m.contains(edges[(k + 1) % len]))
}

/// True iff the edges of `c` lie alternately in `m` and outside it.
pub fn is_alternating_cycle(g: &Graph, m: &Matching, c: &Cycle) -> Result<bool> {
    m.check_host(g)?;
    let edges = g.cycle_edges(c)?;
    if edges.len() % 2 == 1 {
        return Err(Error::invalid("an alternating cycle must have even length"));
    }
    Ok(alternates(m, &edges))
}

/// Indices of the registered faces that are `m`-alternating.
pub fn alternating_hexagons(g: &Graph, m: &Matching) -> Result<Vec<usize>> {
    m.check_host(g)?;
    let faces = g
        .faces()
        .ok_or_else(|| Error::unsupported("graph has no face registry"))?;
    Ok(faces
        .iter()
        .enumerate()
        .filter(|(_, f)| alternates(m, &f.edges))
        .map(|(i, _)| i)
        .collect())
}

/// A cycle with its vertex and edge sets precomputed.
#[derive(Debug, Clone)]
pub struct CandidateCycle {
    cycle: Cycle,
    vertices: FixedBitSet,
    edges: Vec<usize>,
}

impl CandidateCycle {
    pub fn new(g: &Graph, cycle: Cycle) -> Result<Self> {
        let edges = g.cycle_edges(&cycle)?;
        let mut vertices = FixedBitSet::with_capacity(g.vertex_count());
        for &v in cycle.vertices() {
            vertices.insert(v);
        }
        Ok(CandidateCycle {
            cycle,
            vertices,
            edges,
        })
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn is_alternating(&self, m: &Matching) -> bool {
        alternates(m, &self.edges)
    }

    pub fn is_disjoint(&self, other: &CandidateCycle) -> bool {
        self.vertices.is_disjoint(&other.vertices)
    }

    /// Disjoint, or meeting only in edges of `m`: every shared edge is in `m`
    /// and every shared vertex lies on a shared edge.
    pub fn is_compatible(&self, other: &CandidateCycle, m: &Matching) -> bool {
        if self.is_disjoint(other) {
            return true;
        }
        let mut on_shared_edge = FixedBitSet::with_capacity(self.vertices.len());
        for &e in self.edges.iter().filter(|e| other.edges.contains(e)) {
            if !m.contains(e) {
                return false;
            }
            let (a, b) = self.edge_ends(e);
            on_shared_edge.insert(a);
            on_shared_edge.insert(b);
        }
        self.vertices
            .intersection(&other.vertices)
            .all(|v| on_shared_edge.contains(v))
    }

    fn edge_ends(&self, e: usize) -> (usize, usize) {
        let vs = self.cycle.vertices();
        let k = self
            .edges
            .iter()
            .position(|&x| x == e)
            .expect("edge is on the cycle");
        (vs[k], vs[(k + 1) % vs.len()])
    }
}

fn best_subset<F>(cycles: &[&CandidateCycle], conflict: F) -> AltSetReport
where
    F: Fn(&CandidateCycle, &CandidateCycle) -> bool,
{
    let n = cycles.len();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        for b in a + 1..n {
            if conflict(cycles[a], cycles[b]) {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    let chosen = maximum_independent_set(&rows);
    AltSetReport {
        size: chosen.len(),
        witnesses: chosen
            .into_iter()
            .map(|i| cycles[i].cycle.clone())
            .collect(),
    }
}

/// Largest set of pairwise vertex-disjoint alternating cycles drawn from
/// `candidates`.
pub(crate) fn max_disjoint_among(candidates: &[CandidateCycle], m: &Matching) -> AltSetReport {
    let alive: Vec<&CandidateCycle> = candidates.iter().filter(|c| c.is_alternating(m)).collect();
    best_subset(&alive, |a, b| !a.is_disjoint(b))
}

/// Largest pairwise compatible set of alternating cycles drawn from
/// `candidates`.
pub fn max_compatible_set(candidates: &[CandidateCycle], m: &Matching) -> AltSetReport {
    let alive: Vec<&CandidateCycle> = candidates.iter().filter(|c| c.is_alternating(m)).collect();
    best_subset(&alive, |a, b| !a.is_compatible(b, m))
}

pub(crate) fn face_candidates(g: &Graph) -> Result<Vec<CandidateCycle>> {
    let faces = g
        .faces()
        .ok_or_else(|| Error::unsupported("graph has no face registry"))?;
    faces
        .iter()
        .map(|f| CandidateCycle::new(g, f.cycle()))
        .collect()
}

/// Faces followed by triphenylene peripheries, for chains and auxiliary
/// systems.
pub(crate) fn restricted_candidates(inst: &Instance) -> Result<Vec<CandidateCycle>> {
    let peripheries = inst
        .peripheries()
        .ok_or_else(|| Error::unsupported(format!("{} is not a pyrene chain", inst.name())))?;
    let mut out = face_candidates(inst.graph())?;
    for p in peripheries {
        out.push(CandidateCycle::new(inst.graph(), p.clone())?);
    }
    Ok(out)
}

/// `h(M)`: the maximum number of pairwise disjoint `m`-alternating hexagons.
pub fn max_disjoint_alternating_hexagons(g: &Graph, m: &Matching) -> Result<AltSetReport> {
    m.check_host(g)?;
    Ok(max_disjoint_among(&face_candidates(g)?, m))
}

/// Maximum compatible set of `m`-alternating cycles restricted to hexagons and
/// triphenylene peripheries of a pyrene chain.
pub fn max_compatible_restricted(sys: &HexSystem, m: &Matching) -> Result<AltSetReport> {
    if !sys.is_oracle_eligible() {
        return Err(Error::unsupported(
            "restricted compatible sets need a pyrene chain",
        ));
    }
    let inst = Instance::from_system(sys.clone());
    m.check_host(inst.graph())?;
    Ok(max_compatible_set(&restricted_candidates(&inst)?, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexsystem::{Cell, NamedGraph};
    use crate::matching::enumerate_perfect_matchings;

    fn hexagon() -> Graph {
        HexSystem::from_cells([Cell::new(0, 0)]).unwrap().to_graph()
    }

    #[test]
    fn hexagon_matchings_alternate_around_the_face() {
        let g = hexagon();
        let face = g.faces().unwrap()[0].cycle();
        for m in enumerate_perfect_matchings(&g) {
            assert!(is_alternating_cycle(&g, &m, &face).unwrap());
            assert_eq!(alternating_hexagons(&g, &m).unwrap(), vec![0]);
            assert_eq!(max_disjoint_alternating_hexagons(&g, &m).unwrap().size, 1);
        }
    }

    #[test]
    fn non_alternating_face() {
        let g = NamedGraph::Pyrene.graph();
        let all = enumerate_perfect_matchings(&g);
        let faces = g.faces().unwrap();
        // some matching leaves some face with two consecutive unmatched edges
        let found = all.iter().any(|m| {
            faces
                .iter()
                .any(|f| !is_alternating_cycle(&g, m, &f.cycle()).unwrap())
        });
        assert!(found);
    }

    #[test]
    fn invalid_cycles_are_rejected() {
        let g = hexagon();
        let m = enumerate_perfect_matchings(&g).remove(0);
        assert!(is_alternating_cycle(&g, &m, &Cycle::new(vec![0, 2, 4])).is_err());
    }

    #[test]
    fn pyrene_alternating_hexagon_counts() {
        let g = NamedGraph::Pyrene.graph();
        let mut disjoint = Vec::new();
        for m in enumerate_perfect_matchings(&g) {
            let alt = alternating_hexagons(&g, &m).unwrap();
            assert!(!alt.is_empty());
            disjoint.push(max_disjoint_alternating_hexagons(&g, &m).unwrap().size);
        }
        disjoint.sort_unstable();
        assert_eq!(disjoint, vec![1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn pyrene_restricted_compatible_sets() {
        let sys = HexSystem::pyrene_chain(1).unwrap();
        let g = sys.to_graph();
        let mut sizes: Vec<usize> = enumerate_perfect_matchings(&g)
            .iter()
            .map(|m| max_compatible_restricted(&sys, m).unwrap().size)
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn witnesses_are_alternating_and_compatible() {
        let inst = Instance::pyrene_chain(2).unwrap();
        let g = inst.graph();
        let candidates = restricted_candidates(&inst).unwrap();
        for m in enumerate_perfect_matchings(g) {
            let report = max_compatible_set(&candidates, &m);
            assert_eq!(report.size, report.witnesses.len());
            let ws: Vec<CandidateCycle> = report
                .witnesses
                .iter()
                .map(|c| CandidateCycle::new(g, c.clone()).unwrap())
                .collect();
            for (i, a) in ws.iter().enumerate() {
                assert!(a.is_alternating(&m));
                for b in &ws[i + 1..] {
                    assert!(a.is_compatible(b, &m));
                }
            }
        }
    }

    #[test]
    fn restricted_oracle_rejects_custom_systems() {
        let sys = NamedGraph::Phenanthrene.system().unwrap();
        let g = sys.to_graph();
        let m = enumerate_perfect_matchings(&g).remove(0);
        assert!(matches!(
            max_compatible_restricted(&sys, &m),
            Err(Error::UnsupportedGraph(_))
        ));
    }
}

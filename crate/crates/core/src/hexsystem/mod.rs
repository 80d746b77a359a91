//! Hexagonal systems on the axial lattice and the graphs they span.
//!
//! Cells use axial coordinates `(q, r)`. The pyrene chain `H_n` places fragment
//! `i` (1-based) on the cells
//!
//! ```text
//! h(i,1) = (2i-2, 0)   h(i,2) = (2i-1, 0)
//! s(i,1) = (2i-2, 1)   s(i,2) = (2i-1, -1)
//! ```
//!
//! so that `h(i,2)` and `h(i+1,1)` share the single junction edge between
//! consecutive fragments. The auxiliary system `G_n` is `H_n` without `h(1,1)`.

mod graph;
mod io;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use graph::{Cycle, Face, Graph, LatticePoint};
pub use io::{parse_system, serialize_system, Instance, SystemSpec};

/// Neighbour offsets in cyclic order around a cell.
pub(crate) const DIRECTIONS: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

/// A hexagonal cell in axial coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

impl Cell {
    pub const fn new(q: i32, r: i32) -> Self {
        Cell { q, r }
    }

    pub fn neighbor(self, direction: usize) -> Cell {
        let (dq, dr) = DIRECTIONS[direction % 6];
        Cell::new(self.q + dq, self.r + dr)
    }

    pub fn neighbors(self) -> impl Iterator<Item = Cell> {
        (0..6).map(move |k| self.neighbor(k))
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        let d = (other.q - self.q, other.r - self.r);
        DIRECTIONS.contains(&d)
    }

    /// Corner `k` sits between the edges facing directions `k` and `k + 1`.
    pub fn corner(self, k: usize) -> LatticePoint {
        let (aq, ar) = DIRECTIONS[k % 6];
        let (bq, br) = DIRECTIONS[(k + 1) % 6];
        LatticePoint::new(
            3 * i64::from(self.q) + i64::from(aq + bq),
            3 * i64::from(self.r) + i64::from(ar + br),
        )
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKind {
    /// Central hexagons `h(i,1)`, `h(i,2)` of a fragment.
    H,
    /// Side hexagons `s(i,1)`, `s(i,2)`.
    S,
}

/// Role tag of a cell inside a pyrene chain, e.g. `h(2,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub kind: LabelKind,
    pub fragment: usize,
    pub index: u8,
}

impl Label {
    pub const fn h(fragment: usize, index: u8) -> Self {
        Label {
            kind: LabelKind::H,
            fragment,
            index,
        }
    }

    pub const fn s(fragment: usize, index: u8) -> Self {
        Label {
            kind: LabelKind::S,
            fragment,
            index,
        }
    }

    /// Position of the labelled cell in the canonical embedding.
    pub fn canonical_cell(self) -> Cell {
        let base = 2 * self.fragment as i32 - 2;
        match (self.kind, self.index) {
            (LabelKind::H, 1) => Cell::new(base, 0),
            (LabelKind::H, _) => Cell::new(base + 1, 0),
            (LabelKind::S, 1) => Cell::new(base, 1),
            (LabelKind::S, _) => Cell::new(base + 1, -1),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            LabelKind::H => 'h',
            LabelKind::S => 's',
        };
        write!(f, "{k}({},{})", self.fragment, self.index)
    }
}

/// Which construction a system came from. Recovered from the cell set alone, so
/// a serialised chain parses back as a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    PyreneChain { n: usize },
    Auxiliary { n: usize },
    Custom,
}

/// A finite, connected set of hexagonal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexSystem {
    cells: BTreeSet<Cell>,
    labels: BTreeMap<Label, Cell>,
    family: Family,
}

fn fragment_labels(i: usize) -> [Label; 4] {
    [
        Label::h(i, 1),
        Label::h(i, 2),
        Label::s(i, 1),
        Label::s(i, 2),
    ]
}

fn chain_labels(n: usize) -> BTreeMap<Label, Cell> {
    (1..=n)
        .flat_map(fragment_labels)
        .map(|l| (l, l.canonical_cell()))
        .collect()
}

fn auxiliary_labels(n: usize) -> BTreeMap<Label, Cell> {
    let mut labels = chain_labels(n);
    labels.remove(&Label::h(1, 1));
    labels
}

impl HexSystem {
    /// Builds a system from an explicit cell list. Duplicate cells are merged.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::invalid("a hexagonal system needs at least one cell"));
        }
        if !is_connected(&cells) {
            return Err(Error::invalid(
                "cells are not connected under hexagon adjacency",
            ));
        }
        let (family, labels) = recognize(&cells);
        Ok(HexSystem {
            cells,
            labels,
            family,
        })
    }

    pub fn pyrene_chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("pyrene chain needs n >= 1"));
        }
        let labels = chain_labels(n);
        let cells = labels.values().copied().collect();
        Ok(HexSystem {
            cells,
            labels,
            family: Family::PyreneChain { n },
        })
    }

    /// `H_n` with the leftmost hexagon `h(1,1)` removed.
    pub fn auxiliary(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("auxiliary system needs n >= 1"));
        }
        let labels = auxiliary_labels(n);
        let cells = labels.values().copied().collect();
        Ok(HexSystem {
            cells,
            labels,
            family: Family::Auxiliary { n },
        })
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn labels(&self) -> &BTreeMap<Label, Cell> {
        &self.labels
    }

    pub fn cell(&self, label: Label) -> Option<Cell> {
        self.labels.get(&label).copied()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_pyrene_chain(&self) -> bool {
        matches!(self.family, Family::PyreneChain { .. })
    }

    /// Pyrene chains and their auxiliary systems admit the hexagon and
    /// triphenylene oracles.
    pub fn is_oracle_eligible(&self) -> bool {
        matches!(
            self.family,
            Family::PyreneChain { .. } | Family::Auxiliary { .. }
        )
    }

    /// Number of unordered pairs of adjacent cells.
    pub fn adjacency_count(&self) -> usize {
        self.cells
            .iter()
            .map(|c| c.neighbors().filter(|nb| self.cells.contains(nb)).count())
            .sum::<usize>()
            / 2
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_cells(&self.cells)
    }

    /// Triphenylene units of a chain, as `[center, a, b, c]` with the three outer
    /// cells pairwise non-adjacent. Ordered by junction, `h(i,2)`-centred first.
    pub fn triphenylenes(&self) -> Result<Vec<[Cell; 4]>> {
        let n = match self.family {
            Family::PyreneChain { n } | Family::Auxiliary { n } => n,
            Family::Custom => {
                return Err(Error::invalid(
                    "triphenylene peripheries are defined for pyrene chains only",
                ))
            }
        };
        let mut out = Vec::with_capacity(2 * n.saturating_sub(1));
        for i in 1..n {
            let quads = [
                [
                    Label::h(i, 2),
                    Label::s(i, 1),
                    Label::s(i, 2),
                    Label::h(i + 1, 1),
                ],
                [
                    Label::h(i + 1, 1),
                    Label::h(i, 2),
                    Label::s(i + 1, 1),
                    Label::s(i + 1, 2),
                ],
            ];
            for quad in quads {
                let cells = quad.map(|l| self.labels[&l]);
                debug_assert!(is_triphenylene(&cells));
                out.push(cells);
            }
        }
        Ok(out)
    }
}

/// `[center, a, b, c]`: each outer cell touches the center, and no two outer
/// cells touch each other.
pub fn is_triphenylene(cells: &[Cell; 4]) -> bool {
    let [center, outer @ ..] = cells;
    outer.iter().all(|c| center.is_adjacent(*c))
        && !outer[0].is_adjacent(outer[1])
        && !outer[0].is_adjacent(outer[2])
        && !outer[1].is_adjacent(outer[2])
}

fn is_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

fn recognize(cells: &BTreeSet<Cell>) -> (Family, BTreeMap<Label, Cell>) {
    let len = cells.len();
    let same = |labels: &BTreeMap<Label, Cell>| {
        labels.len() == len && labels.values().all(|c| cells.contains(c))
    };
    if len % 4 == 0 {
        let labels = chain_labels(len / 4);
        if same(&labels) {
            return (Family::PyreneChain { n: len / 4 }, labels);
        }
    }
    if len % 4 == 3 {
        let n = (len + 1) / 4;
        let labels = auxiliary_labels(n);
        if same(&labels) {
            return (Family::Auxiliary { n }, labels);
        }
    }
    (Family::Custom, BTreeMap::new())
}

/// The small graphs used as seeds: pyrene, phenanthrene and diphenyl.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Pyrene,
    Phenanthrene,
    Diphenyl,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 3] = [
        NamedGraph::Pyrene,
        NamedGraph::Phenanthrene,
        NamedGraph::Diphenyl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedGraph::Pyrene => "pyrene",
            NamedGraph::Phenanthrene => "phenanthrene",
            NamedGraph::Diphenyl => "diphenyl",
        }
    }

    /// Cell model, absent for diphenyl which is not a hexagonal system.
    pub fn system(self) -> Option<HexSystem> {
        match self {
            NamedGraph::Pyrene => Some(HexSystem::pyrene_chain(1).expect("n = 1 is valid")),
            NamedGraph::Phenanthrene => Some(
                HexSystem::from_cells([Cell::new(0, 1), Cell::new(0, 0), Cell::new(1, -1)])
                    .expect("phenanthrene cells are connected"),
            ),
            NamedGraph::Diphenyl => None,
        }
    }

    pub fn graph(self) -> Graph {
        match self.system() {
            Some(sys) => sys.to_graph(),
            None => Graph::diphenyl(),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown named graph `{s}`")))
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn build_pyrene_chain(n: usize) -> Result<HexSystem> {
    HexSystem::pyrene_chain(n)
}

/// Graph of `G_n`: every cell of `H_n` except `h(1,1)`.
pub fn build_auxiliary(n: usize) -> Result<Graph> {
    Ok(HexSystem::auxiliary(n)?.to_graph())
}

pub fn build_named(name: &str) -> Result<Graph> {
    Ok(name.parse::<NamedGraph>()?.graph())
}

pub fn to_graph(sys: &HexSystem) -> Graph {
    sys.to_graph()
}

/// Outer boundary cycles (length 18) of every triphenylene in a pyrene chain.
pub fn triphenylene_peripheries(sys: &HexSystem) -> Result<Vec<Cycle>> {
    let graph = sys.to_graph();
    triphenylene_peripheries_in(sys, &graph)
}

pub(crate) fn triphenylene_peripheries_in(sys: &HexSystem, graph: &Graph) -> Result<Vec<Cycle>> {
    sys.triphenylenes()?
        .iter()
        .map(|quad| {
            let faces: Vec<usize> = quad
                .iter()
                .map(|c| graph.face_of_cell(*c).expect("cell has a face"))
                .collect();
            graph.boundary_cycle(&faces).ok_or_else(|| {
                Error::InternalConsistency("triphenylene boundary is not a cycle".into())
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_adjacency_pattern() {
        let sys = HexSystem::pyrene_chain(2).unwrap();
        let c = |l: Label| sys.cell(l).unwrap();
        let (h1, h2, s1, s2) = (
            c(Label::h(1, 1)),
            c(Label::h(1, 2)),
            c(Label::s(1, 1)),
            c(Label::s(1, 2)),
        );
        for (a, b) in [(h1, h2), (h1, s1), (h1, s2), (h2, s1), (h2, s2)] {
            assert!(a.is_adjacent(b), "{a} {b}");
        }
        assert!(!s1.is_adjacent(s2));
        // only h(1,2)-h(2,1) crosses the junction
        let next = fragment_labels(2).map(c);
        let crossing: Vec<_> = [h1, h2, s1, s2]
            .iter()
            .flat_map(|a| next.iter().map(move |b| (*a, *b)))
            .filter(|(a, b)| a.is_adjacent(*b))
            .collect();
        assert_eq!(crossing, vec![(h2, c(Label::h(2, 1)))]);
    }

    #[test]
    fn adjacency_count_is_six_n_minus_one() {
        for n in 1..=20 {
            let sys = HexSystem::pyrene_chain(n).unwrap();
            assert_eq!(sys.len(), 4 * n);
            assert_eq!(sys.adjacency_count(), 6 * n - 1);
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            HexSystem::pyrene_chain(0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            build_auxiliary(0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn family_is_recognised_from_cells() {
        let chain = HexSystem::pyrene_chain(3).unwrap();
        let again = HexSystem::from_cells(chain.cells().iter().copied()).unwrap();
        assert_eq!(again, chain);
        let aux = HexSystem::auxiliary(2).unwrap();
        let again = HexSystem::from_cells(aux.cells().iter().copied()).unwrap();
        assert_eq!(again.family(), Family::Auxiliary { n: 2 });
        let phen = NamedGraph::Phenanthrene.system().unwrap();
        assert_eq!(phen.family(), Family::Custom);
    }

    #[test]
    fn disconnected_cells_are_rejected() {
        let err = HexSystem::from_cells([Cell::new(0, 0), Cell::new(5, 5)]).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn triphenylene_counts() {
        assert!(HexSystem::pyrene_chain(1)
            .unwrap()
            .triphenylenes()
            .unwrap()
            .is_empty());
        for n in 2..=6 {
            let quads = HexSystem::pyrene_chain(n).unwrap().triphenylenes().unwrap();
            assert_eq!(quads.len(), 2 * (n - 1));
            assert!(quads.iter().all(is_triphenylene));
        }
        let custom = NamedGraph::Phenanthrene.system().unwrap();
        assert!(custom.triphenylenes().is_err());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            build_named("coronene"),
            Err(Error::InvalidParameter(_))
        ));
    }
}

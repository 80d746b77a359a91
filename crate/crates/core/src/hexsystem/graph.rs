use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::Cell;
use crate::error::{Error, Result};

/// A hexagon corner in axial coordinates scaled by three, so every corner of
/// every cell is an exact integer point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticePoint {
    pub q3: i64,
    pub r3: i64,
}

impl LatticePoint {
    pub const fn new(q3: i64, r3: i64) -> Self {
        LatticePoint { q3, r3 }
    }

    /// Corners fall into two classes, `q3 = 1` or `2 (mod 3)`; adjacent corners
    /// always differ.
    pub fn parity_class(self) -> Option<u8> {
        match self.q3.rem_euclid(3) {
            1 => Some(0),
            2 => Some(1),
            _ => None,
        }
    }
}

/// A registered hexagonal face: six vertices in corner order and the six edges
/// joining consecutive ones (`edges[k]` joins `vertices[k]` and `vertices[k+1]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub cell: Cell,
    pub vertices: [usize; 6],
    pub edges: [usize; 6],
}

impl Face {
    pub fn cycle(&self) -> Cycle {
        Cycle::new(self.vertices.to_vec())
    }
}

/// A closed walk given by its vertex sequence; the edge from the last vertex
/// back to the first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Undirected simple bipartite graph with lattice coordinates and, for graphs
/// built from cells, a registry of hexagonal faces.
#[derive(Debug, Clone)]
pub struct Graph {
    coords: Vec<LatticePoint>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    colors: Vec<u8>,
    faces: Option<Vec<Face>>,
    fingerprint: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.edges == other.edges && self.faces == other.faces
    }
}

impl Eq for Graph {}

fn corners_of(cells: &BTreeSet<Cell>) -> (Vec<LatticePoint>, Vec<(Cell, [usize; 6])>) {
    let mut coords = Vec::new();
    let mut index = HashMap::new();
    let mut faces = Vec::with_capacity(cells.len());
    for &cell in cells {
        let mut vertices = [0; 6];
        for (k, slot) in vertices.iter_mut().enumerate() {
            let p = cell.corner(k);
            *slot = *index.entry(p).or_insert_with(|| {
                coords.push(p);
                coords.len() - 1
            });
        }
        faces.push((cell, vertices));
    }
    (coords, faces)
}

fn fnv1a(words: impl Iterator<Item = u64>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in words {
        for b in w.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl Graph {
    /// The graph with no vertices; its only perfect matching is empty.
    pub fn empty() -> Self {
        Graph {
            coords: Vec::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
            colors: Vec::new(),
            faces: Some(Vec::new()),
            fingerprint: fnv1a(std::iter::once(0)),
        }
    }

    /// Vertices are numbered by first appearance over cells in `(q, r)` order and
    /// corners `0..6`; edges are sorted by endpoint pair.
    pub(crate) fn from_cells(cells: &BTreeSet<Cell>) -> Self {
        let (coords, faces) = corners_of(cells);
        Self::assemble(coords, &[], faces).expect("cell graphs are simple and bipartite")
    }

    /// Two benzene rings joined by a single bridge bond.
    pub(crate) fn diphenyl() -> Self {
        let left = Cell::new(0, 0);
        let right = Cell::new(2, -1);
        let cells = BTreeSet::from([left, right]);
        let (coords, faces) = corners_of(&cells);
        let find = |p: LatticePoint| coords.iter().position(|c| *c == p).expect("corner exists");
        let bridge = (find(left.corner(0)), find(right.corner(3)));
        Self::assemble(coords, &[bridge], faces).expect("diphenyl is simple and bipartite")
    }

    fn assemble(
        coords: Vec<LatticePoint>,
        extra_edges: &[(usize, usize)],
        faces: Vec<(Cell, [usize; 6])>,
    ) -> Result<Self> {
        let n = coords.len();
        let mut edge_set = BTreeSet::new();
        for (_, vs) in &faces {
            for k in 0..6 {
                let (a, b) = (vs[k], vs[(k + 1) % 6]);
                edge_set.insert((a.min(b), a.max(b)));
            }
        }
        for &(a, b) in extra_edges {
            if a == b || a >= n || b >= n {
                return Err(Error::invalid(format!("bad edge ({a}, {b})")));
            }
            edge_set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a].push((b, i));
            adjacency[b].push((a, i));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let colors = coords
            .iter()
            .map(|p| {
                p.parity_class()
                    .ok_or_else(|| Error::invalid("vertex is not a hexagon corner"))
            })
            .collect::<Result<Vec<u8>>>()?;
        if edges.iter().any(|&(a, b)| colors[a] == colors[b]) {
            return Err(Error::invalid(
                "corner classes do not give a proper 2-colouring",
            ));
        }
        let mut graph = Graph {
            fingerprint: fnv1a(
                std::iter::once(n as u64)
                    .chain(edges.iter().flat_map(|&(a, b)| [a as u64, b as u64])),
            ),
            coords,
            edges,
            adjacency,
            colors,
            faces: None,
        };
        let faces = faces
            .into_iter()
            .map(|(cell, vertices)| {
                let mut edges = [0; 6];
                for k in 0..6 {
                    edges[k] = graph
                        .edge_between(vertices[k], vertices[(k + 1) % 6])
                        .expect("face edges were inserted");
                }
                Face {
                    cell,
                    vertices,
                    edges,
                }
            })
            .collect();
        graph.faces = Some(faces);
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn coords(&self) -> &[LatticePoint] {
        &self.coords
    }

    /// `(neighbour, edge index)` pairs sorted by neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn bipartition_sizes(&self) -> (usize, usize) {
        let black = self.colors.iter().filter(|&&c| c == 0).count();
        (black, self.colors.len() - black)
    }

    pub fn faces(&self) -> Option<&[Face]> {
        self.faces.as_deref()
    }

    pub fn face_count(&self) -> usize {
        self.faces.as_ref().map_or(0, Vec::len)
    }

    pub fn face_of_cell(&self, cell: Cell) -> Option<usize> {
        self.faces.as_ref()?.iter().position(|f| f.cell == cell)
    }

    /// Structural hash of vertex count and edge list; identifies the host of a
    /// matching.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Edge indices along `cycle`, after checking that it is a simple cycle of
    /// this graph.
    pub fn cycle_edges(&self, cycle: &Cycle) -> Result<Vec<usize>> {
        let vs = cycle.vertices();
        if vs.len() < 3 {
            return Err(Error::invalid("a cycle needs at least three vertices"));
        }
        let distinct: BTreeSet<_> = vs.iter().collect();
        if distinct.len() != vs.len() {
            return Err(Error::invalid("cycle repeats a vertex"));
        }
        (0..vs.len())
            .map(|k| {
                let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
                self.edge_between(a, b)
                    .ok_or_else(|| Error::invalid(format!("({a}, {b}) is not an edge")))
            })
            .collect()
    }

    /// Boundary of the union of the given faces, when it is a single cycle. The
    /// walk starts at the smallest vertex and heads to its smaller neighbour.
    pub fn boundary_cycle(&self, face_ids: &[usize]) -> Option<Cycle> {
        let faces = self.faces.as_ref()?;
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &f in face_ids {
            for &e in &faces.get(f)?.edges {
                *count.entry(e).or_default() += 1;
            }
        }
        let boundary: Vec<usize> = count
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(e, _)| e)
            .collect();
        let mut around: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &boundary {
            let (a, b) = self.edges[e];
            around.entry(a).or_default().push(b);
            around.entry(b).or_default().push(a);
        }
        if around.values().any(|nb| nb.len() != 2) {
            return None;
        }
        let (&start, first) = around.iter().next()?;
        let mut walk = vec![start];
        let (mut prev, mut cur) = (start, *first.iter().min()?);
        while cur != start {
            walk.push(cur);
            let nb = &around[&cur];
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        (walk.len() == boundary.len()).then(|| Cycle::new(walk))
    }
}

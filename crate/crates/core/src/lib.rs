//! Exact combinatorics of Kekulé structures on pyrene chains and small benzenoids.
//!
//! The crate builds hexagonal systems from cells in axial coordinates, enumerates
//! their perfect matchings and computes forcing and anti-forcing numbers two ways:
//! by exhaustive search straight from the definitions, and through the minimax
//! characterisations (maximum sets of disjoint alternating hexagons, maximum
//! compatible sets of alternating hexagons and triphenylene peripheries).
//!
//! For the pyrene chain `H_n` the [`poly`] module additionally evaluates the
//! forcing and anti-forcing polynomials through their three-term recurrences and
//! their binomial closed forms, and the derived integer sequences (Kekulé count,
//! degree of freedom, anti-forcing sum) through recurrences and exact closed
//! forms in `Q(sqrt 2)`.

pub mod antiforcing;
pub mod error;
pub mod forcing;
pub mod hexsystem;
pub mod matching;
pub mod poly;
pub mod spectrum;

pub use antiforcing::{AntiForcingMethod, AntiForcingResult};
pub use error::{Error, ParseLocation, Result};
pub use forcing::{BruteCaps, ForcingMethod, ForcingResult};
pub use hexsystem::{
    Cell, Cycle, Family, Graph, HexSystem, Instance, Label, LabelKind, LatticePoint, NamedGraph,
    SystemSpec,
};
pub use matching::{AltSetReport, EdgeSet, Matching};
pub use poly::{IntPoly, QuadRat};
pub use spectrum::SpectrumReport;

//! Forcing numbers of perfect matchings, by exhaustive search and by counting
//! disjoint alternating hexagons, and the forcing polynomial
//! `F(G, x) = Σ_M x^{f(G, M)}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hexsystem::{Graph, HexSystem, Instance};
use crate::matching::{
    count_perfect_matchings, enumerate_perfect_matchings, face_candidates, max_disjoint_among,
    CappedCounter, Matching,
};
use crate::poly::IntPoly;
use crate::spectrum::SpectrumReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForcingMethod {
    DefinitionSearch,
    HexagonOracle,
}

impl ForcingMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ForcingMethod::DefinitionSearch => "definition-search",
            ForcingMethod::HexagonOracle => "hexagon-oracle",
        }
    }
}

impl fmt::Display for ForcingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ForcingMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition-search" | "brute" => Ok(ForcingMethod::DefinitionSearch),
            "hexagon-oracle" | "oracle" => Ok(ForcingMethod::HexagonOracle),
            _ => Err(Error::invalid(format!("unknown forcing method `{s}`"))),
        }
    }
}

impl Serialize for ForcingMethod {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Forcing number of one matching. The oracle reports no witness set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingResult {
    pub value: usize,
    pub witness_set: Option<Vec<usize>>,
    pub method: ForcingMethod,
}

/// Where the size-ascending subset search begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStart {
    /// At the best lower bound the graph's faces give.
    #[default]
    LowerBound,
    /// At the empty set.
    Zero,
}

/// Limits on the exhaustive polynomial: the number of perfect matchings and
/// the size of the edge pool a single subset search draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteCaps {
    pub max_matchings: u64,
    pub max_search_width: usize,
}

impl BruteCaps {
    pub fn forcing() -> Self {
        BruteCaps {
            max_matchings: 250,
            max_search_width: 32,
        }
    }

    pub fn antiforcing() -> Self {
        BruteCaps {
            max_matchings: 40,
            max_search_width: 25,
        }
    }

    pub fn unlimited() -> Self {
        BruteCaps {
            max_matchings: u64::MAX,
            max_search_width: usize::MAX,
        }
    }

    pub(crate) fn check(&self, g: &Graph, width: usize, what: &str) -> Result<()> {
        let phi = count_perfect_matchings(g);
        if phi > self.max_matchings.into() {
            return Err(Error::CapExceeded(format!(
                "{what}: {phi} perfect matchings exceed the cap of {}",
                self.max_matchings
            )));
        }
        if width > self.max_search_width {
            return Err(Error::CapExceeded(format!(
                "{what}: search width {width} exceeds the cap of {}",
                self.max_search_width
            )));
        }
        Ok(())
    }
}

impl Default for BruteCaps {
    fn default() -> Self {
        Self::forcing()
    }
}

/// True iff `m` is the only perfect matching of `g` containing `s`.
pub fn is_forcing_set(g: &Graph, m: &Matching, s: &[usize]) -> Result<bool> {
    m.check_host(g)?;
    if let Some(&e) = s.iter().find(|&&e| !m.contains(e)) {
        return Err(Error::invalid(format!("edge {e} is not in the matching")));
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(CappedCounter::new(g).count_containing(&s, 2) == 1)
}

fn disjoint_lower_bound(g: &Graph, m: &Matching) -> usize {
    match face_candidates(g) {
        Ok(faces) => max_disjoint_among(&faces, m).size,
        Err(_) => 0,
    }
}

/// `f(G, M)` by size-ascending search over subsets of `m`, lexicographic
/// within each size. The first forcing set found is the witness.
pub fn forcing_number(g: &Graph, m: &Matching) -> Result<ForcingResult> {
    forcing_number_from(g, m, SearchStart::LowerBound)
}

pub fn forcing_number_from(g: &Graph, m: &Matching, start: SearchStart) -> Result<ForcingResult> {
    m.check_host(g)?;
    let from = match start {
        SearchStart::LowerBound => disjoint_lower_bound(g, m),
        SearchStart::Zero => 0,
    };
    Ok(definition_search(g, m, from))
}

fn definition_search(g: &Graph, m: &Matching, from: usize) -> ForcingResult {
    let pool = m.edge_indices();
    let mut counter = CappedCounter::new(g);
    for k in from..=pool.len() {
        if let Some(s) = pool
            .iter()
            .copied()
            .combinations(k)
            .find(|s| counter.count_containing(s, 2) == 1)
        {
            return ForcingResult {
                value: k,
                witness_set: Some(s),
                method: ForcingMethod::DefinitionSearch,
            };
        }
    }
    unreachable!("the whole matching is a forcing set")
}

/// `h(M)`, which equals the forcing number on pyrene chains and their
/// auxiliary systems.
pub fn forcing_number_oracle(sys: &HexSystem, m: &Matching) -> Result<ForcingResult> {
    if !sys.is_oracle_eligible() {
        return Err(Error::unsupported(
            "the hexagon oracle needs a pyrene chain",
        ));
    }
    let g = sys.to_graph();
    m.check_host(&g)?;
    Ok(oracle_value(&g, m))
}

fn oracle_value(g: &Graph, m: &Matching) -> ForcingResult {
    ForcingResult {
        value: disjoint_lower_bound(g, m),
        witness_set: None,
        method: ForcingMethod::HexagonOracle,
    }
}

/// Builds `Σ x^{v}` from per-matching values.
pub(crate) fn tally(values: &[usize]) -> Result<IntPoly> {
    let Some(&top) = values.iter().max() else {
        return Err(Error::EmptyPolynomial);
    };
    let mut coeffs = vec![0u64; top + 1];
    for &v in values {
        coeffs[v] += 1;
    }
    Ok(IntPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
}

/// Forcing number of every perfect matching of `inst`, in enumeration order.
pub fn forcing_numbers(
    inst: &Instance,
    method: ForcingMethod,
    caps: &BruteCaps,
) -> Result<Vec<usize>> {
    let g = inst.graph();
    match method {
        ForcingMethod::DefinitionSearch => {
            caps.check(g, g.vertex_count() / 2, "forcing brute force")?
        }
        ForcingMethod::HexagonOracle if !inst.is_oracle_eligible() => {
            return Err(Error::unsupported(format!(
                "the hexagon oracle needs a pyrene chain, got {}",
                inst.name()
            )));
        }
        ForcingMethod::HexagonOracle => {}
    }
    let matchings = enumerate_perfect_matchings(g);
    let values = matchings
        .par_iter()
        .map(|m| match method {
            ForcingMethod::DefinitionSearch => {
                definition_search(g, m, disjoint_lower_bound(g, m)).value
            }
            ForcingMethod::HexagonOracle => oracle_value(g, m).value,
        })
        .collect();
    Ok(values)
}

/// `F(G, x)`.
pub fn forcing_polynomial(
    inst: &Instance,
    method: ForcingMethod,
    caps: &BruteCaps,
) -> Result<IntPoly> {
    tally(&forcing_numbers(inst, method, caps)?)
}

pub fn forcing_spectrum(
    inst: &Instance,
    method: ForcingMethod,
    caps: &BruteCaps,
) -> Result<SpectrumReport> {
    SpectrumReport::from_poly(&forcing_polynomial(inst, method, caps)?)
}

//! Anti-forcing numbers of perfect matchings, by exhaustive search and by
//! maximum compatible sets of alternating hexagons and triphenylene
//! peripheries, and the anti-forcing polynomial `Af(G, x) = Σ_M x^{af(G, M)}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forcing::{tally, BruteCaps, SearchStart};
use crate::hexsystem::{Graph, HexSystem, Instance};
use crate::matching::{
    enumerate_perfect_matchings, face_candidates, max_compatible_set, restricted_candidates,
    CandidateCycle, CappedCounter, Matching,
};
use crate::poly::IntPoly;
use crate::spectrum::SpectrumReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AntiForcingMethod {
    DefinitionSearch,
    CompatibleOracle,
}

impl AntiForcingMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            AntiForcingMethod::DefinitionSearch => "definition-search",
            AntiForcingMethod::CompatibleOracle => "compatible-oracle",
        }
    }
}

impl fmt::Display for AntiForcingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AntiForcingMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition-search" | "brute" => Ok(AntiForcingMethod::DefinitionSearch),
            "compatible-oracle" | "oracle" => Ok(AntiForcingMethod::CompatibleOracle),
            _ => Err(Error::invalid(format!("unknown anti-forcing method `{s}`"))),
        }
    }
}

impl Serialize for AntiForcingMethod {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Anti-forcing number of one matching. The oracle reports no witness set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiForcingResult {
    pub value: usize,
    pub witness_set: Option<Vec<usize>>,
    pub method: AntiForcingMethod,
}

/// True iff `m` is the only perfect matching of `g − s`.
pub fn is_anti_forcing_set(g: &Graph, m: &Matching, s: &[usize]) -> Result<bool> {
    m.check_host(g)?;
    if let Some(&e) = s.iter().find(|&&e| e >= g.edge_count() || m.contains(e)) {
        return Err(Error::invalid(format!(
            "edge {e} is not an unmatched edge of the graph"
        )));
    }
    Ok(CappedCounter::new(g).count_without(s, 2) == 1)
}

fn unmatched_edges(g: &Graph, m: &Matching) -> Vec<usize> {
    (0..g.edge_count()).filter(|&e| !m.contains(e)).collect()
}

fn compatible_bound(candidates: Option<&[CandidateCycle]>, m: &Matching) -> usize {
    candidates.map_or(0, |c| max_compatible_set(c, m).size)
}

// Hexagons plus peripheries for chains, hexagons alone otherwise.
fn lower_bound_candidates(inst: &Instance) -> Option<Vec<CandidateCycle>> {
    if inst.is_oracle_eligible() {
        restricted_candidates(inst).ok()
    } else {
        face_candidates(inst.graph()).ok()
    }
}

/// `af(G, M)` by size-ascending search over subsets of `E ∖ m`, lexicographic
/// within each size, starting from the compatible set of alternating hexagons.
pub fn anti_forcing_number(g: &Graph, m: &Matching) -> Result<AntiForcingResult> {
    m.check_host(g)?;
    let faces = face_candidates(g).ok();
    Ok(definition_search(
        g,
        m,
        compatible_bound(faces.as_deref(), m),
    ))
}

/// As [`anti_forcing_number`], using the strongest available lower bound for
/// `inst` (or none).
pub fn anti_forcing_number_in(
    inst: &Instance,
    m: &Matching,
    start: SearchStart,
) -> Result<AntiForcingResult> {
    let g = inst.graph();
    m.check_host(g)?;
    let from = match start {
        SearchStart::LowerBound => compatible_bound(lower_bound_candidates(inst).as_deref(), m),
        SearchStart::Zero => 0,
    };
    Ok(definition_search(g, m, from))
}

fn definition_search(g: &Graph, m: &Matching, from: usize) -> AntiForcingResult {
    let pool = unmatched_edges(g, m);
    let mut counter = CappedCounter::new(g);
    for k in from..=pool.len() {
        if let Some(s) = pool
            .iter()
            .copied()
            .combinations(k)
            .find(|s| counter.count_without(s, 2) == 1)
        {
            return AntiForcingResult {
                value: k,
                witness_set: Some(s),
                method: AntiForcingMethod::DefinitionSearch,
            };
        }
    }
    unreachable!("deleting every unmatched edge leaves only the matching")
}

/// `c′(M)` over hexagons and triphenylene peripheries, which equals the
/// anti-forcing number on pyrene chains and their auxiliary systems.
pub fn anti_forcing_number_oracle(sys: &HexSystem, m: &Matching) -> Result<AntiForcingResult> {
    if !sys.is_oracle_eligible() {
        return Err(Error::unsupported(
            "the compatible-set oracle needs a pyrene chain",
        ));
    }
    let inst = Instance::from_system(sys.clone());
    m.check_host(inst.graph())?;
    let candidates = restricted_candidates(&inst)?;
    Ok(oracle_result(&candidates, m))
}

fn oracle_result(candidates: &[CandidateCycle], m: &Matching) -> AntiForcingResult {
    AntiForcingResult {
        value: max_compatible_set(candidates, m).size,
        witness_set: None,
        method: AntiForcingMethod::CompatibleOracle,
    }
}

/// Anti-forcing number of every perfect matching of `inst`, in enumeration
/// order.
pub fn anti_forcing_numbers(
    inst: &Instance,
    method: AntiForcingMethod,
    caps: &BruteCaps,
) -> Result<Vec<usize>> {
    let g = inst.graph();
    let matchings = enumerate_perfect_matchings(g);
    let values = match method {
        AntiForcingMethod::DefinitionSearch => {
            let width = g.edge_count() - g.vertex_count() / 2;
            caps.check(g, width, "anti-forcing brute force")?;
            let bound = lower_bound_candidates(inst);
            matchings
                .par_iter()
                .map(|m| definition_search(g, m, compatible_bound(bound.as_deref(), m)).value)
                .collect()
        }
        AntiForcingMethod::CompatibleOracle => {
            if !inst.is_oracle_eligible() {
                return Err(Error::unsupported(format!(
                    "the compatible-set oracle needs a pyrene chain, got {}",
                    inst.name()
                )));
            }
            let candidates = restricted_candidates(inst)?;
            matchings
                .par_iter()
                .map(|m| oracle_result(&candidates, m).value)
                .collect()
        }
    };
    Ok(values)
}

/// `Af(G, x)`.
pub fn anti_forcing_polynomial(
    inst: &Instance,
    method: AntiForcingMethod,
    caps: &BruteCaps,
) -> Result<IntPoly> {
    tally(&anti_forcing_numbers(inst, method, caps)?)
}

pub fn anti_forcing_spectrum(
    inst: &Instance,
    method: AntiForcingMethod,
    caps: &BruteCaps,
) -> Result<SpectrumReport> {
    SpectrumReport::from_poly(&anti_forcing_polynomial(inst, method, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexsystem::{Cell, NamedGraph};

    fn brute(inst: &Instance) -> IntPoly {
        anti_forcing_polynomial(
            inst,
            AntiForcingMethod::DefinitionSearch,
            &BruteCaps::antiforcing(),
        )
        .unwrap()
    }

    #[test]
    fn hexagon_and_null_graph() {
        let inst = Instance::from_system(HexSystem::from_cells([Cell::new(0, 0)]).unwrap());
        assert_eq!(brute(&inst), IntPoly::from_i64s(&[0, 2]));
        assert_eq!(
            brute(&Instance::from_graph("null", Graph::empty())),
            IntPoly::one()
        );
    }

    #[test]
    fn pyrene_histogram() {
        let inst = Instance::named(NamedGraph::Pyrene);
        assert_eq!(brute(&inst), IntPoly::from_i64s(&[0, 2, 2, 2]));
        let oracle = anti_forcing_polynomial(
            &inst,
            AntiForcingMethod::CompatibleOracle,
            &BruteCaps::antiforcing(),
        )
        .unwrap();
        assert_eq!(oracle, IntPoly::from_i64s(&[0, 2, 2, 2]));
    }

    #[test]
    fn witnesses_delete_to_a_unique_matching() {
        let inst = Instance::named(NamedGraph::Pyrene);
        let g = inst.graph();
        for m in enumerate_perfect_matchings(g) {
            let r = anti_forcing_number_in(&inst, &m, SearchStart::Zero).unwrap();
            let w = r.witness_set.clone().unwrap();
            assert!(w.iter().all(|&e| !m.contains(e)));
            assert!(is_anti_forcing_set(g, &m, &w).unwrap());
            assert_eq!(anti_forcing_number(g, &m).unwrap(), r);
            let sys = inst.system().unwrap();
            assert_eq!(anti_forcing_number_oracle(sys, &m).unwrap().value, r.value);
        }
    }

    #[test]
    fn oracle_rejects_other_systems() {
        let sys = NamedGraph::Phenanthrene.system().unwrap();
        let m = enumerate_perfect_matchings(&sys.to_graph()).remove(0);
        assert!(matches!(
            anti_forcing_number_oracle(&sys, &m),
            Err(Error::UnsupportedGraph(_))
        ));
    }

    #[test]
    fn cap_on_width_and_count() {
        let inst = Instance::pyrene_chain(3).unwrap();
        let r = anti_forcing_polynomial(
            &inst,
            AntiForcingMethod::DefinitionSearch,
            &BruteCaps::antiforcing(),
        );
        assert!(matches!(r, Err(Error::CapExceeded(_))));
    }

    #[test]
    fn rejects_matched_edges() {
        let g = NamedGraph::Pyrene.graph();
        let m = enumerate_perfect_matchings(&g).remove(0);
        let inside = m.edge_indices()[0];
        assert!(is_anti_forcing_set(&g, &m, &[inside]).is_err());
    }
}

//! JSON system documents.
//!
//! Accepted forms, one object per document:
//!
//! ```text
//! {"family": "pyrene_chain", "n": 3}
//! {"family": "auxiliary", "n": 2}
//! {"named": "pyrene" | "phenanthrene" | "diphenyl"}
//! {"cells": [[q, r], ...]}
//! ```
//!
//! Serialisation always emits the explicit `cells` form, sorted.

use serde_json::{Map, Value};

use super::{triphenylene_peripheries_in, Cell, Cycle, Family, Graph, HexSystem, NamedGraph};
use crate::error::{Error, ParseLocation, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemSpec {
    PyreneChain { n: usize },
    Auxiliary { n: usize },
    Named(NamedGraph),
    Cells(Vec<Cell>),
}

fn syntax_error(err: serde_json::Error) -> Error {
    Error::Parse {
        location: ParseLocation {
            line: Some(err.line()),
            column: Some(err.column()),
            field: None,
        },
        message: err.to_string(),
    }
}

fn reject_extra_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::parse_field(k.clone(), "unexpected field")),
        None => Ok(()),
    }
}

fn positive(obj: &Map<String, Value>) -> Result<usize> {
    let v = obj
        .get("n")
        .ok_or_else(|| Error::parse_field("n", "missing"))?;
    match v.as_i64() {
        Some(n) if n >= 1 => Ok(n as usize),
        Some(n) => Err(Error::parse_field(
            "n",
            format!("must be a positive integer, got {n}"),
        )),
        None => Err(Error::parse_field(
            "n",
            format!("expected an integer, got {v}"),
        )),
    }
}

fn coordinate(v: &Value, field: String) -> Result<i32> {
    v.as_i64()
        .and_then(|x| i32::try_from(x).ok())
        .ok_or_else(|| Error::parse_field(field, format!("expected a 32-bit integer, got {v}")))
}

impl SystemSpec {
    pub fn parse(input: &[u8]) -> Result<Self> {
        let value: Value = serde_json::from_slice(input).map_err(syntax_error)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse_field("$", "expected a JSON object"))?;
        if let Some(family) = obj.get("family") {
            reject_extra_keys(obj, &["family", "n"])?;
            let n = positive(obj)?;
            return match family.as_str() {
                Some("pyrene_chain") => Ok(SystemSpec::PyreneChain { n }),
                Some("auxiliary") => Ok(SystemSpec::Auxiliary { n }),
                _ => Err(Error::parse_field(
                    "family",
                    format!("expected \"pyrene_chain\" or \"auxiliary\", got {family}"),
                )),
            };
        }
        if let Some(named) = obj.get("named") {
            reject_extra_keys(obj, &["named"])?;
            let name = named
                .as_str()
                .ok_or_else(|| Error::parse_field("named", "expected a string"))?;
            let graph = name
                .parse()
                .map_err(|_| Error::parse_field("named", format!("unknown graph `{name}`")))?;
            return Ok(SystemSpec::Named(graph));
        }
        if let Some(cells) = obj.get("cells") {
            reject_extra_keys(obj, &["cells"])?;
            let items = cells
                .as_array()
                .ok_or_else(|| Error::parse_field("cells", "expected an array"))?;
            let cells = items
                .iter()
                .enumerate()
                .map(|(i, item)| match item.as_array().map(Vec::as_slice) {
                    Some([q, r]) => Ok(Cell::new(
                        coordinate(q, format!("cells[{i}][0]"))?,
                        coordinate(r, format!("cells[{i}][1]"))?,
                    )),
                    _ => Err(Error::parse_field(
                        format!("cells[{i}]"),
                        "expected a [q, r] pair",
                    )),
                })
                .collect::<Result<Vec<_>>>()?;
            // validate now so structural problems surface as parse errors
            HexSystem::from_cells(cells.iter().copied())
                .map_err(|e| Error::parse_field("cells", e.to_string()))?;
            return Ok(SystemSpec::Cells(cells));
        }
        Err(Error::parse_field(
            "$",
            "expected one of `family`, `named` or `cells`",
        ))
    }

    pub fn instance(&self) -> Result<Instance> {
        match self {
            SystemSpec::PyreneChain { n } => Instance::pyrene_chain(*n),
            SystemSpec::Auxiliary { n } => Instance::auxiliary(*n),
            SystemSpec::Named(g) => Ok(Instance::named(*g)),
            SystemSpec::Cells(cells) => Ok(Instance::from_system(HexSystem::from_cells(
                cells.iter().copied(),
            )?)),
        }
    }

    pub fn system(&self) -> Result<HexSystem> {
        match self {
            SystemSpec::PyreneChain { n } => HexSystem::pyrene_chain(*n),
            SystemSpec::Auxiliary { n } => HexSystem::auxiliary(*n),
            SystemSpec::Named(g) => g
                .system()
                .ok_or_else(|| Error::invalid(format!("{g} is not a hexagonal system"))),
            SystemSpec::Cells(cells) => HexSystem::from_cells(cells.iter().copied()),
        }
    }
}

/// Parses a system document; family forms expand to their explicit cells.
pub fn parse_system(input: &[u8]) -> Result<HexSystem> {
    SystemSpec::parse(input)?.system()
}

pub fn serialize_system(sys: &HexSystem) -> String {
    let cells: Vec<[i32; 2]> = sys.cells().iter().map(|c| [c.q, c.r]).collect();
    serde_json::json!({ "cells": cells }).to_string()
}

/// A graph together with the hexagonal system it came from, when there is one.
/// Triphenylene peripheries are precomputed for chains and auxiliary systems.
#[derive(Debug, Clone)]
pub struct Instance {
    name: String,
    graph: Graph,
    system: Option<HexSystem>,
    peripheries: Option<Vec<Cycle>>,
}

impl Instance {
    pub fn from_system(system: HexSystem) -> Self {
        let name = match system.family() {
            Family::PyreneChain { n } => format!("H_{n}"),
            Family::Auxiliary { n } => format!("G_{n}"),
            Family::Custom => format!("cells[{}]", system.len()),
        };
        Self::with_name(name, system)
    }

    fn with_name(name: String, system: HexSystem) -> Self {
        let graph = system.to_graph();
        let peripheries = system.is_oracle_eligible().then(|| {
            triphenylene_peripheries_in(&system, &graph).expect("chain peripheries exist")
        });
        Instance {
            name,
            graph,
            system: Some(system),
            peripheries,
        }
    }

    pub fn from_graph(name: impl Into<String>, graph: Graph) -> Self {
        Instance {
            name: name.into(),
            graph,
            system: None,
            peripheries: None,
        }
    }

    pub fn pyrene_chain(n: usize) -> Result<Self> {
        Ok(Self::from_system(HexSystem::pyrene_chain(n)?))
    }

    pub fn auxiliary(n: usize) -> Result<Self> {
        Ok(Self::from_system(HexSystem::auxiliary(n)?))
    }

    pub fn named(g: NamedGraph) -> Self {
        match g.system() {
            Some(sys) => Self::with_name(g.as_str().to_owned(), sys),
            None => Self::from_graph(g.as_str(), g.graph()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn system(&self) -> Option<&HexSystem> {
        self.system.as_ref()
    }

    /// Present exactly when the system is a pyrene chain or an auxiliary system.
    pub fn peripheries(&self) -> Option<&[Cycle]> {
        self.peripheries.as_deref()
    }

    pub fn is_oracle_eligible(&self) -> bool {
        self.peripheries.is_some()
    }

    /// `n` of a pyrene chain `H_n`.
    pub fn chain_length(&self) -> Option<usize> {
        match self.system.as_ref()?.family() {
            Family::PyreneChain { n } => Some(n),
            _ => None,
        }
    }
}

use num_bigint::BigInt;
use serde_json::{json, Value};

use pyrene_core::antiforcing::anti_forcing_polynomial;
use pyrene_core::forcing::forcing_polynomial;
use pyrene_core::matching::enumerate_perfect_matchings;
use pyrene_core::poly::{
    antiforcing_poly_closed, antiforcing_poly_recurrence, asymptotic_ratio, forcing_poly_closed,
    forcing_poly_recurrence, RatioKind, Route, SequenceName, SequenceTable,
};
use pyrene_core::{
    AntiForcingMethod, BruteCaps, ForcingMethod, Instance, IntPoly, QuadRat, SpectrumReport,
};

use crate::args::{Format, Kind, Method, PolyArgs, SequenceArg};
use crate::{emit, resolve, CliError};

pub fn generate(inst: &Instance, format: Format) -> Result<Vec<u8>, CliError> {
    let g = inst.graph();
    let (c0, c1) = g.bipartition_sizes();
    match format {
        Format::Json => {
            let cells: Option<Vec<[i32; 2]>> = inst
                .system()
                .map(|s| s.cells().iter().map(|c| [c.q, c.r]).collect());
            emit::json(&json!({
                "name": inst.name(),
                "cells": cells,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "faces": g.face_count(),
                "bipartition": [c0, c1],
            }))
        }
        Format::Csv => emit::csv(
            &["name", "vertices", "edges", "faces", "class0", "class1"],
            [vec![
                inst.name().to_owned(),
                g.vertex_count().to_string(),
                g.edge_count().to_string(),
                g.face_count().to_string(),
                c0.to_string(),
                c1.to_string(),
            ]],
        ),
    }
}

pub fn matchings(inst: &Instance, format: Format) -> Result<Vec<u8>, CliError> {
    let g = inst.graph();
    let all = enumerate_perfect_matchings(g);
    match format {
        Format::Json => emit::json(&json!({
            "name": inst.name(),
            "count": all.len(),
            "edges": g.edges(),
            "matchings": all,
        })),
        Format::Csv => emit::csv(
            &["index", "edges"],
            all.iter().enumerate().map(|(i, m)| {
                let edges: Vec<String> = m.edge_indices().iter().map(ToString::to_string).collect();
                vec![i.to_string(), edges.join(" ")]
            }),
        ),
    }
}

fn chain_length(inst: &Instance, method: Method) -> Result<usize, CliError> {
    inst.chain_length().ok_or_else(|| {
        CliError::mismatch(format!(
            "method {} needs a pyrene chain, got {}",
            format!("{method:?}").to_lowercase(),
            inst.name()
        ))
    })
}

fn compute_polynomial(args: &PolyArgs) -> Result<(Instance, IntPoly), CliError> {
    let inst = resolve(&args.system)?;
    let caps = match (args.caps, args.kind) {
        (Some(c), _) => BruteCaps {
            max_matchings: c.max_matchings,
            max_search_width: c.max_width,
        },
        (None, Kind::Forcing) => BruteCaps::forcing(),
        (None, Kind::Antiforcing) => BruteCaps::antiforcing(),
    };
    if args.method == Method::Oracle {
        chain_length(&inst, args.method)?;
    }
    let poly = match (args.kind, args.method) {
        (Kind::Forcing, Method::Brute) => {
            forcing_polynomial(&inst, ForcingMethod::DefinitionSearch, &caps)?
        }
        (Kind::Forcing, Method::Oracle) => {
            forcing_polynomial(&inst, ForcingMethod::HexagonOracle, &caps)?
        }
        (Kind::Antiforcing, Method::Brute) => {
            anti_forcing_polynomial(&inst, AntiForcingMethod::DefinitionSearch, &caps)?
        }
        (Kind::Antiforcing, Method::Oracle) => {
            anti_forcing_polynomial(&inst, AntiForcingMethod::CompatibleOracle, &caps)?
        }
        (kind, method) => {
            let n = chain_length(&inst, method)?;
            match (kind, method) {
                (Kind::Forcing, Method::Recurrence) => forcing_poly_recurrence(n),
                (Kind::Forcing, _) => forcing_poly_closed(n),
                (Kind::Antiforcing, Method::Recurrence) => antiforcing_poly_recurrence(n),
                (Kind::Antiforcing, _) => antiforcing_poly_closed(n),
            }
        }
    };
    Ok((inst, poly))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Forcing => "forcing",
        Kind::Antiforcing => "antiforcing",
    }
}

fn histogram_rows(s: &SpectrumReport) -> Vec<Vec<String>> {
    s.histogram
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.to_string()])
        .collect()
}

pub fn polynomial(args: &PolyArgs) -> Result<Vec<u8>, CliError> {
    let (inst, poly) = compute_polynomial(args)?;
    let spectrum = SpectrumReport::from_poly(&poly)?;
    match args.output.format {
        Format::Json => {
            let derivative_key = match args.kind {
                Kind::Forcing => "idf",
                Kind::Antiforcing => "af_sum",
            };
            let mut out = json!({
                "kind": kind_name(args.kind),
                "system": inst.name(),
                "polynomial": poly,
                "phi": poly.eval_at_one().to_string(),
                "min": spectrum.min,
                "max": spectrum.max,
            });
            out[derivative_key] = Value::String(poly.derivative().eval_at_one().to_string());
            emit::json(&out)
        }
        Format::Csv => emit::csv(&["value", "count"], histogram_rows(&spectrum)),
    }
}

pub fn spectrum(args: &PolyArgs) -> Result<Vec<u8>, CliError> {
    let (inst, poly) = compute_polynomial(args)?;
    let spectrum = SpectrumReport::from_poly(&poly)?;
    match args.output.format {
        Format::Json => {
            let mut out =
                serde_json::to_value(&spectrum).map_err(|e| CliError::input(e.to_string()))?;
            out["kind"] = Value::from(kind_name(args.kind));
            out["system"] = Value::from(inst.name());
            emit::json(&out)
        }
        Format::Csv => emit::csv(&["value", "count"], histogram_rows(&spectrum)),
    }
}

pub fn sequence(
    name: SequenceArg,
    route: Option<&str>,
    max_n: usize,
    format: Format,
) -> Result<Vec<u8>, CliError> {
    let name = match name {
        SequenceArg::Phi => SequenceName::Phi,
        SequenceArg::Idf => SequenceName::Idf,
        SequenceArg::AfSum => SequenceName::AfSum,
    };
    let routes: Vec<Route> = match route {
        Some(r) => vec![r.parse()?],
        None => name.routes().to_vec(),
    };
    let tables = routes
        .iter()
        .map(|&r| SequenceTable::compute(name, r, max_n))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = tables.windows(2).all(|w| w[0].values == w[1].values);
    let rows: Vec<(usize, Route, &BigInt)> = (0..=max_n)
        .flat_map(|n| tables.iter().map(move |t| (n, t.route, &t.values[n])))
        .collect();
    match format {
        Format::Json => {
            let mut out = json!({
                "name": name.as_str(),
                "max_n": max_n,
                "routes": routes.iter().map(|r| r.as_str()).collect::<Vec<_>>(),
                "agree": agree,
                "rows": rows
                    .iter()
                    .map(|(n, r, v)| json!({"n": n, "route": r.as_str(), "value": v.to_string()}))
                    .collect::<Vec<_>>(),
            });
            let kind = match name {
                SequenceName::Phi => None,
                SequenceName::Idf => Some(RatioKind::Idf),
                SequenceName::AfSum => Some(RatioKind::AfSum),
            };
            if let (Some(kind), true) = (kind, max_n >= 1) {
                let exact = asymptotic_ratio(kind, max_n)?;
                let as_quad = QuadRat::from_rational(exact.clone());
                out["ratio"] = json!({
                    "n": max_n,
                    "exact": exact.to_string(),
                    "decimal": as_quad.to_decimal_string(50),
                    "limit": kind.limit().to_string(),
                    "limit_decimal": kind.limit().to_decimal_string(50),
                });
            }
            emit::json(&out)
        }
        Format::Csv => emit::csv(
            &["n", "route", "value"],
            rows.iter()
                .map(|(n, r, v)| vec![n.to_string(), r.as_str().to_owned(), v.to_string()]),
        ),
    }
}

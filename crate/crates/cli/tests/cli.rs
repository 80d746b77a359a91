use std::process::{Command, Output};

use serde_json::Value;

fn pyrene(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyrene"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = pyrene(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn generate_reports_graph_sizes() {
    let h3 = ok_json(&["generate", "--family", "pyrene_chain", "--n", "3"]);
    assert_eq!(
        (
            h3["vertices"].as_u64(),
            h3["edges"].as_u64(),
            h3["faces"].as_u64()
        ),
        (Some(44), Some(55), Some(12))
    );
    assert_eq!(h3["cells"].as_array().unwrap().len(), 12);
    let d = ok_json(&["generate", "--family", "diphenyl"]);
    assert_eq!(
        (
            d["vertices"].as_u64(),
            d["edges"].as_u64(),
            d["faces"].as_u64()
        ),
        (Some(12), Some(13), Some(2))
    );
    assert!(d["cells"].is_null());
}

#[test]
fn generate_round_trips_through_a_system_file() {
    let dir = std::env::temp_dir().join(format!("pyrene-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pyrene.json");
    std::fs::write(&path, r#"{"cells": [[0,0],[1,0],[0,1],[1,-1]]}"#).unwrap();
    let sys = ok_json(&["generate", "--system", path.to_str().unwrap()]);
    assert_eq!(sys["vertices"], 16);
    let out_path = dir.join("out.json");
    let out = pyrene(&[
        "generate",
        "--system",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(written, sys);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["generate", "--system", "{not json"][..],
        &["generate", "--system", "/nonexistent/system.json"],
        &["generate", "--family", "pyrene_chain"],
        &["generate", "--family", "pyrene", "--n", "2"],
        &[
            "polynomial",
            "--family",
            "pyrene_chain",
            "--n",
            "1",
            "--caps",
            "0,3",
        ],
        &["sequence", "--name", "phi", "--route", "poly_derivative"],
        &["validate", "--forcing-seed", "0,x"],
        &["validate", "--config", r#"{"unknown": 1}"#],
        &["frobnicate"],
    ] {
        let out = pyrene(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn matchings_of_pyrene() {
    let m = ok_json(&["matchings", "--family", "pyrene"]);
    assert_eq!(m["count"], 6);
    assert_eq!(m["matchings"].as_array().unwrap().len(), 6);
    let csv = pyrene(&[
        "matchings",
        "--family",
        "pyrene_chain",
        "--n",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 36);
}

#[test]
fn h1_polynomials_by_brute_force() {
    let f = ok_json(&["polynomial", "--family", "pyrene_chain", "--n", "1"]);
    assert_eq!(strings(&f["polynomial"]), ["0", "2", "4"]);
    assert_eq!(f["idf"], "10");
    let af = ok_json(&[
        "polynomial",
        "--family",
        "pyrene_chain",
        "--n",
        "1",
        "--kind",
        "antiforcing",
    ]);
    assert_eq!(strings(&af["polynomial"]), ["0", "2", "2", "2"]);
    assert_eq!(af["af_sum"], "12");
    assert_eq!(af["phi"], "6");
}

#[test]
fn every_method_agrees_on_h2() {
    for kind in ["forcing", "antiforcing"] {
        let outputs: Vec<Vec<u8>> = ["brute", "oracle", "recurrence", "closed"]
            .iter()
            .map(|m| {
                let out = pyrene(&[
                    "polynomial",
                    "--family",
                    "pyrene_chain",
                    "--n",
                    "2",
                    "--kind",
                    kind,
                    "--method",
                    m,
                ]);
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{kind}");
    }
}

#[test]
fn recurrence_and_closed_form_are_byte_identical() {
    for kind in ["forcing", "antiforcing"] {
        for format in ["json", "csv"] {
            let run = |method| {
                pyrene(&[
                    "polynomial",
                    "--family",
                    "pyrene_chain",
                    "--n",
                    "10",
                    "--kind",
                    kind,
                    "--method",
                    method,
                    "--format",
                    format,
                ])
            };
            let (a, b) = (run("recurrence"), run("closed"));
            assert_eq!(a.status.code(), Some(0));
            assert_eq!(a.stdout, b.stdout);
        }
    }
    let h10 = ok_json(&[
        "polynomial",
        "--family",
        "pyrene_chain",
        "--n",
        "10",
        "--method",
        "closed",
    ]);
    assert_eq!(h10["phi"], "46611179");
}

#[test]
fn method_mismatch_exits_with_three() {
    for args in [
        &[
            "polynomial",
            "--family",
            "phenanthrene",
            "--method",
            "recurrence",
        ][..],
        &[
            "polynomial",
            "--family",
            "auxiliary",
            "--n",
            "2",
            "--method",
            "closed",
        ],
        &["spectrum", "--family", "diphenyl", "--method", "oracle"],
        &[
            "polynomial",
            "--family",
            "pyrene_chain",
            "--n",
            "3",
            "--kind",
            "antiforcing",
        ],
        &[
            "polynomial",
            "--family",
            "pyrene_chain",
            "--n",
            "2",
            "--caps",
            "10,32",
        ],
    ] {
        assert_eq!(pyrene(args).status.code(), Some(3), "{args:?}");
    }
    // Oracle methods take chain input only, although the core accepts G_n too.
    assert_eq!(
        pyrene(&[
            "polynomial",
            "--family",
            "auxiliary",
            "--n",
            "1",
            "--method",
            "oracle"
        ])
        .status
        .code(),
        Some(3)
    );
    let aux = ok_json(&["polynomial", "--family", "auxiliary", "--n", "1"]);
    assert_eq!(strings(&aux["polynomial"]), ["0", "1", "4"]);
}

#[test]
fn spectra() {
    let f = ok_json(&["spectrum", "--family", "pyrene_chain", "--n", "2"]);
    assert_eq!(f["values"], serde_json::json!([2, 3, 4]));
    assert_eq!(f["contiguous"], true);
    let af = ok_json(&[
        "spectrum",
        "--family",
        "pyrene_chain",
        "--n",
        "2",
        "--kind",
        "antiforcing",
    ]);
    assert_eq!(af["values"], serde_json::json!([2, 3, 4, 5, 6]));
    let h1 = ok_json(&["spectrum", "--family", "pyrene_chain", "--n", "1"]);
    assert_eq!((h1["min"].as_u64(), h1["max"].as_u64()), (Some(1), Some(2)));
    let csv = pyrene(&[
        "spectrum",
        "--family",
        "pyrene_chain",
        "--n",
        "3",
        "--method",
        "oracle",
        "--format",
        "csv",
    ]);
    assert_eq!(
        String::from_utf8(csv.stdout).unwrap(),
        "value,count\n3,4\n4,40\n5,96\n6,64\n"
    );
}

#[test]
fn sequences() {
    let idf = ok_json(&["sequence", "--name", "idf", "--max-n", "6"]);
    assert_eq!(idf["agree"], true);
    let last: Vec<&Value> = idf["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["n"] == 6)
        .collect();
    assert_eq!(last.len(), 3);
    assert!(last.iter().all(|r| r["value"] == "411978"));
    // 411978 / (6 * 40391)
    assert!(idf["ratio"]["decimal"]
        .as_str()
        .unwrap()
        .starts_with("1.699957911415909"));
    assert_eq!(idf["ratio"]["exact"], "68663/40391");

    let csv = pyrene(&[
        "sequence",
        "--name",
        "phi",
        "--route",
        "closed_form",
        "--max-n",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(
        String::from_utf8(csv.stdout).unwrap(),
        "n,route,value\n0,closed_form,1\n1,closed_form,6\n2,closed_form,35\n3,closed_form,204\n"
    );
    let af = ok_json(&[
        "sequence",
        "--name",
        "af_sum",
        "--route",
        "poly_derivative",
        "--max-n",
        "8",
    ]);
    assert_eq!(af["rows"][8]["value"], "22531256");
}

#[test]
fn default_validation_passes() {
    let v = ok_json(&["validate"]);
    assert!(v["failures"].as_array().unwrap().is_empty());
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    for id in [
        "forcing-brute-vs-oracle",
        "antiforcing-brute-vs-oracle",
        "idf-asymptotic",
        "phi-enumeration",
    ] {
        assert!(
            checks
                .iter()
                .any(|c| c["id"] == id && c["status"] == "pass"),
            "{id}"
        );
    }
}

#[test]
fn corrupted_seed_fails_validation() {
    let out = pyrene(&["validate", "--forcing-seed", "0,2,5", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failures = strings(&v["failures"]);
    assert!(failures.contains(&"forcing-recurrence-vs-closed".to_owned()));
    assert!(!failures.iter().any(|f| f.starts_with("antiforcing")));
}

#[test]
fn brute_force_beyond_caps_is_skipped() {
    let out = pyrene(&[
        "validate", "--max-n", "4", "--caps", "40,25", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,n,status,detail\n"));
    assert!(text.contains("forcing-brute-vs-oracle,2,pass,"));
    assert!(text.contains("forcing-brute-vs-oracle,3,skipped,"));
    assert!(!text.contains(",fail,"));

    let cfg = r#"{"max_n": 3, "oracle_max_n": 3, "brute_antiforcing_max_n": 3}"#;
    let v = ok_json(&["validate", "--config", cfg]);
    let af3: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"] == "antiforcing-brute-vs-oracle" && c["n"] == 3)
        .collect();
    assert_eq!(af3.len(), 1);
    assert_eq!(af3[0]["status"], "skipped");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "polynomial",
            "--family",
            "pyrene_chain",
            "--n",
            "2",
            "--kind",
            "antiforcing",
        ][..],
        &["matchings", "--family", "phenanthrene"],
        &["validate", "--max-n", "8"],
    ] {
        assert_eq!(pyrene(args).stdout, pyrene(args).stdout, "{args:?}");
    }
}

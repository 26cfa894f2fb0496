// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Every checked-in circuit file against the values it is meant to
//! reproduce.

use std::path::PathBuf;

use photonsim::commands::{simulate, RunSpec};
use serde_json::Value;

const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn circuit(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("circuits").join(format!("{name}.json"))
}

fn run(name: &str, input: &str, postselect: Option<&str>, renormalize: bool) -> Value {
    let path = circuit(name);
    let spec = RunSpec { circuit: &path, input, postselect, min_photons: None, qubits: None };
    serde_json::from_str(&simulate(&spec, renormalize, true).unwrap()).unwrap()
}

fn amplitudes(v: &Value) -> Vec<(String, f64, f64)> {
    v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let a = o["amplitude"].as_array().unwrap();
            (o["state"].as_str().unwrap().to_string(), a[0].as_f64().unwrap(), a[1].as_f64().unwrap())
        })
        .collect()
}

fn check_amplitudes(name: &str, input: &str, want: &[(&str, f64, f64)]) {
    let got = amplitudes(&run(name, input, None, false));
    assert_eq!(got.len(), want.len(), "{name} {input}: {got:?}");
    for (state, re, im) in want {
        let (_, gr, gi) = got.iter().find(|(s, _, _)| s == state).unwrap_or_else(|| panic!("{name}: no {state}"));
        assert!((gr - re).abs() <= 1e-9 && (gi - im).abs() <= 1e-9, "{name} {state}: {gr}+{gi}j");
    }
}

fn conditioned(name: &str, input: &str, postselect: Option<&str>) -> (Vec<(String, Option<String>, f64)>, f64) {
    let v = run(name, input, postselect, true);
    let rows = v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            (
                o["state"].as_str().unwrap().to_string(),
                o["bits"].as_str().map(str::to_string),
                o["probability"].as_f64().unwrap(),
            )
        })
        .collect();
    (rows, v["success_probability"].as_f64().unwrap())
}

#[test]
fn single_qubit_catalog() {
    check_amplitudes("x0", "|0,1,1,0>", &[("|1,0,1,0>", 1.0, 0.0)]);
    check_amplitudes("x0", "|0,1,0,1>", &[("|1,0,0,1>", 1.0, 0.0)]);
    check_amplitudes("x0_short", "|0,1,1,0>", &[("|1,0,1,0>", 1.0, 0.0)]);
    check_amplitudes("swap", "|0,1,1,0>", &[("|1,0,0,1>", 1.0, 0.0)]);
    check_amplitudes("h0", "|1,0,1,0>", &[("|1,0,1,0>", S, 0.0), ("|0,1,1,0>", S, 0.0)]);
    check_amplitudes("z0", "|0,1,0,1>", &[("|0,1,0,1>", -1.0, 0.0)]);
    check_amplitudes("y0", "|0,1,1,0>", &[("|1,0,1,0>", 0.0, -1.0)]);
    check_amplitudes("rx0", "|0,1,1,0>", &[("|1,0,1,0>", 0.0, -S), ("|0,1,1,0>", S, 0.0)]);
    check_amplitudes("ry0", "|0,1,1,0>", &[("|1,0,1,0>", -S, 0.0), ("|0,1,1,0>", S, 0.0)]);
    check_amplitudes("rz0", "|0,1,1,0>", &[("|0,1,1,0>", S, S)]);
    check_amplitudes("identity2", "|1,1>", &[("|1,1>", 1.0, 0.0)]);
}

#[test]
fn post_selected_cnot_files() {
    let p = "[0,1]==1 & [2,3]==1 & [4]==0 & [5]==0";
    for name in ["ralph_cnot", "postprocessed_cnot"] {
        let (rows, success) = conditioned(name, "|0,1,0,1,0,0>", Some(p));
        assert!((success - 1.0 / 9.0).abs() <= 1e-9, "{name}: {success}");
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].0, "|0,1,1,0,0,0>");
        assert_eq!(rows[0].1.as_deref(), Some("10"));
        assert!((rows[0].2 - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn heralded_cnot_file() {
    let (rows, success) = conditioned("heralded_cnot", "|0,1,0,1,1,1>", Some("[4]==1 & [5]==1"));
    assert!((success - 2.0 / 27.0).abs() <= 1e-9);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].0, "|0,1,1,0,1,1>");
}

#[test]
fn toffoli_file() {
    let (rows, success) = conditioned("ccx", "|0,1,0,1,1,0>", None);
    assert!((success - (2.0f64 / 27.0).powi(6)).abs() <= 1e-9);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].1.as_deref(), Some("111"));
    assert!((rows[0].2 - 1.0).abs() <= 1e-9);
}

#[test]
fn dual_rail_grover_file() {
    let (rows, success) = conditioned("grover_dual_rail", "|1,0,1,0,1,0>", None);
    assert!((success - (2.0f64 / 27.0).powi(7)).abs() <= 1e-9);
    let on_target: f64 = rows.iter().filter(|r| r.1.as_deref().is_some_and(|b| b.starts_with("01"))).map(|r| r.2).sum();
    assert!((on_target - 1.0).abs() <= 1e-9);
}

#[test]
fn polarized_grover_files() {
    for (target, detector) in [("00", 3), ("01", 2), ("10", 1), ("11", 0)] {
        let got = amplitudes(&run(&format!("grover_polarized_{target}"), "|0,{P:H}, 0, 0>", None, false));
        assert_eq!(got.len(), 1, "{target}: {got:?}");
        let state = photonsim_core::parse_state(&got[0].0).unwrap();
        let hit: Vec<usize> = (0..4).filter(|&m| state.mode_count(m) == 1).collect();
        assert_eq!(hit, vec![detector], "{target}");
        assert!(((got[0].1.powi(2) + got[0].2.powi(2)) - 1.0).abs() <= 1e-9);
    }
}

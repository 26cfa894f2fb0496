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

use std::fmt::Write;
use std::path::Path;

use photonsim_core::grover::{run_grover, GroverTarget, OracleVariant, READOUT_LABELS};
use photonsim_core::simulate::DEFAULT_PERMANENT_CAP;
use photonsim_core::{
    parse_postselect, parse_state, print_state, sample, FockState, Processor, RunResult, StateVector,
};
use serde_json::json;

use crate::file::{Built, CircuitFile};
use crate::report::{bits_json, bits_of, complex_json, fmt_complex, fmt_real, outcome_line};
use crate::{CliError, CAP_ENV};

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

fn json_text(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("plain JSON values serialize");
    s.push('\n');
    s
}

/// Cap from the environment, or the library default.
pub fn permanent_cap() -> Result<usize, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("{CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_PERMANENT_CAP),
    }
}

pub fn unitary(circuit: &Path, as_json: bool) -> Result<String, CliError> {
    let built = CircuitFile::load(circuit)?.build()?;
    let u = built.circuit().compile().map_err(runtime_err)?;
    if as_json {
        let rows: Vec<serde_json::Value> =
            (0..u.rows()).map(|i| (0..u.cols()).map(|j| complex_json(u[(i, j)])).collect()).collect();
        return Ok(json_text(json!({ "rows": u.rows(), "cols": u.cols(), "matrix": rows })));
    }
    let mut out = String::new();
    for i in 0..u.rows() {
        let row: Vec<String> = (0..u.cols()).map(|j| fmt_complex(u[(i, j)])).collect();
        writeln!(out, "{}", row.join("  ")).unwrap();
    }
    Ok(out)
}

/// Inputs shared by `simulate` and `sample`.
#[derive(Debug, Clone)]
pub struct RunSpec<'a> {
    pub circuit: &'a Path,
    pub input: &'a str,
    pub postselect: Option<&'a str>,
    pub min_photons: Option<usize>,
    pub qubits: Option<usize>,
}

struct Prepared {
    result: RunResult,
    qubits: Option<usize>,
}

fn prepare(spec: &RunSpec) -> Result<Prepared, CliError> {
    let file = CircuitFile::load(spec.circuit)?;
    let built = file.build()?;
    let input: StateVector = parse_state(spec.input).map_err(input_err)?.into();
    let user = spec.postselect.map(parse_postselect).transpose().map_err(input_err)?;
    if let Some(u) = &user {
        u.check_modes(built.circuit().modes()).map_err(input_err)?;
    }
    let mut p = match built {
        Built::Optical(c) => {
            let p = Processor::new(c, input).map_err(input_err)?;
            match user {
                Some(u) => p.with_postselect(u),
                None => p,
            }
        }
        Built::Qubits(b) => {
            let input = if input.channels() == b.circuit.modes() {
                input
            } else {
                b.input_vector(&input).map_err(input_err)?
            };
            let condition = match (b.condition.clone(), user) {
                (Some(c), Some(u)) => Some(c.and(&u)),
                (c, u) => c.or(u),
            };
            let p = Processor::new(b.circuit, input).map_err(input_err)?;
            match condition {
                Some(c) => p.with_postselect(c),
                None => p,
            }
        }
    };
    if let Some(n) = spec.min_photons {
        p = p.with_min_detected_photons(n);
    }
    p = p.with_permanent_cap(permanent_cap()?);
    let result = p.run().map_err(runtime_err)?;
    Ok(Prepared { result, qubits: spec.qubits.or(file.qubit_count()) })
}

pub fn simulate(spec: &RunSpec, renormalize: bool, as_json: bool) -> Result<String, CliError> {
    let Prepared { result, qubits } = prepare(spec)?;
    let rows: Vec<(FockState, Option<Vec<u8>>, photonsim_core::Complex64, f64)> = result
        .selected
        .iter()
        .map(|(s, a)| {
            let p = if renormalize { result.conditioned.probability(s) } else { a.norm_sqr() };
            (s.clone(), bits_of(s, qubits), *a, p)
        })
        .collect();
    if as_json {
        let outcomes: Vec<serde_json::Value> = rows
            .iter()
            .map(|(s, b, a, p)| {
                json!({ "state": print_state(s), "bits": bits_json(b), "amplitude": complex_json(*a), "probability": p })
            })
            .collect();
        return Ok(json_text(json!({
            "renormalized": renormalize,
            "success_probability": result.success_probability,
            "outcomes": outcomes,
        })));
    }
    let mut out = String::new();
    for (s, b, a, p) in &rows {
        let value = if renormalize { fmt_real(*p) } else { fmt_complex(*a) };
        writeln!(out, "{}", outcome_line(s, b, &value)).unwrap();
    }
    if renormalize {
        writeln!(out, "success={}", fmt_real(result.success_probability)).unwrap();
    }
    Ok(out)
}

pub fn sample_counts(spec: &RunSpec, shots: u64, seed: u64, as_json: bool) -> Result<String, CliError> {
    let Prepared { result, qubits } = prepare(spec)?;
    let drawn = sample(&result.conditioned, shots, seed);
    if as_json {
        let counts: Vec<serde_json::Value> = drawn
            .counts
            .iter()
            .map(|(s, n)| json!({ "state": print_state(s), "bits": bits_json(&bits_of(s, qubits)), "count": n }))
            .collect();
        return Ok(json_text(json!({ "shots": drawn.shots, "seed": seed, "counts": counts })));
    }
    let mut out = String::new();
    for (s, n) in &drawn.counts {
        writeln!(out, "{}", outcome_line(s, &bits_of(s, qubits), &n.to_string())).unwrap();
    }
    Ok(out)
}

pub fn grover(target: &str, variant: OracleVariant, shots: u64, seed: u64, as_json: bool) -> Result<String, CliError> {
    let target: GroverTarget =
        target.parse().map_err(|_| CliError::Input(format!("target {target:?} is not one of 00, 01, 10, 11")))?;
    let r = run_grover(target, variant, shots, seed).map_err(runtime_err)?;
    let labels = ["00", "01", "10", "11"];
    if as_json {
        let outcomes: Vec<String> = GroverTarget::ALL
            .iter()
            .map(|t| {
                let mode = READOUT_LABELS.iter().position(|l| l == t).expect("every label has a detector");
                let mut occ = vec![0u32; 4];
                occ[mode] = 1;
                print_state(&FockState::new(occ))
            })
            .collect();
        let mut v = json!({ "outcomes": outcomes, "distribution": r.probabilities, "labels": labels });
        if shots > 0 {
            let counts: serde_json::Map<String, serde_json::Value> =
                GroverTarget::ALL.iter().map(|t| (t.label(), r.counts.get(t).copied().unwrap_or(0).into())).collect();
            v["shots"] = shots.into();
            v["seed"] = seed.into();
            v["counts"] = counts.into();
        }
        return Ok(json_text(v));
    }
    let mut out = String::new();
    for (t, p) in GroverTarget::ALL.iter().zip(r.probabilities) {
        write!(out, "{t}: {}", fmt_real(p)).unwrap();
        if shots > 0 {
            write!(out, " ({} of {shots})", r.counts.get(t).copied().unwrap_or(0)).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

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

//! Two Grover pipelines: a two-qubit search carried by one polarized
//! photon, and a dual-rail three-qubit search with a heralded Toffoli.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use core::fmt;
use core::str::FromStr;
use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::components::{BeamSplitter, ComponentSpec};
use crate::error::{Error, Result};
use crate::fock::{FockState, StateVector};
use crate::postselect::Processor;
use crate::qubit::{
    decode_qubits, heralded_cnot, sequence, single_qubit_gate, toffoli_steps, Decoded, Gate, GateBuild,
};
use crate::simulate::{sample, Distribution};

/// A two-bit search target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroverTarget(pub u8, pub u8);

impl GroverTarget {
    pub const ALL: [GroverTarget; 4] = [GroverTarget(0, 0), GroverTarget(0, 1), GroverTarget(1, 0), GroverTarget(1, 1)];

    pub fn label(self) -> String {
        alloc::format!("{}{}", self.0, self.1)
    }
}

impl FromStr for GroverTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "00" => Ok(GroverTarget(0, 0)),
            "01" => Ok(GroverTarget(0, 1)),
            "10" => Ok(GroverTarget(1, 0)),
            "11" => Ok(GroverTarget(1, 1)),
            _ => Err(Error::Parse { offset: 0, message: alloc::format!("unknown target {s:?}") }),
        }
    }
}

impl fmt::Display for GroverTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// How the oracle marks the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVariant {
    /// One polarization rotator on the target's spatial mode.
    PerMode,
    /// Always `PR(π/2)` on mode 0, dressed with sign operators.
    UniformPr0,
}

fn add(c: &mut Circuit, anchor: usize, spec: ComponentSpec) {
    c.add(anchor, spec).expect("component fits the register");
}

/// Takes `|0,1:H>` to the uniform superposition of the four codewords.
pub fn init_circuit() -> Circuit {
    let mut c = Circuit::new_polarized(2);
    add(&mut c, 1, ComponentSpec::hwp(FRAC_PI_8));
    add(&mut c, 1, ComponentSpec::ps(-FRAC_PI_2));
    add(&mut c, 0, ComponentSpec::bs(BeamSplitter::ry(FRAC_PI_2)));
    add(&mut c, 0, ComponentSpec::ps(-PI));
    c
}

/// `diag(1, -1)` on the (H, V) channels of mode `m`.
fn sign_flip_v(c: &mut Circuit, m: usize) {
    add(c, m, ComponentSpec::hwp(0.0));
    add(c, m, ComponentSpec::ps(-FRAC_PI_2));
}

/// Flips the sign of the target's codeword, up to a global sign.
pub fn oracle_circuit(target: GroverTarget, variant: OracleVariant) -> Circuit {
    let mut c = Circuit::new_polarized(2);
    let pr0 = ComponentSpec::pr(FRAC_PI_2);
    match variant {
        OracleVariant::PerMode => {
            let (mode, theta) = match target {
                GroverTarget(0, 0) => (1, -FRAC_PI_2),
                GroverTarget(0, 1) => (1, FRAC_PI_2),
                GroverTarget(1, 0) => (0, -FRAC_PI_2),
                _ => (0, FRAC_PI_2),
            };
            add(&mut c, mode, ComponentSpec::pr(theta));
        }
        OracleVariant::UniformPr0 => match target {
            GroverTarget(0, 0) => {
                sign_flip_v(&mut c, 1);
                sign_flip_v(&mut c, 0);
                add(&mut c, 0, pr0);
            }
            GroverTarget(0, 1) => {
                sign_flip_v(&mut c, 1);
                add(&mut c, 0, pr0);
                sign_flip_v(&mut c, 0);
            }
            GroverTarget(1, 0) => {
                sign_flip_v(&mut c, 1);
                sign_flip_v(&mut c, 1);
                sign_flip_v(&mut c, 0);
                add(&mut c, 0, pr0);
                sign_flip_v(&mut c, 0);
            }
            _ => add(&mut c, 0, pr0),
        },
    }
    c
}

/// Amplitude amplification about the uniform state.
pub fn inversion_circuit() -> Circuit {
    let mut c = Circuit::new_polarized(2);
    add(&mut c, 0, ComponentSpec::bs(BeamSplitter::ry(FRAC_PI_2)));
    add(&mut c, 1, ComponentSpec::hwp(FRAC_PI_4));
    add(&mut c, 1, ComponentSpec::ps(-FRAC_PI_2));
    add(&mut c, 0, ComponentSpec::bs(BeamSplitter::ry(FRAC_PI_2)));
    c
}

/// Spreads the four codewords over four spatial modes.
pub fn detection_circuit() -> Circuit {
    let mut c = Circuit::new_polarized(4);
    add(&mut c, 1, ComponentSpec::Permutation(alloc::vec![1, 0]));
    add(&mut c, 0, ComponentSpec::pbs());
    add(&mut c, 2, ComponentSpec::pbs());
    c
}

/// Labels of detector modes 0..4.
pub const READOUT_LABELS: [GroverTarget; 4] =
    [GroverTarget(1, 1), GroverTarget(1, 0), GroverTarget(0, 1), GroverTarget(0, 0)];

/// Init, oracle, inversion and detection on four polarized modes.
pub fn grover_circuit(target: GroverTarget, variant: OracleVariant) -> Circuit {
    let mut c = Circuit::new_polarized(4);
    for stage in [init_circuit(), oracle_circuit(target, variant), inversion_circuit()] {
        c.add_circuit(0, &stage).expect("two-mode stage fits");
    }
    c.compose(&detection_circuit()).expect("same register")
}

/// `|0,1:H,0,0>`.
pub fn grover_input() -> FockState {
    FockState::polarized(alloc::vec![0, 0, 1, 0, 0, 0, 0, 0]).expect("even channel count")
}

#[derive(Clone, Debug)]
pub struct GroverResult {
    /// Probabilities of labels 00, 01, 10, 11.
    pub probabilities: [f64; 4],
    pub output: StateVector,
    pub counts: BTreeMap<GroverTarget, u64>,
}

impl GroverResult {
    pub fn probability(&self, t: GroverTarget) -> f64 {
        self.probabilities[(2 * t.0 + t.1) as usize]
    }
}

fn readout(s: &FockState) -> Option<GroverTarget> {
    let modes: Vec<usize> = (0..s.modes()).filter(|&m| s.mode_count(m) > 0).collect();
    match modes.as_slice() {
        [m] if s.mode_count(*m) == 1 => READOUT_LABELS.get(*m).copied(),
        _ => None,
    }
}

pub fn run_grover(target: GroverTarget, variant: OracleVariant, shots: u64, seed: u64) -> Result<GroverResult> {
    let p = Processor::new(grover_circuit(target, variant), grover_input().into())?;
    let r = p.run()?;
    let mut probabilities = [0.0; 4];
    for (s, a) in r.selected.iter() {
        if let Some(t) = readout(s) {
            probabilities[(2 * t.0 + t.1) as usize] += a.norm_sqr();
        }
    }
    let mut counts = BTreeMap::new();
    for (s, n) in sample(&r.conditioned, shots, seed).counts {
        if let Some(t) = readout(&s) {
            *counts.entry(t).or_insert(0) += n;
        }
    }
    Ok(GroverResult { probabilities, output: r.selected, counts })
}

/// The dual-rail three-qubit search for `|01>` on qubits 0 and 1, qubit 2
/// holding the oracle's phase-kickback ancilla.
pub fn dual_rail_grover_build(with_oracle: bool) -> Result<GateBuild> {
    let q = 3;
    let g = |gate, i| single_qubit_gate(gate, i, q);
    let mut steps = alloc::vec![g(Gate::X, 2)?, g(Gate::H, 0)?, g(Gate::H, 1)?, g(Gate::H, 2)?];
    if with_oracle {
        steps.push(g(Gate::X, 0)?);
        steps.extend(toffoli_steps(0, 1, 2, q)?);
        steps.push(g(Gate::X, 0)?);
    }
    for step in [
        g(Gate::H, 0)?,
        g(Gate::H, 1)?,
        g(Gate::X, 0)?,
        g(Gate::X, 1)?,
        g(Gate::H, 1)?,
        heralded_cnot(0, 1, q)?,
        g(Gate::H, 1)?,
        g(Gate::X, 0)?,
        g(Gate::X, 1)?,
        g(Gate::H, 0)?,
        g(Gate::H, 1)?,
    ] {
        steps.push(step);
    }
    sequence(q, &steps)
}

#[derive(Clone, Debug)]
pub struct DualRailGroverResult {
    pub success_probability: f64,
    /// Heralded output, renormalized.
    pub state: StateVector,
    /// Probabilities over three-bit labels `q0 q1 q2`.
    pub labels: BTreeMap<[u8; 3], f64>,
    /// Marginal over the two searched qubits.
    pub data: BTreeMap<[u8; 2], f64>,
    /// Overlap of the heralded state with `|01> ⊗ (|0> - |1>)/√2`.
    pub marked_overlap: Complex64,
    pub counts: BTreeMap<[u8; 3], u64>,
}

/// Run the dual-rail search from `|000>` with every herald satisfied.
pub fn dual_rail_grover_3q(seed: u64, shots: u64) -> Result<DualRailGroverResult> {
    run_dual_rail(&dual_rail_grover_build(true)?, seed, shots)
}

pub fn run_dual_rail(build: &GateBuild, seed: u64, shots: u64) -> Result<DualRailGroverResult> {
    let r = build.run_bits(&[0, 0, 0])?;
    let state = r.conditioned_state();
    let mut labels = BTreeMap::new();
    let mut data = BTreeMap::new();
    let mut marked_overlap = Complex64::new(0.0, 0.0);
    let m = core::f64::consts::FRAC_1_SQRT_2;
    for (s, a) in state.iter() {
        if let Decoded::Bits(b) = decode_qubits(s, 3) {
            let key = [b[0], b[1], b[2]];
            *labels.entry(key).or_insert(0.0) += a.norm_sqr();
            *data.entry([b[0], b[1]]).or_insert(0.0) += a.norm_sqr();
            if b[0] == 0 && b[1] == 1 {
                marked_overlap += a * if b[2] == 0 { m } else { -m };
            }
        }
    }
    let mut counts = BTreeMap::new();
    let dist = Distribution::from_state(&state)?;
    for (s, n) in sample(&dist, shots, seed).counts {
        if let Decoded::Bits(b) = decode_qubits(&s, 3) {
            *counts.entry([b[0], b[1], b[2]]).or_insert(0) += n;
        }
    }
    Ok(DualRailGroverResult { success_probability: r.success_probability, state, labels, data, marked_overlap, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_parsing() {
        assert_eq!("10".parse::<GroverTarget>(), Ok(GroverTarget(1, 0)));
        assert!("12".parse::<GroverTarget>().is_err());
        assert_eq!(GroverTarget(0, 1).label(), "01");
    }

    #[test]
    fn readout_table() {
        let s = |occ: [u32; 8]| FockState::polarized(occ.to_vec()).unwrap();
        assert_eq!(readout(&s([0, 1, 0, 0, 0, 0, 0, 0])), Some(GroverTarget(1, 1)));
        assert_eq!(readout(&s([0, 0, 0, 0, 0, 0, 1, 0])), Some(GroverTarget(0, 0)));
        assert_eq!(readout(&s([0; 8])), None);
    }
}

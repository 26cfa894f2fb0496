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

//! Qubits on photons: dual-rail and polarization encodings, the
//! single-qubit gate catalog and post-selected or heralded two-qubit gates.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::circuit::Circuit;
use crate::components::{BeamSplitter, ComponentSpec};
use crate::error::{Error, Result};
use crate::fock::{FockState, StateVector};
use crate::matrix::CMatrix;
use crate::postselect::{Clause, CmpOp, PostSelect, Processor, RunResult};

/// How qubits are stored in photons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// Qubit `i` is one photon on modes `(2i, 2i+1)`; |0> is `(1,0)`.
    DualRail,
    /// Two qubits in one photon on two polarized modes.
    Polarization,
}

/// Outcome of [`decode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Bits(Vec<u8>),
    NonCodeword,
}

fn check_bits(bits: &[u8]) -> Result<()> {
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::InvalidSpec("bits must be 0 or 1".into()));
    }
    Ok(())
}

pub fn encode(bits: &[u8], encoding: Encoding) -> Result<FockState> {
    check_bits(bits)?;
    match encoding {
        Encoding::DualRail => Ok(FockState::new(bits.iter().flat_map(|&b| [1 - b as u32, b as u32]).collect())),
        Encoding::Polarization => {
            let occ = match bits {
                [0, 0] => [0, 0, 1, 0],
                [0, 1] => [0, 0, 0, 1],
                [1, 0] => [1, 0, 0, 0],
                [1, 1] => [0, 1, 0, 0],
                _ => return Err(Error::InvalidSpec("polarization encoding holds two bits".into())),
            };
            FockState::polarized(occ.to_vec())
        }
    }
}

pub fn decode(state: &FockState, encoding: Encoding) -> Decoded {
    match encoding {
        Encoding::DualRail => decode_qubits(state, state.modes() / 2),
        Encoding::Polarization => {
            if !state.is_polarized() || state.channels() != 4 {
                return Decoded::NonCodeword;
            }
            for bits in [[0u8, 0], [0, 1], [1, 0], [1, 1]] {
                if encode(&bits, encoding).as_ref() == Ok(state) {
                    return Decoded::Bits(bits.to_vec());
                }
            }
            Decoded::NonCodeword
        }
    }
}

/// Dual-rail decoding of the first `qubits` mode pairs; later modes are
/// ignored.
pub fn decode_qubits(state: &FockState, qubits: usize) -> Decoded {
    if state.is_polarized() || 2 * qubits > state.modes() {
        return Decoded::NonCodeword;
    }
    let occ = state.occupations();
    let mut bits = Vec::with_capacity(qubits);
    for i in 0..qubits {
        match (occ[2 * i], occ[2 * i + 1]) {
            (1, 0) => bits.push(0),
            (0, 1) => bits.push(1),
            _ => return Decoded::NonCodeword,
        }
    }
    Decoded::Bits(bits)
}

/// Single-qubit gates of the catalog.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    X,
    Y,
    Z,
    H,
    S,
    Sdag,
    T,
    Tdag,
    Rx(f64),
    Ry(f64),
    Rz(f64),
}

impl Gate {
    /// Look a gate up by its lowercase name; rotations need `theta`.
    pub fn from_name(name: &str, theta: Option<f64>) -> Result<Gate> {
        let need = |g: fn(f64) -> Gate| theta.map(g).ok_or_else(|| Error::InvalidGate(format!("{name} needs theta")));
        match name.to_ascii_lowercase().as_str() {
            "x" => Ok(Gate::X),
            "y" => Ok(Gate::Y),
            "z" => Ok(Gate::Z),
            "h" => Ok(Gate::H),
            "s" => Ok(Gate::S),
            "sdag" => Ok(Gate::Sdag),
            "t" => Ok(Gate::T),
            "tdag" => Ok(Gate::Tdag),
            "rx" => need(Gate::Rx),
            "ry" => need(Gate::Ry),
            "rz" => need(Gate::Rz),
            _ => Err(Error::InvalidGate(name.to_string())),
        }
    }

    /// Two-mode optical circuit realizing the gate on one dual-rail pair.
    pub fn circuit(self) -> Circuit {
        let mut c = Circuit::new(2);
        let ps = |c: &mut Circuit, m: usize, phi: f64| {
            c.add(m, ComponentSpec::ps(phi)).expect("fits");
        };
        let bs = |c: &mut Circuit, b: BeamSplitter| {
            c.add(0, ComponentSpec::bs(b)).expect("fits");
        };
        match self {
            Gate::X => {
                c.add(0, ComponentSpec::Permutation(vec![1, 0])).expect("fits");
            }
            Gate::Y => {
                c.add(0, ComponentSpec::Permutation(vec![1, 0])).expect("fits");
                ps(&mut c, 0, -FRAC_PI_2);
                ps(&mut c, 1, FRAC_PI_2);
            }
            Gate::Z => ps(&mut c, 1, PI),
            Gate::H => bs(&mut c, BeamSplitter::h(FRAC_PI_2)),
            Gate::S => ps(&mut c, 1, FRAC_PI_2),
            Gate::Sdag => ps(&mut c, 1, -FRAC_PI_2),
            Gate::T => ps(&mut c, 1, FRAC_PI_4),
            Gate::Tdag => ps(&mut c, 1, -FRAC_PI_4),
            Gate::Rx(t) => {
                ps(&mut c, 0, PI);
                bs(&mut c, BeamSplitter::rx(t));
                ps(&mut c, 0, PI);
            }
            Gate::Ry(t) => bs(&mut c, BeamSplitter::ry(t)),
            Gate::Rz(t) => {
                bs(&mut c, BeamSplitter::h(FRAC_PI_2));
                ps(&mut c, 0, PI);
                bs(&mut c, BeamSplitter::rx(t));
                ps(&mut c, 0, PI);
                bs(&mut c, BeamSplitter::h(FRAC_PI_2));
            }
        }
        c
    }
}

/// A gate realized optically: a circuit on `2 * qubits` data modes followed
/// by auxiliary modes, the photons the auxiliaries start with, and the
/// terminal condition that signals success.
#[derive(Clone, Debug)]
pub struct GateBuild {
    pub qubits: usize,
    pub circuit: Circuit,
    pub herald_input: Vec<u32>,
    pub condition: Option<PostSelect>,
    pub success_probability: f64,
}

impl GateBuild {
    fn unconditioned(qubits: usize, circuit: Circuit) -> Self {
        GateBuild { qubits, circuit, herald_input: Vec::new(), condition: None, success_probability: 1.0 }
    }

    pub fn aux_modes(&self) -> usize {
        self.herald_input.len()
    }

    /// Data state `data` on `2 * qubits` modes, extended with the heralds.
    pub fn input_vector(&self, data: &StateVector) -> Result<StateVector> {
        if data.channels() != 2 * self.qubits || data.is_polarized() {
            return Err(Error::RegisterMismatch { expected: 2 * self.qubits, found: data.channels() });
        }
        let mut out = StateVector::empty(self.circuit.channels(), false);
        for (s, &a) in data.iter() {
            let mut occ = s.occupations().to_vec();
            occ.extend_from_slice(&self.herald_input);
            out.add(FockState::new(occ), a)?;
        }
        Ok(out)
    }

    /// Dual-rail codeword `bits` plus heralds.
    pub fn input_state(&self, bits: &[u8]) -> Result<FockState> {
        if bits.len() != self.qubits {
            return Err(Error::RegisterMismatch { expected: self.qubits, found: bits.len() });
        }
        let mut occ = encode(bits, Encoding::DualRail)?.occupations().to_vec();
        occ.extend_from_slice(&self.herald_input);
        Ok(FockState::new(occ))
    }

    pub fn processor(&self, input: StateVector) -> Result<Processor> {
        let p = Processor::new(self.circuit.clone(), input)?;
        Ok(match &self.condition {
            Some(c) => p.with_postselect(c.clone()),
            None => p,
        })
    }

    pub fn run_bits(&self, bits: &[u8]) -> Result<RunResult> {
        self.processor(self.input_state(bits)?.into())?.run()
    }
}

fn check_qubit(i: usize, q: usize) -> Result<()> {
    if i >= q {
        return Err(Error::OutOfRange(format!("qubit {i} of {q}")));
    }
    Ok(())
}

fn check_pair(a: usize, b: usize, q: usize) -> Result<()> {
    check_qubit(a, q)?;
    check_qubit(b, q)?;
    if a == b {
        return Err(Error::InvalidGate("control and target must differ".into()));
    }
    Ok(())
}

pub fn single_qubit_gate(gate: Gate, qubit: usize, q: usize) -> Result<GateBuild> {
    check_qubit(qubit, q)?;
    let mut c = Circuit::new(2 * q);
    c.add_circuit(2 * qubit, &gate.circuit())?;
    Ok(GateBuild::unconditioned(q, c))
}

/// Exchange two qubits.
pub fn swap(a: usize, b: usize, q: usize) -> Result<GateBuild> {
    check_pair(a, b, q)?;
    let mut sub = Circuit::new(4);
    sub.add(0, ComponentSpec::Permutation(vec![2, 3, 0, 1]))?;
    let mut c = Circuit::new(2 * q);
    c.add_mapped(&sub, &[2 * a, 2 * a + 1, 2 * b, 2 * b + 1])?;
    Ok(GateBuild::unconditioned(q, c))
}

/// `θ` whose half-angle cosine squared is the reflectivity 1/3.
pub fn theta_one_third() -> f64 {
    2.0 * (1.0f64 / 3.0).sqrt().acos()
}

/// The six-mode post-selected CNOT core on modes
/// `(A_c, C_a, C_b, T_a, T_b, A_t)`.
pub fn ralph_core() -> Circuit {
    let t13 = theta_one_third();
    let phased = BeamSplitter::h(t13).with_corners(-FRAC_PI_2, FRAC_PI_2, PI, 0.0);
    let mut c = Circuit::new(6);
    for (anchor, bs) in [
        (0, phased),
        (3, BeamSplitter::h(FRAC_PI_2)),
        (2, phased),
        (4, BeamSplitter::h(t13)),
        (3, BeamSplitter::h(FRAC_PI_2)),
    ] {
        c.add(anchor, ComponentSpec::bs(bs)).expect("fits");
    }
    c
}

/// Post-selected CNOT with two vacuum auxiliaries; succeeds with
/// probability 1/9. On success it applies `Z_c · CNOT`, whose relative
/// phase is invisible in the computational basis.
pub fn ralph_cnot(control: usize, target: usize, q: usize) -> Result<GateBuild> {
    check_pair(control, target, q)?;
    let (a0, a1) = (2 * q, 2 * q + 1);
    let mut c = Circuit::new(2 * q + 2);
    c.add_mapped(&ralph_core(), &[a0, 2 * control, 2 * control + 1, 2 * target, 2 * target + 1, a1])?;
    let condition = PostSelect::new(vec![
        Clause::new(&[2 * control, 2 * control + 1], CmpOp::Eq, 1),
        Clause::new(&[2 * target, 2 * target + 1], CmpOp::Eq, 1),
        Clause::new(&[a0], CmpOp::Eq, 0),
        Clause::new(&[a1], CmpOp::Eq, 0),
    ])?;
    Ok(GateBuild {
        qubits: q,
        circuit: c,
        herald_input: vec![0, 0],
        condition: Some(condition),
        success_probability: 1.0 / 9.0,
    })
}

/// Four-mode heralded controlled-sign unitary on
/// `(control |1>, target |1>, herald, herald)`. With one photon in each
/// herald mode and the heralds detected as `(1,1)`, it flips the sign of
/// |11> and scales the data amplitudes by `sqrt(2/27)`.
pub fn knill_cz_unitary() -> CMatrix {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    let p = (3.0 + s6).sqrt() / 3.0;
    let m = (3.0 - s6).sqrt() / 3.0;
    let h = ((3.0 + s6) / 2.0).sqrt() / 3.0;
    let k = (1.0 / 6.0 - 1.0 / (3.0 * s6)).sqrt();
    let rows = [
        [-1.0 / 3.0, -s2 / 3.0, s2 / 3.0, 2.0 / 3.0],
        [s2 / 3.0, -1.0 / 3.0, -2.0 / 3.0, s2 / 3.0],
        [-p, m, -h, k],
        [-m, -p, -k, -h],
    ];
    CMatrix::from_array(rows.map(|r| r.map(|x| Complex64::new(x, 0.0))))
}

/// Six-mode heralded CNOT core on `(c0, c1, t0, t1, a0, a1)`.
pub fn heralded_core() -> Circuit {
    let mut c = Circuit::new(6);
    let cz = ComponentSpec::unitary(knill_cz_unitary()).expect("stored matrix is unitary");
    c.add(2, ComponentSpec::bs(BeamSplitter::h(FRAC_PI_2))).expect("fits");
    c.add(0, ComponentSpec::Permutation(vec![0, 2, 1, 3, 4, 5])).expect("fits");
    c.add(2, cz).expect("fits");
    c.add(0, ComponentSpec::Permutation(vec![0, 2, 1, 3, 4, 5])).expect("fits");
    c.add(2, ComponentSpec::bs(BeamSplitter::h(FRAC_PI_2))).expect("fits");
    c
}

/// Heralded CNOT with two single-photon auxiliaries; succeeds with
/// probability 2/27 and is exact on success.
pub fn heralded_cnot(control: usize, target: usize, q: usize) -> Result<GateBuild> {
    check_pair(control, target, q)?;
    let (a0, a1) = (2 * q, 2 * q + 1);
    let mut c = Circuit::new(2 * q + 2);
    c.add_mapped(&heralded_core(), &[2 * control, 2 * control + 1, 2 * target, 2 * target + 1, a0, a1])?;
    let condition = PostSelect::new(vec![Clause::new(&[a0], CmpOp::Eq, 1), Clause::new(&[a1], CmpOp::Eq, 1)])?;
    Ok(GateBuild {
        qubits: q,
        circuit: c,
        herald_input: vec![1, 1],
        condition: Some(condition),
        success_probability: 2.0 / 27.0,
    })
}

/// Which CNOT realization a composite gate uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CnotScheme {
    PostSelected,
    Heralded,
}

pub fn cnot(scheme: CnotScheme, control: usize, target: usize, q: usize) -> Result<GateBuild> {
    match scheme {
        CnotScheme::PostSelected => ralph_cnot(control, target, q),
        CnotScheme::Heralded => heralded_cnot(control, target, q),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ControlledPauli {
    Z,
    Y,
}

/// CZ as `H_t CX H_t`, CY as `S_t CX S_t^†`.
pub fn controlled_pauli(
    kind: ControlledPauli,
    scheme: CnotScheme,
    control: usize,
    target: usize,
    q: usize,
) -> Result<GateBuild> {
    sequence(q, &controlled_pauli_steps(kind, scheme, control, target, q)?)
}

/// The three builds of [`controlled_pauli`], for splicing into longer
/// sequences.
pub fn controlled_pauli_steps(
    kind: ControlledPauli,
    scheme: CnotScheme,
    control: usize,
    target: usize,
    q: usize,
) -> Result<Vec<GateBuild>> {
    let (before, after) = match kind {
        ControlledPauli::Z => (Gate::H, Gate::H),
        ControlledPauli::Y => (Gate::Sdag, Gate::S),
    };
    Ok(vec![
        single_qubit_gate(before, target, q)?,
        cnot(scheme, control, target, q)?,
        single_qubit_gate(after, target, q)?,
    ])
}

/// Toffoli from six heralded CNOTs and T gates.
pub fn toffoli_decomposed(c0: usize, c1: usize, target: usize, q: usize) -> Result<GateBuild> {
    sequence(q, &toffoli_steps(c0, c1, target, q)?)
}

/// The fifteen builds of [`toffoli_decomposed`].
pub fn toffoli_steps(c0: usize, c1: usize, target: usize, q: usize) -> Result<Vec<GateBuild>> {
    check_pair(c0, c1, q)?;
    check_pair(c0, target, q)?;
    check_pair(c1, target, q)?;
    let g = |gate, i| single_qubit_gate(gate, i, q);
    let cx = |c, t| heralded_cnot(c, t, q);
    Ok(vec![
        g(Gate::H, target)?,
        cx(c1, target)?,
        g(Gate::Tdag, target)?,
        cx(c0, target)?,
        g(Gate::T, target)?,
        cx(c1, target)?,
        g(Gate::Tdag, target)?,
        cx(c0, target)?,
        g(Gate::T, c1)?,
        g(Gate::T, target)?,
        cx(c0, c1)?,
        g(Gate::H, target)?,
        g(Gate::T, c0)?,
        g(Gate::Tdag, c1)?,
        cx(c0, c1)?,
    ])
}

/// Run `builds` one after another on a shared `q`-qubit register.
///
/// Each build gets its own auxiliary modes. The first build's auxiliaries
/// sit at the far end of the register and the last build's right after the
/// data, so every build's auxiliaries are final once that build is done.
pub fn sequence(q: usize, builds: &[GateBuild]) -> Result<GateBuild> {
    let total: usize = builds.iter().map(GateBuild::aux_modes).sum();
    let modes = 2 * q + total;
    let mut circuit = Circuit::new(modes);
    let mut herald_input = vec![0u32; total];
    let mut condition: Option<PostSelect> = None;
    let mut success = 1.0;
    let mut used = 0;
    for b in builds {
        if b.qubits != q {
            return Err(Error::RegisterMismatch { expected: q, found: b.qubits });
        }
        let k = b.aux_modes();
        used += k;
        let start = 2 * q + total - used;
        let map: Vec<usize> = (0..2 * q).chain(start..start + k).collect();
        circuit.add_mapped(&b.circuit, &map)?;
        herald_input[start - 2 * q..start - 2 * q + k].copy_from_slice(&b.herald_input);
        if let Some(c) = &b.condition {
            let c = c.remap(|m| map[m]);
            condition = Some(match condition {
                Some(acc) => acc.and(&c),
                None => c,
            });
        }
        success *= b.success_probability;
    }
    Ok(GateBuild { qubits: q, circuit, herald_input, condition, success_probability: success })
}

/// The predicate string of a build's condition, if any.
pub fn condition_text(b: &GateBuild) -> Option<alloc::string::String> {
    b.condition.as_ref().map(|c| format!("{c}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodings() {
        assert_eq!(encode(&[0, 1], Encoding::DualRail).unwrap().occupations(), &[1, 0, 0, 1]);
        assert_eq!(encode(&[1, 1], Encoding::Polarization).unwrap().occupations(), &[0, 1, 0, 0]);
        assert_eq!(decode(&FockState::new(vec![0, 1, 1, 0]), Encoding::DualRail), Decoded::Bits(vec![1, 0]));
        assert_eq!(decode(&FockState::new(vec![1, 1]), Encoding::DualRail), Decoded::NonCodeword);
        let h1 = FockState::polarized(vec![0, 0, 1, 0]).unwrap();
        assert_eq!(decode(&h1, Encoding::Polarization), Decoded::Bits(vec![0, 0]));
    }

    #[test]
    fn gate_names() {
        assert_eq!(Gate::from_name("RX", Some(0.5)), Ok(Gate::Rx(0.5)));
        assert!(matches!(Gate::from_name("rz", None), Err(Error::InvalidGate(_))));
        assert!(matches!(Gate::from_name("foo", None), Err(Error::InvalidGate(_))));
    }

    #[test]
    fn knill_matrix_is_unitary() {
        assert!(knill_cz_unitary().unitarity_deviation() < 1e-14);
    }

    #[test]
    fn canonical_ralph_condition() {
        let b = ralph_cnot(0, 1, 2).unwrap();
        assert_eq!(condition_text(&b).unwrap(), "[0,1]==1 & [2,3]==1 & [4]==0 & [5]==0");
    }

    #[test]
    fn sequence_places_heralds_at_tail() {
        let b = sequence(2, &[heralded_cnot(0, 1, 2).unwrap(), heralded_cnot(1, 0, 2).unwrap()]).unwrap();
        assert_eq!(b.circuit.modes(), 8);
        assert_eq!(b.herald_input, vec![1, 1, 1, 1]);
        assert_eq!(condition_text(&b).unwrap(), "[6]==1 & [7]==1 & [4]==1 & [5]==1");
        assert!((b.success_probability - 4.0 / 729.0).abs() < 1e-15);
    }
}

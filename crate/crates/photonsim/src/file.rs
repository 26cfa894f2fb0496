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

//! JSON circuit files.
//!
//! A file is either an optical circuit over `modes` modes, or, once any
//! `gate` entry appears, a dual-rail register of `modes / 2` qubits whose
//! heralded gates bring their own auxiliary modes.

use photonsim_core::components::{BeamSplitter, BsConvention, ComponentSpec};
use photonsim_core::qubit::{
    cnot, controlled_pauli_steps, ralph_cnot, sequence, single_qubit_gate, swap, toffoli_steps, CnotScheme,
    ControlledPauli, Gate, GateBuild,
};
use photonsim_core::{CMatrix, Circuit, Complex64};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitFile {
    pub modes: usize,
    #[serde(default)]
    pub polarized: bool,
    /// Dual-rail qubits shown in reports; defaults to `modes / 2`.
    #[serde(default)]
    pub qubits: Option<usize>,
    #[serde(default)]
    pub components: Vec<Component>,
    /// Appended after `components`.
    #[serde(default)]
    pub gates: Vec<GateSpec>,
}

#[derive(Debug, Clone, Copy, Deserialize, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    H,
    Rx,
    Ry,
    Bs1,
    Bs2,
    Bs3,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Component {
    Bs {
        anchor: usize,
        #[serde(default)]
        convention: Convention,
        theta: Option<f64>,
        #[serde(default)]
        phi_tl: f64,
        #[serde(default)]
        phi_tr: f64,
        #[serde(default)]
        phi_bl: f64,
        #[serde(default)]
        phi_br: f64,
        #[serde(default)]
        phi_0: f64,
        #[serde(default)]
        phi_r: f64,
        #[serde(default)]
        phi_t: f64,
    },
    Ps {
        mode: usize,
        phi: f64,
    },
    Perm {
        anchor: usize,
        targets: Vec<usize>,
    },
    Wp {
        mode: usize,
        delta: f64,
        xi: f64,
    },
    Hwp {
        mode: usize,
        xi: f64,
    },
    Qwp {
        mode: usize,
        xi: f64,
    },
    Pr {
        mode: usize,
        theta: f64,
    },
    Pbs {
        anchor: usize,
    },
    /// Rows of `[re, im]` pairs.
    Unitary {
        anchor: usize,
        matrix: Vec<Vec<[f64; 2]>>,
    },
    /// A six-mode two-qubit CNOT laid out as data pairs then two auxiliaries.
    Catalog {
        anchor: usize,
        name: String,
    },
    Gate {
        name: String,
        qubits: Vec<usize>,
        theta: Option<f64>,
        #[serde(default)]
        scheme: Scheme,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateSpec {
    pub name: String,
    pub qubits: Vec<usize>,
    pub theta: Option<f64>,
    #[serde(default)]
    pub scheme: Scheme,
}

#[derive(Debug, Clone, Copy, Deserialize, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    #[default]
    Heralded,
    Postselected,
}

impl From<Scheme> for CnotScheme {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Heralded => CnotScheme::Heralded,
            Scheme::Postselected => CnotScheme::PostSelected,
        }
    }
}

/// What a file builds into.
#[derive(Debug, Clone)]
pub enum Built {
    Optical(Circuit),
    Qubits(GateBuild),
}

impl Built {
    pub fn circuit(&self) -> &Circuit {
        match self {
            Built::Optical(c) => c,
            Built::Qubits(b) => &b.circuit,
        }
    }
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

impl CircuitFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("circuit file: {e}")))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn all_gates(&self) -> impl Iterator<Item = Component> + '_ {
        self.components.iter().cloned().chain(self.gates.iter().map(|g| Component::Gate {
            name: g.name.clone(),
            qubits: g.qubits.clone(),
            theta: g.theta,
            scheme: g.scheme,
        }))
    }

    fn has_gates(&self) -> bool {
        !self.gates.is_empty() || self.components.iter().any(|c| matches!(c, Component::Gate { .. }))
    }

    pub fn qubit_count(&self) -> Option<usize> {
        match (self.qubits, self.polarized) {
            (Some(q), _) => Some(q),
            (None, false) => Some(self.modes / 2),
            (None, true) => None,
        }
    }

    pub fn build(&self) -> Result<Built, CliError> {
        if !self.has_gates() {
            let mut c = self.empty_circuit();
            for comp in &self.components {
                place(&mut c, comp)?;
            }
            return Ok(Built::Optical(c));
        }
        if self.polarized || !self.modes.is_multiple_of(2) {
            return Err(CliError::Input("gate entries need an unpolarized register with an even mode count".into()));
        }
        let q = self.modes / 2;
        if self.qubits.is_some_and(|n| n != q) {
            return Err(CliError::Input(format!("a gate file has {q} qubits on {} modes", self.modes)));
        }
        let mut builds = Vec::new();
        let mut pending = Circuit::new(self.modes);
        for comp in self.all_gates() {
            match comp {
                Component::Gate { name, qubits, theta, scheme } => {
                    if !pending.placements().is_empty() {
                        builds.push(plain(q, std::mem::replace(&mut pending, Circuit::new(self.modes))));
                    }
                    builds.extend(gate_builds(&name, &qubits, theta, scheme, q)?);
                }
                other => place(&mut pending, &other)?,
            }
        }
        if !pending.placements().is_empty() {
            builds.push(plain(q, pending));
        }
        Ok(Built::Qubits(sequence(q, &builds).map_err(input_error)?))
    }

    fn empty_circuit(&self) -> Circuit {
        if self.polarized {
            Circuit::new_polarized(self.modes)
        } else {
            Circuit::new(self.modes)
        }
    }
}

fn plain(q: usize, circuit: Circuit) -> GateBuild {
    GateBuild { qubits: q, circuit, herald_input: Vec::new(), condition: None, success_probability: 1.0 }
}

fn gate_builds(
    name: &str,
    qubits: &[usize],
    theta: Option<f64>,
    scheme: Scheme,
    q: usize,
) -> Result<Vec<GateBuild>, CliError> {
    let arity = |n: usize| {
        if qubits.len() == n {
            Ok(())
        } else {
            Err(CliError::Input(format!("gate {name} takes {n} qubits, got {}", qubits.len())))
        }
    };
    let builds = match name.to_ascii_lowercase().as_str() {
        "cx" | "cnot" => {
            arity(2)?;
            vec![cnot(scheme.into(), qubits[0], qubits[1], q)]
        }
        "cz" | "cy" => {
            arity(2)?;
            let kind = if name.eq_ignore_ascii_case("cz") { ControlledPauli::Z } else { ControlledPauli::Y };
            return controlled_pauli_steps(kind, scheme.into(), qubits[0], qubits[1], q).map_err(input_error);
        }
        "swap" => {
            arity(2)?;
            vec![swap(qubits[0], qubits[1], q)]
        }
        "ccx" | "toffoli" => {
            arity(3)?;
            return toffoli_steps(qubits[0], qubits[1], qubits[2], q).map_err(input_error);
        }
        _ => {
            arity(1)?;
            let gate = Gate::from_name(name, theta).map_err(input_error)?;
            vec![single_qubit_gate(gate, qubits[0], q)]
        }
    };
    builds.into_iter().map(|b| b.map_err(input_error)).collect()
}

fn beam_splitter(convention: Convention, theta: Option<f64>, corners: [f64; 4], campos: [f64; 3]) -> BeamSplitter {
    let conv = match convention {
        Convention::H => BsConvention::H,
        Convention::Rx => BsConvention::Rx,
        Convention::Ry => BsConvention::Ry,
        Convention::Bs1 => BsConvention::Bs1,
        Convention::Bs2 => BsConvention::Bs2,
        Convention::Bs3 => BsConvention::Bs3,
    };
    let mut b = BeamSplitter::new(conv);
    if let Some(t) = theta {
        b.theta = t;
    }
    let [tl, tr, bl, br] = corners;
    let [p0, pr, pt] = campos;
    b = b.with_corners(tl, tr, bl, br);
    b.phi_0 = p0;
    b.phi_r = pr;
    b.phi_t = pt;
    b
}

fn place(c: &mut Circuit, comp: &Component) -> Result<(), CliError> {
    let (anchor, spec) = match comp {
        Component::Bs { anchor, convention, theta, phi_tl, phi_tr, phi_bl, phi_br, phi_0, phi_r, phi_t } => {
            let b = beam_splitter(*convention, *theta, [*phi_tl, *phi_tr, *phi_bl, *phi_br], [*phi_0, *phi_r, *phi_t]);
            b.matrix().map_err(input_error)?;
            (*anchor, ComponentSpec::bs(b))
        }
        Component::Ps { mode, phi } => (*mode, ComponentSpec::ps(*phi)),
        Component::Perm { anchor, targets } => (*anchor, ComponentSpec::perm(targets).map_err(input_error)?),
        Component::Wp { mode, delta, xi } => (*mode, ComponentSpec::wp(*delta, *xi)),
        Component::Hwp { mode, xi } => (*mode, ComponentSpec::hwp(*xi)),
        Component::Qwp { mode, xi } => (*mode, ComponentSpec::qwp(*xi)),
        Component::Pr { mode, theta } => (*mode, ComponentSpec::pr(*theta)),
        Component::Pbs { anchor } => (*anchor, ComponentSpec::pbs()),
        Component::Unitary { anchor, matrix } => {
            let rows: Vec<Vec<Complex64>> =
                matrix.iter().map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
            let m = CMatrix::from_rows(&rows).map_err(input_error)?;
            (*anchor, ComponentSpec::unitary(m).map_err(input_error)?)
        }
        Component::Catalog { anchor, name } => {
            let sub = catalog(name)?;
            c.add_circuit(*anchor, &sub).map_err(input_error)?;
            return Ok(());
        }
        Component::Gate { .. } => unreachable!("gates are sequenced separately"),
    };
    c.add(anchor, spec).map_err(input_error)?;
    Ok(())
}

/// Six-mode CNOTs: control pair, target pair, two auxiliaries.
pub fn catalog(name: &str) -> Result<Circuit, CliError> {
    let build = match name.to_ascii_lowercase().as_str() {
        "heralded cnot" => cnot(CnotScheme::Heralded, 0, 1, 2),
        "postprocessed cnot" => ralph_cnot(0, 1, 2),
        _ => return Err(CliError::Input(format!("unknown catalog entry {name:?}"))),
    };
    Ok(build.map_err(input_error)?.circuit)
}

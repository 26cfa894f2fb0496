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

use photonsim_core::grover::{
    detection_circuit, dual_rail_grover_build, grover_circuit, init_circuit, inversion_circuit, oracle_circuit,
    run_dual_rail, run_grover, GroverTarget, OracleVariant, READOUT_LABELS,
};
use photonsim_core::qubit::{encode, Encoding};
use photonsim_core::simulate::output_state;
use photonsim_core::{Circuit, Complex64, FockState, StateVector};

fn codeword(t: GroverTarget) -> FockState {
    encode(&[t.0, t.1], Encoding::Polarization).unwrap()
}

fn run(c: &Circuit, input: &StateVector) -> StateVector {
    output_state(&c.compile().unwrap(), input, 16).unwrap()
}

fn uniform() -> StateVector {
    run(&init_circuit(), &FockState::polarized(vec![0, 0, 1, 0]).unwrap().into())
}

fn marked(t: GroverTarget, v: OracleVariant) -> StateVector {
    run(&oracle_circuit(t, v), &uniform())
}

#[test]
fn init_reaches_uniform_superposition() {
    let psi = uniform();
    for t in GroverTarget::ALL {
        assert!((psi.amplitude(&codeword(t)) - Complex64::new(0.5, 0.0)).norm() < 1e-12, "{t}");
    }
}

#[test]
fn oracle_marks_only_the_target() {
    for v in [OracleVariant::PerMode, OracleVariant::UniformPr0] {
        for t in GroverTarget::ALL {
            let psi = marked(t, v);
            let sign = psi.amplitude(&codeword(t)) * 2.0;
            assert!((sign.norm() - 1.0).abs() < 1e-12);
            for other in GroverTarget::ALL.into_iter().filter(|&o| o != t) {
                let a = psi.amplitude(&codeword(other)) * 2.0;
                assert!((a + sign).norm() < 1e-12, "{t} {v:?}: {other} has {a}");
            }
        }
    }
}

#[test]
fn oracle_variants_agree_up_to_sign() {
    for t in GroverTarget::ALL {
        let a = marked(t, OracleVariant::PerMode);
        let b = marked(t, OracleVariant::UniformPr0);
        let phase = a.inner_product(&b).unwrap();
        assert!((phase.norm() - 1.0).abs() < 1e-12 && phase.im.abs() < 1e-12, "{t}: {phase}");
    }
}

#[test]
fn inversion_concentrates_on_target() {
    for t in GroverTarget::ALL {
        let out = run(&inversion_circuit(), &marked(t, OracleVariant::PerMode));
        assert!((out.amplitude(&codeword(t)).norm_sqr() - 1.0).abs() < 1e-12, "{t}");
    }
}

#[test]
fn detection_sends_each_codeword_to_its_label() {
    let u = detection_circuit().compile().unwrap();
    for t in GroverTarget::ALL {
        let mut occ = codeword(t).occupations().to_vec();
        occ.extend([0; 4]);
        let out = output_state(&u, &FockState::polarized(occ).unwrap().into(), 16).unwrap();
        assert_eq!(out.len(), 1);
        let (s, a) = out.iter().next().unwrap();
        assert!((a.norm() - 1.0).abs() < 1e-12);
        let hit: Vec<usize> = (0..4).filter(|&m| s.mode_count(m) == 1).collect();
        assert_eq!(hit.len(), 1);
        assert_eq!(READOUT_LABELS[hit[0]], t);
    }
}

#[test]
fn full_circuit_is_unitary_and_sampling_hits_target() {
    for t in GroverTarget::ALL {
        assert!(grover_circuit(t, OracleVariant::UniformPr0).compile().unwrap().is_unitary(1e-12));
        let r = run_grover(t, OracleVariant::PerMode, 500, 9).unwrap();
        assert_eq!(r.counts.get(&t), Some(&500));
        assert!((r.output.norm_sqr() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn dual_rail_without_oracle_stays_uniform() {
    let r = run_dual_rail(&dual_rail_grover_build(false).unwrap(), 0, 0).unwrap();
    for p in r.data.values() {
        assert!((p - 0.25).abs() < 1e-9);
    }
    assert_eq!(r.data.len(), 4);
    assert!(r.counts.is_empty());
}

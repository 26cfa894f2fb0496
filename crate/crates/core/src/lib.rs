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

//! Exact strong simulation of lossless linear-optical circuits.
//!
//! States live in the Fock basis of a register of spatial modes, optionally
//! split into H and V polarization channels. Components compile to a channel
//! unitary; multi-photon amplitudes are permanents of its sub-matrices.
//! On top sit a post-selection language, dual-rail and polarization qubit
//! gates, and two Grover pipelines.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod circuit;
pub mod components;
pub mod error;
pub mod fock;
pub mod grover;
pub mod matrix;
pub mod notation;
pub mod postselect;
pub mod qubit;
pub mod simulate;

pub use num_complex::Complex64;

pub use circuit::{Circuit, PlacedComponent};
pub use components::{BeamSplitter, BsConvention, ComponentSpec};
pub use error::{Error, Result};
pub use fock::{make_state, oracle_evolve, Channel, FockState, Polarization, StateVector};
pub use matrix::CMatrix;
pub use notation::{parse_state, print_state};
pub use postselect::{parse_postselect, PostSelect, Processor, Route, RunResult};
pub use simulate::{amplitude, distribution, permanent, sample, Distribution, SampleCount};

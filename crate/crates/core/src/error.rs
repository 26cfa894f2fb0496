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

use alloc::string::String;
use core::fmt;

/// Errors raised by the simulator core.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A negative or otherwise unusable occupation number.
    InvalidOccupation(String),
    /// Two objects disagree on the number of modes or channels.
    RegisterMismatch { expected: usize, found: usize },
    /// A matrix failed the unitarity check; carries the largest deviation
    /// of `U^† U` from the identity.
    NotUnitary { deviation: f64 },
    /// A component was built with inconsistent parameters.
    InvalidSpec(String),
    /// A component or gate does not fit in the register.
    OutOfRange(String),
    /// A polarization component was placed on an unpolarized register.
    PolarizationMismatch,
    /// The photon number exceeds the configured permanent cap.
    TooLarge { photons: usize, cap: usize },
    /// A state vector mixes different photon numbers.
    MixedSector,
    /// Malformed text; `offset` is the byte position of the problem.
    Parse { offset: usize, message: String },
    /// A state string mixes polarized and plain entries.
    MixedRegister,
    /// A post-selection clause names a mode outside the register.
    Eval(String),
    /// Unknown gate name or missing gate parameter.
    InvalidGate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOccupation(m) => write!(f, "invalid occupation: {m}"),
            Error::RegisterMismatch { expected, found } => {
                write!(f, "register mismatch: expected {expected}, found {found}")
            }
            Error::NotUnitary { deviation } => {
                write!(f, "matrix is not unitary (deviation {deviation:e})")
            }
            Error::InvalidSpec(m) => write!(f, "invalid component: {m}"),
            Error::OutOfRange(m) => write!(f, "out of range: {m}"),
            Error::PolarizationMismatch => {
                write!(f, "polarization component on an unpolarized register")
            }
            Error::TooLarge { photons, cap } => {
                write!(f, "{photons} photons exceed the permanent cap of {cap}")
            }
            Error::MixedSector => write!(f, "state mixes different photon numbers"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::MixedRegister => {
                write!(f, "state mixes polarized and unpolarized entries")
            }
            Error::Eval(m) => write!(f, "post-selection error: {m}"),
            Error::InvalidGate(m) => write!(f, "invalid gate: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

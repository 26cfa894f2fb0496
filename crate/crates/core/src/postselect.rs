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

//! Post-selection predicates and the processor that applies them.
//!
//! A predicate is a conjunction of clauses `[m0,m1,...] op value`, each
//! comparing the photon count summed over the listed modes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::fock::{FockState, StateVector};
use crate::simulate::{basis_size, evolve_with, output_state, Distribution, DEFAULT_PERMANENT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Lt,
    Gt,
    Le,
    Ge,
}

impl CmpOp {
    fn holds(self, a: u32, b: u32) -> bool {
        match self {
            CmpOp::Eq => a == b,
            CmpOp::Lt => a < b,
            CmpOp::Gt => a > b,
            CmpOp::Le => a <= b,
            CmpOp::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Eq => "==",
            CmpOp::Lt => "<",
            CmpOp::Gt => ">",
            CmpOp::Le => "<=",
            CmpOp::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub modes: Vec<usize>,
    pub op: CmpOp,
    pub value: u32,
}

impl Clause {
    pub fn new(modes: &[usize], op: CmpOp, value: u32) -> Self {
        Clause { modes: modes.to_vec(), op, value }
    }

    pub fn eval(&self, s: &FockState) -> Result<bool> {
        let mut total = 0;
        for &m in &self.modes {
            if m >= s.modes() {
                return Err(Error::Eval(format!("mode {m} outside a {}-mode register", s.modes())));
            }
            total += s.mode_count(m);
        }
        Ok(self.op.holds(total, self.value))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.modes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]{}{}", self.op.symbol(), self.value)
    }
}

/// A conjunction of clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostSelect {
    clauses: Vec<Clause>,
}

impl PostSelect {
    pub fn new(clauses: Vec<Clause>) -> Result<Self> {
        if clauses.is_empty() || clauses.iter().any(|c| c.modes.is_empty()) {
            return Err(Error::InvalidSpec("a predicate needs at least one non-empty clause".into()));
        }
        Ok(PostSelect { clauses })
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn eval(&self, s: &FockState) -> Result<bool> {
        for c in &self.clauses {
            if !c.eval(s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Conjunction of `self` and `other`.
    pub fn and(&self, other: &PostSelect) -> PostSelect {
        let mut clauses = self.clauses.clone();
        clauses.extend(other.clauses.iter().cloned());
        PostSelect { clauses }
    }

    /// Rename every mode through `f`.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> PostSelect {
        let clauses = self
            .clauses
            .iter()
            .map(|c| Clause { modes: c.modes.iter().map(|&m| f(m)).collect(), ..c.clone() })
            .collect();
        PostSelect { clauses }
    }

    /// Fail with [`Error::Eval`] if a clause names a mode `>= modes`.
    pub fn check_modes(&self, modes: usize) -> Result<()> {
        for c in &self.clauses {
            if let Some(m) = c.modes.iter().find(|&&m| m >= modes) {
                return Err(Error::Eval(format!("mode {m} outside a {modes}-mode register")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for PostSelect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn int(&mut self) -> Result<u64> {
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|d| d.parse().ok())
            .ok_or(Error::Parse { offset: start, message: "integer too large".into() })
    }

    fn op(&mut self) -> Result<CmpOp> {
        let rest = &self.src[self.pos.min(self.src.len())..];
        let (op, len) = match rest {
            [b'=', b'=', ..] => (CmpOp::Eq, 2),
            [b'<', b'=', ..] => (CmpOp::Le, 2),
            [b'>', b'=', ..] => (CmpOp::Ge, 2),
            [b'<', ..] => (CmpOp::Lt, 1),
            [b'>', ..] => (CmpOp::Gt, 1),
            _ => return Err(self.err("expected a comparison operator")),
        };
        self.pos += len;
        Ok(op)
    }

    fn clause(&mut self) -> Result<Clause> {
        if self.peek() != Some(b'[') {
            return Err(self.err("expected '['"));
        }
        self.pos += 1;
        let mut modes = Vec::new();
        loop {
            let m = self.int()?;
            modes.push(usize::try_from(m).map_err(|_| self.err("mode index too large"))?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
        self.peek();
        let op = self.op()?;
        let start = self.pos;
        let value = u32::try_from(self.int()?)
            .map_err(|_| Error::Parse { offset: start, message: "value too large".into() })?;
        Ok(Clause { modes, op, value })
    }
}

/// Parse `clause ('&' clause)*`. Mode ranges are checked at evaluation.
pub fn parse_postselect(text: &str) -> Result<PostSelect> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut clauses = alloc::vec![lx.clause()?];
    loop {
        match lx.peek() {
            None => break,
            Some(b'&') => {
                lx.pos += 1;
                clauses.push(lx.clause()?);
            }
            Some(_) => return Err(lx.err("expected '&' or end of input")),
        }
    }
    Ok(PostSelect { clauses })
}

/// How [`Processor::run`] computes the output state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Permanent route for small output sectors, sequential otherwise.
    Auto,
    Permanent,
    Sequential,
}

/// Output sectors up to this size use the permanent route under `Auto`.
pub const DENSE_LIMIT: f64 = 16384.0;

/// A circuit, an input and an optional terminal post-selection.
#[derive(Clone, Debug)]
pub struct Processor {
    pub circuit: Circuit,
    pub input: StateVector,
    pub postselect: Option<PostSelect>,
    pub min_detected_photons: usize,
    pub permanent_cap: usize,
    pub route: Route,
}

/// Result of a post-selected run.
#[derive(Clone, Debug)]
pub struct RunResult {
    /// Output terms passing the predicate, not renormalized.
    pub selected: StateVector,
    pub success_probability: f64,
    /// Renormalized probabilities; empty when nothing passes.
    pub conditioned: Distribution,
}

impl RunResult {
    /// Selected amplitudes divided by `sqrt(success_probability)`.
    pub fn conditioned_state(&self) -> StateVector {
        let mut s = self.selected.clone();
        if self.success_probability > 0.0 {
            s.scale(Complex64::new(1.0 / self.success_probability.sqrt(), 0.0));
        }
        s
    }
}

impl Processor {
    pub fn new(circuit: Circuit, input: StateVector) -> Result<Self> {
        if input.channels() != circuit.channels() {
            return Err(Error::RegisterMismatch { expected: circuit.channels(), found: input.channels() });
        }
        if input.is_polarized() != circuit.is_polarized() {
            return Err(Error::PolarizationMismatch);
        }
        Ok(Processor {
            circuit,
            input,
            postselect: None,
            min_detected_photons: 0,
            permanent_cap: DEFAULT_PERMANENT_CAP,
            route: Route::Auto,
        })
    }

    pub fn with_postselect(mut self, p: PostSelect) -> Self {
        self.postselect = Some(p);
        self
    }

    pub fn with_min_detected_photons(mut self, n: usize) -> Self {
        self.min_detected_photons = n;
        self
    }

    pub fn with_route(mut self, route: Route) -> Self {
        self.route = route;
        self
    }

    pub fn with_permanent_cap(mut self, cap: usize) -> Self {
        self.permanent_cap = cap;
        self
    }

    /// Evolve, keep the outcomes passing the predicate and the photon
    /// filter, and renormalize.
    pub fn run(&self) -> Result<RunResult> {
        if let Some(p) = &self.postselect {
            p.check_modes(self.circuit.modes())?;
        }
        let n = self.input.photon_sector()?.unwrap_or(0);
        let route = match self.route {
            Route::Auto if basis_size(n, self.circuit.channels()) <= DENSE_LIMIT => Route::Permanent,
            Route::Auto => Route::Sequential,
            r => r,
        };
        let mut selected = match route {
            Route::Permanent => {
                let u = self.circuit.compile()?;
                output_state(&u, &self.input, self.permanent_cap)?
            }
            _ => self.sequential()?,
        };
        let min = self.min_detected_photons;
        let mut failure = None;
        selected.retain(|s| {
            if s.photons() < min {
                return false;
            }
            match self.postselect.as_ref().map(|p| p.eval(s)) {
                None | Some(Ok(true)) => true,
                Some(Ok(false)) => false,
                Some(Err(e)) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let success_probability = selected.norm_sqr();
        let mut entries = BTreeMap::new();
        if success_probability > 0.0 {
            for (s, a) in selected.iter() {
                entries.insert(s.clone(), a.norm_sqr() / success_probability);
            }
        }
        let conditioned = Distribution::from_entries(entries, n);
        Ok(RunResult { selected, success_probability, conditioned })
    }

    /// Sequential route. A clause is applied as soon as no later placement
    /// touches any of its modes, which keeps heralded branches small.
    fn sequential(&self) -> Result<StateVector> {
        let actions = self.circuit.local_actions()?;
        let mut last_touch: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, a) in actions.iter().enumerate() {
            for ch in a.touched(0.0) {
                let mode = if self.circuit.is_polarized() { ch / 2 } else { ch };
                last_touch.insert(mode, k + 1);
            }
        }
        let clauses = self.postselect.as_ref().map_or(&[][..], |p| p.clauses());
        let mut hooks: Vec<(usize, _)> = clauses
            .iter()
            .map(|c| {
                let at = c.modes.iter().map(|m| last_touch.get(m).copied().unwrap_or(0)).max();
                (at.unwrap_or(0), move |s: &FockState| c.eval(s).unwrap_or(false))
            })
            .collect();
        evolve_with(&self.circuit, &self.input, self.permanent_cap, &mut hooks)
    }
}

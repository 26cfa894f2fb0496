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

//! Placement of components on a register and compilation to one unitary.

use alloc::format;
use alloc::vec::Vec;

use crate::components::ComponentSpec;
use crate::error::{Error, Result};
use crate::fock::Polarization;
use crate::matrix::CMatrix;

/// A component placed on consecutive modes starting at `anchor`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlacedComponent {
    pub spec: ComponentSpec,
    pub anchor: usize,
    /// Reserved; a placement restricted to one polarization is rejected.
    pub pol_target: Option<Polarization>,
}

/// The action of one placement on register channels.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalAction {
    pub channels: Vec<usize>,
    pub matrix: CMatrix,
}

impl LocalAction {
    /// Register channels whose row or column differs from the identity.
    pub fn touched(&self, tol: f64) -> Vec<usize> {
        (0..self.channels.len()).filter(|&k| !self.matrix.is_identity_at(k, tol)).map(|k| self.channels[k]).collect()
    }
}

/// An ordered list of placements; the first placement acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    modes: usize,
    polarized: bool,
    placements: Vec<PlacedComponent>,
}

impl Circuit {
    pub fn new(modes: usize) -> Self {
        Circuit { modes, polarized: false, placements: Vec::new() }
    }

    pub fn new_polarized(modes: usize) -> Self {
        Circuit { modes, polarized: true, placements: Vec::new() }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn is_polarized(&self) -> bool {
        self.polarized
    }

    /// Channel count: `modes`, or `2 * modes` on a polarized register.
    pub fn channels(&self) -> usize {
        if self.polarized {
            2 * self.modes
        } else {
            self.modes
        }
    }

    pub fn placements(&self) -> &[PlacedComponent] {
        &self.placements
    }

    /// Append `spec` at `anchor`.
    pub fn add(&mut self, anchor: usize, spec: ComponentSpec) -> Result<&mut Self> {
        self.push(PlacedComponent { spec, anchor, pol_target: None })?;
        Ok(self)
    }

    /// Append a placement, validating its fit and polarization.
    pub fn push(&mut self, p: PlacedComponent) -> Result<()> {
        if p.pol_target.is_some() {
            return Err(Error::InvalidSpec("polarization-restricted placements are reserved".into()));
        }
        let w = p.spec.width();
        if w == 0 || p.anchor + w > self.modes {
            return Err(Error::OutOfRange(format!(
                "component of width {w} at mode {} on a {}-mode register",
                p.anchor, self.modes
            )));
        }
        if p.spec.is_polarizing() && !self.polarized {
            return Err(Error::PolarizationMismatch);
        }
        self.placements.push(p);
        Ok(())
    }

    /// Append every placement of `sub`, shifted by `anchor`.
    pub fn add_circuit(&mut self, anchor: usize, sub: &Circuit) -> Result<&mut Self> {
        if anchor + sub.modes > self.modes {
            return Err(Error::OutOfRange(format!(
                "{}-mode circuit at mode {anchor} on a {}-mode register",
                sub.modes, self.modes
            )));
        }
        for p in &sub.placements {
            self.push(PlacedComponent { anchor: p.anchor + anchor, ..p.clone() })?;
        }
        Ok(self)
    }

    /// Append `sub` so that its mode `k` lands on register mode `modes[k]`.
    ///
    /// When the targets are not already consecutive, `sub` is wrapped in a
    /// permutation that moves them into a window and its inverse. Modes that
    /// neither belong to `modes` nor to the window are left in place.
    pub fn add_mapped(&mut self, sub: &Circuit, modes: &[usize]) -> Result<&mut Self> {
        let w = sub.modes;
        if modes.len() != w {
            return Err(Error::RegisterMismatch { expected: w, found: modes.len() });
        }
        let mut seen = alloc::vec![false; self.modes];
        for &m in modes {
            if m >= self.modes || seen[m] {
                return Err(Error::OutOfRange(format!("mode {m} is repeated or outside the register")));
            }
            seen[m] = true;
        }
        if w == 0 {
            return Ok(self);
        }
        let start = modes.iter().copied().min().unwrap_or(0).min(self.modes - w);
        let window = start..start + w;
        let mut sigma: Vec<usize> = (0..self.modes).collect();
        for (k, &m) in modes.iter().enumerate() {
            sigma[m] = start + k;
        }
        let displaced = window.clone().filter(|i| !seen[*i]);
        let vacated = modes.iter().copied().filter(|m| !window.contains(m));
        let mut vacated: Vec<usize> = vacated.collect();
        vacated.sort_unstable();
        for (d, v) in displaced.zip(vacated) {
            sigma[d] = v;
        }
        let moved: Vec<usize> = (0..self.modes).filter(|&i| sigma[i] != i).collect();
        if moved.is_empty() {
            return self.add_circuit(start, sub);
        }
        let lo = moved[0];
        let hi = moved[moved.len() - 1];
        let fwd: Vec<usize> = (lo..=hi).map(|i| sigma[i] - lo).collect();
        let mut inv = alloc::vec![0; fwd.len()];
        for (i, &t) in fwd.iter().enumerate() {
            inv[t] = i;
        }
        self.add(lo, ComponentSpec::perm(&fwd)?)?;
        self.add_circuit(start, sub)?;
        self.add(lo, ComponentSpec::perm(&inv)?)?;
        Ok(self)
    }

    /// Placements of `self` followed by those of `other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.modes != other.modes {
            return Err(Error::RegisterMismatch { expected: self.modes, found: other.modes });
        }
        if self.polarized != other.polarized {
            return Err(Error::PolarizationMismatch);
        }
        let mut c = self.clone();
        c.placements.extend(other.placements.iter().cloned());
        Ok(c)
    }

    /// Per-placement channel actions, in placement order.
    pub fn local_actions(&self) -> Result<Vec<LocalAction>> {
        self.placements
            .iter()
            .map(|p| {
                let (channels, matrix) = p.spec.channel_action(p.anchor, self.polarized)?;
                Ok(LocalAction { channels, matrix })
            })
            .collect()
    }

    /// The channel unitary: later placements multiply on the left.
    pub fn compile(&self) -> Result<CMatrix> {
        let n = self.channels();
        let mut u = CMatrix::identity(n);
        for a in self.local_actions()? {
            u = &a.matrix.embed(n, &a.channels) * &u;
        }
        Ok(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{perm_matrix, BeamSplitter};

    #[test]
    fn placement_errors() {
        let mut c = Circuit::new(4);
        assert!(matches!(c.add(3, ComponentSpec::bs(BeamSplitter::default())), Err(Error::OutOfRange(_))));
        assert_eq!(c.add(0, ComponentSpec::pbs()).err(), Some(Error::PolarizationMismatch));
        assert!(c.add(0, ComponentSpec::perm(&[1, 0]).unwrap()).is_ok());
    }

    #[test]
    fn empty_compiles_to_identity() {
        assert_eq!(Circuit::new(3).compile().unwrap(), CMatrix::identity(3));
        assert_eq!(Circuit::new_polarized(2).compile().unwrap(), CMatrix::identity(4));
    }

    #[test]
    fn order_is_left_multiplication() {
        let mut a = Circuit::new(3);
        a.add(0, ComponentSpec::perm(&[1, 0]).unwrap()).unwrap();
        let mut b = Circuit::new(3);
        b.add(1, ComponentSpec::perm(&[1, 0]).unwrap()).unwrap();
        let ab = a.compose(&b).unwrap().compile().unwrap();
        let want = &b.compile().unwrap() * &a.compile().unwrap();
        assert!(ab.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn mapped_embedding_matches_direct_permutation() {
        let mut sub = Circuit::new(2);
        sub.add(0, ComponentSpec::perm(&[1, 0]).unwrap()).unwrap();
        let mut c = Circuit::new(6);
        c.add_mapped(&sub, &[4, 1]).unwrap();
        let u = c.compile().unwrap();
        let want = perm_matrix(&[0, 4, 2, 3, 1, 5]).unwrap();
        assert!(u.max_abs_diff(&want) < 1e-15);
        for a in c.local_actions().unwrap() {
            let t = a.touched(0.0);
            assert!(!t.contains(&0) && !t.contains(&5));
        }
    }

    #[test]
    fn mapped_contiguous_needs_no_permutation() {
        let mut sub = Circuit::new(2);
        sub.add(0, ComponentSpec::bs(BeamSplitter::default())).unwrap();
        let mut c = Circuit::new(4);
        c.add_mapped(&sub, &[2, 3]).unwrap();
        assert_eq!(c.placements().len(), 1);
        assert_eq!(c.placements()[0].anchor, 2);
    }
}

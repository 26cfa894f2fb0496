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

//! Fock states, sparse state vectors and creation-operator algebra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, UNITARY_TOL};

/// Amplitudes below this magnitude are dropped after each operation.
pub const PRUNE_TOL: f64 = 1e-12;

/// Polarization of a photon in the horizontal/vertical basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarization {
    H,
    V,
}

impl Polarization {
    /// Offset of this polarization inside a spatial mode's channel pair.
    pub fn offset(self) -> usize {
        match self {
            Polarization::H => 0,
            Polarization::V => 1,
        }
    }
}

/// A spatial mode, optionally refined by polarization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Channel {
    pub mode: usize,
    pub polarization: Option<Polarization>,
}

impl Channel {
    pub fn spatial(mode: usize) -> Self {
        Channel { mode, polarization: None }
    }

    pub fn polarized(mode: usize, p: Polarization) -> Self {
        Channel { mode, polarization: Some(p) }
    }

    /// Index of the channel in a register; polarized registers interleave
    /// H and V channels per spatial mode.
    pub fn index(&self, polarized: bool) -> Result<usize> {
        match (polarized, self.polarization) {
            (false, None) => Ok(self.mode),
            (true, Some(p)) => Ok(2 * self.mode + p.offset()),
            _ => Err(Error::PolarizationMismatch),
        }
    }
}

/// Occupation numbers of every channel in a register.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockState {
    occupations: Vec<u32>,
    polarized: bool,
}

impl FockState {
    /// Unpolarized state with one occupation per spatial mode.
    pub fn new(occupations: Vec<u32>) -> Self {
        FockState { occupations, polarized: false }
    }

    /// Polarized state from channel occupations `[m0H, m0V, m1H, ...]`.
    pub fn polarized(occupations: Vec<u32>) -> Result<Self> {
        if !occupations.len().is_multiple_of(2) {
            return Err(Error::InvalidOccupation("a polarized register needs an even number of channels".into()));
        }
        Ok(FockState { occupations, polarized: true })
    }

    /// Vacuum on `channels` channels.
    pub fn vacuum(channels: usize, polarized: bool) -> Self {
        FockState { occupations: vec![0; channels], polarized }
    }

    pub fn occupations(&self) -> &[u32] {
        &self.occupations
    }

    pub fn is_polarized(&self) -> bool {
        self.polarized
    }

    pub fn channels(&self) -> usize {
        self.occupations.len()
    }

    /// Number of spatial modes.
    pub fn modes(&self) -> usize {
        if self.polarized {
            self.occupations.len() / 2
        } else {
            self.occupations.len()
        }
    }

    pub fn photons(&self) -> usize {
        self.occupations.iter().map(|&n| n as usize).sum()
    }

    /// Photons in spatial mode `m`, summed over polarizations.
    pub fn mode_count(&self, m: usize) -> u32 {
        if self.polarized {
            self.occupations[2 * m] + self.occupations[2 * m + 1]
        } else {
            self.occupations[m]
        }
    }

    /// Channel list with each channel repeated by its occupation.
    pub fn expanded(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.photons());
        for (c, &n) in self.occupations.iter().enumerate() {
            v.extend(core::iter::repeat_n(c, n as usize));
        }
        v
    }

    /// `sqrt(prod n_c!)`, the normalization of the creation monomial.
    pub fn norm_factor(&self) -> f64 {
        self.occupations.iter().map(|&n| factorial(n)).product::<f64>().sqrt()
    }

    pub(crate) fn occupations_mut(&mut self) -> &mut Vec<u32> {
        &mut self.occupations
    }

    pub(crate) fn with_occupations(&self, occupations: Vec<u32>) -> Self {
        FockState { occupations, polarized: self.polarized }
    }
}

/// Build a state from signed occupations; negative entries are rejected.
pub fn make_state(occupations: &[i64], polarized: bool) -> Result<FockState> {
    let mut v = Vec::with_capacity(occupations.len());
    for (i, &n) in occupations.iter().enumerate() {
        let n = u32::try_from(n).map_err(|_| Error::InvalidOccupation(alloc::format!("channel {i} holds {n}")))?;
        v.push(n);
    }
    if polarized {
        FockState::polarized(v)
    } else {
        Ok(FockState::new(v))
    }
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Sparse superposition of Fock states on a fixed register.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    channels: usize,
    polarized: bool,
    terms: BTreeMap<FockState, Complex64>,
}

impl StateVector {
    pub fn empty(channels: usize, polarized: bool) -> Self {
        StateVector { channels, polarized, terms: BTreeMap::new() }
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn is_polarized(&self) -> bool {
        self.polarized
    }

    /// Add `amplitude` to the coefficient of `state`.
    pub fn add(&mut self, state: FockState, amplitude: Complex64) -> Result<()> {
        if state.channels() != self.channels {
            return Err(Error::RegisterMismatch { expected: self.channels, found: state.channels() });
        }
        if state.is_polarized() != self.polarized {
            return Err(Error::PolarizationMismatch);
        }
        *self.terms.entry(state).or_insert(Complex64::new(0.0, 0.0)) += amplitude;
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, state: FockState, amplitude: Complex64) {
        *self.terms.entry(state).or_insert(Complex64::new(0.0, 0.0)) += amplitude;
    }

    pub fn amplitude(&self, state: &FockState) -> Complex64 {
        self.terms.get(state).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    /// Rescale to unit norm; a zero vector is left unchanged.
    pub fn normalize(&mut self) {
        let n = self.norm_sqr().sqrt();
        if n > 0.0 {
            for a in self.terms.values_mut() {
                *a /= n;
            }
        }
    }

    pub fn scale(&mut self, s: Complex64) {
        for a in self.terms.values_mut() {
            *a *= s;
        }
    }

    /// Drop terms whose magnitude is below `tol`.
    pub fn prune(&mut self, tol: f64) {
        self.terms.retain(|_, a| a.norm() >= tol);
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&FockState) -> bool) {
        self.terms.retain(|s, _| keep(s));
    }

    /// Common photon number of all terms; `None` for an empty vector.
    pub fn photon_sector(&self) -> Result<Option<usize>> {
        let mut n = None;
        for s in self.terms.keys() {
            match n {
                None => n = Some(s.photons()),
                Some(k) if k != s.photons() => return Err(Error::MixedSector),
                _ => {}
            }
        }
        Ok(n)
    }

    /// `<self|other>`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.channels != other.channels {
            return Err(Error::RegisterMismatch { expected: self.channels, found: other.channels });
        }
        Ok(self.terms.iter().filter_map(|(s, a)| other.terms.get(s).map(|b| a.conj() * b)).sum())
    }

    /// Apply the creation operator on `channel`.
    pub fn create(&self, channel: Channel) -> Result<StateVector> {
        let c = self.channel_index(channel)?;
        let mut out = StateVector::empty(self.channels, self.polarized);
        for (s, &a) in &self.terms {
            let mut t = s.clone();
            let occ = t.occupations_mut();
            occ[c] += 1;
            let f = f64::from(occ[c]).sqrt();
            out.add_unchecked(t, a * f);
        }
        Ok(out)
    }

    /// Apply the annihilation operator on `channel`.
    pub fn annihilate(&self, channel: Channel) -> Result<StateVector> {
        let c = self.channel_index(channel)?;
        let mut out = StateVector::empty(self.channels, self.polarized);
        for (s, &a) in &self.terms {
            let n = s.occupations()[c];
            if n == 0 {
                continue;
            }
            let mut t = s.clone();
            t.occupations_mut()[c] -= 1;
            out.add_unchecked(t, a * f64::from(n).sqrt());
        }
        Ok(out)
    }

    fn channel_index(&self, channel: Channel) -> Result<usize> {
        let c = channel.index(self.polarized)?;
        if c >= self.channels {
            return Err(Error::OutOfRange(alloc::format!("channel {c} of {}", self.channels)));
        }
        Ok(c)
    }
}

impl From<FockState> for StateVector {
    fn from(s: FockState) -> Self {
        let mut v = StateVector::empty(s.channels(), s.is_polarized());
        v.add_unchecked(s, Complex64::new(1.0, 0.0));
        v
    }
}

/// A scaled product of creation operators acting on the vacuum.
#[derive(Clone, Debug, PartialEq)]
pub struct CreationMonomial {
    pub coefficient: Complex64,
    /// Sorted channel indices, repeated by multiplicity.
    pub channels: Vec<usize>,
}

/// Expand `|s>` after the substitution `a_i^† -> sum_j U[j][i] a_j^†`.
pub fn creation_expansion(u: &CMatrix, state: &FockState) -> Vec<CreationMonomial> {
    let mut poly: BTreeMap<Vec<usize>, Complex64> = BTreeMap::new();
    poly.insert(Vec::new(), Complex64::new(1.0 / state.norm_factor(), 0.0));
    for i in state.expanded() {
        let mut next: BTreeMap<Vec<usize>, Complex64> = BTreeMap::new();
        for (mono, c) in &poly {
            for j in 0..u.rows() {
                let w = u[(j, i)];
                if w.norm() == 0.0 {
                    continue;
                }
                let mut m = mono.clone();
                let at = m.partition_point(|&x| x <= j);
                m.insert(at, j);
                *next.entry(m).or_insert(Complex64::new(0.0, 0.0)) += c * w;
            }
        }
        poly = next;
    }
    poly.into_iter().map(|(channels, coefficient)| CreationMonomial { coefficient, channels }).collect()
}

/// Evolve a state by brute-force polynomial expansion of the creation
/// operators. Exponential in the photon number; meant as a reference.
pub fn oracle_evolve(u: &CMatrix, input: &StateVector) -> Result<StateVector> {
    if u.rows() != input.channels() || !u.is_square() {
        return Err(Error::RegisterMismatch { expected: input.channels(), found: u.rows() });
    }
    u.check_unitary(UNITARY_TOL)?;
    let mut out = StateVector::empty(input.channels(), input.is_polarized());
    let vacuum = FockState::vacuum(input.channels(), input.is_polarized());
    for (s, &a) in input.iter() {
        for mono in creation_expansion(u, s) {
            let mut occ = vec![0u32; input.channels()];
            for &c in &mono.channels {
                occ[c] += 1;
            }
            let t = vacuum.with_occupations(occ);
            let f = t.norm_factor();
            out.add_unchecked(t, a * mono.coefficient * f);
        }
    }
    out.prune(PRUNE_TOL);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn negative_occupation_rejected() {
        assert!(matches!(make_state(&[1, -1], false), Err(Error::InvalidOccupation(_))));
        assert!(matches!(make_state(&[1, 0, 1], true), Err(Error::InvalidOccupation(_))));
        assert_eq!(make_state(&[1, 0], false).unwrap().photons(), 1);
    }

    #[test]
    fn ladder_operators() {
        let v = StateVector::from(FockState::new(vec![1, 0]));
        let up = v.create(Channel::spatial(0)).unwrap();
        assert!((up.amplitude(&FockState::new(vec![2, 0])) - c(2f64.sqrt(), 0.0)).norm() < 1e-15);
        let down = up.annihilate(Channel::spatial(0)).unwrap();
        assert!((down.amplitude(&FockState::new(vec![1, 0])) - c(2.0, 0.0)).norm() < 1e-15);
        assert!(v.annihilate(Channel::spatial(1)).unwrap().is_empty());
        assert_eq!(v.create(Channel::polarized(0, Polarization::H)), Err(Error::PolarizationMismatch));
    }

    #[test]
    fn polarized_channel_layout() {
        let v = StateVector::from(FockState::polarized(vec![0, 0, 0, 0]).unwrap());
        let w = v.create(Channel::polarized(1, Polarization::V)).unwrap();
        let (s, _) = w.iter().next().unwrap();
        assert_eq!(s.occupations(), &[0, 0, 0, 1]);
        assert_eq!(s.mode_count(1), 1);
        assert_eq!(s.modes(), 2);
    }

    #[test]
    fn mixed_sector_detected() {
        let mut v = StateVector::empty(2, false);
        v.add(FockState::new(vec![1, 0]), c(1.0, 0.0)).unwrap();
        v.add(FockState::new(vec![1, 1]), c(1.0, 0.0)).unwrap();
        assert_eq!(v.photon_sector(), Err(Error::MixedSector));
    }

    #[test]
    fn oracle_hong_ou_mandel() {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let bs = CMatrix::from_array([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]);
        let out = oracle_evolve(&bs, &FockState::new(vec![1, 1]).into()).unwrap();
        assert!(out.amplitude(&FockState::new(vec![1, 1])).norm() < 1e-12);
        assert!((out.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_rejects_non_unitary() {
        let m = CMatrix::from_array([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(oracle_evolve(&m, &FockState::new(vec![1, 0]).into()), Err(Error::NotUnitary { .. })));
    }
}

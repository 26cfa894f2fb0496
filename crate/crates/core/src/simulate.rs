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

//! Exact strong simulation.
//!
//! Two routes compute the same output state. The permanent route evaluates
//! every output basis state of the compiled unitary. The sequential route
//! pushes a sparse state through the placements one at a time, which stays
//! cheap when most components touch few photons.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::circuit::{Circuit, LocalAction};
use crate::error::{Error, Result};
use crate::fock::{FockState, StateVector, PRUNE_TOL};
use crate::matrix::CMatrix;

/// Default largest photon number accepted by [`permanent_capped`].
pub const DEFAULT_PERMANENT_CAP: usize = 16;

/// Permanent by Ryser's formula with Gray-code subset order.
pub fn permanent(a: &CMatrix) -> Complex64 {
    let n = a.rows();
    assert!(a.is_square(), "permanent of a non-square matrix");
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut in_set = vec![false; n];
    let mut total = Complex64::new(0.0, 0.0);
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let sign = if in_set[j] { -1.0 } else { 1.0 };
        in_set[j] = !in_set[j];
        for (i, s) in row_sums.iter_mut().enumerate() {
            *s += a[(i, j)] * sign;
        }
        let prod: Complex64 = row_sums.iter().product();
        // The current subset is the Gray code of k.
        if (k ^ (k >> 1)).count_ones() % 2 == n as u32 % 2 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// [`permanent`] with a size cap.
pub fn permanent_capped(a: &CMatrix, cap: usize) -> Result<Complex64> {
    if a.rows() > cap {
        return Err(Error::TooLarge { photons: a.rows(), cap });
    }
    Ok(permanent(a))
}

/// Every occupation vector of `photons` photons over `channels` channels,
/// in ascending lexicographic order.
pub fn basis(photons: usize, channels: usize, polarized: bool) -> Vec<FockState> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[pos] = k;
            rec(pos + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    if channels == 0 {
        if photons == 0 {
            out.push(Vec::new());
        }
    } else {
        rec(0, photons as u32, &mut vec![0; channels], &mut out);
    }
    let template = FockState::vacuum(channels, polarized);
    out.into_iter().map(|o| template.with_occupations(o)).collect()
}

/// Size of the `photons`-photon sector over `channels` channels.
pub fn basis_size(photons: usize, channels: usize) -> f64 {
    if channels == 0 {
        return if photons == 0 { 1.0 } else { 0.0 };
    }
    let (n, k) = (photons + channels - 1, photons.min(channels - 1));
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Transition amplitude `<output| U |input>`; zero across sectors.
pub fn amplitude(u: &CMatrix, input: &FockState, output: &FockState) -> Result<Complex64> {
    amplitude_capped(u, input, output, DEFAULT_PERMANENT_CAP)
}

pub fn amplitude_capped(u: &CMatrix, input: &FockState, output: &FockState, cap: usize) -> Result<Complex64> {
    for s in [input, output] {
        if s.channels() != u.rows() {
            return Err(Error::RegisterMismatch { expected: u.rows(), found: s.channels() });
        }
    }
    if input.photons() != output.photons() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sub = u.select(&output.expanded(), &input.expanded());
    Ok(permanent_capped(&sub, cap)? / (input.norm_factor() * output.norm_factor()))
}

/// Output state of `u` on `input` by enumerating the output sector.
pub fn output_state(u: &CMatrix, input: &StateVector, cap: usize) -> Result<StateVector> {
    if u.rows() != input.channels() {
        return Err(Error::RegisterMismatch { expected: input.channels(), found: u.rows() });
    }
    let mut out = StateVector::empty(input.channels(), input.is_polarized());
    let Some(n) = input.photon_sector()? else {
        return Ok(out);
    };
    if n > cap {
        return Err(Error::TooLarge { photons: n, cap });
    }
    let inputs: Vec<(Vec<usize>, f64, Complex64)> =
        input.iter().map(|(s, &a)| (s.expanded(), s.norm_factor(), a)).collect();
    for t in basis(n, input.channels(), input.is_polarized()) {
        let rows = t.expanded();
        let mut amp = Complex64::new(0.0, 0.0);
        for (cols, f, a) in &inputs {
            amp += a * permanent(&u.select(&rows, cols)) / (f * t.norm_factor());
        }
        if amp.norm() >= PRUNE_TOL {
            out.add_unchecked(t, amp);
        }
    }
    Ok(out)
}

/// Outcome probabilities over one photon-number sector.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    entries: BTreeMap<FockState, f64>,
    sector: usize,
}

impl Distribution {
    pub fn from_state(state: &StateVector) -> Result<Self> {
        let sector = state.photon_sector()?.unwrap_or(0);
        let entries = state.iter().map(|(s, a)| (s.clone(), a.norm_sqr())).collect();
        Ok(Distribution { entries, sector })
    }

    pub fn from_entries(entries: BTreeMap<FockState, f64>, sector: usize) -> Self {
        Distribution { entries, sector }
    }

    pub fn sector(&self) -> usize {
        self.sector
    }

    pub fn probability(&self, s: &FockState) -> f64 {
        self.entries.get(s).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, &f64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }
}

/// Output distribution of `u` on `input` via permanents.
pub fn distribution(u: &CMatrix, input: &StateVector) -> Result<Distribution> {
    Distribution::from_state(&output_state(u, input, DEFAULT_PERMANENT_CAP)?)
}

/// Apply one local action to every term of `state`.
pub fn apply_local(state: &StateVector, action: &LocalAction, cap: usize) -> Result<StateVector> {
    let k = action.channels.len();
    let m = &action.matrix;
    let mut out = StateVector::empty(state.channels(), state.is_polarized());
    if let Some(dest) = monomial_targets(m) {
        for (s, &a) in state.iter() {
            let mut occ = s.occupations().to_vec();
            let mut amp = a;
            for &c in &action.channels {
                occ[c] = 0;
            }
            for (j, &(d, w)) in dest.iter().enumerate() {
                let n = s.occupations()[action.channels[j]];
                occ[action.channels[d]] += n;
                amp *= w.powi(n as i32);
            }
            out.add_unchecked(s.with_occupations(occ), amp);
        }
        out.prune(PRUNE_TOL);
        return Ok(out);
    }
    let mut cache: BTreeMap<Vec<u32>, Vec<(Vec<u32>, Complex64)>> = BTreeMap::new();
    for (s, &a) in state.iter() {
        let local: Vec<u32> = action.channels.iter().map(|&c| s.occupations()[c]).collect();
        if !cache.contains_key(&local) {
            let input = FockState::new(local.clone());
            let n = input.photons();
            let mut row = Vec::new();
            for t in basis(n, k, false) {
                let amp = amplitude_capped(m, &input, &t, cap)?;
                if amp.norm() >= PRUNE_TOL {
                    row.push((t.occupations().to_vec(), amp));
                }
            }
            cache.insert(local.clone(), row);
        }
        for (t, amp) in &cache[&local] {
            let mut occ = s.occupations().to_vec();
            for (j, &c) in action.channels.iter().enumerate() {
                occ[c] = t[j];
            }
            out.add_unchecked(s.with_occupations(occ), a * amp);
        }
    }
    out.prune(PRUNE_TOL);
    Ok(out)
}

/// For a matrix with one nonzero entry per column, the row and value of
/// that entry in each column.
fn monomial_targets(m: &CMatrix) -> Option<Vec<(usize, Complex64)>> {
    let mut dest = Vec::with_capacity(m.cols());
    let mut used = vec![false; m.rows()];
    for j in 0..m.cols() {
        let mut hit = None;
        for i in 0..m.rows() {
            if m[(i, j)] != Complex64::new(0.0, 0.0) {
                if hit.is_some() {
                    return None;
                }
                hit = Some((i, m[(i, j)]));
            }
        }
        let (i, w) = hit?;
        if used[i] {
            return None;
        }
        used[i] = true;
        dest.push((i, w));
    }
    Some(dest)
}

/// Run `input` through `circuit` one placement at a time. After placement
/// `k`, every `(k, keep)` hook filters the state.
pub fn evolve_with<F>(
    circuit: &Circuit,
    input: &StateVector,
    cap: usize,
    hooks: &mut [(usize, F)],
) -> Result<StateVector>
where
    F: FnMut(&FockState) -> bool,
{
    if input.channels() != circuit.channels() {
        return Err(Error::RegisterMismatch { expected: circuit.channels(), found: input.channels() });
    }
    input.photon_sector()?;
    let mut state = input.clone();
    let actions = circuit.local_actions()?;
    for (idx, hook) in hooks.iter_mut() {
        if *idx == 0 {
            state.retain(|s| hook(s));
        }
    }
    for (k, a) in actions.iter().enumerate() {
        state = apply_local(&state, a, cap)?;
        for (idx, hook) in hooks.iter_mut() {
            if *idx == k + 1 {
                state.retain(|s| hook(s));
            }
        }
    }
    Ok(state)
}

/// Sequential evolution without filters.
pub fn evolve(circuit: &Circuit, input: &StateVector) -> Result<StateVector> {
    evolve_with::<fn(&FockState) -> bool>(circuit, input, DEFAULT_PERMANENT_CAP, &mut [])
}

/// Counts drawn from a [`Distribution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleCount {
    pub counts: BTreeMap<FockState, u64>,
    pub seed: u64,
    pub shots: u64,
}

/// Draw `shots` outcomes by inverse CDF over the lexicographically sorted
/// outcomes. Uniforms come from SplitMix64 as `(x >> 11) * 2^-53`, scaled
/// by the distribution's total mass. An empty distribution yields no draws.
pub fn sample(d: &Distribution, shots: u64, seed: u64) -> SampleCount {
    let mut counts = BTreeMap::new();
    let outcomes: Vec<(&FockState, f64)> = d.iter().map(|(s, &p)| (s, p)).collect();
    if outcomes.is_empty() {
        return SampleCount { counts, seed, shots: 0 };
    }
    let mut cdf = Vec::with_capacity(outcomes.len());
    let mut acc = 0.0;
    for (_, p) in &outcomes {
        acc += p;
        cdf.push(acc);
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut tally = vec![0u64; outcomes.len()];
    for _ in 0..shots {
        let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) * acc;
        let i = cdf.partition_point(|&c| c <= u).min(outcomes.len() - 1);
        tally[i] += 1;
    }
    for ((s, _), n) in outcomes.into_iter().zip(tally) {
        if n > 0 {
            counts.insert(s.clone(), n);
        }
    }
    SampleCount { counts, seed, shots }
}

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

#![allow(dead_code)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use photonsim_core::components::{BeamSplitter, BsConvention, ComponentSpec};
use photonsim_core::qubit::{decode_qubits, Decoded};
use photonsim_core::{CMatrix, Circuit, Complex64, StateVector};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn angle(&mut self) -> f64 {
        (2.0 * self.uniform() - 1.0) * PI
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    pub fn gaussian(&mut self) -> f64 {
        let (u, v) = (self.uniform().max(1e-300), self.uniform());
        (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
    }

    pub fn complex(&mut self) -> Complex64 {
        c(self.gaussian(), self.gaussian())
    }
}

/// Sum over all permutations.
pub fn naive_permanent(a: &CMatrix) -> Complex64 {
    fn rec(a: &CMatrix, row: usize, used: &mut Vec<bool>) -> Complex64 {
        if row == a.rows() {
            return c(1.0, 0.0);
        }
        let mut total = c(0.0, 0.0);
        for j in 0..a.cols() {
            if !used[j] {
                used[j] = true;
                total += a[(row, j)] * rec(a, row + 1, used);
                used[j] = false;
            }
        }
        total
    }
    rec(a, 0, &mut vec![false; a.cols()])
}

pub fn random_matrix(n: usize, rng: &mut Rng) -> CMatrix {
    let rows: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| rng.complex()).collect()).collect();
    CMatrix::from_rows(&rows).unwrap()
}

/// Haar-like unitary from Gram-Schmidt on a Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut Rng) -> CMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| rng.complex()).collect();
        for u in &cols {
            let d: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= d * y;
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut m = CMatrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

pub const CONVENTIONS: [BsConvention; 6] =
    [BsConvention::Bs1, BsConvention::Bs2, BsConvention::Bs3, BsConvention::H, BsConvention::Rx, BsConvention::Ry];

pub fn random_bs(rng: &mut Rng) -> BeamSplitter {
    let mut b = BeamSplitter::new(CONVENTIONS[rng.below(6)]);
    b.theta = rng.angle();
    b.phi_tl = rng.angle();
    b.phi_tr = rng.angle();
    b.phi_bl = rng.angle();
    b.phi_br = rng.angle();
    b.phi_0 = rng.angle();
    b.phi_r = rng.angle();
    b.phi_t = rng.angle();
    b
}

/// Random spatial circuit of `len` components on `modes` modes.
pub fn random_circuit(modes: usize, len: usize, rng: &mut Rng) -> Circuit {
    let mut circ = Circuit::new(modes);
    for _ in 0..len {
        match rng.below(3) {
            0 if modes >= 2 => {
                circ.add(rng.below(modes - 1), ComponentSpec::bs(random_bs(rng))).unwrap();
            }
            1 => {
                circ.add(rng.below(modes), ComponentSpec::ps(rng.angle())).unwrap();
            }
            _ => {
                let mut t: Vec<usize> = (0..modes).collect();
                for i in (1..modes).rev() {
                    t.swap(i, rng.below(i + 1));
                }
                circ.add(0, ComponentSpec::perm(&t).unwrap()).unwrap();
            }
        }
    }
    circ
}

pub type Gate2 = [[Complex64; 2]; 2];

pub fn x() -> Gate2 {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn y() -> Gate2 {
    [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]
}

pub fn z() -> Gate2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
}

pub fn h() -> Gate2 {
    let s = FRAC_1_SQRT_2;
    [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
}

pub fn phase(phi: f64) -> Gate2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), Complex64::from_polar(1.0, phi)]]
}

pub fn rx(t: f64) -> Gate2 {
    let (co, si) = ((t / 2.0).cos(), (t / 2.0).sin());
    [[c(co, 0.0), c(0.0, -si)], [c(0.0, -si), c(co, 0.0)]]
}

pub fn ry(t: f64) -> Gate2 {
    let (co, si) = ((t / 2.0).cos(), (t / 2.0).sin());
    [[c(co, 0.0), c(-si, 0.0)], [c(si, 0.0), c(co, 0.0)]]
}

pub fn rz(t: f64) -> Gate2 {
    [[Complex64::from_polar(1.0, -t / 2.0), c(0.0, 0.0)], [c(0.0, 0.0), Complex64::from_polar(1.0, t / 2.0)]]
}

pub fn gate_matrix(g: Gate2) -> CMatrix {
    CMatrix::from_array(g)
}

/// Qubit register state; qubit 0 is the most significant bit.
#[derive(Clone, Debug)]
pub struct QState {
    pub q: usize,
    pub amps: Vec<Complex64>,
}

impl QState {
    pub fn basis(bits: &[u8]) -> Self {
        let q = bits.len();
        let mut amps = vec![c(0.0, 0.0); 1 << q];
        amps[index(bits)] = c(1.0, 0.0);
        QState { q, amps }
    }

    pub fn apply(&mut self, g: Gate2, k: usize) -> &mut Self {
        let bit = 1 << (self.q - 1 - k);
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a, b) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = g[0][0] * a + g[0][1] * b;
                self.amps[i | bit] = g[1][0] * a + g[1][1] * b;
            }
        }
        self
    }

    pub fn cx(&mut self, ctl: usize, tgt: usize) -> &mut Self {
        let (cb, tb) = (1 << (self.q - 1 - ctl), 1 << (self.q - 1 - tgt));
        for i in 0..self.amps.len() {
            if i & cb != 0 && i & tb == 0 {
                self.amps.swap(i, i | tb);
            }
        }
        self
    }

    pub fn ccx(&mut self, c0: usize, c1: usize, tgt: usize) -> &mut Self {
        let (a, b, t) = (1 << (self.q - 1 - c0), 1 << (self.q - 1 - c1), 1 << (self.q - 1 - tgt));
        for i in 0..self.amps.len() {
            if i & a != 0 && i & b != 0 && i & t == 0 {
                self.amps.swap(i, i | t);
            }
        }
        self
    }
}

pub fn index(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

/// Codeword amplitudes of the first `q` dual-rail qubits; any weight on
/// non-codewords is returned separately.
pub fn to_qubits(state: &StateVector, q: usize) -> (Vec<Complex64>, f64) {
    let mut amps = vec![c(0.0, 0.0); 1 << q];
    let mut leak = 0.0;
    for (s, a) in state.iter() {
        match decode_qubits(s, q) {
            Decoded::Bits(b) => amps[index(&b)] += a,
            Decoded::NonCodeword => leak += a.norm_sqr(),
        }
    }
    (amps, leak)
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn bits_of(i: usize, q: usize) -> Vec<u8> {
    (0..q).map(|k| ((i >> (q - 1 - k)) & 1) as u8).collect()
}

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

//! Optical components and their exact matrices.
//!
//! Spatial components act on consecutive spatial modes. Jones components
//! (wave plates, rotators) act on the (H, V) channel pair of one mode and
//! the polarizing beam splitter on the four channels of two modes.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, UNITARY_TOL};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cis(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, phi)
}

/// Beam-splitter parameterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BsConvention {
    /// `e^{iφ0}[[r e^{iφr}, t e^{-iφt}], [t e^{iφt}, -r e^{-iφr}]]`, r = sin θ.
    Bs1,
    /// Like `Bs1` with half angles and the sign on the top-left entry.
    Bs2,
    /// Half-angle form with the sign on the bottom-right entry.
    Bs3,
    H,
    Rx,
    Ry,
}

/// A beam splitter. `H`, `Rx` and `Ry` read the four corner phases; the
/// `Bs*` forms read `phi_0`, `phi_r` and `phi_t`. Unused phases are ignored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BeamSplitter {
    pub convention: BsConvention,
    pub theta: f64,
    pub phi_tl: f64,
    pub phi_tr: f64,
    pub phi_bl: f64,
    pub phi_br: f64,
    pub phi_0: f64,
    pub phi_r: f64,
    pub phi_t: f64,
}

impl BeamSplitter {
    /// Splitter with the given convention, θ = π/2 and all phases zero.
    pub fn new(convention: BsConvention) -> Self {
        BeamSplitter {
            convention,
            theta: FRAC_PI_2,
            phi_tl: 0.0,
            phi_tr: 0.0,
            phi_bl: 0.0,
            phi_br: 0.0,
            phi_0: 0.0,
            phi_r: 0.0,
            phi_t: 0.0,
        }
    }

    pub fn h(theta: f64) -> Self {
        Self::new(BsConvention::H).with_theta(theta)
    }

    pub fn rx(theta: f64) -> Self {
        Self::new(BsConvention::Rx).with_theta(theta)
    }

    pub fn ry(theta: f64) -> Self {
        Self::new(BsConvention::Ry).with_theta(theta)
    }

    /// `BS1(θ, φr, φt, φ0)`.
    pub fn bs1(theta: f64, phi_r: f64, phi_t: f64, phi_0: f64) -> Self {
        Self::campos(BsConvention::Bs1, theta, phi_r, phi_t, phi_0)
    }

    pub fn bs2(theta: f64, phi_r: f64, phi_t: f64, phi_0: f64) -> Self {
        Self::campos(BsConvention::Bs2, theta, phi_r, phi_t, phi_0)
    }

    pub fn bs3(theta: f64, phi_r: f64, phi_t: f64, phi_0: f64) -> Self {
        Self::campos(BsConvention::Bs3, theta, phi_r, phi_t, phi_0)
    }

    fn campos(convention: BsConvention, theta: f64, phi_r: f64, phi_t: f64, phi_0: f64) -> Self {
        BeamSplitter { theta, phi_r, phi_t, phi_0, ..Self::new(convention) }
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    /// Set the corner phases `(tl, tr, bl, br)`.
    pub fn with_corners(mut self, tl: f64, tr: f64, bl: f64, br: f64) -> Self {
        self.phi_tl = tl;
        self.phi_tr = tr;
        self.phi_bl = bl;
        self.phi_br = br;
        self
    }

    pub fn matrix(&self) -> Result<CMatrix> {
        let params =
            [self.theta, self.phi_tl, self.phi_tr, self.phi_bl, self.phi_br, self.phi_0, self.phi_r, self.phi_t];
        if params.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidSpec("beam splitter parameters must be finite".into()));
        }
        Ok(bs_matrix(self))
    }
}

impl Default for BeamSplitter {
    fn default() -> Self {
        Self::new(BsConvention::H)
    }
}

/// The 2×2 matrix of a beam splitter.
pub fn bs_matrix(bs: &BeamSplitter) -> CMatrix {
    let (tl, tr, bl, br) = (bs.phi_tl, bs.phi_tr, bs.phi_bl, bs.phi_br);
    let (ch, sh) = ((bs.theta / 2.0).cos(), (bs.theta / 2.0).sin());
    let g = cis(bs.phi_0);
    let (pr, pt) = (bs.phi_r, bs.phi_t);
    let m = match bs.convention {
        BsConvention::H => [[cis(tl + tr) * ch, cis(bl + tr) * sh], [cis(tl + br) * sh, -cis(bl + br) * ch]],
        BsConvention::Rx => {
            [[cis(tl + tr) * ch, c(0.0, 1.0) * cis(bl + tr) * sh], [c(0.0, 1.0) * cis(tl + br) * sh, cis(bl + br) * ch]]
        }
        BsConvention::Ry => [[cis(tl + tr) * ch, -cis(bl + tr) * sh], [cis(tl + br) * sh, cis(bl + br) * ch]],
        BsConvention::Bs1 => {
            let (r, t) = (bs.theta.sin(), bs.theta.cos());
            [[g * cis(pr) * r, g * cis(-pt) * t], [g * cis(pt) * t, -g * cis(-pr) * r]]
        }
        BsConvention::Bs2 => [[-g * cis(pr) * sh, g * cis(-pt) * ch], [g * cis(pt) * ch, g * cis(-pr) * sh]],
        BsConvention::Bs3 => [[g * cis(pr) * ch, g * cis(-pt) * sh], [g * cis(pt) * sh, -g * cis(-pr) * ch]],
    };
    CMatrix::from_array(m)
}

/// Generic lossless splitter `[[r e^{iφac}, t e^{iφbc}], [t e^{iφad}, r e^{iφbd}]]`.
pub fn bs_generic(r: f64, t: f64, phi_ac: f64, phi_ad: f64, phi_bc: f64, phi_bd: f64) -> CMatrix {
    CMatrix::from_array([[cis(phi_ac) * r, cis(phi_bc) * t], [cis(phi_ad) * t, cis(phi_bd) * r]])
}

/// Map `(φ0, φr, φt)` to the generic phases `(φac, φad, φbc, φbd)`.
pub fn campos_phases(phi_0: f64, phi_r: f64, phi_t: f64) -> [f64; 4] {
    [phi_0 + phi_r, phi_0 + phi_t, phi_0 - phi_t, phi_0 - phi_r - PI]
}

pub fn ps_matrix(phi: f64) -> CMatrix {
    CMatrix::from_array([[cis(phi)]])
}

/// Check that `target` is a permutation of `0..k`.
pub fn check_permutation(target: &[usize]) -> Result<()> {
    let mut seen = vec![false; target.len()];
    for &t in target {
        if t >= target.len() || seen[t] {
            return Err(Error::InvalidSpec("permutation must be a bijection on 0..k".into()));
        }
        seen[t] = true;
    }
    Ok(())
}

/// The photon entering mode `i` leaves in mode `target[i]`.
pub fn perm_matrix(target: &[usize]) -> Result<CMatrix> {
    check_permutation(target)?;
    let mut m = CMatrix::zeros(target.len(), target.len());
    for (i, &t) in target.iter().enumerate() {
        m[(t, i)] = c(1.0, 0.0);
    }
    Ok(m)
}

/// Wave plate of retardance `delta` with fast axis at `xi`.
pub fn wp_matrix(delta: f64, xi: f64) -> CMatrix {
    let (cd, sd) = (delta.cos(), delta.sin());
    let (c2, s2) = ((2.0 * xi).cos(), (2.0 * xi).sin());
    CMatrix::from_array([[c(cd, sd * c2), c(0.0, sd * s2)], [c(0.0, sd * s2), c(cd, -sd * c2)]])
}

pub fn hwp_matrix(xi: f64) -> CMatrix {
    wp_matrix(FRAC_PI_2, xi)
}

pub fn qwp_matrix(xi: f64) -> CMatrix {
    wp_matrix(FRAC_PI_2 / 2.0, xi)
}

pub fn pr_matrix(theta: f64) -> CMatrix {
    let (ct, st) = (theta.cos(), theta.sin());
    CMatrix::from_array([[c(ct, 0.0), c(st, 0.0)], [c(-st, 0.0), c(ct, 0.0)]])
}

/// Channels `(iH, iV, jH, jV)`: the H channels swap, the V channels stay.
pub fn pbs_matrix() -> CMatrix {
    perm_matrix(&[2, 1, 0, 3]).expect("fixed permutation")
}

/// One optical element.
#[derive(Clone, Debug, PartialEq)]
pub enum ComponentSpec {
    BeamSplitter(BeamSplitter),
    PhaseShifter { phi: f64 },
    Permutation(Vec<usize>),
    WavePlate { delta: f64, xi: f64 },
    PolarizationRotator { theta: f64 },
    PolarizingBeamSplitter,
    Unitary(CMatrix),
}

impl ComponentSpec {
    pub fn bs(bs: BeamSplitter) -> Self {
        ComponentSpec::BeamSplitter(bs)
    }

    pub fn ps(phi: f64) -> Self {
        ComponentSpec::PhaseShifter { phi }
    }

    pub fn perm(target: &[usize]) -> Result<Self> {
        check_permutation(target)?;
        Ok(ComponentSpec::Permutation(target.to_vec()))
    }

    pub fn wp(delta: f64, xi: f64) -> Self {
        ComponentSpec::WavePlate { delta, xi }
    }

    pub fn hwp(xi: f64) -> Self {
        Self::wp(FRAC_PI_2, xi)
    }

    pub fn qwp(xi: f64) -> Self {
        Self::wp(FRAC_PI_2 / 2.0, xi)
    }

    pub fn pr(theta: f64) -> Self {
        ComponentSpec::PolarizationRotator { theta }
    }

    pub fn pbs() -> Self {
        ComponentSpec::PolarizingBeamSplitter
    }

    /// A generic unitary; rejected unless `U^† U = I` within 1e-9.
    pub fn unitary(m: CMatrix) -> Result<Self> {
        m.check_unitary(UNITARY_TOL)?;
        if m.rows() == 0 {
            return Err(Error::InvalidSpec("empty unitary".to_string()));
        }
        Ok(ComponentSpec::Unitary(m))
    }

    /// Number of consecutive spatial modes the component occupies.
    pub fn width(&self) -> usize {
        match self {
            ComponentSpec::BeamSplitter(_) | ComponentSpec::PolarizingBeamSplitter => 2,
            ComponentSpec::PhaseShifter { .. }
            | ComponentSpec::WavePlate { .. }
            | ComponentSpec::PolarizationRotator { .. } => 1,
            ComponentSpec::Permutation(t) => t.len(),
            ComponentSpec::Unitary(m) => m.rows(),
        }
    }

    /// True for components that act on polarization channels.
    pub fn is_polarizing(&self) -> bool {
        matches!(
            self,
            ComponentSpec::WavePlate { .. }
                | ComponentSpec::PolarizationRotator { .. }
                | ComponentSpec::PolarizingBeamSplitter
        )
    }

    /// Spatial matrix for spatial components, channel matrix for
    /// polarizing ones.
    pub fn matrix(&self) -> Result<CMatrix> {
        match self {
            ComponentSpec::BeamSplitter(bs) => bs.matrix(),
            ComponentSpec::PhaseShifter { phi } => Ok(ps_matrix(*phi)),
            ComponentSpec::Permutation(t) => perm_matrix(t),
            ComponentSpec::WavePlate { delta, xi } => Ok(wp_matrix(*delta, *xi)),
            ComponentSpec::PolarizationRotator { theta } => Ok(pr_matrix(*theta)),
            ComponentSpec::PolarizingBeamSplitter => Ok(pbs_matrix()),
            ComponentSpec::Unitary(m) => Ok(m.clone()),
        }
    }

    /// Channels touched and the local matrix on them when placed at
    /// `anchor` of a register.
    pub fn channel_action(&self, anchor: usize, polarized: bool) -> Result<(Vec<usize>, CMatrix)> {
        let w = self.width();
        let m = self.matrix()?;
        if self.is_polarizing() {
            if !polarized {
                return Err(Error::PolarizationMismatch);
            }
            return Ok(((2 * anchor..2 * (anchor + w)).collect(), m));
        }
        if polarized {
            Ok(((2 * anchor..2 * (anchor + w)).collect(), m.kron(&CMatrix::identity(2))))
        } else {
            Ok(((anchor..anchor + w).collect(), m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn close(a: &CMatrix, b: &CMatrix) -> bool {
        a.max_abs_diff(b) <= 1e-12
    }

    fn m2(a: [[Complex64; 2]; 2]) -> CMatrix {
        CMatrix::from_array(a)
    }

    #[test]
    fn h_default_is_hadamard() {
        let s = FRAC_1_SQRT_2;
        let h = m2([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]);
        assert!(close(&bs_matrix(&BeamSplitter::default()), &h));
        assert!(close(&bs_matrix(&BeamSplitter::bs1(FRAC_PI_4, 0.0, 0.0, 0.0)), &h));
        assert!(close(&bs_matrix(&BeamSplitter::bs3(FRAC_PI_2, 0.0, 0.0, 0.0)), &h));
    }

    #[test]
    fn rx_and_bs1_agree() {
        let s = FRAC_1_SQRT_2;
        let want = m2([[c(s, 0.0), c(0.0, s)], [c(0.0, s), c(s, 0.0)]]);
        assert!(close(&bs_matrix(&BeamSplitter::rx(FRAC_PI_2)), &want));
        assert!(close(&bs_matrix(&BeamSplitter::bs1(FRAC_PI_4, -FRAC_PI_2, 0.0, FRAC_PI_2)), &want));
    }

    #[test]
    fn ry_zero_is_identity() {
        assert!(close(&bs_matrix(&BeamSplitter::ry(0.0)), &CMatrix::identity(2)));
    }

    #[test]
    fn phase_shifter_values() {
        assert!((ps_matrix(PI)[(0, 0)] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((ps_matrix(-FRAC_PI_2)[(0, 0)] - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn permutation_semantics() {
        let p = perm_matrix(&[2, 3, 0, 1]).unwrap();
        let v = p.apply(&[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        assert_eq!(v, vec![c(2.0, 0.0), c(3.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(perm_matrix(&[0, 0]), Err(Error::InvalidSpec(_))));
        assert_eq!(perm_matrix(&[0, 1]).unwrap(), CMatrix::identity(2));
    }

    #[test]
    fn wave_plate_values() {
        let s = FRAC_1_SQRT_2;
        let v = hwp_matrix(FRAC_PI_4 / 2.0).apply(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!((v[0] - c(0.0, s)).norm() < 1e-12 && (v[1] - c(0.0, s)).norm() < 1e-12);
        let q = m2([[c(0.0, 0.0), c(0.0, 1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]);
        assert!(close(&hwp_matrix(FRAC_PI_4), &q));
        let z = m2([[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]]);
        assert!(close(&hwp_matrix(0.0), &z));
        assert!(close(&wp_matrix(0.0, 0.3), &CMatrix::identity(2)));
    }

    #[test]
    fn rotator_and_pbs() {
        let v = pr_matrix(FRAC_PI_2).apply(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!((v[1] - c(-1.0, 0.0)).norm() < 1e-15 && v[0].norm() < 1e-15);
        let p = pbs_matrix();
        assert_eq!(&p * &p, CMatrix::identity(4));
        assert_eq!(p.apply(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])[2], c(1.0, 0.0));
    }

    #[test]
    fn polarizing_needs_polarized_register() {
        assert_eq!(ComponentSpec::pbs().channel_action(0, false), Err(Error::PolarizationMismatch));
        let (ch, m) = ComponentSpec::ps(PI).channel_action(1, true).unwrap();
        assert_eq!(ch, vec![2, 3]);
        assert!(close(&m, &ps_matrix(PI).kron(&CMatrix::identity(2))));
    }

    #[test]
    fn generic_unitary_checked() {
        let bad = CMatrix::from_array([[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(ComponentSpec::unitary(bad), Err(Error::NotUnitary { .. })));
    }
}

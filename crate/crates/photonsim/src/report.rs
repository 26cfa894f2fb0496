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

use photonsim_core::qubit::{decode, decode_qubits, Decoded, Encoding};
use photonsim_core::{print_state, Complex64, FockState};

/// Values this close to zero print as zero.
pub const SNAP: f64 = 1e-13;

/// Twelve significant digits, shortest form, always with a decimal point
/// or exponent.
pub fn fmt_real(x: f64) -> String {
    if x.abs() < SNAP {
        return "0.0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let mut s = if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{m}e{exp}");
    };
    if s.contains('.') {
        s = s.trim_end_matches('0').to_string();
        if s.ends_with('.') {
            s.push('0');
        }
    } else {
        s.push_str(".0");
    }
    s
}

/// `a+bj`.
pub fn fmt_complex(z: Complex64) -> String {
    let im = if z.im.abs() < SNAP { 0.0 } else { z.im };
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}j", fmt_real(z.re), fmt_real(im.abs()))
}

/// Qubit label of an outcome, `None` off the code space.
pub fn bits_of(s: &FockState, qubits: Option<usize>) -> Option<Vec<u8>> {
    let decoded = if s.is_polarized() {
        if s.modes() != 2 {
            return None;
        }
        decode(s, Encoding::Polarization)
    } else {
        decode_qubits(s, qubits?)
    };
    match decoded {
        Decoded::Bits(b) if !b.is_empty() => Some(b),
        _ => None,
    }
}

/// `|1,0>` or `-`.
pub fn bits_text(bits: &Option<Vec<u8>>) -> String {
    match bits {
        Some(b) => {
            let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            format!("|{}>", inner.join(","))
        }
        None => "-".into(),
    }
}

/// `10` or JSON null.
pub fn bits_json(bits: &Option<Vec<u8>>) -> serde_json::Value {
    match bits {
        Some(b) => b.iter().map(|x| x.to_string()).collect::<String>().into(),
        None => serde_json::Value::Null,
    }
}

pub fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

pub fn outcome_line(s: &FockState, bits: &Option<Vec<u8>>, value: &str) -> String {
    format!("{} -> {} {value}", print_state(s), bits_text(bits))
}

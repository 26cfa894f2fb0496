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

//! Text notation for Fock states: `|1,0,0,1>`, `|0,1:H>`, `|0,{P:V}>`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::fock::FockState;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        digits.parse().map_err(|_| Error::Parse { offset: start, message: "integer too large".into() })
    }

    fn pol(&mut self) -> Result<usize> {
        match self.peek() {
            Some(b'H') => {
                self.pos += 1;
                Ok(0)
            }
            Some(b'V') => {
                self.pos += 1;
                Ok(1)
            }
            _ => Err(self.err("expected 'H' or 'V'")),
        }
    }
}

enum Entry {
    Plain(u32),
    Polarized([u32; 2]),
}

fn entry(cur: &mut Cursor) -> Result<Entry> {
    if cur.peek() == Some(b'{') {
        let mut hv = [0u32; 2];
        while cur.peek() == Some(b'{') {
            cur.pos += 1;
            cur.expect(b'P')?;
            cur.expect(b':')?;
            let p = cur.pol()?;
            cur.expect(b'}')?;
            hv[p] += 1;
        }
        return Ok(Entry::Polarized(hv));
    }
    let n = cur.int()?;
    if cur.peek() == Some(b':') {
        cur.pos += 1;
        let mut hv = [0u32; 2];
        hv[cur.pol()?] = n;
        return Ok(Entry::Polarized(hv));
    }
    Ok(Entry::Plain(n))
}

/// Parse a state string. Any polarized entry makes the register polarized;
/// plain entries are then allowed only when they are zero.
pub fn parse_state(text: &str) -> Result<FockState> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    cur.expect(b'|')?;
    let mut entries = Vec::new();
    loop {
        let at = {
            cur.skip_ws();
            cur.pos
        };
        entries.push((at, entry(&mut cur)?));
        match cur.peek() {
            Some(b',') => cur.pos += 1,
            Some(b'>') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.err("expected ',' or '>'")),
        }
    }
    if cur.peek().is_some() {
        return Err(cur.err("trailing input"));
    }
    let polarized = entries.iter().any(|(_, e)| matches!(e, Entry::Polarized(_)));
    if !polarized {
        let occ = entries.iter().map(|(_, e)| if let Entry::Plain(n) = e { *n } else { 0 });
        return Ok(FockState::new(occ.collect()));
    }
    let mut occ = Vec::with_capacity(2 * entries.len());
    for (_, e) in &entries {
        match e {
            Entry::Plain(0) => occ.extend([0, 0]),
            Entry::Plain(_) => return Err(Error::MixedRegister),
            Entry::Polarized(hv) => occ.extend(hv),
        }
    }
    FockState::polarized(occ)
}

/// Canonical text of a state; [`parse_state`] inverts it.
pub fn print_state(s: &FockState) -> String {
    let mut out = String::from("|");
    for m in 0..s.modes() {
        if m > 0 {
            out.push(',');
        }
        if !s.is_polarized() {
            let _ = write!(out, "{}", s.occupations()[m]);
            continue;
        }
        let (h, v) = (s.occupations()[2 * m], s.occupations()[2 * m + 1]);
        match (h, v) {
            (0, 0) => out.push('0'),
            (h, 0) => {
                let _ = write!(out, "{h}:H");
            }
            (0, v) => {
                let _ = write!(out, "{v}:V");
            }
            (h, v) => {
                for _ in 0..h {
                    out.push_str("{P:H}");
                }
                for _ in 0..v {
                    out.push_str("{P:V}");
                }
            }
        }
    }
    out.push('>');
    out
}

impl core::fmt::Display for FockState {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&print_state(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_states() {
        let s = parse_state("|0,1,0,1,0,0>").unwrap();
        assert_eq!(s.occupations(), &[0, 1, 0, 1, 0, 0]);
        assert!(!s.is_polarized());
        assert_eq!(print_state(&s), "|0,1,0,1,0,0>");
        assert_eq!(parse_state(" | 1 , 0 > ").unwrap().occupations(), &[1, 0]);
    }

    #[test]
    fn polarized_states() {
        let s = parse_state("|0,{P:H},0,0>").unwrap();
        assert!(s.is_polarized());
        assert_eq!(s.occupations(), &[0, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(print_state(&s), "|0,1:H,0,0>");
        let v = parse_state("|1:V,0>").unwrap();
        assert_eq!(v.occupations(), &[0, 1, 0, 0]);
        let both = parse_state("|{P:H}{P:V},0>").unwrap();
        assert_eq!(print_state(&both), "|{P:H}{P:V},0>");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_state("|1,0,1:H>"), Err(Error::MixedRegister));
        assert!(matches!(parse_state("|1,0"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_state("1,0>"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_state("|1:X>"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_state("|{P:H>"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse_state("|1>x"), Err(Error::Parse { offset: 3, .. })));
    }
}

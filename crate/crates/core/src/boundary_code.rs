//! Boundary codes: cyclic sequences of boundary-vertex degrees.
//!
//! A [`BoundaryCode`] lists the degrees (2 or 3) of the boundary vertices of a
//! patch in clockwise order. A [`SequenceList`] is an ordered collection of
//! codes, one per component of a patch set. All degree arithmetic lives here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A cyclic sequence of twos and threes with a fixed starting index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct BoundaryCode(Vec<u8>);

impl BoundaryCode {
    /// Builds a code from raw degrees. Every entry must be 2 or 3 and the
    /// code must be nonempty.
    pub fn new(degrees: Vec<u8>) -> Result<Self, ParseError> {
        if degrees.is_empty() {
            return Err(ParseError::EmptyCode);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d != 2 && d != 3) {
            return Err(ParseError::BadDigit((b'0' + d.min(9)) as char));
        }
        Ok(BoundaryCode(degrees))
    }

    /// Internal constructor for rewrites that may legitimately produce any
    /// length, including zero-length intermediate blocks never exposed.
    pub(crate) fn from_raw(degrees: Vec<u8>) -> Self {
        debug_assert!(degrees.iter().all(|&d| d == 2 || d == 3));
        BoundaryCode(degrees)
    }

    /// `(pattern)^times`.
    pub fn repeat(pattern: &[u8], times: usize) -> Result<Self, ParseError> {
        Self::new(pattern.repeat(times))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[u8] {
        &self.0
    }

    /// Cyclic access.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i % self.0.len()]
    }

    pub fn d2(&self) -> usize {
        self.0.iter().filter(|&&d| d == 2).count()
    }

    pub fn d3(&self) -> usize {
        self.0.iter().filter(|&&d| d == 3).count()
    }

    /// Number of pentagons any solution must have: `6 - d2 + d3`.
    pub fn f5(&self) -> i64 {
        6 - self.d2() as i64 + self.d3() as i64
    }

    /// Entry-wise `5 - x`.
    pub fn complement(&self) -> Self {
        BoundaryCode(self.0.iter().map(|&d| 5 - d).collect())
    }

    pub fn reversed(&self) -> Self {
        BoundaryCode(self.0.iter().rev().copied().collect())
    }

    /// The code read starting from index `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let n = self.0.len();
        let s = start % n.max(1);
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[s..]);
        v.extend_from_slice(&self.0[..s]);
        BoundaryCode(v)
    }

    /// Offset of the lexicographically smallest rotation (smallest offset on
    /// ties, which only occur for periodic codes).
    pub fn canonical_offset(&self) -> usize {
        least_rotation(&self.0)
    }

    /// Lexicographically smallest rotation, with 2 < 3.
    pub fn canonical_rotation(&self) -> Self {
        self.rotated(self.canonical_offset())
    }

    /// Equality up to cyclic rotation.
    pub fn rotation_equivalent(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical_rotation() == other.canonical_rotation()
    }

    /// Indices holding a 3, in increasing order.
    pub fn three_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 3)
            .map(|(i, _)| i)
            .collect()
    }

    /// True for the pentagon code `(2)^5`.
    pub fn is_pentagon(&self) -> bool {
        self.0.len() == 5 && self.0.iter().all(|&d| d == 2)
    }
}

/// Two-pointer minimum-rotation search.
fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

impl TryFrom<Vec<u8>> for BoundaryCode {
    type Error = ParseError;
    fn try_from(v: Vec<u8>) -> Result<Self, Self::Error> {
        BoundaryCode::new(v)
    }
}

impl From<BoundaryCode> for Vec<u8> {
    fn from(c: BoundaryCode) -> Self {
        c.0
    }
}

impl fmt::Display for BoundaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoundaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundaryCode(")?;
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for BoundaryCode {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let list = parse(s)?;
        match list.0.len() {
            1 => Ok(list.0.into_iter().next().unwrap()),
            k => Err(ParseError::NotSingle(k)),
        }
    }
}

/// An ordered list of codes `S1 | S2 | ... | Sk`. Possibly empty.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceList(pub Vec<BoundaryCode>);

impl SequenceList {
    pub fn new(items: Vec<BoundaryCode>) -> Self {
        SequenceList(items)
    }

    pub fn single(code: BoundaryCode) -> Self {
        SequenceList(vec![code])
    }

    pub fn empty() -> Self {
        SequenceList(Vec::new())
    }

    pub fn items(&self) -> &[BoundaryCode] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn f5(&self) -> i64 {
        f5_of(self)
    }

    pub fn d2(&self) -> usize {
        self.0.iter().map(BoundaryCode::d2).sum()
    }

    pub fn d3(&self) -> usize {
        self.0.iter().map(BoundaryCode::d3).sum()
    }

    /// Order-independent key: sorted canonical rotations of the members.
    pub fn canonical_key(&self) -> Vec<BoundaryCode> {
        let mut v: Vec<_> = self.0.iter().map(BoundaryCode::canonical_rotation).collect();
        v.sort();
        v
    }

    /// Equality as multisets of codes up to rotation.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl fmt::Display for SequenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SequenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses `2,2,2,2,2`, `2323232323`, or `22222|222222`.
pub fn parse(text: &str) -> Result<SequenceList, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let mut items = Vec::new();
    for segment in text.split('|') {
        let mut degrees = Vec::new();
        for ch in segment.chars() {
            match ch {
                '2' => degrees.push(2),
                '3' => degrees.push(3),
                ',' => {}
                c if c.is_whitespace() => {}
                c => return Err(ParseError::BadDigit(c)),
            }
        }
        if degrees.is_empty() {
            return Err(ParseError::EmptyCode);
        }
        items.push(BoundaryCode(degrees));
    }
    Ok(SequenceList(items))
}

/// Sum over members of `6 - d2 + d3`. The empty list has `f5 = 0`.
pub fn f5_of(list: &SequenceList) -> i64 {
    list.0.iter().map(BoundaryCode::f5).sum()
}

pub fn complement(code: &BoundaryCode) -> BoundaryCode {
    code.complement()
}

pub fn canonical_rotation(code: &BoundaryCode) -> BoundaryCode {
    code.canonical_rotation()
}

/// All codes of length `n` up to rotation, as canonical representatives in
/// increasing order.
pub fn all_codes_up_to_rotation(n: usize) -> Vec<BoundaryCode> {
    assert!((1..=30).contains(&n));
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let degrees: Vec<u8> = (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { 3 } else { 2 }).collect();
        let c = BoundaryCode(degrees);
        if c.canonical_offset() == 0 && c.canonical_rotation() == c {
            out.push(c);
        }
    }
    out
}

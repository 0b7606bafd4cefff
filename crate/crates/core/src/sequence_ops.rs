//! The four sequence operations and their enumeration.
//!
//! Each operation rewrites one member of a [`SequenceList`] and lowers the
//! list's `f5` by exactly one. Operations are identified by absolute positions
//! in the current code, so two occurrences of the same pattern are distinct
//! operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boundary_code::{BoundaryCode, SequenceList};
use crate::error::{OpError, ParseError};

/// For `a = 0` type III operations: which output code receives the extra 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// The code continuing with the `y` context (`b = 1`).
    First,
    /// The code continuing with the `z` context (`c = 1`).
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeqOp {
    /// Replace the 3 at `pos` by `2, σ, 2, 3, 3, 3, 3, 2, rev(σ)', 2`.
    TypeI { seq_index: usize, pos: usize, l: usize, b: usize },
    /// Replace `3, (2)^(x-1), 3` starting at `pos` by `2, (3)^(4-x), 2`.
    TypeII { seq_index: usize, pos: usize, x: usize },
    /// Split on the blocks `3, (2)^a, 3` at `pos1` and `3, 3` at `pos2`.
    TypeIII { seq_index: usize, pos1: usize, a: usize, pos2: usize, side: Option<Side> },
    /// Remove a `(2)^5` member.
    TypeIV { seq_index: usize },
}

impl SeqOp {
    pub fn seq_index(&self) -> usize {
        match *self {
            SeqOp::TypeI { seq_index, .. }
            | SeqOp::TypeII { seq_index, .. }
            | SeqOp::TypeIII { seq_index, .. }
            | SeqOp::TypeIV { seq_index } => seq_index,
        }
    }

    pub fn with_seq_index(self, idx: usize) -> Self {
        match self {
            SeqOp::TypeI { pos, l, b, .. } => SeqOp::TypeI { seq_index: idx, pos, l, b },
            SeqOp::TypeII { pos, x, .. } => SeqOp::TypeII { seq_index: idx, pos, x },
            SeqOp::TypeIII { pos1, a, pos2, side, .. } => {
                SeqOp::TypeIII { seq_index: idx, pos1, a, pos2, side }
            }
            SeqOp::TypeIV { .. } => SeqOp::TypeIV { seq_index: idx },
        }
    }

    /// Path length; zero for the boundary-only types.
    pub fn length(&self) -> usize {
        match *self {
            SeqOp::TypeI { l, .. } => l,
            _ => 0,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            SeqOp::TypeI { .. } => "I",
            SeqOp::TypeII { .. } => "II",
            SeqOp::TypeIII { .. } => "III",
            SeqOp::TypeIV { .. } => "IV",
        }
    }
}

impl fmt::Display for SeqOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SeqOp::TypeI { seq_index, pos, l, b } => write!(f, "I seq={seq_index} pos={pos} l={l} b={b}"),
            SeqOp::TypeII { seq_index, pos, x } => write!(f, "II seq={seq_index} pos={pos} x={x}"),
            SeqOp::TypeIII { seq_index, pos1, a, pos2, side } => {
                let s = match side {
                    None => "-",
                    Some(Side::First) => "1",
                    Some(Side::Second) => "2",
                };
                write!(f, "III seq={seq_index} pos1={pos1} a={a} pos2={pos2} side={s}")
            }
            SeqOp::TypeIV { seq_index } => write!(f, "IV seq={seq_index}"),
        }
    }
}

impl FromStr for SeqOp {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::BadOp(s.to_string());
        let mut parts = s.split_whitespace();
        let kind = parts.next().ok_or_else(bad)?;
        let mut fields = std::collections::HashMap::new();
        for p in parts {
            let (k, v) = p.split_once('=').ok_or_else(bad)?;
            fields.insert(k, v);
        }
        let num = |k: &str| -> Result<usize, ParseError> {
            fields.get(k).ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        let seq_index = num("seq")?;
        let op = match kind {
            "I" => SeqOp::TypeI { seq_index, pos: num("pos")?, l: num("l")?, b: num("b")? },
            "II" => SeqOp::TypeII { seq_index, pos: num("pos")?, x: num("x")? },
            "III" => {
                let side = match *fields.get("side").ok_or_else(bad)? {
                    "-" => None,
                    "1" => Some(Side::First),
                    "2" => Some(Side::Second),
                    _ => return Err(bad()),
                };
                SeqOp::TypeIII { seq_index, pos1: num("pos1")?, a: num("a")?, pos2: num("pos2")?, side }
            }
            "IV" => SeqOp::TypeIV { seq_index },
            _ => return Err(bad()),
        };
        Ok(op)
    }
}

/// Where the rewritten blocks sit in the post-image of an operation.
///
/// Reverse cutting uses these positions directly instead of searching for
/// a matching site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Anchor {
    /// The `2l + 6` block starts at `start` of member `seq_index` (no wrap).
    TypeI { seq_index: usize, start: usize, l: usize },
    /// The `2, (3)^(4-x), 2` block starts at `start` (no wrap).
    TypeII { seq_index: usize, start: usize, x: usize },
    /// Both output codes begin with their `2, (3)^k, 2` block at position 0.
    TypeIII { first: usize, second: usize, a: usize, b: usize, c: usize },
    /// A pentagon component belongs at index `seq_index`.
    TypeIV { seq_index: usize },
}

/// `σ_1 .. σ_(l-1)`: `σ_i = 3` iff (`i <= b` and `i` odd) or (`i > b` and `i` even).
pub fn sigma_pattern(l: usize, b: usize) -> Result<Vec<u8>, OpError> {
    if l == 0 || b > l || b % 2 == 1 {
        return Err(OpError::BadBend { l, b });
    }
    Ok((1..l)
        .map(|i| {
            let left = (i <= b && i % 2 == 1) || (i > b && i % 2 == 0);
            if left {
                3
            } else {
                2
            }
        })
        .collect())
}

/// The block that replaces a single 3 in a type I operation.
pub fn type_i_block(l: usize, b: usize) -> Result<Vec<u8>, OpError> {
    let sigma = sigma_pattern(l, b)?;
    let mut block = Vec::with_capacity(2 * l + 6);
    block.push(2);
    block.extend_from_slice(&sigma);
    block.extend_from_slice(&[2, 3, 3, 3, 3, 2]);
    block.extend(sigma.iter().rev().map(|&d| 5 - d));
    block.push(2);
    Ok(block)
}

fn member(list: &SequenceList, idx: usize) -> Result<&BoundaryCode, OpError> {
    list.items().get(idx).ok_or(OpError::BadIndex(idx))
}

fn not_applicable(op: &SeqOp, why: &str) -> OpError {
    OpError::NotApplicable(format!("{op}: {why}"))
}

/// Appends the cyclic slice `code[from ..]` of `len` entries to `out`.
fn push_cyclic(out: &mut Vec<u8>, code: &[u8], from: usize, len: usize) {
    let n = code.len();
    let from = from % n;
    let first = len.min(n - from);
    out.extend_from_slice(&code[from..from + first]);
    out.extend_from_slice(&code[..len - first]);
}

/// Result of rewriting one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rewrite {
    /// The member is replaced by one code.
    One(BoundaryCode, Anchor),
    /// The member is replaced by two codes (type III).
    Two(BoundaryCode, BoundaryCode, Anchor),
    /// The member is removed (type IV).
    Removed(Anchor),
}

/// Applies `op` to the single code `code`, which sits at `op.seq_index()`
/// of its list.
pub fn rewrite_member(code: &BoundaryCode, op: &SeqOp) -> Result<Rewrite, OpError> {
    let idx = op.seq_index();
    let s = code.degrees();
    let n = s.len();
    match *op {
        SeqOp::TypeI { pos, l, b, .. } => {
            let block = type_i_block(l, b)?;
            if pos >= n || s[pos] != 3 {
                return Err(not_applicable(op, "no 3 at position"));
            }
            let mut out = Vec::with_capacity(n + 2 * l + 5);
            out.extend_from_slice(&s[..pos]);
            out.extend_from_slice(&block);
            out.extend_from_slice(&s[pos + 1..]);
            Ok(Rewrite::One(BoundaryCode::from_raw(out), Anchor::TypeI { seq_index: idx, start: pos, l }))
        }
        SeqOp::TypeII { pos, x, .. } => {
            if !(1..=4).contains(&x) {
                return Err(not_applicable(op, "x outside 1..=4"));
            }
            if pos >= n || x >= n {
                return Err(not_applicable(op, "pattern needs two distinct 3s"));
            }
            let at = |i: usize| s[(pos + i) % n];
            if at(0) != 3 || at(x) != 3 || (1..x).any(|i| at(i) != 2) {
                return Err(not_applicable(op, "pattern 3,(2)^(x-1),3 absent"));
            }
            let mut out = Vec::with_capacity(n + 4 - 2 * x);
            let start = if pos + x < n {
                out.extend_from_slice(&s[..pos]);
                push_type_ii_block(&mut out, x);
                out.extend_from_slice(&s[pos + x + 1..]);
                pos
            } else {
                push_type_ii_block(&mut out, x);
                out.extend_from_slice(&s[pos + x + 1 - n..pos]);
                0
            };
            Ok(Rewrite::One(BoundaryCode::from_raw(out), Anchor::TypeII { seq_index: idx, start, x }))
        }
        SeqOp::TypeIII { pos1, a, pos2, side, .. } => {
            if a > 1 {
                return Err(not_applicable(op, "a outside {0,1}"));
            }
            if (a == 0) != side.is_some() {
                return Err(not_applicable(op, "side is required exactly when a = 0"));
            }
            if pos1 >= n || pos2 >= n {
                return Err(not_applicable(op, "position out of range"));
            }
            let len1 = a + 2;
            if n < len1 + 2 {
                return Err(OpError::OverlappingBlocks);
            }
            // offset of block 2 relative to block 1
            let off = (pos2 + n - pos1) % n;
            if off < len1 || off + 2 > n {
                return Err(OpError::OverlappingBlocks);
            }
            let at = |i: usize| s[i % n];
            if at(pos1) != 3 || at(pos1 + len1 - 1) != 3 || (a == 1 && at(pos1 + 1) != 2) || at(pos2) != 3 || at(pos2 + 1) != 3 {
                return Err(not_applicable(op, "blocks 3,(2)^a,3 and 3,3 absent"));
            }
            let (b, c) = match side {
                None => (0, 0),
                Some(Side::First) => (1, 0),
                Some(Side::Second) => (0, 1),
            };
            let ylen = off - len1;
            let zlen = n - off - 2;
            let mut first = Vec::with_capacity(b + 2 + ylen);
            first.push(2);
            first.extend(std::iter::repeat_n(3, b));
            first.push(2);
            push_cyclic(&mut first, s, pos1 + len1, ylen);
            let mut second = Vec::with_capacity(c + 2 + zlen);
            second.push(2);
            second.extend(std::iter::repeat_n(3, c));
            second.push(2);
            push_cyclic(&mut second, s, pos2 + 2, zlen);
            Ok(Rewrite::Two(
                BoundaryCode::from_raw(first),
                BoundaryCode::from_raw(second),
                Anchor::TypeIII { first: idx, second: idx + 1, a, b, c },
            ))
        }
        SeqOp::TypeIV { .. } => {
            if !code.is_pentagon() {
                return Err(not_applicable(op, "member is not (2)^5"));
            }
            Ok(Rewrite::Removed(Anchor::TypeIV { seq_index: idx }))
        }
    }
}

fn push_type_ii_block(out: &mut Vec<u8>, x: usize) {
    out.push(2);
    out.extend(std::iter::repeat_n(3, 4 - x));
    out.push(2);
}

/// Applies `op`, returning the new list and the post-image anchor.
pub fn apply_anchored(list: &SequenceList, op: &SeqOp) -> Result<(SequenceList, Anchor), OpError> {
    let idx = op.seq_index();
    let code = member(list, idx)?;
    let mut items = Vec::with_capacity(list.len() + 1);
    items.extend_from_slice(&list.items()[..idx]);
    let anchor = match rewrite_member(code, op)? {
        Rewrite::One(c, anchor) => {
            items.push(c);
            anchor
        }
        Rewrite::Two(c1, c2, anchor) => {
            items.push(c1);
            items.push(c2);
            anchor
        }
        Rewrite::Removed(anchor) => anchor,
    };
    items.extend_from_slice(&list.items()[idx + 1..]);
    Ok((SequenceList::new(items), anchor))
}

pub fn apply(list: &SequenceList, op: &SeqOp) -> Result<SequenceList, OpError> {
    apply_anchored(list, op).map(|(l, _)| l)
}

/// Segments of a code: `(start, x)` for each maximal `3, (2)^(x-1), 3`,
/// starting at every 3 in increasing position order. Empty when the code has
/// fewer than two 3s.
pub fn segments(code: &BoundaryCode) -> Vec<(usize, usize)> {
    let threes = code.three_positions();
    let n = code.len();
    let t = threes.len();
    if t < 2 {
        return Vec::new();
    }
    (0..t)
        .map(|j| {
            let next = threes[(j + 1) % t];
            (threes[j], (next + n - threes[j]) % n)
        })
        .collect()
}

/// All type II and III operations on one member, in that order.
pub fn boundary_ops(code: &BoundaryCode, seq_index: usize) -> Vec<SeqOp> {
    let segs = segments(code);
    let t = segs.len();
    let mut ops = Vec::new();
    for &(pos, x) in &segs {
        if x <= 4 {
            ops.push(SeqOp::TypeII { seq_index, pos, x });
        }
    }
    let adjacent = |i: usize, j: usize| i == j || (i + 1) % t == j || (j + 1) % t == i;
    // a = 1: block 3,2,3 then block 3,3
    for (i, &(p1, x1)) in segs.iter().enumerate() {
        if x1 != 2 {
            continue;
        }
        for (j, &(p2, x2)) in segs.iter().enumerate() {
            if x2 == 1 && !adjacent(i, j) {
                ops.push(SeqOp::TypeIII { seq_index, pos1: p1, a: 1, pos2: p2, side: None });
            }
        }
    }
    // a = 0: two 3,3 blocks, unordered, times the side choice
    for (i, &(p1, x1)) in segs.iter().enumerate() {
        if x1 != 1 {
            continue;
        }
        for (j, &(p2, x2)) in segs.iter().enumerate().skip(i + 1) {
            if x2 == 1 && !adjacent(i, j) {
                for side in [Side::First, Side::Second] {
                    ops.push(SeqOp::TypeIII { seq_index, pos1: p1, a: 0, pos2: p2, side: Some(side) });
                }
            }
        }
    }
    ops
}

/// Type I operations on one member with `1 <= l <= d`, ordered by `l`.
pub fn path_ops(code: &BoundaryCode, seq_index: usize, d: usize) -> Vec<SeqOp> {
    let threes = code.three_positions();
    let mut ops = Vec::new();
    for l in 1..=d {
        for &pos in &threes {
            for b in (0..=l).step_by(2) {
                ops.push(SeqOp::TypeI { seq_index, pos, l, b });
            }
        }
    }
    ops
}

/// Every applicable type II, III, and I operation on one member.
pub fn member_ops(code: &BoundaryCode, seq_index: usize, d: usize) -> Vec<SeqOp> {
    let mut ops = boundary_ops(code, seq_index);
    ops.extend(path_ops(code, seq_index, d));
    ops
}

/// Every applicable operation of type I (length at most `d`), II, and III.
/// Type IV is handled by [`iv_closure`].
pub fn enumerate_ops(list: &SequenceList, d: usize) -> Vec<SeqOp> {
    let mut ops = Vec::new();
    for (i, c) in list.items().iter().enumerate() {
        ops.extend(boundary_ops(c, i));
    }
    for (i, c) in list.items().iter().enumerate() {
        ops.extend(path_ops(c, i, d));
    }
    ops
}

/// Strict upper bound on the number of enumerated operations.
pub fn enumeration_bound(list: &SequenceList, d: usize) -> usize {
    let d3 = list.d3();
    d3 * d3 + d * d * d3
}

/// Removes every `(2)^5` member. Idempotent.
pub fn iv_closure(list: &SequenceList) -> SequenceList {
    iv_closure_steps(list).0
}

/// Like [`iv_closure`], also returning the individual type IV steps, each
/// relative to the list as it was when the step was taken.
pub fn iv_closure_steps(list: &SequenceList) -> (SequenceList, Vec<SeqOp>) {
    let mut items = list.items().to_vec();
    let mut steps = Vec::new();
    while let Some(i) = items.iter().position(BoundaryCode::is_pentagon) {
        items.remove(i);
        steps.push(SeqOp::TypeIV { seq_index: i });
    }
    (SequenceList::new(items), steps)
}

/// One step of an [`OpTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: SeqOp,
    pub anchor: Anchor,
    pub result: SequenceList,
}

/// Ordered record of applied operations with snapshots after each one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpTrace {
    pub initial: SequenceList,
    pub steps: Vec<TraceStep>,
}

impl OpTrace {
    pub fn new(initial: SequenceList) -> Self {
        OpTrace { initial, steps: Vec::new() }
    }

    pub fn current(&self) -> &SequenceList {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.initial)
    }

    pub fn push(&mut self, op: SeqOp) -> Result<(), OpError> {
        let (result, anchor) = apply_anchored(self.current(), &op)?;
        self.steps.push(TraceStep { op, anchor, result });
        Ok(())
    }

    /// Applies `op` followed by the type IV closure.
    pub fn push_closed(&mut self, op: SeqOp) -> Result<(), OpError> {
        self.push(op)?;
        let (_, ivs) = iv_closure_steps(self.current());
        for iv in ivs {
            self.push(iv)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks that consecutive snapshots are related by their operation and
    /// that each step lowers `f5` by one.
    pub fn is_consistent(&self) -> bool {
        let mut cur = self.initial.clone();
        for step in &self.steps {
            match apply_anchored(&cur, &step.op) {
                Ok((next, anchor)) if next == step.result && anchor == step.anchor => {
                    if next.f5() != cur.f5() - 1 {
                        return false;
                    }
                    cur = next;
                }
                _ => return false,
            }
        }
        true
    }
}

impl fmt::Display for OpTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start {}", self.initial)?;
        for s in &self.steps {
            writeln!(f, "{} -> {}", s.op, s.result)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary_code::parse;

    fn list(s: &str) -> SequenceList {
        parse(s).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_pattern(1, 0).unwrap(), Vec::<u8>::new());
        assert_eq!(sigma_pattern(3, 0).unwrap(), vec![2, 3]);
        assert_eq!(sigma_pattern(3, 2).unwrap(), vec![3, 2]);
        assert_eq!(sigma_pattern(4, 2).unwrap(), vec![3, 2, 2]);
        assert_eq!(sigma_pattern(5, 0).unwrap(), vec![2, 3, 2, 3]);
        assert_eq!(sigma_pattern(3, 1), Err(OpError::BadBend { l: 3, b: 1 }));
        assert_eq!(sigma_pattern(2, 4), Err(OpError::BadBend { l: 2, b: 4 }));
        assert!(sigma_pattern(0, 0).is_err());
    }

    #[test]
    fn sigma_complement_reversal() {
        for l in 1..12 {
            for b in (0..=l).step_by(2) {
                let s = sigma_pattern(l, b).unwrap();
                let rc: Vec<u8> = s.iter().rev().map(|&d| 5 - d).collect();
                for i in 1..l {
                    assert_eq!(rc[i - 1] == 3, s[l - i - 1] == 2, "l={l} b={b} i={i}");
                }
            }
        }
    }

    #[test]
    fn type_i_length_one() {
        let out = apply(&list("3222222"), &SeqOp::TypeI { seq_index: 0, pos: 0, l: 1, b: 0 }).unwrap();
        assert_eq!(out, list("22333322222222"));
    }

    #[test]
    fn type_ii_pentagon_on_hexagon() {
        let out = apply(&list("322232222"), &SeqOp::TypeII { seq_index: 0, pos: 0, x: 4 }).unwrap();
        assert_eq!(out, list("222222"));
    }

    #[test]
    fn type_ii_wrapping_block_moves_to_front() {
        // 3 at 8, 3 at 3: block 3,2,2,2,3 wraps around the end
        let out = apply(&list("222322223"), &SeqOp::TypeII { seq_index: 0, pos: 8, x: 4 }).unwrap();
        assert_eq!(out, list("222222"));
    }

    #[test]
    fn type_ii_requires_distinct_threes() {
        let r = apply(&list("32222"), &SeqOp::TypeII { seq_index: 0, pos: 0, x: 4 });
        assert!(matches!(r, Err(OpError::NotApplicable(_))));
    }

    #[test]
    fn type_iii_mechanical_rewrite() {
        let out = apply(&list("32333"), &SeqOp::TypeIII { seq_index: 0, pos1: 0, a: 1, pos2: 3, side: None }).unwrap();
        assert_eq!(out, list("22|22"));
        let overl = apply(&list("32333"), &SeqOp::TypeIII { seq_index: 0, pos1: 0, a: 1, pos2: 2, side: None });
        assert_eq!(overl, Err(OpError::OverlappingBlocks));
    }

    #[test]
    fn type_iii_sides() {
        let base = list("3322332222");
        let first = apply(&base, &SeqOp::TypeIII { seq_index: 0, pos1: 0, a: 0, pos2: 4, side: Some(Side::First) }).unwrap();
        assert_eq!(first, list("23222|222222"));
        let second = apply(&base, &SeqOp::TypeIII { seq_index: 0, pos1: 0, a: 0, pos2: 4, side: Some(Side::Second) }).unwrap();
        assert_eq!(second, list("2222|2322222"));
    }

    #[test]
    fn type_iv_examples() {
        let out = apply(&list("22222|222222"), &SeqOp::TypeIV { seq_index: 0 }).unwrap();
        assert_eq!(out, list("222222"));
        assert!(apply(&list("222222"), &SeqOp::TypeIV { seq_index: 0 }).is_err());
    }

    #[test]
    fn iv_closure_examples() {
        assert_eq!(iv_closure(&list("22222|22222")), SequenceList::empty());
        assert_eq!(iv_closure(&list("222222")), list("222222"));
        assert_eq!(iv_closure(&list("22222|2323232323")), list("2323232323"));
        let once = iv_closure(&list("22222|222222|22222"));
        assert_eq!(iv_closure(&once), once);
    }

    #[test]
    fn enumerate_examples() {
        assert!(enumerate_ops(&list("222222"), 5).is_empty());
        let ops = enumerate_ops(&list("2323232323"), 1);
        assert_eq!(ops.len(), 10);
        assert_eq!(ops.iter().filter(|o| matches!(o, SeqOp::TypeI { .. })).count(), 5);
        assert_eq!(ops.iter().filter(|o| matches!(o, SeqOp::TypeII { x: 2, .. })).count(), 5);
        let big = enumerate_ops(&list("2323232323"), 7);
        assert!(big.len() < 270);
    }

    #[test]
    fn op_text_round_trip() {
        let ops = [
            SeqOp::TypeI { seq_index: 0, pos: 3, l: 2, b: 0 },
            SeqOp::TypeII { seq_index: 0, pos: 1, x: 4 },
            SeqOp::TypeIII { seq_index: 0, pos1: 0, a: 1, pos2: 7, side: None },
            SeqOp::TypeIII { seq_index: 1, pos1: 2, a: 0, pos2: 9, side: Some(Side::Second) },
            SeqOp::TypeIV { seq_index: 2 },
        ];
        assert_eq!(ops[0].to_string(), "I seq=0 pos=3 l=2 b=0");
        assert_eq!(ops[2].to_string(), "III seq=0 pos1=0 a=1 pos2=7 side=-");
        for op in ops {
            assert_eq!(op.to_string().parse::<SeqOp>().unwrap(), op);
        }
        assert!("V seq=0".parse::<SeqOp>().is_err());
    }
}

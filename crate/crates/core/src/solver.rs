//! Recursive reduction of boundary codes to the hexagonal case.
//!
//! Sequence operations on different members of a list commute, so a list is
//! solvable exactly when each member is. Each member is reduced on its own:
//! a member with `f5 = 0` is handed to the hexagonal search, a member with
//! `f5 > 0` is solvable when some operation of type II, III, or I (length at
//! most `d`) turns it into solvable members. Every operation lowers `f5` by
//! one, so the recursion depth is bounded by `f5` of the input.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::boundary_code::{BoundaryCode, SequenceList};
use crate::error::{PatchError, SolverError};
use crate::oracle::{block_walk, LatticeWalk, Oracle};
use crate::patch_graph::{canonical_form, reverse_cut, Patch, PatchSet};
use crate::sequence_ops::{
    apply_anchored, enumeration_bound, iv_closure_steps, member_ops, rewrite_member, type_i_block, OpTrace, Rewrite, SeqOp,
};

/// Tuning knobs for [`decide`] and [`count_solutions`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum type I length; defaults to `n - 3`.
    pub d_override: Option<usize>,
    /// Accept codes with `f5 > 5`, using `d = max(n - 3, 10)`.
    pub conjecture_mode: bool,
    pub want_witness: bool,
    pub count_cap: Option<usize>,
    /// Give up with [`SolverError::NodeLimit`] after expanding this many members.
    pub node_limit: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    /// Members expanded by the recursion (memo hits excluded).
    pub nodes: u64,
    /// Calls into the hexagonal search.
    pub base_calls: u64,
    /// Largest number of operations applied along one explored path.
    pub max_depth: usize,
    /// Largest number of operations enumerated at one node.
    pub max_fanout: usize,
    /// Enumerations that reached the `d3^2 + d^2 d3` bound.
    pub bound_violations: u64,
    pub elapsed: Duration,
    /// Set for answers on codes with `f5 > 5`, where the choice of `d`
    /// rests on an unproven distance bound.
    pub conditional: bool,
}

#[derive(Debug, Clone)]
pub struct Answer {
    pub exists: bool,
    pub d: usize,
    pub witness: Option<PatchSet>,
    pub trace: Option<OpTrace>,
    pub stats: Stats,
}

/// Solver with a memo that persists across queries.
#[derive(Debug, Default)]
pub struct Solver {
    memo: Mutex<HashMap<(Vec<u8>, usize), bool>>,
    oracle: Oracle,
}

fn trivially_unsolvable(code: &BoundaryCode) -> bool {
    unsolvable_by_counts(code.len(), code.d3())
}

/// Rejects lengths below 5, negative `f5`, a single 3, and all-2 codes
/// other than the pentagon and hexagon.
fn unsolvable_by_counts(n: usize, d3: usize) -> bool {
    let f5 = 6 + 2 * d3 as i64 - n as i64;
    n < 5 || f5 < 0 || d3 == 1 || (d3 == 0 && n > 6)
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    /// The `d` used for `code` under `cfg`, or an error if `code` is out of range.
    pub fn parameter(code: &BoundaryCode, cfg: &SolverConfig) -> Result<usize, SolverError> {
        let f5 = code.f5();
        if f5 > 5 && !cfg.conjecture_mode {
            return Err(SolverError::Unsupported(f5));
        }
        let base = code.len().saturating_sub(3).max(1);
        Ok(cfg.d_override.unwrap_or(if cfg.conjecture_mode { base.max(10) } else { base }))
    }

    pub fn decide(&self, code: &BoundaryCode, cfg: &SolverConfig) -> Result<Answer, SolverError> {
        let d = Self::parameter(code, cfg)?;
        let mut ans = self.test_recurse(&SequenceList::single(code.clone()), d, cfg)?;
        ans.stats.conditional = cfg.conjecture_mode && code.f5() > 5;
        Ok(ans)
    }

    /// Decides whether every member of `list` is the boundary code of a patch,
    /// using type I operations of length at most `d`.
    pub fn test_recurse(&self, list: &SequenceList, d: usize, cfg: &SolverConfig) -> Result<Answer, SolverError> {
        let start = Instant::now();
        let mut run = Run { stats: Stats::default(), limit: cfg.node_limit.unwrap_or(u64::MAX) };
        let mut exists = true;
        for c in list.items() {
            if !self.solve(c, d, 0, &mut run)? {
                exists = false;
                break;
            }
        }
        let (mut trace, mut witness) = (None, None);
        if exists && cfg.want_witness {
            let t = self.trace(list, d)?;
            witness = Some(self.build_base_and_replay(&t)?);
            trace = Some(t);
        }
        let mut stats = run.stats;
        stats.elapsed = start.elapsed();
        Ok(Answer { exists, d, witness, trace, stats })
    }

    fn solve(&self, code: &BoundaryCode, d: usize, depth: usize, run: &mut Run) -> Result<bool, SolverError> {
        run.stats.max_depth = run.stats.max_depth.max(depth);
        let (n, d3) = (code.len(), code.d3());
        if unsolvable_by_counts(n, d3) {
            return Ok(false);
        }
        if n == 5 && d3 == 0 {
            return Ok(true);
        }
        let f5 = 6 + 2 * d3 as i64 - n as i64;
        if f5 == 0 {
            run.stats.base_calls += 1;
            return Ok(self.oracle.exists_hex(code));
        }
        let key = (Vec::from(code.canonical_rotation()), d);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let canon = BoundaryCode::from_raw(key.0.clone());
        if run.stats.nodes >= run.limit {
            return Err(SolverError::NodeLimit(run.limit));
        }
        run.stats.nodes += 1;
        let ops = member_ops(&canon, 0, d);
        run.stats.max_fanout = run.stats.max_fanout.max(ops.len());
        if ops.len() >= enumeration_bound(&SequenceList::single(canon.clone()), d) {
            run.stats.bound_violations += 1;
        }
        // results of an f5 = 1 member are hexagonal: reject non-closing walks cheaply
        let filter = (f5 == 1).then(|| ClosureFilter::new(&canon, d));
        let mut result = false;
        for op in &ops {
            if filter.as_ref().is_some_and(|f| !f.may_close(op)) {
                continue;
            }
            let solved = match rewrite_member(&canon, op) {
                Ok(Rewrite::One(c, _)) => self.solve(&c, d, depth + 1, run)?,
                Ok(Rewrite::Two(c1, c2, _)) => {
                    !trivially_unsolvable(&c1)
                        && !trivially_unsolvable(&c2)
                        && self.solve(&c1, d, depth + 1, run)?
                        && self.solve(&c2, d, depth + 1, run)?
                }
                Ok(Rewrite::Removed(_)) => true,
                Err(_) => false,
            };
            if solved {
                result = true;
                break;
            }
        }
        self.memo.lock().unwrap().insert(key, result);
        Ok(result)
    }

    fn solvable(&self, code: &BoundaryCode, d: usize) -> bool {
        let mut run = Run { stats: Stats::default(), limit: u64::MAX };
        self.solve(code, d, 0, &mut run).unwrap_or(false)
    }

    /// Replays the memoized choices on the actual list, recording each
    /// operation with its anchors. The final snapshot has only `f5 = 0` members.
    fn trace(&self, list: &SequenceList, d: usize) -> Result<OpTrace, SolverError> {
        let mut trace = OpTrace::new(list.clone());
        for iv in iv_closure_steps(list).1 {
            trace.push(iv)?;
        }
        while let Some(i) = trace.current().items().iter().position(|c| c.f5() > 0) {
            let cur = trace.current().clone();
            let code = &cur.items()[i];
            let chosen = member_ops(code, i, d).into_iter().find(|op| {
                apply_anchored(&cur, op).is_ok_and(|(post, _)| {
                    let added = post.len() + 1 - cur.len();
                    post.items()[i..i + added].iter().all(|c| self.solvable(c, d))
                })
            });
            let op = chosen.ok_or_else(|| {
                SolverError::Patch(PatchError::AnchorMismatch(format!("no solvable operation for {code}")))
            })?;
            trace.push_closed(op)?;
        }
        Ok(trace)
    }

    fn build_base_and_replay(&self, trace: &OpTrace) -> Result<PatchSet, SolverError> {
        let base = trace
            .current()
            .items()
            .iter()
            .map(|c| {
                self.oracle
                    .hex_witness(c)
                    .ok_or_else(|| PatchError::AnchorMismatch(format!("no hexagonal patch for {c}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(build_witness(trace, &base)?)
    }

    /// Number of distinct patches with boundary code `code`, saturating at `cap`.
    pub fn count_solutions(&self, code: &BoundaryCode, cap: usize, cfg: &SolverConfig) -> Result<usize, SolverError> {
        if code.f5() > 5 {
            return Err(SolverError::Unsupported(code.f5()));
        }
        let d = Self::parameter(code, cfg)?;
        Ok(self.solutions(code, d, cap.max(1)).len())
    }

    /// Distinct solutions of one member, index-wise, at most `cap` of them.
    pub fn solutions(&self, code: &BoundaryCode, d: usize, cap: usize) -> Vec<Patch> {
        if trivially_unsolvable(code) {
            return Vec::new();
        }
        if code.is_pentagon() {
            return vec![Patch::cycle(5)];
        }
        if code.f5() == 0 {
            return match crate::oracle::lattice_hexagons(code) {
                Some(h) => self.oracle.enumerate(code, h, cap),
                None => Vec::new(),
            };
        }
        if !self.solvable(code, d) {
            return Vec::new();
        }
        let single = SequenceList::single(code.clone());
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for op in member_ops(code, 0, d) {
            let Ok((post, anchor)) = apply_anchored(&single, &op) else { continue };
            if !post.items().iter().all(|c| self.solvable(c, d)) {
                continue;
            }
            let factors: Vec<Vec<Patch>> = post.items().iter().map(|c| self.solutions(c, d, cap)).collect();
            for combo in product(&factors) {
                let Ok(mut ps) = reverse_cut(&combo, &op, &anchor) else { continue };
                let p = ps.remove(0);
                if seen.insert(canonical_form(&p)) {
                    out.push(p);
                    if out.len() >= cap {
                        return out;
                    }
                }
            }
        }
        out
    }
}

struct Run {
    stats: Stats,
    limit: u64,
}

struct ClosureFilter {
    walk: LatticeWalk,
    /// Walks of the type I blocks, indexed by `l` then `b / 2`.
    type_i: Vec<Vec<((i64, i64), usize)>>,
}

impl ClosureFilter {
    fn new(code: &BoundaryCode, d: usize) -> Self {
        let type_i = (0..=d)
            .map(|l| {
                if l == 0 {
                    return Vec::new();
                }
                (0..=l).step_by(2).map(|b| block_walk(&type_i_block(l, b).expect("even bend"))).collect()
            })
            .collect();
        ClosureFilter { walk: LatticeWalk::new(code), type_i }
    }

    fn may_close(&self, op: &SeqOp) -> bool {
        match *op {
            SeqOp::TypeI { pos, l, b, .. } => self.walk.closes_with(pos, 1, self.type_i[l][b / 2]),
            SeqOp::TypeII { pos, x, .. } => {
                let mut block = vec![2];
                block.extend(std::iter::repeat_n(3, 4 - x));
                block.push(2);
                self.walk.closes_with(pos, x + 1, block_walk(&block))
            }
            _ => true,
        }
    }
}

fn product(factors: &[Vec<Patch>]) -> Vec<Vec<Patch>> {
    let mut acc: Vec<Vec<Patch>> = vec![Vec::new()];
    for f in factors {
        acc = acc
            .iter()
            .flat_map(|prefix| {
                f.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    acc
}

/// Undoes every step of `trace`, starting from patches `base` that realize
/// its final snapshot.
pub fn build_witness(trace: &OpTrace, base: &[Patch]) -> Result<PatchSet, PatchError> {
    let mut ps = base.to_vec();
    for step in trace.steps.iter().rev() {
        ps = reverse_cut(&ps, &step.op, &step.anchor)?;
    }
    Ok(ps)
}

/// Decides `code` with a fresh solver.
pub fn decide(code: &BoundaryCode, cfg: &SolverConfig) -> Result<Answer, SolverError> {
    Solver::new().decide(code, cfg)
}

pub fn test_recurse(list: &SequenceList, d: usize, cfg: &SolverConfig) -> Result<Answer, SolverError> {
    Solver::new().test_recurse(list, d, cfg)
}

pub fn count_solutions(code: &BoundaryCode, cap: usize, cfg: &SolverConfig) -> Result<usize, SolverError> {
    Solver::new().count_solutions(code, cap, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patch_graph::{equivalent, fixtures, validate_patch};

    fn code(s: &str) -> BoundaryCode {
        s.parse().unwrap()
    }

    fn witness_cfg() -> SolverConfig {
        SolverConfig { want_witness: true, ..Default::default() }
    }

    #[test]
    fn small_answers() {
        assert!(decide(&code("22222"), &witness_cfg()).unwrap().exists);
        assert!(decide(&code("222222"), &witness_cfg()).unwrap().exists);
        assert!(!decide(&code("2222222"), &witness_cfg()).unwrap().exists);
        assert!(!decide(&code("2222"), &witness_cfg()).unwrap().exists);
    }

    #[test]
    fn pentagon_hexagon_witness() {
        let c = code("322232222");
        let ans = decide(&c, &witness_cfg()).unwrap();
        assert!(ans.exists);
        let w = ans.witness.unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].boundary_code(), c);
        assert!(equivalent(&w[0], &fixtures::pentagon_hexagon()));
        assert!(ans.trace.unwrap().is_consistent());
    }

    #[test]
    fn six_pentagons_need_conjecture_mode() {
        let c = code("2323232323");
        assert_eq!(decide(&c, &SolverConfig::default()).unwrap_err(), SolverError::Unsupported(6));
        let conj = SolverConfig { conjecture_mode: true, ..Default::default() };
        assert_eq!(Solver::parameter(&c, &conj).unwrap(), 10);
        // a short type I bound keeps this quick; the default d = 10 finds the same answer
        let cfg = SolverConfig { conjecture_mode: true, want_witness: true, d_override: Some(3), ..Default::default() };
        let ans = decide(&c, &cfg).unwrap();
        assert_eq!(ans.d, 3);
        assert!(ans.exists && ans.stats.conditional);
        let w = ans.witness.unwrap();
        assert_eq!(w[0].boundary_code(), c);
        assert_eq!(w[0].face_count(), 6);
        assert!(w[0].inner_faces().iter().all(|f| f.len() == 5));
        assert!(ans.stats.max_depth <= 6);
    }

    #[test]
    fn recursion_over_lists() {
        let empty = SequenceList::empty();
        assert!(test_recurse(&empty, 3, &witness_cfg()).unwrap().exists);
        let cfg = SolverConfig { conjecture_mode: true, want_witness: true, ..Default::default() };
        let ans = test_recurse(&crate::parse("2323232323").unwrap(), 7, &cfg).unwrap();
        let t = ans.trace.unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.current().is_empty() || t.current().f5() == 0);
    }

    #[test]
    fn replay_of_empty_trace_is_identity() {
        let hex = fixtures::hexagon();
        let trace = OpTrace::new(SequenceList::single(hex.boundary_code()));
        let out = build_witness(&trace, std::slice::from_ref(&hex)).unwrap();
        assert!(equivalent(&out[0], &hex));
    }

    #[test]
    fn replay_of_single_type_ii() {
        let mut trace = OpTrace::new(crate::parse("322232222").unwrap());
        trace.push(SeqOp::TypeII { seq_index: 0, pos: 0, x: 4 }).unwrap();
        let out = build_witness(&trace, &[fixtures::hexagon()]).unwrap();
        assert!(equivalent(&out[0], &fixtures::pentagon_hexagon()));
        assert!(validate_patch(out[0].graph().clone()).is_ok());
    }

    #[test]
    fn counts() {
        let cfg = SolverConfig::default();
        assert_eq!(count_solutions(&code("222222"), 10, &cfg).unwrap(), 1);
        assert_eq!(count_solutions(&code("22222"), 10, &cfg).unwrap(), 1);
        assert_eq!(count_solutions(&code("322232222"), 10, &cfg).unwrap(), 1);
    }
}

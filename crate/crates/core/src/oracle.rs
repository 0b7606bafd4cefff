//! Exhaustive patch search, used as ground truth and as the hexagonal base case.
//!
//! A patch is filled face by face from its boundary. Pick a maximal run
//! `3, (2)^(x-1), 3` of the code: its `x` boundary edges lie on one inner face
//! `f`. Guess the length of `f`, which other runs of the code also lie on `f`,
//! and how many interior edges separate consecutive runs along `f`. Deleting
//! `f` leaves one smaller patch per gap between chosen runs, each with a
//! boundary code read off from the guess, and the patch is rebuilt by gluing
//! `f` back with [`glue_face`].
//!
//! Existence queries memoize the minimum face count per code rotation class.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::boundary_code::BoundaryCode;
use crate::error::OracleError;
use crate::patch_graph::{canonical_form, glue_face, GluePart, Patch};
use crate::sequence_ops::segments;

/// Parameters of [`fill_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub allow_pentagons: bool,
    /// Largest number of inner faces a returned patch may have.
    pub face_budget: usize,
    /// When false, the search stops after the first patch.
    pub collect_witnesses: bool,
    pub witness_cap: usize,
}

impl SearchConfig {
    /// Pentagons allowed, budget `n^2`, collecting up to 1000 patches.
    pub fn for_code(code: &BoundaryCode) -> Self {
        SearchConfig {
            allow_pentagons: true,
            face_budget: default_budget(code),
            collect_witnesses: true,
            witness_cap: 1000,
        }
    }
}

pub fn default_budget(code: &BoundaryCode) -> usize {
    (code.len() * code.len()).max(1)
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    /// Smallest face count over all solutions.
    Found(usize),
    /// No solution with at most this many faces.
    NotWithin(usize),
}

/// One way of choosing the face that contains the longest boundary run.
#[derive(Debug, Clone)]
struct Branch {
    /// Codes of the patches left after deleting the face.
    parts: Vec<BoundaryCode>,
    /// Boundary index, in each part, of the anchor where the face resumes.
    anchors: Vec<usize>,
    /// Boundary edges of the face between part `j` and part `j + 1`.
    runs: Vec<usize>,
    /// Index of the glued patch's first boundary vertex in the original code.
    shift: usize,
}

/// Position and direction of the forced walk along a hexagonal-lattice
/// boundary; directions are multiples of 60 degrees in axial coordinates.
const DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Number of hexagons enclosed by the lattice walk that a hexagonal patch
/// with this code would trace, or `None` when the walk does not close up.
///
/// Walking clockwise, the walk turns right at each 2 and left at each 3.
pub fn lattice_hexagons(code: &BoundaryCode) -> Option<usize> {
    if code.is_empty() || code.f5() != 0 {
        return None;
    }
    let (mut x, mut y, mut dir) = (0i64, 0i64, 0usize);
    let mut twice_area = 0i64;
    for &deg in code.degrees() {
        let (dx, dy) = DIRS[dir];
        let (nx, ny) = (x + dx, y + dy);
        twice_area += x * ny - nx * y;
        x = nx;
        y = ny;
        dir = turn(dir, deg);
    }
    if (x, y) != (0, 0) || dir != 0 {
        return None;
    }
    // a unit hexagon has twice_area 6 in this basis; clockwise walks are negative
    (twice_area < 0 && twice_area % 6 == 0).then(|| (-twice_area / 6) as usize)
}

/// Whether the forced lattice walk closes (a necessary condition for a
/// hexagonal patch).
pub fn lattice_closes(code: &BoundaryCode) -> bool {
    lattice_hexagons(code).is_some()
}

fn rotate60(v: (i64, i64), times: usize) -> (i64, i64) {
    (0..times % 6).fold(v, |(q, r), _| (-r, q + r))
}

fn turn(dir: usize, deg: u8) -> usize {
    if deg == 2 {
        (dir + 5) % 6
    } else {
        (dir + 1) % 6
    }
}

/// Displacement and net turn of a lattice walk over `degrees` that starts in direction 0.
pub fn block_walk(degrees: &[u8]) -> ((i64, i64), usize) {
    let (mut x, mut y, mut dir) = (0i64, 0i64, 0usize);
    for &deg in degrees {
        x += DIRS[dir].0;
        y += DIRS[dir].1;
        dir = turn(dir, deg);
    }
    ((x, y), dir)
}

/// Prefix sums of the forced lattice walk over two turns of a code, for
/// testing closure after a window of the code is rewritten.
#[derive(Debug, Clone)]
pub struct LatticeWalk {
    pos: Vec<(i64, i64)>,
    dir: Vec<usize>,
    n: usize,
}

impl LatticeWalk {
    pub fn new(code: &BoundaryCode) -> Self {
        let n = code.len();
        let mut pos = Vec::with_capacity(2 * n + 1);
        let mut dir = Vec::with_capacity(2 * n + 1);
        pos.push((0, 0));
        dir.push(0);
        for i in 0..2 * n {
            let (x, y) = pos[i];
            let d = dir[i];
            pos.push((x + DIRS[d].0, y + DIRS[d].1));
            dir.push(turn(d, code.at(i)));
        }
        LatticeWalk { pos, dir, n }
    }

    /// Whether the walk closes after replacing the `w` entries starting at
    /// `start` by a block with the given [`block_walk`].
    pub fn closes_with(&self, start: usize, w: usize, block: ((i64, i64), usize)) -> bool {
        let s = start % self.n;
        let (a, b) = (s + w, s + self.n);
        let rest = (self.pos[b].0 - self.pos[a].0, self.pos[b].1 - self.pos[a].1);
        let rest_turn = (self.dir[b] + 6 - self.dir[a]) % 6;
        if !(block.1 + rest_turn).is_multiple_of(6) {
            return false;
        }
        let r = rotate60(rest, (block.1 + 6 - self.dir[a]) % 6);
        block.0 .0 + r.0 == 0 && block.0 .1 + r.1 == 0
    }
}

fn lower_bound(code: &BoundaryCode) -> Option<usize> {
    let n = code.len();
    let f5 = code.f5();
    if n < 5 || f5 < 0 {
        return None;
    }
    let d3 = code.d3();
    if d3 == 0 {
        return (n == 5 || n == 6).then_some(1);
    }
    if d3 == 1 {
        return None;
    }
    if f5 == 0 {
        return lattice_hexagons(code);
    }
    Some(1 + d3.div_ceil(2))
}

fn compositions(total: usize, parts: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if parts == 1 {
        if total >= 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    for first in 1..total {
        cur.push(first);
        compositions(total - first, parts - 1, out, cur);
        cur.pop();
    }
}

fn branches(code: &BoundaryCode) -> Vec<Branch> {
    let n = code.len();
    let segs = segments(code);
    let t = segs.len();
    let i0 = (0..t).fold(0, |best, i| if segs[i].1 > segs[best].1 { i } else { best });
    let seg = |i: usize| segs[(i0 + i) % t];
    let lengths: &[usize] = if code.f5() >= 1 { &[5, 6] } else { &[6] };
    let mut chosen_sets: Vec<Vec<usize>> = vec![vec![0]];
    for i in 2..t.saturating_sub(1) {
        chosen_sets.push(vec![0, i]);
        for j in i + 2..t - 1 {
            chosen_sets.push(vec![0, i, j]);
        }
    }
    let mut out = Vec::new();
    for &len in lengths {
        for chosen in &chosen_sets {
            let k = chosen.len();
            let xs: Vec<usize> = chosen.iter().map(|&i| seg(i).1).collect();
            let sx: usize = xs.iter().sum();
            if 2 * k > len || sx + k > len {
                continue;
            }
            // part j lies between the end of chosen run j and the start of run j + 1
            let ends: Vec<usize> = chosen.iter().map(|&i| seg(i).0 + seg(i).1).collect();
            let arcs: Vec<usize> = (0..k)
                .map(|j| {
                    let next_start = seg(chosen[(j + 1) % k]).0;
                    (next_start + 2 * n - ends[j]) % n
                })
                .map(|a| if a == 0 { n } else { a })
                .collect();
            let mut ms = Vec::new();
            compositions(len - sx, k, &mut ms, &mut Vec::new());
            for m in ms {
                let mut parts = Vec::with_capacity(k);
                let mut anchors = Vec::with_capacity(k);
                for j in 0..k {
                    let mut deg = Vec::with_capacity(arcs[j] + m[j]);
                    deg.push(2);
                    for s in 1..arcs[j] {
                        deg.push(code.at(ends[j] + s));
                    }
                    deg.push(2);
                    deg.extend(std::iter::repeat_n(3, m[j] - 1));
                    anchors.push(arcs[j]);
                    parts.push(BoundaryCode::from_raw(deg));
                }
                let runs = (0..k).map(|j| xs[(j + 1) % k]).collect();
                out.push(Branch { parts, anchors, runs, shift: ends[0] % n });
            }
        }
    }
    out
}

fn glue(branch: &Branch, pieces: &[&Patch], n: usize) -> Option<Patch> {
    let parts: Vec<GluePart<'_>> = pieces
        .iter()
        .zip(&branch.anchors)
        .map(|(p, &s)| GluePart { patch: p, e: 0, s })
        .collect();
    let glued = glue_face(&parts, &branch.runs).ok()?;
    Some(glued.rotate_boundary((n - branch.shift % n) % n))
}

/// Exhaustive searcher with a shared existence memo.
#[derive(Debug, Default)]
pub struct Oracle {
    memo: Mutex<HashMap<Vec<u8>, Entry>>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance whose memo persists between calls.
    pub fn shared() -> &'static Oracle {
        static SHARED: OnceLock<Oracle> = OnceLock::new();
        SHARED.get_or_init(Oracle::new)
    }

    /// Smallest face count of a patch with this boundary code, if some patch
    /// has at most `budget` faces.
    pub fn min_faces(&self, code: &BoundaryCode, budget: usize) -> Option<usize> {
        let lb = lower_bound(code)?;
        if lb > budget {
            return None;
        }
        if code.d3() == 0 {
            return Some(1);
        }
        let key = code.canonical_rotation().degrees().to_vec();
        match self.memo.lock().unwrap().get(&key) {
            Some(Entry::Found(m)) => return (*m <= budget).then_some(*m),
            Some(Entry::NotWithin(b)) if *b >= budget => return None,
            _ => {}
        }
        let mut best: Option<usize> = None;
        for br in branches(code) {
            let limit = best.map_or(budget, |b| b - 1).min(budget);
            if limit < 1 {
                break;
            }
            let Some(lbs) = br.parts.iter().map(lower_bound).collect::<Option<Vec<_>>>() else {
                continue;
            };
            let rest = limit - 1;
            let sum_lb: usize = lbs.iter().sum();
            if sum_lb > rest {
                continue;
            }
            let mut total = 1;
            let mut ok = true;
            for (j, part) in br.parts.iter().enumerate() {
                let later: usize = lbs[j + 1..].iter().sum();
                let Some(share) = rest.checked_sub(total - 1 + later) else {
                    ok = false;
                    break;
                };
                match self.min_faces(part, share) {
                    Some(m) => total += m,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && total <= limit {
                best = Some(total);
            }
        }
        let mut memo = self.memo.lock().unwrap();
        match best {
            Some(m) => {
                memo.insert(key, Entry::Found(m));
            }
            None => {
                let e = memo.entry(key).or_insert(Entry::NotWithin(budget));
                if let Entry::NotWithin(b) = e {
                    *b = (*b).max(budget);
                }
            }
        }
        best
    }

    /// All patches with this code (index-wise) and at most `budget` faces,
    /// stopping once `cap` distinct patches are known.
    pub fn enumerate(&self, code: &BoundaryCode, budget: usize, cap: usize) -> Vec<Patch> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.enumerate_into(code, budget, cap, &mut |p| {
            if seen.insert(canonical_form(&p)) {
                out.push(p);
            }
            out.len() < cap
        });
        out
    }

    /// Feeds patches to `sink` until it returns false; returns false if stopped.
    fn enumerate_into(&self, code: &BoundaryCode, budget: usize, cap: usize, sink: &mut dyn FnMut(Patch) -> bool) -> bool {
        if cap == 0 || self.min_faces(code, budget).is_none() {
            return true;
        }
        let n = code.len();
        if code.d3() == 0 {
            return sink(Patch::cycle(n));
        }
        for br in branches(code) {
            let rest = budget - 1;
            let mins: Option<Vec<usize>> = br.parts.iter().map(|c| self.min_faces(c, rest)).collect();
            let Some(mins) = mins else { continue };
            let sum_min: usize = mins.iter().sum();
            if sum_min > rest {
                continue;
            }
            let lists: Vec<Vec<Patch>> = br
                .parts
                .iter()
                .zip(&mins)
                .map(|(c, &m)| self.enumerate(c, rest - (sum_min - m), cap))
                .collect();
            let mut idx = vec![0usize; lists.len()];
            loop {
                let pieces: Vec<&Patch> = idx.iter().zip(&lists).map(|(&i, l)| &l[i]).collect();
                let faces: usize = 1 + pieces.iter().map(|p| p.face_count()).sum::<usize>();
                if faces <= budget {
                    if let Some(p) = glue(&br, &pieces, n) {
                        debug_assert_eq!(&p.boundary_code(), code);
                        if !sink(p) {
                            return false;
                        }
                    }
                }
                // advance the mixed-radix counter
                let mut j = 0;
                while j < idx.len() {
                    idx[j] += 1;
                    if idx[j] < lists[j].len() {
                        break;
                    }
                    idx[j] = 0;
                    j += 1;
                }
                if j == idx.len() {
                    break;
                }
            }
        }
        true
    }

    pub fn fill_search(&self, code: &BoundaryCode, cfg: &SearchConfig) -> Result<Vec<Patch>, OracleError> {
        if !cfg.allow_pentagons && code.f5() != 0 {
            return Err(OracleError::Inconsistent(code.f5()));
        }
        let cap = if cfg.collect_witnesses { cfg.witness_cap.max(1) } else { 1 };
        Ok(self.enumerate(code, cfg.face_budget.max(1), cap))
    }

    pub fn exists(&self, code: &BoundaryCode, budget: usize) -> bool {
        self.min_faces(code, budget).is_some()
    }

    pub fn exists_hex(&self, code: &BoundaryCode) -> bool {
        match lattice_hexagons(code) {
            Some(h) => self.min_faces(code, h).is_some(),
            None => false,
        }
    }

    /// A hexagonal patch with this code, matching it index-wise.
    pub fn hex_witness(&self, code: &BoundaryCode) -> Option<Patch> {
        let h = lattice_hexagons(code)?;
        self.enumerate(code, h, 1).pop()
    }

    pub fn count_distinct(&self, code: &BoundaryCode, cap: usize) -> usize {
        self.enumerate(code, default_budget(code), cap.max(1)).len().min(cap)
    }
}

/// All patches with boundary code `code`, up to fixed-boundary equivalence.
pub fn fill_search(code: &BoundaryCode, cfg: &SearchConfig) -> Result<Vec<Patch>, OracleError> {
    Oracle::shared().fill_search(code, cfg)
}

/// Whether a patch with only hexagonal faces has boundary code `code`.
pub fn exists_hex(code: &BoundaryCode) -> bool {
    Oracle::shared().exists_hex(code)
}

/// Number of distinct patches with boundary code `code`, saturating at `cap`.
pub fn count_distinct(code: &BoundaryCode, cap: usize) -> usize {
    Oracle::shared().count_distinct(code, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patch_graph::{equivalent, fixtures};
    use crate::sequence_ops::SeqOp;

    fn code(s: &str) -> BoundaryCode {
        s.parse().unwrap()
    }

    fn search(s: &str, pent: bool) -> Vec<Patch> {
        let c = code(s);
        let cfg = SearchConfig { allow_pentagons: pent, ..SearchConfig::for_code(&c) };
        fill_search(&c, &cfg).unwrap()
    }

    #[test]
    fn single_faces() {
        assert_eq!(search("222222", false).len(), 1);
        assert_eq!(search("22222", true).len(), 1);
        assert!(search("2222222", true).is_empty());
    }

    #[test]
    fn flower_is_unique() {
        let ps = search("223223223223223223", false);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].face_count(), 7);
        assert!(equivalent(&ps[0], &fixtures::coronene()));
    }

    #[test]
    fn fused_pentagon_hexagon() {
        let ps = search("322232222", true);
        assert_eq!(ps.len(), 1);
        assert!(equivalent(&ps[0], &fixtures::pentagon_hexagon()));
        assert_eq!(count_distinct(&code("322232222"), 10), 1);
    }

    #[test]
    fn hemi_dodecahedron_found() {
        let c = code("3232323232");
        let cfg = SearchConfig { face_budget: 6, ..SearchConfig::for_code(&c) };
        let ps = fill_search(&c, &cfg).unwrap();
        assert!(ps.iter().any(|p| equivalent(p, &fixtures::hemi_dodecahedron())));
        assert!(ps.iter().all(|p| p.face_count() == 6 && p.f5() == 6));
    }

    #[test]
    fn hexagonal_existence() {
        assert!(exists_hex(&code("222222")));
        assert!(exists_hex(&code("223223223223223223")));
        assert!(!exists_hex(&code("2323232323")));
        assert!(!exists_hex(&code("3223222222")));
        assert!(!lattice_closes(&code("3223222222")));
        assert_eq!(lattice_hexagons(&code("223223223223223223")), Some(7));
        assert_eq!(lattice_hexagons(&code("222222")), Some(1));
    }

    #[test]
    fn incremental_closure_matches_full_walk() {
        use crate::sequence_ops::{apply, member_ops};
        use crate::SequenceList;
        for n in 5..=11 {
            for c in crate::boundary_code::all_codes_up_to_rotation(n) {
                if c.f5() != 1 {
                    continue;
                }
                let walk = LatticeWalk::new(&c);
                for op in member_ops(&c, 0, 4) {
                    let (start, w, block) = match op {
                        SeqOp::TypeI { pos, l, b, .. } => (pos, 1, crate::sequence_ops::type_i_block(l, b).unwrap()),
                        SeqOp::TypeII { pos, x, .. } => {
                            let mut blk = vec![2];
                            blk.extend(std::iter::repeat_n(3, 4 - x));
                            blk.push(2);
                            (pos, x + 1, blk)
                        }
                        _ => continue,
                    };
                    let post = apply(&SequenceList::single(c.clone()), &op).unwrap();
                    let full = post.items().iter().all(lattice_closes_turning);
                    assert_eq!(walk.closes_with(start, w, block_walk(&block)), full, "{c} {op}");
                }
            }
        }
    }

    fn lattice_closes_turning(c: &BoundaryCode) -> bool {
        let ((x, y), dir) = block_walk(c.degrees());
        (x, y) == (0, 0) && dir == 0
    }

    #[test]
    fn inconsistent_request() {
        let c = code("22222");
        let cfg = SearchConfig { allow_pentagons: false, ..SearchConfig::for_code(&c) };
        assert_eq!(fill_search(&c, &cfg), Err(OracleError::Inconsistent(1)));
    }

    #[test]
    fn witnesses_are_valid_and_distinct() {
        for s in ["322232222", "2223222322232", "22322322232223"] {
            let c = code(s);
            let ps = Oracle::new().enumerate(&c, default_budget(&c), 50);
            for (i, p) in ps.iter().enumerate() {
                assert_eq!(p.boundary_code(), c);
                assert_eq!(p.f5() as i64, c.f5());
                for q in &ps[..i] {
                    assert!(!equivalent(p, q));
                }
            }
        }
    }

    #[test]
    fn hexagonal_solutions_share_size() {
        for n in (6..=14).step_by(2) {
            for c in crate::boundary_code::all_codes_up_to_rotation(n) {
                if c.f5() != 0 {
                    continue;
                }
                let ps = Oracle::new().enumerate(&c, default_budget(&c), 20);
                if let Some(h) = lattice_hexagons(&c) {
                    assert!(ps.iter().all(|p| p.face_count() == h), "{c}");
                } else {
                    assert!(ps.is_empty(), "{c}");
                }
            }
        }
    }
}

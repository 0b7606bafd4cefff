//! Cutting operations and their reverses.

use std::collections::{HashSet, VecDeque};

use super::paths::dist_to_face;
use super::{OneBendPath, Patch, PlaneGraph};
use crate::error::PatchError;
use crate::sequence_ops::{type_i_block, Anchor, SeqOp, Side};

fn mismatch(msg: impl Into<String>) -> PatchError {
    PatchError::AnchorMismatch(msg.into())
}

/// Keeps only `keep` (sorted old ids), relabelling in increasing order.
fn extract(rot: &[Vec<usize>], keep: &[usize], boundary: &[usize]) -> Result<Patch, PatchError> {
    let mut new_id = vec![usize::MAX; rot.len()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let rotation = keep
        .iter()
        .map(|&v| rot[v].iter().map(|&w| new_id[w]).collect())
        .collect();
    let boundary = boundary.iter().map(|&v| new_id[v]).collect();
    Patch::from_parts(rotation, boundary)
}

fn reachable(rot: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut seen = vec![false; rot.len()];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    let mut out = vec![s];
    while let Some(v) = q.pop_front() {
        for &w in &rot[v] {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                q.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

fn trace(rot: &[Vec<usize>], he: (usize, usize)) -> Vec<usize> {
    let g = PlaneGraph::new(rot.to_vec(), he);
    g.trace_face_from(he)
}

fn rotate_to(cycle: &[usize], start: usize) -> Vec<usize> {
    let k = cycle.iter().position(|&v| v == start).expect("start on cycle");
    (0..cycle.len()).map(|i| cycle[(i + k) % cycle.len()]).collect()
}

fn check_path(p: &Patch, face: &[usize], path: &OneBendPath) -> Result<(), PatchError> {
    let v = &path.vertices;
    if v.is_empty() {
        return Err(PatchError::NotOneBend);
    }
    let on_b = p.boundary_set();
    if !on_b[v[0]] || v[1..].iter().any(|&w| on_b[w]) {
        return Err(PatchError::NotOneBend);
    }
    let distinct: HashSet<_> = v.iter().collect();
    if distinct.len() != v.len() || v.windows(2).any(|w| !p.graph().has_edge(w[0], w[1])) {
        return Err(PatchError::NotOneBend);
    }
    if !path.follows_pattern(p) {
        return Err(PatchError::NotOneBend);
    }
    if !face.contains(&path.end()) {
        return Err(PatchError::PathNotIncident);
    }
    if path.length() != dist_to_face(p, face) {
        return Err(PatchError::NotOneBend);
    }
    Ok(())
}

/// Removes the 5-face `face` using the 1-bend shortest path `path`.
///
/// Returns the resulting patches (none, one, or two) in the order the
/// induced sequence operation lists its output codes, together with that
/// operation. The output codes equal the rewritten codes index-wise.
pub fn cut(p: &Patch, face: &[usize], path: &OneBendPath) -> Result<(Vec<Patch>, SeqOp), PatchError> {
    if face.len() != 5 || !p.is_inner_face(face) {
        return Err(PatchError::NotFiveFace);
    }
    check_path(p, face, path)?;
    if path.length() == 0 {
        cut_boundary_face(p, face)
    } else {
        cut_along_path(p, path)
    }
}

/// Splits every path vertex `u_i` into a right copy `X_i` (keeps the id) and
/// a left copy `Y_i` (new id). The boundary then reads
/// `.., pred, X_0 .. X_l, (rest of face), Y_l .. Y_0, succ, ..`.
fn cut_along_path(p: &Patch, path: &OneBendPath) -> Result<(Vec<Patch>, SeqOp), PatchError> {
    let g = p.graph();
    let u = &path.vertices;
    let l = path.length();
    let bnd = p.boundary();
    let n = bnd.len();
    let pos = p.boundary_index()[u[0]].unwrap();
    let pred = bnd[(pos + n - 1) % n];
    let n0 = g.vertex_count();
    let yid = |i: usize| n0 + i;
    let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
    rot.resize(n0 + l + 1, Vec::new());
    let on_path: HashSet<usize> = u.iter().copied().collect();

    for i in 0..=l {
        let here = u[i];
        let back = (i > 0).then(|| u[i - 1]);
        let fwd = (i < l).then(|| u[i + 1]);
        let right: Vec<usize> = match (back, fwd) {
            (None, Some(_)) => vec![pred],
            (Some(b), None) => vec![g.cw_pred(here, b)],
            (Some(b), Some(f)) => {
                let mut out = Vec::new();
                let mut w = g.cw_succ(here, f);
                while w != b {
                    out.push(w);
                    w = g.cw_succ(here, w);
                }
                out
            }
            (None, None) => unreachable!("l >= 1"),
        };
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &w in g.rotation(here) {
            if Some(w) == back {
                xs.push(w);
                ys.push(yid(i - 1));
            } else if Some(w) == fwd {
                xs.push(w);
                ys.push(yid(i + 1));
            } else if right.contains(&w) {
                xs.push(w);
            } else {
                ys.push(w);
            }
        }
        rot[here] = xs;
        rot[yid(i)] = ys;
    }
    for i in 0..=l {
        for w in rot[yid(i)].clone() {
            if w < n0 && !on_path.contains(&w) {
                for x in rot[w].iter_mut() {
                    if *x == u[i] {
                        *x = yid(i);
                    }
                }
            }
        }
    }
    let cycle = trace(&rot, (pred, u[0]));
    let boundary = rotate_to(&cycle, bnd[0]);
    let keep: Vec<usize> = (0..rot.len()).collect();
    let patch = extract(&rot, &keep, &boundary)?;
    Ok((vec![patch], SeqOp::TypeI { seq_index: 0, pos, l, b: path.bend }))
}

/// Deletes the boundary edges of a face touching the boundary, and any
/// vertices left isolated.
fn cut_boundary_face(p: &Patch, face: &[usize]) -> Result<(Vec<Patch>, SeqOp), PatchError> {
    let bnd = p.boundary();
    let n = bnd.len();
    let k = face.len();
    let marked: Vec<bool> = (0..n)
        .map(|j| {
            let (a, b) = (bnd[j], bnd[(j + 1) % n]);
            (0..k).any(|i| face[i] == b && face[(i + 1) % k] == a)
        })
        .collect();
    if marked.iter().all(|&m| m) {
        return Ok((Vec::new(), SeqOp::TypeIV { seq_index: 0 }));
    }
    // runs of marked boundary edges: (start position, edge count)
    let j0 = marked.iter().position(|&m| !m).unwrap();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for step in 1..=n {
        let j = (j0 + step) % n;
        if marked[j] {
            if marked[(j + n - 1) % n] {
                runs.last_mut().unwrap().1 += 1;
            } else {
                runs.push((j, 1));
            }
        }
    }
    let mut rot: Vec<Vec<usize>> = p.graph().rotations().to_vec();
    for j in (0..n).filter(|&j| marked[j]) {
        let (a, b) = (bnd[j], bnd[(j + 1) % n]);
        rot[a].retain(|&w| w != b);
        rot[b].retain(|&w| w != a);
    }
    let component = |seed: (usize, usize), start: usize| -> Result<Patch, PatchError> {
        let cycle = trace(&rot, seed);
        let boundary = rotate_to(&cycle, start);
        extract(&rot, &reachable(&rot, start), &boundary)
    };
    match *runs.as_slice() {
        [(pos, x)] => {
            let start = if pos + x < n { bnd[0] } else { bnd[pos] };
            let seed = (bnd[j0], bnd[(j0 + 1) % n]);
            let patch = component(seed, start)?;
            Ok((vec![patch], SeqOp::TypeII { seq_index: 0, pos, x }))
        }
        [r1, r2] => {
            let ((pos1, x1), (pos2, x2)) = match (r1.1, r2.1) {
                (1, 2) => (r2, r1),
                (1, 1) if r2.0 < r1.0 => (r2, r1),
                _ => (r1, r2),
            };
            if x2 != 1 || x1 > 2 {
                return Err(PatchError::NotFiveFace);
            }
            let a = x1 - 1;
            let e1 = (pos1 + a + 1) % n;
            let first = component((bnd[e1], bnd[(e1 + 1) % n]), bnd[pos2])?;
            let e2 = (pos2 + 1) % n;
            let second = component((bnd[e2], bnd[(e2 + 1) % n]), bnd[pos1])?;
            let side = if a == 0 {
                let ylen = (pos2 + n - (pos1 + a + 2) % n) % n;
                let b = first.boundary().len() - 2 - ylen;
                Some(if b == 1 { Side::First } else { Side::Second })
            } else {
                None
            };
            Ok((vec![first, second], SeqOp::TypeIII { seq_index: 0, pos1, a, pos2, side }))
        }
        _ => Err(PatchError::NotFiveFace),
    }
}

/// One component taking part in a face gluing, with the boundary indices of
/// its two degree-2 anchors.
#[derive(Debug, Clone, Copy)]
pub struct GluePart<'a> {
    pub patch: &'a Patch,
    /// Anchor where the new face's boundary run ends.
    pub e: usize,
    /// Anchor where the next boundary run starts.
    pub s: usize,
}

/// Adds a new inner face to a patch set, joining the parts in cyclic order.
///
/// A path of `runs[j]` edges is drawn in the outer face from the `s` anchor
/// of part `j` to the `e` anchor of part `j + 1` (cyclically). The new face
/// consists of these paths and, for each part, the stretch of its boundary
/// from `s` forward to `e`. The result's boundary starts at the `e` anchor of
/// part 0.
pub fn glue_face(parts: &[GluePart<'_>], runs: &[usize]) -> Result<Patch, PatchError> {
    let k = parts.len();
    if k == 0 || runs.len() != k || runs.contains(&0) {
        return Err(mismatch("need one run of at least one edge per part"));
    }
    let mut offsets = Vec::with_capacity(k);
    let mut rot: Vec<Vec<usize>> = Vec::new();
    for part in parts {
        let off = rot.len();
        offsets.push(off);
        for v in 0..part.patch.vertex_count() {
            rot.push(part.patch.rotation(v).iter().map(|&w| w + off).collect());
        }
    }
    let anchor = |j: usize, idx: usize| -> Result<(usize, usize), PatchError> {
        let b = parts[j].patch.boundary();
        if idx >= b.len() {
            return Err(mismatch(format!("anchor index {idx} out of range")));
        }
        let v = b[idx];
        if parts[j].patch.graph().degree(v) != 2 {
            return Err(mismatch(format!("anchor at boundary index {idx} has degree 3")));
        }
        let pred = b[(idx + b.len() - 1) % b.len()];
        Ok((v + offsets[j], pred + offsets[j]))
    };
    if k == 1 && parts[0].e == parts[0].s {
        return Err(mismatch("anchors coincide"));
    }
    // attach after the boundary predecessor so the outer walk turns onto the new edge
    fn attach(rot: &mut [Vec<usize>], v: usize, pred: usize, new: usize) {
        let i = rot[v].iter().position(|&w| w == pred).unwrap();
        rot[v].insert(i + 1, new);
    }
    let mut run_vertices: Vec<Vec<usize>> = Vec::with_capacity(k);
    for j in 0..k {
        let next = (j + 1) % k;
        let (sv, spred) = anchor(j, parts[j].s)?;
        let (ev, epred) = anchor(next, parts[next].e)?;
        let inner: Vec<usize> = (0..runs[j] - 1).map(|i| rot.len() + i).collect();
        let chain: Vec<usize> = std::iter::once(sv).chain(inner.iter().copied()).chain(std::iter::once(ev)).collect();
        rot.resize(rot.len() + inner.len(), Vec::new());
        for (i, &w) in inner.iter().enumerate() {
            rot[w] = vec![chain[i], chain[i + 2]];
        }
        attach(&mut rot, sv, spred, chain[1]);
        attach(&mut rot, ev, epred, chain[chain.len() - 2]);
        run_vertices.push(inner);
    }
    let mut boundary = Vec::new();
    for j in 0..k {
        let b = parts[j].patch.boundary();
        let len = b.len();
        let mut i = parts[j].e;
        loop {
            boundary.push(b[i] + offsets[j]);
            if i == parts[j].s {
                break;
            }
            i = (i + 1) % len;
        }
        boundary.extend_from_slice(&run_vertices[j]);
    }
    Patch::from_parts(rot, boundary)
}

fn check_degrees(p: &Patch, start: usize, pattern: &[u8]) -> Result<(), PatchError> {
    let b = p.boundary();
    if start + pattern.len() > b.len() {
        return Err(mismatch("block runs past the end of the code"));
    }
    for (i, &d) in pattern.iter().enumerate() {
        if p.graph().degree(b[start + i]) != d as usize {
            return Err(mismatch(format!("degree at boundary index {} is not {d}", start + i)));
        }
    }
    Ok(())
}

fn block(twos_then_threes: usize) -> Vec<u8> {
    let mut v = vec![2];
    v.extend(std::iter::repeat_n(3, twos_then_threes));
    v.push(2);
    v
}

/// Relabels the boundary so that the current index `i` becomes `(i + shift) mod n`.
fn shift_labels(p: Patch, shift: usize) -> Patch {
    let n = p.boundary().len();
    p.rotate_boundary((n - shift % n) % n)
}

/// Reverses the cutting operation recorded as `op` with post-image `anchor`.
///
/// The result realizes the pre-image list of `op` index-wise.
pub fn reverse_cut(ps: &[Patch], op: &SeqOp, anchor: &Anchor) -> Result<Vec<Patch>, PatchError> {
    let mut out = ps.to_vec();
    let get = |i: usize| ps.get(i).ok_or_else(|| mismatch(format!("no member {i}")));
    match (*op, *anchor) {
        (SeqOp::TypeIV { .. }, Anchor::TypeIV { seq_index }) => {
            if seq_index > ps.len() {
                return Err(mismatch("type IV index out of range"));
            }
            out.insert(seq_index, Patch::cycle(5));
        }
        (SeqOp::TypeI { l, b, .. }, Anchor::TypeI { seq_index, start, l: al }) if l == al => {
            let p = get(seq_index)?;
            let pattern = type_i_block(l, b).map_err(|e| mismatch(e.to_string()))?;
            check_degrees(p, start, &pattern)?;
            out[seq_index] = zip_slit(p, start, l)?;
        }
        (SeqOp::TypeII { pos, x, .. }, Anchor::TypeII { seq_index, start, x: ax }) if x == ax => {
            let p = get(seq_index)?;
            check_degrees(p, start, &block(4 - x))?;
            let glued = glue_face(&[GluePart { patch: p, e: start + 5 - x, s: start }], &[x])?;
            out[seq_index] = shift_labels(glued, pos + x);
        }
        (SeqOp::TypeIII { pos1, a, .. }, Anchor::TypeIII { first, second, a: aa, b, c }) if a == aa => {
            let f = get(first)?;
            let z = get(second)?;
            check_degrees(f, 0, &block(b))?;
            check_degrees(z, 0, &block(c))?;
            let parts = [GluePart { patch: f, e: b + 1, s: 0 }, GluePart { patch: z, e: c + 1, s: 0 }];
            let glued = glue_face(&parts, &[1, a + 1])?;
            out[first] = shift_labels(glued, pos1 + a + 1);
            out.remove(second);
        }
        _ => return Err(mismatch(format!("anchor {anchor:?} does not belong to {op}"))),
    }
    Ok(out)
}

/// Identifies the two sides of the type I block starting at `start`, closing
/// the slit and restoring the 5-face.
fn zip_slit(p: &Patch, start: usize, l: usize) -> Result<Patch, PatchError> {
    let bnd = p.boundary();
    let n = bnd.len();
    let len = 2 * l + 6;
    if n <= len {
        return Err(mismatch("type I block covers the whole code"));
    }
    let g = p.graph();
    let v = |j: usize| bnd[start + j];
    // linearized rotation: clockwise starting at the boundary successor
    let lin = |idx: usize| -> Vec<usize> {
        let w = bnd[idx % n];
        let succ = bnd[(idx + 1) % n];
        let r = g.rotation(w);
        let i = r.iter().position(|&x| x == succ).unwrap();
        (0..r.len()).map(|k| r[(i + k) % r.len()]).collect()
    };
    let mut merge_to: Vec<usize> = (0..g.vertex_count()).collect();
    for j in 0..=l {
        merge_to[v(len - 1 - j)] = v(j);
    }
    let mut rot: Vec<Vec<usize>> = g.rotations().iter().map(|r| r.iter().map(|&w| merge_to[w]).collect()).collect();
    for j in 0..=l {
        let mut combined: Vec<usize> = lin(start + j).into_iter().chain(lin(start + len - 1 - j)).map(|w| merge_to[w]).collect();
        combined.dedup();
        if combined.len() > 1 && combined.first() == combined.last() {
            combined.pop();
        }
        rot[v(j)] = combined;
    }
    let removed: HashSet<usize> = (0..=l).map(|j| v(len - 1 - j)).collect();
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|w| !removed.contains(w)).collect();
    let mut boundary: Vec<usize> = bnd[..start].to_vec();
    boundary.push(v(0));
    boundary.extend_from_slice(&bnd[start + len..]);
    extract(&rot, &keep, &boundary)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{equivalent, find_1bend_path, Patch};
    use super::*;
    use crate::boundary_code::SequenceList;
    use crate::sequence_ops::apply_anchored;

    fn codes(ps: &[Patch]) -> SequenceList {
        super::super::codes_of(ps)
    }

    #[test]
    fn cut_pentagon_to_empty() {
        let p = Patch::cycle(5);
        let f = p.inner_faces().remove(0);
        let path = find_1bend_path(&p, &f).unwrap();
        let (ps, op) = cut(&p, &f, &path).unwrap();
        assert!(ps.is_empty());
        assert_eq!(op, SeqOp::TypeIV { seq_index: 0 });
    }

    #[test]
    fn cut_pentagon_off_hexagon() {
        let p = pentagon_hexagon();
        let f = p.inner_faces().into_iter().find(|f| f.len() == 5).unwrap();
        let path = find_1bend_path(&p, &f).unwrap();
        let (ps, op) = cut(&p, &f, &path).unwrap();
        assert_eq!(op, SeqOp::TypeII { seq_index: 0, pos: 0, x: 4 });
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].boundary_code(), "222222".parse().unwrap());
        let (post, anchor) = apply_anchored(&codes(std::slice::from_ref(&p)), &op).unwrap();
        assert_eq!(codes(&ps), post);
        let back = reverse_cut(&ps, &op, &anchor).unwrap();
        assert!(equivalent(&back[0], &p));
    }

    #[test]
    fn cut_centre_of_hemi_dodecahedron() {
        let p = hemi_dodecahedron();
        let f = p.inner_faces().into_iter().find(|f| f.iter().all(|&v| v < 5)).unwrap();
        let path = find_1bend_path(&p, &f).unwrap();
        let (ps, op) = cut(&p, &f, &path).unwrap();
        assert!(matches!(op, SeqOp::TypeI { l: 1, b: 0, .. }));
        let (post, anchor) = apply_anchored(&codes(std::slice::from_ref(&p)), &op).unwrap();
        assert_eq!(codes(&ps), post);
        assert_eq!(ps[0].f5(), 5);
        let back = reverse_cut(&ps, &op, &anchor).unwrap();
        assert!(equivalent(&back[0], &p));
    }

    #[test]
    fn reverse_type_iv_on_empty() {
        let out = reverse_cut(&[], &SeqOp::TypeIV { seq_index: 0 }, &Anchor::TypeIV { seq_index: 0 }).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].boundary_code(), "22222".parse().unwrap());
    }

    #[test]
    fn reverse_type_ii_on_hexagon() {
        let hex = hexagon();
        let op = SeqOp::TypeII { seq_index: 0, pos: 0, x: 4 };
        let anchor = Anchor::TypeII { seq_index: 0, start: 0, x: 4 };
        let out = reverse_cut(&[hex], &op, &anchor).unwrap();
        assert_eq!(out[0].boundary_code(), "322232222".parse().unwrap());
        assert!(equivalent(&out[0], &pentagon_hexagon()));
    }

    #[test]
    fn anchor_mismatch_detected() {
        let op = SeqOp::TypeI { seq_index: 0, pos: 0, l: 1, b: 0 };
        let anchor = Anchor::TypeI { seq_index: 0, start: 0, l: 1 };
        let err = reverse_cut(&[coronene()], &op, &anchor).unwrap_err();
        assert!(matches!(err, PatchError::AnchorMismatch(_)));
    }
}

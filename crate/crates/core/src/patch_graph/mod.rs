//! Rotation-system plane graphs and fullerene patches.
//!
//! A [`PlaneGraph`] stores, for each vertex, its neighbours in clockwise
//! order, plus one designated half-edge of the outer face. Faces are never
//! stored: they are traced with the left-turn rule, where the walk arriving at
//! `v` from `u` continues to the clockwise successor of `u` around `v`. With
//! that rule inner faces come out anticlockwise and the outer face clockwise.

mod canon;
mod io;
mod paths;
mod surgery;

use std::collections::{HashSet, VecDeque};

use crate::boundary_code::{BoundaryCode, SequenceList};
use crate::error::PatchError;

pub use canon::{canonical_form, equivalent};
pub use io::{to_dot, to_svg, PatchRecord, PatchSetRecord, PATCH_RECORD_VERSION};
pub use paths::{
    dist_to_boundary, dist_to_face, find_1bend_path, one_bend_shortest_paths, OneBendPath, Turn,
};
pub use surgery::{cut, glue_face, reverse_cut, GluePart};

/// Directed edge `(from, to)`.
pub type HalfEdge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    outer: HalfEdge,
}

impl PlaneGraph {
    /// `rotation[v]` lists the neighbours of `v` clockwise; `outer` is a
    /// half-edge traversed by the (clockwise) outer facial walk.
    pub fn new(rotation: Vec<Vec<usize>>, outer: HalfEdge) -> Self {
        PlaneGraph { rotation, outer }
    }

    /// Builds rotations from a straight-line drawing: neighbours are sorted
    /// clockwise by angle. Only meant for hand-built test graphs.
    pub fn from_coordinates(points: &[(f64, f64)], edges: &[(usize, usize)], outer: HalfEdge) -> Self {
        let mut rotation = vec![Vec::new(); points.len()];
        for &(a, b) in edges {
            rotation[a].push(b);
            rotation[b].push(a);
        }
        for (v, nbrs) in rotation.iter_mut().enumerate() {
            let (x0, y0) = points[v];
            nbrs.sort_by(|&a, &b| {
                let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                tb.partial_cmp(&ta).unwrap()
            });
        }
        PlaneGraph { rotation, outer }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn outer(&self) -> HalfEdge {
        self.outer
    }

    fn index_of(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&w| w == u)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rotation.len() && self.rotation[u].contains(&v)
    }

    /// Neighbour following `u` clockwise around `v`.
    pub fn cw_succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = self.index_of(v, u).expect("not a neighbour");
        r[(i + 1) % r.len()]
    }

    /// Neighbour preceding `u` clockwise around `v`.
    pub fn cw_pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = self.index_of(v, u).expect("not a neighbour");
        r[(i + r.len() - 1) % r.len()]
    }

    /// Next half-edge of the facial walk through `he` (left-turn rule).
    pub fn face_successor(&self, he: HalfEdge) -> HalfEdge {
        let (u, v) = he;
        (v, self.cw_succ(v, u))
    }

    /// Vertices of the facial walk starting with half-edge `he`.
    pub fn trace_face_from(&self, he: HalfEdge) -> Vec<usize> {
        let mut walk = Vec::new();
        let mut cur = he;
        loop {
            walk.push(cur.0);
            cur = self.face_successor(cur);
            if cur == he {
                break;
            }
        }
        walk
    }

    pub fn check_consistency(&self) -> Result<(), PatchError> {
        let n = self.rotation.len();
        for (v, nbrs) in self.rotation.iter().enumerate() {
            let mut seen = HashSet::new();
            for &u in nbrs {
                if u >= n {
                    return Err(PatchError::InconsistentRotation(format!("{v} lists unknown vertex {u}")));
                }
                if u == v {
                    return Err(PatchError::InconsistentRotation(format!("loop at {v}")));
                }
                if !seen.insert(u) {
                    return Err(PatchError::InconsistentRotation(format!("parallel edges {v}-{u}")));
                }
                if !self.rotation[u].contains(&v) {
                    return Err(PatchError::InconsistentRotation(format!("{v}->{u} has no twin")));
                }
            }
        }
        Ok(())
    }

    /// All facial walks; each half-edge lies in exactly one.
    pub fn trace_faces(&self) -> Result<Vec<Vec<usize>>, PatchError> {
        self.check_consistency()?;
        let mut visited: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            for i in 0..self.rotation[v].len() {
                if visited[v][i] {
                    continue;
                }
                let start = (v, self.rotation[v][i]);
                let mut walk = Vec::new();
                let mut cur = start;
                loop {
                    let idx = self.index_of(cur.0, cur.1).unwrap();
                    visited[cur.0][idx] = true;
                    walk.push(cur.0);
                    cur = self.face_successor(cur);
                    if cur == start {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        Ok(faces)
    }

    /// Connected components as sorted vertex lists (isolated vertices included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &u in &self.rotation[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        q.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Faces are equal as closed walks when one is a rotation of the other.
pub(crate) fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
}

/// A validated fullerene patch with a labelled clockwise boundary cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    graph: PlaneGraph,
    boundary: Vec<usize>,
}

/// A collection of patches sharing one conceptual outer face.
pub type PatchSet = Vec<Patch>;

impl Patch {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    /// Boundary vertices in clockwise order, starting at the labelled start.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        self.graph.rotation(v)
    }

    /// The cycle `0, 1, .., k-1` as a single-face patch (`k` is 5 or 6).
    pub fn cycle(k: usize) -> Patch {
        let rotation = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
        validate_patch(PlaneGraph::new(rotation, (0, 1))).expect("5- and 6-cycles are patches")
    }

    pub fn boundary_code(&self) -> BoundaryCode {
        BoundaryCode::from_raw(self.boundary.iter().map(|&v| self.graph.degree(v) as u8).collect())
    }

    pub fn boundary_set(&self) -> Vec<bool> {
        let mut on = vec![false; self.vertex_count()];
        for &v in &self.boundary {
            on[v] = true;
        }
        on
    }

    /// Boundary index of each vertex, `None` for interior vertices.
    pub fn boundary_index(&self) -> Vec<Option<usize>> {
        let mut idx = vec![None; self.vertex_count()];
        for (i, &v) in self.boundary.iter().enumerate() {
            idx[v] = Some(i);
        }
        idx
    }

    /// Inner facial walks (anticlockwise).
    pub fn inner_faces(&self) -> Vec<Vec<usize>> {
        let outer = self.graph.outer;
        self.graph
            .trace_faces()
            .expect("validated")
            .into_iter()
            .filter(|f| {
                let k = f.len();
                !(0..k).any(|i| (f[i], f[(i + 1) % k]) == outer)
            })
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.inner_faces().len()
    }

    /// Number of inner faces of length 5, counted directly.
    pub fn f5(&self) -> usize {
        self.inner_faces().iter().filter(|f| f.len() == 5).count()
    }

    pub fn is_inner_face(&self, face: &[usize]) -> bool {
        self.inner_faces().iter().any(|f| same_cycle(f, face))
    }

    /// Same patch with the boundary labelling starting at index `k`.
    pub fn rotate_boundary(&self, k: usize) -> Patch {
        let n = self.boundary.len();
        let k = k % n;
        let boundary: Vec<usize> = (0..n).map(|i| self.boundary[(i + k) % n]).collect();
        Patch {
            graph: PlaneGraph::new(self.graph.rotation.clone(), (boundary[0], boundary[1])),
            boundary,
        }
    }

    /// Builds a patch from rotations and an expected boundary cycle, checking
    /// that the cycle is the traced outer face.
    pub(crate) fn from_parts(rotation: Vec<Vec<usize>>, boundary: Vec<usize>) -> Result<Patch, PatchError> {
        if boundary.len() < 2 {
            return Err(PatchError::NotTwoConnected);
        }
        let p = validate_patch(PlaneGraph::new(rotation, (boundary[0], boundary[1])))?;
        if p.boundary != boundary {
            return Err(PatchError::InconsistentRotation(format!(
                "traced boundary {:?} differs from expected {:?}",
                p.boundary, boundary
            )));
        }
        Ok(p)
    }
}

/// Checks every patch invariant and returns the patch with its clockwise
/// boundary cycle starting at the tail of the designated outer half-edge.
pub fn validate_patch(g: PlaneGraph) -> Result<Patch, PatchError> {
    g.check_consistency()?;
    let (s, t) = g.outer;
    if s >= g.vertex_count() || !g.has_edge(s, t) {
        return Err(PatchError::BadOuter(s, t));
    }
    let faces = g.trace_faces()?;
    let comps = g.components();
    if comps.len() != 1 {
        return Err(PatchError::NotTwoConnected);
    }
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    let f = faces.len() as i64;
    if v - e + f != 2 {
        return Err(PatchError::NotPlanar(v - e + f));
    }
    for face in &faces {
        let distinct: HashSet<_> = face.iter().collect();
        if distinct.len() != face.len() || face.len() < 3 {
            return Err(PatchError::NotTwoConnected);
        }
    }
    let boundary = g.trace_face_from(g.outer);
    let mut on_boundary = vec![false; g.vertex_count()];
    for &b in &boundary {
        on_boundary[b] = true;
    }
    for face in &faces {
        let k = face.len();
        let is_outer = (0..k).any(|i| (face[i], face[(i + 1) % k]) == g.outer);
        if !is_outer && k != 5 && k != 6 {
            return Err(PatchError::BadFaceLength { face: face.clone(), len: k });
        }
    }
    for vtx in 0..g.vertex_count() {
        let d = g.degree(vtx);
        let ok = if on_boundary[vtx] { d == 2 || d == 3 } else { d == 3 };
        if !ok {
            return Err(PatchError::BadDegree { vertex: vtx, degree: d });
        }
    }
    Ok(Patch { graph: g, boundary })
}

pub fn boundary_code_of(p: &Patch) -> BoundaryCode {
    p.boundary_code()
}

pub fn f5_patch(p: &Patch) -> usize {
    p.f5()
}

/// Boundary codes of the members of a patch set, in order.
pub fn codes_of(ps: &[Patch]) -> SequenceList {
    SequenceList::new(ps.iter().map(Patch::boundary_code).collect())
}

/// Hand-built patches used across the test suites.
#[doc(hidden)]
pub mod fixtures {
    use super::*;

    fn polar(r: f64, deg: f64) -> (f64, f64) {
        let t = deg.to_radians();
        (r * t.cos(), r * t.sin())
    }

    /// Central pentagon ringed by five pentagons: code (3,2)^5, f5 = 6.
    pub fn hemi_dodecahedron() -> Patch {
        let mut pts = Vec::new();
        // centre c_i: 0..5, o_i: 5..10, m_i: 10..15
        for i in 0..5 {
            pts.push(polar(1.0, 90.0 - 72.0 * i as f64));
        }
        for i in 0..5 {
            pts.push(polar(2.0, 90.0 - 72.0 * i as f64));
        }
        for i in 0..5 {
            pts.push(polar(2.2, 90.0 - 72.0 * i as f64 - 36.0));
        }
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, 5 + i));
            edges.push((5 + i, 10 + i));
            edges.push((10 + i, 5 + (i + 1) % 5));
        }
        // o_0 -> m_0 runs clockwise
        validate_patch(PlaneGraph::from_coordinates(&pts, &edges, (5, 10))).unwrap()
    }

    /// A pentagon sharing one edge with a hexagon: code (3,2,2,2,3,2,2,2,2).
    pub fn pentagon_hexagon() -> Patch {
        let mut pts: Vec<(f64, f64)> = (0..6).map(|k| polar(1.0, 60.0 * k as f64)).collect();
        // pentagon on the hexagon edge 0-1, outward
        pts.push(polar(1.9, 10.0));
        pts.push(polar(2.2, 30.0));
        pts.push(polar(1.9, 50.0));
        let mut edges: Vec<(usize, usize)> = (0..6).map(|k| (k, (k + 1) % 6)).collect();
        edges.extend([(0, 6), (6, 7), (7, 8), (8, 1)]);
        // boundary clockwise from vertex 1: 1 -> 8 -> 7 -> 6 -> 0 -> 5 ...
        let p = validate_patch(PlaneGraph::from_coordinates(&pts, &edges, (0, 5))).unwrap();
        // start at the degree-3 vertex 0 reading 3,2,2,2,3 backwards? rotate to the code form
        let code = p.boundary_code();
        let want = BoundaryCode::new(vec![3, 2, 2, 2, 3, 2, 2, 2, 2]).unwrap();
        let k = (0..code.len()).find(|&k| code.rotated(k) == want).unwrap();
        p.rotate_boundary(k)
    }

    /// Single hexagon.
    pub fn hexagon() -> Patch {
        Patch::cycle(6)
    }

    /// One hexagon ringed by six: code (2,2,3)^6.
    pub fn coronene() -> Patch {
        let mut pts: Vec<(f64, f64)> = (0..6).map(|k| polar(1.0, 60.0 * k as f64)).collect();
        let mut edges: Vec<(usize, usize)> = (0..6).map(|k| (k, (k + 1) % 6)).collect();
        // spokes s_k at 6..12, outer pairs at 12..24
        for k in 0..6 {
            pts.push(polar(2.0, 60.0 * k as f64));
            edges.push((k, 6 + k));
        }
        for k in 0..6 {
            pts.push(polar(2.6, 60.0 * k as f64 + 20.0));
            pts.push(polar(2.6, 60.0 * k as f64 + 40.0));
            let a = 12 + 2 * k;
            edges.push((6 + k, a));
            edges.push((a, a + 1));
            edges.push((a + 1, 6 + (k + 1) % 6));
        }
        let p = validate_patch(PlaneGraph::from_coordinates(&pts, &edges, (12, 6))).unwrap();
        let code = p.boundary_code();
        let want = BoundaryCode::repeat(&[2, 2, 3], 6).unwrap();
        let k = (0..code.len()).find(|&k| code.rotated(k) == want).unwrap();
        p.rotate_boundary(k)
    }
}

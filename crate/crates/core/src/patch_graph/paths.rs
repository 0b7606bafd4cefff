//! Distances to the boundary and 1-bend paths.

use std::collections::VecDeque;

use super::Patch;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    Left,
    Right,
}

/// A path `u0 .. ul` from the boundary whose turn pattern alternates, with
/// at most one bend at the even index `bend`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneBendPath {
    pub vertices: Vec<usize>,
    pub bend: usize,
}

impl OneBendPath {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// The turn the pattern prescribes at index `i` (`1 <= i < l`).
    pub fn expected_turn(bend: usize, i: usize) -> Turn {
        if (i <= bend && i % 2 == 1) || (i > bend && i.is_multiple_of(2)) {
            Turn::Left
        } else {
            Turn::Right
        }
    }

    /// Turns actually made in `p` at indices `1 .. l-1`.
    pub fn turns(&self, p: &Patch) -> Vec<Turn> {
        let v = &self.vertices;
        (1..v.len().saturating_sub(1)).map(|i| turn_at(p, v[i - 1], v[i], v[i + 1])).collect()
    }

    /// Right turns minus left turns made by `u0 .. u(i+1)`, for `i < l`.
    pub fn t_values(&self, p: &Patch) -> Vec<i64> {
        let turns = self.turns(p);
        let mut t = vec![0i64];
        for tr in turns {
            let last = *t.last().unwrap();
            t.push(match tr {
                Turn::Right => last + 1,
                Turn::Left => last - 1,
            });
        }
        t.truncate(self.length().max(1));
        t
    }

    pub fn follows_pattern(&self, p: &Patch) -> bool {
        self.bend.is_multiple_of(2)
            && self.bend <= self.length()
            && self
                .turns(p)
                .iter()
                .enumerate()
                .all(|(k, &t)| t == Self::expected_turn(self.bend, k + 1))
    }
}

/// Left iff `next` follows `prev` clockwise around `cur`.
pub fn turn_at(p: &Patch, prev: usize, cur: usize, next: usize) -> Turn {
    if p.graph().cw_succ(cur, prev) == next {
        Turn::Left
    } else {
        Turn::Right
    }
}

/// Multi-source distances from the boundary.
pub(crate) fn boundary_distances(p: &Patch) -> Vec<usize> {
    let mut dist = vec![usize::MAX; p.vertex_count()];
    let mut q = VecDeque::new();
    for &b in p.boundary() {
        dist[b] = 0;
        q.push_back(b);
    }
    while let Some(v) = q.pop_front() {
        for &u in p.rotation(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
        }
    }
    dist
}

/// Maximum distance to the boundary over all vertices of all members.
pub fn dist_to_boundary(ps: &[Patch]) -> usize {
    ps.iter().map(|p| boundary_distances(p).into_iter().max().unwrap_or(0)).max().unwrap_or(0)
}

/// Length of a shortest path from the boundary to any vertex of `face`.
pub fn dist_to_face(p: &Patch, face: &[usize]) -> usize {
    let d = boundary_distances(p);
    face.iter().map(|&v| d[v]).min().unwrap_or(0)
}

/// Walks the path determined by `(u0, l, b)`, if it exists and avoids the
/// boundary after `u0`.
fn walk(p: &Patch, on_boundary: &[bool], u0: usize, l: usize, b: usize) -> Option<Vec<usize>> {
    if l == 0 {
        return Some(vec![u0]);
    }
    let g = p.graph();
    if g.degree(u0) != 3 {
        return None;
    }
    let u1 = *g.rotation(u0).iter().find(|&&w| !on_boundary[w])?;
    let mut path = vec![u0, u1];
    for i in 1..l {
        let (prev, cur) = (path[i - 1], path[i]);
        let next = match OneBendPath::expected_turn(b, i) {
            Turn::Left => g.cw_succ(cur, prev),
            Turn::Right => g.cw_pred(cur, prev),
        };
        if on_boundary[next] || path.contains(&next) {
            return None;
        }
        path.push(next);
    }
    Some(path)
}

fn paths_of_length(p: &Patch, face: &[usize], l: usize, on_boundary: &[bool]) -> Vec<OneBendPath> {
    let mut out = Vec::new();
    for &u0 in p.boundary() {
        for b in (0..=l).step_by(2) {
            if l == 0 && b > 0 {
                break;
            }
            if let Some(vs) = walk(p, on_boundary, u0, l, b) {
                let hits = |v: &usize| face.contains(v);
                if hits(vs.last().unwrap()) && !vs[..l].iter().any(hits) {
                    out.push(OneBendPath { vertices: vs, bend: b });
                }
            }
        }
    }
    out
}

/// A shortest 1-bend path from the boundary to `face`, found by trying
/// `(u0, l, b)` in order of increasing `l`.
pub fn find_1bend_path(p: &Patch, face: &[usize]) -> Option<OneBendPath> {
    let on_boundary = p.boundary_set();
    (0..p.vertex_count()).find_map(|l| paths_of_length(p, face, l, &on_boundary).into_iter().next())
}

/// Every 1-bend path to `face` of minimum length.
pub fn one_bend_shortest_paths(p: &Patch, face: &[usize]) -> Vec<OneBendPath> {
    let on_boundary = p.boundary_set();
    for l in 0..p.vertex_count() {
        let found = paths_of_length(p, face, l, &on_boundary);
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Patch;
    use super::*;

    #[test]
    fn distances() {
        assert_eq!(dist_to_boundary(&[Patch::cycle(5)]), 0);
        assert_eq!(dist_to_boundary(&[hemi_dodecahedron()]), 1);
        assert_eq!(dist_to_boundary(&[coronene()]), 1);
        assert_eq!(dist_to_boundary(&[]), 0);
    }

    #[test]
    fn boundary_face_has_length_zero_path() {
        let p = pentagon_hexagon();
        for f in p.inner_faces() {
            let path = find_1bend_path(&p, &f).unwrap();
            assert_eq!(path.length(), 0);
            assert!(f.contains(&path.start()));
        }
    }

    #[test]
    fn central_face_of_hemi_dodecahedron() {
        let p = hemi_dodecahedron();
        let centre = p.inner_faces().into_iter().find(|f| f.iter().all(|&v| v < 5)).unwrap();
        let path = find_1bend_path(&p, &centre).unwrap();
        assert_eq!(path.length(), 1);
        assert!(path.follows_pattern(&p));
        assert_eq!(one_bend_shortest_paths(&p, &centre).len(), 5);
    }
}

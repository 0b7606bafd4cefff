use std::collections::VecDeque;

use super::Patch;

/// Canonical string of an embedded patch relative to its boundary labelling.
///
/// The traversal starts at boundary vertex 0 and looks at its neighbours
/// clockwise from boundary vertex 1. Every later vertex lists its neighbours
/// clockwise from the vertex it was discovered through. Two patches get the
/// same string exactly when an orientation-preserving isomorphism maps one
/// boundary labelling onto the other.
pub fn canonical_form(p: &Patch) -> String {
    let g = p.graph();
    let n = g.vertex_count();
    let b = p.boundary();
    let mut label = vec![usize::MAX; n];
    let mut reference = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[b[0]] = 0;
    reference[b[0]] = b[1];
    order.push(b[0]);
    let mut queue = VecDeque::from([b[0]]);
    while let Some(v) = queue.pop_front() {
        let r = g.rotation(v);
        let i = r.iter().position(|&w| w == reference[v]).unwrap();
        for k in 0..r.len() {
            let w = r[(i + k) % r.len()];
            if label[w] == usize::MAX {
                label[w] = order.len();
                reference[w] = v;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    let mut out = String::with_capacity(4 * n);
    for &v in &order {
        let r = g.rotation(v);
        let i = r.iter().position(|&w| w == reference[v]).unwrap();
        for k in 0..r.len() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&label[r[(i + k) % r.len()]].to_string());
        }
        out.push(';');
    }
    out
}

/// Whether two patches are the same embedded patch with the same boundary labelling.
pub fn equivalent(a: &Patch, b: &Patch) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.boundary_code() == b.boundary_code()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{coronene, hemi_dodecahedron};
    use super::*;

    #[test]
    fn relabelling_invariant() {
        let p = hemi_dodecahedron();
        let n = p.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
        let rot: Vec<Vec<usize>> = {
            let mut r = vec![Vec::new(); n];
            for v in 0..n {
                r[perm[v]] = p.rotation(v).iter().map(|&w| perm[w]).collect();
            }
            r
        };
        let boundary: Vec<usize> = p.boundary().iter().map(|&v| perm[v]).collect();
        let q = Patch::from_parts(rot, boundary).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert!(equivalent(&p, &q));
    }

    #[test]
    fn boundary_rotation_matters() {
        let p = coronene();
        assert!(equivalent(&p, &p.rotate_boundary(3)));
        assert!(!equivalent(&p, &p.rotate_boundary(1)));
    }
}

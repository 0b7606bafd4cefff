#![allow(dead_code)]

use std::collections::HashSet;

use penthex_core::patch_graph::{canonical_form, glue_face, GluePart};
use penthex_core::Patch;

/// Key identifying a patch up to rotation of its boundary labelling.
///
/// Only starts at which the boundary code reads as its least rotation can
/// give the minimum, since equivalences preserve the code.
pub fn shape_key(p: &Patch) -> String {
    let code = p.boundary_code();
    let least = code.canonical_rotation();
    (0..code.len())
        .filter(|&i| code.rotated(i) == least)
        .map(|i| canonical_form(&p.rotate_boundary(i)))
        .min()
        .unwrap()
}

/// Every patch obtained by adding one face at a time along a single
/// boundary stretch. Since patches are shellable disks this reaches every
/// patch with at most `max_faces` faces, one per shape.
pub fn patches_up_to(max_faces: usize) -> Vec<Patch> {
    let mut seen = HashSet::new();
    let mut level: Vec<Patch> = Vec::new();
    for k in [5, 6] {
        let p = Patch::cycle(k);
        seen.insert(shape_key(&p));
        level.push(p);
    }
    let mut all = level.clone();
    for _ in 1..max_faces {
        let mut next = Vec::new();
        for p in &level {
            for q in grow(p) {
                if seen.insert(shape_key(&q)) {
                    next.push(q);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Patches with one more face than `p`.
pub fn grow(p: &Patch) -> Vec<Patch> {
    let b = p.boundary();
    let n = b.len();
    let deg = |i: usize| p.graph().degree(b[i % n]);
    let mut out = Vec::new();
    for s in 0..n {
        if deg(s) != 2 {
            continue;
        }
        for stretch in 1..n.min(6) {
            let e = (s + stretch) % n;
            if deg(e) != 2 || (1..stretch).any(|i| deg(s + i) != 3) {
                continue;
            }
            for face_len in [5usize, 6] {
                if face_len <= stretch {
                    continue;
                }
                let part = GluePart { patch: p, e, s };
                if let Ok(q) = glue_face(&[part], &[face_len - stretch]) {
                    out.push(q);
                }
            }
        }
    }
    out
}

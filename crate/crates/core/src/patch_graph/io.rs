use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{validate_patch, Patch, PlaneGraph};
use crate::error::PatchError;

/// Format version written into every record.
pub const PATCH_RECORD_VERSION: u32 = 1;

/// Serializable description of one patch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchRecord {
    pub version: u32,
    pub vertices: usize,
    /// Clockwise neighbour lists.
    pub rotation: Vec<Vec<usize>>,
    pub boundary_start: usize,
    pub boundary_next: usize,
}

/// Serializable description of a list of patches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchSetRecord {
    pub version: u32,
    pub patches: Vec<PatchRecord>,
}

impl From<&Patch> for PatchRecord {
    fn from(p: &Patch) -> Self {
        PatchRecord {
            version: PATCH_RECORD_VERSION,
            vertices: p.vertex_count(),
            rotation: p.graph().rotations().to_vec(),
            boundary_start: p.boundary()[0],
            boundary_next: p.boundary()[1],
        }
    }
}

impl PatchRecord {
    pub fn to_patch(&self) -> Result<Patch, PatchError> {
        if self.version != PATCH_RECORD_VERSION {
            return Err(PatchError::BadRecord(format!("unsupported version {}", self.version)));
        }
        if self.rotation.len() != self.vertices {
            return Err(PatchError::BadRecord("rotation length differs from vertex count".into()));
        }
        let n = self.vertices;
        if self.boundary_start >= n || self.boundary_next >= n {
            return Err(PatchError::BadRecord("boundary half-edge out of range".into()));
        }
        if self.rotation.iter().flatten().any(|&w| w >= n) {
            return Err(PatchError::BadRecord("neighbour out of range".into()));
        }
        validate_patch(PlaneGraph::new(self.rotation.clone(), (self.boundary_start, self.boundary_next)))
    }
}

impl PatchSetRecord {
    pub fn new(ps: &[Patch]) -> Self {
        PatchSetRecord { version: PATCH_RECORD_VERSION, patches: ps.iter().map(PatchRecord::from).collect() }
    }

    pub fn to_patches(&self) -> Result<Vec<Patch>, PatchError> {
        self.patches.iter().map(PatchRecord::to_patch).collect()
    }
}

/// Graphviz description; boundary vertices are drawn as boxes.
pub fn to_dot(ps: &[Patch]) -> String {
    let mut s = String::from("graph patches {\n");
    for (k, p) in ps.iter().enumerate() {
        let on_b = p.boundary_set();
        let _ = writeln!(s, "  subgraph cluster_{k} {{");
        for v in 0..p.vertex_count() {
            let shape = if on_b[v] { "box" } else { "circle" };
            let _ = writeln!(s, "    p{k}v{v} [label=\"{v}\", shape={shape}];");
        }
        for v in 0..p.vertex_count() {
            for &w in p.rotation(v) {
                if v < w {
                    let _ = writeln!(s, "    p{k}v{v} -- p{k}v{w};");
                }
            }
        }
        s.push_str("  }\n");
    }
    s.push_str("}\n");
    s
}

/// Barycentric layout with the boundary pinned to a circle.
fn tutte_layout(p: &Patch) -> Vec<(f64, f64)> {
    let n = p.vertex_count();
    let b = p.boundary();
    let on_b = p.boundary_set();
    let mut pos = vec![(0.0, 0.0); n];
    for (i, &v) in b.iter().enumerate() {
        // clockwise on screen, where y points down
        let t = std::f64::consts::TAU * i as f64 / b.len() as f64;
        pos[v] = (t.cos(), t.sin());
    }
    for _ in 0..(20 * n).max(200) {
        let mut moved = 0.0f64;
        for v in (0..n).filter(|&v| !on_b[v]) {
            let r = p.rotation(v);
            let (sx, sy) = r.iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / r.len() as f64, sy / r.len() as f64);
            moved = moved.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if moved < 1e-9 {
            break;
        }
    }
    pos
}

/// SVG drawing of a patch list, one panel per member, pentagons shaded.
pub fn to_svg(ps: &[Patch]) -> String {
    let panel = 320.0;
    let width = panel * ps.len().max(1) as f64;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{panel}\" viewBox=\"0 0 {width} {panel}\">\n"
    );
    for (k, p) in ps.iter().enumerate() {
        let pos = tutte_layout(p);
        let map = |v: usize| (k as f64 * panel + panel / 2.0 + pos[v].0 * 140.0, panel / 2.0 + pos[v].1 * 140.0);
        for f in p.inner_faces() {
            let fill = if f.len() == 5 { "#f4b183" } else { "#dde8f4" };
            let pts: Vec<String> = f.iter().map(|&v| {
                let (x, y) = map(v);
                format!("{x:.2},{y:.2}")
            }).collect();
            let _ = writeln!(s, "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>", pts.join(" "));
        }
        for v in 0..p.vertex_count() {
            for &w in p.rotation(v) {
                if v < w {
                    let ((x1, y1), (x2, y2)) = (map(v), map(w));
                    let _ = writeln!(
                        s,
                        "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"black\"/>"
                    );
                }
            }
        }
        for v in 0..p.vertex_count() {
            let (x, y) = map(v);
            let _ = writeln!(s, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\"/>");
        }
    }
    s.push_str("</svg>\n");
    s
}

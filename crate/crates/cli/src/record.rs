use penthex_core::patch_graph::PatchSetRecord;
use serde::{Deserialize, Serialize};

/// One-line result of `decide`, `witness` and `oracle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub answer: String,
    pub conditional: bool,
    pub f5: i64,
    pub n: usize,
    /// Type I length bound; absent for the face search.
    pub d: Option<usize>,
    pub nodes: u64,
    pub time_ms: u64,
    pub witness: Option<PatchSetRecord>,
}

/// One-line result of `count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub count: usize,
    pub saturated: bool,
    pub cap: usize,
    pub f5: i64,
    pub n: usize,
    pub d: Option<usize>,
    pub time_ms: u64,
}

fn line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records contain no maps with non-string keys");
    s.push('\n');
    s
}

impl RunRecord {
    pub fn to_line(&self) -> String {
        line(self)
    }

    pub fn answer_line(&self) -> String {
        if self.conditional {
            format!("{} (conditional)\n", self.answer)
        } else {
            format!("{}\n", self.answer)
        }
    }
}

impl CountRecord {
    pub fn to_line(&self) -> String {
        line(self)
    }
}

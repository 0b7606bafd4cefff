//! Shared inputs for the benchmarks.

use penthex_core::BoundaryCode;

/// Codes with their expected answers, from easy to hard.
pub const DECIDE_CASES: &[(&str, bool)] = &[
    ("222222", true),
    ("322232222", true),
    ("223223223", true),
    ("2232322323", true),
    ("222323232233", true),
    ("2222233", false),
    ("22323", false),
];

pub fn code(text: &str) -> BoundaryCode {
    text.parse().expect("benchmark codes are valid")
}

/// Codes used to exercise the cheap per-code operations.
pub fn sample_codes() -> Vec<BoundaryCode> {
    ["22223222322232223", "232323232322222", "2222222222", "3322222223222"].iter().map(|t| code(t)).collect()
}

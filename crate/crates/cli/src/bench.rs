use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use penthex_core::boundary_code::all_codes_up_to_rotation;
use penthex_core::oracle::default_budget;
use penthex_core::{BoundaryCode, Oracle, Solver, SolverConfig, SolverError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{BenchArgs, CliError, Format};

/// Lengths up to this are enumerated exhaustively.
const EXHAUSTIVE_MAX: usize = 14;

/// Codes of length `n` with `0 <= f5 <= 5`: all of them up to rotation for
/// small `n`, otherwise `samples` random ones drawn with `seed`.
pub fn corpus(n: usize, samples: usize, seed: u64) -> Vec<BoundaryCode> {
    let in_range = |c: &BoundaryCode| (0..=5).contains(&c.f5());
    if n <= EXHAUSTIVE_MAX {
        return all_codes_up_to_rotation(n).into_iter().filter(in_range).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let mut out = Vec::with_capacity(samples);
    // f5 in 0..=5 needs d2 - d3 in 1..=6, so about one draw in sqrt(n) succeeds
    for _ in 0..samples.saturating_mul(64 * n) {
        if out.len() == samples {
            break;
        }
        let degrees = (0..n).map(|_| if rng.gen_bool(0.5) { 2 } else { 3 }).collect();
        let code = BoundaryCode::new(degrees).expect("digits are 2 or 3");
        if in_range(&code) {
            out.push(code);
        }
    }
    out
}

/// Aggregate over the codes with one `(n, f5)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub f5: i64,
    pub codes: usize,
    pub solver_ms: u64,
    pub oracle_ms: u64,
    pub agree: usize,
    pub disagree: usize,
    /// Codes on which the solver hit the node limit.
    pub undecided: usize,
    pub max_nodes: u64,
}

pub(crate) fn run(a: &BenchArgs) -> Result<String, CliError> {
    if a.n_min > a.n_max {
        return Err(CliError::Usage(format!("--n-min {} exceeds --n-max {}", a.n_min, a.n_max)));
    }
    let oracle = Oracle::new();
    let mut rows: BTreeMap<(usize, i64), BenchRow> = BTreeMap::new();
    for n in a.n_min..=a.n_max {
        let solver = Solver::new();
        for code in corpus(n, a.samples, a.seed) {
            let row = rows.entry((n, code.f5())).or_insert_with(|| BenchRow { n, f5: code.f5(), ..BenchRow::default() });
            row.codes += 1;

            let t = Instant::now();
            let truth = oracle.exists(&code, default_budget(&code));
            row.oracle_ms += ms(t.elapsed());

            let cfg = SolverConfig { node_limit: Some(a.node_limit), ..SolverConfig::default() };
            let t = Instant::now();
            match solver.decide(&code, &cfg) {
                Ok(ans) => {
                    row.max_nodes = row.max_nodes.max(ans.stats.nodes);
                    if ans.exists == truth {
                        row.agree += 1;
                    } else {
                        row.disagree += 1;
                    }
                }
                Err(SolverError::NodeLimit(_)) => {
                    row.undecided += 1;
                    row.max_nodes = row.max_nodes.max(a.node_limit);
                }
                Err(e) => return Err(e.into()),
            }
            row.solver_ms += ms(t.elapsed());
        }
    }
    let rows: Vec<BenchRow> = rows.into_values().collect();
    Ok(match a.common.format {
        Format::Record => {
            let mut s = serde_json::to_string(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Drawing => return Err(CliError::Usage("bench has no drawing output".into())),
        Format::Text => table(&rows),
    })
}

fn ms(d: Duration) -> u64 {
    d.as_millis() as u64
}

fn table(rows: &[BenchRow]) -> String {
    let mut s = String::from("   n  f5  codes  solver_ms  oracle_ms  agree  disagree  undecided  max_nodes\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{:>4} {:>3} {:>6} {:>10} {:>10} {:>6} {:>9} {:>10} {:>10}",
            r.n, r.f5, r.codes, r.solver_ms, r.oracle_ms, r.agree, r.disagree, r.undecided, r.max_nodes
        );
    }
    s
}

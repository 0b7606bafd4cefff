//! Boundary codes of fullerene patches and the algorithms that decide them.

pub mod boundary_code;
pub mod error;
pub mod oracle;
pub mod patch_graph;
pub mod sequence_ops;
pub mod solver;

pub use boundary_code::{parse, BoundaryCode, SequenceList};
pub use error::{OpError, OracleError, ParseError, PatchError, SolverError};
pub use oracle::{Oracle, SearchConfig};
pub use solver::{Answer, Solver, SolverConfig, Stats};
pub use patch_graph::{Patch, PatchSet, PlaneGraph};
pub use sequence_ops::{Anchor, OpTrace, SeqOp, Side};

//! Conjecture checkers over sieved sequences and the registry that
//! dispatches to them.

pub mod additive;
pub mod checks;
pub mod gaps;
pub mod hl2;
pub mod intervals;
pub mod limits;
pub mod powers;
pub mod registry;
pub mod report;
pub mod sads;
pub mod thresholds;
pub mod tuples;

pub use gaps::{GapBoundSpec, Ratio};
pub use intervals::{interval_counts, Boundary};
pub use report::{Allowed, ConjectureReport, Exception, ScanRange, Series, Verdict};
pub use thresholds::{record_lows, reverse_cummax, threshold_table, Convention, RecordSequence, ThresholdTable};
pub use registry::{find, ids, run, run_in, Params, REGISTRY};

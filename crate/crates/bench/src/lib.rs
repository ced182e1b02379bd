//! Benchmark inputs shared by the criterion targets.

use semicat_core::constructions::{brandt, chain_semilattice, null_semigroup, symmetric_group};
use semicat_core::FiniteSemigroup;

/// Named inputs of increasing search difficulty.
pub fn search_inputs() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("null-8", null_semigroup(8)),
        ("chain-16", chain_semilattice(16)),
        ("brandt-S3-3", brandt(&symmetric_group(3), 3).expect("S3 is a group")),
    ]
}

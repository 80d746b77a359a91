//! Shared fixtures for the criterion benchmarks.

use pyrene_core::matching::enumerate_perfect_matchings;
use pyrene_core::{Instance, Matching, SystemSpec};

pub fn chain(n: usize) -> Instance {
    SystemSpec::PyreneChain { n }
        .instance()
        .expect("pyrene chains exist for n >= 1")
}

/// Every `stride`-th perfect matching of `inst`, starting from the first.
pub fn sample_matchings(inst: &Instance, stride: usize) -> Vec<Matching> {
    enumerate_perfect_matchings(inst.graph())
        .into_iter()
        .step_by(stride.max(1))
        .collect()
}

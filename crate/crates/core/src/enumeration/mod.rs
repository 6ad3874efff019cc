//! Exhaustive generation of small structures, semibiproducts with fixed
//! ends, and the full census of six-tuples at `|X| = |B| = 2`.
//!
//! Every generator returns its results in a canonical sorted order, so
//! output does not depend on how work was scheduled across threads.

mod census;
mod sbp;
mod structures;

pub use census::{action_census, action_census_with, classify, visit_census, Census, CensusEntry, CensusFlags, CensusSummary, MAX_CENSUS_ORDER};
pub use sbp::{
    canonical_middle_key, enumerate_semibiproducts, enumerate_semibiproducts_with, sbp_isomorphic, DedupMode,
    EndMaps, EnumSpec, Parallelism, SbpEnumeration,
};
pub use structures::{enumerate_structures, Dedup, StructureFilter, MAX_MAGMA_ORDER, MAX_STRUCTURE_ORDER};

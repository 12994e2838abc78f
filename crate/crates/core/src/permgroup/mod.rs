//! Permutation groups: arithmetic, stabilizer chains, coset actions and action analysis.

pub mod action;
pub mod chain;
pub mod coset;
pub mod format;
pub mod group;
pub mod perm;

pub use action::{
    action_report, block_system_joining, minimal_block_system, orbit_count_on_pairs,
    suborbits, transitivity_degree, ActionReport,
};
pub use chain::StabilizerChain;
pub use coset::{coset_action, coset_action_bounded, CosetAction, DEFAULT_INDEX_BOUND};
pub use format::{parse_group, read_group, write_group, GroupFile};
pub use group::GeneratedGroup;
pub use perm::Permutation;

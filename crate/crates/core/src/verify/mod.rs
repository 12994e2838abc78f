//! Pairwise transitivity by orbit counting, and the equivalent fast conditions.
//!
//! The five pair sets are ordered pairs of distinct points, flags, antiflags, ordered pairs
//! of distinct intersecting blocks and ordered pairs of disjoint blocks. A design is
//! pairwise transitive under a group when the group has at most one orbit on each.

mod brute;
mod certificate;
mod classify;
mod fast;

pub use brute::{brute_verify, BRUTE_PAIR_BOUND};
pub use certificate::{certificate, parse_certificate, Certificate, ELAPSED_KEY};
pub use classify::{classify_block_action, BlockActionReport, DesignShape, ImprimitiveCase};
pub use fast::{fast_verify, symmetric_shortcut, FastConditions};

use std::fmt;
use std::str::FromStr;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::GeneratedGroup;

/// The five sets of ordered pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairSet {
    PointPairs,
    Flags,
    Antiflags,
    IntersectingBlocks,
    DisjointBlocks,
}

impl PairSet {
    pub const ALL: [PairSet; 5] = [
        PairSet::PointPairs,
        PairSet::Flags,
        PairSet::Antiflags,
        PairSet::IntersectingBlocks,
        PairSet::DisjointBlocks,
    ];

    pub fn key(self) -> &'static str {
        match self {
            PairSet::PointPairs => "point_pairs",
            PairSet::Flags => "flags",
            PairSet::Antiflags => "antiflags",
            PairSet::IntersectingBlocks => "intersecting_block_pairs",
            PairSet::DisjointBlocks => "disjoint_block_pairs",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Fast,
    Brute,
    #[default]
    Both,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fast => "fast",
            Mode::Brute => "brute",
            Mode::Both => "both",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Mode::Fast),
            "brute" => Ok(Mode::Brute),
            "both" => Ok(Mode::Both),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseReport {
    pub method: Mode,
    /// Indexed as [`PairSet::ALL`].
    pub nonempty: [bool; 5],
    /// Orbit counts from brute force, indexed as [`PairSet::ALL`]; 0 for an empty set.
    pub orbit_counts: Option<[usize; 5]>,
    pub fast: Option<FastConditions>,
    pub verdict: bool,
}

impl PairwiseReport {
    pub fn count(&self, set: PairSet) -> Option<usize> {
        let i = PairSet::ALL.iter().position(|&s| s == set).unwrap();
        self.orbit_counts.map(|c| c[i])
    }
}

/// Which of the five pair sets are non-empty.
pub fn nonempty_pair_sets(design: &Design) -> [bool; 5] {
    let v = design.v();
    let b = design.b();
    let params_rows = design.block_rows();
    let flags = b > 0;
    let antiflags = design.blocks().iter().any(|blk| blk.len() < v);
    let mut intersecting = false;
    let mut disjoint = false;
    for i in 0..b {
        for j in i + 1..b {
            if params_rows[i].intersection_count(&params_rows[j]) > 0 {
                intersecting = true;
            } else {
                disjoint = true;
            }
        }
    }
    [v >= 2, flags, antiflags, intersecting, disjoint]
}

/// Runs the requested method. With [`Mode::Both`], a design outside the scope of the
/// fast conditions is checked by brute force alone, and disagreement is an error.
pub fn verify(design: &Design, group: &GeneratedGroup, mode: Mode) -> Result<PairwiseReport> {
    match mode {
        Mode::Brute => brute_verify(design, group),
        Mode::Fast => fast_verify(design, group),
        Mode::Both => {
            let mut report = brute_verify(design, group)?;
            match fast_verify(design, group) {
                Ok(fast) => {
                    if fast.verdict != report.verdict {
                        return Err(Error::MethodsDisagree(format!(
                            "{} under {}",
                            design.label(),
                            group.label()
                        )));
                    }
                    report.fast = fast.fast;
                    report.method = Mode::Both;
                }
                Err(Error::FastRefused(_)) => {}
                Err(e) => return Err(e),
            }
            Ok(report)
        }
    }
}

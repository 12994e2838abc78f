//! Certify-all, the small-degree search and the command line.

pub mod certify;
pub mod cli;
pub mod search;

pub use certify::{certify_all, certify_row, CertificateBundle, RowCertificate, RowStatus, CONSTRUCTION_ONLY, DEFAULT_MAX_POINTS};
pub use cli::{run, run_with, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
pub use search::{search_small, subset_orbits, SearchResult, MAX_SEARCH_DEGREE};

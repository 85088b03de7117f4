//! Verification harness: exact identity suites, weighted orthogonality by
//! quadrature, and zero-free parameter scans.

mod config;
mod orthogonality;
mod quadrature;
mod scan;
mod suite;

pub use config::{Group, SuiteConfig};
pub use orthogonality::{orthogonality_matrix, FamilyRef};
pub use quadrature::{
    default_r_max, gram_matrix, integrate, sufficient_radius, max_normalized_off_diagonal, max_off_diagonal, max_relative_change,
    tail_bound, QuadratureConfig,
};
pub use scan::{catalog_csv, scan_csv, zero_free_scan, ScanRow};
pub use suite::{run_suite, run_suite_with, CheckRecord, Status, SuiteReport};

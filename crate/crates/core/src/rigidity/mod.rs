//! Terminal-simplex rigidity: exact Σ_ε, certificates, first-break analysis
//! and bar-level rigidity.

pub mod bars;
pub mod breaking;
pub mod certificate;
pub mod sigma;

pub use bars::{bar_representative, bar_rigidity_check, find_bar, matched_bar, BarRigidityVerdict};
pub use breaking::{breaking_analysis, BreakingReport, Classification};
pub use certificate::{r_bounds, rigidity_radius, rigidity_thresholds, Limit, RigidityCertificate};
pub use sigma::{domain_upper, sigma_epsilon, SigmaOptions, SigmaResult};

//! Persistent homology of injective simplicial filtrations with birth and
//! terminal simplex attribution, and certificates for how far a filtration
//! can be perturbed before the simplex terminating a class changes.

pub mod complex;
pub mod error;
pub mod filtration;
pub mod fixtures;
pub mod io;
pub mod order;
pub mod persistence;
pub mod perturb;
pub mod rational;
pub mod rigidity;
pub mod simplex;

pub use complex::SimplicialComplex;
pub use error::{Error, ErrorCategory, Result};
pub use filtration::{validate_filtration, Filtration};
pub use order::{
    is_order_realizable, realizable_orders, realizable_prefixes, realize_order, RealizableOrders,
    SimplexOrder,
};
pub use persistence::{
    barcode, barcodes, bottleneck_distance, boundary_chain, class_lifespan, reduce, Bar, Barcode,
    Chain, ClassLifespan, FieldSpec, ReducedFiltration, SimplexRole,
};
pub use perturb::{permute_block, switch_pair};
pub use rational::{Extended, Rational};
pub use rigidity::{
    bar_representative, bar_rigidity_check, breaking_analysis, find_bar, matched_bar, r_bounds,
    rigidity_radius, rigidity_thresholds, sigma_epsilon, BarRigidityVerdict, BreakingReport,
    Classification, Limit, RigidityCertificate, SigmaOptions, SigmaResult,
};
pub use simplex::{Simplex, Vertex};

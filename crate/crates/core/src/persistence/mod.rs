//! Persistent homology over a prime field.

pub mod barcode;
pub mod bottleneck;
pub mod chain;
pub mod field;
pub mod reduction;

pub use barcode::{barcode, barcodes, class_lifespan, Bar, Barcode, ClassLifespan};
pub use bottleneck::bottleneck_distance;
pub use chain::{boundary_chain, Chain};
pub use field::FieldSpec;
pub use reduction::{reduce, ReducedFiltration, SimplexRole};

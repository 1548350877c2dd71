//! Densities, the random-cell quadrature and statistics extraction.

pub mod pdf;
pub mod quadrature;
pub mod statistics;

pub use pdf::{JointPdf, Pdf, DENSITY_FLOOR};
pub use quadrature::{gl_nodes, NodeTable, QuadratureRule, GL_OFFSETS, GL_WEIGHTS, KAPPA};
pub use statistics::{point_statistics, point_values, statistics, QuantityStats, StatisticsResult};

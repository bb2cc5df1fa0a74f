//! Structural analysis: layer decompositions, linear quotients, and the
//! closed-form regularity machinery built on them.

pub mod conditions;
pub mod layers;
pub mod lq;
pub mod polarize;
pub mod splitting;

pub use conditions::{
    check_condition_double_star, check_condition_star, constructive_lq_order, AxisGapReport,
    DoubleStarReport, StarReport,
};
pub use layers::{layer_decompose, two_variable_criterion, Layer, LayerDecomposition};
pub use lq::{linear_quotients_order, linear_quotients_order_with_cap, LqCertificate};
pub use polarize::{induced_subideal, polarize, PolarizationMap};
pub use splitting::betti_splitting_verify;

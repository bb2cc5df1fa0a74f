//! Exact computational toolkit for monomial ideals in small polynomial rings.
//!
//! The crate provides four layers, each usable on its own:
//!
//! * arithmetic of monomial ideals in canonical form ([`Monomial`], [`MonomialIdeal`]),
//! * Newton-polyhedron geometry and integral closures over exact rationals ([`newton`]),
//! * multigraded Betti numbers, regularity, and linear-resolution tests via
//!   simplicial homology over a configurable coefficient field ([`betti`]),
//! * combinatorial structure analysis (linear quotients, layer decompositions,
//!   polarization) and a deterministic verification harness ([`structure`], [`harness`]).
//!
//! Everything is exact: integer exponents, rational pivots, homology ranks over
//! GF(p) or Q. No floating point enters any decision.

pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod harness;
pub mod ideal;
pub mod lp;
pub mod monomial;
pub mod newton;
pub mod parse;
pub mod structure;

pub use betti::{
    has_linear_resolution, lcm_lattice, lcm_lattice_betti, multigraded_betti, regularity,
    regularity_quotient, regularity_with, upper_koszul, BettiOptions, BettiTable,
};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use newton::{
    delta, dim_quotient, hull_membership, integral_closure, max_gen_degree, power_membership,
    vertices, NewtonHull, PowerOracle,
};
pub use parse::{format_ideal, format_monomial, parse_ideal};

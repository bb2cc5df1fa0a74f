//! Layer decompositions of three-variable equigenerated ideals.
//!
//! Fixing an axis variable `x_k`, an equigenerated ideal splits as
//! `I = Σ_i inner_i · x_k^{c_i}` with `c_1 < c_2 < ...`, where each `inner_i`
//! lives in the remaining two variables. Within a layer the generators,
//! listed with the first remaining variable's exponent ascending, strictly
//! descend in the second remaining variable — a consequence of all layer
//! members sharing the same total degree.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// One slice of a layer decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    /// Common exponent of the axis variable in this slice.
    pub axis_exp: u16,
    /// Two-variable ideal over `(alpha, beta)` carrying the other exponents.
    pub inner: MonomialIdeal,
}

impl Layer {
    /// Inner generators with the first variable's degree ascending (and the
    /// second descending) — the order the structural conditions speak about.
    pub fn ordered_gens(&self) -> Vec<&Monomial> {
        // canonical storage sorts equal-degree monomials with the first
        // exponent descending, so reversing yields the ascending view
        self.inner.gens().iter().rev().collect()
    }
}

/// An equigenerated three-variable ideal sliced along one axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    /// Axis variable index (0-based).
    pub axis: usize,
    /// Smaller of the two remaining variable indices.
    pub alpha: usize,
    /// Larger of the two remaining variable indices.
    pub beta: usize,
    /// Common total degree of the generators.
    pub degree: u32,
    /// Slices with strictly increasing `axis_exp`.
    pub layers: Vec<Layer>,
}

impl LayerDecomposition {
    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    /// The three-variable monomial for a given layer's inner generator.
    pub fn lift(&self, layer: &Layer, inner_gen: &Monomial) -> Monomial {
        let mut exps = vec![0u16; 3];
        exps[self.alpha] = inner_gen.deg(0);
        exps[self.beta] = inner_gen.deg(1);
        exps[self.axis] = layer.axis_exp;
        Monomial::new(exps)
    }

    /// Rebuilds the original ideal from the slices.
    pub fn reassemble(&self) -> MonomialIdeal {
        let gens = self
            .layers
            .iter()
            .flat_map(|layer| layer.inner.gens().iter().map(|g| self.lift(layer, g)))
            .collect::<Vec<_>>();
        MonomialIdeal::minimalize(3, gens).expect("lifted generators share the ambient")
    }

    /// Sum of the first `take` slices as a three-variable ideal.
    pub fn prefix_sum(&self, take: usize) -> MonomialIdeal {
        let gens = self.layers[..take]
            .iter()
            .flat_map(|layer| layer.inner.gens().iter().map(|g| self.lift(layer, g)))
            .collect::<Vec<_>>();
        MonomialIdeal::minimalize(3, gens).expect("lifted generators share the ambient")
    }
}

/// Slices an equigenerated three-variable ideal along the chosen axis.
pub fn layer_decompose(ideal: &MonomialIdeal, axis: usize) -> Result<LayerDecomposition> {
    if ideal.ambient() != 3 {
        return Err(Error::WrongAmbient {
            op: "layer_decompose",
            required: 3,
            found: ideal.ambient(),
        });
    }
    if axis >= 3 {
        return Err(Error::VariableOutOfRange { index: axis, ambient: 3 });
    }
    let Some(degree) = ideal.is_equigenerated()? else {
        return Err(Error::NotEquigenerated { op: "layer_decompose" });
    };
    if ideal.is_unit() {
        return Err(Error::UnitIdeal { op: "layer_decompose" });
    }
    let mut rest = [0usize, 1, 2].into_iter().filter(|&j| j != axis);
    let alpha = rest.next().unwrap();
    let beta = rest.next().unwrap();
    let mut groups: std::collections::BTreeMap<u16, Vec<Monomial>> = Default::default();
    for g in ideal.gens() {
        groups
            .entry(g.deg(axis))
            .or_default()
            .push(Monomial::new(vec![g.deg(alpha), g.deg(beta)]));
    }
    let layers = groups
        .into_iter()
        .map(|(axis_exp, inner_gens)| {
            let inner = MonomialIdeal::minimalize(2, inner_gens).unwrap();
            // equal axis exponent and equal total degree force distinct
            // exponents in both remaining variables
            debug_assert!(
                inner.gens().windows(2).all(|w| w[0].deg(0) > w[1].deg(0)),
                "layer members must have pairwise distinct inner exponents"
            );
            Layer { axis_exp, inner }
        })
        .collect();
    Ok(LayerDecomposition { axis, alpha, beta, degree, layers })
}

/// Degree-by-degree test for minimal regularity of an equigenerated ideal in
/// two variables: true when there is a single generator, or when the first
/// variable's exponents, sorted ascending, increase by exactly one each step.
pub fn two_variable_criterion(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.ambient() != 2 {
        return Err(Error::WrongAmbient {
            op: "two_variable_criterion",
            required: 2,
            found: ideal.ambient(),
        });
    }
    if ideal.is_equigenerated()?.is_none() {
        return Err(Error::NotEquigenerated { op: "two_variable_criterion" });
    }
    // canonical order within one degree descends in the first variable
    Ok(ideal
        .gens()
        .windows(2)
        .all(|w| w[0].deg(0) == w[1].deg(0) + 1))
}

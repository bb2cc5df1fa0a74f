//! Combinatorial characterizations of minimal regularity for equigenerated
//! three-variable ideals, and the explicit quotient orderings they induce.
//!
//! Both condition sets examine a layer decomposition along the last variable:
//! the two-layer set additionally inspects exponent gaps inside the second
//! layer, while the multi-layer set re-decomposes along every axis and also
//! requires prefix sums of layers to stay at minimal regularity.

use crate::betti::regularity;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::structure::layers::{layer_decompose, two_variable_criterion, LayerDecomposition};
use crate::structure::lq::{ColonOracle, LqCertificate};

/// Clause-by-clause outcome of the two-layer conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarReport {
    /// The second layer's axis exponent exceeds the first's by one.
    pub consecutive_axis_exponents: bool,
    /// The first layer alone has minimal regularity (consecutive exponents).
    pub first_layer_minimal_regularity: bool,
    /// Some inner degree (in either remaining variable) occurs in both layers.
    pub shared_inner_degree: bool,
    /// Every exponent gap of size two or more inside the second layer is
    /// matched by first-layer generators on both sides.
    pub gap_matching: bool,
}

impl StarReport {
    pub fn satisfied(&self) -> bool {
        self.consecutive_axis_exponents
            && self.first_layer_minimal_regularity
            && self.shared_inner_degree
            && self.gap_matching
    }
}

/// Gap-clause outcome for the decomposition along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisGapReport {
    pub axis: usize,
    /// Each within-layer gap is matched by the previous layer on both sides
    /// (gaps in the first layer have no previous layer and fail).
    pub matching: bool,
    /// Each gap's lower generator is dominated by every generator of the
    /// whole ideal in at least one remaining variable.
    pub tail: bool,
}

/// Clause-by-clause outcome of the multi-layer conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleStarReport {
    /// Every proper prefix sum of layers has minimal regularity.
    pub prefix_regularities: bool,
    /// Every adjacent layer pair shares an inner degree in some variable.
    pub adjacent_shared_degree: bool,
    /// Axis exponents increase by exactly one between consecutive layers.
    pub consecutive_axis_exponents: bool,
    /// Gap clauses for the decompositions along each of the three axes.
    pub gap_reports: [AxisGapReport; 3],
}

impl DoubleStarReport {
    pub fn satisfied(&self) -> bool {
        self.prefix_regularities
            && self.adjacent_shared_degree
            && self.consecutive_axis_exponents
            && self.gap_reports.iter().all(|r| r.matching && r.tail)
    }

    /// The verdict with the domination ("tail") requirement ignored,
    /// recorded separately so disagreements between the two readings of the
    /// gap clause are observable.
    pub fn satisfied_without_tail(&self) -> bool {
        self.prefix_regularities
            && self.adjacent_shared_degree
            && self.consecutive_axis_exponents
            && self.gap_reports.iter().all(|r| r.matching)
    }
}

/// True when the two inner ideals share a degree in either variable.
fn shared_inner_degree(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    (0..2).any(|v| {
        a.gens()
            .iter()
            .any(|u| b.gens().iter().any(|w| u.deg(v) == w.deg(v)))
    })
}

/// Checks the two-layer conditions on a decomposition along the last axis.
pub fn check_condition_star(dec: &LayerDecomposition) -> Result<StarReport> {
    if dec.axis != 2 {
        return Err(Error::LayerStructure {
            reason: "the two-layer conditions are defined along the last variable",
        });
    }
    if dec.num_layers() != 2 {
        return Err(Error::LayerStructure {
            reason: "the two-layer conditions need exactly two layers",
        });
    }
    let first = &dec.layers[0];
    let second = &dec.layers[1];
    let mut gap_matching = true;
    let ordered = second.ordered_gens();
    for j in 0..ordered.len().saturating_sub(1) {
        if ordered[j + 1].deg(0) - ordered[j].deg(0) >= 2 {
            let upper = first
                .inner
                .gens()
                .iter()
                .any(|w| w.deg(0) == ordered[j + 1].deg(0));
            let lower = first
                .inner
                .gens()
                .iter()
                .any(|w| w.deg(1) == ordered[j].deg(1));
            if !(upper && lower) {
                gap_matching = false;
            }
        }
    }
    Ok(StarReport {
        consecutive_axis_exponents: second.axis_exp == first.axis_exp + 1,
        first_layer_minimal_regularity: two_variable_criterion(&first.inner)?,
        shared_inner_degree: shared_inner_degree(&first.inner, &second.inner),
        gap_matching,
    })
}

fn axis_gap_report(ideal: &MonomialIdeal, axis: usize) -> Result<AxisGapReport> {
    let dec = layer_decompose(ideal, axis)?;
    let mut matching = true;
    let mut tail = true;
    for (i, layer) in dec.layers.iter().enumerate() {
        let ordered = layer.ordered_gens();
        for j in 0..ordered.len().saturating_sub(1) {
            if ordered[j + 1].deg(0) - ordered[j].deg(0) < 2 {
                continue;
            }
            if i == 0 {
                matching = false;
            } else {
                let prev = &dec.layers[i - 1].inner;
                let upper = prev.gens().iter().any(|w| w.deg(0) == ordered[j + 1].deg(0));
                let lower = prev.gens().iter().any(|w| w.deg(1) == ordered[j].deg(1));
                if !(upper && lower) {
                    matching = false;
                }
            }
            let (va, vb) = (ordered[j].deg(0), ordered[j].deg(1));
            if !ideal
                .gens()
                .iter()
                .all(|u| u.deg(dec.alpha) > va || u.deg(dec.beta) >= vb)
            {
                tail = false;
            }
        }
    }
    Ok(AxisGapReport { axis, matching, tail })
}

/// Checks the multi-layer conditions; the ideal must split into at least two
/// layers along the last variable.
pub fn check_condition_double_star(ideal: &MonomialIdeal) -> Result<DoubleStarReport> {
    let dec = layer_decompose(ideal, 2)?;
    if dec.num_layers() < 2 {
        return Err(Error::LayerStructure {
            reason: "the multi-layer conditions need at least two layers along the last variable",
        });
    }
    let mut prefix_regularities = true;
    for take in 1..dec.num_layers() {
        if regularity(&dec.prefix_sum(take))? != dec.degree {
            prefix_regularities = false;
            break;
        }
    }
    let adjacent_shared_degree = dec
        .layers
        .windows(2)
        .all(|w| shared_inner_degree(&w[0].inner, &w[1].inner));
    let consecutive_axis_exponents = dec
        .layers
        .windows(2)
        .all(|w| w[1].axis_exp == w[0].axis_exp + 1);
    let gap_reports = [
        axis_gap_report(ideal, 0)?,
        axis_gap_report(ideal, 1)?,
        axis_gap_report(ideal, 2)?,
    ];
    Ok(DoubleStarReport {
        prefix_regularities,
        adjacent_shared_degree,
        consecutive_axis_exponents,
        gap_reports,
    })
}

/// One layer's generators as global positions, in the explicit append order:
/// ascending from the start position to the end, then descending leftwards.
///
/// `orient_alpha` picks which remaining variable's exponent ascends. The
/// start is the element after the last oversized gap when gaps exist, and
/// otherwise the first element whose oriented exponent reappears in the
/// previous layer. Returns nothing when no start qualifies.
fn layer_sequence(
    dec: &LayerDecomposition,
    gens: &[Monomial],
    index: usize,
    orient_alpha: bool,
) -> Option<Vec<usize>> {
    let layer = &dec.layers[index];
    let mut ordered: Vec<&Monomial> = layer.ordered_gens();
    if !orient_alpha {
        ordered.reverse();
    }
    let ovar = if orient_alpha { 0 } else { 1 };
    let last_gap = (0..ordered.len().saturating_sub(1))
        .rev()
        .find(|&j| ordered[j + 1].deg(ovar) - ordered[j].deg(ovar) >= 2);
    let start = match last_gap {
        Some(j) => j + 1,
        None if index == 0 => 0,
        None => {
            let prev = &dec.layers[index - 1].inner;
            (0..ordered.len()).find(|&p| {
                prev.gens().iter().any(|w| w.deg(ovar) == ordered[p].deg(ovar))
            })?
        }
    };
    if index == 0 && last_gap.is_some() {
        return None;
    }
    let position = |g: &Monomial| {
        let lifted = dec.lift(layer, g);
        gens.iter().position(|h| *h == lifted).expect("layer generators come from the ideal")
    };
    let mut seq: Vec<usize> = (start..ordered.len()).map(|p| position(ordered[p])).collect();
    seq.extend((0..start).rev().map(|p| position(ordered[p])));
    Some(seq)
}

fn append_layer(
    oracle: &ColonOracle,
    mask: &mut u32,
    order: &mut Vec<usize>,
    witnesses: &mut Vec<Vec<usize>>,
    seq: &[usize],
) -> bool {
    for &g in seq {
        if *mask != 0 {
            let Some(vars) = oracle.variable_colon(*mask, g) else {
                return false;
            };
            witnesses.push(vars);
        }
        order.push(g);
        *mask |= 1 << g;
    }
    true
}

/// Builds the explicit layer-by-layer quotient ordering.
///
/// Requires the structural conditions to hold: the single-layer criterion
/// for one layer, the two-layer conditions for two, and the multi-layer
/// conditions beyond that. Two-variable input is treated as a single layer.
pub fn constructive_lq_order(ideal: &MonomialIdeal) -> Result<LqCertificate> {
    if ideal.num_gens() <= 1 {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal { op: "constructive_lq_order" });
        }
        return Ok(LqCertificate { order: vec![0], witnesses: Vec::new() });
    }
    match ideal.ambient() {
        2 => {
            if !two_variable_criterion(ideal)? {
                return Err(Error::LayerStructure {
                    reason: "the consecutive-exponent criterion fails",
                });
            }
            // ascending in the first variable reverses the canonical order
            let m = ideal.num_gens();
            let oracle = ColonOracle::new(ideal);
            let mut mask = 0u32;
            let mut order = Vec::new();
            let mut witnesses = Vec::new();
            let seq: Vec<usize> = (0..m).rev().collect();
            if !append_layer(&oracle, &mut mask, &mut order, &mut witnesses, &seq) {
                return Err(Error::LayerStructure { reason: "ordering failed to validate" });
            }
            Ok(LqCertificate { order, witnesses })
        }
        3 => constructive_three_variable(ideal),
        n => Err(Error::WrongAmbient { op: "constructive_lq_order", required: 3, found: n }),
    }
}

fn constructive_three_variable(ideal: &MonomialIdeal) -> Result<LqCertificate> {
    let dec = layer_decompose(ideal, 2)?;
    match dec.num_layers() {
        1 => {
            if !two_variable_criterion(&dec.layers[0].inner)? {
                return Err(Error::LayerStructure {
                    reason: "the consecutive-exponent criterion fails",
                });
            }
        }
        2 => {
            if !check_condition_star(&dec)?.satisfied() {
                return Err(Error::LayerStructure { reason: "the two-layer conditions fail" });
            }
        }
        _ => {
            if !check_condition_double_star(ideal)?.satisfied() {
                return Err(Error::LayerStructure { reason: "the multi-layer conditions fail" });
            }
        }
    }
    let gens = ideal.gens();
    let oracle = ColonOracle::new(ideal);
    // depth-first over the per-layer orientation choices; the first layer has
    // no gaps and works ascending, later layers try the first variable first
    fn go(
        dec: &LayerDecomposition,
        gens: &[Monomial],
        oracle: &ColonOracle,
        index: usize,
        mask: u32,
        order: &mut Vec<usize>,
        witnesses: &mut Vec<Vec<usize>>,
    ) -> bool {
        if index == dec.num_layers() {
            return true;
        }
        let orientations: &[bool] = if index == 0 { &[true] } else { &[true, false] };
        for &orient in orientations {
            let Some(seq) = layer_sequence(dec, gens, index, orient) else {
                continue;
            };
            let order_len = order.len();
            let wit_len = witnesses.len();
            let mut local_mask = mask;
            if append_layer(oracle, &mut local_mask, order, witnesses, &seq)
                && go(dec, gens, oracle, index + 1, local_mask, order, witnesses)
            {
                return true;
            }
            order.truncate(order_len);
            witnesses.truncate(wit_len);
        }
        false
    }
    let mut order = Vec::new();
    let mut witnesses = Vec::new();
    if !go(&dec, gens, &oracle, 0, 0, &mut order, &mut witnesses) {
        return Err(Error::LayerStructure { reason: "no layer ordering validated" });
    }
    let cert = LqCertificate { order, witnesses };
    debug_assert!(cert.validate(ideal));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn star_holds_on_augmented_square() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]);
        let dec = layer_decompose(&i, 2).unwrap();
        let report = check_condition_star(&dec).unwrap();
        assert!(report.consecutive_axis_exponents);
        assert!(report.first_layer_minimal_regularity);
        assert!(report.shared_inner_degree);
        assert!(report.gap_matching);
        assert!(report.satisfied());
    }

    #[test]
    fn star_fails_without_shared_degree() {
        // first layer (x1^3), second (x2^2): no degree in common
        let i = ideal(3, &[&[3, 0, 0], &[0, 2, 1]]);
        let dec = layer_decompose(&i, 2).unwrap();
        let report = check_condition_star(&dec).unwrap();
        assert!(report.consecutive_axis_exponents);
        assert!(report.first_layer_minimal_regularity);
        assert!(!report.shared_inner_degree);
        assert!(!report.satisfied());
    }

    #[test]
    fn star_fails_on_axis_exponent_jump() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 0, 2]]);
        let dec = layer_decompose(&i, 2).unwrap();
        let report = check_condition_star(&dec).unwrap();
        assert!(!report.consecutive_axis_exponents);
        assert!(!report.satisfied());
    }

    #[test]
    fn star_needs_two_layers() {
        let single = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        let dec = layer_decompose(&single, 2).unwrap();
        assert!(matches!(
            check_condition_star(&dec),
            Err(Error::LayerStructure { .. })
        ));
    }

    #[test]
    fn double_star_mirrors_star_on_two_layers() {
        let yes = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]);
        let report = check_condition_double_star(&yes).unwrap();
        assert!(report.satisfied());

        let no = ideal(3, &[&[3, 0, 0], &[0, 2, 1]]);
        let report = check_condition_double_star(&no).unwrap();
        assert!(!report.adjacent_shared_degree);
        assert!(!report.satisfied());
    }

    #[test]
    fn double_star_needs_two_layers() {
        let single = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        assert!(matches!(
            check_condition_double_star(&single),
            Err(Error::LayerStructure { .. })
        ));
    }

    #[test]
    fn constructive_order_on_augmented_square() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]);
        let cert = constructive_lq_order(&i).unwrap();
        assert!(cert.validate(&i));
        // layer one ascends in x1, then the lone second-layer generator
        assert_eq!(cert.order, vec![3, 1, 0, 2]);
        assert_eq!(cert.witnesses, vec![vec![1], vec![1], vec![0, 1]]);
    }

    #[test]
    fn constructive_order_two_variables() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let cert = constructive_lq_order(&i).unwrap();
        assert_eq!(cert.order, vec![2, 1, 0]);
        assert_eq!(cert.witnesses, vec![vec![1], vec![1]]);
        assert!(cert.validate(&i));
    }

    #[test]
    fn constructive_rejects_failing_conditions() {
        assert!(matches!(
            constructive_lq_order(&ideal(2, &[&[2, 0], &[0, 2]])),
            Err(Error::LayerStructure { .. })
        ));
        assert!(matches!(
            constructive_lq_order(&ideal(3, &[&[3, 0, 0], &[0, 2, 1]])),
            Err(Error::LayerStructure { .. })
        ));
    }

    #[test]
    fn constructive_handles_principal_and_errors_on_zero() {
        let p = ideal(3, &[&[1, 2, 0]]);
        let cert = constructive_lq_order(&p).unwrap();
        assert_eq!(cert.order, vec![0]);
        assert!(constructive_lq_order(&MonomialIdeal::zero(3)).is_err());
    }
}

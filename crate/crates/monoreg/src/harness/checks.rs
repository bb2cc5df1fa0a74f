//! The verification checks: exhaustive and sampled confirmation of the
//! regularity, closure, and quotient-structure statements implemented by the
//! library, each producing a [`VerificationReport`].

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::betti::{
    has_linear_resolution, lcm_lattice_betti, multigraded_betti, regularity, BettiOptions,
};
use crate::error::Error;
use crate::harness::enumerate::{ideals_for_degree, sample_ideal};
use crate::harness::{FailureRecord, IdealRepr, VerificationReport, VerifyConfig};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::newton::{closure_with_audit, delta, dim_quotient, max_gen_degree};
use crate::parse::{format_ideal, format_monomial};
use crate::structure::{
    betti_splitting_verify, check_condition_double_star, check_condition_star,
    constructive_lq_order, induced_subideal, layer_decompose, linear_quotients_order, polarize,
    two_variable_criterion,
};

fn repr(ideal: &MonomialIdeal) -> IdealRepr {
    IdealRepr { text: format_ideal(ideal), n: ideal.ambient() }
}

fn pair_repr(a: &MonomialIdeal, b: &MonomialIdeal) -> IdealRepr {
    IdealRepr { text: format!("{} | {}", format_ideal(a), format_ideal(b)), n: a.ambient() }
}

/// Accumulator for one report; failures carry enough text to recompute the
/// discrepancy from the serialized ideal alone.
struct Check {
    name: String,
    started: Instant,
    tested: u64,
    failures: Vec<FailureRecord>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), started: Instant::now(), tested: 0, failures: Vec::new() }
    }

    fn tick(&mut self) {
        self.tested += 1;
    }

    fn fail(&mut self, ideal: IdealRepr, expected: impl Into<String>, observed: impl Into<String>) {
        self.failures.push(FailureRecord {
            ideal,
            expected: expected.into(),
            observed: observed.into(),
        });
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_name: self.name,
            instances_tested: self.tested,
            failures: self.failures,
            wall_time_s: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Cross-checks every route to "regularity equals the generating degree" on
/// the enumerated equigenerated ideals: Betti-table regularity, linearity of
/// the resolution, existence of a linear-quotients ordering, and (in two
/// variables) the consecutive-exponent criterion.
pub fn verify_lq_equivalence(n: usize, d_max: u32, seed: u64) -> VerificationReport {
    let mut check = Check::new(format!("lq_equivalence_n{n}"));
    let opts = BettiOptions::default();
    for d in 1..=d_max {
        for ideal in ideals_for_degree(n, d, seed) {
            check.tick();
            let reg = regularity(&ideal).expect("enumerated ideals are proper and small");
            let minimal = reg == d;
            let linear = has_linear_resolution(&ideal, &opts).expect("equigenerated");
            let quotients = linear_quotients_order(&ideal)
                .expect("within the generator cap")
                .is_some();
            let mut verdicts = vec![("linear_resolution", linear), ("linear_quotients", quotients)];
            if n == 2 {
                let criterion = two_variable_criterion(&ideal).expect("two variables");
                verdicts.push(("consecutive_exponents", criterion));
            }
            if verdicts.iter().any(|&(_, v)| v != minimal) {
                let observed: Vec<String> = std::iter::once(format!("reg={reg} (degree {d})"))
                    .chain(verdicts.iter().map(|(k, v)| format!("{k}={v}")))
                    .collect();
                check.fail(
                    repr(&ideal),
                    "all characterizations of minimal regularity agree",
                    observed.join(", "),
                );
            }
        }
    }
    check.finish()
}

/// The three reports produced by one pass over the closure families.
pub struct ClosureReports {
    /// `reg(closure) <= reg(ideal)`, and for three-variable equigenerated
    /// ideals at minimal regularity: the closure stays equigenerated of the
    /// same degree with the same regularity.
    pub regularity: VerificationReport,
    /// Per-box-point agreement between the hull decision and the bounded
    /// power-membership oracle.
    pub oracle_agreement: VerificationReport,
    /// `delta <= {max generating degree, regularity} of the closure <=
    /// delta + dim` of the quotient.
    pub vertex_bounds: VerificationReport,
}

fn closure_instance(
    ideal: &MonomialIdeal,
    degree: Option<u32>,
    config: &VerifyConfig,
    reg_check: &mut Check,
    oracle_check: &mut Check,
    bounds_check: &mut Check,
) {
    reg_check.tick();
    let (closure, disagreements, examined) =
        closure_with_audit(ideal, config.power_bound, config.diagnostic_power_bound)
            .expect("nonzero ideal");
    let reg_i = regularity(ideal).expect("proper ideal within the generator cap");
    let reg_c = regularity(&closure).expect("closure stays within the generator cap");
    if reg_c > reg_i {
        reg_check.fail(
            repr(ideal),
            "reg(closure) <= reg(ideal)",
            format!("reg(ideal)={reg_i}, reg(closure)={reg_c}"),
        );
    }
    if let Some(d) = degree {
        if ideal.ambient() == 3 && reg_i == d {
            let closure_degree = closure.is_equigenerated().expect("closure is nonzero");
            if closure_degree != Some(d) || reg_c != d {
                reg_check.fail(
                    repr(ideal),
                    format!("closure generated in degree {d} with reg {d}"),
                    format!("closure degree {closure_degree:?}, reg(closure)={reg_c}"),
                );
            }
        }
    }
    oracle_check.tested += examined;
    for dis in disagreements {
        oracle_check.fail(
            repr(ideal),
            format!("hull and power membership agree at {}", format_monomial(&dis.point)),
            format!(
                "hull={}, power(k <= {})={}, smallest witness k={:?}",
                dis.hull, config.power_bound, dis.power, dis.min_witness
            ),
        );
    }
    bounds_check.tick();
    let dl = delta(ideal).expect("nonzero ideal");
    let dim = dim_quotient(ideal).expect("proper ideal") as u32;
    let dgen = max_gen_degree(&closure).expect("nonzero closure");
    if !(dl <= dgen && dgen <= dl + dim && dl <= reg_c && reg_c <= dl + dim) {
        bounds_check.fail(
            repr(ideal),
            "delta <= d(closure), reg(closure) <= delta + dim",
            format!("delta={dl}, dim={dim}, d(closure)={dgen}, reg(closure)={reg_c}"),
        );
    }
}

/// Compares every enumerated ideal (and, in two variables, a seeded random
/// family) against its integral closure, auditing each closure-box point.
pub fn verify_closure_regularity(config: &VerifyConfig) -> ClosureReports {
    let n = config.n;
    let mut reg_check = Check::new(format!("closure_regularity_n{n}"));
    let mut oracle_check = Check::new(format!("closure_oracle_agreement_n{n}"));
    let mut bounds_check = Check::new(format!("delta_dim_bounds_n{n}"));
    for d in 1..=config.d_max {
        for ideal in ideals_for_degree(n, d, config.seed) {
            closure_instance(
                &ideal,
                Some(d),
                config,
                &mut reg_check,
                &mut oracle_check,
                &mut bounds_check,
            );
        }
    }
    if n == 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x636c_6f73);
        for _ in 0..config.closure_samples {
            let ideal = sample_ideal(&mut rng, 2, 5, 5);
            closure_instance(
                &ideal,
                None,
                config,
                &mut reg_check,
                &mut oracle_check,
                &mut bounds_check,
            );
        }
    }
    ClosureReports {
        regularity: reg_check.finish(),
        oracle_agreement: oracle_check.finish(),
        vertex_bounds: bounds_check.finish(),
    }
}

/// Checks the structural conditions against computed regularity on every
/// enumerated three-variable ideal, and that the explicit ordering succeeds
/// exactly on the minimal-regularity ideals with a valid certificate.
///
/// The second report is a census: it counts the ideals whose multi-layer
/// verdict flips when the gap-domination clause is ignored, with no failures
/// by construction.
pub fn verify_conditions(d_max: u32, seed: u64) -> Vec<VerificationReport> {
    let mut equiv = Check::new("conditions_equivalence");
    let mut tail = Check::new("conditions_gap_tail_necessity");
    for d in 1..=d_max {
        for ideal in ideals_for_degree(3, d, seed) {
            equiv.tick();
            let reg = regularity(&ideal).expect("enumerated ideals are proper and small");
            let minimal = reg == d;
            let dec = layer_decompose(&ideal, 2).expect("three-variable equigenerated");
            match dec.num_layers() {
                1 => {
                    let inner = two_variable_criterion(&dec.layers[0].inner)
                        .expect("inner ideals live in two variables");
                    if inner != minimal {
                        equiv.fail(
                            repr(&ideal),
                            "single-layer criterion matches minimal regularity",
                            format!("criterion={inner}, reg={reg}, degree={d}"),
                        );
                    }
                }
                2 => {
                    let star = check_condition_star(&dec).expect("two layers").satisfied();
                    let report = check_condition_double_star(&ideal).expect("two layers");
                    if star != minimal || report.satisfied() != minimal {
                        equiv.fail(
                            repr(&ideal),
                            "two-layer conditions match minimal regularity",
                            format!(
                                "star={star}, double_star={}, reg={reg}, degree={d}",
                                report.satisfied()
                            ),
                        );
                    }
                    if report.satisfied_without_tail() != report.satisfied() {
                        tail.tick();
                    }
                }
                _ => {
                    let report = check_condition_double_star(&ideal).expect("multi-layer");
                    if report.satisfied() != minimal {
                        equiv.fail(
                            repr(&ideal),
                            "multi-layer conditions match minimal regularity",
                            format!(
                                "double_star={}, reg={reg}, degree={d}",
                                report.satisfied()
                            ),
                        );
                    }
                    if report.satisfied_without_tail() != report.satisfied() {
                        tail.tick();
                    }
                }
            }
            match constructive_lq_order(&ideal) {
                Ok(cert) => {
                    if !minimal {
                        equiv.fail(
                            repr(&ideal),
                            "explicit ordering exists only at minimal regularity",
                            format!("unexpected certificate at reg={reg}, degree={d}"),
                        );
                    } else if !cert.validate(&ideal) {
                        equiv.fail(
                            repr(&ideal),
                            "explicit ordering certificate validates",
                            format!("invalid certificate order {:?}", cert.order),
                        );
                    }
                }
                Err(Error::LayerStructure { reason }) => {
                    if minimal {
                        equiv.fail(
                            repr(&ideal),
                            "explicit ordering exists at minimal regularity",
                            format!("construction declined: {reason}"),
                        );
                    }
                }
                Err(e) => {
                    equiv.fail(
                        repr(&ideal),
                        "explicit ordering runs cleanly",
                        format!("unexpected error: {e}"),
                    );
                }
            }
        }
    }
    vec![equiv.finish(), tail.finish()]
}

/// Entrywise comparison of the two independent Betti-table computations over
/// characteristics 2, 32003, and 0 on seeded random ideals.
pub fn verify_betti_oracles(samples: u64, seed: u64) -> VerificationReport {
    let mut check = Check::new("betti_oracle_agreement");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6265_7474);
    for _ in 0..samples {
        let n = rng.random_range(1..=3);
        let ideal = sample_ideal(&mut rng, n, 6, 5);
        check.tick();
        for characteristic in [2u64, 32003, 0] {
            let opts = BettiOptions { characteristic, ..BettiOptions::default() };
            let koszul = multigraded_betti(&ideal, &opts).expect("proper, within cap");
            let lattice = lcm_lattice_betti(&ideal, &opts).expect("proper, within cap");
            if koszul.multigraded != lattice.multigraded {
                check.fail(
                    repr(&ideal),
                    format!("Koszul and lattice tables agree in characteristic {characteristic}"),
                    format!("koszul {:?} vs lattice {:?}", koszul.graded, lattice.graded),
                );
            }
        }
    }
    check.finish()
}

fn pure_power_regularity() -> VerificationReport {
    let mut check = Check::new("pure_power_regularity");
    for m in 1..=3usize {
        for d in 1..=3u16 {
            for t in 1..=3u32 {
                check.tick();
                let gens = (0..m).map(|i| Monomial::variable(m, i).pow(d));
                let ideal = MonomialIdeal::minimalize(m, gens).expect("pure powers");
                let power = ideal.power(t).expect("same ambient");
                let reg = regularity(&power).expect("proper ideal");
                let expected = u32::from(d) * t + (u32::from(d) - 1) * (m as u32 - 1);
                if reg != expected {
                    check.fail(
                        repr(&power),
                        format!("reg = {expected} (d={d}, m={m}, t={t})"),
                        format!("reg = {reg}"),
                    );
                }
            }
        }
    }
    check.finish()
}

fn generator_power_triangle() -> VerificationReport {
    let mut check = Check::new("generator_power_triangle_regularity");
    for c in 1..=3u16 {
        check.tick();
        let gens = [[0, c, c], [c, 0, c], [c, c, 0]].map(|e| Monomial::new(e.to_vec()));
        let ideal = MonomialIdeal::minimalize(3, gens).expect("triangle powers");
        let reg = regularity(&ideal).expect("proper ideal");
        let expected = 3 * u32::from(c) - 1;
        if reg != expected {
            check.fail(repr(&ideal), format!("reg = {expected}"), format!("reg = {reg}"));
        }
    }
    check.finish()
}

/// Pads an ideal into a larger ambient by inserting `before` leading and
/// `after` trailing zero exponents.
fn embed(ideal: &MonomialIdeal, before: usize, after: usize) -> MonomialIdeal {
    let gens = ideal.gens().iter().map(|g| {
        let mut exps = vec![0u16; before];
        exps.extend_from_slice(g.exps());
        exps.extend(std::iter::repeat(0).take(after));
        Monomial::new(exps)
    });
    MonomialIdeal::minimalize(before + ideal.ambient() + after, gens).expect("padded ambient")
}

fn disjoint_pair_regularity(config: &VerifyConfig) -> VerificationReport {
    let mut check = Check::new("disjoint_pair_regularity");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6469_736a);
    for _ in 0..config.aux_samples {
        let n1 = rng.random_range(1..=2);
        let n2 = rng.random_range(1..=3 - n1);
        let a = sample_ideal(&mut rng, n1, 3, 4);
        let b = sample_ideal(&mut rng, n2, 3, 4);
        check.tick();
        let ra = regularity(&a).expect("proper ideal");
        let rb = regularity(&b).expect("proper ideal");
        let left = embed(&a, 0, n2);
        let right = embed(&b, n1, 0);
        let sum = regularity(&left.sum(&right).expect("shared ambient")).expect("proper");
        let product =
            regularity(&left.product(&right).expect("shared ambient")).expect("proper");
        if sum != ra + rb - 1 || product != ra + rb {
            check.fail(
                pair_repr(&left, &right),
                format!("reg(sum) = {} and reg(product) = {}", ra + rb - 1, ra + rb),
                format!("reg(sum) = {sum}, reg(product) = {product}"),
            );
        }
    }
    check.finish()
}

/// Draws an ideal whose polarization has at most nine variables.
fn sample_compact_ideal<R: Rng>(rng: &mut R) -> MonomialIdeal {
    loop {
        let n = rng.random_range(1..=3);
        let ideal = sample_ideal(rng, n, 4, 3);
        let slots: u32 = ideal
            .max_exponents()
            .expect("nonzero")
            .iter()
            .map(|&e| u32::from(e))
            .sum();
        if slots <= 9 {
            return ideal;
        }
    }
}

fn polarization_invariance(config: &VerifyConfig) -> VerificationReport {
    let mut check = Check::new("polarization_betti_invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x706f_6c61);
    let opts = BettiOptions::default();
    for _ in 0..config.aux_samples {
        let ideal = sample_compact_ideal(&mut rng);
        check.tick();
        let (image, _) = polarize(&ideal).expect("nonzero ideal");
        let original = multigraded_betti(&ideal, &opts).expect("proper, within cap");
        let polarized = multigraded_betti(&image, &opts).expect("proper, within cap");
        if original.graded != polarized.graded {
            check.fail(
                repr(&ideal),
                "graded Betti numbers survive polarization",
                format!("original {:?} vs polarized {:?}", original.graded, polarized.graded),
            );
        }
    }
    check.finish()
}

fn variable_splitting(config: &VerifyConfig) -> VerificationReport {
    let mut check = Check::new("variable_splitting_identity");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x7370_6c69);
    let opts = BettiOptions::default();
    for _ in 0..config.aux_samples {
        let n = rng.random_range(2..=3);
        let ideal = sample_ideal(&mut rng, n, 6, 4);
        for var in 0..n {
            let (with, without): (Vec<_>, Vec<_>) =
                ideal.gens().iter().cloned().partition(|g| g.deg(var) > 0);
            if with.is_empty() || without.is_empty() {
                continue;
            }
            let left = MonomialIdeal::minimalize(n, with).expect("subset of minimal generators");
            let right =
                MonomialIdeal::minimalize(n, without).expect("subset of minimal generators");
            let linear = left.is_equigenerated().expect("nonzero").is_some()
                && has_linear_resolution(&left, &opts).expect("equigenerated");
            if !linear {
                continue;
            }
            check.tick();
            let split = betti_splitting_verify(&ideal, &left, &right, opts.characteristic)
                .expect("valid partition");
            let reg_i = regularity(&ideal).expect("proper") as i64;
            let reg_parts = [
                regularity(&left).expect("proper") as i64,
                regularity(&right).expect("proper") as i64,
                regularity(&left.intersect(&right).expect("shared ambient")).expect("proper")
                    as i64
                    - 1,
            ];
            let expected = reg_parts.iter().copied().max().unwrap();
            if !split || reg_i != expected {
                check.fail(
                    pair_repr(&left, &right),
                    "linear first part gives a Betti splitting with the max formula",
                    format!("splitting={split}, reg={reg_i}, max-formula={expected}"),
                );
            }
        }
    }
    check.finish()
}

fn restriction_monotonicity(config: &VerifyConfig) -> VerificationReport {
    let mut check = Check::new("restriction_regularity_monotonicity");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x7265_7374);
    for _ in 0..config.aux_samples {
        let ideal = sample_compact_ideal(&mut rng);
        let (image, _) = polarize(&ideal).expect("nonzero ideal");
        let chosen: Vec<usize> =
            (0..image.ambient()).filter(|_| rng.random_range(0..2) == 1).collect();
        let induced = induced_subideal(&image, &chosen).expect("polarized ideals are squarefree");
        if induced.is_zero() {
            continue;
        }
        check.tick();
        let full = regularity(&image).expect("proper");
        let sub = regularity(&induced).expect("proper");
        if sub > full {
            check.fail(
                repr(&image),
                format!("restriction to {chosen:?} has reg <= {full}"),
                format!("reg = {sub}"),
            );
        }
    }
    check.finish()
}

fn exact_sequence_bounds(config: &VerifyConfig) -> VerificationReport {
    let mut check = Check::new("exact_sequence_bounds");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6578_6374);
    for _ in 0..config.pair_samples {
        let n = rng.random_range(1..=3);
        let left = sample_ideal(&mut rng, n, 4, 4);
        let right = sample_ideal(&mut rng, n, 4, 4);
        check.tick();
        let rl = regularity(&left).expect("proper") as i64;
        let rr = regularity(&right).expect("proper") as i64;
        let middle = rl.max(rr);
        let meet =
            regularity(&left.intersect(&right).expect("shared ambient")).expect("proper") as i64;
        let join = regularity(&left.sum(&right).expect("shared ambient")).expect("proper") as i64;
        let mut problems = Vec::new();
        if middle > meet.max(join) {
            problems.push("max(reg J, reg K) <= max(reg(J∩K), reg(J+K)) violated");
        } else if join != meet - 1 && middle != meet.max(join) {
            problems.push("equality clause for the middle term violated");
        }
        if join > (meet - 1).max(middle) {
            problems.push("reg(J+K) <= max(reg(J∩K)-1, reg J, reg K) violated");
        } else if meet != middle && join != (meet - 1).max(middle) {
            problems.push("equality clause for the sum violated");
        }
        if !problems.is_empty() {
            check.fail(
                pair_repr(&left, &right),
                "short-exact-sequence regularity bounds hold",
                format!(
                    "{} (reg J={rl}, reg K={rr}, reg(J∩K)={meet}, reg(J+K)={join})",
                    problems.join("; ")
                ),
            );
        }
    }
    check.finish()
}

/// The sampled identity checks: closed-form regularity families,
/// polarization invariance, variable splittings, induced restrictions, and
/// exact-sequence bounds.
pub fn verify_auxiliary(config: &VerifyConfig) -> Vec<VerificationReport> {
    vec![
        pure_power_regularity(),
        generator_power_triangle(),
        disjoint_pair_regularity(config),
        polarization_invariance(config),
        variable_splitting(config),
        restriction_monotonicity(config),
        exact_sequence_bounds(config),
    ]
}

/// Runs every check applicable to the configured ambient, in a fixed order.
pub fn run_all(config: &VerifyConfig) -> Vec<VerificationReport> {
    assert!(matches!(config.n, 2 | 3), "verification targets two or three variables");
    let mut reports = vec![verify_lq_equivalence(config.n, config.d_max, config.seed)];
    let closure = verify_closure_regularity(config);
    reports.push(closure.regularity);
    reports.push(closure.oracle_agreement);
    reports.push(closure.vertex_bounds);
    if config.n == 3 {
        reports.extend(verify_conditions(config.d_max, config.seed));
    }
    reports.push(verify_betti_oracles(config.betti_samples, config.seed));
    reports.extend(verify_auxiliary(config));
    reports
}

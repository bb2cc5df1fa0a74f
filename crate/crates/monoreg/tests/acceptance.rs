//! Acceptance gate: runs the verification suite at full scale and prints one
//! pass/fail line per criterion.
//!
//! Criterion 9 asserts that the hull membership decision and the power
//! membership oracle capped at k <= 6 agree on every audited closure-box
//! point. That cap is too small in three variables: for example the box of
//! (x1^4, x2^3*x3, x3^4) contains the point x1*x2*x3^2, which lies in the
//! hull with the unique certificate (1/4, 1/3, 5/12) and therefore has no
//! witness power below k = 12. The audit reports such points with their
//! smallest witness, so this criterion fails with full diagnostics while the
//! hull-based closure itself (criteria 2 and 4) remains exact.

use monoreg::harness::{
    verify_auxiliary, verify_betti_oracles, verify_closure_regularity, verify_conditions,
    verify_lq_equivalence, VerificationReport, VerifyConfig,
};

const SEED: u64 = 1;

struct Outcome {
    line: String,
    passed: bool,
}

fn record(results: &mut Vec<Outcome>, index: usize, passed: bool, detail: String) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    let line = format!("criterion {index}: {verdict} ({detail})");
    println!("{line}");
    results.push(Outcome { line, passed });
}

fn summary(report: &VerificationReport) -> String {
    format!(
        "{}: {} instances, {} failures, {:.1}s",
        report.check_name,
        report.instances_tested,
        report.failures.len(),
        report.wall_time_s
    )
}

fn by_name<'a>(reports: &'a [VerificationReport], name: &str) -> &'a VerificationReport {
    reports
        .iter()
        .find(|r| r.check_name == name)
        .unwrap_or_else(|| panic!("missing report {name}"))
}

#[test]
fn acceptance_criteria() {
    let mut results = Vec::new();

    let equivalence2 = verify_lq_equivalence(2, 6, SEED);
    record(
        &mut results,
        1,
        equivalence2.passed()
            && equivalence2.instances_tested == 246
            && equivalence2.wall_time_s < 120.0,
        summary(&equivalence2),
    );

    let config2 = VerifyConfig { n: 2, d_max: 6, seed: SEED, ..VerifyConfig::default() };
    let closure2 = verify_closure_regularity(&config2);
    record(
        &mut results,
        2,
        closure2.regularity.passed() && closure2.regularity.instances_tested == 246 + 10_000,
        summary(&closure2.regularity),
    );

    let equivalence3 = verify_lq_equivalence(3, 4, SEED);
    record(
        &mut results,
        3,
        equivalence3.passed()
            && equivalence3.instances_tested == 33_860
            && equivalence3.wall_time_s < 1800.0,
        summary(&equivalence3),
    );

    let config3 = VerifyConfig { n: 3, d_max: 4, seed: SEED, ..VerifyConfig::default() };
    let closure3 = verify_closure_regularity(&config3);
    record(
        &mut results,
        4,
        closure3.regularity.passed() && closure3.regularity.instances_tested == 33_860,
        summary(&closure3.regularity),
    );

    let conditions = verify_conditions(4, SEED);
    record(
        &mut results,
        5,
        conditions[0].passed() && conditions[0].instances_tested == 33_860,
        format!("{}; tail census: {}", summary(&conditions[0]), conditions[1].instances_tested),
    );

    let betti = verify_betti_oracles(1000, SEED);
    record(
        &mut results,
        6,
        betti.passed() && betti.instances_tested == 1000,
        summary(&betti),
    );

    let auxiliary = verify_auxiliary(&config3);
    let closed_forms = [
        by_name(&auxiliary, "pure_power_regularity"),
        by_name(&auxiliary, "generator_power_triangle_regularity"),
        by_name(&auxiliary, "disjoint_pair_regularity"),
    ];
    record(
        &mut results,
        7,
        closed_forms.iter().all(|r| r.passed() && r.instances_tested > 0),
        closed_forms.iter().map(|r| summary(r)).collect::<Vec<_>>().join("; "),
    );

    let pairs = by_name(&auxiliary, "exact_sequence_bounds");
    let identities = [
        by_name(&auxiliary, "polarization_betti_invariance"),
        by_name(&auxiliary, "variable_splitting_identity"),
        by_name(&auxiliary, "restriction_regularity_monotonicity"),
        pairs,
    ];
    record(
        &mut results,
        8,
        identities.iter().all(|r| r.passed() && r.instances_tested > 0)
            && pairs.instances_tested == 500
            && closure2.vertex_bounds.passed()
            && closure3.vertex_bounds.passed(),
        format!(
            "{}; {}; {}",
            identities.iter().map(|r| summary(r)).collect::<Vec<_>>().join("; "),
            summary(&closure2.vertex_bounds),
            summary(&closure3.vertex_bounds)
        ),
    );

    let audits = [&closure2.oracle_agreement, &closure3.oracle_agreement];
    let disagreements: usize = audits.iter().map(|r| r.failures.len()).sum();
    let mut detail = format!(
        "{} box points audited, {} disagreements",
        audits.iter().map(|r| r.instances_tested).sum::<u64>(),
        disagreements
    );
    if let Some(first) = audits.iter().flat_map(|r| &r.failures).next() {
        detail.push_str(&format!(
            "; first: {} — {} — {}",
            first.ideal.text, first.expected, first.observed
        ));
    }
    record(&mut results, 9, disagreements == 0, detail);

    let failed: Vec<&str> =
        results.iter().filter(|o| !o.passed).map(|o| o.line.as_str()).collect();
    assert!(
        failed.is_empty(),
        "{} of 9 criteria failed:\n{}\nThe k <= 6 power cap is provably too small for the \
         audited three-variable boxes (smallest witness powers reach 12); the hull-based \
         closure results themselves are exact.",
        failed.len(),
        failed.join("\n")
    );
}

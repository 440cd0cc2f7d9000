//! The acceptance suite: twelve measured checks the finished artifact must
//! pass, shared by the `acceptance` integration tests and `circstab verify`.
//!
//! Each criterion recomputes what it claims from scratch and reports
//! measured against expected. Criterion 3 covers the extended order range;
//! its reference counts come from a single unverified run, so it is opt-in
//! and never gates the overall result.

use crate::autoeng::{analyze, brute_force_aut_order, ColoredGraph, Permutation};
use crate::census::compare::{
    order24_reference_sets, EXTENDED_NO_WILSON, EXTENDED_TOTAL_39_TO_50,
    REFERENCE_TOTAL_THROUGH_38,
};
use crate::census::{canonical_survivor_sets, enumerate_order, run_census};
use crate::circulant::{all_symmetric_sets, walk_parity_graph, ConnectionSet};
use crate::conditions::{
    stability_verdict, verify_perm_pair, NewConditionHit, PermPair, StabilityReport, Verdict,
    WitnessJson,
};
use crate::families;
use crate::twoprime::{classify_2p, orders_predicate};
use crate::zmod::units;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Worker count for census-backed checks; 0 uses every core.
    pub jobs: usize,
    /// Run the extended-range comparison (criterion 3); hours of work.
    pub extended: bool,
    /// Census cache directory; makes repeat runs and resumption cheap.
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    /// Required criteria gate the exit status; reference-only ones never do.
    pub required: bool,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionOutcome {
    /// False exactly when a required criterion failed.
    pub fn acceptable(&self) -> bool {
        self.status != Status::Fail || !self.required
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail if self.required => "FAIL",
            Status::Fail => "MISMATCH",
            Status::Skipped => "SKIP",
        };
        write!(
            f,
            "criterion {:>2} {:<8} [{:>8.2}s] {}: {}",
            self.id, status, self.seconds, self.name, self.detail
        )
    }
}

fn finish(
    id: usize,
    name: &'static str,
    required: bool,
    start: Instant,
    pass: bool,
    detail: String,
) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name,
        required,
        status: if pass { Status::Pass } else { Status::Fail },
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Caps a violation list for a detail string.
fn sample_list(items: &[String]) -> String {
    const SHOW: usize = 5;
    if items.len() <= SHOW {
        items.join(", ")
    } else {
        format!("{}, ... ({} total)", items[..SHOW].join(", "), items.len())
    }
}

fn witness_pairs(report: &StabilityReport) -> Vec<PermPair> {
    report
        .witnesses
        .iter()
        .map(|WitnessJson::PermPair { alpha, beta }| PermPair {
            alpha: Permutation::from_images(alpha.iter().map(|&v| v as u32).collect()),
            beta: Permutation::from_images(beta.iter().map(|&v| v as u32).collect()),
        })
        .collect()
}

/// Every canonical survivor of even order `2..=max` with its full report.
fn even_survivor_reports(max: usize) -> Vec<(ConnectionSet, StabilityReport)> {
    let mut out = Vec::new();
    for n in (2..=max).step_by(2) {
        for s in canonical_survivor_sets(n).expect("order within cap") {
            out.push((s, stability_verdict(s.graph())));
        }
    }
    out
}

fn random_colored_graph(rng: &mut ChaCha8Rng, n: usize, palette: u32) -> ColoredGraph {
    let mut g = ColoredGraph::new(n);
    for v in 0..n {
        g.set_color(v, rng.gen_range(0..palette));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images)
}

/// Criterion 1: the census over orders 1..=38 finds exactly the reference
/// number of nontrivially unstable isomorphism classes.
pub fn criterion_1(opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let census = run_census(1, 38, opts.jobs, opts.cache_dir.as_deref()).expect("range is valid");
    let total = census.summary.total_nontrivially_unstable;
    let classes: u64 = census.summary.orders.iter().map(|o| o.classes).sum();
    finish(
        1,
        "census-total",
        true,
        start,
        total == REFERENCE_TOTAL_THROUGH_38,
        format!(
            "orders 1..38: {total} nontrivially unstable classes \
             (reference {REFERENCE_TOTAL_THROUGH_38}) out of {classes} classes examined"
        ),
    )
}

/// Criterion 2: order 24 has exactly six no-Wilson-type classes, and they
/// are the six reference sets up to isomorphism.
pub fn criterion_2(opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let census = run_census(24, 24, opts.jobs, opts.cache_dir.as_deref()).expect("range is valid");
    let ours: Vec<_> = census.nontrivial_at(24).filter(|r| r.no_wilson_type()).collect();
    let mut our_certs: Vec<[u8; 16]> = ours.iter().map(|r| r.fingerprint).collect();
    let mut reference_certs: Vec<[u8; 16]> = order24_reference_sets()
        .iter()
        .map(|s| {
            crate::census::certificate_fingerprint(
                &crate::conditions::stability_verdict_with_certificate(s.graph()).1,
            )
        })
        .collect();
    our_certs.sort_unstable();
    reference_certs.sort_unstable();
    let sets: Vec<String> = ours.iter().map(|r| r.set.to_string()).collect();
    finish(
        2,
        "order-24-exceptions",
        true,
        start,
        ours.len() == 6 && our_certs == reference_certs,
        format!(
            "{} no-Wilson-type classes at order 24 (expected the 6 reference sets, \
             matched up to isomorphism: {}); found {}",
            ours.len(),
            our_certs == reference_certs,
            sample_list(&sets)
        ),
    )
}

/// Criterion 3 (opt-in, never required): the extended census matches the
/// reference no-Wilson-type counts at orders 40, 48, 50.
pub fn criterion_3(opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    if !opts.extended {
        return CriterionOutcome {
            id: 3,
            name: "extended-counts",
            required: false,
            status: Status::Skipped,
            detail: "extended profile off; rerun with --extended (hours, cache-resumable)".into(),
            seconds: start.elapsed().as_secs_f64(),
        };
    }
    let census = run_census(39, 50, opts.jobs, opts.cache_dir.as_deref()).expect("range is valid");
    let mut parts = Vec::new();
    let mut pass = true;
    for (n, expected) in EXTENDED_NO_WILSON {
        let ours = census.summary.order(n).map_or(0, |o| o.no_wilson_type);
        pass &= ours == expected;
        parts.push(format!("order {n}: {ours} no-Wilson (reference {expected})"));
    }
    let total = census.summary.total_nontrivially_unstable;
    pass &= total == EXTENDED_TOTAL_39_TO_50;
    parts.push(format!("total 39..50: {total} (reference {EXTENDED_TOTAL_39_TO_50})"));
    finish(3, "extended-counts", false, start, pass, parts.join("; "))
}

/// Criterion 4: no odd order up to 15 has a nontrivially unstable graph.
pub fn criterion_4(opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let census = run_census(1, 15, opts.jobs, opts.cache_dir.as_deref()).expect("range is valid");
    let violations: Vec<String> = census
        .summary
        .orders
        .iter()
        .filter(|o| o.order % 2 == 1 && o.nontrivially_unstable != 0)
        .map(|o| format!("order {}: {}", o.order, o.nontrivially_unstable))
        .collect();
    finish(
        4,
        "odd-order-theorem",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            "every odd order <= 15 has zero nontrivially unstable classes".into()
        } else {
            format!("odd orders with nontrivial instability: {}", sample_list(&violations))
        },
    )
}

/// Criterion 5: the closed-form order predicate agrees with census
/// emptiness for every order up to 22.
pub fn criterion_5(opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let census = run_census(1, 22, opts.jobs, opts.cache_dir.as_deref()).expect("range is valid");
    let mut violations = Vec::new();
    let mut nonempty = Vec::new();
    for o in &census.summary.orders {
        let empty = o.nontrivially_unstable == 0;
        if !empty {
            nonempty.push(o.order.to_string());
        }
        if orders_predicate(o.order) != empty {
            violations.push(format!("order {}", o.order));
        }
    }
    finish(
        5,
        "order-pattern",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            format!(
                "predicate agrees with emptiness on all 22 orders; nonempty orders: {}",
                nonempty.join(", ")
            )
        } else {
            format!("disagreements at {}", sample_list(&violations))
        },
    )
}

/// Criterion 6: at orders 10, 22, 26 the twice-a-prime classification
/// succeeds exactly on the nontrivially unstable classes, each with a C.4
/// hit and a verified witness pair.
pub fn criterion_6(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut parts = Vec::new();
    for n in [10usize, 22, 26] {
        let records = enumerate_order(n).expect("order within cap");
        let mut classified = 0u64;
        let mut unstable = 0u64;
        for r in &records {
            let classification = classify_2p(r.set);
            if r.is_nontrivially_unstable() {
                unstable += 1;
                match classification {
                    Ok(Some(c)) => {
                        classified += 1;
                        if !r.flags.c4 {
                            violations.push(format!("{} lacks a C.4 hit", r.set));
                        }
                        if !verify_perm_pair(r.set.graph(), &c.witness_pair()) {
                            violations.push(format!("{} witness fails", r.set));
                        }
                    }
                    Ok(None) => violations.push(format!("{} unstable but unclassified", r.set)),
                    Err(e) => violations.push(format!("{} classification refused ({e})", r.set)),
                }
            } else if matches!(classification, Ok(Some(_))) {
                violations.push(format!("{} classified but stable", r.set));
            }
        }
        parts.push(format!("order {n}: {unstable} unstable, {classified} classified"));
    }
    finish(
        6,
        "two-prime-classification",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            parts.join("; ")
        } else {
            format!("violations: {}", sample_list(&violations))
        },
    )
}

/// Criterion 7: the search engine's group orders equal brute-force counts
/// on every circulant and double cover with at most 12 vertices, plus 200
/// seeded random colored graphs on 10 vertices.
pub fn criterion_7(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    let mut check = |g: &ColoredGraph, label: String| {
        let engine = analyze(g).expect("within engine cap").group_order;
        let brute = brute_force_aut_order(g).expect("within brute cap");
        compared += 1;
        if engine != brute {
            mismatches.push(format!("{label}: engine {engine}, brute {brute}"));
        }
    };
    for n in 1..=12 {
        for s in all_symmetric_sets(n) {
            check(&s.graph().to_colored(), format!("{s}"));
        }
    }
    for n in 1..=6 {
        for s in all_symmetric_sets(n) {
            check(s.graph().double_cover().graph(), format!("cover of {s}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c7a_11e5);
    for i in 0..200 {
        let g = random_colored_graph(&mut rng, 10, 3);
        check(&g, format!("random graph {i}"));
    }
    finish(
        7,
        "engine-oracle",
        true,
        start,
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{compared} graphs compared, group orders all equal")
        } else {
            format!("mismatches: {}", sample_list(&mismatches))
        },
    )
}

fn fixture_check(label: &str, s: ConnectionSet, problems: &mut Vec<String>) -> String {
    let x = s.graph();
    let clock = Instant::now();
    let report = stability_verdict(x);
    let seconds = clock.elapsed().as_secs_f64();
    let mut need = |ok: bool, what: &str| {
        if !ok {
            problems.push(format!("{label}: {what}"));
        }
    };
    need(x.is_connected(), "not connected");
    need(!x.is_bipartite(), "bipartite");
    need(x.is_twin_free(), "has twins");
    need(report.verdict == Verdict::NontriviallyUnstable, "not nontrivially unstable");
    need(
        report
            .new_conditions
            .iter()
            .any(|c| matches!(c, NewConditionHit::IsoTranslate { .. })),
        "no iso-translate hit",
    );
    need(report.wilson_types.is_empty(), "has a Wilson type");
    need(!report.witnesses.is_empty(), "no witness emitted");
    need(
        witness_pairs(&report).iter().all(|p| verify_perm_pair(x, p)),
        "witness fails verification",
    );
    need(seconds < 60.0, "over the one-minute budget");
    format!("{label} analyzed in {seconds:.2}s")
}

/// Criterion 8: the two constructed example families at their smallest
/// parameters are nontrivially unstable with an iso-translate hit and no
/// Wilson type, each inside a one-minute budget.
pub fn criterion_8(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let a = fixture_check(
        "valency-8 family (n=48)",
        families::val8_set(4).expect("parameters are valid"),
        &mut problems,
    );
    let b = fixture_check(
        "twice-a-prime-squared family (n=50)",
        families::two_p_squared_set(5, 10, 2).expect("parameters are valid"),
        &mut problems,
    );
    finish(
        8,
        "example-fixtures",
        true,
        start,
        problems.is_empty(),
        if problems.is_empty() {
            format!("{a}; {b}")
        } else {
            format!("problems: {}", sample_list(&problems))
        },
    )
}

/// Criterion 9: over every canonical survivor of even order up to 24, a
/// condition hit implies group-order instability, and every emitted
/// witness verifies.
pub fn criterion_9(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut graphs = 0usize;
    let mut hits = 0usize;
    let mut violations = Vec::new();
    for (s, report) in even_survivor_reports(24) {
        graphs += 1;
        let any_hit = !report.wilson_types.is_empty() || !report.new_conditions.is_empty();
        if any_hit {
            hits += 1;
            if report.verdict == Verdict::Stable {
                violations.push(format!("{s} has a hit but is stable"));
            }
        }
        for pair in witness_pairs(&report) {
            if !verify_perm_pair(s.graph(), &pair) {
                violations.push(format!("{s} witness fails"));
            }
        }
    }
    finish(
        9,
        "soundness-sweep",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            format!("{graphs} even-order survivors swept, {hits} with hits, zero violations")
        } else {
            format!("violations: {}", sample_list(&violations))
        },
    )
}

/// Criterion 10: over the same sweep, a C.1/C.2/C.3 hit implies a
/// variant-2 two-subgroup hit, and at orders 2 mod 4 a variant-2 hit
/// implies a C.1 hit.
pub fn criterion_10(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut graphs = 0usize;
    let mut violations = Vec::new();
    let mut first_hit_sufficed = true;
    for (s, report) in even_survivor_reports(24) {
        graphs += 1;
        let c123 = report.wilson_types.iter().any(|w| {
            matches!(
                w,
                crate::conditions::WilsonHit::C1 { .. }
                    | crate::conditions::WilsonHit::C2 { .. }
                    | crate::conditions::WilsonHit::C3 { .. }
            )
        });
        let c1 = report
            .wilson_types
            .iter()
            .any(|w| matches!(w, crate::conditions::WilsonHit::C1 { .. }));
        let recorded_v2 = report
            .new_conditions
            .iter()
            .any(|c| matches!(c, NewConditionHit::GeneralizedHk { variant: 2, .. }));
        // The report keeps only the scan's first hit; fall back to the full
        // hit list before declaring a violation.
        let any_v2 = recorded_v2
            || crate::conditions::hk::general_hk_hits(s)
                .iter()
                .any(|h| h.variant == 2);
        if c123 {
            if !recorded_v2 {
                first_hit_sufficed = false;
            }
            if !any_v2 {
                violations.push(format!("{s}: C.1-C.3 without a variant-2 hit"));
            }
        }
        if s.order() % 4 == 2 && any_v2 && !c1 {
            violations.push(format!("{s}: variant-2 hit without C.1 at order 2 mod 4"));
        }
    }
    finish(
        10,
        "cross-implications",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            format!(
                "{graphs} survivors checked, zero violations{}",
                if first_hit_sufficed { " (first hits alone sufficed)" } else { "" }
            )
        } else {
            format!("violations: {}", sample_list(&violations))
        },
    )
}

/// Criterion 11: automorphisms survive connection-set scaling, cover
/// automorphisms preserve the walk-parity graph, and certificates are
/// invariant under 1000 random relabelings per test graph.
pub fn criterion_11(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut violations = Vec::new();

    let mut scaled_checks = 0usize;
    for n in 1..=16 {
        for s in all_symmetric_sets(n) {
            let generators = analyze(&s.graph().to_colored()).expect("within cap").generators;
            for m in units(n).iter() {
                let scaled = ConnectionSet::from_residue_set(s.members().scale(m))
                    .expect("a unit multiple of a symmetric set is symmetric")
                    .graph()
                    .to_colored();
                for g in &generators {
                    scaled_checks += 1;
                    if !scaled.is_automorphism(g) {
                        violations.push(format!("{s} generator breaks under scaling by {m}"));
                    }
                }
            }
        }
    }

    let mut parity_checks = 0usize;
    for n in (2..=16).step_by(2) {
        for s in all_symmetric_sets(n) {
            let x = s.graph();
            let cover_aut = analyze(x.double_cover().graph()).expect("within cap").generators;
            let parity = walk_parity_graph(x);
            for g in &cover_aut {
                parity_checks += 1;
                if !parity.graph().is_automorphism(g) {
                    violations.push(format!("{s} cover generator breaks the walk-parity graph"));
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cab5);
    let suite: Vec<(String, ColoredGraph)> = vec![
        ("10:1,2,8,9".into(), ConnectionSet::parse("10:1,2,8,9").unwrap().graph().to_colored()),
        (
            "cover of 8:1,2,6,7".into(),
            ConnectionSet::parse("8:1,2,6,7").unwrap().graph().double_cover().graph().clone(),
        ),
        ("random 12-vertex graph".into(), random_colored_graph(&mut rng, 12, 3)),
        (
            "walk-parity graph of 10:1,2,8,9".into(),
            walk_parity_graph(ConnectionSet::parse("10:1,2,8,9").unwrap().graph())
                .graph()
                .clone(),
        ),
    ];
    for (label, g) in &suite {
        let reference = analyze(g).expect("within cap").certificate;
        for _ in 0..1000 {
            let p = random_permutation(&mut rng, g.order());
            if analyze(&g.relabeled(&p)).expect("within cap").certificate != reference {
                violations.push(format!("{label}: certificate changed under relabeling"));
                break;
            }
        }
    }

    finish(
        11,
        "invariant-suites",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            format!(
                "{scaled_checks} scaled-set generator checks, {parity_checks} walk-parity \
                 checks, 4 graphs x 1000 relabelings: zero violations"
            )
        } else {
            format!("violations: {}", sample_list(&violations))
        },
    )
}

/// Criterion 12: complete graphs are stable, and disconnected, bipartite,
/// or twinned inputs of order above 1 are always trivially unstable.
pub fn criterion_12(_opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut violations = Vec::new();

    for n in 3..=10 {
        let s = ConnectionSet::new(n, 1..n).expect("complete set is symmetric");
        if stability_verdict(s.graph()).verdict != Verdict::Stable {
            violations.push(format!("K_{n} not stable"));
        }
    }

    let single = ConnectionSet::new(1, vec![]).expect("empty set").graph();
    if stability_verdict(single).verdict != Verdict::Stable {
        violations.push("one-vertex graph not stable".into());
    }

    let mut trivial_cases = 0usize;
    for n in 2..=12 {
        for s in all_symmetric_sets(n) {
            let x = s.graph();
            if !x.is_connected() || x.is_bipartite() || !x.is_twin_free() {
                trivial_cases += 1;
                if stability_verdict(x).verdict != Verdict::TriviallyUnstable {
                    violations.push(format!("{s} not reported trivially unstable"));
                }
            }
        }
    }

    finish(
        12,
        "stability-sanity",
        true,
        start,
        violations.is_empty(),
        if violations.is_empty() {
            format!(
                "complete graphs stable, {trivial_cases} degenerate inputs all \
                 trivially unstable"
            )
        } else {
            format!("violations: {}", sample_list(&violations))
        },
    )
}

/// Runs all twelve criteria in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionOutcome> {
    vec![
        criterion_1(opts),
        criterion_2(opts),
        criterion_3(opts),
        criterion_4(opts),
        criterion_5(opts),
        criterion_6(opts),
        criterion_7(opts),
        criterion_8(opts),
        criterion_9(opts),
        criterion_10(opts),
        criterion_11(opts),
        criterion_12(opts),
    ]
}

pub fn required_failures(outcomes: &[CriterionOutcome]) -> usize {
    outcomes.iter().filter(|o| !o.acceptable()).count()
}

/// One line per criterion plus a closing verdict line.
pub fn render(outcomes: &[CriterionOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&o.to_string());
        out.push('\n');
    }
    let failed = required_failures(outcomes);
    if failed == 0 {
        out.push_str("all required criteria pass\n");
    } else {
        out.push_str(&format!("{failed} required criteria FAILED\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_lines_and_rendering() {
        let pass = CriterionOutcome {
            id: 4,
            name: "odd-order-theorem",
            required: true,
            status: Status::Pass,
            detail: "zero everywhere".into(),
            seconds: 1.5,
        };
        let line = pass.to_string();
        assert!(line.starts_with("criterion  4 PASS"));
        assert!(line.contains("odd-order-theorem: zero everywhere"));
        assert!(pass.acceptable());

        let soft = CriterionOutcome {
            id: 3,
            name: "extended-counts",
            required: false,
            status: Status::Fail,
            detail: "off by one".into(),
            seconds: 0.0,
        };
        assert!(soft.to_string().contains("MISMATCH"));
        assert!(soft.acceptable());

        let hard = CriterionOutcome { required: true, ..soft.clone() };
        assert!(!hard.acceptable());
        let text = render(&[pass, hard]);
        assert!(text.contains("1 required criteria FAILED"));
    }

    #[test]
    fn extended_check_skips_without_the_flag() {
        let outcome = criterion_3(&VerifyOptions::default());
        assert_eq!(outcome.status, Status::Skipped);
        assert!(!outcome.required);
        assert!(outcome.acceptable());
        assert!(outcome.to_string().contains("SKIP"));
    }

    #[test]
    fn fixture_criterion_passes() {
        let outcome = criterion_8(&VerifyOptions::default());
        assert_eq!(outcome.status, Status::Pass, "{}", outcome.detail);
    }

    #[test]
    fn sanity_criterion_passes() {
        let outcome = criterion_12(&VerifyOptions::default());
        assert_eq!(outcome.status, Status::Pass, "{}", outcome.detail);
    }
}

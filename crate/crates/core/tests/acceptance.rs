//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use berge_turan::extremal::classify_partite;
use berge_turan::sdr::ShapeSummary;
use berge_turan::{
    binomial, brute_force_ex, build_complete, build_turan_partite, contains_berge_clique, is_berge_free,
    saturation_check, turan_count, verify_sdr_lemma, verify_witness, SearchBudget, SearchOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    check: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1 <= k <= N <= 40, r in {2, 3}: closed form equals constructed edge count.
fn formula_matches_construction() -> Result<String, String> {
    let mut cases = 0;
    for r in [2, 3] {
        for n in 1..=40 {
            for k in 1..=n {
                let formula = turan_count(n, k, r).map_err(|e| e.to_string())?;
                let (h, parts) = build_turan_partite(n, k, r).map_err(|e| e.to_string())?;
                ensure(formula == h.edge_count() as u128, || {
                    format!("t_{r}({n},{k}) = {formula} but T has {} edges", h.edge_count())
                })?;
                ensure(parts.is_balanced() && parts.part_count() == k, || format!("bad layout for ({n},{k})"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (N, k, r) cases agree"))
}

/// n = 13, N = 13..16: edge count, freeness, saturation, balanced 12-partite recognition.
fn theorem_desk_suite() -> Result<String, String> {
    let n = 13;
    let mut rows = Vec::new();
    for vertex_count in 13..=16 {
        let (t, _) = build_turan_partite(vertex_count, n - 1, 3).map_err(|e| e.to_string())?;
        let expected = turan_count(vertex_count, n - 1, 3).map_err(|e| e.to_string())?;
        ensure(t.edge_count() as u128 == expected, || {
            format!("N={vertex_count}: {} edges, closed form {expected}", t.edge_count())
        })?;
        if vertex_count == 13 {
            ensure(t.edge_count() == 275, || format!("T_3(13,12) has {} edges", t.edge_count()))?;
        }
        let witness = contains_berge_clique(&t, n).map_err(|e| e.to_string())?;
        ensure(witness.is_none(), || format!("N={vertex_count}: found {witness:?}"))?;
        let sat = saturation_check(&t, n).map_err(|e| e.to_string())?;
        let non_edges = binomial(vertex_count as u64, 3).unwrap() as usize - t.edge_count();
        ensure(sat.saturated && sat.creating.len() == non_edges, || {
            format!("N={vertex_count}: additions keeping freeness {:?}", sat.non_creating)
        })?;
        let parts = berge_turan::recognize_complete_partite(&t)
            .ok_or_else(|| format!("N={vertex_count}: {:?}", classify_partite(&t)))?;
        ensure(parts.part_count() == n - 1 && parts.is_balanced(), || {
            format!("N={vertex_count}: recognized sizes {:?}", parts.part_sizes())
        })?;
        rows.push(format!("N={vertex_count}:{}e/{non_edges}sat", t.edge_count()));
    }
    Ok(rows.join(" "))
}

fn lemma_line(s: &ShapeSummary, bound: usize) -> String {
    format!(
        "{} families, {} without SDR, max union {} (bound {bound}), {} over the bound, {}/{} equality families characterized",
        s.families_checked,
        s.no_sdr_families,
        s.max_union_without_sdr,
        s.bound_violations,
        s.equality_matching_characterization,
        s.equality_families
    )
}

/// m = 5, the ~1.05M families with each A_i chosen independently.
fn sdr_lemma_literal() -> Result<String, String> {
    let report = verify_sdr_lemma(5).map_err(|e| e.to_string())?;
    let literal = report.literal.as_ref().ok_or("literal shape not enumerated")?;
    ensure(literal.families_checked == 1 << 20, || format!("enumerated {}", literal.families_checked))?;
    let line = lemma_line(literal, report.bound);
    ensure(literal.max_union_without_sdr == 6 && literal.holds(), || {
        format!("{line}; first counterexample {:?}", literal.first_bound_violation)
    })?;
    Ok(line)
}

/// m = 5 restricted to families that are the links of an apex in a 3-graph.
fn sdr_lemma_edge_consistent() -> Result<String, String> {
    let report = verify_sdr_lemma(5).map_err(|e| e.to_string())?;
    let s = &report.edge_consistent;
    let line = lemma_line(s, report.bound);
    ensure(s.families_checked == 1024, || format!("enumerated {}", s.families_checked))?;
    ensure(s.max_union_without_sdr == 6 && s.holds() && s.equality_families == 5, || line.clone())?;
    Ok(line)
}

/// ex(5, K_5) = 9, search >= t_3(N, n-1), pruned equals unpruned at N = 5.
fn tiny_extremal_oracle() -> Result<String, String> {
    let budget = SearchBudget::default();
    let five = brute_force_ex(5, 5, 3, budget, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(five.max_edges == 9, || format!("ex(5, K_5) = {}", five.max_edges))?;

    let mut checked = 0;
    for vertex_count in 1..=6 {
        for order in 2..=vertex_count {
            let found = brute_force_ex(vertex_count, order, 3, budget, SearchOptions::default())
                .map_err(|e| e.to_string())?;
            let lower = turan_count(vertex_count, order - 1, 3).map_err(|e| e.to_string())?;
            ensure(found.max_edges as u128 >= lower, || {
                format!("ex({vertex_count}, K_{order}) = {} < t = {lower}", found.max_edges)
            })?;
            checked += 1;
        }
    }
    for order in 2..=5 {
        let pruned = brute_force_ex(5, order, 3, budget, SearchOptions::default()).map_err(|e| e.to_string())?;
        let plain = brute_force_ex(5, order, 3, budget, SearchOptions { prune: false, ..SearchOptions::default() })
            .map_err(|e| e.to_string())?;
        ensure(
            (pruned.max_edges, pruned.extremal_count) == (plain.max_edges, plain.extremal_count),
            || {
                format!(
                    "n={order}: pruned ({}, {}) vs unpruned ({}, {})",
                    pruned.max_edges, pruned.extremal_count, plain.max_edges, plain.extremal_count
                )
            },
        )?;
    }
    Ok(format!("ex(5,K_5)=9; {checked} lower-bound cases; pruned = unpruned for n = 2..5"))
}

/// 200 random 3-graphs, N <= 7, every n <= N: matching vs assignment brute force.
fn detection_oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut comparisons = 0;
    let mut positives = 0;
    for _ in 0..200 {
        let vertex_count = rng.gen_range(3..=7);
        let density = rng.gen_range(0.2..0.95);
        let h = common::random_hypergraph(&mut rng, vertex_count, 3, density);
        for order in 2..=vertex_count {
            let fast = contains_berge_clique(&h, order).map_err(|e| e.to_string())?;
            let slow = common::brute_force_contains_clique(&h, order);
            ensure(fast.is_some() == slow, || format!("n={order} disagree on {h:?}"))?;
            comparisons += 1;
            positives += usize::from(slow);
        }
    }
    Ok(format!("{comparisons} comparisons agree ({positives} contain a clique)"))
}

/// K_n^3 contains a Berge-K_n for 5 <= n <= 13 and K_4^3 does not.
fn complete_graph_containment() -> Result<String, String> {
    for n in 5..=13 {
        let k = build_complete(n, 3).map_err(|e| e.to_string())?;
        let w = contains_berge_clique(&k, n).map_err(|e| e.to_string())?;
        ensure(w.as_ref().is_some_and(|w| verify_witness(&k, w)), || format!("no verified clique in K_{n}^3"))?;
    }
    let k4 = build_complete(4, 3).map_err(|e| e.to_string())?;
    ensure(is_berge_free(&k4, 4).map_err(|e| e.to_string())?, || "K_4^3 contains a Berge-K_4".into())?;
    Ok("n = 5..13 contain, n = 4 free".into())
}

/// Witnesses verify; freeness is invariant under 20 random relabelings (N <= 8).
fn certificates_and_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut witnesses = 0;
    let mut relabelings = 0;
    for _ in 0..40 {
        let vertex_count = rng.gen_range(4..=8);
        let density = rng.gen_range(0.3..0.95);
        let h = common::random_hypergraph(&mut rng, vertex_count, 3, density);
        for order in 3..=vertex_count.min(6) {
            let w = contains_berge_clique(&h, order).map_err(|e| e.to_string())?;
            if let Some(w) = &w {
                ensure(verify_witness(&h, w), || format!("witness fails verification: {w:?}"))?;
                witnesses += 1;
            }
            for _ in 0..20 {
                let perm = common::random_permutation(&mut rng, vertex_count);
                let g = h.relabel(&perm).map_err(|e| e.to_string())?;
                let wg = contains_berge_clique(&g, order).map_err(|e| e.to_string())?;
                ensure(wg.is_some() == w.is_some(), || format!("relabeling {perm:?} changes n={order} on {h:?}"))?;
                if let Some(wg) = &wg {
                    ensure(verify_witness(&g, wg), || format!("witness fails verification: {wg:?}"))?;
                    witnesses += 1;
                }
                relabelings += 1;
            }
        }
    }
    Ok(format!("{witnesses} witnesses verified, {relabelings} relabelings invariant"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "1", title: "formula-construction agreement", limit: Duration::from_secs(10), check: formula_matches_construction },
        Criterion { id: "2", title: "desk suite n=13, N=13..16", limit: Duration::from_secs(300), check: theorem_desk_suite },
        Criterion { id: "3", title: "SDR union bound, m=5, all independent families", limit: Duration::from_secs(120), check: sdr_lemma_literal },
        Criterion { id: "3'", title: "SDR union bound, m=5, edge-consistent families", limit: Duration::from_secs(120), check: sdr_lemma_edge_consistent },
        Criterion { id: "4", title: "tiny extremal oracle", limit: Duration::from_secs(60), check: tiny_extremal_oracle },
        Criterion { id: "5", title: "detection oracle equivalence", limit: Duration::from_secs(120), check: detection_oracle_equivalence },
        Criterion { id: "6", title: "complete-graph containment", limit: Duration::from_secs(10), check: complete_graph_containment },
        Criterion { id: "7", title: "certificate soundness and relabeling invariance", limit: Duration::from_secs(120), check: certificates_and_invariance },
    ];

    let mut failures = 0;
    for c in &criteria {
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>().map(String::as_str).or(p.downcast_ref::<&str>().copied()))));
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("took {elapsed:.1?}, limit {:?}; {detail}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] criterion {} {} ({elapsed:.2?}): {detail}", c.id, c.title),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] criterion {} {} ({elapsed:.2?}): {detail}", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

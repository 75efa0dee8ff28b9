//! Command-line front end. Every subcommand prints either text or JSON and
//! exits with 0 (success / property holds), 1 (property fails), 2 (usage or
//! input error) or 3 (search budget exhausted).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::berge::{contains_berge_clique, BergeWitness};
use crate::constructions::{build_complete, build_expansion, build_turan_partite, turan_count};
use crate::error::{Error, Result};
use crate::extremal::{
    brute_force_ex, classify_partite, saturation_check, verify_theorem_desk_with, DeskOptions, PartiteRecognition,
    SearchBudget, SearchOptions,
};
use crate::format;
use crate::hypergraph::Hypergraph;
use crate::sdr::{find_sdr, verify_sdr_lemma, Element, SdrOutcome, SetFamily, ShapeSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "berge", version, about = "Turán numbers of complete Berge hypergraphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Worker threads for the parallel scans.
    #[arg(long, env = "BERGE_JOBS", global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a named hypergraph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Print t_r(N, k), the edge count of T_r(N, k).
    Count {
        #[arg(long = "N")]
        vertices: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Decide whether a hypergraph contains a Berge clique of the given order.
    CheckFree {
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "clique-n")]
        clique_n: usize,
    },
    /// Find an SDR of a set family, or a Hall violator.
    Sdr {
        #[arg(long)]
        file: PathBuf,
    },
    /// Exhaustively check the SDR union bound for families through a common apex.
    VerifyLemma {
        #[arg(long, default_value_t = 5)]
        m: usize,
        /// Family shape whose verdict sets the exit status.
        #[arg(long, value_enum, default_value_t = ShapeArg::Literal)]
        shape: ShapeArg,
    },
    /// Check that adding any missing edge creates a Berge clique.
    Saturate {
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "clique-n")]
        clique_n: usize,
    },
    /// Recover the partition of a complete partite hypergraph.
    Recognize {
        #[arg(long)]
        file: PathBuf,
    },
    /// Exhaustive search for ex(N, Berge-K_n) on tiny instances.
    Search {
        #[arg(long = "N")]
        vertices: usize,
        #[arg(long = "clique-n")]
        clique_n: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<f64>,
        #[arg(long)]
        fold_isomorphism: bool,
        /// Enumerate every edge subset without branch-and-bound.
        #[arg(long)]
        no_prune: bool,
    },
    /// Desk-scale check of T_3(N, n-1) for N = n..=max-N.
    Verify {
        #[arg(long = "clique-n", default_value_t = 13)]
        clique_n: usize,
        #[arg(long = "max-N", default_value_t = 16)]
        max_vertices: usize,
        /// Allow max-N above 2n - 2.
        #[arg(long)]
        beyond_regime: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// T_r(N, k), the balanced complete k-partite r-graph.
    Turan {
        #[arg(long = "N")]
        vertices: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Also write the partition as JSON to this file.
        #[arg(long)]
        parts_out: Option<PathBuf>,
    },
    /// K_N^(r).
    Complete {
        #[arg(long = "N")]
        vertices: usize,
        #[arg(long)]
        r: usize,
    },
    /// The expansion H_n^(r) of K_n.
    Expansion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Literal,
    EdgeConsistent,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out as &mut dyn Write };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, out)),
            Err(e) => Err(Error::invalid(format!("cannot start {jobs} workers: {e}"))),
        },
        None => dispatch(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NodeBudgetExceeded(_) | Error::TimeBudgetExceeded(_) => EXIT_BUDGET,
                Error::VerificationFailed { .. } => EXIT_FALSE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<i32> {
    let json = cli.format == OutputFormat::Json;
    match &cli.command {
        Command::Gen(gen) => {
            let h = match gen {
                GenCommand::Turan { vertices, k, r, parts_out } => {
                    let (h, parts) = build_turan_partite(*vertices, *k, *r)?;
                    if let Some(path) = parts_out {
                        fs::write(path, format::partition_to_json(&parts) + "\n")?;
                    }
                    h
                }
                GenCommand::Complete { vertices, r } => build_complete(*vertices, *r)?,
                GenCommand::Expansion { n, r } => build_expansion(*n, *r)?,
            };
            emit_hypergraph(out, &h, json)?;
            Ok(EXIT_OK)
        }
        Command::Count { vertices, k, r } => {
            let count = turan_count(*vertices, *k, *r)?;
            if json {
                // Serialized as a string only if it would not fit a JSON-safe integer.
                let value = u64::try_from(count).map(|c| json!(c)).unwrap_or_else(|_| json!(count.to_string()));
                writeln!(out, "{}", json!({"N": vertices, "k": k, "r": r, "count": value}))?;
            } else {
                writeln!(out, "{count}")?;
            }
            Ok(EXIT_OK)
        }
        Command::CheckFree { file, clique_n } => {
            let h = read_hypergraph(file)?;
            let witness = contains_berge_clique(&h, *clique_n)?;
            emit_freeness(out, witness.as_ref(), json)?;
            Ok(if witness.is_none() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Sdr { file } => {
            let family: SetFamily<Element> = serde_json::from_str(&fs::read_to_string(file)?)?;
            let family = SetFamily::new(family.sets)?;
            let outcome = find_sdr(&family);
            emit_sdr(out, &outcome, json)?;
            Ok(if outcome.is_sdr() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::VerifyLemma { m, shape } => {
            let report = verify_sdr_lemma(*m)?;
            let chosen = match shape {
                ShapeArg::Literal => report.literal.as_ref().ok_or_else(|| {
                    Error::invalid(format!("the literal family shape is only enumerated for m = 5, got {m}"))
                })?,
                ShapeArg::EdgeConsistent => &report.edge_consistent,
            };
            let holds = chosen.holds();
            if json {
                writeln!(out, "{}", json!({"report": report, "holds": holds}))?;
            } else {
                writeln!(out, "m = {}, bound C(m-1, 2) = {}", report.m, report.bound)?;
                for summary in report.literal.iter().chain([&report.edge_consistent]) {
                    write_shape_summary(out, summary)?;
                }
                writeln!(out, "{}", if holds { "holds" } else { "fails" })?;
            }
            Ok(if holds { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Saturate { file, clique_n } => {
            let h = read_hypergraph(file)?;
            let report = saturation_check(&h, *clique_n)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                if !report.base_free {
                    writeln!(out, "already contains a Berge-K_{clique_n}")?;
                }
                writeln!(out, "{}", if report.saturated { "saturated" } else { "not saturated" })?;
                writeln!(out, "non-edges {} creating {}", report.creating.len() + report.non_creating.len(), report.creating.len())?;
                for e in &report.non_creating {
                    writeln!(out, "keeps-free {}", join(e))?;
                }
            }
            Ok(if report.saturated { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Recognize { file } => {
            let h = read_hypergraph(file)?;
            let recognition = classify_partite(&h);
            if json {
                writeln!(out, "{}", serde_json::to_string(&recognition)?)?;
            } else {
                match &recognition {
                    PartiteRecognition::Recognized { parts } => {
                        let parts: Vec<String> = parts.parts.iter().map(|p| join(p)).collect();
                        writeln!(out, "parts {}", parts.join(" | "))?;
                    }
                    PartiteRecognition::NotTransitive { u, v, w } => writeln!(
                        out,
                        "not partite: {u} shares no edge with {v} or {w}, but {v} and {w} share one"
                    )?,
                    PartiteRecognition::TooFewParts { parts } => {
                        writeln!(out, "not partite: only {parts} part(s), fewer than r")?
                    }
                    PartiteRecognition::Incomplete { missing } => {
                        writeln!(out, "not complete: missing {}", join(missing))?
                    }
                }
            }
            Ok(if matches!(recognition, PartiteRecognition::Recognized { .. }) { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Search { vertices, clique_n, r, budget_nodes, budget_secs, fold_isomorphism, no_prune } => {
            let max_time = budget_secs
                .map(|s| Duration::try_from_secs_f64(s).map_err(|e| Error::invalid(format!("--budget-secs: {e}"))))
                .transpose()?;
            let budget = SearchBudget { max_nodes: *budget_nodes, max_time };
            let options =
                SearchOptions { prune: !no_prune, fold_isomorphism: *fold_isomorphism, ..SearchOptions::default() };
            let found = brute_force_ex(*vertices, *clique_n, *r, budget, options)?;
            let lower = if *clique_n >= 2 && *vertices >= 1 { Some(turan_count(*vertices, clique_n - 1, *r)?) } else { None };
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "N": found.vertex_count,
                        "n": found.clique_order,
                        "r": found.uniformity,
                        "max_edges": found.max_edges,
                        "extremal_count": found.extremal_count,
                        "up_to_isomorphism": found.counted_up_to_isomorphism,
                        "turan_lower_bound": lower.map(|l| l as u64),
                        "nodes": found.nodes,
                        "samples": found.samples.iter().map(|h| h.edges()).collect::<Vec<_>>(),
                    })
                )?;
            } else {
                writeln!(out, "N {} n {} r {}", found.vertex_count, found.clique_order, found.uniformity)?;
                writeln!(out, "max_edges {}", found.max_edges)?;
                let kind = if found.counted_up_to_isomorphism { "up to isomorphism" } else { "labeled" };
                writeln!(out, "extremal_count {} ({kind})", found.extremal_count)?;
                if let Some(l) = lower {
                    writeln!(out, "turan_lower_bound {l}")?;
                }
                writeln!(out, "nodes {}", found.nodes)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { clique_n, max_vertices, beyond_regime } => {
            let options = DeskOptions { beyond_regime: *beyond_regime };
            let mut write_err: Option<std::io::Error> = None;
            let outcome = verify_theorem_desk_with(*clique_n, *max_vertices, options, |row| {
                let line = if json {
                    serde_json::to_string(row).expect("plain data serializes")
                } else {
                    format!(
                        "n {} N {} edges {} expected {} free {} saturated {} partite {}",
                        row.n, row.vertex_count, row.edges, row.expected_edges, row.free, row.saturated, row.partite
                    )
                };
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    write_err.get_or_insert(e);
                }
            });
            if let Some(e) = write_err {
                return Err(e.into());
            }
            let report = outcome?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"passed": report.passed, "instances": report.instances.len(), "scope": report.scope})
                )?;
            } else {
                writeln!(out, "{} ({} instances)", if report.passed { "PASS" } else { "FAIL" }, report.instances.len())?;
                writeln!(out, "scope: {}", report.scope)?;
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn read_hypergraph(path: &PathBuf) -> Result<Hypergraph> {
    format::parse_any(&fs::read_to_string(path)?)
}

fn emit_hypergraph(out: &mut dyn Write, h: &Hypergraph, json: bool) -> Result<()> {
    if json {
        writeln!(out, "{}", format::to_json(h))?;
    } else {
        write!(out, "{}", format::to_text(h))?;
    }
    Ok(())
}

fn emit_freeness(out: &mut dyn Write, witness: Option<&BergeWitness>, json: bool) -> Result<()> {
    if json {
        writeln!(out, "{}", json!({"free": witness.is_none(), "witness": witness}))?;
        return Ok(());
    }
    match witness {
        None => writeln!(out, "free")?,
        Some(w) => {
            writeln!(out, "contains")?;
            writeln!(out, "core {}", join(&w.core))?;
            for a in &w.assignment {
                writeln!(out, "pair {} {} edge {}", a.pair[0], a.pair[1], join(&a.edge))?;
            }
        }
    }
    Ok(())
}

fn emit_sdr(out: &mut dyn Write, outcome: &SdrOutcome<Element>, json: bool) -> Result<()> {
    match (outcome, json) {
        (SdrOutcome::Representatives(reps), true) => writeln!(out, "{}", json!({ "sdr": reps }))?,
        (SdrOutcome::Violator(v), true) => writeln!(out, "{}", json!({ "violator": v }))?,
        (SdrOutcome::Representatives(reps), false) => {
            let reps: Vec<String> = reps.iter().map(element_text).collect();
            writeln!(out, "sdr {}", reps.join(" "))?;
        }
        (SdrOutcome::Violator(v), false) => {
            writeln!(out, "no-sdr indices {} union_size {}", join(&v.indices), v.union_size)?;
        }
    }
    Ok(())
}

fn write_shape_summary(out: &mut dyn Write, s: &ShapeSummary) -> Result<()> {
    let name = match s.shape {
        crate::sdr::FamilyShape::Literal => "literal",
        crate::sdr::FamilyShape::EdgeConsistent => "edge-consistent",
    };
    writeln!(
        out,
        "{name}: families {} no_sdr {} max_union {} bound_violations {} equality {} characterized {}/{} -> {}",
        s.families_checked,
        s.no_sdr_families,
        s.max_union_without_sdr,
        s.bound_violations,
        s.equality_families,
        s.equality_matching_characterization,
        s.characterized_families,
        if s.holds() { "holds" } else { "fails" }
    )?;
    if let Some(f) = &s.first_bound_violation {
        writeln!(out, "{name}: first bound violation {}", serde_json::to_string(f)?)?;
    }
    if let Some(f) = &s.first_characterization_mismatch {
        writeln!(out, "{name}: first characterization mismatch {}", serde_json::to_string(f)?)?;
    }
    Ok(())
}

fn element_text(e: &Element) -> String {
    match e {
        Element::Int(i) => i.to_string(),
        Element::Str(s) => s.clone(),
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

//! The `gbw` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use gbw_core::braid::BraidWord;
use gbw_core::classify::{betti_cross_check, classify, ClassificationResult, Verdict};
use gbw_core::embed::{self, build_embedding_with, gbg_chain_target, strand_bound, EmbeddingReport, PsiKind};
use gbw_core::hom::{self, check_relations, conclusion_check, exponent_profile, HomCandidate, Relation, SweepTables};
use gbw_core::homology::{homology_from_forms, prepare, smith_normal_form, HomologySummary, SmithForm};
use gbw_core::morse::analyze;
use gbw_core::raag::RaagWord;
use gbw_core::{CubicalComplex, Graph};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::io::{self, GraphFile};
use crate::report::{InputDigest, RunReport};

#[derive(Parser, Debug)]
#[command(name = "gbw", version, about = "Graph braid groups: configuration spaces, homology, Morse matchings and word problems")]
pub struct Cli {
    /// Print the full JSON run report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph JSON file: {"vertices": n, "edges": [[u, v], ...]}
    #[arg(long)]
    pub graph: PathBuf,
    /// Number of points n
    #[arg(long)]
    pub strands: usize,
    /// Subdivide edges until the graph is sufficiently subdivided for n
    #[arg(long)]
    pub auto_subdivide: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether B_n(G) is a classical braid group.
    ///
    /// When several cases apply the smallest case number is reported: an
    /// interval with n = 1 is case 1 and a circle with n = 1 is case 3.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// Compare the verdict with H_1 of the configuration space
        #[arg(long)]
        cross_check: bool,
    },
    /// Integer homology of UD^n(G)
    Betti {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Cell census of UD^n(G)
    Complex {
        #[command(flatten)]
        input: GraphInput,
        /// Include every cell and boundary matrix
        #[arg(long)]
        dump_boundary: bool,
    },
    /// Discrete Morse matching and critical cells
    Morse {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Write a sufficient subdivision of a graph
    Subdivide {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        strands: usize,
        /// Output file; the graph JSON goes to stdout otherwise
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Embed the right-angled Artin group of a graph into a pure braid group
    EmbedRaag {
        #[arg(long)]
        graph: PathBuf,
        /// Check every pair of images for the expected (non-)commutation
        #[arg(long)]
        verify: bool,
        /// Use s_i s_(i+1) in place of s_i^2 (not pure, not covered by the bound)
        #[arg(long)]
        shifted: bool,
    },
    /// Braid group target of the chain B_n(G) -> A(op(L(G))) -> P_l
    EmbedGbg {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        strands: usize,
    },
    /// Braid word problem: Garside normal form
    BraidWp {
        #[arg(long)]
        strands: usize,
        /// Tokens s<i>, s<i>^-1 or s<i>^<e>, 1 <= i < n
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        equal_to: Option<String>,
    },
    /// Right-angled Artin group word problem and word structure
    RaagWp {
        /// Defining graph; vertex k is generator g<k>
        #[arg(long)]
        graph: PathBuf,
        /// Tokens g<k>, g<k>^-1 or g<k>^<e>
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        equal_to: Option<String>,
    },
    /// Check a candidate homomorphism B_n -> A(Γ), or sweep all short ones
    CheckHom {
        /// Defining graph of A(Γ); in sweep mode, defaults to every graph
        /// with at most --max-vertices vertices
        #[arg(long)]
        gamma: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        strands: usize,
        /// Images of s1 .. s(n-1), one RAAG word per line
        #[arg(long, conflicts_with = "sweep")]
        images: Option<PathBuf>,
        #[arg(long)]
        sweep: bool,
        /// Longest image considered by the sweep
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        /// Where counterexamples are written, if any are found
        #[arg(long, default_value = "gbw-counterexamples.json")]
        counterexamples: PathBuf,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// The computation could not be carried out or a check failed; exit code 1.
    Domain(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(e.to_string())
    }
}

struct Outcome {
    results: Value,
    text: String,
    /// A check ran to completion and failed.
    failed: bool,
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    configure_threads();
    let started = Instant::now();
    let mut digest = InputDigest::new();
    let arguments: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    for a in &arguments {
        digest.add(a.as_bytes());
    }
    match execute(&cli.command, &mut digest) {
        Ok(outcome) => {
            if cli.json {
                let report = RunReport {
                    command: command_name(&cli.command).to_owned(),
                    arguments,
                    inputs_digest: digest.finish(),
                    results: outcome.results,
                    wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                let _ = write!(out, "{}", outcome.text);
            }
            i32::from(outcome.failed)
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("GBW_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Betti { .. } => "betti",
        Command::Complex { .. } => "complex",
        Command::Morse { .. } => "morse",
        Command::Subdivide { .. } => "subdivide",
        Command::EmbedRaag { .. } => "embed-raag",
        Command::EmbedGbg { .. } => "embed-gbg",
        Command::BraidWp { .. } => "braid-wp",
        Command::RaagWp { .. } => "raag-wp",
        Command::CheckHom { .. } => "check-hom",
    }
}

fn execute(command: &Command, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    match command {
        Command::Classify { input, cross_check } => cmd_classify(input, *cross_check, digest),
        Command::Betti { input } => cmd_betti(input, digest),
        Command::Complex { input, dump_boundary } => cmd_complex(input, *dump_boundary, digest),
        Command::Morse { input } => cmd_morse(input, digest),
        Command::Subdivide { graph, strands, output } => cmd_subdivide(graph, *strands, output.as_deref(), digest),
        Command::EmbedRaag { graph, verify, shifted } => cmd_embed_raag(graph, *verify, *shifted, digest),
        Command::EmbedGbg { graph, strands } => cmd_embed_gbg(graph, *strands, digest),
        Command::BraidWp { strands, word, equal_to } => cmd_braid_wp(*strands, word, equal_to.as_deref()),
        Command::RaagWp { graph, word, equal_to } => cmd_raag_wp(graph, word, equal_to.as_deref(), digest),
        Command::CheckHom { gamma, strands, images, sweep, max_len, max_vertices, counterexamples } => {
            if *sweep {
                cmd_sweep(gamma.as_deref(), *strands, *max_len, *max_vertices, counterexamples, digest)
            } else {
                let gamma = gamma.as_deref().ok_or_else(|| CliError::Usage("--gamma is required with --images".into()))?;
                let images = images.as_deref().ok_or_else(|| CliError::Usage("give --images FILE or --sweep".into()))?;
                cmd_check_hom(gamma, *strands, images, counterexamples, digest)
            }
        }
    }
}

fn load_graph(path: &Path, digest: &mut InputDigest) -> Result<Graph, CliError> {
    let (g, text) = io::read_graph(path)?;
    digest.add(text.as_bytes());
    Ok(g)
}

fn big(v: &BigInt) -> Value {
    v.to_i64().map_or_else(|| Value::String(v.to_string()), Value::from)
}

fn homology_json(h: &HomologySummary) -> Value {
    json!({ "dimension": h.dimension, "betti": h.betti, "torsion": h.torsion.iter().map(big).collect::<Vec<_>>() })
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::IsBraidGroup { n_prime, case } => json!({ "braid_group": true, "n_prime": n_prime, "case": case }),
        Verdict::NotBraidGroup { reason } => json!({ "braid_group": false, "reason": reason }),
    }
}

fn verdict_text(n: usize, r: &ClassificationResult) -> String {
    match &r.verdict {
        Verdict::IsBraidGroup { n_prime, case } => format!("B_{n}(G) is the braid group B_{n_prime} (case {case})\n"),
        Verdict::NotBraidGroup { reason } => format!("B_{n}(G) is not a classical braid group: {reason}\n"),
    }
}

/// Smith forms of all boundary maps, computed in parallel.
fn parallel_homology(c: &CubicalComplex) -> Vec<HomologySummary> {
    let forms: Vec<Option<SmithForm>> =
        (0..=c.dimension() + 1).into_par_iter().map(|d| c.boundary_ref(d).map(smith_normal_form)).collect();
    homology_from_forms(c, &forms)
}

fn cmd_classify(input: &GraphInput, cross_check: bool, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let g = load_graph(&input.graph, digest)?;
    let n = input.strands;
    let prepared = prepare(&g, n, input.auto_subdivide)?;
    let result = if cross_check { betti_cross_check(&prepared, n)? } else { classify(&prepared, n)? };
    let mut results = json!({
        "strands": n,
        "subdivided": prepared != g,
        "verdict": verdict_json(&result.verdict),
    });
    let mut text = verdict_text(n, &result);
    if let Some(h) = &result.evidence {
        results["homology"] = homology_json(h);
        text.push_str(&format!("cross-check: b_1 = {}, torsion {:?}, consistent\n", h.betti, torsion_strings(h)));
    }
    Ok(Outcome { results, text, failed: false })
}

fn torsion_strings(h: &HomologySummary) -> Vec<String> {
    h.torsion.iter().map(ToString::to_string).collect()
}

fn complex_for(input: &GraphInput, digest: &mut InputDigest) -> Result<(Graph, Graph, CubicalComplex), CliError> {
    let g = load_graph(&input.graph, digest)?;
    if input.strands == 0 {
        return Err(CliError::Usage("--strands must be at least 1".into()));
    }
    let prepared = prepare(&g, input.strands, input.auto_subdivide)?;
    let c = CubicalComplex::build(&prepared, input.strands)?;
    Ok((g, prepared, c))
}

fn cmd_betti(input: &GraphInput, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let (g, prepared, c) = complex_for(input, digest)?;
    let h = parallel_homology(&c);
    let results = json!({
        "strands": input.strands,
        "subdivided": prepared != g,
        "vertices": prepared.vertex_count(),
        "counts": c.counts(),
        "euler_characteristic": c.euler_characteristic(),
        "betti": h.iter().map(|x| x.betti).collect::<Vec<_>>(),
        "torsion": h.iter().map(|x| x.torsion.iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for x in &h {
        text.push_str(&format!("H_{} = Z^{}", x.dimension, x.betti));
        for t in &x.torsion {
            text.push_str(&format!(" + Z/{t}"));
        }
        text.push('\n');
    }
    Ok(Outcome { results, text, failed: false })
}

fn cmd_complex(input: &GraphInput, dump: bool, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let (g, prepared, c) = complex_for(input, digest)?;
    let mut results = json!({
        "strands": input.strands,
        "subdivided": prepared != g,
        "vertices": prepared.vertex_count(),
        "dimension": c.dimension(),
        "counts": c.counts(),
        "euler_characteristic": c.euler_characteristic(),
        "components": c.connected_components(),
    });
    let mut text = format!(
        "cells by dimension: {:?}\nEuler characteristic: {}\ncomponents: {}\n",
        c.counts(),
        c.euler_characteristic(),
        c.connected_components()
    );
    if dump {
        results["graph"] = serde_json::to_value(GraphFile::from_graph(&prepared)).expect("serializable");
        let cells: Vec<Value> = (0..=c.dimension())
            .map(|d| {
                c.cells(d)
                    .iter()
                    .map(|cell| {
                        let edges: Vec<[usize; 2]> = cell.edges.iter().map(|&e| prepared.edge(e)).map(|(u, v)| [u, v]).collect();
                        json!({ "vertices": cell.vertices, "edges": edges })
                    })
                    .collect()
            })
            .collect();
        let boundary: Vec<Value> = (1..=c.dimension())
            .map(|d| {
                let m = c.boundary(d);
                let entries: Vec<Value> = m.iter().map(|(r, col, v)| json!([r, col, big(v)])).collect();
                json!({ "dimension": d, "rows": m.rows(), "cols": m.cols(), "entries": entries })
            })
            .collect();
        results["cells"] = Value::from(cells);
        results["boundary"] = Value::from(boundary);
        text.push_str(&serde_json::to_string_pretty(&json!({ "cells": results["cells"], "boundary": results["boundary"] })).expect("serializable"));
        text.push('\n');
    }
    Ok(Outcome { results, text, failed: false })
}

fn cmd_morse(input: &GraphInput, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let g = load_graph(&input.graph, digest)?;
    let m = analyze(&g, input.strands, input.auto_subdivide)?;
    let formula = gbw_core::morse::generator_count_for_tree(m.tree(), input.strands);
    let tree = m.tree();
    let deleted: Vec<[usize; 2]> = tree.deleted_edges().iter().map(|&e| tree.graph().edge(e)).map(|(u, v)| [u, v]).collect();
    let results = json!({
        "strands": input.strands,
        "critical": m.critical_counts(),
        "formula": formula.to_u64().map_or_else(|| Value::String(formula.to_string()), Value::from),
        "valid": true,
        "tree": {
            "vertices": tree.graph().vertex_count(),
            "root": tree.root(),
            "walk": tree.by_order(),
            "deleted_edges": deleted,
        },
    });
    let text = format!(
        "critical cells by dimension: {:?}\ngenerator formula: {formula}\nmatching valid\n",
        m.critical_counts()
    );
    Ok(Outcome { results, text, failed: false })
}

fn cmd_subdivide(graph: &Path, strands: usize, output: Option<&Path>, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let g = load_graph(graph, digest)?;
    let report = g.sufficiency_report(strands)?;
    let sub = g.sufficiently_subdivide(strands)?;
    let file = GraphFile::from_graph(&sub);
    let results = json!({
        "strands": strands,
        "violations": report.violations.len(),
        "added_vertices": sub.vertex_count() - g.vertex_count(),
        "graph": file,
    });
    let text = match output {
        Some(path) => {
            io::write_graph(path, &sub)?;
            format!("{} violations; wrote {} vertices to {}\n", report.violations.len(), sub.vertex_count(), path.display())
        }
        None => format!("{}\n", io::graph_to_json(&sub)),
    };
    Ok(Outcome { results, text, failed: false })
}

fn embedding_report_json(r: &EmbeddingReport) -> Value {
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|p| json!({ "i": p.i, "j": p.j, "should_commute": p.should_commute, "commutes": p.commutes, "passed": p.passed() }))
        .collect();
    json!({ "passed": r.passed(), "pure": r.pure, "pairs": pairs })
}

fn cmd_embed_raag(graph: &Path, verify: bool, shifted: bool, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let gamma = load_graph(graph, digest)?;
    let kind = if shifted { PsiKind::Shifted } else { PsiKind::Square };
    let m = build_embedding_with(&gamma, kind);
    let mut results = Map::new();
    let mut text = String::new();
    for (i, w) in m.images().iter().enumerate() {
        results.insert(format!("g{i}"), Value::String(w.to_string()));
        text.push_str(&format!("g{i} -> {w}\n"));
    }
    results.insert("strands".into(), Value::from(m.strands()));
    results.insert("bound".into(), Value::from(strand_bound(&gamma)));
    let allocation: Vec<Value> =
        m.allocation().iter().map(|a| json!({ "u": a.u, "v": a.v, "psi": [a.u_index, a.v_index] })).collect();
    results.insert("allocation".into(), Value::from(allocation));
    text.push_str(&format!("strands: {} (bound {})\n", m.strands(), strand_bound(&gamma)));
    let mut failed = false;
    if verify {
        let v = gamma.vertex_count();
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
        let checks = pairs.par_iter().map(|&(i, j)| embed::check_pair(&m, i, j)).collect();
        let report = EmbeddingReport {
            strands: m.strands(),
            bound: strand_bound(&gamma),
            pure: m.images().iter().map(BraidWord::is_pure).collect(),
            pairs: checks,
        };
        // The shifted images are not pure by design; only the pair pattern counts.
        failed = if shifted { !report.pairs.iter().all(|p| p.passed()) } else { !report.passed() };
        for p in &report.pairs {
            let relation = if p.should_commute { "commute" } else { "do not commute" };
            let status = if p.passed() { "ok" } else { "FAILED" };
            text.push_str(&format!("g{} g{}: {relation} ... {status}\n", p.i, p.j));
        }
        text.push_str(if failed { "verification failed\n" } else { "verification passed\n" });
        results.insert("verification".into(), embedding_report_json(&report));
    }
    Ok(Outcome { results: Value::Object(results), text, failed })
}

fn cmd_embed_gbg(graph: &Path, strands: usize, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let g = load_graph(graph, digest)?;
    let t = gbg_chain_target(&g, strands);
    let results = json!({
        "strands": t.strands,
        "gamma": GraphFile::from_graph(&t.gamma),
        "braid_strands": t.braid_strands,
    });
    let text = format!(
        "Γ = op(L(G)) has {} vertices and {} edges\nB_{}(G) embeds in P_{}\n",
        t.gamma.vertex_count(),
        t.gamma.edge_count(),
        strands,
        t.braid_strands
    );
    Ok(Outcome { results, text, failed: false })
}

fn cmd_braid_wp(strands: usize, word: &str, equal_to: Option<&str>) -> Result<Outcome, CliError> {
    if strands == 0 {
        return Err(CliError::Usage("--strands must be at least 1".into()));
    }
    let w = BraidWord::parse(word, strands)?;
    let nf = w.normal_form();
    let perm: Vec<usize> = w.permutation_image().images().iter().map(|p| p + 1).collect();
    let mut results = json!({
        "strands": strands,
        "word": w.to_string(),
        "normal_form": nf.to_string(),
        "delta_power": nf.delta_power(),
        "factors": nf.factors().iter().map(|f| f.images().iter().map(|p| p + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "identity": nf.is_identity(),
        "pure": w.is_pure(),
        "permutation": perm,
    });
    let mut text = if nf.is_identity() { "identity\n".to_owned() } else { format!("{nf}\n") };
    text.push_str(if w.is_pure() { "pure\n" } else { "not pure\n" });
    if let Some(other) = equal_to {
        let v = BraidWord::parse(other, strands)?;
        let equal = v.normal_form() == nf;
        results["equal"] = Value::Bool(equal);
        text.push_str(if equal { "equal\n" } else { "not equal\n" });
    }
    Ok(Outcome { results, text, failed: false })
}

fn cmd_raag_wp(graph: &Path, word: &str, equal_to: Option<&str>, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let gamma = load_graph(graph, digest)?;
    let w = RaagWord::parse(gamma.clone(), word)?;
    let nf = w.normal_form();
    let (p, core) = w.cyclic_reduce();
    let factors = core.pure_factors()?;
    let (h, h_hat) = core.split_h_hat()?;
    let sums: Vec<i64> = (0..gamma.vertex_count()).map(|k| w.exponent_sum(k)).collect();
    let mut results = json!({
        "word": w.to_string(),
        "normal_form": nf.to_string(),
        "identity": nf.is_empty(),
        "length": nf.len(),
        "exponent_sums": sums,
        "support": w.support(),
        "link": w.link(),
        "conjugator": p.to_string(),
        "core": core.to_string(),
        "pure_factors": factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "h": h.to_string(),
        "h_hat": h_hat.to_string(),
    });
    let mut text = if nf.is_empty() { "identity\n".to_owned() } else { format!("{nf}\n") };
    text.push_str(&format!("cyclic reduction: ({p}) ({core}) ({p})^-1\n"));
    if let Some(other) = equal_to {
        let v = RaagWord::parse(gamma, other)?;
        let equal = v.equals(&w);
        results["equal"] = Value::Bool(equal);
        text.push_str(if equal { "equal\n" } else { "not equal\n" });
    }
    Ok(Outcome { results, text, failed: false })
}

fn relation_text(r: &Relation) -> String {
    match r {
        Relation::Braid { i } => format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
        Relation::Commute { i, j } => format!("s{i} s{j} = s{j} s{i}"),
    }
}

fn candidate_json(h: &HomCandidate) -> Value {
    json!({
        "strands": h.strands(),
        "gamma": GraphFile::from_graph(h.gamma()),
        "images": h.images().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn write_counterexamples(path: &Path, found: &[HomCandidate]) -> Result<(), CliError> {
    let body = serde_json::to_string_pretty(&found.iter().map(candidate_json).collect::<Vec<_>>()).expect("serializable");
    std::fs::write(path, body + "\n").map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

fn cmd_check_hom(gamma: &Path, strands: usize, images: &Path, cex: &Path, digest: &mut InputDigest) -> Result<Outcome, CliError> {
    let g = load_graph(gamma, digest)?;
    let text_in = io::read_text(images)?;
    digest.add(text_in.as_bytes());
    let words = io::word_lines(&text_in)
        .into_iter()
        .map(|l| RaagWord::parse(g.clone(), l))
        .collect::<Result<Vec<_>, _>>()?;
    let h = HomCandidate::new(strands, g, words)?;
    let rel = check_relations(&h);
    let profile = exponent_profile(&h);
    let mut results = json!({
        "strands": strands,
        "relations_hold": rel.holds,
        "first_failure": rel.first_failure.as_ref().map(relation_text),
        "exponent_profile": profile.rows,
        "columns_equal": profile.columns_equal,
    });
    let mut text = match &rel.first_failure {
        None => "all braid relations hold: this is a homomorphism\n".to_owned(),
        Some(r) => format!("not a homomorphism: {} fails\n", relation_text(r)),
    };
    text.push_str(&format!("exponent-sum columns equal: {}\n", profile.columns_equal));
    let mut failed = false;
    if strands > 4 {
        let c = conclusion_check(&h)?;
        results["conclusion"] = json!({
            "images_equal": c.images_equal,
            "supports_equal": c.supports_equal,
            "h_parts_equal": c.h_parts_equal,
            "h_hat_supports_equal": c.h_hat_supports_equal,
            "image_cyclic": c.relations.holds && c.images_equal,
            "counterexample": c.is_counterexample(),
        });
        if c.relations.holds {
            text.push_str(&format!("all images equal: {} (image generated by one element)\n", c.images_equal));
        }
        if c.is_counterexample() {
            write_counterexamples(cex, std::slice::from_ref(&h))?;
            text.push_str(&format!("COUNTEREXAMPLE written to {}\n", cex.display()));
            failed = true;
        }
    }
    Ok(Outcome { results, text, failed })
}

fn cmd_sweep(
    gamma: Option<&Path>,
    strands: usize,
    max_len: usize,
    max_vertices: usize,
    cex: &Path,
    digest: &mut InputDigest,
) -> Result<Outcome, CliError> {
    if strands < 2 {
        return Err(CliError::Usage("--strands must be at least 2".into()));
    }
    let graphs: Vec<Graph> = match gamma {
        Some(path) => vec![load_graph(path, digest)?],
        None => (1..=max_vertices).flat_map(all_graphs).collect(),
    };
    let mut total = hom::SweepReport::default();
    for g in &graphs {
        let tables = SweepTables::new(g, max_len);
        let parts: Vec<hom::SweepReport> =
            (0..tables.elements().len()).into_par_iter().map(|first| tables.run_from(first, strands)).collect();
        for p in parts {
            total.merge(p);
        }
    }
    let failed = !total.counterexamples.is_empty();
    if failed {
        write_counterexamples(cex, &total.counterexamples)?;
    }
    let results = json!({
        "strands": strands,
        "max_len": max_len,
        "graphs": graphs.len(),
        "candidates": total.candidates,
        "relation_passing": total.relation_passing,
        "counterexamples": total.counterexamples.len(),
    });
    let mut text = format!(
        "{} graphs, {} candidate tuples, {} satisfy the braid relations, {} counterexamples\n",
        graphs.len(),
        total.candidates,
        total.relation_passing,
        total.counterexamples.len()
    );
    if failed {
        text.push_str(&format!("counterexamples written to {}\n", cex.display()));
    }
    Ok(Outcome { results, text, failed })
}

/// Every simple graph on `v` labeled vertices.
pub fn all_graphs(v: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(v, &edges).expect("simple by construction")
        })
        .collect()
}

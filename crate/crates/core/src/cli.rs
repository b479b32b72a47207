//! Command-line front end. [`run`] holds everything; the `snapcut` binary
//! only forwards its arguments and exit code.
//!
//! Exit codes: 0 for YES (or a completed computation), 1 for NO, 2 for
//! malformed input, 3 when a budget or enumeration limit is hit.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cuts::{self, CutOptions};
use crate::disjoint_paths::{self, tuple_bound};
use crate::error::{Error, Result};
use crate::gadgets::{self, Gadget};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::io::{self, DotOptions};
use crate::walk::TemporalWalk;
use crate::{fixtures, injective_flow, mengerian, oracles};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "snapcut", version, about = "Snapshot connectivity of temporal graphs")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on enumerated subsets, product tuples or search nodes.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Endpoints {
    /// A file (edge list or JSON document) or a bundled name: fig1a, fig1b, fig7, M1..M5.
    #[arg(long)]
    graph: String,
    #[arg(long, default_value = "s")]
    s: String,
    #[arg(long, default_value = "z")]
    z: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Are there k pairwise snapshot-disjoint temporal s-z paths?
    Paths {
        #[command(flatten)]
        at: Endpoints,
        #[arg(long)]
        k: usize,
    },
    /// Is there a snapshot cut of at most h timesteps (or the minimum with --min)?
    Cut {
        #[command(flatten)]
        at: Endpoints,
        #[arg(long, conflicts_with = "min", required_unless_present = "min")]
        h: Option<usize>,
        #[arg(long)]
        min: bool,
    },
    /// Is there a multiedge cut of at most h multiedges (or the minimum with --min)?
    Mcut {
        #[command(flatten)]
        at: Endpoints,
        #[arg(long, conflicts_with = "min", required_unless_present = "min")]
        h: Option<usize>,
        #[arg(long)]
        min: bool,
    },
    /// p and c by flow, for graphs where every label is used once.
    Flow {
        #[command(flatten)]
        at: Endpoints,
    },
    /// Is the base multigraph Mengerian? Rejections print the witness in DOT.
    Mengerian {
        #[arg(long)]
        graph: String,
    },
    /// Exhaustive reference computations.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Build a hardness-reduction instance from a simple source graph.
    Gadget {
        kind: GadgetArg,
        /// Source graph: `u v` per line, a lone token for an isolated vertex.
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        k: usize,
        /// Output file; `.txt` writes an edge list, anything else the JSON document.
        #[arg(long)]
        out: PathBuf,
        /// `vertex=color` pairs with colors in 0..k (clique only).
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Write a graph, some of its snapshots or its product digraph as DOT.
    ExportDot {
        #[arg(long)]
        graph: String,
        /// Comma-separated timesteps to keep.
        #[arg(long, value_delimiter = ',')]
        snapshots: Option<Vec<Label>>,
        /// Draw the k-fold product digraph instead of the graph.
        #[arg(long, requires = "k")]
        product: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "s")]
        s: String,
        #[arg(long, default_value = "z")]
        z: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Maximum snapshot-disjoint family by path enumeration.
    P {
        #[command(flatten)]
        at: Endpoints,
    },
    /// Minimum snapshot cut by subset enumeration.
    C {
        #[command(flatten)]
        at: Endpoints,
    },
    /// Minimal non-Mengerian multigraphs within the bounds.
    Search {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GadgetArg {
    Indep,
    Clique,
    Vc,
}

/// Machine-readable outcome of one command.
#[derive(Serialize, Debug)]
pub struct Report {
    pub instance: Value,
    pub question: String,
    pub answer: Value,
    pub witness: Value,
    pub elapsed: f64,
    pub budget_used: Option<u128>,
}

struct Outcome {
    report: Report,
    text: Vec<String>,
    /// Printed verbatim instead of the text report.
    raw: Option<String>,
    code: i32,
}

impl Outcome {
    fn new(instance: Value, question: String) -> Self {
        let report = Report {
            instance,
            question,
            answer: Value::Null,
            witness: Value::Null,
            elapsed: 0.0,
            budget_used: None,
        };
        Self {
            report,
            text: Vec::new(),
            raw: None,
            code: EXIT_YES,
        }
    }

    fn decide(&mut self, yes: bool) {
        self.report.answer = json!(if yes { "YES" } else { "NO" });
        self.code = if yes { EXIT_YES } else { EXIT_NO };
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_YES };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli, err) {
        Ok(mut o) => {
            o.report.elapsed = start.elapsed().as_secs_f64();
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.report).expect("report serializes")
                )
            } else if let Some(raw) = &o.raw {
                write!(out, "{raw}")
            } else {
                write_text(out, &o)
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::LimitExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_MALFORMED,
    }
}

fn write_text(out: &mut dyn Write, o: &Outcome) -> std::io::Result<()> {
    let r = &o.report;
    writeln!(out, "question: {}", r.question)?;
    match &r.answer {
        Value::String(s) => writeln!(out, "answer: {s}")?,
        other => writeln!(out, "answer: {other}")?,
    }
    for line in &o.text {
        writeln!(out, "{line}")?;
    }
    if let Some(used) = r.budget_used {
        writeln!(out, "budget used: {used}")?;
    }
    writeln!(out, "elapsed: {:.3}s", r.elapsed)
}

/// Reads a file when `name` names one, otherwise looks up a bundled graph.
pub fn resolve_graph(name: &str) -> Result<TemporalGraph> {
    let path = Path::new(name);
    if path.is_file() {
        return io::read_graph(path);
    }
    fixtures::by_name(name).ok_or_else(|| {
        Error::InvalidInput(format!(
            "`{name}` is neither a file nor one of {}",
            fixtures::NAMES.join(", ")
        ))
    })
}

fn endpoints(at: &Endpoints) -> Result<(TemporalGraph, Vertex, Vertex)> {
    let g = resolve_graph(&at.graph)?;
    let (s, z) = (g.vertex(&at.s)?, g.vertex(&at.z)?);
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    Ok((g, s, z))
}

fn instance(name: &str, g: &TemporalGraph, ends: Option<(Vertex, Vertex)>) -> Value {
    let mut v = json!({
        "graph": name,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "lifetime": g.lifetime(),
    });
    if let Some((s, z)) = ends {
        v["s"] = json!(g.name(s));
        v["z"] = json!(g.name(z));
    }
    v
}

fn walk_json(g: &TemporalGraph, w: &TemporalWalk) -> Value {
    json!({
        "vertices": w.vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
        "labels": w.labels(g),
    })
}

fn multiedges_json(g: &TemporalGraph, keys: &BTreeSet<(Vertex, Vertex)>) -> Value {
    json!(keys.iter().map(|&(a, b)| [g.name(a), g.name(b)]).collect::<Vec<_>>())
}

fn labels_text(ts: &BTreeSet<Label>) -> String {
    let inner: Vec<String> = ts.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Outcome> {
    let opts = CutOptions {
        budget: cli.budget.unwrap_or(cuts::DEFAULT_BUDGET),
        threads: cli.threads.max(1),
    };
    match &cli.command {
        Command::Paths { at, k } => {
            let (g, s, z) = endpoints(at)?;
            let budget = cli.budget.unwrap_or(disjoint_paths::DEFAULT_BUDGET);
            let _ = writeln!(
                err,
                "bound: (m+2)^k = ({}+2)^{k} = {} product tuples",
                g.edge_count(),
                tuple_bound(g.edge_count(), *k)
            );
            let res = disjoint_paths::max_snapshot_disjoint(&g, s, z, *k, budget)?;
            let mut o = Outcome::new(
                instance(&at.graph, &g, Some((s, z))),
                format!("{k} snapshot-disjoint s-z paths?"),
            );
            o.decide(res.found);
            o.report.witness = json!(res.paths.iter().map(|w| walk_json(&g, w)).collect::<Vec<_>>());
            o.text = res.paths.iter().map(|w| format!("  {}", w.display(&g))).collect();
            o.report.budget_used = Some(res.visited as u128);
            Ok(o)
        }
        Command::Cut { at, h, min } => {
            let (g, s, z) = endpoints(at)?;
            let relevant = g.relevant_labels(s, z).len();
            if *min {
                let _ = writeln!(
                    err,
                    "bound: sum over h of C({relevant}, h) subsets, lifetime {}",
                    g.lifetime()
                );
                let res = cuts::min_snapshot_cut(&g, s, z, opts)?;
                let mut o = Outcome::new(instance(&at.graph, &g, Some((s, z))), "minimum snapshot cut".into());
                o.report.answer = json!(res.value);
                o.report.witness = json!(res.cut.timesteps);
                o.text.push(format!("  cut: {}", labels_text(&res.cut.timesteps)));
                o.report.budget_used = Some(res.subsets_checked);
                Ok(o)
            } else {
                let h = h.expect("clap requires --h without --min");
                let _ = writeln!(
                    err,
                    "bound: C({relevant}, {h}) = {} subsets (tau^h = {}^{h})",
                    cuts::binomial(relevant, h.min(relevant)),
                    g.lifetime()
                );
                let res = cuts::snapshot_cut_at_most(&g, s, z, h, opts)?;
                let mut o = Outcome::new(
                    instance(&at.graph, &g, Some((s, z))),
                    format!("snapshot cut of size <= {h}?"),
                );
                o.decide(res.cut.is_some());
                if let Some(c) = &res.cut {
                    o.report.witness = json!(c.timesteps);
                    o.text.push(format!("  cut: {}", labels_text(&c.timesteps)));
                }
                o.report.budget_used = Some(res.subsets_checked);
                Ok(o)
            }
        }
        Command::Mcut { at, h, min } => {
            let (g, s, z) = endpoints(at)?;
            let multiedges: BTreeSet<_> = g.edges().iter().map(|e| e.multiedge()).collect();
            let depth = h.unwrap_or(multiedges.len());
            let _ = writeln!(
                err,
                "bound: search tree of depth <= {depth} branching <= {} (n - 1)",
                g.vertex_count().saturating_sub(1)
            );
            let res = if *min {
                cuts::min_multiedge_cut(&g, s, z, opts.budget)?
            } else {
                cuts::multiedge_cut_at_most(&g, s, z, depth, opts.budget)?
            };
            let question = if *min {
                "minimum multiedge cut".to_string()
            } else {
                format!("multiedge cut of size <= {depth}?")
            };
            let mut o = Outcome::new(instance(&at.graph, &g, Some((s, z))), question);
            match (&res.cut, *min) {
                (Some(c), true) => o.report.answer = json!(c.multiedges.len()),
                (cut, _) => o.decide(cut.is_some()),
            }
            if let Some(c) = &res.cut {
                o.report.witness = multiedges_json(&g, &c.multiedges);
                let names: Vec<String> = c
                    .multiedges
                    .iter()
                    .map(|&(a, b)| format!("{}{}", g.name(a), g.name(b)))
                    .collect();
                o.text.push(format!("  cut: {{{}}}", names.join(", ")));
            }
            o.report.budget_used = Some(res.nodes);
            Ok(o)
        }
        Command::Flow { at } => {
            let (g, s, z) = endpoints(at)?;
            let res = injective_flow::injective_connectivity(&g, s, z)?;
            let mut o = Outcome::new(instance(&at.graph, &g, Some((s, z))), "p and c (injective)".into());
            o.report.answer = json!({ "p": res.p, "c": res.c });
            o.report.witness = json!({
                "paths": res.paths.iter().map(|w| walk_json(&g, w)).collect::<Vec<_>>(),
                "cut": res.cut,
            });
            o.text.push(format!("  p = {}, c = {}", res.p, res.c));
            o.text.extend(res.paths.iter().map(|w| format!("  {}", w.display(&g))));
            o.text.push(format!("  cut: {}", labels_text(&res.cut)));
            Ok(o)
        }
        Command::Mengerian { graph } => {
            let g = resolve_graph(graph)?;
            let verdict = mengerian::recognize(&g.base());
            let mut o = Outcome::new(instance(graph, &g, None), "Mengerian?".into());
            o.decide(verdict.mengerian);
            o.report.witness = verdict.to_json();
            if let Some(w) = &verdict.witness {
                o.text.push(format!("  forbidden minor: {}", w.minor));
                o.text.push(
                    io::mgraph_to_dot(&w.subgraph, &format!("witness {}", w.minor))
                        .trim_end()
                        .to_string(),
                );
            }
            Ok(o)
        }
        Command::Oracle { which } => oracle(which),
        Command::Gadget {
            kind,
            source,
            k,
            out,
            coloring,
        } => {
            let src = gadgets::parse_source_graph(&std::fs::read_to_string(source)?)?;
            let gad: Gadget = match kind {
                GadgetArg::Indep => gadgets::independent_set_instance(&src, *k)?,
                GadgetArg::Vc => gadgets::vertex_cover_instance(&src, *k)?,
                GadgetArg::Clique => {
                    let text = coloring
                        .as_deref()
                        .ok_or_else(|| Error::InvalidInput("clique gadgets need --coloring".into()))?;
                    let colors = gadgets::parse_coloring(&src, text)?;
                    gadgets::clique_instance(&src, &colors, *k)?
                }
            };
            let body = if out.extension().is_some_and(|e| e == "txt") {
                io::write_edge_list(&gad.graph)
            } else {
                serde_json::to_string_pretty(&gad.document())? + "\n"
            };
            std::fs::write(out, body)?;
            let manifest_path = manifest_path(out);
            std::fs::write(&manifest_path, gad.manifest_json() + "\n")?;
            let mut o = Outcome::new(
                json!({ "source": source.display().to_string(), "k": k }),
                format!("build {:?} gadget", gad.kind),
            );
            o.report.answer = json!(serde_json::to_value(gad.question)?);
            o.report.witness = json!({
                "instance": out.display().to_string(),
                "manifest": manifest_path.display().to_string(),
                "ground_truth": gad.manifest.ground_truth,
            });
            o.text.push(format!(
                "  wrote {} ({} vertices, {} edges)",
                out.display(),
                gad.graph.vertex_count(),
                gad.graph.edge_count()
            ));
            o.text.push(format!("  wrote {}", manifest_path.display()));
            Ok(o)
        }
        Command::ExportDot {
            graph,
            snapshots,
            product,
            k,
            s,
            z,
            out,
        } => {
            let g = resolve_graph(graph)?;
            let dot = if *product {
                let (s, z) = (g.vertex(s)?, g.vertex(z)?);
                let k = k.expect("clap requires --k with --product");
                let budget = cli.budget.unwrap_or(disjoint_paths::DEFAULT_BUDGET);
                let _ = writeln!(
                    err,
                    "bound: (m+2)^k = {} product tuples",
                    tuple_bound(g.edge_count(), k)
                );
                disjoint_paths::build_product(&g, s, z, k, budget)?.to_dot(&g)?
            } else {
                let opts = DotOptions {
                    snapshots: snapshots.as_ref().map(|v| v.iter().copied().collect()),
                    highlight: Vec::new(),
                    title: Some(graph.clone()),
                };
                io::to_dot(&g, &opts)
            };
            let mut o = Outcome::new(instance(graph, &g, None), "export DOT".into());
            match out {
                Some(path) => {
                    std::fs::write(path, &dot)?;
                    o.report.answer = json!(path.display().to_string());
                    o.text.push(format!("  wrote {}", path.display()));
                }
                None => {
                    o.report.answer = json!(dot);
                    o.raw = Some(dot);
                }
            }
            Ok(o)
        }
    }
}

fn oracle(which: &OracleCommand) -> Result<Outcome> {
    match which {
        OracleCommand::P { at } => {
            let (g, s, z) = endpoints(at)?;
            let res = oracles::brute_force_p(&g, s, z, oracles::PATH_LIMIT)?;
            let mut o = Outcome::new(instance(&at.graph, &g, Some((s, z))), "p by path enumeration".into());
            o.report.answer = json!(res.value);
            o.report.witness = json!(res.paths.iter().map(|w| walk_json(&g, w)).collect::<Vec<_>>());
            o.text = res.paths.iter().map(|w| format!("  {}", w.display(&g))).collect();
            Ok(o)
        }
        OracleCommand::C { at } => {
            let (g, s, z) = endpoints(at)?;
            let res = oracles::brute_force_c(&g, s, z, oracles::PATH_LIMIT)?;
            let mut o = Outcome::new(instance(&at.graph, &g, Some((s, z))), "c by subset enumeration".into());
            o.report.answer = json!(res.value);
            o.report.witness = json!(res.labels);
            o.text.push(format!("  cut: {}", labels_text(&res.labels)));
            Ok(o)
        }
        OracleCommand::Search {
            max_vertices,
            max_edges,
        } => {
            let mut sem = oracles::SemanticOracle::new();
            let found = oracles::search_minimal_non_mengerian(*max_vertices, *max_edges, &mut sem)?;
            let mut o = Outcome::new(
                json!({ "max_vertices": max_vertices, "max_edges": max_edges }),
                "minimal non-Mengerian multigraphs".into(),
            );
            o.report.answer = json!(found.len());
            let mut listed = Vec::new();
            for g in &found {
                let name = mengerian::recognize(g).witness.map(|w| w.minor.to_string());
                let edges: Vec<_> = g
                    .multiedges()
                    .map(|((a, b), m)| (g.name(a).to_string(), g.name(b).to_string(), m))
                    .collect();
                let shown: Vec<String> = edges.iter().map(|(a, b, m)| format!("{a}{b}x{m}")).collect();
                o.text
                    .push(format!("  {}: {}", name.as_deref().unwrap_or("?"), shown.join(" ")));
                listed.push(json!({ "minor": name, "multiedges": edges }));
            }
            o.report.witness = json!(listed);
            Ok(o)
        }
    }
}

/// `<out>.manifest.json`, next to the instance.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

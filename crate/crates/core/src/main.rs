use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pconn::campaign::{run_campaign, Corpus, Instance, TheoremId, DEFAULT_SEED};
use pconn::classes::{hamiltonian_path, ClassRepresentation};
use pconn::constructions::{
    color_circular_arc, color_from_dominating, color_from_two_step_dominating, color_interval,
    color_traceable, color_tree, ConstructionOutcome,
};
use pconn::domination::{classify, greedy_two_step_dominating, minimum_sets, DominationKind, EXACT_VERTEX_LIMIT};
use pconn::exact::pc_exact;
use pconn::io::{
    detect_format, emit_dot, parse_coloring, parse_graph, parse_graph6_lines, parse_representation,
    write_coloring, GraphFormat, RepresentationKind,
};
use pconn::{Budget, Error, Graph, Result, VertexId, VertexSet};

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "pconn", version, about = "Proper connection numbers of small graphs")]
struct Cli {
    /// Input format for graph files.
    #[arg(long, global = true, default_value = "auto")]
    format: FormatArg,
    /// Treat the input file as a class representation of this kind.
    #[arg(long, global = true)]
    rep: Option<RepKind>,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = Budget::default().max_nodes)]
    budget: u64,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepKind {
    Interval,
    Arc,
    Threshold,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Tree,
    Traceable,
    TwoStep,
    Dominating,
    Interval,
    CircularArc,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    TwoWay,
    TwoWayTwoStep,
}

#[derive(Subcommand)]
enum Command {
    /// Exact proper connection number with a certificate coloring.
    Pc { file: PathBuf },
    /// Build a verified coloring from graph structure.
    Color {
        #[arg(long)]
        method: MethodArg,
        /// Dominating set to use (comma-separated ids); defaults to a minimum one.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<VertexId>>,
        file: PathBuf,
    },
    /// Minimum connected dominating sets of a given kind.
    Dominate {
        #[arg(long)]
        kind: KindArg,
        /// List every minimum set.
        #[arg(long)]
        all: bool,
        /// Use the greedy heuristic instead of exhaustive search.
        #[arg(long)]
        greedy: bool,
        file: PathBuf,
    },
    /// Check a bound over a corpus.
    Verify {
        theorem: String,
        /// All connected labeled graphs up to this many vertices.
        #[arg(long, conflicts_with_all = ["corpus", "samples"])]
        n: Option<usize>,
        /// graph6 file, one graph per line.
        #[arg(long, conflicts_with = "samples")]
        corpus: Option<PathBuf>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// DOT rendering of a graph and optionally a coloring.
    Render {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        highlight: Option<Vec<VertexId>>,
    },
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

struct Input {
    graph: Graph,
    rep: Option<ClassRepresentation>,
}

fn load(cli: &Cli, path: &Path) -> Result<Input> {
    let text = read_text(path)?;
    if let Some(kind) = cli.rep {
        let kind = match kind {
            RepKind::Interval => RepresentationKind::Interval,
            RepKind::Arc => RepresentationKind::Arc,
            RepKind::Threshold => RepresentationKind::Threshold,
            RepKind::Chain => RepresentationKind::Chain,
        };
        let rep = parse_representation(&text, kind)?;
        return Ok(Input {
            graph: rep.realize()?,
            rep: Some(rep),
        });
    }
    let format = match cli.format {
        FormatArg::Auto => detect_format(&text),
        FormatArg::Graph6 => GraphFormat::Graph6,
        FormatArg::EdgeList => GraphFormat::EdgeList,
    };
    Ok(Input {
        graph: parse_graph(&text, format)?,
        rep: None,
    })
}

fn print_outcome(cli: &Cli, g: &Graph, out: &ConstructionOutcome) {
    if cli.json {
        outln!("{}", serde_json::to_string_pretty(out).unwrap());
    } else {
        outln!(
            "colors {} (guarantee {}), method {:?}, verified {}",
            out.colors_used, out.guarantee, out.method, out.verified
        );
        out!("{}", write_coloring(g, &out.coloring));
    }
}

/// Returns the process exit status: 0 pass, 1 a failed check.
fn run(cli: &Cli) -> Result<u8> {
    let budget = Budget::with_nodes(cli.budget);
    match &cli.command {
        Command::Pc { file } => {
            let g = load(cli, file)?.graph;
            let res = pc_exact(&g, &budget)?;
            if cli.json {
                outln!("{}", serde_json::to_string_pretty(&res).unwrap());
            } else {
                outln!("pc {} ({:?}, {} search nodes)", res.value, res.refutation, res.nodes);
                out!("{}", write_coloring(&g, &res.certificate));
            }
            Ok(0)
        }
        Command::Color { method, set, file } => {
            let input = load(cli, file)?;
            let g = &input.graph;
            let dominating = |kind: DominationKind| -> Result<_> {
                match set {
                    Some(ids) => classify(g, &VertexSet::from_ids(g.vertex_count(), ids.iter().copied())?),
                    None => minimum_sets(g, kind, false, EXACT_VERTEX_LIMIT)?
                        .pop()
                        .ok_or_else(|| Error::arg("no dominating set found")),
                }
            };
            let out = match method {
                MethodArg::Tree => color_tree(g)?,
                MethodArg::Traceable => {
                    let path = hamiltonian_path(g)?
                        .ok_or_else(|| Error::arg("graph has no Hamiltonian path"))?;
                    color_traceable(g, &path)?
                }
                MethodArg::TwoStep => {
                    color_from_two_step_dominating(g, &dominating(DominationKind::TwoWayTwoStep)?, &budget)?
                }
                MethodArg::Dominating => {
                    color_from_dominating(g, &dominating(DominationKind::TwoWay)?, &budget)?
                }
                MethodArg::Interval => match &input.rep {
                    Some(ClassRepresentation::Interval(rep)) => color_interval(g, rep, &budget)?,
                    _ => return Err(Error::arg("--method interval needs --rep interval input")),
                },
                MethodArg::CircularArc => match &input.rep {
                    Some(ClassRepresentation::Arc(rep)) => color_circular_arc(g, rep, &budget)?,
                    _ => return Err(Error::arg("--method circular-arc needs --rep arc input")),
                },
            };
            print_outcome(cli, g, &out);
            Ok(if out.meets_guarantee() { 0 } else { 1 })
        }
        Command::Dominate { kind, all, greedy, file } => {
            let g = load(cli, file)?.graph;
            let kind = match kind {
                KindArg::TwoWay => DominationKind::TwoWay,
                KindArg::TwoWayTwoStep => DominationKind::TwoWayTwoStep,
            };
            if *greedy {
                if kind != DominationKind::TwoWayTwoStep {
                    return Err(Error::arg("--greedy supports only --kind two-way-two-step"));
                }
                let res = greedy_two_step_dominating(&g)?;
                if cli.json {
                    outln!("{}", serde_json::to_string_pretty(&res).unwrap());
                } else {
                    outln!("{:?} size {} bound {:?}", res.certificate.set, res.certificate.size, res.bound_status);
                }
                return Ok(0);
            }
            let sets = minimum_sets(&g, kind, *all, EXACT_VERTEX_LIMIT)?;
            if cli.json {
                outln!("{}", serde_json::to_string_pretty(&sets).unwrap());
            } else {
                for d in &sets {
                    outln!("{:?}", d.set);
                }
            }
            Ok(0)
        }
        Command::Verify { theorem, n, corpus, samples, seed } => {
            let theorem: TheoremId = theorem.parse()?;
            let corpus = if let Some(max_n) = n {
                Corpus::Exhaustive { max_n: *max_n }
            } else if let Some(path) = corpus {
                let graphs = parse_graph6_lines(&read_text(path)?)?;
                Corpus::Instances {
                    label: format!("graph6 file {}", path.display()),
                    instances: graphs.into_iter().map(Instance::bare).collect(),
                }
            } else if let Some(samples) = samples {
                Corpus::Sampled { samples: *samples, seed: *seed }
            } else {
                Corpus::Default
            };
            let report = run_campaign(theorem, corpus, &budget)?;
            if cli.json {
                outln!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                outln!(
                    "{} {}: {} ({}) checked {} of {}, {} violations, {:.0} ms",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.theorem,
                    report.statement,
                    report.corpus,
                    report.checked,
                    report.instances,
                    report.violations.len(),
                    report.wall_time_ms
                );
                for (k, v) in &report.tally {
                    outln!("  {k}: {v}");
                }
                for v in report.violations.iter().take(20) {
                    outln!("  #{} {}: {}", v.index, v.graph6, v.details);
                }
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Render { file, coloring, highlight } => {
            let g = load(cli, file)?.graph;
            let c = coloring
                .as_ref()
                .map(|p| read_text(p).and_then(|t| parse_coloring(&g, &t)))
                .transpose()?;
            let h = highlight
                .as_ref()
                .map(|ids| VertexSet::from_ids(g.vertex_count(), ids.iter().copied()))
                .transpose()?;
            if cli.json {
                outln!("{}", json!({ "dot": emit_dot(&g, c.as_ref(), h.as_ref()) }));
            } else {
                out!("{}", emit_dot(&g, c.as_ref(), h.as_ref()));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `rmsat` command-line tool.
//!
//! Exit codes: 0 when the verdict was computed and holds, 1 when the checked
//! property is false, 2 on usage or input errors, 3 when a search budget ran out.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rmsat::coloring::CertificateJson;
use rmsat::constructions::{build, predicted_edge_count, BuiltConstruction, ConstructionSpec};
use rmsat::saturation::{is_ramsey_minimal, is_rmin_saturated};
use rmsat::verify::{run_all, VerifyOptions};
use rmsat::{
    cnf, count_bad_colorings, dot, find_bad_coloring, graph6, oracle, BadColoringCertificate, Color, Graph, Outcome,
    SearchConfig, SearchLimits,
};

#[derive(Parser, Debug)]
#[command(name = "rmsat", version, about = "Saturation for Ramsey-minimal graphs of (K3, k-vertex trees)")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Node budget per search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_nodes: Option<u64>,
    /// Wall-clock budget per search, in seconds.
    #[arg(long, global = true, value_parser = parse_seconds)]
    max_time: Option<Duration>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction.
    Construct(ConstructArgs),
    /// Run a predicate on a graph6 input.
    Check(CheckArgs),
    /// Exact saturation number at small n by exhaustive scan.
    Sat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Convert a graph6 input to another format.
    Export(ExportArgs),
    /// Run the full verification suite and print one line per criterion.
    VerifyPaper {
        /// Smaller enumeration ranges.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Star,
    J,
    C5dup,
    Petersen,
    Geven,
    Godd,
    General,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphFormat {
    Text,
    Json,
    Graph6,
    Dot,
    Cnf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    /// Five comma-separated class sizes for `c5dup`.
    #[arg(long, value_delimiter = ',')]
    mult: Vec<usize>,
    /// Include the reference bad coloring.
    #[arg(long)]
    coloring: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
    format: GraphFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Predicate {
    /// Every coloring has a red triangle or a blue k-vertex tree.
    Arrow,
    /// Find a bad coloring, or verify one given with --certificate.
    BadColoring,
    Count,
    Saturated,
    Minimal,
}

#[derive(Args, Debug)]
struct CheckArgs {
    predicate: Predicate,
    /// graph6 file, or `-` for standard input.
    input: String,
    #[arg(long)]
    k: usize,
    /// Certificate JSON to verify (bad-coloring only).
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Stop counting at this many colorings.
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExportFormat {
    Cnf,
    Dot,
    Graph6,
}

#[derive(Args, Debug)]
struct ExportArgs {
    format: ExportFormat,
    input: String,
    /// Tree order, required for CNF.
    #[arg(long)]
    k: Option<usize>,
    /// Certificate JSON whose colors are drawn in DOT output.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(secs > 0.0 && secs.is_finite()) {
        return Err("must be a positive number of seconds".into());
    }
    Ok(Duration::from_secs_f64(secs))
}

/// Exit status plus message for the error stream.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<rmsat::Error> for Failure {
    fn from(e: rmsat::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

const EXHAUSTED: u8 = 3;

fn exhausted() -> Failure {
    Failure {
        code: EXHAUSTED,
        message: "inconclusive: search budget exhausted".into(),
    }
}

/// Output lines and the exit status the command decided on.
struct Reply {
    text: String,
    code: u8,
}

fn reply(text: impl Into<String>, holds: bool) -> Reply {
    Reply {
        text: text.into(),
        code: if holds { 0 } else { 1 },
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .map_err(|e| Failure::usage(format!("{path}: {e}")))?
            .read_to_string(&mut text)?;
    }
    Ok(text)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let mut graphs = graph6::read_all(BufReader::new(text.as_bytes()))?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Failure::usage(format!("{path}: no graph found"))),
        n => Err(Failure::usage(format!("{path}: expected one graph, found {n}"))),
    }
}

fn read_certificate(path: &PathBuf, g: &Graph) -> Result<BadColoringCertificate, Failure> {
    let file = File::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_reader(BufReader::new(file))
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let inner = value.get("certificate").cloned().unwrap_or(value);
    let parsed: CertificateJson =
        serde_json::from_value(inner).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let coloring = parsed.coloring_for(g)?;
    Ok(BadColoringCertificate {
        k: parsed.k,
        coloring,
        blue_component_sizes: parsed.blue_component_sizes,
        red_triangle_free: parsed.red_triangle_free,
    })
}

fn spec_from(args: &ConstructArgs) -> Result<ConstructionSpec, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::usage(format!("--{flag} is required")));
    Ok(match args.kind {
        Kind::Star => ConstructionSpec::Star { n: need(args.n, "n")? },
        Kind::J => ConstructionSpec::J {
            a: need(args.a, "a")?,
            b: args.b.unwrap_or(0),
            c: args.c.unwrap_or(0),
        },
        Kind::C5dup => {
            let multiplicities: [usize; 5] = args
                .mult
                .clone()
                .try_into()
                .map_err(|_| Failure::usage("--mult takes exactly five sizes"))?;
            ConstructionSpec::C5Dup { multiplicities }
        }
        Kind::Petersen => ConstructionSpec::Petersen,
        Kind::Geven => ConstructionSpec::GEven { n: need(args.n, "n")? },
        Kind::Godd => ConstructionSpec::GOdd { n: need(args.n, "n")? },
        Kind::General => ConstructionSpec::General {
            k: need(args.k, "k")?,
            n: need(args.n, "n")?,
        },
    })
}

fn certificate_text(g: &Graph, cert: &BadColoringCertificate) -> String {
    let pick = |c: Color| -> Vec<String> {
        g.edges()
            .iter()
            .zip(cert.coloring.colors())
            .filter(|(_, &col)| col == c)
            .map(|(&(u, v), _)| format!("{u}-{v}"))
            .collect()
    };
    format!(
        "red ({}): {}\nblue ({}): {}\nblue component sizes: {:?}\n",
        cert.coloring.red_count(),
        pick(Color::Red).join(" "),
        g.m() - cert.coloring.red_count(),
        pick(Color::Blue).join(" "),
        cert.blue_component_sizes
    )
}

fn construct(args: &ConstructArgs) -> Result<Reply, Failure> {
    let spec = spec_from(args)?;
    let built = build(&spec)?;
    let BuiltConstruction {
        graph: g,
        roles,
        k,
        reference_coloring,
        warnings,
        ..
    } = &built;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    let cert = match (args.coloring, reference_coloring, k) {
        (false, _, _) => None,
        (true, Some(c), Some(k)) => Some(BadColoringCertificate::new(g, *k, c.clone())?),
        (true, _, _) => return Err(Failure::usage(format!("{spec} has no reference coloring"))),
    };
    let labels: Vec<String> = roles.iter().map(ToString::to_string).collect();
    let text = match args.format {
        GraphFormat::Graph6 => format!("{}\n", graph6::encode(g)),
        GraphFormat::Dot => dot::to_dot(g, cert.as_ref().map(|c| &c.coloring), Some(&labels))?,
        GraphFormat::Cnf => {
            let k = args
                .k
                .or(*k)
                .ok_or_else(|| Failure::usage("--k is required for CNF output of this construction"))?;
            cnf::export_cnf(g, k)?.to_dimacs()
        }
        GraphFormat::Json => {
            let mut v = json!({
                "spec": spec.to_string(),
                "n": g.n(),
                "m": g.m(),
                "predicted_edges": predicted_edge_count(&spec)?,
                "k": k,
                "graph6": graph6::encode(g),
                "roles": labels,
                "edges": g.edges(),
                "warnings": warnings,
            });
            if let Some(c) = &cert {
                v["certificate"] = serde_json::to_value(c.to_json(g)).expect("certificate serializes");
            }
            format!("{v:#}\n")
        }
        GraphFormat::Text => {
            let mut out = format!(
                "{spec}: n = {}, m = {}, predicted m = {}\ngraph6: {}\nroles: {}\n",
                g.n(),
                g.m(),
                predicted_edge_count(&spec)?,
                graph6::encode(g),
                labels.iter().enumerate().map(|(v, r)| format!("{v}:{r}")).collect::<Vec<_>>().join(" ")
            );
            if let Some(c) = &cert {
                out.push_str(&certificate_text(g, c));
            }
            out
        }
    };
    Ok(reply(text, true))
}

fn render(format: ReportFormat, value: Value, text: String) -> String {
    match format {
        ReportFormat::Json => format!("{value:#}\n"),
        ReportFormat::Text => text,
    }
}

fn check(args: &CheckArgs, cfg: &SearchConfig) -> Result<Reply, Failure> {
    let g = read_graph(&args.input)?;
    let k = args.k;
    match args.predicate {
        Predicate::BadColoring if args.certificate.is_some() => {
            let cert = read_certificate(args.certificate.as_ref().unwrap(), &g)?;
            if cert.k != k {
                return Err(Failure::usage(format!("certificate is for k = {}, not {k}", cert.k)));
            }
            let ok = cert.verify(&g)?;
            let value = json!({ "k": k, "certificate_valid": ok });
            Ok(reply(render(args.format, value, format!("certificate valid: {ok}\n")), ok))
        }
        Predicate::Arrow | Predicate::BadColoring => {
            let r = find_bad_coloring(&g, k, cfg)?;
            let Outcome::Done(found) = r.outcome else {
                return Err(exhausted());
            };
            let arrows = found.is_none();
            let mut value = json!({ "k": k, "arrows": arrows, "stats": r.stats });
            let mut text = format!("arrows: {arrows}\n");
            if let Some(c) = &found {
                value["certificate"] = serde_json::to_value(c.to_json(&g)).expect("certificate serializes");
                text.push_str(&certificate_text(&g, c));
            }
            let holds = if args.predicate == Predicate::Arrow { arrows } else { !arrows };
            Ok(reply(render(args.format, value, text), holds))
        }
        Predicate::Count => {
            if args.cap == 0 {
                return Err(Failure::usage("--cap must be at least 1"));
            }
            let r = count_bad_colorings(&g, k, args.cap, cfg)?;
            let Outcome::Done(count) = r.outcome else {
                return Err(exhausted());
            };
            let capped = count >= args.cap;
            let value = json!({ "k": k, "count": count, "capped": capped, "stats": r.stats });
            let suffix = if capped { " (cap reached)" } else { "" };
            Ok(reply(render(args.format, value, format!("count: {count}{suffix}\n")), true))
        }
        Predicate::Saturated => {
            let Outcome::Done(r) = is_rmin_saturated(&g, k, cfg)? else {
                return Err(exhausted());
            };
            let failures: Vec<Value> = r
                .failures
                .iter()
                .map(|((u, v), c)| {
                    let h = g.with_edge(*u, *v).expect("failure is a non-edge");
                    json!({ "non_edge": [u, v], "certificate": c.to_json(&h) })
                })
                .collect();
            let value = json!({
                "k": k,
                "saturated": r.verdict,
                "base_certificate": r.base_certificate.as_ref().map(|c| c.to_json(&g)),
                "failures": failures,
                "non_edges": r.non_edges,
                "stats": r.total_stats(),
            });
            let mut text = format!("saturated: {}\nnon-edges checked: {}\n", r.verdict, r.non_edges.len());
            match (&r.base_certificate, r.failures.first()) {
                (None, _) => text.push_str("the graph admits no bad coloring\n"),
                (Some(_), Some(((u, v), _))) => {
                    text.push_str(&format!("{} failing non-edges, first {u}-{v}\n", r.failures.len()))
                }
                (Some(_), None) => {}
            }
            Ok(reply(render(args.format, value, text), r.verdict))
        }
        Predicate::Minimal => {
            let Outcome::Done(r) = is_ramsey_minimal(&g, k, cfg)? else {
                return Err(exhausted());
            };
            let value = json!({
                "k": k,
                "minimal": r.verdict,
                "arrows": r.arrows,
                "removable_edges": r.removable_edges,
                "stats": r.stats,
            });
            let mut text = format!("minimal: {}\narrows: {}\n", r.verdict, r.arrows);
            if !r.removable_edges.is_empty() {
                text.push_str(&format!("edges whose removal still arrows: {:?}\n", r.removable_edges));
            }
            Ok(reply(render(args.format, value, text), r.verdict))
        }
    }
}

fn sat(n: usize, k: usize, format: ReportFormat, cfg: &SearchConfig) -> Result<Reply, Failure> {
    let Outcome::Done(r) = oracle::compute_sat(n, k, cfg)? else {
        return Err(exhausted());
    };
    let text = format!(
        "sat(n = {n}, k = {k}) = {}\nextremal graphs: {}\ngraphs scanned: {}\n",
        r.min_edges,
        r.extremal.join(" "),
        r.graphs_scanned
    );
    let value = serde_json::to_value(&r).expect("result serializes");
    Ok(reply(render(format, value, text), true))
}

fn export(args: &ExportArgs) -> Result<Reply, Failure> {
    let g = read_graph(&args.input)?;
    let text = match args.format {
        ExportFormat::Graph6 => format!("{}\n", graph6::encode(&g)),
        ExportFormat::Cnf => {
            let k = args.k.ok_or_else(|| Failure::usage("--k is required for CNF export"))?;
            cnf::export_cnf(&g, k)?.to_dimacs()
        }
        ExportFormat::Dot => {
            let cert = args.certificate.as_ref().map(|p| read_certificate(p, &g)).transpose()?;
            dot::to_dot(&g, cert.as_ref().map(|c| &c.coloring), None)?
        }
    };
    Ok(reply(text, true))
}

fn verify(quick: bool, cfg: &SearchConfig) -> Reply {
    let results = run_all(&VerifyOptions { quick, search: *cfg });
    let mut text = String::new();
    for r in &results {
        eprintln!("criterion {:>2}: {:.2?}", r.id, r.elapsed);
        text.push_str(&format!("{r}\n"));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    text.push_str(&format!("{} passed, {failed} failed\n", results.len() - failed));
    reply(text, failed == 0)
}

fn run(cli: Cli) -> Result<Reply, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    let defaults = SearchLimits::default();
    let cfg = SearchConfig {
        limits: SearchLimits {
            max_nodes: cli.max_nodes.or(defaults.max_nodes),
            max_time: cli.max_time.or(defaults.max_time),
        },
        ..SearchConfig::default()
    };
    match &cli.command {
        Command::Construct(args) => construct(args),
        Command::Check(args) => check(args, &cfg),
        Command::Sat { n, k, format } => sat(*n, *k, *format, &cfg),
        Command::Export(args) => export(args),
        Command::VerifyPaper { quick } => Ok(verify(*quick, &cfg)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            let mut out = io::stdout().lock();
            if out.write_all(r.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(r.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

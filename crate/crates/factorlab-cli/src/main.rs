//! factorlab: property analysis, constructions, theorem verification and
//! conjecture scanning for small multigraphs.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use factorlab::catalog::Catalog;
use factorlab::construct::{
    star_product, two_cut_connection, y_extension, Orientation, StarSpec, TwoCutSpec,
};
use factorlab::decide;
use factorlab::factor::EngineConfig;
use factorlab::graph::Graph;
use factorlab::graph6::parse_graph6_stream;
use factorlab::named::{catalog_names, make_named, parse_name};
use factorlab::scan::{scan, ScanFilter};
use factorlab::verify;

#[derive(Parser)]
#[command(
    name = "factorlab",
    version,
    about = "perfect-matching and 2-factor Hamiltonicity toolkit"
)]
struct Cli {
    /// Search node cap per graph (overrides FACTORLAB_WORKBOUND; default 10^7)
    #[arg(long, global = true)]
    workbound: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide PMH / 2FH / E2F / malleability plus girth and bipartiteness
    Props {
        /// A named catalog graph (e.g. K4, K3,3, Q3, Heawood, Y(2))
        #[arg(long, conflicts_with = "input")]
        name: Option<String>,
        /// Input file, or `-` for stdin
        input: Option<String>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        /// Tabulate every extension count instead of stopping at the first
        /// failing matching
        #[arg(long)]
        exhaustive: bool,
    },
    /// Build a graph from a JSON construction script and print its edge list
    Construct {
        /// Script file, or `-` for stdin
        script: Option<String>,
    },
    /// Run every theorem check of the registry; exit 1 on any failure
    VerifyPaper {
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
        /// Run a single check by id
        #[arg(long)]
        id: Option<String>,
    },
    /// Stream graphs through a filter chain and report conjecture data
    Scan {
        /// Input file, or `-` for stdin
        input: Option<String>,
        /// Comma-separated: bipartite, cubic, connected, pmh, girth>=N, cyc>=N
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// List or emit the named graphs
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .workbound
        .or_else(|| {
            std::env::var("FACTORLAB_WORKBOUND")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(10_000_000);
    let cfg = EngineConfig { node_cap: cap };
    match run(cli.cmd, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd, cfg: &EngineConfig) -> Result<ExitCode> {
    match cmd {
        Cmd::Props {
            name,
            input,
            format,
            output,
            exhaustive,
        } => {
            let graphs = gather_inputs(name.as_deref(), input.as_deref(), format)?;
            for (label, g) in &graphs {
                let report = props_report(label, g, exhaustive, cfg);
                match output {
                    Output::Json => println!("{}", serde_json::to_string(&report)?),
                    Output::Text => print!("{}", report.render()),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { script } => {
            let text = read_input(script.as_deref())?;
            let script: Script =
                serde_json::from_str(&text).context("parsing construction script")?;
            let g = run_script(&script)?;
            print!("{}", g.write_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyPaper { output, id } => {
            let cat = Catalog::default_catalog();
            let checks = match id {
                Some(id) => vec![verify::verify_theorem(&id, &cat)?],
                None => verify::verify_paper(&cat).checks,
            };
            let summary = verify::PaperVerification { checks };
            match output {
                Output::Json => {
                    for c in &summary.checks {
                        println!("{}", serde_json::to_string(c)?);
                    }
                }
                Output::Text => print!("{}", summary.render_table()),
            }
            if summary.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Scan {
            input,
            filter,
            max_n,
            jobs,
            format,
            output,
        } => {
            let mut parsed = parse_filter(&filter)?;
            parsed.max_n = max_n.or(parsed.max_n);
            let graphs = gather_inputs(None, Some(input.as_deref().unwrap_or("-")), format)?;
            let records = scan(&graphs, &parsed, jobs, cfg);
            for r in &records {
                if let Some(err) = &r.error {
                    eprintln!("warning: {}: {}", r.label, err);
                }
                match output {
                    Output::Json => println!("{}", serde_json::to_string(r)?),
                    Output::Text => {
                        let mark = |b: Option<bool>| match b {
                            Some(true) => "yes",
                            Some(false) => "no",
                            None => "-",
                        };
                        println!(
                            "{:>4} {:<12} n={:<3} m={:<3} survivor={} 2fh={} uniq-ext={} pmh={}{}",
                            r.index,
                            r.label,
                            r.n,
                            r.m,
                            if r.survivor { "yes" } else { "no" },
                            mark(r.two_fh),
                            mark(r.unique_extension_pm),
                            mark(r.pmh),
                            if r.counterexample {
                                "  COUNTEREXAMPLE"
                            } else {
                                ""
                            },
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Catalog { list, name, format } => {
            if list {
                for n in catalog_names() {
                    println!("{}", n);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let name = name.ok_or_else(|| anyhow!("pass --list or --name <graph>"))?;
            let g = make_named(&parse_name(&name)?)?;
            match format {
                Format::Edgelist => print!("{}", g.write_edge_list()),
                Format::G6 => bail!("graph6 output is not supported; use --format edgelist"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

// ---------------------------------------------------------------------------
// input handling
// ---------------------------------------------------------------------------

fn read_input(path: Option<&str>) -> Result<String> {
    match path {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p)),
    }
}

/// Loads graphs from a named generator or an input file: graph6 one per
/// line, or edge-list blocks separated by blank lines.
fn gather_inputs(
    name: Option<&str>,
    input: Option<&str>,
    format: Format,
) -> Result<Vec<(String, Graph)>> {
    if let Some(name) = name {
        let g = make_named(&parse_name(name)?)?;
        return Ok(vec![(name.to_string(), g)]);
    }
    let text = read_input(input)?;
    let mut out = Vec::new();
    match format {
        Format::G6 => {
            for (i, g) in parse_graph6_stream(&text).enumerate() {
                match g {
                    Ok(g) => out.push((format!("g{}", i), g)),
                    Err(e) => eprintln!("warning: graph {} skipped: {}", i, e),
                }
            }
        }
        Format::Edgelist => {
            for (i, block) in text
                .split("\n\n")
                .filter(|b| !b.trim().is_empty())
                .enumerate()
            {
                match Graph::parse_edge_list(block) {
                    Ok(g) => out.push((format!("g{}", i), g)),
                    Err(e) => eprintln!("warning: block {} skipped: {}", i, e),
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// props
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PropsReport {
    name: String,
    n: usize,
    m: usize,
    connected: bool,
    bipartite: bool,
    girth: Option<usize>,
    pmh: Option<bool>,
    #[serde(rename = "2fh")]
    two_fh: Option<bool>,
    e2f: bool,
    malleable: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extension_counts: Option<Vec<(Vec<usize>, usize)>>,
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    errors: std::collections::BTreeMap<String, String>,
}

impl PropsReport {
    fn render(&self) -> String {
        let fmt_opt = |o: Option<bool>| match o {
            Some(b) => b.to_string(),
            None => "error".to_string(),
        };
        let mut s =
            format!(
            "{}: n={} m={} connected={} bipartite={} girth={} pmh={} 2fh={} e2f={} malleable={}\n",
            self.name,
            self.n,
            self.m,
            self.connected,
            self.bipartite,
            self.girth.map(|g| g.to_string()).unwrap_or_else(|| "inf".into()),
            fmt_opt(self.pmh),
            fmt_opt(self.two_fh),
            self.e2f,
            match &self.malleable {
                Some(v) => format!("{:?}", v),
                None => "error".into(),
            },
        );
        for (k, v) in &self.errors {
            s.push_str(&format!("  {}: {}\n", k, v));
        }
        s
    }
}

fn props_report(label: &str, g: &Graph, exhaustive: bool, cfg: &EngineConfig) -> PropsReport {
    let connected = g.is_connected();
    let mut errors = std::collections::BTreeMap::new();
    if !connected {
        eprintln!(
            "warning: {} is disconnected; PMH, 2FH and malleability are not component-decomposable",
            label
        );
    }
    let (pmh, extension_counts) = if connected {
        match decide::is_pmh_with(g, exhaustive, cfg) {
            Ok(rep) => {
                let rows = match &rep.certificate {
                    Some(decide::Certificate::ExtensionTable { rows }) => Some(
                        rows.iter()
                            .map(|r| (r.matching.clone(), r.extensions))
                            .collect(),
                    ),
                    _ => None,
                };
                (Some(rep.verdict), rows)
            }
            Err(e) => {
                errors.insert("pmh".into(), e.to_string());
                (None, None)
            }
        }
    } else {
        errors.insert("pmh".into(), "graph is disconnected".into());
        (None, None)
    };
    let two_fh = if connected {
        Some(decide::is_2fh(g).verdict)
    } else {
        errors.insert("2fh".into(), "graph is disconnected".into());
        None
    };
    let malleable = if connected {
        match decide::malleable_vertices_with(g, cfg) {
            Ok(v) => Some(v),
            Err(e) => {
                errors.insert("malleable".into(), e.to_string());
                None
            }
        }
    } else {
        errors.insert("malleable".into(), "graph is disconnected".into());
        None
    };
    PropsReport {
        name: label.to_string(),
        n: g.n(),
        m: g.m(),
        connected,
        bipartite: g.is_bipartite().is_some(),
        girth: g.girth(),
        pmh,
        two_fh,
        e2f: decide::is_e2f(g).verdict,
        malleable,
        extension_counts,
        errors,
    }
}

// ---------------------------------------------------------------------------
// construct scripts
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct Script {
    base: GraphRef,
    #[serde(default)]
    ops: Vec<ScriptOp>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GraphRef {
    Name(String),
    Inline {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphRef {
    fn build(&self) -> Result<Graph> {
        match self {
            GraphRef::Name(s) => Ok(make_named(&parse_name(s)?)?),
            GraphRef::Inline { n, edges } => Ok(Graph::new(*n, edges.clone())?),
        }
    }
}

fn default_pairing() -> [usize; 3] {
    [0, 1, 2]
}

fn default_orientation() -> Orientation {
    Orientation::Straight
}

/// Operations are applied left to right; vertex and edge ids refer to the
/// current graph at each step.
#[derive(Deserialize)]
#[serde(tag = "op")]
enum ScriptOp {
    #[serde(rename = "star")]
    Star {
        at: usize,
        attach: GraphRef,
        #[serde(rename = "attachAt")]
        attach_at: usize,
        #[serde(default = "default_pairing")]
        pairing: [usize; 3],
        #[serde(default, rename = "allowTheta")]
        allow_theta: bool,
    },
    #[serde(rename = "y")]
    Y { at: usize },
    #[serde(rename = "2cut")]
    TwoCut {
        #[serde(rename = "atEdge")]
        at_edge: usize,
        attach: GraphRef,
        #[serde(rename = "attachEdge")]
        attach_edge: usize,
        #[serde(default = "default_orientation")]
        orientation: Orientation,
    },
}

fn run_script(script: &Script) -> Result<Graph> {
    let mut g = script.base.build()?;
    for (i, op) in script.ops.iter().enumerate() {
        g = match op {
            ScriptOp::Star {
                at,
                attach,
                attach_at,
                pairing,
                allow_theta,
            } => {
                let attach = attach.build()?;
                let spec = StarSpec {
                    g1: &g,
                    v1: *at,
                    g2: &attach,
                    v2: *attach_at,
                    pairing: *pairing,
                    allow_theta: *allow_theta,
                };
                star_product(&spec)
                    .with_context(|| format!("op {}", i))?
                    .graph
            }
            ScriptOp::Y { at } => {
                y_extension(&g, *at)
                    .with_context(|| format!("op {}", i))?
                    .graph
            }
            ScriptOp::TwoCut {
                at_edge,
                attach,
                attach_edge,
                orientation,
            } => {
                let attach = attach.build()?;
                let spec = TwoCutSpec {
                    g1: &g,
                    e1: *at_edge,
                    g2: &attach,
                    e2: *attach_edge,
                    orientation: *orientation,
                };
                two_cut_connection(&spec)
                    .with_context(|| format!("op {}", i))?
                    .graph
            }
        };
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// scan filter parsing
// ---------------------------------------------------------------------------

fn parse_filter(spec: &str) -> Result<ScanFilter> {
    let mut f = ScanFilter::default();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "bipartite" => f.bipartite = true,
            "cubic" => f.cubic = true,
            "connected" => f.connected = true,
            "pmh" => f.pmh = true,
            _ => {
                if let Some(v) = token.strip_prefix("girth>=") {
                    f.min_girth = Some(v.parse().context("girth bound")?);
                } else if let Some(v) = token.strip_prefix("cyc>=") {
                    f.cyclically_edge_connected = Some(v.parse().context("cyc bound")?);
                } else {
                    bail!("unknown filter token `{}`", token);
                }
            }
        }
    }
    Ok(f)
}

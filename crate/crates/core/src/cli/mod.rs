//! Command-line surface: argument parsing, run configuration, result
//! persistence and report rendering.

mod verify;

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::decomposition::{density_csv, e_i_analysis, triangular_blocks, components_of, EiConvention};
use crate::embedding::io::{parse_graph_lines, read_embedding_json, write_embedding_json};
use crate::embedding::{embed, to_graph6, PlaneGraph};
use crate::error::Error;
use crate::families::{density_rows, generate, CatalogSet};
use crate::graph::Graph;
use crate::patterns::{find_subgraph, PatternSpec};
use crate::search::{enumerate_solid_tbs, exact_planar_turan, SearchConfig, SearchReport, DEFAULT_CEILING};

pub use verify::{run_bundle, BundleLine, Theorem};

#[derive(Debug, Parser)]
#[command(name = "ptl", version, about = "Planar Turán numbers of small graphs built from C3 and Theta4")]
pub struct Cli {
    /// Largest order the exhaustive searches may reach.
    #[arg(long, global = true, env = "PTL_CEILING")]
    pub ceiling: Option<usize>,
    /// Worker threads for `turan` and `tb`.
    #[arg(long, global = true, env = "PTL_WORKERS")]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named family member and run its self-checks.
    Family {
        #[command(subcommand)]
        action: FamilyCmd,
    },
    /// Pattern checks on graphs read from a file.
    Check {
        #[command(subcommand)]
        action: CheckCmd,
    },
    /// Triangular blocks and components of each graph in a file.
    Decompose(DecomposeArgs),
    /// Triangle-density tables.
    Density {
        #[command(subcommand)]
        action: DensityCmd,
    },
    /// Exact planar Turán numbers by exhaustive search.
    Turan {
        #[command(subcommand)]
        action: TuranCmd,
    },
    /// Solid triangular blocks.
    Tb {
        #[command(subcommand)]
        action: TbCmd,
    },
    /// Run the check bundle behind one theorem.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    G6,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    Gen {
        #[arg(long)]
        name: String,
        /// Family parameter as key=value; repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, usize)>,
        #[arg(long, value_enum, default_value = "g6")]
        out: GraphFormat,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    Free {
        #[arg(long)]
        pattern: PatternSpec,
        /// graph6/sparse6 lines, or an embedding .json file.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    IncludeOuter,
    InnerOnly,
}

impl From<Convention> for EiConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::IncludeOuter => EiConvention::IncludeOuter,
            Convention::InnerOnly => EiConvention::InnerOnly,
        }
    }
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "include-outer")]
    pub convention: Convention,
}

#[derive(Debug, Subcommand)]
pub enum DensityCmd {
    Table {
        #[arg(long)]
        set: CatalogSet,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TuranCmd {
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: PatternSpec,
        /// JSONL catalog the record is appended to.
        #[arg(long, default_value = "results.jsonl")]
        catalog: PathBuf,
        /// Directory for the witness .g6 file.
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TbCmd {
    Enumerate {
        #[arg(long)]
        pattern: PatternSpec,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_param(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let v = v.trim().parse().map_err(|_| format!("parameter {k} needs a non-negative integer"))?;
    Ok((k.trim().to_string(), v))
}

/// Settings shared by every command after flags, environment and defaults
/// are merged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub ceiling: usize,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, Error> {
        let ceiling = cli.ceiling.unwrap_or(DEFAULT_CEILING);
        let workers = cli.workers.unwrap_or_else(|| SearchConfig::default().workers);
        if ceiling < 3 {
            return Err(Error::Usage(format!("ceiling must be at least 3, got {ceiling}")));
        }
        if workers == 0 {
            return Err(Error::Usage("worker count must be at least 1".into()));
        }
        Ok(RunConfig { ceiling, workers })
    }

    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            ceiling: self.ceiling,
            workers: self.workers,
        }
    }
}

/// What a command produced: text for stdout and whether its checks passed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            ok: true,
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Family {
            action: FamilyCmd::Gen {
                name,
                params,
                out,
                output,
            },
        } => cmd_family(name, params, *out, output.as_deref()),
        Command::Check {
            action: CheckCmd::Free { pattern, input },
        } => cmd_check(pattern, input),
        Command::Decompose(a) => cmd_decompose(&a.input, a.convention.into()),
        Command::Density {
            action: DensityCmd::Table { set, output },
        } => cmd_density(*set, output.as_deref()),
        Command::Turan {
            action: TuranCmd::Exact {
                n,
                pattern,
                catalog,
                witness_dir,
            },
        } => cmd_turan(*n, pattern, catalog, witness_dir, &cfg),
        Command::Tb {
            action: TbCmd::Enumerate { pattern, max, output },
        } => cmd_tb(pattern, *max, output.as_deref(), &cfg),
        Command::Verify { theorem } => cmd_verify(*theorem, &cfg),
    }
}

fn emit(text: String, output: Option<&Path>) -> Result<String, Error> {
    match output {
        Some(p) => {
            fs::write(p, text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_family(
    name: &str,
    params: &[(String, usize)],
    out: GraphFormat,
    output: Option<&Path>,
) -> Result<Outcome, Error> {
    let params: BTreeMap<String, usize> = params.iter().cloned().collect();
    let inst = generate(name, &params)?;
    let text = match out {
        GraphFormat::G6 => format!("{}\n", to_graph6(inst.plane.graph())),
        GraphFormat::Json => format!("{}\n", write_embedding_json(&inst.plane)),
    };
    Ok(Outcome {
        stdout: emit(text, output)?,
        stderr: inst.report(),
        ok: inst.passed(),
    })
}

enum Input {
    Graphs(Vec<Graph>),
    Plane(PlaneGraph),
}

fn read_input(path: &Path) -> Result<Input, Error> {
    let text = fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        Ok(Input::Plane(read_embedding_json(&text)?))
    } else {
        Ok(Input::Graphs(parse_graph_lines(&text)?))
    }
}

pub fn cmd_check(pattern: &PatternSpec, input: &Path) -> Result<Outcome, Error> {
    let h = pattern.build()?;
    let graphs = match read_input(input)? {
        Input::Graphs(g) => g,
        Input::Plane(pg) => vec![pg.graph().clone()],
    };
    let mut out = String::new();
    let mut ok = true;
    for g in &graphs {
        match find_subgraph(g, &h) {
            None => out.push_str(&format!("{} free\n", to_graph6(g))),
            Some(map) => {
                ok = false;
                let edges: Vec<String> = h.edges().iter().map(|&(a, b)| format!("{}-{}", map[a], map[b])).collect();
                out.push_str(&format!("{} contains {pattern}: {}\n", to_graph6(g), edges.join(" ")));
            }
        }
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        ok,
    })
}

/// Embeds each connected component with an edge; labels map back to `g`.
fn component_planes(g: &Graph) -> Result<Vec<(Vec<usize>, PlaneGraph)>, Error> {
    g.components()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| {
            let pg = embed(&g.induced(&c)).map_err(|_| Error::NonPlanar)?;
            Ok((c, pg))
        })
        .collect()
}

fn decompose_one(out: &mut String, labels: &[usize], pg: &PlaneGraph, conv: EiConvention) -> Result<(), Error> {
    let host = |vs: &[usize]| -> String {
        vs.iter().map(|&v| labels[v].to_string()).collect::<Vec<_>>().join(",")
    };
    let blocks = triangular_blocks(pg)?;
    for (i, b) in blocks.iter().enumerate() {
        let holes: Vec<String> = b.holes.iter().map(|h| format!("[{}]", host(h))).collect();
        out.push_str(&format!(
            "  block {i}: vertices [{}] delta {} rho {} solid {} holes {}\n",
            host(&b.labels),
            b.delta(),
            b.density(),
            b.is_solid(),
            if holes.is_empty() { "none".into() } else { holes.join(" ") }
        ));
    }
    for (i, c) in components_of(blocks).iter().enumerate() {
        let s = c.solidified();
        out.push_str(&format!(
            "  component {i}: vertices [{}] junctions [{}] delta {} rho {} solid rho {}\n",
            host(&c.vertices),
            host(&c.junctions),
            c.delta(),
            c.density(),
            s.density()
        ));
    }
    let a = e_i_analysis(pg, conv)?;
    out.push_str(&format!(
        "  f3 {} |E'| {} |E_I| {} max d_I {}\n",
        a.f3,
        a.e_prime.len(),
        a.e_i.len(),
        a.delta_i
    ));
    Ok(())
}

pub fn cmd_decompose(input: &Path, conv: EiConvention) -> Result<Outcome, Error> {
    let mut out = String::new();
    match read_input(input)? {
        Input::Plane(pg) => {
            out.push_str(&format!("{}\n", to_graph6(pg.graph())));
            let labels: Vec<usize> = (0..pg.order()).collect();
            decompose_one(&mut out, &labels, &pg, conv)?;
        }
        Input::Graphs(graphs) => {
            for g in &graphs {
                out.push_str(&format!("{}\n", to_graph6(g)));
                for (labels, pg) in component_planes(g)? {
                    decompose_one(&mut out, &labels, &pg, conv)?;
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_density(set: CatalogSet, output: Option<&Path>) -> Result<Outcome, Error> {
    let csv = density_csv(&density_rows(set)?);
    Ok(Outcome::ok(emit(csv, output)?))
}

/// Hash of the settings that determine a search result.
pub fn config_hash(n: usize, pattern: &PatternSpec, ceiling: usize) -> String {
    let digest = Sha256::digest(format!("n={n};pattern={pattern};ceiling={ceiling}"));
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// One JSONL line of the results catalog.
#[derive(Serialize)]
struct CatalogRecord<'a> {
    #[serde(flatten)]
    report: &'a SearchReport,
    config_hash: &'a str,
}

/// Appends `line` unless a record with the same n, pattern and config hash
/// is already present. Returns whether it was appended.
fn append_record(catalog: &Path, n: usize, pattern: &str, hash: &str, line: &str) -> Result<bool, Error> {
    if let Ok(existing) = fs::read_to_string(catalog) {
        for l in existing.lines().filter(|l| !l.trim().is_empty()) {
            let v: serde_json::Value = serde_json::from_str(l)?;
            if v["n"] == n && v["pattern"] == pattern && v["config_hash"] == hash {
                return Ok(false);
            }
        }
    }
    let mut f = OpenOptions::new().create(true).append(true).open(catalog)?;
    f.write_all(format!("{line}\n").as_bytes())?;
    Ok(true)
}

pub fn cmd_turan(
    n: usize,
    pattern: &PatternSpec,
    catalog: &Path,
    witness_dir: &Path,
    cfg: &RunConfig,
) -> Result<Outcome, Error> {
    let report = exact_planar_turan(n, pattern, &cfg.search())?;
    let hash = config_hash(n, pattern, cfg.ceiling);
    let line = serde_json::to_string(&CatalogRecord {
        report: &report,
        config_hash: &hash,
    })?;
    let appended = append_record(catalog, n, &report.pattern, &hash, &line)?;
    fs::create_dir_all(witness_dir)?;
    let file = witness_dir.join(format!("ex_{}_n{n}.g6", file_stem(&report.pattern)));
    fs::write(&file, report.witnesses.iter().map(|w| format!("{w}\n")).collect::<String>())?;
    let note = if appended { "appended to" } else { "already in" };
    Ok(Outcome {
        stdout: format!("{line}\n"),
        stderr: format!("{note} {}; witnesses in {}\n", catalog.display(), file.display()),
        ok: true,
    })
}

fn file_stem(pattern: &str) -> String {
    pattern
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

pub fn cmd_tb(pattern: &PatternSpec, max: usize, output: Option<&Path>, cfg: &RunConfig) -> Result<Outcome, Error> {
    let report = enumerate_solid_tbs(max, pattern, &cfg.search())?;
    let ok = report.diff_empty();
    let mut out = Outcome::ok(emit(format!("{}\n", report.to_json()), output)?);
    out.ok = ok;
    if !ok {
        out.stderr = "catalog diff is not empty\n".into();
    }
    Ok(out)
}

pub fn cmd_verify(theorem: Theorem, cfg: &RunConfig) -> Result<Outcome, Error> {
    let lines = run_bundle(theorem, &cfg.search())?;
    let mut out = String::new();
    for l in &lines {
        out.push_str(&format!("{:<28} {} {}\n", l.name, if l.pass { "PASS" } else { "FAIL" }, l.detail));
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        ok: lines.iter().all(|l| l.pass),
    })
}

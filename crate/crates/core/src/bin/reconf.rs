//! `reconf`: generate graphs, compute reconfiguration thresholds, run the
//! constructive algorithms, and check bounds across corpora.
//!
//! Exit codes: 0 success, 1 semantic failure (violated bound, rejected
//! sequence or model), 2 input error, 3 size cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use reconf::construct::{mtj_by_bistable, mtj_by_vertex_cover, mtj_forest, tar_by_fvs, tar_by_pathwidth};
use reconf::detect::{bistable_rank, is_bistable, pumpkin_number, validate_btd_model, Bistability, BtdModel, Refusal};
use reconf::gen::{
    btd_tree_host, complete_bipartite, connected_graphs, corpus_file_name, cycle, pumpkin, random_bipartite,
    super_pumpkin,
};
use reconf::ledger::{check_bounds, cross_validate, ledger_tsv, BoundLedgerRow, LEDGER_COLUMNS};
use reconf::pathdecomp::{nicify, NicePathDecomposition, PathDecomposition};
use reconf::reconfig::{
    mtj_threshold, mtj_threshold_at, tar_threshold, tar_threshold_at, validate_mtj, validate_tar, Sequence,
    ThresholdReport,
};
use reconf::{Error, Graph, Limits, Result, VertexSet};

#[derive(Parser, Debug)]
#[command(name = "reconf", version, about = "Independent-set reconfiguration toolkit")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Largest graph the threshold oracles and sequence searches accept.
    #[arg(long, global = true, default_value_t = Limits::default().oracle)]
    oracle_cap: usize,

    /// Largest graph the exact pathwidth search accepts.
    #[arg(long, global = true, default_value_t = Limits::default().pathwidth)]
    pw_cap: usize,

    /// Seed for pair sampling in cross-validation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Pairs per graph in cross-validation before sampling kicks in.
    #[arg(long, global = true, default_value_t = 200)]
    budget: usize,
}

impl GlobalOpts {
    fn limits(&self) -> Limits {
        Limits {
            oracle: self.oracle_cap,
            pathwidth: self.pw_cap,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph (printed to stdout unless noted).
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Exact reconfiguration threshold by exhaustive search.
    Threshold {
        #[arg(long, value_enum)]
        model: Model,
        /// Report only this set size.
        #[arg(long)]
        size: Option<usize>,
        graph: PathBuf,
    },
    /// Reconfigure I into J with a constructive algorithm.
    Reconfigure {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum)]
        model: Model,
        /// Path decomposition for `--method pw` (default: an optimal one).
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Write the sequence here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        graph: PathBuf,
        source: PathBuf,
        target: PathBuf,
    },
    /// Check a reconfiguration sequence.
    VerifySeq {
        #[arg(long, value_enum)]
        model: Model,
        graph: PathBuf,
        source: PathBuf,
        target: PathBuf,
        sequence: PathBuf,
    },
    /// Structural detectors.
    Detect {
        #[arg(long, value_enum)]
        what: Detector,
        graph: PathBuf,
    },
    /// Check a bipartite theta-decomposition model against its host graph.
    ValidateBtd { host: PathBuf, model: PathBuf },
    /// Compute every parameter for a graph or a directory of `.graph` files
    /// and check the proved bounds.
    CheckBounds { input: PathBuf },
    /// Run every constructor on pairs of independent sets and check ceilings.
    CrossValidate { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Cycle on `len` vertices.
    Cycle { len: usize },
    /// Complete bipartite graph with sides of size `a` and `b`.
    Kbip { a: usize, b: usize },
    /// Pumpkin with the given comma-separated path lengths.
    Pumpkin {
        #[arg(value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
    /// Level-`k` super-pumpkin with exactly two maximum independent sets.
    Superpumpkin { k: u32 },
    /// Host graph with a bipartite theta-decomposition model of a complete
    /// binary tree of depth `d`.
    Btdhost {
        d: u32,
        graph_out: PathBuf,
        model_out: PathBuf,
    },
    /// Seeded random bipartite graph: each cross edge kept with probability `p`.
    Random { nl: usize, nr: usize, p: f64, seed: u64 },
    /// Every connected graph of order `n`, one file each, into `dir`.
    Corpus { n: usize, dir: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Mtj,
    Tar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Vc,
    Bistable,
    Forest,
    Fvs,
    Pw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Detector {
    Bistable,
    Bi,
    Pum,
}

/// Outcome of a command that ran to completion: success or a semantic failure.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let limits = cli.global.limits();
    match &cli.command {
        Command::Gen { family } => gen(family),
        Command::Threshold { model, size, graph } => {
            let g = read_graph(graph)?;
            print!("{}", render_threshold(&g, *model, *size, &limits)?);
            Ok(Outcome::Ok)
        }
        Command::Reconfigure { method, model, decomposition, out, graph, source, target } => {
            let g = read_graph(graph)?;
            let (i, j) = (read_set(&g, source)?, read_set(&g, target)?);
            let p = decomposition.as_deref().map(|path| read_decomposition(&g, path)).transpose()?;
            let seq = reconfigure(&g, &i, &j, *method, *model, p.as_ref(), &limits)?;
            let summary = summarize(&g, &i, &j, &seq, *model)?;
            match out {
                Some(path) => write_file(path, &seq.to_text())?,
                None => print!("{}", seq.to_text()),
            }
            println!("{summary}");
            Ok(Outcome::Ok)
        }
        Command::VerifySeq { model, graph, source, target, sequence } => {
            let g = read_graph(graph)?;
            let (i, j) = (read_set(&g, source)?, read_set(&g, target)?);
            let seq = Sequence::parse(g.n(), &read_file(sequence)?)?;
            match summarize(&g, &i, &j, &seq, *model) {
                Ok(summary) => {
                    println!("valid {summary}");
                    Ok(Outcome::Ok)
                }
                Err(Error::Sequence(e)) => {
                    println!("invalid: {e}");
                    Ok(Outcome::Failed)
                }
                Err(e) => Err(e),
            }
        }
        Command::Detect { what, graph } => {
            let g = read_graph(graph)?;
            print!("{}", detect(&g, *what, &limits)?);
            Ok(Outcome::Ok)
        }
        Command::ValidateBtd { host, model } => {
            let g = read_graph(host)?;
            let m = BtdModel::parse(&read_file(model)?)?;
            match validate_btd_model(&g, &m)? {
                Ok(()) => {
                    println!("valid");
                    Ok(Outcome::Ok)
                }
                Err(v) => {
                    println!("invalid: condition {}: {v}", v.condition());
                    Ok(Outcome::Failed)
                }
            }
        }
        Command::CheckBounds { input } => {
            let graphs = read_corpus(input)?;
            let rows = check_bounds(&graphs, &limits)?;
            print!("{}", ledger_tsv(&rows));
            eprint!("{}", human_table(&rows));
            let mut failed = false;
            for row in &rows {
                for bound in row.failed() {
                    eprintln!("graph {}: bound {bound} fails", row.id);
                    failed = true;
                }
            }
            Ok(if failed { Outcome::Failed } else { Outcome::Ok })
        }
        Command::CrossValidate { input } => {
            let graphs = read_corpus(input)?;
            let report = cross_validate(&graphs, cli.global.budget, cli.global.seed, &limits)?;
            println!("#graph\tmethod\tsource\ttarget\tdetail");
            for v in &report.violations {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    v.graph,
                    v.method.name(),
                    v.source.to_line(),
                    v.target.to_line(),
                    v.detail
                );
            }
            eprintln!(
                "graphs={} pairs={} runs={} violations={}",
                report.graphs,
                report.pairs,
                report.runs,
                report.violations.len()
            );
            Ok(if report.violations.is_empty() { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

fn gen(family: &GenCommand) -> Result<Outcome> {
    let g = match family {
        GenCommand::Cycle { len } => cycle(*len)?,
        GenCommand::Kbip { a, b } => complete_bipartite(*a, *b)?,
        GenCommand::Pumpkin { lengths } => pumpkin(lengths)?.0,
        GenCommand::Superpumpkin { k } => super_pumpkin(*k)?.graph,
        GenCommand::Random { nl, nr, p, seed } => random_bipartite(*nl, *nr, *p, *seed)?,
        GenCommand::Btdhost { d, graph_out, model_out } => {
            let (g, model) = btd_tree_host(*d)?;
            write_file(graph_out, &g.to_text())?;
            write_file(model_out, &model.to_text())?;
            return Ok(Outcome::Ok);
        }
        GenCommand::Corpus { n, dir } => {
            let graphs = connected_graphs(*n)?;
            fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
            for (idx, g) in graphs.iter().enumerate() {
                write_file(&dir.join(corpus_file_name(*n, idx)), &g.to_text())?;
            }
            eprintln!("wrote {} graphs to {}", graphs.len(), dir.display());
            return Ok(Outcome::Ok);
        }
    };
    print!("{}", g.to_text());
    Ok(Outcome::Ok)
}

fn render_threshold(g: &Graph, model: Model, size: Option<usize>, limits: &Limits) -> Result<String> {
    let name = match model {
        Model::Mtj => "mtj",
        Model::Tar => "tar",
    };
    let report = match (model, size) {
        (Model::Mtj, Some(s)) => single_size(s, mtj_threshold_at(g, s, limits.oracle)?),
        (Model::Tar, Some(s)) => single_size(s, tar_threshold_at(g, s, limits.oracle)?),
        (Model::Mtj, None) => mtj_threshold(g, limits.oracle)?,
        (Model::Tar, None) => tar_threshold(g, limits.oracle)?,
    };
    let mut out = format!("#size\t{name}\n");
    for (s, k) in &report.per_size {
        let _ = writeln!(out, "{s}\t{k}");
    }
    let _ = writeln!(out, "overall\t{}", report.overall);
    Ok(out)
}

fn single_size(s: usize, k: usize) -> ThresholdReport {
    ThresholdReport { per_size: vec![(s, k)], overall: k }
}

fn reconfigure(
    g: &Graph,
    i: &VertexSet,
    j: &VertexSet,
    method: Method,
    model: Model,
    decomposition: Option<&NicePathDecomposition>,
    limits: &Limits,
) -> Result<Sequence> {
    let jumps = match method {
        Method::Vc => mtj_by_vertex_cover(g, i, j)?,
        Method::Bistable => mtj_by_bistable(g, i, j)?,
        Method::Forest => mtj_forest(g, i, j)?,
        Method::Fvs | Method::Pw if model == Model::Mtj => {
            return Err(Error::Input(
                "the fvs and pw methods build addition/removal sequences; use --model tar".into(),
            ))
        }
        Method::Fvs => return tar_by_fvs(g, i, j, None, limits.exact),
        Method::Pw => return Ok(tar_by_pathwidth(g, i, j, decomposition, limits.pathwidth)?.sequence),
    };
    Ok(match model {
        Model::Mtj => jumps,
        Model::Tar => jumps.jumps_to_unit_steps(),
    })
}

fn summarize(g: &Graph, i: &VertexSet, j: &VertexSet, seq: &Sequence, model: Model) -> Result<String> {
    Ok(match model {
        Model::Mtj => format!("max_jump={}", validate_mtj(g, i, j, seq)?),
        Model::Tar => format!("max_buffer={}", validate_tar(g, i, j, seq)?),
    })
}

fn detect(g: &Graph, what: Detector, limits: &Limits) -> Result<String> {
    let mut out = String::new();
    match what {
        Detector::Bistable => match is_bistable(g, limits.oracle)? {
            Bistability::Bistable(w) => {
                let _ = writeln!(out, "bistable=true rank={}", w.rank());
                let _ = writeln!(out, "left={}", w.left.to_line());
                let _ = writeln!(out, "right={}", w.right.to_line());
            }
            Bistability::Refused(reason) => {
                let reason = match reason {
                    Refusal::Empty => "empty".to_string(),
                    Refusal::Disconnected => "disconnected".to_string(),
                    Refusal::NotBipartite { odd_cycle } => format!("odd cycle {}", join(&odd_cycle)),
                    Refusal::MaximumSets { found } => format!(
                        "maximum independent sets {}",
                        found.iter().map(VertexSet::to_line).collect::<Vec<_>>().join(" | ")
                    ),
                };
                let _ = writeln!(out, "bistable=false reason={reason}");
            }
        },
        Detector::Bi => {
            let report = bistable_rank(g, limits.detect)?;
            let _ = writeln!(out, "bi={}", report.rank);
            let witness = report.witness.map_or_else(|| "-".to_string(), |w| w.to_line());
            let _ = writeln!(out, "witness={witness}");
        }
        Detector::Pum => {
            let (size, witness) = pumpkin_number(g, limits.detect)?;
            let _ = writeln!(out, "pum={size}");
            if let Some(w) = witness {
                let _ = writeln!(out, "terminals={} {}", w.u, w.v);
                for p in &w.paths {
                    let _ = writeln!(out, "path={}", join(p));
                }
            }
        }
    }
    Ok(out)
}

fn human_table(rows: &[BoundLedgerRow]) -> String {
    let widths: Vec<usize> = LEDGER_COLUMNS
        .iter()
        .enumerate()
        .map(|(c, h)| {
            rows.iter()
                .map(|r| r.to_tsv().split('\t').nth(c).map_or(0, str::len))
                .max()
                .unwrap_or(0)
                .max(h.len())
        })
        .collect();
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(LEDGER_COLUMNS.to_vec());
    for r in rows {
        let tsv = r.to_tsv();
        line(tsv.split('\t').collect());
    }
    let failing = rows.iter().filter(|r| !r.passes()).count();
    let _ = writeln!(out, "{} graphs, {failing} with failed bounds", rows.len());
    out
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Input(format!("{}: {e}", path.display()))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read_file(path)?)
}

fn read_set(g: &Graph, path: &Path) -> Result<VertexSet> {
    VertexSet::parse_text(g.n(), &read_file(path)?)
}

fn read_decomposition(g: &Graph, path: &Path) -> Result<NicePathDecomposition> {
    let p = PathDecomposition::parse(g.n(), &read_file(path)?)?;
    nicify(g, &p)
}

/// A single graph file, or every `.graph` file of a directory in file-name
/// order; ids are file stems.
fn read_corpus(path: &Path) -> Result<Vec<(String, Graph)>> {
    let stem = |p: &Path| p.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    if !path.is_dir() {
        return Ok(vec![(stem(path), read_graph(path)?)]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| io_error(path, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    files.sort();
    files.iter().map(|p| Ok((stem(p), read_graph(p)?))).collect()
}

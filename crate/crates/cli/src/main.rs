use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use srg_core::euclid::{gram_at, gram_determinant, kernel_certificate, psd_w_range_strict, PartitionSpec};
use srg_core::exact::EigenSign;
use srg_core::graph::clique::{is_clique, max_clique, max_clique_with_symmetry};
use srg_core::graph::subset::{build_subset_graph, fixed_cycle, CycleSymmetry};
use srg_core::graph::graph6;
use srg_core::params::{derive_spectrum, representation_dots_surd, RepDots, Side, SrgParams};
use srg_core::zonal::{k4_lower_bound, k4_table, k4_table_tsv, BoundDirection};
use srg_core::{proof, Rational};

/// `println!` that exits quietly once stdout is closed, e.g. by `head`.
macro_rules! out {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(name = "srg", version, about = "Exact analysis of strongly regular graph parameters")]
struct Cli {
    /// Worker threads (default: all cores; overrides SRG_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct ParamArgs {
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

impl ParamArgs {
    fn params(&self) -> Result<SrgParams, CliError> {
        SrgParams::new(self.v, self.k, self.lambda, self.mu).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, feasibility flags and representation dot products.
    Params {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lower bound on the number of 4-cliques from the zonal kernel.
    K4bound {
        #[command(flatten)]
        p: ParamArgs,
        /// Degree of the zonal kernel.
        #[arg(long, default_value_t = 4)]
        t: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// TSV of every admissible parameter set with a nontrivial bound.
    K4table {
        #[arg(long, default_value_t = 1300)]
        max_v: u64,
    },
    /// Gram determinant, admissible unknowns and kernels for a partition spec.
    Gram {
        /// PartitionSpec JSON file.
        #[arg(long)]
        spec: PathBuf,
        /// Dot product of adjacent vertices, e.g. -4/15.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Dot product of non-adjacent vertices, e.g. 7/45.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Inclusive range of the unknown w.
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_hyphen_values = true)]
        w_range: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Maximum clique of a graph6 graph (first graph of the file).
    Clique {
        #[arg(long)]
        graph6: PathBuf,
        /// Never use the known symmetry group of the 8-subset graph.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Re-verify the non-existence of SRG(76,30,8,14).
    Prove76 {
        /// Glob over stage ids, e.g. 'sec7-*'.
        #[arg(long)]
        stage: Option<String>,
        /// Write the JSON proof log to this file ('-' for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record per-stage wall-clock times in the log.
        #[arg(long)]
        timings: bool,
        /// List the stage ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Write the 8-subset graph around the fixed 4-cycle as graph6.
    SubsetGraph {
        #[arg(long)]
        out: PathBuf,
    },
    /// Write every H1 ∪ H2 candidate as graph6, one per line.
    Hpairs {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("verification failed")]
    Verification,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Input(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    fn io(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
        move |source| CliError::Io { path: path.to_path_buf(), source }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {e}");
        return ExitCode::from(e.code());
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), CliError> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var("SRG_THREADS") {
            Ok(s) => Some(s.trim().parse().map_err(|_| CliError::Input(format!("SRG_THREADS={s:?} is not a thread count")))?),
            Err(_) => None,
        },
    };
    if let Some(n) = n {
        if n == 0 {
            return Err(CliError::Input("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Params { p, format } => cmd_params(&p.params()?, format),
        Command::K4bound { p, t, format } => cmd_k4bound(&p.params()?, t, format),
        Command::K4table { max_v } => {
            let rows = k4_table(max_v).map_err(|e| CliError::Input(e.to_string()))?;
            if std::io::stdout().write_all(k4_table_tsv(&rows).as_bytes()).is_err() {
                std::process::exit(0);
            }
            Ok(())
        }
        Command::Gram { spec, p, q, w_range, format } => cmd_gram(&spec, &p, &q, w_range.as_deref(), format),
        Command::Clique { graph6, no_symmetry } => cmd_clique(&graph6, no_symmetry),
        Command::Prove76 { stage, json, timings, list } => cmd_prove76(stage.as_deref(), json.as_deref(), timings, list),
        Command::SubsetGraph { out } => {
            let (_, g) = build_subset_graph(&fixed_cycle());
            write_file(&out, &(graph6::encode(&g) + "\n"))
        }
        Command::Hpairs { out } => {
            let text: String = srg_core::graph::hpairs::enumerate_h_pairs().iter().map(|h| graph6::encode(&h.graph) + "\n").collect();
            write_file(&out, &text)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        std::io::stdout().write_all(text.as_bytes()).map_err(CliError::io(path))
    } else {
        fs::write(path, text).map_err(CliError::io(path))
    }
}

fn cmd_params(params: &SrgParams, format: Format) -> Result<(), CliError> {
    let sp = derive_spectrum(params);
    let primal = representation_dots_surd(params, Side::PrimalInG).map_err(|e| CliError::Input(e.to_string()))?;
    let dual = representation_dots_surd(params, Side::DualInF).map_err(|e| CliError::Input(e.to_string()))?;
    match format {
        Format::Json => {
            let v = json!({
                "params": [params.v(), params.k(), params.lambda(), params.mu()],
                "r": sp.r.to_string(), "s": sp.s.to_string(), "f": sp.f.to_string(), "g": sp.g.to_string(),
                "discriminant": sp.discriminant,
                "integral_eigenvalues": sp.integral_eigenvalues,
                "feasible": sp.feasible,
                "conference": sp.conference,
                "primal": { "p": primal.p.to_string(), "q": primal.q.to_string() },
                "dual": { "p": dual.p.to_string(), "q": dual.q.to_string() },
            });
            out!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
        }
        Format::Text => {
            out!("params {params}");
            out!("r={} f={} s={} g={}", sp.r, sp.f, sp.s, sp.g);
            out!("discriminant={} integral_eigenvalues={} feasible={} conference={}", sp.discriminant, sp.integral_eigenvalues, sp.feasible, sp.conference);
            out!("primal p={} q={}", primal.p, primal.q);
            out!("dual p={} q={}", dual.p, dual.q);
        }
    }
    Ok(())
}

fn cmd_k4bound(params: &SrgParams, t: usize, format: Format) -> Result<(), CliError> {
    let b = k4_lower_bound(params, t).map_err(|e| CliError::Input(e.to_string()))?;
    let trivial = b.direction == BoundDirection::Vacuous || !b.certifies_k4();
    let raw = b.raw_bound.as_ref().map(ToString::to_string);
    let int = b.integer_bound.as_ref().map(ToString::to_string);
    match format {
        Format::Json => {
            let v = json!({ "params": [params.v(), params.k(), params.lambda(), params.mu()], "t": t, "raw": raw, "integer": int, "trivial": trivial });
            out!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
        }
        Format::Text => {
            match (&raw, &int) {
                (Some(r), Some(n)) => out!("{params} t={t}: N >= {r} -> N >= {n}"),
                _ => out!("{params} t={t}: no lower bound"),
            }
            if trivial {
                out!("trivial");
            }
        }
    }
    Ok(())
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|_| CliError::Input(format!("--{name} {s:?} is not a rational number")))
}

fn read_spec(path: &Path) -> Result<PartitionSpec, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let spec: PartitionSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = e.path().iter().map(|seg| format!("/{}", seg.to_string().trim_matches(|c| c == '[' || c == ']'))).collect::<String>();
        CliError::Input(format!("{}: invalid spec at '{}': {}", path.display(), pointer, e.inner()))
    })?;
    spec.validate().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(spec)
}

/// Largest value the unknown can take before some count leaves its range.
fn default_w_max(spec: &PartitionSpec) -> i64 {
    let l = spec.sizes.len();
    let mut cap = 0;
    for i in 0..l {
        for j in 0..l {
            let (mi, mj) = (spec.sizes[i] as i64, spec.sizes[j] as i64);
            cap = cap.max(if i == j { mi * (mi - 1) / 2 } else { mi * mj });
        }
    }
    cap
}

fn cmd_gram(path: &Path, p: &str, q: &str, w_range: Option<&[i64]>, format: Format) -> Result<(), CliError> {
    let spec = read_spec(path)?;
    let dots = RepDots::new(parse_rational("p", p)?, parse_rational("q", q)?, Side::PrimalInG);
    let det = gram_determinant(&spec, &dots);
    let (lo, hi) = match w_range {
        Some([lo, hi]) if lo <= hi => (*lo, *hi),
        Some(r) => return Err(CliError::Input(format!("--w-range {r:?} is empty"))),
        None if spec.is_symbolic() => (0, default_w_max(&spec)),
        None => (0, 0),
    };
    let admissible: Vec<i64> = psd_w_range_strict(&spec, &dots, lo, hi).into_iter().filter(|&w| spec.admissible_at(w)).collect();
    let kernels: Vec<(i64, Vec<Rational>)> = admissible
        .iter()
        .filter_map(|&w| kernel_certificate(&spec, &dots, w).ok().map(|k| (w, k.lambda)))
        .collect();
    let feasible = !admissible.is_empty();
    match format {
        Format::Json => {
            let v = json!({
                "det": det.render("w"),
                "symbolic": spec.is_symbolic(),
                "w_range": [lo, hi],
                "admissible": admissible,
                "kernels": kernels.iter().map(|(w, l)| json!({ "w": w, "lambda": l.iter().map(ToString::to_string).collect::<Vec<_>>() })).collect::<Vec<_>>(),
                "feasible": feasible,
            });
            out!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
        }
        Format::Text => {
            out!("det = {}", det.render("w"));
            if spec.is_symbolic() {
                let list: Vec<String> = admissible.iter().map(ToString::to_string).collect();
                out!("admissible w in [{lo}, {hi}]: {{{}}}", list.join(", "));
            } else {
                let sign = gram_at(&spec, &dots, 0).min_eigen_sign().map_err(|e| CliError::Input(e.to_string()))?;
                out!("gram is {}", if sign == EigenSign::ZeroOrPositive { "positive semidefinite" } else { "not positive semidefinite" });
            }
            for (w, lambda) in &kernels {
                let l: Vec<String> = lambda.iter().map(ToString::to_string).collect();
                out!("kernel at w={w}: ({})", l.join(", "));
            }
            out!("{}", if feasible { "feasible" } else { "infeasible" });
        }
    }
    Ok(())
}

fn cmd_clique(path: &Path, no_symmetry: bool) -> Result<(), CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let g = graph6::decode_many(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Input(format!("{}: no graph", path.display())))?;
    let (verts, subset_graph) = build_subset_graph(&fixed_cycle());
    // the 8-subset graph is searched one orbit at a time under its stabiliser
    let c = if !no_symmetry && g == subset_graph {
        eprintln!("recognised the 8-subset graph; pruning by its symmetry group");
        max_clique_with_symmetry(&g, &CycleSymmetry::new(&verts))
    } else {
        max_clique(&g)
    };
    if !is_clique(&g, &c.vertices) {
        return Err(CliError::Verification);
    }
    out!("{}", c.size);
    let w: Vec<String> = c.vertices.iter().map(ToString::to_string).collect();
    out!("witness {}", w.join(" "));
    Ok(())
}

fn cmd_prove76(stage: Option<&str>, json_out: Option<&Path>, timings: bool, list: bool) -> Result<(), CliError> {
    if list {
        for id in proof::stage_ids() {
            out!("{id}");
        }
        return Ok(());
    }
    let mut opts = proof::RunOptions::default();
    if timings {
        opts = opts.with_timings();
    }
    let log = match stage {
        Some(pattern) => proof::run_filtered(pattern, &opts).map_err(|e| CliError::Input(e.to_string()))?,
        None => proof::run_all_with(&opts),
    };
    let to_stdout = json_out == Some(Path::new("-"));
    if !to_stdout {
        for s in &log.stages {
            let passed = s.claims.iter().filter(|c| c.pass).count();
            let t = if timings { format!(" {}ms", s.elapsed_ms) } else { String::new() };
            out!("{:<5} {:<22} {passed}/{} claims{t}", if s.pass() { "ok" } else { "FAIL" }, s.id, s.claims.len());
            for c in s.failures() {
                out!("      {}: expected {} computed {}", c.key, c.expected, c.computed);
            }
        }
        let verdict = if log.verdict == proof::Verdict::Pass { "pass" } else { "fail" };
        out!("verdict: {verdict}");
        out!("conclusion (all exact certificates hold): {}", log.conclusion);
    }
    if let Some(path) = json_out {
        write_file(path, &(log.to_json() + "\n"))?;
    }
    if log.verdict == proof::Verdict::Pass {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

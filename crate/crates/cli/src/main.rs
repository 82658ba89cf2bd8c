use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use rgirth::bounds::{
    alpha_upper_reference, eq1_lhs, feasible_params, gamma_threshold, GammaParams, ParameterSet,
};
use rgirth::finders::{
    find_matching_edge_sampled, find_matchings_appendix, find_mixed_with, find_simplified,
    find_triangle_edge, FinderRun, MixedConfig, DEFAULT_MAX_RETRIES,
};
use rgirth::generators::{gen_half_matchings_gadget, gen_rainbow_ncycle, gen_random_mixed, InstanceSpec};
use rgirth::harness::{
    run_lemma_empirics, run_scaling, to_text, write_csv, ExperimentSpec, Family, DEFAULT_ALPHA,
};
use rgirth::instance::{parse_instance, serialize_instance};
use rgirth::oracle::{girth_bfs, rainbow_girth_exact};
use rgirth::sparse_cycle::bs_bound;
use rgirth::{ClassKind, ColoredGraph, CycleResult};

/// Rainbow cycles in edge-colored graphs: generators, exact search, finders and experiments.
#[derive(Parser, Debug)]
#[command(name = "rgirth", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an instance file.
    Gen(GenArgs),
    /// Exact rainbow girth of a small instance.
    Exact(ExactArgs),
    /// Run a short-rainbow-cycle finder on an instance.
    Find(FindArgs),
    /// Print parameter sets and thresholds.
    Bounds(BoundsArgs),
    /// Run a seeded experiment grid.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFamily {
    Gadget,
    Ncycle,
    Mixed,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Mixed family: matching fraction when no counts are given.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    matchings: Option<usize>,
    #[arg(long)]
    triangles: Option<usize>,
    #[arg(long)]
    singles: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    file: PathBuf,
    /// Longest cycle to look for.
    #[arg(long)]
    cutoff: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FindAlgo {
    Sampled,
    Simplified,
    Triangle,
    Appendix,
    Mixed,
}

#[derive(Args, Debug)]
struct FindArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    algo: FindAlgo,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    retries: usize,
    /// Sampling finders: matching fraction to derive parameters from
    /// (default: the instance's own fraction).
    #[arg(long)]
    params_from_alpha: Option<f64>,
    /// Matching-only finder: color fraction (default: m / n).
    #[arg(long)]
    gamma: Option<f64>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// Vertex count for the sparse-graph girth bound.
    #[arg(long, requires = "k")]
    n: Option<usize>,
    /// Edge excess for the sparse-graph girth bound.
    #[arg(long, requires = "n")]
    k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExperimentKind {
    Scaling,
    Empirics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(value_enum)]
    kind: ExperimentKind,
    /// gadget, ncycle, mixed or matchings-only.
    #[arg(long)]
    family: String,
    /// Comma-separated ascending vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// exact, sampled, simplified, triangle, appendix or mixed.
    #[arg(long, default_value = "exact")]
    algo: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    retries: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn load(path: &Path) -> Result<ColoredGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn cycle_lines(c: &CycleResult) -> String {
    format!(
        "length={}\nrainbow={}\nvertices={}\ncolors={}\n",
        c.length,
        c.rainbow,
        join(&c.vertices, ","),
        join(c.colors(), ",")
    )
}

fn gen(args: &GenArgs) -> Result<()> {
    let g = match args.family {
        GenFamily::Gadget => gen_half_matchings_gadget(args.n)?,
        GenFamily::Ncycle => gen_rainbow_ncycle(args.n)?,
        GenFamily::Mixed => {
            let counts = [args.matchings, args.triangles, args.singles];
            let (matchings, triangles, singles) = if counts.iter().any(Option::is_some) {
                (args.matchings.unwrap_or(0), args.triangles.unwrap_or(0), args.singles.unwrap_or(0))
            } else {
                let alpha = args.alpha.unwrap_or(DEFAULT_ALPHA);
                if !(0.0..=1.0).contains(&alpha) {
                    bail!("alpha={alpha} outside [0, 1]");
                }
                let m = (alpha * args.n as f64).round() as usize;
                (m, 0, args.n - m)
            };
            gen_random_mixed(&InstanceSpec { n: args.n, matchings, triangles, singles, seed: args.seed })?
        }
    };
    emit(args.out.as_deref(), &serialize_instance(&g))
}

fn exact(args: &ExactArgs) -> Result<()> {
    let g = load(&args.file)?;
    let mut text = format!("n={}\nm={}\n", g.n(), g.m());
    text += &match girth_bfs(&g) {
        Some(girth) => format!("girth={girth}\n"),
        None => "girth=none\n".into(),
    };
    text += &match rainbow_girth_exact(&g, args.cutoff) {
        Some(c) => cycle_lines(&c),
        None => "length=none\n".into(),
    };
    emit(None, &text)
}

fn sampler_params(g: &ColoredGraph, alpha: Option<f64>) -> Result<ParameterSet> {
    let alpha = alpha.unwrap_or(g.count_kind(ClassKind::Matching2) as f64 / g.n() as f64);
    feasible_params(alpha, None)?.ok_or_else(|| anyhow!("no feasible parameters at alpha={alpha}"))
}

fn find(args: &FindArgs) -> Result<()> {
    let g = load(&args.file)?;
    let run: FinderRun = match args.algo {
        FindAlgo::Sampled => {
            find_matching_edge_sampled(&g, &sampler_params(&g, args.params_from_alpha)?, args.seed, args.retries)?
        }
        FindAlgo::Simplified => {
            find_simplified(&g, &sampler_params(&g, args.params_from_alpha)?, args.seed, args.retries)?
        }
        FindAlgo::Triangle => find_triangle_edge(&g, args.seed)?,
        FindAlgo::Appendix => {
            let gamma = args.gamma.unwrap_or(g.m() as f64 / g.n() as f64);
            find_matchings_appendix(&g, gamma, args.seed, args.retries)?
        }
        FindAlgo::Mixed => {
            let config = MixedConfig { max_retries: args.retries, ..MixedConfig::default() };
            find_mixed_with(&g, args.seed, &config)?
        }
    };
    let cert = &run.certificate;
    let mut text = cycle_lines(&run.cycle);
    text += &format!("span={}\nselected={}\n", cert.span, cert.selected_edges);
    if let Some(b) = cert.bound {
        text += &format!("bound={b}\n");
    }
    text += &format!("trials={}\n", run.trials.len());
    if !run.repair_lengths.is_empty() {
        text += &format!("pre_repair={}\nrepairs={}\n", run.pre_repair_length, join(&run.repair_lengths, ","));
    }
    emit(None, &text)
}

fn bounds(args: &BoundsArgs) -> Result<()> {
    let mut text = String::new();
    if let Some(alpha) = args.alpha {
        text += &format!("alpha={alpha}\n");
        match feasible_params(alpha, None)? {
            Some(ps) => {
                text += &format!(
                    "xi={}\nepsilon={}\np={}\nc={}\nbeta={}\nmargin={}\neq1_lhs={}\n",
                    ps.xi,
                    ps.epsilon,
                    ps.p,
                    ps.c,
                    ps.beta,
                    ps.margin(),
                    eq1_lhs(alpha, ps.p)?
                );
            }
            None => text += "feasible=false\n",
        }
    }
    if let Some(gamma) = args.gamma {
        let gp = GammaParams::new(gamma)?;
        text += &format!("gamma={gamma}\ngamma_prime={}\nadmissible={}\n", gp.gamma_prime, gp.admissible());
    }
    if let (Some(n), Some(k)) = (args.n, args.k) {
        text += &format!("bs_bound={}\n", bs_bound(n, k)?);
    }
    text += &format!("gamma_threshold={}\nalpha_upper_reference={}\n", gamma_threshold(), alpha_upper_reference());
    emit(None, &text)
}

fn experiment(args: &ExperimentArgs) -> Result<()> {
    let family: Family = args.family.parse()?;
    let alpha_mix = match family {
        Family::MatchingsOnly => args.gamma.or(args.alpha),
        _ => args.alpha,
    };
    let spec = ExperimentSpec {
        family,
        n_grid: args.n.clone(),
        trials: args.trials,
        algo: args.algo.parse()?,
        master_seed: args.seed,
        alpha_mix,
        retries: args.retries,
    };
    let rows = match args.kind {
        ExperimentKind::Scaling => run_scaling(&spec)?,
        ExperimentKind::Empirics => run_lemma_empirics(&spec)?,
    };
    let text = match args.format {
        Format::Text => to_text(&rows),
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            String::from_utf8(buf)?
        }
    };
    emit(args.out.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Exact(a) => exact(a),
        Command::Find(a) => find(a),
        Command::Bounds(a) => bounds(a),
        Command::Experiment(a) => experiment(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

//! Command-line front end: `generate`, `cluster`, `sweep`, `voronoi`, `alpha`.
//!
//! Every setting resolves as command-line flag, then `--manifest` JSON
//! field, then built-in default. Results go to files under `--output-dir`
//! plus one JSON summary on stdout. Failures print `{"error","kind"}` JSON
//! on stderr and exit nonzero; so do runs whose SDP solves did not converge.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::mixture::{sample_mixture, MixtureSpec, PointCloud};
use crate::pipeline::{relax_and_round, sweep, PipelineConfig, Rounding, SweepSpec};
use crate::sdp::SolverConfig;
use crate::voronoi::{
    alpha, check_alpha_monotonicity, run_voronoi_experiment, write_alpha_csv, AlphaMethod, AlphaQuery, AlphaRow,
    VoronoiExperimentSpec,
};

const PRECEDENCE: &str = "Settings resolve as: command-line flag, then --manifest field, then default.";

#[derive(Debug, Parser)]
#[command(name = "kmeans-sdp", version, about = "k-means clustering by semidefinite relaxation and rounding", after_help = PRECEDENCE)]
pub struct Cli {
    /// JSON file with default values for any flag (snake_case keys, e.g. "max_iter").
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a mixture from a JSON spec and write points.csv.
    #[command(after_help = PRECEDENCE)]
    Generate(GenerateArgs),
    /// Relax-and-round clustering of a points CSV.
    #[command(after_help = PRECEDENCE)]
    Cluster(ClusterArgs),
    /// Denoising and recovery across a grid of separations; writes sweep.csv.
    #[command(after_help = PRECEDENCE)]
    Sweep(SweepArgs),
    /// k-means++ centroids versus Voronoi means on an orthoplex mixture; writes voronoi.csv.
    #[command(after_help = PRECEDENCE)]
    Voronoi(VoronoiArgs),
    /// The Voronoi-mean coefficient alpha_d(c), optionally tabulated on a grid.
    #[command(after_help = PRECEDENCE)]
    Alpha(AlphaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoundArg {
    Ball,
    Popular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
pub enum MethodArg {
    #[serde(rename = "quadrature")]
    Quadrature,
    #[serde(rename = "mc", alias = "monte_carlo")]
    Mc,
}

#[derive(Debug, Default, Args)]
pub struct SolverArgs {
    /// Solver tolerance [default: 1e-6]
    #[arg(long)]
    pub tol: Option<f64>,
    /// Iteration cap [default: 20000]
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Initial ADMM penalty [default: 1]
    #[arg(long)]
    pub rho: Option<f64>,
    /// Over-relaxation factor in [1, 2) [default: 1.6]
    #[arg(long)]
    pub over_relax: Option<f64>,
}

#[derive(Debug, Default, Args)]
pub struct RoundingArgs {
    /// Rounding scheme [default: ball]
    #[arg(long = "round", value_enum)]
    pub round: Option<RoundArg>,
    /// Ball radius [default: a tenth of the spread of the popular denoised locations]
    #[arg(long)]
    pub epsilon: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Mixture spec JSON
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// [default: .]
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// Overrides the seed stored in the spec
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    /// Points CSV (optional `label` column)
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// [default: .]
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Also write denoised.csv
    #[arg(long)]
    pub denoised: bool,
    /// Also write distances.csv and sdp_x.csv
    #[arg(long)]
    pub matrices: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub rounding: RoundingArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// [default: .]
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// Ambient dimension [default: 50]
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of simplex centers [default: 3]
    #[arg(long)]
    pub k: Option<usize>,
    /// Points per center [default: 100]
    #[arg(long)]
    pub n: Option<usize>,
    /// [default: 1]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Comma-separated Delta/sigma values [default: 2,4,6,8,10,15,20]
    #[arg(long, value_delimiter = ',')]
    pub ratios: Option<Vec<f64>>,
    /// Trials per separation [default: 10]
    #[arg(long)]
    pub trials: Option<usize>,
    /// [default: 0]
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub rounding: RoundingArgs,
}

#[derive(Debug, Args)]
pub struct VoronoiArgs {
    /// [default: .]
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// Dimension; the mixture has 2d components [default: 2]
    #[arg(long)]
    pub d: Option<usize>,
    /// [default: 1]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Points per center [default: 10000]
    #[arg(long)]
    pub n: Option<usize>,
    /// [default: 30]
    #[arg(long)]
    pub trials: Option<usize>,
    /// k-means++ restarts per trial [default: 10]
    #[arg(long)]
    pub restarts: Option<usize>,
    /// [default: 0]
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct AlphaArgs {
    /// When set with --grid, alpha.csv is written here
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// [default: 2]
    #[arg(long)]
    pub d: Option<usize>,
    /// Center scale [default: 1]
    #[arg(long)]
    pub c: Option<f64>,
    /// [default: 1]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// [default: quadrature]
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Monte Carlo samples or quadrature panel budget [default: 1000000 or 4000]
    #[arg(long)]
    pub samples: Option<usize>,
    /// [default: 0]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated c values; tabulates alpha_d(c) and checks alpha_d(c) >= alpha_d(0)
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
}

/// Manifest file: any subset of the flags, keyed in snake_case.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub command: Option<String>,
    pub input: Option<PathBuf>,
    pub output_dir: Option<PathBuf>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub max_iter: Option<usize>,
    pub rho: Option<f64>,
    pub over_relax: Option<f64>,
    pub epsilon: Option<f64>,
    pub round: Option<RoundArg>,
    pub trials: Option<usize>,
    pub restarts: Option<usize>,
    pub method: Option<MethodArg>,
    pub samples: Option<usize>,
    pub d: Option<usize>,
    pub c: Option<f64>,
    pub sigma: Option<f64>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub ratios: Option<Vec<f64>>,
    pub grid: Option<Vec<f64>>,
    pub denoised: Option<bool>,
    pub matrices: Option<bool>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let de = &mut serde_json::Deserializer::from_str(&text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            Error::InvalidArgument(format!("manifest {}: field `{}`: {}", path.display(), e.path(), e.inner()))
        })
    }
}

fn pick<T>(flag: Option<T>, manifest: Option<T>, default: T) -> T {
    flag.or(manifest).unwrap_or(default)
}

fn required<T>(flag: Option<T>, manifest: Option<T>, name: &str) -> Result<T> {
    flag.or(manifest)
        .ok_or_else(|| Error::InvalidArgument(format!("--{name} is required (flag or manifest)")))
}

/// JSON summary for stdout, plus a deferred failure that still sets the exit code.
pub struct Outcome {
    pub summary: Value,
    pub failure: Option<Error>,
}

impl Outcome {
    fn ok(summary: Value) -> Self {
        Outcome { summary, failure: None }
    }
}

fn solver_config(a: &SolverArgs, m: &Manifest) -> Result<SolverConfig> {
    let d = SolverConfig::default();
    let cfg = SolverConfig {
        tol: pick(a.tol, m.tol, d.tol),
        max_iter: pick(a.max_iter, m.max_iter, d.max_iter),
        rho: pick(a.rho, m.rho, d.rho),
        over_relaxation: pick(a.over_relax, m.over_relax, d.over_relaxation),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn pipeline_config(k: usize, s: &SolverArgs, r: &RoundingArgs, m: &Manifest) -> Result<PipelineConfig> {
    Ok(PipelineConfig {
        k,
        solver: solver_config(s, m)?,
        rounding: match pick(r.round, m.round, RoundArg::Ball) {
            RoundArg::Ball => Rounding::Ball,
            RoundArg::Popular => Rounding::Popular,
        },
        epsilon: r.epsilon.or(m.epsilon),
    })
}

fn output_dir(flag: &Option<PathBuf>, m: &Manifest) -> Result<PathBuf> {
    let dir = pick(flag.clone(), m.output_dir.clone(), PathBuf::from("."));
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Generate(_) => "generate",
        Command::Cluster(_) => "cluster",
        Command::Sweep(_) => "sweep",
        Command::Voronoi(_) => "voronoi",
        Command::Alpha(_) => "alpha",
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let manifest = match &cli.manifest {
        Some(p) => Manifest::load(p)?,
        None => Manifest::default(),
    };
    let name = command_name(&cli.command);
    if let Some(c) = &manifest.command {
        if c != name {
            return Err(Error::InvalidArgument(format!("manifest is for `{c}`, not `{name}`")));
        }
    }
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, &manifest),
        Command::Cluster(a) => cmd_cluster(a, &manifest),
        Command::Sweep(a) => cmd_sweep(a, &manifest),
        Command::Voronoi(a) => cmd_voronoi(a, &manifest),
        Command::Alpha(a) => cmd_alpha(a, &manifest),
    }
}

pub fn cmd_generate(a: &GenerateArgs, m: &Manifest) -> Result<Outcome> {
    let input = required(a.input.clone(), m.input.clone(), "input")?;
    let mut spec = MixtureSpec::from_json_str(&fs::read_to_string(&input)?)?;
    if let Some(seed) = a.seed.or(m.seed) {
        spec.seed = seed;
    }
    let cloud = sample_mixture(&spec)?;
    let path = output_dir(&a.output_dir, m)?.join("points.csv");
    cloud.write_csv(create(&path)?)?;
    Ok(Outcome::ok(json!({
        "output": path,
        "n": cloud.len(),
        "m": cloud.dim(),
        "k": spec.k(),
        "delta_min": finite_or_null(spec.delta_min()),
        "sigma_max": spec.sigma_max(),
        "seed": spec.seed,
    })))
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

pub fn cmd_cluster(a: &ClusterArgs, m: &Manifest) -> Result<Outcome> {
    let input = required(a.input.clone(), m.input.clone(), "input")?;
    let k = required(a.k, m.k, "k")?;
    let cfg = pipeline_config(k, &a.solver, &a.rounding, m)?;
    let cloud = PointCloud::read_csv(File::open(&input)?)?;
    let out = relax_and_round(&cloud, &cfg)?;
    let dir = output_dir(&a.output_dir, m)?;

    let mut outputs = vec![dir.join("clustering.json"), dir.join("report.json")];
    serde_json::to_writer_pretty(create(&outputs[0])?, &out.clustering)?;
    serde_json::to_writer_pretty(create(&outputs[1])?, &out.report)?;
    if a.denoised || m.denoised.unwrap_or(false) {
        let p = dir.join("denoised.csv");
        out.denoised.write_csv(create(&p)?)?;
        outputs.push(p);
    }
    if a.matrices || m.matrices.unwrap_or(false) {
        let p = dir.join("distances.csv");
        out.distances.write_csv(create(&p)?)?;
        outputs.push(p);
        let p = dir.join("sdp_x.csv");
        out.solution.write_csv(create(&p)?)?;
        outputs.push(p);
    }

    let summary = json!({
        "status": out.solution.status,
        "iterations": out.solution.iterations,
        "sdp_objective": out.solution.objective,
        "residuals": out.solution.residuals,
        "rounding": out.rounding_used,
        "epsilon": out.epsilon,
        "report": out.report,
        "empty_clusters": out.clustering.empty_clusters,
        "outputs": outputs,
    });
    let failure = (!out.converged()).then_some(Error::NotConverged { failed: 1, total: 1 });
    Ok(Outcome { summary, failure })
}

pub fn cmd_sweep(a: &SweepArgs, m: &Manifest) -> Result<Outcome> {
    let k = pick(a.k, m.k, 3);
    let spec = SweepSpec {
        m: pick(a.m, m.m, 50),
        k,
        n_per_center: pick(a.n, m.n, 100),
        sigma: pick(a.sigma, m.sigma, 1.0),
        ratios: pick(a.ratios.clone(), m.ratios.clone(), vec![2.0, 4.0, 6.0, 8.0, 10.0, 15.0, 20.0]),
        trials: pick(a.trials, m.trials, 10),
        seed: pick(a.seed, m.seed, 0),
        kind: None,
        pipeline: pipeline_config(k, &a.solver, &a.rounding, m)?,
    };
    let report = sweep(&spec)?;
    let path = output_dir(&a.output_dir, m)?.join("sweep.csv");
    report.write_csv(create(&path)?)?;
    let failed = report.unconverged();
    let summary = json!({
        "output": path,
        "rows": report.rows,
        "unconverged": failed,
    });
    let failure = (failed > 0).then_some(Error::NotConverged {
        failed,
        total: report.trials.len(),
    });
    Ok(Outcome { summary, failure })
}

pub fn cmd_voronoi(a: &VoronoiArgs, m: &Manifest) -> Result<Outcome> {
    let spec = VoronoiExperimentSpec {
        d: pick(a.d, m.d, 2),
        sigma: pick(a.sigma, m.sigma, 1.0),
        n_per_center: pick(a.n, m.n, 10_000),
        trials: pick(a.trials, m.trials, 30),
        kmeanspp_restarts: pick(a.restarts, m.restarts, 10),
        seed: pick(a.seed, m.seed, 0),
    };
    let exp = run_voronoi_experiment(&spec)?;
    let path = output_dir(&a.output_dir, m)?.join("voronoi.csv");
    exp.write_csv(create(&path)?)?;
    Ok(Outcome::ok(json!({
        "output": path,
        "alpha": exp.voronoi_means.coefficient.value,
        "alpha_err": exp.voronoi_means.coefficient.error,
        "voronoi_means": exp.voronoi_means.means,
        "median_err_to_voronoi": exp.median_err_to_voronoi(),
        "median_err_to_center": exp.median_err_to_center(),
        "trials": exp.trials,
    })))
}

#[derive(Serialize)]
struct AlphaSummary {
    d: usize,
    c: f64,
    sigma: f64,
    method: AlphaMethod,
    alpha: f64,
    err: f64,
}

pub fn cmd_alpha(a: &AlphaArgs, m: &Manifest) -> Result<Outcome> {
    let d = pick(a.d, m.d, 2);
    let method = match pick(a.method, m.method, MethodArg::Quadrature) {
        MethodArg::Quadrature => AlphaMethod::Quadrature,
        MethodArg::Mc => AlphaMethod::MonteCarlo,
    };
    let default_budget = match method {
        AlphaMethod::Quadrature => 4000,
        AlphaMethod::MonteCarlo => 1_000_000,
    };
    let query = AlphaQuery {
        d,
        c: pick(a.c, m.c, 1.0),
        sigma: pick(a.sigma, m.sigma, 1.0),
        method,
        samples_or_nodes: pick(a.samples, m.samples, default_budget),
        seed: pick(a.seed, m.seed, 0),
    };
    let est = alpha(&query)?;
    let mut summary = serde_json::to_value(AlphaSummary {
        d,
        c: query.c,
        sigma: query.sigma,
        method,
        alpha: est.value,
        err: est.error,
    })?;
    if let Some(grid) = a.grid.clone().or(m.grid.clone()) {
        let report = check_alpha_monotonicity(d, &grid)?;
        summary["grid"] = serde_json::to_value(&report.rows)?;
        summary["alpha_at_zero"] = json!(report.baseline.value);
        summary["monotone_violations"] = json!(report.violations);
        summary["holds"] = json!(report.holds());
        if let Some(dir) = a.output_dir.clone().or(m.output_dir.clone()) {
            fs::create_dir_all(&dir)?;
            let path = dir.join("alpha.csv");
            let rows: Vec<AlphaRow> = report.rows.clone();
            write_alpha_csv(&rows, create(&path)?)?;
            summary["output"] = json!(path);
        }
    }
    Ok(Outcome::ok(summary))
}

fn error_json(message: String, kind: &str) -> String {
    json!({ "error": message, "kind": kind }).to_string()
}

/// Parses `std::env::args`, runs, prints, and returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!("{}", error_json(e.to_string().trim().to_string(), "usage"));
            return 2;
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.summary);
            match out.failure {
                None => 0,
                Some(e) => {
                    eprintln!("{}", error_json(e.to_string(), e.kind()));
                    3
                }
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(e.to_string(), e.kind()));
            1
        }
    }
}

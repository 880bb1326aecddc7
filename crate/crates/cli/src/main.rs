//! Command-line front end for the petaluma library.

mod output;
mod verify;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use petaluma::budget::Budget;
use petaluma::diagrams::{PetalKnot, PetalLink, Permutation};
use petaluma::gauss::{self, GaussFormula};
use petaluma::moments::{self, Invariant};
use petaluma::rational::{self, Rational};
use petaluma::sampling::{self, Histogram, Model, SampleConfig, Statistic, Summary};
use petaluma::{linking, Error};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "petaluma", version, about = "Random petal knots and links")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Permutation cap for exhaustive enumerations (default 11!).
    #[arg(long, global = true)]
    max_permutations: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Star,
    Grid,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    C2,
    V3,
    Lk,
}

#[derive(Clone, Copy, ValueEnum)]
enum MomentInvariant {
    C2,
    V3,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitInvariant {
    C2,
    Lk,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    PetalumaKnot,
    PetalumaLink,
    Star,
    Grid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Raw,
    Histogram,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Formulas,
    Fourier,
    Invariance,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an invariant of one petal diagram.
    Invariant {
        /// Comma separated permutation of 0..m.
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value = "c2")]
        invariant: InvariantArg,
        /// Diagram used to read off the Gauss code.
        #[arg(long, value_enum, default_value = "star")]
        via: Via,
        /// Arrow polynomial file replacing the built-in v3 formula.
        #[arg(long)]
        v3_formula: Option<PathBuf>,
    },
    /// Monte Carlo samples of an invariant.
    Sample {
        #[arg(long, value_enum, default_value = "petaluma-knot")]
        model: ModelArg,
        /// Petal parameter n (grid size m for the grid model).
        #[arg(long)]
        n: usize,
        /// Number of samples.
        #[arg(long = "samples", short = 'N')]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Statistic; lk for links, c2 otherwise by default.
        #[arg(long, value_enum)]
        invariant: Option<InvariantArg>,
        #[arg(long, value_enum, default_value = "raw")]
        format: Format,
        /// Histogram bin width for the normalized values (default: Freedman-Diaconis).
        #[arg(long)]
        bin_width: Option<f64>,
    },
    /// Exact distribution of the linking number of 4n-petal links.
    LkDist {
        #[arg(long)]
        n: usize,
    },
    /// Exact distribution of c2 or v3 over all (2n+1)! petal knots.
    ExactDist {
        #[arg(long, value_enum, default_value = "c2")]
        invariant: MomentInvariant,
        #[arg(long)]
        n: usize,
    },
    /// Exact moments for n = 0..=n-max and the interpolating polynomial.
    Moments {
        #[arg(long, value_enum, default_value = "c2")]
        invariant: MomentInvariant,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Exact limiting moment of c2/n^2 or of lk/(2n).
    LimitMoments {
        #[arg(long, value_enum, default_value = "c2")]
        invariant: LimitInvariant,
        #[arg(long)]
        k: usize,
        /// Divide lk by 4n instead of 2n.
        #[arg(long)]
        per_4n: bool,
    },
    /// Density and distribution function of the limiting lk/(4n) law.
    LimitCdf {
        /// Number of grid points.
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// Half-width of the grid interval.
        #[arg(long, default_value_t = 3.0)]
        range: f64,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        v3_formula: Option<PathBuf>,
        /// Largest n enumerated by the formulas suite.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Random knots checked by the invariance suite.
        #[arg(long, default_value_t = 500)]
        knots: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Verify(String),
    Usage(String),
    Budget(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("raise --max-permutations or {}=<GiB>, or pick a smaller n", Budget::ENV_VAR);
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = cli.out.as_deref();
    let mut budget = Budget::from_env()?;
    if let Some(p) = cli.max_permutations {
        budget.max_permutations = p;
    }
    match &cli.command {
        Command::Invariant { perm, invariant, via, v3_formula } => {
            let v3 = load_v3(v3_formula.as_deref())?;
            let value = invariant_value(perm, *invariant, *via, &v3)?;
            output::emit(out, &format!("{value}\n"))?;
        }
        Command::Sample { model, n, samples, seed, invariant, format, bin_width } => {
            let model = match model {
                ModelArg::PetalumaKnot => Model::PetalumaKnot,
                ModelArg::PetalumaLink => Model::PetalumaLink,
                ModelArg::Star => Model::Star,
                ModelArg::Grid => Model::Grid,
            };
            let mut config = SampleConfig::new(model, *n, *samples, *seed);
            if let Some(i) = invariant {
                config = config.with_statistic(match i {
                    InvariantArg::C2 => Statistic::C2,
                    InvariantArg::V3 => Statistic::V3,
                    InvariantArg::Lk => Statistic::Lk,
                });
            }
            let values = sampling::sample(&config)?;
            let body = match format {
                Format::Raw => {
                    let mut s = output::meta_line();
                    s.push_str("value\n");
                    for v in &values {
                        let _ = writeln!(s, "{v}");
                    }
                    s
                }
                Format::Histogram => histogram_csv(&config, &values, *bin_width)?,
                Format::Summary => summary_json(&config, &values)?,
            };
            output::emit(out, &body)?;
        }
        Command::LkDist { n } => {
            if *n == 0 {
                return Err(Failure::Usage("links need n >= 1".into()));
            }
            let dist = linking::exact_lk_distribution(*n, &budget)?;
            let mut s = output::meta_line();
            s.push_str("value,count,probability\n");
            for (v, c) in &dist.counts {
                let p = dist.probability(*v);
                let _ = writeln!(s, "{v},{c},{}", rational::to_string(&p));
            }
            output::emit(out, &s)?;
        }
        Command::ExactDist { invariant, n } => {
            let inv = moment_invariant(*invariant);
            let dist = moments::exact_distribution(inv, *n, &budget)?;
            let mut s = output::meta_line();
            s.push_str("value,count\n");
            for (v, c) in &dist.counts {
                let _ = writeln!(s, "{v},{c}");
            }
            output::emit(out, &s)?;
        }
        Command::Moments { invariant, n_max, k } => {
            let body = moments_json(moment_invariant(*invariant), *n_max, *k, &budget)?;
            output::emit(out, &body)?;
        }
        Command::LimitMoments { invariant, k, per_4n } => {
            let value = match invariant {
                LimitInvariant::C2 if *per_4n => return Err(Failure::Usage("--per-4n applies to lk only".into())),
                LimitInvariant::C2 => moments::limit_moment_c2(*k, &budget)?.value,
                LimitInvariant::Lk if *per_4n => linking::limit_lk_moment_4n(*k),
                LimitInvariant::Lk => linking::limit_lk_moment_2n(*k),
            };
            output::emit(out, &format!("{}\n", rational::to_string(&value)))?;
        }
        Command::LimitCdf { grid, range } => {
            if *grid < 2 || !(range.is_finite() && *range > 0.0) {
                return Err(Failure::Usage("need --grid >= 2 and a positive --range".into()));
            }
            let mut s = output::meta_line();
            s.push_str("x,density,cdf\n");
            let h = 2.0 * range / (*grid - 1) as f64;
            for i in 0..*grid {
                let x = -range + h * i as f64;
                let _ = writeln!(s, "{x:.12},{:.17e},{:.17e}", linking::limit_density(x), linking::limit_cdf(x));
            }
            output::emit(out, &s)?;
        }
        Command::Verify { suite, v3_formula, max_n, knots, seed } => {
            let v3 = load_v3(v3_formula.as_deref())?;
            let mut text = String::new();
            let mut ok = true;
            let run_formulas = matches!(suite, Suite::Formulas | Suite::All);
            let run_fourier = matches!(suite, Suite::Fourier | Suite::All);
            let run_invariance = matches!(suite, Suite::Invariance | Suite::All);
            let mut section = |name: &str, report: verify::Report| {
                let _ = writeln!(text, "## {name}");
                text.push_str(&report.render());
                ok &= report.passed();
            };
            if run_invariance {
                section("invariance", verify::invariance(&v3, *knots, *seed)?);
            }
            if run_formulas {
                section("formulas", verify::formulas(&v3, *max_n, &budget)?);
            }
            if run_fourier {
                section("fourier", verify::fourier(&v3)?);
            }
            output::emit(out, &text)?;
            if !ok {
                return Err(Failure::Verify("see FAIL lines above".into()));
            }
        }
    }
    Ok(())
}

fn moment_invariant(i: MomentInvariant) -> Invariant {
    match i {
        MomentInvariant::C2 => Invariant::C2,
        MomentInvariant::V3 => Invariant::V3,
    }
}

fn load_v3(path: Option<&Path>) -> std::result::Result<GaussFormula, Failure> {
    match path {
        None => Ok(gauss::v3_formula()),
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            Ok(text.parse::<GaussFormula>()?)
        }
    }
}

fn parse_perm(text: &str) -> std::result::Result<Permutation, Failure> {
    let values = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("bad --perm {text:?}: {e}")))?;
    Ok(Permutation::new(values)?)
}

fn invariant_value(perm: &str, inv: InvariantArg, via: Via, v3: &GaussFormula) -> std::result::Result<i64, Failure> {
    let p = parse_perm(perm)?;
    if let InvariantArg::Lk = inv {
        return Ok(linking::linking_number(&PetalLink::new(p)?));
    }
    let knot = PetalKnot::new(p)?;
    let d = match via {
        Via::Star => knot.star_gauss_diagram(),
        Via::Grid => knot.to_grid().gauss_diagram(),
    };
    Ok(match inv {
        InvariantArg::C2 => gauss::c2(&d),
        _ => gauss::evaluate_integer(v3, &d)?,
    })
}

/// Normalization used for histograms: `c2/n^2`, `v3/n^3`, `lk/(4n)`.
fn scale(config: &SampleConfig) -> f64 {
    let n = config.size.max(1) as f64;
    match config.statistic {
        Statistic::C2 => n * n,
        Statistic::V3 => n * n * n,
        Statistic::Lk => 4.0 * n,
    }
}

fn histogram_csv(config: &SampleConfig, values: &[i64], width: Option<f64>) -> std::result::Result<String, Failure> {
    let s = scale(config);
    let xs: Vec<f64> = values.iter().map(|&v| v as f64 / s).collect();
    let h = match width {
        Some(w) if w > 0.0 && w.is_finite() => {
            let max = xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            Histogram::with_width(&xs, max, w)
        }
        Some(_) => return Err(Failure::Usage("--bin-width must be positive".into())),
        None => Histogram::freedman_diaconis(&xs),
    };
    let mut out = output::meta_line();
    let _ = writeln!(out, "# scale: {} / {s}", config.statistic);
    let _ = writeln!(out, "# bin_width: {}", h.width);
    out.push_str("bin_lo,bin_hi,count\n");
    for (lo, hi, c) in h.rows() {
        let _ = writeln!(out, "{lo},{hi},{c}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct SummaryJson {
    model: String,
    statistic: String,
    n: usize,
    #[serde(rename = "N")]
    samples: usize,
    seed: u64,
    mean: f64,
    variance: f64,
    standard_error: f64,
    pos: u64,
    neg: u64,
    zero: u64,
}

fn summary_json(config: &SampleConfig, values: &[i64]) -> std::result::Result<String, Failure> {
    let s = Summary::of(values);
    let j = SummaryJson {
        model: config.model.to_string(),
        statistic: config.statistic.to_string(),
        n: config.size,
        samples: config.samples,
        seed: config.seed,
        mean: s.mean,
        variance: s.variance,
        standard_error: s.standard_error(),
        pos: s.positivity.pos,
        neg: s.positivity.neg,
        zero: s.positivity.zero,
    };
    json_body(&j)
}

#[derive(Serialize)]
struct MomentRow {
    n: usize,
    moment: String,
}

#[derive(Serialize)]
struct MomentsJson {
    invariant: String,
    n_range: [usize; 2],
    k: u32,
    values: Vec<MomentRow>,
    fitted_polynomial: Vec<String>,
    reference_polynomial: Option<Vec<String>>,
    paper_match: bool,
}

fn moments_json(inv: Invariant, n_max: usize, k: u32, budget: &Budget) -> std::result::Result<String, Failure> {
    let mut points: Vec<(Rational, Rational)> = Vec::new();
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let m = moments::exact_distribution(inv, n, budget)?.moment(k);
        rows.push(MomentRow { n, moment: rational::to_string(&m) });
        points.push((rational::int(n as i64), m));
    }
    let fitted = moments::interpolate_polynomial(&points)?;
    let p = moments::paper_polynomials();
    let reference = match (inv, k) {
        (Invariant::C2, 1) => Some(p.c2_mean),
        (Invariant::C2, 2) => Some(p.c2_second),
        (Invariant::C2, 3) => Some(p.c2_third),
        (Invariant::V3, 2) => Some(p.v3_second),
        _ => None,
    };
    let paper_match = reference.as_ref().is_some_and(|r| points.iter().all(|(x, y)| r.eval(x) == *y));
    let coeffs = |q: &moments::Polynomial| q.coeffs().iter().map(rational::to_string).collect::<Vec<_>>();
    let j = MomentsJson {
        invariant: inv.to_string(),
        n_range: [0, n_max],
        k,
        values: rows,
        fitted_polynomial: coeffs(&fitted),
        reference_polynomial: reference.as_ref().map(coeffs),
        paper_match,
    };
    json_body(&j)
}

fn json_body<T: Serialize>(value: &T) -> std::result::Result<String, Failure> {
    let mut s = output::meta_line();
    s.push_str(&serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?);
    s.push('\n');
    Ok(s)
}


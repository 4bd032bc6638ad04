//! Command-line front end: exact tables, asymptotic estimates, saddle
//! diagnostics, zeta spot-checks, and exact-vs-asymptotic comparisons as
//! CSV or line-delimited JSON.

mod output;
mod range;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{json_row, OutputFormat};
use partition_moments::asymptotics::{
    corollary_eval, corollary_names, one_singularity_eval, MomentEngine, MomentEstimate, MomentKind,
};
use partition_moments::error::Error;
use partition_moments::exact::{exact_moments, ln_biguint};
use partition_moments::saddle::{alpha_series, solve_for_family, solve_saddle, AlphaSource};
use partition_moments::sequences::{custom_from_file, enumerate, SequenceFamily, WeightedSequence};
use partition_moments::zeta;
use range::parse_range;
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "partition-moments",
    version,
    about = "Exact and asymptotic partition moments over weighted integer sequences"
)]
struct Cli {
    /// Worker threads for per-n fan-out (default: rayon's choice)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Numeric,
    Series,
}

impl From<SourceArg> for AlphaSource {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::Numeric => AlphaSource::Numeric,
            SourceArg::Series => AlphaSource::Series,
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Family: naturals, barnes2, barnes3, epstein2, epstein3, custom
    #[arg(long)]
    family: String,
    /// Two-column "lambda multiplicity" file for --family custom
    #[arg(long)]
    custom_file: Option<PathBuf>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<SequenceFamily, Error> {
        if self.family.eq_ignore_ascii_case("custom") {
            let path = self.custom_file.as_ref().ok_or_else(|| {
                Error::InvalidArgument("--family custom requires --custom-file".into())
            })?;
            Ok(SequenceFamily::Custom(custom_from_file(path)?))
        } else {
            SequenceFamily::parse(&self.family)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact moment table t^0..t^K by big-integer DP
    Exact {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Sequence cutoff override (default: n-max)
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Asymptotic moment estimates
    Asym {
        #[command(flatten)]
        family: FamilyArgs,
        /// n grid: A, A:B:S, A:B:geometric, or A:B:xR
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, value_enum, default_value_t = SourceArg::Numeric)]
        alpha_source: SourceArg,
    },
    /// Exact / asymptotic ratio per n and k
    Compare {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, value_enum, default_value_t = SourceArg::Numeric)]
        alpha_source: SourceArg,
    },
    /// Saddle-point diagnostics
    Saddle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: String,
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Zeta kernel spot checks
    Zeta {
        #[command(flatten)]
        which: ZetaArgs,
        /// Significant digits to print
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },
    /// Printed closed-form evaluations
    Corollary {
        /// A family form (hr-t0, barnes2-tk, epstein3-m, ...) or
        /// onesing-t0 / onesing-tk / onesing-m with --mu/--coeff/--a0
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Pole location for the one-singularity forms
        #[arg(long)]
        mu: Option<f64>,
        /// Expansion coefficient at the pole (one-singularity forms)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coeff: f64,
        /// Constant expansion coefficient (one-singularity forms)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a0: f64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ZetaArgs {
    /// Riemann zeta at s
    #[arg(long, allow_negative_numbers = true)]
    riemann: Option<f64>,
    /// Riemann zeta derivative at s in {-1, -2}
    #[arg(long, allow_negative_numbers = true)]
    riemann_prime: Option<f64>,
    /// Hurwitz zeta: s c
    #[arg(long, num_args = 2, allow_negative_numbers = true)]
    hurwitz: Option<Vec<f64>>,
    /// Barnes zeta: d s c
    #[arg(long, num_args = 3, allow_negative_numbers = true)]
    barnes: Option<Vec<f64>>,
    /// Epstein zeta: d s
    #[arg(long, num_args = 2, allow_negative_numbers = true)]
    epstein: Option<Vec<f64>>,
    /// Family zeta at integer-free real s: FAMILY s
    #[arg(long, num_args = 2)]
    lambda: Option<Vec<String>>,
    /// Finite part at the leading pole of FAMILY
    #[arg(long)]
    fp: Option<String>,
    /// zeta'(0) of FAMILY
    #[arg(long)]
    prime_zero: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = match cli.format {
        Format::Csv => OutputFormat::Csv,
        Format::Json => OutputFormat::Json,
    };
    match run(cli.command, format) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InsufficientCutoff { .. } | Error::Solver(_) | Error::Io(_) => 3,
        _ => 2,
    }
}

fn run(command: Command, format: OutputFormat) -> Result<(), Error> {
    match command {
        Command::Exact {
            family,
            n_max,
            k,
            cutoff,
        } => {
            let family = family.resolve()?;
            let seq = enumerate(&family, cutoff.unwrap_or(n_max as u64))?;
            let table = exact_moments(&seq, n_max, k)?;
            match format {
                OutputFormat::Csv => print!("{}", table.to_csv()),
                OutputFormat::Json => {
                    for n in 1..=n_max {
                        let values: Vec<String> =
                            (0..=k).map(|kk| table.moment(n, kk).to_string()).collect();
                        json_row(&[
                            ("family", family.to_string().into()),
                            ("n", (n as u64).into()),
                            ("moments", values.into()),
                            ("cutoff", seq.cutoff().into()),
                        ]);
                    }
                }
            }
            Ok(())
        }
        Command::Asym {
            family,
            n,
            k,
            alpha_source,
        } => {
            let family = family.resolve()?;
            let grid = parse_range(&n)?;
            let engine = MomentEngine::new(&family)?;
            let source: AlphaSource = alpha_source.into();
            let rows: Vec<Result<Vec<MomentEstimate>, Error>> = grid
                .par_iter()
                .map(|&n| engine.moment_set(n as f64, k, source))
                .collect();
            if matches!(format, OutputFormat::Csv) {
                println!("n,k,log10,value,alpha,case");
            }
            for row in rows {
                for est in row? {
                    emit_estimate(&est, source, format);
                }
            }
            Ok(())
        }
        Command::Compare {
            family,
            n,
            k,
            alpha_source,
        } => {
            let family = family.resolve()?;
            let grid = parse_range(&n)?;
            let source: AlphaSource = alpha_source.into();
            let n_top = *grid.last().unwrap() as usize;
            let seq = enumerate(&family, n_top as u64)?;
            let table = exact_moments(&seq, n_top, k as usize)?;
            let engine = MomentEngine::new(&family)?;
            let rows: Vec<Result<Vec<MomentEstimate>, Error>> = grid
                .par_iter()
                .map(|&n| engine.moment_set(n as f64, k, source))
                .collect();
            if matches!(format, OutputFormat::Csv) {
                let ratios: Vec<String> = (0..=k).map(|kk| format!("ratio_t{kk}")).collect();
                println!("n,alpha,{}", ratios.join(","));
            }
            for (n, row) in grid.iter().zip(rows) {
                let row = row?;
                let ratios: Vec<f64> = row
                    .iter()
                    .map(|est| {
                        (ln_biguint(table.moment(*n as usize, est.k as usize)) - est.value.ln_abs())
                            .exp()
                    })
                    .collect();
                match format {
                    OutputFormat::Csv => {
                        let cols: Vec<String> = ratios.iter().map(|r| format!("{r:.12}")).collect();
                        println!("{n},{:.12e},{}", row[0].alpha_used.alpha, cols.join(","));
                    }
                    OutputFormat::Json => json_row(&[
                        ("family", family.to_string().into()),
                        ("n", (*n).into()),
                        ("alpha", row[0].alpha_used.alpha.into()),
                        ("alpha_source", source_name(source).into()),
                        ("cutoff", seq.cutoff().into()),
                        ("ratios", ratios.into()),
                        ("solver_rel_residual_budget", 1e-10.into()),
                    ]),
                }
            }
            Ok(())
        }
        Command::Saddle { family, n, cutoff } => {
            let family = family.resolve()?;
            let grid = parse_range(&n)?;
            if matches!(format, OutputFormat::Csv) {
                println!("n,alpha_numeric,residual,alpha_series,series_minus_numeric,cutoff");
            }
            let rows: Vec<Result<(WeightedSequence, _, _), Error>> = grid
                .par_iter()
                .map(|&n| {
                    let nf = n as f64;
                    let (seq, numeric) = match cutoff {
                        Some(c) => {
                            let seq = enumerate(&family, c)?;
                            let sp = solve_saddle(&seq, nf)?;
                            (seq, sp)
                        }
                        None => solve_for_family(&family, nf)?,
                    };
                    let series = alpha_series(&family, nf).ok();
                    Ok((seq, numeric, series))
                })
                .collect();
            for (n, row) in grid.iter().zip(rows) {
                let (seq, numeric, series) = row?;
                let s_alpha = series.as_ref().map(|s| s.alpha);
                match format {
                    OutputFormat::Csv => println!(
                        "{n},{:.15e},{:.3e},{},{},{}",
                        numeric.alpha,
                        numeric.residual,
                        s_alpha.map_or("-".into(), |a| format!("{a:.15e}")),
                        s_alpha.map_or("-".into(), |a| format!("{:.3e}", a - numeric.alpha)),
                        seq.cutoff(),
                    ),
                    OutputFormat::Json => {
                        let terms = partition_moments::saddle::alpha_expansion(&family)
                            .map(|e| e.terms)
                            .unwrap_or_default();
                        let breakdown: Vec<serde_json::Value> = terms
                            .iter()
                            .map(|&(c, e)| {
                                serde_json::json!({"coefficient": c, "n_exponent": e,
                                                   "value": c * (*n as f64).powf(e)})
                            })
                            .collect();
                        json_row(&[
                            ("family", family.to_string().into()),
                            ("n", (*n).into()),
                            ("alpha_numeric", numeric.alpha.into()),
                            ("residual", numeric.residual.into()),
                            ("alpha_series", s_alpha.into()),
                            ("series_terms", breakdown.into()),
                            ("cutoff", seq.cutoff().into()),
                            ("solver_rel_residual_budget", 1e-10.into()),
                        ]);
                    }
                }
            }
            Ok(())
        }
        Command::Zeta { which, digits } => {
            let (label, value) = eval_zeta(&which)?;
            match format {
                OutputFormat::Csv => println!("{label},{}", sig(value, digits)),
                OutputFormat::Json => {
                    json_row(&[("kernel", label.into()), ("value", value.into())])
                }
            }
            Ok(())
        }
        Command::Corollary {
            name,
            n,
            k,
            mu,
            coeff,
            a0,
        } => {
            let grid = parse_range(&n)?;
            let one_sing_kind = match name.as_str() {
                "onesing-t0" => Some(MomentKind::Count),
                "onesing-tk" => Some(MomentKind::Moment),
                "onesing-m" => Some(MomentKind::ExpectedSummands),
                _ => None,
            };
            if one_sing_kind.is_none() && !corollary_names().contains(&name.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "unknown corollary '{name}'; available: {}, onesing-t0, onesing-tk, onesing-m",
                    corollary_names().join(", ")
                )));
            }
            if matches!(format, OutputFormat::Csv) {
                println!("n,k,log10,value");
            }
            for &nn in &grid {
                let est = match one_sing_kind {
                    Some(kind) => {
                        let mu = mu.ok_or_else(|| {
                            Error::InvalidArgument("one-singularity forms need --mu".into())
                        })?;
                        one_singularity_eval(mu, coeff, a0, kind, nn as f64, k)?
                    }
                    None => corollary_eval(&name, nn as f64, k)?,
                };
                match format {
                    OutputFormat::Csv => println!(
                        "{nn},{},{:.12},{}",
                        est.k,
                        est.value.log10_abs(),
                        est.value.to_decimal_string().unwrap_or_else(|| "-".into())
                    ),
                    OutputFormat::Json => json_row(&[
                        ("corollary", name.clone().into()),
                        ("n", nn.into()),
                        ("k", est.k.into()),
                        ("log10", est.value.log10_abs().into()),
                        ("value", est.value.to_decimal_string().into()),
                    ]),
                }
            }
            Ok(())
        }
    }
}

fn source_name(source: AlphaSource) -> &'static str {
    match source {
        AlphaSource::Numeric => "numeric",
        AlphaSource::Series => "series",
    }
}

fn emit_estimate(est: &MomentEstimate, source: AlphaSource, format: OutputFormat) {
    match format {
        OutputFormat::Csv => println!(
            "{},{},{:.12},{},{:.12e},{}",
            est.n,
            est.k,
            est.value.log10_abs(),
            est.value.to_decimal_string().unwrap_or_else(|| "-".into()),
            est.alpha_used.alpha,
            est.mu0_case,
        ),
        OutputFormat::Json => {
            let terms: Vec<serde_json::Value> = est
                .terms
                .iter()
                .map(|(name, v)| serde_json::json!({"factor": name, "log_contribution": v}))
                .collect();
            let cutoff = partition_moments::saddle::recommended_cutoff(&est.family, est.n).ok();
            json_row(&[
                ("family", est.family.to_string().into()),
                ("n", est.n.into()),
                ("k", est.k.into()),
                ("log10", est.value.log10_abs().into()),
                ("value", est.value.to_decimal_string().into()),
                ("alpha", est.alpha_used.alpha.into()),
                ("alpha_source", source_name(source).into()),
                ("alpha_residual", est.alpha_used.residual.into()),
                ("cutoff", cutoff.into()),
                ("case", est.mu0_case.to_string().into()),
                ("order", est.order_tag.clone().into()),
                ("solver_rel_residual_budget", 1e-10.into()),
                ("zeta_rel_tolerance", 1e-12.into()),
                ("terms", terms.into()),
            ]);
        }
    }
}

fn eval_zeta(which: &ZetaArgs) -> Result<(String, f64), Error> {
    if let Some(s) = which.riemann {
        return Ok((format!("riemann({s})"), zeta::riemann_zeta(s)?));
    }
    if let Some(s) = which.riemann_prime {
        return Ok((format!("riemann_prime({s})"), zeta::riemann_zeta_prime(s)?));
    }
    if let Some(args) = &which.hurwitz {
        return Ok((
            format!("hurwitz({}, {})", args[0], args[1]),
            zeta::hurwitz_zeta(args[0], args[1])?,
        ));
    }
    if let Some(args) = &which.barnes {
        let d = args[0] as u32;
        return Ok((
            format!("barnes({d}, {}, {})", args[1], args[2]),
            zeta::barnes_zeta(d, args[1], args[2])?,
        ));
    }
    if let Some(args) = &which.epstein {
        let d = args[0] as u32;
        return Ok((
            format!("epstein({d}, {})", args[1]),
            zeta::epstein_zeta(d, args[1])?,
        ));
    }
    if let Some(args) = &which.lambda {
        let family = SequenceFamily::parse(&args[0])?;
        let s: f64 = args[1]
            .parse()
            .map_err(|e| Error::Parse(format!("bad s value: {e}")))?;
        return Ok((
            format!("zeta_lambda({family}, {s})"),
            zeta::zeta_lambda(&family, s)?,
        ));
    }
    if let Some(name) = &which.fp {
        let family = SequenceFamily::parse(name)?;
        return Ok((
            format!("fp_at_pole({family})"),
            zeta::finite_part_at_pole(&family)?,
        ));
    }
    if let Some(name) = &which.prime_zero {
        let family = SequenceFamily::parse(name)?;
        return Ok((
            format!("zeta_prime_0({family})"),
            zeta::zeta_prime_zero(&family)?,
        ));
    }
    Err(Error::InvalidArgument("no zeta kernel selected".into()))
}

fn sig(value: f64, digits: usize) -> String {
    format!("{value:.*e}", digits.saturating_sub(1))
}

//! Batch experiment runner for Fourier analysis on compact commutative
//! hypergroups.
//!
//! Exit codes: 0 all hard checks pass, 1 hard failure, 2 configuration or
//! usage error. `HYPERF_THREADS` caps suite parallelism.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperf_core::cli::{self, fmt_float, ExperimentConfig, InstanceChoice, OutputFormat, PValue};
use hyperf_core::dunkl_ramirez::DunklRamirez;
use hyperf_core::hypergroup::Hypergroup;
use hyperf_core::inequalities::FamilyKind;
use hyperf_core::multipliers;
use hyperf_core::spectra::{self, WeightFunction};
use hyperf_core::{conj_su2::ConjSu2, Error};

#[derive(Parser)]
#[command(name = "hyperf", version, about = "Fourier inequalities on compact hypergroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured verification suites and emit a report.
    Run(RunArgs),
    /// Rerun while varying one parameter; emits an aggregate CSV table.
    Sweep(SweepArgs),
    /// Print the Paley functional M_φ for a named weight preset.
    Mphi(MphiArgs),
    /// Print the Hörmander functional and an operator-norm lower bound.
    MultiplierBound(MultiplierBoundArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Config file of `key = value` lines (flags below override it).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Instance: conj_su2 | dunkl_ramirez.
    #[arg(long)]
    instance: Option<String>,
    /// H_a parameter as "num/den" (dunkl_ramirez only).
    #[arg(long)]
    a: Option<String>,
    /// Comma-separated suite list (algebra,hy,paley,hl,hyp,duality,multiplier).
    #[arg(long, value_delimiter = ',')]
    suite: Option<Vec<String>>,
    /// Comma-separated p grid (rationals like 4/3 or decimals).
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<String>>,
    #[arg(long)]
    seed: Option<u64>,
    /// Dual truncation level.
    #[arg(long)]
    level: Option<u32>,
    /// Test functions per family.
    #[arg(long)]
    count: Option<u32>,
    /// Family kind: spike | random-decay | lacunary.
    #[arg(long)]
    family: Option<String>,
    /// Coefficient envelope decay exponent.
    #[arg(long)]
    decay: Option<f64>,
    /// Report output path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: text | csv.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Parameter to vary: p | q | b | level | seed | count | decay | beta | trials | a.
    #[arg(long)]
    param: String,
    /// Comma-separated values for the varied parameter.
    #[arg(long, value_delimiter = ',')]
    values: Vec<String>,
}

#[derive(Args)]
struct MphiArgs {
    #[arg(long, default_value = "conj_su2")]
    instance: String,
    #[arg(long)]
    a: Option<String>,
    #[arg(long, default_value_t = 40)]
    level: u32,
    /// Weight preset: inverse-hyperdim (φ = k^-β) | constant:<c>.
    #[arg(long, default_value = "inverse-hyperdim")]
    weight: String,
    #[arg(long, default_value_t = 3.0)]
    beta: f64,
}

#[derive(Args)]
struct MultiplierBoundArgs {
    #[arg(long, default_value = "conj_su2")]
    instance: String,
    #[arg(long)]
    a: Option<String>,
    #[arg(long, default_value_t = 30)]
    level: u32,
    #[arg(long, default_value = "1.5")]
    p: String,
    #[arg(long, default_value = "3")]
    q: String,
    /// Symbol: riesz | constant:<c> | random:<seed>.
    #[arg(long, default_value = "riesz")]
    symbol: String,
    #[arg(long, default_value_t = 4)]
    trials: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run_command(args),
        Command::Sweep(args) => sweep_command(args),
        Command::Mphi(args) => mphi_command(args),
        Command::MultiplierBound(args) => multiplier_bound_command(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("hyperf: {err}");
            ExitCode::from(2)
        }
    }
}

fn load_config(common: &CommonArgs) -> Result<ExperimentConfig, Error> {
    let mut config = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            ExperimentConfig::parse(&text)?
        }
        None => {
            let mut config = ExperimentConfig::default();
            config.suites = config.default_suites();
            config
        }
    };
    if common.instance.is_some() || common.a.is_some() {
        config.apply_instance(common.instance.as_deref(), common.a.as_deref())?;
        // Instance changes invalidate an instance-derived suite default.
        if common.suite.is_none() && common.config.is_none() {
            config.suites = config.default_suites();
        }
    }
    if let Some(suites) = &common.suite {
        config.suites = suites
            .iter()
            .map(|s| cli::Suite::parse(s))
            .collect::<Result<_, _>>()?;
    }
    if let Some(p) = &common.p {
        config.p_grid = p.iter().map(|t| PValue::parse(t)).collect::<Result<_, _>>()?;
    }
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    if let Some(level) = common.level {
        config.level = level;
    }
    if let Some(count) = common.count {
        config.count = count;
    }
    if let Some(family) = &common.family {
        config.family = FamilyKind::parse(family)?;
    }
    if let Some(decay) = common.decay {
        config.decay = decay;
    }
    if let Some(out) = &common.out {
        config.out = Some(out.clone());
    }
    if let Some(format) = &common.format {
        config.format = OutputFormat::parse(format)?;
    }
    Ok(config)
}

fn emit(config: &ExperimentConfig, payload: &str) -> Result<(), Error> {
    match &config.out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run_command(args: RunArgs) -> Result<ExitCode, Error> {
    let config = load_config(&args.common)?;
    let document = cli::run(&config)?;
    let payload = match config.format {
        OutputFormat::Text => document.render_text(),
        OutputFormat::Csv => document.render_csv(),
    };
    emit(&config, &payload)?;
    let failures = document.hard_failures();
    let warnings = document.warnings();
    eprintln!("[hyperf] hard failures: {failures}, warnings: {warnings}");
    Ok(if failures > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn sweep_command(args: SweepArgs) -> Result<ExitCode, Error> {
    let config = load_config(&args.common)?;
    let (documents, csv) = cli::sweep(&config, &args.param, &args.values)?;
    emit(&config, &csv)?;
    let failures: usize = documents.iter().map(|d| d.hard_failures()).sum();
    eprintln!("[hyperf] sweep over {} values, hard failures: {failures}", documents.len());
    Ok(if failures > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn parse_weight<H: Hypergroup>(
    instance: &H,
    level: u32,
    weight: &str,
    beta: f64,
) -> Result<WeightFunction, Error> {
    if weight == "inverse-hyperdim" {
        return WeightFunction::from_fn(&instance.dual(level), |pt| pt.hyperdim.powf(-beta));
    }
    if let Some(c) = weight.strip_prefix("constant:") {
        let c: f64 =
            c.parse().map_err(|_| Error::Config(format!("bad constant weight {weight:?}")))?;
        return WeightFunction::from_fn(&instance.dual(level), |_| c);
    }
    Err(Error::Config(format!(
        "unknown weight preset {weight:?} (inverse-hyperdim | constant:<c>)"
    )))
}

fn mphi_command(args: MphiArgs) -> Result<ExitCode, Error> {
    let instance = parse_instance(&args.instance, args.a.as_deref())?;
    let value = match &instance {
        InstanceChoice::ConjSu2 => {
            let inst = ConjSu2;
            spectra::mphi(&parse_weight(&inst, args.level, &args.weight, args.beta)?)
        }
        InstanceChoice::DunklRamirez(a) => {
            let inst = DunklRamirez::new(a.clone());
            spectra::mphi(&parse_weight(&inst, args.level, &args.weight, args.beta)?)
        }
    };
    println!("instance = {}", instance.name());
    if let InstanceChoice::DunklRamirez(a) = &instance {
        println!("a = {a}");
    }
    println!("level = {}", args.level);
    println!("weight = {}", args.weight);
    println!("beta = {}", args.beta);
    println!("mphi = {}", fmt_float(value));
    Ok(ExitCode::SUCCESS)
}

fn multiplier_bound_command(args: MultiplierBoundArgs) -> Result<ExitCode, Error> {
    let instance = parse_instance(&args.instance, args.a.as_deref())?;
    let p = PValue::parse(&args.p)?.float;
    let q = PValue::parse(&args.q)?.float;
    let (functional, estimate) = match &instance {
        InstanceChoice::ConjSu2 => {
            let inst = ConjSu2;
            let symbol = cli::build_symbol(&inst, &args.symbol, args.level, p, q)?;
            let dual = inst.dual(args.level);
            let functional = multipliers::hormander_functional(&symbol, &dual, p, q)?;
            let estimate = multipliers::opnorm_lower_bound(
                &inst, &symbol, p, q, args.trials, args.seed, args.level,
            )?;
            (functional, estimate)
        }
        InstanceChoice::DunklRamirez(a) => {
            let inst = DunklRamirez::new(a.clone());
            let symbol = cli::build_symbol(&inst, &args.symbol, args.level, p, q)?;
            let dual = inst.dual(args.level);
            let functional = multipliers::hormander_functional(&symbol, &dual, p, q)?;
            let estimate = multipliers::opnorm_lower_bound(
                &inst, &symbol, p, q, args.trials, args.seed, args.level,
            )?;
            (functional, estimate)
        }
    };
    println!("instance = {}", instance.name());
    println!("symbol = {}", args.symbol);
    println!("p = {}", args.p);
    println!("q = {}", args.q);
    println!("level = {}", args.level);
    println!("trials = {}", args.trials);
    println!("seed = {}", args.seed);
    println!("functional = {}", fmt_float(functional));
    println!("lower_bound = {}", fmt_float(estimate.lower_bound));
    let ratio = if functional > 0.0 { estimate.lower_bound / functional } else { 0.0 };
    println!("ratio = {}", fmt_float(ratio));
    Ok(ExitCode::SUCCESS)
}

fn parse_instance(name: &str, a: Option<&str>) -> Result<InstanceChoice, Error> {
    let mut config = ExperimentConfig::default();
    config.apply_instance(Some(name), a)?;
    Ok(config.instance)
}

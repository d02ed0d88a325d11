//! Command-line front end: decoding radii, coefficient sweeps, frame-error
//! rates, analytic bounds, and one-shot list decoding, all emitted as CSV
//! with a header row. Exit codes: 0 success, 2 argument errors, 3 resource
//! errors.

mod config;

use asd_core::algebra::{CodeParams, FieldContext, Gf};
use asd_core::channels::{ChannelKind, ChannelSpec, ReceivedSymbol, ReceivedWord};
use asd_core::kv::{list_decode, DecoderLimits};
use asd_core::mas::{bsc_matrix, pmas_matrix, BscMas, MultiplicityMatrix, DEFAULT_BSC_M0};
use asd_core::regions::{baseline_radii, bec_radius, bsc_optimal, bsc_radius_at, mod_radius};
use asd_core::sim::{exact_fer_bec, fer_bounds, run_fer, DecoderTag, Strategy, TrialConfig};
use clap::{Args, Parser, Subcommand};
use config::{parse_grid, ConfigMap};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rs-asd",
    version,
    about = "Reed-Solomon algebraic soft-decision decoding analysis"
)]
struct Cli {
    /// Plain-text key=value defaults; explicit flags override file values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Guaranteed decoding radius and classical baselines, one CSV row.
    Radius(RadiusArgs),
    /// Guaranteed radius as a function of the multiplicity coefficient.
    SweepT(SweepTArgs),
    /// Monte Carlo frame-error rate over a channel parameter grid.
    Fer(FerArgs),
    /// Analytic lower/upper bounds and the exact failure probability.
    Bounds(BoundsArgs),
    /// List-decode one received word.
    Decode(DecodeArgs),
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    /// bec, bsc, or mod
    #[arg(long)]
    channel: Option<String>,
    /// Bits per modulation symbol (mod channel only).
    #[arg(long)]
    u: Option<u32>,
}

#[derive(Args)]
struct SweepTArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long = "t-min")]
    t_min: Option<f64>,
    #[arg(long = "t-max")]
    t_max: Option<f64>,
    #[arg(long = "t-step")]
    t_step: Option<f64>,
}

#[derive(Args)]
struct FerArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    /// bec, bsc, one_bit_bsc, or mod
    #[arg(long)]
    channel: Option<String>,
    /// Channel parameter grid start:stop:step (erasure/crossover probability,
    /// or error count for one_bit_bsc).
    #[arg(long = "param-grid")]
    param_grid: Option<String>,
    /// pmas[:M], bsc_mas:t[:m0], gs, or bm_baseline
    #[arg(long)]
    strategy: Option<String>,
    /// oracle or kv
    #[arg(long)]
    decoder: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Bits per modulation symbol (mod channel only).
    #[arg(long)]
    u: Option<u32>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long = "param-grid")]
    param_grid: Option<String>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    /// Received symbols, hex, ceil(m/4) digits per symbol.
    #[arg(long)]
    received: Option<String>,
    /// Per-symbol mask of erased bits, same width as --received (1 = erased).
    #[arg(long = "erasure-mask")]
    erasure_mask: Option<String>,
    /// pmas[:M], bsc_mas:t[:m0], or gs
    #[arg(long)]
    strategy: Option<String>,
    /// Interpolation cost budget.
    #[arg(long)]
    budget: Option<u128>,
}

enum Failure {
    Usage(String),
    Core(asd_core::Error),
}

impl From<asd_core::Error> for Failure {
    fn from(e: asd_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match &cli.config {
        Some(path) => match ConfigMap::load(path) {
            Ok(c) => c,
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        None => ConfigMap::default(),
    };
    match run(cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                asd_core::Error::Resource(_) => 3,
                asd_core::Error::InvalidArgument(_)
                | asd_core::Error::NotApplicable(_)
                | asd_core::Error::Domain(_) => 2,
                asd_core::Error::Decode(_) => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command, cfg: &ConfigMap) -> Result<(), Failure> {
    match command {
        Command::Radius(args) => radius(args, cfg),
        Command::SweepT(args) => sweep_t(args, cfg),
        Command::Fer(args) => fer(args, cfg),
        Command::Bounds(args) => bounds(args, cfg),
        Command::Decode(args) => decode(args, cfg),
    }
}

fn code_params(n: usize, k: usize, m: u32) -> Result<CodeParams, Failure> {
    let ctx = FieldContext::with_default_poly(m)?;
    Ok(CodeParams::new(n, k, ctx)?)
}

fn radius(args: RadiusArgs, cfg: &ConfigMap) -> Result<(), Failure> {
    let n = cfg.require(&args.n, "n")?;
    let k = cfg.require(&args.k, "k")?;
    let m = cfg.require(&args.m, "m")?;
    let channel = cfg.require(&args.channel, "channel")?;
    let params = code_params(n, k, m)?;
    let base = baseline_radii(&params);

    let (asd, bm, branch, flags) = match channel.as_str() {
        "bec" => {
            let r = bec_radius(&params);
            (r.e_star, base.bm_erasures, r.branch.as_str(), String::new())
        }
        "bsc" => {
            let sol = bsc_optimal(&params);
            let branch = if sol.full_correction {
                "full_correction"
            } else {
                "tangent"
            };
            let mut flags = Vec::new();
            if sol.full_correction {
                flags.push("full_correction");
            } else if !sol.general_bsc_certified() {
                flags.push("uncertified_general_bsc");
            }
            (sol.d_floor, base.bm_errors, branch, flags.join(";"))
        }
        "mod" => {
            let u = cfg.require(&args.u, "u")?;
            let r = mod_radius(&params, u)?;
            (r, base.bm_erasures, "even_spread", String::new())
        }
        other => return Err(Failure::Usage(format!("unknown channel {other}"))),
    };
    println!("n,k,m,channel,asd_radius,bm_radius,gs_radius,branch,flags");
    println!(
        "{n},{k},{m},{channel},{asd},{bm},{gs},{branch},{flags}",
        gs = base.gs_errors
    );
    Ok(())
}

fn sweep_t(args: SweepTArgs, cfg: &ConfigMap) -> Result<(), Failure> {
    let n = cfg.require(&args.n, "n")?;
    let k = cfg.require(&args.k, "k")?;
    let m = cfg.require(&args.m, "m")?;
    let t_min: f64 = cfg.require(&args.t_min, "t-min")?;
    let t_max: f64 = cfg.require(&args.t_max, "t-max")?;
    let t_step: f64 = cfg.require(&args.t_step, "t-step")?;
    if !(0.0..1.0).contains(&t_min) || !(0.0..1.0).contains(&t_max) || t_step <= 0.0 {
        return Err(Failure::Usage(
            "need 0 <= t-min <= t-max < 1 and t-step > 0".to_string(),
        ));
    }
    let params = code_params(n, k, m)?;
    println!("t,radius");
    let mut i = 0u64;
    loop {
        let t = t_min + t_step * i as f64;
        if t > t_max + t_step * 1e-9 {
            break;
        }
        let r = bsc_radius_at(&params, t)?;
        println!("{t:.6},{r:.6}");
        i += 1;
    }
    Ok(())
}

fn parse_strategy(tag: &str, m: u32) -> Result<Strategy, Failure> {
    let mut parts = tag.split(':');
    let name = parts.next().unwrap_or("");
    let rest: Vec<&str> = parts.collect();
    match name {
        "pmas" => {
            let m_total = match rest.as_slice() {
                [] => 1u64 << m,
                [v] => v
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad pmas multiplicity {v}")))?,
                _ => return Err(Failure::Usage("pmas takes at most one parameter".into())),
            };
            Ok(Strategy::Pmas { m_total })
        }
        "bsc_mas" => {
            let (t, m0) = match rest.as_slice() {
                [t] => (t.parse::<f64>(), DEFAULT_BSC_M0),
                [t, m0] => (
                    t.parse::<f64>(),
                    m0.parse()
                        .map_err(|_| Failure::Usage(format!("bad base multiplicity {m0}")))?,
                ),
                _ => return Err(Failure::Usage("bsc_mas needs t and optional m0".into())),
            };
            let t = t.map_err(|_| Failure::Usage(format!("bad coefficient in {tag}")))?;
            Ok(Strategy::BscMas(BscMas::from_coefficient(t, m0)?))
        }
        "gs" => Ok(Strategy::Gs),
        "bm_baseline" => Ok(Strategy::BmBaseline),
        other => Err(Failure::Usage(format!("unknown strategy {other}"))),
    }
}

fn fer(args: FerArgs, cfg: &ConfigMap) -> Result<(), Failure> {
    let n = cfg.require(&args.n, "n")?;
    let k = cfg.require(&args.k, "k")?;
    let m = cfg.require(&args.m, "m")?;
    let channel = cfg.require(&args.channel, "channel")?;
    let grid = parse_grid(&cfg.require(&args.param_grid, "param-grid")?)?;
    let strategy = parse_strategy(&cfg.require(&args.strategy, "strategy")?, m)?;
    let decoder = match cfg.require(&args.decoder, "decoder")?.as_str() {
        "oracle" => DecoderTag::Oracle,
        "kv" => DecoderTag::Kv,
        other => return Err(Failure::Usage(format!("unknown decoder {other}"))),
    };
    let trials = cfg.require(&args.trials, "trials")?;
    let seed = cfg.require(&args.seed, "seed")?;
    let params = code_params(n, k, m)?;

    println!("param,fer,ci_lo,ci_hi,failures,trials");
    for &value in &grid {
        let spec = match channel.as_str() {
            "bec" => ChannelSpec::Bec { eps: value },
            "bsc" => ChannelSpec::Bsc { p: value },
            "one_bit_bsc" => ChannelSpec::OneBitBsc {
                errors: value.round() as usize,
            },
            "mod" => ChannelSpec::ModErasure {
                u: cfg.require(&args.u, "u")?,
                eps: value,
            },
            other => return Err(Failure::Usage(format!("unknown channel {other}"))),
        };
        let est = run_fer(&TrialConfig {
            params: params.clone(),
            channel: spec,
            strategy,
            decoder,
            trials,
            seed,
            limits: DecoderLimits::default(),
        })?;
        println!(
            "{value},{:.8},{:.8},{:.8},{},{}",
            est.fer, est.ci_lo, est.ci_hi, est.failures, est.trials
        );
    }
    Ok(())
}

fn bounds(args: BoundsArgs, cfg: &ConfigMap) -> Result<(), Failure> {
    let n = cfg.require(&args.n, "n")?;
    let k = cfg.require(&args.k, "k")?;
    let m = cfg.require(&args.m, "m")?;
    let grid = parse_grid(&cfg.require(&args.param_grid, "param-grid")?)?;
    let params = code_params(n, k, m)?;
    println!("eps,lower,exact,upper");
    for &eps in &grid {
        let b = fer_bounds(&params, eps)?;
        let exact = exact_fer_bec(&params, eps)?;
        println!("{eps},{:.10e},{:.10e},{:.10e}", b.lower, exact, b.upper);
    }
    Ok(())
}

fn nibbles_per_symbol(m: u32) -> usize {
    m.div_ceil(4) as usize
}

fn parse_symbols(hex: &str, n: usize, m: u32, what: &str) -> Result<Vec<u16>, Failure> {
    let width = nibbles_per_symbol(m);
    if hex.len() != n * width {
        return Err(Failure::Usage(format!(
            "{what} must be {} hex digits ({} per symbol), got {}",
            n * width,
            width,
            hex.len()
        )));
    }
    let bytes = hex.as_bytes();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let chunk = std::str::from_utf8(&bytes[j * width..(j + 1) * width]).unwrap();
        let v = u16::from_str_radix(chunk, 16)
            .map_err(|_| Failure::Usage(format!("{what}: bad hex symbol {chunk:?}")))?;
        if v >= (1 << m) {
            return Err(Failure::Usage(format!(
                "{what}: symbol {chunk} exceeds the field (m = {m})"
            )));
        }
        out.push(v);
    }
    Ok(out)
}

fn format_symbols(symbols: &[Gf], m: u32) -> String {
    let width = nibbles_per_symbol(m);
    symbols
        .iter()
        .map(|s| format!("{s:0width$x}"))
        .collect::<String>()
}

fn decode(args: DecodeArgs, cfg: &ConfigMap) -> Result<(), Failure> {
    let n = cfg.require(&args.n, "n")?;
    let k = cfg.require(&args.k, "k")?;
    let m = cfg.require(&args.m, "m")?;
    let received_hex = cfg.require(&args.received, "received")?;
    let mask_hex = cfg.resolve(&args.erasure_mask, "erasure-mask")?;
    let strategy = cfg.require(&args.strategy, "strategy")?;
    let budget = cfg.resolve(&args.budget, "budget")?;
    let params = code_params(n, k, m)?;

    let values = parse_symbols(&received_hex, n, m, "--received")?;
    let erased = match &mask_hex {
        Some(hex) => parse_symbols(hex, n, m, "--erasure-mask")?,
        None => vec![0; n],
    };
    let full = (1u16 << m) - 1;
    let any_erased = erased.iter().any(|&e| e != 0);

    let (matrix, word): (MultiplicityMatrix, ReceivedWord) = match parse_strategy(&strategy, m)? {
        Strategy::Pmas { m_total } => {
            let symbols = values
                .iter()
                .zip(&erased)
                .map(|(&v, &e)| ReceivedSymbol {
                    value: v & !e & full,
                    known_mask: !e & full,
                })
                .collect();
            let word = ReceivedWord::new(symbols, ChannelKind::Bec, m);
            (pmas_matrix(&word, m_total, &params)?, word)
        }
        Strategy::BscMas(mas) => {
            if any_erased {
                return Err(Failure::Usage(
                    "bsc_mas decodes fully observed words; drop --erasure-mask".to_string(),
                ));
            }
            let word = ReceivedWord::hard(&values, m);
            (bsc_matrix(&word, mas, &params)?, word)
        }
        Strategy::Gs => {
            if any_erased {
                return Err(Failure::Usage(
                    "gs decodes fully observed words; drop --erasure-mask".to_string(),
                ));
            }
            let word = ReceivedWord::hard(&values, m);
            (bsc_matrix(&word, BscMas::new(1, 0)?, &params)?, word)
        }
        Strategy::BmBaseline => {
            return Err(Failure::Usage(
                "bm_baseline is a radius benchmark, not a list decoder".to_string(),
            ))
        }
    };
    let _ = word;

    let limits = DecoderLimits {
        max_cost: budget.unwrap_or(DecoderLimits::default().max_cost),
        max_field_bits: m,
    };
    let cost = matrix.cost_exact();
    let threshold = (2.0 * (k as f64 - 1.0) * cost as f64).sqrt();
    let list = list_decode(&matrix, &params, &limits)?;

    println!("cost,{cost}");
    println!("threshold,{threshold:.4}");
    println!("candidates,{}", list.len());
    for (i, c) in list.candidates.iter().enumerate() {
        let certified = c.score * c.score >= 2 * (k as u128 - 1) * cost;
        println!(
            "candidate,{i},{},{},{}",
            format_symbols(&c.message, m),
            c.score,
            certified
        );
    }
    Ok(())
}

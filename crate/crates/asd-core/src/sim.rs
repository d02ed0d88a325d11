//! Monte Carlo and exact frame-error-rate evaluation over the guaranteed
//! decoding region, plus the analytic bound curves.
//!
//! A frame "fails" when the configured decoding rule rejects it: for the
//! oracle decoder, when the sufficiency test fails on the realized channel
//! pattern; for the desk-scale list decoder, when the transmitted message is
//! absent from the list. Trials are keyed by stream index, so the estimate is
//! identical whether trials run sequentially or in parallel.

use crate::algebra::{encode, CodeParams, Gf};
use crate::channels::{transmit, trial_rng, ChannelSpec, TypeProfile};
use crate::error::{Error, Result};
use crate::kv::{asd_decode, DecoderLimits, MasStrategy};
use crate::mas::{eta_scaled, BscMas};
use crate::regions::baseline_radii;
use rand::Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use statrs::distribution::{Binomial, DiscreteCDF};

/// Decoding rule judged in the trial loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strategy {
    /// Proportional assignment, judged by the unbounded-cost sufficiency rule
    /// (eta >= K-1) or decoded with total multiplicity M under the kv tag.
    Pmas { m_total: u64 },
    /// Two-level assignment with integer pair (m0, m1).
    BscMas(BscMas),
    /// Hard-decision list decoding baseline: fails beyond the asymptotic
    /// hard-decision list radius.
    Gs,
    /// Bounded-distance baseline: fails beyond floor((N-K)/2) errors or
    /// N-K erasures.
    BmBaseline,
}

/// Which decoder judges a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderTag {
    /// Sufficiency oracle on the realized pattern (any code size).
    Oracle,
    /// Actual interpolation decoder (desk-scale only).
    Kv,
}

/// One Monte Carlo configuration.
#[derive(Debug, Clone)]
pub struct TrialConfig {
    pub params: CodeParams,
    pub channel: ChannelSpec,
    pub strategy: Strategy,
    pub decoder: DecoderTag,
    pub trials: u64,
    pub seed: u64,
    /// Budget for the kv decoder; ignored by the oracle.
    pub limits: DecoderLimits,
}

/// Estimate with a Wilson 95% interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FerEstimate {
    pub failures: u64,
    pub trials: u64,
    /// Trials the kv decoder aborted on a resource error; counted separately,
    /// never as failures.
    pub anomalies: u64,
    pub fer: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

/// Wilson 95% score interval for x successes in n trials.
pub fn wilson_interval(x: u64, n: u64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let nf = n as f64;
    let p = x as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt() / denom;
    // the interval ends are exact at the boundary counts; avoid rounding them inward
    let lo = if x == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if x == n { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

#[derive(Clone, Copy, Default)]
struct Tally {
    failures: u64,
    anomalies: u64,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            failures: self.failures + other.failures,
            anomalies: self.anomalies + other.anomalies,
        }
    }
}

/// Runs the configured trial loop; parallel across streams when the
/// `parallel` feature is on.
pub fn run_fer(cfg: &TrialConfig) -> Result<FerEstimate> {
    #[cfg(feature = "parallel")]
    {
        run_fer_impl(cfg, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_fer_impl(cfg, false)
    }
}

/// Sequential trial loop; same estimate as `run_fer` for the same config.
/// Kept available unconditionally for determinism checks and benchmarks.
pub fn run_fer_seq(cfg: &TrialConfig) -> Result<FerEstimate> {
    run_fer_impl(cfg, false)
}

fn run_fer_impl(cfg: &TrialConfig, parallel: bool) -> Result<FerEstimate> {
    validate_config(cfg)?;
    let tally = if parallel {
        #[cfg(feature = "parallel")]
        {
            (0..cfg.trials)
                .into_par_iter()
                .map(|stream| run_trial(cfg, stream))
                .reduce(Tally::default, Tally::merge)
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!("parallel path compiled out")
    } else {
        (0..cfg.trials)
            .map(|stream| run_trial(cfg, stream))
            .fold(Tally::default(), Tally::merge)
    };
    let judged = cfg.trials - tally.anomalies;
    let fer = if judged == 0 {
        0.0
    } else {
        tally.failures as f64 / judged as f64
    };
    let (ci_lo, ci_hi) = wilson_interval(tally.failures, judged.max(1));
    Ok(FerEstimate {
        failures: tally.failures,
        trials: cfg.trials,
        anomalies: tally.anomalies,
        fer,
        ci_lo,
        ci_hi,
    })
}

fn validate_config(cfg: &TrialConfig) -> Result<()> {
    if cfg.trials == 0 {
        return Err(Error::arg("need at least one trial".to_string()));
    }
    cfg.channel.validate(cfg.params.n(), cfg.params.m())?;
    if cfg.decoder == DecoderTag::Kv {
        if cfg.params.m() > cfg.limits.max_field_bits {
            return Err(Error::Resource(format!(
                "kv decoder is desk-scale: m = {} exceeds limit {}",
                cfg.params.m(),
                cfg.limits.max_field_bits
            )));
        }
        match cfg.strategy {
            Strategy::Pmas { .. } | Strategy::BscMas(_) => {}
            _ => {
                return Err(Error::arg(
                    "kv decoding applies to pmas or bsc_mas strategies".to_string(),
                ))
            }
        }
    }
    Ok(())
}

fn run_trial(cfg: &TrialConfig, stream: u64) -> Tally {
    let mut rng = trial_rng(cfg.seed, stream);
    let params = &cfg.params;
    let q = params.field().size() as u32;
    let msg: Vec<Gf> = (0..params.k())
        .map(|_| rng.random_range(0..q) as Gf)
        .collect();
    let cw = encode(&msg, params).expect("message has length k");
    let word = transmit(&cw, &cfg.channel, params.m(), &mut rng).expect("config validated");

    let failed = match cfg.decoder {
        DecoderTag::Oracle => oracle_rejects(cfg, &word, &cw),
        DecoderTag::Kv => {
            let strategy = match cfg.strategy {
                Strategy::Pmas { m_total } => MasStrategy::Proportional { m_total },
                Strategy::BscMas(mas) => MasStrategy::TwoLevel(mas),
                _ => unreachable!("validated"),
            };
            match asd_decode(&word, strategy, params, &cfg.limits) {
                Ok(list) => !list.contains_message(&msg),
                Err(Error::Resource(_)) => {
                    return Tally {
                        failures: 0,
                        anomalies: 1,
                    }
                }
                Err(_) => true,
            }
        }
    };
    Tally {
        failures: failed as u64,
        anomalies: 0,
    }
}

/// The guaranteed-region failure rule on the realized pattern.
fn oracle_rejects(cfg: &TrialConfig, word: &crate::channels::ReceivedWord, cw: &[Gf]) -> bool {
    let params = &cfg.params;
    let m = params.m();
    match cfg.strategy {
        Strategy::Pmas { .. } => {
            // proportional assignment with unbounded cost: eta >= K - 1
            let profile = TypeProfile::from_erasures(word);
            eta_scaled(&profile, m) < ((params.k() as u128 - 1) << m)
        }
        Strategy::BscMas(mas) => {
            // S = a0 m0 + a1 m1 against C = N(m0^2 + m m1^2)/2, exact integers
            let profile = TypeProfile::from_errors(word, cw);
            let a0 = profile.count(0) as u128;
            let a1 = profile.count(1) as u128;
            let m0 = mas.m0() as u128;
            let m1 = mas.m1() as u128;
            let s = a0 * m0 + a1 * m1;
            let two_c = params.n() as u128 * (m0 * m0 + m as u128 * m1 * m1);
            // S^2 >= 2(K-1)C <=> S^2 >= (K-1) * (2C)
            s * s < (params.k() as u128 - 1) * two_c
        }
        Strategy::Gs => {
            word.symbol_errors(cw) as u64 > baseline_radii(params).gs_errors
        }
        Strategy::BmBaseline => {
            let r = baseline_radii(params);
            if cfg.channel.is_erasure() {
                word.touched_symbols() as u64 > r.bm_erasures
            } else {
                word.symbol_errors(cw) as u64 > r.bm_errors
            }
        }
    }
}

/// Exact guaranteed-region failure probability over the bit-erasure channel
/// under proportional assignment: P(eta < K-1), with each symbol's erased-bit
/// count binomial(m, eps) independently. Computed by convolving the per-symbol
/// distribution of eta scaled to units of 2^-m.
pub fn exact_fer_bec(params: &CodeParams, eps: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::arg(format!("erasure probability {eps} outside [0,1]")));
    }
    let n = params.n();
    let m = params.m() as usize;
    let states = n << m;
    if states > 10_000_000 {
        return Err(Error::Resource(format!(
            "eta state space N * 2^m = {states} exceeds 1e7"
        )));
    }
    // per-symbol: type i with probability C(m,i) eps^i (1-eps)^(m-i),
    // contributing 2^(m-i) eta units
    let mut type_prob = vec![0.0f64; m + 1];
    for (i, slot) in type_prob.iter_mut().enumerate() {
        *slot = binom_coeff(m, i) * eps.powi(i as i32) * (1.0 - eps).powi((m - i) as i32);
    }
    let mut dist = vec![0.0f64; states + 1];
    dist[0] = 1.0;
    let mut max_units = 0usize;
    for _ in 0..n {
        let mut next = vec![0.0f64; states + 1];
        for (u, &p) in dist.iter().enumerate().take(max_units + 1) {
            if p == 0.0 {
                continue;
            }
            for (i, &tp) in type_prob.iter().enumerate() {
                if tp > 0.0 {
                    next[u + (1 << (m - i))] += p * tp;
                }
            }
        }
        max_units += 1 << m;
        dist = next;
    }
    // failure: eta < K-1, i.e. scaled units < (K-1) 2^m; clamp away the
    // last few ulps of summation noise
    let threshold = (params.k() - 1) << m;
    let p: f64 = dist[..threshold.min(dist.len())].iter().sum();
    Ok(p.clamp(0.0, 1.0))
}

fn binom_coeff(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Analytic sandwich for `exact_fer_bec`, valid for rates >= 1/2 + 1/N.
///
/// Upper: erasing more bits than the guaranteed radius is necessary for
/// failure, so P(bits erased > e*) bounds the failure rate from above.
/// Lower: touching more than 2(N-K+1) symbols already defeats the
/// sufficiency test, so that tail bounds it from below.
pub struct FerBounds {
    pub lower: f64,
    pub upper: f64,
}

pub fn fer_bounds(params: &CodeParams, eps: f64) -> Result<FerBounds> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::arg(format!("erasure probability {eps} outside [0,1]")));
    }
    let radius = crate::regions::bec_radius(params).e_star;
    let symbol_bound = crate::regions::bec_undecodable_bound(params)?;
    let n_bits = (params.n() as u64) * params.m() as u64;
    let upper = binomial_sf(n_bits, eps, radius);
    let p_touched = 1.0 - (1.0 - eps).powi(params.m() as i32);
    let lower = binomial_sf(params.n() as u64, p_touched, symbol_bound);
    Ok(FerBounds { lower, upper })
}

/// P(Binomial(n, p) > x).
fn binomial_sf(n: u64, p: f64, x: u64) -> f64 {
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return if x < n { 1.0 } else { 0.0 };
    }
    let dist = Binomial::new(p, n).expect("p validated");
    dist.sf(x)
}

/// Exact failure rate of bounded-distance erasure decoding over the
/// bit-erasure channel: a frame fails when more than N-K symbols contain
/// at least one erased bit.
pub fn bm_erasure_fer_exact(params: &CodeParams, eps: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::arg(format!("erasure probability {eps} outside [0,1]")));
    }
    let p_touched = 1.0 - (1.0 - eps).powi(params.m() as i32);
    Ok(binomial_sf(
        params.n() as u64,
        p_touched,
        (params.n() - params.k()) as u64,
    ))
}

/// Crossover probability of the hard-quantized Gaussian channel at a given
/// information Eb/N0 (dB) and code rate: Q(sqrt(2 R Eb/N0)).
pub fn bsc_crossover_from_ebn0_db(ebn0_db: f64, rate: f64) -> f64 {
    let ebn0 = 10f64.powf(ebn0_db / 10.0);
    q_function((2.0 * rate * ebn0).sqrt())
}

/// Gaussian tail Q(x) = erfc(x / sqrt(2)) / 2.
pub fn q_function(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(x / std::f64::consts::SQRT_2)
}

//! Bit-level channel models and per-symbol type accounting.
//!
//! A symbol of type i has i erased bits (erasure channels) or i flipped bits
//! (symmetric channels). Transmission is driven by a counter-based seeded RNG
//! with an explicit per-trial stream index, so trials are reproducible and
//! independent of execution order.

use crate::algebra::Gf;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Channel family and parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ChannelSpec {
    /// Binary erasure channel: each bit independently erased with probability eps.
    Bec { eps: f64 },
    /// Binary symmetric channel: each bit independently flipped with probability p.
    Bsc { p: f64 },
    /// Exactly `errors` symbols, chosen uniformly, each with one uniformly
    /// chosen bit flipped.
    OneBitBsc { errors: usize },
    /// Aligned groups of u bits erased independently with probability eps
    /// (2^u-ary modulation over an erasure channel).
    ModErasure { u: u32, eps: f64 },
}

impl ChannelSpec {
    pub fn validate(&self, n: usize, m: u32) -> Result<()> {
        match *self {
            ChannelSpec::Bec { eps } | ChannelSpec::ModErasure { eps, .. } if !(0.0..=1.0).contains(&eps) => {
                Err(Error::arg(format!("erasure probability {eps} outside [0,1]")))
            }
            ChannelSpec::Bsc { p } if !(0.0..=1.0).contains(&p) => {
                Err(Error::arg(format!("crossover probability {p} outside [0,1]")))
            }
            ChannelSpec::OneBitBsc { errors } if errors > n => Err(Error::arg(format!(
                "one-bit error count {errors} exceeds n = {n}"
            ))),
            ChannelSpec::ModErasure { u, .. } if u == 0 || m % u != 0 => Err(Error::arg(format!(
                "modulation width u={u} must divide m={m}"
            ))),
            _ => Ok(()),
        }
    }

    /// Tag recorded on words produced by this channel.
    pub fn kind(&self) -> ChannelKind {
        match *self {
            ChannelSpec::Bec { .. } => ChannelKind::Bec,
            ChannelSpec::Bsc { .. } => ChannelKind::Bsc,
            ChannelSpec::OneBitBsc { .. } => ChannelKind::OneBitBsc,
            ChannelSpec::ModErasure { u, .. } => ChannelKind::ModErasure { u },
        }
    }

    /// True for the families whose impairment is erasure rather than error.
    pub fn is_erasure(&self) -> bool {
        matches!(self, ChannelSpec::Bec { .. } | ChannelSpec::ModErasure { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    Bec,
    Bsc,
    OneBitBsc,
    ModErasure { u: u32 },
}

/// One received symbol: channel output bits plus a mask of which bits were
/// observed (1 = known, 0 = erased). Erased bit positions hold value 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReceivedSymbol {
    pub value: Gf,
    pub known_mask: u16,
}

impl ReceivedSymbol {
    pub fn erased_bits(self, m: u32) -> u32 {
        (!self.known_mask & ((1u16 << m) - 1)).count_ones()
    }

    /// The symbol value if fully observed.
    pub fn known_value(self, m: u32) -> Option<Gf> {
        (self.known_mask == (1u16 << m) - 1).then_some(self.value)
    }
}

/// Channel output for a full codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceivedWord {
    pub symbols: Vec<ReceivedSymbol>,
    pub kind: ChannelKind,
    m: u32,
}

impl ReceivedWord {
    pub fn new(symbols: Vec<ReceivedSymbol>, kind: ChannelKind, m: u32) -> Self {
        ReceivedWord { symbols, kind, m }
    }

    /// A fully observed word (no erasures), tagged as BSC output.
    pub fn hard(values: &[Gf], m: u32) -> Self {
        let mask = (1u16 << m) - 1;
        ReceivedWord {
            symbols: values
                .iter()
                .map(|&value| ReceivedSymbol {
                    value,
                    known_mask: mask,
                })
                .collect(),
            kind: ChannelKind::Bsc,
            m,
        }
    }

    /// Erases the lowest `counts[j]` bits of each symbol of `codeword`.
    /// Bit positions within a symbol are interchangeable for type analysis,
    /// so a deterministic placement is enough for worst-pattern studies.
    pub fn erase_low_bits(codeword: &[Gf], counts: &[u32], m: u32) -> Self {
        assert_eq!(codeword.len(), counts.len());
        let full = (1u16 << m) - 1;
        let symbols = codeword
            .iter()
            .zip(counts)
            .map(|(&c, &e)| {
                debug_assert!(e <= m);
                let known_mask = full & !((1u16 << e) - 1);
                ReceivedSymbol {
                    value: c & known_mask,
                    known_mask,
                }
            })
            .collect();
        ReceivedWord {
            symbols,
            kind: ChannelKind::Bec,
            m,
        }
    }

    /// Flips the lowest `counts[j]` bits of each symbol of `codeword`.
    pub fn flip_low_bits(codeword: &[Gf], counts: &[u32], m: u32) -> Self {
        assert_eq!(codeword.len(), counts.len());
        let full = (1u16 << m) - 1;
        let symbols = codeword
            .iter()
            .zip(counts)
            .map(|(&c, &e)| {
                debug_assert!(e <= m);
                ReceivedSymbol {
                    value: c ^ ((1u16 << e) - 1) as Gf,
                    known_mask: full,
                }
            })
            .collect();
        ReceivedWord {
            symbols,
            kind: ChannelKind::Bsc,
            m,
        }
    }

    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Symbol-level view: Some(value) for fully observed symbols, None if any
    /// bit is erased. This is what a conventional erasure decoder sees.
    pub fn symbol_erasure_view(&self) -> Vec<Option<Gf>> {
        self.symbols.iter().map(|s| s.known_value(self.m)).collect()
    }

    /// Number of symbols with at least one erased bit.
    pub fn touched_symbols(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| s.erased_bits(self.m) > 0)
            .count()
    }

    /// Number of symbols whose observed value differs from `sent`
    /// (hard-decision symbol errors; erased symbols count as errors).
    pub fn symbol_errors(&self, sent: &[Gf]) -> usize {
        self.symbols
            .iter()
            .zip(sent)
            .filter(|(s, &c)| s.known_value(self.m) != Some(c))
            .count()
    }
}

/// Per-type symbol counts: counts[i] symbols of type i, sum = n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeProfile {
    counts: Vec<usize>,
}

impl TypeProfile {
    /// Profile with the given counts; index = type.
    pub fn new(counts: Vec<usize>) -> Self {
        TypeProfile { counts }
    }

    /// Bit-level erasure profile: type of a symbol = number of erased bits.
    pub fn from_erasures(word: &ReceivedWord) -> Self {
        let mut counts = vec![0usize; word.m as usize + 1];
        for s in &word.symbols {
            counts[s.erased_bits(word.m) as usize] += 1;
        }
        TypeProfile { counts }
    }

    /// Bit-level error profile against the transmitted codeword. Only the
    /// analysis harness can build this; a decoder never sees it.
    pub fn from_errors(word: &ReceivedWord, sent: &[Gf]) -> Self {
        let mut counts = vec![0usize; word.m as usize + 1];
        for (s, &c) in word.symbols.iter().zip(sent) {
            counts[(s.value ^ c).count_ones() as usize] += 1;
        }
        TypeProfile { counts }
    }

    /// Group-level erasure profile for u-bit modulation symbols: type of a
    /// symbol = number of fully erased u-bit groups. Errors if any group is
    /// partially erased or u does not divide m.
    pub fn from_group_erasures(word: &ReceivedWord, u: u32) -> Result<Self> {
        if u == 0 || word.m % u != 0 {
            return Err(Error::arg(format!(
                "group width u={u} must divide m={}",
                word.m
            )));
        }
        let groups = (word.m / u) as usize;
        let group_mask = (1u16 << u) - 1;
        let mut counts = vec![0usize; groups + 1];
        for s in &word.symbols {
            let mut erased = 0;
            for g in 0..groups {
                let mask = (s.known_mask >> (g as u32 * u)) & group_mask;
                match mask {
                    0 => erased += 1,
                    m if m == group_mask => {}
                    _ => {
                        return Err(Error::arg(
                            "erasures are not aligned to u-bit groups".to_string(),
                        ))
                    }
                }
            }
            counts[erased] += 1;
        }
        Ok(TypeProfile { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, ty: usize) -> usize {
        self.counts.get(ty).copied().unwrap_or(0)
    }

    /// Number of types tracked minus one (= m for bit-level profiles).
    pub fn max_type(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total_symbols(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn total_impaired_bits(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, &c)| i * c).sum()
    }
}

/// Sends `codeword` through the channel using one value of the trial stream.
/// Identical (seed, stream) always reproduces the same word.
pub fn transmit_seeded(
    codeword: &[Gf],
    spec: &ChannelSpec,
    m: u32,
    seed: u64,
    stream: u64,
) -> Result<ReceivedWord> {
    let mut rng = trial_rng(seed, stream);
    transmit(codeword, spec, m, &mut rng)
}

/// RNG for one trial: a seeded ChaCha stream selected by trial index.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Sends `codeword` through the channel, drawing noise from `rng`.
pub fn transmit(
    codeword: &[Gf],
    spec: &ChannelSpec,
    m: u32,
    rng: &mut impl Rng,
) -> Result<ReceivedWord> {
    spec.validate(codeword.len(), m)?;
    let full = (1u16 << m) - 1;
    let symbols = match *spec {
        ChannelSpec::Bec { eps } => codeword
            .iter()
            .map(|&c| {
                let mut known_mask = full;
                for b in 0..m {
                    if rng.random_bool(eps) {
                        known_mask &= !(1 << b);
                    }
                }
                ReceivedSymbol {
                    value: c & known_mask,
                    known_mask,
                }
            })
            .collect(),
        ChannelSpec::Bsc { p } => codeword
            .iter()
            .map(|&c| {
                let mut value = c;
                for b in 0..m {
                    if rng.random_bool(p) {
                        value ^= 1 << b;
                    }
                }
                ReceivedSymbol {
                    value,
                    known_mask: full,
                }
            })
            .collect(),
        ChannelSpec::OneBitBsc { errors } => {
            let n = codeword.len();
            let hit = sample_distinct(n, errors, rng);
            let mut symbols: Vec<ReceivedSymbol> = codeword
                .iter()
                .map(|&value| ReceivedSymbol {
                    value,
                    known_mask: full,
                })
                .collect();
            for j in hit {
                let b = rng.random_range(0..m);
                symbols[j].value ^= 1 << b;
            }
            symbols
        }
        ChannelSpec::ModErasure { u, eps } => {
            let groups = m / u;
            let group_mask = (1u16 << u) - 1;
            codeword
                .iter()
                .map(|&c| {
                    let mut known_mask = full;
                    for g in 0..groups {
                        if rng.random_bool(eps) {
                            known_mask &= !(group_mask << (g * u));
                        }
                    }
                    ReceivedSymbol {
                        value: c & known_mask,
                        known_mask,
                    }
                })
                .collect()
        }
    };
    Ok(ReceivedWord {
        symbols,
        kind: spec.kind(),
        m,
    })
}

/// Uniform sample of `count` distinct indices from 0..n (partial Fisher-Yates).
fn sample_distinct(n: usize, count: usize, rng: &mut impl Rng) -> Vec<usize> {
    debug_assert!(count <= n);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..count {
        let j = rng.random_range(i..n);
        idx.swap(i, j);
    }
    idx.truncate(count);
    idx
}

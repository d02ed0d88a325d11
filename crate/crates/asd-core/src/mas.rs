//! Multiplicity assignment strategies and the decodability oracle.
//!
//! The interpolation-based soft decoder is guaranteed to list the transmitted
//! codeword whenever the score S and cost C of its multiplicity matrix satisfy
//! S^2 >= 2(K-1)C. All verdicts here are computed in exact rational
//! arithmetic: the interesting boundary patterns sit exactly at equality and
//! a floating-point square root would misjudge them.

use crate::algebra::{CodeParams, Gf};
use crate::channels::{ReceivedWord, TypeProfile};
use crate::error::{Error, Result};
use num::rational::Ratio;
use num::Zero;

/// Exact rational used for scores, costs, and eta.
pub type Rat = Ratio<i128>;

/// Largest accepted per-symbol multiplicity; keeps all rational arithmetic
/// comfortably inside i128.
pub const MAX_MULTIPLICITY: u64 = 1 << 20;

fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// eta = sum over types of a_i 2^-i, the per-word decodability statistic.
/// Under proportional assignment, a word is guaranteed-decodable (with
/// unbounded cost) exactly when eta >= K - 1.
pub fn eta(profile: &TypeProfile) -> Rat {
    let mut acc = Rat::zero();
    for (i, &a) in profile.counts().iter().enumerate() {
        acc += rat(a as i128) / rat(1i128 << i);
    }
    acc
}

/// eta scaled by 2^m, as an integer. Fast path for trial loops; compare
/// against (K-1) * 2^m.
pub fn eta_scaled(profile: &TypeProfile, m: u32) -> u128 {
    debug_assert!(profile.max_type() <= m as usize);
    profile
        .counts()
        .iter()
        .enumerate()
        .map(|(i, &a)| (a as u128) << (m as usize - i))
        .sum()
}

/// The sufficiency test S^2 >= 2(K-1)C on exact rationals.
///
/// Equality is admitted: a score exactly on the boundary is decodable.
pub fn sufficient(score: &Rat, cost: &Rat, params: &CodeParams) -> bool {
    if score < &Rat::zero() {
        return false;
    }
    score * score >= rat(2 * (params.k() as i128 - 1)) * cost
}

/// Integer form of the sufficiency test for matrix-valued (integer) S and C.
pub fn sufficient_int(score: u128, cost: u128, params: &CodeParams) -> bool {
    score * score >= 2 * (params.k() as u128 - 1) * cost
}

/// Whether multiplicities are exact rationals (unbounded-cost analysis) or
/// integers (a matrix an actual decoder can consume).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MasMode {
    Asymptotic,
    Finite,
}

/// Proportional per-type multiplicities m_i = M 2^-i, where M is the total
/// multiplicity spent on each symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct MasProfile {
    per_type: Vec<Rat>,
    total_per_symbol: Rat,
    mode: MasMode,
}

impl MasProfile {
    /// Multiplicity assigned to each candidate of a type-i symbol.
    pub fn multiplicity(&self, ty: usize) -> &Rat {
        &self.per_type[ty]
    }

    /// Integer multiplicity for a type (finite mode only).
    pub fn multiplicity_int(&self, ty: usize) -> u32 {
        debug_assert_eq!(self.mode, MasMode::Finite);
        *self.per_type[ty].numer() as u32
    }

    pub fn total_per_symbol(&self) -> &Rat {
        &self.total_per_symbol
    }

    pub fn mode(&self) -> MasMode {
        self.mode
    }

    pub fn max_type(&self) -> usize {
        self.per_type.len() - 1
    }
}

/// Proportional assignment for a received erasure profile: every candidate of
/// a type-i symbol gets M 2^-i, so each symbol carries total multiplicity M.
///
/// Finite mode requires 2^m | M so every per-type multiplicity is an integer.
pub fn pmas_assign(profile: &TypeProfile, m_total: u64, mode: MasMode) -> Result<MasProfile> {
    if m_total == 0 || m_total > MAX_MULTIPLICITY {
        return Err(Error::arg(format!(
            "total multiplicity {m_total} outside 1..={MAX_MULTIPLICITY}"
        )));
    }
    let types = profile.max_type();
    if mode == MasMode::Finite && m_total % (1u64 << types) != 0 {
        return Err(Error::arg(format!(
            "finite proportional assignment needs 2^{types} | M, got M = {m_total}"
        )));
    }
    let per_type = (0..=types)
        .map(|i| rat(m_total as i128) / rat(1i128 << i))
        .collect();
    Ok(MasProfile {
        per_type,
        total_per_symbol: rat(m_total as i128),
        mode,
    })
}

/// Two-level assignment for symmetric channels: the received symbol gets m0,
/// each of its m one-bit neighbours gets m1 = t * m0, everything else zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BscMas {
    m0: u32,
    m1: u32,
}

/// Base multiplicity used when only the coefficient t is given; large enough
/// that rounding m1 = round(t * m0) perturbs t by less than 0.5%.
pub const DEFAULT_BSC_M0: u32 = 100;

impl BscMas {
    /// Integer pair (m0, m1) with m1 <= m0.
    pub fn new(m0: u32, m1: u32) -> Result<Self> {
        if m0 == 0 || m0 as u64 > MAX_MULTIPLICITY {
            return Err(Error::arg(format!(
                "base multiplicity {m0} outside 1..={MAX_MULTIPLICITY}"
            )));
        }
        if m1 > m0 {
            return Err(Error::arg(format!(
                "neighbour multiplicity {m1} exceeds base {m0}"
            )));
        }
        Ok(BscMas { m0, m1 })
    }

    /// From a coefficient t in [0,1]: m1 = round(t * m0).
    pub fn from_coefficient(t: f64, m0: u32) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::arg(format!("coefficient t={t} outside [0,1]")));
        }
        Self::new(m0, (t * m0 as f64).round() as u32)
    }

    pub fn m0(&self) -> u32 {
        self.m0
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }

    /// The realized coefficient m1 / m0.
    pub fn t(&self) -> Rat {
        rat(self.m1 as i128) / rat(self.m0 as i128)
    }
}

/// Dense q x n multiplicity matrix: entry (candidate value, position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityMatrix {
    q: usize,
    n: usize,
    entries: Vec<u32>,
}

impl MultiplicityMatrix {
    pub fn zero(q: usize, n: usize) -> Self {
        MultiplicityMatrix {
            q,
            n,
            entries: vec![0; q * n],
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, value: Gf, pos: usize) -> u32 {
        self.entries[value as usize * self.n + pos]
    }

    #[inline]
    pub fn set(&mut self, value: Gf, pos: usize, mult: u32) {
        self.entries[value as usize * self.n + pos] = mult;
    }

    /// Nonzero entries as (value, position, multiplicity).
    pub fn nonzero(&self) -> impl Iterator<Item = (Gf, usize, u32)> + '_ {
        self.entries.iter().enumerate().filter_map(move |(i, &m)| {
            (m > 0).then(|| ((i / self.n) as Gf, i % self.n, m))
        })
    }

    /// Number of interpolation constraints the matrix induces:
    /// sum of C(m_ij + 1, 2) over all entries.
    pub fn cost_exact(&self) -> u128 {
        self.entries
            .iter()
            .map(|&m| {
                let m = m as u128;
                m * (m + 1) / 2
            })
            .sum()
    }

    /// Quadratic cost approximation (1/2) sum m_ij^2; tight for large entries.
    pub fn cost_asymptotic(&self) -> Rat {
        let sq: i128 = self.entries.iter().map(|&m| (m as i128) * (m as i128)).sum();
        rat(sq) / rat(2)
    }

    /// Multiplicity landed on the transmitted codeword's points.
    pub fn score(&self, codeword: &[Gf]) -> u128 {
        debug_assert_eq!(codeword.len(), self.n);
        codeword
            .iter()
            .enumerate()
            .map(|(j, &c)| self.get(c, j) as u128)
            .sum()
    }
}

/// Builds the proportional matrix for an erasure-channel word: each candidate
/// consistent with the observed bits of symbol j gets the type multiplicity.
pub fn pmas_matrix(
    word: &ReceivedWord,
    m_total: u64,
    params: &CodeParams,
) -> Result<MultiplicityMatrix> {
    let profile = TypeProfile::from_erasures(word);
    let mas = pmas_assign(&profile, m_total, MasMode::Finite)?;
    let q = params.field().size();
    let m = params.m();
    let mut matrix = MultiplicityMatrix::zero(q, word.n());
    for (j, s) in word.symbols.iter().enumerate() {
        let ty = s.erased_bits(m) as usize;
        let mult = mas.multiplicity_int(ty);
        for v in 0..q as Gf {
            if (v ^ s.value) & s.known_mask == 0 {
                matrix.set(v, j, mult);
            }
        }
    }
    Ok(matrix)
}

/// Builds the two-level matrix for a fully observed word: received value gets
/// m0, one-bit neighbours get m1.
pub fn bsc_matrix(
    word: &ReceivedWord,
    mas: BscMas,
    params: &CodeParams,
) -> Result<MultiplicityMatrix> {
    let m = params.m();
    let full = (1u16 << m) - 1;
    if word.symbols.iter().any(|s| s.known_mask != full) {
        return Err(Error::arg(
            "two-level assignment needs a fully observed (no-erasure) word".to_string(),
        ));
    }
    let mut matrix = MultiplicityMatrix::zero(params.field().size(), word.n());
    for (j, s) in word.symbols.iter().enumerate() {
        matrix.set(s.value, j, mas.m0());
        if mas.m1() > 0 {
            for b in 0..m {
                matrix.set(s.value ^ (1 << b), j, mas.m1());
            }
        }
    }
    Ok(matrix)
}

/// Score, cost, and verdict for one matrix against the transmitted codeword.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodabilityReport {
    pub score: Rat,
    pub cost_exact: Rat,
    pub cost_asymptotic: Rat,
    /// eta of the underlying erasure profile, when the report comes from a
    /// proportional assignment; None for matrix-only reports.
    pub eta: Option<Rat>,
    /// Sufficiency verdict on (score, cost_exact). A zero score is never
    /// decodable: with no mass on the codeword nothing forces it onto the list.
    pub decodable: bool,
}

/// Evaluates a matrix against the transmitted codeword.
pub fn score_cost(
    matrix: &MultiplicityMatrix,
    codeword: &[Gf],
    params: &CodeParams,
) -> DecodabilityReport {
    let score = matrix.score(codeword);
    let cost_exact = matrix.cost_exact();
    DecodabilityReport {
        score: rat(score as i128),
        cost_exact: rat(cost_exact as i128),
        cost_asymptotic: matrix.cost_asymptotic(),
        eta: None,
        decodable: score > 0 && sufficient_int(score, cost_exact, params),
    }
}

/// Closed-form report for a proportional assignment with unbounded cost:
/// S = eta M, C = eta M^2 / 2, so the verdict reduces to eta >= K - 1.
pub fn pmas_report(profile: &TypeProfile, m_total: u64, params: &CodeParams) -> DecodabilityReport {
    let eta = eta(profile);
    let m_rat = rat(m_total as i128);
    let score = &eta * &m_rat;
    let cost = &eta * &m_rat * &m_rat / rat(2);
    let decodable = score > Rat::zero() && sufficient(&score, &cost, params);
    DecodabilityReport {
        score,
        cost_exact: cost.clone(),
        cost_asymptotic: cost,
        eta: Some(eta),
        decodable,
    }
}

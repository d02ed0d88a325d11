//! Guaranteed decoding radii for the three channel families, worst-case
//! pattern generators, and the classical baseline radii.
//!
//! Conventions: a pattern is guaranteed-decodable when the sufficiency test
//! holds (equality included), so a radius is the largest impairment count
//! whose worst-case pattern still satisfies it.

use crate::algebra::CodeParams;
use crate::error::{Error, Result};
use crate::mas::Rat;
use num::Zero;

/// Which formula produced a bit-erasure radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BecBranch {
    /// K >= N/2 + 1: worst pattern uses single-bit erasures only.
    HighRate,
    /// N/4 + 1 <= K <= N/2 + 1: worst pattern mixes one- and two-bit symbols.
    MidRate,
    /// Below the closed forms; the search oracle supplies the value.
    Search,
}

impl BecBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            BecBranch::HighRate => "high_rate",
            BecBranch::MidRate => "mid_rate",
            BecBranch::Search => "lp",
        }
    }
}

/// Worst-case impairment pattern: counts[i] symbols carry i impaired bits
/// (or i erased groups, for modulation patterns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCasePattern {
    counts: Vec<u64>,
}

impl WorstCasePattern {
    pub fn new(counts: Vec<u64>) -> Self {
        WorstCasePattern { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, ty: usize) -> u64 {
        self.counts.get(ty).copied().unwrap_or(0)
    }

    pub fn total_symbols(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total_impaired_bits(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| i as u64 * c)
            .sum()
    }

    /// Per-symbol impaired-bit counts, for materializing the pattern onto a
    /// codeword (impaired symbols first).
    pub fn per_symbol_counts(&self, n: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(n);
        for (ty, &c) in self.counts.iter().enumerate().rev() {
            for _ in 0..c {
                out.push(ty as u32);
            }
        }
        assert!(out.len() <= n);
        out.resize(n, 0);
        out
    }
}

/// Guaranteed bit-erasure radius with its realizing worst pattern.
///
/// `e1_star` / `e2_star` are the counts of one- and two-bit symbols in the
/// worst pattern; on the closed-form branches the radius decomposes as
/// e* = e1* + 2 e2*. Below those rates the worst pattern spreads over
/// heavier types and `pattern` carries the full composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BecRadius {
    pub e_star: u64,
    pub e1_star: u64,
    pub e2_star: u64,
    pub branch: BecBranch,
    pub pattern: WorstCasePattern,
}

/// Bit-erasure radius under proportional assignment.
///
/// Closed forms: e* = 2(N-K+1) for K >= N/2 + 1 and e* = 3N - 4(K-1) for
/// N/4 + 1 <= K <= N/2 + 1. Lower rates fall through to the search oracle.
pub fn bec_radius(params: &CodeParams) -> BecRadius {
    let n = params.n() as u64;
    let k = params.k() as u64;
    // K >= N/2 + 1 <=> 2(K-1) >= N
    if 2 * (k - 1) >= n {
        let e1 = 2 * (n - k + 1);
        let mut counts = vec![0u64; params.m() as usize + 1];
        counts[1] = e1;
        counts[0] = n - e1;
        return BecRadius {
            e_star: e1,
            e1_star: e1,
            e2_star: 0,
            branch: BecBranch::HighRate,
            pattern: WorstCasePattern::new(counts),
        };
    }
    // N/4 + 1 <= K <=> 4(K-1) >= N
    if 4 * (k - 1) >= n {
        let e1 = 4 * (k - 1) - n;
        let e2 = 2 * (n - 2 * (k - 1));
        let mut counts = vec![0u64; params.m() as usize + 1];
        counts[1] = e1;
        counts[2] = e2;
        counts[0] = n - e1 - e2;
        return BecRadius {
            e_star: 3 * n - 4 * (k - 1),
            e1_star: e1,
            e2_star: e2,
            branch: BecBranch::MidRate,
            pattern: WorstCasePattern::new(counts),
        };
    }
    let e_star = bec_radius_oracle(params);
    let pattern = worst_pattern_bec(params, e_star).expect("oracle radius is within range");
    BecRadius {
        e1_star: pattern.count(1),
        e2_star: pattern.count(2),
        e_star,
        branch: BecBranch::Search,
        pattern,
    }
}

/// Exact bit-erasure radius by dynamic programming over all type
/// compositions, independent of the closed forms and of the even-spread
/// worst-pattern argument.
///
/// For every erased-bit total e it minimizes eta (scaled by 2^m) over
/// compositions of the N symbols into types, then returns the largest e whose
/// minimum still satisfies eta >= K - 1.
pub fn bec_radius_oracle(params: &CodeParams) -> u64 {
    let n = params.n();
    let m = params.m() as usize;
    let max_bits = n * m;
    let threshold = ((params.k() - 1) as u128) << m;
    const INF: u128 = u128::MAX;

    // best[s][b] = minimal scaled eta using s symbols and b erased bits
    let mut best = vec![INF; max_bits + 1];
    best[0] = 0;
    for _symbol in 0..n {
        let mut next = vec![INF; max_bits + 1];
        for b in 0..=max_bits {
            if best[b] == INF {
                continue;
            }
            for ty in 0..=m {
                let nb = b + ty;
                if nb > max_bits {
                    break;
                }
                let v = best[b] + (1u128 << (m - ty));
                if v < next[nb] {
                    next[nb] = v;
                }
            }
        }
        best = next;
    }
    let mut radius = 0;
    for (bits, &v) in best.iter().enumerate() {
        if v != INF && v >= threshold {
            radius = bits as u64;
        }
    }
    radius
}

/// Corollary bound for rates >= 1/2 + 1/N: once more than 2(N-K+1) symbols
/// contain erased bits, the sufficiency test cannot hold even if every
/// touched symbol is only type 1.
pub fn bec_undecodable_bound(params: &CodeParams) -> Result<u64> {
    let n = params.n() as u64;
    let k = params.k() as u64;
    if 2 * k < n + 2 {
        return Err(Error::NotApplicable(format!(
            "needs rate >= 1/2 + 1/N, got K = {k}, N = {n}"
        )));
    }
    Ok(2 * (n - k + 1))
}

/// The eta-minimizing pattern with e erased bits: bits spread over different
/// symbols as evenly as possible, floor(e/N) bits in N - (e mod N) symbols
/// and one more in the rest.
pub fn worst_pattern_bec(params: &CodeParams, e: u64) -> Result<WorstCasePattern> {
    let n = params.n() as u64;
    let m = params.m() as u64;
    if e > n * m {
        return Err(Error::arg(format!(
            "erasure count {e} exceeds N*m = {}",
            n * m
        )));
    }
    let q = (e / n) as usize;
    let r = e % n;
    let mut counts = vec![0u64; params.m() as usize + 1];
    counts[q] += n - r;
    if r > 0 {
        counts[q + 1] += r;
    }
    Ok(WorstCasePattern::new(counts))
}

/// Tangent solution for the two-level assignment over the one-bit-flipped
/// symmetric channel.
#[derive(Debug, Clone, PartialEq)]
pub struct BscRadiusSolution {
    /// Discriminant (m(K-1))^2 + (N-K+1)(m^2(K-1) - mN), exact.
    pub delta: i128,
    /// Tangential point on the hyperbola y^2/(N(K-1)) - m x^2 = 1.
    pub x0: f64,
    pub y0: f64,
    /// Real guaranteed radius (the tangent slope).
    pub d: f64,
    /// Integer radius, certified by exact substitution back into the
    /// score inequality.
    pub d_floor: u64,
    /// First-order approximation N(N-K+1)/(N+K-1).
    pub d_tilde: f64,
    /// Optimal multiplicity coefficient (= x0; 1 in the full-correction regime).
    pub t_star: f64,
    /// N >= (K-1)(1+m): m1 = m0 corrects every one-bit-flipped pattern.
    pub full_correction: bool,
}

impl BscRadiusSolution {
    /// Whether the radius also certifies the unrestricted symmetric channel:
    /// the spreading argument that reduces it to the one-bit-flipped case
    /// needs t* <= 1/2.
    pub fn general_bsc_certified(&self) -> bool {
        !self.full_correction && self.t_star <= 0.5
    }
}

/// Exact check that e one-bit-flipped errors are within the guaranteed region
/// for some coefficient t in [0, 1): there must be a t with
/// ((N-e) + e t)^2 >= N(K-1)(1 + m t^2). The left-right difference is a
/// quadratic in t with integer coefficients, so the check is exact.
fn one_bit_radius_admits(params: &CodeParams, e: u64) -> bool {
    let n = params.n() as i128;
    let k1 = params.k() as i128 - 1;
    let m = params.m() as i128;
    let e = e as i128;
    if e > n {
        return false;
    }
    // P(t) = a t^2 + b t + c with a = e^2 - N(K-1)m, b = 2e(N-e), c = (N-e)^2 - N(K-1)
    let a = e * e - n * k1 * m;
    let b = 2 * e * (n - e);
    let c = (n - e) * (n - e) - n * k1;
    if c >= 0 {
        return true; // t = 0 works
    }
    if a >= 0 {
        // convex (or linear): positive somewhere on [0,1) iff near t -> 1,
        // i.e. sup = P(1) = N^2 - N(K-1)(1+m); boundary t = 1 itself excluded
        return a + b + c > 0;
    }
    // concave: maximum at the vertex t_v = b / (2|a|)
    let two_abs_a = -2 * a;
    if b >= two_abs_a {
        // vertex at or beyond 1: P increasing on [0,1), sup = P(1)
        return a + b + c > 0;
    }
    // vertex maximum: P(t_v) = c - b^2/(4a) >= 0, which for a < 0 (and c < 0
    // from above) is b^2 >= 4ac
    b * b >= 4 * a * c
}

/// Optimal two-level assignment and radius for the one-bit-flipped symmetric
/// channel. For N >= (K-1)(1+m) setting m1 = m0 corrects everything;
/// otherwise the optimum is the tangent from (1, N) to the hyperbola.
pub fn bsc_optimal(params: &CodeParams) -> BscRadiusSolution {
    let n = params.n() as i128;
    let k1 = params.k() as i128 - 1;
    let m = params.m() as i128;
    let nf = n as f64;
    let k1f = k1 as f64;
    let mf = m as f64;

    let delta = (m * k1) * (m * k1) + (n - k1) * (m * m * k1 - m * n);
    let d_tilde = nf * (nf - k1f) / (nf + k1f);

    if n >= k1 * (1 + m) {
        let y0 = (nf * k1f * (1.0 + mf)).sqrt();
        return BscRadiusSolution {
            delta,
            x0: 1.0,
            y0,
            d: nf,
            d_floor: n as u64,
            d_tilde,
            t_star: 1.0,
            full_correction: true,
        };
    }

    // x0 solves (m^2(K-1) - mN) x^2 + 2m(K-1) x - (N-K+1) = 0, positive root
    let sqrt_delta = exact_sqrt(delta);
    let a = (m * m * k1 - m * n) as f64;
    let x0 = if a != 0.0 {
        (-(m * k1) as f64 + sqrt_delta) / a
    } else {
        // degenerate linear case m(K-1) = N
        (n - k1) as f64 / (2.0 * (m * k1) as f64)
    };
    let y0 = (nf * k1f * (1.0 + mf * x0 * x0)).sqrt();
    let d = nf * mf / (mf + 1.0 / x0);

    // floor with a guard band, then certify by exact substitution
    let mut d_floor = d.floor() as u64;
    while d_floor > 0 && !one_bit_radius_admits(params, d_floor) {
        d_floor -= 1;
    }
    while d_floor < n as u64 && one_bit_radius_admits(params, d_floor + 1) {
        d_floor += 1;
    }

    BscRadiusSolution {
        delta,
        x0,
        y0,
        d,
        d_floor,
        d_tilde,
        t_star: x0,
        full_correction: false,
    }
}

/// sqrt of a nonnegative integer, exact when it is a perfect square.
fn exact_sqrt(v: i128) -> f64 {
    debug_assert!(v >= 0);
    let r = (v as u128).isqrt();
    if r * r == v as u128 {
        r as f64
    } else {
        (v as f64).sqrt()
    }
}

/// Guaranteed one-bit-flipped radius at a fixed coefficient t in [0, 1):
/// (N - sqrt(N(K-1)(1 + m t^2))) / (1 - t). `bsc_optimal` maximizes this.
pub fn bsc_radius_at(params: &CodeParams, t: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::arg(format!(
            "coefficient t={t} outside [0,1); t = 1 is the full-correction regime"
        )));
    }
    let n = params.n() as f64;
    let k1 = (params.k() - 1) as f64;
    let m = params.m() as f64;
    Ok((n - (n * k1 * (1.0 + m * t * t)).sqrt()) / (1.0 - t))
}

/// Score-minimal error pattern with e flipped bits under the two-level
/// assignment: all bits in distinct symbols. Certified only for t <= 1/2,
/// where pairing two single-bit errors into one symbol can never lower the
/// score; beyond that the spreading argument fails.
pub fn worst_pattern_bsc(params: &CodeParams, e: u64, t: Rat) -> Result<WorstCasePattern> {
    let n = params.n() as u64;
    if e > n {
        return Err(Error::arg(format!("error count {e} exceeds N = {n}")));
    }
    if t > Rat::new(1, 2) || t < Rat::zero() {
        return Err(Error::NotApplicable(format!(
            "spreading is only certified worst-case for 0 <= t <= 1/2, got t = {t}"
        )));
    }
    let mut counts = vec![0u64; params.m() as usize + 1];
    counts[1] = e;
    counts[0] = n - e;
    Ok(WorstCasePattern::new(counts))
}

/// Guaranteed number of correctable u-bit erasure events for 2^u-ary
/// modulation over an erasure channel: floor((N-K+1)/(1 - 2^-u)), valid for
/// rates >= 2^-u + 1/N.
pub fn mod_radius(params: &CodeParams, u: u32) -> Result<u64> {
    let n = params.n() as u64;
    let k = params.k() as u64;
    let m = params.m();
    if u == 0 || m % u != 0 {
        return Err(Error::arg(format!(
            "modulation width u={u} must divide m={m}"
        )));
    }
    if u >= 64 || (k - 1) << u < n {
        return Err(Error::NotApplicable(format!(
            "needs rate >= 2^-{u} + 1/N, got K = {k}, N = {n}"
        )));
    }
    let pow = 1u64 << u;
    Ok((n - k + 1) * pow / (pow - 1))
}

/// Classical reference radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaselineRadii {
    /// Bounded-distance error radius floor((N-K)/2).
    pub bm_errors: u64,
    /// Bounded-distance erasure radius N-K.
    pub bm_erasures: u64,
    /// Hard-decision list-decoding radius N - 1 - floor(sqrt(N(K-1))).
    pub gs_errors: u64,
}

pub fn baseline_radii(params: &CodeParams) -> BaselineRadii {
    let n = params.n() as u64;
    let k = params.k() as u64;
    BaselineRadii {
        bm_errors: (n - k) / 2,
        bm_erasures: n - k,
        gs_errors: n - 1 - (n * (k - 1)).isqrt(),
    }
}

use super::field::{FieldContext, Gf};
use super::poly::{lagrange_interpolate, Poly};
use crate::error::{Error, Result};

/// Reed-Solomon code parameters: length n, dimension k, and the field.
///
/// Encoding is by evaluation: the message is read as the coefficients of a
/// polynomial of degree < k and evaluated at n distinct nonzero points
/// (defaults to alpha^0 .. alpha^(n-1)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    n: usize,
    k: usize,
    ctx: FieldContext,
    eval_points: Vec<Gf>,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, ctx: FieldContext) -> Result<Self> {
        let points = (0..n).map(|i| ctx.alpha_pow(i)).collect();
        Self::with_eval_points(n, k, ctx, points)
    }

    /// Explicit evaluation points, for shortened codes. Points must be
    /// pairwise distinct and nonzero.
    pub fn with_eval_points(n: usize, k: usize, ctx: FieldContext, points: Vec<Gf>) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::arg(format!("need 1 <= k <= n, got k={k} n={n}")));
        }
        if n > ctx.order() {
            return Err(Error::arg(format!(
                "n={n} exceeds 2^m - 1 = {} for m={}",
                ctx.order(),
                ctx.m()
            )));
        }
        if points.len() != n {
            return Err(Error::arg(format!(
                "expected {n} evaluation points, got {}",
                points.len()
            )));
        }
        let mut seen = vec![false; ctx.size()];
        for &p in &points {
            if p == 0 || (p as usize) >= ctx.size() || seen[p as usize] {
                return Err(Error::arg(
                    "evaluation points must be distinct, nonzero field elements".to_string(),
                ));
            }
            seen[p as usize] = true;
        }
        Ok(CodeParams {
            n,
            k,
            ctx,
            eval_points: points,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn eval_points(&self) -> &[Gf] {
        &self.eval_points
    }
}

/// Evaluation-map encoding of a k-symbol message.
pub fn encode(msg: &[Gf], params: &CodeParams) -> Result<Vec<Gf>> {
    if msg.len() != params.k {
        return Err(Error::arg(format!(
            "message length {} != k = {}",
            msg.len(),
            params.k
        )));
    }
    let f = Poly::new(msg.to_vec());
    Ok(params
        .eval_points
        .iter()
        .map(|&x| f.eval(x, &params.ctx))
        .collect())
}

/// Recovers the message from a received word with symbol erasures
/// (None = erased). Needs at least k clean coordinates, and every clean
/// coordinate must be consistent with one codeword; this is the classical
/// n - k erasure radius.
pub fn erasure_decode(received: &[Option<Gf>], params: &CodeParams) -> Result<Vec<Gf>> {
    if received.len() != params.n {
        return Err(Error::arg(format!(
            "received length {} != n = {}",
            received.len(),
            params.n
        )));
    }
    let clean: Vec<(Gf, Gf)> = received
        .iter()
        .enumerate()
        .filter_map(|(j, v)| v.map(|y| (params.eval_points[j], y)))
        .collect();
    if clean.len() < params.k {
        return Err(Error::Decode(format!(
            "insufficient coordinates: {} clean, need {}",
            clean.len(),
            params.k
        )));
    }
    let f = lagrange_interpolate(&clean[..params.k], &params.ctx);
    if f.degree().map_or(false, |d| d >= params.k) {
        return Err(Error::Decode("not a codeword".into()));
    }
    for &(x, y) in &clean[params.k..] {
        if f.eval(x, &params.ctx) != y {
            return Err(Error::Decode("not a codeword".into()));
        }
    }
    let mut msg = f.coeffs().to_vec();
    msg.resize(params.k, 0);
    Ok(msg)
}

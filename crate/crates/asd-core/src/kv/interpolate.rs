use super::bivariate::BivariatePoly;
use crate::algebra::{CodeParams, FieldContext, Gf, Poly};
use crate::error::{Error, Result};
use crate::mas::MultiplicityMatrix;

/// Resource bounds for the desk-scale decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecoderLimits {
    /// Maximum number of interpolation constraints (the matrix cost).
    pub max_cost: u128,
    /// Largest field degree the decoder accepts.
    pub max_field_bits: u32,
}

impl Default for DecoderLimits {
    fn default() -> Self {
        DecoderLimits {
            max_cost: 100_000,
            max_field_bits: 4,
        }
    }
}

/// Smallest weighted degree W whose monomial count exceeds `cost`, and the
/// matching y-degree bound floor(W / (k-1)). A nonzero interpolation
/// polynomial of weighted degree <= W always exists because the constraints
/// are `cost` linear conditions on more than `cost` monomials.
pub(crate) fn weighted_degree_bound(cost: u128, k: usize) -> (usize, usize) {
    let kappa = (k - 1) as u128;
    let mut w = 0u128;
    loop {
        let b = w / kappa;
        let count = (b + 1) * (w + 1) - kappa * b * (b + 1) / 2;
        if count > cost {
            return (w as usize, (w / kappa) as usize);
        }
        w += 1;
    }
}

/// Basis polynomial in flat form: x-coefficient rows indexed by y-degree,
/// with the leading monomial cached. Updates keep the cache exact: adding a
/// strictly lower-ordered polynomial never touches the leading coefficient
/// (the (wdeg, ydeg) order is injective on monomials), and the pivot
/// multiplication shifts it by exactly one x-degree.
struct BasisPoly {
    rows: Vec<Vec<Gf>>,
    /// (weighted degree, y-degree) of the leading monomial.
    lead: (usize, usize),
}

impl BasisPoly {
    fn y_power(b: usize, kappa: usize) -> Self {
        let mut rows = vec![Vec::new(); b + 1];
        rows[b] = vec![1];
        BasisPoly {
            rows,
            lead: (b * kappa, b),
        }
    }

    fn max_x_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Hasse derivative of order (r, s) at (x, y), with x-powers supplied.
    /// Only indices with odd binomials contribute (C(a,r) resp. C(b,s) odd
    /// iff the low index is a submask), so both loops jump straight from one
    /// superset to the next: (i + 1) | mask is the next integer containing mask.
    fn hasse_at(&self, r: usize, s: usize, xpow: &[Gf], y: Gf, ctx: &FieldContext) -> Gf {
        let mut acc = 0;
        let mut b = s;
        while b < self.rows.len() {
            let row = &self.rows[b];
            if row.len() > r {
                let mut inner = 0;
                let mut a = r;
                while a < row.len() {
                    let c = row[a];
                    if c != 0 {
                        inner ^= ctx.mul(c, xpow[a - r]);
                    }
                    a = (a + 1) | r;
                }
                if inner != 0 {
                    let y_factor = if b == s { 1 } else { ctx.pow(y, b - s) };
                    acc ^= ctx.mul(inner, y_factor);
                }
            }
            b = (b + 1) | s;
        }
        acc
    }

    /// self += scale * other; callers guarantee other's order is strictly
    /// below self's, so the cached lead is unchanged.
    fn add_scaled(&mut self, other: &BasisPoly, scale: Gf, ctx: &FieldContext) {
        if self.rows.len() < other.rows.len() {
            self.rows.resize(other.rows.len(), Vec::new());
        }
        let table = ctx.scale_row(scale);
        for (dst, src) in self.rows.iter_mut().zip(&other.rows) {
            if dst.len() < src.len() {
                dst.resize(src.len(), 0);
            }
            match table {
                Some(row) => {
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d ^= row[s as usize];
                    }
                }
                None => {
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d ^= ctx.mul(scale, s);
                    }
                }
            }
        }
    }

    /// self *= (x - x0); the lead gains one x-degree.
    fn mul_x_minus(&mut self, x0: Gf, ctx: &FieldContext) {
        let table = ctx.scale_row(x0);
        for row in &mut self.rows {
            if row.is_empty() {
                continue;
            }
            row.push(0);
            for a in (0..row.len() - 1).rev() {
                let old = row[a];
                row[a + 1] ^= old;
                row[a] = match table {
                    Some(t) => t[old as usize],
                    None => ctx.mul(old, x0),
                };
            }
        }
        self.lead.0 += 1;
    }

    fn into_bivariate(self, kappa: usize) -> BivariatePoly {
        BivariatePoly::from_coeffs(self.rows.into_iter().map(Poly::new).collect(), kappa)
    }
}

/// Koetter's iterative interpolation: the minimal (1, k-1)-weighted-degree
/// nonzero polynomial vanishing at (x_j, value) with the multiplicity the
/// matrix prescribes, taking vanishing to order m as all Hasse derivatives
/// (r, s) with r + s < m being zero.
pub fn interpolate(
    matrix: &MultiplicityMatrix,
    params: &CodeParams,
    limits: &DecoderLimits,
) -> Result<BivariatePoly> {
    if params.k() < 2 {
        return Err(Error::arg(
            "list interpolation needs k >= 2; k = 1 has a degenerate weighted order".to_string(),
        ));
    }
    if matrix.n() != params.n() {
        return Err(Error::arg(format!(
            "matrix has {} positions, code has {}",
            matrix.n(),
            params.n()
        )));
    }
    let cost = matrix.cost_exact();
    if cost > limits.max_cost {
        return Err(Error::Resource(format!(
            "interpolation cost {cost} exceeds budget {}",
            limits.max_cost
        )));
    }
    let kappa = params.k() - 1;
    if cost == 0 {
        return Ok(BivariatePoly::one(kappa));
    }
    let (_, l) = weighted_degree_bound(cost, params.k());
    let ctx = params.field();

    let mut basis: Vec<BasisPoly> = (0..=l).map(|b| BasisPoly::y_power(b, kappa)).collect();
    let mut discrepancies = vec![0 as Gf; basis.len()];
    let mut xpow: Vec<Gf> = vec![1];

    for (value, pos, mult) in matrix.nonzero() {
        let x = params.eval_points()[pos];
        let mult = mult as usize;
        // power table for this point, sized for the growth the point can cause
        let need = basis.iter().map(BasisPoly::max_x_degree).max().unwrap_or(0)
            + mult * (mult + 1) / 2
            + 1;
        xpow.resize(1, 1);
        for i in 1..=need {
            let prev = xpow[i - 1];
            xpow.push(ctx.mul(prev, x));
        }
        for r in 0..mult {
            for s in 0..mult - r {
                let mut pivot: Option<usize> = None;
                for (i, g) in basis.iter().enumerate() {
                    let d = g.hasse_at(r, s, &xpow, value, ctx);
                    discrepancies[i] = d;
                    if d != 0 && pivot.map_or(true, |p| basis[i].lead < basis[p].lead) {
                        pivot = Some(i);
                    }
                }
                let Some(p) = pivot else { continue };
                let d_p = discrepancies[p];
                let (before, rest) = basis.split_at_mut(p);
                let (pivot_poly, after) = rest.split_first_mut().expect("pivot in range");
                for (j, g) in before
                    .iter_mut()
                    .enumerate()
                    .chain(after.iter_mut().enumerate().map(|(j, g)| (j + p + 1, g)))
                {
                    if discrepancies[j] != 0 {
                        let scale = ctx.div(discrepancies[j], d_p).expect("pivot is nonzero");
                        g.add_scaled(pivot_poly, scale, ctx);
                    }
                }
                pivot_poly.mul_x_minus(x, ctx);
            }
        }
    }

    basis
        .into_iter()
        .min_by_key(|g| g.lead)
        .map(|g| g.into_bivariate(kappa))
        .ok_or_else(|| Error::Decode("interpolation basis collapsed".into()))
}

/// Test-and-verification helper: does `q` vanish at (x, y) to order `mult`?
pub fn satisfies_multiplicity(
    q: &BivariatePoly,
    x: crate::algebra::Gf,
    y: crate::algebra::Gf,
    mult: u32,
    params: &CodeParams,
) -> bool {
    let mult = mult as usize;
    (0..mult).all(|r| (0..mult - r).all(|s| q.hasse_eval(r, s, x, y, params.field()) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{encode, FieldContext, Poly};
    use crate::channels::ReceivedWord;
    use crate::mas::pmas_matrix;

    fn rs(n: usize, k: usize) -> CodeParams {
        CodeParams::new(n, k, FieldContext::gf16()).unwrap()
    }

    #[test]
    fn degree_bound_counts_monomials() {
        // k = 3 (weights 1,2): monomials of wdeg <= 2 are 1, x, x^2, y -> 4
        let (w, l) = weighted_degree_bound(3, 3);
        assert_eq!((w, l), (2, 1));
        // a single constraint needs two monomials: 1 and x at wdeg 1
        let (w, l) = weighted_degree_bound(1, 3);
        assert_eq!((w, l), (1, 0));
    }

    #[test]
    fn empty_matrix_yields_constant_one() {
        let params = rs(15, 3);
        let matrix = MultiplicityMatrix::zero(16, 15);
        let q = interpolate(&matrix, &params, &DecoderLimits::default()).unwrap();
        assert_eq!(q, BivariatePoly::one(2));
    }

    #[test]
    fn single_point_single_multiplicity() {
        let params = rs(15, 3);
        let mut matrix = MultiplicityMatrix::zero(16, 15);
        matrix.set(7, 3, 1);
        let q = interpolate(&matrix, &params, &DecoderLimits::default()).unwrap();
        assert!(q.weighted_degree().unwrap() <= 1);
        let x = params.eval_points()[3];
        assert_eq!(q.eval(x, 7, params.field()), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let params = rs(15, 3);
        let mut matrix = MultiplicityMatrix::zero(16, 15);
        for j in 0..15 {
            matrix.set(1, j, 200); // cost = 15 * C(201,2) = 301500
        }
        assert!(matches!(
            interpolate(&matrix, &params, &DecoderLimits::default()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn output_satisfies_all_constraints() {
        let params = rs(15, 3);
        let cw = encode(&[5, 9, 2], &params).unwrap();
        let mut counts = vec![0u32; 15];
        for c in counts.iter_mut().take(9) {
            *c = 1;
        }
        let word = ReceivedWord::erase_low_bits(&cw, &counts, 4);
        let matrix = pmas_matrix(&word, 16, &params).unwrap();
        let q = interpolate(&matrix, &params, &DecoderLimits::default()).unwrap();
        assert!(!q.is_zero());
        for (value, pos, mult) in matrix.nonzero() {
            assert!(
                satisfies_multiplicity(&q, params.eval_points()[pos], value, mult, &params),
                "constraint at position {pos} value {value} order {mult}"
            );
        }
    }

    #[test]
    fn minimality_matches_exhaustive_rank_search() {
        // Tiny instances: find the true minimal weighted degree by solving the
        // constraint system restricted to monomials of weighted degree <= w
        // for increasing w (kernel nonzero <=> a solution of that degree
        // exists), then check the iterative output achieves it.
        let ctx = FieldContext::gf16();
        let params = CodeParams::new(7, 3, ctx).unwrap();
        let configs: Vec<Vec<(u16, usize, u32)>> = vec![
            vec![(3, 0, 2), (5, 2, 1), (1, 4, 1)],
            vec![(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)],
            vec![(9, 5, 2), (9, 6, 2)],
            vec![(4, 1, 3)],
        ];
        for points in configs {
            let mut matrix = MultiplicityMatrix::zero(16, 7);
            for &(v, j, mult) in &points {
                matrix.set(v, j, mult);
            }
            let q = interpolate(&matrix, &params, &DecoderLimits::default()).unwrap();
            let achieved = q.weighted_degree().unwrap();
            let true_min = (0..=achieved)
                .find(|&w| min_wdeg_solution_exists(&matrix, &params, w))
                .unwrap();
            assert_eq!(achieved, true_min, "points {points:?}");
        }
    }

    /// Gaussian-elimination oracle: is there a nonzero polynomial of weighted
    /// degree <= w satisfying every constraint of the matrix?
    fn min_wdeg_solution_exists(
        matrix: &MultiplicityMatrix,
        params: &CodeParams,
        w: usize,
    ) -> bool {
        let ctx = params.field();
        let kappa = params.k() - 1;
        // monomials (a, b): a + b*kappa <= w
        let mut monomials = vec![];
        for b in 0..=(w / kappa) {
            for a in 0..=(w - b * kappa) {
                monomials.push((a, b));
            }
        }
        // rows: one per Hasse constraint
        let mut rows: Vec<Vec<u16>> = vec![];
        for (value, pos, mult) in matrix.nonzero() {
            let x = params.eval_points()[pos];
            let mult = mult as usize;
            for r in 0..mult {
                for s in 0..mult - r {
                    let row = monomials
                        .iter()
                        .map(|&(a, b)| {
                            // Hasse derivative of x^a y^b at (x, value)
                            let mono = BivariatePoly::from_coeffs(
                                {
                                    let mut cs = vec![Poly::zero(); b + 1];
                                    cs[b] = Poly::monomial(1, a);
                                    cs
                                },
                                kappa,
                            );
                            mono.hasse_eval(r, s, x, value, ctx)
                        })
                        .collect();
                    rows.push(row);
                }
            }
        }
        // rank over GF(16)
        let cols = monomials.len();
        let mut rank = 0;
        for col in 0..cols {
            if rank >= rows.len() {
                break;
            }
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) {
                rows.swap(rank, p);
                let inv = ctx.inv(rows[rank][col]).unwrap();
                for i in 0..rows.len() {
                    if i != rank && rows[i][col] != 0 {
                        let f = ctx.mul(rows[i][col], inv);
                        for c in col..cols {
                            let sub = ctx.mul(f, rows[rank][c]);
                            rows[i][c] ^= sub;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank < cols // nontrivial kernel
    }
}

use super::bivariate::BivariatePoly;
use crate::algebra::{FieldContext, Gf, Poly};

/// All polynomials f with deg f < k and Q(x, f(x)) identically zero,
/// recovered coefficient by coefficient: the next coefficient of any root
/// must be a root of Q(0, y), and peeling it off with y -> x y + gamma
/// reduces the problem by one degree.
pub fn y_roots(q: &BivariatePoly, k: usize, ctx: &FieldContext) -> Vec<Poly> {
    let mut found = Vec::new();
    if q.is_zero() {
        return found;
    }
    let mut prefix = Vec::with_capacity(k);
    descend(q.clone(), 0, k, &mut prefix, &mut found, ctx);
    found.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    found.dedup();
    // the recursion is exact, but re-verifying against the original keeps the
    // contract independent of it
    found.retain(|f| q.eval_at_poly(f, ctx).is_zero());
    found
}

fn descend(
    q: BivariatePoly,
    depth: usize,
    k: usize,
    prefix: &mut Vec<Gf>,
    found: &mut Vec<Poly>,
    ctx: &FieldContext,
) {
    if q.is_zero() {
        return;
    }
    let q = match q.x_power_divisor() {
        Some(0) => q,
        Some(v) => q.shift_down_x(v),
        None => return,
    };
    if depth == k {
        if q.coeff_or_zero(0).is_zero() {
            found.push(Poly::new(prefix.clone()));
        }
        return;
    }
    // q(0, y): its roots are the admissible next coefficients
    let deg_y = q.y_degree().unwrap_or(0);
    let restricted: Vec<Gf> = (0..=deg_y).map(|b| q.coeff_or_zero(b).coeff(0)).collect();
    for gamma in 0..ctx.size() as Gf {
        if eval_y(&restricted, gamma, ctx) == 0 {
            prefix.push(gamma);
            descend(q.substitute_shift(gamma, ctx), depth + 1, k, prefix, found, ctx);
            prefix.pop();
        }
    }
}

fn eval_y(coeffs: &[Gf], y: Gf, ctx: &FieldContext) -> Gf {
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc = ctx.add(ctx.mul(acc, y), c);
    }
    acc
}

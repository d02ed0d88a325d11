use super::field::{FieldContext, Gf};

/// Univariate polynomial over GF(2^m), coefficients lowest degree first.
///
/// The zero polynomial is an empty coefficient vector; nonzero polynomials
/// carry no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Gf>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Gf>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: Gf) -> Self {
        Self::new(vec![c])
    }

    /// c * x^n
    pub fn monomial(c: Gf, n: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Gf, ctx: &FieldContext) -> Gf {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for (i, c) in out.iter_mut().enumerate() {
            *c = self.coeff(i) ^ other.coeff(i);
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: Gf, ctx: &FieldContext) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= ctx.mul(a, b);
            }
        }
        Poly::new(out)
    }

    /// Multiply by x^n.
    pub fn shift_up(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0; n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Divide by x^n, discarding the low coefficients (they must be zero for
    /// this to be an exact division; callers strip known factors).
    pub fn shift_down(&self, n: usize) -> Poly {
        Poly::new(self.coeffs.iter().skip(n).copied().collect())
    }

    /// Number of leading zero coefficients, i.e. the largest v with x^v | self.
    /// None for the zero polynomial.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Hasse derivative evaluation: sum over a >= r of C(a, r) c_a x^(a-r),
    /// with the binomial reduced mod 2 (Lucas: odd iff r is a submask of a).
    pub fn hasse_eval(&self, r: usize, x: Gf, ctx: &FieldContext) -> Gf {
        let mut acc = 0;
        let mut xp: Gf = 1;
        for a in r..self.coeffs.len() {
            let c = self.coeffs[a];
            if c != 0 && (a & r) == r {
                acc ^= ctx.mul(c, xp);
            }
            xp = ctx.mul(xp, x);
        }
        acc
    }
}

/// Lagrange interpolation through distinct points, degree < points.len().
pub fn lagrange_interpolate(points: &[(Gf, Gf)], ctx: &FieldContext) -> Poly {
    let mut acc = Poly::zero();
    for (i, &(xi, yi)) in points.iter().enumerate() {
        if yi == 0 {
            continue;
        }
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut num = Poly::one();
        let mut denom: Gf = 1;
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&Poly::new(vec![xj, 1]), ctx);
            denom = ctx.mul(denom, xi ^ xj);
        }
        let scale = ctx
            .div(yi, denom)
            .expect("interpolation points must be distinct");
        acc = acc.add(&num.scale(scale, ctx));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = Poly::new(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::new(vec![0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn eval_and_mul_agree() {
        let ctx = FieldContext::gf16();
        let p = Poly::new(vec![3, 1, 7]);
        let q = Poly::new(vec![5, 9]);
        let prod = p.mul(&q, &ctx);
        for x in 0..16 {
            assert_eq!(prod.eval(x, &ctx), ctx.mul(p.eval(x, &ctx), q.eval(x, &ctx)));
        }
    }

    #[test]
    fn lagrange_recovers_polynomial() {
        let ctx = FieldContext::gf16();
        let p = Poly::new(vec![6, 0, 11, 2]);
        let points: Vec<_> = (1..6).map(|x| (x as Gf, p.eval(x as Gf, &ctx))).collect();
        assert_eq!(lagrange_interpolate(&points[..4], &ctx), p);
    }

    #[test]
    fn hasse_eval_plain_evaluation_at_r0() {
        let ctx = FieldContext::gf16();
        let p = Poly::new(vec![3, 1, 7, 9]);
        for x in 0..16 {
            assert_eq!(p.hasse_eval(0, x, &ctx), p.eval(x, &ctx));
        }
    }

    #[test]
    fn hasse_eval_detects_double_root() {
        let ctx = FieldContext::gf16();
        // (x - 5)^2 * (x - 3) has a double root at 5: value and first Hasse
        // derivative vanish there, second does not
        let p = Poly::new(vec![5, 1])
            .mul(&Poly::new(vec![5, 1]), &ctx)
            .mul(&Poly::new(vec![3, 1]), &ctx);
        assert_eq!(p.hasse_eval(0, 5, &ctx), 0);
        assert_eq!(p.hasse_eval(1, 5, &ctx), 0);
        assert_ne!(p.hasse_eval(2, 5, &ctx), 0);
        assert_ne!(p.hasse_eval(1, 3, &ctx), 0);
    }
}

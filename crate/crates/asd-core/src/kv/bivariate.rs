use crate::algebra::{FieldContext, Gf, Poly};

/// C(n, k) mod 2 via Lucas: odd exactly when k is a submask of n.
#[inline]
pub(crate) fn binom_odd(n: usize, k: usize) -> bool {
    n & k == k
}

/// Bivariate polynomial over GF(2^m), stored as univariate x-polynomials
/// indexed by y-degree, with a (1, k-1) weighted-degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    /// coeffs[b] = coefficient of y^b, a polynomial in x.
    coeffs: Vec<Poly>,
    /// Weight of y relative to x (= k - 1 for degree-< k message recovery).
    y_weight: usize,
}

impl BivariatePoly {
    pub fn zero(y_weight: usize) -> Self {
        BivariatePoly {
            coeffs: Vec::new(),
            y_weight,
        }
    }

    pub fn one(y_weight: usize) -> Self {
        BivariatePoly {
            coeffs: vec![Poly::one()],
            y_weight,
        }
    }

    /// The monomial y^b.
    pub fn y_power(b: usize, y_weight: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); b + 1];
        coeffs[b] = Poly::one();
        BivariatePoly { coeffs, y_weight }
    }

    pub fn from_coeffs(mut coeffs: Vec<Poly>, y_weight: usize) -> Self {
        while coeffs.last().map_or(false, |p| p.is_zero()) {
            coeffs.pop();
        }
        BivariatePoly { coeffs, y_weight }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn y_weight(&self) -> usize {
        self.y_weight
    }

    /// Degree in y, or None if zero.
    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Leading monomial under the weighted order: maximal (a + b*y_weight, b)
    /// over the support. None for the zero polynomial.
    pub fn leading_monomial(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (b, c) in self.coeffs.iter().enumerate() {
            if let Some(a) = c.degree() {
                let key = (a + b * self.y_weight, b);
                if best.map_or(true, |cur| key > cur) {
                    best = Some(key);
                }
            }
        }
        best
    }

    /// (1, y_weight)-weighted degree.
    pub fn weighted_degree(&self) -> Option<usize> {
        self.leading_monomial().map(|(w, _)| w)
    }

    /// Hasse derivative of order (r, s) evaluated at (x, y).
    pub fn hasse_eval(&self, r: usize, s: usize, x: Gf, y: Gf, ctx: &FieldContext) -> Gf {
        let mut acc = 0;
        let mut y_pow: Gf = 1;
        for b in s..self.coeffs.len() {
            if binom_odd(b, s) {
                let inner = self.coeffs[b].hasse_eval(r, x, ctx);
                acc ^= ctx.mul(inner, y_pow);
            }
            y_pow = ctx.mul(y_pow, y);
        }
        acc
    }

    pub fn eval(&self, x: Gf, y: Gf, ctx: &FieldContext) -> Gf {
        self.hasse_eval(0, 0, x, y, ctx)
    }

    /// Q(x, f(x)) as a univariate polynomial.
    pub fn eval_at_poly(&self, f: &Poly, ctx: &FieldContext) -> Poly {
        let mut acc = Poly::zero();
        let mut f_pow = Poly::one();
        for c in &self.coeffs {
            acc = acc.add(&c.mul(&f_pow, ctx));
            f_pow = f_pow.mul(f, ctx);
        }
        acc
    }

    /// self + scale * other (characteristic 2, so this also subtracts).
    pub fn add_scaled(&self, other: &BivariatePoly, scale: Gf, ctx: &FieldContext) -> BivariatePoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for b in 0..len {
            let a = self.coeffs.get(b).cloned().unwrap_or_else(Poly::zero);
            let o = other
                .coeffs
                .get(b)
                .map(|p| p.scale(scale, ctx))
                .unwrap_or_else(Poly::zero);
            coeffs.push(a.add(&o));
        }
        BivariatePoly::from_coeffs(coeffs, self.y_weight)
    }

    /// Multiply by (x - x0) (= x + x0 in characteristic 2).
    pub fn mul_x_minus(&self, x0: Gf, ctx: &FieldContext) -> BivariatePoly {
        let factor = Poly::new(vec![x0, 1]);
        BivariatePoly::from_coeffs(
            self.coeffs.iter().map(|c| c.mul(&factor, ctx)).collect(),
            self.y_weight,
        )
    }

    /// Largest v with x^v dividing every coefficient; None if zero.
    pub fn x_power_divisor(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .filter_map(|c| c.trailing_zeros())
            .min()
    }

    /// Exact division by x^v.
    pub fn shift_down_x(&self, v: usize) -> BivariatePoly {
        BivariatePoly::from_coeffs(
            self.coeffs.iter().map(|c| c.shift_down(v)).collect(),
            self.y_weight,
        )
    }

    /// Substitute y -> x*y + gamma, the per-coefficient step of root peeling.
    pub fn substitute_shift(&self, gamma: Gf, ctx: &FieldContext) -> BivariatePoly {
        let deg_y = match self.y_degree() {
            Some(d) => d,
            None => return BivariatePoly::zero(self.y_weight),
        };
        let mut coeffs = vec![Poly::zero(); deg_y + 1];
        // (x y + gamma)^b = sum_i C(b,i) gamma^(b-i) x^i y^i with C mod 2
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = Poly::zero();
            for b in i..=deg_y {
                if binom_odd(b, i) {
                    let g = ctx.pow(gamma, b - i);
                    acc = acc.add(&self.coeffs[b].scale(g, ctx));
                }
            }
            *slot = acc.shift_up(i);
        }
        BivariatePoly::from_coeffs(coeffs, self.y_weight)
    }

    pub(crate) fn coeff_or_zero(&self, b: usize) -> Poly {
        self.coeffs.get(b).cloned().unwrap_or_else(Poly::zero)
    }
}

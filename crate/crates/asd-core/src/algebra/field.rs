use crate::error::{Error, Result};

/// Element of GF(2^m), stored as an m-bit integer.
pub type Gf = u16;

/// Default primitive polynomials, indexed by field degree m = 1..=16.
/// Entry m is the conventional choice for GF(2^m) (0x13 for m=4, 0x11D for m=8).
const DEFAULT_POLYS: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// Arithmetic context for GF(2^m) with log/antilog tables.
///
/// Addition is bitwise XOR and needs no table. Multiplication and inversion
/// go through the exp/log tables built from a primitive polynomial, so every
/// nonzero element is a power of the generator alpha = x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    m: u32,
    primitive_poly: u32,
    exp: Vec<Gf>,
    log: Vec<u16>,
    /// Flat q*q product table for small fields (m <= 8); empty otherwise.
    /// Keeps the decoder's inner loops branch-free.
    mul_table: Vec<Gf>,
}

impl FieldContext {
    /// Builds the tables for GF(2^m) under `primitive_poly`.
    ///
    /// Fails if the polynomial does not have degree exactly m or is not
    /// primitive (the powers of x must enumerate all 2^m - 1 nonzero
    /// elements before cycling).
    pub fn new(m: u32, primitive_poly: u32) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return Err(Error::arg(format!("field degree m={m} outside 1..=16")));
        }
        if primitive_poly >> m != 1 {
            return Err(Error::arg(format!(
                "polynomial {primitive_poly:#x} does not have degree {m}"
            )));
        }
        let size = 1usize << m;
        let order = size - 1;
        let mask = (size - 1) as u32;

        let mut exp = vec![0 as Gf; size];
        let mut log = vec![0u16; size];
        let mut x: u32 = 1;
        for i in 0..order {
            exp[i] = x as Gf;
            if x == 1 && i > 0 {
                return Err(Error::arg(format!(
                    "polynomial {primitive_poly:#x} is not primitive: x has order {i}"
                )));
            }
            log[x as usize] = i as u16;
            // multiply by alpha = x, reducing by the defining polynomial
            x <<= 1;
            if x >> m != 0 {
                x = (x ^ primitive_poly) & mask;
            }
        }
        // alpha^order wraps to 1; keeping it in the table lets pow avoid a reduction
        exp[order] = 1;
        if exp[..order].iter().filter(|&&v| v != 0).count() != order {
            return Err(Error::arg(format!(
                "polynomial {primitive_poly:#x} is not primitive"
            )));
        }
        let mut ctx = FieldContext {
            m,
            primitive_poly,
            exp,
            log,
            mul_table: Vec::new(),
        };
        if m <= 8 {
            let mut table = vec![0 as Gf; size * size];
            for a in 0..size {
                for b in 0..size {
                    table[a * size + b] = ctx.mul(a as Gf, b as Gf);
                }
            }
            ctx.mul_table = table;
        }
        Ok(ctx)
    }

    /// Row of products c * 0, c * 1, ..., for branch-free inner loops.
    /// Only available for m <= 8.
    #[inline]
    pub(crate) fn scale_row(&self, c: Gf) -> Option<&[Gf]> {
        if self.mul_table.is_empty() {
            return None;
        }
        let q = self.size();
        Some(&self.mul_table[c as usize * q..(c as usize + 1) * q])
    }

    /// GF(2^m) with the conventional primitive polynomial for that m.
    pub fn with_default_poly(m: u32) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return Err(Error::arg(format!("field degree m={m} outside 1..=16")));
        }
        Self::new(m, DEFAULT_POLYS[m as usize])
    }

    /// GF(16) under x^4 + x + 1.
    pub fn gf16() -> Self {
        Self::new(4, 0x13).expect("0x13 is primitive over GF(16)")
    }

    /// GF(256) under x^8 + x^4 + x^3 + x^2 + 1.
    pub fn gf256() -> Self {
        Self::new(8, 0x11D).expect("0x11D is primitive over GF(256)")
    }

    /// Bits per symbol.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size 2^m.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Multiplicative group order 2^m - 1.
    pub fn order(&self) -> usize {
        (1 << self.m) - 1
    }

    /// The defining polynomial bitmask.
    pub fn primitive_poly(&self) -> u32 {
        self.primitive_poly
    }

    /// alpha^i (i taken mod the group order).
    pub fn alpha_pow(&self, i: usize) -> Gf {
        self.exp[i % self.order()]
    }

    /// Addition (= subtraction) in characteristic 2.
    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        a ^ b
    }

    /// Product in GF(2^m).
    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        debug_assert!((a as usize) < self.size() && (b as usize) < self.size());
        if a == 0 || b == 0 {
            return 0;
        }
        let idx = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[idx % self.order()]
    }

    /// Multiplicative inverse; zero is a domain error.
    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let order = self.order();
        Ok(self.exp[(order - self.log[a as usize] as usize) % order])
    }

    /// a / b, with b = 0 a domain error.
    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e by repeated squaring through the log table.
    pub fn pow(&self, a: Gf, e: usize) -> Gf {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let idx = (self.log[a as usize] as usize * (e % self.order())) % self.order();
        self.exp[idx]
    }
}

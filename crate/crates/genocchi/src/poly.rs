//! Dense univariate polynomials over an exact coefficient domain.
//!
//! Coefficients are stored in ascending degree with trailing zeros stripped;
//! the zero polynomial is the empty list and has degree −1. The coefficient
//! domain only needs ring operations (add, sub, mul, zero, one, equality) —
//! exact division is never required of it, so `BigInt`, `BigRational`, and
//! `Z[v]` (as `Poly<BigInt>`) all qualify. Divisibility questions are settled
//! by synthetic division against a monic linear factor or by multiplying back.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

/// Ring operations required of a coefficient domain.
///
/// Blanket-implemented; `Poly<D>` itself satisfies the bound, which is what
/// makes polynomials in `z` with coefficients in `Z[v]` work unchanged.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>> Coeff for T {}

/// Embeds a small non-negative integer into the coefficient domain by
/// double-and-add over `{zero, one}`.
pub fn coeff_from_u64<D: Coeff>(n: u64) -> D {
    let mut acc = D::zero();
    for shift in (0..u64::BITS - n.leading_zeros()).rev() {
        acc = acc.clone() + acc;
        if n >> shift & 1 == 1 {
            acc = acc + D::one();
        }
    }
    acc
}

/// Embeds a small signed integer into the coefficient domain.
pub fn coeff_from_i64<D: Coeff>(n: i64) -> D {
    if n < 0 {
        -coeff_from_u64::<D>(n.unsigned_abs())
    } else {
        coeff_from_u64(n as u64)
    }
}

/// Embeds an arbitrary-precision integer into the coefficient domain.
pub fn coeff_from_bigint<D: Coeff>(n: &BigInt) -> D {
    let mut acc = D::zero();
    for bit in n.magnitude().to_radix_be(2) {
        acc = acc.clone() + acc;
        if bit == 1 {
            acc = acc + D::one();
        }
    }
    if n.sign() == Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// Dense univariate polynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<D> {
    coeffs: Vec<D>,
}

impl<D: Coeff> Poly<D> {
    /// Canonicalizes by stripping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<D>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: D) -> Self {
        Poly::new(vec![c])
    }

    /// c·z^k.
    pub fn monomial(c: D, k: usize) -> Self {
        if c.is_zero() {
            return Poly { coeffs: Vec::new() };
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        for _ in 0..k {
            coeffs.push(D::zero());
        }
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The polynomial `z`.
    pub fn variable() -> Self {
        Poly::monomial(D::one(), 1)
    }

    /// Degree, with the zero polynomial at −1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of z^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> D {
        self.coeffs.get(k).cloned().unwrap_or_else(D::zero)
    }

    /// Ascending coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[D] {
        &self.coeffs
    }

    pub fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn minus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn negated(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn times(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![D::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &D) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &D) -> D {
        let mut acc = D::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// p(z)·(z + c).
    pub fn times_linear(&self, c: &D) -> Self {
        if self.coeffs.is_empty() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![D::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k + 1] = out[k + 1].clone() + a.clone();
            out[k] = out[k].clone() + a.clone() * c.clone();
        }
        Poly::new(out)
    }

    /// Argument shift: returns p(z + offset), computed exactly.
    pub fn shift(&self, offset: &D) -> Self {
        let mut acc = Poly::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            acc = acc.times_linear(offset).plus(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * coeff_from_u64::<D>(k as u64))
            .collect();
        Poly::new(out)
    }

    /// Synthetic division by the monic linear factor (z − root):
    /// returns (q, r) with p = (z − root)·q + r and r = p(root).
    pub fn synthetic_div(&self, root: &D) -> (Self, D) {
        if self.coeffs.is_empty() {
            return (Poly { coeffs: Vec::new() }, D::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![D::zero(); d];
        let mut acc = self.coeffs[d].clone();
        for k in (1..=d).rev() {
            quotient[k - 1] = acc.clone();
            acc = self.coeffs[k - 1].clone() + root.clone() * acc;
        }
        (Poly::new(quotient), acc)
    }
}

impl<D: Coeff> Add for Poly<D> {
    type Output = Poly<D>;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl<D: Coeff> Sub for Poly<D> {
    type Output = Poly<D>;
    fn sub(self, rhs: Self) -> Self {
        self.minus(&rhs)
    }
}

impl<D: Coeff> Mul for Poly<D> {
    type Output = Poly<D>;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl<D: Coeff> Neg for Poly<D> {
    type Output = Poly<D>;
    fn neg(self) -> Self {
        self.negated()
    }
}

impl<D: Coeff> Zero for Poly<D> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<D: Coeff> One for Poly<D> {
    fn one() -> Self {
        Poly::constant(D::one())
    }
}

/// Rising factorial (z)^n = z(z+1)···(z+n−1), with (z)^0 = 1.
pub fn rising_factorial<D: Coeff>(n: usize) -> Poly<D> {
    let mut acc: Poly<D> = Poly::constant(D::one());
    for i in 0..n as u64 {
        acc = acc.times_linear(&coeff_from_u64(i));
    }
    acc
}

impl Poly<BigInt> {
    /// Renders ascending powers with `var` as the indeterminate,
    /// e.g. `17+27v+11v^2+v^3`. The zero polynomial renders as `0`.
    pub fn to_string_in(&self, var: &str) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push(if c.is_negative() { '-' } else { '+' });
            }
            let mag = c.magnitude();
            if k == 0 {
                let _ = write!(out, "{mag}");
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{mag}");
                }
                out.push_str(var);
                if k >= 2 {
                    let _ = write!(out, "^{k}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("z"))
    }
}

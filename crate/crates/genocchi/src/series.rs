//! Truncated formal power series with exact rational coefficients.
//!
//! The truncation order is explicit state: a series of order `k` stores the
//! coefficients of t^0..t^k and never reports anything beyond. Combining two
//! series truncates to the smaller order, so precision loss is always visible
//! in the type's own data rather than silent.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Formal power series over Q, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// c·t^k at the given order (the term is dropped if k exceeds it).
    pub fn term(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from its coefficients; the order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the t^0 coefficient");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k. Panics beyond the truncation order: coefficients
    /// past it do not exist, and pretending they are zero hides truncation bugs.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(
            k <= self.order(),
            "coefficient t^{k} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].recip();
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..=self.order() {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// e^t truncated at the given order: Σ t^k / k!.
    pub fn exp_t(order: usize) -> Self {
        let mut out = Vec::with_capacity(order + 1);
        let mut kfac = BigInt::one();
        out.push(BigRational::one());
        for k in 1..=order as u64 {
            kfac *= k;
            out.push(BigRational::new(BigInt::one(), kfac.clone()));
        }
        Series { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn geometric_reciprocal() {
        // 1/(1 − t) = 1 + t + t² + t³.
        let s = Series::from_coeffs(vec![rat(1, 1), rat(-1, 1), rat(0, 1), rat(0, 1)]);
        let r = s.reciprocal().unwrap();
        assert_eq!(r.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn exp_prefix() {
        let e = Series::exp_t(2);
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2)]);
    }

    #[test]
    fn genocchi_generating_prefix() {
        // 2t/(e^t + 1) = t − t²/2 + 0·t³ + t⁴/24 + …
        let order = 4;
        let denom = Series::exp_t(order).add(&Series::one(order));
        let s = Series::term(rat(2, 1), 1, order).mul(&denom.reciprocal().unwrap());
        assert_eq!(
            s.coeffs(),
            &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(0, 1), rat(1, 24)]
        );
    }

    #[test]
    fn reciprocal_rejects_zero_constant_term() {
        let s = Series::from_coeffs(vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(s.reciprocal().unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = Series::one(5);
        let b = Series::exp_t(3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }
}

//! The Seidel triangle and the scalar Genocchi sequences it contains, plus
//! two computationally independent routes to the first-kind numbers: the
//! Bernoulli relation G_{2n} = (−1)^{n+1}·2·(4^n − 1)·B_{2n}, and direct
//! coefficient extraction from the generating function 2t/(e^t + 1).
//!
//! Seidel cells g(n, j) live at 1 ≤ n ≤ (j+1)/2 for columns j ≥ 1, built by
//! alternating partial sums:
//!
//!   g(n, 2j)   = Σ_{q≥n} g(q, 2j−1)   (downward column sums)
//!   g(n, 2j+1) = Σ_{q≤n} g(q, 2j)     (upward column sums)
//!
//! with g(1, 1) = 1; reads outside the defined range are zero, which is the
//! summation convention that reproduces the known G and H values. The
//! first-kind numbers sit on the diagonal, G_{2n} = g(n, 2n−1), and the
//! median (second-kind) numbers head the even columns, H_{2n−1} = g(1, 2n).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::Series;
use crate::util::binomial_rows;

/// Column-indexed ragged Seidel table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelTable {
    columns: Vec<Vec<BigInt>>,
}

impl SeidelTable {
    /// Builds all defined cells of columns 1..=j_max.
    pub fn build(j_max: usize) -> Self {
        assert!(j_max >= 1);
        let mut columns = Vec::with_capacity(j_max);
        columns.push(vec![BigInt::one()]);
        for j in 2..=j_max {
            let prev = &columns[j - 2];
            let rows = (j + 1) / 2;
            let mut col = Vec::with_capacity(rows);
            if j % 2 == 0 {
                // Downward sums: g(n, j) = Σ_{q≥n} g(q, j−1); both columns
                // here hold `rows` cells.
                let mut acc = BigInt::zero();
                let mut rev = Vec::with_capacity(rows);
                for q in (0..rows).rev() {
                    acc += &prev[q];
                    rev.push(acc.clone());
                }
                rev.reverse();
                col = rev;
            } else {
                // Upward sums: g(n, j) = Σ_{q≤n} g(q, j−1); the new column is
                // one cell longer, with the out-of-range cell reading zero.
                let mut acc = BigInt::zero();
                for n in 0..rows {
                    if n < prev.len() {
                        acc += &prev[n];
                    }
                    col.push(acc.clone());
                }
            }
            columns.push(col);
        }
        SeidelTable { columns }
    }

    pub fn j_max(&self) -> usize {
        self.columns.len()
    }

    /// g(n, j) for a built column j, zero outside the defined cell range.
    pub fn get(&self, n: usize, j: usize) -> BigInt {
        assert!(n >= 1 && j >= 1 && j <= self.j_max());
        self.columns[j - 1]
            .get(n - 1)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Column j as a slice, rows 1..=⌊(j+1)/2⌋.
    pub fn column(&self, j: usize) -> &[BigInt] {
        &self.columns[j - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenocchiKind {
    /// G_{2n}, 1-indexed by n.
    First,
    /// H_{2n−1}, 1-indexed by n.
    Median,
    /// h_n = H_{2n+1}/2^n, 0-indexed by n.
    NormalizedMedian,
}

/// A prefix of one of the three Genocchi scalar sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenocchiSeq {
    kind: GenocchiKind,
    first_index: usize,
    values: Vec<BigInt>,
}

impl GenocchiSeq {
    pub fn kind(&self) -> GenocchiKind {
        self.kind
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    pub fn last_index(&self) -> usize {
        self.first_index + self.values.len() - 1
    }

    /// The n-th member under the sequence's own indexing.
    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n - self.first_index]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// G_2, G_4, …, G_{2·n_max} read off the Seidel diagonal.
pub fn genocchi_first(n_max: usize) -> GenocchiSeq {
    assert!(n_max >= 1);
    let table = SeidelTable::build(2 * n_max - 1);
    GenocchiSeq {
        kind: GenocchiKind::First,
        first_index: 1,
        values: (1..=n_max).map(|n| table.get(n, 2 * n - 1)).collect(),
    }
}

/// H_1, H_3, …, H_{2·n_max−1} read off the even column heads.
pub fn genocchi_median(n_max: usize) -> GenocchiSeq {
    assert!(n_max >= 1);
    let table = SeidelTable::build(2 * n_max);
    GenocchiSeq {
        kind: GenocchiKind::Median,
        first_index: 1,
        values: (1..=n_max).map(|n| table.get(1, 2 * n)).collect(),
    }
}

/// h_0..h_{n_max} with h_n = H_{2n+1}/2^n, checking each division exactly.
pub fn normalized_median(n_max: usize) -> Result<GenocchiSeq> {
    let median = genocchi_median(n_max + 1);
    let mut values = Vec::with_capacity(n_max + 1);
    let mut power = BigInt::one();
    for n in 0..=n_max {
        let h = median.value(n + 1);
        let (q, r) = (h / &power, h % &power);
        if !r.is_zero() {
            return Err(Error::DivisibilityViolation {
                context: "normalized median Genocchi number",
                value: h.to_string(),
                divisor: power.to_string(),
            });
        }
        values.push(q);
        power *= 2u32;
    }
    Ok(GenocchiSeq {
        kind: GenocchiKind::NormalizedMedian,
        first_index: 0,
        values,
    })
}

/// B_0..B_{n_max} by the convolution recurrence Σ_{k=0}^{n} C(n+1, k)·B_k = 0
/// with B_0 = 1 — deliberately not the generating-function route, so the two
/// first-kind oracles below stay computationally independent.
pub fn bernoulli(n_max: usize) -> Vec<BigRational> {
    let binom = binomial_rows(n_max + 1);
    let mut b = vec![BigRational::one()];
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom[n + 1][k].clone());
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n as u64 + 1)));
    }
    b
}

pub(crate) fn genocchi_from_bernoulli(b_2n: &BigRational, n: usize) -> Result<BigInt> {
    let four_n_minus_1 = BigInt::from(4u32).pow(n as u32) - 1;
    let mut g = BigRational::from_integer(2 * four_n_minus_1) * b_2n;
    if n % 2 == 0 {
        g = -g;
    }
    if !g.is_integer() {
        return Err(Error::NonIntegerResult {
            context: "Genocchi number from the Bernoulli relation",
            value: g.to_string(),
        });
    }
    Ok(g.to_integer())
}

/// G_{2n} from the Bernoulli relation G_{2n} = (−1)^{n+1}·2·(4^n − 1)·B_{2n}.
pub fn genocchi_via_bernoulli(n: usize) -> Result<BigInt> {
    assert!(n >= 1);
    let b = bernoulli(2 * n);
    genocchi_from_bernoulli(&b[2 * n], n)
}

/// G_2..G_{2·n_max} by expanding 2t/(e^t + 1) and reading the even
/// coefficients: G_{2n} = (−1)^n·(2n)!·[t^{2n}]. Checks the expected series
/// shape — [t¹] = 1 and vanishing odd coefficients from t³ on.
pub fn genocchi_via_egf(n_max: usize) -> Result<Vec<BigInt>> {
    assert!(n_max >= 1);
    let order = 2 * n_max;
    let denom = Series::exp_t(order).add(&Series::one(order));
    let series = Series::term(
        BigRational::from_integer(BigInt::from(2)),
        1,
        order,
    )
    .mul(&denom.reciprocal()?);
    for k in [0usize, 1] {
        let expected = if k == 1 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        if series.coeff(k) != &expected {
            return Err(Error::SeriesShapeViolation {
                power: k,
                value: series.coeff(k).to_string(),
            });
        }
    }
    for k in (3..=order).step_by(2) {
        if !series.coeff(k).is_zero() {
            return Err(Error::SeriesShapeViolation {
                power: k,
                value: series.coeff(k).to_string(),
            });
        }
    }
    let mut out = Vec::with_capacity(n_max);
    let mut fac = BigInt::from(2);
    for n in 1..=n_max {
        if n > 1 {
            fac *= BigInt::from(2 * n as u64 - 1) * BigInt::from(2 * n as u64);
        }
        let mut g = series.coeff(2 * n) * BigRational::from_integer(fac.clone());
        if n % 2 == 1 {
            g = -g;
        }
        if !g.is_integer() {
            return Err(Error::NonIntegerResult {
                context: "Genocchi number from generating-function extraction",
                value: g.to_string(),
            });
        }
        out.push(g.to_integer());
    }
    Ok(out)
}

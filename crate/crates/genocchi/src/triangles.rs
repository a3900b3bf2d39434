//! Stirling-type triangles generated from an arbitrary integer sequence (a_n).
//!
//! First kind:  t(n+1, j) = t(n, j−1) − a_n·t(n, j)
//! Second kind: T(n+1, j) = T(n, j−1) + a_j·T(n, j)
//! with t(n, 0) = T(n, 0) = δ_{n,0} and t(n, j) = T(n, j) = 0 for n < j.
//!
//! Two generating-function routes provide recurrence-independent oracles:
//!
//!   t(t−a_1)···(t−a_{n−1}) = Σ_j t(n, j) t^j
//!   Σ_{n≥j} T(n, j) t^{n−j} = Π_{i=1..j} 1/(1 − a_i t)
//!
//! The classical Stirling numbers arise from a_n = n, the central factorial
//! numbers from a_n = n², the Legendre-Stirling numbers from a_n = n(n+1),
//! and the one-parameter family a_n = n(n+v) interpolates the last two.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{coeff_from_bigint, Coeff, Poly};

/// The sequence (a_n)_{n≥1} a triangle is generated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFamily {
    /// a_n = n (classical Stirling numbers s, S).
    Classical,
    /// a_n = n² (central factorial numbers t, T).
    CentralFactorial,
    /// a_n = n(n+1) (Legendre-Stirling numbers Ls, LS).
    LegendreStirling,
    /// a_n = n(n+v) for a fixed integer v ≥ 0.
    GenocchiType(u32),
    /// An explicit finite prefix a_1, a_2, …; never zero-padded.
    Custom(Vec<BigInt>),
}

impl SequenceFamily {
    /// a_n for n ≥ 1. Custom prefixes report an error past their end.
    pub fn term(&self, n: usize) -> Result<BigInt> {
        debug_assert!(n >= 1);
        let n_int = BigInt::from(n as u64);
        Ok(match self {
            SequenceFamily::Classical => n_int,
            SequenceFamily::CentralFactorial => &n_int * &n_int,
            SequenceFamily::LegendreStirling => &n_int * (&n_int + 1u32),
            SequenceFamily::GenocchiType(v) => &n_int * (&n_int + *v),
            SequenceFamily::Custom(prefix) => prefix
                .get(n - 1)
                .cloned()
                .ok_or(Error::PrefixTooShort {
                    available: prefix.len(),
                    required: n,
                })?,
        })
    }

    fn check_prefix(&self, required: usize) -> Result<()> {
        if let SequenceFamily::Custom(prefix) = self {
            if prefix.len() < required {
                return Err(Error::PrefixTooShort {
                    available: prefix.len(),
                    required,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    First,
    Second,
}

/// Ragged lower-triangular table of exact integers, rows 0..=n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    family: SequenceFamily,
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    pub fn build(kind: TriangleKind, family: &SequenceFamily, n_max: usize) -> Result<Self> {
        family.check_prefix(n_max)?;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            // a_{n−1} drives the first-kind step; it only multiplies cells of
            // row n−1, which is empty above column n−1, so row 1 never reads it.
            let row_term = match kind {
                TriangleKind::First if n >= 2 => Some(family.term(n - 1)?),
                _ => None,
            };
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::zero());
            for j in 1..=n {
                let mut val = prev[j - 1].clone();
                if j < prev.len() && !prev[j].is_zero() {
                    match kind {
                        TriangleKind::First => {
                            val -= row_term.as_ref().expect("row >= 2 when prev[j] is set") * &prev[j];
                        }
                        TriangleKind::Second => {
                            val += family.term(j)? * &prev[j];
                        }
                    }
                }
                row.push(val);
            }
            rows.push(row);
        }
        Ok(Triangle {
            kind,
            family: family.clone(),
            rows,
        })
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn family(&self) -> &SequenceFamily {
        &self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry (n, j); cells with j > n read as zero. Panics for rows that were
    /// never built — silently returning zero there would corrupt identity sums.
    pub fn entry(&self, n: usize, j: usize) -> BigInt {
        let row = &self.rows[n];
        row.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// First-kind triangle up to row n_max.
pub fn stirling_first(family: &SequenceFamily, n_max: usize) -> Result<Triangle> {
    Triangle::build(TriangleKind::First, family, n_max)
}

/// Second-kind triangle up to row n_max.
pub fn stirling_second(family: &SequenceFamily, n_max: usize) -> Result<Triangle> {
    Triangle::build(TriangleKind::Second, family, n_max)
}

/// Row n of the first-kind triangle by expanding t(t−a_1)···(t−a_{n−1}),
/// bypassing the recurrence entirely. Returns all n+1 coefficients, j = 0..n.
pub fn first_kind_row_via_product(family: &SequenceFamily, n: usize) -> Result<Vec<BigInt>> {
    assert!(n >= 1);
    let mut p: Poly<BigInt> = Poly::variable();
    for i in 1..n {
        let a = family.term(i)?;
        p = p.times(&Poly::new(vec![-a, BigInt::one()]));
    }
    Ok((0..=n).map(|j| p.coeff(j)).collect())
}

/// T(j, j), T(j+1, j), …, T(j+count−1, j) by multiplying the truncated
/// geometric series Π 1/(1 − a_i t), bypassing the recurrence entirely.
pub fn second_kind_column_via_series(
    family: &SequenceFamily,
    j: usize,
    count: usize,
) -> Result<Vec<BigInt>> {
    assert!(j >= 1 && count >= 1);
    let mut acc = vec![BigInt::zero(); count];
    acc[0] = BigInt::one();
    for i in 1..=j {
        let a = family.term(i)?;
        // Convolve with (1, a, a², …) in place, low order first.
        let mut out = vec![BigInt::zero(); count];
        let mut power = BigInt::one();
        for k in 0..count {
            for r in 0..count - k {
                out[k + r] += &acc[r] * &power;
            }
            power *= &a;
        }
        acc = out;
    }
    Ok(acc)
}

/// Re-expands Σ_j c[j]·(z)^j in the monomial basis via the classical signed
/// Stirling numbers of the first kind, using (z)^q = Σ_j (−1)^{q+j} s(q,j) z^j.
pub fn rising_to_monomial<D: Coeff>(c: &[D]) -> Poly<D> {
    if c.is_empty() {
        return Poly::new(Vec::new());
    }
    let n = c.len() - 1;
    let s = stirling_first(&SequenceFamily::Classical, n)
        .expect("classical sequence has no length limit");
    let mut out = vec![D::zero(); n + 1];
    for (q, cq) in c.iter().enumerate() {
        if cq.is_zero() {
            continue;
        }
        for j in 0..=q {
            let mut entry = s.entry(q, j);
            if entry.is_zero() {
                continue;
            }
            if (q + j) % 2 == 1 {
                entry = -entry;
            }
            out[j] = out[j].clone() + cq.clone() * coeff_from_bigint::<D>(&entry);
        }
    }
    Poly::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rising_factorial;
    use crate::util::{factorial, sign};

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn central_factorial_rows() {
        let first = stirling_first(&SequenceFamily::CentralFactorial, 3).unwrap();
        assert_eq!(first.row(3), &ints(&[0, 4, -5, 1])[..]);
        let second = stirling_second(&SequenceFamily::CentralFactorial, 3).unwrap();
        assert_eq!(second.row(3), &ints(&[0, 1, 5, 1])[..]);
    }

    #[test]
    fn legendre_stirling_rows() {
        let first = stirling_first(&SequenceFamily::LegendreStirling, 2).unwrap();
        assert_eq!(first.row(2), &ints(&[0, -2, 1])[..]);
        let second = stirling_second(&SequenceFamily::LegendreStirling, 3).unwrap();
        assert_eq!(second.row(3), &ints(&[0, 4, 8, 1])[..]);
    }

    #[test]
    fn boundary_cells() {
        for family in [
            SequenceFamily::Classical,
            SequenceFamily::CentralFactorial,
            SequenceFamily::LegendreStirling,
            SequenceFamily::GenocchiType(5),
        ] {
            for kind in [TriangleKind::First, TriangleKind::Second] {
                let t = Triangle::build(kind, &family, 20).unwrap();
                assert_eq!(t.entry(1, 1), BigInt::one());
                for n in 0..=20 {
                    assert_eq!(t.entry(n, n), BigInt::one());
                    if n >= 1 {
                        assert!(t.entry(n, 0).is_zero());
                    }
                    assert!(t.entry(n, n + 1).is_zero());
                }
            }
        }
    }

    #[test]
    fn product_oracle_rows() {
        assert_eq!(
            first_kind_row_via_product(&SequenceFamily::CentralFactorial, 3).unwrap(),
            ints(&[0, 4, -5, 1])
        );
        assert_eq!(
            first_kind_row_via_product(&SequenceFamily::Classical, 1).unwrap(),
            ints(&[0, 1])
        );
        assert_eq!(
            first_kind_row_via_product(&SequenceFamily::Classical, 3).unwrap(),
            ints(&[0, 2, -3, 1])
        );
    }

    #[test]
    fn series_oracle_columns() {
        assert_eq!(
            second_kind_column_via_series(&SequenceFamily::CentralFactorial, 2, 2).unwrap(),
            ints(&[1, 5])
        );
        assert_eq!(
            second_kind_column_via_series(&SequenceFamily::LegendreStirling, 2, 2).unwrap(),
            ints(&[1, 8])
        );
        // Column 1 is the geometric series in a_1.
        for family in [SequenceFamily::Classical, SequenceFamily::GenocchiType(3)] {
            let a1 = family.term(1).unwrap();
            assert_eq!(
                second_kind_column_via_series(&family, 1, 3).unwrap(),
                vec![BigInt::one(), a1.clone(), &a1 * &a1]
            );
        }
    }

    #[test]
    fn oracles_agree_with_recurrences() {
        for family in [
            SequenceFamily::Classical,
            SequenceFamily::CentralFactorial,
            SequenceFamily::LegendreStirling,
            SequenceFamily::GenocchiType(4),
        ] {
            let first = stirling_first(&family, 25).unwrap();
            for n in 1..=25 {
                let row = first_kind_row_via_product(&family, n).unwrap();
                assert_eq!(first.row(n), &row[..], "first kind row {n}");
            }
            let second = stirling_second(&family, 12 + 14).unwrap();
            for j in 1..=12 {
                let col = second_kind_column_via_series(&family, j, 15).unwrap();
                for (r, val) in col.iter().enumerate() {
                    assert_eq!(&second.entry(j + r, j), val, "second kind ({}, {j})", j + r);
                }
            }
        }
    }

    #[test]
    fn genocchi_type_specializes_to_named_families() {
        for kind in [TriangleKind::First, TriangleKind::Second] {
            let v0 = Triangle::build(kind, &SequenceFamily::GenocchiType(0), 20).unwrap();
            let central = Triangle::build(kind, &SequenceFamily::CentralFactorial, 20).unwrap();
            let v1 = Triangle::build(kind, &SequenceFamily::GenocchiType(1), 20).unwrap();
            let legendre = Triangle::build(kind, &SequenceFamily::LegendreStirling, 20).unwrap();
            for n in 0..=20 {
                assert_eq!(v0.row(n), central.row(n));
                assert_eq!(v1.row(n), legendre.row(n));
            }
        }
    }

    #[test]
    fn custom_prefix_is_never_padded() {
        let family = SequenceFamily::Custom(ints(&[1, 4]));
        let err = stirling_first(&family, 3).unwrap_err();
        assert_eq!(
            err,
            Error::PrefixTooShort {
                available: 2,
                required: 3
            }
        );
        // A long-enough prefix reproduces the family it was copied from.
        let family = SequenceFamily::Custom(ints(&[1, 4, 9]));
        let built = stirling_second(&family, 3).unwrap();
        let central = stirling_second(&SequenceFamily::CentralFactorial, 3).unwrap();
        assert_eq!(built.row(3), central.row(3));
    }

    #[test]
    fn rising_basis_vectors_expand_to_rising_factorials() {
        for n in 0..=30usize {
            let mut c = vec![BigInt::zero(); n + 1];
            c[n] = BigInt::one();
            assert_eq!(rising_to_monomial(&c), rising_factorial::<BigInt>(n));
        }
    }

    #[test]
    fn rising_expansion_examples() {
        let one_vec = vec![BigInt::one()];
        assert_eq!(rising_to_monomial(&one_vec), Poly::constant(BigInt::one()));
        let sq = ints(&[0, 0, 1]);
        assert_eq!(rising_to_monomial(&sq), Poly::new(ints(&[0, 1, 1])));
        // Σ_j (−1)^{3+j} T(3,j) j! (z)^j with the central factorial T row
        // (1, 5, 1) expands to z·(6z² + 8z + 3).
        let t = stirling_second(&SequenceFamily::CentralFactorial, 3).unwrap();
        let c: Vec<BigInt> = (0..=3).map(|j| sign(3 + j) * t.entry(3, j) * factorial(j)).collect();
        let expanded = rising_to_monomial(&c);
        assert_eq!(
            expanded,
            Poly::new(ints(&[0, 3, 8, 6])),
        );
    }
}

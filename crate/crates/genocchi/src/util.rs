//! Small exact-integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::One;

/// n! as an exact integer.
pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// hi!/lo! = (lo+1)(lo+2)···hi without forming either factorial. Requires hi >= lo.
pub(crate) fn factorial_quotient(hi: u64, lo: u64) -> BigInt {
    debug_assert!(hi >= lo);
    let mut acc = BigInt::one();
    for i in lo + 1..=hi {
        acc *= i;
    }
    acc
}

/// Pascal rows 0..=n_max; rows[n][k] = C(n, k).
pub(crate) fn binomial_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// (−1)^k.
pub(crate) fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn factorial_quotient_matches_division() {
        assert_eq!(factorial_quotient(7, 3), factorial(7) / factorial(3));
        assert_eq!(factorial_quotient(4, 4), BigInt::from(1));
    }

    #[test]
    fn pascal_rows() {
        let rows = binomial_rows(5);
        assert_eq!(rows[5], vec![1, 5, 10, 10, 5, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }
}

//! Exact integer and rational kernels for Genocchi-number combinatorics:
//! the Seidel triangle, Stirling-type triangles generated from arbitrary
//! integer sequences, Gandhi-type polynomial recurrences, and a registry of
//! machine-checked identities connecting them. No floating point anywhere.

pub mod error;
pub mod poly;
pub mod seidel;
pub mod series;
pub mod triangles;

mod util;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{rising_factorial, Coeff, Poly};
pub use seidel::{
    bernoulli, genocchi_first, genocchi_median, genocchi_via_bernoulli, genocchi_via_egf,
    normalized_median, GenocchiKind, GenocchiSeq, SeidelTable,
};
pub use series::Series;
pub use triangles::{
    first_kind_row_via_product, rising_to_monomial, second_kind_column_via_series, stirling_first,
    stirling_second, SequenceFamily, Triangle, TriangleKind,
};

//! Exact counts of standard Young tableaux of skew shape λ/μ summed over all
//! outer shapes λ with at most three rows, as integer combinations of Motzkin
//! numbers, together with the series and polynomial identities behind them and
//! a brute-force tableau counter used as ground truth.

pub mod engine;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod polynomials;
pub mod series;
pub mod verify;

pub use engine::{catalan, coefficient_table, count_three_row, motzkin, reduce_mu, regev_difference, MotzkinTable};
pub use error::{Error, Result};
pub use oracle::{count_syt, enumerate_syt, oracle_total, OracleCache};
pub use partitions::{contains, make_partition, outer_shapes, Cell, Partition, SkewShape};
pub use polynomials::{q_poly, r_jk_poly, r_poly, IntPolynomial};
pub use series::{BiSeries, TruncatedSeries};
pub use verify::{run_suite, IdentityCheck, Suite};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

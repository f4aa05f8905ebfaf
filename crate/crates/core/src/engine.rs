//! Motzkin numbers and closed-form counts of skew standard Young tableaux
//! with at most three rows.
//!
//! For a two-row inner shape μ = (μ1, μ2), set j = μ2 + 1 and k = μ1 − μ2 + 1.
//! The number of standard tableaux of shape λ/μ, summed over λ ⊢ n with at
//! most three rows, is
//!
//! ```text
//! Σ_i [x^i] r_{j,k}(x) · M_{i + n − |μ|}
//! ```
//!
//! A three-row μ is first reduced by deleting its μ3 full columns.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polynomials::{r_jk_poly, r_polys};

/// Append-only table of Motzkin numbers.
#[derive(Debug, Clone)]
pub struct MotzkinTable {
    values: Vec<BigInt>,
}

impl Default for MotzkinTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MotzkinTable {
    pub fn new() -> Self {
        Self {
            values: vec![BigInt::one(), BigInt::one()],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }

    /// Extends through M_n. Each new entry comes from the closed-form sum and
    /// must match (n+2)M_n = (2n+1)M_{n−1} + 3(n−1)M_{n−2}.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.values.len() <= n {
            let i = self.values.len();
            let closed = motzkin_closed_form(i);
            let rhs = BigInt::from(2 * i + 1) * &self.values[i - 1]
                + BigInt::from(3 * (i - 1)) * &self.values[i - 2];
            if closed.clone() * BigInt::from(i + 2) != rhs {
                return Err(Error::InternalIdentityViolation(format!(
                    "Motzkin closed form and recurrence disagree at n = {i}"
                )));
            }
            self.values.push(closed);
        }
        Ok(())
    }
}

/// Σ_{k ≤ n/2} n! / (k! (k+1)! (n−2k)!), summed with exact term ratios.
pub fn motzkin_closed_form(n: usize) -> BigInt {
    // term_k = binom(n, 2k)·C_k; term_{k+1}/term_k = (n−2k)(n−2k−1)/((k+1)(k+2))
    let mut term = BigInt::one();
    let mut sum = BigInt::zero();
    for k in 0..=n / 2 {
        sum += &term;
        let num = BigInt::from(n - 2 * k) * BigInt::from((n - 2 * k).saturating_sub(1));
        term = term * num / BigInt::from((k + 1) * (k + 2));
    }
    sum
}

static MOTZKIN: LazyLock<RwLock<MotzkinTable>> = LazyLock::new(|| RwLock::new(MotzkinTable::new()));

/// M_n, or 0 for negative n.
pub fn motzkin(n: i64) -> Result<BigInt> {
    let Ok(n) = usize::try_from(n) else {
        return Ok(BigInt::zero());
    };
    if let Some(v) = MOTZKIN.read().expect("motzkin table lock").get(n) {
        return Ok(v.clone());
    }
    let mut table = MOTZKIN.write().expect("motzkin table lock");
    table.extend_to(n)?;
    Ok(table.values[n].clone())
}

/// M_0, ..., M_n.
pub fn motzkin_numbers(n: usize) -> Result<Vec<BigInt>> {
    motzkin(n as i64)?;
    let table = MOTZKIN.read().expect("motzkin table lock");
    Ok(table.values[..=n].to_vec())
}

/// C_n = binom(2n, n) / (n + 1).
pub fn catalan(n: usize) -> BigInt {
    let central = (0..n).fold(BigInt::one(), |acc, i| acc * (2 * n - i) / (i + 1));
    central / (n + 1)
}

/// Deletes the μ3 leading full columns of a three-row μ.
///
/// Returns the reduced partition (at most two rows) and the number of
/// deleted columns. Every λ with at most three rows containing μ has all
/// rows at least μ3, so λ/μ and the reduced skew shape coincide as diagrams
/// and the count for n becomes the count for n − 3μ3.
pub fn reduce_mu(mu: &Partition) -> Result<(Partition, usize)> {
    if mu.len() > 3 {
        return Err(Error::TooManyRows { rows: mu.len() });
    }
    let shift = mu.part(2);
    if shift == 0 {
        return Ok((mu.clone(), 0));
    }
    let reduced = Partition::new(&[mu.part(0) - shift, mu.part(1) - shift])?;
    Ok((reduced, shift))
}

/// Σ over λ ⊢ n with at most three rows and μ ⊆ λ of the number of standard
/// tableaux of shape λ/μ.
pub fn count_three_row(n: usize, mu: &Partition) -> Result<BigInt> {
    let (reduced, shift) = reduce_mu(mu)?;
    if mu.size() > n {
        return Ok(BigInt::zero());
    }
    let n = n - 3 * shift;
    let (mu1, mu2) = (reduced.part(0), reduced.part(1));
    let entries = (n - mu1 - mu2) as i64;
    let weights = r_jk_poly(mu2 + 1, mu1 - mu2 + 1);
    let mut total = BigInt::zero();
    for (i, w) in weights.coefficients().iter().enumerate() {
        if !w.is_zero() {
            total += w * motzkin(i as i64 + entries)?;
        }
    }
    debug_assert!(!total.is_negative());
    Ok(total)
}

/// M_{n−1} − M_{n−3}, checked against the (2,1) count for n ≥ 3.
pub fn regev_difference(n: i64) -> Result<BigInt> {
    let diff = motzkin(n - 1)? - motzkin(n - 3)?;
    if n >= 3 {
        let mu = Partition::new(&[2, 1])?;
        let count = count_three_row(n as usize, &mu)?;
        if count != diff {
            return Err(Error::InternalIdentityViolation(format!(
                "M_(n-1) - M_(n-3) differs from the (2,1) count at n = {n}"
            )));
        }
    }
    Ok(diff)
}

/// Rows k = 0..=k_max of the coefficients r_{k,i} (row k has k entries; row 0 is `[0]`).
pub fn coefficient_table(k_max: usize) -> Vec<Vec<BigInt>> {
    r_polys(k_max)
        .into_iter()
        .map(|r| {
            let mut row = r.coefficients().to_vec();
            if row.is_empty() {
                row.push(BigInt::zero());
            }
            row
        })
        .collect()
}

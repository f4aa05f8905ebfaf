//! Runs the identity checks in named suites and reports pass/fail with timing.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::engine::{coefficient_table, count_three_row, motzkin, reduce_mu, regev_difference};
use crate::error::{Error, Result};
use crate::oracle::oracle_total;
use crate::partitions::Partition;
use crate::polynomials::{r_polys, verify_chebyshev_factorization, verify_chebyshev_sum};
use crate::series::{
    catalan_series, expand_s, expand_t_slice, motzkin_series, verify_b_and_two_row_kernel,
    verify_binomial_transform, verify_catalan_motzkin_bridge, verify_central_binomial,
    verify_parity_decomposition, PsiSeries, TruncatedSeries,
};

/// r_{k,i} for k = 0..=8 as tabulated in the literature.
pub const REFERENCE_R_COEFFICIENTS: [&[i64]; 9] = [
    &[0],
    &[1],
    &[0, 1],
    &[0, -1, 1],
    &[1, 0, -2, 1],
    &[0, 2, 1, -3, 1],
    &[0, -2, 3, 3, -4, 1],
    &[1, 0, -6, 3, 6, -5, 1],
    &[0, 3, 3, -12, 1, 10, -6, 1],
];

/// Seed for the randomized binomial-transform check.
pub const TRANSFORM_SEED: u64 = 0x5eed_2006;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Series,
    Chebyshev,
    Theorems,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Series => "series",
            Suite::Chebyshev => "chebyshev",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Suite::Series),
            "chebyshev" => Ok(Suite::Chebyshev),
            "theorems" => Ok(Suite::Theorems),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Error text when the check could not run to completion.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

fn run(suite: Suite, name: impl Into<String>, check: impl FnOnce() -> Result<bool>) -> IdentityCheck {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(p) => (p, None),
        Err(e) => (false, Some(e.to_string())),
    };
    IdentityCheck {
        suite,
        name: name.into(),
        passed,
        detail,
        elapsed,
    }
}

/// Runs `suite` at truncation / degree bound `order`.
pub fn run_suite(suite: Suite, order: usize) -> Vec<IdentityCheck> {
    match suite {
        Suite::Series => series_checks(order),
        Suite::Chebyshev => chebyshev_checks(order),
        Suite::Theorems => theorem_checks(order),
        Suite::All => {
            let mut all = series_checks(order);
            all.extend(chebyshev_checks(order));
            all.extend(theorem_checks(order));
            all
        }
    }
}

/// `count` random integer exponential series of degree ≤ `max_degree`.
pub fn random_egfs(count: usize, max_degree: usize, order: usize, seed: u64) -> Vec<TruncatedSeries> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            let coefficients: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-1000..=1000)).collect();
            TruncatedSeries::from_integers(coefficients, order)
        })
        .collect()
}

pub fn series_checks(order: usize) -> Vec<IdentityCheck> {
    let s = Suite::Series;
    let mut out = Vec::new();
    for k in 0..=5 {
        out.push(run(s, format!("central binomial sum, s = {k}"), || {
            verify_central_binomial(k, order)
        }));
    }
    out.push(run(s, "Catalan functional equation c = 1 + x c^2", || {
        let c = catalan_series(order)?;
        let x = TruncatedSeries::monomial(1, order);
        Ok(c == &TruncatedSeries::one(order) + &(&x * &(&c * &c)))
    }));
    out.push(run(s, "Motzkin functional equation m = 1 + x m + x^2 m^2", || {
        let m = motzkin_series(order)?;
        let x = TruncatedSeries::monomial(1, order);
        let x2 = TruncatedSeries::monomial(2, order);
        Ok(m == &(&TruncatedSeries::one(order) + &(&x * &m)) + &(&x2 * &(&m * &m)))
    }));
    out.push(run(s, "Catalan-to-Motzkin substitution", || {
        verify_catalan_motzkin_bridge(order)
    }));
    out.push(run(s, "binomial transform, 50 random series of degree <= 12", || {
        for f in random_egfs(50, 12, order, TRANSFORM_SEED) {
            if !verify_binomial_transform(&f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    let psi = PsiSeries::new(order);
    let psi = match psi {
        Ok(p) => p,
        Err(e) => {
            out.push(run(s, "Psi images", || Err(e)));
            return out;
        }
    };
    for k in 0..=5 {
        out.push(run(s, format!("alpha_{k}: definition vs closed form"), || {
            Ok(psi.alpha(k)?.is_integral())
        }));
    }
    for k in 1..=5 {
        out.push(run(s, format!("one-row image, k = {k}"), || {
            Ok(psi.g3_one_row(k)?.is_integral())
        }));
    }
    for k in 1..=6 {
        out.push(run(s, format!("beta_{k}: definition vs closed form"), || {
            Ok(psi.beta(k)?.is_integral())
        }));
    }
    out.push(run(s, "S(x,y) expansion equals r_k", || {
        let k_max = order.min(12);
        let expansion = expand_s(usize::MAX, k_max);
        Ok(expansion.coefficients().iter().eq(r_polys(k_max).iter()))
    }));
    out.push(run(s, "T(1/x,y,z) slice equals r_{j,k}, j,k <= 8", || {
        expand_t_slice(8, 8).map(|_| true)
    }));
    out.push(run(s, "two-row kernel, j,k <= 6", || {
        verify_b_and_two_row_kernel(6, 6, order.min(15))
    }));
    out
}

pub fn chebyshev_checks(order: usize) -> Vec<IdentityCheck> {
    let s = Suite::Chebyshev;
    vec![
        run(s, format!("r_n(x+1) = q_0 + ... + q_(n-1), n <= {order}"), || {
            Ok((1..=order).all(verify_chebyshev_sum))
        }),
        run(s, format!("r_2m, r_2m+1 factorizations, m <= {}", (order / 2).max(1)), || {
            Ok((1..=(order / 2).max(1)).all(verify_chebyshev_factorization))
        }),
        run(s, format!("even/odd decomposition through y^{order}"), || {
            Ok(verify_parity_decomposition(usize::MAX, order))
        }),
    ]
}

/// Engine count and oracle count for one (n, μ).
pub fn engine_matches_oracle(n: usize, mu: &Partition) -> Result<bool> {
    let engine = count_three_row(n, mu)?;
    let oracle = oracle_total(n, mu, 3)?;
    Ok(engine == BigInt::from(oracle))
}

/// All μ = (μ1, μ2) with max_first ≥ μ1 ≥ μ2 ≥ 0.
pub fn two_row_inner_shapes(max_first: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for mu1 in 0..=max_first {
        for mu2 in 0..=mu1 {
            out.push(Partition::new(&[mu1, mu2]).expect("mu1 >= mu2"));
        }
    }
    out
}

/// All μ = (μ1, μ2, μ3) with μ3 ≥ 1 and μ1 ≤ max_first.
pub fn three_row_inner_shapes(max_first: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for mu1 in 1..=max_first {
        for mu2 in 1..=mu1 {
            for mu3 in 1..=mu2 {
                out.push(Partition::new(&[mu1, mu2, mu3]).expect("weakly decreasing"));
            }
        }
    }
    out
}

pub fn theorem_checks(order: usize) -> Vec<IdentityCheck> {
    let s = Suite::Theorems;
    let oracle_n = order.min(13);
    vec![
        run(s, "r_{k,i} table, k <= 8", || {
            let table = coefficient_table(8);
            Ok(table.len() == REFERENCE_R_COEFFICIENTS.len()
                && table.iter().zip(REFERENCE_R_COEFFICIENTS).all(|(row, reference)| {
                    row.len() == reference.len()
                        && row.iter().zip(reference).all(|(a, &b)| *a == BigInt::from(b))
                }))
        }),
        run(s, format!("empty inner shape gives M_n, n <= {order}"), || {
            for n in 0..=order {
                if count_three_row(n, &Partition::empty())? != motzkin(n as i64)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        run(s, format!("inner shape (1) gives M_n, 1 <= n <= {order}"), || {
            let mu = Partition::new(&[1])?;
            for n in 1..=order {
                if count_three_row(n, &mu)? != motzkin(n as i64)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        run(s, format!("inner shape (2,1) gives M_(n-1) - M_(n-3), 3 <= n <= {order}"), || {
            for n in 3..=order.max(3) {
                regev_difference(n as i64)?;
            }
            Ok(true)
        }),
        run(s, format!("two-row inner shapes vs oracle, mu1 <= 5, n <= {oracle_n}"), || {
            for mu in two_row_inner_shapes(5) {
                for n in mu.size()..=oracle_n {
                    if !engine_matches_oracle(n, &mu)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        run(s, format!("three-row inner shapes vs oracle, mu1 <= 4, n <= {}", order.min(12)), || {
            for mu in three_row_inner_shapes(4) {
                let (reduced, shift) = reduce_mu(&mu)?;
                for n in mu.size()..=order.min(12) {
                    let reduced_count = count_three_row(n - 3 * shift, &reduced)?;
                    let direct = BigInt::from(oracle_total(n, &mu, 3)?);
                    if reduced_count != direct || count_three_row(n, &mu)? != direct {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        run(s, format!("one-row series coefficients vs counts, k <= 6, n <= {order}"), || {
            one_row_bridge(6, order)
        }),
    ]
}

/// [x^{n−k+1}] Ψ(G₃(k−1, 0)) = count_three_row(n, (k−1)) for k ≤ k_max, n ≤ n_max.
pub fn one_row_bridge(k_max: usize, n_max: usize) -> Result<bool> {
    let psi = PsiSeries::new(n_max)?;
    for k in 1..=k_max {
        let series = psi.g3_one_row(k)?;
        let mu = Partition::new(&[k - 1])?;
        for n in (k - 1)..=n_max {
            let coefficient = series.coeff(n + 1 - k);
            if !coefficient.is_integer() || coefficient.to_integer() != count_three_row(n, &mu)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Series, Suite::Chebyshev, Suite::Theorems, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn inner_shape_lists() {
        assert_eq!(two_row_inner_shapes(1).len(), 3);
        assert_eq!(three_row_inner_shapes(2).len(), 4);
    }

    #[test]
    fn small_suites_pass() {
        for check in run_suite(Suite::All, 8) {
            assert!(check.passed, "{}: {:?}", check.name, check.detail);
        }
    }

    #[test]
    fn random_egfs_are_reproducible() {
        assert_eq!(random_egfs(3, 12, 25, 1), random_egfs(3, 12, 25, 1));
    }
}

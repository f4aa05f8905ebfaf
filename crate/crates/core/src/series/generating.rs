//! Catalan and Motzkin generating functions, the binomial-transform operator
//! L(e^x · f), and the images α_k, β_k of the counting functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// √(1−4x) through `order`.
fn catalan_radical(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_integers([1, -4], order).sqrt()
}

/// √(1−2x−3x²) through `order`.
fn motzkin_radical(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_integers([1, -2, -3], order).sqrt()
}

/// c(x) = (1 − √(1−4x)) / 2x.
pub fn catalan_series(order: usize) -> Result<TruncatedSeries> {
    let numerator = &TruncatedSeries::one(order + 1) - &catalan_radical(order + 1)?;
    Ok(numerator.div_x_pow(1)?.scale(&half()))
}

/// m(x) = (1 − x − √(1−2x−3x²)) / 2x².
pub fn motzkin_series(order: usize) -> Result<TruncatedSeries> {
    let linear = TruncatedSeries::from_integers([1, -1], order + 2);
    let numerator = &linear - &motzkin_radical(order + 2)?;
    Ok(numerator.div_x_pow(2)?.scale(&half()))
}

/// Σ binom(2n+s, n) xⁿ from direct binomial coefficients.
pub fn central_binomial_series(s: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers((0..=order).map(|n| binomial(2 * n + s, n)), order)
}

/// Σ binom(2n+s, n) xⁿ = c(x)^s / √(1−4x), through `order`.
pub fn verify_central_binomial(s: usize, order: usize) -> Result<bool> {
    let closed = &catalan_series(order)?.pow(s) * &catalan_radical(order)?.invert()?;
    Ok(closed == central_binomial_series(s, order))
}

/// (1/(1−x)) · c(x²/(1−x)²) = m(x), through `order`.
pub fn verify_catalan_motzkin_bridge(order: usize) -> Result<bool> {
    let geometric = TruncatedSeries::geometric(order);
    let inner = (&geometric * &geometric).mul_x_pow(2);
    let lhs = &geometric * &catalan_series(order)?.compose(&inner)?;
    Ok(lhs == motzkin_series(order)?)
}

/// L(e^x f) for f = Σ aₙ xⁿ/n!, given the aₙ: the ordinary series whose
/// n-th coefficient is Σₖ binom(n,k) aₖ.
pub fn l_of_exp_times(f_egf: &TruncatedSeries) -> TruncatedSeries {
    let order = f_egf.order();
    let coefficients = (0..=order)
        .map(|n| {
            (0..=n).fold(BigRational::zero(), |acc, k| {
                acc + f_egf.coeff(k) * BigRational::from_integer(binomial(n, k))
            })
        })
        .collect();
    TruncatedSeries::new(coefficients, order)
}

/// Checks L(e^x f) = (1/(1−x)) F(x/(1−x)), F being the ordinary series with
/// the same coefficients as the exponential series f.
pub fn verify_binomial_transform(f_egf: &TruncatedSeries) -> Result<bool> {
    let order = f_egf.order();
    let geometric = TruncatedSeries::geometric(order);
    let rhs = &geometric * &f_egf.compose(&geometric.mul_x_pow(1))?;
    Ok(l_of_exp_times(f_egf) == rhs)
}

/// Exponential-series coefficients of θ(g_k): binom(2n+k, n) at power 2n+k.
fn theta_g(k: usize, order: usize) -> TruncatedSeries {
    let coefficients = (0..=order).map(|p| {
        if p >= k && (p - k).is_multiple_of(2) {
            binomial(p, (p - k) / 2)
        } else {
            BigInt::zero()
        }
    });
    TruncatedSeries::from_integers(coefficients, order)
}

fn violation(what: &str, k: usize) -> Error {
    Error::InternalIdentityViolation(format!("{what} routes disagree at k = {k}"))
}

/// The images α_k, β_k and Ψ(G₃(k−1, 0)) through a fixed order, each computed
/// along two routes that must agree.
#[derive(Debug, Clone)]
pub struct PsiSeries {
    order: usize,
    m: TruncatedSeries,
    xm: TruncatedSeries,
    inv_radical: TruncatedSeries,
}

impl PsiSeries {
    pub fn new(order: usize) -> Result<Self> {
        let m = motzkin_series(order)?;
        let xm = m.mul_x_pow(1);
        let inv_radical = motzkin_radical(order)?.invert()?;
        Ok(Self {
            order,
            m,
            xm,
            inv_radical,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn motzkin(&self) -> &TruncatedSeries {
        &self.m
    }

    /// α_k as L(e^x θ(g_k)).
    pub fn alpha_definitional(&self, k: usize) -> TruncatedSeries {
        l_of_exp_times(&theta_g(k, self.order))
    }

    /// α_k as x^k m^k / √(1−2x−3x²).
    pub fn alpha_closed(&self, k: usize) -> TruncatedSeries {
        &self.xm.pow(k) * &self.inv_radical
    }

    pub fn alpha(&self, k: usize) -> Result<TruncatedSeries> {
        let a = self.alpha_definitional(k);
        if a != self.alpha_closed(k) {
            return Err(violation("alpha", k));
        }
        Ok(a)
    }

    /// β_k as α_0 + 2(α_1 + ... + α_{k−1}) + α_k.
    pub fn beta_definitional(&self, k: usize) -> Result<TruncatedSeries> {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut acc = &self.alpha(0)? + &self.alpha(k)?;
        for i in 1..k {
            acc = &acc + &self.alpha(i)?.scale(&two);
        }
        Ok(acc)
    }

    /// β_k as m/(1−xm)² · (1 − x^k m^k).
    pub fn beta_closed(&self, k: usize) -> Result<TruncatedSeries> {
        let one = TruncatedSeries::one(self.order);
        let denom = (&one - &self.xm).pow(2);
        Ok(&(&self.m * &denom.invert()?) * &(&one - &self.xm.pow(k)))
    }

    pub fn beta(&self, k: usize) -> Result<TruncatedSeries> {
        if k == 0 {
            return Err(Error::InvalidArgument("beta needs k >= 1".into()));
        }
        let b = self.beta_definitional(k)?;
        if b != self.beta_closed(k)? {
            return Err(violation("beta", k));
        }
        Ok(b)
    }

    /// Ψ(G₃(k−1, 0)) as α_0 + α_1 − α_k − α_{k+1}.
    pub fn g3_one_row_definitional(&self, k: usize) -> Result<TruncatedSeries> {
        let plus = &self.alpha(0)? + &self.alpha(1)?;
        let minus = &self.alpha(k)? + &self.alpha(k + 1)?;
        Ok(&plus - &minus)
    }

    /// Ψ(G₃(k−1, 0)) as m/(1−xm) · (1 − x^k m^k).
    pub fn g3_one_row_closed(&self, k: usize) -> Result<TruncatedSeries> {
        let one = TruncatedSeries::one(self.order);
        let denom = &one - &self.xm;
        Ok(&(&self.m * &denom.invert()?) * &(&one - &self.xm.pow(k)))
    }

    pub fn g3_one_row(&self, k: usize) -> Result<TruncatedSeries> {
        if k == 0 {
            return Err(Error::InvalidArgument("one-row count needs k >= 1".into()));
        }
        let g = self.g3_one_row_definitional(k)?;
        if g != self.g3_one_row_closed(k)? {
            return Err(violation("one-row count", k));
        }
        Ok(g)
    }
}

/// α_k = Ψ(h g_k) through `order`.
pub fn psi_h_g(k: usize, order: usize) -> Result<TruncatedSeries> {
    PsiSeries::new(order)?.alpha(k)
}

/// β_k = Ψ(h f_k) through `order`, k ≥ 1.
pub fn psi_h_f(k: usize, order: usize) -> Result<TruncatedSeries> {
    PsiSeries::new(order)?.beta(k)
}

/// Ψ(G₃(k−1, 0)): coefficient of x^m counts tableaux of shape λ/(k−1) with
/// m entries, summed over λ with at most three rows.
pub fn psi_g3_one_row(k: usize, order: usize) -> Result<TruncatedSeries> {
    PsiSeries::new(order)?.g3_one_row(k)
}

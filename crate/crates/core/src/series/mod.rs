//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order N stores the coefficients of x^0..=x^N. Binary
//! operations truncate to the smaller order and never extend precision.

mod bivariate;
mod generating;

pub use bivariate::{
    divided_difference_terms, expand_s, expand_t_slice, verify_b_and_two_row_kernel,
    verify_parity_decomposition, BiSeries,
};
pub use generating::{
    catalan_series, central_binomial_series, l_of_exp_times, motzkin_series, psi_g3_one_row,
    psi_h_f, psi_h_g, verify_binomial_transform, verify_catalan_motzkin_bridge,
    verify_central_binomial, PsiSeries,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigRational>,
    order: usize,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so exactly `order + 1` coefficients are kept.
    pub fn new(mut coefficients: Vec<BigRational>, order: usize) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        Self {
            coefficients,
            order,
        }
    }

    pub fn from_integers<I, T>(coefficients: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            coefficients
                .into_iter()
                .take(order + 1)
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// x^power (the zero series if power > order).
    pub fn monomial(power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coefficients[power] = BigRational::one();
        }
        s
    }

    /// 1/(1−x).
    pub fn geometric(order: usize) -> Self {
        Self::from_integers(std::iter::repeat_n(1, order + 1), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of x^i; zero past the order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coefficients[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.coefficients[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// x^power · self, keeping the order.
    pub fn mul_x_pow(&self, power: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); power.min(self.order + 1)];
        coefficients.extend(self.coefficients.iter().take((self.order + 1).saturating_sub(power)).cloned());
        Self::new(coefficients, self.order)
    }

    /// self / x^power. The low coefficients must cancel exactly; the order
    /// drops by `power`.
    pub fn div_x_pow(&self, power: usize) -> Result<Self> {
        if power > self.order {
            return Err(Error::InvalidArgument(format!(
                "cannot divide a series of order {} by x^{power}",
                self.order
            )));
        }
        if let Some(p) = (0..power).find(|&p| !self.coefficients[p].is_zero()) {
            return Err(Error::CancellationFailed { power: p });
        }
        Ok(Self::new(self.coefficients[power..].to_vec(), self.order - power))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coefficients[0];
        if a0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv_a0 = a0.recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(self.order + 1);
        b.push(inv_a0.clone());
        for n in 1..=self.order {
            let mut sum = BigRational::zero();
            for k in 1..=n {
                sum += &self.coefficients[k] * &b[n - k];
            }
            b.push(-(sum * &inv_a0));
        }
        Ok(Self::new(b, self.order))
    }

    /// Principal square root; needs constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coefficients[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut b: Vec<BigRational> = Vec::with_capacity(self.order + 1);
        b.push(BigRational::one());
        for n in 1..=self.order {
            let mut cross = BigRational::zero();
            for i in 1..n {
                cross += &b[i] * &b[n - i];
            }
            b.push((&self.coefficients[n] - cross) / &two);
        }
        Ok(Self::new(b, self.order))
    }

    /// self(inner(x)) by Horner's rule. `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coefficients[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coefficients[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coefficients[0] += c;
        }
        Ok(acc)
    }

    /// The coefficients as integers, or `None` if any has a denominator.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(BigRational::is_integer)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] + &rhs.coefficients[i])
                .collect(),
            order,
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] - &rhs.coefficients[i])
                .collect(),
            order,
        }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coefficients[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries {
            coefficients: out,
            order,
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a + b
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a * b
}

pub fn series_scale(a: &TruncatedSeries, c: &BigRational) -> TruncatedSeries {
    a.scale(c)
}

pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.invert()
}

pub fn series_sqrt(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.sqrt()
}

pub fn series_compose(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.compose(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(c.iter().copied(), order)
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn construction_pads_to_order() {
        let s = ints(&[1, 2], 4);
        assert_eq!(s.coefficients().len(), 5);
        assert_eq!(s.coeff(4), BigRational::zero());
        assert_eq!(ints(&[1, 2, 3, 4], 1).coefficients().len(), 2);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&ints(&[1, 1], 5) * &ints(&[1, -1], 5), ints(&[1, 0, -1], 5));
        let a = ints(&[3, -1, 4, 1, -5], 4);
        assert_eq!(&a * &TruncatedSeries::one(4), a);
        assert_eq!(
            &TruncatedSeries::geometric(8) * &ints(&[1, -1], 8),
            TruncatedSeries::one(8)
        );
        assert_eq!((&a + &ints(&[1], 2)).order(), 2);
        assert_eq!(
            a.scale(&BigRational::new(1.into(), 2.into())).coeff(0),
            BigRational::new(3.into(), 2.into())
        );
    }

    #[test]
    fn invert() {
        assert_eq!(ints(&[1, -1], 10).invert().unwrap(), TruncatedSeries::geometric(10));
        let a = ints(&[1, -2, -3], 12);
        assert_eq!(&a * &a.invert().unwrap(), TruncatedSeries::one(12));
        let b = ints(&[3, 1], 6);
        assert_eq!(&b * &b.invert().unwrap(), TruncatedSeries::one(6));
        assert_eq!(ints(&[0, 1, 1], 5).invert(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn sqrt() {
        assert_eq!(TruncatedSeries::one(5).sqrt().unwrap(), TruncatedSeries::one(5));
        assert_eq!(ints(&[1, 2, 1], 9).sqrt().unwrap(), ints(&[1, 1], 9));
        let central = ints(&[1, -4], 6).sqrt().unwrap().invert().unwrap();
        let expected: Vec<BigInt> = (0..=6).map(|n| binomial(2 * n, n)).collect();
        assert_eq!(central.to_integers().unwrap(), expected);
        assert_eq!(
            central.to_integers().unwrap(),
            [1, 2, 6, 20, 70, 252, 924].map(BigInt::from)
        );
        assert_eq!(ints(&[2, 1], 3).sqrt(), Err(Error::ConstantTermNotOne));
        let a = ints(&[1, 5, -7, 2], 15);
        let r = a.sqrt().unwrap();
        assert_eq!(&r * &r, a);
    }

    #[test]
    fn compose() {
        let f = ints(&[2, 7, 1, 8, 2, 8], 5);
        assert_eq!(f.compose(&TruncatedSeries::monomial(1, 5)).unwrap(), f);
        // 1/(1−x) ∘ x/(1−x) = (1−x)/(1−2x)
        let inner = TruncatedSeries::geometric(8).mul_x_pow(1);
        let composed = TruncatedSeries::geometric(8).compose(&inner).unwrap();
        assert_eq!(composed, ints(&[1, 1, 2, 4, 8, 16, 32, 64, 128], 8));
        let c = catalan_series(8).unwrap();
        let c_sq = c.compose(&TruncatedSeries::monomial(2, 8)).unwrap();
        assert_eq!(c_sq, ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14], 8));
        assert_eq!(f.compose(&ints(&[1, 1], 5)), Err(Error::NonzeroInnerConstant));
    }

    #[test]
    fn shifting() {
        let s = ints(&[0, 0, 3, 4], 5);
        let down = s.div_x_pow(2).unwrap();
        assert_eq!(down, ints(&[3, 4], 3));
        assert_eq!(down.mul_x_pow(2).truncate(3), ints(&[0, 0, 3, 4], 3));
        assert_eq!(ints(&[0, 1], 5).div_x_pow(2), Err(Error::CancellationFailed { power: 1 }));
    }

    #[test]
    fn integrality() {
        assert!(ints(&[1, 2], 3).is_integral());
        let half = ints(&[1], 2).scale(&BigRational::new(1.into(), 2.into()));
        assert!(!half.is_integral());
        assert_eq!(half.to_integers(), None);
    }
}

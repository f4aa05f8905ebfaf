//! Dense integer polynomials and the families r_k, r_{j,k} and q_n.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over ℤ; `coefficients[i]` is the coefficient of x^i.
///
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of x^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::new(self.coefficients.iter().take(max_degree.saturating_add(1)).cloned().collect())
    }

    /// p(x + c), by repeated synthetic division (Taylor shift).
    pub fn shift(&self, c: &BigInt) -> Self {
        let mut a = self.coefficients.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers, zero terms omitted: `1 - 2*x^2 + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

pub fn poly_add(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a + b
}

pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a * b
}

pub fn poly_shift(p: &IntPolynomial, c: i64) -> IntPolynomial {
    p.shift(&BigInt::from(c))
}

/// r_0, ..., r_{k_max}, from the recurrence
/// r_k = x·r_{k−1} − x·r_{k−2} + r_{k−3}, with r_0 = 0 and r_1 = 1.
///
/// The recurrence comes from expanding the denominator of
/// y / ((1−y)(1+(1−x)y+y²)) as 1 − xy + xy² − y³.
pub fn r_polys(k_max: usize) -> Vec<IntPolynomial> {
    let x = IntPolynomial::x();
    let mut out: Vec<IntPolynomial> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let next = match k {
            0 => IntPolynomial::zero(),
            1 => IntPolynomial::one(),
            _ => {
                let mut r = &x * &out[k - 1];
                r = &r - &(&x * &out[k - 2]);
                if k >= 3 {
                    r = &r + &out[k - 3];
                }
                r
            }
        };
        out.push(next);
    }
    out
}

/// r_k(x).
pub fn r_poly(k: usize) -> IntPolynomial {
    r_polys(k).pop().expect("r_polys returns k + 1 entries")
}

/// r_{j,k} = r_j·r_k − r_{j−1}·r_{k−1}, for j, k ≥ 1.
pub fn r_jk_poly(j: usize, k: usize) -> IntPolynomial {
    assert!(j >= 1 && k >= 1, "r_jk_poly needs j, k >= 1");
    let r = r_polys(j.max(k));
    r_jk_from(&r, j, k)
}

/// r_{j,k} from a precomputed table of r_0..r_max.
pub fn r_jk_from(r: &[IntPolynomial], j: usize, k: usize) -> IntPolynomial {
    &(&r[j] * &r[k]) - &(&r[j - 1] * &r[k - 1])
}

/// q_0, ..., q_{n_max} with q_n = x·q_{n−1} − q_{n−2}; q_n(x) = U_n(x/2).
pub fn q_polys(n_max: usize) -> Vec<IntPolynomial> {
    let x = IntPolynomial::x();
    let mut out: Vec<IntPolynomial> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let next = match n {
            0 => IntPolynomial::one(),
            1 => x.clone(),
            _ => &(&x * &out[n - 1]) - &out[n - 2],
        };
        out.push(next);
    }
    out
}

pub fn q_poly(n: usize) -> IntPolynomial {
    q_polys(n).pop().expect("q_polys returns n + 1 entries")
}

/// Checks r_n(x+1) = q_0 + q_1 + ... + q_{n−1}.
pub fn verify_chebyshev_sum(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let lhs = poly_shift(&r_poly(n), 1);
    let rhs = q_polys(n - 1)
        .iter()
        .fold(IntPolynomial::zero(), |acc, q| &acc + q);
    lhs == rhs
}

/// Checks r_{2m}(x+1) = q_{m−1}(q_{m−1}+q_m) and r_{2m+1}(x+1) = q_m(q_{m−1}+q_m).
pub fn verify_chebyshev_factorization(m: usize) -> bool {
    if m == 0 {
        return false;
    }
    let r = r_polys(2 * m + 1);
    let q = q_polys(m);
    let sum = &q[m - 1] + &q[m];
    poly_shift(&r[2 * m], 1) == &q[m - 1] * &sum && poly_shift(&r[2 * m + 1], 1) == &q[m] * &sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Table of r_{k,i} for k = 0..8, as published.
    const PUBLISHED_TABLE: [&[i64]; 9] = [
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

    #[test]
    fn canonical_form() {
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(poly(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn add_and_mul() {
        assert_eq!(poly(&[-1, 0, 1]) + poly(&[1]), poly(&[0, 0, 1]));
        let p = poly(&[3, -1, 4]);
        assert_eq!(IntPolynomial::zero() + p.clone(), p);
        assert_eq!(IntPolynomial::x() + IntPolynomial::x(), poly(&[0, 2]));
        assert_eq!(poly(&[-1, 1]) * poly(&[1, 1]), poly(&[-1, 0, 1]));
        assert!((p.clone() * IntPolynomial::zero()).is_zero());
        assert_eq!(r_poly(2) * r_poly(2), poly(&[0, 0, 1]));
    }

    #[test]
    fn shift() {
        assert_eq!(poly_shift(&poly(&[0, 0, 1]), 1), poly(&[1, 2, 1]));
        let p = poly(&[5, -3, 0, 2]);
        assert_eq!(poly_shift(&p, 0), p);
        assert_eq!(poly_shift(&r_poly(3), 1), poly(&[0, 1, 1]));
        assert_eq!(poly_shift(&poly_shift(&p, 3), -3), p);
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = poly(&[7, 0, -5, 1, 2]);
        for c in -3i64..=3 {
            let shifted = poly_shift(&p, c);
            for x in -4i64..=4 {
                assert_eq!(shifted.eval(&x.into()), p.eval(&(x + c).into()));
            }
        }
    }

    #[test]
    fn r_matches_published_table() {
        let r = r_polys(8);
        for (k, row) in PUBLISHED_TABLE.iter().enumerate() {
            assert_eq!(r[k], poly(row), "row {k}");
        }
        assert_eq!(r_poly(4), poly(&[1, 0, -2, 1]));
        assert_eq!(r_poly(8), poly(&[0, 3, 3, -12, 1, 10, -6, 1]));
        assert!(r_poly(0).is_zero());
    }

    #[test]
    fn r_degree_and_leading_coefficient() {
        for (k, r) in r_polys(40).iter().enumerate().skip(1) {
            assert_eq!(r.degree(), Some(k - 1));
            assert_eq!(r.leading_coefficient(), Some(&BigInt::one()));
        }
    }

    #[test]
    fn r_jk_examples() {
        for k in 1..8 {
            assert_eq!(r_jk_poly(1, k), r_poly(k));
        }
        assert_eq!(r_jk_poly(2, 2), poly(&[-1, 0, 1]));
        assert_eq!(r_jk_poly(2, 3), poly(&[0, -1, -1, 1]));
        for j in 1..10 {
            for k in 1..10 {
                assert_eq!(r_jk_poly(j, k), r_jk_poly(k, j));
            }
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(0), poly(&[1]));
        assert_eq!(q_poly(2), poly(&[-1, 0, 1]));
        assert_eq!(q_poly(3), poly(&[0, -2, 0, 1]));
        let two = BigInt::from(2);
        for (n, q) in q_polys(40).iter().enumerate() {
            assert_eq!(q.eval(&two), BigInt::from(n + 1));
        }
    }

    #[test]
    fn chebyshev_identities() {
        assert!(verify_chebyshev_sum(1));
        assert_eq!(poly_shift(&r_poly(4), 1), poly(&[0, -1, 1, 1]));
        assert!(verify_chebyshev_sum(4));
        assert!(verify_chebyshev_sum(12));
        assert_eq!(poly_shift(&r_poly(2), 1), poly(&[1, 1]));
        assert_eq!(poly_shift(&r_poly(4), 1), poly(&[0, 1]) * poly(&[-1, 1, 1]));
        for m in 1..=15 {
            assert!(verify_chebyshev_factorization(m), "m = {m}");
        }
        for n in 1..=30 {
            assert!(verify_chebyshev_sum(n), "n = {n}");
        }
        assert!(!verify_chebyshev_sum(0));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, -2, 1]).to_string(), "1 - 2*x^2 + x^3");
        assert_eq!(poly(&[0, -1, 3]).to_string(), "-x + 3*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}

//! Series in an outer variable y whose coefficients are integer polynomials in x.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::generating::{motzkin_series, PsiSeries};
use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::polynomials::{poly_shift, q_polys, r_jk_from, r_polys, IntPolynomial};

/// Σ_{n ≤ order} p_n(x) yⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    coefficients: Vec<IntPolynomial>,
    order: usize,
}

impl BiSeries {
    pub fn new(mut coefficients: Vec<IntPolynomial>, order: usize) -> Self {
        coefficients.resize(order + 1, IntPolynomial::zero());
        Self {
            coefficients,
            order,
        }
    }

    /// Builds a polynomial in y from `(power, coefficient)` pairs.
    pub fn from_terms(terms: &[(usize, IntPolynomial)], order: usize) -> Self {
        let mut s = Self::new(Vec::new(), order);
        for (power, c) in terms {
            if *power <= order {
                s.coefficients[*power] = &s.coefficients[*power] + c;
            }
        }
        s
    }

    pub fn one(order: usize) -> Self {
        Self::from_terms(&[(0, IntPolynomial::one())], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[IntPolynomial] {
        &self.coefficients
    }

    pub fn coeff(&self, n: usize) -> &IntPolynomial {
        &self.coefficients[n]
    }

    /// Drops powers of x above `max_degree` in every coefficient.
    pub fn truncate_x(&self, max_degree: usize) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|p| p.truncate(max_degree)).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] + &rhs.coefficients[i])
                .collect(),
            order,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = vec![IntPolynomial::zero(); order + 1];
        for i in 0..=order {
            if self.coefficients[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out[i + j] = &out[i + j] + &(&self.coefficients[i] * &rhs.coefficients[j]);
            }
        }
        Self {
            coefficients: out,
            order,
        }
    }

    /// Inverse over ℤ[x][[y]]; the constant coefficient must be ±1.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coefficients[0];
        let unit = match c0.degree() {
            Some(0) if c0.coeff(0).abs().is_one() => c0.coeff(0),
            _ => return Err(Error::NonUnitConstantTerm),
        };
        // unit is ±1, so it is its own inverse.
        let mut b: Vec<IntPolynomial> = vec![IntPolynomial::constant(unit.clone())];
        for n in 1..=self.order {
            let mut sum = IntPolynomial::zero();
            for k in 1..=n {
                sum = &sum + &(&self.coefficients[k] * &b[n - k]);
            }
            b.push(sum.scale(&-&unit));
        }
        Ok(Self {
            coefficients: b,
            order: self.order,
        })
    }

    /// numerator / denominator.
    pub fn divide(numerator: &Self, denominator: &Self) -> Result<Self> {
        Ok(numerator.mul(&denominator.invert()?))
    }
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// 1 + a·y + y², with a a polynomial in x.
fn quadratic_in_y(a: IntPolynomial, order: usize) -> BiSeries {
    BiSeries::from_terms(&[(0, poly(&[1])), (1, a), (2, poly(&[1]))], order)
}

fn one_minus_y(order: usize) -> BiSeries {
    BiSeries::from_terms(&[(0, poly(&[1])), (1, poly(&[-1]))], order)
}

/// y / ((1−y)(1+(1−x)y+y²)) = Σ r_k(x) y^k, by division in ℤ[x][[y]].
pub fn expand_s(x_deg_bound: usize, y_order: usize) -> BiSeries {
    let numerator = BiSeries::from_terms(&[(1, poly(&[1]))], y_order);
    let denominator = one_minus_y(y_order).mul(&quadratic_in_y(poly(&[1, -1]), y_order));
    BiSeries::divide(&numerator, &denominator)
        .expect("denominator has constant term 1")
        .truncate_x(x_deg_bound)
}

/// Coefficients of y^j z^k, 1 ≤ j ≤ j_order and 1 ≤ k ≤ k_order, in
/// T(1/x,y,z) = yz(1−yz) / ((1−y)(1+(1−x)y+y²)(1−z)(1+(1−x)z+z²)),
/// which is (1−yz)·S(x,y)·S(x,z) since S already carries the factor y.
/// Entry `[j-1][k-1]` holds r_{j,k}(x); each is checked against
/// r_j r_k − r_{j−1} r_{k−1}.
pub fn expand_t_slice(j_order: usize, k_order: usize) -> Result<Vec<Vec<IntPolynomial>>> {
    let n = j_order.max(k_order);
    let s = expand_s(n, n);
    // product[a][b] = [y^a z^b] S(y) S(z)
    let product: Vec<Vec<IntPolynomial>> = (0..=j_order)
        .map(|a| (0..=k_order).map(|b| s.coeff(a) * s.coeff(b)).collect())
        .collect();
    // 1 − yz
    let factor: [((usize, usize), i64); 2] = [((0, 0), 1), ((1, 1), -1)];
    let r = r_polys(n);
    let mut out = Vec::with_capacity(j_order);
    for j in 1..=j_order {
        let mut row = Vec::with_capacity(k_order);
        for k in 1..=k_order {
            let mut c = IntPolynomial::zero();
            for &((dy, dz), sign) in &factor {
                if j >= dy && k >= dz {
                    c = &c + &product[j - dy][k - dz].scale(&BigInt::from(sign));
                }
            }
            if c != r_jk_from(&r, j, k) {
                return Err(Error::InternalIdentityViolation(format!(
                    "coefficient of y^{j} z^{k} is not r_{{{j},{k}}}"
                )));
            }
            row.push(c);
        }
        out.push(row);
    }
    Ok(out)
}

/// Exponent pairs (a, b) with (yⁿz − yzⁿ)/(y − z) = Σ y^a z^b.
///
/// (yⁿz − yzⁿ)/(y − z) = yz·(y^{n−1} − z^{n−1})/(y − z), the complete
/// homogeneous sum of degree n − 2 shifted by yz; empty for n ≤ 1.
pub fn divided_difference_terms(n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    (0..=n - 2).map(|i| (i + 1, n - 1 - i)).collect()
}

/// Expands z/(1−z)·B(y) + y/(1−y)·B(z) − (zB(y) − yB(z))/(y − z) with
/// B(y) = Σ β_k y^k, and checks that the coefficient of y^j z^k is
/// β_j + β_k − β_{j+k} for 1 ≤ j ≤ y_order, 1 ≤ k ≤ z_order, through x^x_order.
///
/// Each such coefficient is also compared with Σ_i [x^i]r_{j,k} · M_{m+i}
/// at every power x^m, tying the kernel to the Motzkin-number counts.
pub fn verify_b_and_two_row_kernel(y_order: usize, z_order: usize, x_order: usize) -> Result<bool> {
    let psi = PsiSeries::new(x_order)?;
    let max_n = y_order + z_order;
    let mut beta = vec![TruncatedSeries::zero(x_order)];
    for n in 1..=max_n {
        beta.push(psi.beta(n)?);
    }

    let mut grid = vec![vec![TruncatedSeries::zero(x_order); z_order + 1]; y_order + 1];
    // z/(1−z)·B(y) and y/(1−y)·B(z): the geometric factors contribute 1 at every positive power.
    for (j, row) in grid.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate() {
            if k >= 1 {
                *cell = &*cell + &beta[j];
            }
            if j >= 1 {
                *cell = &*cell + &beta[k];
            }
        }
    }
    for (n, b) in beta.iter().enumerate().skip(1) {
        for (a, c) in divided_difference_terms(n) {
            if a <= y_order && c <= z_order {
                grid[a][c] = &grid[a][c] - b;
            }
        }
    }

    let motzkin = motzkin_series(x_order + max_n)?
        .to_integers()
        .expect("Motzkin numbers are integers");
    let r = r_polys(max_n);
    for (j, row) in grid.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            if j == 0 || k == 0 {
                if !cell.coefficients().iter().all(Zero::is_zero) {
                    return Ok(false);
                }
                continue;
            }
            let expected = &(&beta[j] + &beta[k]) - &beta[j + k];
            if *cell != expected {
                return Ok(false);
            }
            let weights = r_jk_from(&r, j, k);
            for m in 0..=x_order {
                let combo: BigInt = weights
                    .coefficients()
                    .iter()
                    .enumerate()
                    .map(|(i, w)| w * &motzkin[m + i])
                    .sum();
                if cell.coeff(m) != combo.into() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks the even/odd split of y/((1−y)(1−xy+y²)):
///
/// * P_e + P_o equals it (and its y^n coefficient is r_n(x+1)),
/// * [yⁿ]P_e = q_{⌊(n−1)/2⌋}²,
/// * [yⁿ]P_o = q_{⌊n/2⌋} q_{⌊n/2⌋−1},
///
/// with P_e, P_o expanded from their rational forms, compared through x^x_deg.
pub fn verify_parity_decomposition(x_deg: usize, y_order: usize) -> bool {
    let order = y_order;
    let plus = quadratic_in_y(poly(&[0, 1]), order);
    let minus = quadratic_in_y(poly(&[0, -1]), order);
    let partial = one_minus_y(order).mul(&minus);
    let denominator = partial.mul(&plus);

    let even_num = BiSeries::from_terms(&[(1, poly(&[1])), (3, poly(&[1]))], order);
    let odd_num = BiSeries::from_terms(&[(2, poly(&[0, 1]))], order);
    let target_num = BiSeries::from_terms(&[(1, poly(&[1]))], order);

    let (Ok(even), Ok(odd), Ok(target)) = (
        BiSeries::divide(&even_num, &denominator),
        BiSeries::divide(&odd_num, &denominator),
        BiSeries::divide(&target_num, &partial),
    ) else {
        return false;
    };
    let even = even.truncate_x(x_deg);
    let odd = odd.truncate_x(x_deg);
    let target = target.truncate_x(x_deg);

    if even.add(&odd) != target {
        return false;
    }
    let q = q_polys(order / 2 + 1);
    let r = r_polys(order);
    for n in 0..=order {
        let even_expected = match n {
            0 => IntPolynomial::zero(),
            _ => {
                let q = &q[(n - 1) / 2];
                q * q
            }
        };
        let odd_expected = match n {
            0 | 1 => IntPolynomial::zero(),
            _ => &q[n / 2] * &q[n / 2 - 1],
        };
        if *even.coeff(n) != even_expected.truncate(x_deg)
            || *odd.coeff(n) != odd_expected.truncate(x_deg)
            || *target.coeff(n) != poly_shift(&r[n], 1).truncate(x_deg)
        {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_needs_unit_constant() {
        let s = BiSeries::from_terms(&[(0, poly(&[2]))], 3);
        assert_eq!(s.invert(), Err(Error::NonUnitConstantTerm));
        let s = BiSeries::from_terms(&[(0, poly(&[0, 1]))], 3);
        assert_eq!(s.invert(), Err(Error::NonUnitConstantTerm));
        let s = BiSeries::from_terms(&[(0, poly(&[-1])), (1, poly(&[0, 1]))], 6);
        assert_eq!(s.mul(&s.invert().unwrap()), BiSeries::one(6));
    }

    #[test]
    fn s_expansion_matches_r() {
        let s = expand_s(usize::MAX, 12);
        assert_eq!(*s.coeff(2), poly(&[0, 1]));
        assert!(s.coeff(0).is_zero());
        for (k, r) in r_polys(12).iter().enumerate() {
            assert_eq!(s.coeff(k), r, "k = {k}");
        }
        assert_eq!(*expand_s(1, 8).coeff(8), poly(&[0, 3]));
    }

    #[test]
    fn t_slice() {
        let t = expand_t_slice(8, 8).unwrap();
        assert_eq!(t[0][0], poly(&[1]));
        assert_eq!(t[1][1], poly(&[-1, 0, 1]));
        assert_eq!(t.len(), 8);
        assert_eq!(expand_t_slice(2, 5).unwrap()[1][4], crate::polynomials::r_jk_poly(2, 5));
    }

    #[test]
    fn divided_difference_expansion() {
        // (y − z)·Σ y^a z^b == y^n z − y z^n, as dense integer grids.
        for n in 1..10usize {
            let size = n + 2;
            let mut lhs = vec![vec![0i64; size]; size];
            for (a, b) in divided_difference_terms(n) {
                lhs[a + 1][b] += 1;
                lhs[a][b + 1] -= 1;
            }
            let mut rhs = vec![vec![0i64; size]; size];
            rhs[n][1] += 1;
            rhs[1][n] -= 1;
            assert_eq!(lhs, rhs, "n = {n}");
        }
        assert_eq!(divided_difference_terms(2), vec![(1, 1)]);
    }

    #[test]
    fn two_row_kernel() {
        assert!(verify_b_and_two_row_kernel(2, 1, 15).unwrap());
        assert!(verify_b_and_two_row_kernel(4, 4, 10).unwrap());
    }

    #[test]
    fn parity_decomposition() {
        assert!(verify_parity_decomposition(usize::MAX, 20));
        assert!(verify_parity_decomposition(3, 12));
    }
}

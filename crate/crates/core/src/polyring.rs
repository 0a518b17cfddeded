//! Exact integer arithmetic: dense univariate polynomials in `t`, power
//! series in an auxiliary variable `s` with polynomial coefficients, and the
//! small number-theoretic helpers (binomials, Möbius, divisors) the counting
//! formulas need.
//!
//! Everything here is exact. Coefficients are `BigInt`; there is no floating
//! point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients listed lowest exponent first.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Quotient `q` with `self = q * den` exactly.
    ///
    /// Fails with [`Error::NonExactDivision`] if the integer long division
    /// leaves a remainder or would need a non-integer quotient coefficient.
    pub fn exact_div(&self, den: &IntPolynomial) -> Result<IntPolynomial> {
        let Some(den_deg) = den.degree() else {
            return Err(Error::domain("division by the zero polynomial"));
        };
        let lead = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let Some(num_deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if num_deg < den_deg {
            return Err(Error::NonExactDivision {
                remainder: self.to_string(),
            });
        }
        let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
        for shift in (0..=num_deg - den_deg).rev() {
            let top = &rem[shift + den_deg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision {
                    remainder: Self::from_coeffs(rem).to_string(),
                });
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            quot[shift] = c;
        }
        let rem = Self::from_coeffs(rem);
        if !rem.is_zero() {
            return Err(Error::NonExactDivision {
                remainder: rem.to_string(),
            });
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Coefficient `k` equals coefficient `deg - k` for every `k`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

/// Power series `Σ_j a_j(t) s^j` truncated after `s^order`, with polynomial
/// coefficients in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: Vec<IntPolynomial>,
}

impl TruncatedSeries {
    /// Builds a series from the coefficients of `s^0, s^1, ...`, keeping
    /// only terms up to `s^order`.
    pub fn new(terms: Vec<IntPolynomial>, order: usize) -> Self {
        let mut terms = terms;
        terms.resize(order + 1, IntPolynomial::zero());
        Self { terms }
    }

    /// `Σ_{j=0}^{order} (c·t^k)^j s^j`, the truncation of `1/(1 - c t^k s)`.
    pub fn geometric(c: i64, k: usize, order: usize) -> Self {
        let terms = (0..=order)
            .map(|j| IntPolynomial::monomial(BigInt::from(c).pow(j as u32), k * j))
            .collect();
        Self { terms }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    /// Coefficient of `s^j`.
    pub fn coeff(&self, j: usize) -> &IntPolynomial {
        &self.terms[j]
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul_truncated(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut terms = vec![IntPolynomial::zero(); order + 1];
        for (i, a) in self.terms.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.terms.iter().enumerate().take(order + 1 - i) {
                terms[i + j] = &terms[i + j] + &(a * b);
            }
        }
        TruncatedSeries { terms }
    }
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Möbius function by trial division.
pub fn moebius(n: i64) -> Result<i8> {
    if n < 1 {
        return Err(Error::domain(format!("moebius requires n >= 1, got {n}")));
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    if n < 1 {
        return Err(Error::domain(format!("divisors requires n >= 1, got {n}")));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1i64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!(&p(&[3, 0, 5]) + &IntPolynomial::zero(), p(&[3, 0, 5]));
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1, 1]), p(&[1, 2, 1]));
        // cancellation of the leading term keeps canonical form
        assert_eq!((&p(&[1, 1]) + &p(&[0, -1])).degree(), Some(0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[4, -2, 7]) * &IntPolynomial::one(), p(&[4, -2, 7]));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1, 1]), p(&[1, 0, 0, 0, -1]));
        assert!((&p(&[1, 1]) * &IntPolynomial::zero()).is_zero());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p(&[1, 1]).pow(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(p(&[5, 3]).pow(0), IntPolynomial::one());
        assert_eq!(p(&[1, 0, 0, 1]).pow(2), p(&[1, 0, 0, 2, 0, 0, 1]));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(
            p(&[1, 0, 0, 0, -1]).exact_div(&p(&[1, 0, -1])).unwrap(),
            p(&[1, 0, 1])
        );

        let one_t = p(&[1, 1]);
        let one_t3 = p(&[1, 0, 0, 1]);
        let num = &one_t3.pow(4) - &(&IntPolynomial::monomial(1, 4) * &one_t.pow(4));
        let den = &p(&[1, 0, -1]) * &p(&[1, 0, 0, 0, -1]);
        // stable-bundle factor alone; adding t^4(1+4t+t^2) gives 1+t^2+4t^3+2t^4+4t^5+2t^6
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, p(&[1, 0, 1, 4, 1, 0, 1]));
        assert_eq!(&q + &p(&[0, 0, 0, 0, 1, 4, 1]), p(&[1, 0, 1, 4, 2, 4, 2]));

        let err = p(&[1, 1]).exact_div(&p(&[1, -1])).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
    }

    #[test]
    fn exact_div_rejects_fractional_quotient() {
        let err = p(&[1, 1]).exact_div(&p(&[0, 2])).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
        assert!(p(&[1])
            .exact_div(&IntPolynomial::zero())
            .unwrap_err()
            .is_domain());
        assert!(IntPolynomial::zero()
            .exact_div(&p(&[1, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn pascal_identity() {
        for n in 2..=60u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(7).unwrap(), -1);
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).unwrap_err().is_domain());
    }

    #[test]
    fn moebius_divisor_sum_vanishes() {
        for n in 1..=300 {
            let s: i64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| i64::from(moebius(d).unwrap()))
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(-3).unwrap_err().is_domain());
    }

    #[test]
    fn display_and_eval() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2t + t^3");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[1, 1]).pow(4).eval(&BigInt::from(1)), BigInt::from(16));
    }

    #[test]
    fn geometric_series_product() {
        // 1/(1-s) * 1/(1-s) = Σ (j+1) s^j
        let g = TruncatedSeries::geometric(1, 0, 5);
        let sq = g.mul_truncated(&g);
        for j in 0..=5 {
            assert_eq!(*sq.coeff(j), IntPolynomial::constant(j as i64 + 1));
        }
    }
}

//! Truncated power series with exact rational coefficients.
//!
//! [`Series`] keeps the coefficients of `x^0..=x^N`. [`YSeries`] is a
//! series in `x` whose coefficients are polynomials in `y`, truncated at
//! `y^S`; it carries bivariate distributions such as
//! `sum over words of y^stat x^len`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SeriesError;

/// Coefficients `c_0..=c_N` of a power series in `x`, truncated at `x^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^exp`, which is zero if `exp` exceeds the order.
    pub fn monomial(c: BigRational, exp: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Series::monomial(BigRational::one(), 1, order)
    }

    /// A polynomial with integer coefficients, truncated to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Series::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = rat(c);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn check(&self, other: &Series) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check(other)?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let c0_inv = c0.recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[m - i];
                }
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, other: &Series) -> Result<Series, SeriesError> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// Integer power; negative exponents go through [`Series::inv`].
    pub fn powi(&self, e: i64) -> Result<Series, SeriesError> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Multiplies by `x^m`, dropping terms past the order.
    pub fn shift_up(&self, m: usize) -> Series {
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if i + m <= n {
                out[i + m] = self.coeffs[i].clone();
            }
        }
        Series { coeffs: out }
    }

    /// Exact division by `x^m`. The result has order `N - m`, since the
    /// top `m` coefficients of the quotient are not determined.
    pub fn shift_down(&self, m: usize) -> Result<Series, SeriesError> {
        if m > self.order() || self.coeffs[..m].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible(m));
        }
        Ok(Series {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// Keeps `x^0..=x^order`; panics if asked to extend.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Coefficients as integers, failing on any fraction.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NotIntegral {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Coefficients as counts: every one must be a nonnegative integer.
    pub fn to_counts(&self) -> Result<Vec<BigUint>, SeriesError> {
        self.to_integers()?
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                c.to_biguint().ok_or(SeriesError::NotIntegral {
                    index,
                    value: c.to_string(),
                })
            })
            .collect()
    }

    /// Coefficients as `i64`, for tests and small tables.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// A polynomial in `y` truncated at `y^S`; index is the power of `y`.
type YPoly = Vec<BigRational>;

fn ypoly_mul(a: &YPoly, b: &YPoly) -> YPoly {
    let s = a.len() - 1;
    let mut out = vec![BigRational::zero(); s + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b[..=s - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn ypoly_inv(a: &YPoly) -> Option<YPoly> {
    if a[0].is_zero() {
        return None;
    }
    let s = a.len() - 1;
    let c0_inv = a[0].recip();
    let mut out = vec![c0_inv.clone()];
    for m in 1..=s {
        let mut acc = BigRational::zero();
        for i in 1..=m {
            acc += &a[i] * &out[m - i];
        }
        out.push(-acc * &c0_inv);
    }
    Some(out)
}

/// A series in `x` with coefficients in `Q[y] / (y^(S+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YSeries {
    /// `coeffs[n][s]` is the coefficient of `y^s x^n`.
    coeffs: Vec<YPoly>,
}

impl YSeries {
    pub fn zero(order: usize, y_degree: usize) -> Self {
        YSeries {
            coeffs: vec![vec![BigRational::zero(); y_degree + 1]; order + 1],
        }
    }

    /// Embeds a series as the `y^0` slice.
    pub fn from_series(s: &Series, y_degree: usize) -> Self {
        let mut out = YSeries::zero(s.order(), y_degree);
        for (n, c) in s.coeffs().iter().enumerate() {
            out.coeffs[n][0] = c.clone();
        }
        out
    }

    /// Builds `sum_s y^s slices[s]`; slices past `y_degree` are dropped.
    pub fn from_slices(slices: &[Series], order: usize, y_degree: usize) -> Result<Self, SeriesError> {
        let mut out = YSeries::zero(order, y_degree);
        for (s, slice) in slices.iter().enumerate().take(y_degree + 1) {
            if slice.order() != order {
                return Err(SeriesError::OrderMismatch(order, slice.order()));
            }
            for (n, c) in slice.coeffs().iter().enumerate() {
                out.coeffs[n][s] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, n: usize, s: usize) -> &BigRational {
        &self.coeffs[n][s]
    }

    fn check(&self, other: &YSeries) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        if self.y_degree() != other.y_degree() {
            return Err(SeriesError::OrderMismatch(self.y_degree(), other.y_degree()));
        }
        Ok(())
    }

    pub fn add(&self, other: &YSeries) -> Result<YSeries, SeriesError> {
        self.check(other)?;
        Ok(YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p + q).collect())
                .collect(),
        })
    }

    pub fn sub(&self, other: &YSeries) -> Result<YSeries, SeriesError> {
        self.check(other)?;
        Ok(YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q).collect())
                .collect(),
        })
    }

    pub fn mul(&self, other: &YSeries) -> Result<YSeries, SeriesError> {
        self.check(other)?;
        let n = self.order();
        let mut out = YSeries::zero(n, self.y_degree());
        for i in 0..=n {
            for j in 0..=n - i {
                let prod = ypoly_mul(&self.coeffs[i], &other.coeffs[j]);
                for (acc, p) in out.coeffs[i + j].iter_mut().zip(prod) {
                    *acc += p;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `y`, dropping the top `y` degree.
    pub fn mul_y(&self) -> YSeries {
        YSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|poly| {
                    let mut shifted = vec![BigRational::zero()];
                    shifted.extend_from_slice(&poly[..poly.len() - 1]);
                    shifted
                })
                .collect(),
        }
    }

    /// Inverse in `Q[y]/(y^(S+1)) [[x]]`; needs a nonzero `x^0 y^0` term.
    pub fn inv(&self) -> Result<YSeries, SeriesError> {
        let c0_inv = ypoly_inv(&self.coeffs[0]).ok_or(SeriesError::ZeroConstantTerm)?;
        let n = self.order();
        let mut out: Vec<YPoly> = vec![c0_inv.clone()];
        for m in 1..=n {
            let mut acc = vec![BigRational::zero(); self.y_degree() + 1];
            for i in 1..=m {
                for (a, p) in acc.iter_mut().zip(ypoly_mul(&self.coeffs[i], &out[m - i])) {
                    *a += p;
                }
            }
            let next: YPoly = ypoly_mul(&acc, &c0_inv).into_iter().map(|c| -c).collect();
            out.push(next);
        }
        Ok(YSeries { coeffs: out })
    }

    /// The coefficient series of `y^s`.
    pub fn slice(&self, s: usize) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|poly| poly[s].clone()).collect())
    }

    /// Substitutes `y = 1`. Exact only when no mass sits beyond `y^S`.
    pub fn at_y_one(&self) -> Series {
        Series::from_coeffs(
            self.coeffs
                .iter()
                .map(|poly| poly.iter().fold(BigRational::zero(), |acc, c| acc + c))
                .collect(),
        )
    }
}

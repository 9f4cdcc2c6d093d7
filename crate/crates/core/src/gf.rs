//! Generating functions for avoidance in k-ary words.
//!
//! Every function returns a [`Series`] truncated at the requested order.
//! Formulas that recur on the alphabet size start from the empty alphabet,
//! where the only word is the empty word and every series is `1`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::GfError;
use crate::oracle::{self, Budget};
use crate::pattern::{OrderMode, Pogp};
use crate::series::{Series, YSeries};

/// Default truncation order in `x`.
pub const DEFAULT_ORDER: usize = 16;
/// Default truncation degree in `y`.
pub const DEFAULT_Y_DEGREE: usize = 8;

type GfFn = dyn Fn(u32, usize) -> Result<Series, GfError> + Send + Sync;

/// A family of avoidance series indexed by the alphabet size.
#[derive(Clone)]
pub struct GfProvider {
    name: String,
    f: Arc<GfFn>,
}

impl fmt::Debug for GfProvider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GfProvider").field("name", &self.name).finish()
    }
}

impl GfProvider {
    pub fn new<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(u32, usize) -> Result<Series, GfError> + Send + Sync + 'static,
    {
        GfProvider {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The series at alphabet size `k`, truncated at `x^order`. The empty
    /// alphabet always yields `1`.
    pub fn series(&self, k: u32, order: usize) -> Result<Series, GfError> {
        if k == 0 {
            return Ok(Series::one(order));
        }
        (self.f)(k, order)
    }

    /// The constant series `1`: the family of the one-letter pattern `1`,
    /// which only the empty word avoids.
    pub fn unit() -> Self {
        GfProvider::new("1", |_, order| Ok(Series::one(order)))
    }

    pub fn known(pattern: KnownPattern) -> Self {
        GfProvider::new(pattern.name(), move |k, order| gf_known(pattern, k, order))
    }

    /// Brute-force counts used as a series.
    pub fn oracle(pattern: Pogp, budget: Budget) -> Self {
        let name = format!("oracle({pattern})");
        GfProvider::new(name, move |k, order| {
            let table = oracle::avoider_series(&pattern, k, order, budget)?;
            Ok(Series::from_coeffs(
                table
                    .counts
                    .into_iter()
                    .map(|c| BigRational::from_integer(BigInt::from(c)))
                    .collect(),
            ))
        })
    }

    /// The shuffle pattern `tau-l-nu` with `l` above every other letter.
    pub fn shuffle(tau: GfProvider, nu: GfProvider) -> Self {
        let name = format!("shuffle({}, {})", tau.name, nu.name);
        GfProvider::new(name, move |k, order| shuffle_general(&tau, &nu, k, order))
    }

    /// The multi-pattern whose blocks have the given families.
    pub fn multipattern(blocks: Vec<GfProvider>) -> Self {
        let name = format!(
            "multi({})",
            blocks.iter().map(|b| b.name.as_str()).collect::<Vec<_>>().join(", ")
        );
        GfProvider::new(name, move |k, order| multipattern(&blocks, k, order))
    }
}

/// Patterns with a hardwired closed-form avoidance series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnownPattern {
    Rise,
    Descent,
    P122,
    P212,
    P123,
    /// The multi-pattern `1-1'2'`.
    OneThenRise,
}

impl KnownPattern {
    pub const ALL: [KnownPattern; 6] = [
        KnownPattern::Rise,
        KnownPattern::Descent,
        KnownPattern::P122,
        KnownPattern::P212,
        KnownPattern::P123,
        KnownPattern::OneThenRise,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KnownPattern::Rise => "12",
            KnownPattern::Descent => "21",
            KnownPattern::P122 => "122",
            KnownPattern::P212 => "212",
            KnownPattern::P123 => "123",
            KnownPattern::OneThenRise => "1-1'2'",
        }
    }

    pub fn pattern(self) -> Pogp {
        Pogp::parse(self.name(), &OrderMode::Incomparable).expect("registry patterns parse")
    }
}

impl fmt::Display for KnownPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnownPattern {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KnownPattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GfError::UnknownPattern(s.to_string()))
    }
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn binomial(n: u64, k: u64) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `(1 - x)^e` for any integer `e`.
fn one_minus_x_pow(e: i64, order: usize) -> Result<Series, GfError> {
    Ok(Series::from_ints(&[1, -1], order).powi(e)?)
}

/// Closed-form avoidance series for a registry pattern.
pub fn gf_known(pattern: KnownPattern, k: u32, order: usize) -> Result<Series, GfError> {
    if k == 0 {
        return Ok(Series::one(order));
    }
    let ki = i64::from(k);
    match pattern {
        KnownPattern::Rise | KnownPattern::Descent => one_minus_x_pow(-ki, order),
        KnownPattern::P122 => {
            // x / ((1-x^2)^k - (1-x)); both sides vanish at x = 0, so divide
            // the denominator by x before inverting.
            let wide = order + 1;
            let den = Series::from_ints(&[1, 0, -1], wide)
                .pow(k)
                .sub(&Series::from_ints(&[1, -1], wide))?
                .shift_down(1)?;
            Ok(den.inv()?)
        }
        KnownPattern::P212 => {
            let mut sum = Series::zero(order);
            for j in 0..ki {
                let term = Series::from_ints(&[1, 0, j], order).inv()?;
                sum = sum.add(&term)?;
            }
            let den = Series::one(order).sub(&sum.shift_up(1))?;
            Ok(den.inv()?)
        }
        KnownPattern::P123 => Ok(p123_denominator(k, order).inv()?),
        KnownPattern::OneThenRise => {
            let mut coeffs = vec![int(1)];
            for n in 1..=order as u64 {
                let c = BigUint::from(k) * binomial(n + u64::from(k) - 2, n - 1);
                coeffs.push(int(c));
            }
            Ok(Series::from_coeffs(coeffs))
        }
    }
}

/// `sum_{j=0}^{k} a_j C(k, j) x^j` with `a_j` = 1, -1, 0 by `j mod 3`.
fn p123_denominator(k: u32, order: usize) -> Series {
    let coeffs: Vec<i64> = (0..=u64::from(k))
        .map(|j| {
            let a = [1i64, -1, 0][(j % 3) as usize];
            let c: i64 = binomial(u64::from(k), j).try_into().expect("small binomial");
            a * c
        })
        .collect();
    Series::from_ints(&coeffs, order)
}

/// Closed form for `1'-2-1''`:
/// `1/(1-x)^(2k-1) - sum_{j=1}^{k-1} x/(1-x)^(2j)`.
pub fn gf_eq1(k: u32, order: usize) -> Result<Series, GfError> {
    if k == 0 {
        return Err(GfError::InvalidArgument("the 1'-2-1'' closed form needs k >= 1".into()));
    }
    let k = i64::from(k);
    let mut out = one_minus_x_pow(-(2 * k - 1), order)?;
    for j in 1..k {
        out = out.sub(&one_minus_x_pow(-2 * j, order)?.shift_up(1))?;
    }
    Ok(out)
}

/// The `1'-2-1''` counts from the coefficient recurrence
/// `a(n;k) = 2a(n-1;k) - a(n-2;k) + a(n;k-1)` with `a(0;k) = 1`,
/// `a(1;k) = k`, starting from the empty alphabet.
pub fn eq1_recurrence(k: u32, order: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = (0..=order).map(|n| BigInt::from(u8::from(n == 0))).collect();
    for kk in 1..=k {
        let mut cur: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let v = match n {
                0 => BigInt::one(),
                1 => BigInt::from(kk),
                _ => 2 * &cur[n - 1] - &cur[n - 2] + &prev[n],
            };
            cur.push(v);
        }
        prev = cur;
    }
    prev
}

/// Quasi-avoidance series `(kx - 1) A + 1` of a hyphen-free pattern.
pub fn quasi_transform(a: &Series, k: u32) -> Result<Series, GfError> {
    let order = a.order();
    let kx_minus_1 = Series::from_ints(&[-1, i64::from(k)], order);
    Ok(kx_minus_1.mul(a)?.add(&Series::one(order))?)
}

/// The shuffle pattern `tau-l-tau`, iterated on the alphabet size from
/// `A(x;0) = 1` via `A(k) = (A(k-1) - x T^2) / (1 - x T)^2`, `T = A_tau(k-1)`.
pub fn shuffle_same(tau: &GfProvider, k: u32, order: usize) -> Result<Series, GfError> {
    let x = Series::x(order);
    let one = Series::one(order);
    let mut a = Series::one(order);
    for prev in 0..k {
        let t = tau.series(prev, order)?;
        let num = a.sub(&x.mul(&t.mul(&t)?)?)?;
        let den = one.sub(&x.mul(&t)?)?;
        a = num.div(&den.mul(&den)?)?;
    }
    Ok(a)
}

/// The shuffle pattern `tau-l-nu`, iterated on the alphabet size from
/// `A(x;0) = 1` via `A(k) = (A(k-1) - x T V) / ((1 - x T)(1 - x V))`.
pub fn shuffle_general(tau: &GfProvider, nu: &GfProvider, k: u32, order: usize) -> Result<Series, GfError> {
    let x = Series::x(order);
    let one = Series::one(order);
    let mut a = Series::one(order);
    for prev in 0..k {
        let t = tau.series(prev, order)?;
        let v = nu.series(prev, order)?;
        let num = a.sub(&x.mul(&t.mul(&v)?)?)?;
        let den = one.sub(&x.mul(&t)?)?.mul(&one.sub(&x.mul(&v)?)?)?;
        a = num.div(&den)?;
    }
    Ok(a)
}

/// Avoidance series of the multi-pattern `t1-t2-...-ts`:
/// `sum_j A_j prod_{i<j} ((kx-1) A_i + 1)`.
pub fn multipattern(blocks: &[GfProvider], k: u32, order: usize) -> Result<Series, GfError> {
    if blocks.is_empty() {
        return Err(GfError::InvalidArgument("a multi-pattern needs at least one block".into()));
    }
    let mut total = Series::zero(order);
    let mut prefix = Series::one(order);
    for block in blocks {
        let a = block.series(k, order)?;
        total = total.add(&a.mul(&prefix)?)?;
        prefix = prefix.mul(&quasi_transform(&a, k)?)?;
    }
    Ok(total)
}

/// `A_t0 + A_phi * A*_t0` for `t0-phi` with `t0` hyphen-free and
/// incomparable to `phi`.
pub fn prefix_decomposition(tau0: &GfProvider, phi: &GfProvider, k: u32, order: usize) -> Result<Series, GfError> {
    let a0 = tau0.series(k, order)?;
    let rest = phi.series(k, order)?;
    Ok(a0.add(&rest.mul(&quasi_transform(&a0, k)?)?)?)
}

/// Multi-pattern of `s` blocks each equal to `12` or `21`:
/// `(1 - (1 + (kx-1)/(1-x)^k)^s) / (1 - kx)`.
pub fn descent_multipattern(k: u32, s: u32, order: usize) -> Result<Series, GfError> {
    if s == 0 {
        return Err(GfError::InvalidArgument("s must be at least 1".into()));
    }
    let one = Series::one(order);
    let kx_minus_1 = Series::from_ints(&[-1, i64::from(k)], order);
    let inner = one.add(&kx_minus_1.mul(&one_minus_x_pow(-i64::from(k), order)?)?)?;
    let num = one.sub(&inner.pow(s))?;
    let den = Series::from_ints(&[1, -i64::from(k)], order);
    Ok(num.div(&den)?)
}

/// Distribution of the maximum number of non-overlapping occurrences of a
/// hyphen-free pattern whose avoidance series at alphabet `k` is `a`.
/// The `y^s` slice is `A ((kx-1) A + 1)^s`.
pub fn mnd_gf(a: &Series, k: u32, y_degree: usize) -> Result<YSeries, GfError> {
    let q = quasi_transform(a, k)?;
    let mut slices = Vec::with_capacity(y_degree + 1);
    let mut current = a.clone();
    for _ in 0..=y_degree {
        slices.push(current.clone());
        current = current.mul(&q)?;
    }
    Ok(YSeries::from_slices(&slices, a.order(), y_degree)?)
}

/// Bivariate rational forms of the distribution for `12`, `122`, `212`
/// and `123`, built literally from their displayed numerators and
/// denominators.
pub fn mnd_displayed_form(pattern: KnownPattern, k: u32, order: usize, y_degree: usize) -> Result<YSeries, GfError> {
    let lift = |s: &Series| YSeries::from_series(s, y_degree);
    let ki = i64::from(k);
    let one = Series::one(order);
    let (num, den) = match pattern {
        KnownPattern::Rise | KnownPattern::Descent => {
            // 1 / ((1-x)^k + y (1 - kx - (1-x)^k))
            let base = one_minus_x_pow(ki, order)?;
            let ycoef = Series::from_ints(&[1, -ki], order).sub(&base)?;
            (lift(&one), lift(&base).add(&lift(&ycoef).mul_y())?)
        }
        KnownPattern::P122 => {
            // x / ((1-x^2)^k + x - 1 + y (1 - kx^2 - (1-x^2)^k)); cancel x.
            let wide = order + 1;
            let p = Series::from_ints(&[1, 0, -1], wide).pow(k);
            let base = p.add(&Series::from_ints(&[-1, 1], wide))?.shift_down(1)?;
            let ycoef = Series::from_ints(&[1, 0, -ki], wide).sub(&p)?.shift_down(1)?;
            (lift(&one), lift(&base).add(&lift(&ycoef).mul_y())?)
        }
        KnownPattern::P212 => {
            // 1 / (1 - x S + x y (S - k)), S = sum_{j<k} 1/(1 + j x^2)
            let mut sum = Series::zero(order);
            for j in 0..ki {
                sum = sum.add(&Series::from_ints(&[1, 0, j], order).inv()?)?;
            }
            let base = one.sub(&sum.shift_up(1))?;
            let ycoef = sum.sub(&Series::from_ints(&[ki], order))?.shift_up(1);
            (lift(&one), lift(&base).add(&lift(&ycoef).mul_y())?)
        }
        KnownPattern::P123 => {
            // 1 / (D + y (1 - kx - D)), D = sum a_j C(k,j) x^j
            let base = p123_denominator(k, order);
            let ycoef = Series::from_ints(&[1, -ki], order).sub(&base)?;
            (lift(&one), lift(&base).add(&lift(&ycoef).mul_y())?)
        }
        KnownPattern::OneThenRise => {
            return Err(GfError::InvalidArgument(
                "1-1'2' has hyphens; its distribution is not defined".into(),
            ))
        }
    };
    Ok(num.mul(&den.inv()?)?)
}

/// Resolves a pattern to a formula-backed family when one applies: a
/// registry pattern, a multi-pattern over resolvable blocks, or a
/// three-block shuffle pattern over resolvable blocks.
pub fn provider_for(p: &Pogp) -> Option<GfProvider> {
    use crate::pattern::PatternKind;

    if let Some(known) = KnownPattern::ALL.into_iter().find(|k| k.pattern() == *p) {
        return Some(GfProvider::known(known));
    }
    let block = |i: usize| p.block_as_pattern(i).ok().and_then(|b| block_provider(&b));
    let class = p.classify();
    match class.kind {
        PatternKind::Plain if p.is_hyphen_free() => block_provider(p),
        PatternKind::Multi => {
            let blocks = (0..p.blocks().len()).map(block).collect::<Option<Vec<_>>>()?;
            Some(GfProvider::multipattern(blocks))
        }
        PatternKind::Shuffle if p.blocks().len() == 3 => {
            Some(GfProvider::shuffle(block(0)?, block(2)?))
        }
        _ => None,
    }
}

fn block_provider(p: &Pogp) -> Option<GfProvider> {
    if *p == Pogp::plain(&[&[1]]).expect("valid") {
        return Some(GfProvider::unit());
    }
    KnownPattern::ALL
        .into_iter()
        .filter(|k| k.pattern().is_hyphen_free())
        .find(|k| k.pattern() == *p)
        .map(GfProvider::known)
}

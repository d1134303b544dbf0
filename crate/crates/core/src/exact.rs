//! Exact integer and rational arithmetic, plus the counting primitives the
//! bounds are assembled from.
//!
//! Everything here is a pure function of its arguments. Values are kept as
//! arbitrary-precision integers: `q^n` for `n` in the hundreds is far past any
//! machine word, and table reproduction must be bit-exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactNat(BigUint);

impl ExactNat {
    pub fn zero() -> Self {
        ExactNat(BigUint::zero())
    }

    pub fn one() -> Self {
        ExactNat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactNat(num_traits::pow::Pow::pow(&self.0, exp))
    }

    /// `base^exp` for a machine-sized base.
    pub fn power(base: u32, exp: u32) -> Self {
        ExactNat(BigUint::from(base).pow(exp))
    }

    /// Floor division. Panics on a zero divisor.
    pub fn div_floor(&self, rhs: &ExactNat) -> ExactNat {
        ExactNat(&self.0 / &rhs.0)
    }

    /// Subtraction that refuses to go negative.
    pub fn checked_sub(&self, rhs: &ExactNat) -> Option<ExactNat> {
        (self.0 >= rhs.0).then(|| ExactNat(&self.0 - &rhs.0))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Nonnegative part of a signed integer, `None` if negative.
    pub fn from_bigint(v: BigInt) -> Option<ExactNat> {
        v.to_biguint().map(ExactNat)
    }
}

impl fmt::Display for ExactNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for ExactNat {
    fn from(v: u32) -> Self {
        ExactNat(BigUint::from(v))
    }
}

impl From<u64> for ExactNat {
    fn from(v: u64) -> Self {
        ExactNat(BigUint::from(v))
    }
}

impl From<BigUint> for ExactNat {
    fn from(v: BigUint) -> Self {
        ExactNat(v)
    }
}

impl std::str::FromStr for ExactNat {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse::<BigUint>().map(ExactNat)
    }
}

impl Add for ExactNat {
    type Output = ExactNat;
    fn add(self, rhs: ExactNat) -> ExactNat {
        ExactNat(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactNat> for &'a ExactNat {
    type Output = ExactNat;
    fn add(self, rhs: &ExactNat) -> ExactNat {
        ExactNat(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactNat> for ExactNat {
    fn add_assign(&mut self, rhs: &ExactNat) {
        self.0 += &rhs.0;
    }
}

impl Mul for ExactNat {
    type Output = ExactNat;
    fn mul(self, rhs: ExactNat) -> ExactNat {
        ExactNat(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactNat> for &'a ExactNat {
    type Output = ExactNat;
    fn mul(self, rhs: &ExactNat) -> ExactNat {
        ExactNat(&self.0 * &rhs.0)
    }
}

impl MulAssign<&ExactNat> for ExactNat {
    fn mul_assign(&mut self, rhs: &ExactNat) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for ExactNat {
    fn sum<I: Iterator<Item = ExactNat>>(iter: I) -> Self {
        iter.fold(ExactNat::zero(), |acc, x| acc + x)
    }
}

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::PreconditionViolation("zero denominator"));
        }
        // BigRational::new reduces and normalizes the sign.
        Ok(ExactRatio(BigRational::new(numer, denom)))
    }

    pub fn from_integer(v: BigInt) -> Self {
        ExactRatio(BigRational::from_integer(v))
    }

    pub fn from_nat(v: &ExactNat) -> Self {
        Self::from_integer(v.to_bigint())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::PreconditionViolation("reciprocal of zero"));
        }
        Ok(ExactRatio(self.0.recip()))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! ratio_op {
    ($tr:ident, $method:ident) => {
        impl<'a> std::ops::$tr<&'a ExactRatio> for &'a ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &ExactRatio) -> ExactRatio {
                ExactRatio(std::ops::$tr::$method(&self.0, &rhs.0))
            }
        }
    };
}

ratio_op!(Add, add);
ratio_op!(Sub, sub);
ratio_op!(Mul, mul);

impl<'a> std::ops::Div<&'a ExactRatio> for &'a ExactRatio {
    type Output = ExactRatio;
    /// Panics on division by zero.
    fn div(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 / &rhs.0)
    }
}

/// Which right-hand side to use when counting admissible tails.
///
/// `Weight` counts every tail vector of weight at least `lo`:
/// `sum_j C(m, j) (q-1)^j`. `Literal` multiplies the plain binomial sum by a
/// single factor `(q-1)^i`, the form in which the inequality is sometimes
/// printed. The two agree for `q = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RhsVariant {
    #[default]
    Weight,
    Literal,
}

impl fmt::Display for RhsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhsVariant::Weight => "weight",
            RhsVariant::Literal => "literal",
        })
    }
}

impl std::str::FromStr for RhsVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "weight" => Ok(RhsVariant::Weight),
            "literal" => Ok(RhsVariant::Literal),
            other => Err(format!(
                "unknown variant `{other}` (expected weight|literal)"
            )),
        }
    }
}

pub(crate) fn check_alphabet(q: u32) -> Result<()> {
    if q < 2 {
        Err(Error::InvalidAlphabet(q))
    } else {
        Ok(())
    }
}

/// `C(m, r)`, zero when `r > m`.
pub fn binomial(m: u32, r: u32) -> ExactNat {
    if r > m {
        return ExactNat::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigUint::one();
    // acc = C(m - r + i, i) after step i, so each division is exact.
    for i in 1..=r {
        acc *= m - r + i;
        acc /= i;
    }
    ExactNat(acc)
}

/// Number of length-`m` words over a `q`-ary alphabet with Hamming weight `j`.
pub fn weight_count(m: u32, j: u32, q: u32) -> Result<ExactNat> {
    check_alphabet(q)?;
    Ok(&binomial(m, j) * &ExactNat::power(q - 1, j))
}

/// Row `[A_0, ..., A_m]` with `A_j = C(m, j) (q-1)^j`, built incrementally.
pub fn weight_counts(m: u32, q: u32) -> Result<Vec<ExactNat>> {
    check_alphabet(q)?;
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut cur = BigUint::one();
    row.push(ExactNat(cur.clone()));
    for j in 0..m {
        cur *= (m - j) as u64 * (q - 1) as u64;
        cur /= j + 1;
        row.push(ExactNat(cur.clone()));
    }
    Ok(row)
}

/// Volume of a Hamming ball of radius `r` in the length-`n` `q`-ary space.
pub fn sphere_volume(n: u32, r: u32, q: u32) -> Result<ExactNat> {
    check_alphabet(q)?;
    if r > n {
        return Err(Error::InvalidRadius { len: n, radius: r });
    }
    Ok(weight_counts(n, q)?.into_iter().take(r as usize + 1).sum())
}

/// Number of admissible tails: length-`m` vectors of weight at least `lo`,
/// counted according to `variant` (see [`RhsVariant`]). `i` is the
/// systematic-part weight, used only by the literal variant.
pub fn tail_mass(m: u32, lo: u32, q: u32, variant: RhsVariant, i: u32) -> Result<ExactNat> {
    check_alphabet(q)?;
    if lo > m {
        return Ok(ExactNat::zero());
    }
    Ok(match variant {
        RhsVariant::Weight => (lo..=m)
            .map(|j| weight_count(m, j, q))
            .sum::<Result<ExactNat>>()?,
        RhsVariant::Literal => {
            let plain: ExactNat = (lo..=m).map(|j| binomial(m, j)).sum();
            &plain * &ExactNat::power(q - 1, i)
        }
    })
}

/// `C(top, r)` for a possibly negative integer `top`, as a polynomial in `top`.
pub(crate) fn generalized_binomial(top: i64, r: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..r as i64 {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

/// Krawtchouk polynomial `K_k(x) = sum_j (-1)^j C(x, j) C(n-x, k-j) (q-1)^(k-j)`
/// for the length-`n`, `q`-ary Hamming scheme, evaluated exactly at the
/// integer `x` (which may lie outside `0..=n`).
pub fn krawtchouk(n: u32, q: u32, k: u32, x: i64) -> BigInt {
    let n = n as i64;
    let qm1 = BigInt::from(q.saturating_sub(1));
    (0..=k)
        .map(|j| {
            let term = generalized_binomial(x, j)
                * generalized_binomial(n - x, k - j)
                * num_traits::pow::Pow::pow(&qm1, k - j);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Largest `k` with `q^k <= m`.
pub fn floor_log_q(m: &ExactNat, q: u32) -> Result<u32> {
    check_alphabet(q)?;
    if m.is_zero() {
        return Err(Error::UndefinedLog);
    }
    // Start from a bit-length estimate, then correct by at most a few steps.
    let bits = m.0.bits();
    let log2_q = 32 - (q.leading_zeros() + 1); // floor(log2 q)
    let mut k = ((bits - 1) / (log2_q as u64 + 1)) as u32;
    let qb = BigUint::from(q);
    let mut p = qb.pow(k);
    while p > m.0 {
        k -= 1;
        p /= &qb;
    }
    loop {
        let next = &p * &qb;
        if next.cmp(&m.0) == Ordering::Greater {
            return Ok(k);
        }
        p = next;
        k += 1;
    }
}

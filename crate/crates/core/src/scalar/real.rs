use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::Error;

/// Absolute tolerance used by the floating-point backend for equality and
/// sign decisions.
pub const FLOAT_EPS: f64 = 1e-9;

/// Real carrier for every component in the crate.
///
/// Two backends are provided: [`BigRational`] (exact, closed and lossless
/// under the field operations) and `f64` (comparisons within [`FLOAT_EPS`]).
pub trait Real:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// `true` for backends whose arithmetic is exact.
    const EXACT: bool;
    /// Short backend name, used in reports.
    const BACKEND: &'static str;

    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;

    /// Square root. Exact for perfect rational squares; otherwise the
    /// rational nearest to the `f64` root.
    fn sqrt(&self) -> Self;

    /// A positive multiple of `v` that is cheap to multiply with; rational
    /// entries become integers.
    fn clear_denominators(v: &[Self]) -> Vec<Self> {
        v.to_vec()
    }

    /// `Σ a_i b_i`.
    fn dot(a: &[Self], b: &[Self]) -> Self {
        a.iter()
            .zip(b)
            .fold(Self::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }

    /// Equality up to the backend tolerance.
    fn approx_eq(&self, other: &Self) -> bool;

    fn is_zero_tol(&self) -> bool {
        self.approx_eq(&Self::zero())
    }

    /// Total order on the backend with tolerance-aware ties.
    fn cmp_tol(&self, other: &Self) -> Ordering {
        if self.approx_eq(other) {
            Ordering::Equal
        } else if self < other {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn lt_tol(&self, other: &Self) -> bool {
        self.cmp_tol(other) == Ordering::Less
    }

    fn le_tol(&self, other: &Self) -> bool {
        self.cmp_tol(other) != Ordering::Greater
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, Error>;

    /// Parses `"p/q"`, an integer or a decimal literal.
    fn parse(s: &str) -> Result<Self, Error>;
}

/// Parses a decimal literal (optionally with exponent) into an exact rational.
fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(pos) => (&digits[..pos], &digits[pos + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(if all.is_empty() { "0" } else { &all }).ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let mut r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim())
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let q = BigInt::from_str(q.trim())
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    parse_decimal(s).ok_or_else(|| Error::Parse(format!("not a number: {s:?}")))
}

fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl Real for BigRational {
    const EXACT: bool = true;
    const BACKEND: &'static str = "exact";

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn clear_denominators(v: &[Self]) -> Vec<Self> {
        if v.iter().all(|x| x.denom().is_one()) {
            return v.to_vec();
        }
        let l = v.iter().fold(BigInt::one(), |acc, x| {
            if x.denom().is_one() {
                acc
            } else {
                acc.lcm(x.denom())
            }
        });
        v.iter()
            .map(|x| BigRational::from_integer(x.numer() * (&l / x.denom())))
            .collect()
    }

    fn dot(a: &[Self], b: &[Self]) -> Self {
        let (mut num, mut den) = (BigInt::zero(), BigInt::one());
        for (x, y) in a.iter().zip(b) {
            let (p, q) = (x.numer() * y.numer(), x.denom() * y.denom());
            if q.is_one() && den.is_one() {
                num += p;
            } else {
                num = num * &q + p * &den;
                den *= q;
            }
        }
        if den.is_one() {
            BigRational::from_integer(num)
        } else {
            BigRational::new(num, den)
        }
    }

    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).unwrap_or_else(BigRational::zero)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    fn sqrt(&self) -> Self {
        if let (Some(n), Some(d)) = (exact_sqrt_int(self.numer()), exact_sqrt_int(self.denom())) {
            return BigRational::new(n, d);
        }
        <Self as Real>::from_f64(Real::to_f64(self).sqrt())
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn cmp_tol(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self, Error> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()),
            other => Err(Error::Parse(format!("expected a number, found {other}"))),
        }
    }

    fn parse(s: &str) -> Result<Self, Error> {
        parse_rational(s)
    }
}

/// Lowest-terms `"p/q"`; integers print without a denominator.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Real for f64 {
    const EXACT: bool = false;
    const BACKEND: &'static str = "float";

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(self.max(0.0))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_EPS
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or_else(|| Value::String(self.to_string()))
    }

    fn from_json(v: &Value) -> Result<Self, Error> {
        match v {
            Value::Number(n) => n
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("not representable as f64: {n}"))),
            Value::String(s) => <f64 as Real>::parse(s),
            other => Err(Error::Parse(format!("expected a number, found {other}"))),
        }
    }

    fn parse(s: &str) -> Result<Self, Error> {
        Ok(Real::to_f64(&parse_rational(s)?))
    }
}

/// Decides `sqrt(a2) <= sqrt(b2) + sqrt(c2)` for nonnegative squares without
/// taking any root. Exact in the rational backend.
pub fn root_le_root_sum<T: Real>(a2: &T, b2: &T, c2: &T) -> bool {
    let lhs = a2.clone() - b2.clone() - c2.clone();
    if lhs.le_tol(&T::zero()) {
        return true;
    }
    let four = T::from_i64(4);
    (lhs.clone() * lhs).le_tol(&(four * b2.clone() * c2.clone()))
}

/// Smallest power-of-two style helper: `1 / 2^m` in the backend.
pub fn inv_pow2<T: Real>(m: u32) -> T {
    let mut v = T::one();
    let two = T::from_i64(2);
    for _ in 0..m {
        v = v / two.clone();
    }
    v
}

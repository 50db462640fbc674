//! The tropical semiring ℝ_max = (ℝ ∪ {ε}, max, +) with exact scalars.
//!
//! Finite values are arbitrary-precision rationals, so everything the crate
//! derives from rational inputs (sums, negations, halvings, Newton-polygon
//! slopes) stays rational and equality is decided exactly, with no tolerance
//! anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of ℝ_max: the bottom element ε = -inf, or a finite exact
/// rational.
///
/// ε is its own variant, never a sentinel number. The derived ordering puts
/// ε below every finite value and compares finite values as rationals, which
/// is the total order all tropical operations use.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    /// The additive identity -inf, absorbing under ⊗.
    Epsilon,
    /// A finite exact rational value.
    Finite(BigRational),
}

impl Scalar {
    pub fn epsilon() -> Self {
        Scalar::Epsilon
    }

    pub fn from_int(value: i64) -> Self {
        Scalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    /// Exact rational `numer / denom`. Panics if `denom` is zero.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_rational(value: BigRational) -> Self {
        Scalar::Finite(value)
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Scalar::Epsilon)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_epsilon()
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Epsilon => None,
            Scalar::Finite(r) => Some(r),
        }
    }

    /// Tropical addition a ⊕ b = max{a, b}.
    pub fn tadd(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical multiplication a ⊗ b = a + b, with ε absorbing.
    pub fn tmul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a + b),
            _ => Scalar::Epsilon,
        }
    }

    /// Tropical power a^⊗k = k·a; the empty product (k = 0) is the
    /// multiplicative identity 0, even for a = ε.
    pub fn tpow(&self, k: usize) -> Scalar {
        if k == 0 {
            return Scalar::from_int(0);
        }
        match self {
            Scalar::Epsilon => Scalar::Epsilon,
            Scalar::Finite(r) => Scalar::Finite(r * BigInt::from(k)),
        }
    }

    /// Tropical inverse a^⊗-1 = -a; ε has none.
    pub fn tinv(&self) -> Result<Scalar> {
        match self {
            Scalar::Epsilon => Err(Error::InverseOfEpsilon),
            Scalar::Finite(r) => Ok(Scalar::Finite(-r)),
        }
    }

    /// Exact halving, used by the (λ - a_qq)/2 construction; ε stays ε.
    pub fn half(&self) -> Scalar {
        match self {
            Scalar::Epsilon => Scalar::Epsilon,
            Scalar::Finite(r) => Scalar::Finite(r / BigInt::from(2)),
        }
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Epsilon => write!(f, "-inf"),
            Scalar::Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses a scalar token: `-inf` (also `−∞`/`-∞`), a rational `p/q`, or
    /// a decimal with optional exponent. Conversion is exact; no binary
    /// floating point is involved.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "-inf" | "\u{2212}\u{221e}" | "-\u{221e}" => Ok(Scalar::Epsilon),
            _ => parse_finite(t).map(Scalar::Finite),
        }
    }
}

fn parse_finite(t: &str) -> Result<BigRational> {
    if t.is_empty() {
        return Err(Error::Parse("empty scalar token".into()));
    }
    if let Some((numer, denom)) = t.split_once('/') {
        let n = parse_bigint(numer)?;
        let d = parse_bigint(denom)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    parse_decimal(t)
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
}

/// `[sign] digits [. digits] [(e|E) [sign] digits]`, evaluated exactly as
/// mantissa / 10^(fraction length) · 10^exponent.
fn parse_decimal(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid scalar token {t:?}"));
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], exp)
        }
        None => (t, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let scale = frac_part.len() as i64;
    if exponent.abs() > 100_000 {
        return Err(Error::Parse(format!("exponent out of range in {t:?}")));
    }
    let mantissa_int =
        BigInt::from_str(&format!("{int_part}{frac_part}")).map_err(|_| bad())? * BigInt::from(sign);
    let ten = BigInt::from(10);
    let net = exponent - scale;
    let value = if net >= 0 {
        BigRational::from_integer(mantissa_int * ten.pow(net as u32))
    } else {
        BigRational::new(mantissa_int, ten.pow((-net) as u32))
    };
    Ok(value)
}

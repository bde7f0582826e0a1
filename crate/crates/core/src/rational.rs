//! Exact rational values and the extended line `Q ∪ {+∞}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `n/d`, or just `n` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `3`, `-3`, `3.5`, `.5`, `7/2` or `-7/2` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Literal(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let q = Rational::new(numer, denom);
    Ok(if neg { -q } else { q })
}

pub fn half(q: &Rational) -> Rational {
    q / int(2)
}

pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

/// A rational or positive infinity. `Finite(_) < Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(q) => Some(q),
            Extended::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    /// `self - q`, staying infinite if `self` is.
    pub fn sub(&self, q: &Rational) -> Extended {
        match self {
            Extended::Finite(x) => Extended::Finite(x - q),
            Extended::Infinite => Extended::Infinite,
        }
    }

    pub fn halved(&self) -> Extended {
        match self {
            Extended::Finite(x) => Extended::Finite(half(x)),
            Extended::Infinite => Extended::Infinite,
        }
    }
}

impl From<Rational> for Extended {
    fn from(q: Rational) -> Self {
        Extended::Finite(q)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(q) => f.write_str(&fmt_rational(q)),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

pub fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("3.5").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("22/10").unwrap(), rat(11, 5));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        for bad in ["", "1/0", "abc", "1.2.3", "-", ".", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(fmt_rational(&int(4)), "4");
        assert_eq!(fmt_rational(&rat(-7, 2)), "-7/2");
        assert_eq!(Extended::Infinite.to_string(), "inf");
    }

    #[test]
    fn infinity_sorts_last() {
        assert!(Extended::Finite(int(1_000_000)) < Extended::Infinite);
        assert!(Extended::Finite(int(1)) < Extended::Finite(int(2)));
    }

    proptest::proptest! {
        #[test]
        fn format_parse_round_trip(n in -10_000i64..10_000, d in 1i64..1_000) {
            let q = rat(n, d);
            proptest::prop_assert_eq!(parse_rational(&fmt_rational(&q)).unwrap(), q);
        }
    }
}

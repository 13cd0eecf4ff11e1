//! Exact rationals over `i128` with overflow detection.
//!
//! Every density handled by this crate is a small fraction, so a bounded
//! representation is plenty. Arithmetic never wraps: the `checked_*`
//! methods report [`ArithmeticOverflow`], and the operator impls panic with
//! a diagnostic instead of silently producing a wrong value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("rational arithmetic overflowed 128 bits")]
pub struct ArithmeticOverflow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A normalized fraction `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den`. Panics on a zero denominator.
    pub fn new(num: i128, den: i128) -> Rational {
        Self::try_new(num, den).expect("rational with zero denominator or i128::MIN component")
    }

    pub fn try_new(num: i128, den: i128) -> Option<Rational> {
        if den == 0 || num == i128::MIN || den == i128::MIN {
            return None;
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Some(Rational { num: n, den: d })
    }

    pub fn from_integer(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> i128 {
        -((-self.num).div_euclid(self.den))
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den }
    }

    pub fn recip(&self) -> Option<Rational> {
        Rational::try_new(self.den, self.num)
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational, ArithmeticOverflow> {
        // Reduce by the denominator gcd first to keep intermediates small.
        let g = gcd(self.den, rhs.den);
        let l = self.den / g;
        let r = rhs.den / g;
        let a = self.num.checked_mul(r).ok_or(ArithmeticOverflow)?;
        let b = rhs.num.checked_mul(l).ok_or(ArithmeticOverflow)?;
        let num = a.checked_add(b).ok_or(ArithmeticOverflow)?;
        let den = l.checked_mul(rhs.den).ok_or(ArithmeticOverflow)?;
        Rational::try_new(num, den).ok_or(ArithmeticOverflow)
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational, ArithmeticOverflow> {
        self.checked_add(Rational { num: rhs.num.checked_neg().ok_or(ArithmeticOverflow)?, den: rhs.den })
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational, ArithmeticOverflow> {
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let num = (self.num / g1).checked_mul(rhs.num / g2).ok_or(ArithmeticOverflow)?;
        let den = (self.den / g2).checked_mul(rhs.den / g1).ok_or(ArithmeticOverflow)?;
        Rational::try_new(num, den).ok_or(ArithmeticOverflow)
    }

    /// Division; `None` on a zero divisor, `Some(Err)` on overflow.
    pub fn checked_div(self, rhs: Rational) -> Option<Result<Rational, ArithmeticOverflow>> {
        let inv = rhs.recip()?;
        Some(self.checked_mul(inv))
    }
}

/// Exact comparison of `a/b` and `c/d` (`b, d > 0`) by continued-fraction
/// expansion, so no cross-multiplication can overflow.
fn cmp_fractions(mut a: i128, mut b: i128, mut c: i128, mut d: i128) -> Ordering {
    let mut flipped = false;
    loop {
        let qa = a.div_euclid(b);
        let qc = c.div_euclid(d);
        if qa != qc {
            let o = qa.cmp(&qc);
            return if flipped { o.reverse() } else { o };
        }
        let ra = a.rem_euclid(b);
        let rc = c.rem_euclid(d);
        match (ra == 0, rc == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return if flipped { Ordering::Greater } else { Ordering::Less },
            (false, true) => return if flipped { Ordering::Less } else { Ordering::Greater },
            (false, false) => {}
        }
        // a/b = q + ra/b ; compare b/ra against d/rc, reversed.
        (a, b, c, d) = (b, ra, d, rc);
        flipped = !flipped;
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        cmp_fractions(self.num, self.den, other.num, other.den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(_) => panic!("exact arithmetic overflow: {} {} {}", self, stringify!($method), rhs),
                }
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        match self.checked_div(rhs) {
            Some(Ok(v)) => v,
            Some(Err(_)) => panic!("exact arithmetic overflow: {} div {}", self, rhs),
            None => panic!("division of {} by zero", self),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let parse = |t: &str| t.trim().parse::<i128>().map_err(|_| ParseRationalError::BadInteger(s.to_string()));
        match s.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse(n)?, parse(d)?);
                Rational::try_new(n, d).ok_or(ParseRationalError::ZeroDenominator)
            }
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the crate and its tests.
pub fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

//! Exact rationals on the projective line: every finite `p/q` in lowest
//! terms plus a single unsigned `∞ = 1/0`.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An irreducible fraction. The denominator is never negative and is zero
/// only for `∞`, which is stored as `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds the canonical form of `num/den`. `0/0` is the only rejected input.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self::infinity());
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Fraction { num, den })
    }

    /// Shorthand for literals that are known to be valid.
    ///
    /// Panics on `0/0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("0/0 is not a fraction")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Fraction { num: n.into(), den: BigInt::one() }
    }

    pub fn infinity() -> Self {
        Fraction { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() && !self.den.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_infinite() && self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_infinite() && self.num.is_negative()
    }

    pub fn abs(&self) -> Fraction {
        Fraction { num: self.num.abs(), den: self.den.clone() }
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Fraction {
        Fraction::new(self.den.clone(), self.num.clone()).expect("numerator and denominator never both vanish")
    }

    fn finite(&self, op: &str) {
        assert!(!self.is_infinite(), "{op} is undefined for inf");
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction::zero()
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::integer(n)
    }
}

// ∞ sorts above every finite value so that vertex sequences have a total order.
impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        self.finite("addition");
        rhs.finite("addition");
        Fraction::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Sub<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self.finite("subtraction");
        rhs.finite("subtraction");
        Fraction::new(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Mul<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        self.finite("multiplication");
        rhs.finite("multiplication");
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Div<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn div(self, rhs: &Fraction) -> Fraction {
        self.finite("division");
        rhs.finite("division");
        assert!(!rhs.is_zero(), "division by zero");
        Fraction::new(&self.num * &rhs.den, &self.den * &rhs.num).unwrap()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: &Fraction) -> Fraction { (&self).$m(rhs) }
        }
        impl<'a> $tr<Fraction> for &'a Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        if self.is_infinite() {
            return self;
        }
        Fraction { num: -self.num, den: self.den }
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -self.clone()
    }
}

impl core::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q`, `p`, `-p/q` and `inf`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Fraction::infinity());
        }
        let bad = || Error::Parse(String::from("not a fraction: ") + s);
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            if t.is_empty() || t.contains(char::is_whitespace) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_negative() {
                    return Err(bad());
                }
                Fraction::new(parse_int(n)?, den).map_err(|e| match e {
                    Error::ZeroOverZero => Error::Parse(s.to_string() + ": 0/0"),
                    e => e,
                })
            }
            None => Ok(Fraction::integer(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(Fraction::new(4, -6).unwrap(), Fraction::ratio(-2, 3));
        assert_eq!(Fraction::new(4, -6).unwrap().to_string(), "-2/3");
        assert!(Fraction::new(1, 0).unwrap().is_infinite());
        assert!(Fraction::new(-3, 0).unwrap().is_infinite());
        let z = Fraction::new(0, 5).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::zero(), BigInt::one()));
        assert_eq!(Fraction::new(0, 0), Err(Error::ZeroOverZero));
    }

    #[test]
    fn parse_and_render() {
        for s in ["-1/2", "2/5", "7", "-3", "inf", "0"] {
            assert_eq!(s.parse::<Fraction>().unwrap().to_string(), s);
        }
        assert_eq!("6/4".parse::<Fraction>().unwrap().to_string(), "3/2");
        assert!("0/0".parse::<Fraction>().is_err());
        assert!("1/".parse::<Fraction>().is_err());
        assert!("a/2".parse::<Fraction>().is_err());
        assert!("1/-2".parse::<Fraction>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Fraction::ratio(2, 11);
        let b = Fraction::integer(18);
        assert_eq!(&a + &b, Fraction::ratio(200, 11));
        assert_eq!(Fraction::ratio(1, 2) - Fraction::ratio(1, 3), Fraction::ratio(1, 6));
        assert_eq!(Fraction::ratio(3, 4) * Fraction::ratio(2, 3), Fraction::ratio(1, 2));
        assert_eq!(Fraction::ratio(3, 4) / Fraction::ratio(3, 8), Fraction::integer(2));
        assert_eq!(-Fraction::infinity(), Fraction::infinity());
        assert_eq!(Fraction::zero().recip(), Fraction::infinity());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = alloc::vec![Fraction::infinity(), Fraction::ratio(1, 2), Fraction::integer(-4), Fraction::ratio(2, 5)];
        v.sort();
        assert_eq!(v.iter().map(|f| f.to_string()).collect::<alloc::vec::Vec<_>>(), ["-4", "2/5", "1/2", "inf"]);
    }

    #[test]
    #[should_panic]
    fn arithmetic_on_infinity_panics() {
        let _ = Fraction::infinity() + Fraction::one();
    }
}

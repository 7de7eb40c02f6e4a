//! Exact reduced rationals over arbitrary-precision integers.
//!
//! A [`Rational`] is always kept in lowest terms with a positive
//! denominator, so integrality tests and p-adic valuations read the
//! denominator directly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::nt;

/// p-adic order of a rational number. Zero gets a distinguished
/// infinite valuation so the ultrametric inequality stays statable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Exact fraction in lowest terms. Sign lives on the numerator; the
/// denominator is strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Reduce `num/den` to canonical form. `den` may be negative; the
    /// sign is moved onto the numerator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Ok(Rational { num, den: BigInt::one() });
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational { num: n, den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Rational::from_integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Rational::from_integer(BigInt::one())
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// Magnitude of the denominator (always positive).
    pub fn denom_magnitude(&self) -> BigUint {
        self.den.magnitude().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// p-adic valuation: v_p(num) - v_p(den). Negative exactly when p
    /// divides the reduced denominator.
    pub fn vp(&self, p: &BigUint) -> Result<Valuation> {
        if !nt::is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        if self.num.is_zero() {
            return Ok(Valuation::Infinite);
        }
        let vn = nt::int_valuation(self.num.magnitude(), p) as i64;
        let vd = nt::int_valuation(self.den.magnitude(), p) as i64;
        Ok(Valuation::Finite(vn - vd))
    }
}

/// Reduce a numerator/denominator pair; the spec-facing constructor.
pub fn reduce(num: BigInt, den: BigInt) -> Result<Rational> {
    Rational::new(num, den)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        // den > 0, so new() cannot fail
        Rational::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        Rational::new(num, den).expect("nonzero denominator")
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        Rational::new(num, den).expect("nonzero denominator")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

/// Parse "num/den" or a bare integer.
impl std::str::FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            t.parse::<BigInt>()
                .map_err(|_| Error::Precondition("malformed integer in rational literal"))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

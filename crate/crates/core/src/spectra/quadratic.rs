//! Exact arithmetic in `Q(√d)` for the three radicands the thresholds need.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::poly::RatPolynomial;

pub const RADICANDS: [u32; 3] = [2, 3, 5];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadraticError {
    #[error("radicand {0} is not one of 2, 3, 5")]
    Radicand(u32),
}

/// The real number `a + b√d` with rational `a`, `b` and `d ∈ {2, 3, 5}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigRational,
    b: BigRational,
    d: u32,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadraticNumber {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Result<Self, QuadraticError> {
        if !RADICANDS.contains(&d) {
            return Err(QuadraticError::Radicand(d));
        }
        Ok(QuadraticNumber { a, b, d })
    }

    /// `(an/ad) + (bn/bd)√d` from small integers.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64, d: u32) -> Result<Self, QuadraticError> {
        Self::new(rat(an, ad), rat(bn, bd), d)
    }

    pub fn from_rational(a: BigRational, d: u32) -> Self {
        debug_assert!(RADICANDS.contains(&d));
        QuadraticNumber {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    pub fn from_integer(k: i64, d: u32) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)), d)
    }

    /// `-√2`
    pub fn neg_sqrt2() -> Self {
        Self::from_ratios(0, 1, -1, 1, 2).expect("valid radicand")
    }

    /// `-√3`
    pub fn neg_sqrt3() -> Self {
        Self::from_ratios(0, 1, -1, 1, 3).expect("valid radicand")
    }

    /// `-(1+√5)/2`, the negated golden ratio.
    pub fn neg_golden() -> Self {
        Self::from_ratios(-1, 2, -1, 2, 5).expect("valid radicand")
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b√d`
    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Sign decided by rational comparisons only: when `a` and `b` disagree
    /// in sign, compare `a²` with `b²d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, y) => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
                match a2.cmp(&b2d) {
                    Ordering::Greater => x,
                    Ordering::Less => y,
                    // √d is irrational, so a² = b²d forces a = b = 0
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Exact order of two numbers; panics if both are irrational over
    /// different radicands.
    pub fn cmp_exact(&self, other: &QuadraticNumber) -> Ordering {
        (self - other).signum()
    }

    /// Monic minimal polynomial over `Q` (degree 1 for rationals).
    pub fn minimal_polynomial(&self) -> RatPolynomial {
        if self.b.is_zero() {
            return RatPolynomial::new(vec![-self.a.clone(), BigRational::one()]);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let d = BigRational::from_integer(BigInt::from(self.d));
        let c0 = &self.a * &self.a - &self.b * &self.b * d;
        RatPolynomial::new(vec![c0, -(two * &self.a), BigRational::one()])
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    fn same_field(&self, other: &QuadraticNumber) -> u32 {
        if self.d == other.d || other.b.is_zero() {
            self.d
        } else if self.b.is_zero() {
            other.d
        } else {
            panic!("mixing Q(√{}) and Q(√{})", self.d, other.d)
        }
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(rhs);
        QuadraticNumber {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d,
        }
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(rhs);
        QuadraticNumber {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d,
        }
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(rhs);
        let dq = BigRational::from_integer(BigInt::from(d));
        QuadraticNumber {
            a: &self.a * &rhs.a + &self.b * &rhs.b * dq,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{} ", self.a)?;
            f.write_str(if self.b.is_negative() { "- " } else { "+ " })?;
        } else if self.b.is_negative() {
            f.write_str("-")?;
        }
        let b = self.b.abs();
        if b.is_one() {
            write!(f, "√{}", self.d)
        } else {
            write!(f, "({b})√{}", self.d)
        }
    }
}

/// The three irrational thresholds of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Threshold {
    NegSqrt2,
    NegSqrt3,
    NegGolden,
}

impl Threshold {
    pub const ALL: [Threshold; 3] = [Threshold::NegSqrt2, Threshold::NegSqrt3, Threshold::NegGolden];

    pub fn value(self) -> QuadraticNumber {
        match self {
            Threshold::NegSqrt2 => QuadraticNumber::neg_sqrt2(),
            Threshold::NegSqrt3 => QuadraticNumber::neg_sqrt3(),
            Threshold::NegGolden => QuadraticNumber::neg_golden(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Threshold::NegSqrt2 => "−√2",
            Threshold::NegSqrt3 => "−√3",
            Threshold::NegGolden => "−(1+√5)/2",
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

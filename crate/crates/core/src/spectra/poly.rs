//! Dense univariate polynomials: integer coefficients for characteristic
//! polynomials, rational coefficients for Sturm chains.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::quadratic::QuadraticNumber;

/// Polynomial with `i64` coefficients, constant term first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `x - r`
    pub fn linear_root(r: i64) -> Self {
        IntPolynomial::new(vec![-r, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval_i64(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// Exact value at `a + b√d`.
    pub fn eval_quadratic(&self, x: &QuadraticNumber) -> QuadraticNumber {
        let mut acc = QuadraticNumber::from_rational(BigRational::zero(), x.radicand());
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &QuadraticNumber::from_integer(c, x.radicand());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as i64)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, k: u32) -> IntPolynomial {
        (0..k).fold(IntPolynomial::new(vec![1]), |acc, _| acc.mul(self))
    }

    /// Quotient `self / divisor` when the division is exact over `Z`.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.to_rational().div_rem(&divisor.to_rational());
        if !r.is_zero() {
            return None;
        }
        q.to_integer()
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Polynomial with arbitrary-precision rational coefficients, constant term
/// first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RatPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, divisor: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (RatPolynomial::new(Vec::new()), RatPolynomial::new(Vec::new()));
        };
        if nd < dd {
            return (RatPolynomial::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPolynomial::new(quot), RatPolynomial::new(rem))
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPolynomial) -> RatPolynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_quadratic(&self, x: &QuadraticNumber) -> QuadraticNumber {
        let mut acc = QuadraticNumber::from_rational(BigRational::zero(), x.radicand());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &QuadraticNumber::from_rational(c.clone(), x.radicand());
        }
        acc
    }

    /// Sign of the polynomial as `x -> -∞` (0 for the zero polynomial).
    pub fn sign_at_neg_infinity(&self) -> i8 {
        match (self.leading(), self.degree()) {
            (Some(l), Some(d)) => {
                let s: i8 = if l.is_positive() { 1 } else { -1 };
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        }
    }

    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    pub fn one() -> Self {
        RatPolynomial::new(vec![BigRational::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, 0, -3, 0, 1]).to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(IntPolynomial::new(vec![-1, -1]).to_string(), "-x - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let p = IntPolynomial::new(vec![4, -3, -2, 1]).mul(&IntPolynomial::new(vec![1, 1]).pow(2));
        let q = p.div_exact(&IntPolynomial::new(vec![1, 2, 1])).unwrap();
        assert_eq!(q, IntPolynomial::new(vec![4, -3, -2, 1]));
        assert!(p.div_exact(&IntPolynomial::new(vec![1, 0, 1])).is_none());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = IntPolynomial::new(vec![-2, 0, 1]).mul(&IntPolynomial::new(vec![1, 1]));
        let b = IntPolynomial::new(vec![-2, 0, 1]).mul(&IntPolynomial::new(vec![-3, 1]));
        let g = a.to_rational().gcd(&b.to_rational());
        assert_eq!(g.to_integer(), Some(IntPolynomial::new(vec![-2, 0, 1])));
    }
}

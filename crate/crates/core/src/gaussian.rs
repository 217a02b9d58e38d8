//! Gaussian integers, the four units `{1, i, -1, -i}`, and small dense
//! matrices over `Z[i]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian { re: 0, im: 0 };
    pub const ONE: Gaussian = Gaussian { re: 1, im: 0 };
    pub const I: Gaussian = Gaussian { re: 0, im: 1 };
    pub const MINUS_ONE: Gaussian = Gaussian { re: -1, im: 0 };
    pub const MINUS_I: Gaussian = Gaussian { re: 0, im: -1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Gaussian { re, im }
    }

    pub const fn real(re: i64) -> Self {
        Gaussian { re, im: 0 }
    }

    pub fn conj(self) -> Self {
        Gaussian::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Squared modulus.
    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    /// Exact division by a rational integer; `None` if it does not divide.
    pub fn div_exact(self, k: i64) -> Option<Self> {
        if k == 0 || self.re % k != 0 || self.im % k != 0 {
            None
        } else {
            Some(Gaussian::new(self.re / k, self.im / k))
        }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Gaussian {
    fn add_assign(&mut self, rhs: Gaussian) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for Gaussian {
    fn sub_assign(&mut self, rhs: Gaussian) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// One of the four units of `Z[i]`, stored as the exponent `k` in `i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI];

    fn exponent(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::MinusOne => 2,
            Unit::MinusI => 3,
        }
    }

    fn from_exponent(k: u8) -> Unit {
        match k % 4 {
            0 => Unit::One,
            1 => Unit::I,
            2 => Unit::MinusOne,
            _ => Unit::MinusI,
        }
    }

    pub fn to_gaussian(self) -> Gaussian {
        match self {
            Unit::One => Gaussian::ONE,
            Unit::I => Gaussian::I,
            Unit::MinusOne => Gaussian::MINUS_ONE,
            Unit::MinusI => Gaussian::MINUS_I,
        }
    }

    pub fn from_gaussian(g: Gaussian) -> Option<Unit> {
        match (g.re, g.im) {
            (1, 0) => Some(Unit::One),
            (0, 1) => Some(Unit::I),
            (-1, 0) => Some(Unit::MinusOne),
            (0, -1) => Some(Unit::MinusI),
            _ => None,
        }
    }

    pub fn conj(self) -> Unit {
        Unit::from_exponent(4 - self.exponent())
    }

    pub fn is_imaginary(self) -> bool {
        matches!(self, Unit::I | Unit::MinusI)
    }
}

impl Mul for Unit {
    type Output = Unit;
    // powers of i multiply by adding exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Unit) -> Unit {
        Unit::from_exponent(self.exponent() + rhs.exponent())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::MinusOne => "-1",
            Unit::MinusI => "-i",
        })
    }
}

/// Dense square matrix over `Z[i]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    n: usize,
    entries: Vec<Gaussian>,
}

impl GaussianMatrix {
    pub fn zeros(n: usize) -> Self {
        GaussianMatrix {
            n,
            entries: vec![Gaussian::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Gaussian::ONE);
        }
        m
    }

    /// Builds from row-major entries. Panics if `entries.len() != n * n`.
    pub fn from_entries(n: usize, entries: Vec<Gaussian>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix must be {n}x{n}");
        GaussianMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gaussian {
        self.entries[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Gaussian) {
        self.entries[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[Gaussian] {
        &self.entries
    }

    pub fn trace(&self) -> Gaussian {
        (0..self.n).fold(Gaussian::ZERO, |acc, i| acc + self.get(i, i))
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|r| (r..self.n).all(|c| self.get(r, c) == self.get(c, r).conj()))
    }

    pub fn mul_matrix(&self, rhs: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn principal_submatrix(&self, rows: &[usize]) -> GaussianMatrix {
        let m = rows.len();
        let mut out = Self::zeros(m);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in rows.iter().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    /// The `2n x 2n` real matrix `[[Re H, -Im H], [Im H, Re H]]`.
    pub fn real_embedding(&self) -> GaussianMatrix {
        let n = self.n;
        let mut out = Self::zeros(2 * n);
        for r in 0..n {
            for c in 0..n {
                let g = self.get(r, c);
                out.set(r, c, Gaussian::real(g.re));
                out.set(r, c + n, Gaussian::real(-g.im));
                out.set(r + n, c, Gaussian::real(g.im));
                out.set(r + n, c + n, Gaussian::real(g.re));
            }
        }
        out
    }
}

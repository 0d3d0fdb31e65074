//! Coefficient fields.
//!
//! Two instantiations are provided: exact rationals ([`Rational`], a
//! `BigRational`) and dual rationals ([`Dual`]), the ring `F[ε]/(ε²)` used to
//! read off exact first derivatives.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficients.
pub type Rational = BigRational;

/// Scalars a series can be built over.
///
/// Division is exposed through [`Field::inv`], which returns `None` for
/// non-units. For a true field that is only zero; for [`Dual`] it is every
/// value with vanishing real part.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, `None` when `self` is not a unit.
    fn inv(&self) -> Option<Self>;

    /// An `m`-th root inside the field, if one exists. For rationals this is
    /// the principal (non-negative for even `m`) root.
    fn nth_root(&self, m: u32) -> Option<Self>;

    /// Parses the canonical text form produced by `Display`.
    fn parse(s: &str) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// First `len` coefficients of the product of two coefficient windows,
    /// missing entries read as zero.
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        (0..len)
            .map(|k| {
                let lo = k.saturating_sub(b.len() - 1);
                let hi = k.min(a.len() - 1);
                let mut acc = Self::zero();
                for i in lo..=hi {
                    acc = acc + &(a[i].clone() * &b[k - i]);
                }
                acc
            })
            .collect()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn nth_root(&self, m: u32) -> Option<Self> {
        if m == 0 {
            return None;
        }
        if m == 1 {
            return Some(self.clone());
        }
        if self.is_negative() && m % 2 == 0 {
            return None;
        }
        // numer/denom are coprime, so a rational root exists iff both are perfect powers
        let root_of = |n: &BigInt| -> Option<BigInt> {
            let r = n.nth_root(m);
            (num_traits::pow(r.clone(), m as usize) == *n).then_some(r)
        };
        let p = root_of(self.numer())?;
        let q = root_of(self.denom())?;
        Some(BigRational::new(p, q))
    }

    // integer products over a common denominator, one reduction per output
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        let (da, a) = clear_denominators(a);
        let (db, b) = clear_denominators(b);
        let den = da * db;
        (0..len)
            .map(|k| {
                let lo = k.saturating_sub(b.len() - 1);
                let hi = k.min(a.len() - 1);
                let mut acc = BigInt::zero();
                for i in lo..=hi {
                    acc += &a[i] * &b[k - i];
                }
                BigRational::new(acc, den.clone())
            })
            .collect()
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                if Zero::is_zero(&q) {
                    return None;
                }
                BigRational::new(p, q)
            }
            None => BigRational::from_integer(s.parse().ok()?),
        };
        Some(value)
    }
}

fn clear_denominators(v: &[BigRational]) -> (BigInt, Vec<BigInt>) {
    let den = v.iter().fold(BigInt::one(), |l, x| if x.denom().is_one() { l } else { l.lcm(x.denom()) });
    let ints = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (den, ints)
}

/// A dual number `re + eps·ε` with `ε² = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Dual<F> {
    pub re: F,
    pub eps: F,
}

impl<F: Field> Dual<F> {
    pub fn new(re: F, eps: F) -> Self {
        Dual { re, eps }
    }

    /// A value with no infinitesimal part.
    pub fn real(re: F) -> Self {
        Dual { re, eps: F::zero() }
    }

    /// The infinitesimal unit `ε`.
    pub fn epsilon() -> Self {
        Dual { re: F::zero(), eps: F::one() }
    }
}

impl<F: Field> Add for Dual<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual { re: self.re + rhs.re, eps: self.eps + rhs.eps }
    }
}

impl<'a, F: Field> Add<&'a Dual<F>> for Dual<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        Dual { re: self.re + &rhs.re, eps: self.eps + &rhs.eps }
    }
}

impl<F: Field> Sub for Dual<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual { re: self.re - rhs.re, eps: self.eps - rhs.eps }
    }
}

impl<'a, F: Field> Sub<&'a Dual<F>> for Dual<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        Dual { re: self.re - &rhs.re, eps: self.eps - &rhs.eps }
    }
}

impl<F: Field> Mul for Dual<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<'a, F: Field> Mul<&'a Dual<F>> for Dual<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        let eps = self.re.clone() * &rhs.eps + &(self.eps * &rhs.re);
        Dual { re: self.re * &rhs.re, eps }
    }
}

impl<F: Field> Neg for Dual<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual { re: -self.re, eps: -self.eps }
    }
}

impl<F: Field> fmt::Display for Dual<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}E", self.re, self.eps)
    }
}

impl<F: Field> Field for Dual<F> {
    fn zero() -> Self {
        Dual::real(F::zero())
    }

    fn one() -> Self {
        Dual::real(F::one())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    fn from_i64(n: i64) -> Self {
        Dual::real(F::from_i64(n))
    }

    fn inv(&self) -> Option<Self> {
        let r = self.re.inv()?;
        let eps = -(self.eps.clone() * &r * &r);
        Some(Dual { re: r, eps })
    }

    fn nth_root(&self, m: u32) -> Option<Self> {
        let r = self.re.nth_root(m)?;
        if m == 1 {
            return Some(self.clone());
        }
        // d(x^(1/m)) = dx / (m r^(m-1))
        let denom = F::from_i64(m as i64) * r.pow(m - 1);
        let eps = self.eps.div(&denom)?;
        Some(Dual { re: r, eps })
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.strip_suffix('E') {
            Some(body) => {
                // canonical fractions never contain '+', so the first one separates the parts
                let (re, eps) = body.split_once('+')?;
                Some(Dual { re: F::parse(re)?, eps: F::parse(eps)? })
            }
            None => Some(Dual::real(F::parse(s)?)),
        }
    }
}

/// Parses a rational from its canonical `p/q` form.
pub fn rat(s: &str) -> Rational {
    <Rational as Field>::parse(s).unwrap_or_else(|| panic!("not a rational literal: {s:?}"))
}

/// The rational `n`.
pub fn int(n: i64) -> Rational {
    <Rational as Field>::from_i64(n)
}

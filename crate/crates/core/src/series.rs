//! Truncated formal semi-Laurent series.
//!
//! A [`Series`] is known exactly below an absolute precision cap `prec`: every
//! coefficient of `z^n` with `n < prec` is determined, nothing is asserted at
//! or above it. Three shapes occur:
//!
//! * `Known`: the order is determined, the stored window `c_0, .., c_{L-1}`
//!   holds the coefficients of `z^order .. z^(prec-1)` and `c_0 != 0`;
//! * `ZeroToPrec(p)`: every coefficient below `p` vanishes, so the order is
//!   only known to be at least `p`;
//! * `ExactZero`: the zero series, of order `+inf`.
//!
//! A `Known` series may additionally carry a finite-support certificate, in
//! which case every coefficient beyond the stored window is zero and the
//! series has infinite precision (a Laurent polynomial). Operations propagate
//! the certificate only where the result is again exactly a polynomial.
//!
//! Every operation reports the largest precision it can guarantee: changing
//! any input coefficient at or above that input's `prec` never changes an
//! output coefficient below the output's `prec`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

/// Which of the three shapes a series has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    ExactZero,
    Known,
    ZeroToPrec,
}

/// The order of a series as far as it can be determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(i64),
    /// `ord 0 = +inf`.
    Infinite,
    /// Precision-limited zero: the true order is at least this value.
    AtLeast(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr<F> {
    ExactZero,
    ZeroToPrec(i64),
    Known { order: i64, coeffs: Vec<F>, exact: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series<F> {
    repr: Repr<F>,
}

/// `min` over precisions where `None` stands for `+inf`.
pub(crate) fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<F: Field> Series<F> {
    // ----- constructors -------------------------------------------------

    pub fn exact_zero() -> Self {
        Series { repr: Repr::ExactZero }
    }

    pub fn zero_to_prec(prec: i64) -> Self {
        Series { repr: Repr::ZeroToPrec(prec) }
    }

    /// `coeffs[j]` is the coefficient of `z^(order+j)`; the series is known up
    /// to `prec = order + coeffs.len()`. Leading zeros are stripped and an
    /// all-zero window becomes `ZeroToPrec(prec)`.
    pub fn new(order: i64, coeffs: Vec<F>) -> Self {
        Self::normalized(order, coeffs, false)
    }

    /// Like [`Series::new`] but checks `prec == order + coeffs.len()`.
    pub fn make(order: i64, coeffs: Vec<F>, prec: i64) -> Result<Self> {
        if order + coeffs.len() as i64 != prec {
            return Err(Error::InvalidArgument(format!(
                "prec {prec} != order {order} + {} coefficients",
                coeffs.len()
            )));
        }
        Ok(Self::new(order, coeffs))
    }

    /// A Laurent polynomial: the coefficients beyond the window are certified
    /// zero.
    pub fn polynomial(order: i64, coeffs: Vec<F>) -> Self {
        Self::normalized(order, coeffs, true)
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::polynomial(0, vec![c])
    }

    /// `c·z^n`, exactly.
    pub fn monomial(c: F, n: i64) -> Self {
        Self::polynomial(n, vec![c])
    }

    /// The series `z`.
    pub fn z() -> Self {
        Self::monomial(F::one(), 1)
    }

    fn normalized(order: i64, mut coeffs: Vec<F>, exact: bool) -> Self {
        let prec = order + coeffs.len() as i64;
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let Some(lead) = lead else {
            return if exact { Self::exact_zero() } else { Self::zero_to_prec(prec) };
        };
        coeffs.drain(..lead);
        if exact {
            while coeffs.last().is_some_and(|c| c.is_zero()) {
                coeffs.pop();
            }
        }
        Series { repr: Repr::Known { order: order + lead as i64, coeffs, exact } }
    }

    // ----- inspection ---------------------------------------------------

    pub fn kind(&self) -> Kind {
        match self.repr {
            Repr::ExactZero => Kind::ExactZero,
            Repr::ZeroToPrec(_) => Kind::ZeroToPrec,
            Repr::Known { .. } => Kind::Known,
        }
    }

    pub fn order(&self) -> Order {
        match self.repr {
            Repr::ExactZero => Order::Infinite,
            Repr::ZeroToPrec(p) => Order::AtLeast(p),
            Repr::Known { order, .. } => Order::Finite(order),
        }
    }

    /// The order if it is a determined integer.
    pub fn known_order(&self) -> Option<i64> {
        match self.repr {
            Repr::Known { order, .. } => Some(order),
            _ => None,
        }
    }

    /// The first exponent whose coefficient is unknown; `None` means every
    /// coefficient is determined (exact zero or a certified polynomial).
    pub fn prec(&self) -> Option<i64> {
        match &self.repr {
            Repr::ExactZero => None,
            Repr::ZeroToPrec(p) => Some(*p),
            Repr::Known { exact: true, .. } => None,
            Repr::Known { order, coeffs, .. } => Some(order + coeffs.len() as i64),
        }
    }

    /// One past the last stored exponent. Equals `prec` unless the series is
    /// a certified polynomial. `None` for the exact zero.
    pub fn window_end(&self) -> Option<i64> {
        match &self.repr {
            Repr::ExactZero => None,
            Repr::ZeroToPrec(p) => Some(*p),
            Repr::Known { order, coeffs, .. } => Some(order + coeffs.len() as i64),
        }
    }

    /// The stored window (empty unless `Known`).
    pub fn coeffs(&self) -> &[F] {
        match &self.repr {
            Repr::Known { coeffs, .. } => coeffs,
            _ => &[],
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.repr, Repr::ExactZero | Repr::Known { exact: true, .. })
    }

    pub fn is_known(&self) -> bool {
        matches!(self.repr, Repr::Known { .. })
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs().first()
    }

    /// Lowest exponent that may carry a nonzero coefficient.
    fn low(&self) -> Option<i64> {
        match self.repr {
            Repr::ExactZero => None,
            Repr::ZeroToPrec(p) => Some(p),
            Repr::Known { order, .. } => Some(order),
        }
    }

    /// `[z^n]` of the series, or `None` if it lies beyond the precision.
    pub fn coeff(&self, n: i64) -> Option<F> {
        match &self.repr {
            Repr::ExactZero => Some(F::zero()),
            Repr::ZeroToPrec(p) => (n < *p).then(F::zero),
            Repr::Known { order, coeffs, exact } => {
                if n < *order {
                    return Some(F::zero());
                }
                match coeffs.get((n - order) as usize) {
                    Some(c) => Some(c.clone()),
                    None if *exact => Some(F::zero()),
                    None => None,
                }
            }
        }
    }

    /// True if the series lies in the power-series ring as far as can be seen
    /// (no negative-exponent terms possible).
    pub fn is_fps(&self) -> bool {
        self.low().is_none_or(|l| l >= 0)
    }

    // ----- precision management -----------------------------------------

    /// Forgets everything at and above `prec` (drops a polynomial certificate).
    pub fn truncate(&self, prec: i64) -> Self {
        if self.prec().is_some_and(|p| p <= prec) {
            return self.clone();
        }
        match &self.repr {
            Repr::ExactZero | Repr::ZeroToPrec(_) => Self::zero_to_prec(prec),
            Repr::Known { order, .. } => {
                let coeffs = (*order..prec).map(|n| self.coeff(n).expect("below precision")).collect();
                if prec <= *order {
                    Self::zero_to_prec(prec)
                } else {
                    Self::new(*order, coeffs)
                }
            }
        }
    }

    /// Fills in coefficients beyond the current precision, starting at
    /// exponent `prec`. Certified polynomials and the exact zero are returned
    /// unchanged.
    pub fn extend(&self, extra: Vec<F>) -> Self {
        match &self.repr {
            Repr::ExactZero | Repr::Known { exact: true, .. } => self.clone(),
            Repr::ZeroToPrec(p) => Self::new(*p, extra),
            Repr::Known { order, coeffs, .. } => {
                let mut all = coeffs.clone();
                all.extend(extra);
                Self::new(*order, all)
            }
        }
    }

    /// Applies `f` to every coefficient and renormalizes.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series<G> {
        match &self.repr {
            Repr::ExactZero => Series::exact_zero(),
            Repr::ZeroToPrec(p) => Series::zero_to_prec(*p),
            Repr::Known { order, coeffs, exact } => Series::normalized(*order, coeffs.iter().map(f).collect(), *exact),
        }
    }

    // ----- arithmetic ---------------------------------------------------

    pub fn add(&self, other: &Self) -> Self {
        match (&self.repr, &other.repr) {
            (Repr::ExactZero, _) => return other.clone(),
            (_, Repr::ExactZero) => return self.clone(),
            _ => {}
        }
        let lo = self.low().min(other.low()).expect("both nonzero");
        match min_prec(self.prec(), other.prec()) {
            Some(prec) => {
                if lo >= prec {
                    return Self::zero_to_prec(prec);
                }
                let coeffs = (lo..prec).map(|n| self.coeff(n).unwrap() + &other.coeff(n).unwrap()).collect();
                Self::new(lo, coeffs)
            }
            None => {
                let hi = self.window_end().max(other.window_end()).unwrap();
                let coeffs = (lo..hi).map(|n| self.coeff(n).unwrap() + &other.coeff(n).unwrap()).collect();
                Self::polynomial(lo, coeffs)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Known { order, coeffs, exact } => Series {
                repr: Repr::Known { order: *order, coeffs: coeffs.iter().map(|c| -c.clone()).collect(), exact: *exact },
            },
            _ => self.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::exact_zero();
        }
        match &self.repr {
            Repr::Known { order, coeffs, exact } => {
                Self::normalized(*order, coeffs.iter().map(|x| c.clone() * x).collect(), *exact)
            }
            _ => self.clone(),
        }
    }

    /// Multiplication by the exact monomial `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        match &self.repr {
            Repr::ExactZero => self.clone(),
            Repr::ZeroToPrec(p) => Self::zero_to_prec(p + k),
            Repr::Known { order, coeffs, exact } => {
                Series { repr: Repr::Known { order: order + k, coeffs: coeffs.clone(), exact: *exact } }
            }
        }
    }

    /// Cauchy product. Precision is at least
    /// `min(prec_a + ord_b, prec_b + ord_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        match (&self.repr, &other.repr) {
            (Repr::ExactZero, _) | (_, Repr::ExactZero) => Self::exact_zero(),
            (Repr::ZeroToPrec(p), Repr::ZeroToPrec(q)) => Self::zero_to_prec(p + q),
            (Repr::ZeroToPrec(p), Repr::Known { order, .. }) | (Repr::Known { order, .. }, Repr::ZeroToPrec(p)) => {
                Self::zero_to_prec(p + order)
            }
            (Repr::Known { order: oa, coeffs: a, exact: ea }, Repr::Known { order: ob, coeffs: b, exact: eb }) => {
                let len = match (ea, eb) {
                    (true, true) => a.len() + b.len() - 1,
                    (true, false) => b.len(),
                    (false, true) => a.len(),
                    (false, false) => a.len().min(b.len()),
                };
                let coeffs = convolve(a, b, len);
                Self::normalized(oa + ob, coeffs, *ea && *eb)
            }
        }
    }

    /// Multiplicative inverse `z^(-m)·(t^a)^(-1)` for `a` of order `m`.
    ///
    /// The result has order `-m` and as many known coefficients as `a`. A
    /// certified monomial inverts exactly; any other polynomial is treated as
    /// known only on its stored window.
    pub fn inverse(&self) -> Result<Self> {
        let Repr::Known { order, coeffs, exact } = &self.repr else {
            return Err(Error::NotInvertible);
        };
        let inv0 = coeffs[0].inv().ok_or(Error::NotInvertible)?;
        if *exact && coeffs.len() == 1 {
            return Ok(Self::monomial(inv0, -order));
        }
        Ok(Self::normalized(-order, invert_unit(coeffs, &inv0, coeffs.len()), false))
    }

    /// `a^n` for any integer `n`; negative powers go through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        match n.cmp(&0) {
            Ordering::Equal => match self.repr {
                Repr::ExactZero => Err(Error::ZeroPowerZero),
                _ => Ok(Self::one()),
            },
            Ordering::Less => self.inverse()?.pow(-n),
            Ordering::Greater => Ok(match &self.repr {
                Repr::ExactZero => Self::exact_zero(),
                Repr::ZeroToPrec(p) => Self::zero_to_prec(p * n),
                Repr::Known { .. } => {
                    let mut e = n as u64;
                    let mut base = self.clone();
                    let mut acc: Option<Self> = None;
                    loop {
                        if e & 1 == 1 {
                            acc = Some(match acc {
                                Some(a) => a.mul(&base),
                                None => base.clone(),
                            });
                        }
                        e >>= 1;
                        if e == 0 {
                            break;
                        }
                        base = base.mul(&base);
                    }
                    acc.expect("n > 0")
                }
            }),
        }
    }

    /// `t^a`: the order-0 series with `a = z^(ord a)·t^a`.
    pub fn standard_part(&self) -> Result<Self> {
        match &self.repr {
            Repr::Known { order, .. } => Ok(self.shift(-order)),
            _ => Err(Error::Undetermined),
        }
    }

    /// Termwise derivative `sum n·a_n z^(n-1)`; precision drops by one.
    pub fn derivative(&self) -> Self {
        match &self.repr {
            Repr::ExactZero => self.clone(),
            Repr::ZeroToPrec(p) => Self::zero_to_prec(p - 1),
            Repr::Known { order, coeffs, exact } => {
                let d = coeffs.iter().enumerate().map(|(j, c)| F::from_i64(order + j as i64) * c).collect();
                Self::normalized(order - 1, d, *exact)
            }
        }
    }

    /// An `m`-th multiplicative root with the field's principal root of the
    /// leading coefficient.
    pub fn mult_root(&self, m: u32) -> Result<Self> {
        let a0 = match &self.repr {
            Repr::Known { order: 0, coeffs, .. } => &coeffs[0],
            Repr::Known { order, .. } => return Err(Error::OrderNotZero(*order)),
            _ => return Err(Error::Undetermined),
        };
        if m == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        let root = a0.nth_root(m).ok_or(Error::NoRootInField(m))?;
        self.mult_root_with(m, root)
    }

    /// An `m`-th multiplicative root `b` with `b_0 = root0`, solved degree by
    /// degree from `b^m = a`: the unknown `b_k` enters `[z^k] b^m` linearly
    /// with coefficient `m·b_0^(m-1)`.
    pub fn mult_root_with(&self, m: u32, root0: F) -> Result<Self> {
        let coeffs = match &self.repr {
            Repr::Known { order: 0, coeffs, .. } => coeffs,
            Repr::Known { order, .. } => return Err(Error::OrderNotZero(*order)),
            _ => return Err(Error::Undetermined),
        };
        if m == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        if root0.pow(m) != coeffs[0] {
            return Err(Error::InvalidArgument(format!("{root0} is not a {m}-th root of {}", coeffs[0])));
        }
        if self.is_exact() && coeffs.len() == 1 {
            return Ok(Self::constant(root0));
        }
        let slope = (F::from_i64(m as i64) * root0.pow(m - 1)).inv().ok_or(Error::NoRootInField(m))?;
        let mut b = vec![root0];
        for (k, target) in coeffs.iter().enumerate().skip(1) {
            let mut trial = b.clone();
            trial.push(F::zero());
            let partial = Self::new(0, trial).pow(m as i64)?;
            let c = partial.coeff(k as i64).expect("degree k is known");
            b.push((target.clone() - c) * &slope);
        }
        Ok(Self::new(0, b))
    }

    /// Whether the two series agree on every coefficient below their common
    /// precision, together with that precision (`None` = both exact).
    pub fn equal_to_precision(&self, other: &Self) -> (bool, Option<i64>) {
        let prec = min_prec(self.prec(), other.prec());
        let lo = match (self.low(), other.low()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return (true, prec),
        };
        let hi = match prec {
            Some(p) => p,
            None => self.window_end().max(other.window_end()).unwrap_or(lo),
        };
        let eq = (lo..hi).all(|n| self.coeff(n) == other.coeff(n));
        (eq, prec)
    }

    /// Shorthand for the boolean half of [`Series::equal_to_precision`].
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.equal_to_precision(other).0
    }
}

/// First `len` coefficients of the product of two windows (missing entries
/// read as zero).
pub(crate) fn convolve<F: Field>(a: &[F], b: &[F], len: usize) -> Vec<F> {
    F::convolve(a, b, len)
}

/// First `len` coefficients of `1/t` for a unit window `t` with `inv0 = 1/t_0`.
fn invert_unit<F: Field>(t: &[F], inv0: &F, len: usize) -> Vec<F> {
    let mut out: Vec<F> = Vec::with_capacity(len);
    out.push(inv0.clone());
    for k in 1..len {
        let mut acc = F::zero();
        for j in 1..=k.min(t.len() - 1) {
            acc = acc + &(t[j].clone() * &out[k - j]);
        }
        out.push(-(acc * inv0));
    }
    out
}

impl<F: Field> fmt::Display for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (order, coeffs, exact) = match &self.repr {
            Repr::ExactZero => return f.write_str("0"),
            Repr::ZeroToPrec(p) => return write!(f, "O(z^{p})"),
            Repr::Known { order, coeffs, exact } => (*order, coeffs, *exact),
        };
        let mut terms = Vec::new();
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = order + j as i64;
            let mono = match n {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{n}"),
            };
            let cs = c.to_string();
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs,
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{cs}*{mono}"),
            });
        }
        if !exact {
            terms.push(format!("O(z^{})", order + coeffs.len() as i64));
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        f.write_str(&out)
    }
}

impl<'a, F: Field> Add<&'a Series<F>> for &'a Series<F> {
    type Output = Series<F>;
    fn add(self, rhs: &'a Series<F>) -> Series<F> {
        Series::add(self, rhs)
    }
}

impl<'a, F: Field> Sub<&'a Series<F>> for &'a Series<F> {
    type Output = Series<F>;
    fn sub(self, rhs: &'a Series<F>) -> Series<F> {
        Series::sub(self, rhs)
    }
}

impl<'a, F: Field> Mul<&'a Series<F>> for &'a Series<F> {
    type Output = Series<F>;
    fn mul(self, rhs: &'a Series<F>) -> Series<F> {
        Series::mul(self, rhs)
    }
}

impl<F: Field> Neg for &Series<F> {
    type Output = Series<F>;
    fn neg(self) -> Series<F> {
        Series::neg(self)
    }
}

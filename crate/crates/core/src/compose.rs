//! Composition of semi-Laurent series with power series, compositional
//! inverses and iterative roots.
//!
//! `g∘f = sum g_n f^n` is evaluated by splitting `g` into its principal part
//! `g⁻` (negative exponents, evaluated in `f^(-1)`) and its power-series part
//! `g⁺` (Horner in `f`). For `ord f = r >= 1` the unknown tail of `g` beyond
//! its precision `P` only affects exponents `>= r·P`, so the result is capped
//! there. A unit `f` is accepted only when `g` is a certified polynomial,
//! because otherwise the sum has infinitely many contributions to every
//! coefficient.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::{Order, Series};

/// What the inner series of a composition looks like.
enum Inner {
    /// `ord f >= bound >= 1` (`None` for the exact zero).
    Nonunit(Option<i64>),
    Unit,
}

fn classify<F: Field>(f: &Series<F>) -> Result<Inner> {
    match f.order() {
        Order::Infinite => Ok(Inner::Nonunit(None)),
        Order::AtLeast(p) if p >= 1 => Ok(Inner::Nonunit(Some(p))),
        Order::AtLeast(_) => Err(Error::CompositionUndefined("constant term of the inner series is not known")),
        Order::Finite(r) if r >= 1 => Ok(Inner::Nonunit(Some(r))),
        Order::Finite(0) => Ok(Inner::Unit),
        Order::Finite(_) => Err(Error::CompositionUndefined("inner series must be a formal power series")),
    }
}

fn order_one<F: Field>(f: &Series<F>) -> Result<()> {
    match f.order() {
        Order::Finite(1) => Ok(()),
        Order::Finite(n) => Err(Error::OrderNotOne(format!("order {n}"))),
        Order::Infinite => Err(Error::OrderNotOne("the zero series".into())),
        Order::AtLeast(p) => Err(Error::OrderNotOne(format!("order undetermined (>= {p})"))),
    }
}

fn tangent_to_identity<F: Field>(f: &Series<F>) -> Result<()> {
    order_one(f)?;
    if f.coeffs()[0].is_one() {
        Ok(())
    } else {
        Err(Error::NotTangentToIdentity)
    }
}

impl<F: Field> Series<F> {
    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let shape = classify(inner)?;
        if matches!(shape, Inner::Unit) && !self.is_exact() {
            return Err(Error::CompositionUndefined(
                "a unit inner series needs an outer series of certified finite support",
            ));
        }
        let bound = match shape {
            Inner::Nonunit(b) => b,
            Inner::Unit => Some(0),
        };

        let Some(og) = self.known_order() else {
            return match (self.order(), bound) {
                (Order::Infinite, _) => Ok(Self::exact_zero()),
                (Order::AtLeast(p), None) if p >= 1 => Ok(Self::exact_zero()),
                (Order::AtLeast(0), None) => Ok(Self::zero_to_prec(0)),
                (Order::AtLeast(p), Some(r)) if p >= 0 => Ok(Self::zero_to_prec(r * p)),
                (Order::AtLeast(p), Some(r)) if inner.is_known() => Ok(Self::zero_to_prec(r * p)),
                _ => Err(Error::NotInvertible),
            };
        };
        if og < 0 && !inner.is_known() {
            return Err(Error::NotInvertible);
        }

        let hi = self.window_end().expect("known series has a window");
        // coefficients past a truncated window only reach exponents the final cap removes
        let term = |n: i64| Self::constant(self.coeff(n).unwrap_or_else(F::zero));

        // g⁺∘f = f^s·(g_s + f·(g_{s+1} + ...)) by Horner
        let start = og.max(0);
        let pos = if start < hi {
            let mut acc = term(hi - 1);
            for n in (start..hi - 1).rev() {
                acc = term(n).add(&inner.mul(&acc));
            }
            if start == 0 {
                acc
            } else {
                inner.pow(start)?.mul(&acc)
            }
        } else {
            Self::exact_zero()
        };

        // g⁻∘f = f⁻¹·(g_{-1} + f⁻¹·(g_{-2} + ...))
        let neg = if og < 0 {
            let finv = inner.inverse()?;
            let mut acc = term(og);
            for n in og + 1..0 {
                acc = term(n).add(&finv.mul(&acc));
            }
            finv.mul(&acc)
        } else {
            Self::exact_zero()
        };

        let out = neg.add(&pos);
        match (self.prec(), bound) {
            (Some(p), Some(r)) => Ok(out.truncate(r * p)),
            _ => Ok(out),
        }
    }

    /// The compositional inverse `f^[-1]` of an order-1 series, found degree
    /// by degree from `f∘f^[-1] = z`: the unknown `h_k` enters `[z^k](f∘h)`
    /// as `f_1·h_k`.
    pub fn comp_inverse(&self) -> Result<Self> {
        order_one(self)?;
        let f = self.coeffs();
        let inv1 = f[0].inv().ok_or(Error::InvalidF)?;
        if self.is_exact() && f.len() == 1 {
            return Ok(Self::monomial(inv1, 1));
        }
        let mut h = vec![inv1.clone()];
        for k in 2..=f.len() as i64 {
            let mut trial = h.clone();
            trial.push(F::zero());
            let lhs = self.truncate(k + 1).compose(&Self::new(1, trial))?;
            let c = lhs.coeff(k).expect("degree k is determined");
            h.push(-(c * &inv1));
        }
        Ok(Self::new(1, h))
    }

    /// The `m`-fold iterate `f∘f∘…∘f`, with `f^[0] = z`.
    pub fn iterate(&self, m: u32) -> Result<Self> {
        order_one(self)?;
        let mut acc = Self::z();
        for _ in 0..m {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// The iterative square root `g` with `g∘g = f` and `g_1 = 1`, for `f`
    /// tangent to the identity:
    /// `g_(n+1) = (f_(n+1) - sum_(i=2..n) g_i [z^(n+1)] g^i) / 2`.
    pub fn iter_sqrt(&self) -> Result<Self> {
        tangent_to_identity(self)?;
        if self.is_exact() && self.coeffs().len() == 1 {
            return Ok(Self::z());
        }
        let len = self.coeffs().len();
        let two_inv = F::from_i64(2).inv().expect("characteristic zero");
        // g[j] is the coefficient of z^(j+1)
        let mut g = vec![F::one()];
        for n in 1..len {
            let known = Self::new(1, g.clone());
            let mut power = known.clone();
            let mut sum = F::zero();
            for i in 2..=n {
                power = power.mul(&known);
                let c = power.coeff(n as i64 + 1).expect("determined by g_1..g_n");
                sum = sum + &(g[i - 1].clone() * &c);
            }
            let target = self.coeff(n as i64 + 1).expect("inside the window");
            g.push((target - sum) * &two_inv);
        }
        Ok(Self::new(1, g))
    }

    /// An `n`-th iterative root `F` with `F^[n] = f` and `F_1 = 1`: at each
    /// degree `k >= 2` the unknown `F_k` enters `[z^k]F^[n]` as `n·F_k`.
    pub fn iter_root(&self, n: u32) -> Result<Self> {
        tangent_to_identity(self)?;
        if n == 0 {
            return Err(Error::InvalidArgument("iterative root index must be positive".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if self.is_exact() && self.coeffs().len() == 1 {
            return Ok(Self::z());
        }
        let len = self.coeffs().len() as i64;
        let n_inv = F::from_i64(n as i64).inv().expect("characteristic zero");
        let mut root = vec![F::one()];
        for k in 2..=len {
            let mut trial = root.clone();
            trial.push(F::zero());
            let c = Self::new(1, trial).iterate(n)?.coeff(k).expect("degree k is determined");
            let target = self.coeff(k).expect("inside the window");
            root.push((target - c) * &n_inv);
        }
        Ok(Self::new(1, root))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, Rational};

    type S = Series<Rational>;

    fn s(order: i64, cs: &[&str]) -> S {
        S::new(order, cs.iter().map(|c| rat(c)).collect())
    }

    /// z/(1-z) with `len` coefficients.
    fn geometric(len: usize) -> S {
        S::new(1, vec![int(1); len])
    }

    #[test]
    fn unit_inner_needs_polynomial() {
        let g = S::polynomial(-1, vec![int(1), int(-2), int(1)]);
        let mut f = vec![int(1), int(-1)];
        f.resize(12, int(0));
        let f = S::new(0, f);
        let out = g.compose(&f).unwrap();
        assert_eq!(out, S::new(2, vec![int(1); 10]));
        assert_eq!(out.prec(), Some(12));

        let not_certified = S::new(-1, vec![int(1), int(-2), int(1)]);
        assert!(matches!(not_certified.compose(&f), Err(Error::CompositionUndefined(_))));
    }

    #[test]
    fn identity_substitution() {
        let g = s(-2, &["1", "3", "-1/2", "0", "7"]);
        assert_eq!(g.compose(&S::z()).unwrap(), g);
        let poly = S::polynomial(-1, vec![int(2), int(0), int(5)]);
        assert_eq!(poly.compose(&S::z()).unwrap(), poly);
    }

    #[test]
    fn negative_order_outer() {
        // z^-3/(1-z) composed with z/(1-z): (1-z)^3 z^-3 / (1 - z/(1-z)) = z^-3 (1-z)^4/(1-2z)
        let g = S::new(-3, vec![int(1); 8]);
        let f = geometric(8);
        let out = g.compose(&f).unwrap();
        assert_eq!(out.known_order(), Some(-3));
        assert_eq!(out.coeff(-3), Some(int(1)));
        assert_eq!(out.coeff(-2), Some(int(-2)));
        assert_eq!(out.coeff(-1), Some(int(2)));

        // window ending below z^-1: z^-2 + O(z^-1) composed with z/(1-z) = z^-2 - 2z^-1 + ...
        let short = S::new(-2, vec![int(1)]);
        let out = short.compose(&f).unwrap();
        assert_eq!(out, S::new(-2, vec![int(1)]));
        let mono = S::monomial(int(1), -2).compose(&f).unwrap();
        assert_eq!(mono.coeffs()[..3], [int(1), int(-2), int(1)]);
        assert_eq!(S::monomial(int(1), -2).compose(&S::z()).unwrap(), S::monomial(int(1), -2));
    }

    #[test]
    fn undefined_inner() {
        let g = s(0, &["1", "1"]);
        assert!(matches!(g.compose(&S::monomial(int(1), -1)), Err(Error::CompositionUndefined(_))));
        assert!(matches!(g.compose(&S::zero_to_prec(0)), Err(Error::CompositionUndefined(_))));
        let h = s(-1, &["1", "1"]);
        assert_eq!(h.compose(&S::zero_to_prec(3)), Err(Error::NotInvertible));
        assert_eq!(h.compose(&S::exact_zero()), Err(Error::NotInvertible));
        assert_eq!(g.compose(&S::exact_zero()).unwrap(), S::one());
    }

    #[test]
    fn compositional_inverse() {
        let inv = geometric(8).comp_inverse().unwrap();
        assert_eq!(inv, S::new(1, [1, -1, 1, -1, 1, -1, 1, -1].map(int).to_vec()));
        assert_eq!(S::z().comp_inverse().unwrap(), S::z());
        assert_eq!(S::monomial(int(2), 1).comp_inverse().unwrap(), S::monomial(rat("1/2"), 1));
        assert!(matches!(S::monomial(int(1), 2).comp_inverse(), Err(Error::OrderNotOne(_))));
    }

    #[test]
    fn iterates() {
        let f = geometric(8);
        // z/(1-2z)
        assert_eq!(f.iterate(2).unwrap(), S::new(1, [1, 2, 4, 8, 16, 32, 64, 128].map(int).to_vec()));
        assert_eq!(f.iterate(0).unwrap(), S::z());
        assert_eq!(f.iterate(1).unwrap(), f);
    }

    #[test]
    fn square_roots() {
        let f = geometric(8);
        let g = f.iter_sqrt().unwrap();
        // z/(1 - z/2)
        assert_eq!(g, s(1, &["1", "1/2", "1/4", "1/8", "1/16", "1/32", "1/64", "1/128"]));
        assert_eq!(S::z().iter_sqrt().unwrap(), S::z());
        let h = s(1, &["1", "1", "0", "0", "0"]).iter_sqrt().unwrap();
        assert_eq!(h.coeffs()[..3], [int(1), rat("1/2"), rat("-1/4")]);
        assert!(h.compose(&h).unwrap().agrees_with(&s(1, &["1", "1", "0", "0", "0"])));
        assert_eq!(S::monomial(int(2), 1).iter_sqrt(), Err(Error::NotTangentToIdentity));
    }

    #[test]
    fn higher_roots() {
        let f = geometric(8);
        assert_eq!(f.iter_root(1).unwrap(), f);
        assert_eq!(f.iter_root(2).unwrap(), f.iter_sqrt().unwrap());
        let cube = f.iter_root(3).unwrap();
        assert_eq!(cube.coeffs()[..3], [int(1), rat("1/3"), rat("1/9")]);
        assert!(cube.iterate(3).unwrap().agrees_with(&f));
    }
}

//! Naive reference arithmetic on full coefficient maps.
//!
//! A truncated series is read as the exact Laurent polynomial formed by its
//! stored coefficients together with its precision. Every operation here is
//! computed on those polynomials by schoolbook loops (products by double
//! loops, inverses by geometric series, composition by summing `g_n f^n`)
//! and separately tracks the guaranteed precision by explicit bookkeeping.
//! Since the zero completion is one admissible completion of each input,
//! every coefficient the library reports as known must match it.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use semilaurent::verify::gen::{self, Rng8};
use semilaurent::{Field, Rational, Series};

type S = Series<Rational>;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly(pub BTreeMap<i64, Rational>);

impl Poly {
    pub fn from_series(s: &Series<Rational>) -> Poly {
        let mut p = Poly::default();
        if let Some(o) = s.known_order() {
            for (j, c) in s.coeffs().iter().enumerate() {
                p.set(o + j as i64, c.clone());
            }
        }
        p
    }

    pub fn monomial(c: Rational, n: i64) -> Poly {
        let mut p = Poly::default();
        p.set(n, c);
        p
    }

    pub fn get(&self, n: i64) -> Rational {
        self.0.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    fn set(&mut self, n: i64, c: Rational) {
        if c.is_zero() {
            self.0.remove(&n);
        } else {
            self.0.insert(n, c);
        }
    }

    pub fn low(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (n, c) in &o.0 {
            p.set(*n, p.get(*n) + c);
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut p = Poly::default();
        for (n, a) in &self.0 {
            p.set(*n, a * c);
        }
        p
    }

    /// Exact product.
    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::default();
        for (i, a) in &self.0 {
            for (j, b) in &o.0 {
                p.set(i + j, p.get(i + j) + a * b);
            }
        }
        p
    }

    /// Terms with exponent below `upto`.
    pub fn below(&self, upto: i64) -> Poly {
        Poly(self.0.range(..upto).map(|(n, c)| (*n, c.clone())).collect())
    }

    pub fn derivative(&self) -> Poly {
        let mut p = Poly::default();
        for (n, c) in &self.0 {
            p.set(n - 1, c * Rational::from_i64(*n));
        }
        p
    }

    /// `1/self` below `upto` via `1/(c z^m (1+u)) = c^-1 z^-m sum (-u)^k`.
    pub fn inverse(&self, upto: i64) -> Poly {
        let m = self.low().expect("nonzero");
        let c = self.get(m);
        let cinv = c.inv().expect("nonzero");
        let mut u = self.scale(&cinv).mul(&Poly::monomial(Rational::one(), -m));
        u.set(0, u.get(0) - Rational::one());
        let need = upto + m; // exponents of the unit part that matter
        let neg_u = u.scale(&-Rational::one());
        let mut sum = Poly::monomial(Rational::one(), 0);
        let mut term = Poly::monomial(Rational::one(), 0);
        for _ in 0..=need.max(0) {
            term = term.mul(&neg_u).below(need.max(0) + 1);
            if term.0.is_empty() {
                break;
            }
            sum = sum.add(&term);
        }
        sum.scale(&cinv).mul(&Poly::monomial(Rational::one(), -m)).below(upto)
    }

    /// `self^n` below `upto`, any integer `n`.
    pub fn pow(&self, n: i64, upto: i64) -> Poly {
        if n == 0 {
            return Poly::monomial(Rational::one(), 0).below(upto);
        }
        let m = self.low().expect("nonzero");
        let k = n.abs();
        // the remaining factors have order (k-1)·ord(base) in total
        let base = if n > 0 { self.clone() } else { self.inverse(upto + (k - 1) * m) };
        let ob = if n > 0 { m } else { -m };
        let mut acc = base.below(upto - (k - 1) * ob);
        for j in 2..=k {
            acc = acc.mul(&base).below(upto - (k - j) * ob);
        }
        acc
    }

    /// `sum_n g_n f^n` below `upto` for `f` with positive order, or for a
    /// polynomial `g` and any power series `f`.
    pub fn compose(&self, f: &Poly, upto: i64) -> Poly {
        let mut out = Poly::default();
        for (n, c) in &self.0 {
            let fn_ = if *n >= 0 {
                // f has no negative powers, so truncating partial products is harmless
                let mut acc = Poly::monomial(Rational::one(), 0);
                for _ in 0..*n {
                    acc = acc.mul(f).below(upto);
                }
                acc
            } else {
                f.pow(*n, upto)
            };
            out = out.add(&fn_.scale(c));
        }
        out.below(upto)
    }
}

/// `min` with `None` standing for infinity.
pub fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Checks that every coefficient `out` reports as known agrees with
/// `expected`, and that the reported precision is at least `min` when a
/// guaranteed minimum is given. Exact outputs are compared on the whole
/// support of both sides.
pub fn matches(op: &str, out: &Series<Rational>, expected: &Poly, min: Option<i64>) -> Result<(), String> {
    let hi = match out.prec() {
        Some(p) => {
            if let Some(m) = min.filter(|m| p < *m) {
                return Err(format!("{op}: precision {p} below the guaranteed {m} for {out}"));
            }
            p
        }
        None => out.window_end().unwrap_or(0).max(expected.0.keys().last().map_or(0, |n| n + 1)),
    };
    let lo = [out.known_order(), expected.low()].into_iter().flatten().min().unwrap_or(hi);
    for n in lo..hi {
        let got = out.coeff(n);
        if got.as_ref() != Some(&expected.get(n)) {
            return Err(format!("{op}: z^{n} is {got:?}, oracle has {}; output {out}", expected.get(n)));
        }
    }
    Ok(())
}

/// `a` and `b` agree on every exponent below `upto`.
pub fn agree_below(op: &str, a: &Poly, b: &Poly, upto: i64) -> Result<(), String> {
    if a.below(upto) == b.below(upto) {
        Ok(())
    } else {
        Err(format!("{op}: identity fails below z^{upto}: {a:?} vs {b:?}"))
    }
}

fn prec_or(s: &S, fallback: i64) -> i64 {
    s.prec().unwrap_or(fallback)
}

/// Guaranteed precision of `g∘f`: `min(r·P_g, P_f + (n_min - 1)·r)` with
/// `r = ord f` and `n_min` the lowest nonzero exponent of `g` other than 0.
pub fn compose_prec(g: &S, f: &S) -> Option<i64> {
    let r = f.known_order().expect("known inner");
    let pg = g.prec().map(|p| r * p);
    let nmin = Poly::from_series(g).0.keys().copied().find(|n| *n != 0);
    let pf = match (f.prec(), nmin) {
        (Some(p), Some(n)) => Some(p + (n - 1) * r),
        _ => None,
    };
    min_prec(pg, pf)
}

fn input(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>) -> S {
    let len = rng.random_range(1..=12);
    let s = gen::series(rng, orders, len);
    match rng.random_range(0..10) {
        0 => S::zero_to_prec(s.prec().expect("finite")),
        1 | 2 => S::polynomial(s.known_order().expect("known"), s.coeffs().to_vec()),
        _ => s,
    }
}

fn known(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>, tangent: bool) -> S {
    let len = rng.random_range(1..=12);
    let s = gen::series(rng, orders, len);
    if !tangent {
        return s;
    }
    let mut c = s.coeffs().to_vec();
    c[0] = Rational::one();
    S::new(s.known_order().expect("known"), c)
}

/// One random case over every series and composition operation.
pub fn run_case(rng: &mut Rng8) -> Result<(), String> {
    let a = input(rng, -4..=4);
    let b = input(rng, -4..=4);
    let (pa, pb) = (Poly::from_series(&a), Poly::from_series(&b));
    let c = gen::coeff(rng);

    matches("add", &a.add(&b), &pa.add(&pb), min_prec(a.prec(), b.prec()))?;
    matches("neg", &a.neg(), &pa.scale(&-Rational::one()), a.prec())?;
    matches("scalar_mul", &a.scalar_mul(&c), &pa.scale(&c), if c.is_zero() { None } else { a.prec() })?;
    let mul_min = match (a.known_order(), b.known_order()) {
        (Some(oa), Some(ob)) => min_prec(a.prec().map(|p| p + ob), b.prec().map(|p| p + oa)),
        _ => None,
    };
    matches("mul", &a.mul(&b), &pa.mul(&pb), mul_min)?;
    matches("derivative", &a.derivative(), &pa.derivative(), a.prec().map(|p| p - 1))?;

    if let Some(m) = a.known_order() {
        let inv = a.inverse().map_err(|e| format!("inverse: {e}"))?;
        let upto = prec_or(&inv, inv.window_end().expect("known") + 8);
        matches("inverse", &inv, &pa.inverse(upto), a.prec().map(|p| p - 2 * m))?;
        let n = rng.random_range(-3..=3);
        let pw = a.pow(n).map_err(|e| format!("pow: {e}"))?;
        let upto = prec_or(&pw, pw.window_end().expect("known") + 8);
        matches("pow", &pw, &pa.pow(n, upto), a.prec().map(|p| p + (n - 1) * m))?;
        let t = a.standard_part().map_err(|e| format!("standard_part: {e}"))?;
        matches("standard_part", &t, &pa.mul(&Poly::monomial(Rational::one(), -m)), a.prec().map(|p| p - m))?;
    }

    // composition with a nonunit inner series
    let f = known(rng, 1..=2, false);
    let pf = Poly::from_series(&f);
    let g = a.clone();
    if let Ok(out) = g.compose(&f) {
        let upto = prec_or(&out, 40);
        let min = if g.is_known() { compose_prec(&g, &f) } else { None };
        matches("compose", &out, &Poly::from_series(&g).compose(&pf, upto), min)?;
    } else if g.is_known() {
        return Err(format!("compose failed on {g} ∘ {f}"));
    }

    // unit inner series need an outer polynomial
    let poly = S::polynomial(
        rng.random_range(-2..=1),
        (0..rng.random_range(1..=4)).map(|_| gen::nonzero_coeff(rng)).collect(),
    );
    let unit = known(rng, 0..=0, false);
    let out = poly.compose(&unit).map_err(|e| format!("unit compose: {e}"))?;
    let upto = prec_or(&out, 40);
    matches(
        "compose unit inner",
        &out,
        &Poly::from_series(&poly).compose(&Poly::from_series(&unit), upto),
        unit.prec(),
    )?;

    // compositional inverse: f∘h = h∘f = z
    let e = known(rng, 1..=1, false);
    let h = e.comp_inverse().map_err(|e| format!("comp_inverse: {e}"))?;
    let (pe, ph) = (Poly::from_series(&e), Poly::from_series(&h));
    let p = prec_or(&h, 1);
    if p < prec_or(&e, 1) {
        return Err(format!("comp_inverse lost precision: {} < {}", p, prec_or(&e, 1)));
    }
    let z = Poly::monomial(Rational::one(), 1);
    agree_below("f∘f^[-1]", &pe.compose(&ph, p), &z, p)?;
    agree_below("f^[-1]∘f", &ph.compose(&pe, p), &z, p)?;

    let k = rng.random_range(0..=3);
    let it = e.iterate(k).map_err(|e| format!("iterate: {e}"))?;
    let mut expected = z.clone();
    for _ in 0..k {
        expected = pe.compose(&expected, prec_or(&it, 40));
    }
    matches("iterate", &it, &expected, None)?;

    // iterative roots of a series tangent to the identity
    let t = known(rng, 1..=1, true);
    let pt = Poly::from_series(&t);
    let n = rng.random_range(2..=4);
    let root = t.iter_root(n).map_err(|e| format!("iter_root: {e}"))?;
    let p = prec_or(&root, 1);
    let pr = Poly::from_series(&root);
    let mut acc = z.clone();
    for _ in 0..n {
        acc = pr.compose(&acc, p);
    }
    agree_below("iter_root", &acc, &pt, p)?;
    let half = t.iter_sqrt().map_err(|e| format!("iter_sqrt: {e}"))?;
    let ph2 = Poly::from_series(&half);
    agree_below("iter_sqrt", &ph2.compose(&ph2, prec_or(&half, 1)), &pt, prec_or(&half, 1))?;

    // multiplicative roots: b^m = a
    let u = known(rng, 0..=0, true);
    let m = rng.random_range(2..=4);
    let r = u.mult_root(m as u32).map_err(|e| format!("mult_root: {e}"))?;
    let p = prec_or(&r, 1);
    if p < prec_or(&u, 1) {
        return Err("mult_root lost precision".into());
    }
    agree_below("mult_root", &Poly::from_series(&r).pow(m, p), &Poly::from_series(&u), p)
}

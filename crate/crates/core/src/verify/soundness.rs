//! Perturbation tests of the precision contract: appending arbitrary
//! coefficients beyond an input's precision never changes an output
//! coefficient below the reported output precision.

use rand::Rng;

use super::gen::{self, Rng8};
use super::{check, CaseResult};
use crate::error::Result;
use crate::field::{Field, Rational};
use crate::lie::{bracket, dcompose, left_translate, psi_der, tangent_mul, ClassicalOperator, TangentPair};
use crate::riordan::{a_sequence, psi_action, z_sequence, RiordanArray};
use crate::series::Series;

type S = Series<Rational>;
type R = RiordanArray<Rational>;
type T = TangentPair<Rational>;

fn perturb(rng: &mut Rng8, s: &S) -> S {
    s.extend(gen::tail(rng))
}

fn perturb_array(rng: &mut Rng8, r: &R) -> R {
    R::new(perturb(rng, r.g()), perturb(rng, r.f())).expect("leading terms are unchanged")
}

fn perturb_tangent(rng: &mut Rng8, t: &T) -> T {
    T::new(perturb(rng, &t.gamma), perturb(rng, &t.kappa)).expect("low terms are unchanged")
}

/// Mostly truncated series, sometimes a certified polynomial.
fn input(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>, len: usize) -> S {
    let s = gen::series(rng, orders, len);
    if rng.random_bool(0.2) {
        let n = rng.random_range(1..=4).min(s.coeffs().len());
        S::polynomial(s.known_order().expect("known"), s.coeffs()[..n].to_vec())
    } else {
        s
    }
}

fn sound(op: &str, out: &S, again: &S) -> CaseResult {
    let Some(p) = out.prec() else {
        return check(out == again, || format!("{op}: exact output changed: {out} -> {again}"));
    };
    let lo = out.known_order().unwrap_or(p).min(again.known_order().unwrap_or(p));
    for n in lo..p {
        let (x, y) = (out.coeff(n), again.coeff(n));
        check(x == y, || {
            format!("{op}: coefficient of z^{n} changed ({x:?} -> {y:?}); out = {out}, perturbed = {again}")
        })?;
    }
    Ok(())
}

/// Compares the two evaluations when the unperturbed one succeeds.
fn compare<X>(op: &str, out: Result<X>, again: Result<X>, cmp: impl Fn(&X, &X) -> CaseResult) -> CaseResult {
    match (out, again) {
        (Err(_), _) => Ok(()),
        (Ok(_), Err(e)) => Err(format!("{op}: perturbed input raised {e}")),
        (Ok(a), Ok(b)) => cmp(&a, &b),
    }
}

fn series_op(op: &str, out: Result<S>, again: Result<S>) -> CaseResult {
    compare(op, out, again, |a, b| sound(op, a, b))
}

fn array_op(op: &str, out: Result<R>, again: Result<R>) -> CaseResult {
    compare(op, out, again, |a, b| {
        sound(&format!("{op} g"), a.g(), b.g())?;
        sound(&format!("{op} f"), a.f(), b.f())
    })
}

fn tangent_op(op: &str, out: Result<T>, again: Result<T>) -> CaseResult {
    compare(op, out, again, |a, b| {
        sound(&format!("{op} gamma"), &a.gamma, &b.gamma)?;
        sound(&format!("{op} kappa"), &a.kappa, &b.kappa)
    })
}

pub(super) fn precision_soundness(rng: &mut Rng8, len: usize) -> CaseResult {
    series_ops(rng, len)?;
    composition_ops(rng, len)?;
    array_ops(rng, len)?;
    lie_ops(rng, len)
}

fn series_ops(rng: &mut Rng8, len: usize) -> CaseResult {
    let a = input(rng, -4..=4, len);
    let b = input(rng, -4..=4, len);
    let (a2, b2) = (perturb(rng, &a), perturb(rng, &b));
    let c = gen::coeff(rng);
    let zp = S::zero_to_prec(rng.random_range(-3..=6));
    let zp2 = perturb(rng, &zp);

    series_op("add", Ok(a.add(&b)), Ok(a2.add(&b2)))?;
    series_op("sub", Ok(a.sub(&b)), Ok(a2.sub(&b2)))?;
    series_op("add zero_to_prec", Ok(a.add(&zp)), Ok(a2.add(&zp2)))?;
    series_op("mul", Ok(a.mul(&b)), Ok(a2.mul(&b2)))?;
    series_op("mul zero_to_prec", Ok(a.mul(&zp)), Ok(a2.mul(&zp2)))?;
    series_op("scalar_mul", Ok(a.scalar_mul(&c)), Ok(a2.scalar_mul(&c)))?;
    series_op("shift", Ok(a.shift(3)), Ok(a2.shift(3)))?;
    series_op("inverse", a.inverse(), a2.inverse())?;
    let n = rng.random_range(-3..=3);
    series_op("pow", a.pow(n), a2.pow(n))?;
    series_op("standard_part", a.standard_part(), a2.standard_part())?;
    series_op("derivative", Ok(a.derivative()), Ok(a2.derivative()))?;

    let unit = {
        let mut c = gen::series_with_order(rng, 0, len).coeffs().to_vec();
        c[0] = Rational::one();
        S::new(0, c)
    };
    let unit2 = perturb(rng, &unit);
    let m = rng.random_range(2..=3);
    series_op("mult_root", unit.mult_root(m), unit2.mult_root(m))
}

fn composition_ops(rng: &mut Rng8, len: usize) -> CaseResult {
    let g = input(rng, -4..=4, len);
    let f = input(rng, 1..=2, len);
    let (g2, f2) = (perturb(rng, &g), perturb(rng, &f));
    series_op("compose", g.compose(&f), g2.compose(&f2))?;

    let poly = S::polynomial(
        rng.random_range(-2..=1),
        (0..rng.random_range(1..=4)).map(|_| gen::nonzero_coeff(rng)).collect(),
    );
    let unit = gen::series_with_order(rng, 0, len);
    let unit2 = perturb(rng, &unit);
    series_op("compose unit inner", poly.compose(&unit), poly.compose(&unit2))?;

    let fps = input(rng, 0..=3, len);
    let fps2 = perturb(rng, &fps);
    let zp = S::zero_to_prec(rng.random_range(1..=5));
    let zp2 = perturb(rng, &zp);
    series_op("compose zero_to_prec inner", fps.compose(&zp), fps2.compose(&zp2))?;
    let zo = S::zero_to_prec(rng.random_range(-2..=5));
    let zo2 = perturb(rng, &zo);
    series_op("compose zero_to_prec outer", zo.compose(&f), zo2.compose(&f2))?;

    let e = gen::order_one(rng, len, false);
    let e2 = perturb(rng, &e);
    series_op("comp_inverse", e.comp_inverse(), e2.comp_inverse())?;
    let k = rng.random_range(0..=3);
    series_op("iterate", e.iterate(k), e2.iterate(k))?;
    let t = gen::order_one(rng, len, true);
    let t2 = perturb(rng, &t);
    series_op("iter_sqrt", t.iter_sqrt(), t2.iter_sqrt())?;
    let n = rng.random_range(2..=4);
    series_op("iter_root", t.iter_root(n), t2.iter_root(n))
}

fn array_ops(rng: &mut Rng8, len: usize) -> CaseResult {
    let r = gen::array(rng, -4..=4, len);
    let s = gen::array(rng, -4..=4, len);
    let (r2, s2) = (perturb_array(rng, &r), perturb_array(rng, &s));
    array_op("rmul", r.mul(&s), r2.mul(&s2))?;
    array_op("rinverse", r.inverse(), r2.inverse())?;
    let m = rng.random_range(-2..=3);
    array_op("rpow", r.pow(m), r2.pow(m))?;
    series_op("a_sequence", a_sequence(&r), a_sequence(&r2))?;
    let p = rng.random_range(-2..=2);
    series_op("z_sequence", z_sequence(&r, p), z_sequence(&r2, p))?;

    let q = r.diag_offset();
    let (w, w2) = (r.window(q - 2, q + 8, -2, 6), r2.window(q - 2, q + 8, -2, 6));
    compare("window", w, w2, |a, b| {
        for m in a.row_lo..=a.row_hi {
            for n in a.col_lo..=a.col_hi {
                if let Some(x) = a.get(m, n) {
                    check(b.get(m, n) == Some(x), || format!("window entry ({m},{n}) changed"))?;
                }
            }
        }
        Ok(())
    })?;

    let proper = gen::proper_tangent_array(rng, len);
    let proper2 = perturb_array(rng, &proper);
    let n = rng.random_range(2..=3);
    array_op("rnth_root", proper.nth_root(n), proper2.nth_root(n))?;

    let g0 = gen::series_with_order(rng, 0, len);
    let g02 = perturb(rng, &g0);
    let k = rng.random_range(-2..=2);
    series_op("psi_action", psi_action(r.f(), &g0, k).map(|x| x.0), psi_action(r2.f(), &g02, k).map(|x| x.0))
}

fn lie_ops(rng: &mut Rng8, len: usize) -> CaseResult {
    let g = input(rng, -3..=3, len);
    let h = input(rng, 1..=2, len);
    let chi = input(rng, 1..=3, len);
    let (g2, h2, chi2) = (perturb(rng, &g), perturb(rng, &h), perturb(rng, &chi));
    series_op("dcompose", dcompose(&g, &h, &chi), dcompose(&g2, &h2, &chi2))?;

    let u = gen::tangent(rng, len);
    let v = gen::tangent(rng, len);
    let (u2, v2) = (perturb_tangent(rng, &u), perturb_tangent(rng, &v));
    tangent_op("bracket", Ok(bracket(&u, &v)), Ok(bracket(&u2, &v2)))?;
    series_op("psi_der", Ok(psi_der(&u.kappa, &v.gamma)), Ok(psi_der(&u2.kappa, &v2.gamma)))?;

    let b1 = gen::array(rng, -3..=3, len);
    let b2 = gen::array(rng, -3..=3, len);
    let (b1p, b2p) = (perturb_array(rng, &b1), perturb_array(rng, &b2));
    tangent_op("left_translate", left_translate(&b1, &u), left_translate(&b1p, &u2))?;
    tangent_op(
        "tangent_mul",
        tangent_mul(&b1, &u, &b2, &v).map(|x| x.1),
        tangent_mul(&b1p, &u2, &b2p, &v2).map(|x| x.1),
    )?;

    let l = gen::operator(rng, len);
    let l2 = ClassicalOperator::new(perturb(rng, &l.chi), perturb(rng, &l.alpha)).expect("valid");
    let x = input(rng, -2..=3, len);
    let x2 = perturb(rng, &x);
    series_op("operator apply", Ok(l.apply(&x)), Ok(l2.apply(&x2)))
}

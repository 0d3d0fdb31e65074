//! Composition and order laws for single series.

use rand::Rng;

use super::gen::{self, Rng8};
use super::{check, ok, same, same_nonvacuous, CaseResult};
use crate::field::{Field, Rational};
use crate::series::{Order, Series};

type S = Series<Rational>;

const MIN_KNOWN: i64 = 4;

pub(super) fn composition_laws(rng: &mut Rng8, len: usize) -> CaseResult {
    let g = gen::series(rng, -4..=4, len);
    let h = gen::series(rng, -4..=4, len);
    let f = gen::nonunit(rng, 1..=2, len);
    let k = gen::nonunit(rng, 1..=2, len);
    let c = |g: &S, f: &S| ok(g.compose(f), "compose");

    let (m, n) = (rng.random_range(-4..=4), rng.random_range(-4..=4));
    let zm = S::monomial(Rational::one(), m);
    let zn = S::monomial(Rational::one(), n);
    let zmn = S::monomial(Rational::one(), m + n);
    same_nonvacuous(&c(&zm, &f)?.mul(&c(&zn, &f)?), &c(&zmn, &f)?, MIN_KNOWN, "monomial law")?;

    let og = g.known_order().expect("known");
    let split = c(&S::monomial(Rational::one(), og), &f)?.mul(&c(&ok(g.standard_part(), "t^g")?, &f)?);
    same_nonvacuous(&c(&g, &f)?, &split, MIN_KNOWN, "factorization")?;

    same_nonvacuous(&c(&g, &f)?.mul(&c(&h, &f)?), &c(&g.mul(&h), &f)?, MIN_KNOWN, "right distributive law")?;

    let p = rng.random_range(-3..=3);
    let lhs = ok(c(&g, &f)?.pow(p), "pow")?;
    same_nonvacuous(&lhs, &c(&ok(g.pow(p), "pow")?, &f)?, MIN_KNOWN, "power law")?;

    same_nonvacuous(&c(&c(&g, &k)?, &f)?, &c(&g, &c(&k, &f)?)?, MIN_KNOWN, "associativity")?;

    let e = gen::order_one(rng, len, false);
    let inv = ok(e.comp_inverse(), "comp_inverse")?;
    same_nonvacuous(&ok(inv.comp_inverse(), "comp_inverse")?, &e, MIN_KNOWN, "comp_inverse involution")?;
    same_nonvacuous(&c(&e, &inv)?, &S::z(), MIN_KNOWN, "f∘f^[-1] = z")?;
    same_nonvacuous(&c(&inv, &e)?, &S::z(), MIN_KNOWN, "f^[-1]∘f = z")?;

    let (a, b) = (rng.random_range(0..=3u32), rng.random_range(0..=3u32));
    let flow = c(&ok(e.iterate(a), "iterate")?, &ok(e.iterate(b), "iterate")?)?;
    same_nonvacuous(&ok(e.iterate(a + b), "iterate")?, &flow, MIN_KNOWN, "iteration flow")
}

pub(super) fn order_laws(rng: &mut Rng8, len: usize) -> CaseResult {
    let a = gen::series(rng, -4..=4, len);
    let b = gen::series(rng, -4..=4, len);
    let (oa, ob) = (a.known_order().expect("known"), b.known_order().expect("known"));
    check(a.mul(&b).known_order() == Some(oa + ob), || format!("ord(ab) != {oa} + {ob}"))?;

    let sum_order_ok = match a.add(&b).order() {
        Order::Finite(o) => o >= oa.min(ob),
        Order::AtLeast(p) => p >= oa.min(ob),
        Order::Infinite => true,
    };
    check(sum_order_ok, || "ord(a+b) < min(ord a, ord b)".into())?;

    let r = rng.random_range(1..=3);
    let f = gen::nonunit(rng, r..=r, len);
    let gf = ok(a.compose(&f), "compose")?;
    check(gf.known_order() == Some(oa * r), || format!("ord(g∘f) = {:?} != {oa}·{r}", gf.order()))?;

    let inv = ok(a.inverse(), "inverse")?;
    check(inv.known_order() == Some(-oa), || "ord(1/a) != -ord a".into())?;
    same_nonvacuous(&a.mul(&inv), &S::one(), MIN_KNOWN, "a·(1/a) = 1")?;
    let n = rng.random_range(-3..=3);
    let pw = ok(a.pow(n), "pow")?;
    check(pw.known_order() == Some(n * oa), || "ord(a^n) != n·ord a".into())?;
    same(&a.add(&b).mul(&a), &a.mul(&a).add(&b.mul(&a)), "distributivity")
}

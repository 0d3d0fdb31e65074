//! Group laws of arrays, powers and roots, the A/Z characterization and the
//! semidirect coordinates.

use rand::Rng;

use super::gen::{self, Rng8};
use super::{check, ok, same_nonvacuous, CaseResult};
use crate::field::{Field, Rational};
use crate::riordan::{
    a_sequence, chi_compose, chi_decompose, psi_action, reconstruct, semidirect_mul, z_sequence, RiordanArray,
};
use crate::series::Series;

type R = RiordanArray<Rational>;
type S = Series<Rational>;

const MIN_KNOWN: i64 = 4;

fn same_array(a: &R, b: &R, law: &str) -> CaseResult {
    same_nonvacuous(a.g(), b.g(), MIN_KNOWN, &format!("{law} (g part)"))?;
    same_nonvacuous(a.f(), b.f(), MIN_KNOWN, &format!("{law} (f part)"))
}

pub(super) fn group_axioms(rng: &mut Rng8, len: usize) -> CaseResult {
    let r = gen::array(rng, -4..=4, len);
    let s = gen::array(rng, -4..=4, len);
    let t = gen::array(rng, -4..=4, len);
    let mul = |a: &R, b: &R| ok(a.mul(b), "rmul");
    let id = R::identity();

    same_array(&mul(&mul(&r, &s)?, &t)?, &mul(&r, &mul(&s, &t)?)?, "associativity")?;
    check(mul(&r, &id)? == r, || "R·(1,z) != R".into())?;
    check(mul(&id, &r)? == r, || "(1,z)·R != R".into())?;
    let inv = ok(r.inverse(), "rinverse")?;
    same_array(&mul(&r, &inv)?, &id, "R·R^-1 = (1,z)")?;
    same_array(&mul(&inv, &r)?, &id, "R^-1·R = (1,z)")?;

    let rs = mul(&r, &s)?;
    check(rs.diag_offset() == r.diag_offset() + s.diag_offset(), || "ord g does not add".into())?;
    matrix_coherence(rng, &r, &s, &rs)
}

/// `window(R·S)` equals the product of windows of `R` and `S` wherever both
/// sides are known.
fn matrix_coherence(rng: &mut Rng8, r: &R, s: &R, rs: &R) -> CaseResult {
    let c = rng.random_range(-2..=2);
    let a = rs.diag_offset() + c + rng.random_range(0..=2);
    let (b, d) = (a + 5, c + 5);
    let inner = (s.diag_offset() + c, b - r.diag_offset());
    let wr = ok(r.window(a, b, inner.0, inner.1), "window")?;
    let ws = ok(s.window(inner.0, inner.1, c, d), "window")?;
    let prod = ok(wr.matmul(&ws), "matmul")?;
    let direct = ok(rs.window(a, b, c, d), "window")?;
    let mut compared = 0;
    for m in a..=b {
        for n in c..=d {
            if let (Some(x), Some(y)) = (prod.get(m, n), direct.get(m, n)) {
                check(x == y, || format!("matrix product differs at ({m},{n}): {x} != {y}"))?;
                compared += 1;
            }
        }
    }
    check(compared >= 6, || format!("matrix coherence compared only {compared} entries"))
}

pub(super) fn power_roots(rng: &mut Rng8, len: usize) -> CaseResult {
    let r = gen::array(rng, -3..=3, len);
    let mut acc = r.clone();
    for m in 2..=5 {
        acc = ok(acc.mul(&r), "rmul")?;
        same_array(&ok(r.pow(m), "rpow")?, &acc, &format!("closed-form power m={m}"))?;
    }
    let inv = ok(r.inverse(), "rinverse")?;
    same_array(&ok(r.pow(-2), "rpow")?, &ok(inv.mul(&inv), "rmul")?, "negative power")?;

    let g = gen::series_with_order(rng, 0, len);
    let f = gen::order_one(rng, len, false);
    for m in 0..=4 {
        let (lhs, rhs) = ok(R::decompose_power(&g, &f, m), "decompose_power")?;
        same_array(&lhs, &rhs, &format!("(g^m, f) = (g,z)^m (1,f), m={m}"))?;
    }

    let p = gen::proper_tangent_array(rng, len);
    for n in 2..=4u32 {
        let root = ok(p.nth_root(n), "rnth_root")?;
        check(root.in_rl0_11(), || "root left the subgroup".into())?;
        same_array(&ok(root.pow(n as i64), "rpow")?, &p, &format!("rpow(rnth_root(R,{n}),{n}) = R"))?;
    }

    let e = gen::order_one(rng, len, true);
    let half = ok(e.iter_sqrt(), "iter_sqrt")?;
    same_nonvacuous(&ok(half.iterate(2), "iterate")?, &e, MIN_KNOWN, "iter_sqrt squared")?;
    for n in 2..=4u32 {
        let root = ok(e.iter_root(n), "iter_root")?;
        same_nonvacuous(&ok(root.iterate(n), "iterate")?, &e, MIN_KNOWN, &format!("iter_root {n}"))?;
    }
    same_nonvacuous(&ok(e.iter_root(2), "iter_root")?, &half, MIN_KNOWN, "iter_root(f,2) = iter_sqrt(f)")
}

const WINDOW: i64 = 8;

pub(super) fn az_recurrences(rng: &mut Rng8, len: usize) -> CaseResult {
    let r = gen::array(rng, -4..=4, len);
    let q = r.diag_offset();
    let c0 = rng.random_range(-3..=0);
    let (rows, cols) = ((q + c0, q + c0 + WINDOW - 1), (c0, c0 + WINDOW - 1));

    let a = ok(a_sequence(&r), "a_sequence")?;
    check(a.known_order() == Some(0) && a.coeffs()[0] == *r.f1(), || "a_0 != f_1".into())?;
    let mut checked = 0;
    for m in rows.0..rows.1 {
        for j in cols.0..cols.1 {
            // d_{m+1,j+1} = sum_{i=0}^{m-q-j} a_i d_{m,j+i}
            let Some(lhs) = r.entry(m + 1, j + 1) else { continue };
            let rhs = (0..=(m - q - j).max(-1))
                .map(|i| Some(a.coeff(i)? * &r.entry(m, j + i)?))
                .try_fold(Rational::zero(), |acc, t| t.map(|t| acc + t));
            let Some(rhs) = rhs else { continue };
            check(lhs == rhs, || format!("A-recurrence fails at ({m},{j})"))?;
            checked += 1;
        }
    }
    check(checked >= 30, || format!("A-recurrence checked at only {checked} positions"))?;

    let p = rng.random_range(-2..=2);
    let z = ok(z_sequence(&r, p), "z_sequence")?;
    let mut zchecked = 0;
    for m in -3..WINDOW - 1 {
        if m == -1 {
            continue;
        }
        // d_{q+p+m+1,p} = sum_{i=0}^{m} z_i d_{q+p+m,p+i}
        let Some(lhs) = r.entry(q + p + m + 1, p) else { continue };
        let rhs = (0..=m.max(-1))
            .map(|i| Some(z.coeff(i)? * &r.entry(q + p + m, p + i)?))
            .try_fold(Rational::zero(), |acc, t| t.map(|t| acc + t));
        let Some(rhs) = rhs else { continue };
        check(lhs == rhs, || format!("Z-recurrence (anchor {p}) fails at m = {m}"))?;
        zchecked += 1;
    }
    check(zchecked >= 5, || format!("Z-recurrence checked at only {zchecked} rows"))?;

    let col = c0 + rng.random_range(0..WINDOW);
    let column = r.column(col);
    let seed: Vec<Rational> = (0..).map_while(|i| column.coeff(q + col + i)).collect();
    let rebuilt = ok(reconstruct(&a, &seed, q, col, rows, cols), "reconstruct")?;
    let direct = ok(r.window(rows.0, rows.1, cols.0, cols.1), "window")?;
    let mut same_entries = 0;
    for m in rows.0..=rows.1 {
        for n in cols.0..=cols.1 {
            if let (Some(x), Some(y)) = (rebuilt.get(m, n), direct.get(m, n)) {
                check(x == y, || format!("reconstruct differs at ({m},{n})"))?;
                same_entries += 1;
            }
        }
    }
    check(same_entries >= 30, || format!("reconstruct compared only {same_entries} entries"))
}

pub(super) fn semidirect(rng: &mut Rng8, len: usize) -> CaseResult {
    let r = gen::array(rng, -4..=4, len);
    let s = gen::array(rng, -4..=4, len);
    let cr = chi_decompose(&r);
    check(ok(chi_compose(&cr), "chi_compose")? == r, || "chi round trip".into())?;

    let lhs = chi_decompose(&ok(r.mul(&s), "rmul")?);
    let rhs = ok(semidirect_mul(&cr, &chi_decompose(&s)), "semidirect_mul")?;
    check(lhs.shift == rhs.shift, || "shift part of chi(RS)".into())?;
    same_nonvacuous(&lhs.t_part, &rhs.t_part, MIN_KNOWN, "chi homomorphism (t part)")?;
    same_nonvacuous(&lhs.f_part, &rhs.f_part, MIN_KNOWN, "chi homomorphism (f part)")?;

    let f1 = gen::order_one(rng, len, false);
    let f2 = gen::order_one(rng, len, false);
    let g = gen::series_with_order(rng, 0, len);
    let n = rng.random_range(-3..=3);
    let (inner, n1) = ok(psi_action(&f1, &g, n), "psi")?;
    let (twice, n2) = ok(psi_action(&f2, &inner, n1), "psi")?;
    let (once, n3) = ok(psi_action(&ok(f1.compose(&f2), "compose")?, &g, n), "psi")?;
    check(n2 == n && n3 == n, || "psi changed the shift".into())?;
    same_nonvacuous(&twice, &once, MIN_KNOWN, "Ψ(f2)Ψ(f1) = Ψ(f1∘f2)")?;

    let (id_act, _) = ok(psi_action(&S::z(), &g, n), "psi")?;
    same_nonvacuous(&id_act, &g, MIN_KNOWN, "Ψ(z) = id")
}

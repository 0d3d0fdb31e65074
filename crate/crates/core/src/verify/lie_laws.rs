//! Bracket identities, the classical operator bracket and the dual-number
//! cross-checks of the tangent formulas.

use rand::Rng;

use super::gen::{self, Rng8};
use super::{check, ok, same, same_nonvacuous, CaseResult};
use crate::field::Rational;
use crate::lie::{
    bracket, bracket_x, classical_bracket, commutator_apply, dcompose, dcompose_dual, psi_der, semidirect_bracket,
    tangent_mul, tangent_mul_dual, TangentPair,
};
use crate::series::{Order, Series};

type T = TangentPair<Rational>;
type S = Series<Rational>;

fn same_pair(a: &T, b: &T, law: &str) -> CaseResult {
    same(&a.gamma, &b.gamma, &format!("{law} (gamma)"))?;
    same(&a.kappa, &b.kappa, &format!("{law} (kappa)"))
}

fn is_zero(a: &T, law: &str) -> CaseResult {
    same_pair(a, &T::zero(), law)
}

fn order_at_least(s: &S, bound: i64) -> bool {
    match s.order() {
        Order::Finite(o) => o >= bound,
        Order::AtLeast(p) => p >= bound,
        Order::Infinite => true,
    }
}

pub(super) fn jacobi(rng: &mut Rng8, len: usize) -> CaseResult {
    let (u, v) = (gen::tangent(rng, len), gen::tangent(rng, len));
    // an occasional pure series direction exercises the abelian part
    let w = if rng.random_bool(0.2) {
        T::new(gen::series(rng, -3..=3, len), S::exact_zero()).expect("zero kappa")
    } else {
        gen::tangent(rng, len)
    };
    let c = gen::coeff(rng);

    is_zero(&bracket(&u, &v).add(&bracket(&v, &u)), "antisymmetry")?;
    is_zero(&bracket(&u, &u), "[u,u] = 0")?;
    let lhs = bracket(&u.scale(&c).add(&v), &w);
    let rhs = bracket(&u, &w).scale(&c).add(&bracket(&v, &w));
    same_pair(&lhs, &rhs, "bilinearity")?;
    let jac = bracket(&bracket(&u, &v), &w).add(&bracket(&bracket(&v, &w), &u)).add(&bracket(&bracket(&w, &u), &v));
    is_zero(&jac, "Jacobi identity")?;
    check(jac.kappa.prec().is_none_or(|p| p > 4), || "Jacobi identity checked on too few terms".into())?;

    same_pair(&bracket(&u, &v), &semidirect_bracket(&u, &v), "semidirect assembly")?;

    let (k1, k2) = (&u.kappa, &v.kappa);
    let bound = k1.known_order().max(k2.known_order()).expect("random kappas are known");
    check(order_at_least(&bracket_x(k1, k2), bound), || "ord(κ2'κ1 - κ1'κ2) < max ord".into())?;

    let (g1, g2) = (&u.gamma, &v.gamma);
    let leibniz = psi_der(k1, g1).mul(g2).add(&g1.mul(&psi_der(k1, g2)));
    same_nonvacuous(&psi_der(k1, &g1.mul(g2)), &leibniz, 4, "ψ_κ is a derivation")?;

    // brackets of tangents with vanishing z^1 terms keep them
    let sub1 = T::new(u.gamma.clone(), gen::nonunit(rng, 2..=3, len)).expect("nonunit");
    let sub2 = T::new(v.gamma.clone(), gen::nonunit(rng, 2..=3, len)).expect("nonunit");
    check(order_at_least(&bracket(&sub1, &sub2).kappa, 2), || "rl_11 not closed under bracket".into())
}

pub(super) fn classical_operators(rng: &mut Rng8, len: usize) -> CaseResult {
    let l1 = gen::operator(rng, len);
    let l2 = gen::operator(rng, len);
    let closed = classical_bracket(&l1, &l2);
    for _ in 0..3 {
        let h = gen::series(rng, 0..=3, len);
        same_nonvacuous(&closed.apply(&h), &commutator_apply(&l1, &l2, &h), 4, "closed form vs commutator")?;
    }
    let self_br = classical_bracket(&l1, &l1);
    same(&self_br.chi, &S::exact_zero(), "[L,L] chi")?;
    same(&self_br.alpha, &S::exact_zero(), "[L,L] alpha")
}

pub(super) fn dual_consistency(rng: &mut Rng8, len: usize) -> CaseResult {
    let g = gen::series(rng, -3..=3, len);
    let h = gen::nonunit(rng, 1..=2, len);
    // the dual inverse of h + εχ divides by its leading coefficient, which must have a real part
    let oh = h.known_order().expect("known");
    let chi = gen::nonunit(rng, oh..=oh + 2, len);
    let direct = ok(dcompose(&g, &h, &chi), "dcompose")?;
    let dual = ok(dcompose_dual(&g, &h, &chi), "dual compose")?;
    same_nonvacuous(&direct, &dual, 4, "dcompose = ε-part of g∘(h+εχ)")?;

    let b1 = gen::array(rng, -3..=3, len);
    let b2 = gen::array(rng, -3..=3, len);
    let v1 = gen::tangent(rng, len);
    let v2 = gen::tangent(rng, len);
    let (base, t) = ok(tangent_mul(&b1, &v1, &b2, &v2), "tangent_mul")?;
    check(base == ok(b1.mul(&b2), "rmul")?, || "tangent_mul base part".into())?;
    let dual = ok(tangent_mul_dual(&b1, &v1, &b2, &v2), "dual rmul")?;
    same_nonvacuous(&t.gamma, &dual.gamma, 4, "tangent_mul gamma = ε-part")?;
    same_nonvacuous(&t.kappa, &dual.kappa, 4, "tangent_mul kappa = ε-part")
}

//! Random inputs with small rational coefficients.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Rational};
use crate::lie::{ClassicalOperator, TangentPair};
use crate::riordan::RiordanArray;
use crate::series::Series;

pub type Rng8 = ChaCha8Rng;
type S = Series<Rational>;

/// `p/q` with `|p| <= 5` and `q` usually 1.
pub fn coeff(rng: &mut Rng8) -> Rational {
    let p = rng.random_range(-5i64..=5);
    let q = [1i64, 1, 1, 2, 3][rng.random_range(0..5)];
    Rational::from_i64(p) * Rational::from_i64(q).inv().expect("q > 0")
}

pub fn nonzero_coeff(rng: &mut Rng8) -> Rational {
    loop {
        let c = coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A known series of the given order with `len` stored coefficients.
pub fn series_with_order(rng: &mut Rng8, order: i64, len: usize) -> S {
    let mut c = vec![nonzero_coeff(rng)];
    c.extend((1..len).map(|_| coeff(rng)));
    S::new(order, c)
}

/// A known series with order drawn from `orders`.
pub fn series(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>, len: usize) -> S {
    let order = rng.random_range(orders);
    series_with_order(rng, order, len)
}

/// Order-1 series; `f_1 = 1` when `tangent` is set.
pub fn order_one(rng: &mut Rng8, len: usize, tangent: bool) -> S {
    let mut s = series_with_order(rng, 1, len);
    if tangent {
        let mut c = s.coeffs().to_vec();
        c[0] = Rational::from_i64(1);
        s = S::new(1, c);
    }
    s
}

/// A nonunit power series of order in `orders` (all `>= 1`).
pub fn nonunit(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>, len: usize) -> S {
    series(rng, orders, len)
}

/// An array with `ord g` in `orders`.
pub fn array(rng: &mut Rng8, orders: std::ops::RangeInclusive<i64>, len: usize) -> RiordanArray<Rational> {
    let g = series(rng, orders, len);
    let f = order_one(rng, len, false);
    RiordanArray::new(g, f).expect("valid by construction")
}

/// An array in `RL⁰₁,₁`; `g_0 = 1` so every root exists.
pub fn proper_tangent_array(rng: &mut Rng8, len: usize) -> RiordanArray<Rational> {
    let mut c = series_with_order(rng, 0, len).coeffs().to_vec();
    c[0] = Rational::from_i64(1);
    RiordanArray::new(S::new(0, c), order_one(rng, len, true)).expect("valid by construction")
}

pub fn tangent(rng: &mut Rng8, len: usize) -> TangentPair<Rational> {
    let gamma = series(rng, -3..=3, len);
    let kappa = nonunit(rng, 1..=3, len);
    TangentPair::new(gamma, kappa).expect("kappa is a nonunit")
}

pub fn operator(rng: &mut Rng8, len: usize) -> ClassicalOperator<Rational> {
    let chi = series(rng, 0..=2, len);
    let alpha = nonunit(rng, 1..=3, len);
    ClassicalOperator::new(chi, alpha).expect("valid by construction")
}

/// Random coefficients to append beyond a series' precision.
pub fn tail(rng: &mut Rng8) -> Vec<Rational> {
    let n = rng.random_range(1..=4);
    (0..n).map(|_| coeff(rng)).collect()
}

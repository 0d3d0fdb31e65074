use proptest::prelude::*;
use semilaurent::field::{int, Dual, Field, Rational};
use semilaurent::Series;

type S = Series<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| int(p) * int(q).inv().unwrap())
}

fn dual() -> impl Strategy<Value = Dual<Rational>> {
    (rational(), rational()).prop_map(|(a, b)| Dual::new(a, b))
}

fn coeffs(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 1..=max)
}

fn series() -> impl Strategy<Value = S> {
    (-4i64..=4, coeffs(10)).prop_map(|(o, c)| S::new(o, c))
}

fn naive(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| {
            let mut acc = Rational::zero();
            for i in 0..a.len() {
                if k >= i && k - i < b.len() {
                    acc += &(a[i].clone() * &b[k - i]);
                }
            }
            acc
        })
        .collect()
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + &(b.clone() * &c));
        if let Some(i) = a.inv() {
            prop_assert!((a * i).is_one());
        }
    }

    #[test]
    fn dual_ring_laws(a in dual(), b in dual(), c in dual()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + &(b.clone() * &c));
        prop_assert!((Dual::<Rational>::epsilon() * Dual::epsilon()).is_zero());
        match a.inv() {
            Some(i) => prop_assert!((a * i).is_one()),
            None => prop_assert!(a.re.is_zero()),
        }
    }

    #[test]
    fn cleared_denominator_convolution(a in coeffs(12), b in coeffs(12), len in 1usize..26) {
        prop_assert_eq!(Rational::convolve(&a, &b, len), naive(&a, &b, len));
    }

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.mul(&b).mul(&c).agrees_with(&a.mul(&b.mul(&c))));
        prop_assert!(a.add(&b).mul(&c).agrees_with(&a.mul(&c).add(&b.mul(&c))));
        if a.is_known() {
            prop_assert!(a.mul(&a.inverse().unwrap()).agrees_with(&S::one()));
        }
    }

    #[test]
    fn composition_with_identity(a in series()) {
        prop_assert_eq!(a.compose(&S::z()).unwrap(), a.clone());
        let f = S::new(1, vec![int(1), int(2), int(-1)]);
        prop_assert!(S::z().compose(&f).unwrap().agrees_with(&f));
    }
}

//! A- and Z-sequences and reconstruction of an array from one column.
//!
//! With `d_{m,n}` the entries of `(g, f)`, `q = ord g`:
//!
//! * the A-sequence satisfies `d_{m+1,j+1} = sum_i a_i d_{m,j+i}` for all
//!   integers `m, j`, and `A = (f/z)∘f^[-1]`;
//! * the Z-sequence anchored at column `p` satisfies
//!   `d_{q+p+m+1,p} = sum_i z_i d_{q+p+m,p+i}` for every `m != -1`, where
//!   `Z = ((1 - d·ĝ^(-1))/z)∘f^[-1]`, `ĝ = t^(g·f^p)` and `d = ĝ_0`.

use std::collections::HashMap;

use super::{MatrixWindow, RiordanArray};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::Series;

/// The A- and Z-sequences of an array for one anchor column.
#[derive(Clone, Debug, PartialEq)]
pub struct AZData<F: Field> {
    pub a: Series<F>,
    pub z: Series<F>,
    pub anchor_col: i64,
    pub diag_seed: F,
}

/// `A = t^f ∘ f^[-1]`; depends on `f` only.
pub fn a_sequence<F: Field>(r: &RiordanArray<F>) -> Result<Series<F>> {
    r.f().standard_part()?.compose(&r.f().comp_inverse()?)
}

/// The Z-sequence of the proper array `(t^(g·f^p), f)`.
pub fn z_sequence<F: Field>(r: &RiordanArray<F>, p: i64) -> Result<Series<F>> {
    Ok(z_sequence_with_seed(r, p)?.0)
}

fn z_sequence_with_seed<F: Field>(r: &RiordanArray<F>, p: i64) -> Result<(Series<F>, F)> {
    let ghat = r.column(p).standard_part()?;
    let d = ghat.coeffs()[0].clone();
    let numer = Series::one().sub(&ghat.inverse()?.scalar_mul(&d));
    let z = numer.shift(-1).compose(&r.f().comp_inverse()?)?;
    Ok((z, d))
}

pub fn az_data<F: Field>(r: &RiordanArray<F>, p: i64) -> Result<AZData<F>> {
    let a = a_sequence(r)?;
    let (z, diag_seed) = z_sequence_with_seed(r, p)?;
    Ok(AZData { a, z, anchor_col: p, diag_seed })
}

/// Fills the window `rows × cols` of the array with diagonal offset `q`
/// whose column `col`, read from its diagonal entry `(q+col, col)` downward,
/// is `seed`.
///
/// Columns right of `col` follow the A-recurrence forward; columns to the
/// left solve it for `d_{m,j}`, dividing by `a_0`. Entries that would need a
/// seed value or an `a_i` beyond what is known are reported unknown.
pub fn reconstruct<F: Field>(
    a: &Series<F>,
    seed: &[F],
    q: i64,
    col: i64,
    rows: (i64, i64),
    cols: (i64, i64),
) -> Result<MatrixWindow<F>> {
    let a0 = match a.known_order() {
        Some(0) => a.coeffs()[0].clone(),
        _ => return Err(Error::ZeroLeadingA),
    };
    let a0_inv = a0.inv().ok_or(Error::ZeroLeadingA)?;
    let mut rec = Reconstruction { a, seed, q, col, a0_inv, memo: HashMap::new() };
    MatrixWindow::from_fn(rows.0, rows.1, cols.0, cols.1, q, |m, n| rec.entry(m, n))
}

struct Reconstruction<'a, F: Field> {
    a: &'a Series<F>,
    seed: &'a [F],
    q: i64,
    col: i64,
    a0_inv: F,
    memo: HashMap<(i64, i64), Option<F>>,
}

impl<F: Field> Reconstruction<'_, F> {
    // recursion is well founded on (m - q - j, |j - col|)
    fn entry(&mut self, m: i64, j: i64) -> Option<F> {
        let dist = m - self.q - j;
        if dist < 0 {
            return Some(F::zero());
        }
        if j == self.col {
            return self.seed.get(dist as usize).cloned();
        }
        if let Some(v) = self.memo.get(&(m, j)) {
            return v.clone();
        }
        let v = if j > self.col { self.right(m, j, dist) } else { self.left(m, j, dist) };
        self.memo.insert((m, j), v.clone());
        v
    }

    /// `d_{m,j} = sum_(i=0..=dist) a_i d_{m-1,j-1+i}`
    fn right(&mut self, m: i64, j: i64, dist: i64) -> Option<F> {
        let mut acc = F::zero();
        for i in 0..=dist {
            let d = self.entry(m - 1, j - 1 + i)?;
            if !d.is_zero() {
                acc = acc + &(self.a.coeff(i)? * &d);
            }
        }
        Some(acc)
    }

    /// `d_{m,j} = (d_{m+1,j+1} - sum_(i=1..=dist) a_i d_{m,j+i}) / a_0`
    fn left(&mut self, m: i64, j: i64, dist: i64) -> Option<F> {
        let mut acc = self.entry(m + 1, j + 1)?;
        for i in 1..=dist {
            let d = self.entry(m, j + i)?;
            if !d.is_zero() {
                acc = acc - &(self.a.coeff(i)? * &d);
            }
        }
        Some(acc * &self.a0_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    type S = Series<Rational>;
    type R = RiordanArray<Rational>;

    fn ones(order: i64, len: usize) -> S {
        S::new(order, vec![int(1); len])
    }

    #[test]
    fn a_sequences() {
        let p = R::new(ones(0, 10), ones(1, 10)).unwrap();
        let a = a_sequence(&p).unwrap();
        assert_eq!(a.coeffs()[..2], [int(1), int(1)]);
        assert!(a.coeffs()[2..].iter().all(|c| c == &int(0)));

        let diag = R::new(ones(0, 10), S::z()).unwrap();
        assert_eq!(a_sequence(&diag).unwrap(), S::one());

        let ex = R::new(ones(-3, 10), ones(1, 10)).unwrap();
        assert_eq!(a_sequence(&ex).unwrap(), a);
    }

    #[test]
    fn z_sequences() {
        let p = R::new(ones(0, 10), ones(1, 10)).unwrap();
        let z = z_sequence(&p, 0).unwrap();
        assert_eq!(z.coeff(0), Some(int(1)));
        assert!((1..8).all(|k| z.coeff(k) == Some(int(0))));

        let unit = R::new(S::new(0, vec![int(1), int(0), int(0)]), ones(1, 6)).unwrap();
        let zu = z_sequence(&unit, 0).unwrap();
        assert!(!zu.is_known());
        assert_eq!(z_sequence(&R::new(S::one(), ones(1, 6)).unwrap(), 0), Ok(S::exact_zero()));
    }

    #[test]
    fn reconstructs_pascal() {
        let p = R::new(ones(0, 12), ones(1, 12)).unwrap();
        let a = a_sequence(&p).unwrap();
        let w = reconstruct(&a, &vec![int(1); 12], 0, 0, (-3, 6), (-3, 6)).unwrap();
        assert_eq!(w, p.window(-3, 6, -3, 6).unwrap());
    }

    #[test]
    fn reconstructs_identity() {
        let w = reconstruct(&S::one(), &[int(1), int(0), int(0), int(0)], 0, 0, (0, 2), (0, 2)).unwrap();
        let id = R::identity().window(0, 2, 0, 2).unwrap();
        assert_eq!(w, id);
    }

    #[test]
    fn reconstructs_shifted_example() {
        let ex = R::new(ones(-3, 12), ones(1, 12)).unwrap();
        let a = S::polynomial(0, vec![int(1), int(1)]);
        let w = reconstruct(&a, &vec![int(1); 12], -3, 0, (-5, 0), (-2, 3)).unwrap();
        assert_eq!(w, ex.window(-5, 0, -2, 3).unwrap());
    }

    #[test]
    fn zero_leading_a() {
        let a = S::z();
        assert_eq!(reconstruct(&a, &[int(1)], 0, 0, (0, 1), (0, 1)), Err(Error::ZeroLeadingA));
    }
}

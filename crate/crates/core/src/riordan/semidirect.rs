//! Coordinates `((t, n), f)` on the group of arrays, with `t = t^g` the
//! standard part of `g` and `n = -ord g`.
//!
//! The product in these coordinates is
//! `((a, n), f)·((b, m), k) = ((a·Ψ(f)(b, m).0, n + m), k∘f)` with the action
//! `Ψ(f)(b, m) = ((b∘f)·(z/f)^m, m)`.

use super::RiordanArray;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq)]
pub struct SemidirectCoords<F: Field> {
    /// order 0
    pub t_part: Series<F>,
    /// `-ord g`
    pub shift: i64,
    /// order 1
    pub f_part: Series<F>,
}

impl<F: Field> SemidirectCoords<F> {
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.shift == other.shift && self.t_part.agrees_with(&other.t_part) && self.f_part.agrees_with(&other.f_part)
    }
}

pub fn chi_decompose<F: Field>(r: &RiordanArray<F>) -> SemidirectCoords<F> {
    SemidirectCoords {
        t_part: r.g().standard_part().expect("g has a determined order"),
        shift: -r.diag_offset(),
        f_part: r.f().clone(),
    }
}

pub fn chi_compose<F: Field>(c: &SemidirectCoords<F>) -> Result<RiordanArray<F>> {
    if c.t_part.known_order() != Some(0) {
        return Err(Error::InvalidGeneratingSeries);
    }
    RiordanArray::new(c.t_part.shift(-c.shift), c.f_part.clone())
}

/// `Ψ(f)(g, n) = ((g∘f)·(z/f)^n, n)` for `ord f = 1`, `ord g = 0`.
pub fn psi_action<F: Field>(f: &Series<F>, g: &Series<F>, n: i64) -> Result<(Series<F>, i64)> {
    if f.known_order() != Some(1) {
        return Err(Error::InvalidF);
    }
    match g.known_order() {
        Some(0) => {}
        Some(o) => return Err(Error::OrderNotZero(o)),
        None => return Err(Error::Undetermined),
    }
    let z_over_f = f.standard_part()?.inverse()?;
    Ok((g.compose(f)?.mul(&z_over_f.pow(n)?), n))
}

pub fn semidirect_mul<F: Field>(x: &SemidirectCoords<F>, y: &SemidirectCoords<F>) -> Result<SemidirectCoords<F>> {
    let (acted, _) = psi_action(&x.f_part, &y.t_part, y.shift)?;
    Ok(SemidirectCoords {
        t_part: x.t_part.mul(&acted),
        shift: x.shift + y.shift,
        f_part: y.f_part.compose(&x.f_part)?,
    })
}

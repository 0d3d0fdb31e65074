//! Generalized Riordan arrays `(g, f)` with `g` a nonzero semi-Laurent series
//! and `ord f = 1`.
//!
//! An array is stored as its defining pair; the bi-infinite matrix
//! `(g,f)_{m,n} = [z^m](g·f^n)` is only ever materialized as a finite
//! [`MatrixWindow`].

mod characterization;
mod semidirect;
mod window;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use characterization::{a_sequence, az_data, reconstruct, z_sequence, AZData};
pub use semidirect::{chi_compose, chi_decompose, psi_action, semidirect_mul, SemidirectCoords};
pub use window::MatrixWindow;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::series::Series;

pub struct RiordanArray<F: Field> {
    g: Series<F>,
    f: Series<F>,
    /// memoized columns `g·f^n`
    columns: Arc<Mutex<HashMap<i64, Series<F>>>>,
}

impl<F: Field> Clone for RiordanArray<F> {
    fn clone(&self) -> Self {
        RiordanArray { g: self.g.clone(), f: self.f.clone(), columns: self.columns.clone() }
    }
}

impl<F: Field> PartialEq for RiordanArray<F> {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.f == other.f
    }
}

impl<F: Field> fmt::Debug for RiordanArray<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RiordanArray").field("g", &self.g).field("f", &self.f).finish()
    }
}

impl<F: Field> fmt::Display for RiordanArray<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.f)
    }
}

impl<F: Field> RiordanArray<F> {
    /// Validates the pair: `g` must have a determined order, `f` must have
    /// order exactly 1 with an invertible linear coefficient.
    pub fn new(g: Series<F>, f: Series<F>) -> Result<Self> {
        if !g.is_known() {
            return Err(Error::InvalidGeneratingSeries);
        }
        if f.known_order() != Some(1) || f.coeffs()[0].inv().is_none() {
            return Err(Error::InvalidF);
        }
        Ok(RiordanArray { g, f, columns: Arc::default() })
    }

    /// The group identity `(1, z)`.
    pub fn identity() -> Self {
        Self::new(Series::one(), Series::z()).expect("identity is valid")
    }

    pub fn g(&self) -> &Series<F> {
        &self.g
    }

    pub fn f(&self) -> &Series<F> {
        &self.f
    }

    pub fn into_parts(self) -> (Series<F>, Series<F>) {
        (self.g, self.f)
    }

    /// `ord g`, the offset of the main diagonal: entry `(q+i, i)` is
    /// `g_q·f_1^i`.
    pub fn diag_offset(&self) -> i64 {
        self.g.known_order().expect("validated")
    }

    pub fn f1(&self) -> &F {
        &self.f.coeffs()[0]
    }

    pub fn in_rl0(&self) -> bool {
        self.diag_offset() == 0
    }

    pub fn in_rl11(&self) -> bool {
        self.f1().is_one()
    }

    pub fn in_rl0_11(&self) -> bool {
        self.in_rl0() && self.in_rl11()
    }

    /// Column `n`, the series `g·f^n`.
    pub fn column(&self, n: i64) -> Series<F> {
        if let Some(c) = self.columns.lock().expect("column cache").get(&n) {
            return c.clone();
        }
        let col = self.g.mul(&self.f.pow(n).expect("f has order 1, every power exists"));
        self.columns.lock().expect("column cache").insert(n, col.clone());
        col
    }

    /// `[z^m](g·f^n)`, or `None` beyond the propagated precision.
    pub fn entry(&self, m: i64, n: i64) -> Option<F> {
        if m < self.diag_offset() + n {
            return Some(F::zero());
        }
        self.column(n).coeff(m)
    }

    pub fn window(&self, row_lo: i64, row_hi: i64, col_lo: i64, col_hi: i64) -> Result<MatrixWindow<F>> {
        MatrixWindow::from_fn(row_lo, row_hi, col_lo, col_hi, self.diag_offset(), |m, n| self.entry(m, n))
    }

    /// `(g,f)*(h,k) = (g·(h∘f), k∘f)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        Self::new(g, f)
    }

    /// `(g,f)^(-1) = (g^(-1)∘f^[-1], f^[-1])`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.comp_inverse()?;
        let g = self.g.inverse()?.compose(&fbar)?;
        Self::new(g, fbar)
    }

    /// `(g,f)^m`; for `m > 0` the closed form
    /// `(prod_(i<m) g∘f^[i], f^[m])`, for `m < 0` a power of the inverse.
    pub fn pow(&self, m: i64) -> Result<Self> {
        if m < 0 {
            return self.inverse()?.pow(-m);
        }
        let mut prod = Series::one();
        let mut iterate = Series::z();
        for _ in 0..m {
            prod = prod.mul(&self.g.compose(&iterate)?);
            iterate = self.f.compose(&iterate)?;
        }
        Self::new(prod, iterate)
    }

    /// An `n`-th root in `RL⁰₁,₁` using the field's principal root of `g_0`.
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        if !self.in_rl0_11() {
            return Err(Error::NotInSubgroup);
        }
        if n == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        let g0 = &self.g.coeffs()[0];
        let root = g0.nth_root(n).ok_or(Error::NoRootInField(n))?;
        self.nth_root_with(n, root)
    }

    /// An `n`-th root `(G, F)` with `G_0 = root0`: `F` is the `n`-th iterative
    /// root of `f`, and `G` is solved degree by degree from
    /// `G·(G∘F)·…·(G∘F^[n-1]) = g`, where the unknown `G_k` enters with
    /// coefficient `n·G_0^(n-1)`.
    pub fn nth_root_with(&self, n: u32, root0: F) -> Result<Self> {
        if !self.in_rl0_11() {
            return Err(Error::NotInSubgroup);
        }
        if n == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        let g = &self.g;
        if root0.pow(n) != g.coeffs()[0] {
            return Err(Error::InvalidArgument(format!("{root0} is not a {n}-th root of g_0")));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let big_f = self.f.iter_root(n)?;
        if g.is_exact() && g.coeffs().len() == 1 && big_f.is_exact() {
            return Self::new(Series::constant(root0), big_f);
        }
        let mut iterates = vec![Series::z()];
        for _ in 1..n {
            let next = big_f.compose(iterates.last().expect("nonempty"))?;
            iterates.push(next);
        }
        // G_k depends on g_k and F up to degree k
        let len = match (g.prec(), big_f.prec()) {
            (Some(p), Some(q)) => p.min(q),
            (Some(p), None) | (None, Some(p)) => p,
            (None, None) => g.window_end().expect("known"),
        };
        let slope = (F::from_i64(n as i64) * root0.pow(n - 1)).inv().ok_or(Error::NoRootInField(n))?;
        let mut coeffs = vec![root0];
        for k in 1..len {
            let mut trial = coeffs.clone();
            trial.push(F::zero());
            let trial = Series::new(0, trial);
            let mut prod = Series::one();
            for it in &iterates {
                prod = prod.mul(&trial.compose(&it.truncate(k + 1))?);
            }
            let c = prod.coeff(k).expect("degree k is determined");
            let target = g.coeff(k).expect("below precision");
            coeffs.push((target - c) * &slope);
        }
        Self::new(Series::new(0, coeffs), big_f)
    }

    /// Both sides of `(g^m, f) = (g, z)^m·(1, f)`.
    pub fn decompose_power(g: &Series<F>, f: &Series<F>, m: u32) -> Result<(Self, Self)> {
        let lhs = Self::new(g.pow(m as i64)?, f.clone())?;
        let rhs = Self::new(g.clone(), Series::z())?.pow(m as i64)?.mul(&Self::new(Series::one(), f.clone())?)?;
        Ok((lhs, rhs))
    }

    /// Equality of both components up to their common precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.g.agrees_with(&other.g) && self.f.agrees_with(&other.f)
    }
}

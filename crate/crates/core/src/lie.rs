//! Tangent vectors of the array group and the bracket of its Lie algebra.
//!
//! A tangent vector at `(g, f)` is a pair `(γ, κ)` with `γ` any semi-Laurent
//! series and `κ` a power series without constant term. Derivatives are exact:
//! the dual-number lifts below evaluate an operation at `x + ε·v` over
//! `F[ε]/(ε²)` and read the directional derivative off the `ε`-part.

use crate::error::{Error, Result};
use crate::field::{Dual, Field};
use crate::riordan::RiordanArray;
use crate::series::{min_prec, Series};

#[derive(Clone, Debug, PartialEq)]
pub struct TangentPair<F: Field> {
    pub gamma: Series<F>,
    pub kappa: Series<F>,
}

impl<F: Field> TangentPair<F> {
    /// Requires `[z^n]κ = 0` for every `n <= 0`.
    pub fn new(gamma: Series<F>, kappa: Series<F>) -> Result<Self> {
        if !nonunit_fps(&kappa) {
            return Err(Error::InvalidTangent);
        }
        Ok(TangentPair { gamma, kappa })
    }

    pub fn zero() -> Self {
        TangentPair { gamma: Series::exact_zero(), kappa: Series::exact_zero() }
    }

    pub fn add(&self, other: &Self) -> Self {
        TangentPair { gamma: self.gamma.add(&other.gamma), kappa: self.kappa.add(&other.kappa) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TangentPair { gamma: self.gamma.sub(&other.gamma), kappa: self.kappa.sub(&other.kappa) }
    }

    pub fn scale(&self, c: &F) -> Self {
        TangentPair { gamma: self.gamma.scalar_mul(c), kappa: self.kappa.scalar_mul(c) }
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.gamma.agrees_with(&other.gamma) && self.kappa.agrees_with(&other.kappa)
    }
}

/// The operator `L_{χ,α}: h ↦ χ·h + α·h'` with `χ, α` power series and
/// `α_0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalOperator<F: Field> {
    pub chi: Series<F>,
    pub alpha: Series<F>,
}

impl<F: Field> ClassicalOperator<F> {
    pub fn new(chi: Series<F>, alpha: Series<F>) -> Result<Self> {
        if !chi.is_fps() || !nonunit_fps(&alpha) {
            return Err(Error::InvalidOperator);
        }
        Ok(ClassicalOperator { chi, alpha })
    }

    pub fn apply(&self, h: &Series<F>) -> Series<F> {
        self.chi.mul(h).add(&self.alpha.mul(&h.derivative()))
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.chi.agrees_with(&other.chi) && self.alpha.agrees_with(&other.alpha)
    }
}

fn nonunit_fps<F: Field>(s: &Series<F>) -> bool {
    match s.known_order() {
        Some(o) => o >= 1,
        None => s.prec().is_none_or(|p| p >= 1),
    }
}

/// Derivative of `t ↦ g∘(h + tχ)` at `t = 0`, which is `(g'∘h)·χ`.
pub fn dcompose<F: Field>(g: &Series<F>, h: &Series<F>, chi: &Series<F>) -> Result<Series<F>> {
    if !nonunit_fps(h) || !nonunit_fps(chi) {
        return Err(Error::CompositionUndefined("h and chi must be power series without constant term"));
    }
    Ok(g.derivative().compose(h)?.mul(chi))
}

/// The tangent map of the group product at `((f,h), (g,k))`, applied to the
/// tangent vectors `v1 = (φ, χ)` and `v2 = (γ, κ)`:
/// `(φ·(g∘h) + f·(γ∘h) + f·(g'∘h)·χ, (k'∘h)·χ + κ∘h)`.
pub fn tangent_mul<F: Field>(
    base1: &RiordanArray<F>,
    v1: &TangentPair<F>,
    base2: &RiordanArray<F>,
    v2: &TangentPair<F>,
) -> Result<(RiordanArray<F>, TangentPair<F>)> {
    let (f, h) = (base1.g(), base1.f());
    let (g, k) = (base2.g(), base2.f());
    let (phi, chi) = (&v1.gamma, &v1.kappa);
    let (gamma, kappa) = (&v2.gamma, &v2.kappa);
    let first = phi.mul(&g.compose(h)?).add(&f.mul(&gamma.compose(h)?)).add(&f.mul(&dcompose(g, h, chi)?));
    let second = dcompose(k, h, chi)?.add(&kappa.compose(h)?);
    Ok((base1.mul(base2)?, TangentPair { gamma: first, kappa: second }))
}

/// Pushes a tangent vector at the identity to the point `(f, h)`:
/// `(f·(γ∘h), κ∘h)`.
pub fn left_translate<F: Field>(base: &RiordanArray<F>, v: &TangentPair<F>) -> Result<TangentPair<F>> {
    let gamma = base.g().mul(&v.gamma.compose(base.f())?);
    let kappa = v.kappa.compose(base.f())?;
    Ok(TangentPair { gamma, kappa })
}

/// `[(γ₁,κ₁),(γ₂,κ₂)] = (γ₂'κ₁ - γ₁'κ₂, κ₂'κ₁ - κ₁'κ₂)`.
pub fn bracket<F: Field>(v1: &TangentPair<F>, v2: &TangentPair<F>) -> TangentPair<F> {
    let gamma = v2.gamma.derivative().mul(&v1.kappa).sub(&v1.gamma.derivative().mul(&v2.kappa));
    TangentPair { gamma, kappa: bracket_x(&v1.kappa, &v2.kappa) }
}

/// `κ₂'κ₁ - κ₁'κ₂`, the bracket on the substitution part.
pub fn bracket_x<F: Field>(k1: &Series<F>, k2: &Series<F>) -> Series<F> {
    k2.derivative().mul(k1).sub(&k1.derivative().mul(k2))
}

/// `ψ_κ(γ) = κ·γ'`.
pub fn psi_der<F: Field>(kappa: &Series<F>, gamma: &Series<F>) -> Series<F> {
    kappa.mul(&gamma.derivative())
}

/// The bracket assembled from the semidirect structure:
/// `(ψ_{κ₁}(γ₂) - ψ_{κ₂}(γ₁), bracket_x(κ₁, κ₂))`.
pub fn semidirect_bracket<F: Field>(v1: &TangentPair<F>, v2: &TangentPair<F>) -> TangentPair<F> {
    let gamma = psi_der(&v1.kappa, &v2.gamma).sub(&psi_der(&v2.kappa, &v1.gamma));
    TangentPair { gamma, kappa: bracket_x(&v1.kappa, &v2.kappa) }
}

/// `[L_{χ₁,α₁}, L_{χ₂,α₂}] = L_{χ₂'α₁ - χ₁'α₂, α₁α₂' - α₂α₁'}`.
pub fn classical_bracket<F: Field>(l1: &ClassicalOperator<F>, l2: &ClassicalOperator<F>) -> ClassicalOperator<F> {
    let chi = l2.chi.derivative().mul(&l1.alpha).sub(&l1.chi.derivative().mul(&l2.alpha));
    let alpha = l1.alpha.mul(&l2.alpha.derivative()).sub(&l2.alpha.mul(&l1.alpha.derivative()));
    ClassicalOperator { chi, alpha }
}

/// `L1(L2 h) - L2(L1 h)`, the commutator evaluated pointwise.
pub fn commutator_apply<F: Field>(l1: &ClassicalOperator<F>, l2: &ClassicalOperator<F>, h: &Series<F>) -> Series<F> {
    l1.apply(&l2.apply(h)).sub(&l2.apply(&l1.apply(h)))
}

/// The dual series `re + ε·eps`, known below the smaller precision.
pub fn lift_dual<F: Field>(re: &Series<F>, eps: &Series<F>) -> Series<Dual<F>> {
    let lift = |s: &Series<F>| s.map(|c| Dual::real(c.clone()));
    let re_part = lift(re);
    let eps_part = eps.map(|c| Dual::new(F::zero(), c.clone()));
    let sum = re_part.add(&eps_part);
    debug_assert_eq!(sum.prec(), min_prec(re.prec(), eps.prec()));
    sum
}

pub fn real_part<F: Field>(s: &Series<Dual<F>>) -> Series<F> {
    s.map(|d| d.re.clone())
}

pub fn eps_part<F: Field>(s: &Series<Dual<F>>) -> Series<F> {
    s.map(|d| d.eps.clone())
}

/// `ε`-part of `g∘(h + εχ)`: the exact directional derivative of
/// composition, computed without any derivative formula.
pub fn dcompose_dual<F: Field>(g: &Series<F>, h: &Series<F>, chi: &Series<F>) -> Result<Series<F>> {
    let g = lift_dual(g, &Series::exact_zero());
    Ok(eps_part(&g.compose(&lift_dual(h, chi))?))
}

/// `ε`-parts of the product `(f+εφ, h+εχ)·(g+εγ, k+εκ)` over dual numbers.
pub fn tangent_mul_dual<F: Field>(
    base1: &RiordanArray<F>,
    v1: &TangentPair<F>,
    base2: &RiordanArray<F>,
    v2: &TangentPair<F>,
) -> Result<TangentPair<F>> {
    let a = RiordanArray::new(lift_dual(base1.g(), &v1.gamma), lift_dual(base1.f(), &v1.kappa))?;
    let b = RiordanArray::new(lift_dual(base2.g(), &v2.gamma), lift_dual(base2.f(), &v2.kappa))?;
    let prod = a.mul(&b)?;
    Ok(TangentPair { gamma: eps_part(prod.g()), kappa: eps_part(prod.f()) })
}

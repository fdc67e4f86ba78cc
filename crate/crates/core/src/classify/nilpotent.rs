use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::model::{HBasisChange, ModelSpace, Operator};
use crate::rational::{zero, Rational};
use crate::subspace::{decomposable, fiber, gram, h_tensor, image, is_symplectic, maximal_pq, p1p2, Subspace};
use crate::uft::{injectivize, normalize_direction, to_uft, UftForm};

use super::{is_invariant, real::is_real};

/// Basis `h₁′ = h`, `h₂′` with determinant 1, where `h` spans `ker M_A`.
pub fn nilpotent_basis(a: &Operator) -> HBasisChange {
    let m = a.h_matrix();
    let h = normalize_direction(&m.kernel()[0]);
    let h2 = if !h[0].is_zero() { vec![zero(), h[0].recip()] } else { vec![-h[1].recip(), zero()] };
    HBasisChange::from_columns(&h, &h2).expect("det 1 by construction")
}

/// `h ⊗ p₂(U) ⊆ U` in the basis of [`nilpotent_basis`]; equivalent to `AU ⊆ U`.
pub fn nilpotent_criterion(sp: &ModelSpace, u: &Subspace, a: &Operator) -> bool {
    let basis = nilpotent_basis(a);
    let (_, p2) = p1p2(u, &basis);
    u.contains(&decomposable(sp, &basis.h1(), &p2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentCheck {
    pub witness: Operator,
    /// `ker M_A`, normalized.
    pub h: Vec<Rational>,
    pub basis: HBasisChange,
    pub degree: u8,
    pub criterion: bool,
    pub u0: Subspace,
    /// `E₀` with `U₀ = H ⊗ E₀`.
    pub e0: Subspace,
    /// Complement of `E₀` in the fiber of `h`.
    pub e1: Subspace,
    /// Complement of `U₀ ⊕ (h ⊗ E₁″)` in `U`.
    pub rest: Subspace,
    pub rest_real: bool,
    pub rest_uft: Option<UftForm>,
    pub recomposes: bool,
    pub p2_symplectic: bool,
    pub hermitian: bool,
}

pub fn check_nilpotent(sp: &ModelSpace, u: &Subspace, a: &Operator) -> Result<NilpotentCheck> {
    if a.is_zero() || !a.q().is_zero() {
        return Err(Error::WrongWitness("nilpotent witness needs q(A) = 0 and A ≠ 0"));
    }
    if !is_invariant(u, a) {
        return Err(Error::NotInStabilizer);
    }
    let basis = nilpotent_basis(a);
    let h = basis.h1();
    let degree = if image(a, u).is_zero() { 1 } else { 2 };
    let criterion = nilpotent_criterion(sp, u, a);
    let u0 = maximal_pq(u);
    let (e0, _) = p1p2(&u0, &HBasisChange::identity());
    let e1 = e0.complement_in(&fiber(sp, u, &h));
    let head = u0.sum(&decomposable(sp, &h, &e1));
    let rest = head.complement_in(u);
    let recomposes = head.dim() + rest.dim() == u.dim() && head.sum(&rest) == *u && h_tensor(sp, &e0) == u0;
    let rest_uft = to_uft(&rest, &crate::uft::basis_with_h2(&h)).ok().map(|f| injectivize(&f));
    let (_, p2) = p1p2(u, &basis);
    Ok(NilpotentCheck {
        witness: a.clone(),
        basis,
        degree,
        criterion,
        rest_real: is_real(sp, &rest),
        rest_uft,
        rest,
        u0,
        e0,
        e1,
        h,
        recomposes,
        p2_symplectic: is_symplectic(sp, &p2),
        hermitian: gram(sp, u).rank() == u.dim(),
    })
}

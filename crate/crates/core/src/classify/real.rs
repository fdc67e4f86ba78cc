use num_traits::Zero;

use crate::error::{Error, Result};
use crate::model::{ModelSpace, Operator};
use crate::subspace::{gram, maximal_pq, omega_gram, Subspace};
use crate::uft::{find_transversal_direction, injective_presentation, invariant_core, to_uft, UftForm};

use super::complex::orthogonal_image;

/// `U` contains no nonzero complex or weakly para-complex subspace.
///
/// Decided on an injective graph presentation: `U` is real iff it is pure, has a
/// transversal direction, and the invariant core `W*` of `T` is zero.
pub fn is_real(sp: &ModelSpace, u: &Subspace) -> bool {
    if u.is_zero() {
        return true;
    }
    if !maximal_pq(u).is_zero() {
        return false;
    }
    match injective_presentation(sp, u) {
        Some(form) => invariant_core(&form).w.is_zero(),
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotallyRealCheck {
    pub uft: UftForm,
    pub omega_e1_zero: bool,
    pub omega_e2_zero: bool,
    /// `ω^E(Tf, f′) + ω^E(f, Tf′) = 0`
    pub t_skew: bool,
    pub conditions: bool,
    /// `IU, JU, KU ⊥ U`
    pub gram_orthogonal: bool,
    pub e1_cap_e2_zero: bool,
    /// Gram of `U` equals `2ω^E(f, Tf′)` on `F`.
    pub gram_formula: bool,
    pub dim_bound: bool,
}

pub fn check_totally_real(sp: &ModelSpace, u: &Subspace) -> Result<TotallyRealCheck> {
    if !is_real(sp, u) {
        return Err(Error::Precondition("subspace is not real"));
    }
    let g = gram(sp, u);
    if g.rank() != u.dim() {
        return Err(Error::Precondition("metric on the subspace is degenerate"));
    }
    let (_, basis) = find_transversal_direction(sp, u).ok_or(Error::NoPresentation)?;
    let uft = to_uft(u, &basis)?;
    let e1 = uft.f.clone();
    let e2 = uft.image_of_t();
    let omega_e1_zero = omega_gram(sp, &e1).is_zero();
    let omega_e2_zero = omega_gram(sp, &e2).is_zero();
    let fs = uft.f.vectors();
    let ts = uft.t.to_cols();
    let k = fs.len();
    let t_skew = (0..k).all(|i| (0..k).all(|j| (sp.omega(&ts[i], &fs[j]) + sp.omega(&fs[i], &ts[j])).is_zero()));
    let conditions = omega_e1_zero && omega_e2_zero && t_skew;
    let gram_orthogonal = [Operator::i(), Operator::j(), Operator::k()].iter().all(|a| orthogonal_image(sp, a, u));
    let phis: alloc::vec::Vec<_> = fs.iter().map(|f| uft.phi(f)).collect();
    let gram_formula = (0..k).all(|i| {
        (0..k).all(|j| sp.metric(&phis[i], &phis[j]) == crate::rational::int(2) * sp.omega(&fs[i], &ts[j]))
    });
    Ok(TotallyRealCheck {
        e1_cap_e2_zero: e1.intersect(&e2).is_zero(),
        dim_bound: u.dim() <= sp.n(),
        uft,
        omega_e1_zero,
        omega_e2_zero,
        t_skew,
        conditions,
        gram_orthogonal,
        gram_formula,
    })
}

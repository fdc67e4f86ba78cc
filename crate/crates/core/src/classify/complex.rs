use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{scale_vec, Matrix};
use crate::model::{HBasisChange, ModelSpace, Operator};
use crate::rational::{int, sqrt_exact, Rational};
use crate::subspace::{gram, image, maximal_pq, omega_gram, signature_of, SignatureTriple, Subspace};
use crate::uft::{to_uft, UftForm};

use super::{is_invariant, q_bilinear};

/// A basis `(h₁′, h₂′)` in which `M_A = [[0, −q/d], [d, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub basis: HBasisChange,
    pub d: Rational,
}

/// `h₁′` is the first of `h₁, h₂, h₁ + h₂` with `d = det[h₁′, M_A h₁′] ≠ 0`, and
/// `h₂′ = M_A h₁′ / d`. Needs `q(A) ≠ 0`.
pub fn adapted_basis(a: &Operator) -> AdaptedBasis {
    assert!(!a.q().is_zero(), "adapted basis needs q(A) ≠ 0");
    let m = a.h_matrix();
    for h in [vec![int(1), int(0)], vec![int(0), int(1)], vec![int(1), int(1)]] {
        let mh = m.mul_vec(&h);
        let d = &h[0] * &mh[1] - &h[1] * &mh[0];
        if !d.is_zero() {
            let h2 = scale_vec(&mh, &d.recip());
            let basis = HBasisChange::from_columns(&h, &h2).expect("det 1 by construction");
            return AdaptedBasis { basis, d };
        }
    }
    unreachable!("M_A has at most two eigenlines")
}

/// An `A`-invariant complement of `U₀` in `U`, for `A` in the stabilizer with `q(A) ≠ 0`.
///
/// Greedy pairs `{b, Ab}` over the echelon basis; when `−q(A)` is a rational square the
/// complement is taken eigenspace by eigenspace instead.
pub fn invariant_complement(u: &Subspace, u0: &Subspace, a: &Operator) -> Subspace {
    let q = a.q();
    let n = u.ambient();
    if let Some(c) = sqrt_exact(&-&q) {
        let m = a.matrix(n / 2);
        let shift = |s: &Rational| m.add(&Matrix::identity(n).scale(s));
        let mut parts = Vec::new();
        for s in [c.clone(), -c] {
            let eig = u.image(&shift(&s));
            let eig0 = eig.intersect(u0);
            parts.extend(eig0.complement_in(&eig).vectors());
        }
        return Subspace::new(n, &parts);
    }
    let mut acc = u0.clone();
    let mut chosen = Vec::new();
    for b in u.vectors() {
        if acc.contains_vector(&b) {
            continue;
        }
        let ab = a.apply(&b);
        acc = acc.sum(&Subspace::new(n, &[b.clone(), ab.clone()]));
        chosen.push(b);
        chosen.push(ab);
    }
    Subspace::new(n, &chosen)
}

/// Operators `B` with `q(A, B) = 0`.
pub(super) fn q_partners(a: &Operator) -> Vec<Operator> {
    let sys = Matrix::from_rows(3, &[vec![a.alpha.clone(), -a.beta.clone(), -a.gamma.clone()]]);
    sys.kernel().iter().map(|v| Operator::from_coords(v)).collect()
}

/// `g(BX, Y) = 0` for all `X, Y ∈ U`.
pub(super) fn orthogonal_image(sp: &ModelSpace, b: &Operator, u: &Subspace) -> bool {
    let bu = image(b, u).vectors();
    let uv = u.vectors();
    bu.iter().all(|x| uv.iter().all(|y| sp.metric(x, y).is_zero()))
}

/// `T` maps `F` into itself and `T² = c·Id` there.
pub(super) fn t_squared_is(form: &UftForm, c: &Rational) -> bool {
    form.f.vectors().iter().all(|f| {
        let tf = form.apply_t(f);
        form.f.contains_vector(&tf) && form.apply_t(&tf) == scale_vec(f, c)
    })
}

/// `ω^E(Tf, Tf′) = c·ω^E(f, f′)` on a basis of `F`.
pub(super) fn omega_scaled(sp: &ModelSpace, form: &UftForm, c: &Rational) -> bool {
    let fs = form.f.vectors();
    let ts = form.t.to_cols();
    (0..fs.len()).all(|i| (0..fs.len()).all(|j| sp.omega(&ts[i], &ts[j]) == c * sp.omega(&fs[i], &fs[j])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCheck {
    pub witness: Operator,
    pub q: Rational,
    pub u0: Subspace,
    /// `A`-invariant complement of `U₀`.
    pub complement: Subspace,
    pub adapted: AdaptedBasis,
    /// `T² = −κ·Id` on `F`, with `κ = d²/q`.
    pub kappa: Rational,
    pub uft: UftForm,
    pub t_squared_ok: bool,
    pub g_f: Matrix,
    pub hermitian: bool,
    pub signature: SignatureTriple,
    /// The signature of `g_F` is of the form `(2p, 2s, 2q)`.
    pub signature_even: bool,
    /// `−(ω^E(f, f′) + ω^E(Tf, Tf′)/κ)`
    pub kaehler: Matrix,
    /// `−g_F(Tf, f′) = κ·K(f, f′)`
    pub kaehler_identity: bool,
    /// `F` is symplectic and `ω^E(Tf, Tf′) = κ·ω^E(f, f′)`.
    pub omega_condition: bool,
    /// `BU ⊥ U` for every `B` that is `q`-orthogonal to the witness.
    pub partner_orthogonal: bool,
    pub totally_complex: bool,
}

pub fn check_complex(sp: &ModelSpace, u: &Subspace, a: &Operator) -> Result<ComplexCheck> {
    let q = a.q();
    if q <= Rational::zero() {
        return Err(Error::WrongWitness("complex witness needs q(A) > 0"));
    }
    if !is_invariant(u, a) {
        return Err(Error::NotInStabilizer);
    }
    let u0 = maximal_pq(u);
    let complement = invariant_complement(u, &u0, a);
    let adapted = adapted_basis(a);
    let kappa = &adapted.d * &adapted.d / &q;
    let uft = to_uft(&complement, &adapted.basis)?;
    let t_squared_ok = t_squared_is(&uft, &-&kappa);
    let g_f = uft.induced_gf(sp);
    let sig_f = signature_of(&g_f);
    let signature = signature_of(&gram(sp, u));
    let hermitian = signature.is_nondegenerate();

    let fs = uft.f.vectors();
    let ts = uft.t.to_cols();
    let k = fs.len();
    let kaehler = Matrix::from_fn(k, k, |i, j| -(sp.omega(&fs[i], &fs[j]) + sp.omega(&ts[i], &ts[j]) / &kappa));
    let gf = |x: &[Rational], y: &[Rational]| -(sp.omega(&uft.apply_t(x), y) + sp.omega(&uft.apply_t(y), x));
    let kaehler_identity = t_squared_ok && (0..k).all(|i| (0..k).all(|j| -gf(&ts[i], &fs[j]) == &kappa * &kaehler[(i, j)]));

    let omega_condition = !omega_gram(sp, &uft.f).determinant().is_zero() && omega_scaled(sp, &uft, &kappa);
    let partner_orthogonal = q_partners(a).iter().all(|b| orthogonal_image(sp, b, u));
    debug_assert!(q_partners(a).iter().all(|b| q_bilinear(a, b).is_zero()));
    let totally_complex = u0.is_zero() && hermitian && omega_condition;
    Ok(ComplexCheck {
        witness: a.clone(),
        q,
        u0,
        complement,
        adapted,
        kappa,
        uft,
        t_squared_ok,
        g_f,
        hermitian,
        signature,
        signature_even: sig_f.p % 2 == 0 && sig_f.s % 2 == 0 && sig_f.q % 2 == 0,
        kaehler,
        kaehler_identity,
        omega_condition,
        partner_orthogonal,
        totally_complex,
    })
}

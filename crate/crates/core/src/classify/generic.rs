use alloc::vec::Vec;

use num_traits::Zero;

use crate::factor::factor;
use crate::model::{operator_from_basis, ModelSpace, Operator};
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::subspace::{combine, decomposable, maximal_pq, Subspace};
use crate::uft::{
    basis_with_h2, decompose_form1, injective_presentation, injectivize, invariant_core, is_direct_sum_of, UftForm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AddendKind {
    ParaQuaternionic,
    Complex,
    WeaklyParaComplex,
    /// Carried by an irreducible factor of degree ≥ 3: no rational witness, not real.
    Residual,
    Real,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Addend {
    pub kind: AddendKind,
    pub subspace: Subspace,
    pub witness: Option<Operator>,
    /// Irreducible factor of `T` on the invariant core that produced the addend.
    pub factor: Option<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDecomposition {
    pub addends: Vec<Addend>,
}

impl GenericDecomposition {
    pub fn subspaces(&self) -> Vec<Subspace> {
        self.addends.iter().map(|a| a.subspace.clone()).collect()
    }

    pub fn recomposes_to(&self, u: &Subspace) -> bool {
        is_direct_sum_of(u, &self.subspaces())
    }
}

/// `A = (1 − q, −1 − q, −p)` for `T² = pT + q`, read from a monic quadratic
/// `x² − px − q`; a linear factor `x − λ` is padded to `(x − λ)(x − λ − 1)`.
///
/// `φ(W)` is `A`-invariant iff `(α+β)f + 2γTf + (α−β)T²f = 0` on `W`, which for this `A`
/// reads `2(T² − pT − q)f = 0`.
pub fn witness_for_factor(f: &Poly) -> Operator {
    let f = f.monic();
    let quad = match f.degree() {
        Some(1) => {
            let lambda = -f.coeff(0);
            f.mul(&Poly::linear(&(lambda + int(1))))
        }
        Some(2) => f,
        _ => panic!("witness needs a factor of degree 1 or 2"),
    };
    let p = -quad.coeff(1);
    let q = -quad.coeff(0);
    Operator::new(int(1) - &q, int(-1) - &q, -p)
}

fn discriminant(f: &Poly) -> Rational {
    let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
    &b * &b - int(4) * a * c
}

/// Complex quadratics first, then linear factors, then real quadratics, then the rest.
fn pick_factor(t: &crate::matrix::Matrix) -> (Poly, AddendKind) {
    let fz = factor(&Poly::new(t.charpoly()));
    let rank = |p: &Poly| match p.degree() {
        Some(2) if discriminant(p) < Rational::zero() => 0,
        Some(1) => 1,
        Some(2) => 2,
        _ => 3,
    };
    let (p, _) = fz.factors.iter().min_by_key(|(p, _)| rank(p)).expect("nonconstant charpoly").clone();
    let kind = match rank(&p) {
        0 => AddendKind::Complex,
        1 | 2 => AddendKind::WeaklyParaComplex,
        _ => AddendKind::Residual,
    };
    (p, kind)
}

/// `U = U₀ ⊕ (complex addends) ⊕ (weakly para-complex addends) ⊕ (residual addends) ⊕ real`.
///
/// After splitting off `U₀`, the echelon complement is put in injective graph form. If it has
/// none (every direction `h` meets it, e.g. when its dimension exceeds `2n`), form 1 first
/// splits off a decomposable `h ⊗ F′`, which is weakly para-complex with witness `K` in a
/// basis having `h₂′ = h`. While
/// the invariant core `W*` of `T` is nonzero, one irreducible factor `p` of `T|W*` is
/// chosen, `φ(ker p(T|W*))` becomes an addend, and the loop continues on the echelon
/// complement of `ker p(T|W*)` in `F`. What is left once `W* = 0` is real.
pub fn generic_decompose(sp: &ModelSpace, u: &Subspace) -> GenericDecomposition {
    let mut addends = Vec::new();
    let u0 = maximal_pq(u);
    if !u0.is_zero() {
        addends.push(Addend {
            kind: AddendKind::ParaQuaternionic,
            subspace: u0.clone(),
            witness: None,
            factor: None,
        });
    }
    let rest = u0.complement_in(u);
    if rest.is_zero() {
        return GenericDecomposition { addends };
    }
    let form = match injective_presentation(sp, &rest) {
        Some(form) => form,
        None => {
            let f1 = decompose_form1(sp, &rest);
            addends.push(Addend {
                kind: AddendKind::WeaklyParaComplex,
                subspace: decomposable(sp, &f1.h, &f1.f_prime),
                witness: Some(operator_from_basis(&basis_with_h2(&f1.h), &Operator::k())),
                factor: None,
            });
            injectivize(&f1.uft)
        }
    };
    let t_full = form.t_extended();
    let mut f = form.f.clone();
    while !f.is_zero() {
        let cur = UftForm::from_endomorphism(form.h_basis.clone(), f.clone(), &t_full);
        let core = invariant_core(&cur);
        if core.w.is_zero() {
            addends.push(Addend { kind: AddendKind::Real, subspace: cur.to_subspace(), witness: None, factor: None });
            break;
        }
        let (p, kind) = pick_factor(&core.t);
        let wv = core.w.vectors();
        let ker: Vec<Vec<Rational>> = p.eval_matrix(&core.t).kernel().iter().map(|c| combine(&wv, c)).collect();
        let w = Subspace::new(f.ambient(), &ker);
        let piece = UftForm::from_endomorphism(form.h_basis.clone(), w.clone(), &t_full);
        let witness = (kind != AddendKind::Residual).then(|| operator_from_basis(&form.h_basis, &witness_for_factor(&p)));
        addends.push(Addend { kind, subspace: piece.to_subspace(), witness, factor: Some(p) });
        f = w.complement_in(&f);
    }
    GenericDecomposition { addends }
}

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{ModelSpace, Operator};
use crate::quadratic::{independent_subset, matrix_rank_over, QuadVec};
use crate::rational::{int, sqrt_exact, Rational};
use crate::subspace::{fiber, gram, maximal_pq, omega_gram, signature_of, SignatureTriple, Subspace};
use crate::uft::{normalize_direction, to_uft, Direction, UftForm};

use super::complex::{adapted_basis, invariant_complement, omega_scaled, orthogonal_image, q_partners, t_squared_is};
use super::{is_invariant, operator_on, AdaptedBasis};

/// The eigenspaces `U± = (A ± c)U` of a para-complex witness, `c = √|q(A)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenSplit {
    /// `|q|` is a square: `U = (h₊ ⊗ E₊) ⊕ (h₋ ⊗ E₋)` with rational directions.
    Rational { plus: Direction, minus: Direction, recomposes: bool },
    /// Spanning vectors over `ℚ(√r)`, `r = |q|`.
    Quadratic { r: Rational, plus: Vec<QuadVec>, minus: Vec<QuadVec> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaCheck {
    pub witness: Operator,
    pub q: Rational,
    pub u0: Subspace,
    pub complement: Subspace,
    pub adapted: AdaptedBasis,
    /// `T² = κ·Id` on `F`, with `κ = d²/|q|`.
    pub kappa: Rational,
    pub uft: UftForm,
    pub t_squared_ok: bool,
    pub trace: Rational,
    pub d_plus: usize,
    pub d_minus: usize,
    /// `(d₊ − d₋)² = tr(A|U)²/|q|` agrees with the rank computation.
    pub trace_route_ok: bool,
    pub strictly: bool,
    /// Rank of `g` between `U⁺` and `U⁻`.
    pub m: usize,
    pub signature: SignatureTriple,
    /// The signature is `(m, k − 2m, m)`.
    pub signature_matches: bool,
    pub hermitian: bool,
    /// `F` is symplectic and `ω^E(Tf, Tf′) = −κ·ω^E(f, f′)`.
    pub omega_condition: bool,
    pub partner_orthogonal: bool,
    pub totally_para_complex: bool,
    pub eigen: EigenSplit,
    /// When `U` lies in a single rational eigenspace `h ⊗ E`, the nilpotent `N` with
    /// kernel and image `h`: every `aN ± A` is a para-complex witness as well.
    pub eigen_family: Option<Operator>,
}

/// The nilpotent operator with `M_N v = det[h, v]·h`.
pub fn eigen_family_generator(h: &[Rational]) -> Operator {
    let (x, y) = (&h[0], &h[1]);
    let m = Matrix::from_rows(2, &[[-(x * y), x * x].to_vec(), [-(y * y), x * y].to_vec()]);
    Operator::from_h_matrix(&m)
}

fn eigen_split(sp: &ModelSpace, u: &Subspace, a: &Operator) -> EigenSplit {
    let r = -a.q();
    if let Some(c) = sqrt_exact(&r) {
        let m = a.h_matrix();
        let dir = |s: &Rational| {
            let shifted = m.sub(&Matrix::identity(2).scale(s));
            let h = normalize_direction(&shifted.kernel()[0]);
            let fib = fiber(sp, u, &h);
            Direction { h, fiber: fib }
        };
        let plus = dir(&c);
        let minus = dir(&-c);
        let recomposes = plus.fiber.dim() + minus.fiber.dim() == u.dim();
        return EigenSplit::Rational { plus, minus, recomposes };
    }
    let vs = u.vectors();
    let make = |s: i64| -> Vec<QuadVec> {
        let all: Vec<QuadVec> =
            vs.iter().map(|x| QuadVec::new(a.apply(x), x.iter().map(|v| v * int(s)).collect())).collect();
        independent_subset(&all, &r).into_iter().map(|i| all[i].clone()).collect()
    };
    EigenSplit::Quadratic { plus: make(1), minus: make(-1), r }
}

pub fn check_para_complex(sp: &ModelSpace, u: &Subspace, a: &Operator) -> Result<ParaCheck> {
    let q = a.q();
    if q >= Rational::zero() {
        return Err(Error::WrongWitness("para-complex witness needs q(A) < 0"));
    }
    if !is_invariant(u, a) {
        return Err(Error::NotInStabilizer);
    }
    let r = -&q;
    let u0 = maximal_pq(u);
    let complement = invariant_complement(u, &u0, a);
    let adapted = adapted_basis(a);
    let kappa = &adapted.d * &adapted.d / &r;
    let uft = to_uft(&complement, &adapted.basis)?;
    let t_squared_ok = t_squared_is(&uft, &kappa);

    let k = u.dim();
    let a_u = operator_on(u, a).expect("invariant");
    let trace = a_u.trace();
    let d_plus = matrix_rank_over(&a_u, &Matrix::identity(k), &r);
    let d_minus = matrix_rank_over(&a_u, &Matrix::identity(k).scale(&int(-1)), &r);
    let diff_sq = &trace * &trace / &r;
    let trace_route_ok = match sqrt_exact(&diff_sq) {
        Some(s) if s.is_integer() => {
            let diff = if trace.is_negative() { -s } else { s };
            d_plus + d_minus == k && Rational::from_integer((d_plus as i64 - d_minus as i64).into()) == diff
        }
        _ => false,
    };

    let g = gram(sp, u);
    let vs = u.vectors();
    let g_a = Matrix::from_fn(k, k, |i, j| sp.metric(&vs[i], &a.apply(&vs[j])));
    let m = matrix_rank_over(&g.scale(&(int(-2) * &r)), &g_a.scale(&int(2)), &r);
    let signature = signature_of(&g);
    let hermitian = signature.is_nondegenerate();
    let signature_matches = k >= 2 * m && signature == SignatureTriple::new(m, k - 2 * m, m);

    let omega_condition = !omega_gram(sp, &uft.f).determinant().is_zero() && omega_scaled(sp, &uft, &-&kappa);
    let partner_orthogonal = q_partners(a).iter().all(|b| orthogonal_image(sp, b, u));
    let totally_para_complex = u0.is_zero() && hermitian && omega_condition;

    let eigen = eigen_split(sp, u, a);
    let eigen_family = match &eigen {
        EigenSplit::Rational { plus, minus, .. } if !u.is_zero() => {
            if minus.fiber.is_zero() {
                Some(eigen_family_generator(&plus.h))
            } else if plus.fiber.is_zero() {
                Some(eigen_family_generator(&minus.h))
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(ParaCheck {
        witness: a.clone(),
        q,
        u0,
        complement,
        adapted,
        kappa,
        uft,
        t_squared_ok,
        trace,
        d_plus,
        d_minus,
        trace_route_ok,
        strictly: d_plus == d_minus,
        m,
        signature,
        signature_matches,
        hermitian,
        omega_condition,
        partner_orthogonal,
        totally_para_complex,
        eigen,
        eigen_family,
    })
}

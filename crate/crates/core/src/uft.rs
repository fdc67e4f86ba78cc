//! Graph presentations `U^{F,T} = {h₁⊗f + h₂⊗Tf : f ∈ F}` of subspaces of `H ⊗ E`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::matrix::{is_zero_vec, Matrix};
use crate::model::{join, split, HBasisChange, ModelSpace};
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::subspace::{combine, decomposable, fiber, maximal_pq, Subspace};

/// `U^{F,T}` with respect to the basis `(h₁′, h₂′)` given by `h_basis`.
///
/// Column `j` of `t` is `T f_j` for the `j`-th echelon basis vector `f_j` of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UftForm {
    pub h_basis: HBasisChange,
    pub f: Subspace,
    pub t: Matrix,
}

impl UftForm {
    pub fn new(h_basis: HBasisChange, f: Subspace, t: Matrix) -> Self {
        assert_eq!(t.cols(), f.dim(), "T needs one column per basis vector of F");
        assert_eq!(t.rows(), f.ambient(), "T takes values in E");
        UftForm { h_basis, f, t }
    }

    /// Presentation from an arbitrary matrix on `E`, restricted to `F`.
    pub fn from_endomorphism(h_basis: HBasisChange, f: Subspace, t_full: &Matrix) -> Self {
        let cols: Vec<Vec<Rational>> = f.vectors().iter().map(|v| t_full.mul_vec(v)).collect();
        let t = Matrix::from_cols(f.ambient(), &cols);
        Self::new(h_basis, f, t)
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn e_dim(&self) -> usize {
        self.f.ambient()
    }

    /// `T f` for `f ∈ F`. Panics if `f ∉ F`.
    pub fn apply_t(&self, f: &[Rational]) -> Vec<Rational> {
        let c = self.f.coordinates(f).expect("vector outside F");
        if c.is_empty() {
            return vec![Rational::zero(); self.e_dim()];
        }
        combine(&self.t.to_cols(), &c)
    }

    /// `φ(f) = h₁′⊗f + h₂′⊗Tf` in model coordinates.
    pub fn phi(&self, f: &[Rational]) -> Vec<Rational> {
        self.h_basis.to_old(&join(f, &self.apply_t(f)))
    }

    /// The subspace presented by this form.
    pub fn to_subspace(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.f.vectors().iter().map(|f| self.phi(f)).collect();
        Subspace::new(2 * self.e_dim(), &rows)
    }

    /// A matrix on `E` agreeing with `T` on `F` and vanishing on the echelon complement.
    pub fn t_extended(&self) -> Matrix {
        let m = self.e_dim();
        let comp = self.f.complement();
        let mut basis = self.f.vectors();
        basis.extend(comp.vectors());
        let b = Matrix::from_cols(m, &basis);
        let mut images = self.t.to_cols();
        images.extend((0..comp.dim()).map(|_| vec![Rational::zero(); m]));
        let img = Matrix::from_cols(m, &images);
        img.mul_mat(&b.inverse().expect("basis of E"))
    }

    pub fn image_of_t(&self) -> Subspace {
        Subspace::new(self.e_dim(), &self.t.to_cols())
    }

    pub fn is_injective(&self) -> bool {
        self.t.rank() == self.dim()
    }

    /// Matrix of `T` on a `T`-invariant `W ⊆ F`, in the echelon basis of `W`.
    pub fn restrict(&self, w: &Subspace) -> Matrix {
        let cols: Vec<Vec<Rational>> = w
            .vectors()
            .iter()
            .map(|v| w.coordinates(&self.apply_t(v)).expect("W is not T-invariant"))
            .collect();
        Matrix::from_cols(w.dim(), &cols)
    }

    /// `g_F(f, f′) = −[ω^E(Tf, f′) + ω^E(Tf′, f)]` on the echelon basis of `F`.
    pub fn induced_gf(&self, sp: &ModelSpace) -> Matrix {
        let fs = self.f.vectors();
        let ts = self.t.to_cols();
        Matrix::from_fn(fs.len(), fs.len(), |a, b| -(sp.omega(&ts[a], &fs[b]) + sp.omega(&ts[b], &fs[a])))
    }
}

/// A basis of `H` with determinant 1 whose second vector is `h`.
pub fn basis_with_h2(h: &[Rational]) -> HBasisChange {
    let h1 = if !h[1].is_zero() {
        vec![h[1].recip(), Rational::zero()]
    } else {
        vec![Rational::zero(), -h[0].recip()]
    };
    HBasisChange::from_columns(&h1, h).expect("det 1 by construction")
}

/// Transversal candidates in search order: `h₂ + t·h₁` for `t = 0, …, count − 2`, then `h₁`.
pub fn transversal_candidates(count: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..count.saturating_sub(1)).map(|t| vec![int(t as i64), int(1)]).collect();
    out.push(vec![int(1), int(0)]);
    out
}

/// Some `h` with `(h ⊗ E) ∩ U = 0`, together with a basis having `h` as second vector.
pub fn find_transversal_direction(sp: &ModelSpace, u: &Subspace) -> Option<(Vec<Rational>, HBasisChange)> {
    transversal_candidates(u.dim() + 2)
        .into_iter()
        .find(|h| fiber(sp, u, h).is_zero())
        .map(|h| {
            let b = basis_with_h2(&h);
            (h, b)
        })
}

/// Reads `U` as a graph over `p₁(U)` in the given basis.
pub fn to_uft(u: &Subspace, basis: &HBasisChange) -> Result<UftForm> {
    let m = u.ambient() / 2;
    let rows: Vec<Vec<Rational>> = u.vectors().iter().map(|x| basis.to_new(x)).collect();
    let (r, pivots) = Matrix::from_rows(2 * m, &rows).rref();
    if pivots.iter().any(|&p| p >= m) {
        return Err(Error::NotTransversal);
    }
    let rows = r.to_rows();
    let fs: Vec<Vec<Rational>> = rows.iter().map(|x| split(x).0.to_vec()).collect();
    let ts: Vec<Vec<Rational>> = rows.iter().map(|x| split(x).1.to_vec()).collect();
    let f = Subspace::new(m, &fs);
    debug_assert_eq!(f.vectors(), fs);
    Ok(UftForm::new(basis.clone(), f, Matrix::from_cols(m, &ts)))
}

/// Presentation with respect to the basis `h_basis · s`.
///
/// Writing `s⁻¹ = [[α, γ], [β, δ]]`, the new form pairs `αf + γTf` with `βf + δTf`,
/// so `F′ = (α + γT)F` and `T′ = (β + δT)(α + γT)⁻¹`.
pub fn uft_change_basis(u: &UftForm, s: &HBasisChange) -> Result<UftForm> {
    let p = s.inverse();
    let p = p.matrix();
    let (alpha, gamma, beta, delta) = (&p[(0, 0)], &p[(0, 1)], &p[(1, 0)], &p[(1, 1)]);
    let m = u.e_dim();
    let rows: Vec<Vec<Rational>> = u
        .f
        .vectors()
        .iter()
        .map(|f| {
            let tf = u.apply_t(f);
            let first: Vec<Rational> = f.iter().zip(&tf).map(|(a, b)| alpha * a + gamma * b).collect();
            let second: Vec<Rational> = f.iter().zip(&tf).map(|(a, b)| beta * a + delta * b).collect();
            join(&first, &second)
        })
        .collect();
    let (r, pivots) = Matrix::from_rows(2 * m, &rows).rref();
    if pivots.len() < u.dim() || pivots.iter().any(|&c| c >= m) {
        return Err(Error::SingularPencil);
    }
    let rows = r.to_rows();
    let fs: Vec<Vec<Rational>> = rows.iter().map(|x| split(x).0.to_vec()).collect();
    let ts: Vec<Vec<Rational>> = rows.iter().map(|x| split(x).1.to_vec()).collect();
    Ok(UftForm::new(u.h_basis.then(s), Subspace::new(m, &fs), Matrix::from_cols(m, &ts)))
}

/// Equivalent presentation with injective `T`, via `h₁′ ↦ h₁′ + t·h₂′` for the first
/// `t = 1, 2, …` that is not an eigenvalue of `T` (so `T′ = T − t·Id`).
pub fn injectivize(u: &UftForm) -> UftForm {
    if u.is_injective() {
        return u.clone();
    }
    for t in 1.. {
        let s = HBasisChange::new(Matrix::from_rows(2, &[vec![int(1), int(0)], vec![int(t), int(1)]])).unwrap();
        let cand = uft_change_basis(u, &s).expect("α = 1 keeps every basis transversal");
        if cand.is_injective() {
            return cand;
        }
    }
    unreachable!()
}

/// The largest `T`-invariant subspace of `F ∩ TF`, with `T` restricted to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCore {
    pub w: Subspace,
    pub t: Matrix,
}

/// Fixpoint of `W₀ = F ∩ TF`, `W_{k+1} = {w ∈ W_k : Tw ∈ W_k}`.
pub fn invariant_core(u: &UftForm) -> InvariantCore {
    let t_full = u.t_extended();
    let mut w = u.f.intersect(&u.image_of_t());
    loop {
        let next = w.preimage_within(&t_full, &w);
        if next.dim() == w.dim() {
            break;
        }
        w = next;
    }
    let t = u.restrict(&w);
    InvariantCore { w, t }
}

/// A decomposable direction `[a : b]` (first nonzero coordinate 1) and its fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    pub h: Vec<Rational>,
    pub fiber: Subspace,
}

/// Rational decomposable directions of a pure subspace, and the irreducible factors of
/// degree ≥ 2 that carry the remaining spectrum of `T` on its invariant core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilSpectrum {
    pub directions: Vec<Direction>,
    pub irrational: Vec<(Poly, usize)>,
}

/// Scales a nonzero `h ∈ H` so its first nonzero coordinate is 1.
pub fn normalize_direction(h: &[Rational]) -> Vec<Rational> {
    let lead = h.iter().find(|c| !c.is_zero()).expect("nonzero direction").clone();
    h.iter().map(|c| c / &lead).collect()
}

/// Injectivized presentation of a subspace having a transversal direction.
pub fn injective_presentation(sp: &ModelSpace, u: &Subspace) -> Option<UftForm> {
    let (_, basis) = find_transversal_direction(sp, u)?;
    Some(injectivize(&to_uft(u, &basis).expect("transversal basis")))
}

pub fn decomposable_spectrum(sp: &ModelSpace, u: &Subspace) -> Result<PencilSpectrum> {
    if !maximal_pq(u).is_zero() {
        return Err(Error::NotPure);
    }
    let form = injective_presentation(sp, u).ok_or(Error::NoPresentation)?;
    let core = invariant_core(&form);
    if core.w.is_zero() {
        return Ok(PencilSpectrum { directions: Vec::new(), irrational: Vec::new() });
    }
    let fz = factor(&Poly::new(core.t.charpoly()));
    let h1 = form.h_basis.h1();
    let h2 = form.h_basis.h2();
    let mut directions = Vec::new();
    for (lambda, _) in fz.rational_roots() {
        // (h₁′ + λh₂′) ⊗ f with Tf = λf
        let h: Vec<Rational> = h1.iter().zip(&h2).map(|(a, b)| a + &lambda * b).collect();
        let h = normalize_direction(&h);
        let fib = fiber(sp, u, &h);
        debug_assert!(!fib.is_zero());
        directions.push(Direction { h, fiber: fib });
    }
    Ok(PencilSpectrum { directions, irrational: fz.nonlinear() })
}

/// `U` has no decomposable vector with a rational direction.
pub fn is_free_of_rational_decomposables(sp: &ModelSpace, u: &Subspace) -> bool {
    if u.is_zero() {
        return true;
    }
    match decomposable_spectrum(sp, u) {
        Ok(s) => s.directions.is_empty(),
        Err(_) => false,
    }
}

/// `U = (h ⊗ F′) ⊕ U^{F″,T″}` with the graph addend of maximal dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form1 {
    pub h: Vec<Rational>,
    pub f_prime: Subspace,
    pub uft: UftForm,
}

impl Form1 {
    pub fn decomposable_part(&self, sp: &ModelSpace) -> Subspace {
        decomposable(sp, &self.h, &self.f_prime)
    }
}

/// Form 1: pick the direction `h` with the smallest fiber among `h₁, h₂, h₂ + h₁, h₂ + 2h₁, …`
/// (enough candidates to hit a generic direction), split off `h ⊗ F_h`, and present the
/// echelon complement as a graph in a basis with `h₂′ = h`.
pub fn decompose_form1(sp: &ModelSpace, u: &Subspace) -> Form1 {
    let count = sp.e_dim() + 2;
    let mut candidates = vec![vec![int(1), int(0)]];
    candidates.extend((0..count).map(|t| vec![int(t as i64), int(1)]));
    let mut best: Option<(Vec<Rational>, Subspace)> = None;
    for h in candidates {
        let fib = fiber(sp, u, &h);
        if best.as_ref().is_none_or(|(_, b)| fib.dim() < b.dim()) {
            let done = fib.is_zero();
            best = Some((h, fib));
            if done {
                break;
            }
        }
    }
    let (h, f_prime) = best.expect("at least one candidate");
    let dec = decomposable(sp, &h, &f_prime);
    let rest = dec.complement_in(u);
    let basis = basis_with_h2(&h);
    let uft = to_uft(&rest, &basis).expect("complement of the full fiber is transversal to h");
    Form1 { h, f_prime, uft }
}

/// `U = ⊕ kᵢ ⊗ Fᵢ ⊕ U^{F̃,T̃}` with pairwise independent `kᵢ` and a last addend free of
/// rational decomposable vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form2 {
    pub decomposables: Vec<Direction>,
    pub uft: UftForm,
}

impl Form2 {
    pub fn addends(&self, sp: &ModelSpace) -> Vec<Subspace> {
        let mut out: Vec<Subspace> = self.decomposables.iter().map(|d| decomposable(sp, &d.h, &d.fiber)).collect();
        out.push(self.uft.to_subspace());
        out
    }
}

fn push_direction(list: &mut Vec<Direction>, h: Vec<Rational>, f: Subspace) {
    if f.is_zero() {
        return;
    }
    let h = normalize_direction(&h);
    if let Some(d) = list.iter_mut().find(|d| d.h == h) {
        d.fiber = d.fiber.sum(&f);
    } else {
        list.push(Direction { h, fiber: f });
    }
}

/// Decomposition of a pure subspace: form 1, then on the graph part split off the largest
/// rational eigenspace `E₁` of `T` as `k ⊗ E₁`, keeping `F̃ = Z ⊕ Y` where `Z` complements
/// the sum of eigenspaces and `Y` pairs the basis of each other eigenspace with that of `E₁`.
fn pure_form2(sp: &ModelSpace, u: &Subspace) -> (Vec<Direction>, Subspace) {
    let f1 = decompose_form1(sp, u);
    let mut dirs = Vec::new();
    push_direction(&mut dirs, f1.h.clone(), f1.f_prime.clone());
    let form = injectivize(&f1.uft);
    let core = invariant_core(&form);
    let mut eigen: Vec<(Rational, Subspace)> = Vec::new();
    if !core.w.is_zero() {
        let fz = factor(&Poly::new(core.t.charpoly()));
        for (lambda, _) in fz.rational_roots() {
            let shifted = core.t.sub(&Matrix::identity(core.w.dim()).scale(&lambda));
            let vecs: Vec<Vec<Rational>> = shifted.kernel().iter().map(|c| combine(&core.w.vectors(), c)).collect();
            eigen.push((lambda, Subspace::new(sp.e_dim(), &vecs)));
        }
    }
    if eigen.is_empty() {
        return (dirs, form.to_subspace());
    }
    // largest eigenspace first, ties by eigenvalue order
    let top = (0..eigen.len()).fold(0, |best, i| if eigen[i].1.dim() > eigen[best].1.dim() { i } else { best });
    let (lambda, e_top) = eigen.remove(top);
    let h1 = form.h_basis.h1();
    let h2 = form.h_basis.h2();
    let k: Vec<Rational> = h1.iter().zip(&h2).map(|(a, b)| a + &lambda * b).collect();
    push_direction(&mut dirs, k, e_top.clone());
    let eig_sum = eigen.iter().fold(e_top.clone(), |acc, (_, e)| acc.sum(e));
    let z = eig_sum.complement_in(&form.f);
    let top_basis = e_top.vectors();
    let mut f_tilde = z.vectors();
    for (_, e) in &eigen {
        for (j, b) in e.vectors().iter().enumerate() {
            f_tilde.push(b.iter().zip(&top_basis[j]).map(|(x, y)| x + y).collect());
        }
    }
    let f_tilde = Subspace::new(sp.e_dim(), &f_tilde);
    let rest = UftForm::from_endomorphism(form.h_basis.clone(), f_tilde, &form.t_extended());
    (dirs, rest.to_subspace())
}

/// Form 2, greedy. A para-quaternionic part `H ⊗ E₀` contributes `h₁ ⊗ E₀` (plus `h₂ ⊗ e`
/// for the last basis vector when `dim E₀` is odd) and the graph of the rotation
/// `e_{2i−1} ↦ e_{2i} ↦ −e_{2i−1}` on the remaining even part.
pub fn decompose_form2(sp: &ModelSpace, u: &Subspace) -> Form2 {
    let u0 = maximal_pq(u);
    let pure = u0.complement_in(u);
    let (mut dirs, mut rest) = pure_form2(sp, &pure);
    if !u0.is_zero() {
        let e0 = crate::subspace::p1p2(&u0, &HBasisChange::identity()).0;
        let basis = e0.vectors();
        let even = basis.len() - basis.len() % 2;
        let mut rot_rows = Vec::new();
        for i in (0..even).step_by(2) {
            let (a, b) = (&basis[i], &basis[i + 1]);
            rot_rows.push(join(a, b));
            rot_rows.push(join(b, &a.iter().map(|c| -c).collect::<Vec<_>>()));
        }
        let rot = Subspace::new(sp.dim(), &rot_rows);
        let combined = rest.sum(&rot);
        if is_free_of_rational_decomposables(sp, &combined) {
            let mut merged = Vec::new();
            push_direction(&mut merged, vec![int(1), int(0)], e0.clone());
            if even < basis.len() {
                push_direction(&mut merged, vec![int(0), int(1)], Subspace::new(sp.e_dim(), &[basis[even].clone()]));
            }
            for d in dirs {
                push_direction(&mut merged, d.h, d.fiber);
            }
            dirs = merged;
            rest = combined;
        } else {
            let mut merged = Vec::new();
            push_direction(&mut merged, vec![int(1), int(0)], e0.clone());
            push_direction(&mut merged, vec![int(0), int(1)], e0);
            for d in dirs {
                push_direction(&mut merged, d.h, d.fiber);
            }
            dirs = merged;
        }
    }
    let basis = find_transversal_direction(sp, &rest).map(|(_, b)| b).unwrap_or_else(HBasisChange::identity);
    let uft = to_uft(&rest, &basis).expect("decomposable-free subspaces are transversal");
    Form2 { decomposables: dirs, uft }
}

/// Exact check that `parts` form a direct sum equal to `u`.
pub fn is_direct_sum_of(u: &Subspace, parts: &[Subspace]) -> bool {
    let total: usize = parts.iter().map(Subspace::dim).sum();
    let sum = parts.iter().fold(Subspace::zero(u.ambient()), |acc, p| acc.sum(p));
    total == u.dim() && sum == *u
}

/// Whether `x` lies in `h ⊗ E` for some `h` (used by tests and the oracle).
pub fn decomposable_direction_of(x: &[Rational]) -> Option<Vec<Rational>> {
    if is_zero_vec(x) {
        return None;
    }
    let (e, ep) = split(x);
    if !crate::subspace::is_decomposable_vector(x) {
        return None;
    }
    // x = h ⊗ v: pick a nonzero coordinate of either half
    let idx = (0..e.len()).find(|&i| !e[i].is_zero() || !ep[i].is_zero())?;
    Some(normalize_direction(&[e[idx].clone(), ep[idx].clone()]))
}

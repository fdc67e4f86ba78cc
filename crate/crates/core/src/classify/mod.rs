//! Stabilizers, kind witnesses and the full classification report of a subspace.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::matrix::{dot, Matrix};
use crate::model::{ModelSpace, Operator};
use crate::rational::{int, sign, sqrt_exact, Rational};
use crate::subspace::{gram, image, maximal_pq, signature_of, SignatureTriple, Subspace};
use crate::uft::{injective_presentation, UftForm};

mod complex;
mod generic;
mod nilpotent;
mod oracle;
mod para;
mod real;

pub use complex::{adapted_basis, check_complex, invariant_complement, AdaptedBasis, ComplexCheck};
pub use generic::{generic_decompose, witness_for_factor, Addend, AddendKind, GenericDecomposition};
pub use nilpotent::{check_nilpotent, nilpotent_basis, nilpotent_criterion, NilpotentCheck};
pub use oracle::{descartes_signature, oracle_check, OracleReport};
pub use para::{check_para_complex, eigen_family_generator, EigenSplit, ParaCheck};
pub use real::{check_totally_real, is_real, TotallyRealCheck};

/// `{A ∈ Q̃ : AU ⊆ U}` as a subspace of ℚ³ in `(α, β, γ)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer {
    pub space: Subspace,
}

impl Stabilizer {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Operator> {
        self.space.vectors().iter().map(|v| Operator::from_coords(v)).collect()
    }

    pub fn contains(&self, a: &Operator) -> bool {
        self.space.contains_vector(&a.coords())
    }

    /// Gram matrix of the polarized form `q(A, B) = αα′ − ββ′ − γγ′` on the basis.
    pub fn q_form(&self) -> Matrix {
        let b = self.basis();
        Matrix::from_fn(b.len(), b.len(), |r, c| q_bilinear(&b[r], &b[c]))
    }

    pub fn is_bracket_closed(&self) -> bool {
        let b = self.basis();
        b.iter().all(|x| b.iter().all(|y| self.contains(&x.bracket(y))))
    }
}

pub fn q_bilinear(a: &Operator, b: &Operator) -> Rational {
    &a.alpha * &b.alpha - &a.beta * &b.beta - &a.gamma * &b.gamma
}

/// `A·b ∈ U` for every basis vector `b`, solved as a linear system in `(α, β, γ)`.
pub fn stabilizer(u: &Subspace) -> Stabilizer {
    let ann = u.annihilator().vectors();
    let gens: Vec<Vec<Vec<Rational>>> = [Operator::i(), Operator::j(), Operator::k()]
        .iter()
        .map(|a| u.vectors().iter().map(|b| a.apply(b)).collect())
        .collect();
    let mut rows = Vec::new();
    for a in &ann {
        for bi in 0..u.dim() {
            rows.push((0..3).map(|g| dot(a, &gens[g][bi])).collect::<Vec<_>>());
        }
    }
    let sys = Matrix::from_rows(3, &rows);
    Stabilizer { space: Subspace::new(3, &sys.kernel()) }
}

pub fn is_invariant(u: &Subspace, a: &Operator) -> bool {
    u.vectors().iter().all(|b| u.contains_vector(&a.apply(b)))
}

/// Matrix of `A|U` in the echelon basis of `U`, when `U` is `A`-invariant.
pub fn operator_on(u: &Subspace, a: &Operator) -> Option<Matrix> {
    let cols: Option<Vec<Vec<Rational>>> = u.vectors().iter().map(|b| u.coordinates(&a.apply(b))).collect();
    Some(Matrix::from_cols(u.dim(), &cols?))
}

/// The largest `A`-invariant subspace of `U`.
///
/// For invertible `A` this is `U ∩ A⁻¹U` (one step, since `A² = −q·Id`); for nilpotent `A`
/// the step is iterated to a fixpoint.
pub fn max_invariant(u: &Subspace, a: &Operator) -> Subspace {
    let m = a.matrix(u.ambient() / 2);
    let mut w = u.clone();
    loop {
        let next = w.preimage_within(&m, &w);
        if next.dim() == w.dim() || !a.q().is_zero() {
            return next;
        }
        w = next;
    }
}

/// Operators of a span, diagonalized for `q`: pairwise `q`-orthogonal, each with its `q` value.
fn diagonalize_q(basis: &[Operator]) -> Vec<(Operator, Rational)> {
    let mut vs: Vec<Operator> = basis.to_vec();
    let mut out = Vec::new();
    while !vs.is_empty() {
        let pos = vs.iter().position(|v| !v.q().is_zero());
        let pivot = match pos {
            Some(p) => vs.remove(p),
            None => {
                // q vanishes on the diagonal; a nonzero pairing gives a vector with q ≠ 0
                let pair = (0..vs.len())
                    .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !q_bilinear(&vs[i], &vs[j]).is_zero());
                match pair {
                    Some((i, j)) => {
                        let s = vs[i].add(&vs[j]);
                        vs.remove(i);
                        s
                    }
                    None => {
                        out.extend(vs.drain(..).map(|v| (v, Rational::zero())));
                        break;
                    }
                }
            }
        };
        let d = pivot.q();
        vs = vs
            .iter()
            .map(|v| v.sub(&pivot.scale(&(q_bilinear(v, &pivot) / &d))))
            .filter(|v| !v.is_zero())
            .collect();
        out.push((pivot, d));
    }
    out
}

/// Some `A` in the span with `sign q(A) = s`; for `s = 0` a nonzero isotropic `A`.
pub fn find_with_sign(basis: &[Operator], s: i32) -> Option<Operator> {
    isotropic_or_signed(basis, s).into_iter().next()
}

fn isotropic_or_signed(basis: &[Operator], s: i32) -> Vec<Operator> {
    if basis.len() == 3 {
        // canonical choices on the whole of Q̃
        return match s {
            1 => vec![Operator::i()],
            -1 => vec![Operator::k()],
            _ => vec![Operator::i().sub(&Operator::j()), Operator::i().add(&Operator::j())],
        };
    }
    let diag = diagonalize_q(basis);
    if s != 0 {
        return diag.into_iter().filter(|(_, d)| sign(d) == s).map(|(v, _)| v).take(1).collect();
    }
    if let Some((v, _)) = diag.iter().find(|(_, d)| d.is_zero()) {
        return vec![v.clone()];
    }
    // binary form d₁x² + d₂y² (no ternary form arises below dimension 3)
    if diag.len() == 2 {
        let (v1, d1) = &diag[0];
        let (v2, d2) = &diag[1];
        if let Some(x) = sqrt_exact(&(-(d2 / d1))) {
            return vec![v1.scale(&x).add(v2), v1.scale(&-x).add(v2)];
        }
    }
    Vec::new()
}

/// Kind witnesses read off `q` restricted to the stabilizer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub complex: Option<Operator>,
    pub weakly_para_complex: Option<Operator>,
    pub para_complex: Option<Operator>,
    pub nilpotent: Option<Operator>,
}

/// Witnesses for the three kinds that depend only on `q|stab`; `para_complex` is left empty
/// since it also needs the trace on `U` (see [`classify`]).
pub fn kind_witnesses(s: &Stabilizer) -> Witnesses {
    let b = s.basis();
    if b.is_empty() {
        return Witnesses::default();
    }
    Witnesses {
        complex: find_with_sign(&b, 1),
        weakly_para_complex: find_with_sign(&b, -1),
        para_complex: None,
        nilpotent: find_with_sign(&b, 0),
    }
}

/// All isotropic lines of `q|stab` when there are finitely many (at most two), else
/// the canonical pair for the full stabilizer.
pub fn nilpotent_candidates(s: &Stabilizer) -> Vec<Operator> {
    let b = s.basis();
    if b.is_empty() {
        return Vec::new();
    }
    isotropic_or_signed(&b, 0)
}

/// `H ⊗ p₁(U)` check with the metric refinements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqCheck {
    pub is_para_quaternionic: bool,
    pub e_prime: Subspace,
    pub hermitian: bool,
    pub gram_block: bool,
}

pub fn is_para_quaternionic(sp: &ModelSpace, u: &Subspace) -> PqCheck {
    let (e_prime, _) = crate::subspace::p1p2(u, &crate::model::HBasisChange::identity());
    let pq = crate::subspace::h_tensor(sp, &e_prime);
    let is_pq = pq == *u;
    let w = crate::subspace::omega_gram(sp, &e_prime);
    let hermitian = e_prime.is_zero() || !w.determinant().is_zero();
    // basis (h₁⊗f_i, h₂⊗f_i): Gram [[0, W], [−W, 0]]
    let k = e_prime.dim();
    let mut rows = Vec::new();
    let (h1, h2) = ([int(1), int(0)], [int(0), int(1)]);
    for h in [&h1, &h2] {
        for f in e_prime.vectors() {
            rows.push(sp.tensor(h, &f));
        }
    }
    let g = crate::matrix::gram_of(&rows, |x, y| sp.metric(x, y));
    let block = Matrix::from_fn(2 * k, 2 * k, |r, c| match (r < k, c < k) {
        (true, false) => w[(r, c - k)].clone(),
        (false, true) => -w[(r - k, c)].clone(),
        _ => Rational::zero(),
    });
    PqCheck { is_para_quaternionic: is_pq, e_prime, hermitian, gram_block: g == block }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub para_quaternionic: bool,
    pub pure: bool,
    pub complex: bool,
    pub weakly_para_complex: bool,
    pub para_complex: bool,
    /// Degree 1 or 2 when some nonzero nilpotent `A` leaves `U` invariant.
    pub nilpotent: Option<u8>,
    pub real: bool,
    pub hermitian: bool,
    pub totally_complex: bool,
    pub totally_para_complex: bool,
    pub totally_real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub dim: usize,
    pub flags: Flags,
    pub witnesses: Witnesses,
    pub stabilizer: Vec<Operator>,
    pub signature: SignatureTriple,
    pub u0: Subspace,
    /// Injective graph presentation, when `U` has a transversal direction.
    pub uft: Option<UftForm>,
}

impl ClassificationReport {
    /// Implications that hold between the flags of any report.
    pub fn is_consistent(&self) -> bool {
        let f = &self.flags;
        let implies = |a: bool, b: bool| !a || b;
        implies(f.totally_complex, f.complex && f.hermitian)
            && implies(f.totally_para_complex, f.para_complex && f.hermitian)
            && implies(f.totally_real, f.real && f.hermitian)
            && implies(f.real, f.pure)
            && implies(f.para_complex, f.weakly_para_complex)
            && implies(f.para_quaternionic, self.dim % 2 == 0)
            && implies(f.para_quaternionic && f.hermitian, self.signature.p == self.signature.q)
    }
}

/// Trace of `A|U` as a linear functional on the stabilizer, and its kernel.
fn traceless_part(u: &Subspace, s: &Stabilizer) -> Vec<Operator> {
    let basis = s.basis();
    let traces: Vec<Rational> =
        basis.iter().map(|a| operator_on(u, a).expect("stabilizer element").trace()).collect();
    let sys = Matrix::from_rows(basis.len(), &[traces]);
    sys.kernel()
        .iter()
        .map(|c| basis.iter().zip(c).fold(Operator::from_ints(0, 0, 0), |acc, (a, x)| acc.add(&a.scale(x))))
        .collect()
}

pub fn classify(sp: &ModelSpace, u: &Subspace) -> ClassificationReport {
    let stab = stabilizer(u);
    let sig = signature_of(&gram(sp, u));
    let u0 = maximal_pq(u);
    let uft = injective_presentation(sp, u);
    let mut w = kind_witnesses(&stab);
    if !stab.basis().is_empty() {
        w.para_complex = find_with_sign(&traceless_part(u, &stab), -1);
    }
    let nilpotent = if u.is_zero() {
        w.nilpotent = Some(Operator::i().sub(&Operator::j()));
        Some(1)
    } else {
        let cands = nilpotent_candidates(&stab);
        match cands.iter().find(|a| image(a, u).is_zero()) {
            Some(a) => {
                w.nilpotent = Some(a.clone());
                Some(1)
            }
            None => cands.first().map(|a| {
                w.nilpotent = Some(a.clone());
                2
            }),
        }
    };
    let pure = u0.is_zero();
    let hermitian = sig.is_nondegenerate();
    let real = is_real(sp, u);
    let totally_complex = u.is_zero()
        || (pure
            && hermitian
            && w.complex.as_ref().is_some_and(|a| check_complex(sp, u, a).is_ok_and(|c| c.totally_complex)));
    let totally_para_complex = u.is_zero()
        || (pure
            && hermitian
            && w.para_complex.as_ref().is_some_and(|a| check_para_complex(sp, u, a).is_ok_and(|c| c.totally_para_complex)));
    let totally_real = u.is_zero() || (real && hermitian && check_totally_real(sp, u).is_ok_and(|c| c.conditions));
    let flags = Flags {
        para_quaternionic: stab.dim() == 3,
        pure,
        complex: w.complex.is_some(),
        weakly_para_complex: w.weakly_para_complex.is_some(),
        para_complex: w.para_complex.is_some(),
        nilpotent,
        real,
        hermitian,
        totally_complex,
        totally_para_complex,
        totally_real,
    };
    ClassificationReport {
        dim: u.dim(),
        flags,
        witnesses: w,
        stabilizer: stab.basis(),
        signature: sig,
        u0,
        uft,
    }
}

#[cfg(test)]
mod tests;

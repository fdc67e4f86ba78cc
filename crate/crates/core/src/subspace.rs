//! Subspaces of ℚ^N in reduced row echelon form, lattice operations, and the
//! metric-dependent constructions on `V = H ⊗ E`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::matrix::{gram_of, is_zero_vec, Matrix};
use crate::model::{split, HBasisChange, ModelSpace, Operator};
use crate::rational::{sign, Rational};

/// Reduced echelon basis of the span of `vectors` in `ℚ^dim`.
pub fn echelon_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    Matrix::from_rows(dim, vectors).rref().0.to_rows()
}

/// A linear subspace stored by its unique reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl core::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let (basis, pivots) = Matrix::from_rows(ambient, vectors).rref();
        Subspace { ambient, basis, pivots }
    }

    pub fn from_matrix(rows: &Matrix) -> Self {
        let (basis, pivots) = rows.rref();
        Subspace { ambient: rows.cols(), basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::new(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_matrix(&Matrix::identity(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in rest.iter_mut().zip(self.basis.row(i)) {
                *r -= c * b;
            }
        }
        is_zero_vec(&rest).then_some(coeffs)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Self::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Vectors `y` with `b·y = 0` for every basis row `b`.
    pub fn annihilator(&self) -> Subspace {
        Subspace::new(self.ambient, &self.annihilator_rows())
    }

    /// Spanning rows of the annihilator, read off the echelon basis without elimination.
    pub fn annihilator_rows(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.ambient];
                v[free] = Rational::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.basis[(i, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let mut rows = self.annihilator_rows();
        rows.extend(other.annihilator_rows());
        Subspace::new(self.ambient, &Matrix::from_rows(self.ambient, &rows).kernel())
    }

    /// Span of `M·b` over the basis.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::new(m.rows(), &rows)
    }

    pub fn map(&self, f: impl Fn(&[Rational]) -> Vec<Rational>, target_dim: usize) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.vectors().iter().map(|v| f(v)).collect();
        Subspace::new(target_dim, &rows)
    }

    /// `{x ∈ self : M x ∈ target}`.
    pub fn preimage_within(&self, m: &Matrix, target: &Subspace) -> Subspace {
        let basis = self.vectors();
        if basis.is_empty() {
            return self.clone();
        }
        let ann = target.annihilator_rows();
        // coefficient vectors c with ann · M · (Σ c_i b_i) = 0
        let images: Vec<Vec<Rational>> = basis.iter().map(|b| m.mul_vec(b)).collect();
        let sys = Matrix::from_fn(ann.len(), basis.len(), |r, c| crate::matrix::dot(&ann[r], &images[c]));
        let rows: Vec<Vec<Rational>> = sys.kernel().iter().map(|c| combine(&basis, c)).collect();
        Subspace::new(self.ambient, &rows)
    }

    /// Deterministic complement of `self` inside `sup`: basis vectors of `sup`, in
    /// echelon order, that are independent of what came before.
    pub fn complement_in(&self, sup: &Subspace) -> Subspace {
        debug_assert!(sup.contains(self));
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for v in sup.vectors() {
            if acc.dim() == sup.dim() {
                break;
            }
            if !acc.contains_vector(&v) {
                acc = acc.sum(&Subspace::new(self.ambient, core::slice::from_ref(&v)));
                chosen.push(v);
            }
        }
        Subspace::new(self.ambient, &chosen)
    }

    /// Complement in the ambient space by echelon completion with unit vectors.
    pub fn complement(&self) -> Subspace {
        self.complement_in(&Subspace::full(self.ambient))
    }
}

/// `Σ c_i v_i`
pub fn combine(vectors: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let dim = vectors.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); dim];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Inertia `(p, s, q)`: positive, null and negative dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignatureTriple {
    pub p: usize,
    pub s: usize,
    pub q: usize,
}

impl SignatureTriple {
    pub fn new(p: usize, s: usize, q: usize) -> Self {
        SignatureTriple { p, s, q }
    }

    pub fn dim(&self) -> usize {
        self.p + self.s + self.q
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.s == 0
    }
}

/// Sylvester inertia of a symmetric matrix by symmetric Gaussian congruence.
///
/// Pivots on the first nonzero diagonal entry; when the remaining diagonal is zero but
/// some off-diagonal entry `b = a_ij` is not, the hyperbolic block on `{i, j}` contributes
/// one positive and one negative square.
pub fn signature_of(m: &Matrix) -> SignatureTriple {
    assert!(m.is_symmetric(), "signature needs a symmetric matrix");
    let mut a = m.clone();
    let mut alive: Vec<usize> = (0..a.rows()).collect();
    let mut sig = SignatureTriple::default();
    while !alive.is_empty() {
        if let Some(pos) = alive.iter().position(|&i| !a[(i, i)].is_zero()) {
            let i = alive.remove(pos);
            let d = a[(i, i)].clone();
            if sign(&d) > 0 {
                sig.p += 1;
            } else {
                sig.q += 1;
            }
            for &r in &alive {
                if a[(r, i)].is_zero() {
                    continue;
                }
                let f = &a[(r, i)] / &d;
                for &c in &alive {
                    let v = &f * &a[(i, c)];
                    a[(r, c)] -= v;
                }
            }
            continue;
        }
        let pair = alive
            .iter()
            .enumerate()
            .flat_map(|(x, &i)| alive[x + 1..].iter().map(move |&j| (i, j)))
            .find(|&(i, j)| !a[(i, j)].is_zero());
        let Some((i, j)) = pair else {
            sig.s += alive.len();
            break;
        };
        alive.retain(|&x| x != i && x != j);
        sig.p += 1;
        sig.q += 1;
        let b = a[(i, j)].clone();
        let mut update = Vec::new();
        for &k in &alive {
            for &l in &alive {
                let v = (&a[(k, i)] * &a[(j, l)] + &a[(k, j)] * &a[(i, l)]) / &b;
                update.push((k, l, v));
            }
        }
        for (k, l, v) in update {
            a[(k, l)] -= v;
        }
    }
    sig
}

/// Gram matrix of the metric `g` on the echelon basis.
pub fn gram(sp: &ModelSpace, u: &Subspace) -> Matrix {
    gram_of(&u.vectors(), |x, y| sp.metric(x, y))
}

pub fn signature(sp: &ModelSpace, u: &Subspace) -> SignatureTriple {
    signature_of(&gram(sp, u))
}

/// Gram matrix of `ω^E` on a basis of a subspace of `E`.
pub fn omega_gram(sp: &ModelSpace, f: &Subspace) -> Matrix {
    gram_of(&f.vectors(), |x, y| sp.omega(x, y))
}

/// `ω^E` restricted to the subspace is nondegenerate.
pub fn is_symplectic(sp: &ModelSpace, f: &Subspace) -> bool {
    f.is_zero() || !omega_gram(sp, f).determinant().is_zero()
}

/// `{b ∈ B : ω^E(a, b) = 0 for all a ∈ A}`, the kernel of `ω^E(A × B)` taken in `B`.
pub fn omega_kernel_in(sp: &ModelSpace, a: &Subspace, b: &Subspace) -> Subspace {
    let bv = b.vectors();
    if bv.is_empty() {
        return b.clone();
    }
    let av = a.vectors();
    let sys = Matrix::from_fn(av.len(), bv.len(), |r, c| sp.omega(&av[r], &bv[c]));
    let rows: Vec<Vec<Rational>> = sys.kernel().iter().map(|c| combine(&bv, c)).collect();
    Subspace::new(b.ambient(), &rows)
}

/// `{Y : g(X, Y) = 0 for all X ∈ U}`.
pub fn ortho_complement(sp: &ModelSpace, u: &Subspace) -> Subspace {
    let sys = u.basis().mul_mat(&sp.metric_matrix());
    Subspace::new(sp.dim(), &sys.kernel())
}

pub fn image(a: &Operator, u: &Subspace) -> Subspace {
    u.map(|x| a.apply(x), u.ambient())
}

/// `(p₁(U), p₂(U))` with respect to the basis `(h₁′, h₂′)` given by `basis`.
pub fn p1p2(u: &Subspace, basis: &HBasisChange) -> (Subspace, Subspace) {
    let m = u.ambient() / 2;
    let new: Vec<Vec<Rational>> = u.vectors().iter().map(|x| basis.to_new(x)).collect();
    let e1: Vec<Vec<Rational>> = new.iter().map(|x| split(x).0.to_vec()).collect();
    let e2: Vec<Vec<Rational>> = new.iter().map(|x| split(x).1.to_vec()).collect();
    (Subspace::new(m, &e1), Subspace::new(m, &e2))
}

/// `U₀ = U ∩ IU ∩ JU ∩ KU`, the largest para-quaternionic subspace of `U`.
///
/// Computed as `H ⊗ E₀` with `E₀ = {e : h₁⊗e ∈ U and h₂⊗e ∈ U}`.
pub fn maximal_pq(u: &Subspace) -> Subspace {
    let n = u.ambient();
    let m = n / 2;
    let ann = u.annihilator_rows();
    if ann.is_empty() {
        return u.clone();
    }
    let sys = Matrix::from_fn(2 * ann.len(), m, |r, c| ann[r / 2][(r % 2) * m + c].clone());
    let e0 = Subspace::new(m, &sys.kernel());
    let mut rows = Vec::with_capacity(2 * e0.dim());
    for half in 0..2 {
        for e in e0.vectors() {
            let mut v = vec![Rational::zero(); n];
            v[half * m..(half + 1) * m].clone_from_slice(&e);
            rows.push(v);
        }
    }
    Subspace::new(n, &rows)
}

/// `H ⊗ E′` for a subspace `E′ ⊆ E`.
pub fn h_tensor(sp: &ModelSpace, e: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for v in e.vectors() {
        rows.push(sp.tensor(&[Rational::from_integer(1.into()), Rational::zero()], &v));
        rows.push(sp.tensor(&[Rational::zero(), Rational::from_integer(1.into())], &v));
    }
    Subspace::new(sp.dim(), &rows)
}

/// `h ⊗ E′`.
pub fn decomposable(sp: &ModelSpace, h: &[Rational], e: &Subspace) -> Subspace {
    let rows: Vec<Vec<Rational>> = e.vectors().iter().map(|v| sp.tensor(h, v)).collect();
    Subspace::new(sp.dim(), &rows)
}

/// The fiber `{e : h ⊗ e ∈ U}` as a subspace of `E`.
pub fn fiber(sp: &ModelSpace, u: &Subspace, h: &[Rational]) -> Subspace {
    let m = sp.e_dim();
    let units: Vec<Vec<Rational>> = (0..m).map(|i| sp.tensor(h, &sp.unit_e(i))).collect();
    let ann = u.annihilator_rows();
    let sys = Matrix::from_fn(ann.len(), m, |r, c| crate::matrix::dot(&ann[r], &units[c]));
    Subspace::new(m, &sys.kernel())
}

/// `X = h₁⊗e + h₂⊗e′` is decomposable iff `e` and `e′` are linearly dependent.
pub fn is_decomposable_vector(x: &[Rational]) -> bool {
    let (e, ep) = split(x);
    Matrix::from_rows(e.len(), &[e.to_vec(), ep.to_vec()]).rank() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn lattice_basics() {
        let a = Subspace::new(4, &[v(&[1, 0, 0, 0]), v(&[1, 1, 0, 0])]);
        let b = Subspace::new(4, &[v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]);
        assert_eq!(a.intersect(&b), Subspace::new(4, &[v(&[0, 1, 0, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.complement().dim(), 2);
        assert_eq!(a.complement().sum(&a), Subspace::full(4));
        assert_eq!(a.coordinates(&v(&[2, 3, 0, 0])), Some(v(&[2, 3])));
        assert_eq!(a.coordinates(&v(&[0, 0, 1, 0])), None);
    }

    #[test]
    fn signatures() {
        let m = Matrix::from_rows(2, &[v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(signature_of(&m), SignatureTriple::new(1, 0, 1));
        let m = Matrix::from_rows(3, &[v(&[1, 2, 0]), v(&[2, 1, 0]), v(&[0, 0, 0])]);
        assert_eq!(signature_of(&m), SignatureTriple::new(1, 1, 1));
        let sp = ModelSpace::standard(1);
        assert_eq!(signature(&sp, &Subspace::full(4)), SignatureTriple::new(2, 0, 2));
    }

    #[test]
    fn maximal_pq_examples() {
        let sp = ModelSpace::standard(1);
        let u = Subspace::new(4, &[v(&[1, 0, 0, 1]), v(&[0, 1, -1, 0])]);
        assert!(maximal_pq(&u).is_zero());
        let he1 = h_tensor(&sp, &Subspace::new(2, &[v(&[1, 0])]));
        assert_eq!(maximal_pq(&he1), he1);
    }

    #[test]
    fn projections() {
        let sp = ModelSpace::standard(1);
        let e = Subspace::new(2, &[v(&[1, 1])]);
        let u = h_tensor(&sp, &e);
        assert_eq!(p1p2(&u, &HBasisChange::identity()), (e.clone(), e));
        let f = fiber(&sp, &u, &v(&[1, 0]));
        assert_eq!(f, Subspace::new(2, &[v(&[1, 1])]));
    }

    #[test]
    fn ortho_complement_of_isotropic_line() {
        let sp = ModelSpace::standard(1);
        let u = Subspace::new(4, &[v(&[1, 0, 0, 0])]);
        let perp = ortho_complement(&sp, &u);
        assert_eq!(perp.dim(), 3);
        assert!(perp.contains(&u));
    }
}

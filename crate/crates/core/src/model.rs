//! The standard model `H² ⊗ E^{2n}` with its para-quaternionic structure and metric.
//!
//! Vectors are stored in the coordinate order
//! `(h₁⊗e₁, …, h₁⊗e_{2n}, h₂⊗e₁, …, h₂⊗e_{2n})`, so a coordinate vector is the
//! concatenation of `e` and `e′` for `X = h₁⊗e + h₂⊗e′`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{is_zero_vec, Matrix};
use crate::pq::ParaQuaternion;
use crate::rational::{int, Rational};

/// `V = H ⊗ E` with `dim E = 2n`, a symplectic `ω^E`, and `ω^H(h₁, h₂) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpace {
    n: usize,
    omega_e: Matrix,
}

impl ModelSpace {
    pub fn new(omega_e: Matrix) -> Result<Self> {
        let (r, c) = (omega_e.rows(), omega_e.cols());
        if r != c || r == 0 || r % 2 != 0 {
            return Err(Error::BadShape { rows: r, cols: c });
        }
        if !omega_e.is_skew() {
            return Err(Error::NotSkew);
        }
        if omega_e.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(ModelSpace { n: r / 2, omega_e })
    }

    /// `ω^E(e_{2i−1}, e_{2i}) = 1`, all other pairings between the planes zero.
    pub fn standard(n: usize) -> Self {
        assert!(n > 0);
        let mut w = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            w[(2 * i, 2 * i + 1)] = Rational::one();
            w[(2 * i + 1, 2 * i)] = -Rational::one();
        }
        ModelSpace { n, omega_e: w }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim E = 2n`.
    pub fn e_dim(&self) -> usize {
        2 * self.n
    }

    /// `dim V = 4n`.
    pub fn dim(&self) -> usize {
        4 * self.n
    }

    pub fn omega_e(&self) -> &Matrix {
        &self.omega_e
    }

    pub fn omega(&self, e: &[Rational], f: &[Rational]) -> Rational {
        self.omega_e.bilinear(e, f)
    }

    pub fn check_vector(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    /// `g(X, Y) = ω^E(e, f′) − ω^E(e′, f)` for `X = h₁⊗e + h₂⊗e′`, `Y = h₁⊗f + h₂⊗f′`.
    pub fn metric(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let m = self.e_dim();
        self.omega(&x[..m], &y[m..]) - self.omega(&x[m..], &y[..m])
    }

    /// Gram matrix of `g` on the coordinate basis: `[[0, Ω], [−Ω, 0]]`.
    pub fn metric_matrix(&self) -> Matrix {
        let m = self.e_dim();
        Matrix::from_fn(2 * m, 2 * m, |r, c| match (r < m, c < m) {
            (true, false) => self.omega_e[(r, c - m)].clone(),
            (false, true) => -self.omega_e[(r - m, c)].clone(),
            _ => Rational::zero(),
        })
    }

    /// `X·Y = g(X,Y) + i·g(X,IY) − j·g(X,JY) − k·g(X,KY)` for the admissible basis `(I, J, K)`.
    pub fn hermitian_product(&self, x: &[Rational], y: &[Rational], basis: &AdmissibleBasis) -> ParaQuaternion {
        ParaQuaternion::new(
            self.metric(x, y),
            self.metric(x, &basis.i.apply(y)),
            -self.metric(x, &basis.j.apply(y)),
            -self.metric(x, &basis.k.apply(y)),
        )
    }

    /// The decomposable vector `h ⊗ e` for `h = (x, y)` in `(h₁, h₂)` coordinates.
    pub fn tensor(&self, h: &[Rational], e: &[Rational]) -> Vec<Rational> {
        assert_eq!(h.len(), 2);
        assert_eq!(e.len(), self.e_dim());
        e.iter().map(|c| c * &h[0]).chain(e.iter().map(|c| c * &h[1])).collect()
    }

    pub fn unit_e(&self, i: usize) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); self.e_dim()];
        e[i] = Rational::one();
        e
    }

    /// Recovers `ω^E` from the Gram matrix of a metric on `V` in model coordinates.
    ///
    /// With `(h, h′)` the columns of `basis`, the value `g(h⊗e_a, h′⊗e_b) / ω^H(h, h′)` is
    /// evaluated for the pairs `(h, h′)`, `(h′, h)`, `(h + h′, h′)`, `(h, h + h′)`; all must
    /// agree, and `g(h⊗e, h⊗e′)` must vanish, otherwise the metric is not of the form
    /// `ω^H ⊗ ω^E`.
    pub fn recover_omega_e(gram: &Matrix, basis: &HBasisChange) -> Result<Matrix> {
        let dim = gram.rows();
        if !gram.is_square() || dim == 0 || dim % 4 != 0 {
            return Err(Error::BadShape { rows: gram.rows(), cols: gram.cols() });
        }
        let m = dim / 2;
        let h = basis.h1();
        let hp = basis.h2();
        let sum: Vec<Rational> = vec![&h[0] + &hp[0], &h[1] + &hp[1]];
        let pairs = [(&h, &hp), (&hp, &h), (&sum, &hp), (&h, &sum)];
        let tensor = |hv: &[Rational], a: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[a] = hv[0].clone();
            v[m + a] = hv[1].clone();
            v
        };
        let omega_h = |a: &[Rational], b: &[Rational]| &a[0] * &b[1] - &a[1] * &b[0];
        let mut result: Option<Matrix> = None;
        for (x, y) in pairs {
            let w = omega_h(x, y);
            let cand = Matrix::from_fn(m, m, |a, b| gram.bilinear(&tensor(x, a), &tensor(y, b)) / &w);
            match &result {
                None => result = Some(cand),
                Some(r) if *r != cand => return Err(Error::NotHermitian("ω^E depends on the chosen pair of H")),
                _ => {}
            }
        }
        for hv in [&h, &hp] {
            for a in 0..m {
                for b in 0..m {
                    if !gram.bilinear(&tensor(hv, a), &tensor(hv, b)).is_zero() {
                        return Err(Error::NotHermitian("h ⊗ E is not isotropic"));
                    }
                }
            }
        }
        let w = result.expect("at least one pair");
        if !w.is_skew() {
            return Err(Error::NotHermitian("recovered ω^E is not skew"));
        }
        if w.determinant().is_zero() {
            return Err(Error::NotHermitian("recovered ω^E is degenerate"));
        }
        let model = ModelSpace { n: m / 2, omega_e: w.clone() };
        if model.metric_matrix() != *gram {
            return Err(Error::NotHermitian("metric is not ω^H ⊗ ω^E"));
        }
        Ok(w)
    }
}

/// Split `X` into `(e, e′)`.
pub fn split(x: &[Rational]) -> (&[Rational], &[Rational]) {
    x.split_at(x.len() / 2)
}

/// `h₁⊗e + h₂⊗e′` from its parts.
pub fn join(e: &[Rational], ep: &[Rational]) -> Vec<Rational> {
    e.iter().chain(ep.iter()).cloned().collect()
}

/// `X = h₁⊗e + h₂⊗e′`, kept as its two `E`-components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub e: Vec<Rational>,
    pub e_prime: Vec<Rational>,
}

impl Vector {
    pub fn from_coords(x: &[Rational]) -> Self {
        let (e, ep) = split(x);
        Vector { e: e.to_vec(), e_prime: ep.to_vec() }
    }

    pub fn coords(&self) -> Vec<Rational> {
        join(&self.e, &self.e_prime)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.e) && is_zero_vec(&self.e_prime)
    }
}

/// `A = αI + βJ + γK` in the fixed admissible basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Operator {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Operator {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Operator { alpha, beta, gamma }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(int(a), int(b), int(c))
    }

    pub fn from_coords(v: &[Rational]) -> Self {
        Self::new(v[0].clone(), v[1].clone(), v[2].clone())
    }

    pub fn coords(&self) -> Vec<Rational> {
        vec![self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn i() -> Self {
        Self::from_ints(1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    /// `q(A) = α² − β² − γ²`, so that `A² = −q(A)·Id`.
    pub fn q(&self) -> Rational {
        &self.alpha * &self.alpha - &self.beta * &self.beta - &self.gamma * &self.gamma
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.alpha * s, &self.beta * s, &self.gamma * s)
    }

    pub fn add(&self, o: &Operator) -> Self {
        Self::new(&self.alpha + &o.alpha, &self.beta + &o.beta, &self.gamma + &o.gamma)
    }

    pub fn sub(&self, o: &Operator) -> Self {
        Self::new(&self.alpha - &o.alpha, &self.beta - &o.beta, &self.gamma - &o.gamma)
    }

    /// Action on `H`: `[[−γ, β − α], [α + β, γ]]`, the image of `αi + βj + γk` under Φ.
    pub fn h_matrix(&self) -> Matrix {
        ParaQuaternion::new(Rational::zero(), self.alpha.clone(), self.beta.clone(), self.gamma.clone()).to_mat2()
    }

    /// Inverse of [`Operator::h_matrix`] on traceless matrices.
    pub fn from_h_matrix(m: &Matrix) -> Self {
        debug_assert!(m.trace().is_zero());
        let half = Rational::new(1.into(), 2.into());
        Self::new(
            (&m[(1, 0)] - &m[(0, 1)]) * &half,
            (&m[(0, 1)] + &m[(1, 0)]) * &half,
            -m[(0, 0)].clone(),
        )
    }

    /// Matrix of `A ⊗ Id` on `H ⊗ ℚ^m` in block coordinates.
    pub fn matrix(&self, m: usize) -> Matrix {
        let h = self.h_matrix();
        Matrix::from_fn(2 * m, 2 * m, |r, c| if r % m == c % m { h[(r / m, c / m)].clone() } else { Rational::zero() })
    }

    /// `A(h₁⊗e + h₂⊗e′) = h₁⊗(−γe + (β−α)e′) + h₂⊗((α+β)e + γe′)`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        let (e, ep) = split(x);
        let h = self.h_matrix();
        let top = e.iter().zip(ep).map(|(a, b)| &h[(0, 0)] * a + &h[(0, 1)] * b);
        let bottom: Vec<Rational> = e.iter().zip(ep).map(|(a, b)| &h[(1, 0)] * a + &h[(1, 1)] * b).collect();
        top.chain(bottom).collect()
    }

    pub fn apply_vector(&self, x: &Vector) -> Vector {
        Vector::from_coords(&self.apply(&x.coords()))
    }

    /// Lie bracket `[A, B] = AB − BA`.
    pub fn bracket(&self, o: &Operator) -> Self {
        let (a, b) = (self.h_matrix(), o.h_matrix());
        Self::from_h_matrix(&a.mul_mat(&b).sub(&b.mul_mat(&a)))
    }
}

pub fn apply_operator(a: &Operator, x: &Vector) -> Vector {
    a.apply_vector(x)
}

/// An element `S ∈ SL(H)`; its columns are the new basis `(h₁′, h₂′)` in old coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HBasisChange {
    s: Matrix,
}

impl HBasisChange {
    pub fn new(s: Matrix) -> Result<Self> {
        if s.rows() != 2 || s.cols() != 2 {
            return Err(Error::BadShape { rows: s.rows(), cols: s.cols() });
        }
        let d = s.determinant();
        if !d.is_one() {
            return Err(Error::DeterminantNotOne(alloc::format!("{}", d)));
        }
        Ok(HBasisChange { s })
    }

    pub fn identity() -> Self {
        HBasisChange { s: Matrix::identity(2) }
    }

    /// Basis with the given first vector and second vector chosen so the determinant is 1.
    pub fn from_columns(h1: &[Rational], h2: &[Rational]) -> Result<Self> {
        Self::new(Matrix::from_cols(2, &[h1.to_vec(), h2.to_vec()]))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.s
    }

    pub fn h1(&self) -> Vec<Rational> {
        self.s.col_vec(0)
    }

    pub fn h2(&self) -> Vec<Rational> {
        self.s.col_vec(1)
    }

    pub fn inverse(&self) -> Self {
        HBasisChange { s: self.s.inverse().expect("det 1") }
    }

    /// `self` followed by `next` (columns of `next` read in the basis of `self`).
    pub fn then(&self, next: &HBasisChange) -> Self {
        HBasisChange { s: self.s.mul_mat(&next.s) }
    }

    /// Old coordinates of `h₁′⊗f + h₂′⊗f′`.
    pub fn to_old(&self, x_new: &[Rational]) -> Vec<Rational> {
        mix(&self.s, x_new)
    }

    /// New coordinates of a vector given in old coordinates.
    pub fn to_new(&self, x_old: &[Rational]) -> Vec<Rational> {
        mix(&self.s.inverse().expect("det 1"), x_old)
    }

    /// The operators whose matrices in the new basis are the standard `I, J, K`.
    pub fn admissible_basis(&self) -> AdmissibleBasis {
        let inv = self.s.inverse().expect("det 1");
        let conj = |a: Operator| Operator::from_h_matrix(&self.s.mul_mat(&a.h_matrix()).mul_mat(&inv));
        AdmissibleBasis { i: conj(Operator::i()), j: conj(Operator::j()), k: conj(Operator::k()) }
    }
}

fn mix(s: &Matrix, x: &[Rational]) -> Vec<Rational> {
    let (e, ep) = split(x);
    let top = e.iter().zip(ep).map(|(a, b)| &s[(0, 0)] * a + &s[(0, 1)] * b);
    let bottom: Vec<Rational> = e.iter().zip(ep).map(|(a, b)| &s[(1, 0)] * a + &s[(1, 1)] * b).collect();
    top.chain(bottom).collect()
}

/// Coordinates of `A` with respect to the admissible basis attached to `S`: the
/// endomorphism `S⁻¹ A S` of `H` read back in standard coordinates.
pub fn change_admissible_basis(s: &HBasisChange, a: &Operator) -> Operator {
    let inv = s.s.inverse().expect("det 1");
    Operator::from_h_matrix(&inv.mul_mat(&a.h_matrix()).mul_mat(&s.s))
}

/// Inverse of [`change_admissible_basis`]: the operator whose matrix in the basis `S` is that of `a`.
pub fn operator_from_basis(s: &HBasisChange, a: &Operator) -> Operator {
    let inv = s.s.inverse().expect("det 1");
    Operator::from_h_matrix(&s.s.mul_mat(&a.h_matrix()).mul_mat(&inv))
}

/// A para-hypercomplex triple `(I, J, K)` spanning the structure, in standard coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleBasis {
    pub i: Operator,
    pub j: Operator,
    pub k: Operator,
}

impl AdmissibleBasis {
    pub fn standard() -> Self {
        AdmissibleBasis { i: Operator::i(), j: Operator::j(), k: Operator::k() }
    }
}

/// Result of [`standardize`]: `V ≅ H ⊗ ℚ^m`, with `basis` holding the images of
/// `h₁⊗e₁, …, h₁⊗e_m, h₂⊗e₁, …, h₂⊗e_m` as columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardization {
    pub m: usize,
    pub basis: Matrix,
}

impl Standardization {
    /// `P⁻¹ X P` equals the model matrix of `X` for each of `I, J, K`.
    pub fn intertwines(&self, i: &Matrix, j: &Matrix, k: &Matrix) -> bool {
        let Some(inv) = self.basis.inverse() else {
            return false;
        };
        [(i, Operator::i()), (j, Operator::j()), (k, Operator::k())]
            .iter()
            .all(|(x, op)| inv.mul_mat(x).mul_mat(&self.basis) == op.matrix(self.m))
    }
}

/// Puts an abstract para-hypercomplex triple into the standard form.
///
/// Takes the reduced echelon basis `e_i` of `ker(J − Id)` and maps
/// `h₁⊗e_i ↦ (e_i − Ke_i)/2`, `h₂⊗e_i ↦ (e_i + Ke_i)/2`.
pub fn standardize(i: &Matrix, j: &Matrix, k: &Matrix) -> Result<Standardization> {
    let n = i.rows();
    for x in [i, j, k] {
        if !x.is_square() || x.rows() != n {
            return Err(Error::BadShape { rows: x.rows(), cols: x.cols() });
        }
    }
    if n == 0 || n % 2 != 0 {
        return Err(Error::BadShape { rows: n, cols: n });
    }
    let id = Matrix::identity(n);
    let neg_id = id.scale(&-Rational::one());
    if i.mul_mat(i) != neg_id {
        return Err(Error::RelationsViolated("I² ≠ −Id"));
    }
    if j.mul_mat(j) != id {
        return Err(Error::RelationsViolated("J² ≠ Id"));
    }
    if k.mul_mat(k) != id {
        return Err(Error::RelationsViolated("K² ≠ Id"));
    }
    if i.mul_mat(j) != *k {
        return Err(Error::RelationsViolated("IJ ≠ K"));
    }
    if j.mul_mat(i) != k.scale(&-Rational::one()) {
        return Err(Error::RelationsViolated("JI ≠ −K"));
    }
    let plus = j.sub(&id).kernel();
    let minus = j.add(&id).kernel();
    if plus.len() != minus.len() {
        return Err(Error::UnequalEigenspaces { plus: plus.len(), minus: minus.len() });
    }
    let plus = crate::subspace::echelon_basis(&plus, n);
    let half = Rational::new(1.into(), 2.into());
    let m = plus.len();
    let mut cols = Vec::with_capacity(2 * m);
    for e in &plus {
        let ke = k.mul_vec(e);
        cols.push(e.iter().zip(&ke).map(|(a, b)| (a - b) * &half).collect::<Vec<_>>());
    }
    for e in &plus {
        let ke = k.mul_vec(e);
        cols.push(e.iter().zip(&ke).map(|(a, b)| (a + b) * &half).collect::<Vec<_>>());
    }
    Ok(Standardization { m, basis: Matrix::from_cols(n, &cols) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn operator_action_on_decomposables() {
        let sp = ModelSpace::standard(1);
        let e1 = sp.unit_e(0);
        let h1e1 = sp.tensor(&v(&[1, 0]), &e1);
        let h2e1 = sp.tensor(&v(&[0, 1]), &e1);
        assert_eq!(Operator::i().apply(&h1e1), h2e1);
        assert_eq!(Operator::k().apply(&h2e1), h2e1);
        assert_eq!(Operator::k().apply(&h1e1), h1e1.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(is_zero_vec(&Operator::from_ints(1, 1, 0).apply(&h2e1)));
    }

    #[test]
    fn matrix_roundtrip() {
        let a = Operator::new(frac(1, 2), int(-3), int(2));
        assert_eq!(Operator::from_h_matrix(&a.h_matrix()), a);
        assert_eq!(Operator::i().bracket(&Operator::j()), Operator::from_ints(0, 0, 2));
    }

    #[test]
    fn metric_values() {
        let sp = ModelSpace::standard(1);
        let x = sp.tensor(&v(&[1, 0]), &sp.unit_e(0));
        let y = sp.tensor(&v(&[0, 1]), &sp.unit_e(1));
        assert_eq!(sp.metric(&x, &y), int(1));
        assert_eq!(sp.metric(&x, &x), int(0));
        assert_eq!(sp.metric_matrix().bilinear(&x, &y), int(1));
    }

    #[test]
    fn hermitian_product_example() {
        let sp = ModelSpace::standard(1);
        let x = sp.tensor(&v(&[1, 0]), &sp.unit_e(0));
        let y = sp.tensor(&v(&[0, 1]), &sp.unit_e(1));
        let p = sp.hermitian_product(&x, &y, &AdmissibleBasis::standard());
        assert_eq!(p, ParaQuaternion::from_ints(1, 0, 0, -1));
        assert_eq!(p.imaginary_part().norm(), int(-1));
        assert!(sp.hermitian_product(&x, &x, &AdmissibleBasis::standard()).is_zero());
    }

    #[test]
    fn basis_change_of_k() {
        let s = HBasisChange::new(Matrix::from_rows(2, &[v(&[0, -1]), v(&[1, 0])])).unwrap();
        assert_eq!(change_admissible_basis(&s, &Operator::k()), Operator::from_ints(0, 0, -1));
        assert_eq!(change_admissible_basis(&HBasisChange::identity(), &Operator::k()), Operator::k());
        assert!(HBasisChange::new(Matrix::identity(2).scale(&int(2))).is_err());
    }

    #[test]
    fn coordinates_in_new_basis() {
        let s = HBasisChange::new(Matrix::from_rows(2, &[v(&[1, 1]), v(&[0, 1])])).unwrap();
        let x = v(&[1, 2, 3, 4]);
        assert_eq!(s.to_old(&s.to_new(&x)), x);
        // h₁′ = h₁, so h₁′⊗e₁ is h₁⊗e₁ in old coordinates
        assert_eq!(s.to_old(&v(&[1, 0, 0, 0])), v(&[1, 0, 0, 0]));
        assert_eq!(s.to_old(&v(&[0, 0, 1, 0])), v(&[1, 0, 1, 0]));
    }

    #[test]
    fn rejects_bad_omega() {
        assert_eq!(ModelSpace::new(Matrix::zeros(2, 2)), Err(Error::Degenerate));
        assert_eq!(ModelSpace::new(Matrix::identity(2)), Err(Error::NotSkew));
        assert!(matches!(ModelSpace::new(Matrix::zeros(3, 3)), Err(Error::BadShape { .. })));
    }

    #[test]
    fn omega_recovery() {
        let sp = ModelSpace::standard(2);
        let w = ModelSpace::recover_omega_e(&sp.metric_matrix(), &HBasisChange::identity()).unwrap();
        assert_eq!(&w, sp.omega_e());
        let mut bad = sp.metric_matrix();
        bad[(0, 6)] += int(1);
        bad[(6, 0)] += int(1);
        assert!(ModelSpace::recover_omega_e(&bad, &HBasisChange::identity()).is_err());
    }

    #[test]
    fn standard_structure_is_fixed() {
        let (i, j, k) = (Operator::i().matrix(2), Operator::j().matrix(2), Operator::k().matrix(2));
        let st = standardize(&i, &j, &k).unwrap();
        assert!(st.intertwines(&i, &j, &k));
        assert_eq!(st.basis, Matrix::identity(4));
    }

    #[test]
    fn standardize_rejects_broken_relations() {
        let id = Matrix::identity(4);
        let i = Operator::i().matrix(2);
        assert!(matches!(standardize(&i, &id, &i), Err(Error::RelationsViolated(_))));
    }
}

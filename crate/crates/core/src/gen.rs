//! Seeded random instances, built constructively for each subspace kind.
//!
//! Random rationals have numerator uniform in `[−9, 9]` and denominator uniform in `{1, 2, 3}`,
//! both drawn as `next_u64() % len`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;
use rand_core::RngCore;

use crate::classify::is_real;
use crate::matrix::{add_vec, scale_vec, Matrix};
use crate::model::{join, HBasisChange, ModelSpace, Operator};
use crate::rational::{frac, int, Rational};
use crate::subspace::{decomposable, h_tensor, Subspace};

pub fn random_index<R: RngCore>(rng: &mut R, len: usize) -> usize {
    (rng.next_u64() % len as u64) as usize
}

/// Uniform in `lo..=hi`.
pub fn random_range<R: RngCore>(rng: &mut R, lo: usize, hi: usize) -> usize {
    lo + random_index(rng, hi - lo + 1)
}

pub fn random_rational<R: RngCore>(rng: &mut R) -> Rational {
    let num = random_index(rng, 19) as i64 - 9;
    let den = random_index(rng, 3) as i64 + 1;
    frac(num, den)
}

pub fn random_nonzero_rational<R: RngCore>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_vector<R: RngCore>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

pub fn random_matrix<R: RngCore>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_rational(rng))
}

pub fn random_operator<R: RngCore>(rng: &mut R) -> Operator {
    Operator::new(random_rational(rng), random_rational(rng), random_rational(rng))
}

/// `[[a, b], [c, (1 + bc)/a]]` with `a ≠ 0`.
pub fn random_h_basis<R: RngCore>(rng: &mut R) -> HBasisChange {
    let a = random_nonzero_rational(rng);
    let b = random_rational(rng);
    let c = random_rational(rng);
    let d = (int(1) + &b * &c) / &a;
    HBasisChange::new(Matrix::from_rows(2, &[[a, b].to_vec(), [c, d].to_vec()])).expect("det 1")
}

/// `k` linearly independent random vectors of `ℚ^dim`.
pub fn random_independent<R: RngCore>(rng: &mut R, dim: usize, k: usize) -> Vec<Vec<Rational>> {
    assert!(k <= dim);
    loop {
        let vs: Vec<Vec<Rational>> = (0..k).map(|_| random_vector(rng, dim)).collect();
        if Matrix::from_rows(dim, &vs).rank() == k {
            return vs;
        }
    }
}

pub fn random_subspace<R: RngCore>(rng: &mut R, ambient: usize, dim: usize) -> Subspace {
    Subspace::new(ambient, &random_independent(rng, ambient, dim))
}

pub fn random_invertible<R: RngCore>(rng: &mut R, n: usize) -> Matrix {
    Matrix::from_cols(n, &random_independent(rng, n, n))
}

/// A product of transvections `x ↦ x + c·ω(v, x)·v` with `v` supported on `support`.
/// `v` has entries in `{−1, 0, 1}` and `c ∈ {±1, ±2}`, so for an integral `ω` the result is
/// integral with integral inverse.
pub fn random_symplectic<R: RngCore>(rng: &mut R, omega: &Matrix, support: usize, steps: usize) -> Matrix {
    let n = omega.rows();
    let mut acc = Matrix::identity(n);
    for _ in 0..steps {
        let mut v: Vec<Rational> = (0..support).map(|_| int(random_index(rng, 3) as i64 - 1)).collect();
        v.resize(n, Rational::zero());
        let c = int([-2, -1, 1, 2][random_index(rng, 4)]);
        let row = omega.transpose().mul_vec(&v);
        let t = Matrix::from_fn(n, n, |r, s| {
            let id = if r == s { int(1) } else { Rational::zero() };
            id + &c * &v[r] * &row[s]
        });
        acc = t.mul_mat(&acc);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    ParaQuaternionic,
    Complex,
    ParaComplex,
    WeaklyParaComplex,
    Nilpotent,
    Real,
    TotallyReal,
    TotallyComplex,
    TotallyParaComplex,
    Decomposable,
    Random,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::ParaQuaternionic,
        Kind::Complex,
        Kind::ParaComplex,
        Kind::WeaklyParaComplex,
        Kind::Nilpotent,
        Kind::Real,
        Kind::TotallyReal,
        Kind::TotallyComplex,
        Kind::TotallyParaComplex,
        Kind::Decomposable,
        Kind::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::ParaQuaternionic => "para-quaternionic",
            Kind::Complex => "complex",
            Kind::ParaComplex => "para-complex",
            Kind::WeaklyParaComplex => "weakly-para-complex",
            Kind::Nilpotent => "nilpotent",
            Kind::Real => "real",
            Kind::TotallyReal => "totally-real",
            Kind::TotallyComplex => "totally-complex",
            Kind::TotallyParaComplex => "totally-para-complex",
            Kind::Decomposable => "decomposable",
            Kind::Random => "random",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownKind;

impl fmt::Display for UnknownKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown kind")
    }
}

impl FromStr for Kind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL.iter().copied().find(|k| k.name() == s).ok_or(UnknownKind)
    }
}

/// A generated subspace together with the frame `(h₁′, h₂′)` it was built in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub space: ModelSpace,
    pub subspace: Subspace,
    pub h_basis: HBasisChange,
}

/// `{h₁′⊗f + h₂′⊗Tf}` for `f` running over `fs`, with `ts[i] = T fs[i]`.
pub fn graph(s: &HBasisChange, fs: &[Vec<Rational>], ts: &[Vec<Rational>]) -> Subspace {
    let m = fs.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rational>> = fs.iter().zip(ts).map(|(f, t)| s.to_old(&join(f, t))).collect();
    Subspace::new(2 * m, &rows)
}

/// Images of the columns of `basis` under `basis · block · basis⁻¹`, i.e. `block` acting in that basis.
fn conjugated_images(basis: &Matrix, block: &Matrix) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let fs = basis.to_cols();
    let ts = basis.mul_mat(block).to_cols();
    (fs, ts)
}

/// Block matrix on `ℚ^{2k}` acting on each coordinate pair by `pair`.
fn pair_blocks(k: usize, pair: [[i64; 2]; 2]) -> Matrix {
    Matrix::from_fn(2 * k, 2 * k, |r, c| if r / 2 == c / 2 { int(pair[r % 2][c % 2]) } else { Rational::zero() })
}

pub fn generate<R: RngCore>(rng: &mut R, n: usize, kind: Kind) -> Instance {
    assert!(n > 0);
    let m = 2 * n;
    let standard = ModelSpace::standard(n);
    let s = random_h_basis(rng);
    let (space, subspace) = match kind {
        Kind::ParaQuaternionic => {
            let k = random_range(rng, 1, m);
            let e = random_subspace(rng, m, k);
            let u = h_tensor(&standard, &e);
            (standard, u)
        }
        Kind::Decomposable => {
            let k = random_range(rng, 1, m);
            let e = random_subspace(rng, m, k);
            let u = decomposable(&standard, &s.h1(), &e);
            (standard, u)
        }
        Kind::Complex => {
            let k = random_range(rng, 1, n);
            let p = Matrix::from_cols(m, &random_independent(rng, m, 2 * k));
            let (fs, ts) = conjugated_images(&p, &pair_blocks(k, [[0, -1], [1, 0]]));
            (standard, graph(&s, &fs, &ts))
        }
        Kind::ParaComplex | Kind::WeaklyParaComplex => {
            let (k, plus) = if kind == Kind::ParaComplex {
                let h = random_range(rng, 1, n);
                (2 * h, h)
            } else {
                let k = random_range(rng, 1, m);
                (k, random_range(rng, 0, k))
            };
            let p = Matrix::from_cols(m, &random_independent(rng, m, k));
            let d = Matrix::from_fn(k, k, |r, c| if r != c { Rational::zero() } else if r < plus { int(1) } else { int(-1) });
            let (fs, ts) = conjugated_images(&p, &d);
            (standard, graph(&s, &fs, &ts))
        }
        Kind::Nilpotent => {
            let a = random_range(rng, 1, m);
            let e1 = random_independent(rng, m, a);
            let c_dim = random_range(rng, 0, a.min(m - a).max(1));
            let mut rows: Vec<Vec<Rational>> = e1.iter().map(|e| s.to_old(&join(e, &alloc::vec![Rational::zero(); m]))).collect();
            for _ in 0..c_dim {
                let coeffs = random_vector(rng, a);
                let c = crate::subspace::combine(&e1, &coeffs);
                let b = random_vector(rng, m);
                rows.push(s.to_old(&join(&b, &c)));
            }
            let u = Subspace::new(2 * m, &rows);
            (standard, u)
        }
        Kind::Real => loop {
            let k = random_range(rng, 1, n);
            let vs = random_independent(rng, m, 2 * k);
            let (fs, ts) = vs.split_at(k);
            let u = graph(&s, fs, ts);
            if is_real(&standard, &u) {
                break (standard, u);
            }
        },
        Kind::TotallyReal => {
            let k = random_range(rng, 1, n);
            let p = random_symplectic(rng, standard.omega_e(), m, 3);
            let fs: Vec<Vec<Rational>> = (0..k).map(|i| p.col_vec(2 * i)).collect();
            let partners: Vec<Vec<Rational>> = (0..k).map(|i| p.col_vec(2 * i + 1)).collect();
            let sym = loop {
                let a = random_matrix(rng, k, k);
                let sym = a.add(&a.transpose());
                if !sym.determinant().is_zero() {
                    break sym;
                }
            };
            let ts: Vec<Vec<Rational>> = (0..k)
                .map(|i| (0..k).fold(alloc::vec![Rational::zero(); m], |acc, j| add_vec(&acc, &scale_vec(&partners[j], &sym[(j, i)]))))
                .collect();
            (standard.clone(), graph(&s, &fs, &ts))
        }
        Kind::TotallyComplex | Kind::TotallyParaComplex => {
            let k = random_range(rng, 1, n);
            let pair = if kind == Kind::TotallyComplex { [[0, -1], [1, 0]] } else { [[1, 0], [0, -1]] };
            let q = random_symplectic(rng, standard.omega_e(), 2 * k, 3);
            let p = random_symplectic(rng, standard.omega_e(), m, 3);
            // T = P·(Q·J₀·Q⁻¹)·P⁻¹ on F = P·span{e₁, …, e_{2k}}
            let q_small = Matrix::from_fn(2 * k, 2 * k, |r, c| q[(r, c)].clone());
            let block = q_small.mul_mat(&pair_blocks(k, pair)).mul_mat(&q_small.inverse().expect("symplectic"));
            let basis = Matrix::from_cols(m, &(0..2 * k).map(|i| p.col_vec(i)).collect::<Vec<_>>());
            let (fs, ts) = conjugated_images(&basis, &block);
            (standard, graph(&s, &fs, &ts))
        }
        Kind::Random => {
            let omega = loop {
                let a = random_matrix(rng, m, m);
                let w = a.sub(&a.transpose());
                if !w.determinant().is_zero() {
                    break w;
                }
            };
            let sp = ModelSpace::new(omega).expect("nondegenerate skew form");
            let k = random_range(rng, 1, (2 * m).min(6));
            let u = random_subspace(rng, 2 * m, k);
            (sp, u)
        }
    };
    Instance { space, subspace, h_basis: s }
}

//! Vectors over a real quadratic field ℚ(√r), stored as pairs of rational vectors.

use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::rational::{sqrt_exact, Rational};

/// `rational + √r · irrational`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadVec {
    pub rational: Vec<Rational>,
    pub irrational: Vec<Rational>,
}

impl QuadVec {
    pub fn new(rational: Vec<Rational>, irrational: Vec<Rational>) -> Self {
        assert_eq!(rational.len(), irrational.len());
        QuadVec { rational, irrational }
    }

    pub fn len(&self) -> usize {
        self.rational.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rational.is_empty()
    }

    /// `√r · self`
    pub fn times_root(&self, r: &Rational) -> QuadVec {
        QuadVec::new(self.irrational.iter().map(|b| b * r).collect(), self.rational.clone())
    }
}

/// Rank over ℚ(√r) of a family of vectors.
///
/// For non-square `r` the ℚ-span of `{v, √r·v}` has twice the ℚ(√r)-dimension; for square
/// `r` the vectors are rational already.
pub fn rank_over(vectors: &[QuadVec], r: &Rational) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let dim = first.len();
    if let Some(c) = sqrt_exact(r) {
        let rows: Vec<Vec<Rational>> =
            vectors.iter().map(|v| v.rational.iter().zip(&v.irrational).map(|(a, b)| a + &c * b).collect()).collect();
        return Matrix::from_rows(dim, &rows).rank();
    }
    let mut rows = Vec::with_capacity(2 * vectors.len());
    for v in vectors {
        rows.push(flatten(v));
        rows.push(flatten(&v.times_root(r)));
    }
    Matrix::from_rows(2 * dim, &rows).rank() / 2
}

fn flatten(v: &QuadVec) -> Vec<Rational> {
    v.rational.iter().chain(&v.irrational).cloned().collect()
}

/// Indices of a maximal ℚ(√r)-independent subfamily, chosen greedily in order.
pub fn independent_subset(vectors: &[QuadVec], r: &Rational) -> Vec<usize> {
    let mut chosen: Vec<QuadVec> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        chosen.push(v.clone());
        if rank_over(&chosen, r) == chosen.len() {
            idx.push(i);
        } else {
            chosen.pop();
        }
    }
    idx
}

/// Rank over ℚ(√r) of the matrix `a + √r·b`.
pub fn matrix_rank_over(a: &Matrix, b: &Matrix, r: &Rational) -> usize {
    let rows: Vec<QuadVec> = (0..a.rows()).map(|i| QuadVec::new(a.row_vec(i), b.row_vec(i))).collect();
    rank_over(&rows, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn q(a: &[i64], b: &[i64]) -> QuadVec {
        QuadVec::new(a.iter().map(|&x| int(x)).collect(), b.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn rank_respects_field() {
        // (1, √2) and (√2, 2) are proportional over ℚ(√2)
        let vs = vec![q(&[1, 0], &[0, 1]), q(&[0, 2], &[1, 0])];
        assert_eq!(rank_over(&vs, &int(2)), 1);
        // with r = 3 they are not
        assert_eq!(rank_over(&vs, &int(3)), 2);
        // r = 4 substitutes √r = 2: (1, 2) and (2, 2)
        assert_eq!(rank_over(&vs, &int(4)), 2);
        assert_eq!(independent_subset(&vs, &int(2)), vec![0]);
    }
}

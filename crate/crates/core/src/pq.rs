//! Split quaternions (para-quaternions) and their identification with 2×2 matrices.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::rational::{int, Rational};

/// `q0 + q1·i + q2·j + q3·k` with `−i² = j² = k² = 1` and `ij = −ji = k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParaQuaternion {
    pub q0: Rational,
    pub q1: Rational,
    pub q2: Rational,
    pub q3: Rational,
}

impl fmt::Debug for ParaQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ParaQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(&self.q0, ""), (&self.q1, "i"), (&self.q2, "j"), (&self.q3, "k")];
        let mut first = true;
        for (c, unit) in parts {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs == int(1) {
                write!(f, "{}", unit)?;
            } else {
                write!(f, "{}{}", abs, unit)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl ParaQuaternion {
    pub fn new(q0: Rational, q1: Rational, q2: Rational, q3: Rational) -> Self {
        ParaQuaternion { q0, q1, q2, q3 }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        Self::new(int(q0), int(q1), int(q2), int(q3))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.q0.clone(), -self.q1.clone(), -self.q2.clone(), -self.q3.clone())
    }

    /// `q q̄ = q0² + q1² − q2² − q3²`.
    pub fn norm(&self) -> Rational {
        &self.q0 * &self.q0 + &self.q1 * &self.q1 - &self.q2 * &self.q2 - &self.q3 * &self.q3
    }

    pub fn conj_norm(&self) -> (Self, Rational) {
        (self.conj(), self.norm())
    }

    pub fn real_part(&self) -> Rational {
        self.q0.clone()
    }

    pub fn imaginary_part(&self) -> Self {
        Self::new(Rational::zero(), self.q1.clone(), self.q2.clone(), self.q3.clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.q0 * s, &self.q1 * s, &self.q2 * s, &self.q3 * s)
    }

    /// Φ(q) = [[q0 − q3, q2 − q1], [q2 + q1, q0 + q3]].
    pub fn to_mat2(&self) -> Matrix {
        Matrix::from_rows(
            2,
            &[
                alloc::vec![&self.q0 - &self.q3, &self.q2 - &self.q1],
                alloc::vec![&self.q2 + &self.q1, &self.q0 + &self.q3],
            ],
        )
    }

    /// Inverse of [`ParaQuaternion::to_mat2`]; every 2×2 matrix has a preimage.
    pub fn from_mat2(m: &Matrix) -> Self {
        assert!(m.rows() == 2 && m.cols() == 2, "expected a 2×2 matrix");
        let half = Rational::new(1.into(), 2.into());
        let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
        Self::new((a + d) * &half, (c - b) * &half, (b + c) * &half, (d - a) * &half)
    }
}

impl Add for &ParaQuaternion {
    type Output = ParaQuaternion;
    fn add(self, o: &ParaQuaternion) -> ParaQuaternion {
        ParaQuaternion::new(&self.q0 + &o.q0, &self.q1 + &o.q1, &self.q2 + &o.q2, &self.q3 + &o.q3)
    }
}

impl Sub for &ParaQuaternion {
    type Output = ParaQuaternion;
    fn sub(self, o: &ParaQuaternion) -> ParaQuaternion {
        ParaQuaternion::new(&self.q0 - &o.q0, &self.q1 - &o.q1, &self.q2 - &o.q2, &self.q3 - &o.q3)
    }
}

impl Neg for &ParaQuaternion {
    type Output = ParaQuaternion;
    fn neg(self) -> ParaQuaternion {
        ParaQuaternion::new(-self.q0.clone(), -self.q1.clone(), -self.q2.clone(), -self.q3.clone())
    }
}

impl Mul for &ParaQuaternion {
    type Output = ParaQuaternion;
    fn mul(self, o: &ParaQuaternion) -> ParaQuaternion {
        let (a0, a1, a2, a3) = (&self.q0, &self.q1, &self.q2, &self.q3);
        let (b0, b1, b2, b3) = (&o.q0, &o.q1, &o.q2, &o.q3);
        // i² = −1, j² = k² = 1, ij = k, jk = −i, ki = j
        ParaQuaternion::new(
            a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )
    }
}

pub fn pq_mul(a: &ParaQuaternion, b: &ParaQuaternion) -> ParaQuaternion {
    a * b
}

pub fn pq_conj_norm(a: &ParaQuaternion) -> (ParaQuaternion, Rational) {
    a.conj_norm()
}

pub fn phi_to_mat2(a: &ParaQuaternion) -> Matrix {
    a.to_mat2()
}

pub fn phi_from_mat2(m: &Matrix) -> ParaQuaternion {
    ParaQuaternion::from_mat2(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_rows(2, &[vec![int(a), int(b)], vec![int(c), int(d)]])
    }

    #[test]
    fn units() {
        let (i, j, k) = (ParaQuaternion::i(), ParaQuaternion::j(), ParaQuaternion::k());
        let one = ParaQuaternion::one();
        assert_eq!(&i * &i, -&one);
        assert_eq!(&j * &j, one);
        assert_eq!(&k * &k, one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, -&i);
        assert_eq!(&k * &i, j);
    }

    #[test]
    fn zero_divisor() {
        let a = ParaQuaternion::from_ints(1, 0, 1, 0);
        let b = ParaQuaternion::from_ints(1, 0, -1, 0);
        assert!((&a * &b).is_zero());
        assert_eq!(a.norm(), int(0));
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(pq_conj_norm(&ParaQuaternion::i()), (-&ParaQuaternion::i(), int(1)));
        assert_eq!(pq_conj_norm(&ParaQuaternion::j()), (-&ParaQuaternion::j(), int(-1)));
    }

    #[test]
    fn matrix_images() {
        assert_eq!(phi_to_mat2(&ParaQuaternion::one()), m2(1, 0, 0, 1));
        assert_eq!(phi_to_mat2(&ParaQuaternion::i()), m2(0, -1, 1, 0));
        assert_eq!(phi_to_mat2(&ParaQuaternion::j()), m2(0, 1, 1, 0));
        assert_eq!(phi_to_mat2(&ParaQuaternion::k()), m2(-1, 0, 0, 1));
        let m = m2(3, -5, 7, 2);
        assert_eq!(phi_to_mat2(&phi_from_mat2(&m)), m);
    }

    #[test]
    fn display() {
        assert_eq!(ParaQuaternion::from_ints(1, 0, 0, -1).to_string(), "1 - k");
        assert_eq!(ParaQuaternion::zero().to_string(), "0");
        assert_eq!(ParaQuaternion::new(int(0), int(2), Rational::new((-1).into(), 2.into()), int(0)).to_string(), "2i - 1/2j");
    }
}

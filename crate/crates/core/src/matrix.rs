//! Small dense integer matrices with exact determinants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{KnotError, Result};

/// Square matrix of machine integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(KnotError::NotSquare { rows: n, cols: row.len() });
            }
            data.extend(row);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `A + Aᵀ`.
    pub fn symmetrize(&self) -> Self {
        let mut s = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                s.set(i, j, self.get(i, j) + self.get(j, i));
            }
        }
        s
    }

    pub fn neg(&self) -> Self {
        IntMatrix { n: self.n, data: self.data.iter().map(|v| -v).collect() }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(KnotError::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// `Pᵀ · self · P`.
    pub fn congruent(&self, p: &IntMatrix) -> Result<IntMatrix> {
        p.transpose().mul(self)?.mul(p)
    }

    /// Principal submatrix on the given index set, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = IntMatrix::from_rows(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(m.det(), BigInt::from(4));
        let z = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z.det(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(0).det(), BigInt::one());
        let singular = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.det().is_zero());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }
}

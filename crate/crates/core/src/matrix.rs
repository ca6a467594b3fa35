//! Square matrices over the tropical semiring (`MT_n`) and the upper
//! triangular sub-semiring `UT_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Trop};

/// An `n × n` tropical matrix, stored row-major.
///
/// Equality and hashing are exact and structural, including the placement of
/// `-inf` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix<S>", into = "RawMatrix<S>")]
#[serde(bound(serialize = "S: Scalar", deserialize = "S: Scalar"))]
pub struct Matrix<S: Scalar> {
    n: usize,
    entries: Vec<Trop<S>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "S: Scalar", deserialize = "S: Scalar"))]
struct RawMatrix<S> {
    n: usize,
    rows: Vec<Vec<Trop<S>>>,
}

impl<S: Scalar> TryFrom<RawMatrix<S>> for Matrix<S> {
    type Error = Error;

    fn try_from(raw: RawMatrix<S>) -> Result<Self> {
        let m = Matrix::from_rows(raw.rows)?;
        if m.n != raw.n {
            return Err(Error::MalformedMatrix(format!(
                "declared n = {} but {} rows given",
                raw.n, m.n
            )));
        }
        Ok(m)
    }
}

impl<S: Scalar> From<Matrix<S>> for RawMatrix<S> {
    fn from(m: Matrix<S>) -> Self {
        RawMatrix { n: m.n, rows: m.rows() }
    }
}

impl<S: Scalar> Matrix<S> {
    /// `0_n`: every entry `-inf`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Matrix {
            n,
            entries: vec![Trop::NegInf; n * n],
        }
    }

    /// `I_n`: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = Trop::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Trop<S>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedMatrix("matrix has no rows".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedMatrix(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for e in row {
                if let Trop::Finite(v) = e {
                    Trop::new(v)?;
                }
                entries.push(e);
            }
        }
        Ok(Matrix { n, entries })
    }

    /// Builds a matrix from a generator `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Trop<S>) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at zero-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Trop<S> {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Trop<S>>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Tropical product: `(A ⊗ B)[i][j] = max_k A[i][k] + B[k][j]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut entries = vec![Trop::NegInf; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_neg_inf() {
                    continue;
                }
                for j in 0..n {
                    let p = a.mul(other.entries[k * n + j])?;
                    let slot = &mut entries[i * n + j];
                    *slot = slot.add(p);
                }
            }
        }
        Ok(Matrix { n, entries })
    }

    /// Tropical sum: entrywise `max`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.add(*y))
            .collect();
        Ok(Matrix { n: self.n, entries })
    }

    /// `m`-fold product by repeated multiplication; `A^0 = I_n`.
    pub fn pow(&self, m: usize) -> Result<Self> {
        let mut acc = Self::identity(self.n);
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// All powers `A^0, A^1, ..., A^max_exp`.
    pub fn powers(&self, max_exp: usize) -> Result<Vec<Self>> {
        let mut out = Vec::with_capacity(max_exp + 1);
        out.push(Self::identity(self.n));
        for e in 1..=max_exp {
            let next = out[e - 1].mul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![Trop::NegInf; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Matrix { n, entries }
    }

    /// Reflection about the anti-diagonal: output `(i, j)` is input
    /// `(n-1-j, n-1-i)` (zero-based). Preserves upper triangularity.
    pub fn anti_transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![Trop::NegInf; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = self.entries[(n - 1 - j) * n + (n - 1 - i)];
            }
        }
        Matrix { n, entries }
    }

    /// True iff every entry strictly below the diagonal is `-inf`.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_neg_inf()))
    }

    /// Finite entries on the diagonal.
    pub fn diagonal(&self) -> Vec<Trop<S>> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }
}

/// `0_n` and `I_n` together.
pub fn special_matrices<S: Scalar>(n: usize) -> (Matrix<S>, Matrix<S>) {
    (Matrix::zero(n), Matrix::identity(n))
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

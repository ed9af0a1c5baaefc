//! Dense exact matrices over any [`Ring`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible (determinant {det})")]
    NotInvertible { det: String },
    #[error("determinant {det} is not a unit of the entry ring")]
    NotUnitDeterminant { det: String },
    #[error("block index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed matrix encoding: {0}")]
    Encoding(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows*cols");
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scalar(n: usize, s: &T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { s.clone() } else { T::zero() })
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch(other));
        }
        Ok(())
    }

    fn mismatch(&self, other: &Self) -> MatrixError {
        MatrixError::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap(k, p);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign_flip { d.neg() } else { d })
    }

    /// Matrix of cofactors transposed.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = Self::from_fn(n - 1, n - 1, |r, c| {
                    let rr = if r < i { r } else { r + 1 };
                    let cc = if c < j { c } else { c + 1 };
                    self.get(rr, cc).clone()
                });
                let m = minor.det()?;
                out.set(j, i, if (i + j) % 2 == 0 { m } else { m.neg() });
            }
        }
        Ok(out)
    }

    /// Inverse as adjugate times the inverse determinant.
    ///
    /// Over `Z[t, t^-1]` only unit determinants (`±t^k`) are invertible;
    /// over a field any nonzero determinant is.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let det = self.det()?;
        if det.is_zero() {
            return Err(MatrixError::NotInvertible {
                det: det.to_string(),
            });
        }
        let Some(inv_det) = det.unit_inverse() else {
            return Err(MatrixError::NotUnitDeterminant {
                det: det.to_string(),
            });
        };
        Ok(self.adjugate()?.scale(&inv_det))
    }

    /// Row-major flattening, used to test linear independence of matrices.
    pub fn vectorize(&self) -> Vec<T> {
        self.entries.clone()
    }

    /// Fraction-free rank, valid over any integral domain.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        let mut prev = T::one();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = a[i][j].mul(&a[rank][col]).sub(&a[i][col].mul(&a[rank][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
                a[i][col] = T::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Direct sum `I_{i-1} ⊕ block ⊕ I_{n-i-1}` with `i` one-based.
    ///
    /// The ambient size is `n + k - 2`, so a `2x2` block yields an `n x n`
    /// matrix and a `3x3` block an `(n+1) x (n+1)` one.
    pub fn block_embed(block: &Self, i: usize, n: usize) -> Result<Self, MatrixError> {
        if !block.is_square() {
            return Err(MatrixError::NotSquare {
                rows: block.rows,
                cols: block.cols,
            });
        }
        if i == 0 || i + 1 > n {
            return Err(MatrixError::IndexOutOfRange { index: i, n });
        }
        let k = block.rows;
        let dim = n + k - 2;
        let off = i - 1;
        Ok(Self::from_fn(dim, dim, |r, c| {
            let in_block = |x: usize| x >= off && x < off + k;
            if in_block(r) && in_block(c) {
                block.get(r - off, c - off).clone()
            } else if r == c {
                T::one()
            } else {
                T::zero()
            }
        }))
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Subspace<T> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, free).neg();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    /// Solves `A x = b` for one particular solution.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Characteristic polynomial `det(xI - A)`, ascending coefficients,
    /// by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Result<Vec<T>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m)?.add(&Self::scalar(n, &coeffs[n - k + 1]))?;
            let tr = self.mul(&m)?.trace();
            coeffs[n - k] = tr
                .neg()
                .div(&T::from_i64(k as i64))
                .expect("k is nonzero in characteristic zero");
        }
        Ok(coeffs)
    }
}

/// A subspace of `F^n` given by a linearly independent spanning list.
#[derive(Debug, Clone)]
pub struct Subspace<T> {
    pub ambient: usize,
    pub basis: Vec<Vec<T>>,
    /// Echelon rows with their pivot columns, pivot entries normalized to 1.
    echelon: Vec<(usize, Vec<T>)>,
}

impl<T: PartialEq> PartialEq for Subspace<T> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            echelon: Vec::new(),
        }
    }

    /// Span of `vectors`, reduced to an independent basis.
    pub fn span(ambient: usize, vectors: &[Vec<T>]) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.try_extend(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `v` minus its projection onto the echelon rows.
    fn residual(&self, v: &[T]) -> Vec<T> {
        let mut r = v.to_vec();
        for (p, row) in &self.echelon {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(*p) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.residual(v).iter().all(Ring::is_zero)
    }

    /// Adds `v` to the basis if it is independent; reports whether it was.
    pub fn try_extend(&mut self, v: &[T]) -> bool {
        let r = self.residual(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let row: Vec<T> = r.iter().map(|x| x.mul(&inv)).collect();
        let at = self.echelon.partition_point(|(q, _)| *q < p);
        self.echelon.insert(at, (p, row));
        self.basis.push(v.to_vec());
        true
    }

    /// True iff `m` maps every basis vector back into the subspace.
    pub fn is_invariant_under(&self, m: &Matrix<T>) -> bool {
        self.basis
            .iter()
            .all(|b| m.mul_vec(b).map(|img| self.contains(&img)).unwrap_or(false))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl<T: Ring> Matrix<T> {
    /// `{"rows":r,"cols":c,"entries":[[..],..]}` with entries rendered as text.
    pub fn to_json(&self) -> serde_json::Value {
        let j = MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_value(j).expect("matrix json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MatrixError>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        let j: MatrixJson =
            serde_json::from_value(v.clone()).map_err(|e| MatrixError::Encoding(e.to_string()))?;
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(MatrixError::Encoding("entries do not match rows/cols".into()));
        }
        let entries = j
            .entries
            .iter()
            .flatten()
            .map(|s| s.parse::<T>().map_err(|e| MatrixError::Encoding(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_vec(j.rows, j.cols, entries))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

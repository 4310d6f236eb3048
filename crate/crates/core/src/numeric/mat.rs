//! Dense symmetric matrices and the small rectangular matrices used
//! alongside them. Everything here targets the small dimensions of the
//! statistical problem (p up to a few dozen), so storage is a plain
//! row-major `Vec<f64>` and products are written out directly.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Row-major rectangular matrix of `f64`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<f64>]) -> Self {
        let c = columns.len();
        let mut m = Mat::zeros(rows, c);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matvec");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: f64) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Symmetric p x p matrix. Construction symmetrizes, so `get(i, j) ==
/// get(j, i)` holds exactly afterwards.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix {
    dim: usize,
    mat: Mat,
}

impl SymMatrix {
    /// Symmetrize `m` as (M + M') / 2 and wrap it.
    pub fn from_mat(m: &Mat) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DomainError(format!(
                "symmetric matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut s = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = 0.5 * (m[(i, j)] + m[(j, i)]);
            }
        }
        Ok(SymMatrix { dim: n, mat: s })
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            dim: n,
            mat: Mat::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix {
            dim: n,
            mat: Mat::identity(n),
        }
    }

    pub fn from_diag(d: &[f64]) -> Self {
        let n = d.len();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = d[i];
        }
        SymMatrix { dim: n, mat: m }
    }

    /// Build from the row-major entries of a square matrix, symmetrizing.
    pub fn from_row_major(n: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DomainError(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = entries[i * n + j];
            }
        }
        SymMatrix::from_mat(&m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mat[(i, j)]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.mat[(i, j)] = v;
        self.mat[(j, i)] = v;
    }

    pub fn as_mat(&self) -> &Mat {
        &self.mat
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.frobenius_norm()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        let mut m = self.mat.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] += other.mat[(i, j)];
            }
        }
        SymMatrix { dim: self.dim, mat: m }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        let mut m = self.mat.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] -= other.mat[(i, j)];
            }
        }
        SymMatrix { dim: self.dim, mat: m }
    }

    pub fn scaled(&self, c: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            mat: self.mat.scaled(c),
        }
    }

    /// Quadratic form v' M v.
    pub fn quad_form(&self, v: &[f64]) -> f64 {
        let mv = self.mat.matvec(v);
        v.iter().zip(mv.iter()).map(|(a, b)| a * b).sum()
    }

    /// Bilinear form v' M w.
    pub fn bilinear(&self, v: &[f64], w: &[f64]) -> f64 {
        let mw = self.mat.matvec(w);
        v.iter().zip(mw.iter()).map(|(a, b)| a * b).sum()
    }

    /// Symmetrized triple product F M F' for symmetric `F`.
    pub fn sandwich(&self, f: &SymMatrix) -> SymMatrix {
        let prod = f.mat.matmul(&self.mat).matmul(&f.mat);
        SymMatrix::from_mat(&prod).expect("square by construction")
    }

    pub fn is_finite(&self) -> bool {
        self.mat.data.iter().all(|x| x.is_finite())
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

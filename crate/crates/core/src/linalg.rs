//! Dense exact linear algebra over [`Cyclo`].
//!
//! Tensor products use one layout everywhere: in `V ⊗ W` the basis vector
//! `v_i ⊗ w_j` sits at index `i * dim W + j` (left factor = slow index).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::Cyclo;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

/// Reduced row-echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// One particular solution, free variables set to zero.
    Unique(Mat),
    Inconsistent,
}

impl Solution {
    pub fn ok(self) -> Option<Mat> {
        match self {
            Solution::Unique(m) => Some(m),
            Solution::Inconsistent => None,
        }
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Cyclo::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclo::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclo) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Cyclo>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(v: &[Cyclo]) -> Self {
        Mat { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row_vector(v: &[Cyclo]) -> Self {
        Mat { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Cyclo {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Cyclo> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Cyclo>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> Cyclo {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// `self · v` for a coordinate vector `v`.
    pub fn apply(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        let mut out = vec![Cyclo::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Row vector times matrix: `u · self`.
    pub fn apply_left(&self, u: &[Cyclo]) -> Vec<Cyclo> {
        assert_eq!(u.len(), self.rows, "dimension mismatch in apply_left");
        let mut out = vec![Cyclo::zero(); self.cols];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(x * a);
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch {}x{} · {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, `(A⊗B)(v⊗w) = Av ⊗ Bw`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Gauss–Jordan elimination. Pivots are taken as the first nonzero entry
    /// scanning columns left to right and rows top to bottom.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<Cyclo>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            let support: Vec<usize> = (c..self.cols).filter(|&k| !rows[r][k].is_zero()).collect();
            for &k in &support {
                rows[r][k] = &rows[r][k] * &inv;
            }
            let pivot_row: Vec<(usize, Cyclo)> = support.iter().map(|&k| (k, rows[r][k].clone())).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (k, v) in &pivot_row {
                    row[*k] -= &(&factor * v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { reduced: Mat::from_rows_sized(self.rows, self.cols, rows), pivots, rank }
    }

    fn from_rows_sized(rows: usize, cols: usize, data: Vec<Vec<Cyclo>>) -> Mat {
        Mat { rows, cols, data: data.into_iter().flatten().collect() }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `ker self` as the columns of a `cols × (cols − rank)` matrix.
    /// Each basis vector has a 1 in its free column and zeros in the other
    /// free columns.
    pub fn nullspace(&self) -> Mat {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, Cyclo::one());
            for (row, &p) in pivots.iter().enumerate() {
                let v = reduced.get(row, f);
                if !v.is_zero() {
                    out.set(p, k, -v);
                }
            }
        }
        out
    }

    /// One solution of `self · x = b` (free variables zero), or `Inconsistent`.
    pub fn solve(&self, b: &Mat) -> Solution {
        assert_eq!(self.rows, b.rows, "solve: row count mismatch");
        let aug = self.hstack(b);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Solution::Inconsistent;
        }
        let mut x = Mat::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, reduced.get(row, self.cols + j).clone());
            }
        }
        Solution::Unique(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { reduced, pivots, .. } = self.hstack(&Mat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Cyclo) -> Cyclo) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[Cyclo] {
        &self.data
    }
}

/// Scales a vector so that its first nonzero coordinate is 1.
pub fn normalize_first_nonzero(v: &[Cyclo]) -> Vec<Cyclo> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

/// If `v = c · w` for a scalar `c`, returns `c`. `w` must be nonzero.
pub fn proportionality(v: &[Cyclo], w: &[Cyclo]) -> Option<Cyclo> {
    let p = w.iter().position(|x| !x.is_zero())?;
    let c = v[p].checked_div(&w[p]).ok()?;
    v.iter().zip(w).all(|(a, b)| *a == &c * b).then_some(c)
}

pub fn vec_add(a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Cyclo], c: &Cyclo) -> Vec<Cyclo> {
    a.iter().map(|x| x * c).collect()
}

pub fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Cyclo]) -> bool {
    v.iter().all(Cyclo::is_zero)
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &rhs.data) }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &rhs.data) }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.matmul(rhs)
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.map(|x| -x)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[Cyclo]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Cyclo>> = Vec::deserialize(d)?;
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix"));
        }
        Ok(Mat::from_rows(rows))
    }
}

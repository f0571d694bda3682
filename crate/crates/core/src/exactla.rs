//! Dense exact linear algebra: reduced row echelon form and a subspace
//! calculus (sum, intersection, coordinate restriction) on a labelled frame.
//!
//! Row reduction is deterministic: the pivot of each step is the first
//! nonzero column, and the pivot row is the first remaining row with a
//! nonzero entry there. Relative order of the other rows is preserved.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Returns the reduced row echelon form (same shape, zero rows last)
    /// together with the rank.
    pub fn rref(&self) -> (Self, usize) {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        let m = Matrix {
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// A basis (as rows) of the right null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Self {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            basis.push(v);
        }
        let n = basis.len();
        Matrix {
            rows: n,
            cols: self.cols,
            data: basis.into_iter().flatten().collect(),
        }
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `dst -= factor * src`, skipping zero entries of `src`.
fn sub_scaled<T: Scalar>(dst: &mut [T], factor: &T, src: &[T]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.clone() - factor.clone() * s.clone();
        }
    }
}

fn scale_row<T: Scalar>(row: &mut [T], factor: &T) {
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = x.clone() * factor.clone();
        }
    }
}

/// Gauss-Jordan elimination in place. Returns the pivot columns; rows
/// `0..pivots.len()` hold the nonzero echelon rows, the rest are zero.
fn rref_in_place<T: Scalar>(rows: &mut Vec<Vec<T>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if found != r {
            let row = rows.remove(found);
            rows.insert(r, row);
        }
        let inv = T::one() / rows[r][c].clone();
        scale_row(&mut rows[r], &inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                sub_scaled(row, &factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rows of `[left | right]` are combined; returns a basis (RREF, right part
/// only) of the combinations whose left part vanishes.
fn vanishing_combinations<T: Scalar>(
    left: Vec<Vec<T>>,
    right: Vec<Vec<T>>,
    left_cols: usize,
    right_cols: usize,
) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = left
        .into_iter()
        .zip(right)
        .map(|(mut l, r)| {
            l.extend(r);
            l
        })
        .collect();
    let pivots = rref_in_place(&mut rows, left_cols + right_cols);
    pivots
        .iter()
        .enumerate()
        .filter(|(_, &p)| p >= left_cols)
        .map(|(i, _)| rows[i][left_cols..].to_vec())
        .collect()
}

/// A finite-dimensional subspace of `T^frame`, stored as a canonical RREF
/// basis. Two subspaces on the same frame are equal iff their bases are.
pub struct Subspace<T, L> {
    frame: Arc<[L]>,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Clone, L> Clone for Subspace<T, L> {
    fn clone(&self) -> Self {
        Subspace {
            frame: Arc::clone(&self.frame),
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        }
    }
}

impl<T: Scalar, L: PartialEq + fmt::Debug> Subspace<T, L> {
    pub fn zero(frame: Arc<[L]>) -> Self {
        Subspace {
            frame,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(frame: Arc<[L]>) -> Self {
        let n = frame.len();
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![T::zero(); n];
                v[i] = T::one();
                v
            })
            .collect();
        Subspace {
            frame,
            rows,
            pivots: (0..n).collect(),
        }
    }

    /// The span of `vectors`, each of length `frame.len()`.
    pub fn span(frame: Arc<[L]>, vectors: impl IntoIterator<Item = Vec<T>>) -> Result<Self> {
        let mut s = Self::zero(frame);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn frame(&self) -> &Arc<[L]> {
        &self.frame
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.frame.len()
    }

    /// RREF basis rows.
    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Matrix<T> {
        Matrix::from_rows(self.rows.clone(), self.frame.len()).expect("rows match frame")
    }

    fn check_len(&self, v: &[T]) -> Result<()> {
        if v.len() != self.frame.len() {
            return Err(Error::InvalidArgument(format!(
                "vector of length {} on a frame of size {}",
                v.len(),
                self.frame.len()
            )));
        }
        Ok(())
    }

    fn same_frame(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.frame, &other.frame) || self.frame[..] == other.frame[..] {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                sub_scaled(&mut v, &factor, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.reduce(v.to_vec()).iter().all(|x| x.is_zero()))
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<T>) -> Result<bool> {
        self.check_len(&v)?;
        let mut v = self.reduce(v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = T::one() / v[q].clone();
        scale_row(&mut v, &inv);
        for row in self.rows.iter_mut() {
            if !row[q].is_zero() {
                let factor = row[q].clone();
                sub_scaled(row, &factor, &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_frame(other)?;
        let mut s = self.clone();
        for row in &other.rows {
            s.insert(row.clone())?;
        }
        Ok(s)
    }

    /// Intersection via the Zassenhaus construction: the rows `[a | a]` and
    /// `[b | 0]` are reduced, and rows with vanishing left half span `A ∩ B`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_frame(other)?;
        let n = self.frame.len();
        let mut left = Vec::with_capacity(self.dim() + other.dim());
        let mut right = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            left.push(a.clone());
            right.push(a.clone());
        }
        for b in &other.rows {
            left.push(b.clone());
            right.push(vec![T::zero(); n]);
        }
        let vectors = vanishing_combinations(left, right, n, n);
        Self::span(self.frame.clone(), vectors)
    }

    /// Intersection with the coordinate subspace spanned by the frame
    /// positions `j` with `keep(j)`. Solved as a kernel problem: combinations
    /// of the basis whose dropped coordinates all vanish.
    pub fn intersect_coordinates(&self, keep: impl Fn(usize) -> bool) -> Self {
        let n = self.frame.len();
        let dropped: Vec<usize> = (0..n).filter(|&j| !keep(j)).collect();
        let left: Vec<Vec<T>> = self
            .rows
            .iter()
            .map(|r| dropped.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let vectors = vanishing_combinations(left, self.rows.clone(), dropped.len(), n);
        Self::span(self.frame.clone(), vectors).expect("lengths match frame")
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        self.check_len(v)?;
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![T::zero(); v.len()];
        for (c, row) in coords.iter().zip(&self.rows) {
            sub_scaled(&mut rebuilt, &-c.clone(), row);
        }
        Ok((rebuilt[..] == v[..]).then_some(coords))
    }
}

impl<T: Scalar, L: PartialEq> PartialEq for Subspace<T, L> {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.frame, &other.frame) || self.frame[..] == other.frame[..])
            && self.rows == other.rows
    }
}

impl<T: Scalar, L: fmt::Debug> fmt::Debug for Subspace<T, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.frame.len())
            .field("dim", &self.rows.len())
            .field("pivots", &self.pivots)
            .finish()
    }
}

//! Dense exact linear algebra over [`FieldCtx`]: row reduction, solving,
//! kernels and canonical subspaces. GF(2) matrices are reduced on
//! bit-packed rows.

use std::fmt;

use thiserror::Error;

use crate::ffield::{Fe, Field, FieldCtx};
use crate::par;

pub type Vector = Vec<Fe>;

/// Desk-scale cap on `rows * cols`.
pub const MAX_ENTRIES: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix of {0} entries exceeds the size cap")]
    TooLarge(usize),
    #[error("vectors are linearly dependent")]
    Dependent,
}

// ---------- vector helpers ----------

/// `y += a * x`
#[inline]
pub fn axpy(f: &FieldCtx, y: &mut [Fe], a: Fe, x: &[Fe]) {
    if a == 0 {
        return;
    }
    if f.is_gf2() {
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi ^= xi;
        }
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

pub fn scale(f: &FieldCtx, a: Fe, x: &[Fe]) -> Vector {
    x.iter().map(|&xi| f.mul(a, xi)).collect()
}

pub fn vadd(f: &FieldCtx, x: &[Fe], y: &[Fe]) -> Vector {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

pub fn vsub(f: &FieldCtx, x: &[Fe], y: &[Fe]) -> Vector {
    x.iter().zip(y).map(|(&a, &b)| f.sub(a, b)).collect()
}

pub fn is_zero(x: &[Fe]) -> bool {
    x.iter().all(|&c| c == 0)
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

// ---------- matrices ----------

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        assert!(rows * cols <= MAX_ENTRIES, "matrix exceeds size cap");
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: &Field, rows: usize, cols: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[Fe] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, a: Fe) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: scale(&self.field, a, &self.data),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &*self.field;
        let (n, m) = (self.rows, other.cols);
        let mut out = Matrix::zeros(&self.field, n, m);
        par::for_each_row_mut(&mut out.data, m, |i, orow| {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    axpy(f, orow, a, other.row(k));
                }
            }
        });
        out
    }

    /// `A * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Fe]) -> Vector {
        assert_eq!(self.cols, x.len());
        let f = &*self.field;
        let mut out = vec![0; self.rows];
        for j in 0..self.cols {
            let c = x[j];
            if c == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.data[i * self.cols + j];
                if a != 0 {
                    *o = f.add(*o, f.mul(a, c));
                }
            }
        }
        out
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// `A^e` by repeated squaring.
    pub fn pow(&self, e: u64) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let mut result = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Entries flattened row-major, for treating `gl(n)` as a vector space.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn unflatten(field: &Field, n: usize, v: &[Fe]) -> Matrix {
        assert_eq!(v.len(), n * n);
        Matrix {
            field: field.clone(),
            rows: n,
            cols: n,
            data: v.to_vec(),
        }
    }

    pub fn trace(&self) -> Fe {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

// ---------- row reduction ----------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Canonical reduced row echelon form (leftmost pivots, pivot entries 1).
pub fn rref(m: &Matrix) -> Rref {
    rref_limited(m, m.cols)
}

/// Row reduction that only pivots in columns `< limit`; trailing columns
/// are carried along (augmented systems).
pub fn rref_limited(m: &Matrix, limit: usize) -> Rref {
    if m.field.is_gf2() {
        rref_gf2(m, limit)
    } else {
        rref_generic(m, limit)
    }
}

/// Element-wise elimination, valid for every field. Public so the packed
/// GF(2) path can be checked against it.
pub fn rref_generic(m: &Matrix, limit: usize) -> Rref {
    let f = &*m.field;
    let cols = m.cols;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit.min(cols) {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        for x in a.row_mut(r).iter_mut() {
            *x = f.mul(*x, inv);
        }
        let prow = a.row(r).to_vec();
        par::for_each_row_mut(&mut a.data, cols, |i, row| {
            if i != r && row[c] != 0 {
                let coef = f.neg(row[c]);
                axpy(f, row, coef, &prow);
            }
        });
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivots,
    }
}

fn rref_gf2(m: &Matrix, limit: usize) -> Rref {
    let cols = m.cols;
    let words = cols.div_ceil(64).max(1);
    let mut bits = vec![0u64; m.rows * words];
    for i in 0..m.rows {
        for j in 0..cols {
            if m.get(i, j) != 0 {
                bits[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit.min(cols) {
        if r == m.rows {
            break;
        }
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (r..m.rows).find(|&i| bits[i * words + w] & b != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..words {
                bits.swap(pr * words + k, r * words + k);
            }
        }
        let prow = bits[r * words..(r + 1) * words].to_vec();
        par::for_each_row_mut(&mut bits, words, |i, row| {
            if i != r && row[w] & b != 0 {
                for k in w..words {
                    row[k] ^= prow[k];
                }
            }
        });
        pivots.push(c);
        r += 1;
    }
    let mut out = Matrix::zeros(&m.field, m.rows, cols);
    for i in 0..m.rows {
        for j in 0..cols {
            if bits[i * words + j / 64] >> (j % 64) & 1 == 1 {
                out.set(i, j, 1);
            }
        }
    }
    Rref {
        matrix: out,
        rank: r,
        pivots,
    }
}

/// Some `x` with `A x = b` (free variables zero), or `None`.
pub fn solve(a: &Matrix, b: &[Fe]) -> Result<Option<Vector>, LinalgError> {
    if a.rows != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} rows vs right-hand side of length {}",
            a.rows,
            b.len()
        )));
    }
    let rhs = Matrix::from_cols(&a.field, a.rows, &[b.to_vec()]);
    Ok(solve_multi(a, &rhs)?.pop().unwrap())
}

/// Solves `A X = B` column by column with one elimination.
pub fn solve_multi(a: &Matrix, b: &Matrix) -> Result<Vec<Option<Vector>>, LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} rows vs {} right-hand rows",
            a.rows, b.rows
        )));
    }
    let n = a.cols;
    let red = rref_limited(&a.hstack(b), n);
    let m = &red.matrix;
    Ok((0..b.cols)
        .map(|j| {
            if (red.rank..m.rows).any(|i| m.get(i, n + j) != 0) {
                return None;
            }
            let mut x = vec![0; n];
            for (i, &pc) in red.pivots.iter().enumerate() {
                x[pc] = m.get(i, n + j);
            }
            Some(x)
        })
        .collect())
}

/// `{x : A x = 0}` as a canonical subspace.
pub fn kernel(a: &Matrix) -> Subspace {
    let red = rref(a);
    let f = &*a.field;
    let n = a.cols;
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vector> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|c| {
            let mut v = vec![0; n];
            v[c] = 1;
            for (i, &pc) in red.pivots.iter().enumerate() {
                v[pc] = f.neg(red.matrix.get(i, c));
            }
            v
        })
        .collect();
    Subspace::from_vectors(&a.field, n, &vecs)
}

// ---------- subspaces ----------

/// A subspace of `K^n` stored as the nonzero rows of its RREF basis, so
/// equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient, self.basis.to_rows())
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(field: &Field, ambient: usize, vecs: &[Vector]) -> Subspace {
        Subspace::from_matrix(&Matrix::from_rows(field, ambient, vecs))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let red = rref(m);
        let rows: Vec<Vector> = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols,
            basis: Matrix::from_rows(&m.field, m.cols, &rows),
            pivots: red.pivots,
        }
    }

    /// Span of a subset of the standard basis.
    pub fn coordinate(field: &Field, ambient: usize, idx: &[usize]) -> Subspace {
        let vecs: Vec<Vector> = idx.iter().map(|&i| unit(ambient, i)).collect();
        Subspace::from_vectors(field, ambient, &vecs)
    }

    pub fn field(&self) -> &Field {
        &self.basis.field
    }
    pub fn dim(&self) -> usize {
        self.basis.rows
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Fe]) -> Vector {
        let f = &*self.basis.field;
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c != 0 {
                axpy(f, &mut r, f.neg(c), self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Coordinates with respect to the RREF basis rows.
    pub fn coords(&self, v: &[Fe]) -> Option<Vector> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p]).collect())
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            Err(LinalgError::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Zassenhaus: reduce `[[U, U], [V, 0]]`; rows with vanishing left half
    /// span the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let n = self.ambient;
        let field = self.field().clone();
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Matrix::zeros(&field, other.dim(), n));
        let red = rref(&top.vstack(&bottom));
        let vecs: Vec<Vector> = (0..red.rank)
            .map(|i| red.matrix.row(i))
            .filter(|row| is_zero(&row[..n]))
            .map(|row| row[n..].to_vec())
            .collect();
        Ok(Subspace::from_vectors(&field, n, &vecs))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.to_rows().iter().all(|v| other.contains(v))
    }

    /// Standard basis indices spanning a complement (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn complement(&self) -> Subspace {
        Subspace::coordinate(self.field(), self.ambient, &self.complement_indices())
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vecs: Vec<Vector> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.field(), m.rows(), &vecs)
    }
}

// ---------- incremental echelon ----------

/// Semi-echelon basis grown one vector at a time; used for spinning.
#[derive(Clone)]
pub struct EchelonBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: &Field, ambient: usize) -> EchelonBuilder {
        EchelonBuilder {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> EchelonBuilder {
        EchelonBuilder {
            field: s.field().clone(),
            ambient: s.ambient,
            rows: s.vectors(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Fe]) -> Vector {
        let f = &*self.field;
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = r[pc];
            if c != 0 {
                axpy(f, &mut r, f.neg(c), row);
            }
        }
        r
    }

    /// Adds `v` if it is new; returns the reduced, normalized vector.
    pub fn insert(&mut self, v: &[Fe]) -> Option<Vector> {
        let mut r = self.reduce(v);
        let pc = r.iter().position(|&c| c != 0)?;
        let inv = self.field.inv(r[pc]).expect("nonzero");
        r = scale(&self.field, inv, &r);
        self.rows.push(r.clone());
        self.pivots.push(pc);
        Some(r)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        is_zero(&self.reduce(v))
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.ambient, &self.rows)
    }
}

/// Coordinates with respect to a fixed, not necessarily echelon, basis.
#[derive(Clone)]
pub struct Coordinatizer {
    span: Subspace,
    transform: Matrix,
}

impl Coordinatizer {
    pub fn new(field: &Field, ambient: usize, basis: &[Vector]) -> Result<Coordinatizer, LinalgError> {
        let k = basis.len();
        let b = Matrix::from_rows(field, ambient, basis);
        let red = rref_limited(&b.hstack(&Matrix::identity(field, k)), ambient);
        if red.rank != k {
            return Err(LinalgError::Dependent);
        }
        let transform = Matrix::from_fn(field, k, k, |i, j| red.matrix.get(i, ambient + j));
        let rows: Vec<Vector> = (0..k).map(|i| red.matrix.row(i)[..ambient].to_vec()).collect();
        Ok(Coordinatizer {
            span: Subspace {
                ambient,
                basis: Matrix::from_rows(field, ambient, &rows),
                pivots: red.pivots,
            },
            transform,
        })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// `c` with `v = sum c_i basis_i`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Fe]) -> Option<Vector> {
        let w = self.span.coords(v)?;
        let f = &**self.span.field();
        let k = w.len();
        let mut c = vec![0; k];
        for (j, &wj) in w.iter().enumerate() {
            if wj != 0 {
                axpy(f, &mut c, wj, self.transform.row(j));
            }
        }
        Some(c)
    }
}

//! Exact dense linear algebra over Q(ζ₈).

use crate::cyclo::Scalar;
use crate::par;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors; `dim` fixes the row count when empty.
    pub fn from_cols(dim: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim, "column length");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    /// Matrix with small integer entries, convenient in tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, LinalgError> {
        self.same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, LinalgError> {
        self.same_shape(o)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self += s·o`.
    pub fn axpy(&mut self, s: &Scalar, o: &Self) {
        assert!(self.rows == o.rows && self.cols == o.cols, "axpy shape");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    fn same_shape(&self, o: &Self) -> Result<(), LinalgError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(LinalgError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Result<Self, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::Shape(format!(
                "product {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let (n, m) = (self.rows, o.cols);
        let rows = par::map_range(n, |i| {
            let mut out = vec![Scalar::zero(); m];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        *slot += &(a * b);
                    }
                }
            }
            out
        });
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Product that panics on shape mismatch; for internal use with known shapes.
    pub fn dot(&self, o: &Self) -> Self {
        self.mul(o).expect("matrix shapes")
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn kron(&self, o: &Self) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            m.data[(i * o.rows + k) * c + j * o.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                m.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        m
    }

    /// Horizontal concatenation `[self | o]`.
    pub fn hcat(&self, o: &Self) -> Result<Self, LinalgError> {
        if self.rows != o.rows {
            return Err(LinalgError::Shape("hcat row counts".into()));
        }
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..o.cols {
                m.set(i, self.cols + j, o.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Vertical concatenation.
    pub fn vcat(&self, o: &Self) -> Result<Self, LinalgError> {
        if self.cols != o.cols {
            return Err(LinalgError::Shape("vcat column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, piv) = rref_rows(self.row_vecs(), self.cols);
        let r = rows.len();
        let mut m = Matrix::from_rows(rows);
        if r == 0 {
            m = Matrix::zeros(0, self.cols);
        }
        let mut full = Matrix::zeros(self.rows, self.cols);
        for i in 0..r {
            for j in 0..self.cols {
                full.set(i, j, m.get(i, j).clone());
            }
        }
        (full, piv)
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            return rref_rows(self.transpose().row_vecs(), self.rows).1.len();
        }
        rref_rows(self.row_vecs(), self.cols).1.len()
    }

    /// Columns span the null space.
    pub fn kernel_basis(&self) -> Matrix {
        let vecs = kernel_vectors(&self.row_vecs(), self.cols);
        Matrix::from_cols(self.cols, &vecs)
    }

    /// Some `x` with `self·x = b`, or `None`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Shape("right-hand side length".into()));
        }
        let aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let (rows, piv) = rref_rows(aug, self.cols + 1);
        if piv.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in rows.iter().zip(&piv) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Solves `self·X = B` column by column in a single elimination.
    pub fn solve_many(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::Shape("right-hand side rows".into()));
        }
        let n = self.cols;
        let aug = self.hcat(b)?;
        let (rows, piv) = rref_rows(aug.row_vecs(), n + b.cols);
        if piv.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (row, &p) in rows.iter().zip(&piv) {
            for j in 0..b.cols {
                x.set(p, j, row[n + j].clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape("inverse of non-square matrix".into()));
        }
        let x = self.solve_many(&Matrix::identity(self.rows))?;
        match x {
            Some(x) if self.rank() == self.rows => Ok(x),
            _ => Err(LinalgError::Singular),
        }
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] * &inv;
                for j in c..n {
                    if !a[c][j].is_zero() {
                        let t = &f * &a[c][j];
                        a[i][j] -= &t;
                    }
                }
            }
        }
        det
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.dot(self);
        }
        acc
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Scalar::pretty).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        Matrix::from_vec(j.rows, j.cols, j.entries).map_err(serde::de::Error::custom)
    }
}

/// Gauss–Jordan elimination on row vectors; returns the nonzero rows of the
/// reduced echelon form and the pivot columns.
pub fn rref_rows(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let support: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &support {
            rows[r][j] = &rows[r][j] * &inv;
        }
        let prow: Vec<(usize, Scalar)> = support.iter().map(|&j| (j, rows[r][j].clone())).collect();
        let (head, tail) = rows.split_at_mut(r);
        let (_, after) = tail.split_at_mut(1);
        let eliminate = |row: &mut Vector| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for (j, v) in &prow {
                let t = &f * v;
                row[*j] -= &t;
            }
        };
        if head.len() + after.len() > 64 {
            par::for_each_mut(head, eliminate);
            par::for_each_mut(after, eliminate);
        } else {
            head.iter_mut().for_each(eliminate);
            after.iter_mut().for_each(eliminate);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the null space of the matrix with the given rows.
pub fn kernel_vectors(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let (rr, piv) = rref_rows(rows.to_vec(), ncols);
    let mut is_piv = vec![false; ncols];
    for &p in &piv {
        is_piv[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_piv[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in rr.iter().zip(&piv) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            v
        })
        .collect()
}

/// Canonical (reduced echelon) basis of the span of `vecs`.
pub fn span_basis(vecs: &[Vector], dim: usize) -> Vec<Vector> {
    rref_rows(vecs.to_vec(), dim).0
}

pub fn span_rank(vecs: &[Vector], dim: usize) -> usize {
    rref_rows(vecs.to_vec(), dim).1.len()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Echelon basis grown one vector at a time. Every stored row remembers its
/// expression in terms of the accepted input vectors, so a dependent input
/// can be written as a combination of earlier accepted ones.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    dim: usize,
    rows: Vec<(usize, Vector, Vector)>,
    accepted: usize,
}

impl IncrementalBasis {
    pub fn new(dim: usize) -> Self {
        IncrementalBasis {
            dim,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.accepted
    }

    pub fn is_empty(&self) -> bool {
        self.accepted == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v`; returns the residual and the coefficients (over accepted
    /// vectors) of the part removed.
    fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut res = v.to_vec();
        let mut coef = vec![Scalar::zero(); self.accepted];
        for (p, row, comb) in &self.rows {
            if res[*p].is_zero() {
                continue;
            }
            let f = res[*p].clone();
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    res[j] -= &(&f * x);
                }
            }
            for (j, x) in comb.iter().enumerate() {
                if !x.is_zero() {
                    coef[j] += &(&f * x);
                }
            }
        }
        (res, coef)
    }

    /// Coefficients expressing `v` through accepted vectors, if it lies in the span.
    pub fn express(&self, v: &[Scalar]) -> Option<Vector> {
        let (res, coef) = self.reduce(v);
        is_zero_vec(&res).then_some(coef)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    /// Accepts `v` if independent; returns its index among accepted vectors.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<usize> {
        let (mut res, coef) = self.reduce(v);
        let p = res.iter().position(|x| !x.is_zero())?;
        let inv = res[p].inv().expect("nonzero");
        for x in res.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let idx = self.accepted;
        self.accepted += 1;
        for (_, _, comb) in self.rows.iter_mut() {
            comb.push(Scalar::zero());
        }
        let mut comb: Vector = coef.iter().map(|c| -(c * &inv)).collect();
        comb.push(inv);
        self.rows.push((p, res, comb));
        Some(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::xi;

    #[test]
    fn rref_basics() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = Matrix::zeros(2, 2).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());
        let z = Scalar::zeta();
        let m = Matrix::from_rows(vec![
            vec![Scalar::one(), z.clone()],
            vec![Scalar::zeta_pow(3), Scalar::from_int(-1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        assert_eq!(Matrix::identity(5).rank(), 5);
        let m = Matrix::from_rows(vec![vec![Scalar::one(), xi()]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec![-xi(), Scalar::one()]);
        let x = Matrix::identity(2)
            .solve(&[Scalar::zeta(), Scalar::zero()])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![Scalar::zeta(), Scalar::zero()]);
        let sing = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(sing.solve(&[Scalar::one(), Scalar::zero()]).unwrap(), None);
        assert!(sing.solve(&[Scalar::one()]).is_err());
    }

    #[test]
    fn kron_and_sum() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(3)),
            Matrix::identity(6)
        );
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let c = Matrix::from_ints(&[&[2, 0], &[1, 1]]);
        let d = Matrix::from_ints(&[&[1, -1], &[0, 3]]);
        assert_eq!(a.kron(&b).dot(&c.kron(&d)), a.dot(&c).kron(&b.dot(&d)));
        let s = Matrix::identity(2).direct_sum(&Matrix::identity(3).scale(&xi()));
        assert_eq!(s.rows(), 5);
        assert_eq!(s.get(4, 4), &xi());
        assert_eq!(s.get(0, 4), &Scalar::zero());
    }

    #[test]
    fn inverse_and_det() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::one(), xi()],
            vec![Scalar::zeta(), Scalar::from_int(3)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.dot(&inv), Matrix::identity(2));
        assert_eq!(a.det(), Scalar::from_int(3) - &xi() * &Scalar::zeta());
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(),
            Err(LinalgError::Singular)
        );
    }

    #[test]
    fn incremental_basis_expresses() {
        let mut b = IncrementalBasis::new(3);
        let v1 = vec![Scalar::one(), Scalar::one(), Scalar::zero()];
        let v2 = vec![Scalar::zero(), Scalar::one(), xi()];
        assert_eq!(b.insert(&v1), Some(0));
        assert_eq!(b.insert(&v2), Some(1));
        let w = vec_add(&vec_scale(&v1, &Scalar::from_int(2)), &vec_scale(&v2, &xi()));
        assert_eq!(b.insert(&w), None);
        assert_eq!(b.express(&w).unwrap(), vec![Scalar::from_int(2), xi()]);
        assert!(!b.contains(&unit_vec(3, 2)) || b.len() == 3);
    }

    #[test]
    fn json_shape_checked() {
        let m = Matrix::from_ints(&[&[1, 0], &[0, 1]]);
        let s = serde_json::to_string(&m).unwrap();
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"rows":2,"cols":2,"entries":["1/1,0/1,0/1,0/1"]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
    }
}

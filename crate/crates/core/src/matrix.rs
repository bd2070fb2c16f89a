//! Dense exact matrices over a [`Field`].
//!
//! Row-major storage. Pivoting is deterministic (leftmost nonzero column,
//! first usable row) so every basis produced downstream is reproducible
//! byte for byte. Zero-row and zero-column matrices are first-class; the
//! homological code leans on them.

use std::fmt;

use crate::error::Error;
use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Result of reduced row echelon form.
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.elem_to_string(self.at(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Matrix { field, rows: r, cols: c, data }
    }

    /// Convenience for tests and fixtures: integer entries.
    pub fn from_i64(field: F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let data = entries.iter().map(|&n| field.from_i64(n)).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, e: F::Elem) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { self.field.one() } else { self.field.zero() };
                if *self.at(i, j) != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.sub(self.at(i, j), other.at(i, j))
        })
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| self.field.neg(self.at(i, j)))
    }

    pub fn scale(&self, c: &F::Elem) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| self.field.mul(self.at(i, j), c))
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let f = &self.field;
        let mut out = Matrix::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.at(i, j);
                    let s = f.add(cur, &prod);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    /// Standard Kronecker product, block order major in `self`.
    pub fn kronecker(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.field, other.field, "kronecker needs a common field");
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let f = self.field.clone();
        Matrix::from_fn(f, r, c, |i, j| {
            let (ia, ib) = (i / other.rows, i % other.rows);
            let (ja, jb) = (j / other.cols, j % other.cols);
            self.field.mul(self.at(ia, ja), other.at(ib, jb))
        })
    }

    pub fn hstack(parts: &[&Matrix<F>]) -> Matrix<F> {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows));
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let field = parts[0].field.clone();
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.at(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix<F>]) -> Matrix<F> {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols));
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let field = parts[0].field.clone();
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(off + i, j, m.at(i, j).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    /// Block diagonal sum.
    pub fn block_diag(field: F, parts: &[&Matrix<F>]) -> Matrix<F> {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(ro + i, co + j, m.at(i, j).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    pub fn column(&self, j: usize) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, 1, |i, _| self.at(i, j).clone())
    }

    pub fn take_columns(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, idx.len(), |i, j| self.at(i, idx[j]).clone())
    }

    pub fn take_rows(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), idx.len(), self.cols, |i, j| self.at(idx[i], j).clone())
    }

    /// Reduced row echelon form with leftmost pivoting and unit leading
    /// entries; fully deterministic.
    pub fn rref(&self) -> Rref<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first row >= r with nonzero entry in this column
            let mut pivot = None;
            for i in r..m.rows {
                if !f.is_zero(m.at(i, col)) {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let lead = m.at(r, col).clone();
            let inv = f.inv(&lead).expect("nonzero pivot");
            for j in col..m.cols {
                let v = f.mul(m.at(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.at(i, col)) {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.at(i, j), &f.mul(&factor, m.at(r, j)));
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns span the right null space, ordered by free-column index.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let f = self.field.clone();
        let Rref { matrix: r, rank, pivot_cols } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Matrix::zero(f.clone(), self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (prow, &pc) in pivot_cols.iter().enumerate().take(rank) {
                let e = r.at(prow, fc);
                if !f.is_zero(e) {
                    out.set(pc, k, f.neg(e));
                }
            }
        }
        out
    }

    /// Solve `self * x = b` (b may have several columns). Returns the
    /// particular solution with zeros in all free coordinates, or `None`
    /// when some column of b is outside the image.
    pub fn solve(&self, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, b.rows, "solve: incompatible right-hand side");
        let f = self.field.clone();
        let aug = Matrix::hstack(&[self, b]);
        let Rref { matrix: r, rank, pivot_cols } = aug.rref();
        // any pivot in the b-part means inconsistency
        if pivot_cols.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(f, self.cols, b.cols);
        for (prow, &pc) in pivot_cols.iter().enumerate().take(rank) {
            for j in 0..b.cols {
                x.set(pc, j, r.at(prow, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field.clone(), self.rows);
        let x = self.solve(&id)?;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Matrix<F> {
        let Rref { matrix, rank, .. } = self.rref();
        matrix.take_rows(&(0..rank).collect::<Vec<_>>())
    }

    /// Canonical basis of the column space, as columns.
    pub fn column_space_basis(&self) -> Matrix<F> {
        self.transpose().row_space_basis().transpose()
    }

    /// True when every column of `other` lies in the column span of `self`.
    pub fn contains_columns(&self, other: &Matrix<F>) -> bool {
        self.solve(other).is_some()
    }

    /// Flatten column-by-column into a single column (vectorization).
    pub fn vectorize(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows * self.cols, 1, |i, _| {
            self.at(i % self.rows, i / self.rows).clone()
        })
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn from_vectorized(field: F, rows: usize, cols: usize, v: &Matrix<F>) -> Matrix<F> {
        assert_eq!(v.rows, rows * cols);
        assert_eq!(v.cols, 1);
        Matrix::from_fn(field, rows, cols, |i, j| v.at(j * rows + i, 0).clone())
    }

    pub fn parse_entries(field: F, rows: usize, cols: usize, entries: &[String]) -> Result<Matrix<F>, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut data = Vec::with_capacity(entries.len());
        for e in entries {
            data.push(field.elem_from_str(e)?);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn entry_strings(&self) -> Vec<String> {
        self.data.iter().map(|e| self.field.elem_to_string(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};
    use proptest::prelude::*;

    fn gf2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn rref_identity_gf2() {
        let m = Matrix::identity(gf2(), 2);
        let r = m.rref();
        assert!(r.matrix.is_identity());
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn rref_zero_rat() {
        let m = Matrix::zero(Rat, 3, 4);
        let r = m.rref();
        assert!(r.matrix.is_zero());
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn rref_proportional_rows_rank_one() {
        let m = Matrix::from_i64(Rat, 2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn kernel_identity_empty() {
        let m = Matrix::identity(Rat, 4);
        assert_eq!(m.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_zero_is_identity_basis() {
        let m = Matrix::zero(gf2(), 2, 3);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert!(k.is_identity());
    }

    #[test]
    fn kernel_sum_gf2() {
        let m = Matrix::from_i64(gf2(), 1, 2, &[1, 1]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(*k.at(0, 0), 1);
        assert_eq!(*k.at(1, 0), 1);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Matrix::identity(Rat, 3);
        let b = Matrix::from_i64(Rat, 3, 1, &[4, 5, 6]);
        assert_eq!(id.solve(&b).unwrap(), b);
        let z = Matrix::zero(Rat, 3, 2);
        assert!(z.solve(&b).is_none());
    }

    #[test]
    fn solve_scalar_inverse() {
        let m = Matrix::from_i64(Rat, 1, 1, &[2]);
        let b = Matrix::from_i64(Rat, 1, 1, &[1]);
        let x = m.solve(&b).unwrap();
        assert_eq!(Rat.elem_to_string(x.at(0, 0)), "1/2");
    }

    #[test]
    fn kron_identities() {
        let i2 = Matrix::identity(Rat, 2);
        let i3 = Matrix::identity(Rat, 3);
        assert!(i2.kronecker(&i3).is_identity());
        let a = Matrix::from_i64(Rat, 2, 2, &[1, 2, 3, 4]);
        let one = Matrix::identity(Rat, 1);
        assert_eq!(a.kronecker(&one), a);
    }

    #[test]
    fn kron_nilpotent_definition_unwinding() {
        let n = Matrix::from_i64(Rat, 2, 2, &[0, 1, 0, 0]);
        let k = n.kronecker(&n);
        assert_eq!(k.rank(), 1);
        // single 1 at (row 0*2+0, col 1*2+1)
        assert_eq!(Rat.elem_to_string(k.at(0, 3)), "1");
        for i in 0..4 {
            for j in 0..4 {
                if (i, j) != (0, 3) {
                    assert!(Rat.is_zero(k.at(i, j)));
                }
            }
        }
    }

    fn arb_matrix_gf5(max: usize) -> impl Strategy<Value = Matrix<Fp>> {
        (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0i64..5, r * c)
                .prop_map(move |v| Matrix::from_i64(Fp::new(5).unwrap(), r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent(m in arb_matrix_gf5(6)) {
            let r = m.rref();
            let rr = r.matrix.rref();
            prop_assert_eq!(r.matrix, rr.matrix);
        }

        #[test]
        fn rank_nullity(m in arb_matrix_gf5(6)) {
            let r = m.rank();
            let k = m.kernel_basis();
            prop_assert_eq!(r + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn solve_consistent_system(m in arb_matrix_gf5(5), xs in proptest::collection::vec(0i64..5, 5)) {
            let x = Matrix::from_i64(Fp::new(5).unwrap(), m.cols(), 1, &xs[..m.cols()]);
            let b = m.mul(&x);
            let got = m.solve(&b).expect("consistent");
            prop_assert_eq!(m.mul(&got), b);
        }

        #[test]
        fn kron_multiplicative(a in arb_matrix_gf5(3), b in arb_matrix_gf5(3),
                               c in proptest::collection::vec(0i64..5, 9), d in proptest::collection::vec(0i64..5, 9)) {
            let f = Fp::new(5).unwrap();
            let c = Matrix::from_i64(f.clone(), a.cols(), 3, &c[..a.cols() * 3]);
            let d = Matrix::from_i64(f, b.cols(), 3, &d[..b.cols() * 3]);
            let lhs = a.kronecker(&b).mul(&c.kronecker(&d));
            let rhs = a.mul(&c).kronecker(&b.mul(&d));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

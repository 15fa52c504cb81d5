//! Dense integer matrices with Hermite and Smith normal forms.
//!
//! Entries are arbitrary precision. Both normal forms pivot on the nonzero
//! entry of least absolute value and reduce by Euclidean division, which keeps
//! coefficient growth modest at the sizes this crate deals with.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone().into());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share a length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, e) in row.iter().enumerate() {
                m.set(i, j, e.clone().into());
            }
        }
        m
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns<T: Into<BigInt> + Clone>(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, e) in col.iter().enumerate() {
                m.set(i, j, e.clone().into());
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, keep.len());
        for (new_j, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, new_j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    m.data[idx] += a * other.get(k, j);
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Whether all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[dst] -= q * col[src]`
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] -= s;
        }
    }

    /// `row[dst] -= q * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= s;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of column-style echelon reduction: `input * transform = echelon`.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    /// Same shape as the input; the first `pivot_rows.len()` columns form the
    /// Hermite basis, the remaining columns are zero.
    pub echelon: IntMatrix,
    /// Unimodular column transform.
    pub transform: IntMatrix,
    /// Row of the pivot of each basis column, strictly increasing.
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Basis of the integer column lattice in Hermite form.
    pub fn basis(&self) -> IntMatrix {
        let keep: Vec<usize> = (0..self.rank()).collect();
        self.echelon.select_columns(&keep)
    }

    /// Basis of the integer right kernel of the input.
    pub fn kernel(&self) -> IntMatrix {
        let keep: Vec<usize> = (self.rank()..self.transform.cols()).collect();
        self.transform.select_columns(&keep)
    }
}

/// Column Hermite reduction with the accumulated unimodular transform.
///
/// Rows are processed top to bottom. Each basis column has zeros above its
/// pivot, the pivot is positive, and every earlier basis column's entry in
/// that pivot row is reduced into `[0, pivot)`.
pub fn column_echelon(a: &IntMatrix) -> ColumnEchelon {
    let mut h = a.clone();
    let mut v = IntMatrix::identity(a.cols());
    let mut pivot_rows = Vec::new();
    let mut next = 0usize;

    for row in 0..h.rows() {
        if next == h.cols() {
            break;
        }
        loop {
            let pick = (next..h.cols())
                .filter(|&c| !h.get(row, c).is_zero())
                .min_by(|&x, &y| h.get(row, x).abs().cmp(&h.get(row, y).abs()));
            let Some(p) = pick else { break };
            h.swap_cols(next, p);
            v.swap_cols(next, p);
            let pivot = h.get(row, next).clone();
            let mut clean = true;
            for c in next + 1..h.cols() {
                if h.get(row, c).is_zero() {
                    continue;
                }
                let q = h.get(row, c).div_floor(&pivot);
                h.sub_col_multiple(c, next, &q);
                v.sub_col_multiple(c, next, &q);
                if !h.get(row, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if next < h.cols() && !h.get(row, next).is_zero() {
            if h.get(row, next).is_negative() {
                h.negate_col(next);
                v.negate_col(next);
            }
            let pivot = h.get(row, next).clone();
            for c in 0..next {
                let q = h.get(row, c).div_floor(&pivot);
                h.sub_col_multiple(c, next, &q);
                v.sub_col_multiple(c, next, &q);
            }
            pivot_rows.push(row);
            next += 1;
        }
    }
    ColumnEchelon { echelon: h, transform: v, pivot_rows }
}

/// Hermite basis of the column lattice of `a` (one column per pivot).
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).basis()
}

/// Basis of the integer right kernel `{x : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).kernel()
}

/// `row_transform * input * col_transform = diag(invariants, 0, ...)`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    /// Positive invariant factors `d_1 | d_2 | ...`; zero diagonal entries are omitted.
    pub invariants: Vec<BigInt>,
    pub row_transform: IntMatrix,
    pub col_transform: IntMatrix,
    /// The diagonal matrix itself.
    pub diagonal: IntMatrix,
}

impl SmithDecomposition {
    /// Recomputes `U A V` and compares against the stored diagonal form.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let prod = self.row_transform.mul(a).mul(&self.col_transform);
        prod == self.diagonal
            && prod.is_diagonal()
            && self.invariants.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
            && self.invariants.iter().all(Signed::is_positive)
            && self.row_transform.determinant().abs().is_one()
            && self.col_transform.determinant().abs().is_one()
    }

    /// Invariant factors as machine integers, when they fit.
    pub fn invariants_u128(&self) -> Option<Vec<u128>> {
        self.invariants.iter().map(ToPrimitive::to_u128).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());
    let mut rank = 0usize;

    for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..s.rows() {
                for j in t..s.cols() {
                    let e = s.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| e.abs() < s.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let pivot = s.get(t, t).clone();

            let mut clean = true;
            for i in t + 1..s.rows() {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t).div_floor(&pivot);
                s.sub_row_multiple(i, t, &q);
                u.sub_row_multiple(i, t, &q);
                clean &= s.get(i, t).is_zero();
            }
            for j in t + 1..s.cols() {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j).div_floor(&pivot);
                s.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
                clean &= s.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold a row holding a non-multiple into the pivot row.
            let offender = (t + 1..s.rows())
                .find(|&i| (t + 1..s.cols()).any(|j| !(s.get(i, j) % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    s.sub_row_multiple(t, i, &minus_one);
                    u.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if t < s.rows() && t < s.cols() && !s.get(t, t).is_zero() {
            if s.get(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            rank = t + 1;
        } else {
            break;
        }
    }
    let invariants = (0..rank).map(|i| s.get(i, i).clone()).collect();
    SmithDecomposition { invariants, row_transform: u, col_transform: v, diagonal: s }
}

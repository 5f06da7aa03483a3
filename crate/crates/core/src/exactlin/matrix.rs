use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{int, Scalar};
use super::LinearSubspace;

/// Dense matrix over exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

/// Elementary row operation recorded during row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    /// `row[i] *= factor`
    Scale(usize, Scalar),
    /// `row[target] += factor * row[source]`
    AddMultiple { target: usize, source: usize, factor: Scalar },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Scalar::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[Vec<Scalar>] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.data
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: data.len(), cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        self.data.iter().map(|r| super::scalar::dot(r, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Reduced row-echelon form. Pivots are chosen leftmost-column first, and within a
    /// column the first nonzero row at or below the current position is taken.
    pub fn rref(&self) -> Matrix {
        self.reduce(None).0
    }

    /// Row reduction returning the pivot columns as well.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        self.reduce(None)
    }

    /// Row reduction that records every elementary operation applied, in order.
    pub fn rref_recorded(&self) -> (Matrix, Vec<RowOp>) {
        let mut ops = Vec::new();
        let (r, _) = self.reduce(Some(&mut ops));
        (r, ops)
    }

    fn reduce(&self, mut log: Option<&mut Vec<RowOp>>) -> (Matrix, Vec<usize>) {
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            if found != prow {
                a.swap(found, prow);
                if let Some(l) = log.as_deref_mut() {
                    l.push(RowOp::Swap(found, prow));
                }
            }
            let inv = a[prow][col].recip();
            if !inv.is_one() {
                for x in a[prow].iter_mut().skip(col) {
                    *x *= &inv;
                }
                if let Some(l) = log.as_deref_mut() {
                    l.push(RowOp::Scale(prow, inv));
                }
            }
            let pivot_row = a[prow].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == prow || row[col].is_zero() {
                    continue;
                }
                let factor = -row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x += &factor * p;
                    }
                }
                if let Some(l) = log.as_deref_mut() {
                    l.push(RowOp::AddMultiple { target: r, source: prow, factor });
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (Matrix { rows: self.rows, cols: self.cols, data: a }, pivots)
    }

    /// Rank computed by fraction-free elimination on denominator-cleared rows.
    pub fn rank(&self) -> usize {
        integer_rank(self.integer_rows(), self.cols)
    }

    /// Right null space as a linear subspace of `P^{cols-1}`.
    pub fn kernel(&self) -> LinearSubspace {
        LinearSubspace::from_vectors_unchecked(self.cols, self.kernel_vectors())
    }

    /// A basis of the right null space read off the reduced row-echelon form: one
    /// vector per free column.
    pub fn kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.reduce(None);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.data[i][free].clone();
                }
                v
            })
            .collect()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = self
            .data
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let out = r.iter().map(|x| (x * &l).to_integer()).collect();
                scale *= l;
                out
            })
            .collect();
        Scalar::new(integer_determinant(rows), scale)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                r.iter().map(|x| (x * &l).to_integer()).collect()
            })
            .collect()
    }
}

impl RowOp {
    /// Applies the inverse of this operation to `m` in place.
    pub fn undo(&self, m: &mut Matrix) {
        match self {
            RowOp::Swap(i, j) => m.data.swap(*i, *j),
            RowOp::Scale(i, f) => {
                let inv = f.recip();
                for x in m.data[*i].iter_mut() {
                    *x *= &inv;
                }
            }
            RowOp::AddMultiple { target, source, factor } => {
                let src = m.data[*source].clone();
                for (x, s) in m.data[*target].iter_mut().zip(&src) {
                    *x -= factor * s;
                }
            }
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(found, rank);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pivot = prow[col].clone();
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = &pivot * &row[j] - &lead * &prow[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(found) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if found != k {
            m.swap(found, k);
            sign = !sign;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let prow = &top[k];
        let pivot = prow[k].clone();
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &pivot * &row[j] - &lead * &prow[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot;
    }
    if n == 0 {
        return BigInt::one();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::ratio;

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::identity(3);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_of_rank_one_rows() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        let z = Matrix::zeros(2, 3);
        assert_eq!(z.kernel().rank(), 3);
        assert_eq!(Matrix::identity(4).kernel().rank(), 0);
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = Matrix::from_rows(
            3,
            vec![
                vec![int(2), ratio(1, 2), int(0)],
                vec![int(-1), int(3), int(4)],
                vec![ratio(1, 3), int(0), int(5)],
            ],
        );
        // 2*(15-0) - 1/2*(-5-4/3) + 0
        let expected = int(30) + ratio(1, 2) * (int(5) + ratio(4, 3));
        assert_eq!(m.determinant(), expected);
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.determinant().is_zero());
    }

    #[test]
    fn rank_skips_empty_columns() {
        let m = Matrix::from_i64(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rref_with_pivots().1, vec![1, 3]);
    }
}

//! Exact rational scalars, dense matrices and projective linear subspaces.
//!
//! Everything here is exact. Subspaces are kept in a canonical form (reduced
//! row-echelon basis, each row scaled to coprime integers with a positive leading
//! entry) so that equality of subspaces is equality of values.

mod matrix;
pub mod scalar;

pub use matrix::{integer_rank, Matrix, RowOp};
pub use scalar::Scalar;

use num_traits::Zero;
use rand::Rng;

use crate::Error;
use scalar::{is_zero_vec, normalize_projective};

/// A projective linear subspace of `P^N`, `N = ambient_dim`, held by a canonical basis
/// of homogeneous coordinate vectors of length `N + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    coords: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl LinearSubspace {
    /// The empty subspace of `P^ambient_dim`.
    pub fn empty(ambient_dim: usize) -> Self {
        LinearSubspace { coords: ambient_dim + 1, basis: Vec::new(), pivots: Vec::new() }
    }

    /// All of `P^ambient_dim`.
    pub fn whole(ambient_dim: usize) -> Self {
        Self::from_vectors_unchecked(ambient_dim + 1, Matrix::identity(ambient_dim + 1).into_rows())
    }

    /// Span of the given coordinate vectors (length `ambient_dim + 1` each).
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self, Error> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim + 1) {
            return Err(Error::AmbientMismatch { expected: ambient_dim + 1, found: v.len() });
        }
        Ok(Self::from_vectors_unchecked(ambient_dim + 1, vectors.to_vec()))
    }

    /// The single point `⟨v⟩`.
    pub fn point(v: &[Scalar]) -> Result<Self, Error> {
        if v.is_empty() || is_zero_vec(v) {
            return Err(Error::ZeroVector);
        }
        Ok(Self::from_vectors_unchecked(v.len(), vec![v.to_vec()]))
    }

    /// Common zero set of the rows of `equations` (the right kernel).
    pub fn from_equations(equations: &Matrix) -> Self {
        equations.kernel()
    }

    pub(crate) fn from_vectors_unchecked(coords: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(coords, vectors);
        let (r, pivots) = m.rref_with_pivots();
        let basis: Vec<Vec<Scalar>> =
            r.into_rows().into_iter().take(pivots.len()).map(|row| normalize_projective(&row)).collect();
        LinearSubspace { coords, basis, pivots }
    }

    /// Projective dimension `N` of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.coords - 1
    }

    /// Dimension of the underlying vector space.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension; the empty subspace has dimension −1.
    pub fn proj_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_point(&self) -> bool {
        self.basis.len() == 1
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.coords, self.basis.clone())
    }

    /// Rows whose common kernel is this subspace.
    pub fn equations(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::identity(self.coords);
        }
        let rows = self.basis_matrix().kernel_vectors();
        Matrix::from_rows(self.coords, rows)
    }

    fn check_ambient(&self, n: usize) -> Result<(), Error> {
        if n != self.coords {
            return Err(Error::AmbientMismatch { expected: self.coords, found: n });
        }
        Ok(())
    }

    /// Reduces `v` against the canonical basis; zero remainder means membership.
    fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = &r[p] / &row[p];
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    /// Whether the projective point `v` lies in this subspace.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        self.check_ambient(v.len())?;
        if is_zero_vec(v) {
            return Err(Error::ZeroVector);
        }
        Ok(is_zero_vec(&self.residual(v)))
    }

    pub fn contains_subspace(&self, other: &LinearSubspace) -> Result<bool, Error> {
        self.check_ambient(other.coords)?;
        Ok(other.basis.iter().all(|b| is_zero_vec(&self.residual(b))))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        self.check_ambient(v.len())?;
        if !is_zero_vec(&self.residual(v)) {
            return Ok(None);
        }
        Ok(Some(self.basis.iter().zip(&self.pivots).map(|(row, &p)| &v[p] / &row[p]).collect()))
    }

    /// Linear span of the union.
    pub fn join(&self, other: &LinearSubspace) -> Result<Self, Error> {
        self.check_ambient(other.coords)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Self::from_vectors_unchecked(self.coords, rows))
    }

    /// Intersection, computed as the kernel of the stacked equations of both subspaces.
    pub fn intersect(&self, other: &LinearSubspace) -> Result<Self, Error> {
        self.check_ambient(other.coords)?;
        Ok(self.equations().vstack(&other.equations()).kernel())
    }

    /// Intersection with the kernel of extra equations.
    pub fn restrict(&self, equations: &Matrix) -> Result<Self, Error> {
        self.check_ambient(equations.cols())?;
        Ok(self.equations().vstack(equations).kernel())
    }

    /// A pseudo-random rational point: integer combination of the basis with
    /// coefficients in `[-h, h]`, redrawn while zero.
    pub fn random_point<R: Rng>(&self, rng: &mut R, h: i64) -> Option<Vec<Scalar>> {
        if self.basis.is_empty() {
            return None;
        }
        loop {
            let mut v = vec![Scalar::zero(); self.coords];
            for b in &self.basis {
                let c = Scalar::from_integer(rng.gen_range(-h..=h).into());
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            if !is_zero_vec(&v) {
                return Some(v);
            }
        }
    }
}

impl std::fmt::Debug for LinearSubspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<String>> = self.basis.iter().map(|r| scalar::fmt_vec(r)).collect();
        write!(f, "LinearSubspace(P^{}, dim {}, {:?})", self.coords - 1, self.proj_dim(), rows)
    }
}

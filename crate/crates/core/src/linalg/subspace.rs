use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::matrix::row_reduce;
use crate::linalg::Matrix;

/// A subspace of `F^n`, stored as the canonical reduced row-echelon basis.
///
/// Two subspaces are equal as sets exactly when their bases are identical,
/// so the derived `Eq` and `Hash` are set equality and set hashing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The line spanned by the `i`-th standard basis vector.
    pub fn unit(field: FieldSpec, ambient_dim: usize, i: usize) -> Self {
        let mut v = vec![field.zero(); ambient_dim];
        v[i] = field.one();
        Self::from_vectors(field, ambient_dim, vec![v]).expect("unit vector")
    }

    /// Span of the given vectors.
    pub fn from_vectors(
        field: FieldSpec,
        ambient_dim: usize,
        vectors: Vec<Vec<Scalar>>,
    ) -> Result<Self, Error> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if v.iter().any(|s| s.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        let (rows, pivots) = row_reduce(vectors, ambient_dim);
        Ok(Subspace {
            basis: Matrix::from_rows(field, ambient_dim, rows)?,
            pivots,
        })
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let rows = m.row_vectors().map(<[Scalar]>::to_vec).collect();
        Self::from_vectors(m.field(), m.cols(), rows).expect("rows of a matrix are well-formed")
    }

    /// Wraps a matrix that is already in reduced row-echelon form with no
    /// zero rows. Used by the enumerator, which generates canonical bases
    /// directly.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(Subspace::from_matrix(&basis).basis, basis);
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// The canonical basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; they index a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), Error> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `v` minus its component along the canonical basis. Zero exactly when
    /// `v` lies in the subspace; a linear map in `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub(crate) fn reduce_in_place(&self, w: &mut [Scalar]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = -&w[p];
            let row = self.basis.row(r);
            for c in p..w.len() {
                if !row[c].is_zero() {
                    w[c].add_mul_assign(&factor, &row[c]);
                }
            }
        }
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        if other.dim() > self.dim() || other.ambient_dim() != self.ambient_dim() {
            return false;
        }
        if other.dim() == self.dim() {
            return self == other;
        }
        // every pivot of a subspace of self must also be a pivot of self
        if !other.pivots.iter().all(|p| self.pivots.binary_search(p).is_ok()) {
            return false;
        }
        other.vectors().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn embed(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vec![self.field().zero(); self.ambient_dim()];
        for (row, c) in self.vectors().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in v.iter_mut().zip(row) {
                slot.add_mul_assign(c, x);
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let rows = self
            .vectors()
            .chain(other.vectors())
            .map(<[Scalar]>::to_vec)
            .collect();
        Subspace::from_vectors(self.field(), self.ambient_dim(), rows)
    }

    /// Intersection by the Zassenhaus construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        let n = self.ambient_dim();
        let zero = self.field().zero();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.vectors() {
            let mut row = u.to_vec();
            row.extend_from_slice(u);
            rows.push(row);
        }
        for v in other.vectors() {
            let mut row = v.to_vec();
            row.extend(core::iter::repeat_n(zero.clone(), n));
            rows.push(row);
        }
        let (reduced, pivots) = row_reduce(rows, 2 * n);
        let meet = reduced
            .into_iter()
            .zip(pivots)
            .filter(|&(_, p)| p >= n)
            .map(|(row, _)| row[n..].to_vec())
            .collect();
        Subspace::from_vectors(self.field(), n, meet)
    }

    /// `{M·v : v ∈ self}`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, Error> {
        if m.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if m.cols() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: m.cols(),
            });
        }
        let rows = self.vectors().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(self.field(), m.rows(), rows)
    }

    /// `{v : M·v ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace, Error> {
        if m.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if m.rows() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: m.rows(),
            });
        }
        let columns: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| self.reduce(&m.column(c))).collect();
        Ok(Matrix::from_columns(self.field(), m.rows(), &columns)?.kernel())
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in the
    /// coordinates of the canonical basis.
    pub fn restrict_operator(&self, m: &Matrix) -> Result<Matrix, Error> {
        let n = m.require_square()?;
        if n != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: n,
            });
        }
        let columns = self
            .vectors()
            .map(|v| self.coordinates(&m.apply(v)).ok_or(Error::NotInvariant))
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_columns(self.field(), self.dim(), &columns)
    }

    /// Whether `M·self ⊆ self`.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.vectors().all(|v| self.contains_vector(&m.apply(v)))
    }

    /// Reduces a rational subspace modulo `p` and re-canonicalises. The
    /// dimension can drop when the rational basis degenerates mod p.
    pub fn to_field(&self, field: FieldSpec) -> Result<Subspace, Error> {
        let rows = self
            .vectors()
            .map(|v| v.iter().map(|s| field.convert(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::from_vectors(field, self.ambient_dim(), rows)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dimension first, then the canonical basis entries lexicographically.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| {
                self.vectors()
                    .flatten()
                    .cmp(other.vectors().flatten())
            })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.basis)
    }
}

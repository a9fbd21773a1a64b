//! Leibniz algebras given by structure constants.
//!
//! Conventions: `b_i b_j = Σ_k c[i][j][k] b_k`, and the left Leibniz
//! identity `x(yz) = (xy)z + y(xz)`. Left multiplication `L_x` acts on
//! column vectors as `y ↦ xy`, right multiplication `R_x` as `y ↦ yx`.

mod construct;
mod series;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Subspace};

pub use construct::Projection;
pub use series::SeriesReport;

/// A finite-dimensional (left) Leibniz algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    /// `c[i][j][k]` at `(i * n + j) * n + k`.
    table: Vec<Scalar>,
}

/// First basis triple on which the Leibniz identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub triple: (usize, usize, usize),
    /// `b_i(b_j b_l)`
    pub lhs: Vec<Scalar>,
    /// `(b_i b_j) b_l + b_j (b_i b_l)`
    pub rhs: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, l) = self.triple;
        write!(f, "triple ({i}, {j}, {l}): lhs [")?;
        write_vec(f, &self.lhs)?;
        f.write_str("] != rhs [")?;
        write_vec(f, &self.rhs)?;
        f.write_str("]")
    }
}

fn write_vec(f: &mut fmt::Formatter<'_>, v: &[Scalar]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// An element of an algebra, as a coordinate vector in its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

/// Accumulates structure constants before validation.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    field: FieldSpec,
    labels: Vec<String>,
    table: Vec<Scalar>,
}

impl TableBuilder {
    pub fn new<S: Into<String>>(field: FieldSpec, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        TableBuilder {
            field,
            labels,
            table: vec![field.zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> &mut Self {
        let n = self.dim();
        self.table[(i * n + j) * n + k] = value;
        self
    }

    /// Sets the whole product `b_i b_j = Σ coeff · b_k`.
    pub fn product(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) -> &mut Self {
        let n = self.dim();
        for k in 0..n {
            self.table[(i * n + j) * n + k] = self.field.zero();
        }
        for (k, c) in terms {
            self.table[(i * n + j) * n + k] = c.clone();
        }
        self
    }

    /// Integer-coefficient convenience for [`TableBuilder::product`].
    pub fn product_ints(&mut self, i: usize, j: usize, terms: &[(usize, i64)]) -> &mut Self {
        let field = self.field;
        let terms: Vec<_> = terms.iter().map(|&(k, c)| (k, field.from_i64(c))).collect();
        self.product(i, j, &terms)
    }

    pub fn build(self) -> Result<LeibnizAlgebra, Error> {
        LeibnizAlgebra::new(self.field, self.labels, self.table)
    }

    pub fn build_unchecked(self) -> Result<LeibnizAlgebra, Error> {
        LeibnizAlgebra::new_unchecked(self.field, self.labels, self.table)
    }
}

impl LeibnizAlgebra {
    /// Builds and validates an algebra.
    pub fn new(field: FieldSpec, labels: Vec<String>, table: Vec<Scalar>) -> Result<Self, Error> {
        let alg = Self::new_unchecked(field, labels, table)?;
        alg.validate()
            .map_err(|v| Error::IdentityViolated(Box::new(v)))?;
        Ok(alg)
    }

    /// Shape and label checks only; the identity is not verified. Exists
    /// so the validator's failure path can be exercised.
    pub fn new_unchecked(
        field: FieldSpec,
        labels: Vec<String>,
        table: Vec<Scalar>,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if table.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: table.len(),
            });
        }
        if table.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::BadLabels(String::from("empty label")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::BadLabels(alloc::format!("duplicate label {l:?}")));
            }
        }
        Ok(LeibnizAlgebra {
            field,
            labels,
            table,
        })
    }

    /// The zero-dimensional algebra.
    pub fn zero(field: FieldSpec) -> Self {
        LeibnizAlgebra {
            field,
            labels: Vec::new(),
            table: Vec::new(),
        }
    }

    /// Abelian algebra with basis `e1..en`.
    pub fn abelian(field: FieldSpec, n: usize) -> Self {
        TableBuilder::new(field, (1..=n).map(|i| alloc::format!("e{i}")))
            .build()
            .expect("abelian algebras are Leibniz")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.table[(i * n + j) * n + k]
    }

    /// Coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element(self.basis_vector(i))
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// Checks a coordinate vector against this algebra.
    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, Error> {
        self.check_vector(&coords)?;
        Ok(Element(coords))
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Result<Element, Error> {
        self.element(coords.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    /// Writes a vector as a labelled combination, e.g. `x + -1*n`.
    pub fn describe(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (c, l) in v.iter().zip(&self.labels).filter(|(c, _)| !c.is_zero()) {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, text.as_str()),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
                (true, false) => {}
            }
            if magnitude == "1" {
                out.push_str(l);
            } else {
                out.push_str(&format!("{magnitude}*{l}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<(), Error> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        if v.iter().any(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<(), Error> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// The whole underlying space.
    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// Span of the given vectors inside this algebra.
    pub fn span(&self, vectors: Vec<Vec<Scalar>>) -> Result<Subspace, Error> {
        Subspace::from_vectors(self.field, self.dim(), vectors)
    }

    /// Bilinear product of coordinate vectors (unchecked lengths).
    pub(crate) fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                let row = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                for (slot, c) in out.iter_mut().zip(row) {
                    if !c.is_zero() {
                        slot.add_mul_assign(&w, c);
                    }
                }
            }
        }
        out
    }

    /// `xy`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element, Error> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(Element(self.mul_vec(x, y)))
    }

    /// Matrix of `L_x : y ↦ xy`.
    pub fn left_mult(&self, x: &[Scalar]) -> Result<Matrix, Error> {
        self.check_vector(x)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul_vec(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `R_x : y ↦ yx`.
    pub fn right_mult(&self, x: &[Scalar]) -> Result<Matrix, Error> {
        self.check_vector(x)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul_vec(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Checks `b_i(b_j b_l) = (b_i b_j) b_l + b_j (b_i b_l)` on all basis
    /// triples, in lexicographic order of `(i, j, l)`.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ej = self.basis_vector(j);
                let bij = self.basis_product(i, j);
                for l in 0..n {
                    let lhs = self.mul_vec(&ei, self.basis_product(j, l));
                    let mut rhs = self.mul_vec(bij, &self.basis_vector(l));
                    let second = self.mul_vec(&ej, self.basis_product(i, l));
                    for (a, b) in rhs.iter_mut().zip(&second) {
                        *a = &*a + b;
                    }
                    if lhs != rhs {
                        return Err(Violation {
                            triple: (i, j, l),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `b_i b_j + b_j b_i = 0` for all pairs (and hence `x² = 0`).
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                self.basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// `span{u'v' : u' ∈ basis(u), v' ∈ basis(v)}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, Error> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut rows = Vec::with_capacity(u.dim() * v.dim());
        for a in u.vectors() {
            for b in v.vectors() {
                rows.push(self.mul_vec(a, b));
            }
        }
        self.span(rows)
    }

    /// `L² = LL`.
    pub fn square(&self) -> Subspace {
        let whole = self.whole();
        self.product_space(&whole, &whole).expect("same algebra")
    }

    /// `s·s ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, Error> {
        self.check_subspace(s)?;
        for a in s.vectors() {
            for b in s.vectors() {
                if !s.contains_vector(&self.mul_vec(a, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `L·s ⊆ s` and `s·L ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, Error> {
        self.check_subspace(s)?;
        if s.is_full() || s.is_zero() {
            return Ok(true);
        }
        let n = self.dim();
        for a in s.vectors() {
            for j in 0..n {
                let ej = self.basis_vector(j);
                if !s.contains_vector(&self.mul_vec(&ej, a)) || !s.contains_vector(&self.mul_vec(a, &ej)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the ideal `s` is an ideal of `self` and also of its
    /// sub-algebra `within` (used for cores relative to a subalgebra).
    fn closure_step(&self, s: &Subspace, ideal: bool) -> Result<Subspace, Error> {
        let mut rows: Vec<Vec<Scalar>> = s.vectors().map(<[Scalar]>::to_vec).collect();
        if ideal {
            for a in s.vectors() {
                for j in 0..self.dim() {
                    let ej = self.basis_vector(j);
                    rows.push(self.mul_vec(&ej, a));
                    rows.push(self.mul_vec(a, &ej));
                }
            }
        } else {
            for a in s.vectors() {
                for b in s.vectors() {
                    rows.push(self.mul_vec(a, b));
                }
            }
        }
        self.span(rows)
    }

    fn closure(&self, gens: &[Vec<Scalar>], ideal: bool) -> Result<Subspace, Error> {
        for g in gens {
            self.check_vector(g)?;
        }
        let mut s = self.span(gens.to_vec())?;
        loop {
            let next = self.closure_step(&s, ideal)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Smallest subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vec<Scalar>]) -> Result<Subspace, Error> {
        self.closure(gens, false)
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Vec<Scalar>]) -> Result<Subspace, Error> {
        self.closure(gens, true)
    }

    /// `{x : xL = 0}`.
    pub fn left_center(&self) -> Subspace {
        let ops: Vec<Matrix> = (0..self.dim())
            .map(|j| self.right_mult(&self.basis_vector(j)).expect("basis vector"))
            .collect();
        stacked_kernel(self.field, self.dim(), &ops)
    }

    /// `{x : xL = Lx = 0}`.
    pub fn center(&self) -> Subspace {
        let mut ops: Vec<Matrix> = Vec::with_capacity(2 * self.dim());
        for j in 0..self.dim() {
            let e = self.basis_vector(j);
            ops.push(self.right_mult(&e).expect("basis vector"));
            ops.push(self.left_mult(&e).expect("basis vector"));
        }
        stacked_kernel(self.field, self.dim(), &ops)
    }

    /// Largest ideal of `self` contained in `s`.
    pub fn core(&self, s: &Subspace) -> Result<Subspace, Error> {
        self.relative_core(s, &self.whole())
    }

    /// Largest subspace `K ⊆ s` with `K·B ⊆ K` and `B·K ⊆ K`, where `B` is a
    /// subalgebra containing `s`: the core of `s` as an ideal of `B`.
    pub fn relative_core(&self, s: &Subspace, within: &Subspace) -> Result<Subspace, Error> {
        self.check_subspace(s)?;
        self.check_subspace(within)?;
        let mut k = s.clone();
        loop {
            if k.is_zero() {
                return Ok(k);
            }
            let kvecs: Vec<&[Scalar]> = k.vectors().collect();
            // each row of `conds` is one scalar condition on the coefficients t_r
            let mut columns: Vec<Vec<Scalar>> = vec![Vec::new(); kvecs.len()];
            for b in within.vectors() {
                for (r, kv) in kvecs.iter().enumerate() {
                    columns[r].extend(k.reduce(&self.mul_vec(kv, b)));
                    columns[r].extend(k.reduce(&self.mul_vec(b, kv)));
                }
            }
            let height = columns[0].len();
            let cond = Matrix::from_columns(self.field, height, &columns)?;
            let sol = cond.kernel();
            let next = self.span(sol.vectors().map(|t| k.embed(t)).collect())?;
            if next == k {
                return Ok(k);
            }
            k = next;
        }
    }

    /// Lower central series of the subalgebra `s` (left-normed: `s^{k+1} =
    /// s·s^k`), ending at the first repeated term.
    pub fn lower_central_of(&self, s: &Subspace) -> Result<Vec<Subspace>, Error> {
        let mut terms = vec![s.clone()];
        loop {
            let next = self.product_space(s, terms.last().expect("nonempty"))?;
            if &next == terms.last().expect("nonempty") {
                return Ok(terms);
            }
            terms.push(next);
        }
    }

    /// Derived series of the subalgebra `s`.
    pub fn derived_of(&self, s: &Subspace) -> Result<Vec<Subspace>, Error> {
        let mut terms = vec![s.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            let next = self.product_space(last, last)?;
            if &next == last {
                return Ok(terms);
            }
            terms.push(next);
        }
    }

    /// Whether the subalgebra `s` is nilpotent as an algebra.
    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool, Error> {
        Ok(self.lower_central_of(s)?.last().is_some_and(Subspace::is_zero))
    }

    /// Whether the subalgebra `s` is solvable as an algebra.
    pub fn is_solvable_subalgebra(&self, s: &Subspace) -> Result<bool, Error> {
        Ok(self.derived_of(s)?.last().is_some_and(Subspace::is_zero))
    }

    /// Reinterprets the same table over another field (reducing rational
    /// constants mod p).
    pub fn to_field(&self, field: FieldSpec) -> Result<LeibnizAlgebra, Error> {
        let table = self
            .table
            .iter()
            .map(|s| field.convert(s))
            .collect::<Result<Vec<_>, _>>()?;
        LeibnizAlgebra::new(field, self.labels.clone(), table)
    }

    /// Whether every structure constant is an integer (always true mod p).
    pub fn has_integer_constants(&self) -> bool {
        self.table.iter().all(|s| match s {
            Scalar::Rational(q) => q.is_integer(),
            Scalar::Residue { .. } => true,
        })
    }

    /// Swaps the roles of the factors (`c[i][j][k] ↔ c[j][i][k]`), turning a
    /// right Leibniz table into a left one and vice versa. Not validated.
    pub fn transposed_table(field: FieldSpec, n: usize, table: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[(j * n + i) * n + k] = table[(i * n + j) * n + k].clone();
                }
            }
        }
        out
    }
}

/// `∩ ker(ops)` for square operators on `F^n`.
pub(crate) fn stacked_kernel(field: FieldSpec, n: usize, ops: &[Matrix]) -> Subspace {
    if ops.is_empty() {
        return Subspace::full(field, n);
    }
    let mut rows = Vec::with_capacity(ops.len() * n);
    for op in ops {
        rows.extend(op.row_vectors().map(<[Scalar]>::to_vec));
    }
    Matrix::from_rows(field, n, rows)
        .expect("operators share a shape")
        .kernel()
}

#[cfg(test)]
mod tests;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::LeibnizAlgebra;
use crate::error::Error;
use crate::field::Scalar;
use crate::linalg::Subspace;

/// The canonical map `L → L/I`. Quotient coordinates are the non-pivot
/// coordinates of `I`'s reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    ideal: Subspace,
    kept: Vec<usize>,
}

impl Projection {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Indices in `L` of the coordinates kept by the quotient.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.kept.iter().map(|&k| r[k].clone()).collect()
    }

    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace, Error> {
        let rows = s.vectors().map(|v| self.project(v)).collect();
        Subspace::from_vectors(s.field(), self.kept.len(), rows)
    }

    /// The section placing quotient coordinates on the kept indices.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let field = self.ideal.field();
        let mut v = vec![field.zero(); self.ideal.ambient_dim()];
        for (c, &k) in coords.iter().zip(&self.kept) {
            v[k] = c.clone();
        }
        v
    }

    /// Full preimage of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace) -> Result<Subspace, Error> {
        let field = self.ideal.field();
        let n = self.ideal.ambient_dim();
        let mut rows: Vec<Vec<Scalar>> = s.vectors().map(|v| self.lift(v)).collect();
        rows.extend(self.ideal.vectors().map(<[Scalar]>::to_vec));
        Subspace::from_vectors(field, n, rows)
    }
}

impl LeibnizAlgebra {
    /// `L/I` together with the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, Projection), Error> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let kept = ideal.non_pivots();
        let proj = Projection {
            ideal: ideal.clone(),
            kept,
        };
        let m = proj.kept.len();
        let mut table = Vec::with_capacity(m * m * m);
        for &a in &proj.kept {
            for &b in &proj.kept {
                table.extend(proj.project(self.basis_product(a, b)));
            }
        }
        let labels = proj.kept.iter().map(|&k| self.labels[k].clone()).collect();
        let q = LeibnizAlgebra::new(self.field, labels, table)
            .map_err(|e| Error::Inconsistent(format!("quotient failed validation: {e}")))?;
        Ok((q, proj))
    }

    /// The subalgebra `s` as an algebra in its reduced basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LeibnizAlgebra, Error> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotASubalgebra);
        }
        let rows: Vec<&[Scalar]> = s.vectors().collect();
        let mut table = Vec::with_capacity(rows.len().pow(3));
        for a in &rows {
            for b in &rows {
                let prod = self.mul_vec(a, b);
                table.extend(s.coordinates(&prod).expect("closed under product"));
            }
        }
        let labels = self.restricted_labels(s);
        LeibnizAlgebra::new(self.field, labels, table)
            .map_err(|e| Error::Inconsistent(format!("restriction failed validation: {e}")))
    }

    /// Original labels when every basis row of `s` is a unit vector,
    /// otherwise `s1, s2, ...`.
    fn restricted_labels(&self, s: &Subspace) -> Vec<String> {
        let units = s.vectors().zip(s.pivots()).all(|(v, &p)| {
            v.iter().enumerate().all(|(k, c)| if k == p { c.is_one() } else { c.is_zero() })
        });
        if units {
            s.pivots().iter().map(|&p| self.labels[p].clone()).collect()
        } else {
            (1..=s.dim()).map(|i| format!("s{i}")).collect()
        }
    }

    /// `A ⊕ B` with all cross products zero. Colliding labels of `B` get
    /// primes appended.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> Result<LeibnizAlgebra, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut labels = self.labels.clone();
        let mut used: BTreeSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut l = l.clone();
            while used.contains(&l) {
                l.push('\'');
            }
            used.insert(l.clone());
            labels.push(l);
        }
        let mut table = vec![self.field.zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    table[(i * n + j) * n + k] = self.coeff(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    table[((n1 + i) * n + n1 + j) * n + n1 + k] = other.coeff(i, j, k).clone();
                }
            }
        }
        LeibnizAlgebra::new(self.field, labels, table)
    }

    /// Embeds a subspace of the `index`-th summand of a direct sum of
    /// algebras with dimensions `dims`.
    pub fn embed_summand(s: &Subspace, dims: &[usize], index: usize) -> Result<Subspace, Error> {
        let field = s.field();
        let n: usize = dims.iter().sum();
        let offset: usize = dims[..index].iter().sum();
        let rows = s
            .vectors()
            .map(|v| {
                let mut w = vec![field.zero(); n];
                w[offset..offset + v.len()].clone_from_slice(v);
                w
            })
            .collect();
        Subspace::from_vectors(field, n, rows)
    }
}

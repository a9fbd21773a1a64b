//! Characteristic polynomials and the spectral decompositions built on them.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Scalar;
use crate::linalg::{Matrix, Poly, Subspace};

/// Monic characteristic polynomial `det(tI - M)`.
///
/// Reduces to upper Hessenberg form by elementary similarities and then
/// runs the usual three-term recurrence, so only field operations are used.
pub fn char_poly(m: &Matrix) -> Result<Poly, Error> {
    let n = m.require_square()?;
    let field = m.field();
    let mut h: Vec<Vec<Scalar>> = m.row_vectors().map(<[Scalar]>::to_vec).collect();

    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let pivot_inv = h[j + 1][j].inv().expect("nonzero pivot");
        for i in j + 2..n {
            if h[i][j].is_zero() {
                continue;
            }
            let u = &h[i][j] * &pivot_inv;
            // row_i -= u * row_{j+1}
            let neg = -&u;
            let src = h[j + 1].clone();
            for (dst, s) in h[i].iter_mut().zip(&src) {
                dst.add_mul_assign(&neg, s);
            }
            // col_{j+1} += u * col_i
            for row in h.iter_mut() {
                let ci = row[i].clone();
                row[j + 1].add_mul_assign(&u, &ci);
            }
        }
    }

    // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}
    let mut polys: Vec<Poly> = vec![Poly::one(field)];
    for k in 0..n {
        let mut pk = polys[k].mul(&Poly::linear(&h[k][k]));
        let mut sub_prod = field.one();
        for i in (0..k).rev() {
            sub_prod = &sub_prod * &h[i + 1][i];
            if sub_prod.is_zero() {
                break;
            }
            let coeff = &h[i][k] * &sub_prod;
            if !coeff.is_zero() {
                pk = pk.sub(&polys[i].scale(&coeff));
            }
        }
        polys.push(pk);
    }
    Ok(polys.pop().expect("at least p_0"))
}

/// Whether `M^n = 0` for an `n x n` matrix.
pub fn is_nilpotent_operator(m: &Matrix) -> Result<bool, Error> {
    let n = m.require_square()?;
    Ok(m.pow(n)?.is_zero())
}

/// Fitting decomposition of `F^n` under `M`: `(ker M^n, im M^n)`.
pub fn fitting_decomposition(m: &Matrix) -> Result<(Subspace, Subspace), Error> {
    let n = m.require_square()?;
    let p = m.pow(n)?;
    Ok((p.kernel(), p.column_space()))
}

/// One ground-field eigenvalue of an operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenpair {
    pub value: Scalar,
    /// Algebraic multiplicity as a root of the characteristic polynomial.
    pub multiplicity: usize,
    /// `ker(M - λ)`.
    pub eigenspace: Subspace,
    /// `ker((M - λ)^n)`.
    pub generalized: Subspace,
}

/// The ground-field part of a spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub char_poly: Poly,
    pub eigenpairs: Vec<Eigenpair>,
    /// Whether the characteristic polynomial splits over the ground field.
    pub split: bool,
}

/// All eigenvalues of `M` lying in the ground field, with eigenspaces.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Spectrum, Error> {
    let n = m.require_square()?;
    let cp = char_poly(m)?;
    let roots = cp.roots();
    let split = roots.iter().map(|(_, k)| k).sum::<usize>() == n;
    let mut eigenpairs = Vec::with_capacity(roots.len());
    for (value, multiplicity) in roots {
        let shifted = m.shift(&value)?;
        eigenpairs.push(Eigenpair {
            eigenspace: shifted.kernel(),
            generalized: shifted.pow(n)?.kernel(),
            value,
            multiplicity,
        });
    }
    Ok(Spectrum {
        char_poly: cp,
        eigenpairs,
        split,
    })
}

/// A joint weight of a commuting family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    /// One eigenvalue per operator, in input order.
    pub values: Vec<Scalar>,
    /// Joint generalized eigenspace `∩ ker((A_i - λ_i)^n)`.
    pub generalized: Subspace,
    /// Joint eigenspace `∩ ker(A_i - λ_i)`: the weight module proper.
    pub eigenspace: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub weights: Vec<Weight>,
    /// True when every operator splits over the ground field.
    pub split: bool,
    /// Invariant complement of the sum of the generalized weight spaces;
    /// zero exactly when `split` holds.
    pub non_split: Subspace,
}

/// Decomposes the space under a family of pairwise commuting operators.
///
/// Weights are listed in lexicographic order of their eigenvalue tuples.
pub fn simultaneous_weight_spaces(ops: &[Matrix]) -> Result<WeightDecomposition, Error> {
    let first = ops.first().ok_or(Error::EmptyInput)?;
    let n = first.require_square()?;
    let field = first.field();
    for op in ops {
        if op.field() != field {
            return Err(Error::FieldMismatch);
        }
        let k = op.require_square()?;
        if k != n {
            return Err(Error::DimensionMismatch { expected: n, found: k });
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutator(&ops[j])?.is_zero() {
                return Err(Error::NonCommuting { first: i, second: j });
            }
        }
    }

    let mut pieces: Vec<(Vec<Scalar>, Subspace, Subspace)> =
        vec![(Vec::new(), Subspace::full(field, n), Subspace::full(field, n))];
    let mut non_split = Subspace::zero(field, n);
    for op in ops {
        let spectrum = rational_eigenvalues(op)?;
        // image of prod (A - λ)^n is the part where A has no ground-field eigenvalue
        let mut rest = Matrix::identity(field, n);
        for pair in &spectrum.eigenpairs {
            rest = rest.mul(&op.shift(&pair.value)?.pow(n)?)?;
        }
        non_split = non_split.sum(&rest.column_space())?;

        let mut next = Vec::new();
        for (values, generalized, eigen) in &pieces {
            for pair in &spectrum.eigenpairs {
                let g = generalized.intersect(&pair.generalized)?;
                if g.is_zero() {
                    continue;
                }
                let e = eigen.intersect(&pair.eigenspace)?;
                let mut v = values.clone();
                v.push(pair.value.clone());
                next.push((v, g, e));
            }
        }
        pieces = next;
    }
    let weights = pieces
        .into_iter()
        .map(|(values, generalized, eigenspace)| Weight {
            values,
            generalized,
            eigenspace,
        })
        .collect();
    Ok(WeightDecomposition {
        weights,
        split: non_split.is_zero(),
        non_split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::zeros(Q, 2, 2)).unwrap(), Poly::from_ints(Q, &[0, 0, 1]));
        let d = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        assert_eq!(char_poly(&d).unwrap(), Poly::from_ints(Q, &[2, -3, 1]));
        // left multiplication by x in the 3-dim family with c = 1
        let lx = Matrix::from_ints(Q, &[&[0, 0, 0], &[0, 1, 0], &[0, 1, 1]]);
        assert_eq!(char_poly(&lx).unwrap(), Poly::from_ints(Q, &[0, 1, -2, 1]));
        assert!(char_poly(&Matrix::zeros(Q, 2, 3)).is_err());
        assert_eq!(char_poly(&Matrix::zeros(Q, 0, 0)).unwrap(), Poly::one(Q));
    }

    #[test]
    fn nilpotency() {
        let upper = Matrix::from_ints(Q, &[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        assert!(is_nilpotent_operator(&upper).unwrap());
        assert!(!is_nilpotent_operator(&Matrix::identity(Q, 3)).unwrap());
        // L_y in the same family is the zero map
        assert!(is_nilpotent_operator(&Matrix::zeros(Q, 3, 3)).unwrap());
    }

    #[test]
    fn fitting_examples() {
        let nil = Matrix::from_ints(Q, &[&[0, 1], &[0, 0]]);
        let (n0, n1) = fitting_decomposition(&nil).unwrap();
        assert!(n0.is_full() && n1.is_zero());
        let (i0, i1) = fitting_decomposition(&Matrix::identity(Q, 2)).unwrap();
        assert!(i0.is_zero() && i1.is_full());
        let d = Matrix::from_ints(Q, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 5]]);
        let (d0, d1) = fitting_decomposition(&d).unwrap();
        assert_eq!(d0, Subspace::unit(Q, 3, 0).sum(&Subspace::unit(Q, 3, 1)).unwrap());
        assert_eq!(d1, Subspace::unit(Q, 3, 2));
    }

    #[test]
    fn eigen_examples() {
        let d = Matrix::from_ints(Q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let s = rational_eigenvalues(&d).unwrap();
        assert!(s.split);
        let dims: Vec<_> = s.eigenpairs.iter().map(|p| (p.value.to_string(), p.eigenspace.dim())).collect();
        assert_eq!(dims, [("1".into(), 2), ("2".into(), 1)]);

        let rot = Matrix::from_ints(Q, &[&[0, -1], &[1, 0]]);
        let s = rational_eigenvalues(&rot).unwrap();
        assert!(!s.split && s.eigenpairs.is_empty());

        // L_x for the family with c = 2: x·y = 2y + z, x·z = 2z
        let lx = Matrix::from_ints(Q, &[&[0, 0, 0], &[0, 2, 0], &[0, 1, 2]]);
        let s = rational_eigenvalues(&lx).unwrap();
        let values: Vec<_> = s.eigenpairs.iter().map(|p| p.value.to_string()).collect();
        assert_eq!(values, ["0", "2"]);
        let two = &s.eigenpairs[1];
        assert_eq!(two.multiplicity, 2);
        assert_eq!(two.eigenspace, Subspace::unit(Q, 3, 2));
        assert_eq!(
            two.generalized,
            Subspace::unit(Q, 3, 1).sum(&Subspace::unit(Q, 3, 2)).unwrap()
        );
        for pair in &s.eigenpairs {
            for v in pair.eigenspace.vectors() {
                let scaled: Vec<Scalar> = v.iter().map(|x| x * &pair.value).collect();
                assert_eq!(lx.apply(v), scaled);
            }
        }
    }

    #[test]
    fn weights_of_commuting_diagonals() {
        let a = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let b = Matrix::from_ints(Q, &[&[3, 0], &[0, 3]]);
        let w = simultaneous_weight_spaces(&[a.clone(), b]).unwrap();
        let tags: Vec<_> = w
            .weights
            .iter()
            .map(|w| (w.values[0].to_string(), w.values[1].to_string(), w.eigenspace.dim()))
            .collect();
        assert_eq!(tags, [("1".into(), "3".into(), 1), ("2".into(), "3".into(), 1)]);
        assert!(w.split);

        let single = simultaneous_weight_spaces(&[a]).unwrap();
        assert_eq!(single.weights.len(), 2);
    }

    #[test]
    fn weights_reject_noncommuting() {
        let a = Matrix::from_ints(Q, &[&[0, 1], &[0, 0]]);
        let b = Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]);
        assert_eq!(
            simultaneous_weight_spaces(&[a, b]),
            Err(Error::NonCommuting { first: 0, second: 1 })
        );
        assert_eq!(simultaneous_weight_spaces(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn weights_flag_non_split_part() {
        let rot = Matrix::from_ints(Q, &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 4]]);
        let w = simultaneous_weight_spaces(&[rot]).unwrap();
        assert!(!w.split);
        assert_eq!(w.non_split, Subspace::unit(Q, 3, 0).sum(&Subspace::unit(Q, 3, 1)).unwrap());
        assert_eq!(w.weights.len(), 1);
        assert_eq!(w.weights[0].generalized, Subspace::unit(Q, 3, 2));
    }
}

use alloc::vec;
use alloc::vec::Vec;

use super::{asoc, jacobson_char0, leib_kernel, nilradical, radical, require_char0};
use crate::algebra::LeibnizAlgebra;
use crate::error::Error;
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};

/// A subalgebra `C` with `L = A ⊕ C`, for an abelian ideal `A`.
///
/// Writing `C = {b + δ(b)}` over the complement coordinates `b` of `A`, with
/// `δ` taking values in `A`, closure of `C` is a linear condition on `δ`.
pub fn complement_subalgebra(alg: &LeibnizAlgebra, a: &Subspace) -> Result<Option<Subspace>, Error> {
    if !alg.is_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    if !alg.product_space(a, a)?.is_zero() {
        return Err(Error::HypothesisViolated("ideal to complement is not abelian".into()));
    }
    let field = alg.field();
    let n = alg.dim();
    let kept = a.non_pivots();
    let avecs: Vec<&[Scalar]> = a.vectors().collect();
    let r = avecs.len();
    if kept.is_empty() {
        return Ok(Some(alg.zero_subspace()));
    }
    if r == 0 {
        return Ok(Some(alg.whole()));
    }
    let unknowns = kept.len() * r;
    let mut columns: Vec<Vec<Scalar>> = vec![Vec::new(); unknowns];
    let mut rhs = Vec::new();
    for (ii, &i) in kept.iter().enumerate() {
        let ei = alg.basis_vector(i);
        for (jj, &j) in kept.iter().enumerate() {
            let ej = alg.basis_vector(j);
            let prod = alg.basis_product(i, j);
            let residual = a.reduce(prod);
            // b_i b_j = lift(residual) + a_ij with a_ij in A
            rhs.extend(prod.iter().zip(&residual).map(|(p, q)| q - p));
            for (k, &kc) in kept.iter().enumerate() {
                let coeff = &residual[kc];
                for (s, av) in avecs.iter().enumerate() {
                    let mut col = vec![field.zero(); n];
                    if k == jj {
                        for (c, x) in col.iter_mut().zip(alg.mul_vec(&ei, av)) {
                            *c = &*c + &x;
                        }
                    }
                    if k == ii {
                        for (c, x) in col.iter_mut().zip(alg.mul_vec(av, &ej)) {
                            *c = &*c + &x;
                        }
                    }
                    if !coeff.is_zero() {
                        for (c, x) in col.iter_mut().zip(av.iter()) {
                            *c = &*c - &(coeff * x);
                        }
                    }
                    columns[k * r + s].extend(col);
                }
            }
        }
    }
    let system = Matrix::from_columns(field, rhs.len(), &columns)?;
    let Some(t) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let rows = kept
        .iter()
        .enumerate()
        .map(|(k, &kc)| {
            let mut v = alg.basis_vector(kc);
            for (s, av) in avecs.iter().enumerate() {
                let c = &t[k * r + s];
                for (slot, x) in v.iter_mut().zip(av.iter()) {
                    *slot = &*slot + &(c * x);
                }
            }
            v
        })
        .collect();
    let c = alg.span(rows)?;
    if !alg.is_subalgebra(&c)? || !c.intersect(a)?.is_zero() || c.dim() + a.dim() != n {
        return Err(Error::Inconsistent("complement solve produced a non-complement".into()));
    }
    Ok(Some(c))
}

/// Decides `Φ(L) = 0` in characteristic 0 where a certificate exists.
///
/// * `L²` nilpotent: `Φ(L) = 0` iff `L² ⊆ Asoc(L)` and `L²` has a
///   complementary subalgebra (decided both ways).
/// * `Rad(L) = 0`: `L` is a semisimple Lie algebra and `Φ(L) = 0`.
/// * Otherwise, `Nil(L) = Asoc(L)` with a complementary subalgebra forces
///   `Φ(L) = 0` (since `Φ(L) ⊆ Nil(L)` misses every minimal ideal). A failed
///   certificate yields `None`.
pub fn phi_free(alg: &LeibnizAlgebra) -> Result<Option<bool>, Error> {
    require_char0(alg, "Frattini certificate")?;
    if alg.dim() == 0 {
        return Ok(Some(true));
    }
    let square = alg.square();
    if alg.is_nilpotent_subalgebra(&square)? {
        let asoc = asoc(alg)?;
        if !asoc.contains(&square) {
            return Ok(Some(false));
        }
        return Ok(Some(complement_subalgebra(alg, &square)?.is_some()));
    }
    if radical(alg)?.is_zero() {
        return Ok(Some(true));
    }
    let nil = match nilradical(alg) {
        Ok(nil) => nil,
        Err(Error::NonSplit { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let asoc = asoc(alg)?;
    if nil == asoc && complement_subalgebra(alg, &asoc)?.is_some() {
        return Ok(Some(true));
    }
    Ok(None)
}

/// What the characteristic-0 engine can say about `Φ(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrattiniEstimate {
    /// `Φ(L)` when determined exactly.
    pub exact: Option<Subspace>,
    /// A proven upper bound `Φ(L) ⊆ upper`.
    pub upper: Subspace,
    /// Whether `Φ(L) ≠ 0`, when decided.
    pub nonzero: Option<bool>,
    pub method: &'static str,
}

impl FrattiniEstimate {
    fn exact(phi: Subspace, method: &'static str) -> Self {
        FrattiniEstimate {
            nonzero: Some(!phi.is_zero()),
            upper: phi.clone(),
            exact: Some(phi),
            method,
        }
    }
}

/// `Φ(L)` over `Q`.
///
/// Exact for nilpotent `L` (`Φ = L²`) and whenever `Φ = 0` is certified.
/// Otherwise `Φ ⊆ I` for the smallest canonical ideal `I` whose quotient is
/// certified Frattini-free (because `Φ(L)` maps into `Φ(L/I)`); if also
/// `Φ ≠ 0` and `dim I = 1`, then `Φ = I`.
pub fn frattini_char0(alg: &LeibnizAlgebra) -> Result<FrattiniEstimate, Error> {
    require_char0(alg, "Frattini ideal")?;
    if alg.dim() == 0 {
        return Ok(FrattiniEstimate::exact(alg.zero_subspace(), "zero algebra"));
    }
    if alg.is_nilpotent() {
        return Ok(FrattiniEstimate::exact(alg.square(), "nilpotent: Φ = L²"));
    }
    let free = phi_free(alg)?;
    if free == Some(true) {
        return Ok(FrattiniEstimate::exact(alg.zero_subspace(), "certified Frattini-free"));
    }

    let whole = alg.whole();
    let square = alg.square();
    let rad = radical(alg)?;
    let mut candidates = vec![
        jacobson_char0(alg, &rad)?,
        asoc(alg)?,
        leib_kernel(alg),
        alg.center(),
        alg.left_center(),
        square.clone(),
        rad.clone(),
    ];
    if let Ok(nil) = nilradical(alg) {
        candidates.push(alg.product_space(&nil, &nil)?);
        candidates.push(nil.intersect(&square)?);
        candidates.push(nil);
    }
    candidates.extend(alg.lower_central_of(&whole)?);
    candidates.extend(alg.derived_of(&whole)?);
    let more: Vec<Subspace> = candidates
        .iter()
        .map(|c| c.intersect(&square))
        .collect::<Result<_, _>>()?;
    candidates.extend(more);
    candidates.sort();
    candidates.dedup();

    let mut upper = whole;
    for cand in candidates {
        if cand.is_zero() || cand.is_full() || !alg.is_ideal(&cand)? {
            continue;
        }
        let (q, _) = alg.quotient(&cand)?;
        if phi_free(&q)? == Some(true) {
            upper = cand;
            break;
        }
    }
    if free == Some(false) && upper.dim() == 1 {
        return Ok(FrattiniEstimate::exact(upper, "nonzero and inside a line ideal"));
    }
    Ok(FrattiniEstimate {
        exact: None,
        upper,
        nonzero: free,
        method: "upper bound from a Frattini-free quotient",
    })
}

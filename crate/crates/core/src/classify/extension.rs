use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::claims::{ClaimResult, ClaimStatus};
use crate::error::Error;
use crate::field::Scalar;
use crate::lattice::{self, LatticeBudget};
use crate::linalg::{fitting_decomposition, Subspace};
use crate::radicals::{jacobson_char0, nilradical, radical};

const XL_IDEAL: &str = "xl-is-ideal";
const XL_IS_N: &str = "xl-equals-n";
const NIL_IS_J: &str = "nil-equals-jacobson";
const UNIQUE: &str = "unique-maximal-ideal";
const FITTING: &str = "fitting-null-agrees";
const FITTING_N: &str = "fitting-null-on-n-and-t-square";

/// Checks the statements about `L = N + ⟨x⟩` with `N` an abelian ideal and
/// `x² ≠ 0`; `N` defaults to `Nil(L)`.
///
/// Always checked: `xL` is an ideal, and `xL + Lx = N` forces `xL = N`.
/// When moreover `xL = N = Nil(L)`: `Nil(L) = J(L)` is the unique maximal
/// ideal, and `L_x` has the same Fitting null component on `L` as on the
/// subalgebra `T` generated by `x` (and the same on `N` as on `T²`).
pub fn verify_abelian_extension(
    alg: &LeibnizAlgebra,
    x: &[Scalar],
    n: Option<&Subspace>,
    budget: &LatticeBudget,
) -> Result<Vec<ClaimResult>, Error> {
    let x = alg.element(x.to_vec())?.into_coords();
    let nil = nilradical(alg)?;
    let n = n.cloned().unwrap_or_else(|| nil.clone());
    alg.check_subspace(&n)?;
    let violated = |what: &str| Err(Error::HypothesisViolated(what.into()));
    if !alg.is_ideal(&n)? {
        return violated("N is not an ideal");
    }
    if !alg.product_space(&n, &n)?.is_zero() {
        return violated("N is not abelian");
    }
    if n.contains_vector(&x) || n.dim() + 1 != alg.dim() {
        return violated("L is not N + <x>");
    }
    let x_square = alg.mul_vec(&x, &x);
    if x_square.iter().all(Scalar::is_zero) {
        return violated("x² = 0");
    }

    let whole = alg.whole();
    let xs = alg.span(vec![x.clone()])?;
    let xl = alg.product_space(&xs, &whole)?;
    let lx = alg.product_space(&whole, &xs)?;
    let mut out = vec![ClaimResult::check(
        XL_IDEAL,
        alg.is_ideal(&xl)?,
        format!("dim xL = {}", xl.dim()),
    )];
    if xl.sum(&lx)? == n {
        out.push(ClaimResult::check(XL_IS_N, xl == n, format!("dim xL = {}, dim N = {}", xl.dim(), n.dim())));
    } else {
        out.push(ClaimResult::new(XL_IS_N, ClaimStatus::NotApplicable, "xL + Lx differs from N"));
    }

    if xl != n || n != nil {
        for claim in [NIL_IS_J, UNIQUE, FITTING, FITTING_N] {
            out.push(ClaimResult::new(claim, ClaimStatus::NotApplicable, "needs xL = N = Nil(L)"));
        }
        return Ok(out);
    }

    let (jac, maximal) = if alg.field().is_char_zero() {
        let codim = alg.dim() - alg.square().dim();
        (jacobson_char0(alg, &radical(alg)?)?, if codim == 1 { 1 } else { 0 })
    } else {
        let ideals = lattice::ideal_lattice(alg, budget)?;
        (ideals.jacobson, ideals.maximal_ideals.len())
    };
    out.push(ClaimResult::check(
        NIL_IS_J,
        jac == nil && nil == n,
        format!("dim J = {}, dim Nil = {}", jac.dim(), nil.dim()),
    ));
    out.push(ClaimResult::check(
        UNIQUE,
        maximal == 1 && jac.dim() + 1 == alg.dim(),
        format!("{maximal} maximal ideals"),
    ));

    let lx_op = alg.left_mult(&x)?;
    let t = alg.subalgebra_closure(core::slice::from_ref(&x))?;
    let null_l = fitting_decomposition(&lx_op)?.0;
    let null_t = null_on(alg, &t, &lx_op)?;
    let ker_l = lx_op.kernel();
    let ker_t = t.intersect(&ker_l)?;
    out.push(ClaimResult::check(
        FITTING,
        null_t == null_l && ker_t == ker_l,
        format!("null on T dim {}, on L dim {}; kernels dim {} and {}", null_t.dim(), null_l.dim(), ker_t.dim(), ker_l.dim()),
    ));
    let t_square = alg.product_space(&t, &t)?;
    let null_n = null_on(alg, &n, &lx_op)?;
    let null_t2 = null_on(alg, &t_square, &lx_op)?;
    out.push(ClaimResult::check(
        FITTING_N,
        null_n == null_t2 && t_square.contains(&null_n),
        format!("null on N dim {}, on T² dim {}", null_n.dim(), null_t2.dim()),
    ));
    Ok(out)
}

/// Fitting null component of `op` restricted to the invariant subspace `s`,
/// embedded back in `L`.
fn null_on(alg: &LeibnizAlgebra, s: &Subspace, op: &crate::linalg::Matrix) -> Result<Subspace, Error> {
    if s.is_zero() {
        return Ok(alg.zero_subspace());
    }
    let local = fitting_decomposition(&s.restrict_operator(op)?)?.0;
    alg.span(local.vectors().map(|c| s.embed(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::FamilySpec;
    use crate::field::FieldSpec;

    fn witness(field: FieldSpec) -> LeibnizAlgebra {
        FamilySpec::SquareNonzero.build(field).unwrap()
    }

    #[test]
    fn witness_passes_over_q_and_gf5() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(5).unwrap()] {
            let l = witness(field);
            let x = l.basis_vector(0);
            let results = verify_abelian_extension(&l, &x, None, &LatticeBudget::default()).unwrap();
            assert_eq!(results.len(), 6);
            assert!(results.iter().all(ClaimResult::passed), "{results:?}");
        }
    }

    #[test]
    fn hypotheses_are_checked() {
        let l = witness(FieldSpec::Rationals);
        let b = LatticeBudget::default();
        let n = l.basis_vector(1);
        assert!(matches!(verify_abelian_extension(&l, &n, None, &b), Err(Error::HypothesisViolated(_))));
        let h = FamilySpec::Heisenberg { m: 1 }.build(FieldSpec::Rationals).unwrap();
        let z = h.whole();
        let x = h.basis_vector(0);
        let r = verify_abelian_extension(&h, &x, Some(&z), &b);
        assert!(matches!(r, Err(Error::HypothesisViolated(m)) if m == "N is not abelian"));
        let sz = FamilySpec::SquareZero.build(FieldSpec::Rationals).unwrap();
        let r = verify_abelian_extension(&sz, &sz.basis_vector(0), None, &b);
        assert!(matches!(r, Err(Error::HypothesisViolated(m)) if m == "x² = 0"));
    }

    #[test]
    fn longer_fitting_chain() {
        // x·x = a, x·a = b, x·b = b: T = L, N = <a, b>
        let mut tb = crate::algebra::TableBuilder::new(FieldSpec::Rationals, ["x", "a", "b"]);
        tb.product_ints(0, 0, &[(1, 1)]).product_ints(0, 1, &[(2, 1)]).product_ints(0, 2, &[(2, 1)]);
        let l = tb.build().unwrap();
        let results = verify_abelian_extension(&l, &l.basis_vector(0), None, &LatticeBudget::default()).unwrap();
        assert!(results.iter().all(ClaimResult::passed), "{results:?}");
    }
}

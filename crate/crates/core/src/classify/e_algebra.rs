use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::LeviData;
use crate::algebra::LeibnizAlgebra;
use crate::claims::ClaimResult;
use crate::error::Error;
use crate::lattice::{self, LatticeBudget};
use crate::linalg::{rational_eigenvalues, Subspace};
use crate::radicals::{frattini_char0, killing_form, radical};

/// Whether `L` is an E-algebra, and how that was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EAlgebraVerdict {
    pub e_algebra: bool,
    pub method: &'static str,
    pub checks: Vec<ClaimResult>,
}

/// Decides the E-algebra property.
///
/// Over `GF(p)` the property is read off the lattice and compared with
/// whether `L/Φ(L)` is elementary. Over `Q`, solvable algebras are
/// E-algebras; otherwise declared Levi data is required, and `L = R + S`
/// with `S` a sum of split `sl₂` copies is an E-algebra iff `RS + SR ⊆ Φ(L)`.
pub fn verify_e_algebra(
    alg: &LeibnizAlgebra,
    levi: Option<&LeviData>,
    budget: &LatticeBudget,
) -> Result<EAlgebraVerdict, Error> {
    if !alg.field().is_char_zero() {
        return definitional(alg, budget);
    }
    if alg.is_solvable() {
        return Ok(EAlgebraVerdict {
            e_algebra: true,
            method: "solvable in characteristic 0",
            checks: Vec::new(),
        });
    }
    let Some(levi) = levi else {
        return Err(Error::Undecidable("non-solvable algebra over Q without Levi data".into()));
    };
    let rad = radical(alg)?;
    check_levi(alg, &rad, levi)?;
    let mut all_sl2 = true;
    for c in &levi.simple_components {
        match split_sl2(alg, c)? {
            Some(true) => {}
            Some(false) => all_sl2 = false,
            None => return Err(Error::Undecidable("three-dimensional simple factor is not split over Q".into())),
        }
    }

    let mut checks = Vec::new();
    let (e_algebra, method) = if !all_sl2 {
        (false, "simple factor other than sl2")
    } else if rad.is_zero() {
        (true, "sum of sl2 copies")
    } else {
        let s = &levi.levi;
        let rs = alg.product_space(&rad, s)?.sum(&alg.product_space(s, &rad)?)?;
        if rs.is_zero() {
            (true, "sl2 copies acting trivially on the radical")
        } else {
            let phi = frattini_char0(alg)?;
            if !phi.upper.contains(&rs) {
                (false, "RS + SR escapes a bound on the Frattini ideal")
            } else if phi.exact.is_some() {
                (true, "RS + SR inside the Frattini ideal")
            } else {
                return Err(Error::Undecidable("Frattini ideal not determined exactly".into()));
            }
        }
    };
    if alg.is_perfect() {
        checks.push(ClaimResult::check(
            "perfect-e-iff-sl2-sum",
            e_algebra == (rad.is_zero() && all_sl2),
            format!("radical dim {}, {} simple factors", rad.dim(), levi.simple_components.len()),
        ));
    }
    Ok(EAlgebraVerdict { e_algebra, method, checks })
}

fn definitional(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<EAlgebraVerdict, Error> {
    let report = lattice::classify_lattice(alg, budget)?;
    let (quotient, _) = alg.quotient(&report.phi)?;
    let q = lattice::classify_lattice(&quotient, budget)?;
    let check = ClaimResult::check(
        "e-iff-quotient-elementary",
        report.e_algebra == q.elementary,
        format!("E-algebra {}, L/Φ(L) elementary {}", report.e_algebra, q.elementary),
    );
    Ok(EAlgebraVerdict {
        e_algebra: report.e_algebra,
        method: "definitional over GF(p)",
        checks: vec![check],
    })
}

pub(super) fn check_levi(alg: &LeibnizAlgebra, rad: &Subspace, levi: &LeviData) -> Result<(), Error> {
    let bad = |what: &str| Err(Error::HypothesisViolated(format!("declared Levi data: {what}")));
    let s = &levi.levi;
    for sub in [&levi.radical, s].into_iter().chain(&levi.simple_components) {
        alg.check_subspace(sub)?;
    }
    if &levi.radical != rad {
        return bad("radical differs from the computed one");
    }
    if !alg.is_subalgebra(s)? || !s.intersect(rad)?.is_zero() || s.dim() + rad.dim() != alg.dim() {
        return bad("Levi part is not a complementary subalgebra");
    }
    let mut total = alg.zero_subspace();
    for c in &levi.simple_components {
        let sc = alg.product_space(s, c)?.sum(&alg.product_space(c, s)?)?;
        if !s.contains(c) || !c.contains(&sc) {
            return bad("simple component is not an ideal of the Levi part");
        }
        total = total.sum(c)?;
    }
    if &total != s {
        return bad("simple components do not span the Levi part");
    }
    Ok(())
}

/// `Some(true)` for a split `sl₂`, `Some(false)` for a simple factor of
/// another dimension, `None` for a three-dimensional non-split form.
fn split_sl2(alg: &LeibnizAlgebra, c: &Subspace) -> Result<Option<bool>, Error> {
    let inner = alg.restrict(c)?;
    if !inner.is_antisymmetric() || !inner.is_perfect() || killing_form(&inner).rank() != inner.dim() {
        return Err(Error::HypothesisViolated("declared simple component is not semisimple".into()));
    }
    if inner.dim() != 3 {
        return Ok(Some(false));
    }
    for i in 0..3 {
        let ad = inner.left_mult(&inner.basis_vector(i))?;
        let spectrum = rational_eigenvalues(&ad)?;
        if spectrum.split && spectrum.eigenpairs.iter().any(|e| !e.value.is_zero()) {
            return Ok(Some(true));
        }
    }
    Ok(None)
}

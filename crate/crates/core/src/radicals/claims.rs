use alloc::format;
use alloc::vec::Vec;

use super::{frattini_char0, jacobson_by_quotients, jacobson_char0, nilradical, radical};
use crate::algebra::LeibnizAlgebra;
use crate::claims::{ClaimResult, ClaimStatus};
use crate::error::Error;
use crate::lattice::{self, LatticeBudget};
use crate::linalg::Subspace;

const LR_RL_IN_NIL: &str = "lr-rl-in-nil";
const SQUARE_MEETS_RADICAL: &str = "square-meets-radical";
const SOLVABLE_J_IS_SQUARE: &str = "solvable-jacobson-square";
const J_IS_LR_RL: &str = "jacobson-lr-rl";
const J_NILPOTENT: &str = "jacobson-nilpotent";
const PHI_IN_J: &str = "frattini-in-jacobson";
const IDEAL_J_MONOTONE: &str = "ideal-jacobson-monotone";

fn dims(s: &Subspace) -> usize {
    s.dim()
}

/// Checks the Jacobson-radical containments on one algebra.
///
/// Over `Q` every claim is evaluated with the characteristic-0 engines; over
/// `GF(p)` only the characteristic-free ones are evaluated, by brute force,
/// and the rest are reported as not applicable. `extra_nilpotent` lists
/// further nilpotent ideals `B` to test `J(B) ⊆ J(L)` on; `Nil(L)` is always
/// included.
pub fn verify_jacobson_claims(
    alg: &LeibnizAlgebra,
    extra_nilpotent: &[Subspace],
) -> Result<Vec<ClaimResult>, Error> {
    if alg.field().is_char_zero() {
        char0_claims(alg, extra_nilpotent)
    } else {
        prime_field_claims(alg, extra_nilpotent, &LatticeBudget::default())
    }
}

fn monotone_claims(
    alg: &LeibnizAlgebra,
    nil: Option<&Subspace>,
    extra: &[Subspace],
    jac: &Subspace,
    out: &mut Vec<ClaimResult>,
) -> Result<(), Error> {
    for b in nil.into_iter().chain(extra) {
        alg.check_subspace(b)?;
        if !alg.is_ideal(b)? || !alg.is_nilpotent_subalgebra(b)? {
            out.push(ClaimResult::new(
                IDEAL_J_MONOTONE,
                ClaimStatus::NotApplicable,
                format!("B (dim {}) is not a nilpotent ideal", b.dim()),
            ));
            continue;
        }
        let jb = alg.product_space(b, b)?;
        out.push(ClaimResult::check(
            IDEAL_J_MONOTONE,
            jac.contains(&jb),
            format!("J(B) = B² (dim {}) inside J(L) (dim {}), B of dim {}", jb.dim(), jac.dim(), b.dim()),
        ));
    }
    Ok(())
}

fn char0_claims(alg: &LeibnizAlgebra, extra: &[Subspace]) -> Result<Vec<ClaimResult>, Error> {
    let whole = alg.whole();
    let square = alg.square();
    let rad = radical(alg)?;
    let nil = match nilradical(alg) {
        Ok(n) => Some(n),
        Err(Error::NonSplit { .. }) => None,
        Err(e) => return Err(e),
    };
    let lr_rl = alg.product_space(&whole, &rad)?.sum(&alg.product_space(&rad, &whole)?)?;
    let jac = jacobson_by_quotients(alg, &rad)?;
    let jac_formula = jacobson_char0(alg, &rad)?;
    let solvable = rad.is_full();
    let mut out = Vec::new();

    let undecided = |claim: &str| {
        ClaimResult::new(claim, ClaimStatus::Undecidable, "Nil(L) needs eigenvalues outside the field")
    };
    match &nil {
        Some(n) => out.push(ClaimResult::check(
            LR_RL_IN_NIL,
            n.contains(&lr_rl),
            format!("dim(LR+RL) = {}, dim Nil = {}", dims(&lr_rl), dims(n)),
        )),
        None => out.push(undecided(LR_RL_IN_NIL)),
    }
    let meet = square.intersect(&rad)?;
    match &nil {
        Some(n) => out.push(ClaimResult::check(
            SQUARE_MEETS_RADICAL,
            meet == lr_rl && n.contains(&meet),
            format!("dim(L²∩R) = {}, dim(LR+RL) = {}", dims(&meet), dims(&lr_rl)),
        )),
        None => out.push(undecided(SQUARE_MEETS_RADICAL)),
    }
    if solvable {
        out.push(ClaimResult::check(
            SOLVABLE_J_IS_SQUARE,
            jac == square && jac_formula == square,
            format!("dim J = {}, dim L² = {}", dims(&jac), dims(&square)),
        ));
    } else {
        out.push(ClaimResult::new(SOLVABLE_J_IS_SQUARE, ClaimStatus::NotApplicable, "L is not solvable"));
    }
    out.push(ClaimResult::check(
        J_IS_LR_RL,
        jac == lr_rl && jac_formula == lr_rl,
        format!("dim J = {}, dim(LR+RL) = {}", dims(&jac), dims(&lr_rl)),
    ));
    out.push(ClaimResult::check(
        J_NILPOTENT,
        alg.is_nilpotent_subalgebra(&jac)?,
        format!("lower central dims of J: {:?}", alg.lower_central_of(&jac)?.iter().map(dims).collect::<Vec<_>>()),
    ));
    let phi = frattini_char0(alg)?;
    let status = if jac.contains(&phi.upper) {
        ClaimStatus::Pass
    } else if phi.exact.is_some() {
        ClaimStatus::Fail
    } else {
        ClaimStatus::Undecidable
    };
    out.push(ClaimResult::new(
        PHI_IN_J,
        status,
        format!("Φ ⊆ {}-dim bound ({}), dim J = {}", phi.upper.dim(), phi.method, dims(&jac)),
    ));
    monotone_claims(alg, nil.as_ref(), extra, &jac, &mut out)?;
    Ok(out)
}

fn prime_field_claims(
    alg: &LeibnizAlgebra,
    extra: &[Subspace],
    budget: &LatticeBudget,
) -> Result<Vec<ClaimResult>, Error> {
    let ideals = lattice::ideal_lattice(alg, budget)?;
    let square = alg.square();
    let char0_only = "characteristic-0 statement";
    let mut out = Vec::new();
    for claim in [LR_RL_IN_NIL, SQUARE_MEETS_RADICAL] {
        out.push(ClaimResult::new(claim, ClaimStatus::NotApplicable, char0_only));
    }
    if alg.is_solvable() {
        out.push(ClaimResult::check(
            SOLVABLE_J_IS_SQUARE,
            ideals.jacobson == square,
            format!("brute-force dim J = {}, dim L² = {}", ideals.jacobson.dim(), square.dim()),
        ));
    } else {
        out.push(ClaimResult::new(SOLVABLE_J_IS_SQUARE, ClaimStatus::NotApplicable, "L is not solvable"));
    }
    for claim in [J_IS_LR_RL, J_NILPOTENT, PHI_IN_J] {
        out.push(ClaimResult::new(claim, ClaimStatus::NotApplicable, char0_only));
    }
    monotone_claims(alg, Some(&ideals.nil), extra, &ideals.jacobson, &mut out)?;
    Ok(out)
}

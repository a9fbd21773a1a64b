use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::LeviData;
use super::e_algebra::check_levi;
use crate::algebra::LeibnizAlgebra;
use crate::claims::{ClaimResult, ClaimStatus};
use crate::error::Error;
use crate::field::Scalar;
use crate::lattice::{self, LatticeBudget};
use crate::linalg::Subspace;
use crate::radicals::{nilradical, radical, Engine};

/// Which structural description of a unique-maximal-ideal algebra matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UniqueIdealCase {
    /// Nilpotent and generated by one element.
    NilpotentCyclic,
    /// `L = Nil(L) + S`, `S` simple, `N/N² = S(N/N²) + (N/N²)S`.
    NilPlusSimple,
    /// `L = Nil(L) + ⟨x⟩`, `x² ≠ 0`, `N/N² = x(L/N²)`.
    SquareNonzero,
    /// `L = Nil(L) + ⟨x⟩`, `x² = 0`, `N/N² = x(N/N²) + (N/N²)x`.
    SquareZero,
}

impl UniqueIdealCase {
    /// 1-based position in the classification list.
    pub fn number(self) -> u8 {
        match self {
            UniqueIdealCase::NilpotentCyclic => 1,
            UniqueIdealCase::NilPlusSimple => 2,
            UniqueIdealCase::SquareNonzero => 3,
            UniqueIdealCase::SquareZero => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueIdealVerdict {
    pub unique: bool,
    /// Number of maximal ideals, when they were enumerated.
    pub maximal_ideals: Option<usize>,
    pub matched_case: Option<UniqueIdealCase>,
    pub engine: Engine,
    pub evidence: Vec<String>,
    pub checks: Vec<ClaimResult>,
}

/// Largest coefficient magnitude tried when searching for the element `x`.
const SEARCH_RADIUS: i64 = 2;
/// At most this many coordinates of `Nil(L)` are varied in that search.
const SEARCH_COORDS: usize = 4;

/// Decides whether `L` has exactly one maximal ideal and matches `L` against
/// the four structural descriptions of such algebras.
///
/// Uniqueness over `GF(p)` comes from the ideal lattice. Over `Q` a solvable
/// `L` has a unique maximal ideal iff `dim L/L² = 1`; a non-solvable one iff
/// it is perfect with a simple Levi factor, which needs declared Levi data.
pub fn verify_unique_maximal_ideal(
    alg: &LeibnizAlgebra,
    levi: Option<&LeviData>,
    budget: &LatticeBudget,
) -> Result<UniqueIdealVerdict, Error> {
    let char0 = alg.field().is_char_zero();
    let codim_square = alg.dim() - alg.square().dim();
    let solvable = alg.is_solvable();
    let mut evidence = vec![format!("dim L/L² = {codim_square}")];
    let (unique, maximal_ideals, engine) = if !char0 {
        let count = lattice::ideal_lattice(alg, budget)?.maximal_ideals.len();
        evidence.push(format!("{count} maximal ideals"));
        (count == 1, Some(count), Engine::BruteForce)
    } else if solvable {
        (codim_square == 1, None, Engine::Char0)
    } else {
        let Some(levi) = levi else {
            return Err(Error::Undecidable("non-solvable algebra over Q without Levi data".into()));
        };
        check_levi(alg, &radical(alg)?, levi)?;
        let k = levi.simple_components.len();
        evidence.push(format!("{k} simple Levi factors"));
        (codim_square == 0 && k == 1, None, Engine::Char0)
    };

    let mut checks = Vec::new();
    if !char0 && solvable {
        checks.push(ClaimResult::check(
            "solvable-unique-iff-codim-one",
            unique == (codim_square == 1),
            format!("unique {unique}, dim L/L² = {codim_square}"),
        ));
    }

    let nil = match nilradical(alg) {
        Ok(n) => n,
        Err(Error::NonSplit { .. }) => {
            checks.push(ClaimResult::new(
                "unique-iff-case",
                ClaimStatus::Undecidable,
                "Nil(L) needs eigenvalues outside the field",
            ));
            return Ok(UniqueIdealVerdict { unique, maximal_ideals, matched_case: None, engine, evidence, checks });
        }
        Err(e) => return Err(e),
    };
    let (matched_case, exhaustive) = match_case(alg, &nil, levi, codim_square, &mut evidence)?;
    let status = if unique == matched_case.is_some() {
        ClaimStatus::Pass
    } else if unique && !exhaustive {
        ClaimStatus::Undecidable
    } else if char0 {
        ClaimStatus::Fail
    } else {
        ClaimStatus::NotApplicable
    };
    let detail = match (status, matched_case) {
        (ClaimStatus::NotApplicable, _) => String::from("mismatch in positive characteristic; the statement is for characteristic 0"),
        (ClaimStatus::Undecidable, _) => String::from("no element x found by the bounded search"),
        (_, Some(c)) => format!("unique {unique}, case {}", c.number()),
        (_, None) => format!("unique {unique}, no case"),
    };
    checks.push(ClaimResult::new("unique-iff-case", status, detail));
    Ok(UniqueIdealVerdict { unique, maximal_ideals, matched_case, engine, evidence, checks })
}

/// The first matching case, and whether the search for `x` was exhaustive.
fn match_case(
    alg: &LeibnizAlgebra,
    nil: &Subspace,
    levi: Option<&LeviData>,
    codim_square: usize,
    evidence: &mut Vec<String>,
) -> Result<(Option<UniqueIdealCase>, bool), Error> {
    let n = alg.dim();
    if alg.is_nilpotent() && codim_square == 1 {
        let square = alg.square();
        let g = (0..n).find(|&i| !square.contains_vector(&alg.basis_vector(i))).expect("L² is a hyperplane");
        if alg.subalgebra_closure(&[alg.basis_vector(g)])?.is_full() {
            evidence.push(format!("generated by {}", alg.labels()[g]));
            return Ok((Some(UniqueIdealCase::NilpotentCyclic), true));
        }
        return Err(Error::Inconsistent("nilpotent algebra not generated by a lift of L/L²".into()));
    }

    let nil_square = alg.product_space(nil, nil)?;
    let (q, proj) = alg.quotient(&nil_square)?;
    let nbar = proj.project_subspace(nil)?;

    if let Some(levi) = levi {
        if let [s] = levi.simple_components.as_slice() {
            if s.dim() + nil.dim() == n && s.intersect(nil)?.is_zero() {
                let sbar = proj.project_subspace(s)?;
                let action = q.product_space(&sbar, &nbar)?.sum(&q.product_space(&nbar, &sbar)?)?;
                if action == nbar {
                    evidence.push(String::from("N/N² = S(N/N²) + (N/N²)S"));
                    return Ok((Some(UniqueIdealCase::NilPlusSimple), true));
                }
            }
        }
    }

    if nil.dim() + 1 != n {
        return Ok((None, true));
    }
    let field = alg.field();
    let x0 = (0..n).find(|&i| !nil.contains_vector(&alg.basis_vector(i))).expect("N is a hyperplane");
    let nvecs: Vec<&[Scalar]> = nil.vectors().collect();
    let varied = nvecs.len().min(SEARCH_COORDS);
    let values: Vec<Scalar> = (-SEARCH_RADIUS..=SEARCH_RADIUS).map(|c| field.from_i64(c)).collect();
    let exhaustive = varied == nvecs.len()
        && match field.characteristic() {
            0 => varied == 0,
            p => u64::from(p) <= values.len() as u64,
        };
    let qdim = q.dim();
    let whole_q = q.whole();
    let mut digits = vec![0usize; varied];
    loop {
        let mut x = alg.basis_vector(x0);
        for (d, v) in digits.iter().zip(&nvecs) {
            for (slot, c) in x.iter_mut().zip(v.iter()) {
                slot.add_mul_assign(&values[*d], c);
            }
        }
        let square_nonzero = alg.mul_vec(&x, &x).iter().any(|c| !c.is_zero());
        let xbar = Subspace::from_vectors(field, qdim, vec![proj.project(&x)])?;
        let (case, image) = if square_nonzero {
            (UniqueIdealCase::SquareNonzero, q.product_space(&xbar, &whole_q)?)
        } else {
            (
                UniqueIdealCase::SquareZero,
                q.product_space(&xbar, &nbar)?.sum(&q.product_space(&nbar, &xbar)?)?,
            )
        };
        if image == nbar {
            evidence.push(format!("x = {}", alg.describe(&x)));
            return Ok((Some(case), exhaustive));
        }
        let mut i = 0;
        loop {
            if i == varied {
                return Ok((None, exhaustive));
            }
            digits[i] += 1;
            if digits[i] < values.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

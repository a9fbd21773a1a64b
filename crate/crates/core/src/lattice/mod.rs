//! Definitional brute force over prime fields: every subspace is visited,
//! and Frattini, Jacobson, nil- and socle-type ideals are read off the
//! resulting subalgebra and ideal lattices.

mod enumerate;

use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::linalg::{Matrix, Subspace};

pub use enumerate::{
    enumerate_subspaces, enumerate_subspaces_of_dim, gaussian_binomial, subspace_count,
    LatticeBudget, Subspaces,
};
pub(crate) use enumerate::prime_of;
use enumerate::Clock;

/// Everything the subalgebra lattice determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    /// All subalgebras, sorted canonically (by dimension, then entries).
    pub subalgebras: Vec<Subspace>,
    /// `Φ(B)` for each entry of `subalgebras`.
    pub subalgebra_phis: Vec<Subspace>,
    pub ideals: Vec<Subspace>,
    pub maximal_subalgebras: Vec<Subspace>,
    pub maximal_ideals: Vec<Subspace>,
    /// `F(L)`, the intersection of maximal subalgebras (`L` if there are none).
    pub frattini_subalgebra: Subspace,
    pub phi: Subspace,
    /// `J(L)`, the intersection of maximal ideals (`L` if there are none).
    pub jacobson: Subspace,
    pub nil: Subspace,
    pub asoc: Subspace,
    pub rad: Subspace,
    pub elementary: bool,
    pub minimal_non_elementary: bool,
    pub e_algebra: bool,
    pub subspaces_scanned: u128,
}

/// The ideal lattice alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub ideals: Vec<Subspace>,
    pub maximal_ideals: Vec<Subspace>,
    pub jacobson: Subspace,
    pub nil: Subspace,
    pub asoc: Subspace,
    pub rad: Subspace,
    pub subspaces_scanned: u128,
}

impl LatticeReport {
    /// `Φ(B)` for a subalgebra `B`, if `B` is one.
    pub fn phi_of(&self, b: &Subspace) -> Option<&Subspace> {
        self.subalgebras
            .binary_search(b)
            .ok()
            .map(|i| &self.subalgebra_phis[i])
    }

    pub fn ideal_report(&self) -> IdealReport {
        IdealReport {
            ideals: self.ideals.clone(),
            maximal_ideals: self.maximal_ideals.clone(),
            jacobson: self.jacobson.clone(),
            nil: self.nil.clone(),
            asoc: self.asoc.clone(),
            rad: self.rad.clone(),
            subspaces_scanned: self.subspaces_scanned,
        }
    }
}

fn scan(
    alg: &LeibnizAlgebra,
    budget: &LatticeBudget,
    keep: impl Fn(&Subspace) -> bool,
) -> Result<(Vec<Subspace>, u128), Error> {
    let mut clock: Clock = budget.clock();
    let mut kept = Vec::new();
    let mut scanned = 0u128;
    for s in enumerate_subspaces(alg.field(), alg.dim(), budget)? {
        clock.tick()?;
        scanned += 1;
        if keep(&s) {
            kept.push(s);
        }
    }
    kept.sort();
    Ok((kept, scanned))
}

/// Members of `family` (sorted by dimension) that are proper in `top` and not
/// strictly contained in another proper member.
fn maximal_members(family: &[Subspace], top: &Subspace) -> Vec<Subspace> {
    let mut maximal: Vec<Subspace> = Vec::new();
    for s in family.iter().rev() {
        if s.dim() >= top.dim() || !top.contains(s) {
            continue;
        }
        if !maximal.iter().any(|m| m.contains(s)) {
            maximal.push(s.clone());
        }
    }
    maximal.sort();
    maximal
}

fn intersect_all(family: &[Subspace], empty: &Subspace) -> Subspace {
    family
        .iter()
        .fold(empty.clone(), |acc, s| acc.intersect(s).expect("same ambient space"))
}

fn sum_all(family: &[Subspace], zero: &Subspace) -> Subspace {
    family
        .iter()
        .fold(zero.clone(), |acc, s| acc.sum(s).expect("same ambient space"))
}

fn ideal_report_from(alg: &LeibnizAlgebra, ideals: Vec<Subspace>, scanned: u128) -> Result<IdealReport, Error> {
    let whole = alg.whole();
    let zero = alg.zero_subspace();
    let maximal_ideals = maximal_members(&ideals, &whole);
    let jacobson = intersect_all(&maximal_ideals, &whole);

    let mut nilpotent = Vec::new();
    let mut solvable = Vec::new();
    for i in &ideals {
        if alg.is_nilpotent_subalgebra(i)? {
            nilpotent.push(i.clone());
        }
        if alg.is_solvable_subalgebra(i)? {
            solvable.push(i.clone());
        }
    }
    let nil = sum_all(&nilpotent, &zero);
    if !nilpotent.contains(&nil) {
        return Err(Error::Inconsistent("sum of nilpotent ideals is not nilpotent".into()));
    }
    let rad = sum_all(&solvable, &zero);
    if !solvable.contains(&rad) {
        return Err(Error::Inconsistent("sum of solvable ideals is not solvable".into()));
    }

    // ideals are sorted by dimension, so a nonzero ideal is minimal iff it
    // contains no minimal ideal found earlier
    let mut minimal: Vec<&Subspace> = Vec::new();
    for i in ideals.iter().filter(|i| !i.is_zero()) {
        if !minimal.iter().any(|m| i.contains(m)) {
            minimal.push(i);
        }
    }
    let mut asoc = zero.clone();
    for m in minimal {
        if alg.product_space(m, m)?.is_zero() {
            asoc = asoc.sum(m)?;
        }
    }

    Ok(IdealReport {
        ideals,
        maximal_ideals,
        jacobson,
        nil,
        asoc,
        rad,
        subspaces_scanned: scanned,
    })
}

/// Enumerates ideals only.
pub fn ideal_lattice(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<IdealReport, Error> {
    prime_of(alg.field(), "ideal lattice")?;
    let (ideals, scanned) = scan(alg, budget, |s| alg.is_ideal(s).expect("same algebra"))?;
    ideal_report_from(alg, ideals, scanned)
}

/// `Φ(B)` for every subalgebra, computed inside the lattice of `L`.
fn subalgebra_phis(alg: &LeibnizAlgebra, subalgebras: &[Subspace]) -> Result<Vec<Subspace>, Error> {
    let mut phis = Vec::with_capacity(subalgebras.len());
    for b in subalgebras {
        // F(B) ⊆ B², so algebras with zero square have Φ(B) = 0
        if alg.product_space(b, b)?.is_zero() {
            phis.push(alg.zero_subspace());
            continue;
        }
        let below: Vec<Subspace> = subalgebras
            .iter()
            .take_while(|c| c.dim() < b.dim())
            .filter(|c| b.contains(c))
            .cloned()
            .collect();
        let maximal = maximal_members(&below, b);
        let f = intersect_all(&maximal, b);
        phis.push(alg.relative_core(&f, b)?);
    }
    Ok(phis)
}

/// Full lattice classification of an algebra over `GF(p)`.
pub fn classify_lattice(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<LatticeReport, Error> {
    prime_of(alg.field(), "lattice classification")?;
    let whole = alg.whole();
    let (subalgebras, scanned) = scan(alg, budget, |s| alg.is_subalgebra(s).expect("same algebra"))?;
    let ideals: Vec<Subspace> = subalgebras
        .iter()
        .filter(|s| alg.is_ideal(s).expect("same algebra"))
        .cloned()
        .collect();
    let maximal_subalgebras = maximal_members(&subalgebras, &whole);
    let frattini_subalgebra = intersect_all(&maximal_subalgebras, &whole);
    let phi = alg.core(&frattini_subalgebra)?;
    let ideal = ideal_report_from(alg, ideals, scanned)?;

    let subalgebra_phis = subalgebra_phis(alg, &subalgebras)?;
    let own = subalgebras.binary_search(&whole).expect("L is a subalgebra");
    if subalgebra_phis[own] != phi {
        return Err(Error::Inconsistent("two routes to Φ(L) disagree".into()));
    }
    let proper_elementary = subalgebras
        .iter()
        .zip(&subalgebra_phis)
        .all(|(b, p)| b == &whole || p.is_zero());
    let elementary = proper_elementary && phi.is_zero();
    let minimal_non_elementary = proper_elementary && !phi.is_zero();
    let e_algebra = subalgebra_phis.iter().all(|p| phi.contains(p));

    Ok(LatticeReport {
        subalgebras,
        subalgebra_phis,
        ideals: ideal.ideals,
        maximal_subalgebras,
        maximal_ideals: ideal.maximal_ideals,
        frattini_subalgebra,
        phi,
        jacobson: ideal.jacobson,
        nil: ideal.nil,
        asoc: ideal.asoc,
        rad: ideal.rad,
        elementary,
        minimal_non_elementary,
        e_algebra,
        subspaces_scanned: scanned,
    })
}

/// `(F(L), Φ(L))` from the subalgebra lattice.
pub fn frattini_bruteforce(
    alg: &LeibnizAlgebra,
    budget: &LatticeBudget,
) -> Result<(Subspace, Subspace), Error> {
    prime_of(alg.field(), "Frattini brute force")?;
    let whole = alg.whole();
    let (subalgebras, _) = scan(alg, budget, |s| alg.is_subalgebra(s).expect("same algebra"))?;
    let f = intersect_all(&maximal_members(&subalgebras, &whole), &whole);
    let phi = alg.core(&f)?;
    Ok((f, phi))
}

/// Maximal ideals of a solvable algebra: the hyperplanes containing `L²`,
/// each checked to be an ideal.
pub fn maximal_ideals_solvable(
    alg: &LeibnizAlgebra,
    budget: &LatticeBudget,
) -> Result<Vec<Subspace>, Error> {
    prime_of(alg.field(), "hyperplane scan")?;
    if !alg.is_solvable() {
        return Err(Error::HypothesisViolated("algebra is not solvable".into()));
    }
    let square = alg.square();
    let (_, proj) = alg.quotient(&square)?;
    let m = proj.kept().len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut clock = budget.clock();
    let mut out = Vec::new();
    // a hyperplane of L/L² is the kernel of a functional, and functionals up
    // to scalars are the lines of the dual space
    for f in enumerate_subspaces_of_dim(alg.field(), m, 1, budget)? {
        clock.tick()?;
        let row = Matrix::from_rows(alg.field(), m, f.vectors().map(<[_]>::to_vec).collect())?;
        let h = proj.preimage(&row.kernel())?;
        if !alg.is_ideal(&h)? {
            return Err(Error::Inconsistent("hyperplane over L² is not an ideal".into()));
        }
        out.push(h);
    }
    out.sort();
    Ok(out)
}

/// `J(L)` by brute force; solvable algebras only scan hyperplanes over `L²`.
pub fn jacobson_bruteforce(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<Subspace, Error> {
    prime_of(alg.field(), "Jacobson brute force")?;
    if alg.is_solvable() {
        let maximal = maximal_ideals_solvable(alg, budget)?;
        return Ok(intersect_all(&maximal, &alg.whole()));
    }
    Ok(ideal_lattice(alg, budget)?.jacobson)
}

/// `Nil(L)` by brute force.
pub fn nilradical_bruteforce(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<Subspace, Error> {
    Ok(ideal_lattice(alg, budget)?.nil)
}

/// Whether `field` admits brute force at dimension `n` under `budget`.
pub fn within_budget(field: FieldSpec, n: usize, budget: &LatticeBudget) -> bool {
    match field {
        FieldSpec::Prime(p) => budget.admit(subspace_count(n, p as u64)).is_ok(),
        FieldSpec::Rationals => false,
    }
}

#[cfg(test)]
mod tests;

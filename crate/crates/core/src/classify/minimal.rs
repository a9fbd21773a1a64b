use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::FamilySpec;
use crate::algebra::LeibnizAlgebra;
use crate::claims::{ClaimResult, ClaimStatus};
use crate::error::Error;
use crate::field::FieldSpec;
use crate::lattice::{self, LatticeBudget, LatticeReport};
use crate::linalg::Subspace;

/// Outcome of [`verify_minimal_non_elementary`] for one `(family, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalVerdict {
    pub spec: FamilySpec,
    pub p: u32,
    pub minimal_non_elementary: bool,
    pub phi: Subspace,
    /// A proper subalgebra of least dimension with `Φ ≠ 0`, if any.
    pub non_elementary_proper: Option<Subspace>,
    pub checks: Vec<ClaimResult>,
}

impl MinimalVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != ClaimStatus::Fail)
    }
}

/// Builds `spec` over `GF(p)`, classifies its lattice and checks that it is
/// minimal non-elementary, together with the family's expected `Φ`.
pub fn verify_minimal_non_elementary(
    spec: &FamilySpec,
    p: u64,
    budget: &LatticeBudget,
) -> Result<MinimalVerdict, Error> {
    let field = FieldSpec::prime(p)?;
    let alg = spec.build(field)?;
    let report = lattice::classify_lattice(&alg, budget)?;
    let whole = alg.whole();
    let non_elementary_proper = report
        .subalgebras
        .iter()
        .zip(&report.subalgebra_phis)
        .filter(|(b, phi)| **b != whole && !phi.is_zero())
        .min_by_key(|(b, _)| b.dim())
        .map(|(b, _)| b.clone());
    let mut detail = format!("dim Φ = {}, {} subalgebras", report.phi.dim(), report.subalgebras.len());
    if let Some(b) = &non_elementary_proper {
        let basis: Vec<_> = b.vectors().map(|v| alg.describe(v)).collect();
        detail.push_str(&format!("; proper subalgebra <{}> has Φ ≠ 0", basis.join(", ")));
    }
    let mut checks = vec![ClaimResult::check("minimal-non-elementary", report.minimal_non_elementary, detail)];
    match spec {
        FamilySpec::Family1a { .. } | FamilySpec::Family1b { .. } => {
            let z = Subspace::unit(field, 3, 2);
            checks.push(ClaimResult::check("frattini-is-z", report.phi == z, format!("dim Φ = {}", report.phi.dim())));
        }
        FamilySpec::CyclicNilpotent { .. } => {
            let square = alg.square();
            checks.push(ClaimResult::check(
                "frattini-is-square",
                report.phi == square,
                format!("dim Φ = {}, dim L² = {}", report.phi.dim(), square.dim()),
            ));
            let outside = report.subalgebras.iter().filter(|b| **b != whole && !square.contains(b)).count();
            checks.push(ClaimResult::check(
                "proper-subalgebras-in-square",
                outside == 0,
                format!("{outside} proper subalgebras leave L²"),
            ));
        }
        FamilySpec::Family4 { .. } => {
            let y = Subspace::unit(field, 4, 3);
            let xy = Subspace::unit(field, 4, 2).sum(&y)?;
            checks.push(ClaimResult::check(
                "square-is-xy-and-y-ideal",
                alg.square() == xy && alg.is_ideal(&y)?,
                format!("dim L² = {}", alg.square().dim()),
            ));
            checks.push(ClaimResult::check("frattini-is-y", report.phi == y, format!("dim Φ = {}", report.phi.dim())));
        }
        _ => {}
    }
    checks.push(frattini_criterion(&alg, &report, budget)?);
    Ok(MinimalVerdict {
        spec: spec.clone(),
        p: field.characteristic(),
        minimal_non_elementary: report.minimal_non_elementary,
        phi: report.phi,
        non_elementary_proper,
        checks,
    })
}

/// For every subalgebra `B` with `B²` nilpotent: `Φ(B) = 0` exactly when
/// `B² ⊆ Asoc(B)` and `B²` has a complementary subalgebra in `B`.
fn frattini_criterion(
    alg: &LeibnizAlgebra,
    report: &LatticeReport,
    budget: &LatticeBudget,
) -> Result<ClaimResult, Error> {
    let mut tested = 0usize;
    for (b, phi) in report.subalgebras.iter().zip(&report.subalgebra_phis) {
        let square = alg.product_space(b, b)?;
        if !alg.is_nilpotent_subalgebra(&square)? {
            continue;
        }
        tested += 1;
        let inner = alg.restrict(b)?;
        let inner_asoc = lattice::ideal_lattice(&inner, budget)?.asoc;
        let asoc = alg.span(inner_asoc.vectors().map(|c| b.embed(c)).collect())?;
        let complemented = report.subalgebras.iter().any(|c| {
            b.contains(c)
                && c.dim() + square.dim() == b.dim()
                && c.intersect(&square).map(|m| m.is_zero()).unwrap_or(false)
        });
        let predicted = asoc.contains(&square) && complemented;
        if predicted != phi.is_zero() {
            return Ok(ClaimResult::new(
                "frattini-zero-criterion",
                ClaimStatus::Fail,
                format!("subalgebra of dim {} has dim Φ = {} but criterion says {predicted}", b.dim(), phi.dim()),
            ));
        }
    }
    Ok(ClaimResult::new(
        "frattini-zero-criterion",
        ClaimStatus::Pass,
        format!("{tested} subalgebras with nilpotent square"),
    ))
}

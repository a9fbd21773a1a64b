use serde::Serialize;

use leibniz::classify::{
    verify_abelian_extension, verify_e_algebra, verify_minimal_non_elementary, verify_unique_maximal_ideal,
    CatalogInstance, LeviData,
};
use leibniz::lattice::LatticeBudget;
use leibniz::radicals::{nilradical, verify_jacobson_claims};
use leibniz::{ClaimResult, ClaimStatus, Error, LeibnizAlgebra, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Jacobson,
    EAlgebra,
    UniqueIdeal,
    Extension,
    Minimal,
}

pub const GROUPS: &[(&str, Group)] = &[
    ("jacobson", Group::Jacobson),
    ("e-algebra", Group::EAlgebra),
    ("unique-ideal", Group::UniqueIdeal),
    ("extension", Group::Extension),
    ("minimal", Group::Minimal),
];

/// Every claim a verifier can emit, with its group.
pub const CLAIMS: &[(&str, Group)] = &[
    ("lr-rl-in-nil", Group::Jacobson),
    ("square-meets-radical", Group::Jacobson),
    ("solvable-jacobson-square", Group::Jacobson),
    ("jacobson-lr-rl", Group::Jacobson),
    ("jacobson-nilpotent", Group::Jacobson),
    ("frattini-in-jacobson", Group::Jacobson),
    ("ideal-jacobson-monotone", Group::Jacobson),
    ("e-iff-quotient-elementary", Group::EAlgebra),
    ("perfect-e-iff-sl2-sum", Group::EAlgebra),
    ("unique-iff-case", Group::UniqueIdeal),
    ("solvable-unique-iff-codim-one", Group::UniqueIdeal),
    ("xl-is-ideal", Group::Extension),
    ("xl-equals-n", Group::Extension),
    ("nil-equals-jacobson", Group::Extension),
    ("unique-maximal-ideal", Group::Extension),
    ("fitting-null-agrees", Group::Extension),
    ("fitting-null-on-n-and-t-square", Group::Extension),
    ("minimal-non-elementary", Group::Minimal),
    ("frattini-is-z", Group::Minimal),
    ("frattini-is-square", Group::Minimal),
    ("proper-subalgebras-in-square", Group::Minimal),
    ("square-is-xy-and-y-ideal", Group::Minimal),
    ("frattini-is-y", Group::Minimal),
    ("frattini-zero-criterion", Group::Minimal),
];

/// What to run: whole groups, optionally narrowed to one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub groups: Vec<Group>,
    pub claim: Option<&'static str>,
}

impl Selection {
    pub fn parse(id: &str) -> Result<Self, String> {
        if id == "all" {
            return Ok(Selection { groups: GROUPS.iter().map(|g| g.1).collect(), claim: None });
        }
        if let Some((_, g)) = GROUPS.iter().find(|g| g.0 == id) {
            return Ok(Selection { groups: vec![*g], claim: None });
        }
        if let Some((c, g)) = CLAIMS.iter().find(|c| c.0 == id) {
            return Ok(Selection { groups: vec![*g], claim: Some(c) });
        }
        Err(format!("unknown claim or group {id:?}"))
    }
}

/// A verification target.
pub enum Target {
    File { name: String, algebra: LeibnizAlgebra },
    Catalog(Box<CatalogInstance>),
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::File { name, .. } => name.clone(),
            Target::Catalog(inst) => format!("{} over {}", inst.spec, inst.algebra.field()),
        }
    }

    fn algebra(&self) -> &LeibnizAlgebra {
        match self {
            Target::File { algebra, .. } => algebra,
            Target::Catalog(inst) => &inst.algebra,
        }
    }

    fn levi(&self) -> Option<&LeviData> {
        match self {
            Target::File { .. } => None,
            Target::Catalog(inst) => Some(&inst.levi),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub target: String,
    pub claim: String,
    pub status: String,
    pub detail: String,
}

/// How a run ended, worst first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Failed,
    Budget,
    NonSplit,
    Undecidable,
    Ok,
}

pub struct Options {
    pub budget: LatticeBudget,
    /// Comma-separated coordinates of `x`, read in each target's field.
    pub x: Option<String>,
}

fn group_name(g: Group) -> &'static str {
    GROUPS.iter().find(|(_, h)| *h == g).map(|(n, _)| *n).expect("listed")
}

/// Runs the selection on one target; returns records and the outcome.
pub fn run(target: &Target, sel: &Selection, opts: &Options) -> (Vec<Record>, Outcome) {
    let name = target.name();
    let mut records = Vec::new();
    let mut outcome = Outcome::Ok;
    for &g in &sel.groups {
        match run_group(target, g, opts) {
            Ok(results) => {
                for r in results.into_iter().filter(|r| sel.claim.is_none_or(|c| c == r.claim)) {
                    outcome = outcome.min(match r.status {
                        ClaimStatus::Fail => Outcome::Failed,
                        ClaimStatus::Undecidable => Outcome::Undecidable,
                        _ => Outcome::Ok,
                    });
                    records.push(Record {
                        target: name.clone(),
                        claim: r.claim,
                        status: r.status.as_str().into(),
                        detail: r.detail,
                    });
                }
            }
            Err(e) => {
                let (status, o) = match &e {
                    Error::Undecidable(_) => ("undecidable", Outcome::Undecidable),
                    Error::BudgetExceeded { .. } | Error::TimeBudgetExceeded { .. } => ("error", Outcome::Budget),
                    Error::NonSplit { .. } => ("error", Outcome::NonSplit),
                    _ => ("error", Outcome::Failed),
                };
                outcome = outcome.min(o);
                records.push(Record {
                    target: name.clone(),
                    claim: sel.claim.unwrap_or(group_name(g)).into(),
                    status: status.into(),
                    detail: e.to_string(),
                });
            }
        }
    }
    (records, outcome)
}

fn not_applicable(claim: &str, detail: impl Into<String>) -> Vec<ClaimResult> {
    vec![ClaimResult::new(claim, ClaimStatus::NotApplicable, detail)]
}

fn run_group(target: &Target, g: Group, opts: &Options) -> Result<Vec<ClaimResult>, Error> {
    let alg = target.algebra();
    match g {
        Group::Jacobson => verify_jacobson_claims(alg, &[]),
        Group::EAlgebra => {
            let v = verify_e_algebra(alg, target.levi(), &opts.budget)?;
            let verdict = format!("E-algebra {} ({})", v.e_algebra, v.method);
            if v.checks.is_empty() {
                return Ok(not_applicable("e-algebra", format!("{verdict}; nothing further to check")));
            }
            Ok(v.checks.into_iter().map(|c| ClaimResult::new(c.claim, c.status, format!("{}; {verdict}", c.detail))).collect())
        }
        Group::UniqueIdeal => {
            let v = verify_unique_maximal_ideal(alg, target.levi(), &opts.budget)?;
            let evidence = v.evidence.join(", ");
            Ok(v.checks.into_iter().map(|c| ClaimResult::new(c.claim, c.status, format!("{}; {evidence}", c.detail))).collect())
        }
        Group::Extension => {
            let x = match &opts.x {
                Some(text) => text
                    .split(',')
                    .map(|c| alg.field().parse_scalar(c.trim()))
                    .collect::<Result<Vec<Scalar>, _>>()?,
                None => {
                    let nil = nilradical(alg)?;
                    match (0..alg.dim()).map(|i| alg.basis_vector(i)).find(|v| !nil.contains_vector(v)) {
                        Some(x) => x,
                        None => return Ok(not_applicable("abelian-extension", "L is nilpotent; no x outside Nil(L)")),
                    }
                }
            };
            match verify_abelian_extension(alg, &x, None, &opts.budget) {
                Err(Error::HypothesisViolated(why)) => Ok(not_applicable("abelian-extension", why)),
                r => r,
            }
        }
        Group::Minimal => match target {
            Target::Catalog(inst) if !alg.field().is_char_zero() => {
                let p = u64::from(alg.field().characteristic());
                Ok(verify_minimal_non_elementary(&inst.spec, p, &opts.budget)?.checks)
            }
            _ => Ok(not_applicable("minimal-non-elementary", "family verdicts need a catalog target over GF(p)")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz::classify::FamilySpec;
    use leibniz::FieldSpec;

    fn opts() -> Options {
        Options { budget: LatticeBudget::default(), x: None }
    }

    #[test]
    fn selections() {
        assert_eq!(Selection::parse("all").unwrap().groups.len(), GROUPS.len());
        let s = Selection::parse("lr-rl-in-nil").unwrap();
        assert_eq!((s.groups.as_slice(), s.claim), (&[Group::Jacobson][..], Some("lr-rl-in-nil")));
        assert!(Selection::parse("nope").is_err());
    }

    #[test]
    fn square_nonzero_has_case_three() {
        let t = Target::Catalog(Box::new(FamilySpec::SquareNonzero.instance(FieldSpec::Rationals).unwrap()));
        let (records, outcome) = run(&t, &Selection::parse("unique-ideal").unwrap(), &opts());
        assert_eq!(outcome, Outcome::Ok);
        let r = records.iter().find(|r| r.claim == "unique-iff-case").unwrap();
        assert_eq!(r.status, "pass");
        assert!(r.detail.contains("case 3"), "{}", r.detail);
    }

    #[test]
    fn family4_minimal_fails() {
        let t = Target::Catalog(Box::new(
            FamilySpec::Family4 { alpha: leibniz::classify::rational(1), beta: leibniz::classify::rational(1) }
                .instance(FieldSpec::prime(3).unwrap())
                .unwrap(),
        ));
        let (records, outcome) = run(&t, &Selection::parse("minimal").unwrap(), &opts());
        assert_eq!(outcome, Outcome::Failed);
        assert_eq!(records[0].status, "fail");
    }

    #[test]
    fn budget_errors_are_records() {
        let t = Target::Catalog(Box::new(FamilySpec::CyclicNilpotent { n: 6 }.instance(FieldSpec::prime(5).unwrap()).unwrap()));
        let o = Options { budget: LatticeBudget::new(10, 10).unwrap(), x: None };
        let (records, outcome) = run(&t, &Selection::parse("unique-ideal").unwrap(), &o);
        assert_eq!(outcome, Outcome::Budget);
        assert_eq!(records[0].status, "error");
    }
}

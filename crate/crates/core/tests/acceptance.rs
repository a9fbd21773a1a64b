//! Acceptance criteria 1 to 8. Each criterion prints one PASS/FAIL line.
//!
//! A criterion listed in `KNOWN_RED` is expected to fail for a documented
//! mathematical reason; it still prints FAIL. The process exits non-zero
//! when any other criterion fails, or when a known-red criterion passes.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leibniz::classify::{
    all_leibniz_tables, catalog_grid, rational, verify_abelian_extension, verify_e_algebra,
    verify_minimal_non_elementary, verify_unique_maximal_ideal, FamilySpec,
};
use leibniz::lattice::{self, enumerate_subspaces, LatticeBudget};
use leibniz::linalg::{char_poly, fitting_decomposition, is_nilpotent_operator};
use leibniz::radicals::{nilradical, verify_jacobson_claims, Engine};
use leibniz::{ClaimStatus, FieldSpec, LeibnizAlgebra, Matrix, Scalar, Subspace};

struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome { pass, summary: summary.into(), notes: Vec::new() }
    }
}

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Independent identity check straight from the structure constants.
fn identity_holds(alg: &LeibnizAlgebra) -> bool {
    let n = alg.dim();
    let f = alg.field();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for k in 0..n {
                    // b_i(b_j b_l) - (b_i b_j)b_l - b_j(b_i b_l), coefficient of b_k
                    let mut d = f.zero();
                    for m in 0..n {
                        d.add_mul_assign(alg.coeff(j, l, m), alg.coeff(i, m, k));
                        d.add_mul_assign(&-alg.coeff(i, j, m).clone(), alg.coeff(m, l, k));
                        d.add_mul_assign(&-alg.coeff(i, l, m).clone(), alg.coeff(j, m, k));
                    }
                    if !d.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut bad = Vec::new();
    for spec in catalog_grid() {
        for field in [Q, gf(5), gf(7)] {
            match spec.build(field) {
                Ok(alg) if alg.validate().is_ok() && identity_holds(&alg) => count += 1,
                Ok(_) => bad.push(format!("{spec} over {field}: identity fails")),
                Err(e) => bad.push(format!("{spec} over {field}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let mut o = Outcome::new(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("{count} instances validated in {:.3} s (limit 1 s)", elapsed.as_secs_f64()),
    );
    o.notes = bad;
    o
}

fn criterion_2() -> Outcome {
    let budget = LatticeBudget::default();
    let cs = [rational(1), rational(2), rational(-1), num_half()];
    let mut specs = Vec::new();
    for c in &cs {
        specs.push(FamilySpec::Family1a { c: c.clone() });
        specs.push(FamilySpec::Family1b { c: c.clone() });
    }
    specs.extend((2..=4).map(|n| FamilySpec::CyclicNilpotent { n }));
    specs.push(FamilySpec::Heisenberg { m: 1 });
    for a in 1..=2 {
        for b in 1..=2 {
            specs.push(FamilySpec::Family4 { alpha: rational(a), beta: rational(b) });
        }
    }
    let mut runs = 0;
    let mut slowest = Duration::ZERO;
    let mut notes = Vec::new();
    for p in [3u64, 5, 7] {
        for spec in &specs {
            let t = Instant::now();
            match verify_minimal_non_elementary(spec, p, &budget) {
                Ok(v) => {
                    let took = t.elapsed();
                    slowest = slowest.max(took);
                    runs += 1;
                    if !v.passed() || !v.minimal_non_elementary || took > Duration::from_secs(30) {
                        let failed: Vec<String> = v
                            .checks
                            .iter()
                            .filter(|c| c.status == ClaimStatus::Fail)
                            .map(|c| format!("{}: {}", c.claim, c.detail))
                            .collect();
                        notes.push(format!("{spec} mod {p} ({:.2} s): {}", took.as_secs_f64(), failed.join("; ")));
                    }
                }
                Err(leibniz::Error::BadParams(m)) => notes.push(format!("{spec} mod {p} skipped: {m}")),
                Err(e) => notes.push(format!("{spec} mod {p}: error {e}")),
            }
        }
    }
    let failures = notes.iter().filter(|n| !n.contains("skipped")).count();
    let mut o = Outcome::new(
        failures == 0,
        format!("{runs} lattice runs, slowest {:.2} s (limit 30 s), {failures} failures", slowest.as_secs_f64()),
    );
    o.notes = notes;
    o
}

fn num_half() -> num_rational::BigRational {
    num_rational::BigRational::new(1.into(), 2.into())
}

fn criterion_3() -> Outcome {
    let mut records = 0;
    let mut passes = 0;
    let mut notes = Vec::new();
    for spec in catalog_grid() {
        let alg = spec.build(Q).unwrap();
        let square = alg.square();
        let results = match verify_jacobson_claims(&alg, &[square]) {
            Ok(r) => r,
            Err(e) => {
                notes.push(format!("{spec}: error {e}"));
                continue;
            }
        };
        for r in results {
            records += 1;
            match r.status {
                ClaimStatus::Pass => passes += 1,
                ClaimStatus::NotApplicable => {}
                _ => notes.push(format!("{spec}: {} {} ({})", r.claim, r.status, r.detail)),
            }
        }
    }
    let mut o = Outcome::new(
        notes.is_empty(),
        format!("{passes} passing records of {records} over {} instances", catalog_grid().len()),
    );
    o.notes = notes;
    o
}

fn criterion_4() -> Outcome {
    let budget = LatticeBudget::default();
    let mut agreements = 0;
    let mut notes = Vec::new();
    let mut disagreements = 0;
    for spec in catalog_grid().into_iter().filter(FamilySpec::has_integer_constants) {
        let over_q = spec.build(Q).unwrap();
        let nil_q = nilradical(&over_q).ok();
        for p in [5u64, 7] {
            let field = gf(p);
            let alg = spec.build(field).unwrap();
            if !lattice::within_budget(field, alg.dim(), &budget) {
                notes.push(format!("{spec} mod {p} skipped: {} subspaces exceed the budget", lattice::subspace_count(alg.dim(), p)));
                continue;
            }
            let ideals = lattice::ideal_lattice(&alg, &budget).unwrap();
            if alg.is_solvable() {
                if ideals.jacobson == alg.square() {
                    agreements += 1;
                } else {
                    disagreements += 1;
                    notes.push(format!("{spec} mod {p}: brute-force J differs from L²"));
                }
            }
            if let Some(nil) = nil_q.as_ref().filter(|_| p as usize > alg.dim()) {
                if nil.to_field(field).unwrap() == ideals.nil {
                    agreements += 1;
                } else {
                    disagreements += 1;
                    notes.push(format!("{spec} mod {p}: Nil differs"));
                }
            }
        }
    }
    let mut o = Outcome::new(
        disagreements == 0,
        format!("{agreements} agreements, {disagreements} disagreements"),
    );
    o.notes = notes;
    o
}

fn criterion_5() -> Outcome {
    let f2 = gf(2);
    let budget = LatticeBudget::default();
    let mut corpus = Vec::new();
    for n in 0..=2 {
        corpus.extend(all_leibniz_tables(f2, n, 1 << 16).unwrap());
    }
    let generated = corpus.len();
    for spec in catalog_grid().into_iter().filter(|s| s.dim() == 3) {
        if let Ok(alg) = spec.build(f2) {
            corpus.push(alg);
        }
    }
    let mut e_count = 0;
    let mut notes = Vec::new();
    for alg in &corpus {
        match verify_e_algebra(alg, None, &budget) {
            Ok(v) => {
                e_count += usize::from(v.e_algebra);
                if !v.checks.iter().all(|c| c.passed()) {
                    notes.push(format!("{:?}: {:?}", alg.labels(), v.checks));
                }
            }
            Err(e) => notes.push(format!("error {e}")),
        }
    }
    let mut o = Outcome::new(
        notes.is_empty(),
        format!(
            "{} algebras ({generated} generated tables of dim <= 2, {} catalog), {e_count} E-algebras, 0 exceptions required",
            corpus.len(),
            corpus.len() - generated
        ),
    );
    o.notes = notes;
    o
}

fn criterion_6() -> Outcome {
    let budget = LatticeBudget::default();
    let mut notes = Vec::new();
    let specs = [
        FamilySpec::CyclicNilpotent { n: 3 },
        FamilySpec::SquareNonzero,
        FamilySpec::SquareZero,
        FamilySpec::NilPlusSimple,
    ];
    for spec in &specs {
        let inst = spec.instance(gf(5)).unwrap();
        let v = verify_unique_maximal_ideal(&inst.algebra, Some(&inst.levi), &budget).unwrap();
        if v.maximal_ideals != Some(1) {
            notes.push(format!("{spec}: GF(5) oracle found {:?} maximal ideals", v.maximal_ideals));
        }
        if spec.is_solvable() {
            let q = verify_unique_maximal_ideal(&spec.build(Q).unwrap(), None, &budget).unwrap();
            if !q.unique || q.engine != Engine::Char0 {
                notes.push(format!("{spec}: characteristic-0 engine disagrees"));
            }
        }
    }
    let mut o = Outcome::new(notes.is_empty(), format!("{} witnesses with one maximal ideal mod 5", specs.len() - notes.len()));
    o.notes = notes;
    o
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = 0;
    for field in [Q, gf(5)] {
        let alg = FamilySpec::SquareNonzero.build(field).unwrap();
        let x = alg.basis_vector(0);
        for r in verify_abelian_extension(&alg, &x, None, &LatticeBudget::default()).unwrap() {
            if r.passed() {
                passed += 1;
            } else {
                notes.push(format!("{field}: {} {} ({})", r.claim, r.status, r.detail));
            }
        }
    }
    let mut o = Outcome::new(notes.is_empty() && passed == 12, format!("{passed} of 12 checks pass over Q and GF(5)"));
    o.notes = notes;
    o
}

fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            if rng.gen_bool(0.3) {
                return field.zero();
            }
            let num: i64 = rng.gen_range(-3..=3);
            let den: i64 = rng.gen_range(1..=3);
            field.parse_scalar(&format!("{num}/{den}")).unwrap()
        }
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..i64::from(p))),
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, field: FieldSpec, n: usize) -> Matrix {
    let entries: Vec<Scalar> = (0..n * n).map(|_| random_scalar(rng, field)).collect();
    Matrix::from_fn(field, n, n, |i, j| entries[i * n + j].clone())
}

fn random_subspace(rng: &mut ChaCha8Rng, field: FieldSpec, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    let rows = (0..k).map(|_| (0..n).map(|_| random_scalar(rng, field)).collect()).collect();
    Subspace::from_vectors(field, n, rows).unwrap()
}

/// `[n choose k]_q` from the product formula.
fn gaussian_oracle(n: u32, k: u32, q: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n) - q.pow(i);
        den *= q.pow(k) - q.pow(i);
    }
    num / den
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e1b_2024);
    let mut notes = Vec::new();
    let fields = |i: usize| match i % 5 {
        0 | 1 => Q,
        2 => gf(2),
        3 => gf(5),
        _ => gf(7),
    };
    let mut trials = [0usize; 2];
    for i in 0.. {
        if trials == [1000, 1000] {
            break;
        }
        let field = fields(i);
        let slot = usize::from(!field.is_char_zero());
        if trials[slot] >= 1000 {
            continue;
        }
        trials[slot] += 1;
        let n = rng.gen_range(1..=5);
        let m = random_matrix(&mut rng, field, n);
        if !char_poly(&m).unwrap().eval_matrix(&m).unwrap().is_zero() {
            notes.push(format!("Cayley-Hamilton fails over {field}:\n{m}"));
        }
        let (null, one) = fitting_decomposition(&m).unwrap();
        let fitting_ok = null.dim() + one.dim() == n
            && null.intersect(&one).unwrap().is_zero()
            && null.is_invariant(&m)
            && one.is_invariant(&m)
            && is_nilpotent_operator(&null.restrict_operator(&m).unwrap()).unwrap()
            && (one.is_zero() || one.restrict_operator(&m).unwrap().rank() == one.dim());
        if !fitting_ok {
            notes.push(format!("Fitting decomposition fails over {field}:\n{m}"));
        }
        let u = random_subspace(&mut rng, field, n);
        let v = random_subspace(&mut rng, field, n);
        let w = u.sum(&random_subspace(&mut rng, field, n)).unwrap();
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        let modular = sum.dim() + meet.dim() == u.dim() + v.dim()
            && w.intersect(&sum).unwrap() == u.sum(&w.intersect(&v).unwrap()).unwrap();
        if !modular {
            notes.push(format!("modular law fails over {field}"));
        }
    }
    let budget = LatticeBudget::default();
    for (n, p) in [(2usize, 2u64), (3, 2), (3, 3), (4, 2)] {
        let count = enumerate_subspaces(gf(p), n, &budget).unwrap().count() as u128;
        let expected: u128 = (0..=n as u32).map(|k| gaussian_oracle(n as u32, k, u128::from(p))).sum();
        if count != expected {
            notes.push(format!("GF({p})^{n}: enumerated {count}, expected {expected}"));
        }
    }
    let mut o = Outcome::new(
        notes.is_empty() && trials == [1000, 1000],
        format!("{} trials over Q, {} over GF(p); 4 enumeration counts", trials[0], trials[1]),
    );
    o.notes = notes;
    o
}

/// Criteria that cannot pass, with the reason printed under the FAIL line.
const KNOWN_RED: &[(u8, &str)] = &[(
    2,
    "family4 is not minimal non-elementary for any nonzero alpha, beta: with c = beta*a - alpha*b, \
     u = c + x has uu = -alpha*y, so <u, y> is a proper subalgebra with Phi = <y>",
)];

type Criterion = (u8, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "identity validation", criterion_1),
        (2, "minimal non-elementary verdicts mod p", criterion_2),
        (3, "Jacobson containments over Q", criterion_3),
        (4, "cross-engine agreement", criterion_4),
        (5, "E-algebra iff L/Phi(L) elementary over GF(2)", criterion_5),
        (6, "unique maximal ideal", criterion_6),
        (7, "abelian-extension checks on the x^2 != 0 witness", criterion_7),
        (8, "linear algebra kernel properties", criterion_8),
    ];
    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Outcome::new(false, "panicked"));
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {n} [{name}]: {verdict} ({}; {:.2} s)",
            outcome.summary,
            start.elapsed().as_secs_f64()
        );
        let known = KNOWN_RED.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        if let (false, Some(why)) = (outcome.pass, known) {
            println!("    known red: {why}");
        }
        for note in &outcome.notes {
            println!("    {note}");
        }
        match (outcome.pass, known) {
            (false, None) => unexpected += 1,
            (true, Some(_)) => {
                println!("    criterion {n} is listed as known red but passed");
                unexpected += 1;
            }
            _ => {}
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}

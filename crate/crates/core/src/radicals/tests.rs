use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::TableBuilder;
use crate::classify::{catalog_grid, rational, FamilySpec};
use crate::claims::ClaimStatus;
use crate::lattice::{self, LatticeBudget};

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn span(alg: &LeibnizAlgebra, vecs: &[&[i64]]) -> Subspace {
    let f = alg.field();
    alg.span(vecs.iter().map(|v| v.iter().map(|&c| f.from_i64(c)).collect()).collect())
        .unwrap()
}

fn units(alg: &LeibnizAlgebra, idx: &[usize]) -> Subspace {
    alg.span(idx.iter().map(|&i| alg.basis_vector(i)).collect()).unwrap()
}

fn build(spec: FamilySpec) -> LeibnizAlgebra {
    spec.build(Q).unwrap()
}

fn family_1a(c: i64) -> LeibnizAlgebra {
    build(FamilySpec::Family1a { c: rational(c) })
}

/// `xu = v, xv = -u` and the antisymmetric partners: `L_x` has no rational
/// eigenvalue on `⟨u, v⟩`.
fn rotation() -> LeibnizAlgebra {
    let labels: Vec<_> = ["x", "u", "v"].iter().map(|s| s.to_string()).collect();
    let mut b = TableBuilder::new(Q, labels);
    b.product_ints(0, 1, &[(2, 1)])
        .product_ints(0, 2, &[(1, -1)])
        .product_ints(1, 0, &[(2, -1)])
        .product_ints(2, 0, &[(1, 1)]);
    b.build().unwrap()
}

/// Null space of `tr(L_a L_b)` computed directly from structure constants.
fn trace_form_kernel(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    let f = alg.field();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut t = f.zero();
                    for j in 0..n {
                        for k in 0..n {
                            t.add_mul_assign(alg.coeff(a, j, k), alg.coeff(b, k, j));
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(f, n, rows).unwrap().kernel()
}

#[test]
fn leibniz_kernel_examples() {
    let c = build(FamilySpec::CyclicNilpotent { n: 3 });
    assert_eq!(leib_kernel(&c), units(&c, &[1, 2]));
    let l = family_1a(1);
    assert_eq!(leib_kernel(&l), units(&l, &[1, 2]));
    for lie in [
        build(FamilySpec::Family1b { c: rational(1) }),
        build(FamilySpec::Heisenberg { m: 2 }),
        build(FamilySpec::Sl2Sum { k: 1 }),
    ] {
        assert!(leib_kernel(&lie).is_zero());
    }
    for spec in catalog_grid() {
        let alg = build(spec);
        let (q, _) = alg.quotient(&leib_kernel(&alg)).unwrap();
        assert!(q.is_antisymmetric());
    }
}

#[test]
fn radical_examples() {
    assert!(radical(&build(FamilySpec::Sl2Sum { k: 2 })).unwrap().is_zero());
    let w = build(FamilySpec::EAlgebraWitness);
    assert_eq!(radical(&w).unwrap(), units(&w, &[3, 4]));
    let ns = build(FamilySpec::NilPlusSimple);
    assert_eq!(radical(&ns).unwrap(), units(&ns, &[3, 4]));
    assert!(radical(&family_1a(2)).unwrap().is_full());
    assert!(radical(&rotation()).unwrap().is_full());
    let sl2 = build(FamilySpec::Sl2Sum { k: 1 });
    assert!(killing_form(&sl2).rank() == 3);
}

#[test]
fn nilradical_examples() {
    let l = family_1a(1);
    assert_eq!(nilradical(&l).unwrap(), units(&l, &[1, 2]));
    let sn = build(FamilySpec::SquareNonzero);
    assert_eq!(nilradical(&sn).unwrap(), units(&sn, &[1]));
    let f4 = build(FamilySpec::Family4 { alpha: rational(1), beta: rational(2) });
    // a - b/2 acts trivially on the left when β = 2α
    assert_eq!(nilradical(&f4).unwrap(), span(&f4, &[&[2, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
    let ns = build(FamilySpec::NilPlusSimple);
    assert_eq!(nilradical(&ns).unwrap(), units(&ns, &[3, 4]));
    let w = build(FamilySpec::EAlgebraWitness);
    assert_eq!(nilradical(&w).unwrap(), units(&w, &[4]));
    let h = build(FamilySpec::Heisenberg { m: 1 });
    assert!(nilradical(&h).unwrap().is_full());
    assert!(nilradical(&build(FamilySpec::Sl2Sum { k: 1 })).unwrap().is_zero());
}

#[test]
fn non_split_nilradical_is_reported() {
    let r = rotation();
    match nilradical(&r) {
        Err(Error::NonSplit { operator, .. }) => assert!(!rational_eigenvalues(&operator).unwrap().split),
        other => panic!("expected NonSplit, got {other:?}"),
    }
}

#[test]
fn weight_flag_is_invariant() {
    let f4 = build(FamilySpec::Family4 { alpha: rational(2), beta: rational(1) });
    let wf = weight_flag(&f4).unwrap();
    assert_eq!(wf.flag.len(), 5);
    for (k, v) in wf.flag.iter().enumerate() {
        assert_eq!(v.dim(), k);
        for i in 0..f4.dim() {
            assert!(v.is_invariant(&f4.left_mult(&f4.basis_vector(i)).unwrap()));
        }
    }
}

#[test]
fn nilradical_matches_trace_form_on_split_solvable() {
    for spec in catalog_grid().into_iter().filter(FamilySpec::is_solvable) {
        let alg = build(spec.clone());
        let nil = nilradical(&alg).unwrap();
        assert_eq!(nil, trace_form_kernel(&alg), "{spec}");
    }
}

#[test]
fn asoc_examples() {
    assert!(asoc(&LeibnizAlgebra::abelian(Q, 3)).unwrap().is_full());
    let h = build(FamilySpec::Heisenberg { m: 1 });
    assert_eq!(asoc(&h).unwrap(), units(&h, &[2]));
    let l = family_1a(1);
    assert_eq!(asoc(&l).unwrap(), units(&l, &[2]));
    assert!(asoc(&build(FamilySpec::Sl2Sum { k: 1 })).unwrap().is_zero());
    let ns = build(FamilySpec::NilPlusSimple);
    assert_eq!(asoc(&ns).unwrap(), units(&ns, &[3, 4]));
    let f4 = build(FamilySpec::Family4 { alpha: rational(1), beta: rational(1) });
    assert_eq!(asoc(&f4).unwrap(), units(&f4, &[3]));
    let sl2 = build(FamilySpec::Sl2Sum { k: 1 });
    assert!(socle(&sl2).unwrap().is_full());
    assert_eq!(ideal_lines(&l).unwrap(), vec![units(&l, &[2])]);
}

#[test]
fn jacobson_examples() {
    let l = family_1a(1);
    let rad = radical(&l).unwrap();
    assert_eq!(jacobson_char0(&l, &rad).unwrap(), units(&l, &[1, 2]));
    let sl = build(FamilySpec::Sl2Sum { k: 2 });
    assert!(jacobson_char0(&sl, &radical(&sl).unwrap()).unwrap().is_zero());
    for (spec, expect) in [(FamilySpec::EAlgebraWitness, vec![4]), (FamilySpec::NilPlusSimple, vec![3, 4])] {
        let alg = build(spec);
        let rad = radical(&alg).unwrap();
        let j = jacobson_char0(&alg, &rad).unwrap();
        assert_eq!(j, units(&alg, &expect));
        assert_eq!(j, jacobson_by_quotients(&alg, &rad).unwrap());
    }
    let not_ideal = span(&l, &[&[1, 0, 0]]);
    assert!(matches!(jacobson_char0(&l, &not_ideal), Err(Error::NotAnIdeal)));
}

#[test]
fn char0_engines_agree_with_prime_field_lattice() {
    let budget = LatticeBudget::default();
    for spec in catalog_grid().into_iter().filter(|s| s.dim() <= 5 && s.has_integer_constants()) {
        let alg = build(spec.clone());
        let report = radical_report(&alg).unwrap();
        for p in [5u64, 7] {
            if spec.dim() >= 5 && p == 7 {
                continue;
            }
            let Ok(modp) = spec.build(gf(p)) else { continue };
            let brute = lattice::ideal_lattice(&modp, &budget).unwrap();
            let f = gf(p);
            assert_eq!(brute.nil, report.nil.to_field(f).unwrap(), "Nil of {spec} mod {p}");
            assert_eq!(brute.rad, report.rad.to_field(f).unwrap(), "Rad of {spec} mod {p}");
            assert_eq!(brute.jacobson, report.jac.to_field(f).unwrap(), "J of {spec} mod {p}");
            assert_eq!(brute.asoc, report.asoc.to_field(f).unwrap(), "Asoc of {spec} mod {p}");
        }
    }
}

#[test]
fn frattini_estimates_for_catalog() {
    let cases: Vec<(FamilySpec, Vec<usize>)> = vec![
        (FamilySpec::Family1a { c: rational(1) }, vec![2]),
        (FamilySpec::Family1b { c: rational(2) }, vec![2]),
        (FamilySpec::Heisenberg { m: 1 }, vec![2]),
        (FamilySpec::CyclicNilpotent { n: 4 }, vec![1, 2, 3]),
        (FamilySpec::Family4 { alpha: rational(1), beta: rational(2) }, vec![3]),
        (FamilySpec::SquareNonzero, vec![]),
        (FamilySpec::SquareZero, vec![]),
        (FamilySpec::NilPlusSimple, vec![]),
        (FamilySpec::EAlgebraWitness, vec![]),
        (FamilySpec::Sl2Sum { k: 1 }, vec![]),
    ];
    for (spec, expect) in cases {
        let alg = build(spec.clone());
        let est = frattini_char0(&alg).unwrap();
        let want = units(&alg, &expect);
        assert_eq!(est.exact.as_ref(), Some(&want), "{spec}: {}", est.method);
        assert_eq!(est.nonzero, Some(!expect.is_empty()), "{spec}");
        if spec.dim() <= 4 {
            let (_, phi) = lattice::frattini_bruteforce(&spec.build(gf(5)).unwrap(), &LatticeBudget::default()).unwrap();
            assert_eq!(phi, want.to_field(gf(5)).unwrap(), "{spec} mod 5");
        }
    }
}

#[test]
fn complements() {
    let l = family_1a(1);
    assert_eq!(complement_subalgebra(&l, &units(&l, &[2])).unwrap(), None);
    let c = complement_subalgebra(&l, &units(&l, &[1, 2])).unwrap().unwrap();
    assert_eq!(c, units(&l, &[0]));
    let sn = build(FamilySpec::SquareNonzero);
    assert_eq!(complement_subalgebra(&sn, &units(&sn, &[1])).unwrap(), Some(span(&sn, &[&[1, -1]])));
    let h = build(FamilySpec::Heisenberg { m: 1 });
    assert!(matches!(complement_subalgebra(&h, &h.whole()), Err(Error::HypothesisViolated(_))));
    assert!(matches!(complement_subalgebra(&l, &units(&l, &[0])), Err(Error::NotAnIdeal)));
    assert_eq!(phi_free(&l).unwrap(), Some(false));
    assert_eq!(phi_free(&sn).unwrap(), Some(true));
}

#[test]
fn reports_and_field_guards() {
    let l5 = family_1a(1).to_field(gf(5)).unwrap();
    assert!(matches!(radical(&l5), Err(Error::WrongCharacteristic { .. })));
    assert!(matches!(frattini_char0(&l5), Err(Error::WrongCharacteristic { .. })));
    let brute = radical_report(&l5).unwrap();
    assert_eq!(brute.engine, Engine::BruteForce);
    let exact = radical_report(&family_1a(1)).unwrap();
    assert_eq!(exact.engine, Engine::Char0);
    assert_eq!(brute.jac, exact.jac.to_field(gf(5)).unwrap());
    let z = radical_report(&LeibnizAlgebra::zero(gf(3))).unwrap();
    assert_eq!(z.caveats.len(), 1);
}

#[test]
fn jacobson_claims_over_q_and_gf5() {
    for spec in catalog_grid() {
        let alg = build(spec.clone());
        for r in verify_jacobson_claims(&alg, &[]).unwrap() {
            assert!(
                matches!(r.status, ClaimStatus::Pass | ClaimStatus::NotApplicable),
                "{spec}: {} {} ({})",
                r.claim,
                r.status,
                r.detail
            );
        }
    }
    let l = family_1a(1).to_field(gf(5)).unwrap();
    let extra = [units(&l, &[1, 2]), units(&l, &[0])];
    let results = verify_jacobson_claims(&l, &extra).unwrap();
    let passed: Vec<&str> = results.iter().filter(|r| r.passed()).map(|r| r.claim.as_str()).collect();
    assert_eq!(passed, ["solvable-jacobson-square", "ideal-jacobson-monotone", "ideal-jacobson-monotone"]);
    assert_eq!(results.last().unwrap().status, ClaimStatus::NotApplicable);
    let rot = verify_jacobson_claims(&rotation(), &[]).unwrap();
    assert_eq!(rot[0].status, ClaimStatus::Undecidable);
}

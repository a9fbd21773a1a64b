use alloc::vec::Vec;

use super::*;
use crate::classify::{rational, FamilySpec};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn span(alg: &LeibnizAlgebra, vecs: &[&[i64]]) -> Subspace {
    let f = alg.field();
    alg.span(vecs.iter().map(|v| v.iter().map(|&c| f.from_i64(c)).collect()).collect())
        .unwrap()
}

fn budget() -> LatticeBudget {
    LatticeBudget::default()
}

fn family_1a(p: u64) -> LeibnizAlgebra {
    FamilySpec::Family1a { c: rational(1) }.build(gf(p)).unwrap()
}

#[test]
fn family_1a_is_minimal_non_elementary() {
    let l = family_1a(5);
    let r = classify_lattice(&l, &budget()).unwrap();
    assert_eq!(r.phi, span(&l, &[&[0, 0, 1]]));
    assert!(r.minimal_non_elementary);
    assert!(!r.elementary);
    assert_eq!(r.subspaces_scanned, subspace_count(3, 5));
}

#[test]
fn heisenberg_over_gf3() {
    let h = FamilySpec::Heisenberg { m: 1 }.build(gf(3)).unwrap();
    let r = classify_lattice(&h, &budget()).unwrap();
    assert_eq!(r.phi, span(&h, &[&[0, 0, 1]]));
    assert_eq!(r.phi, h.square());
    assert!(!r.elementary);
    assert!(r.minimal_non_elementary);
}

#[test]
fn abelian_is_elementary() {
    let a = LeibnizAlgebra::abelian(gf(2), 3);
    let r = classify_lattice(&a, &budget()).unwrap();
    assert!(r.frattini_subalgebra.is_zero());
    assert!(r.phi.is_zero());
    assert!(r.elementary && r.e_algebra && !r.minimal_non_elementary);
    assert_eq!(r.subalgebras.len(), 16);
}

#[test]
fn zero_algebra_conventions() {
    let z = LeibnizAlgebra::zero(gf(2));
    let r = classify_lattice(&z, &budget()).unwrap();
    assert!(r.jacobson.is_zero() && r.frattini_subalgebra.is_zero());
    assert!(r.maximal_subalgebras.is_empty());
    assert!(jacobson_bruteforce(&z, &budget()).unwrap().is_zero());
}

#[test]
fn cyclic_nilpotent_phi_and_j_are_the_square() {
    let c = FamilySpec::CyclicNilpotent { n: 3 }.build(gf(5)).unwrap();
    let (_, phi) = frattini_bruteforce(&c, &budget()).unwrap();
    assert_eq!(phi, c.square());
    assert_eq!(jacobson_bruteforce(&c, &budget()).unwrap(), c.square());
}

#[test]
fn square_nonzero_radicals() {
    let l = FamilySpec::SquareNonzero.build(gf(5)).unwrap();
    let r = ideal_lattice(&l, &budget()).unwrap();
    let n = span(&l, &[&[0, 1]]);
    assert_eq!(r.nil, n);
    assert_eq!(r.asoc, n);
    assert_eq!(r.maximal_ideals, core::slice::from_ref(&n));
    assert!(r.rad.is_full());
}

#[test]
fn lattice_invariants() {
    let cases: Vec<LeibnizAlgebra> = [
        (FamilySpec::Family1a { c: rational(2) }, 3),
        (FamilySpec::Family1b { c: rational(1) }, 3),
        (FamilySpec::Heisenberg { m: 1 }, 3),
        (FamilySpec::SquareNonzero, 5),
        (FamilySpec::SquareZero, 5),
        (FamilySpec::Family4 { alpha: rational(1), beta: rational(2) }, 3),
        (FamilySpec::Sl2Sum { k: 1 }, 5),
    ]
    .into_iter()
    .map(|(f, p)| f.build(gf(p)).unwrap())
    .collect();
    for l in &cases {
        let r = classify_lattice(l, &budget()).unwrap();
        assert!(r.maximal_subalgebras.iter().all(|m| m.contains(&r.frattini_subalgebra)));
        assert!(r.maximal_ideals.iter().all(|m| m.contains(&r.jacobson)));
        assert!(r.frattini_subalgebra.contains(&r.phi));
        assert!(l.is_ideal(&r.phi).unwrap());
        assert!(l.square().contains(&r.jacobson));
        // Φ is the largest ideal inside F
        let inside: Vec<&Subspace> = r.ideals.iter().filter(|i| r.frattini_subalgebra.contains(i)).collect();
        assert!(inside.iter().all(|i| r.phi.contains(i)));
        // Nil contains every nilpotent ideal
        for i in &r.ideals {
            if l.is_nilpotent_subalgebra(i).unwrap() {
                assert!(r.nil.contains(i));
            }
        }
        assert_eq!(r.ideal_report(), ideal_lattice(l, &budget()).unwrap());
        if l.is_solvable() {
            assert_eq!(jacobson_bruteforce(l, &budget()).unwrap(), r.jacobson);
            assert_eq!(maximal_ideals_solvable(l, &budget()).unwrap(), r.maximal_ideals);
        }
    }
}

#[test]
fn sl2_is_frattini_free() {
    let s = FamilySpec::Sl2Sum { k: 1 }.build(gf(5)).unwrap();
    let r = classify_lattice(&s, &budget()).unwrap();
    assert!(r.phi.is_zero());
    assert_eq!(r.maximal_ideals, [s.zero_subspace()]);
    assert!(r.jacobson.is_zero());
    assert!(r.rad.is_zero() && r.nil.is_zero());
}

#[test]
fn errors() {
    let l = family_1a(5);
    let tiny = LatticeBudget::new(50, 10).unwrap();
    assert!(matches!(classify_lattice(&l, &tiny), Err(Error::BudgetExceeded { required: 64, .. })));
    let q = FamilySpec::Family1a { c: rational(1) }.build(FieldSpec::Rationals).unwrap();
    assert!(matches!(classify_lattice(&q, &budget()), Err(Error::NeedsPrimeField { .. })));
    let s = FamilySpec::Sl2Sum { k: 1 }.build(gf(5)).unwrap();
    assert!(matches!(maximal_ideals_solvable(&s, &budget()), Err(Error::HypothesisViolated(_))));
}

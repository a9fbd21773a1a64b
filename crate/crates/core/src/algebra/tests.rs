use alloc::vec;
use alloc::vec::Vec;

use super::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn family_1a(field: FieldSpec, c: i64) -> LeibnizAlgebra {
    let mut b = TableBuilder::new(field, ["x", "y", "z"]);
    b.product_ints(0, 2, &[(2, c)]);
    b.product_ints(0, 1, &[(1, c), (2, 1)]);
    b.build().unwrap()
}

fn heisenberg3(field: FieldSpec) -> LeibnizAlgebra {
    let mut b = TableBuilder::new(field, ["x", "y", "z"]);
    b.product_ints(0, 1, &[(2, 1)]);
    b.product_ints(1, 0, &[(2, -1)]);
    b.build().unwrap()
}

fn sl2(field: FieldSpec) -> LeibnizAlgebra {
    let mut b = TableBuilder::new(field, ["e", "f", "h"]);
    b.product_ints(0, 1, &[(2, 1)]);
    b.product_ints(1, 0, &[(2, -1)]);
    b.product_ints(2, 0, &[(0, 2)]);
    b.product_ints(0, 2, &[(0, -2)]);
    b.product_ints(2, 1, &[(1, -2)]);
    b.product_ints(1, 2, &[(1, 2)]);
    b.build().unwrap()
}

fn cyclic(field: FieldSpec, n: usize) -> LeibnizAlgebra {
    let mut b = TableBuilder::new(field, (1..=n).map(|i| alloc::format!("a{i}")));
    for k in 0..n - 1 {
        b.product_ints(0, k, &[(k + 1, 1)]);
    }
    b.build().unwrap()
}

fn span(alg: &LeibnizAlgebra, vecs: &[&[i64]]) -> Subspace {
    let f = alg.field();
    alg.span(vecs.iter().map(|v| v.iter().map(|&c| f.from_i64(c)).collect()).collect())
        .unwrap()
}

#[test]
fn family_1a_validates_and_multiplies() {
    let l = family_1a(Q, 1);
    assert!(l.validate().is_ok());
    let xy = l.multiply(&l.basis_vector(0), &l.basis_vector(1)).unwrap();
    assert_eq!(xy, l.element_from_ints(&[0, 1, 1]).unwrap());
    let zero = l.zero_vector();
    assert_eq!(l.multiply(&zero, &l.basis_vector(1)).unwrap().coords(), &zero[..]);
}

#[test]
fn abelian_validates() {
    assert!(LeibnizAlgebra::abelian(Q, 4).validate().is_ok());
}

#[test]
fn first_violation_is_reported() {
    let mut b = TableBuilder::new(Q, ["x", "z"]);
    b.product_ints(0, 1, &[(1, 1)]);
    b.product_ints(1, 0, &[(1, 1)]);
    let bad = b.clone().build_unchecked().unwrap();
    let v = bad.validate().unwrap_err();
    // z(xx) = 0 while (zx)x + x(zx) = zx + xz = 2z
    assert_eq!(v.triple, (1, 0, 0));
    assert_eq!(v.lhs, vec![Q.zero(), Q.zero()]);
    assert_eq!(v.rhs, vec![Q.zero(), Q.from_i64(2)]);
    assert!(matches!(b.build(), Err(Error::IdentityViolated(_))));
}

#[test]
fn bad_labels_rejected() {
    let r = LeibnizAlgebra::new_unchecked(Q, vec!["a".into(), "a".into()], vec![Q.zero(); 8]);
    assert!(matches!(r, Err(Error::BadLabels(_))));
    let r = LeibnizAlgebra::new_unchecked(Q, vec!["a".into()], vec![Q.zero(); 2]);
    assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
}

#[test]
fn multiply_checks_shape() {
    let l = family_1a(Q, 1);
    assert!(l.multiply(&[Q.one()], &l.basis_vector(0)).is_err());
    let g5 = FieldSpec::prime(5).unwrap();
    let wrong: Vec<Scalar> = (0..3).map(|_| g5.one()).collect();
    assert_eq!(l.left_mult(&wrong), Err(Error::FieldMismatch));
}

#[test]
fn left_multiplication_is_a_derivation() {
    for l in [family_1a(Q, 2), heisenberg3(Q), sl2(Q), cyclic(Q, 4)] {
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let (x, y) = (l.basis_vector(i), l.basis_vector(j));
                let lxy = l.left_mult(&l.multiply(&x, &y).unwrap()).unwrap();
                let lx = l.left_mult(&x).unwrap();
                let ly = l.left_mult(&y).unwrap();
                assert_eq!(lxy, lx.commutator(&ly).unwrap());
            }
        }
    }
}

#[test]
fn squares() {
    let l = family_1a(Q, 1);
    assert_eq!(l.square(), span(&l, &[&[0, 1, 0], &[0, 0, 1]]));
    assert!(l.product_space(&l.zero_subspace(), &l.whole()).unwrap().is_zero());
    assert!(LeibnizAlgebra::abelian(Q, 3).square().is_zero());
}

#[test]
fn series_examples() {
    let h = heisenberg3(Q).series();
    assert_eq!(h.lower_central_dims(), vec![3, 1, 0]);
    assert!(h.nilpotent && h.solvable);
    assert_eq!(h.nilpotency_class(), Some(2));

    let s = family_1a(Q, 1).series();
    assert!(s.solvable && !s.nilpotent);

    let s = sl2(Q).series();
    assert_eq!(s.derived_dims(), vec![3]);
    assert!(!s.solvable);

    let z = LeibnizAlgebra::zero(Q).series();
    assert!(z.solvable && z.nilpotent);
}

#[test]
fn closures() {
    let c = cyclic(Q, 4);
    assert!(c.subalgebra_closure(&[c.basis_vector(0)]).unwrap().is_full());
    assert!(c.ideal_closure(&[]).unwrap().is_zero());
    let l = family_1a(Q, 1);
    let z = l.basis_vector(2);
    assert_eq!(l.ideal_closure(&[z]).unwrap(), span(&l, &[&[0, 0, 1]]));
    // the ideal generated by y also contains xy - y = z
    assert_eq!(l.ideal_closure(&[l.basis_vector(1)]).unwrap(), l.square());
}

#[test]
fn ideal_and_subalgebra_checks() {
    let l = family_1a(Q, 1);
    assert!(l.is_ideal(&span(&l, &[&[0, 1, 0], &[0, 0, 1]])).unwrap());
    assert!(l.is_ideal(&l.zero_subspace()).unwrap());
    assert!(!l.is_ideal(&span(&l, &[&[1, 0, 0]])).unwrap());
    assert!(l.is_subalgebra(&span(&l, &[&[1, 0, 0]])).unwrap());
    let h = heisenberg3(Q);
    assert!(!h.is_subalgebra(&span(&h, &[&[1, 0, 0], &[0, 1, 0]])).unwrap());
}

#[test]
fn quotients() {
    let l = family_1a(Q, 1);
    let (q, proj) = l.quotient(&l.whole()).unwrap();
    assert_eq!(q.dim(), 0);
    assert!(proj.kept().is_empty());

    let h = heisenberg3(Q);
    let (q, _) = h.quotient(&h.center()).unwrap();
    assert_eq!(q.dim(), 2);
    assert!(q.square().is_zero());

    let l = family_1a(Q, 3);
    let (q, proj) = l.quotient(&span(&l, &[&[0, 0, 1]])).unwrap();
    assert_eq!(q.labels(), ["x", "y"]);
    assert_eq!(q.basis_product(0, 1), &[Q.zero(), Q.from_i64(3)][..]);
    assert!(q.basis_product(1, 0).iter().all(Scalar::is_zero));
    let back = proj.preimage(&q.square()).unwrap();
    assert_eq!(back, l.square());

    assert_eq!(l.quotient(&span(&l, &[&[1, 0, 0]])), Err(Error::NotAnIdeal));
}

#[test]
fn restrictions_and_sums() {
    let l = family_1a(Q, 1);
    assert_eq!(l.restrict(&l.whole()).unwrap(), l);
    assert_eq!(l.restrict(&span(&l, &[&[0, 1, 1]])).unwrap().labels(), ["s1"]);
    assert_eq!(
        l.restrict(&span(&l, &[&[1, 0, 0], &[0, 1, 0]])),
        Err(Error::NotASubalgebra)
    );

    let s = sl2(Q);
    let ss = s.direct_sum(&s).unwrap();
    assert_eq!(ss.dim(), 6);
    assert!(ss.is_perfect());
    assert_eq!(ss.labels()[3], "e'");
    assert_eq!(s.direct_sum(&LeibnizAlgebra::zero(Q)).unwrap(), s);
    let g5 = FieldSpec::prime(5).unwrap();
    assert_eq!(s.direct_sum(&sl2(g5)), Err(Error::FieldMismatch));
}

#[test]
fn direct_sum_series_is_componentwise() {
    let (a, b) = (family_1a(Q, 1), cyclic(Q, 3));
    let sum = a.direct_sum(&b).unwrap();
    let (sa, sb, s) = (a.series(), b.series(), sum.series());
    for k in 0..s.derived.len() {
        let pa = &sa.derived[k.min(sa.derived.len() - 1)];
        let pb = &sb.derived[k.min(sb.derived.len() - 1)];
        let expected = LeibnizAlgebra::embed_summand(pa, &[3, 3], 0)
            .unwrap()
            .sum(&LeibnizAlgebra::embed_summand(pb, &[3, 3], 1).unwrap())
            .unwrap();
        assert_eq!(s.derived[k], expected);
    }
}

#[test]
fn centers_and_cores() {
    let h = heisenberg3(Q);
    assert_eq!(h.center(), span(&h, &[&[0, 0, 1]]));
    assert!(LeibnizAlgebra::abelian(Q, 2).center().is_full());
    let l = family_1a(Q, 1);
    assert_eq!(l.left_center(), l.square());
    assert!(l.center().is_zero());
    assert!(l.core(&span(&l, &[&[1, 0, 0], &[0, 0, 1]])).unwrap() == span(&l, &[&[0, 0, 1]]));
    assert_eq!(l.core(&l.square()).unwrap(), l.square());
}

#[test]
fn right_leibniz_transpose_round_trips() {
    let l = family_1a(Q, 1);
    let t = LeibnizAlgebra::transposed_table(Q, 3, l.table());
    assert_eq!(LeibnizAlgebra::transposed_table(Q, 3, &t), l.table());
}

#[test]
fn reduction_mod_p() {
    let l = family_1a(Q, 1);
    let g3 = FieldSpec::prime(3).unwrap();
    let r = l.to_field(g3).unwrap();
    assert_eq!(r.field(), g3);
    assert!(l.has_integer_constants());
}

#[test]
fn describe_signs() {
    let alg = family_1a(Q, 1);
    let v = |c: &[i64]| c.iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>();
    assert_eq!(alg.describe(&v(&[1, -2, 0])), "x - 2*y");
    assert_eq!(alg.describe(&v(&[-1, 0, 3])), "-x + 3*z");
    assert_eq!(alg.describe(&v(&[0, 0, -1])), "-z");
    assert_eq!(alg.describe(&v(&[0, 0, 0])), "0");
    let half = Q.parse_scalar("-1/2").unwrap();
    assert_eq!(alg.describe(&[Q.zero(), half, Q.one()]), "-1/2*y + z");
}

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{LeibnizAlgebra, TableBuilder};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Subspace;

/// A named family of algebras with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `xz = cz`, `xy = cy + z`; not antisymmetric.
    Family1a { c: BigRational },
    /// The Lie version: `xz = cz`, `xy = cy + z`, `zx = -cz`, `yx = -cy - z`.
    Family1b { c: BigRational },
    /// Dimension `2m + 1`, `x_i y_i = z = -y_i x_i`.
    Heisenberg { m: usize },
    /// Basis `a, a², ..., aⁿ` with `a·aⁱ = aⁱ⁺¹` and `a·aⁿ = 0`.
    CyclicNilpotent { n: usize },
    /// Basis `a, b, x, y`: `ax = αx, ay = αy, bx = βx, by = βy, xa = -αx,
    /// xb = y - βx`.
    Family4 { alpha: BigRational, beta: BigRational },
    /// `k` copies of `sl₂`.
    Sl2Sum { k: usize },
    /// `sl₂` acting on its natural 2-dimensional module, an abelian ideal.
    NilPlusSimple,
    /// Basis `x, n`: `xx = n`, `xn = n`.
    SquareNonzero,
    /// The 2-dimensional non-abelian Lie algebra, `xn = n = -nx`.
    SquareZero,
    /// `sl₂ ⊕ ⟨x, n⟩` with the `SquareNonzero` table on `⟨x, n⟩`.
    EAlgebraWitness,
}

/// Levi data declared alongside a catalog algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    pub radical: Subspace,
    pub levi: Subspace,
    pub simple_components: Vec<Subspace>,
}

/// A built algebra with the data its constructor knows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogInstance {
    pub spec: FamilySpec,
    pub algebra: LeibnizAlgebra,
    pub levi: LeviData,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FamilySpec {
    /// Stable command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Family1a { .. } => "family1a",
            FamilySpec::Family1b { .. } => "family1b",
            FamilySpec::Heisenberg { .. } => "heisenberg",
            FamilySpec::CyclicNilpotent { .. } => "cyclic",
            FamilySpec::Family4 { .. } => "family4",
            FamilySpec::Sl2Sum { .. } => "sl2-sum",
            FamilySpec::NilPlusSimple => "nil-plus-simple",
            FamilySpec::SquareNonzero => "square-nonzero",
            FamilySpec::SquareZero => "square-zero",
            FamilySpec::EAlgebraWitness => "e-algebra-witness",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FamilySpec::Family1a { .. } | FamilySpec::Family1b { .. } => 3,
            FamilySpec::Heisenberg { m } => 2 * m + 1,
            FamilySpec::CyclicNilpotent { n } => *n,
            FamilySpec::Family4 { .. } => 4,
            FamilySpec::Sl2Sum { k } => 3 * k,
            FamilySpec::NilPlusSimple | FamilySpec::EAlgebraWitness => 5,
            FamilySpec::SquareNonzero | FamilySpec::SquareZero => 2,
        }
    }

    /// Whether the family is solvable (in every characteristic it builds in).
    pub fn is_solvable(&self) -> bool {
        !matches!(
            self,
            FamilySpec::Sl2Sum { .. } | FamilySpec::NilPlusSimple | FamilySpec::EAlgebraWitness
        )
    }

    /// Whether every structure constant is an integer.
    pub fn has_integer_constants(&self) -> bool {
        match self {
            FamilySpec::Family1a { c } | FamilySpec::Family1b { c } => c.is_integer(),
            FamilySpec::Family4 { alpha, beta } => alpha.is_integer() && beta.is_integer(),
            _ => true,
        }
    }

    /// Builds the algebra over `field`; the result is validated.
    pub fn build(&self, field: FieldSpec) -> Result<LeibnizAlgebra, Error> {
        Ok(self.instance(field)?.algebra)
    }

    pub fn instance(&self, field: FieldSpec) -> Result<CatalogInstance, Error> {
        let nonzero = |name: &str, q: &BigRational| -> Result<Scalar, Error> {
            let s = field.from_rational(q)?;
            if s.is_zero() {
                return Err(Error::BadParams(format!("{name} must be nonzero in {field}")));
            }
            Ok(s)
        };
        let needs_odd = |what: &str| -> Result<(), Error> {
            if field.characteristic() == 2 {
                return Err(Error::CharacteristicClash(format!(
                    "{what} needs characteristic other than 2"
                )));
            }
            Ok(())
        };
        let one = field.one();
        let neg = |s: &Scalar| -s.clone();

        let (algebra, levi) = match self {
            FamilySpec::Family1a { c } | FamilySpec::Family1b { c } => {
                let c = nonzero("c", c)?;
                let mut b = TableBuilder::new(field, ["x", "y", "z"]);
                b.product(0, 2, &[(2, c.clone())]);
                b.product(0, 1, &[(1, c.clone()), (2, one.clone())]);
                if matches!(self, FamilySpec::Family1b { .. }) {
                    b.product(2, 0, &[(2, neg(&c))]);
                    b.product(1, 0, &[(1, neg(&c)), (2, neg(&one))]);
                }
                (b.build()?, None)
            }
            FamilySpec::Heisenberg { m } => {
                let m = *m;
                if m == 0 {
                    return Err(Error::BadParams("Heisenberg needs m >= 1".into()));
                }
                let labels: Vec<String> = if m == 1 {
                    vec!["x".into(), "y".into(), "z".into()]
                } else {
                    (1..=m)
                        .map(|i| format!("x{i}"))
                        .chain((1..=m).map(|i| format!("y{i}")))
                        .chain(["z".into()])
                        .collect()
                };
                let mut b = TableBuilder::new(field, labels);
                for i in 0..m {
                    b.product(i, m + i, &[(2 * m, one.clone())]);
                    b.product(m + i, i, &[(2 * m, neg(&one))]);
                }
                (b.build()?, None)
            }
            FamilySpec::CyclicNilpotent { n } => {
                let n = *n;
                if n < 2 {
                    return Err(Error::BadParams("cyclic nilpotent needs n >= 2".into()));
                }
                let labels = (1..=n).map(|i| if i == 1 { "a".into() } else { format!("a{i}") });
                let mut b = TableBuilder::new(field, labels);
                for k in 0..n - 1 {
                    b.product(0, k, &[(k + 1, one.clone())]);
                }
                (b.build()?, None)
            }
            FamilySpec::Family4 { alpha, beta } => {
                let a = nonzero("alpha", alpha)?;
                let bt = nonzero("beta", beta)?;
                // basis a, b, x, y
                let mut b = TableBuilder::new(field, ["a", "b", "x", "y"]);
                b.product(0, 2, &[(2, a.clone())]);
                b.product(0, 3, &[(3, a.clone())]);
                b.product(1, 2, &[(2, bt.clone())]);
                b.product(1, 3, &[(3, bt.clone())]);
                b.product(2, 0, &[(2, neg(&a))]);
                b.product(2, 1, &[(3, one.clone()), (2, neg(&bt))]);
                (b.build()?, None)
            }
            FamilySpec::Sl2Sum { k } => {
                let k = *k;
                if k == 0 {
                    return Err(Error::BadParams("sl2 sum needs k >= 1".into()));
                }
                needs_odd("sl2")?;
                let mut alg = LeibnizAlgebra::zero(field);
                for i in 1..=k {
                    let names = if k == 1 {
                        ["e".into(), "f".into(), "h".into()]
                    } else {
                        [format!("e{i}"), format!("f{i}"), format!("h{i}")]
                    };
                    alg = alg.direct_sum(&sl2(field, names)?)?;
                }
                let comps = (0..k)
                    .map(|i| {
                        let rows = (0..3).map(|j| unit(field, 3 * k, 3 * i + j)).collect();
                        Subspace::from_vectors(field, 3 * k, rows)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let levi = LeviData {
                    radical: alg.zero_subspace(),
                    levi: alg.whole(),
                    simple_components: comps,
                };
                (alg, Some(levi))
            }
            FamilySpec::NilPlusSimple => {
                needs_odd("sl2")?;
                let base = sl2(field, ["e".into(), "f".into(), "h".into()])?;
                let mut b = TableBuilder::new(field, ["e", "f", "h", "v1", "v2"]);
                for i in 0..3 {
                    for j in 0..3 {
                        let terms: Vec<_> = base
                            .basis_product(i, j)
                            .iter()
                            .cloned()
                            .enumerate()
                            .collect();
                        b.product(i, j, &terms);
                    }
                }
                // e·v2 = v1, f·v1 = v2, h·v1 = v1, h·v2 = -v2; v·s = -s·v
                for (s, v, w, c) in [(0, 4, 3, 1), (1, 3, 4, 1), (2, 3, 3, 1), (2, 4, 4, -1)] {
                    b.product(s, v, &[(w, field.from_i64(c))]);
                    b.product(v, s, &[(w, field.from_i64(-c))]);
                }
                let alg = b.build()?;
                let levi_space = span_units(field, 5, &[0, 1, 2])?;
                let levi = LeviData {
                    radical: span_units(field, 5, &[3, 4])?,
                    levi: levi_space.clone(),
                    simple_components: vec![levi_space],
                };
                (alg, Some(levi))
            }
            FamilySpec::SquareNonzero => (square_nonzero(field)?, None),
            FamilySpec::SquareZero => {
                let mut b = TableBuilder::new(field, ["x", "n"]);
                b.product(0, 1, &[(1, one.clone())]);
                b.product(1, 0, &[(1, neg(&one))]);
                (b.build()?, None)
            }
            FamilySpec::EAlgebraWitness => {
                needs_odd("sl2")?;
                let alg = sl2(field, ["e".into(), "f".into(), "h".into()])?
                    .direct_sum(&square_nonzero(field)?)?;
                let levi_space = span_units(field, 5, &[0, 1, 2])?;
                let levi = LeviData {
                    radical: span_units(field, 5, &[3, 4])?,
                    levi: levi_space.clone(),
                    simple_components: vec![levi_space],
                };
                (alg, Some(levi))
            }
        };
        let levi = levi.unwrap_or_else(|| LeviData {
            radical: algebra.whole(),
            levi: algebra.zero_subspace(),
            simple_components: Vec::new(),
        });
        Ok(CatalogInstance {
            spec: self.clone(),
            algebra,
            levi,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            FamilySpec::Family1a { c } | FamilySpec::Family1b { c } => write!(f, "(c={c})"),
            FamilySpec::Heisenberg { m } => write!(f, "(m={m})"),
            FamilySpec::CyclicNilpotent { n } => write!(f, "(n={n})"),
            FamilySpec::Family4 { alpha, beta } => write!(f, "(alpha={alpha},beta={beta})"),
            FamilySpec::Sl2Sum { k } => write!(f, "(k={k})"),
            _ => Ok(()),
        }
    }
}

fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn span_units(field: FieldSpec, n: usize, idx: &[usize]) -> Result<Subspace, Error> {
    Subspace::from_vectors(field, n, idx.iter().map(|&i| unit(field, n, i)).collect())
}

fn sl2(field: FieldSpec, labels: [String; 3]) -> Result<LeibnizAlgebra, Error> {
    let mut b = TableBuilder::new(field, labels);
    b.product_ints(0, 1, &[(2, 1)]);
    b.product_ints(1, 0, &[(2, -1)]);
    b.product_ints(2, 0, &[(0, 2)]);
    b.product_ints(0, 2, &[(0, -2)]);
    b.product_ints(2, 1, &[(1, -2)]);
    b.product_ints(1, 2, &[(1, 2)]);
    b.build()
}

fn square_nonzero(field: FieldSpec) -> Result<LeibnizAlgebra, Error> {
    let mut b = TableBuilder::new(field, ["x", "n"]);
    b.product_ints(0, 0, &[(1, 1)]);
    b.product_ints(0, 1, &[(1, 1)]);
    b.build()
}

/// Parameter grid covering every family: `c ∈ {1, 2, -1, 1/2}`,
/// `m ∈ {1, 2}`, `n ∈ 2..=6`, `(α, β) ∈ {1, 2}²`, `k ∈ {1, 2}`, and the
/// parameter-free witnesses.
pub fn catalog_grid() -> Vec<FamilySpec> {
    let cs = [int(1), int(2), int(-1), BigRational::new(BigInt::from(1), BigInt::from(2))];
    let mut out = Vec::new();
    for c in &cs {
        out.push(FamilySpec::Family1a { c: c.clone() });
    }
    for c in &cs {
        out.push(FamilySpec::Family1b { c: c.clone() });
    }
    out.extend((1..=2).map(|m| FamilySpec::Heisenberg { m }));
    out.extend((2..=6).map(|n| FamilySpec::CyclicNilpotent { n }));
    for a in 1..=2 {
        for b in 1..=2 {
            out.push(FamilySpec::Family4 {
                alpha: int(a),
                beta: int(b),
            });
        }
    }
    out.extend((1..=2).map(|k| FamilySpec::Sl2Sum { k }));
    out.extend([
        FamilySpec::NilPlusSimple,
        FamilySpec::SquareNonzero,
        FamilySpec::SquareZero,
        FamilySpec::EAlgebraWitness,
    ]);
    out
}

/// Convenience constructor for integer parameters.
pub fn rational(n: i64) -> BigRational {
    int(n)
}

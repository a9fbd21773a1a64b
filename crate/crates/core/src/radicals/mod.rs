//! Structural ideals: the Leibniz kernel, solvable radical, nilradical,
//! Asoc, Jacobson radical and Frattini ideal.
//!
//! The characteristic-0 engines work over `Q` by exact linear algebra; over
//! `GF(p)` the ideal-valued invariants fall back to the lattice engine.

mod claims;
mod frattini;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{stacked_kernel, LeibnizAlgebra};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::lattice::{self, LatticeBudget};
use crate::linalg::{rational_eigenvalues, simultaneous_weight_spaces, Matrix, Subspace};

pub use claims::verify_jacobson_claims;
pub use frattini::{complement_subalgebra, frattini_char0, phi_free, FrattiniEstimate};

/// Which engine produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Characteristic-0 characterizations over `Q`.
    Char0,
    /// Exhaustive lattice enumeration over `GF(p)`.
    BruteForce,
    /// Read off the definition directly (any field).
    Definitional,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Char0 => "char0",
            Engine::BruteForce => "brute",
            Engine::Definitional => "definitional",
        }
    }
}

/// The ideals computed by [`radical_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub leib: Subspace,
    pub rad: Subspace,
    pub nil: Subspace,
    pub asoc: Subspace,
    pub jac: Subspace,
    pub engine: Engine,
    pub caveats: Vec<String>,
}

pub(crate) fn require_char0(alg: &LeibnizAlgebra, operation: &'static str) -> Result<(), Error> {
    if alg.field().is_char_zero() {
        Ok(())
    } else {
        Err(Error::WrongCharacteristic { operation })
    }
}

fn basis_ops(alg: &LeibnizAlgebra, left: bool) -> Vec<Matrix> {
    (0..alg.dim())
        .map(|i| {
            let e = alg.basis_vector(i);
            if left {
                alg.left_mult(&e)
            } else {
                alg.right_mult(&e)
            }
            .expect("basis vector")
        })
        .collect()
}

/// `Leib(L)`, spanned by all squares: `bᵢbᵢ` and `bᵢbⱼ + bⱼbᵢ`.
pub fn leib_kernel(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s: Vec<Scalar> = alg
                .basis_product(i, j)
                .iter()
                .zip(alg.basis_product(j, i))
                .map(|(a, b)| if i == j { a.clone() } else { a + b })
                .collect();
            rows.push(s);
        }
    }
    let leib = alg.span(rows).expect("vectors of the algebra");
    debug_assert!(alg.is_ideal(&leib).unwrap());
    leib
}

/// Gram matrix of `κ(x, y) = tr(L_x L_y)` in the algebra's basis.
pub fn killing_form(alg: &LeibnizAlgebra) -> Matrix {
    let ops = basis_ops(alg, true);
    let n = alg.dim();
    Matrix::from_fn(alg.field(), n, n, |i, j| {
        ops[i].mul(&ops[j]).expect("square").trace().expect("square")
    })
}

/// Solvable radical in characteristic 0: the preimage of the
/// Killing-orthogonal of `[L̄, L̄]` in the Lie algebra `L̄ = L/Leib(L)`.
pub fn radical(alg: &LeibnizAlgebra) -> Result<Subspace, Error> {
    require_char0(alg, "radical")?;
    let leib = leib_kernel(alg);
    let (lie, proj) = alg.quotient(&leib)?;
    if !lie.is_antisymmetric() {
        return Err(Error::Inconsistent("quotient by Leib is not antisymmetric".into()));
    }
    let gram = killing_form(&lie);
    let derived = lie.square();
    let conditions: Vec<Vec<Scalar>> = derived.vectors().map(|d| gram.apply(d)).collect();
    let rad_bar = if conditions.is_empty() {
        lie.whole()
    } else {
        Matrix::from_rows(lie.field(), lie.dim(), conditions)?.kernel()
    };
    let rad = proj.preimage(&rad_bar)?;
    if !alg.is_ideal(&rad)? || !alg.is_solvable_subalgebra(&rad)? {
        return Err(Error::Inconsistent("Killing radical is not a solvable ideal".into()));
    }
    Ok(rad)
}

/// A complete flag `0 = V₀ ⊂ V₁ ⊂ ... ⊂ Vₙ = L` of subspaces invariant under
/// every `L_x`, with the scalar by which `L_{bᵢ}` acts on `Vₖ/Vₖ₋₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFlag {
    pub flag: Vec<Subspace>,
    /// `weights[k][i]` is the eigenvalue of `L_{bᵢ}` on `V_{k+1}/V_k`.
    pub weights: Vec<Vec<Scalar>>,
}

/// Builds a [`WeightFlag`] by repeatedly extracting a common eigenvector of
/// the induced left multiplications on `L/V`. Such a vector lies in the
/// common kernel of their commutators, where the operators commute.
pub fn weight_flag(alg: &LeibnizAlgebra) -> Result<WeightFlag, Error> {
    let n = alg.dim();
    let field = alg.field();
    let ops = basis_ops(alg, true);
    let mut v = alg.zero_subspace();
    let mut flag = vec![v.clone()];
    let mut weights = Vec::new();
    while v.dim() < n {
        let kept = v.non_pivots();
        let m = kept.len();
        let induced: Vec<Matrix> = ops
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = kept
                    .iter()
                    .map(|&c| {
                        let img = v.reduce(&a.column(c));
                        kept.iter().map(|&k| img[k].clone()).collect()
                    })
                    .collect();
                Matrix::from_columns(field, m, &cols).expect("square")
            })
            .collect();
        let mut comms = Vec::new();
        for i in 0..induced.len() {
            for j in i + 1..induced.len() {
                comms.push(induced[i].commutator(&induced[j])?);
            }
        }
        let k0 = stacked_kernel(field, m, &comms);
        let non_split = |operator: Matrix| Error::NonSplit {
            context: alloc::format!("left multiplications on a {m}-dimensional quotient"),
            operator: Box::new(operator),
        };
        if k0.is_zero() {
            return Err(non_split(induced[0].clone()));
        }
        let restricted = induced
            .iter()
            .map(|a| k0.restrict_operator(a))
            .collect::<Result<Vec<_>, _>>()?;
        let decomposition = simultaneous_weight_spaces(&restricted)?;
        let Some(weight) = decomposition.weights.first() else {
            let culprit = restricted
                .iter()
                .find(|a| rational_eigenvalues(a).map(|s| !s.split).unwrap_or(true))
                .unwrap_or(&restricted[0]);
            return Err(non_split(culprit.clone()));
        };
        let local = weight.eigenspace.vectors().next().expect("nonzero eigenspace");
        let in_quotient = k0.embed(local);
        let mut lift = vec![field.zero(); n];
        for (c, &k) in in_quotient.iter().zip(&kept) {
            lift[k] = c.clone();
        }
        v = v.sum(&alg.span(vec![lift])?)?;
        flag.push(v.clone());
        weights.push(weight.values.clone());
    }
    Ok(WeightFlag { flag, weights })
}

/// `Nil(L)` for solvable `L` over `Q`: the common kernel of the flag's
/// weight functionals, i.e. all `x` with `L_x` nilpotent.
pub fn nilradical_solvable(alg: &LeibnizAlgebra) -> Result<Subspace, Error> {
    require_char0(alg, "nilradical")?;
    if !alg.is_solvable() {
        return Err(Error::HypothesisViolated("algebra is not solvable".into()));
    }
    let n = alg.dim();
    let wf = weight_flag(alg)?;
    let nil = if wf.weights.is_empty() {
        alg.whole()
    } else {
        Matrix::from_rows(alg.field(), n, wf.weights)?.kernel()
    };
    if !alg.is_ideal(&nil)? || !alg.is_nilpotent_subalgebra(&nil)? || !nil.contains(&alg.square()) {
        return Err(Error::Inconsistent("flag nilradical failed its post-conditions".into()));
    }
    Ok(nil)
}

/// `Nil(L)`. Over `Q` the flag engine runs on the solvable radical (any
/// nilpotent ideal of `L` lies in it); over `GF(p)` the lattice engine is used
/// with the default budget.
pub fn nilradical(alg: &LeibnizAlgebra) -> Result<Subspace, Error> {
    if !alg.field().is_char_zero() {
        return lattice::nilradical_bruteforce(alg, &LatticeBudget::default());
    }
    if alg.is_solvable() {
        return nilradical_solvable(alg);
    }
    let rad = radical(alg)?;
    if rad.is_zero() {
        return Ok(rad);
    }
    let r = alg.restrict(&rad)?;
    let inner = nilradical_solvable(&r)?;
    let nil = alg.span(inner.vectors().map(|c| rad.embed(c)).collect())?;
    if !alg.is_ideal(&nil)? {
        return Err(Error::Inconsistent("Nil(Rad L) is not an ideal of L".into()));
    }
    Ok(nil)
}

/// Joint eigenspaces of all `L_{bᵢ}` and `R_{bᵢ}` for ground-field weights.
/// Every nonzero vector of each returned subspace spans a one-dimensional
/// ideal, and every one-dimensional ideal lies in one of them.
pub fn ideal_lines(alg: &LeibnizAlgebra) -> Result<Vec<Subspace>, Error> {
    let mut ops = basis_ops(alg, true);
    ops.extend(basis_ops(alg, false));
    let mut spaces = vec![alg.whole()];
    for op in &ops {
        let spectrum = rational_eigenvalues(op)?;
        let mut next = Vec::new();
        for w in &spaces {
            for pair in &spectrum.eigenpairs {
                let meet = w.intersect(&pair.eigenspace)?;
                if !meet.is_zero() {
                    next.push(meet);
                }
            }
        }
        spaces = next;
    }
    spaces.retain(|s| !s.is_zero());
    spaces.sort();
    spaces.dedup();
    Ok(spaces)
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.row_vectors().flat_map(|r| r.iter().cloned()).collect()
}

fn unflatten(field: FieldSpec, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(field, n, n, |r, c| v[r * n + c].clone())
}

/// Basis of the unital associative algebra generated by `gens`.
fn envelope(field: FieldSpec, n: usize, gens: &[Matrix]) -> Result<Vec<Matrix>, Error> {
    let mut rows = vec![flatten(&Matrix::identity(field, n))];
    rows.extend(gens.iter().map(flatten));
    let mut span = Subspace::from_vectors(field, n * n, rows)?;
    loop {
        let mut rows: Vec<Vec<Scalar>> = span.vectors().map(<[Scalar]>::to_vec).collect();
        for b in span.vectors() {
            let bm = unflatten(field, n, b);
            for g in gens {
                rows.push(flatten(&g.mul(&bm)?));
            }
        }
        let next = Subspace::from_vectors(field, n * n, rows)?;
        if next == span {
            break;
        }
        span = next;
    }
    Ok(span.vectors().map(|v| unflatten(field, n, v)).collect())
}

/// Sum of all minimal ideals in characteristic 0: the annihilator of the
/// radical of the multiplication algebra, whose radical is the null space
/// of its trace form.
pub fn socle(alg: &LeibnizAlgebra) -> Result<Subspace, Error> {
    require_char0(alg, "socle")?;
    let n = alg.dim();
    let field = alg.field();
    let mut gens = basis_ops(alg, true);
    gens.extend(basis_ops(alg, false));
    let env = envelope(field, n, &gens)?;
    let gram = Matrix::from_fn(field, env.len(), env.len(), |i, j| {
        env[i].mul(&env[j]).expect("square").trace().expect("square")
    });
    let radical: Vec<Matrix> = gram
        .kernel()
        .vectors()
        .map(|t| {
            t.iter()
                .zip(&env)
                .filter(|(c, _)| !c.is_zero())
                .fold(Matrix::zeros(field, n, n), |acc, (c, a)| {
                    acc.add(&a.scale(c)).expect("same shape")
                })
        })
        .collect();
    Ok(stacked_kernel(field, n, &radical))
}

/// `Asoc(L)`, the sum of the minimal abelian ideals. Over `Q` this is the
/// socle intersected with the solvable radical; over `GF(p)` it is read off
/// the ideal lattice.
pub fn asoc(alg: &LeibnizAlgebra) -> Result<Subspace, Error> {
    if !alg.field().is_char_zero() {
        return Ok(lattice::ideal_lattice(alg, &LatticeBudget::default())?.asoc);
    }
    let asoc = socle(alg)?.intersect(&radical(alg)?)?;
    if !alg.product_space(&asoc, &asoc)?.is_zero() {
        return Err(Error::Inconsistent("Asoc is not abelian".into()));
    }
    Ok(asoc)
}

/// `J(L)` in characteristic 0: `L²` when `L` is solvable, otherwise
/// `LR + RL` with `R` the radical.
pub fn jacobson_char0(alg: &LeibnizAlgebra, rad: &Subspace) -> Result<Subspace, Error> {
    require_char0(alg, "Jacobson radical")?;
    if !alg.is_ideal(rad)? {
        return Err(Error::NotAnIdeal);
    }
    let whole = alg.whole();
    let jac = if rad.is_full() {
        alg.square()
    } else {
        alg.product_space(&whole, rad)?.sum(&alg.product_space(rad, &whole)?)?
    };
    if !alg.square().contains(&jac) || !alg.is_nilpotent_subalgebra(&jac)? {
        return Err(Error::Inconsistent("J(L) failed its post-conditions".into()));
    }
    Ok(jac)
}

/// `J(L)` from the shape of maximal ideals in characteristic 0: those with
/// abelian quotient are the hyperplanes over `L²`, the others contain `R` and
/// cut out the simple factors of `L/R`. Hence `J = L²` for solvable `L` and
/// `J = L² ∩ R` otherwise.
pub fn jacobson_by_quotients(alg: &LeibnizAlgebra, rad: &Subspace) -> Result<Subspace, Error> {
    require_char0(alg, "Jacobson radical")?;
    let square = alg.square();
    if rad.is_full() {
        Ok(square)
    } else {
        square.intersect(rad)
    }
}

/// Leib, Rad, Nil, Asoc and J with the engine that produced them.
pub fn radical_report(alg: &LeibnizAlgebra) -> Result<RadicalReport, Error> {
    radical_report_with_budget(alg, &LatticeBudget::default())
}

pub fn radical_report_with_budget(
    alg: &LeibnizAlgebra,
    budget: &LatticeBudget,
) -> Result<RadicalReport, Error> {
    let leib = leib_kernel(alg);
    let report = if alg.field().is_char_zero() {
        let rad = radical(alg)?;
        let nil = nilradical(alg)?;
        let asoc = asoc(alg)?;
        let jac = jacobson_char0(alg, &rad)?;
        RadicalReport {
            leib,
            rad,
            nil,
            asoc,
            jac,
            engine: Engine::Char0,
            caveats: Vec::new(),
        }
    } else {
        let ideals = lattice::ideal_lattice(alg, budget)?;
        let mut caveats = Vec::new();
        if alg.dim() == 0 {
            caveats.push("zero algebra: J taken as the empty intersection, which is L = 0".into());
        }
        RadicalReport {
            leib,
            rad: ideals.rad,
            nil: ideals.nil,
            asoc: ideals.asoc,
            jac: ideals.jacobson,
            engine: Engine::BruteForce,
            caveats,
        }
    };
    let ok = report.rad.contains(&report.nil)
        && report.nil.contains(&report.asoc)
        && alg.square().contains(&report.jac)
        && [&report.leib, &report.rad, &report.nil, &report.asoc, &report.jac]
            .iter()
            .all(|s| alg.is_ideal(s).unwrap_or(false));
    if !ok {
        return Err(Error::Inconsistent("radical report violates its invariants".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests;

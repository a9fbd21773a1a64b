use clap::ValueEnum;
use serde_json::{json, Value};

use leibniz::classify::verify_e_algebra;
use leibniz::lattice::{self, LatticeBudget, LatticeReport};
use leibniz::radicals::{asoc, frattini_char0, jacobson_char0, leib_kernel, nilradical, radical};
use leibniz::{Error, LeibnizAlgebra, Subspace};

use crate::format::vector_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    /// `char0` over Q, `brute` over GF(p).
    Auto,
    /// Characterizations valid in characteristic 0.
    Char0,
    /// Exhaustive subalgebra lattice over GF(p).
    Brute,
}

const DEFINITIONAL: &str = "definitional";

fn span(alg: &LeibnizAlgebra, s: &Subspace) -> String {
    let terms: Vec<String> = s.vectors().map(|v| alg.describe(v)).collect();
    format!("<{}>", terms.join(", "))
}

/// A subspace with the engine and argument that produced it.
pub fn subspace_json(alg: &LeibnizAlgebra, s: &Subspace, engine: &str, via: &str) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.vectors().map(vector_json).collect::<Vec<_>>(),
        "span": span(alg, s),
        "engine": engine,
        "via": via,
    })
}

fn flag(value: Option<bool>, engine: &str, via: &str) -> Value {
    json!({ "value": value, "engine": engine, "via": via })
}

fn header(alg: &LeibnizAlgebra) -> Value {
    json!({
        "field": alg.field().to_string(),
        "dim": alg.dim(),
        "basis": alg.labels(),
    })
}

/// The full structure report. The identity must already hold.
pub fn structure_report(alg: &LeibnizAlgebra, choice: EngineChoice, budget: &LatticeBudget) -> Result<Value, Error> {
    alg.validate().map_err(|v| Error::IdentityViolated(Box::new(v)))?;
    let char0 = alg.field().is_char_zero();
    let use_char0 = match choice {
        EngineChoice::Auto => char0,
        EngineChoice::Char0 if !char0 => return Err(Error::WrongCharacteristic { operation: "the char0 engine" }),
        EngineChoice::Brute if char0 => return Err(Error::NeedsPrimeField { operation: "the brute engine" }),
        EngineChoice::Char0 => true,
        EngineChoice::Brute => false,
    };

    let series = alg.series();
    let mut caveats = Vec::new();
    if alg.dim() == 0 {
        caveats.push("zero algebra: F and J are empty intersections, taken as L = 0".to_string());
    }
    let mut predicates = serde_json::Map::new();
    for (name, value) in [
        ("solvable", series.solvable),
        ("nilpotent", series.nilpotent),
        ("perfect", alg.is_perfect()),
        ("lie", alg.is_antisymmetric()),
    ] {
        predicates.insert(name.into(), flag(Some(value), DEFINITIONAL, "series and table"));
    }
    let mut inv = serde_json::Map::new();
    inv.insert("square".into(), subspace_json(alg, &alg.square(), DEFINITIONAL, "span of all products"));
    inv.insert("center".into(), subspace_json(alg, &alg.center(), DEFINITIONAL, "left and right annihilator"));
    inv.insert("left_center".into(), subspace_json(alg, &alg.left_center(), DEFINITIONAL, "left annihilator"));
    inv.insert("leib".into(), subspace_json(alg, &leib_kernel(alg), DEFINITIONAL, "span of squares"));

    let engine = if use_char0 {
        char0_part(alg, &series, &mut predicates, &mut inv, &mut caveats, budget)?;
        "char0"
    } else {
        let r = lattice::classify_lattice(alg, budget)?;
        brute_part(alg, &r, &mut predicates, &mut inv);
        "brute"
    };
    Ok(json!({
        "algebra": header(alg),
        "engine": engine,
        "series": {
            "derived": series.derived_dims(),
            "lower_central": series.lower_central_dims(),
            "engine": DEFINITIONAL,
        },
        "predicates": predicates,
        "invariants": inv,
        "caveats": caveats,
    }))
}

fn char0_part(
    alg: &LeibnizAlgebra,
    series: &leibniz::SeriesReport,
    predicates: &mut serde_json::Map<String, Value>,
    inv: &mut serde_json::Map<String, Value>,
    caveats: &mut Vec<String>,
    budget: &LatticeBudget,
) -> Result<(), Error> {
    const E: &str = "char0";
    let rad = radical(alg)?;
    inv.insert("rad".into(), subspace_json(alg, &rad, E, "Killing form of L/Leib(L)"));
    let nil = nilradical(alg)?;
    inv.insert("nil".into(), subspace_json(alg, &nil, E, "weight flag of the radical"));
    inv.insert("asoc".into(), subspace_json(alg, &asoc(alg)?, E, "socle meets radical"));
    let jac = jacobson_char0(alg, &rad)?;
    let jac_via = if rad.is_full() {
        "solvable: maximal ideals are the hyperplanes over L², so J = L²"
    } else {
        "LR + RL with R the radical"
    };
    inv.insert("jacobson".into(), subspace_json(alg, &jac, E, jac_via));

    let phi = frattini_char0(alg)?;
    match &phi.exact {
        Some(p) => {
            inv.insert("phi".into(), subspace_json(alg, p, E, phi.method));
        }
        None => {
            let mut v = subspace_json(alg, &phi.upper, E, phi.method);
            v["dim"] = Value::Null;
            v["bound"] = json!("upper");
            v["nonzero"] = json!(phi.nonzero);
            inv.insert("phi".into(), v);
            caveats.push("Φ(L) is bounded above, not determined".into());
        }
    }
    if series.nilpotent {
        let sq = alg.square();
        inv.insert(
            "frattini_subalgebra".into(),
            subspace_json(alg, &sq, E, "nilpotent: maximal subalgebras are the hyperplanes over L²"),
        );
    } else {
        inv.insert("frattini_subalgebra".into(), json!({ "dim": null, "engine": E, "via": "not computed over Q" }));
        caveats.push("F(L) needs the subalgebra lattice; not computed over Q".into());
    }

    let abelian = alg.square().is_zero();
    let elementary = match (series.nilpotent, phi.nonzero) {
        _ if abelian => Some(true),
        (true, _) => Some(false),
        (_, Some(true)) => Some(false),
        _ => None,
    };
    predicates.insert("elementary".into(), flag(elementary, E, "Φ of L, or L nilpotent"));
    if elementary.is_none() {
        caveats.push("elementary needs Φ of every subalgebra; undecided over Q".into());
    }
    let e = match verify_e_algebra(alg, None, budget) {
        Ok(v) => flag(Some(v.e_algebra), E, v.method),
        Err(Error::Undecidable(why)) => {
            caveats.push(format!("E-algebra undecided: {why}"));
            flag(None, E, "needs Levi data")
        }
        Err(e) => return Err(e),
    };
    predicates.insert("e_algebra".into(), e);
    Ok(())
}

fn brute_part(
    alg: &LeibnizAlgebra,
    r: &LatticeReport,
    predicates: &mut serde_json::Map<String, Value>,
    inv: &mut serde_json::Map<String, Value>,
) {
    const E: &str = "brute";
    for (name, s, via) in [
        ("rad", &r.rad, "largest solvable ideal"),
        ("nil", &r.nil, "largest nilpotent ideal"),
        ("asoc", &r.asoc, "sum of abelian minimal ideals"),
        ("jacobson", &r.jacobson, "intersection of maximal ideals"),
        ("phi", &r.phi, "largest ideal inside F(L)"),
        ("frattini_subalgebra", &r.frattini_subalgebra, "intersection of maximal subalgebras"),
    ] {
        inv.insert(name.into(), subspace_json(alg, s, E, via));
    }
    for (name, value) in [
        ("elementary", r.elementary),
        ("minimal_non_elementary", r.minimal_non_elementary),
        ("e_algebra", r.e_algebra),
    ] {
        predicates.insert(name.into(), flag(Some(value), E, "subalgebra lattice"));
    }
}

/// The raw subalgebra lattice.
pub fn lattice_dump(alg: &LeibnizAlgebra, budget: &LatticeBudget) -> Result<Value, Error> {
    alg.validate().map_err(|v| Error::IdentityViolated(Box::new(v)))?;
    let r = lattice::classify_lattice(alg, budget)?;
    let plain = |s: &Subspace| json!({ "dim": s.dim(), "basis": s.vectors().map(vector_json).collect::<Vec<_>>(), "span": span(alg, s) });
    let list = |v: &[Subspace]| v.iter().map(plain).collect::<Vec<_>>();
    let subalgebras: Vec<Value> = r
        .subalgebras
        .iter()
        .zip(&r.subalgebra_phis)
        .map(|(b, phi)| {
            let mut v = plain(b);
            v["phi"] = plain(phi);
            v
        })
        .collect();
    Ok(json!({
        "algebra": header(alg),
        "engine": "brute",
        "subspaces_scanned": r.subspaces_scanned.to_string(),
        "subalgebras": subalgebras,
        "ideals": list(&r.ideals),
        "maximal_subalgebras": list(&r.maximal_subalgebras),
        "maximal_ideals": list(&r.maximal_ideals),
        "frattini_subalgebra": plain(&r.frattini_subalgebra),
        "phi": plain(&r.phi),
        "jacobson": plain(&r.jacobson),
        "nil": plain(&r.nil),
        "asoc": plain(&r.asoc),
        "rad": plain(&r.rad),
        "elementary": r.elementary,
        "minimal_non_elementary": r.minimal_non_elementary,
        "e_algebra": r.e_algebra,
    }))
}

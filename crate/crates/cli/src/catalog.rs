use leibniz::classify::FamilySpec;
use leibniz::field::parse_rational;
use leibniz::{Error, FieldSpec};

pub const FAMILIES: &[(&str, &str)] = &[
    ("family1a", "c (nonzero, default 1)"),
    ("family1b", "c (nonzero, default 1)"),
    ("heisenberg", "m >= 1 (default 1)"),
    ("cyclic", "n >= 2 (default 3)"),
    ("family4", "alpha, beta (nonzero, default 1)"),
    ("sl2-sum", "k >= 1 (default 1)"),
    ("nil-plus-simple", "none"),
    ("square-nonzero", "none"),
    ("square-zero", "none"),
    ("e-algebra-witness", "none"),
];

/// Accepts `Q`, `GF5`, `GF(5)` and `5`.
pub fn parse_field(text: &str) -> Result<FieldSpec, String> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("GF")
        .or_else(|| t.strip_prefix("gf"))
        .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
        .unwrap_or(t);
    let p: u64 = digits.parse().map_err(|_| format!("unknown field {text:?}; use Q or GF(p)"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

/// Builds a family from its name and `key=value` parameters.
pub fn family(name: &str, params: &[String]) -> Result<FamilySpec, Error> {
    let mut pairs = Vec::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::BadParams(format!("parameter {p:?} is not key=value")))?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    let allowed: &[&str] = match name {
        "family1a" | "family1b" => &["c"],
        "heisenberg" => &["m"],
        "cyclic" => &["n"],
        "family4" => &["alpha", "beta"],
        "sl2-sum" => &["k"],
        "nil-plus-simple" | "square-nonzero" | "square-zero" | "e-algebra-witness" => &[],
        _ => return Err(Error::BadParams(format!("unknown family {name:?}"))),
    };
    if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        return Err(Error::BadParams(format!("{name} takes no parameter {k:?}")));
    }
    let get = |key: &str| pairs.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
    let rat = |key: &str| get(key).map_or(Ok(leibniz::classify::rational(1)), parse_rational);
    let int = |key: &str, default: usize| {
        get(key).map_or(Ok(default), |v| v.parse().map_err(|_| Error::BadParams(format!("{key} must be a non-negative integer"))))
    };
    Ok(match name {
        "family1a" => FamilySpec::Family1a { c: rat("c")? },
        "family1b" => FamilySpec::Family1b { c: rat("c")? },
        "heisenberg" => FamilySpec::Heisenberg { m: int("m", 1)? },
        "cyclic" => FamilySpec::CyclicNilpotent { n: int("n", 3)? },
        "family4" => FamilySpec::Family4 { alpha: rat("alpha")?, beta: rat("beta")? },
        "sl2-sum" => FamilySpec::Sl2Sum { k: int("k", 1)? },
        "nil-plus-simple" => FamilySpec::NilPlusSimple,
        "square-nonzero" => FamilySpec::SquareNonzero,
        "square-zero" => FamilySpec::SquareZero,
        _ => FamilySpec::EAlgebraWitness,
    })
}

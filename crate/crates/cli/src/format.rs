//! The JSON algebra file: field, basis labels and the nonzero products.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "dim": 3,
//!   "basis": ["x", "y", "z"],
//!   "products": {
//!     "x*y": {"y": "1", "z": "1"},
//!     "x*z": {"z": "1"}
//!   }
//! }
//! ```
//!
//! Omitted products and coefficients are zero. Prime fields are written
//! `{"GF": p}`. Scalars are strings: an optional sign, an integer and an
//! optional `/` with a positive denominator.

use std::fmt;
use std::fmt::Write as _;
use std::marker::PhantomData;

use leibniz::{FieldSpec, LeibnizAlgebra, Scalar};
use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Map entries in file order, duplicates included.
struct Entries<T>(Vec<(String, T)>);

impl<T> Default for Entries<T> {
    fn default() -> Self {
        Entries(Vec::new())
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Entries<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Entries<T>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry()? {
                    out.push(entry);
                }
                Ok(Entries(out))
            }
        }
        d.deserialize_map(V(PhantomData))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    field: serde_json::Value,
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    products: Entries<Entries<String>>,
}

/// Line and column of the first occurrence of `needle`, or of the start.
fn locate(text: &str, needle: &str) -> (usize, usize) {
    let Some(offset) = text.find(needle) else {
        return (1, 1);
    };
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Parses a file into an algebra without checking the Leibniz identity.
///
/// With `right_leibniz` the table is read in the right convention and
/// transposed on import.
pub fn parse(text: &str, right_leibniz: bool) -> Result<LeibnizAlgebra, ParseError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;
    let err_at = |needle: &str, message: String| {
        let (line, column) = locate(text, needle);
        ParseError { line, column, message }
    };

    let field = match &raw.field {
        serde_json::Value::String(s) if s == "Q" => FieldSpec::Rationals,
        serde_json::Value::Object(m) if m.len() == 1 && m.contains_key("GF") => {
            let p = m["GF"].as_u64().ok_or_else(|| err_at("\"GF\"", "GF expects a positive integer".into()))?;
            FieldSpec::prime(p).map_err(|e| err_at("\"GF\"", e.to_string()))?
        }
        _ => return Err(err_at("\"field\"", "field must be \"Q\" or {\"GF\": p}".into())),
    };
    let n = raw.basis.len();
    if raw.dim != n {
        return Err(err_at("\"dim\"", format!("dim is {} but the basis has {n} labels", raw.dim)));
    }
    for (i, label) in raw.basis.iter().enumerate() {
        if label.is_empty() || label.contains('*') {
            return Err(err_at(&quoted(label), format!("label {label:?} is empty or contains '*'")));
        }
        if raw.basis[..i].contains(label) {
            return Err(err_at("\"basis\"", format!("duplicate label {label:?}")));
        }
    }
    let index = |label: &str, key: &str| {
        raw.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| err_at(&quoted(key), format!("undeclared label {label:?}")))
    };

    let mut table = vec![field.zero(); n * n * n];
    let mut seen = vec![false; n * n];
    for (key, coeffs) in &raw.products.0 {
        let (a, b) = key
            .split_once('*')
            .ok_or_else(|| err_at(&quoted(key), format!("product key {key:?} is not of the form \"a*b\"")))?;
        let (i, j) = (index(a.trim(), key)?, index(b.trim(), key)?);
        if std::mem::replace(&mut seen[i * n + j], true) {
            return Err(err_at(&quoted(key), format!("product {key:?} given twice")));
        }
        let mut used = vec![false; n];
        for (label, value) in &coeffs.0 {
            let k = index(label, label)?;
            if std::mem::replace(&mut used[k], true) {
                return Err(err_at(&quoted(key), format!("coefficient of {label:?} given twice in {key:?}")));
            }
            table[(i * n + j) * n + k] =
                field.parse_scalar(value).map_err(|e| err_at(&quoted(value), e.to_string()))?;
        }
    }
    if right_leibniz {
        table = LeibnizAlgebra::transposed_table(field, n, &table);
    }
    LeibnizAlgebra::new_unchecked(field, raw.basis, table).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

fn field_json(field: FieldSpec) -> String {
    match field {
        FieldSpec::Rationals => "\"Q\"".into(),
        FieldSpec::Prime(p) => format!("{{\"GF\": {p}}}"),
    }
}

/// Canonical text: products sorted by `(i, j)`, coefficients by basis
/// index, reduced fractions, zero entries dropped.
pub fn emit(alg: &LeibnizAlgebra) -> String {
    let n = alg.dim();
    let labels = alg.labels();
    let mut out = String::from("{\n");
    writeln!(out, "  \"field\": {},", field_json(alg.field())).unwrap();
    writeln!(out, "  \"dim\": {n},").unwrap();
    let basis: Vec<String> = labels.iter().map(|l| quoted(l)).collect();
    writeln!(out, "  \"basis\": [{}],", basis.join(", ")).unwrap();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<String> = alg
                .basis_product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}: {}", quoted(&labels[k]), quoted(&c.to_string())))
                .collect();
            if !terms.is_empty() {
                rows.push(format!("    {}: {{{}}}", quoted(&format!("{}*{}", labels[i], labels[j])), terms.join(", ")));
            }
        }
    }
    if rows.is_empty() {
        out.push_str("  \"products\": {}\n");
    } else {
        out.push_str("  \"products\": {\n");
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  }\n");
    }
    out.push_str("}\n");
    out
}

/// A vector as JSON scalar strings.
pub fn vector_json(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

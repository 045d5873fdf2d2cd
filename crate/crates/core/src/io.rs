//! JSON interchange for algebras, fusion laws, vectors and Highwater
//! elements. Scalars are written as strings: `"p/q"` over `Q` and the bare
//! residue over `F_p`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar, Vector};
use crate::fusion::{FusionLaw, LawKind};
use crate::highwater::{HwElement, HwSymbol};

#[derive(Serialize, Deserialize)]
struct ProductJson {
    i: usize,
    j: usize,
    v: BTreeMap<usize, Value>,
}

#[derive(Serialize, Deserialize)]
struct AxisJson {
    name: String,
    v: BTreeMap<usize, Value>,
}

#[derive(Serialize, Deserialize)]
struct LawJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    products: Vec<ProductJson>,
    #[serde(default)]
    axes: Vec<AxisJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    law: Option<LawJson>,
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    Value::String(x.to_literal())
}

/// Accepts a string literal or a JSON integer.
pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => field.parse(&n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar string, found {other}"))),
    }
}

fn sparse(v: &Vector) -> BTreeMap<usize, Value> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, scalar_to_json(c)))
        .collect()
}

fn dense(field: Field, n: usize, m: &BTreeMap<usize, Value>) -> Result<Vector> {
    let mut v = Vector::zeros(field, n);
    for (&k, x) in m {
        if k >= n {
            return Err(Error::Dimension(format!("coordinate {k} out of range for dimension {n}")));
        }
        v.as_mut_slice()[k] = scalar_from_json(field, x)?;
    }
    Ok(v)
}

/// `{"<k>": "<scalar>"}` with zero coordinates omitted.
pub fn vector_to_json(v: &Vector) -> Value {
    serde_json::to_value(sparse(v)).expect("string map")
}

pub fn vector_from_json(field: Field, n: usize, v: &Value) -> Result<Vector> {
    let m: BTreeMap<usize, Value> = serde_json::from_value(v.clone())?;
    dense(field, n, &m)
}

fn law_json(law: &FusionLaw) -> LawJson {
    let mut out = LawJson {
        kind: String::new(),
        eta: None,
        alpha: None,
        beta: None,
        elements: None,
        table: None,
    };
    match law.kind() {
        LawKind::Associative => out.kind = "A".into(),
        LawKind::Jordan { eta } => {
            out.kind = "J".into();
            out.eta = Some(scalar_to_json(eta));
        }
        LawKind::Monster { alpha, beta } => {
            out.kind = "M".into();
            out.alpha = Some(scalar_to_json(alpha));
            out.beta = Some(scalar_to_json(beta));
        }
        LawKind::Custom => {
            let n = law.len();
            out.kind = "custom".into();
            out.elements = Some(law.elements().iter().map(scalar_to_json).collect());
            out.table = Some(
                (0..n)
                    .map(|i| (0..n).map(|j| law.star(i, j).to_vec()).collect())
                    .collect(),
            );
        }
    }
    out
}

fn law_from(field: Field, l: &LawJson) -> Result<FusionLaw> {
    let get = |x: &Option<Value>, key: &str| -> Result<Scalar> {
        let v = x
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("law of kind {} needs \"{key}\"", l.kind)))?;
        scalar_from_json(field, v)
    };
    match l.kind.as_str() {
        "A" => Ok(FusionLaw::associative(field)),
        "J" => FusionLaw::jordan(get(&l.eta, "eta")?),
        "M" => FusionLaw::monster(get(&l.alpha, "alpha")?, get(&l.beta, "beta")?),
        "custom" => {
            let elements = l
                .elements
                .as_ref()
                .ok_or_else(|| Error::Parse("custom law needs \"elements\"".into()))?
                .iter()
                .map(|x| scalar_from_json(field, x))
                .collect::<Result<Vec<_>>>()?;
            let table = l
                .table
                .clone()
                .ok_or_else(|| Error::Parse("custom law needs \"table\"".into()))?;
            FusionLaw::custom(elements, table)
        }
        k => Err(Error::Parse(format!("unknown law kind {k:?}"))),
    }
}

pub fn law_to_json(law: &FusionLaw) -> Value {
    serde_json::to_value(law_json(law)).expect("plain data")
}

pub fn law_from_json(field: Field, v: &Value) -> Result<FusionLaw> {
    law_from(field, &serde_json::from_value(v.clone())?)
}

pub fn algebra_to_value(alg: &Algebra) -> Value {
    let doc = AlgebraJson {
        field: alg.field(),
        dim: alg.dim(),
        basis: alg.basis_names().to_vec(),
        products: alg
            .stored_products()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, v)| ProductJson { i, j, v: sparse(v) })
            .collect(),
        axes: alg
            .axes()
            .iter()
            .map(|a| AxisJson {
                name: a.name.clone(),
                v: sparse(&a.v),
            })
            .collect(),
        law: alg.law().map(law_json),
    };
    serde_json::to_value(doc).expect("plain data")
}

/// Pretty-printed algebra JSON with a trailing newline.
pub fn algebra_to_json(alg: &Algebra) -> String {
    let mut s = serde_json::to_string_pretty(&algebra_to_value(alg)).expect("plain data");
    s.push('\n');
    s
}

pub fn algebra_from_value(v: &Value) -> Result<Algebra> {
    let doc: AlgebraJson = serde_json::from_value(v.clone())?;
    let field = match doc.field {
        Field::Prime { p } => Field::prime(p)?,
        f => f,
    };
    if doc.basis.len() != doc.dim {
        return Err(Error::Dimension(format!(
            "{} basis names for dimension {}",
            doc.basis.len(),
            doc.dim
        )));
    }
    let mut alg = Algebra::new(field, doc.basis);
    let mut seen = std::collections::BTreeSet::new();
    for p in &doc.products {
        if p.i > p.j || p.j >= doc.dim {
            return Err(Error::Parse(format!(
                "product entry ({}, {}) needs i <= j < {}",
                p.i, p.j, doc.dim
            )));
        }
        if !seen.insert((p.i, p.j)) {
            return Err(Error::Parse(format!("product ({}, {}) listed twice", p.i, p.j)));
        }
        alg.set_product(p.i, p.j, dense(field, doc.dim, &p.v)?)?;
    }
    for a in &doc.axes {
        alg.add_axis(a.name.clone(), dense(field, doc.dim, &a.v)?)?;
    }
    if let Some(l) = &doc.law {
        alg.set_law(Some(law_from(field, l)?));
    }
    Ok(alg)
}

pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    algebra_from_value(&serde_json::from_str(text)?)
}

/// `{"a": {"<i>": "<scalar>"}, "s": {"<j>": "<scalar>"}}`.
pub fn hw_to_json(x: &HwElement) -> Value {
    let mut a: BTreeMap<i64, Value> = BTreeMap::new();
    let mut s: BTreeMap<u64, Value> = BTreeMap::new();
    for (sym, c) in x.terms() {
        match sym {
            HwSymbol::A(i) => a.insert(i, scalar_to_json(c)),
            HwSymbol::S(j) => s.insert(j, scalar_to_json(c)),
        };
    }
    serde_json::json!({ "a": a, "s": s })
}

pub fn hw_from_json(field: Field, v: &Value) -> Result<HwElement> {
    #[derive(Deserialize)]
    struct Raw {
        #[serde(default)]
        a: BTreeMap<i64, Value>,
        #[serde(default)]
        s: BTreeMap<u64, Value>,
    }
    let raw: Raw = serde_json::from_value(v.clone())?;
    let mut x = HwElement::zero(field);
    for (i, c) in &raw.a {
        x.add_term(HwSymbol::A(*i), &scalar_from_json(field, c)?);
    }
    for (j, c) in &raw.s {
        if *j == 0 {
            return Err(Error::Parse("s0 is not a basis element".into()));
        }
        x.add_term(HwSymbol::S(*j), &scalar_from_json(field, c)?);
    }
    Ok(x)
}

//! Explicit algebras: Matsuo algebras, spin and split spin factors, the
//! Norton-Sakuma algebras and flip subalgebras.

mod flip;
mod matsuo;
mod norton_sakuma;
mod spin;

use std::path::Path;

pub use flip::{double_axis, flip_subalgebra, induced_on_d, FlipSubalgebra};
pub use matsuo::{Matsuo, ThreeTranspositionGroup};
pub use norton_sakuma::{norton_sakuma, norton_sakuma_form, NORTON_SAKUMA_NAMES};
pub use spin::{spin_axis, spin_factor, split_spin_factor, split_spin_fam_a, split_spin_fam_b};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::perm::Permutation;

/// A catalog algebra and, where one is known in closed form, its form.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub algebra: Algebra,
    pub form: Option<Matrix>,
}

fn scalar_from_json(field: Field, v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => field.parse(s),
        serde_json::Value::Number(n) => field.parse(&n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
    }
}

/// Parses a Gram matrix given either as a JSON array of rows or as
/// `{"gram": [...]}`.
pub fn parse_gram(field: Field, text: &str) -> Result<Matrix> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let rows = match &value {
        serde_json::Value::Object(map) => map
            .get("gram")
            .ok_or_else(|| Error::Parse("missing \"gram\" key".into()))?,
        v => v,
    };
    let rows = rows
        .as_array()
        .ok_or_else(|| Error::Parse("Gram matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("Gram row must be an array".into()))?
                .iter()
                .map(|x| scalar_from_json(field, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

/// Parses `{"degree": n, "involutions": ["(1 2)", ...]}`.
pub fn parse_three_transpositions(text: &str) -> Result<ThreeTranspositionGroup> {
    #[derive(serde::Deserialize)]
    struct Raw {
        degree: usize,
        involutions: Vec<String>,
    }
    let raw: Raw = serde_json::from_str(text)?;
    ThreeTranspositionGroup::parse(raw.degree, &raw.involutions)
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path))
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn matsuo_from_spec(spec: &str, field: Field) -> Result<Matsuo> {
    let parts: Vec<&str> = spec.splitn(4, ':').collect();
    match parts.as_slice() {
        ["matsuo", "Sn", n, eta] => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {n:?}")))?;
            Matsuo::symmetric(n, field.parse(eta)?)
        }
        ["matsuo", "json", rest @ ..] => {
            let joined = rest.join(":");
            let (file, eta) = joined
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("expected matsuo:json:<file>:<eta> in {spec:?}")))?;
            Matsuo::new(parse_three_transpositions(&read(file)?)?, field.parse(eta)?)
        }
        _ => Err(Error::UnknownCatalogEntry(spec.to_string())),
    }
}

/// Builds the algebra named by a catalog spec:
/// `matsuo:Sn:<n>:<eta>`, `matsuo:json:<file>:<eta>`, `spin:<gram-file>`,
/// `splitspin:<gram-file>:<alpha>`, `ns:<name>` or
/// `flip:<matsuo-spec>:<cycles>`.
pub fn build(spec: &str, field: Field) -> Result<CatalogEntry> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownCatalogEntry(spec.to_string()))?;
    match kind {
        "matsuo" => {
            let m = matsuo_from_spec(spec, field)?;
            let form = Some(m.form());
            Ok(CatalogEntry {
                algebra: m.algebra,
                form,
            })
        }
        "spin" => Ok(CatalogEntry {
            algebra: spin_factor(&parse_gram(field, &read(rest)?)?)?,
            form: None,
        }),
        "splitspin" => {
            let (file, alpha) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("expected splitspin:<file>:<alpha> in {spec:?}")))?;
            let b = parse_gram(field, &read(file)?)?;
            Ok(CatalogEntry {
                algebra: split_spin_factor(&b, &field.parse(alpha)?)?,
                form: None,
            })
        }
        "ns" => {
            if field != Field::Rational {
                return Err(Error::Unsupported(
                    "Norton-Sakuma algebras are built over the rationals".into(),
                ));
            }
            Ok(CatalogEntry {
                algebra: norton_sakuma(rest)?,
                form: Some(norton_sakuma_form(rest)?),
            })
        }
        "flip" => {
            let (inner, cycles) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("expected flip:<matsuo-spec>:<cycles> in {spec:?}")))?;
            let m = matsuo_from_spec(inner, field)?;
            let g = Permutation::parse_cycles(m.group.degree(), cycles)?;
            let sigma = induced_on_d(&m, &g)?;
            Ok(CatalogEntry {
                algebra: flip_subalgebra(&m, &sigma)?.algebra,
                form: None,
            })
        }
        _ => Err(Error::UnknownCatalogEntry(spec.to_string())),
    }
}

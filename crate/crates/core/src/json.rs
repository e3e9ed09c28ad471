//! JSON and CSV formats for elements, tensors, matrices and sequence
//! descriptors. Coefficients are written as canonical strings.

use serde::Deserialize;
use serde_json::{json, Value};
use std::sync::Arc;

use crate::algebra::{ChiElem, SemiSymmetricAlgebra};
use crate::character::{Character, CharacterSequence};
use crate::coalgebra::TensorVector;
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::matrix::ExactMatrix;
use crate::perm::{Permutation, PermutationGroup};
use crate::ring::{RingDescriptor, Scalar};

fn parse_err(at: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{at}: {msg}"))
}

/// A coefficient given as a string, or as a JSON integer.
pub fn scalar_from_json<S: Scalar>(v: &Value, ring: &RingDescriptor) -> Result<S> {
    match v {
        Value::String(s) => S::parse(s, ring),
        Value::Number(n) if n.is_i64() || n.is_u64() => S::parse(&n.to_string(), ring),
        other => Err(Error::Parse(format!("coefficient must be a string or an integer, got {other}"))),
    }
}

pub fn index_from_json(v: &Value) -> Result<MultiIndex> {
    let entries: Vec<usize> = serde_json::from_value(v.clone()).map_err(|e| parse_err("index", e))?;
    if entries.contains(&0) {
        return Err(Error::InvalidIndex(format!("{v} has a 0 entry; letters are 1-based")));
    }
    Ok(MultiIndex::new(entries))
}

pub fn element_to_json<S: Scalar, K>(x: &ChiElem<S, K>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(j, c)| json!({ "index": j.entries(), "coeff": c.to_string() }))
        .collect();
    json!({ "degree": x.degree(), "terms": terms })
}

/// Reads `{"degree": d, "terms": [{"index": [...], "coeff": "..."}]}`.
/// Indices need not be canonical: each term is projected into `[χ]^d(E)`.
pub fn element_from_json<S: Scalar, K>(alg: &SemiSymmetricAlgebra<S>, v: &Value) -> Result<ChiElem<S, K>> {
    let degree = v
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("element", "missing non-negative integer \"degree\""))? as usize;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("element", "missing array \"terms\""))?;
    let mut out = ChiElem::zero(alg.n(), degree);
    for (t, term) in terms.iter().enumerate() {
        let at = format!("terms[{t}]");
        let i = index_from_json(term.get("index").ok_or_else(|| parse_err(&at, "missing \"index\""))?)
            .map_err(|e| parse_err(&at, e))?;
        if i.len() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: i.len() });
        }
        let c = scalar_from_json::<S>(term.get("coeff").ok_or_else(|| parse_err(&at, "missing \"coeff\""))?, alg.ring())
            .map_err(|e| parse_err(&at, e))?;
        out = out.add(&alg.project_tensor(&c, &i)?)?;
    }
    Ok(out)
}

pub fn tensor_to_json<S: Scalar>(t: &TensorVector<S>) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|(key, c)| {
            let slots: Vec<Value> = key.iter().map(|j| json!({ "degree": j.len(), "index": j.entries() })).collect();
            json!({ "slots": slots, "coeff": c.to_string() })
        })
        .collect();
    Value::Array(terms)
}

/// Reads `[{"slots": [{"degree": d, "index": [...]}], "coeff": "..."}]`,
/// projecting each slot into its semi-symmetric power.
pub fn tensor_from_json<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, v: &Value, slots: usize) -> Result<TensorVector<S>> {
    let terms = v.as_array().ok_or_else(|| parse_err("tensor", "expected an array of terms"))?;
    let mut out = TensorVector::zero(alg.n(), slots);
    'terms: for (t, term) in terms.iter().enumerate() {
        let at = format!("tensor[{t}]");
        let parts = term
            .get("slots")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err(&at, "missing array \"slots\""))?;
        if parts.len() != slots {
            return Err(Error::ShapeMismatch(format!("{at}: {} slots, expected {slots}", parts.len())));
        }
        let mut c = scalar_from_json::<S>(term.get("coeff").ok_or_else(|| parse_err(&at, "missing \"coeff\""))?, alg.ring())?;
        let mut key = Vec::with_capacity(slots);
        for part in parts {
            let i = index_from_json(part.get("index").ok_or_else(|| parse_err(&at, "slot without \"index\""))?)?;
            if let Some(d) = part.get("degree").and_then(Value::as_u64) {
                if d as usize != i.len() {
                    return Err(Error::DegreeMismatch { expected: d as usize, found: i.len() });
                }
            }
            i.check_alphabet(alg.n())?;
            match alg.power(i.len())?.project_index(&i)? {
                None => continue 'terms,
                Some((rep, zeta)) => {
                    c = c * zeta;
                    key.push(rep);
                }
            }
        }
        out.add_term(key, c);
    }
    Ok(out)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageSpec {
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub character: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum StageFile {
    Bare(Vec<StageSpec>),
    Wrapped { stages: Vec<StageSpec> },
}

pub fn parse_stage_specs(v: &Value) -> Result<Vec<StageSpec>> {
    let file: StageFile = serde_json::from_value(v.clone())
        .map_err(|e| parse_err("sequence", format!("expected a stage list or {{\"stages\": [...]}}: {e}")))?;
    let mut stages = match file {
        StageFile::Bare(s) | StageFile::Wrapped { stages: s } => s,
    };
    stages.sort_by_key(|s| s.degree);
    for (k, s) in stages.iter().enumerate() {
        if s.degree != k + 1 {
            return Err(parse_err("sequence", format!("stages must cover degrees 1..D exactly once; found degree {} at position {}", s.degree, k + 1)));
        }
    }
    Ok(stages)
}

/// Builds and returns the sequence without validating it; callers decide
/// whether violations are fatal.
pub fn sequence_from_specs<S: Scalar>(specs: &[StageSpec], ring: RingDescriptor, group_cap: usize) -> Result<CharacterSequence<S>> {
    let mut stages = Vec::with_capacity(specs.len());
    for s in specs {
        let at = format!("stage {}", s.degree);
        if s.generators.len() != s.character.len() {
            return Err(parse_err(&at, format!("{} generators but {} character values", s.generators.len(), s.character.len())));
        }
        let gens = s
            .generators
            .iter()
            .map(|g| Permutation::parse(g, s.degree))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(&at, e))?;
        let values = s.character.iter().map(|c| S::parse(c, &ring)).collect::<Result<Vec<_>>>().map_err(|e| parse_err(&at, e))?;
        let group = Arc::new(PermutationGroup::closure_with_cap(s.degree, gens, group_cap)?);
        stages.push(Character::from_generators(group, &values, ring).map_err(|e| parse_err(&at, e))?);
    }
    CharacterSequence::new(ring, stages)
}

pub fn sequence_from_json<S: Scalar>(v: &Value, ring: RingDescriptor, group_cap: usize) -> Result<CharacterSequence<S>> {
    sequence_from_specs(&parse_stage_specs(v)?, ring, group_cap)
}

pub fn matrix_from_json<S: Scalar>(v: &Value, ring: &RingDescriptor) -> Result<ExactMatrix<S>> {
    let rows = v.as_array().ok_or_else(|| parse_err("matrix", "expected an array of rows"))?;
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let row = row.as_array().ok_or_else(|| parse_err(&format!("matrix row {}", r + 1), "expected an array"))?;
            row.iter()
                .enumerate()
                .map(|(c, x)| scalar_from_json(x, ring).map_err(|e| parse_err(&format!("matrix entry ({}, {})", r + 1, c + 1), e)))
                .collect::<Result<Vec<S>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows)
}

pub fn matrix_from_csv<S: Scalar>(text: &str, ring: &RingDescriptor) -> Result<ExactMatrix<S>> {
    let rows = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(r, line)| {
            line.split(',')
                .enumerate()
                .map(|(c, x)| S::parse(x.trim(), ring).map_err(|e| parse_err(&format!("line {} column {}", r + 1, c + 1), e)))
                .collect::<Result<Vec<S>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows)
}

/// JSON when the text starts with `[`, CSV otherwise.
pub fn parse_matrix<S: Scalar>(text: &str, ring: &RingDescriptor) -> Result<ExactMatrix<S>> {
    if text.trim_start().starts_with('[') {
        let v: Value = serde_json::from_str(text).map_err(|e| parse_err("matrix", e))?;
        matrix_from_json(&v, ring)
    } else {
        matrix_from_csv(text, ring)
    }
}

pub fn matrix_to_json<S: Scalar>(a: &ExactMatrix<S>) -> Value {
    Value::Array(
        a.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

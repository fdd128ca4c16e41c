//! Text literals for modules and pairs.
//!
//! A module literal is either a JSON record
//! `{"dims": {"1": 1, "2": 1}, "mats": {"a": [["1/1"]]}}` or one of the
//! shorthands `simple:v`, `proj:v`, `inj:v`, `uniserial:v1>v2>...` and `0`.
//! A pair literal joins module literals with `+` and may end with
//! `| v1,v2` listing the support vertices.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Matrix};
use crate::rep::{check_rep, injective, projective, simple, uniserial, Rep};

pub fn parse_module(alg: &BoundQuiverAlgebra, text: &str) -> Result<Rep> {
    let text = text.trim();
    if text == "0" {
        return Ok(Rep::zero(alg));
    }
    if text.starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Literal(e.to_string()))?;
        return module_from_json(alg, &value);
    }
    let (kind, arg) = text.split_once(':').ok_or_else(|| Error::Literal(format!("`{text}`")))?;
    let arg = arg.trim();
    match kind.trim() {
        "simple" => Ok(simple(alg, alg.vertex(arg)?)),
        "proj" => Ok(projective(alg, alg.vertex(arg)?)),
        "inj" => Ok(injective(alg, alg.vertex(arg)?)),
        "uniserial" => {
            let hops: Vec<&str> = arg.split('>').collect();
            uniserial(alg, &alg.walk(&hops)?)
        }
        other => Err(Error::Literal(format!("unknown constructor `{other}`"))),
    }
}

/// Splits on `sep` outside braces and brackets.
fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Summands (possibly with repeats) and support vertices of a pair literal.
pub fn parse_pair(alg: &BoundQuiverAlgebra, text: &str) -> Result<(Vec<Rep>, Vec<usize>)> {
    let pieces = split_top_level(text, '|');
    if pieces.len() > 2 {
        return Err(Error::Literal("more than one `|` in pair".into()));
    }
    let mut summands = Vec::new();
    for part in split_top_level(pieces[0], '+') {
        let m = parse_module(alg, part)?;
        if !m.is_zero() {
            summands.push(m);
        }
    }
    let mut support = Vec::new();
    if let Some(list) = pieces.get(1) {
        for v in list.split(',').map(str::trim).filter(|v| !v.is_empty()) {
            support.push(alg.vertex(v)?);
        }
    }
    Ok((summands, support))
}

pub fn module_from_json(alg: &BoundQuiverAlgebra, value: &Value) -> Result<Rep> {
    let bad = |msg: String| Error::Literal(msg);
    let obj = value.as_object().ok_or_else(|| bad("module must be an object".into()))?;
    let mut dims = vec![0usize; alg.vertex_count()];
    if let Some(d) = obj.get("dims") {
        for (v, n) in d.as_object().ok_or_else(|| bad("`dims` must be an object".into()))? {
            let n = n.as_u64().ok_or_else(|| bad(format!("dimension at {v} must be a nonnegative integer")))?;
            dims[alg.vertex(v)?] = n as usize;
        }
    }
    let arrows = alg.quiver().arrows();
    let mut mats: Vec<Matrix> = arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    if let Some(m) = obj.get("mats") {
        for (name, rows) in m.as_object().ok_or_else(|| bad("`mats` must be an object".into()))? {
            let k = alg.quiver().arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.clone()))?;
            let a = &arrows[k];
            let rows = rows.as_array().ok_or_else(|| bad(format!("matrix of `{name}` must be a list of rows")))?;
            let entries = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| bad(format!("row of `{name}` must be a list")))?
                        .iter()
                        .map(|x| {
                            let s = match x {
                                Value::String(s) => s.clone(),
                                Value::Number(n) => n.to_string(),
                                _ => return Err(bad(format!("entry of `{name}` must be a rational"))),
                            };
                            parse_q(&s).ok_or_else(|| bad(format!("bad rational `{s}`")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != dims[a.target] || entries.iter().any(|r| r.len() != dims[a.source]) {
                return Err(Error::Shape(format!("matrix of `{name}` must be {}x{}", dims[a.target], dims[a.source])));
            }
            mats[k] = Matrix::from_rows_shaped(dims[a.target], dims[a.source], entries);
        }
    }
    let m = Rep::new(alg, dims, mats)?;
    if !check_rep(alg, &m)? {
        return Err(Error::Literal("matrices violate a relation".into()));
    }
    Ok(m)
}

/// Canonical JSON record of a module: sorted keys, rationals as `p/q`.
pub fn module_to_json(alg: &BoundQuiverAlgebra, m: &Rep) -> Value {
    let dims: BTreeMap<String, usize> =
        (0..alg.vertex_count()).map(|v| (alg.quiver().vertex_label(v).to_string(), m.dim_at(v))).collect();
    let mats: BTreeMap<String, Vec<Vec<String>>> = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mat = m.mat(k);
            let rows = (0..mat.rows()).map(|r| mat.row(r).iter().map(format_q).collect()).collect();
            (a.name.clone(), rows)
        })
        .collect();
    json!({ "dims": dims, "mats": mats })
}

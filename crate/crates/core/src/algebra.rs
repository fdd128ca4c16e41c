//! Bound quiver algebras `kQ/I` with a normal-form path basis.
//!
//! Composition is diagrammatic: the word `p*q` means "first `p`, then `q`", and
//! an arrow `a: i -> j` acts on a representation as a linear map `M_i -> M_j`.
//!
//! Normal forms are computed by reducing the ideal against the truncation
//! `kQ / J^L` for growing `L`. Paths are ordered length-lexicographically with
//! longer paths largest, so row reduction picks the largest path of each ideal
//! element as its tip; the surviving (non-tip) paths form the basis. Once every
//! path of length `m` lies in `I + J^(m+1)` the ideal contains `J^m` and the
//! basis is final.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Matrix, Q};

pub const DEFAULT_CAP: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (k, a) in arrows.iter().enumerate() {
            if arrows[..k].iter().any(|b| b.name == a.name) {
                return Err(Error::DuplicateArrow(a.name.clone()));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::UnknownVertex(a.name.clone()));
            }
        }
        for (k, v) in vertices.iter().enumerate() {
            if vertices[..k].contains(v) {
                return Err(Error::Parse { line: 0, msg: format!("duplicate vertex `{v}`") });
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(k, _)| k)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(k, _)| k)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A composable arrow word, or the trivial path at `source` when empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: &[usize]) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::NotComposable("<empty>".into()));
        };
        let mut cur = quiver.arrow(first).target;
        for &a in &arrows[1..] {
            if quiver.arrow(a).source != cur {
                return Err(Error::NotComposable(
                    arrows.iter().map(|&b| quiver.arrow(b).name.as_str()).collect::<Vec<_>>().join("*"),
                ));
            }
            cur = quiver.arrow(a).target;
        }
        Ok(PathWord { source: quiver.arrow(first).source, target: cur, arrows: arrows.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &PathWord) -> Option<PathWord> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord { source: self.source, target: other.target, arrows })
    }

    pub fn reversed(&self) -> PathWord {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        PathWord { source: self.target, target: self.source, arrows }
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", quiver.vertex_label(self.source))
        } else {
            self.arrows.iter().map(|&a| quiver.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// Linear combination of parallel paths of length at least two, meant to be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, PathWord)>,
}

impl Relation {
    pub fn new(terms: Vec<(Q, PathWord)>, quiver: &Quiver) -> Result<Self> {
        let rel = Relation { terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect() };
        let shown = rel.display(quiver);
        let Some((_, first)) = rel.terms.first() else {
            return Err(Error::ShortRelation(shown));
        };
        let (s, t) = (first.source, first.target);
        for (_, p) in &rel.terms {
            if p.len() < 2 {
                return Err(Error::ShortRelation(shown));
            }
            if p.source != s || p.target != t {
                return Err(Error::NotParallel(shown));
            }
        }
        Ok(rel)
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    out.push_str(&format!("{} ", mag.numer()));
                } else {
                    out.push_str(&format!("{} ", format_q(&mag)));
                }
            }
            out.push_str(&p.display(quiver));
        }
        out
    }
}

/// Sparse linear combination of basis paths, sorted by basis index.
pub type Element = Vec<(usize, Q)>;

pub struct BoundQuiverAlgebra {
    name: String,
    quiver: Quiver,
    relations: Vec<Relation>,
    cap: usize,
    /// Paths of this length or longer are zero.
    zero_length: usize,
    basis: Vec<PathWord>,
    basis_index: HashMap<PathWord, usize>,
    normal_forms: HashMap<PathWord, Element>,
    opposite: OnceLock<Box<BoundQuiverAlgebra>>,
}

impl Clone for BoundQuiverAlgebra {
    fn clone(&self) -> Self {
        BoundQuiverAlgebra {
            name: self.name.clone(),
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            cap: self.cap,
            zero_length: self.zero_length,
            basis: self.basis.clone(),
            basis_index: self.basis_index.clone(),
            normal_forms: self.normal_forms.clone(),
            opposite: OnceLock::new(),
        }
    }
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("name", &self.name)
            .field("vertices", &self.quiver.vertices)
            .field("dim", &self.dim())
            .finish()
    }
}

impl BoundQuiverAlgebra {
    pub fn new(name: &str, quiver: Quiver, relations: Vec<Relation>, cap: usize) -> Result<Self> {
        for r in &relations {
            Relation::new(r.terms.clone(), &quiver)?;
        }
        let (zero_length, basis, normal_forms) = compute_normal_forms(&quiver, &relations, cap)?;
        let basis_index = basis.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Ok(BoundQuiverAlgebra {
            name: name.to_string(),
            quiver,
            relations,
            cap,
            zero_length,
            basis,
            basis_index,
            normal_forms,
            opposite: OnceLock::new(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_algebra(text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.quiver.vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn basis_path(&self, k: usize) -> &PathWord {
        &self.basis[k]
    }

    pub fn basis_position(&self, p: &PathWord) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis paths from `i` to `j`, in basis order.
    pub fn basis_between(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| self.basis[k].source == i && self.basis[k].target == j).collect()
    }

    pub fn basis_from(&self, i: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| self.basis[k].source == i).collect()
    }

    pub fn basis_into(&self, j: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| self.basis[k].target == j).collect()
    }

    /// Length beyond which every path vanishes.
    pub fn loewy_bound(&self) -> usize {
        self.zero_length
    }

    /// Normal form of a composable word as a combination of basis paths.
    pub fn normal_form(&self, w: &PathWord) -> Element {
        if w.len() >= self.zero_length {
            return Vec::new();
        }
        self.normal_forms.get(w).cloned().unwrap_or_default()
    }

    /// Product of two basis paths (first `a`, then `b`).
    pub fn multiply_basis(&self, a: usize, b: usize) -> Element {
        match self.basis[a].concat(&self.basis[b]) {
            Some(w) => self.normal_form(&w),
            None => Vec::new(),
        }
    }

    /// Right multiplication of an element by a path: `x * w`.
    pub fn multiply_element_path(&self, x: &Element, w: &PathWord) -> Element {
        let mut acc: Vec<Q> = vec![Q::zero(); self.dim()];
        for (k, c) in x {
            if let Some(p) = self.basis[*k].concat(w) {
                for (j, d) in self.normal_form(&p) {
                    acc[j] += c * &d;
                }
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Opposite algebra: arrows reversed, relations read backwards. The
    /// opposite of the opposite has the same quiver as `self`.
    pub fn opposite(&self) -> &BoundQuiverAlgebra {
        self.opposite.get_or_init(|| {
            let quiver = self.quiver.opposite();
            let relations = self
                .relations
                .iter()
                .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() })
                .collect();
            let name = match self.name.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{}^op", self.name),
            };
            Box::new(
                BoundQuiverAlgebra::new(&name, quiver, relations, self.cap)
                    .expect("opposite of an admissible algebra is admissible"),
            )
        })
    }

    /// Parses a `*`-separated arrow word, or `e<v>` for a trivial path.
    pub fn parse_word(&self, s: &str) -> Result<PathWord> {
        parse_word(&self.quiver, s)
    }

    /// Walk given by a vertex sequence `v1 > v2 > ...`, one arrow per hop.
    pub fn walk(&self, vertices: &[&str]) -> Result<PathWord> {
        let idx: Vec<usize> = vertices.iter().map(|v| self.vertex(v.trim())).collect::<Result<_>>()?;
        let Some(&first) = idx.first() else {
            return Err(Error::Literal("empty walk".into()));
        };
        if idx.len() == 1 {
            return Ok(PathWord::trivial(first));
        }
        let mut arrows = Vec::new();
        for w in idx.windows(2) {
            let cands: Vec<usize> =
                self.quiver.arrows_from(w[0]).filter(|&a| self.quiver.arrow(a).target == w[1]).collect();
            match cands.len() {
                0 => {
                    return Err(Error::MissingArrow(
                        self.quiver.vertex_label(w[0]).into(),
                        self.quiver.vertex_label(w[1]).into(),
                    ))
                }
                1 => arrows.push(cands[0]),
                _ => {
                    return Err(Error::AmbiguousWalk(
                        self.quiver.vertex_label(w[0]).into(),
                        self.quiver.vertex_label(w[1]).into(),
                    ))
                }
            }
        }
        PathWord::from_arrows(&self.quiver, &arrows)
    }

    /// Serializes in the line-oriented algebra file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("algebra {}\n", self.name);
        out.push_str(&format!("vertices: {}\n", self.quiver.vertices.join(" ")));
        let arrows: Vec<String> = self
            .quiver
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]))
            .collect();
        out.push_str(&format!("arrows: {}\n", arrows.join(", ")));
        let rels: Vec<String> = self.relations.iter().map(|r| format!("{} = 0", r.display(&self.quiver))).collect();
        out.push_str(&format!("relations: {}\n", rels.join(", ")));
        if self.cap != DEFAULT_CAP {
            out.push_str(&format!("cap: {}\n", self.cap));
        }
        out
    }
}

fn parse_word(quiver: &Quiver, s: &str) -> Result<PathWord> {
    let s = s.trim();
    if let Some(v) = s.strip_prefix('e') {
        if let Some(i) = quiver.vertex_index(v) {
            if quiver.arrow_index(s).is_none() {
                return Ok(PathWord::trivial(i));
            }
        }
    }
    let arrows: Vec<usize> = s
        .split('*')
        .map(|n| quiver.arrow_index(n.trim()).ok_or_else(|| Error::UnknownArrow(n.trim().to_string())))
        .collect::<Result<_>>()?;
    PathWord::from_arrows(quiver, &arrows)
}

/// All composable words of length exactly `len`, in a fixed order.
fn paths_of_length(quiver: &Quiver, len: usize) -> Vec<PathWord> {
    let mut layer: Vec<PathWord> = (0..quiver.vertex_count()).map(PathWord::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &layer {
            for a in quiver.arrows_from(p.target) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(PathWord { source: p.source, target: quiver.arrow(a).target, arrows });
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

type NormalFormData = (usize, Vec<PathWord>, HashMap<PathWord, Element>);

fn compute_normal_forms(quiver: &Quiver, relations: &[Relation], cap: usize) -> Result<NormalFormData> {
    for level in 2..=cap + 1 {
        // columns: paths of length < level, longest first
        let mut columns: Vec<PathWord> = Vec::new();
        let mut by_len: Vec<Vec<PathWord>> = Vec::new();
        for len in 0..level {
            by_len.push(paths_of_length(quiver, len));
        }
        for len in (0..level).rev() {
            columns.extend(by_len[len].iter().cloned());
        }
        let col_index: HashMap<PathWord, usize> = columns.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();

        let mut rows: Vec<Vec<Q>> = Vec::new();
        for r in relations {
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            if min_len >= level {
                continue;
            }
            for ulen in 0..level - min_len {
                for u in by_len[ulen].iter().filter(|u| u.target == r.source()) {
                    for wlen in 0..level - min_len - ulen {
                        for w in by_len[wlen].iter().filter(|w| w.source == r.target()) {
                            let mut row = vec![Q::zero(); columns.len()];
                            let mut any = false;
                            for (c, p) in &r.terms {
                                let full = u.concat(p).and_then(|x| x.concat(w)).expect("composable");
                                if let Some(&k) = col_index.get(&full) {
                                    row[k] += c;
                                    any = true;
                                }
                            }
                            if any {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let ech = if rows.is_empty() {
            None
        } else {
            let m = Matrix::from_rows(rows);
            Some(m.echelon())
        };
        let pivots: Vec<usize> = ech.as_ref().map(|e| e.pivots.clone()).unwrap_or_default();
        let reduce = |k: usize| -> Vec<(usize, Q)> {
            if let (Some(e), Some(r)) = (&ech, pivots.iter().position(|&p| p == k)) {
                (0..columns.len())
                    .filter(|&c| c != k && !e.reduced[(r, c)].is_zero())
                    .map(|c| (c, -e.reduced[(r, c)].clone()))
                    .collect()
            } else {
                vec![(k, Q::one())]
            }
        };
        let top_len = level - 1;
        let stable = by_len[top_len].iter().all(|p| reduce(col_index[p]).is_empty());
        if !stable {
            continue;
        }
        let zero_length = top_len;
        let mut basis: Vec<PathWord> = columns
            .iter()
            .enumerate()
            .filter(|(k, p)| p.len() < zero_length && !pivots.contains(k))
            .map(|(_, p)| p.clone())
            .collect();
        basis.sort_by(|a, b| (a.source, a.len(), &a.arrows).cmp(&(b.source, b.len(), &b.arrows)));
        let basis_pos: HashMap<&PathWord, usize> = basis.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut normal_forms = HashMap::new();
        for (k, p) in columns.iter().enumerate() {
            if p.len() >= zero_length {
                continue;
            }
            let mut elem: Element = reduce(k)
                .into_iter()
                .map(|(c, v)| (*basis_pos.get(&columns[c]).expect("non-tip column is a basis path"), v))
                .collect();
            elem.sort_by_key(|(i, _)| *i);
            normal_forms.insert(p.clone(), elem);
        }
        return Ok((zero_length, basis, normal_forms));
    }
    Err(Error::NotAdmissible(cap))
}

fn parse_algebra(text: &str) -> Result<BoundQuiverAlgebra> {
    let mut name: Option<String> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrow_specs: Vec<(usize, String)> = Vec::new();
    let mut relation_specs: Vec<(usize, String)> = Vec::new();
    let mut cap = DEFAULT_CAP;
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        if let Some(rest) = line.strip_prefix("algebra") {
            if !rest.starts_with(char::is_whitespace) && !rest.is_empty() {
                return Err(err("expected `algebra <name>`"));
            }
            let n = rest.trim();
            if n.is_empty() {
                return Err(err("missing algebra name"));
            }
            name = Some(n.to_string());
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(err("expected `key: value`"));
        };
        match key.trim() {
            "vertices" => vertices = Some(value.split_whitespace().map(str::to_string).collect()),
            "arrows" => arrow_specs.extend(split_list(value).into_iter().map(|s| (line_no, s))),
            "relations" => relation_specs.extend(split_list(value).into_iter().map(|s| (line_no, s))),
            "cap" => cap = value.trim().parse().map_err(|_| err("cap must be a positive integer"))?,
            other => return Err(err(&format!("unknown key `{other}`"))),
        }
    }
    let name = name.ok_or(Error::Parse { line: 0, msg: "missing `algebra <name>` line".into() })?;
    let vertices = vertices.ok_or(Error::Parse { line: 0, msg: "missing `vertices:` line".into() })?;
    if vertices.is_empty() {
        return Err(Error::Parse { line: 0, msg: "no vertices".into() });
    }
    let mut arrows = Vec::new();
    for (line, spec) in arrow_specs {
        let err = |msg: String| Error::Parse { line, msg };
        let (n, ends) = spec.split_once(':').ok_or_else(|| err(format!("bad arrow `{spec}`")))?;
        let (s, t) = ends.split_once("->").ok_or_else(|| err(format!("bad arrow `{spec}`")))?;
        let idx = |v: &str| vertices.iter().position(|x| x == v.trim()).ok_or(Error::UnknownVertex(v.trim().into()));
        let n = n.trim();
        if n.is_empty() || n.contains(char::is_whitespace) || n.contains('*') {
            return Err(err(format!("bad arrow name `{n}`")));
        }
        arrows.push(Arrow { name: n.to_string(), source: idx(s)?, target: idx(t)? });
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (line, spec) in relation_specs {
        relations.push(parse_relation(&quiver, &spec, line)?);
    }
    BoundQuiverAlgebra::new(&name, quiver, relations, cap)
}

fn split_list(value: &str) -> Vec<String> {
    value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_relation(quiver: &Quiver, spec: &str, line: usize) -> Result<Relation> {
    let err = |msg: String| Error::Parse { line, msg };
    let (lhs, rhs) = spec.split_once('=').ok_or_else(|| err(format!("relation `{spec}` needs `= 0`")))?;
    if rhs.trim() != "0" {
        return Err(err(format!("relation `{spec}` must have right-hand side 0")));
    }
    let mut terms = Vec::new();
    let mut sign = Q::one();
    let mut current = String::new();
    let flush = |current: &mut String, sign: &Q, terms: &mut Vec<(Q, PathWord)>| -> Result<()> {
        let t = current.trim();
        if t.is_empty() {
            return Err(err(format!("empty term in `{spec}`")));
        }
        let mut parts: Vec<&str> = t.split_whitespace().collect();
        let coeff = if parts.len() > 1 {
            let c = parse_q(parts[0]).ok_or_else(|| err(format!("bad coefficient `{}`", parts[0])))?;
            parts.remove(0);
            c
        } else {
            Q::one()
        };
        if parts.len() != 1 {
            return Err(err(format!("bad term `{t}`")));
        }
        let word = parse_word(quiver, parts[0])?;
        terms.push((sign * coeff, word));
        current.clear();
        Ok(())
    };
    let mut seen_any = false;
    for ch in lhs.chars() {
        match ch {
            '+' | '-' => {
                if seen_any {
                    flush(&mut current, &sign, &mut terms)?;
                }
                sign = if ch == '-' { -Q::one() } else { Q::one() };
                seen_any = false;
            }
            c => {
                if !c.is_whitespace() {
                    seen_any = true;
                }
                current.push(c);
            }
        }
    }
    flush(&mut current, &sign, &mut terms)?;
    // merge duplicate paths
    let mut merged: Vec<(Q, PathWord)> = Vec::new();
    for (c, p) in terms {
        if let Some(slot) = merged.iter_mut().find(|(_, q)| *q == p) {
            slot.0 += c;
        } else {
            merged.push((c, p));
        }
    }
    Relation::new(merged, quiver)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b1b_basis() {
        let b = fixtures::b1b();
        assert_eq!(b.dim(), 5);
        let shown: Vec<String> = b.basis().iter().map(|p| p.display(b.quiver())).collect();
        assert_eq!(shown, vec!["e1", "b", "b*a", "e2", "a"]);
    }

    #[test]
    fn b1b_normal_forms() {
        let b = fixtures::b1b();
        let ab = b.parse_word("a*b").unwrap();
        assert!(b.normal_form(&ab).is_empty());
        let ba = b.parse_word("b*a").unwrap();
        assert_eq!(b.normal_form(&ba), vec![(b.basis_position(&ba).unwrap(), Q::one())]);
        let e2 = PathWord::trivial(1);
        assert_eq!(b.normal_form(&e2), vec![(b.basis_position(&e2).unwrap(), Q::one())]);
    }

    #[test]
    fn fixture_dimensions() {
        assert_eq!(fixtures::b1a().dim(), 5);
        assert_eq!(fixtures::b1b().dim(), 5);
        assert_eq!(fixtures::a1b().dim(), 8);
        assert_eq!(fixtures::a1a().dim(), 5 + 1 + 3);
        assert_eq!(fixtures::b2().dim(), 8);
    }

    fn monomial_path_count(alg: &BoundQuiverAlgebra) -> usize {
        let quiver = alg.quiver();
        let forbidden: Vec<Vec<usize>> = alg.relations().iter().map(|r| r.terms[0].1.arrows.clone()).collect();
        let mut count = quiver.vertex_count();
        let mut frontier: Vec<Vec<usize>> = (0..quiver.arrows().len()).map(|a| vec![a]).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                if forbidden.iter().any(|f| w.windows(f.len()).any(|x| x == f.as_slice())) {
                    continue;
                }
                count += 1;
                let end = quiver.arrow(*w.last().unwrap()).target;
                for a in quiver.arrows_from(end) {
                    let mut longer = w.clone();
                    longer.push(a);
                    next.push(longer);
                }
            }
            frontier = next;
        }
        count
    }

    #[test]
    fn dimensions_match_monomial_oracle() {
        for name in ["b1a", "b1b", "a1a", "a1b", "b2", "a2", "a3", "point"] {
            let alg = fixtures::by_name(name).unwrap();
            assert_eq!(alg.dim(), monomial_path_count(&alg), "{name}");
        }
    }

    #[test]
    fn relation_errors() {
        let bad = "algebra X\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 3 -> 1\nrelations: a*b = 0\n";
        assert!(matches!(BoundQuiverAlgebra::parse(bad), Err(Error::NotComposable(_))));
        let short = "algebra X\nvertices: 1 2\narrows: a: 1 -> 2\nrelations: a = 0\n";
        assert!(matches!(BoundQuiverAlgebra::parse(short), Err(Error::ShortRelation(_))));
        let loop_free = "algebra X\nvertices: 1\narrows: x: 1 -> 1\ncap: 8\n";
        assert!(matches!(BoundQuiverAlgebra::parse(loop_free), Err(Error::NotAdmissible(8))));
        assert!(matches!(BoundQuiverAlgebra::parse("vertices: 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn commutativity_relation() {
        let text = "algebra sq\nvertices: 1 2 3 4\narrows: a: 1 -> 2, b: 1 -> 3, c: 2 -> 4, d: 3 -> 4\nrelations: a*c - 2 b*d = 0\n";
        let alg = BoundQuiverAlgebra::parse(text).unwrap();
        // e1..e4, a, b, c, d and one length-two path from 1 to 4
        assert_eq!(alg.dim(), 9);
        let ac = alg.parse_word("a*c").unwrap();
        let bd = alg.parse_word("b*d").unwrap();
        let lhs = alg.normal_form(&ac);
        let mut rhs = alg.normal_form(&bd);
        for (_, c) in rhs.iter_mut() {
            *c *= crate::linalg::q(2);
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip() {
        for alg in [fixtures::b1a(), fixtures::b2(), fixtures::a3()] {
            let again = BoundQuiverAlgebra::parse(&alg.to_text()).unwrap();
            assert_eq!(again.basis(), alg.basis());
            assert_eq!(again.relations(), alg.relations());
        }
    }

    #[test]
    fn opposite_is_involutive() {
        let b2 = fixtures::b2();
        let back = b2.opposite().opposite();
        assert_eq!(back.quiver(), b2.quiver());
        assert_eq!(back.dim(), b2.dim());
        assert_eq!(back.relations(), b2.relations());
    }
}

//! Support tau-tilting pairs, left mutation and the Hasse quiver of the
//! mutation poset.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::algebra::BoundQuiverAlgebra;
use crate::decompose::{decompose, indecomposables_isomorphic, radical_endomorphisms};
use crate::error::{Error, Result};
use crate::homology::{
    cokernel, fac_contains, hom_basis, hom_dim, loewy_diagram, min_presentation, presentation_rigid, tau, Presentation,
};
use crate::linalg::{rank_of_vectors, Matrix};
use crate::rep::{direct_sum_or_zero, projective, Rep, RepMorphism};

pub const DEFAULT_NODE_CAP: usize = 10_000;

struct ClassEntry {
    rep: Rep,
    label: String,
    tau: Option<Rep>,
    presentation: Option<Presentation>,
}

/// Isomorphism classes of indecomposables seen so far, with cached data.
#[derive(Default)]
pub struct IsoRegistry {
    classes: Vec<ClassEntry>,
    buckets: HashMap<Vec<usize>, Vec<usize>>,
}

impl IsoRegistry {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id of an indecomposable, registering it when new.
    pub fn classify(&mut self, alg: &BoundQuiverAlgebra, m: &Rep) -> usize {
        if let Some(ids) = self.buckets.get(m.dims()) {
            for &id in ids {
                if indecomposables_isomorphic(alg, &self.classes[id].rep, m) {
                    return id;
                }
            }
        }
        let base = loewy_diagram(alg, m);
        let mut label = base.clone();
        let mut primes = 0;
        while self.classes.iter().any(|c| c.label == label) {
            primes += 1;
            label = format!("{base}{}", "'".repeat(primes));
        }
        let id = self.classes.len();
        self.classes.push(ClassEntry { rep: m.clone(), label, tau: None, presentation: None });
        self.buckets.entry(m.dims().to_vec()).or_default().push(id);
        id
    }

    pub fn rep(&self, id: usize) -> &Rep {
        &self.classes[id].rep
    }

    pub fn label(&self, id: usize) -> &str {
        &self.classes[id].label
    }

    fn tau(&mut self, alg: &BoundQuiverAlgebra, id: usize) -> Rep {
        if self.classes[id].tau.is_none() {
            let t = tau(alg, &self.classes[id].rep);
            self.classes[id].tau = Some(t);
        }
        self.classes[id].tau.clone().unwrap()
    }

    fn presentation(&mut self, alg: &BoundQuiverAlgebra, id: usize) -> Presentation {
        if self.classes[id].presentation.is_none() {
            let p = min_presentation(alg, &self.classes[id].rep);
            self.classes[id].presentation = Some(p);
        }
        self.classes[id].presentation.clone().unwrap()
    }
}

/// A basic pair `(M, P)`: indecomposable summands of `M` (pairwise
/// non-isomorphic, as class representatives) and the support vertices of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub summands: Vec<Rep>,
    pub support: Vec<usize>,
}

impl Pair {
    pub fn module(&self, alg: &BoundQuiverAlgebra) -> Rep {
        direct_sum_or_zero(alg, &self.summands)
    }

    pub fn size(&self) -> usize {
        self.summands.len() + self.support.len()
    }

    pub fn without(&self, k: usize) -> Pair {
        let mut summands = self.summands.clone();
        summands.remove(k);
        Pair { summands, support: self.support.clone() }
    }
}

/// Isomorphism-invariant key: sorted summand labels and support labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairKey {
    pub modules: Vec<String>,
    pub support: Vec<String>,
}

impl PairKey {
    /// Figure-style rendering such as `(2 ⊕ 2/1, P3)`.
    pub fn pretty(&self) -> String {
        let m = if self.modules.is_empty() { "0".to_string() } else { self.modules.join(" ⊕ ") };
        if self.support.is_empty() {
            m
        } else {
            let p: Vec<String> = self.support.iter().map(|v| format!("P{v}")).collect();
            format!("({m}, {})", p.join("⊕"))
        }
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modules.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", self.modules.join(" + "))?;
        }
        if !self.support.is_empty() {
            write!(f, " | {}", self.support.join(","))?;
        }
        Ok(())
    }
}

/// A minimal left `add U`-approximation `f: X -> U'`.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// Summand index of `U` for each block of the codomain.
    pub blocks: Vec<usize>,
    pub codomain: Rep,
    pub map: RepMorphism,
}

/// One left mutation: which summand was replaced, and by what.
#[derive(Clone, Debug)]
pub struct MutationStep {
    pub position: usize,
    pub approximation: Approximation,
    pub cokernel: Rep,
    pub result: Pair,
}

#[derive(Clone, Debug)]
pub struct HasseNode {
    pub pair: Pair,
    pub key: PairKey,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseArrow {
    pub from: usize,
    pub to: usize,
    /// Label of the mutated summand.
    pub summand: String,
}

#[derive(Clone, Debug)]
pub struct HassePoset {
    pub vertex_count: usize,
    pub nodes: Vec<HasseNode>,
    pub arrows: Vec<HasseArrow>,
    pub complete: bool,
}

impl HassePoset {
    pub fn index_of(&self, key: &PairKey) -> Option<usize> {
        self.nodes.iter().position(|n| &n.key == key)
    }

    /// Targets of arrows out of `i` (the covered, smaller pairs).
    pub fn successors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.from == i).map(|a| a.to).collect()
    }

    /// Sources of arrows into `i` (the covering, bigger pairs).
    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.to == i).map(|a| a.from).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.from == i || a.to == i).count()
    }

    pub fn is_regular(&self) -> bool {
        (0..self.nodes.len()).all(|i| self.degree(i) == self.vertex_count)
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.iter().any(|a| a.from == from && a.to == to)
    }

    pub fn keys(&self) -> BTreeSet<PairKey> {
        self.nodes.iter().map(|n| n.key.clone()).collect()
    }
}

/// Tau-tilting computations over one algebra, sharing an isomorphism registry.
pub struct TauTilt<'a> {
    pub alg: &'a BoundQuiverAlgebra,
    registry: RefCell<IsoRegistry>,
}

impl<'a> TauTilt<'a> {
    pub fn new(alg: &'a BoundQuiverAlgebra) -> Self {
        TauTilt { alg, registry: RefCell::new(IsoRegistry::default()) }
    }

    pub fn class_of(&self, m: &Rep) -> usize {
        self.registry.borrow_mut().classify(self.alg, m)
    }

    pub fn label_of(&self, m: &Rep) -> String {
        let id = self.class_of(m);
        self.registry.borrow().label(id).to_string()
    }

    pub fn class_count(&self) -> usize {
        self.registry.borrow().len()
    }

    /// Class representative of an indecomposable.
    pub fn representative(&self, m: &Rep) -> Rep {
        let id = self.class_of(m);
        self.registry.borrow().rep(id).clone()
    }

    pub fn tau_of(&self, m: &Rep) -> Rep {
        let id = self.class_of(m);
        self.registry.borrow_mut().tau(self.alg, id)
    }

    /// Basic pair from any module: decompose, drop multiplicities, use class
    /// representatives, sort by label.
    pub fn pair(&self, module: &Rep, support: &[usize]) -> Pair {
        let d = decompose(self.alg, module);
        let mut summands: Vec<(String, Rep)> =
            d.parts.iter().map(|(m, _)| (self.label_of(m), self.representative(m))).collect();
        summands.sort_by(|a, b| a.0.cmp(&b.0));
        let mut support = support.to_vec();
        support.sort_unstable();
        support.dedup();
        Pair { summands: summands.into_iter().map(|(_, m)| m).collect(), support }
    }

    pub fn from_summands(&self, summands: &[Rep], support: &[usize]) -> Pair {
        let mut labelled: Vec<(String, Rep)> =
            summands.iter().map(|m| (self.label_of(m), self.representative(m))).collect();
        labelled.sort_by(|a, b| a.0.cmp(&b.0));
        labelled.dedup_by(|a, b| a.0 == b.0);
        let mut support = support.to_vec();
        support.sort_unstable();
        support.dedup();
        Pair { summands: labelled.into_iter().map(|(_, m)| m).collect(), support }
    }

    pub fn top_pair(&self) -> Pair {
        let projs: Vec<Rep> = (0..self.alg.vertex_count()).map(|i| projective(self.alg, i)).collect();
        self.from_summands(&projs, &[])
    }

    pub fn bottom_pair(&self) -> Pair {
        Pair { summands: Vec::new(), support: (0..self.alg.vertex_count()).collect() }
    }

    pub fn key(&self, p: &Pair) -> PairKey {
        let mut modules: Vec<String> = p.summands.iter().map(|m| self.label_of(m)).collect();
        modules.sort();
        let mut support: Vec<String> =
            p.support.iter().map(|&v| self.alg.quiver().vertex_label(v).to_string()).collect();
        support.sort();
        PairKey { modules, support }
    }

    /// `Hom(M, tau M) = 0`, checked against the presentation criterion.
    pub fn is_tau_rigid(&self, m: &Rep) -> Result<bool> {
        if m.is_zero() {
            return Ok(true);
        }
        let by_hom = hom_dim(self.alg, m, &tau(self.alg, m)) == 0;
        let by_presentation = presentation_rigid(self.alg, &min_presentation(self.alg, m), m);
        if by_hom != by_presentation {
            return Err(Error::OracleDisagreement);
        }
        Ok(by_hom)
    }

    /// Tau-rigidity of a sum of indecomposables, summand by summand with
    /// cached translates and presentations.
    pub fn summands_tau_rigid(&self, summands: &[Rep]) -> Result<bool> {
        let ids: Vec<usize> = summands.iter().map(|m| self.class_of(m)).collect();
        let mut rigid = true;
        for &j in &ids {
            let (tj, pj) = {
                let mut reg = self.registry.borrow_mut();
                (reg.tau(self.alg, j), reg.presentation(self.alg, j))
            };
            for m in summands {
                let by_hom = tj.is_zero() || hom_dim(self.alg, m, &tj) == 0;
                let by_presentation = presentation_rigid(self.alg, &pj, m);
                if by_hom != by_presentation {
                    return Err(Error::OracleDisagreement);
                }
                rigid &= by_hom;
            }
        }
        Ok(rigid)
    }

    /// Tau-rigid module part, support condition `Hom(P, M) = 0`, and
    /// `|M| + |P| = n`.
    pub fn is_stt_pair(&self, p: &Pair) -> Result<bool> {
        if p.size() != self.alg.vertex_count() {
            return Ok(false);
        }
        self.is_tau_rigid_pair(p)
    }

    /// Tau-rigid pair without the counting condition.
    pub fn is_tau_rigid_pair(&self, p: &Pair) -> Result<bool> {
        let labels: BTreeSet<String> = p.summands.iter().map(|m| self.label_of(m)).collect();
        if labels.len() != p.summands.len() {
            return Ok(false);
        }
        if p.support.iter().any(|&v| p.summands.iter().any(|m| m.dim_at(v) != 0)) {
            return Ok(false);
        }
        self.summands_tau_rigid(&p.summands)
    }

    /// `p <= q` iff every summand of `p` lies in `Fac(q)`.
    pub fn leq(&self, p: &Pair, q: &Pair) -> bool {
        let qm = q.module(self.alg);
        p.summands.iter().all(|x| fac_contains(self.alg, &qm, x))
    }

    pub fn lt(&self, p: &Pair, q: &Pair) -> bool {
        self.leq(p, q) && !self.leq(q, p)
    }

    /// Minimal left `add U`-approximation of `x`, where `u` lists pairwise
    /// non-isomorphic indecomposables. For each `U_k` the maps chosen span a
    /// complement of the radical maps `X -> U_l -> U_k` in `Hom(X, U_k)`.
    pub fn min_left_approx(&self, x: &Rep, u: &[Rep]) -> Approximation {
        let alg = self.alg;
        let homs: Vec<Vec<RepMorphism>> = u.iter().map(|uk| hom_basis(alg, x, uk)).collect();
        let mut blocks = Vec::new();
        let mut chosen: Vec<RepMorphism> = Vec::new();
        for (k, uk) in u.iter().enumerate() {
            if homs[k].is_empty() {
                continue;
            }
            let mut radical_vecs = Vec::new();
            for (l, ul) in u.iter().enumerate() {
                if homs[l].is_empty() {
                    continue;
                }
                let phis = if l == k { radical_endomorphisms(alg, uk) } else { hom_basis(alg, ul, uk) };
                for phi in &phis {
                    for h in &homs[l] {
                        radical_vecs.push(phi.compose(h).to_vec());
                    }
                }
            }
            let mut base = rank_of_vectors(&radical_vecs);
            for h in &homs[k] {
                radical_vecs.push(h.to_vec());
                let r = rank_of_vectors(&radical_vecs);
                if r > base {
                    base = r;
                    blocks.push(k);
                    chosen.push(h.clone());
                } else {
                    radical_vecs.pop();
                }
            }
        }
        let parts: Vec<Rep> = blocks.iter().map(|&k| u[k].clone()).collect();
        let codomain = direct_sum_or_zero(alg, &parts);
        let maps = (0..alg.vertex_count())
            .map(|v| {
                let mut m = Matrix::zeros(0, x.dim_at(v));
                for h in &chosen {
                    m = m.vstack(&h.maps[v]);
                }
                m
            })
            .collect();
        Approximation { blocks, codomain, map: RepMorphism { maps } }
    }

    /// Whether summand `k` can be left-mutated: `X` not in `Fac U`.
    pub fn is_left_mutable(&self, p: &Pair, k: usize) -> bool {
        let rest = p.without(k);
        !fac_contains(self.alg, &rest.module(self.alg), &p.summands[k])
    }

    pub fn left_mutation(&self, p: &Pair, k: usize) -> Result<MutationStep> {
        if k >= p.summands.len() {
            return Err(Error::InvalidPair(format!("no module summand at index {k}")));
        }
        if !self.is_left_mutable(p, k) {
            return Err(Error::NotLeftMutable);
        }
        let x = &p.summands[k];
        let rest = p.without(k);
        let approx = self.min_left_approx(x, &rest.summands);
        let (y, _) = cokernel(self.alg, &approx.codomain, &approx.map);
        let result = if y.is_zero() {
            let free: Vec<usize> = (0..self.alg.vertex_count())
                .filter(|v| !rest.support.contains(v))
                .filter(|&v| rest.summands.iter().all(|m| m.dim_at(v) == 0))
                .collect();
            if free.len() != 1 {
                return Err(Error::Count { what: "new support vertices".into(), expected: 1, found: free.len() });
            }
            let mut support = rest.support.clone();
            support.push(free[0]);
            self.from_summands(&rest.summands, &support)
        } else {
            let d = decompose(self.alg, &y);
            if d.distinct() != 1 {
                return Err(Error::MutationInvariant(format!(
                    "cokernel has {} isomorphism classes of summands",
                    d.distinct()
                )));
            }
            let mut summands = rest.summands.clone();
            summands.push(d.parts[0].0.clone());
            self.from_summands(&summands, &rest.support)
        };
        if !self.is_stt_pair(&result)? {
            return Err(Error::MutationInvariant("result is not a support tau-tilting pair".into()));
        }
        if !self.lt(&result, p) {
            return Err(Error::MutationInvariant("result is not strictly smaller".into()));
        }
        Ok(MutationStep { position: k, approximation: approx, cokernel: y, result })
    }

    /// Breadth-first search downwards from `(A, 0)` by left mutations.
    pub fn hasse(&self, cap: usize) -> Result<HassePoset> {
        let mut poset =
            HassePoset { vertex_count: self.alg.vertex_count(), nodes: Vec::new(), arrows: Vec::new(), complete: true };
        let mut index: HashMap<PairKey, usize> = HashMap::new();
        let top = self.top_pair();
        let key = self.key(&top);
        index.insert(key.clone(), 0);
        poset.nodes.push(HasseNode { pair: top, key });
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let pair = poset.nodes[i].pair.clone();
            for k in 0..pair.summands.len() {
                if !self.is_left_mutable(&pair, k) {
                    continue;
                }
                let step = self.left_mutation(&pair, k)?;
                let key = self.key(&step.result);
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        if poset.nodes.len() >= cap {
                            poset.complete = false;
                            continue;
                        }
                        let j = poset.nodes.len();
                        index.insert(key.clone(), j);
                        poset.nodes.push(HasseNode { pair: step.result, key });
                        queue.push_back(j);
                        j
                    }
                };
                let summand = self.label_of(&pair.summands[k]);
                poset.arrows.push(HasseArrow { from: i, to: j, summand });
            }
        }
        Ok(poset)
    }

    /// Completions of an almost complete pair among the nodes of a poset.
    pub fn complements(&self, poset: &HassePoset, almost: &Pair) -> Result<Vec<Pair>> {
        if !poset.complete {
            return Err(Error::Incomplete);
        }
        let base = self.key(almost);
        let found: Vec<Pair> =
            poset.nodes.iter().filter(|n| contains_key(&n.key, &base)).map(|n| n.pair.clone()).collect();
        if found.len() != 2 {
            return Err(Error::Count { what: "complements".into(), expected: 2, found: found.len() });
        }
        Ok(found)
    }

    /// The greatest node whose module part contains every summand of `u`.
    pub fn bongartz(&self, poset: &HassePoset, u: &Rep) -> Result<Pair> {
        if !poset.complete {
            return Err(Error::Incomplete);
        }
        let labels: Vec<String> = decompose(self.alg, u).modules().map(|m| self.label_of(m)).collect();
        let candidates: Vec<&HasseNode> =
            poset.nodes.iter().filter(|n| labels.iter().all(|l| n.key.modules.contains(l))).collect();
        let maxima: Vec<&HasseNode> =
            candidates.iter().filter(|n| candidates.iter().all(|m| self.leq(&m.pair, &n.pair))).copied().collect();
        if maxima.len() != 1 {
            return Err(Error::Count { what: "Bongartz maxima".into(), expected: 1, found: maxima.len() });
        }
        Ok(maxima[0].pair.clone())
    }
}

/// Whether `outer` contains every module label and support vertex of `inner`.
pub fn contains_key(outer: &PairKey, inner: &PairKey) -> bool {
    inner.modules.iter().all(|m| outer.modules.contains(m)) && inner.support.iter().all(|s| outer.support.contains(s))
}

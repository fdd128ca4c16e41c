//! One-point extensions `A = B[X]`, the restriction `R` and extension `E`
//! functors, and the maps `e` and `r` between support tau-tilting posets.

use crate::algebra::{Arrow, BoundQuiverAlgebra, Quiver};
use crate::decompose::{decompose, is_isomorphic};
use crate::error::{Error, Result};
use crate::homology::{
    ext1_dim, hom_basis, hom_dim, is_direct_summand, is_projective, max_rank_combination, min_presentation, subrep,
    tau, top_vector,
};
use crate::linalg::{Matrix, Q};
use crate::rep::{self, direct_sum_or_zero, injective, projective, simple, unit_vector, Rep, RepMorphism};
use crate::tilting::{HassePoset, Pair, TauTilt};

const ARROW_NAMES: [&str; 6] = ["g", "d", "h", "k", "l", "m"];

/// `A = B[X]` with `X = R(rad P(v))`; when `X` is projective this is the
/// classical one-point extension by `P0 = X`.
#[derive(Clone, Debug)]
pub struct OPEContext {
    pub b: BoundQuiverAlgebra,
    pub a: BoundQuiverAlgebra,
    /// The new vertex, always the last vertex of `A`.
    pub v: usize,
    /// Arrows of `A` leaving `v`, in order.
    pub new_arrows: Vec<usize>,
    /// Target of each new arrow: the summands of `P0` when projective.
    pub p0_vertices: Vec<usize>,
    /// `R(rad P(v))` over `B`.
    pub x: Rep,
    /// The element of `X` at the target of each new arrow given by that arrow.
    generators: Vec<Vec<Q>>,
    pub projective: bool,
    pub s: Rep,
    pub ptilde: Rep,
}

/// `0 -> R X -> X -> S^r -> 0` with `r = dim Hom(X, S)`.
#[derive(Clone, Debug)]
pub struct CanonicalSequence {
    pub sub: Rep,
    pub inclusion: RepMorphism,
    pub projection: RepMorphism,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndExtension {
    pub end_a: usize,
    pub end_b: usize,
    pub hom_nu: usize,
    pub corner: usize,
}

impl EndExtension {
    pub fn holds(&self) -> bool {
        self.end_a == self.end_b + self.hom_nu + 1 && self.corner == 0
    }
}

fn new_vertex_label(b: &BoundQuiverAlgebra) -> String {
    let labels = b.quiver().vertices();
    match labels.iter().map(|l| l.parse::<u64>()).collect::<std::result::Result<Vec<_>, _>>() {
        Ok(nums) => (nums.into_iter().max().unwrap_or(0) + 1).to_string(),
        Err(_) => {
            let mut k = 0;
            loop {
                let cand = if k == 0 { "v".to_string() } else { format!("v{k}") };
                if !labels.contains(&cand) {
                    return cand;
                }
                k += 1;
            }
        }
    }
}

/// Builds `B[P0]` with `P0 = sum P(i)` over the given vertices.
pub fn one_point_extension(b: &BoundQuiverAlgebra, p0_vertices: &[usize]) -> Result<OPEContext> {
    if p0_vertices.is_empty() {
        return Err(Error::Shape("P0 must have at least one summand".into()));
    }
    if let Some(&bad) = p0_vertices.iter().find(|&&i| i >= b.vertex_count()) {
        return Err(Error::UnknownVertex(bad.to_string()));
    }
    let mut vertices = b.quiver().vertices().to_vec();
    vertices.push(new_vertex_label(b));
    let v = b.vertex_count();
    let mut arrows = b.quiver().arrows().to_vec();
    let mut fresh = ARROW_NAMES.iter().map(|s| s.to_string()).chain((1..).map(|k| format!("g{k}")));
    for &t in p0_vertices {
        let name =
            fresh.find(|n| b.quiver().arrow_index(n).is_none() && vertices.iter().all(|l| format!("e{l}") != *n));
        arrows.push(Arrow { name: name.expect("infinite name supply"), source: v, target: t });
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let name = format!("{}[P0]", b.name());
    let a = BoundQuiverAlgebra::new(&name, quiver, b.relations().to_vec(), b.cap())?;
    OPEContext::from_algebras(b, &a)
}

impl OPEContext {
    /// Context for an algebra `A` whose quiver is that of `B` plus a final
    /// source vertex. Relations of `A` are taken as given.
    pub fn from_algebras(b: &BoundQuiverAlgebra, a: &BoundQuiverAlgebra) -> Result<OPEContext> {
        let nb = b.vertex_count();
        let shape =
            |msg: &str| Error::Shape(format!("{} is not a one-point extension of {}: {msg}", a.name(), b.name()));
        if a.vertex_count() != nb + 1 || a.quiver().vertices()[..nb] != *b.quiver().vertices() {
            return Err(shape("vertices"));
        }
        let nab = b.quiver().arrows().len();
        if a.quiver().arrows().len() <= nab || a.quiver().arrows()[..nab] != *b.quiver().arrows() {
            return Err(shape("arrows"));
        }
        let v = nb;
        let new_arrows: Vec<usize> = (nab..a.quiver().arrows().len()).collect();
        if new_arrows.iter().any(|&k| a.quiver().arrow(k).source != v) || a.quiver().arrows_into(v).next().is_some() {
            return Err(shape("new arrows must leave the new vertex"));
        }
        let p0_vertices: Vec<usize> = new_arrows.iter().map(|&k| a.quiver().arrow(k).target).collect();
        let ptilde = projective(a, v);
        let x = restrict_to(b, &ptilde);
        let generators = new_arrows
            .iter()
            .zip(&p0_vertices)
            .map(|(&k, &t)| {
                let paths = a.basis_between(v, t);
                let pos =
                    paths.iter().position(|&p| a.basis_path(p).arrows == [k]).ok_or_else(|| shape("zero arrow"))?;
                Ok(unit_vector(paths.len(), pos))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut counts = vec![0; nb];
        for &t in &p0_vertices {
            counts[t] += 1;
        }
        let projective = is_projective(b, &x) && top_vector(b, &x) == counts;
        let s = simple(a, v);
        Ok(OPEContext { b: b.clone(), a: a.clone(), v, new_arrows, p0_vertices, x, generators, projective, s, ptilde })
    }

    pub fn restrict(&self, m: &Rep) -> Rep {
        restrict_to(&self.b, m)
    }

    /// `E M`: the new vertex carries `Hom_B(X, M)` and each new arrow
    /// evaluates at its generator. For projective `X` this is `sum M_(x_k)`
    /// with block projections.
    pub fn extend(&self, m: &Rep) -> Rep {
        if self.projective {
            return self.extend_projective(m);
        }
        let homs = hom_basis(&self.b, &self.x, m);
        let mut dims = m.dims().to_vec();
        dims.push(homs.len());
        let mut mats = m.mats().to_vec();
        for (k, &t) in self.p0_vertices.iter().enumerate() {
            let cols: Vec<Vec<Q>> = homs.iter().map(|h| h.maps[t].mul_vec(&self.generators[k])).collect();
            mats.push(Matrix::from_columns(m.dim_at(t), &cols));
        }
        Rep::from_parts(dims, mats)
    }

    fn extend_projective(&self, m: &Rep) -> Rep {
        let widths: Vec<usize> = self.p0_vertices.iter().map(|&t| m.dim_at(t)).collect();
        let total: usize = widths.iter().sum();
        let mut dims = m.dims().to_vec();
        dims.push(total);
        let mut mats = m.mats().to_vec();
        let mut offset = 0;
        for &w in &widths {
            let mut proj = Matrix::zeros(w, total);
            proj.set_block(0, offset, &Matrix::identity(w));
            mats.push(proj);
            offset += w;
        }
        Rep::from_parts(dims, mats)
    }

    /// Extends a morphism of `B`-modules (projective case).
    pub fn extend_morphism(&self, f: &RepMorphism) -> RepMorphism {
        let blocks: Vec<&Matrix> = self.p0_vertices.iter().map(|&t| &f.maps[t]).collect();
        let mut maps = f.maps.clone();
        maps.push(Matrix::block_diag(&blocks));
        RepMorphism { maps }
    }

    /// Unit `X -> E R X`: identity on `B`, and `x -> (X_(g_k) x)_k` at `v`.
    pub fn unit(&self, x: &Rep) -> RepMorphism {
        let mut maps: Vec<Matrix> = (0..self.v).map(|i| Matrix::identity(x.dim_at(i))).collect();
        let mut at_v = Matrix::zeros(0, x.dim_at(self.v));
        for &k in &self.new_arrows {
            at_v = at_v.vstack(x.mat(k));
        }
        maps.push(at_v);
        RepMorphism { maps }
    }

    pub fn unit_check(&self, x: &Rep) -> bool {
        let erx = self.extend(&self.restrict(x));
        let delta = self.unit(x);
        debug_assert!(delta.is_morphism(&self.a, x, &erx));
        let iso = delta.is_iso();
        if self.in_s_perp(x) {
            assert!(iso, "unit is not invertible on a module in S^perp");
        }
        iso
    }

    /// `R E M = M` on the nose; the counit is the identity.
    pub fn counit_check(&self, m: &Rep) -> bool {
        let rem = self.restrict(&self.extend(m));
        rem == *m && RepMorphism::identity(m).is_morphism(&self.b, &rem, m)
    }

    pub fn hom_from_s(&self, x: &Rep) -> usize {
        hom_dim(&self.a, &self.s, x)
    }

    pub fn in_s_perp(&self, x: &Rep) -> bool {
        self.hom_from_s(x) == 0 && ext1_dim(&self.a, &self.s, x) == 0
    }

    pub fn canonical_sequence(&self, x: &Rep) -> CanonicalSequence {
        let r = x.dim_at(self.v);
        let bases: Vec<Matrix> = (0..self.a.vertex_count())
            .map(|i| if i == self.v { Matrix::zeros(r, 0) } else { Matrix::identity(x.dim_at(i)) })
            .collect();
        let (sub, inclusion) = subrep(&self.a, x, &bases);
        let maps = (0..self.a.vertex_count())
            .map(|i| if i == self.v { Matrix::identity(r) } else { Matrix::zeros(0, x.dim_at(i)) })
            .collect();
        CanonicalSequence { sub, inclusion, projection: RepMorphism { maps }, r }
    }

    /// `Y = Y' + S^r` with `Y'` in `S^perp`, for `Ext^1(S, Y) = 0`.
    pub fn split_off_s(&self, y: &Rep) -> Result<(Rep, usize)> {
        if ext1_dim(&self.a, &self.s, y) != 0 {
            return Err(Error::ExtNonzero);
        }
        let mut out = Matrix::zeros(0, y.dim_at(self.v));
        for &k in &self.new_arrows {
            out = out.vstack(y.mat(k));
        }
        let kernel = if out.rows() == 0 { Matrix::identity(y.dim_at(self.v)) } else { out.nullspace() };
        let r = kernel.cols();
        let complement = if r == 0 {
            Matrix::identity(y.dim_at(self.v))
        } else {
            let ext = kernel.hstack(&Matrix::identity(y.dim_at(self.v)));
            let picks: Vec<usize> = ext.echelon().pivots.into_iter().filter(|&p| p >= r).map(|p| p - r).collect();
            Matrix::identity(y.dim_at(self.v)).select_cols(&picks)
        };
        let bases: Vec<Matrix> = (0..self.a.vertex_count())
            .map(|i| if i == self.v { complement.clone() } else { Matrix::identity(y.dim_at(i)) })
            .collect();
        Ok((subrep(&self.a, y, &bases).0, r))
    }

    /// `nu_B P0 = sum I(x_k)`.
    pub fn nakayama_p0(&self) -> Rep {
        let parts: Vec<Rep> = self.p0_vertices.iter().map(|&t| injective(&self.b, t)).collect();
        direct_sum_or_zero(&self.b, &parts)
    }

    /// `e(M, Q) = (E M + S, Q)`.
    pub fn e_map(&self, ta: &TauTilt, p: &Pair) -> Pair {
        let mut summands: Vec<Rep> = p.summands.iter().map(|m| self.extend(m)).collect();
        summands.push(self.s.clone());
        ta.from_summands(&summands, &p.support)
    }

    /// `r(T, P) = (basic R T, P without v)`.
    pub fn r_map(&self, tb: &TauTilt, p: &Pair) -> Pair {
        let parts: Vec<Rep> = p.summands.iter().map(|m| self.restrict(m)).filter(|m| !m.is_zero()).collect();
        let module = direct_sum_or_zero(&self.b, &parts);
        let support: Vec<usize> = p.support.iter().copied().filter(|&i| i != self.v).collect();
        tb.pair(&module, &support)
    }

    pub fn end_extension_check(&self, t: &Rep) -> EndExtension {
        let et = self.extend(t);
        let whole = rep::direct_sum(&[et.clone(), self.s.clone()]);
        EndExtension {
            end_a: hom_dim(&self.a, &whole, &whole),
            end_b: hom_dim(&self.b, t, t),
            hom_nu: hom_dim(&self.b, t, &self.nakayama_p0()),
            corner: hom_dim(&self.a, &self.s, &et),
        }
    }

    /// Whether `S` is (isomorphic to) a summand of `x`.
    pub fn has_s_summand(&self, x: &Rep) -> bool {
        decompose(&self.a, x).modules().any(|m| is_isomorphic(&self.a, m, &self.s))
    }

    pub fn s_label(&self) -> String {
        self.a.quiver().vertex_label(self.v).to_string()
    }
}

fn restrict_to(b: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    let nb = b.vertex_count();
    let na = b.quiver().arrows().len();
    Rep::from_parts(m.dims()[..nb].to_vec(), m.mats()[..na].to_vec())
}

/// Results of the lemma and theorem checks on one tau-rigid `A`-module.
#[derive(Clone, Debug)]
pub struct RestrictionCheck {
    pub summands_split: bool,
    pub tau_embeds: bool,
    pub tau_embedding_proper: bool,
    pub restriction_rigid: bool,
}

impl OPEContext {
    /// For tau-rigid `T` over `A`: the minimal presentation terms of `R T`
    /// are summands of `R P_i`; `tau_B R T` embeds in `R tau_A T`; `R T` is
    /// tau-rigid.
    pub fn restriction_check(&self, tb: &TauTilt, t: &Rep) -> Result<RestrictionCheck> {
        let rt = self.restrict(t);
        let pa = min_presentation(&self.a, t);
        let pb = min_presentation(&self.b, &rt);
        let summands_split = is_direct_summand(&self.b, &pb.p0.module, &self.restrict(&pa.p0.module))
            && is_direct_summand(&self.b, &pb.p1.module, &self.restrict(&pa.p1.module));
        let tau_b = tau(&self.b, &rt);
        let r_tau_a = self.restrict(&tau(&self.a, t));
        let (tau_embeds, tau_embedding_proper) = if tau_b.is_zero() {
            (true, !r_tau_a.is_zero())
        } else {
            let homs = hom_basis(&self.b, &tau_b, &r_tau_a);
            match max_rank_combination(&homs, &tau_b, &r_tau_a) {
                Some(f) if f.is_injective() => (true, !f.is_surjective()),
                _ => (false, false),
            }
        };
        Ok(RestrictionCheck {
            summands_split,
            tau_embeds,
            tau_embedding_proper,
            restriction_rigid: tb.is_tau_rigid(&rt)?,
        })
    }
}

/// Order on the nodes of a complete poset as reachability along arrows.
pub fn reachability(poset: &HassePoset) -> Vec<Vec<bool>> {
    let n = poset.nodes.len();
    let mut below = vec![vec![false; n]; n];
    for (i, row) in below.iter_mut().enumerate() {
        row[i] = true;
    }
    for a in &poset.arrows {
        below[a.from][a.to] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if below[i][k] {
                for j in 0..n {
                    if below[k][j] {
                        below[i][j] = true;
                    }
                }
            }
        }
    }
    below
}

/// Image of `e` on node indices, and the outcome of the embedding checks.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub image: Vec<usize>,
    pub b_arrows_lifted: usize,
    pub a_arrows_between_image: usize,
    pub violations: Vec<String>,
}

impl Embedding {
    pub fn is_full(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn embedding(ctx: &OPEContext, tb: &TauTilt, ta: &TauTilt, pb: &HassePoset, pa: &HassePoset) -> Result<Embedding> {
    if !pb.complete || !pa.complete {
        return Err(Error::Incomplete);
    }
    let mut violations = Vec::new();
    let mut image = Vec::new();
    for node in &pb.nodes {
        let e = ctx.e_map(ta, &node.pair);
        match pa.index_of(&ta.key(&e)) {
            Some(j) => image.push(j),
            None => {
                violations.push(format!("e({}) = {} is not a node", node.key, ta.key(&e)));
                image.push(usize::MAX);
            }
        }
    }
    if !violations.is_empty() {
        return Ok(Embedding { image, b_arrows_lifted: 0, a_arrows_between_image: 0, violations });
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != image.len() {
        violations.push("e is not injective on nodes".into());
    }
    let (ob, oa) = (reachability(pb), reachability(pa));
    for i in 0..pb.nodes.len() {
        for j in 0..pb.nodes.len() {
            if ob[i][j] && !oa[image[i]][image[j]] {
                violations.push(format!("e does not preserve {} >= {}", pb.nodes[i].key, pb.nodes[j].key));
            }
        }
    }
    let mut lifted = 0;
    for arr in &pb.arrows {
        if pa.has_arrow(image[arr.from], image[arr.to]) {
            lifted += 1;
        } else {
            violations.push(format!("arrow {} -> {} has no image", pb.nodes[arr.from].key, pb.nodes[arr.to].key));
        }
    }
    let mut between = 0;
    for arr in &pa.arrows {
        let (Some(i), Some(j)) = (image.iter().position(|&x| x == arr.from), image.iter().position(|&x| x == arr.to))
        else {
            continue;
        };
        between += 1;
        if !pb.has_arrow(i, j) {
            violations.push(format!("arrow {} -> {} is not lifted", pa.nodes[arr.from].key, pa.nodes[arr.to].key));
        }
    }
    let r_index: Vec<Option<usize>> = pa.nodes.iter().map(|n| pb.index_of(&tb.key(&ctx.r_map(tb, &n.pair)))).collect();
    for (i, ri) in r_index.iter().enumerate() {
        let Some(ri) = *ri else {
            violations.push(format!("r({}) is not a node", pa.nodes[i].key));
            continue;
        };
        for (j, rj) in r_index.iter().enumerate() {
            if let Some(rj) = *rj {
                if oa[i][j] && !ob[ri][rj] {
                    violations.push(format!("r does not preserve {} >= {}", pa.nodes[i].key, pa.nodes[j].key));
                }
            }
        }
    }
    Ok(Embedding { image, b_arrows_lifted: lifted, a_arrows_between_image: between, violations })
}

/// Neighbourhood of one image node and whether the boundary theorems hold.
#[derive(Clone, Debug)]
pub struct BoundaryCase {
    pub node: usize,
    pub hom_em_s: usize,
    pub successors_outside: Vec<usize>,
    pub predecessors_outside: Vec<usize>,
    pub holds: bool,
}

/// Checks, at every image node `e(M, Q)`: if `Hom(E M, S) != 0` all
/// successors lie in the image and exactly one predecessor does not; if it
/// is zero, exactly one successor leaves the image and the number of
/// predecessors outside the image is not one.
pub fn boundary(ctx: &OPEContext, ta: &TauTilt, pa: &HassePoset, image: &[usize]) -> Vec<BoundaryCase> {
    let s_label = ta.label_of(&ctx.s);
    let in_image = |i: usize| pa.nodes[i].key.modules.contains(&s_label);
    let mut cases = Vec::new();
    for &node in image {
        let summands: Vec<Rep> =
            pa.nodes[node].pair.summands.iter().filter(|m| ta.label_of(m) != s_label).cloned().collect();
        let em = direct_sum_or_zero(&ctx.a, &summands);
        let hom_em_s = hom_dim(&ctx.a, &em, &ctx.s);
        let successors_outside: Vec<usize> = pa.successors(node).into_iter().filter(|&j| !in_image(j)).collect();
        let predecessors_outside: Vec<usize> = pa.predecessors(node).into_iter().filter(|&j| !in_image(j)).collect();
        let holds = if hom_em_s != 0 {
            successors_outside.is_empty() && predecessors_outside.len() == 1
        } else {
            successors_outside.len() == 1 && predecessors_outside.len() != 1
        };
        cases.push(BoundaryCase { node, hom_em_s, successors_outside, predecessors_outside, holds });
    }
    cases
}

/// Pairs over `B` whose naive extension is not tau-rigid, and pairs over `A`
/// whose restriction is not tau-rigid.
#[derive(Clone, Debug, Default)]
pub struct Witnesses {
    pub extension: Vec<String>,
    pub restriction: Vec<String>,
}

pub fn nonprojective_witnesses(
    ctx: &OPEContext,
    tb: &TauTilt,
    ta: &TauTilt,
    pb: &HassePoset,
    pa: &HassePoset,
) -> Result<Witnesses> {
    let mut w = Witnesses::default();
    for node in &pb.nodes {
        let mut parts: Vec<Rep> = node.pair.summands.iter().map(|m| ctx.extend(m)).collect();
        parts.push(ctx.s.clone());
        let module = direct_sum_or_zero(&ctx.a, &parts);
        if !ta.is_tau_rigid(&module)? {
            w.extension.push(format!("{} extends to {}", node.key, ta.key(&ta.pair(&module, &node.pair.support))));
        }
    }
    for node in &pa.nodes {
        let parts: Vec<Rep> = node.pair.summands.iter().map(|m| ctx.restrict(m)).collect();
        let module = direct_sum_or_zero(&ctx.b, &parts);
        if !tb.is_tau_rigid(&module)? {
            let support: Vec<usize> = node.pair.support.iter().copied().filter(|&i| i != ctx.v).collect();
            w.restriction.push(format!("{} restricts to {}", node.key, tb.key(&tb.pair(&module, &support))));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homology::loewy_diagram;
    use crate::rep::uniserial;

    fn walk(alg: &BoundQuiverAlgebra, w: &[&str]) -> Rep {
        uniserial(alg, &alg.walk(w).unwrap()).unwrap()
    }

    #[test]
    fn builds_a1b_from_b1b() {
        let ctx = one_point_extension(&fixtures::b1b(), &[1]).unwrap();
        let a1b = fixtures::a1b();
        assert_eq!(ctx.a.dim(), a1b.dim());
        assert_eq!(ctx.a.quiver().arrows().last().unwrap().name, "g");
        assert_eq!(ctx.a.relations().len(), 1);
        assert!(ctx.projective);
        assert_eq!(ctx.s_label(), "3");
    }

    #[test]
    fn multiplicity_two() {
        let b = fixtures::b1b();
        let ctx = one_point_extension(&b, &[1, 1]).unwrap();
        assert_eq!(ctx.a.dim(), 5 + 1 + 4);
        let (rad, _) = crate::homology::radical(&ctx.a, &ctx.ptilde);
        assert_eq!(rad.dims(), &[2, 2, 0]);
    }

    #[test]
    fn restrict_and_extend_on_a1a() {
        let ctx = OPEContext::from_algebras(&fixtures::b1a(), &fixtures::a1a()).unwrap();
        let m = walk(&ctx.a, &["3", "2", "1"]);
        let rm = ctx.restrict(&m);
        assert_eq!(loewy_diagram(&ctx.b, &rm), "2/1");
        assert_eq!(loewy_diagram(&ctx.b, &ctx.restrict(&tau(&ctx.a, &m))), "2/1/2");
        assert!(ctx.restrict(&ctx.s).is_zero());
    }

    #[test]
    fn extend_two_one_is_three_two_one() {
        let ctx = OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b()).unwrap();
        let m = walk(&ctx.b, &["2", "1"]);
        let em = ctx.extend(&m);
        assert!(is_isomorphic(&ctx.a, &em, &walk(&ctx.a, &["3", "2", "1"])));
        assert!(ctx.in_s_perp(&em));
        assert!(ctx.counit_check(&m));
        assert!(ctx.unit_check(&em));
        assert!(!ctx.unit_check(&ctx.s));
        assert!(ctx.extend(&Rep::zero(&ctx.b)).is_zero());
    }

    #[test]
    fn general_extension_matches_projective_formula() {
        let ctx = OPEContext::from_algebras(&fixtures::b2(), &fixtures::a2()).unwrap();
        let m = walk(&ctx.b, &["4", "3", "2"]);
        let homs = hom_basis(&ctx.b, &ctx.x, &m).len();
        assert_eq!(ctx.extend(&m).dim_at(ctx.v), homs);
    }

    #[test]
    fn a3_is_not_projective() {
        let ctx = OPEContext::from_algebras(&fixtures::b2(), &fixtures::a3()).unwrap();
        assert!(!ctx.projective);
        assert_eq!(loewy_diagram(&ctx.b, &ctx.x), "3/2");
    }

    #[test]
    fn split_and_canonical_sequence() {
        let ctx = OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b()).unwrap();
        let s3 = rep::power(&ctx.a, &ctx.s, 3);
        let (rest, r) = ctx.split_off_s(&s3).unwrap();
        assert!(rest.is_zero());
        assert_eq!(r, 3);
        let em = ctx.extend(&projective(&ctx.b, 0));
        let (rest, r) = ctx.split_off_s(&rep::direct_sum(&[em.clone(), ctx.s.clone()])).unwrap();
        assert_eq!(r, 1);
        assert!(is_isomorphic(&ctx.a, &rest, &em));
        assert_eq!(ctx.canonical_sequence(&ctx.ptilde).r, 1);
        assert_eq!(hom_dim(&ctx.a, &ctx.ptilde, &ctx.s), 1);
    }

    #[test]
    fn nakayama_of_p0() {
        let ctx = OPEContext::from_algebras(&fixtures::b1b(), &fixtures::a1b()).unwrap();
        assert_eq!(ctx.nakayama_p0(), injective(&ctx.b, 1));
    }
}

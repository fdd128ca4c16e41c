//! Hom spaces, kernels and cokernels, projective presentations, the
//! transpose, the Auslander-Reiten translate and `Ext^1`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, Matrix, Q};
use crate::rep::{self, direct_sum_or_zero, dualize, morphism_from_projective, projective, Rep, RepMorphism};

/// Basis of `Hom(M, N)`: solutions of `f_t M_a = N_a f_s` for every arrow.
pub fn hom_basis(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> Vec<RepMorphism> {
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += m.dim_at(v) * n.dim_at(v);
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim_at(v) + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (k, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.mat(k), n.mat(k));
        for r in 0..n.dim_at(t) {
            for c in 0..m.dim_at(s) {
                let mut row = vec![Q::zero(); unknowns];
                let mut nonzero = false;
                for j in 0..m.dim_at(t) {
                    let x = &ma[(j, c)];
                    if !x.is_zero() {
                        row[var(t, r, j)] += x;
                        nonzero = true;
                    }
                }
                for j in 0..n.dim_at(s) {
                    let x = &na[(r, j)];
                    if !x.is_zero() {
                        row[var(s, j, c)] -= x;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let null = if rows.is_empty() { Matrix::identity(unknowns) } else { Matrix::from_rows(rows).nullspace() };
    (0..null.cols())
        .map(|j| {
            let maps = (0..nv)
                .map(|v| {
                    let mut f = Matrix::zeros(n.dim_at(v), m.dim_at(v));
                    for r in 0..n.dim_at(v) {
                        for c in 0..m.dim_at(v) {
                            f[(r, c)] = null[(var(v, r, c), j)].clone();
                        }
                    }
                    f
                })
                .collect();
            RepMorphism { maps }
        })
        .collect()
}

pub fn hom_dim(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> usize {
    hom_basis(alg, m, n).len()
}

/// Dimension of the span of a family of morphisms with common endpoints.
pub fn span_dim(maps: &[RepMorphism]) -> usize {
    let vecs: Vec<Vec<Q>> = maps.iter().map(RepMorphism::to_vec).filter(|v| !v.is_empty()).collect();
    rank_of_vectors(&vecs)
}

/// Submodule spanned per vertex by the given columns (an invariant subspace).
pub fn subrep(alg: &BoundQuiverAlgebra, m: &Rep, bases: &[Matrix]) -> (Rep, RepMorphism) {
    let lefts: Vec<Matrix> = bases.iter().map(left_inverse_full_column).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| lefts[a.target].mul(&m.mat(k).mul(&bases[a.source])))
        .collect();
    (Rep::from_parts(dims, mats), RepMorphism { maps: bases.to_vec() })
}

/// Quotient of `m` by the invariant subspaces spanned by the given columns.
pub fn quotient(alg: &BoundQuiverAlgebra, m: &Rep, sub: &[Matrix]) -> (Rep, RepMorphism) {
    let projs: Vec<Matrix> = sub
        .iter()
        .enumerate()
        .map(|(v, b)| if b.cols() == 0 { Matrix::identity(m.dim_at(v)) } else { b.left_nullspace() })
        .collect();
    let rights: Vec<Matrix> = projs.iter().map(|p| left_inverse_full_column(&p.transpose()).transpose()).collect();
    let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| projs[a.target].mul(m.mat(k)).mul(&rights[a.source]))
        .collect();
    (Rep::from_parts(dims, mats), RepMorphism { maps: projs })
}

/// Left inverse of a full-column-rank matrix, read off independent rows.
fn left_inverse_full_column(b: &Matrix) -> Matrix {
    if b.cols() == 0 {
        return Matrix::zeros(0, b.rows());
    }
    let rows = b.transpose().echelon().pivots;
    assert_eq!(rows.len(), b.cols(), "basis must have full column rank");
    let square = b.select_rows(&rows);
    let inv = square.inverse().expect("independent rows");
    let mut out = Matrix::zeros(b.cols(), b.rows());
    for (j, &r) in rows.iter().enumerate() {
        for i in 0..b.cols() {
            out[(i, r)] = inv[(i, j)].clone();
        }
    }
    out
}

pub fn kernel(alg: &BoundQuiverAlgebra, src: &Rep, f: &RepMorphism) -> (Rep, RepMorphism) {
    let bases: Vec<Matrix> = f.maps.iter().map(Matrix::nullspace).collect();
    let bases = bases
        .into_iter()
        .enumerate()
        .map(|(v, b)| if b.cols() == 0 { Matrix::zeros(src.dim_at(v), 0) } else { b })
        .collect::<Vec<_>>();
    subrep(alg, src, &bases)
}

pub fn image(alg: &BoundQuiverAlgebra, tgt: &Rep, f: &RepMorphism) -> (Rep, RepMorphism) {
    let bases: Vec<Matrix> = f
        .maps
        .iter()
        .enumerate()
        .map(|(v, m)| if m.cols() == 0 { Matrix::zeros(tgt.dim_at(v), 0) } else { m.column_basis() })
        .collect();
    subrep(alg, tgt, &bases)
}

pub fn cokernel(alg: &BoundQuiverAlgebra, tgt: &Rep, f: &RepMorphism) -> (Rep, RepMorphism) {
    let bases: Vec<Matrix> = f
        .maps
        .iter()
        .enumerate()
        .map(|(v, m)| if m.cols() == 0 { Matrix::zeros(tgt.dim_at(v), 0) } else { m.column_basis() })
        .collect();
    quotient(alg, tgt, &bases)
}

/// Per-vertex column bases of `rad M`, the sum of images of incoming arrows.
fn radical_bases(alg: &BoundQuiverAlgebra, m: &Rep) -> Vec<Matrix> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut acc = Matrix::zeros(m.dim_at(v), 0);
            for a in alg.quiver().arrows_into(v) {
                acc = acc.hstack(m.mat(a));
            }
            if acc.cols() == 0 {
                acc
            } else {
                acc.column_basis()
            }
        })
        .collect()
}

pub fn radical(alg: &BoundQuiverAlgebra, m: &Rep) -> (Rep, RepMorphism) {
    subrep(alg, m, &radical_bases(alg, m))
}

pub fn top(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    quotient(alg, m, &radical_bases(alg, m)).0
}

/// Per-vertex multiplicities of simples in the top.
pub fn top_vector(alg: &BoundQuiverAlgebra, m: &Rep) -> Vec<usize> {
    radical_bases(alg, m).iter().enumerate().map(|(v, b)| m.dim_at(v) - b.cols()).collect()
}

/// Per-vertex multiplicities of simples in the socle.
pub fn socle_vector(alg: &BoundQuiverAlgebra, m: &Rep) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut stacked = Matrix::zeros(0, m.dim_at(v));
            for a in alg.quiver().arrows_from(v) {
                stacked = stacked.vstack(m.mat(a));
            }
            m.dim_at(v) - stacked.rank()
        })
        .collect()
}

/// A sum of indecomposable projectives `P(v_1) + ... + P(v_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSum {
    pub vertices: Vec<usize>,
    pub module: Rep,
}

impl ProjectiveSum {
    pub fn new(alg: &BoundQuiverAlgebra, vertices: Vec<usize>) -> Self {
        let parts: Vec<Rep> = vertices.iter().map(|&v| projective(alg, v)).collect();
        let module = direct_sum_or_zero(alg, &parts);
        ProjectiveSum { vertices, module }
    }

    /// Position of the generator of summand `k` inside the space at its vertex.
    pub fn generator(&self, alg: &BoundQuiverAlgebra, k: usize) -> usize {
        let v = self.vertices[k];
        let before: usize = self.vertices[..k].iter().map(|&u| alg.basis_between(u, v).len()).sum();
        let trivial = crate::algebra::PathWord::trivial(v);
        let within = alg
            .basis_between(v, v)
            .iter()
            .position(|&b| *alg.basis_path(b) == trivial)
            .expect("trivial path is a basis element");
        before + within
    }

    /// Offset of summand `k` inside the space at vertex `j`.
    pub fn block_offset(&self, alg: &BoundQuiverAlgebra, k: usize, j: usize) -> usize {
        self.vertices[..k].iter().map(|&u| alg.basis_between(u, j).len()).sum()
    }

    /// Morphism to `target` sending generator `k` to `images[k]`.
    pub fn morphism_to(&self, alg: &BoundQuiverAlgebra, target: &Rep, images: &[Vec<Q>]) -> RepMorphism {
        let nv = alg.vertex_count();
        let mut maps: Vec<Matrix> = (0..nv).map(|_| Matrix::zeros(target.dim_at(0), 0)).collect();
        for (j, slot) in maps.iter_mut().enumerate() {
            *slot = Matrix::zeros(target.dim_at(j), 0);
        }
        for (k, &v) in self.vertices.iter().enumerate() {
            let f = morphism_from_projective(alg, v, target, &images[k]);
            for (j, slot) in maps.iter_mut().enumerate() {
                *slot = slot.hstack(&f.maps[j]);
            }
        }
        RepMorphism { maps }
    }

    /// Basis of `Hom(P, N)`: each generator sent to a unit vector.
    pub fn hom_basis_to(&self, alg: &BoundQuiverAlgebra, target: &Rep) -> Vec<RepMorphism> {
        let mut out = Vec::new();
        for (k, &v) in self.vertices.iter().enumerate() {
            for i in 0..target.dim_at(v) {
                let images: Vec<Vec<Q>> =
                    self.vertices
                        .iter()
                        .enumerate()
                        .map(|(l, &u)| {
                            if l == k {
                                rep::unit_vector(target.dim_at(u), i)
                            } else {
                                vec![Q::zero(); target.dim_at(u)]
                            }
                        })
                        .collect();
                out.push(self.morphism_to(alg, target, &images));
            }
        }
        out
    }
}

/// Projective cover `P -> M`, generators chosen as unit vectors complementing
/// the radical at each vertex.
pub fn projective_cover(alg: &BoundQuiverAlgebra, m: &Rep) -> (ProjectiveSum, RepMorphism) {
    let rad = radical_bases(alg, m);
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for (v, basis) in rad.iter().enumerate() {
        let d = m.dim_at(v);
        let ext = basis.hstack(&Matrix::identity(d));
        let pivots = ext.echelon().pivots;
        for p in pivots.into_iter().filter(|&p| p >= basis.cols()) {
            vertices.push(v);
            images.push(rep::unit_vector(d, p - basis.cols()));
        }
    }
    let p = ProjectiveSum::new(alg, vertices);
    let map = p.morphism_to(alg, m, &images);
    (p, map)
}

/// Minimal projective presentation `P1 -> P0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    /// `P1 -> P0`
    pub d1: RepMorphism,
    /// `P0 -> M`
    pub d0: RepMorphism,
}

pub fn min_presentation(alg: &BoundQuiverAlgebra, m: &Rep) -> Presentation {
    let (p0, d0) = projective_cover(alg, m);
    let (k, incl) = kernel(alg, &p0.module, &d0);
    let (p1, cover_k) = projective_cover(alg, &k);
    let d1 = incl.compose(&cover_k);
    Presentation { p1, p0, d1, d0 }
}

pub fn is_projective(alg: &BoundQuiverAlgebra, m: &Rep) -> bool {
    let (p0, _) = projective_cover(alg, m);
    p0.module.total_dim() == m.total_dim()
}

/// Transpose `Tr M`, a module over the opposite algebra.
///
/// The presentation map is read in path coordinates: the component
/// `P(i_s) -> P(j_t)` is an element of `e_(j_t) A e_(i_s)`. Applying
/// `Hom(-, A)` reverses each path and transposes the block matrix.
pub fn transpose(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    let op = alg.opposite();
    let pres = min_presentation(alg, m);
    if pres.p1.vertices.is_empty() || pres.p0.vertices.is_empty() {
        return Rep::zero(op);
    }
    let source = ProjectiveSum::new(op, pres.p0.vertices.clone());
    let target = ProjectiveSum::new(op, pres.p1.vertices.clone());
    let mut images = Vec::new();
    for &jt in pres.p0.vertices.iter() {
        images.push(vec![Q::zero(); target.module.dim_at(jt)]);
    }
    for (s, &is) in pres.p1.vertices.iter().enumerate() {
        let gen = pres.p1.generator(alg, s);
        let col = pres.d1.maps[is].column(gen);
        for (t, &jt) in pres.p0.vertices.iter().enumerate() {
            let paths = alg.basis_between(jt, is);
            let off = pres.p0.block_offset(alg, t, is);
            // element of e_(jt) A e_(is) reversed: an op-path from is to jt
            let op_paths = op.basis_between(is, jt);
            let tgt_off = target.block_offset(op, s, jt);
            for (k, &b) in paths.iter().enumerate() {
                let c = &col[off + k];
                if c.is_zero() {
                    continue;
                }
                let rev = alg.basis_path(b).reversed();
                for (ob, oc) in op.normal_form(&rev) {
                    let pos = op_paths.iter().position(|&x| x == ob).expect("op basis path");
                    images[t][tgt_off + pos] += c * &oc;
                }
            }
        }
    }
    let dual_map = source.morphism_to(op, &target.module, &images);
    cokernel(op, &target.module, &dual_map).0
}

/// `tau M = D Tr M`.
pub fn tau(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    dualize(&transpose(alg, m))
}

/// `tau^- M = Tr D M`.
pub fn tau_inverse(alg: &BoundQuiverAlgebra, m: &Rep) -> Rep {
    transpose(alg.opposite(), &dualize(m))
}

/// Injective envelope `M -> I`, dual to the projective cover of `DM`.
pub fn injective_envelope(alg: &BoundQuiverAlgebra, m: &Rep) -> (Rep, RepMorphism) {
    let (p, cover) = projective_cover(alg.opposite(), &dualize(m));
    (dualize(&p.module), cover.dual())
}

/// `dim Ext^1(M, N) = dim Hom(Omega M, N) - rank(Hom(P0, N) -> Hom(Omega M, N))`.
pub fn ext1_dim(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let (p0, cover) = projective_cover(alg, m);
    let (omega, incl) = kernel(alg, &p0.module, &cover);
    if omega.is_zero() {
        return 0;
    }
    let total = hom_dim(alg, &omega, n);
    let restricted: Vec<RepMorphism> = p0.hom_basis_to(alg, n).iter().map(|h| h.compose(&incl)).collect();
    total - span_dim(&restricted)
}

/// Dimensions of the projectively and injectively stable Hom spaces.
pub fn stable_hom_dims(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> (usize, usize) {
    let total = hom_dim(alg, m, n);
    if total == 0 {
        return (0, 0);
    }
    let (pn, cover) = projective_cover(alg, n);
    let through_proj: Vec<RepMorphism> = hom_basis(alg, m, &pn.module).iter().map(|h| cover.compose(h)).collect();
    let (im, env) = injective_envelope(alg, m);
    let through_inj: Vec<RepMorphism> = hom_basis(alg, &im, n).iter().map(|h| h.compose(&env)).collect();
    (total - span_dim(&through_proj), total - span_dim(&through_inj))
}

/// Whether `Hom(p1, M)` is onto: the presentation criterion for tau-rigidity.
pub fn presentation_rigid(alg: &BoundQuiverAlgebra, pres: &Presentation, m: &Rep) -> bool {
    let target_dim: usize = pres.p1.vertices.iter().map(|&v| m.dim_at(v)).sum();
    if target_dim == 0 {
        return true;
    }
    let pulled: Vec<RepMorphism> = pres.p0.hom_basis_to(alg, m).iter().map(|h| h.compose(&pres.d1)).collect();
    span_dim(&pulled) == target_dim
}

/// Whether the evaluation map `U^(dim Hom(U, X)) -> X` is onto.
pub fn fac_contains(alg: &BoundQuiverAlgebra, u: &Rep, x: &Rep) -> bool {
    if x.is_zero() {
        return true;
    }
    let homs = hom_basis(alg, u, x);
    (0..alg.vertex_count()).all(|v| {
        if x.dim_at(v) == 0 {
            return true;
        }
        let mut stacked = Matrix::zeros(x.dim_at(v), 0);
        for h in &homs {
            stacked = stacked.hstack(&h.maps[v]);
        }
        stacked.rank() == x.dim_at(v)
    })
}

/// Loewy layers (radical series) as per-vertex multiplicity vectors, top first.
pub fn radical_layers(alg: &BoundQuiverAlgebra, m: &Rep) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        layers.push(top_vector(alg, &cur));
        let (rad, _) = radical(alg, &cur);
        if rad.total_dim() == cur.total_dim() {
            break;
        }
        cur = rad;
    }
    layers
}

/// Composition diagram such as `2/3 1/2`: radical layers top to bottom.
pub fn loewy_diagram(alg: &BoundQuiverAlgebra, m: &Rep) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    radical_layers(alg, m)
        .iter()
        .map(|layer| {
            let mut names = Vec::new();
            for (v, &c) in layer.iter().enumerate() {
                for _ in 0..c {
                    names.push(alg.quiver().vertex_label(v).to_string());
                }
            }
            names.join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Uniserial iff every radical layer is simple.
pub fn is_uniserial(alg: &BoundQuiverAlgebra, m: &Rep) -> bool {
    !m.is_zero() && radical_layers(alg, m).iter().all(|l| l.iter().sum::<usize>() == 1)
}

/// A morphism of maximal rank in the span of `basis`, found at integer
/// coefficient points of height `h` drawn from a fixed-seed stream, with `h`
/// growing until the rank is full or has not grown for two rounds.
pub fn max_rank_combination(basis: &[RepMorphism], src: &Rep, tgt: &Rep) -> Option<RepMorphism> {
    if basis.is_empty() {
        return None;
    }
    let ceiling: usize = src.dims().iter().zip(tgt.dims()).map(|(a, b)| (*a).min(*b)).sum();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(usize, RepMorphism)> = None;
    let mut stale = 0;
    let mut height = 8i64;
    while height <= 1 << 20 {
        let mut improved = false;
        for _ in 0..2 {
            let coeffs: Vec<Q> =
                basis.iter().map(|_| Q::from_integer(rng.gen_range(-height..=height).into())).collect();
            let f = RepMorphism::combination(basis, &coeffs, src, tgt);
            let r = f.rank();
            if best.as_ref().is_none_or(|(b, _)| r > *b) {
                best = Some((r, f));
                improved = true;
            }
            if best.as_ref().is_some_and(|(b, _)| *b == ceiling) {
                return best.map(|(_, f)| f);
            }
        }
        stale = if improved { 0 } else { stale + 1 };
        if stale == 2 {
            break;
        }
        height *= 4;
    }
    best.map(|(_, f)| f)
}

/// Whether `Q` is a direct summand of `P`: a split mono `s` with `t s = id`.
pub fn is_direct_summand(alg: &BoundQuiverAlgebra, small: &Rep, big: &Rep) -> bool {
    if small.is_zero() {
        return true;
    }
    let s_basis = hom_basis(alg, small, big);
    let t_basis = hom_basis(alg, big, small);
    if s_basis.is_empty() || t_basis.is_empty() {
        return false;
    }
    let id = RepMorphism::identity(small).to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..3).any(|_| {
        let coeffs: Vec<Q> =
            s_basis.iter().map(|_| Q::from_integer(rng.gen_range(-(1i64 << 20)..=1 << 20).into())).collect();
        let s = RepMorphism::combination(&s_basis, &coeffs, small, big);
        let products: Vec<Vec<Q>> = t_basis.iter().map(|t| t.compose(&s).to_vec()).collect();
        Matrix::from_columns(id.len(), &products).solve_vec(&id).is_some()
    })
}

pub fn require_nonzero(m: &Rep) -> Result<()> {
    if m.is_zero() {
        Err(Error::Shape("zero module has no projective cover".into()))
    } else {
        Ok(())
    }
}

//! Representations of bound quivers and their morphisms.

use num_traits::{One, Zero};

use crate::algebra::{BoundQuiverAlgebra, PathWord};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};

/// A module as a representation: one space per vertex, one matrix per arrow.
///
/// The matrix of `a: i -> j` has `dims[j]` rows and `dims[i]` columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

/// Per-vertex linear maps; the endpoints travel alongside as context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    pub maps: Vec<Matrix>,
}

impl Rep {
    pub fn new(alg: &BoundQuiverAlgebra, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::Shape(format!("{} dims for {} vertices", dims.len(), q.vertex_count())));
        }
        if mats.len() != q.arrows().len() {
            return Err(Error::Shape(format!("{} matrices for {} arrows", mats.len(), q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&mats) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Shape(format!(
                    "arrow {} needs {}x{}, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Rep { dims, mats })
    }

    /// Builds without validation; callers guarantee shapes.
    pub(crate) fn from_parts(dims: Vec<usize>, mats: Vec<Matrix>) -> Self {
        Rep { dims, mats }
    }

    pub fn zero(alg: &BoundQuiverAlgebra) -> Self {
        let q = alg.quiver();
        Rep { dims: vec![0; q.vertex_count()], mats: q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Offsets of each vertex block in the flattened total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Linear map `M_source(w) -> M_target(w)` of a path.
    pub fn path_action(&self, w: &PathWord) -> Matrix {
        let mut m = Matrix::identity(self.dims[w.source]);
        for &a in &w.arrows {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Action of a linear combination of basis paths from `i` to `j`.
    pub fn element_action(&self, alg: &BoundQuiverAlgebra, i: usize, j: usize, elem: &[(usize, Q)]) -> Matrix {
        let mut m = Matrix::zeros(self.dims[j], self.dims[i]);
        for (k, c) in elem {
            let p = alg.basis_path(*k);
            debug_assert_eq!((p.source, p.target), (i, j));
            m.add_scaled(&self.path_action(p), c);
        }
        m
    }

    /// True iff every relation of the algebra acts as zero.
    pub fn satisfies_relations(&self, alg: &BoundQuiverAlgebra) -> bool {
        alg.relations().iter().all(|r| {
            let mut acc = Matrix::zeros(self.dims[r.target()], self.dims[r.source()]);
            for (c, p) in &r.terms {
                acc.add_scaled(&self.path_action(p), c);
            }
            acc.is_zero()
        })
    }

    /// Reindexes the vertex spaces via invertible per-vertex matrices `g`:
    /// the result is isomorphic, with `g_v` as the isomorphism.
    pub fn base_change(&self, alg: &BoundQuiverAlgebra, g: &[Matrix]) -> Rep {
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| {
                let inv = g[a.source].inverse().expect("base change must be invertible");
                g[a.target].mul(m).mul(&inv)
            })
            .collect();
        Rep { dims: self.dims.clone(), mats }
    }
}

/// Validates shapes and relations.
pub fn check_rep(alg: &BoundQuiverAlgebra, m: &Rep) -> Result<bool> {
    Rep::new(alg, m.dims.clone(), m.mats.clone())?;
    Ok(m.satisfies_relations(alg))
}

impl RepMorphism {
    pub fn zero(src: &Rep, tgt: &Rep) -> Self {
        RepMorphism { maps: src.dims.iter().zip(&tgt.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(m: &Rep) -> Self {
        RepMorphism { maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &RepMorphism) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &Q) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// Commutes with every arrow action.
    pub fn is_morphism(&self, alg: &BoundQuiverAlgebra, src: &Rep, tgt: &Rep) -> bool {
        alg.quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, a)| self.maps[a.target].mul(&src.mats[k]) == tgt.mats[k].mul(&self.maps[a.source]))
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    /// Flattened coordinates, for rank computations over Hom spaces.
    pub fn to_vec(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Dual morphism `D(tgt) -> D(src)`.
    pub fn dual(&self) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Linear combination `sum c_k f_k` of morphisms sharing endpoints.
    pub fn combination(basis: &[RepMorphism], coeffs: &[Q], src: &Rep, tgt: &Rep) -> RepMorphism {
        let mut out = RepMorphism::zero(src, tgt);
        for (f, c) in basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, m) in out.maps.iter_mut().zip(&f.maps) {
                o.add_scaled(m, c);
            }
        }
        out
    }
}

/// Indecomposable projective `P(i)`: at vertex `j`, the basis paths `i -> j`.
pub fn projective(alg: &BoundQuiverAlgebra, i: usize) -> Rep {
    let n = alg.vertex_count();
    let spaces: Vec<Vec<usize>> = (0..n).map(|j| alg.basis_between(i, j)).collect();
    let dims: Vec<usize> = spaces.iter().map(Vec::len).collect();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let arrow_path = PathWord {
                source: a.source,
                target: a.target,
                arrows: vec![alg.quiver().arrow_index(&a.name).unwrap()],
            };
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            for (col, &k) in spaces[a.source].iter().enumerate() {
                let w = alg.basis_path(k).concat(&arrow_path).expect("composable");
                for (b, c) in alg.normal_form(&w) {
                    let row = spaces[a.target].iter().position(|&x| x == b).expect("basis path from i");
                    m[(row, col)] = c;
                }
            }
            m
        })
        .collect();
    Rep { dims, mats }
}

/// Indecomposable injective `I(i)`, the dual of the opposite projective.
pub fn injective(alg: &BoundQuiverAlgebra, i: usize) -> Rep {
    dualize(&projective(alg.opposite(), i))
}

pub fn simple(alg: &BoundQuiverAlgebra, i: usize) -> Rep {
    let q = alg.quiver();
    let mut dims = vec![0; q.vertex_count()];
    dims[i] = 1;
    let mats = q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    Rep { dims, mats }
}

/// Uniserial module along a walk: one basis vector per prefix, arrows shift.
pub fn uniserial(alg: &BoundQuiverAlgebra, w: &PathWord) -> Result<Rep> {
    let q = alg.quiver();
    for k in 1..=w.len() {
        let prefix = PathWord::from_arrows(q, &w.arrows[..k])?;
        if alg.normal_form(&prefix).is_empty() {
            return Err(Error::ZeroPrefix(w.display(q)));
        }
    }
    // vertex of each prefix and its position within that vertex space
    let mut vertex_of = vec![w.source];
    for &a in &w.arrows {
        vertex_of.push(q.arrow(a).target);
    }
    let mut dims = vec![0; q.vertex_count()];
    let mut slot = Vec::new();
    for &v in &vertex_of {
        slot.push(dims[v]);
        dims[v] += 1;
    }
    let mut mats: Vec<Matrix> = q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (k, &a) in w.arrows.iter().enumerate() {
        mats[a][(slot[k + 1], slot[k])] = Q::one();
    }
    let rep = Rep { dims, mats };
    if !rep.satisfies_relations(alg) {
        return Err(Error::ZeroPrefix(w.display(q)));
    }
    Ok(rep)
}

pub fn direct_sum(parts: &[Rep]) -> Rep {
    assert!(!parts.is_empty(), "direct_sum of an empty list needs the algebra; use Rep::zero");
    let n = parts[0].dims.len();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let mats = (0..parts[0].mats.len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.mats[a]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    Rep { dims, mats }
}

pub fn direct_sum_or_zero(alg: &BoundQuiverAlgebra, parts: &[Rep]) -> Rep {
    if parts.is_empty() {
        Rep::zero(alg)
    } else {
        direct_sum(parts)
    }
}

/// `M^k`.
pub fn power(alg: &BoundQuiverAlgebra, m: &Rep, k: usize) -> Rep {
    direct_sum_or_zero(alg, &vec![m.clone(); k])
}

/// Canonical inclusions and projections of a direct sum.
pub fn sum_injection(parts: &[Rep], k: usize) -> RepMorphism {
    let total = direct_sum(parts);
    let n = total.dims.len();
    let maps = (0..n)
        .map(|v| {
            let off: usize = parts[..k].iter().map(|p| p.dims[v]).sum();
            let mut m = Matrix::zeros(total.dims[v], parts[k].dims[v]);
            for i in 0..parts[k].dims[v] {
                m[(off + i, i)] = Q::one();
            }
            m
        })
        .collect();
    RepMorphism { maps }
}

pub fn sum_projection(parts: &[Rep], k: usize) -> RepMorphism {
    RepMorphism { maps: sum_injection(parts, k).maps.iter().map(Matrix::transpose).collect() }
}

/// Standard duality `Hom_k(-, k)`: a module over the opposite algebra.
pub fn dualize(m: &Rep) -> Rep {
    Rep { dims: m.dims.clone(), mats: m.mats.iter().map(Matrix::transpose).collect() }
}

/// Morphism `P(i) -> target` sending the trivial path at `i` to `v`.
pub fn morphism_from_projective(alg: &BoundQuiverAlgebra, i: usize, target: &Rep, v: &[Q]) -> RepMorphism {
    let n = alg.vertex_count();
    let maps = (0..n)
        .map(|j| {
            let paths = alg.basis_between(i, j);
            let cols: Vec<Vec<Q>> = paths.iter().map(|&k| target.path_action(alg.basis_path(k)).mul_vec(v)).collect();
            Matrix::from_columns(target.dims[j], &cols)
        })
        .collect();
    RepMorphism { maps }
}

/// Composition-factor multiplicities per vertex, i.e. the dimension vector.
pub fn dim_vector_string(alg: &BoundQuiverAlgebra, m: &Rep) -> String {
    let _ = alg;
    format!("({})", m.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
}

pub(crate) fn unit_vector(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = Q::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_of_b1b() {
        let b = fixtures::b1b();
        let p1 = projective(&b, 0);
        assert_eq!(p1.dims(), &[2, 1]);
        let p2 = projective(&b, 1);
        assert_eq!(p2.dims(), &[1, 1]);
        assert!(check_rep(&b, &p1).unwrap());
    }

    #[test]
    fn projectives_of_b1a_and_a1b() {
        let b = fixtures::b1a();
        assert_eq!(projective(&b, 1).dims(), &[1, 2]);
        let a = fixtures::a1b();
        assert_eq!(projective(&a, 2).dims(), &[1, 1, 1]);
    }

    #[test]
    fn projective_dims_sum_to_algebra_dim() {
        for alg in [
            fixtures::b1a(),
            fixtures::b1b(),
            fixtures::a1a(),
            fixtures::a1b(),
            fixtures::b2(),
            fixtures::a2(),
            fixtures::a3(),
        ] {
            let total: usize = (0..alg.vertex_count()).map(|i| projective(&alg, i).total_dim()).sum();
            assert_eq!(total, alg.dim(), "{}", alg.name());
        }
    }

    #[test]
    fn injective_of_b1a() {
        let b = fixtures::b1a();
        let i1 = injective(&b, 0);
        assert_eq!(i1.dims(), &[1, 1]);
        assert!(check_rep(&b, &i1).unwrap());
        // [2|1]: the arrow a: 2 -> 1 acts nonzero
        assert!(!i1.mat(1).is_zero());
    }

    #[test]
    fn simple_has_zero_arrows() {
        let b = fixtures::b1b();
        let s2 = simple(&b, 1);
        assert_eq!(s2.dims(), &[0, 1]);
        assert!(s2.mats().iter().all(Matrix::is_zero));
    }

    #[test]
    fn uniserial_walks() {
        let a = fixtures::a1a();
        let w = a.walk(&["3", "2", "1"]).unwrap();
        let m = uniserial(&a, &w).unwrap();
        assert_eq!(m.dims(), &[1, 1, 1]);
        let b = fixtures::b1a();
        let bad = b.walk(&["1", "2", "1"]).unwrap();
        assert!(matches!(uniserial(&b, &bad), Err(Error::ZeroPrefix(_))));
        let trivial = uniserial(&b, &PathWord::trivial(0)).unwrap();
        assert_eq!(trivial, simple(&b, 0));
    }

    #[test]
    fn forced_matrices_violate_relation() {
        let b = fixtures::b1a();
        // 1 -> 2 -> 1 with both arrows nonzero breaks b*a = 0
        let m =
            Rep::new(&b, vec![2, 1], vec![Matrix::from_i64(1, 2, &[1, 0]), Matrix::from_i64(2, 1, &[0, 1])]).unwrap();
        assert!(!check_rep(&b, &m).unwrap());
        assert!(check_rep(&b, &Rep::zero(&b)).unwrap());
        let bad_shape = Rep::from_parts(vec![1, 1], vec![Matrix::zeros(2, 2), Matrix::zeros(1, 1)]);
        assert!(check_rep(&b, &bad_shape).is_err());
    }

    #[test]
    fn dual_is_involutive() {
        let b = fixtures::b1b();
        for i in 0..2 {
            let p = projective(&b, i);
            assert_eq!(dualize(&dualize(&p)), p);
        }
        assert_eq!(dualize(&simple(&b, 0)), simple(b.opposite(), 0));
        assert_eq!(dualize(&projective(&b, 0)), injective(b.opposite(), 0));
    }
}

//! Krull-Schmidt decomposition by Fitting splitting, and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::homology::{hom_basis, subrep};
use crate::linalg::{rational_roots, Matrix, Q};
use crate::rep::{Rep, RepMorphism};

/// Indecomposable summands with multiplicities, in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub parts: Vec<(Rep, usize)>,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        self.parts.iter().map(|(_, c)| c).sum()
    }

    pub fn distinct(&self) -> usize {
        self.parts.len()
    }

    pub fn is_basic(&self) -> bool {
        self.parts.iter().all(|&(_, c)| c == 1)
    }

    pub fn modules(&self) -> impl Iterator<Item = &Rep> {
        self.parts.iter().map(|(m, _)| m)
    }
}

/// An endomorphism written as one big block-diagonal matrix on `sum M_v`.
fn total_matrix(f: &RepMorphism) -> Matrix {
    let blocks: Vec<&Matrix> = f.maps.iter().collect();
    Matrix::block_diag(&blocks)
}

fn from_total(m: &Rep, t: &Matrix) -> RepMorphism {
    let offs = m.offsets();
    let maps = (0..m.dims().len()).map(|v| t.block(offs[v], offs[v], m.dim_at(v), m.dim_at(v))).collect();
    RepMorphism { maps }
}

/// Radical of `End(M)` as the kernel of the trace form `(x, y) -> tr(xy)`.
fn radical_dim(totals: &[Matrix]) -> usize {
    let k = totals.len();
    let rows: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| totals[i].mul(&totals[j]).trace()).collect()).collect();
    k - Matrix::from_rows(rows).rank()
}

fn splits(x: &Matrix) -> bool {
    !x.is_invertible() && !x.is_nilpotent()
}

/// Try `x` and each shift `x - lambda` by a rational eigenvalue.
fn try_candidate(x: &Matrix) -> Option<Matrix> {
    if x.is_zero() {
        return None;
    }
    if splits(x) {
        return Some(x.clone());
    }
    let id = Matrix::identity(x.rows());
    for lambda in rational_roots(&x.char_poly()) {
        let shifted = x.sub(&id.scale(&lambda));
        if splits(&shifted) {
            return Some(shifted);
        }
    }
    None
}

fn find_splitter(totals: &[Matrix]) -> Option<Matrix> {
    for b in totals {
        if let Some(x) = try_candidate(b) {
            return Some(x);
        }
    }
    for a in totals {
        for b in totals {
            if let Some(x) = try_candidate(&a.mul(b)) {
                return Some(x);
            }
        }
    }
    let n = totals[0].rows();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..48 {
        let height = 1 + round / 8;
        let mut x = Matrix::zeros(n, n);
        for b in totals {
            let c: i64 = rng.gen_range(-(height as i64)..=height as i64);
            if c != 0 {
                x.add_scaled(b, &Q::from_integer(c.into()));
            }
        }
        if let Some(s) = try_candidate(&x) {
            return Some(s);
        }
        // singular elements of the left ideal generated by a nilpotent
        if x.is_nilpotent() && !x.is_zero() {
            for b in totals {
                if let Some(s) = try_candidate(&b.mul(&x)) {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// Splits `m` into indecomposables (unsorted, with repetitions).
fn split_all(alg: &BoundQuiverAlgebra, m: &Rep, out: &mut Vec<Rep>) {
    if m.is_zero() {
        return;
    }
    let ends = hom_basis(alg, m, m);
    if ends.len() <= 1 {
        out.push(m.clone());
        return;
    }
    let totals: Vec<Matrix> = ends.iter().map(total_matrix).collect();
    if ends.len() - radical_dim(&totals) == 1 {
        out.push(m.clone());
        return;
    }
    let Some(phi) = find_splitter(&totals) else {
        out.push(m.clone());
        return;
    };
    let power = from_total(m, &phi.pow(m.total_dim()));
    let kernel_bases: Vec<Matrix> = power
        .maps
        .iter()
        .enumerate()
        .map(|(v, f)| if f.cols() == 0 { Matrix::zeros(m.dim_at(v), 0) } else { f.nullspace() })
        .collect();
    let image_bases: Vec<Matrix> = power
        .maps
        .iter()
        .enumerate()
        .map(|(v, f)| if f.is_zero() || f.cols() == 0 { Matrix::zeros(m.dim_at(v), 0) } else { f.column_basis() })
        .collect();
    let (k, _) = subrep(alg, m, &kernel_bases);
    let (i, _) = subrep(alg, m, &image_bases);
    split_all(alg, &k, out);
    split_all(alg, &i, out);
}

/// Whether two indecomposables are isomorphic. Exact: `End(M)` is local and
/// the products `g f` span an ideal, which meets the units iff `M = N`.
pub fn indecomposables_isomorphic(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m == n {
        return true;
    }
    let fs = hom_basis(alg, m, n);
    if fs.is_empty() {
        return false;
    }
    if fs.iter().any(RepMorphism::is_iso) {
        return true;
    }
    let gs = hom_basis(alg, n, m);
    fs.iter().any(|f| gs.iter().any(|g| g.compose(f).is_iso()))
}

fn sort_key(m: &Rep) -> (Vec<usize>, Vec<String>) {
    let enc =
        m.mats().iter().flat_map(|a| a.entries().iter().map(crate::linalg::format_q).collect::<Vec<_>>()).collect();
    (m.dims().to_vec(), enc)
}

pub fn decompose(alg: &BoundQuiverAlgebra, m: &Rep) -> Decomposition {
    let mut pieces = Vec::new();
    split_all(alg, m, &mut pieces);
    let mut parts: Vec<(Rep, usize)> = Vec::new();
    for p in pieces {
        match parts.iter_mut().find(|(q, _)| indecomposables_isomorphic(alg, q, &p)) {
            Some((_, c)) => *c += 1,
            None => parts.push((p, 1)),
        }
    }
    parts.sort_by_key(|(m, _)| sort_key(m));
    Decomposition { parts }
}

pub fn is_indecomposable(alg: &BoundQuiverAlgebra, m: &Rep) -> bool {
    let d = decompose(alg, m);
    d.parts.len() == 1 && d.parts[0].1 == 1
}

/// Isomorphism of arbitrary modules by comparing decompositions.
pub fn is_isomorphic(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m == n {
        return true;
    }
    let (dm, dn) = (decompose(alg, m), decompose(alg, n));
    if dm.parts.len() != dn.parts.len() {
        return false;
    }
    let mut used = vec![false; dn.parts.len()];
    dm.parts.iter().all(|(x, c)| {
        let hit = dn
            .parts
            .iter()
            .enumerate()
            .find(|(j, (y, d))| !used[*j] && c == d && indecomposables_isomorphic(alg, x, y));
        match hit {
            Some((j, _)) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// Whether `End(M)/rad End(M)` is one-dimensional.
pub fn end_is_local(alg: &BoundQuiverAlgebra, m: &Rep) -> bool {
    let ends = hom_basis(alg, m, m);
    if ends.is_empty() {
        return false;
    }
    let totals: Vec<Matrix> = ends.iter().map(total_matrix).collect();
    ends.len() - radical_dim(&totals) == 1
}

/// Basis of `rad End(M)`: the endomorphisms orthogonal to all of `End(M)`
/// under the trace form.
pub fn radical_endomorphisms(alg: &BoundQuiverAlgebra, m: &Rep) -> Vec<RepMorphism> {
    let ends = hom_basis(alg, m, m);
    if ends.is_empty() {
        return Vec::new();
    }
    let totals: Vec<Matrix> = ends.iter().map(total_matrix).collect();
    let k = totals.len();
    let rows: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| totals[i].mul(&totals[j]).trace()).collect()).collect();
    let null = Matrix::from_rows(rows).nullspace();
    (0..null.cols()).map(|c| RepMorphism::combination(&ends, &null.column(c), m, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rep::{direct_sum, injective, projective, simple, uniserial};

    #[test]
    fn projective_square() {
        let b = fixtures::b1b();
        let p = projective(&b, 0);
        let d = decompose(&b, &direct_sum(&[p.clone(), p.clone()]));
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].1, 2);
        assert!(indecomposables_isomorphic(&b, &d.parts[0].0, &p));
    }

    #[test]
    fn zero_decomposes_to_nothing() {
        let b = fixtures::b1b();
        assert_eq!(decompose(&b, &Rep::zero(&b)).count(), 0);
    }

    #[test]
    fn radical_of_new_projective_splits() {
        let a = fixtures::a2();
        let (rad, _) = crate::homology::radical(&a, &projective(&a, 4));
        let (rad2, _) = crate::homology::radical(&a, &projective(&a, 2));
        assert_eq!(decompose(&a, &rad).count(), 1);
        let d = decompose(&a, &rad2);
        assert_eq!(d.count(), 2);
        assert!(d.modules().any(|m| is_isomorphic(&a, m, &simple(&a, 0))));
        assert!(d.modules().any(|m| is_isomorphic(&a, m, &simple(&a, 1))));
    }

    #[test]
    fn uniserial_matches_injective() {
        let b = fixtures::b1a();
        let m = uniserial(&b, &b.walk(&["2", "1", "2"]).unwrap()).unwrap();
        assert!(is_isomorphic(&b, &m, &injective(&b, 1)));
        assert!(is_isomorphic(&b, &m, &projective(&b, 1)));
    }

    #[test]
    fn non_isomorphic_sums() {
        let b = fixtures::b1b();
        let x = direct_sum(&[projective(&b, 0), projective(&b, 1)]);
        let y = direct_sum(&[projective(&b, 1), projective(&b, 1)]);
        assert!(!is_isomorphic(&b, &x, &y));
        assert!(is_isomorphic(&b, &direct_sum(&[x.clone(), Rep::zero(&b)]), &x));
    }

    #[test]
    fn radical_of_local_endomorphisms() {
        let b = fixtures::b1a();
        let p2 = projective(&b, 1);
        let rad = radical_endomorphisms(&b, &p2);
        assert_eq!(rad.len(), hom_basis(&b, &p2, &p2).len() - 1);
        assert!(rad.iter().all(|f| !f.is_iso()));
    }

    #[test]
    fn mixed_sum_of_three() {
        let a = fixtures::a1b();
        let parts = [projective(&a, 0), simple(&a, 2), projective(&a, 0), simple(&a, 1)];
        let d = decompose(&a, &direct_sum(&parts));
        assert_eq!(d.count(), 4);
        assert_eq!(d.distinct(), 3);
    }
}

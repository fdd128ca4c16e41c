//! Seeded random modules, base changes and morphisms for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::homology::{cokernel, hom_basis, ProjectiveSum};
use crate::linalg::{Matrix, Q};
use crate::rep::{Rep, RepMorphism};

fn small<R: Rng>(rng: &mut R, h: i64) -> Q {
    Q::from_integer(rng.gen_range(-h..=h).into())
}

/// Cokernel of a random map between sums of projectives, total dimension at
/// most `max_dim`.
pub fn random_module<R: Rng>(alg: &BoundQuiverAlgebra, rng: &mut R, max_dim: usize) -> Rep {
    let n = alg.vertex_count();
    let sizes: Vec<usize> = (0..n).map(|v| ProjectiveSum::new(alg, vec![v]).module.total_dim()).collect();
    let mut p0 = Vec::new();
    let mut total = 0;
    let target = rng.gen_range(1..=max_dim.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..4 {
        order.shuffle(rng);
        for &v in &order {
            if total + sizes[v] <= target.max(sizes[v].min(max_dim)) && rng.gen_bool(0.5) {
                p0.push(v);
                total += sizes[v];
            }
        }
    }
    if p0.is_empty() {
        let fits: Vec<usize> = (0..n).filter(|&v| sizes[v] <= max_dim).collect();
        p0.push(*fits.choose(rng).unwrap_or(&0));
    }
    p0.sort_unstable();
    let p0 = ProjectiveSum::new(alg, p0);
    let relations = rng.gen_range(0..=2);
    let p1: Vec<usize> = (0..relations).map(|_| rng.gen_range(0..n)).collect();
    let p1 = ProjectiveSum::new(alg, p1);
    let images: Vec<Vec<Q>> =
        p1.vertices.iter().map(|&v| (0..p0.module.dim_at(v)).map(|_| small(rng, 2)).collect()).collect();
    let f = p1.morphism_to(alg, &p0.module, &images);
    cokernel(alg, &p0.module, &f).0
}

/// Random invertible matrix: unit lower triangular times unit upper triangular.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = small(rng, 2);
            u[(j, i)] = small(rng, 2);
        }
    }
    l.mul(&u)
}

pub fn random_base_change<R: Rng>(alg: &BoundQuiverAlgebra, m: &Rep, rng: &mut R) -> Rep {
    let g: Vec<Matrix> = m.dims().iter().map(|&d| random_invertible(rng, d)).collect();
    m.base_change(alg, &g)
}

pub fn random_morphism<R: Rng>(alg: &BoundQuiverAlgebra, m: &Rep, n: &Rep, rng: &mut R) -> RepMorphism {
    let basis = hom_basis(alg, m, n);
    let coeffs: Vec<Q> = basis.iter().map(|_| small(rng, 3)).collect();
    RepMorphism::combination(&basis, &coeffs, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rep::check_rep;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_modules_are_modules() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for alg in [fixtures::b1a(), fixtures::a2()] {
            for _ in 0..20 {
                let m = random_module(&alg, &mut rng, 10);
                assert!(m.total_dim() <= 10);
                assert!(check_rep(&alg, &m).unwrap());
            }
        }
    }

    #[test]
    fn base_change_is_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..5 {
            assert!(random_invertible(&mut rng, n).is_invertible());
        }
    }
}

//! A catalog of indecomposable modules.
//!
//! Starts from projectives, injectives, simples and the uniserial modules of
//! every nonzero basis path, then closes under `tau`, `tau^-1` and direct
//! summands. For representation-directed algebras every indecomposable is
//! some `tau^-k P`, and for Nakayama algebras every indecomposable is
//! uniserial, so on such algebras the catalog is complete.

use crate::algebra::BoundQuiverAlgebra;
use crate::decompose::decompose;
use crate::homology::{tau, tau_inverse};
use crate::rep::{injective, projective, simple, uniserial, Rep};
use crate::tilting::TauTilt;

pub fn indecomposables(t: &TauTilt, max_dim: usize) -> Vec<Rep> {
    let alg: &BoundQuiverAlgebra = t.alg;
    let n = alg.vertex_count();
    let mut seeds: Vec<Rep> = Vec::new();
    for v in 0..n {
        seeds.push(projective(alg, v));
        seeds.push(injective(alg, v));
        seeds.push(simple(alg, v));
    }
    for w in alg.basis() {
        if let Ok(m) = uniserial(alg, w) {
            seeds.push(m);
        }
    }
    let mut found: Vec<(usize, Rep)> = Vec::new();
    let mut queue: Vec<Rep> = seeds;
    while let Some(m) = queue.pop() {
        if m.is_zero() {
            continue;
        }
        for (part, _) in decompose(alg, &m).parts {
            let id = t.class_of(&part);
            if found.iter().any(|(j, _)| *j == id) {
                continue;
            }
            queue.push(tau(alg, &part));
            queue.push(tau_inverse(alg, &part));
            found.push((id, t.representative(&part)));
        }
    }
    let mut out: Vec<Rep> = found.into_iter().map(|(_, m)| m).filter(|m| m.total_dim() <= max_dim).collect();
    out.sort_by_key(|m| (m.total_dim(), t.label_of(m)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn counts_on_small_algebras() {
        let b = fixtures::b1b();
        let t = TauTilt::new(&b);
        let labels: Vec<String> = indecomposables(&t, 100).iter().map(|m| t.label_of(m)).collect();
        assert_eq!(labels, ["1", "2", "1/2", "2/1", "1/2/1"]);
        let p = fixtures::point();
        assert_eq!(indecomposables(&TauTilt::new(&p), 100).len(), 1);
    }

    #[test]
    fn b2_has_nine_strings() {
        let b = fixtures::b2();
        let t = TauTilt::new(&b);
        let all = indecomposables(&t, 100);
        assert!(all.iter().all(|m| crate::decompose::is_indecomposable(&b, m)));
        assert_eq!(all.len(), 9);
    }
}

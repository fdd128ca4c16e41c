//! Inputs shared by the criterion benchmarks.

use qtau_core::{fixtures, BoundQuiverAlgebra};

pub fn benchmark_algebras() -> Vec<(&'static str, BoundQuiverAlgebra)> {
    vec![("a1b", fixtures::a1b()), ("a2", fixtures::a2()), ("b2", fixtures::b2())]
}

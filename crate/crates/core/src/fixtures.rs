//! Built-in example algebras.
//!
//! `B1a` and `B1b` share the two-cycle quiver `b: 1 -> 2`, `a: 2 -> 1` and
//! differ in which length-two path is killed. `A1a`/`A1b` extend them at the
//! projective `P(2)`; `A2` extends `B2` at `P(3)`; `A3` is `B2` extended by
//! the non-projective `3/2`, with its extra relation written out.

use crate::algebra::BoundQuiverAlgebra;

pub const B1A: &str = include_str!("../fixtures/b1a.qa");
pub const B1B: &str = include_str!("../fixtures/b1b.qa");
pub const A1A: &str = include_str!("../fixtures/a1a.qa");
pub const A1B: &str = include_str!("../fixtures/a1b.qa");
pub const B2: &str = include_str!("../fixtures/b2.qa");
pub const A2: &str = include_str!("../fixtures/a2.qa");
pub const A3: &str = include_str!("../fixtures/a3.qa");
pub const POINT: &str = include_str!("../fixtures/point.qa");

fn load(text: &str) -> BoundQuiverAlgebra {
    BoundQuiverAlgebra::parse(text).expect("built-in fixture parses")
}

pub fn b1a() -> BoundQuiverAlgebra {
    load(B1A)
}

pub fn b1b() -> BoundQuiverAlgebra {
    load(B1B)
}

pub fn a1a() -> BoundQuiverAlgebra {
    load(A1A)
}

pub fn a1b() -> BoundQuiverAlgebra {
    load(A1B)
}

pub fn b2() -> BoundQuiverAlgebra {
    load(B2)
}

pub fn a2() -> BoundQuiverAlgebra {
    load(A2)
}

pub fn a3() -> BoundQuiverAlgebra {
    load(A3)
}

pub fn point() -> BoundQuiverAlgebra {
    load(POINT)
}

/// Looks a fixture up by its (case-insensitive) name.
pub fn by_name(name: &str) -> Option<BoundQuiverAlgebra> {
    let text = match name.to_ascii_lowercase().as_str() {
        "b1a" => B1A,
        "b1b" => B1B,
        "a1a" => A1A,
        "a1b" => A1B,
        "b2" => B2,
        "a2" => A2,
        "a3" => A3,
        "k" | "point" => POINT,
        _ => return None,
    };
    Some(load(text))
}

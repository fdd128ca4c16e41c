#![allow(clippy::needless_range_loop)]

//! Support tau-tilting pairs, their mutation posets, and one-point extensions
//! of bound quiver algebras over the rationals.

pub mod algebra;
pub mod catalog;
pub mod decompose;
pub mod error;
pub mod export;
pub mod extension;
pub mod fixtures;
pub mod homology;
pub mod linalg;
pub mod literal;
pub mod random;
pub mod rep;
pub mod report;
pub mod suites;
pub mod tilting;

pub use algebra::{Arrow, BoundQuiverAlgebra, PathWord, Quiver, Relation};
pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use rep::{Rep, RepMorphism};

//! Exact computations with graded algebras, graded modules and tilting objects
//! in their stable categories.

pub mod algebra;
pub mod algiso;
pub mod arquiver;
pub mod bimodule;
pub mod constructions;
pub mod decompose;
pub mod error;
pub mod field;
pub mod hom;
pub mod identities;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod quiver;
pub mod radical;
pub mod resolution;
pub mod sparse;
pub mod structure;
pub mod tilting;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;

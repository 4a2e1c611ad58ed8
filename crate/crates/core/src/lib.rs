//! Exact computations in the fused Hecke algebras H_{k,n}(q).
//!
//! The crate is layered bottom-up: [`qcoeff`] supplies the coefficient field
//! ℚ(q); [`permcomb`] the symmetric-group and double-coset combinatorics;
//! [`hecke`] and [`fused`] the algebras; [`shapes`] and [`seminormal`] their
//! representation theory; [`bratteli`] the branching graphs; [`sworacle`] the
//! explicit tensor-space action; and [`conjectures`] the checks built on all of
//! them. [`golden`] bundles the reference fixtures into one runnable suite.

pub mod bratteli;
pub mod conjectures;
pub mod error;
pub mod fused;
pub mod golden;
pub mod hecke;
pub mod linalg;
pub mod permcomb;
pub mod qcoeff;
pub mod seminormal;
pub mod shapes;
pub mod sworacle;

pub use error::{Error, Result};

//! Toolkit for classifying abelian extensions of finite-dimensional Hopf
//! algebras through group-theoretical data (F, alpha, Gamma, beta) attached
//! to a finite group, with exact cohomological and Hopf-algebraic backends.

pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod gt;
pub mod hopf;
pub mod linalg;
pub mod par;
pub mod racks;
pub mod verify;

pub use error::{Error, Result};

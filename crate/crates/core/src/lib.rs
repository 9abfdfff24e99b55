//! Cohomology-style rings of permutohedral and cube fans attached to finite
//! Coxeter groups, with exact verification of the invariant-ring isomorphism.

pub mod action;
pub mod coxeter;
pub mod duality;
pub mod error;
pub mod fans;
pub mod iso;
pub mod linalg;
pub mod rings;
pub mod rootdata;
pub mod scalar;

pub use error::{Error, Result};

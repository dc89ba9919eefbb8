//! Exact computation of integrals, modulus and module traces for
//! finite-dimensional pivotal Hopf algebras and Hopf group-coalgebras.

pub mod error;
pub mod exactnum;
pub mod graded;
pub mod hopfcore;
pub mod cli;
pub mod linalg;
pub mod report;
pub mod rep;
pub mod trace;

pub use error::{Error, Result};

//! Exact computations with finite-dimensional Lie algebras and Lie
//! superalgebras over small finite fields: axioms, ideals and simplicity,
//! restrictedness structures, superization and Cartan prolongation.

pub mod error;
pub mod ffield;
pub mod linalg;
pub mod par;
pub mod superalg;
pub mod catalog;
pub mod restrict;
pub mod superize;
pub mod prolong;
pub mod format;
pub mod cli;

pub use error::{Category, Error, Result};

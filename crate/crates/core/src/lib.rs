//! Exact computational algebra for split composition algebras, rank-3
//! Jordan algebras, the Freudenthal-type graded space `F + J + J* + F`,
//! root data of exceptional groups and torus-level L-group lift maps,
//! together with exhaustive finite-field census suites.

pub mod census;
pub mod checks;
pub mod composition;
pub mod error;
pub mod field;
pub mod fts;
pub mod jordan;
pub mod linalg;
pub mod orbit;
pub mod par;
pub mod report;
pub mod rootdata;
pub mod satake;

pub use error::{Error, Result};

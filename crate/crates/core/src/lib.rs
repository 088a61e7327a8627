//! Exact braid group representations over ℤ[t±1, q±1].
//!
//! - [`laurent`]: Laurent polynomials, fractions and q-combinatorics
//! - [`polymatrix`]: matrices over the Laurent ring
//! - [`braid`]: braid words and relation checks
//! - [`reps`]: Burau, Lawrence–Krammer, quantized symmetric square, q-Pascal
//! - [`invariants`]: Alexander polynomial and the Krammer rational function

pub mod braid;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod polymatrix;
pub mod report;
pub mod reps;
pub mod ring;

pub use error::{Error, Result};
pub use laurent::{BracketKind, LaurentPoly, Monomial, PolyFraction};
pub use polymatrix::PolyMatrix;
pub use braid::BraidWord;
pub use reps::Representation;

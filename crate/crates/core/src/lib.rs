//! Exact forcing numbers of perfect matchings on quadriculated tori.

pub mod constructions;
pub mod error;
pub mod forcing;
pub mod harness;
pub mod graph;
pub mod matching;
pub mod polyomino;
pub mod torus;

pub use error::{Error, Result};

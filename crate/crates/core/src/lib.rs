//! Spectral radius, matchings and `[a, b]`-factors of small graphs, with
//! exhaustive and sampled verification of spectral factor theorems.

pub mod canon;
pub mod cli;
pub mod error;
pub mod factors;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod quotient;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};

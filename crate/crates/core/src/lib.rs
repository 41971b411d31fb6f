//! Superboolean rank, star flats and partial Euclidean geometries of finite
//! graphs.

pub mod bitset;
pub mod canon;
pub mod complement;
pub mod enumerate;
pub mod catalog;
pub mod error;
pub mod family;
pub mod flats;
pub mod geometry;
pub mod graph;
pub mod lattice;
pub mod limits;
pub mod minors;
pub mod sb;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use sb::{SBMatrix, SBValue};

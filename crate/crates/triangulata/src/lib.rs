//! Structure and coloring toolkit for maximal planar graphs: wheel-operation
//! generation of minimum-degree-4 triangulations, 4-coloring census up to
//! chromatic isomorphism, recursive triangulation machinery, and Black-White
//! coloring decisions for 2-colorable even cycles.

pub mod bwcolor;
pub mod cli;
pub mod coloring;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod generator;
pub mod wheelops;

pub use embedding::{CanonicalCode, FaceTriple, PlaneTriangulation, Vertex};
pub use error::{GraphError, Result};

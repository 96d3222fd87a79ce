//! Fully commutative elements of the affine Weyl group of type C,
//! their positive and blobbed subsets, the blobbed Catalan triangle,
//! and a rewriting kernel for the Temperley-Lieb quotients they index.

pub mod algebra;
pub mod enumeration;
mod error;
pub mod grid;
pub mod normal_forms;
pub mod triangles;
pub mod words;

pub use error::{Error, Result};
pub use words::{Letter, Rank, Word};

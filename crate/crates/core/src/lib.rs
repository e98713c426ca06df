//! Exact-arithmetic tools for the invariant theory of binary forms:
//! dimension counts, Poincaré series, divisibility conditions on hsop
//! degree sequences, the complete minimal-sequence classifications for
//! forms of degree 3 through 8, and a symbolic kernel for transvectants
//! and nullform detection.
//!
//! Everything is integer- or rational-exact; no floating point is used
//! anywhere.

pub mod cache;
pub mod classifier;
pub mod combinatorics;
pub mod conditions;
pub mod forms;
pub mod poly;
pub mod sequence;
pub mod series;

pub use sequence::DegreeSequence;

//! Chirality of triangles described by their side lengths.
//!
//! For an ordered triple of sides `(a, b, c)` the measure
//!
//! ```text
//! χ = (a - b)(b - c)(c - a) / (a + b + c)^3
//! ```
//!
//! is zero for equilateral and isosceles triangles and non-zero for scalene
//! ones, with the sign telling the two mirror images apart. It is invariant
//! under cyclic relabeling and scaling, changes sign when two sides are
//! exchanged, and is bounded by `√3/144` for triangles.
//!
//! The crate is `no_std` and only needs `alloc` (for grids and sample
//! buffers).

#![no_std]

extern crate alloc;

pub mod error;
pub mod extremal;
pub mod measure;
pub mod montecarlo;
pub mod phase;
pub mod triple;

pub use error::{Error, Result};
pub use extremal::{chi_max, chi_max_analytic, chi_max_search, ExtremalResult};
pub use measure::{chirality, chirality_of, classify, ChiralityResult, Handedness, SymmetryClass, TriangleStatus};
pub use montecarlo::{
    confidence_table, is_significant, percentile_of_mean, simulate, ConfidenceRow, NegativeSidePolicy, NoiseSpec,
    Significance, SimulationResult,
};
pub use phase::{grid, nodal_lines, normalize, Domain, NormalizedTriple, PhaseCell, PhaseGrid, Segment};
pub use triple::{PairIndex, SideTriple};

//! Tools for finite simplicial complexes: elementary constructions, integer
//! simplicial homology, collapsibility and discrete Morse search, the
//! non-evasiveness / vertex-decomposability / shellability hierarchy,
//! bistellar flips on triangulated 3-spheres, and fundamental-group tools for
//! knots realized as short edge cycles.
//!
//! The crate bundles a library of knotted 3-balls and 3-spheres (single,
//! double and triple trefoil) together with machine-checkable certificates:
//! collapse sequences, decision trees, and flip logs. See [`fixtures`] for the
//! bundled complexes and [`report::verify_all`] for the consistency report.

pub mod collapse;
pub mod complex;
pub mod fixtures;
pub mod flips;
pub mod hierarchy;
pub mod homology;
pub mod io;
pub mod knot;
pub mod manifold;
pub mod morse;
pub mod report;

mod lattice;
mod snf;

pub use complex::{ComplexError, FVector, Simplex, SimplicialComplex, Subdivision, Vertex};
pub use homology::{is_acyclic, reduced_homology, HomologyProfile};

//! Combinatorics of one-faced collections of curves on closed oriented
//! surfaces.
//!
//! A collection is encoded by its gluing pattern, the cyclic word of side
//! identifications of the single complementary polygon. On top of that
//! encoding the crate provides canonical forms, surgery and connected sum,
//! the simplification and reduction pipeline down to torus summands,
//! exhaustive enumeration per genus, and the surgery graphs `K_g` and
//! their cross-genus extension.

pub mod atlas;
pub mod canonical;
pub mod error;
pub mod families;
pub mod graph;
pub mod moves;
pub mod pattern;
pub mod reduction;
pub mod trace;
pub mod verify;

pub use canonical::{canonicalize, CanonicalClass, Equivalence};
pub use error::{Error, Result};
pub use pattern::{GluingPattern, Pos};
pub use trace::{MoveKind, MoveRecord, ReductionTrace};

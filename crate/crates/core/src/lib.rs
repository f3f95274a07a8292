//! Exact homological algebra for bound quiver algebras over prime fields,
//! together with the tagged-arc model of cluster-tilted algebras of types A
//! and D on the disc and the once-punctured disc.
#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod algebra;
pub mod bound;
pub mod cmp;
pub mod decompose;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod homology;
pub mod knit;
pub mod labels;
pub mod linalg;
pub mod model;
pub mod polygon;
pub mod registry;
pub mod rep;
pub mod surface;
pub mod verify;

pub use algebra::{AlgebraPresentation, Arrow, PathBasis, PathWord, Quiver, RelationElement};
pub use error::{Error, Result};
pub use bound::{Algebra, BoundAlgebra, Cover};
pub use field::Field;
pub use registry::IsoRegistry;
pub use rep::{Rep, RepMap};
pub use linalg::Matrix;

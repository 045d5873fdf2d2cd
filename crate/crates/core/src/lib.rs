//! Exact computation with axial algebras: fusion laws, axes, Miyamoto
//! groups, Frobenius forms, radicals, a catalog of explicit algebras, the
//! highwater algebra and JSON serialization.

pub mod algebra;
pub mod axial;
pub mod catalog;
pub mod error;
pub mod exactla;
pub mod frobenius;
pub mod fusion;
pub mod highwater;
pub mod io;
pub mod perm;
pub mod structure;

pub use algebra::{Algebra, NamedAxis, Quotient};
pub use error::{Error, Result};
pub use exactla::{Field, Matrix, Scalar, Subspace, Vector};
pub use fusion::{FusionLaw, Grading, LawKind};

//! Exact computations behind root uniqueness in mapping class groups.

pub mod budget;
pub mod claims;
pub mod error;
pub mod free_group;
pub mod gluing;
pub mod json;
pub mod matrix;
pub mod orbifold;
pub mod ordered;
pub mod poly;
pub mod reduction_graph;
pub mod sl2z;
pub mod symmetry;
pub mod twist;

pub use error::{Error, Result};
pub use free_group::{CertifiedAuto, FreeEndo, FreeWord};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use sl2z::Sl2Matrix;
pub use twist::{SurfaceModel, TwistWord};
pub use budget::SearchBudget;
pub use gluing::GluingPattern;
pub use orbifold::{CoverDatum, PermRep};
pub use ordered::{LexExtension, OrderedGroup, ZqLex};
pub use reduction_graph::{CaseLabel, DecompositionGraph};
pub use symmetry::{SymElement, SymGroup};

//! Torus fixed points: finite and affine Gelfand–Tsetlin collections, their
//! encodings, and the integrable subset `D(μ)`.

pub mod affine;
pub mod cylindric;
pub mod dominant;
pub mod finite;
pub mod partition;

pub use affine::{md, AffinePattern, ConvertError};
pub use cylindric::{cylindric, from_cylindric, CylindricError, CylindricPartition};
pub use dominant::{in_dmu, DominantWeight, WeightError};
pub use finite::FinitePattern;
pub use partition::Partition;

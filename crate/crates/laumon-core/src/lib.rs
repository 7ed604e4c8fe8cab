//! Exact engine for the finite and affine Yangian actions on the torus
//! fixed-point bases of (affine) Laumon spaces.
//!
//! The crate is `no_std` with `alloc`; the `std` feature only adds
//! `std::error::Error` implementations.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod affine_module;
pub mod detline;
pub mod exactalg;
pub mod finite_module;
pub mod integrable;
pub mod localization;
pub mod patterns;
pub mod rep;

pub(crate) mod prelude {
    pub use alloc::collections::BTreeMap;
    pub use alloc::format;
    pub use alloc::string::{String, ToString};
    pub use alloc::vec;
    pub use alloc::vec::Vec;
}

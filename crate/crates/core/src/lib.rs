//! Exact fusion systems on finite p-groups and products of normal
//! subsystems with overgroups of their carrier.

pub mod catalog;
pub mod error;
pub mod fusion;
pub mod group;
pub mod product;

pub use error::{Error, Result};

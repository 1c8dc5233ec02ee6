//! Basis descriptors, their text notation, and bases bound to a mesh.

mod descriptor;
mod dsl;
mod global;

pub use descriptor::{BasisDescriptor, MAX_DESCRIPTOR_DEPTH};
pub use dsl::parse_descriptor;
pub use global::{make_basis, GlobalBasis, SubentityLayout};

pub(crate) use global::{BasisNode, LeafBasis};

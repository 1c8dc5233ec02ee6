//! Function space bases on triangle meshes, built as trees of scalar
//! Lagrange bases, with multi-index numbering of the degrees of freedom.
//!
//! A basis is described by a [`BasisDescriptor`] (or its textual form, see
//! [`parse_descriptor`]). Inner nodes combine their children with a
//! [`MergingStrategy`], which decides how child multi-indices become parent
//! multi-indices. The resulting index tree doubles as the shape of a nested
//! coefficient container.

pub mod basistree;
pub mod containers;
pub mod demo;
pub mod error;
pub mod functions;
pub mod indexing;
pub mod localfe;
pub mod localview;
pub mod mesh;
pub mod subspace;

pub use basistree::{make_basis, parse_descriptor, BasisDescriptor, GlobalBasis};
pub use containers::{make_container, vector_backend, vector_backend_mut, MaskContainer, NestedContainer};
pub use error::{Error, Result};
pub use functions::{for_each_boundary_dof, interpolate, interpolate_masked, make_discrete_function};
pub use indexing::{merge_index, merge_tree, is_valid_index_tree, IndexTree, MergingStrategy, MultiIndex};
pub use localfe::{lagrange_simplex, Continuity, LocalFiniteElement, LocalKey};
pub use localview::{LocalView, TreePath};
pub use mesh::{make_structured_mesh, Mesh};
pub use subspace::{subspace_basis, FunctionSpaceBasis, SubspaceBasis};

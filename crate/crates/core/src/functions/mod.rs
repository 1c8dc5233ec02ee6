//! Discrete functions, nodal interpolation and boundary DOF iteration.

mod discrete;
mod interpolate;
pub mod vtk;

pub use discrete::{make_discrete_function, DiscreteFunction, LocalFunction};
pub use interpolate::{for_each_boundary_dof, interpolate, interpolate_masked, mark_boundary_dofs};

//! Desk-scale solvers and inspection helpers behind the `basisforest` binary.

mod dofmap;
mod inspect;
pub mod linalg;
mod pattern;
mod poisson;
pub mod quadrature;
mod report;
mod stokes;

pub use dofmap::DofMap;
pub use inspect::{cmd_inspect, inspect_basis, InspectOptions};
pub use pattern::OccupationPattern;
pub use poisson::{assemble_poisson, cmd_poisson, solve_poisson, Manufactured, PoissonSolution};
pub use report::DemoReport;
pub use stokes::{
    assemble_stokes, cmd_stokes, poiseuille_pressure, poiseuille_velocity, solve_stokes, stokes_pattern,
    taylor_hood_basis, StokesSolution, VelocityLayout, DEFAULT_MAX_CELLS,
};

use nalgebra::{DMatrix, DVector, Point2};

use super::quadrature::triangle_rule;
use super::{DemoReport, DofMap, OccupationPattern};
use crate::basistree::{make_basis, BasisDescriptor, GlobalBasis};
use crate::containers::{make_container, vector_backend, vector_backend_mut, NestedContainer};
use crate::error::{Error, Result};
use crate::functions::{interpolate, interpolate_masked, mark_boundary_dofs};
use crate::indexing::{MergingStrategy, MultiIndex};
use crate::localview::TreePath;
use crate::mesh::Mesh;
use crate::subspace::subspace_basis;

/// Default limit on `nx * ny` for the dense solver.
pub const DEFAULT_MAX_CELLS: usize = 16 * 16;

/// Numbering of the velocity block of the Taylor–Hood basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VelocityLayout {
    /// Component first: `(0, component, node)`.
    Lexicographic,
    /// Node first: `(0, node, component)`.
    Interleaved,
}

impl VelocityLayout {
    pub fn strategy(self) -> MergingStrategy {
        match self {
            Self::Lexicographic => MergingStrategy::BlockedLexicographic,
            Self::Interleaved => MergingStrategy::BlockedInterleaved,
        }
    }
}

const PRESSURE_CONSTANT: f64 = 0.5;

pub fn poiseuille_velocity(p: &Point2<f64>) -> [f64; 2] {
    [p.y * (1.0 - p.y), 0.0]
}

pub fn poiseuille_pressure(p: &Point2<f64>) -> f64 {
    -2.0 * p.x + PRESSURE_CONSTANT
}

#[derive(Clone, Debug)]
pub struct StokesSolution {
    pub basis: GlobalBasis,
    pub coefficients: NestedContainer<f64>,
    pub velocity_error: f64,
    pub pressure_error: f64,
    /// Largest magnitude in the pressure-pressure block before pinning.
    pub pressure_block_max: f64,
}

pub fn taylor_hood_basis(nx: usize, ny: usize, layout: VelocityLayout) -> Result<GlobalBasis> {
    make_basis(Mesh::structured(nx, ny)?, BasisDescriptor::taylor_hood(2, layout.strategy()))
}

/// Saddle point matrix for viscosity 1, zero body force.
pub fn assemble_stokes(basis: &GlobalBasis, map: &DofMap) -> Result<DMatrix<f64>> {
    let n = map.len();
    let mut matrix = DMatrix::zeros(n, n);
    let rule = triangle_rule();
    let mut view = basis.local_view();
    for cell in 0..basis.mesh().num_cells() {
        view.bind(cell)?;
        let geometry = view.geometry()?;
        let det = geometry.determinant().abs();
        let tree = view.tree();
        let velocity = tree.child(0).ok_or(Error::ShapeMismatch)?;
        let pressure = tree.child(1).ok_or(Error::ShapeMismatch)?;
        let fe_u = velocity
            .child(0)
            .and_then(|c| c.finite_element())
            .ok_or(Error::ShapeMismatch)?;
        let fe_p = pressure.finite_element().ok_or(Error::ShapeMismatch)?;
        let global = |local: usize| -> Result<usize> { map.ordinal(view.index(local)?) };
        let mut u_rows = Vec::new();
        for c in 0..velocity.child_count() {
            let leaf = velocity.child(c).unwrap();
            u_rows.push((0..fe_u.size()).map(|k| global(leaf.local_index(k))).collect::<Result<Vec<_>>>()?);
        }
        let p_rows = (0..fe_p.size())
            .map(|k| global(pressure.local_index(k)))
            .collect::<Result<Vec<_>>>()?;
        for (point, weight) in &rule {
            let dx = weight * det;
            let grads: Vec<_> = fe_u
                .evaluate_gradients(point)
                .iter()
                .map(|g| geometry.transform_gradient(g))
                .collect();
            let psi = fe_p.evaluate_values(point);
            for (c, rows) in u_rows.iter().enumerate() {
                for i in 0..fe_u.size() {
                    for j in 0..fe_u.size() {
                        matrix[(rows[i], rows[j])] += grads[i].dot(&grads[j]) * dx;
                    }
                    for (m, &q) in p_rows.iter().enumerate() {
                        let b = -psi[m] * grads[i][c] * dx;
                        matrix[(q, rows[i])] += b;
                        matrix[(rows[i], q)] += b;
                    }
                }
            }
        }
    }
    Ok(matrix)
}

pub fn solve_stokes(nx: usize, ny: usize, layout: VelocityLayout, max_cells: usize) -> Result<StokesSolution> {
    if nx * ny > max_cells {
        return Err(Error::MeshTooLarge {
            cells: 2 * nx * ny,
            limit: 2 * max_cells,
        });
    }
    let basis = taylor_hood_basis(nx, ny, layout)?;
    let map = DofMap::new(&basis);
    let mut matrix = assemble_stokes(&basis, &map)?;
    let pressure_ordinals: Vec<usize> = (0..map.len()).filter(|&k| map.multi_index(k)[0] == 1).collect();
    let pressure_block_max = pressure_ordinals
        .iter()
        .flat_map(|&r| pressure_ordinals.iter().map(move |&c| (r, c)))
        .map(|(r, c)| matrix[(r, c)].abs())
        .fold(0.0, f64::max);

    let velocity = subspace_basis(&basis, &TreePath::from([0]))?;
    let pressure = subspace_basis(&basis, &TreePath::from([1]))?;
    let mut mask = make_container(basis.container_descriptor(), false);
    mark_boundary_dofs(&velocity, &mut mask)?;
    let pin = MultiIndex::from([1, 0]);
    mask.set(&pin, true)?;

    let mut x = make_container(basis.container_descriptor(), 0.0);
    interpolate_masked(&velocity, &mut vector_backend_mut(&mut x), poiseuille_velocity, vector_backend(&mask))?;
    interpolate_masked(&pressure, &mut vector_backend_mut(&mut x), |p| [poiseuille_pressure(p)], vector_backend(&mask))?;

    let fixed = map.gather(&mask)?;
    let values = map.gather(&x)?;
    let n = map.len();
    let mut rhs = DVector::zeros(n);
    for c in (0..n).filter(|&c| fixed[c]) {
        for r in 0..n {
            rhs[r] -= matrix[(r, c)] * values[c];
        }
    }
    for k in (0..n).filter(|&k| fixed[k]) {
        matrix.row_mut(k).fill(0.0);
        matrix.column_mut(k).fill(0.0);
        matrix[(k, k)] = 1.0;
        rhs[k] = values[k];
    }
    let solution = matrix
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Numerical("Stokes system is singular".into()))?;
    map.scatter(solution.as_slice(), &mut x)?;

    let mut reference = make_container(basis.container_descriptor(), 0.0);
    interpolate(&velocity, &mut vector_backend_mut(&mut reference), poiseuille_velocity)?;
    interpolate(&pressure, &mut vector_backend_mut(&mut reference), |p| [poiseuille_pressure(p)])?;
    let exact = map.gather(&reference)?;

    let velocity_error = (0..n)
        .filter(|&k| map.multi_index(k)[0] == 0)
        .map(|k| (solution[k] - exact[k]).abs())
        .fold(0.0, f64::max);
    let shift = pressure_ordinals.iter().map(|&k| solution[k] - exact[k]).sum::<f64>() / pressure_ordinals.len() as f64;
    let pressure_error = pressure_ordinals
        .iter()
        .map(|&k| (solution[k] - exact[k] - shift).abs())
        .fold(0.0, f64::max);
    Ok(StokesSolution {
        basis,
        coefficients: x,
        velocity_error,
        pressure_error,
        pressure_block_max,
    })
}

/// Shared-element occupation pattern of the Taylor–Hood basis.
pub fn stokes_pattern(nx: usize, ny: usize, layout: VelocityLayout) -> Result<(OccupationPattern, DofMap)> {
    let basis = taylor_hood_basis(nx, ny, layout)?;
    Ok((OccupationPattern::from_basis(&basis)?, DofMap::new(&basis)))
}

/// Stokes demo with Poiseuille flow.
pub fn cmd_stokes(nx: usize, ny: usize, layout: VelocityLayout, max_cells: usize) -> Result<DemoReport> {
    let solution = solve_stokes(nx, ny, layout, max_cells)?;
    if solution.pressure_block_max != 0.0 {
        return Err(Error::Numerical(format!(
            "pressure-pressure block is not zero ({:e})",
            solution.pressure_block_max
        )));
    }
    Ok(DemoReport {
        nx,
        ny,
        basis: solution.basis.descriptor().to_string(),
        dimension: solution.basis.dimension(),
        iterations: 0,
        errors: vec![
            ("velocity_error".into(), solution.velocity_error),
            ("pressure_error".into(), solution.pressure_error),
        ],
    })
}

use nalgebra::Point2;

use super::linalg::{conjugate_gradient, CsrMatrix, TripletBuilder};
use super::quadrature::triangle_rule;
use super::{DemoReport, DofMap};
use crate::basistree::{make_basis, BasisDescriptor, GlobalBasis};
use crate::containers::{make_container, vector_backend, vector_backend_mut, NestedContainer};
use crate::error::{Error, Result};
use crate::functions::{interpolate, interpolate_masked, make_discrete_function, mark_boundary_dofs};
use crate::mesh::Mesh;

/// Exact solution `u` and right-hand side `f = -Δu`.
#[derive(Clone, Copy, Debug)]
pub struct Manufactured {
    pub exact: fn(&Point2<f64>) -> f64,
    pub source: fn(&Point2<f64>) -> f64,
}

impl Manufactured {
    /// `u = x² + y²`, `f = -4`.
    pub const QUADRATIC: Self = Self {
        exact: |p| p.x * p.x + p.y * p.y,
        source: |_| -4.0,
    };

    pub const CONSTANT: Self = Self {
        exact: |_| 1.0,
        source: |_| 0.0,
    };
}

/// Stiffness matrix and load vector, before boundary conditions.
pub fn assemble_poisson(basis: &GlobalBasis, map: &DofMap, source: fn(&Point2<f64>) -> f64) -> Result<(CsrMatrix, Vec<f64>)> {
    let mut matrix = TripletBuilder::new(map.len());
    let mut load = vec![0.0; map.len()];
    let rule = triangle_rule();
    let mut view = basis.local_view();
    for cell in 0..basis.mesh().num_cells() {
        view.bind(cell)?;
        let geometry = view.geometry()?;
        let fe = view.tree().finite_element().ok_or(Error::ShapeMismatch)?;
        let rows = view
            .indices()?
            .iter()
            .map(|i| map.ordinal(i))
            .collect::<Result<Vec<_>>>()?;
        let det = geometry.determinant().abs();
        for (point, weight) in &rule {
            let dx = weight * det;
            let values = fe.evaluate_values(point);
            let gradients: Vec<_> = fe
                .evaluate_gradients(point)
                .iter()
                .map(|g| geometry.transform_gradient(g))
                .collect();
            let f = source(&geometry.global(point));
            for i in 0..fe.size() {
                load[rows[i]] += f * values[i] * dx;
                for j in 0..fe.size() {
                    matrix.add(rows[i], rows[j], gradients[i].dot(&gradients[j]) * dx);
                }
            }
        }
    }
    Ok((matrix.build(), load))
}

/// Result of [`solve_poisson`].
#[derive(Clone, Debug)]
pub struct PoissonSolution {
    pub basis: GlobalBasis,
    pub coefficients: NestedContainer<f64>,
    pub iterations: usize,
    /// Largest coefficient error against the interpolant of the exact solution.
    pub nodal_error: f64,
    /// Largest pointwise error over quadrature points and vertices of all cells.
    pub max_error: f64,
    pub asymmetry: f64,
}

pub fn solve_poisson(nx: usize, ny: usize, degree: usize, problem: &Manufactured) -> Result<PoissonSolution> {
    if !(1..=3).contains(&degree) {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let basis = make_basis(Mesh::structured(nx, ny)?, BasisDescriptor::lagrange(degree))?;
    let map = DofMap::new(&basis);
    let (matrix, load) = assemble_poisson(&basis, &map, problem.source)?;
    let asymmetry = matrix.asymmetry();

    let mut mask = make_container(basis.container_descriptor(), false);
    mark_boundary_dofs(&basis, &mut mask)?;
    let mut x = make_container(basis.container_descriptor(), 0.0);
    let exact = problem.exact;
    interpolate_masked(&basis, &mut vector_backend_mut(&mut x), |p| [exact(p)], vector_backend(&mask))?;

    let fixed = map.gather(&mask)?;
    let boundary = map.gather(&x)?;
    let (reduced, rhs) = eliminate(&matrix, &load, &fixed, &boundary);
    let mut u = boundary.clone();
    let iterations = conjugate_gradient(&reduced, &rhs, &mut u, 1e-12, 10 * map.len() + 100)?;
    map.scatter(&u, &mut x)?;

    let mut reference = make_container(basis.container_descriptor(), 0.0);
    interpolate(&basis, &mut vector_backend_mut(&mut reference), |p| [exact(p)])?;
    let nodal_error = map
        .gather(&reference)?
        .iter()
        .zip(&u)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let max_error = sampled_error(&basis, &x, exact)?;
    Ok(PoissonSolution {
        basis,
        coefficients: x,
        iterations,
        nodal_error,
        max_error,
        asymmetry,
    })
}

/// Replaces fixed rows and columns by the identity and moves their known
/// values to the right-hand side, keeping the matrix symmetric.
fn eliminate(matrix: &CsrMatrix, load: &[f64], fixed: &[bool], values: &[f64]) -> (CsrMatrix, Vec<f64>) {
    let n = matrix.size();
    let mut out = TripletBuilder::new(n);
    let mut rhs = load.to_vec();
    for r in 0..n {
        if fixed[r] {
            out.add(r, r, 1.0);
            rhs[r] = values[r];
            continue;
        }
        for (c, v) in matrix.row(r) {
            if fixed[c] {
                rhs[r] -= v * values[c];
            } else {
                out.add(r, c, v);
            }
        }
    }
    (out.build(), rhs)
}

fn sampled_error(basis: &GlobalBasis, x: &NestedContainer<f64>, exact: fn(&Point2<f64>) -> f64) -> Result<f64> {
    let f = make_discrete_function(basis, vector_backend(x), 1)?;
    let mut local = f.local_function();
    let mut samples: Vec<Point2<f64>> = triangle_rule().iter().map(|(p, _)| *p).collect();
    samples.extend([Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)]);
    let mut error: f64 = 0.0;
    for cell in 0..basis.mesh().num_cells() {
        local.bind(cell)?;
        let geometry = basis.mesh().geometry(cell)?;
        for p in &samples {
            let value = local.evaluate(p)?[0];
            error = error.max((value - exact(&geometry.global(p))).abs());
        }
    }
    Ok(error)
}

/// Poisson demo with `u = x² + y²`.
pub fn cmd_poisson(nx: usize, ny: usize, degree: usize) -> Result<DemoReport> {
    let solution = solve_poisson(nx, ny, degree, &Manufactured::QUADRATIC)?;
    if solution.asymmetry > 1e-12 {
        return Err(Error::Numerical(format!(
            "stiffness matrix is not symmetric (deviation {:e})",
            solution.asymmetry
        )));
    }
    Ok(DemoReport {
        nx,
        ny,
        basis: solution.basis.descriptor().to_string(),
        dimension: solution.basis.dimension(),
        iterations: solution.iterations,
        errors: vec![
            ("nodal_error".into(), solution.nodal_error),
            ("max_error".into(), solution.max_error),
        ],
    })
}

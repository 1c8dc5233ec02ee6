// Dirichlet data: collect boundary degrees of freedom into a mask and
// interpolate only there.

use basisforest::functions::mark_boundary_dofs;
use basisforest::{
    for_each_boundary_dof, interpolate_masked, make_basis, make_container, vector_backend, vector_backend_mut,
    BasisDescriptor, Mesh,
};

fn run_example() -> basisforest::Result<String> {
    let basis = make_basis(Mesh::structured(2, 2)?, BasisDescriptor::lagrange(2))?;
    let mut boundary = Vec::new();
    for_each_boundary_dof(&basis, |i| boundary.push(i.to_string()))?;
    let mut mask = make_container(basis.container_descriptor(), false);
    mark_boundary_dofs(&basis, &mut mask)?;
    let mut x = make_container(basis.container_descriptor(), 0.0);
    interpolate_masked(&basis, &mut vector_backend_mut(&mut x), |p| [1.0 + p.x + 2.0 * p.y], vector_backend(&mask))?;
    let written = x.values().iter().filter(|v| ***v != 0.0).count();
    Ok(format!(
        "{} of {} coefficients lie on the boundary: {}\nnonzero after masked interpolation: {written}\n",
        boundary.len(),
        basis.dimension(),
        boundary.join(" ")
    ))
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

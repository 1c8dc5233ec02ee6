// Interpolating into the velocity part of a Taylor–Hood basis and evaluating
// the resulting discrete function.

use basisforest::{
    interpolate, make_basis, make_container, make_discrete_function, subspace_basis, vector_backend,
    vector_backend_mut, BasisDescriptor, FunctionSpaceBasis, MergingStrategy, Mesh, TreePath,
};
use nalgebra::Point2;

fn run_example() -> basisforest::Result<String> {
    let basis = make_basis(Mesh::structured(2, 2)?, BasisDescriptor::taylor_hood(2, MergingStrategy::BlockedInterleaved))?;
    let velocity = subspace_basis(&basis, &TreePath::from([0]))?;
    let first = velocity.subspace(&TreePath::from([0]))?;
    let mut x = make_container(basis.container_descriptor(), 0.0);
    interpolate(&velocity, &mut vector_backend_mut(&mut x), |p| [p.x * p.y, 1.0 - p.x * p.x])?;

    let u = make_discrete_function(&velocity, vector_backend(&x), 2)?;
    let u0 = make_discrete_function(&first, vector_backend(&x), 1)?;
    let p = Point2::new(0.3, 0.6);
    let value = u.evaluate(&p)?;
    let mut out = format!("velocity subspace has {} indices\n", velocity.index_set().len());
    out += &format!("u(0.3, 0.6) = ({:.6}, {:.6})\n", value[0], value[1]);
    out += &format!("first component alone = {:.6}\n", u0.evaluate(&p)?[0]);
    let untouched = x.entries().iter().filter(|(i, _)| i[0] == 1).all(|(_, v)| **v == 0.0);
    out += &format!("pressure coefficients untouched: {untouched}\n");
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

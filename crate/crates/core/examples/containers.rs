// Nested coefficient containers shaped by the index tree of a basis.

use basisforest::containers::VectorBackendMut;
use basisforest::{make_basis, vector_backend_mut, BasisDescriptor, MergingStrategy, Mesh, MultiIndex, NestedContainer};

fn run_example() -> basisforest::Result<String> {
    let basis = make_basis(
        Mesh::structured(1, 1)?,
        BasisDescriptor::power(BasisDescriptor::lagrange(1), 2, MergingStrategy::BlockedInterleaved),
    )?;
    let mut coefficients: NestedContainer<f64> = NestedContainer::default();
    let mut backend: VectorBackendMut<'_, f64> = vector_backend_mut(&mut coefficients);
    backend.resize(&basis);
    backend.set(&MultiIndex::from([2, 1]), 1.5)?;
    *backend.get_mut(&MultiIndex::from([3, 0]))? -= 0.5;
    let mut out = format!("shape {}\n{} scalars\n", coefficients.shape(), coefficients.len());
    out += &coefficients.dump();
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

use std::collections::HashSet;

use nalgebra::Point2;

use crate::containers::{MaskContainer, VectorBackend, VectorBackendMut};
use crate::error::{Error, Result};
use crate::indexing::MultiIndex;
use crate::localfe::Continuity;
use crate::subspace::FunctionSpaceBasis;

/// Nodal interpolation of `f` into the (sub)space `basis`.
///
/// `f` must return one value per leaf of the subtree. Only coefficients of
/// the subtree are written; everything else in `coefficients` is untouched.
pub fn interpolate<B, F, V>(basis: &B, coefficients: &mut VectorBackendMut<'_, f64>, f: F) -> Result<()>
where
    B: FunctionSpaceBasis + ?Sized,
    F: Fn(&Point2<f64>) -> V,
    V: AsRef<[f64]>,
{
    interpolate_impl(basis, coefficients, f, None)
}

/// Like [`interpolate`], but writes only entries whose flag in `mask` is set.
pub fn interpolate_masked<B, F, V>(
    basis: &B,
    coefficients: &mut VectorBackendMut<'_, f64>,
    f: F,
    mask: VectorBackend<'_, bool>,
) -> Result<()>
where
    B: FunctionSpaceBasis + ?Sized,
    F: Fn(&Point2<f64>) -> V,
    V: AsRef<[f64]>,
{
    if &mask.container().shape() != basis.root_basis().container_descriptor() {
        return Err(Error::ShapeMismatch);
    }
    interpolate_impl(basis, coefficients, f, Some(mask))
}

fn interpolate_impl<B, F, V>(
    basis: &B,
    coefficients: &mut VectorBackendMut<'_, f64>,
    f: F,
    mask: Option<VectorBackend<'_, bool>>,
) -> Result<()>
where
    B: FunctionSpaceBasis + ?Sized,
    F: Fn(&Point2<f64>) -> V,
    V: AsRef<[f64]>,
{
    let expected = basis.leaf_count();
    let mut view = basis.local_view();
    for cell in 0..basis.mesh().num_cells() {
        view.bind(cell)?;
        let geometry = view.geometry()?;
        for (component, leaf) in view.tree().leaves().into_iter().enumerate() {
            let fe = leaf.finite_element().expect("leaves carry a finite element");
            for (k, node) in fe.nodes().iter().enumerate() {
                let index = view.index(leaf.local_index(k))?;
                if let Some(mask) = &mask {
                    if !*mask.get(index)? {
                        continue;
                    }
                }
                let value = f(&geometry.global(node));
                let value = value.as_ref();
                if value.len() != expected {
                    return Err(Error::RangeMismatch {
                        expected,
                        found: value.len(),
                    });
                }
                coefficients.set(index, value[component])?;
            }
        }
    }
    Ok(())
}

/// Calls `callback` once for every global multi-index of the subtree whose
/// basis function is attached to a boundary vertex or boundary edge.
pub fn for_each_boundary_dof<B, C>(basis: &B, mut callback: C) -> Result<()>
where
    B: FunctionSpaceBasis + ?Sized,
    C: FnMut(&MultiIndex),
{
    let mesh = basis.mesh();
    let mut view = basis.local_view();
    if view
        .tree()
        .leaves()
        .iter()
        .any(|leaf| leaf.finite_element().unwrap().continuity() == Continuity::Discontinuous)
    {
        return Err(Error::DiscontinuousBoundary);
    }
    let mut seen = HashSet::new();
    for cell in 0..mesh.num_cells() {
        view.bind(cell)?;
        for leaf in view.tree().leaves() {
            let leaf_basis = leaf.leaf_basis().unwrap();
            for (k, key) in leaf_basis.finite_element().keys().iter().enumerate() {
                let (codim, entity, _) = leaf_basis.dof_entity(mesh, cell, key);
                let on_boundary = match codim {
                    2 => mesh.is_boundary_vertex(entity),
                    1 => mesh.is_boundary_edge(entity),
                    _ => false,
                };
                if on_boundary {
                    let index = view.index(leaf.local_index(k))?;
                    if seen.insert(index.clone()) {
                        callback(index);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Sets the flag of every boundary DOF of `basis` in `mask`.
pub fn mark_boundary_dofs<B>(basis: &B, mask: &mut MaskContainer) -> Result<()>
where
    B: FunctionSpaceBasis + ?Sized,
{
    let mut result = Ok(());
    for_each_boundary_dof(basis, |index| {
        if result.is_ok() {
            result = mask.set(index, true);
        }
    })?;
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basistree::{make_basis, parse_descriptor, BasisDescriptor};
    use crate::containers::{make_container, vector_backend, vector_backend_mut};
    use crate::indexing::MergingStrategy::*;
    use crate::localview::TreePath;
    use crate::mesh::Mesh;
    use crate::subspace::subspace_basis;

    fn count_boundary(text: &str) -> usize {
        let basis = make_basis(Mesh::structured(1, 1).unwrap(), parse_descriptor(text).unwrap()).unwrap();
        let mut n = 0;
        for_each_boundary_dof(&basis, |_| n += 1).unwrap();
        n
    }

    #[test]
    fn boundary_counts() {
        assert_eq!(count_boundary("lagrange(1)"), 4);
        assert_eq!(count_boundary("lagrange(2)"), 8);
        assert_eq!(count_boundary("lagrange(3)"), 12);
        let th = make_basis(
            Mesh::structured(1, 1).unwrap(),
            BasisDescriptor::taylor_hood(2, BlockedInterleaved),
        )
        .unwrap();
        let velocity = subspace_basis(&th, &TreePath::from([0])).unwrap();
        let mut n = 0;
        for_each_boundary_dof(&velocity, |i| {
            assert_eq!(i[0], 0);
            n += 1
        })
        .unwrap();
        assert_eq!(n, 16);
    }

    #[test]
    fn dg_has_no_boundary_dofs() {
        let basis = make_basis(Mesh::structured(1, 1).unwrap(), BasisDescriptor::dg(1)).unwrap();
        assert!(matches!(
            for_each_boundary_dof(&basis, |_| {}),
            Err(Error::DiscontinuousBoundary)
        ));
    }

    #[test]
    fn constant_and_masks() {
        let basis = make_basis(Mesh::structured(2, 2).unwrap(), BasisDescriptor::lagrange(1)).unwrap();
        let mut x = make_container(basis.container_descriptor(), 0.0);
        interpolate(&basis, &mut vector_backend_mut(&mut x), |_| [3.5]).unwrap();
        assert!(x.values().iter().all(|v| **v == 3.5));

        let before = x.clone();
        let mask = make_container(basis.container_descriptor(), false);
        interpolate_masked(&basis, &mut vector_backend_mut(&mut x), |_| [1.0], vector_backend(&mask)).unwrap();
        assert_eq!(x, before);

        let all = make_container(basis.container_descriptor(), true);
        interpolate_masked(&basis, &mut vector_backend_mut(&mut x), |p| [p.x], vector_backend(&all)).unwrap();
        let mut plain = before.clone();
        interpolate(&basis, &mut vector_backend_mut(&mut plain), |p| [p.x]).unwrap();
        assert_eq!(x, plain);
    }

    #[test]
    fn range_mismatch() {
        let basis = make_basis(Mesh::structured(1, 1).unwrap(), BasisDescriptor::lagrange(1)).unwrap();
        let mut x = make_container(basis.container_descriptor(), 0.0);
        assert!(matches!(
            interpolate(&basis, &mut vector_backend_mut(&mut x), |_| [1.0, 2.0]),
            Err(Error::RangeMismatch { expected: 1, found: 2 })
        ));
        let bad_mask = make_container(&crate::indexing::IndexTree::uniform(2, crate::indexing::IndexTree::Value), true);
        assert!(matches!(
            interpolate_masked(&basis, &mut vector_backend_mut(&mut x), |_| [1.0], vector_backend(&bad_mask)),
            Err(Error::ShapeMismatch)
        ));
    }
}

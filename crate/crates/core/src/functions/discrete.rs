use nalgebra::Point2;

use crate::containers::VectorBackend;
use crate::error::{Error, Result};
use crate::localview::LocalView;
use crate::subspace::FunctionSpaceBasis;

/// A finite element function given by a (subspace) basis and a coefficient
/// vector shaped for the root basis. Leaves of the subtree map in pre-order
/// to the components of the range.
#[derive(Clone, Debug)]
pub struct DiscreteFunction<'a, B: ?Sized> {
    basis: &'a B,
    coefficients: VectorBackend<'a, f64>,
    range_dim: usize,
}

pub fn make_discrete_function<'a, B>(
    basis: &'a B,
    coefficients: VectorBackend<'a, f64>,
    range_dim: usize,
) -> Result<DiscreteFunction<'a, B>>
where
    B: FunctionSpaceBasis + ?Sized,
{
    let leaves = basis.leaf_count();
    if range_dim != leaves {
        return Err(Error::RangeMismatch {
            expected: leaves,
            found: range_dim,
        });
    }
    if &coefficients.container().shape() != basis.root_basis().container_descriptor() {
        return Err(Error::ShapeMismatch);
    }
    Ok(DiscreteFunction {
        basis,
        coefficients,
        range_dim,
    })
}

impl<'a, B: FunctionSpaceBasis + ?Sized> DiscreteFunction<'a, B> {
    pub fn basis(&self) -> &'a B {
        self.basis
    }

    pub fn range_dim(&self) -> usize {
        self.range_dim
    }

    pub fn local_function(&self) -> LocalFunction<'_, 'a> {
        LocalFunction {
            view: self.basis.local_view(),
            coefficients: self.coefficients,
            range_dim: self.range_dim,
        }
    }

    /// Value at a world point, locating the cell on the structured mesh.
    pub fn evaluate(&self, x: &Point2<f64>) -> Result<Vec<f64>> {
        let (cell, local) = self
            .basis
            .mesh()
            .locate(x)
            .ok_or(Error::OutsideDomain(x.x, x.y))?;
        let mut lf = self.local_function();
        lf.bind(cell)?;
        lf.evaluate(&local)
    }
}

/// Element-wise evaluation cursor of a [`DiscreteFunction`].
#[derive(Clone, Debug)]
pub struct LocalFunction<'v, 'a> {
    view: LocalView<'v>,
    coefficients: VectorBackend<'a, f64>,
    range_dim: usize,
}

impl LocalFunction<'_, '_> {
    pub fn bind(&mut self, cell: usize) -> Result<()> {
        self.view.bind(cell)
    }

    /// Value at reference coordinates of the bound cell.
    pub fn evaluate(&self, local: &Point2<f64>) -> Result<Vec<f64>> {
        let mut value = vec![0.0; self.range_dim];
        for (component, leaf) in self.view.tree().leaves().into_iter().enumerate() {
            let fe = leaf.finite_element().expect("leaves carry a finite element");
            for (k, phi) in fe.evaluate_values(local).into_iter().enumerate() {
                let index = self.view.index(leaf.local_index(k))?;
                value[component] += self.coefficients.get(index)? * phi;
            }
        }
        Ok(value)
    }
}

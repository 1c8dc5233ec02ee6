//! Subtrees of a basis used as bases in their own right.
//!
//! A [`SubspaceBasis`] exposes only the shape functions of one subtree, but
//! keeps the global multi-indices of the root basis, so coefficient vectors
//! keep the shape of the full basis. Its index set is in general neither
//! consecutive nor zero-based.

use crate::basistree::GlobalBasis;
use crate::error::Result;
use crate::indexing::MultiIndex;
use crate::localview::{LocalView, TreePath};
use crate::mesh::Mesh;

/// Common surface of a global basis and its subspace bases.
pub trait FunctionSpaceBasis {
    fn root_basis(&self) -> &GlobalBasis;

    /// Path of the subtree within the root basis; empty for the root itself.
    fn prefix_path(&self) -> &TreePath;

    fn mesh(&self) -> &Mesh {
        self.root_basis().mesh()
    }

    /// Unbound local view of the subtree.
    fn local_view(&self) -> LocalView<'_> {
        self.root_basis()
            .subtree_view(self.prefix_path())
            .expect("subspace paths are validated on construction")
    }

    /// Number of scalar leaves of the subtree, i.e. the range dimension of
    /// functions living in it.
    fn leaf_count(&self) -> usize {
        self.root_basis()
            .descriptor()
            .node(self.prefix_path())
            .map_or(0, |node| node.leaf_count())
    }

    /// Sorted global multi-indices of all basis functions of the subtree.
    fn index_set(&self) -> Vec<MultiIndex> {
        self.root_basis()
            .indices_of(self.prefix_path())
            .expect("subspace paths are validated on construction")
    }
}

impl FunctionSpaceBasis for GlobalBasis {
    fn root_basis(&self) -> &GlobalBasis {
        self
    }

    fn prefix_path(&self) -> &TreePath {
        self.root_path_ref()
    }
}

impl GlobalBasis {
    pub(crate) fn subtree_view(&self, prefix: &TreePath) -> Result<LocalView<'_>> {
        LocalView::new(self, prefix.clone())
    }
}

#[derive(Clone, Debug)]
pub struct SubspaceBasis<'b> {
    root: &'b GlobalBasis,
    prefix: TreePath,
}

impl<'b> SubspaceBasis<'b> {
    pub fn root(&self) -> &'b GlobalBasis {
        self.root
    }

    /// Subspace of this subspace; the paths are concatenated.
    pub fn subspace(&self, path: &TreePath) -> Result<SubspaceBasis<'b>> {
        subspace_basis(self.root, &self.prefix.join(path))
    }
}

impl FunctionSpaceBasis for SubspaceBasis<'_> {
    fn root_basis(&self) -> &GlobalBasis {
        self.root
    }

    fn prefix_path(&self) -> &TreePath {
        &self.prefix
    }
}

/// The subtree of `basis` at `path`, relative to the prefix of `basis`.
pub fn subspace_basis<'b, B>(basis: &'b B, path: &TreePath) -> Result<SubspaceBasis<'b>>
where
    B: FunctionSpaceBasis + ?Sized,
{
    let root = basis.root_basis();
    let prefix = basis.prefix_path().join(path);
    root.node(&prefix)?;
    Ok(SubspaceBasis { root, prefix })
}

//! Restriction of a basis to a single element.
//!
//! Local indices are assigned leaf by leaf in depth-first pre-order of the
//! basis tree, consecutively within each leaf. Binding a view to a cell
//! computes the global multi-index of every local shape function once; later
//! `index` calls read the cache.

use std::fmt;

use crate::basistree::{BasisNode, GlobalBasis, LeafBasis};
use crate::error::{Error, Result};
use crate::indexing::MultiIndex;
use crate::localfe::LocalFiniteElement;
use crate::mesh::ElementGeometry;

/// Path from the root of a basis tree to one of its nodes.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath(Vec<usize>);

impl TreePath {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, i: usize) -> Self {
        let mut digits = self.0.clone();
        digits.push(i);
        Self(digits)
    }

    pub fn join(&self, suffix: &TreePath) -> Self {
        Self(self.0.iter().chain(&suffix.0).copied().collect())
    }
}

impl std::ops::Deref for TreePath {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for TreePath {
    fn from(digits: Vec<usize>) -> Self {
        Self(digits)
    }
}

impl<const N: usize> From<[usize; N]> for TreePath {
    fn from(digits: [usize; N]) -> Self {
        Self(digits.to_vec())
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", digits.join(","))
    }
}

impl fmt::Debug for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
enum LocalNodeKind<'b> {
    Leaf(&'b LeafBasis),
    Inner(Vec<LocalTreeNode<'b>>),
}

/// A node of the local basis tree.
#[derive(Clone, Debug)]
pub struct LocalTreeNode<'b> {
    path: TreePath,
    offset: usize,
    size: usize,
    kind: LocalNodeKind<'b>,
}

impl<'b> LocalTreeNode<'b> {
    fn build(node: &'b BasisNode, path: TreePath, offset: &mut usize) -> Self {
        let start = *offset;
        let kind = match node.as_leaf() {
            Some(leaf) => {
                *offset += leaf.finite_element().size();
                LocalNodeKind::Leaf(leaf)
            }
            None => LocalNodeKind::Inner(
                node.children()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| Self::build(c, path.child(i), offset))
                    .collect(),
            ),
        };
        Self {
            path,
            offset: start,
            size: *offset - start,
            kind,
        }
    }

    /// Path of this node in the tree of the root basis.
    pub fn path(&self) -> &TreePath {
        &self.path
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, LocalNodeKind::Leaf(_))
    }

    /// Number of local shape functions in this subtree.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn child_count(&self) -> usize {
        match &self.kind {
            LocalNodeKind::Leaf(_) => 0,
            LocalNodeKind::Inner(children) => children.len(),
        }
    }

    pub fn child(&self, i: usize) -> Option<&LocalTreeNode<'b>> {
        match &self.kind {
            LocalNodeKind::Leaf(_) => None,
            LocalNodeKind::Inner(children) => children.get(i),
        }
    }

    pub fn finite_element(&self) -> Option<&'b LocalFiniteElement> {
        self.leaf_basis().map(LeafBasis::finite_element)
    }

    pub(crate) fn leaf_basis(&self) -> Option<&'b LeafBasis> {
        match self.kind {
            LocalNodeKind::Leaf(leaf) => Some(leaf),
            LocalNodeKind::Inner(_) => None,
        }
    }

    /// Local index of the leaf-local shape function `k` of this leaf.
    pub fn local_index(&self, k: usize) -> usize {
        debug_assert!(k < self.size);
        self.offset + k
    }

    /// Leaves of this subtree in depth-first pre-order.
    pub fn leaves(&self) -> Vec<&LocalTreeNode<'b>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'s>(&'s self, out: &mut Vec<&'s LocalTreeNode<'b>>) {
        match &self.kind {
            LocalNodeKind::Leaf(_) => out.push(self),
            LocalNodeKind::Inner(children) => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn node(&self, path: &[usize]) -> Option<&LocalTreeNode<'b>> {
        path.iter().try_fold(self, |node, &i| node.child(i))
    }

    fn shift(&mut self, by: usize) {
        self.offset -= by;
        if let LocalNodeKind::Inner(children) = &mut self.kind {
            children.iter_mut().for_each(|c| c.shift(by));
        }
    }
}

/// Localization of a basis (or of one of its subtrees) to one element.
#[derive(Clone, Debug)]
pub struct LocalView<'b> {
    basis: &'b GlobalBasis,
    tree: LocalTreeNode<'b>,
    root_offset: usize,
    element: Option<usize>,
    root_indices: Vec<MultiIndex>,
}

impl<'b> LocalView<'b> {
    /// View of the subtree at `prefix`. Local indices are numbered from zero
    /// within the subtree; global multi-indices are those of the root basis.
    pub(crate) fn new(basis: &'b GlobalBasis, prefix: TreePath) -> Result<Self> {
        let mut offset = 0;
        let full = LocalTreeNode::build(basis.root_node(), TreePath::root(), &mut offset);
        let mut tree = full
            .node(&prefix)
            .ok_or_else(|| Error::InvalidTreePath(prefix.clone()))?
            .clone();
        let root_offset = tree.offset;
        tree.shift(root_offset);
        Ok(Self {
            basis,
            tree,
            root_offset,
            element: None,
            root_indices: Vec::new(),
        })
    }

    pub fn basis(&self) -> &'b GlobalBasis {
        self.basis
    }

    /// Path of the viewed subtree within the root basis.
    pub fn prefix_path(&self) -> &TreePath {
        &self.tree.path
    }

    pub fn bind(&mut self, cell: usize) -> Result<()> {
        let mesh = self.basis.mesh();
        mesh.check_cell(cell)?;
        self.root_indices.clear();
        self.basis
            .root_node()
            .append_indices(mesh, cell, &mut self.root_indices)?;
        self.element = Some(cell);
        Ok(())
    }

    pub fn unbind(&mut self) {
        self.element = None;
        self.root_indices.clear();
    }

    pub fn element(&self) -> Option<usize> {
        self.element
    }

    pub fn geometry(&self) -> Result<ElementGeometry> {
        let cell = self.element.ok_or(Error::Unbound)?;
        self.basis.mesh().geometry(cell)
    }

    /// Number of shape functions on the bound element.
    pub fn size(&self) -> Result<usize> {
        self.element.map(|_| self.tree.size).ok_or(Error::Unbound)
    }

    /// Upper bound for `size` over all elements; available while unbound.
    pub fn max_size(&self) -> usize {
        self.tree.size
    }

    pub fn tree(&self) -> &LocalTreeNode<'b> {
        &self.tree
    }

    /// Node of the local tree at `path`, relative to the viewed subtree.
    pub fn tree_child(&self, path: &TreePath) -> Result<&LocalTreeNode<'b>> {
        self.tree
            .node(path)
            .ok_or_else(|| Error::InvalidTreePath(path.clone()))
    }

    /// Global multi-index of local shape function `i`.
    pub fn index(&self, i: usize) -> Result<&MultiIndex> {
        let size = self.size()?;
        if i >= size {
            return Err(Error::LocalIndexOutOfRange { index: i, size });
        }
        Ok(&self.root_indices[self.root_offset + i])
    }

    /// Global multi-indices of all local shape functions.
    pub fn indices(&self) -> Result<&[MultiIndex]> {
        let size = self.size()?;
        Ok(&self.root_indices[self.root_offset..self.root_offset + size])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basistree::{make_basis, BasisDescriptor};
    use crate::indexing::MergingStrategy::*;
    use crate::localfe::Continuity;
    use crate::mesh::Mesh;

    fn taylor_hood(nx: usize, velocity: crate::indexing::MergingStrategy) -> GlobalBasis {
        make_basis(
            Mesh::structured(nx, nx).unwrap(),
            BasisDescriptor::taylor_hood(2, velocity),
        )
        .unwrap()
    }

    #[test]
    fn unbound_view() {
        let th = taylor_hood(1, BlockedInterleaved);
        let view = th.local_view();
        assert_eq!(view.tree().child_count(), 2);
        assert_eq!(view.tree().child(0).unwrap().child_count(), 2);
        assert!(view.tree().child(0).unwrap().child(1).unwrap().is_leaf());
        assert!(matches!(view.index(0), Err(Error::Unbound)));
        assert!(matches!(view.size(), Err(Error::Unbound)));
        assert_eq!(view.max_size(), 15);
    }

    #[test]
    fn bound_sizes_and_offsets() {
        let th = taylor_hood(2, BlockedInterleaved);
        let mut view = th.local_view();
        view.bind(3).unwrap();
        assert_eq!(view.size().unwrap(), 15);
        let v1 = view.tree_child(&TreePath::from([0, 1])).unwrap();
        assert_eq!(v1.local_index(2), 8);
        let p = view.tree_child(&TreePath::from([1])).unwrap();
        assert_eq!(p.finite_element().unwrap().degree(), 1);
        assert_eq!(p.local_index(0), 12);
        assert!(matches!(
            view.tree_child(&TreePath::from([2])),
            Err(Error::InvalidTreePath(_))
        ));
        assert!(matches!(
            view.index(15),
            Err(Error::LocalIndexOutOfRange { index: 15, size: 15 })
        ));
        assert!(view.bind(8).is_err());
    }

    #[test]
    fn interleaved_velocity_indices() {
        let th = taylor_hood(1, BlockedInterleaved);
        let lex = taylor_hood(1, BlockedLexicographic);
        let mut a = th.local_view();
        let mut b = lex.local_view();
        for cell in 0..2 {
            a.bind(cell).unwrap();
            b.bind(cell).unwrap();
            for comp in 0..2 {
                for k in 0..6 {
                    let i = 6 * comp + k;
                    let lex = b.index(i).unwrap();
                    let inter = a.index(i).unwrap();
                    assert_eq!(lex[0], 0);
                    assert_eq!(lex[1], comp);
                    assert_eq!(inter.digits(), &[0, lex[2], comp]);
                }
            }
            // pressure: (1, vertex of the P1 leaf)
            let first_vertex = th.mesh().cells()[cell][0];
            assert_eq!(a.index(12).unwrap(), &MultiIndex::from([1, first_vertex]));
        }
    }

    #[test]
    fn shared_dofs_agree() {
        let b = make_basis(Mesh::structured(1, 1).unwrap(), BasisDescriptor::lagrange(3)).unwrap();
        let mesh = b.mesh();
        let mut view = b.local_view();
        let mut by_node = std::collections::HashMap::new();
        for cell in 0..2 {
            view.bind(cell).unwrap();
            let geo = view.geometry().unwrap();
            let fe = view.tree().finite_element().unwrap();
            for (k, p) in fe.nodes().iter().enumerate() {
                let x = geo.global(p);
                let key = ((x.x * 3.0).round() as i64, (x.y * 3.0).round() as i64);
                let idx = view.index(k).unwrap().clone();
                if let Some(prev) = by_node.insert(key, idx.clone()) {
                    assert_eq!(prev, idx);
                }
            }
        }
        assert_eq!(by_node.len(), 16);
        assert_eq!(mesh.num_cells(), 2);
    }

    #[test]
    fn rebinding_is_idempotent() {
        let th = taylor_hood(2, BlockedLexicographic);
        let mut view = th.local_view();
        view.bind(5).unwrap();
        let first = view.indices().unwrap().to_vec();
        view.bind(5).unwrap();
        assert_eq!(view.indices().unwrap(), first.as_slice());
    }

    #[test]
    fn dg_indices_are_cellwise() {
        let b = make_basis(
            Mesh::structured(2, 1).unwrap(),
            BasisDescriptor::Lagrange {
                degree: 1,
                continuity: Continuity::Discontinuous,
            },
        )
        .unwrap();
        let mut view = b.local_view();
        view.bind(3).unwrap();
        assert_eq!(view.index(2).unwrap(), &MultiIndex::from([3, 2]));
    }
}

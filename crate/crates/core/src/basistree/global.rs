use std::sync::Arc;

use super::BasisDescriptor;
use crate::error::{Error, Result};
use crate::indexing::{IndexTree, MergeContext, MergingStrategy, MultiIndex};
use crate::localfe::{Continuity, LocalFiniteElement, LocalKey};
use crate::localview::{LocalView, TreePath};
use crate::mesh::{Mesh, REFERENCE_EDGES};

/// Per-entity DOF counts of a continuous Lagrange leaf and the resulting
/// block offsets of its flat global numbering (vertices, then edges, then
/// cells).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubentityLayout {
    pub per_vertex: usize,
    pub per_edge: usize,
    pub per_cell: usize,
    pub edge_offset: usize,
    pub cell_offset: usize,
    pub dimension: usize,
}

impl SubentityLayout {
    pub fn new(fe: &LocalFiniteElement, mesh: &Mesh) -> Self {
        let per_vertex = fe.dofs_per_subentity(2);
        let per_edge = fe.dofs_per_subentity(1);
        let per_cell = fe.dofs_per_subentity(0);
        let edge_offset = mesh.num_vertices() * per_vertex;
        let cell_offset = edge_offset + mesh.num_edges() * per_edge;
        Self {
            per_vertex,
            per_edge,
            per_cell,
            edge_offset,
            cell_offset,
            dimension: cell_offset + mesh.num_cells() * per_cell,
        }
    }

    fn per_codim(&self, codim: usize) -> usize {
        [self.per_cell, self.per_edge, self.per_vertex][codim]
    }

    fn block_offset(&self, codim: usize) -> usize {
        [self.cell_offset, self.edge_offset, 0][codim]
    }
}

/// How a leaf numbers its own basis functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LeafNumbering {
    /// Single digit: entity-class block offset + entity * multiplicity + within.
    Flat,
    /// `(class, entity, within)`, with classes vertex/edge/cell that carry DOFs.
    ByEntity,
    /// `(cell, within)` for discontinuous leaves.
    PerCell,
}

#[derive(Clone, Debug)]
pub(crate) struct LeafBasis {
    fe: LocalFiniteElement,
    layout: SubentityLayout,
    numbering: LeafNumbering,
    tree: IndexTree,
}

impl LeafBasis {
    fn new(fe: LocalFiniteElement, mesh: &Mesh, entity_blocked: bool) -> Self {
        let layout = SubentityLayout::new(&fe, mesh);
        let numbering = match (fe.continuity(), entity_blocked) {
            (Continuity::Discontinuous, _) => LeafNumbering::PerCell,
            (Continuity::Continuous, false) => LeafNumbering::Flat,
            (Continuity::Continuous, true) => LeafNumbering::ByEntity,
        };
        let tree = match numbering {
            LeafNumbering::Flat => IndexTree::uniform(layout.dimension, IndexTree::Value),
            LeafNumbering::PerCell => IndexTree::uniform(
                mesh.num_cells(),
                IndexTree::uniform(fe.size(), IndexTree::Value),
            ),
            LeafNumbering::ByEntity => IndexTree::non_uniform(
                [2, 1, 0]
                    .into_iter()
                    .filter(|&codim| layout.per_codim(codim) > 0)
                    .map(|codim| {
                        IndexTree::uniform(
                            mesh.entity_count(codim).unwrap(),
                            IndexTree::uniform(layout.per_codim(codim), IndexTree::Value),
                        )
                    })
                    .collect(),
            ),
        };
        Self {
            fe,
            layout,
            numbering,
            tree,
        }
    }

    pub(crate) fn finite_element(&self) -> &LocalFiniteElement {
        &self.fe
    }

    /// Global entity `(codim, index)` carrying the `k`-th shape function on
    /// `cell`, and the DOF's position among the DOFs of that entity.
    pub(crate) fn dof_entity(&self, mesh: &Mesh, cell: usize, key: &LocalKey) -> (usize, usize, usize) {
        let entity = mesh.subentity(cell, key.codim, key.subentity);
        let within = if key.codim == 1 {
            let [a, _] = REFERENCE_EDGES[key.subentity];
            let first = mesh.edges()[entity][0];
            if mesh.cells()[cell][a] == first {
                key.within
            } else {
                self.layout.per_edge - 1 - key.within
            }
        } else {
            key.within
        };
        (key.codim, entity, within)
    }

    fn leaf_index(&self, mesh: &Mesh, cell: usize, k: usize) -> Result<MultiIndex> {
        if self.numbering == LeafNumbering::PerCell {
            return MultiIndex::from_digits(&[cell, k]);
        }
        let (codim, entity, within) = self.dof_entity(mesh, cell, &self.fe.keys()[k]);
        let multiplicity = self.layout.per_codim(codim);
        match self.numbering {
            LeafNumbering::Flat => MultiIndex::from_digits(&[
                self.layout.block_offset(codim) + entity * multiplicity + within,
            ]),
            _ => {
                let class = [2, 1, 0]
                    .into_iter()
                    .filter(|&c| self.layout.per_codim(c) > 0)
                    .position(|c| c == codim)
                    .unwrap();
                MultiIndex::from_digits(&[class, entity, within])
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct InnerBasis {
    merge: MergeContext,
    children: Vec<BasisNode>,
}

#[derive(Clone, Debug)]
pub(crate) enum BasisNode {
    Leaf(LeafBasis),
    Inner(InnerBasis),
}

impl BasisNode {
    fn build(descriptor: &BasisDescriptor, mesh: &Mesh, entity_blocked: bool) -> Result<Self> {
        match descriptor {
            BasisDescriptor::Lagrange { degree, continuity } => Ok(Self::Leaf(LeafBasis::new(
                LocalFiniteElement::lagrange(*degree, *continuity)?,
                mesh,
                entity_blocked,
            ))),
            BasisDescriptor::Power {
                child,
                exponent,
                strategy,
            } => {
                let by_entity = *strategy == MergingStrategy::BlockedByEntity;
                let node = Self::build(child, mesh, by_entity)?;
                Self::inner(*strategy, vec![node; *exponent])
            }
            BasisDescriptor::Composite { children, strategy } => {
                let nodes = children
                    .iter()
                    .map(|c| Self::build(c, mesh, false))
                    .collect::<Result<Vec<_>>>()?;
                Self::inner(*strategy, nodes)
            }
        }
    }

    fn inner(strategy: MergingStrategy, children: Vec<BasisNode>) -> Result<Self> {
        let trees = children.iter().map(|c| c.tree().clone()).collect();
        Ok(Self::Inner(InnerBasis {
            merge: MergeContext::new(strategy, trees)?,
            children,
        }))
    }

    pub(crate) fn tree(&self) -> &IndexTree {
        match self {
            Self::Leaf(leaf) => &leaf.tree,
            Self::Inner(inner) => inner.merge.tree(),
        }
    }

    pub(crate) fn children(&self) -> &[BasisNode] {
        match self {
            Self::Leaf(_) => &[],
            Self::Inner(inner) => &inner.children,
        }
    }

    pub(crate) fn as_leaf(&self) -> Option<&LeafBasis> {
        match self {
            Self::Leaf(leaf) => Some(leaf),
            Self::Inner(_) => None,
        }
    }

    pub(crate) fn merge_context(&self) -> Option<&MergeContext> {
        match self {
            Self::Leaf(_) => None,
            Self::Inner(inner) => Some(&inner.merge),
        }
    }

    pub(crate) fn node(&self, path: &[usize]) -> Option<&BasisNode> {
        path.iter().try_fold(self, |node, &i| node.children().get(i))
    }

    /// Appends the multi-indices (relative to this node) of all shape
    /// functions on `cell`, leaves in depth-first pre-order.
    pub(crate) fn append_indices(&self, mesh: &Mesh, cell: usize, out: &mut Vec<MultiIndex>) -> Result<()> {
        match self {
            Self::Leaf(leaf) => {
                for k in 0..leaf.fe.size() {
                    out.push(leaf.leaf_index(mesh, cell, k)?);
                }
            }
            Self::Inner(inner) => {
                for (i, child) in inner.children.iter().enumerate() {
                    let start = out.len();
                    child.append_indices(mesh, cell, out)?;
                    for index in &mut out[start..] {
                        *index = inner.merge.merge_index(i, index)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A basis tree bound to a mesh, with a global multi-index for every basis
/// function.
#[derive(Clone, Debug)]
pub struct GlobalBasis {
    mesh: Arc<Mesh>,
    descriptor: BasisDescriptor,
    root: BasisNode,
    root_path: TreePath,
}

impl GlobalBasis {
    pub fn new(mesh: impl Into<Arc<Mesh>>, descriptor: BasisDescriptor) -> Result<Self> {
        descriptor.validate()?;
        let mesh = mesh.into();
        let root = BasisNode::build(&descriptor, &mesh, false)?;
        Ok(Self {
            mesh,
            descriptor,
            root,
            root_path: TreePath::root(),
        })
    }

    pub fn mesh(&self) -> &Mesh {
        &self.mesh
    }

    pub fn mesh_arc(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn descriptor(&self) -> &BasisDescriptor {
        &self.descriptor
    }

    pub(crate) fn root_node(&self) -> &BasisNode {
        &self.root
    }

    pub(crate) fn root_path_ref(&self) -> &TreePath {
        &self.root_path
    }

    /// Total number of basis functions.
    pub fn dimension(&self) -> usize {
        self.root.tree().leaf_count()
    }

    /// The index tree of the basis, used as the shape of coefficient containers.
    pub fn container_descriptor(&self) -> &IndexTree {
        self.root.tree()
    }

    /// Out-degree of the index tree at `prefix`.
    pub fn size_of_prefix(&self, prefix: &MultiIndex) -> Result<usize> {
        self.root.tree().deg_plus(prefix)
    }

    /// Index tree of the subtree at `path`, numbered as if that subtree were
    /// the whole basis (before merging into its ancestors).
    pub fn node_index_tree(&self, path: &TreePath) -> Result<&IndexTree> {
        self.node(path).map(BasisNode::tree)
    }

    /// Merging context of the inner node at `path`, `None` for leaves.
    pub fn node_merge_context(&self, path: &TreePath) -> Result<Option<&MergeContext>> {
        self.node(path).map(BasisNode::merge_context)
    }

    pub(crate) fn node(&self, path: &TreePath) -> Result<&BasisNode> {
        self.root
            .node(path)
            .ok_or_else(|| Error::InvalidTreePath(path.clone()))
    }

    /// Unbound local view of the whole basis.
    pub fn local_view(&self) -> LocalView<'_> {
        LocalView::new(self, TreePath::root()).expect("the root path is always valid")
    }

    /// All global multi-indices of the subtree at `path`, one entry per
    /// basis function, in lexicographic order.
    pub fn indices_of(&self, path: &TreePath) -> Result<Vec<MultiIndex>> {
        let mut view = LocalView::new(self, path.clone())?;
        let mut all = std::collections::BTreeSet::new();
        for cell in 0..self.mesh.num_cells() {
            view.bind(cell)?;
            all.extend(view.indices()?.iter().cloned());
        }
        Ok(all.into_iter().collect())
    }
}

/// Binds `descriptor` to `mesh`.
pub fn make_basis(mesh: impl Into<Arc<Mesh>>, descriptor: BasisDescriptor) -> Result<GlobalBasis> {
    GlobalBasis::new(mesh, descriptor)
}

use thiserror::Error;

use crate::indexing::{MergingStrategy, MultiIndex};
use crate::localview::TreePath;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mesh needs at least one subdivision per direction, got {nx}x{ny}")]
    EmptyMesh { nx: usize, ny: usize },
    #[error("codimension {0} out of range (expected 0, 1 or 2)")]
    CodimOutOfRange(usize),
    #[error("cell {cell} out of range (mesh has {count} cells)")]
    CellOutOfRange { cell: usize, count: usize },

    #[error("Lagrange degree {0} out of range (supported: 0..=3)")]
    DegreeOutOfRange(usize),

    #[error("multi-index capacity of {capacity} digits exceeded")]
    CapacityExceeded { capacity: usize },
    #[error("prefix {0} is not present in the index tree")]
    PrefixNotFound(MultiIndex),
    #[error("prefix {0} addresses a leaf, which has no children")]
    PrefixIsLeaf(MultiIndex),
    #[error("child index {index} out of range for a node with {count} children")]
    ChildOutOfRange { index: usize, count: usize },
    #[error("{0} needs a non-empty child multi-index")]
    EmptyChildIndex(MergingStrategy),
    #[error("{strategy} is not allowed here: {reason}")]
    StrategyNotAllowed {
        strategy: MergingStrategy,
        reason: &'static str,
    },
    #[error("incompatible child index trees for {strategy}: {reason}")]
    IncompatibleChildren {
        strategy: MergingStrategy,
        reason: &'static str,
    },

    #[error("invalid basis descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("local view is not bound to an element")]
    Unbound,
    #[error("local index {index} out of range (local size {size})")]
    LocalIndexOutOfRange { index: usize, size: usize },
    #[error("tree path {0} does not address a node of the basis tree")]
    InvalidTreePath(TreePath),

    #[error("multi-index {0} addresses a block, not a scalar entry")]
    NotALeafPath(MultiIndex),
    #[error("multi-index {0} is out of range for this container")]
    InvalidIndex(MultiIndex),
    #[error("container shape does not match the basis")]
    ShapeMismatch,
    #[error("range dimension mismatch: expected {expected}, got {found}")]
    RangeMismatch { expected: usize, found: usize },
    #[error("point ({0}, {1}) lies outside the mesh")]
    OutsideDomain(f64, f64),
    #[error("boundary degrees of freedom require continuous Lagrange leaves")]
    DiscontinuousBoundary,

    #[error("mesh too large for the dense solver ({cells} cells, limit {limit})")]
    MeshTooLarge { cells: usize, limit: usize },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

//! Multi-indices, index trees and the strategies that merge the index maps of
//! child bases into the index map of their parent.

mod merge;
mod multi_index;
mod tree;

pub use merge::{merge_index, merge_tree, MergeContext, MergingStrategy};
pub use multi_index::{MultiIndex, MULTI_INDEX_CAPACITY};
pub use tree::{is_valid_index_tree, IndexTree};

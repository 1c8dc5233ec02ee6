use std::fmt;
use std::str::FromStr;

use super::{IndexTree, MultiIndex};
use crate::error::{Error, Result};

/// Rule combining the index maps of the children of an inner basis node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MergingStrategy {
    FlatLexicographic,
    FlatInterleaved,
    BlockedLexicographic,
    BlockedInterleaved,
    BlockedByEntity,
}

impl MergingStrategy {
    pub const ALL: [MergingStrategy; 5] = [
        Self::FlatLexicographic,
        Self::FlatInterleaved,
        Self::BlockedLexicographic,
        Self::BlockedInterleaved,
        Self::BlockedByEntity,
    ];

    /// Strategies that are only defined for power nodes.
    pub fn requires_power_node(self) -> bool {
        matches!(
            self,
            Self::FlatInterleaved | Self::BlockedInterleaved | Self::BlockedByEntity
        )
    }

    pub fn is_flat(self) -> bool {
        matches!(self, Self::FlatLexicographic | Self::FlatInterleaved)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::FlatLexicographic => "flatLexicographic",
            Self::FlatInterleaved => "flatInterleaved",
            Self::BlockedLexicographic => "blockedLexicographic",
            Self::BlockedInterleaved => "blockedInterleaved",
            Self::BlockedByEntity => "blockedByEntity",
        }
    }
}

impl fmt::Display for MergingStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MergingStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|strategy| strategy.name() == s)
            .ok_or_else(|| format!("unknown merging strategy `{s}`"))
    }
}

/// The child index trees of an inner node together with the strategy that
/// merges them. Everything a strategy needs (first-digit offsets, the stride
/// of interleaving, entity-local offsets) is derived from the child trees.
#[derive(Clone, Debug, PartialEq)]
pub struct MergeContext {
    strategy: MergingStrategy,
    children: Vec<IndexTree>,
    offsets: Vec<usize>,
    merged: IndexTree,
}

impl MergeContext {
    pub fn new(strategy: MergingStrategy, children: Vec<IndexTree>) -> Result<Self> {
        let children: Vec<IndexTree> = children.iter().map(IndexTree::normalized).collect();
        if children.is_empty() {
            return Err(Error::IncompatibleChildren {
                strategy,
                reason: "an inner node needs at least one child",
            });
        }
        if children.iter().any(IndexTree::is_value) {
            return Err(Error::EmptyChildIndex(strategy));
        }
        if strategy.requires_power_node() && children.iter().any(|c| c != &children[0]) {
            return Err(Error::StrategyNotAllowed {
                strategy,
                reason: "children of a power node must have identical index trees",
            });
        }
        let mut offsets = Vec::with_capacity(children.len());
        let mut acc = 0;
        for c in &children {
            offsets.push(acc);
            acc += c.degree();
        }
        let merged = build_tree(strategy, &children)?;
        Ok(Self {
            strategy,
            children,
            offsets,
            merged,
        })
    }

    pub fn strategy(&self) -> MergingStrategy {
        self.strategy
    }

    pub fn children(&self) -> &[IndexTree] {
        &self.children
    }

    /// Index tree of the merged node.
    pub fn tree(&self) -> &IndexTree {
        &self.merged
    }

    /// First-digit offset `L_i` of child `i` under flat-lexicographic merging.
    pub fn offset(&self, child: usize) -> usize {
        self.offsets[child]
    }

    /// Entity-local offset `N_i(e)`: number of indices the children before
    /// `child` attach to the entity addressed by `entity`.
    pub fn entity_offset(&self, child: usize, entity: &MultiIndex) -> Result<usize> {
        self.children[..child]
            .iter()
            .map(|c| c.deg_plus(entity))
            .sum()
    }

    /// Maps the multi-index `index` of child `child` to the merged node.
    pub fn merge_index(&self, child: usize, index: &MultiIndex) -> Result<MultiIndex> {
        let m = self.children.len();
        if child >= m {
            return Err(Error::ChildOutOfRange {
                index: child,
                count: m,
            });
        }
        if !self.children[child].is_leaf_path(index) {
            return Err(Error::InvalidIndex(index.clone()));
        }
        match self.strategy {
            MergingStrategy::BlockedLexicographic => index.prepended(child),
            MergingStrategy::BlockedInterleaved => index.appended(child),
            MergingStrategy::FlatLexicographic => {
                let first = *index
                    .first()
                    .ok_or(Error::EmptyChildIndex(self.strategy))?;
                let mut out = index.clone();
                out.set_digit(0, self.offsets[child] + first);
                Ok(out)
            }
            MergingStrategy::FlatInterleaved => {
                let first = *index
                    .first()
                    .ok_or(Error::EmptyChildIndex(self.strategy))?;
                let mut out = index.clone();
                out.set_digit(0, first * m + child);
                Ok(out)
            }
            MergingStrategy::BlockedByEntity => {
                let (&within, _) = index.split_last().ok_or(Error::EmptyChildIndex(self.strategy))?;
                let entity = index.prefix(index.len() - 1);
                let mut out = index.clone();
                out.set_digit(index.len() - 1, within + self.entity_offset(child, &entity)?);
                Ok(out)
            }
        }
    }
}

fn build_tree(strategy: MergingStrategy, children: &[IndexTree]) -> Result<IndexTree> {
    let m = children.len();
    match strategy {
        MergingStrategy::BlockedLexicographic => Ok(IndexTree::non_uniform(children.to_vec())),
        MergingStrategy::BlockedInterleaved => {
            Ok(children[0].map_leaves(&IndexTree::uniform(m, IndexTree::Value)))
        }
        MergingStrategy::FlatLexicographic | MergingStrategy::FlatInterleaved => {
            let mut total = 0;
            let mut shape: Option<&IndexTree> = None;
            for c in children {
                match c {
                    IndexTree::Value => return Err(Error::EmptyChildIndex(strategy)),
                    IndexTree::NonUniform(_) => {
                        return Err(Error::IncompatibleChildren {
                            strategy,
                            reason: "children below the first digit have differing shapes",
                        })
                    }
                    IndexTree::Uniform { size, child } => {
                        if shape.is_some_and(|s| s != child.as_ref()) {
                            return Err(Error::IncompatibleChildren {
                                strategy,
                                reason: "children below the first digit have differing shapes",
                            });
                        }
                        shape = Some(child);
                        total += size;
                    }
                }
            }
            Ok(IndexTree::uniform(total, shape.unwrap().clone()))
        }
        MergingStrategy::BlockedByEntity => {
            if children[0].depth() < 2 {
                return Err(Error::IncompatibleChildren {
                    strategy,
                    reason: "child indices must have the form (entity, within)",
                });
            }
            widen_entity_blocks(&children[0], m, strategy)
        }
    }
}

// Multiplies the size of every node whose children are all leaves by `m`.
fn widen_entity_blocks(node: &IndexTree, m: usize, strategy: MergingStrategy) -> Result<IndexTree> {
    let mixed = Error::IncompatibleChildren {
        strategy,
        reason: "entity blocks mix leaves and subtrees",
    };
    match node {
        IndexTree::Value => Err(mixed),
        IndexTree::Uniform { size, child } if child.is_value() => {
            Ok(IndexTree::uniform(size * m, IndexTree::Value))
        }
        IndexTree::Uniform { size, child } => Ok(IndexTree::uniform(
            *size,
            widen_entity_blocks(child, m, strategy)?,
        )),
        IndexTree::NonUniform(children) => {
            if children.iter().any(IndexTree::is_value) {
                return Err(mixed);
            }
            let widened = children
                .iter()
                .map(|c| widen_entity_blocks(c, m, strategy))
                .collect::<Result<Vec<_>>>()?;
            Ok(IndexTree::non_uniform(widened))
        }
    }
}

/// Merged multi-index of leaf `index` of child `child`.
pub fn merge_index(
    strategy: MergingStrategy,
    child: usize,
    index: &MultiIndex,
    children: &[IndexTree],
) -> Result<MultiIndex> {
    MergeContext::new(strategy, children.to_vec())?.merge_index(child, index)
}

/// Index tree of a node whose children have the given index trees.
pub fn merge_tree(strategy: MergingStrategy, children: &[IndexTree]) -> Result<IndexTree> {
    Ok(MergeContext::new(strategy, children.to_vec())?.merged)
}

use std::fmt;

use crate::error::{Error, Result};
use crate::indexing::MergingStrategy;
use crate::localfe::{Continuity, MAX_DEGREE};

/// Deepest descriptor tree accepted by [`BasisDescriptor::validate`], counting
/// the leaf level.
pub const MAX_DESCRIPTOR_DEPTH: usize = 4;

/// Declarative description of a basis tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisDescriptor {
    Lagrange {
        degree: usize,
        continuity: Continuity,
    },
    Power {
        child: Box<BasisDescriptor>,
        exponent: usize,
        strategy: MergingStrategy,
    },
    Composite {
        children: Vec<BasisDescriptor>,
        strategy: MergingStrategy,
    },
}

impl BasisDescriptor {
    pub fn lagrange(degree: usize) -> Self {
        Self::Lagrange {
            degree,
            continuity: Continuity::Continuous,
        }
    }

    pub fn dg(degree: usize) -> Self {
        Self::Lagrange {
            degree,
            continuity: Continuity::Discontinuous,
        }
    }

    pub fn power(child: BasisDescriptor, exponent: usize, strategy: MergingStrategy) -> Self {
        Self::Power {
            child: Box::new(child),
            exponent,
            strategy,
        }
    }

    pub fn composite(children: Vec<BasisDescriptor>, strategy: MergingStrategy) -> Self {
        Self::Composite { children, strategy }
    }

    /// `(P2)^dim x P1` with the given strategy for the velocity power node
    /// and blocked-lexicographic merging at the root.
    pub fn taylor_hood(dim: usize, velocity: MergingStrategy) -> Self {
        Self::composite(
            vec![Self::power(Self::lagrange(2), dim, velocity), Self::lagrange(1)],
            MergingStrategy::BlockedLexicographic,
        )
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Self::Lagrange { .. })
    }

    pub fn child_count(&self) -> usize {
        match self {
            Self::Lagrange { .. } => 0,
            Self::Power { exponent, .. } => *exponent,
            Self::Composite { children, .. } => children.len(),
        }
    }

    pub fn child(&self, i: usize) -> Option<&BasisDescriptor> {
        match self {
            Self::Lagrange { .. } => None,
            Self::Power {
                child, exponent, ..
            } => (i < *exponent).then_some(child.as_ref()),
            Self::Composite { children, .. } => children.get(i),
        }
    }

    pub fn node(&self, path: &[usize]) -> Option<&BasisDescriptor> {
        path.iter().try_fold(self, |node, &i| node.child(i))
    }

    /// Number of levels, counting a lone leaf as 1.
    pub fn depth(&self) -> usize {
        match self {
            Self::Lagrange { .. } => 1,
            Self::Power { child, .. } => 1 + child.depth(),
            Self::Composite { children, .. } => {
                1 + children.iter().map(Self::depth).max().unwrap_or(0)
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Lagrange { .. } => 1,
            Self::Power {
                child, exponent, ..
            } => exponent * child.leaf_count(),
            Self::Composite { children, .. } => children.iter().map(Self::leaf_count).sum(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.depth() > MAX_DESCRIPTOR_DEPTH {
            return Err(Error::InvalidDescriptor(format!(
                "tree depth {} exceeds {MAX_DESCRIPTOR_DEPTH}",
                self.depth()
            )));
        }
        self.validate_node()
    }

    fn validate_node(&self) -> Result<()> {
        match self {
            Self::Lagrange { degree, .. } => {
                if *degree > MAX_DEGREE {
                    return Err(Error::DegreeOutOfRange(*degree));
                }
            }
            Self::Power {
                child,
                exponent,
                strategy,
            } => {
                if *exponent == 0 {
                    return Err(Error::InvalidDescriptor(
                        "power exponent must be at least 1".into(),
                    ));
                }
                if *strategy == MergingStrategy::BlockedByEntity && !child.supports_entity_blocking() {
                    return Err(Error::StrategyNotAllowed {
                        strategy: *strategy,
                        reason: "the child must be a Lagrange leaf or an entity-blocked power node",
                    });
                }
                child.validate_node()?;
            }
            Self::Composite { children, strategy } => {
                if children.is_empty() {
                    return Err(Error::InvalidDescriptor(
                        "composite node needs at least one child".into(),
                    ));
                }
                if strategy.requires_power_node() {
                    return Err(Error::StrategyNotAllowed {
                        strategy: *strategy,
                        reason: "only defined for power nodes",
                    });
                }
                for c in children {
                    c.validate_node()?;
                }
            }
        }
        Ok(())
    }

    fn supports_entity_blocking(&self) -> bool {
        match self {
            Self::Lagrange { .. } => true,
            Self::Power {
                child, strategy, ..
            } => *strategy == MergingStrategy::BlockedByEntity && child.supports_entity_blocking(),
            Self::Composite { .. } => false,
        }
    }
}

/// Prints the descriptor in the notation accepted by
/// [`parse_descriptor`](super::parse_descriptor).
impl fmt::Display for BasisDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lagrange {
                degree,
                continuity: Continuity::Continuous,
            } => write!(f, "lagrange({degree})"),
            Self::Lagrange {
                degree,
                continuity: Continuity::Discontinuous,
            } => write!(f, "dg({degree})"),
            Self::Power {
                child,
                exponent,
                strategy,
            } => write!(f, "power({child}, {exponent}, {strategy})"),
            Self::Composite { children, strategy } => {
                write!(f, "composite(")?;
                for c in children {
                    write!(f, "{c}, ")?;
                }
                write!(f, "{strategy})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MergingStrategy::*;

    #[test]
    fn display() {
        let th = BasisDescriptor::taylor_hood(2, BlockedInterleaved);
        assert_eq!(
            th.to_string(),
            "composite(power(lagrange(2), 2, blockedInterleaved), lagrange(1), blockedLexicographic)"
        );
        assert_eq!(th.depth(), 3);
        assert_eq!(th.leaf_count(), 3);
        assert_eq!(th.node(&[0, 1]), Some(&BasisDescriptor::lagrange(2)));
        assert_eq!(th.node(&[0, 2]), None);
    }

    #[test]
    fn validation() {
        assert!(BasisDescriptor::taylor_hood(3, BlockedLexicographic).validate().is_ok());
        assert!(matches!(
            BasisDescriptor::lagrange(4).validate(),
            Err(Error::DegreeOutOfRange(4))
        ));
        let interleaved_composite = BasisDescriptor::composite(
            vec![BasisDescriptor::lagrange(1), BasisDescriptor::lagrange(1)],
            FlatInterleaved,
        );
        assert!(matches!(
            interleaved_composite.validate(),
            Err(Error::StrategyNotAllowed { .. })
        ));
        let by_entity_of_composite = BasisDescriptor::power(
            BasisDescriptor::composite(vec![BasisDescriptor::lagrange(1)], BlockedLexicographic),
            2,
            BlockedByEntity,
        );
        assert!(by_entity_of_composite.validate().is_err());
        let deep = BasisDescriptor::power(
            BasisDescriptor::power(
                BasisDescriptor::power(
                    BasisDescriptor::power(BasisDescriptor::lagrange(1), 2, BlockedLexicographic),
                    2,
                    BlockedLexicographic,
                ),
                2,
                BlockedLexicographic,
            ),
            2,
            BlockedLexicographic,
        );
        assert!(matches!(deep.validate(), Err(Error::InvalidDescriptor(_))));
        assert!(BasisDescriptor::power(BasisDescriptor::lagrange(1), 0, FlatLexicographic)
            .validate()
            .is_err());
    }
}

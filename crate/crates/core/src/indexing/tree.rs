use std::collections::HashSet;
use std::fmt;

use super::MultiIndex;
use crate::error::{Error, Result};

/// Shape of a set of multi-indices viewed as an ordered tree.
///
/// `Value` is a leaf, `Uniform` has `size` children sharing one shape, and
/// `NonUniform` lists the shape of every child. The same type serves as the
/// container descriptor of nested coefficient vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum IndexTree {
    Value,
    Uniform { size: usize, child: Box<IndexTree> },
    NonUniform(Vec<IndexTree>),
}

impl IndexTree {
    pub fn uniform(size: usize, child: IndexTree) -> Self {
        Self::Uniform {
            size,
            child: Box::new(child),
        }
    }

    /// Builds a node from explicit children, collapsing to `Uniform` when all
    /// children have the same shape.
    pub fn non_uniform(children: Vec<IndexTree>) -> Self {
        match children.first() {
            Some(first) if children.iter().all(|c| c == first) => {
                Self::uniform(children.len(), first.clone())
            }
            _ => Self::NonUniform(children),
        }
    }

    /// Canonical form: every `NonUniform` with identical children becomes `Uniform`.
    pub fn normalized(&self) -> Self {
        match self {
            Self::Value => Self::Value,
            Self::Uniform { size, child } => Self::uniform(*size, child.normalized()),
            Self::NonUniform(children) => {
                Self::non_uniform(children.iter().map(Self::normalized).collect())
            }
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Self::Value)
    }

    /// Number of direct children.
    pub fn degree(&self) -> usize {
        match self {
            Self::Value => 0,
            Self::Uniform { size, .. } => *size,
            Self::NonUniform(children) => children.len(),
        }
    }

    pub fn child(&self, i: usize) -> Option<&IndexTree> {
        match self {
            Self::Value => None,
            Self::Uniform { size, child } => (i < *size).then_some(child.as_ref()),
            Self::NonUniform(children) => children.get(i),
        }
    }

    /// The subtree addressed by `prefix`.
    pub fn node(&self, prefix: &[usize]) -> Option<&IndexTree> {
        prefix.iter().try_fold(self, |node, &d| node.child(d))
    }

    /// Out-degree of the node addressed by `prefix`.
    pub fn deg_plus(&self, prefix: &MultiIndex) -> Result<usize> {
        match self.node(prefix) {
            None => Err(Error::PrefixNotFound(prefix.clone())),
            Some(Self::Value) => Err(Error::PrefixIsLeaf(prefix.clone())),
            Some(node) => Ok(node.degree()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Value => 1,
            Self::Uniform { size, child } => size * child.leaf_count(),
            Self::NonUniform(children) => children.iter().map(Self::leaf_count).sum(),
        }
    }

    /// Length of the longest leaf path.
    pub fn depth(&self) -> usize {
        match self {
            Self::Value => 0,
            Self::Uniform { child, .. } => 1 + child.depth(),
            Self::NonUniform(children) => {
                1 + children.iter().map(Self::depth).max().unwrap_or(0)
            }
        }
    }

    pub fn is_leaf_path(&self, path: &[usize]) -> bool {
        matches!(self.node(path), Some(Self::Value))
    }

    /// All leaf paths in lexicographic order.
    pub fn leaf_paths(&self) -> Vec<MultiIndex> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaves(&mut MultiIndex::new(), &mut out);
        out
    }

    fn collect_leaves(&self, prefix: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        match self {
            Self::Value => out.push(prefix.clone()),
            _ => {
                for i in 0..self.degree() {
                    let mut p = prefix.clone();
                    p.push(i).expect("index tree deeper than multi-index capacity");
                    self.child(i).unwrap().collect_leaves(&mut p, out);
                }
            }
        }
    }

    /// Replaces every leaf by `leaf`.
    pub(crate) fn map_leaves(&self, leaf: &IndexTree) -> IndexTree {
        match self {
            Self::Value => leaf.clone(),
            Self::Uniform { size, child } => Self::uniform(*size, child.map_leaves(leaf)),
            Self::NonUniform(children) => {
                Self::NonUniform(children.iter().map(|c| c.map_leaves(leaf)).collect())
            }
        }
    }

    /// Multi-line rendering with the out-degree of every distinct node.
    /// Children of uniform nodes are shown once, with `*` as their digit.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut Vec::new(), &mut out);
        out
    }

    fn render_into(&self, path: &mut Vec<String>, out: &mut String) {
        let label = format!("({})", path.join(","));
        let indent = "  ".repeat(path.len());
        match self {
            Self::Value => out.push_str(&format!("{indent}{label} scalar\n")),
            Self::Uniform { size, child } => {
                out.push_str(&format!("{indent}{label} uniform size={size}\n"));
                path.push("*".into());
                child.render_into(path, out);
                path.pop();
            }
            Self::NonUniform(children) => {
                out.push_str(&format!("{indent}{label} size={}\n", children.len()));
                for (i, c) in children.iter().enumerate() {
                    path.push(i.to_string());
                    c.render_into(path, out);
                    path.pop();
                }
            }
        }
    }
}

impl fmt::Display for IndexTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value => write!(f, "Value"),
            Self::Uniform { size, child } => write!(f, "Uniform({size}, {child})"),
            Self::NonUniform(children) => {
                write!(f, "NonUniform[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Debug for IndexTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checks the index-tree property of a set of multi-indices: whenever
/// `(I, i, ...)` is present, so are `(I, 0, ...)` through `(I, i-1, ...)`,
/// and no member is a strict prefix of another member.
pub fn is_valid_index_tree<'a, I>(paths: I) -> bool
where
    I: IntoIterator<Item = &'a MultiIndex>,
{
    let members: HashSet<&[usize]> = paths.into_iter().map(|p| p.digits()).collect();
    let mut prefixes: HashSet<&[usize]> = HashSet::new();
    let mut strict: HashSet<&[usize]> = HashSet::new();
    for m in &members {
        for len in 0..=m.len() {
            prefixes.insert(&m[..len]);
            if len < m.len() {
                strict.insert(&m[..len]);
            }
        }
    }
    if members.iter().any(|m| strict.contains(m)) {
        return false;
    }
    prefixes.iter().all(|p| match p.split_last() {
        None => true,
        Some((&last, head)) => (0..last).all(|d| {
            let mut sibling = head.to_vec();
            sibling.push(d);
            prefixes.contains(sibling.as_slice())
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(paths: &[&[usize]]) -> Vec<MultiIndex> {
        paths
            .iter()
            .map(|p| MultiIndex::from_digits(p).unwrap())
            .collect()
    }

    fn taylor_hood_lexicographic(dim: usize, n2: usize, n1: usize) -> IndexTree {
        IndexTree::non_uniform(vec![
            IndexTree::uniform(dim, IndexTree::uniform(n2, IndexTree::Value)),
            IndexTree::uniform(n1, IndexTree::Value),
        ])
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_index_tree(&set(&[&[0, 0], &[0, 1], &[1]])));
        assert!(!is_valid_index_tree(&set(&[&[0], &[2]])));
        assert!(!is_valid_index_tree(&set(&[&[0], &[0, 1]])));
        assert!(!is_valid_index_tree(&set(&[&[0, 1], &[1]])));
        assert!(is_valid_index_tree(&set(&[&[]])));
    }

    #[test]
    fn deg_plus_on_taylor_hood() {
        let t = taylor_hood_lexicographic(3, 10, 4);
        assert_eq!(t.deg_plus(&MultiIndex::new()).unwrap(), 2);
        assert_eq!(t.deg_plus(&MultiIndex::from([0])).unwrap(), 3);
        assert_eq!(t.deg_plus(&MultiIndex::from([0, 2])).unwrap(), 10);
        assert_eq!(t.deg_plus(&MultiIndex::from([1])).unwrap(), 4);
        assert!(matches!(
            t.deg_plus(&MultiIndex::from([1, 0])),
            Err(Error::PrefixIsLeaf(_))
        ));
        assert!(matches!(
            t.deg_plus(&MultiIndex::from([2])),
            Err(Error::PrefixNotFound(_))
        ));
        let flat = IndexTree::uniform(5, IndexTree::Value);
        assert_eq!(flat.deg_plus(&MultiIndex::new()).unwrap(), 5);
    }

    #[test]
    fn leaf_paths_are_sorted_and_valid() {
        let t = taylor_hood_lexicographic(2, 3, 2);
        let paths = t.leaf_paths();
        assert_eq!(paths.len(), t.leaf_count());
        assert_eq!(paths.len(), 8);
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(paths, sorted);
        assert!(is_valid_index_tree(&paths));
        assert_eq!(paths[0], MultiIndex::from([0, 0, 0]));
        assert_eq!(paths[7], MultiIndex::from([1, 1]));
        assert!(t.is_leaf_path(&[0, 1, 2]));
        assert!(!t.is_leaf_path(&[0, 1]));
    }

    #[test]
    fn normalization_and_display() {
        let t = IndexTree::NonUniform(vec![IndexTree::Value, IndexTree::Value]);
        assert_eq!(t.normalized(), IndexTree::uniform(2, IndexTree::Value));
        let th = taylor_hood_lexicographic(2, 9, 4);
        assert_eq!(
            th.to_string(),
            "NonUniform[Uniform(2, Uniform(9, Value)), Uniform(4, Value)]"
        );
        assert_eq!(th.depth(), 3);
        assert!(th.render().contains("(0,*) uniform size=9"));
    }
}

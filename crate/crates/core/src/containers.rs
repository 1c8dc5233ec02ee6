//! Nested coefficient containers shaped like an index tree.
//!
//! Every leaf path of the shaping tree addresses exactly one scalar. Uniform
//! and non-uniform nodes are both stored as a vector of child blocks; the
//! distinction is recovered by [`NestedContainer::shape`].

use std::fmt::{self, Display};

use crate::error::{Error, Result};
use crate::indexing::{IndexTree, MultiIndex};
use crate::subspace::FunctionSpaceBasis;

#[derive(Clone, Debug, PartialEq)]
pub enum NestedContainer<T> {
    Scalar(T),
    Block(Vec<NestedContainer<T>>),
}

/// Boolean flags with the shape of a coefficient container.
pub type MaskContainer = NestedContainer<bool>;

impl<T> Default for NestedContainer<T> {
    /// An empty block, to be sized with [`VectorBackendMut::resize`].
    fn default() -> Self {
        Self::Block(Vec::new())
    }
}

/// A container shaped by `descriptor` with every scalar set to `default`.
pub fn make_container<T: Clone>(descriptor: &IndexTree, default: T) -> NestedContainer<T> {
    match descriptor {
        IndexTree::Value => NestedContainer::Scalar(default),
        IndexTree::Uniform { size, child } => {
            NestedContainer::Block(vec![make_container(child, default); *size])
        }
        IndexTree::NonUniform(children) => NestedContainer::Block(
            children
                .iter()
                .map(|c| make_container(c, default.clone()))
                .collect(),
        ),
    }
}

impl<T> NestedContainer<T> {
    pub fn shape(&self) -> IndexTree {
        match self {
            Self::Scalar(_) => IndexTree::Value,
            Self::Block(children) => IndexTree::non_uniform(children.iter().map(Self::shape).collect()),
        }
    }

    /// Number of scalars.
    pub fn len(&self) -> usize {
        match self {
            Self::Scalar(_) => 1,
            Self::Block(children) => children.iter().map(Self::len).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn descend(&self, index: &MultiIndex) -> Result<&Self> {
        let mut node = self;
        for &d in index.iter() {
            node = match node {
                Self::Block(children) => children
                    .get(d)
                    .ok_or_else(|| Error::InvalidIndex(index.clone()))?,
                Self::Scalar(_) => return Err(Error::InvalidIndex(index.clone())),
            };
        }
        Ok(node)
    }

    fn descend_mut(&mut self, index: &MultiIndex) -> Result<&mut Self> {
        let mut node = self;
        for &d in index.iter() {
            node = match node {
                Self::Block(children) => children
                    .get_mut(d)
                    .ok_or_else(|| Error::InvalidIndex(index.clone()))?,
                Self::Scalar(_) => return Err(Error::InvalidIndex(index.clone())),
            };
        }
        Ok(node)
    }

    pub fn get(&self, index: &MultiIndex) -> Result<&T> {
        match self.descend(index)? {
            Self::Scalar(v) => Ok(v),
            Self::Block(_) => Err(Error::NotALeafPath(index.clone())),
        }
    }

    pub fn get_mut(&mut self, index: &MultiIndex) -> Result<&mut T> {
        match self.descend_mut(index)? {
            Self::Scalar(v) => Ok(v),
            Self::Block(_) => Err(Error::NotALeafPath(index.clone())),
        }
    }

    pub fn set(&mut self, index: &MultiIndex, value: T) -> Result<()> {
        *self.get_mut(index)? = value;
        Ok(())
    }

    /// All `(leaf path, scalar)` pairs in lexicographic order.
    pub fn entries(&self) -> Vec<(MultiIndex, &T)> {
        let mut out = Vec::new();
        self.collect(&mut MultiIndex::new(), &mut out);
        out
    }

    fn collect<'s>(&'s self, prefix: &mut MultiIndex, out: &mut Vec<(MultiIndex, &'s T)>) {
        match self {
            Self::Scalar(v) => out.push((prefix.clone(), v)),
            Self::Block(children) => {
                for (i, c) in children.iter().enumerate() {
                    let mut p = prefix.clone();
                    p.push(i).expect("container deeper than multi-index capacity");
                    c.collect(&mut p, out);
                }
            }
        }
    }

    pub fn for_each_mut(&mut self, f: &mut impl FnMut(&mut T)) {
        match self {
            Self::Scalar(v) => f(v),
            Self::Block(children) => children.iter_mut().for_each(|c| c.for_each_mut(f)),
        }
    }

    /// Scalars in lexicographic leaf order.
    pub fn values(&self) -> Vec<&T> {
        self.entries().into_iter().map(|(_, v)| v).collect()
    }
}

impl<T: Clone> NestedContainer<T> {
    pub fn fill(&mut self, value: T) {
        self.for_each_mut(&mut |v| *v = value.clone());
    }
}

impl<T: Display> NestedContainer<T> {
    /// One `multi-index value` line per scalar, in lexicographic order.
    pub fn dump(&self) -> String {
        self.entries()
            .into_iter()
            .map(|(index, v)| format!("{index} {v}\n"))
            .collect()
    }
}

impl<T: Display> Display for NestedContainer<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Read-only multi-index access to a container.
#[derive(Clone, Copy, Debug)]
pub struct VectorBackend<'a, T> {
    container: &'a NestedContainer<T>,
}

/// Mutable multi-index access to a container, including resizing to a basis.
#[derive(Debug)]
pub struct VectorBackendMut<'a, T> {
    container: &'a mut NestedContainer<T>,
}

pub fn vector_backend<T>(container: &NestedContainer<T>) -> VectorBackend<'_, T> {
    VectorBackend { container }
}

pub fn vector_backend_mut<T>(container: &mut NestedContainer<T>) -> VectorBackendMut<'_, T> {
    VectorBackendMut { container }
}

impl<'a, T> VectorBackend<'a, T> {
    pub fn get(&self, index: &MultiIndex) -> Result<&'a T> {
        self.container.get(index)
    }

    pub fn container(&self) -> &'a NestedContainer<T> {
        self.container
    }
}

impl<T> VectorBackendMut<'_, T> {
    pub fn get(&self, index: &MultiIndex) -> Result<&T> {
        self.container.get(index)
    }

    pub fn get_mut(&mut self, index: &MultiIndex) -> Result<&mut T> {
        self.container.get_mut(index)
    }

    pub fn set(&mut self, index: &MultiIndex, value: T) -> Result<()> {
        self.container.set(index, value)
    }

    pub fn as_const(&self) -> VectorBackend<'_, T> {
        VectorBackend {
            container: self.container,
        }
    }
}

impl<T: Clone + Default> VectorBackendMut<'_, T> {
    /// Reshapes the container to the index tree of the root basis of `basis`.
    /// Existing values are discarded; all scalars become `T::default()`.
    pub fn resize<B: FunctionSpaceBasis + ?Sized>(&mut self, basis: &B) {
        let descriptor = basis.root_basis().container_descriptor();
        *self.container = make_container(descriptor, T::default());
    }
}

use crate::basistree::GlobalBasis;
use crate::containers::{make_container, NestedContainer};
use crate::error::Result;
use crate::indexing::MultiIndex;

/// Flat enumeration of the multi-indices of a basis in lexicographic order,
/// used to address linear algebra objects.
#[derive(Clone, Debug)]
pub struct DofMap {
    ordinals: NestedContainer<usize>,
    indices: Vec<MultiIndex>,
}

impl DofMap {
    pub fn new(basis: &GlobalBasis) -> Self {
        let mut ordinals = make_container(basis.container_descriptor(), 0);
        let indices = basis.container_descriptor().leaf_paths();
        for (k, index) in indices.iter().enumerate() {
            ordinals.set(index, k).expect("leaf paths address scalars");
        }
        Self { ordinals, indices }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn ordinal(&self, index: &MultiIndex) -> Result<usize> {
        self.ordinals.get(index).copied()
    }

    pub fn multi_index(&self, ordinal: usize) -> &MultiIndex {
        &self.indices[ordinal]
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn gather<T: Copy>(&self, container: &NestedContainer<T>) -> Result<Vec<T>> {
        self.indices.iter().map(|i| container.get(i).copied()).collect()
    }

    pub fn scatter<T: Copy>(&self, values: &[T], container: &mut NestedContainer<T>) -> Result<()> {
        for (index, &v) in self.indices.iter().zip(values) {
            container.set(index, v)?;
        }
        Ok(())
    }
}

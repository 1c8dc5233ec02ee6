use std::fmt;
use std::ops::Deref;

use arrayvec::ArrayVec;

use crate::error::{Error, Result};

/// Maximal number of digits a [`MultiIndex`] can hold.
pub const MULTI_INDEX_CAPACITY: usize = 8;

/// A finite sequence of non-negative digits with bounded capacity.
///
/// Ordering is lexicographic, so sorting the leaf paths of an index tree
/// yields its depth-first order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(ArrayVec<usize, MULTI_INDEX_CAPACITY>);

impl MultiIndex {
    pub fn new() -> Self {
        Self(ArrayVec::new())
    }

    pub fn from_digits(digits: &[usize]) -> Result<Self> {
        let mut mi = Self::new();
        for &d in digits {
            mi.push(d)?;
        }
        Ok(mi)
    }

    pub fn push(&mut self, digit: usize) -> Result<()> {
        self.0.try_push(digit).map_err(|_| Error::CapacityExceeded {
            capacity: MULTI_INDEX_CAPACITY,
        })
    }

    /// `(digit, self...)`
    pub fn prepended(&self, digit: usize) -> Result<Self> {
        let mut out = Self::new();
        out.push(digit)?;
        for &d in self.iter() {
            out.push(d)?;
        }
        Ok(out)
    }

    /// `(self..., digit)`
    pub fn appended(&self, digit: usize) -> Result<Self> {
        let mut out = self.clone();
        out.push(digit)?;
        Ok(out)
    }

    pub fn set_digit(&mut self, position: usize, digit: usize) {
        self.0[position] = digit;
    }

    pub fn prefix(&self, len: usize) -> Self {
        Self(self.0.iter().take(len).copied().collect())
    }

    pub fn is_prefix_of(&self, other: &MultiIndex) -> bool {
        other.len() >= self.len() && other[..self.len()] == self[..]
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }
}

impl Deref for MultiIndex {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Panics if `N` exceeds [`MULTI_INDEX_CAPACITY`].
impl<const N: usize> From<[usize; N]> for MultiIndex {
    fn from(digits: [usize; N]) -> Self {
        Self::from_digits(&digits).expect("multi-index literal exceeds capacity")
    }
}

impl TryFrom<&[usize]> for MultiIndex {
    type Error = Error;

    fn try_from(digits: &[usize]) -> Result<Self> {
        Self::from_digits(digits)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

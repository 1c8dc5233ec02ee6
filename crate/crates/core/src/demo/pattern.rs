use std::collections::BTreeSet;
use std::io::Write;

use super::DofMap;
use crate::error::Result;
use crate::indexing::MultiIndex;
use crate::subspace::FunctionSpaceBasis;

/// Potential nonzeros of a matrix over `basis x basis`: every pair of basis
/// functions that share an element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OccupationPattern {
    entries: BTreeSet<(MultiIndex, MultiIndex)>,
    blocks: BTreeSet<(usize, usize)>,
}

impl OccupationPattern {
    pub fn from_basis<B: FunctionSpaceBasis + ?Sized>(basis: &B) -> Result<Self> {
        let mut pattern = Self::default();
        let mut view = basis.local_view();
        for cell in 0..basis.mesh().num_cells() {
            view.bind(cell)?;
            let indices = view.indices()?;
            for row in indices {
                for column in indices {
                    pattern.insert(row.clone(), column.clone());
                }
            }
        }
        Ok(pattern)
    }

    pub fn insert(&mut self, row: MultiIndex, column: MultiIndex) {
        if let (Some(&r), Some(&c)) = (row.first(), column.first()) {
            self.blocks.insert((r, c));
        }
        self.entries.insert((row, column));
    }

    pub fn contains(&self, row: &MultiIndex, column: &MultiIndex) -> bool {
        self.entries.contains(&(row.clone(), column.clone()))
    }

    /// Number of scalar entries.
    pub fn nonzeros(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = &(MultiIndex, MultiIndex)> {
        self.entries.iter()
    }

    /// Occupied blocks at first-digit resolution.
    pub fn blocks(&self) -> &BTreeSet<(usize, usize)> {
        &self.blocks
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(r, c)| self.contains(c, r))
    }

    /// Checks that entries whose row and column agree up to the last digit
    /// come in dense `width x width` blocks over that last digit, restricted
    /// to rows and columns starting with `first`.
    pub fn has_dense_trailing_blocks(&self, first: usize, width: usize) -> bool {
        self.entries
            .iter()
            .filter(|(r, c)| r.first() == Some(&first) && c.first() == Some(&first))
            .all(|(r, c)| {
                (0..width).all(|a| {
                    (0..width).all(|b| {
                        let mut rr = r.clone();
                        let mut cc = c.clone();
                        rr.set_digit(r.len() - 1, a);
                        cc.set_digit(c.len() - 1, b);
                        self.contains(&rr, &cc)
                    })
                })
            })
    }

    /// Portable bitmap (plain `P1`) with one pixel per scalar entry, rows and
    /// columns in lexicographic multi-index order. Black (`1`) marks an entry.
    pub fn write_pbm<W: Write>(&self, map: &DofMap, out: &mut W) -> Result<()> {
        let n = map.len();
        let mut pixels = vec![false; n * n];
        for (r, c) in &self.entries {
            pixels[map.ordinal(r)? * n + map.ordinal(c)?] = true;
        }
        writeln!(out, "P1")?;
        writeln!(out, "{n} {n}")?;
        for row in pixels.chunks(n.max(1)).take(n) {
            let line: Vec<&str> = row.iter().map(|&p| if p { "1" } else { "0" }).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

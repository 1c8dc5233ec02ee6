use std::fmt::Write as _;

use crate::basistree::{make_basis, parse_descriptor, GlobalBasis};
use crate::error::Result;
use crate::mesh::Mesh;

/// What [`cmd_inspect`] prints besides the summary.
#[derive(Clone, Copy, Debug, Default)]
pub struct InspectOptions {
    pub index_tree: bool,
    pub local_indices: bool,
}

pub fn inspect_basis(nx: usize, ny: usize, dsl: &str) -> Result<GlobalBasis> {
    make_basis(Mesh::structured(nx, ny)?, parse_descriptor(dsl)?)
}

/// Summary lines, optionally followed by the rendered index tree and one
/// `cell C local I -> (..)` line per local basis function.
pub fn cmd_inspect(basis: &GlobalBasis, options: InspectOptions) -> Result<String> {
    let mut out = String::new();
    let (nx, ny) = basis.mesh().subdivisions();
    writeln!(out, "mesh={nx}x{ny}").unwrap();
    writeln!(out, "basis={}", basis.descriptor()).unwrap();
    writeln!(out, "dimension={}", basis.dimension()).unwrap();
    writeln!(out, "container={}", basis.container_descriptor()).unwrap();
    if options.index_tree {
        out.push_str(&basis.container_descriptor().render());
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    if options.local_indices {
        let mut view = basis.local_view();
        for cell in 0..basis.mesh().num_cells() {
            view.bind(cell)?;
            for (i, index) in view.indices()?.iter().enumerate() {
                writeln!(out, "cell {cell} local {i} -> {index}").unwrap();
            }
        }
    }
    Ok(out)
}

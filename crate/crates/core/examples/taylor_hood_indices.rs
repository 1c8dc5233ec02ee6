// Global multi-indices of every Taylor–Hood shape function on a 1x1 mesh,
// for both velocity layouts.

use basisforest::{make_basis, BasisDescriptor, MergingStrategy, Mesh};

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    for strategy in [MergingStrategy::BlockedLexicographic, MergingStrategy::BlockedInterleaved] {
        let basis = make_basis(Mesh::structured(1, 1)?, BasisDescriptor::taylor_hood(2, strategy))?;
        out += &format!("{}\n  dimension {}\n  index tree {}\n", basis.descriptor(), basis.dimension(), basis.container_descriptor());
        let mut view = basis.local_view();
        for cell in 0..basis.mesh().num_cells() {
            view.bind(cell)?;
            let indices: Vec<String> = view.indices()?.iter().map(ToString::to_string).collect();
            out += &format!("  cell {cell} ({} functions): {}\n", view.size()?, indices.join(" "));
        }
    }
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

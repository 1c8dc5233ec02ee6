// How each merging strategy combines child multi-indices into parent ones.

use basisforest::indexing::MergeContext;
use basisforest::{IndexTree, MergingStrategy, MultiIndex};

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    let scalar = |n| IndexTree::uniform(n, IndexTree::Value);
    for strategy in MergingStrategy::ALL {
        let children = if strategy == MergingStrategy::BlockedByEntity {
            vec![IndexTree::NonUniform(vec![scalar(4), scalar(5)]); 2]
        } else if strategy.requires_power_node() {
            vec![scalar(4); 2]
        } else {
            vec![scalar(4), scalar(2)]
        };
        let context = match MergeContext::new(strategy, children) {
            Ok(c) => c,
            Err(e) => {
                out += &format!("{strategy}: {e}\n");
                continue;
            }
        };
        out += &format!("{strategy}: {}\n", context.tree());
        for (i, child) in context.children().iter().enumerate() {
            let merged: Vec<String> = child
                .leaf_paths()
                .iter()
                .map(|mi| context.merge_index(i, mi).map(|m| m.to_string()))
                .collect::<basisforest::Result<_>>()?;
            out += &format!("  child {i}: {}\n", merged.join(" "));
        }
    }
    let interleaved = MergeContext::new(MergingStrategy::FlatInterleaved, vec![scalar(3); 3])?;
    out += &format!(
        "flat interleaved, child 2 index (1) -> {}\n",
        interleaved.merge_index(2, &MultiIndex::from([1]))?
    );
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

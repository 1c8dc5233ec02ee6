// Matrix occupation patterns of the Taylor–Hood basis under both velocity
// layouts, written as portable bitmaps.

use basisforest::demo::{stokes_pattern, VelocityLayout};

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    let dir = std::env::temp_dir();
    for (name, layout) in [("lexicographic", VelocityLayout::Lexicographic), ("interleaved", VelocityLayout::Interleaved)] {
        let (pattern, map) = stokes_pattern(2, 2, layout)?;
        let path = dir.join(format!("basisforest-pattern-{name}.pbm"));
        pattern.write_pbm(&map, &mut std::fs::File::create(&path)?)?;
        out += &format!(
            "{name}: {} nonzeros, blocks {:?}, symmetric {}\n",
            pattern.nonzeros(),
            pattern.blocks(),
            pattern.is_symmetric()
        );
        if layout == VelocityLayout::Interleaved {
            out += &format!("  2x2 component blocks per node pair: {}\n", pattern.has_dense_trailing_blocks(0, 2));
        }
    }
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

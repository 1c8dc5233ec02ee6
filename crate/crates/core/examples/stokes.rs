// Stokes flow with Taylor–Hood elements in both velocity layouts.

use basisforest::demo::{cmd_stokes, VelocityLayout, DEFAULT_MAX_CELLS};

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    for layout in [VelocityLayout::Lexicographic, VelocityLayout::Interleaved] {
        out += &format!("layout={layout:?}\n{}", cmd_stokes(4, 4, layout, DEFAULT_MAX_CELLS)?);
    }
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

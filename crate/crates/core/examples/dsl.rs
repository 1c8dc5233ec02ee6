// Describing bases with the textual descriptor language.

use basisforest::parse_descriptor;

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    for text in [
        "lagrange(2)",
        "dg(1)",
        "power(lagrange(1), 3, flatInterleaved)",
        "composite(power(lagrange(2), 2, blockedInterleaved), lagrange(1), blockedLexicographic)",
    ] {
        let descriptor = parse_descriptor(text)?;
        out += &format!("{descriptor}  (depth {}, {} leaves)\n", descriptor.depth(), descriptor.leaf_count());
    }
    for bad in ["lagrange(9)", "power(lagrange(1) 2, blockedLexicographic)", "composite(lagrange(1), dg(0), flatInterleaved)"] {
        match parse_descriptor(bad) {
            Ok(d) => out += &format!("unexpectedly accepted {d}\n"),
            Err(e) => out += &format!("{bad}: {e}\n"),
        }
    }
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

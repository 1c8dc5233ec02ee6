// Poisson problem with exact solution x² + y²: P2 reproduces it, P1
// converges at second order.

use basisforest::demo::{cmd_poisson, solve_poisson, Manufactured};

fn run_example() -> basisforest::Result<String> {
    let mut out = cmd_poisson(4, 4, 2)?.to_string();
    let coarse = solve_poisson(4, 4, 1, &Manufactured::QUADRATIC)?;
    let fine = solve_poisson(8, 8, 1, &Manufactured::QUADRATIC)?;
    out += &format!("p1_ratio={:.4}\n", coarse.max_error / fine.max_error);
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

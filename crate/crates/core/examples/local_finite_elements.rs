// Lagrange shape functions on the reference triangle: local keys, nodes,
// and the nodal property.

use basisforest::{Continuity, LocalFiniteElement};
use nalgebra::Point2;

fn run_example() -> basisforest::Result<String> {
    let mut out = String::new();
    for k in 0..=3 {
        let fe = LocalFiniteElement::lagrange(k, Continuity::Continuous)?;
        out += &format!("P{k}: {} shape functions\n", fe.size());
        for (key, node) in fe.keys().iter().zip(fe.nodes()) {
            out += &format!(
                "  codim {} subentity {} within {} at ({:.3}, {:.3})\n",
                key.codim, key.subentity, key.within, node.x, node.y
            );
        }
    }
    let p2 = LocalFiniteElement::lagrange(2, Continuity::Continuous)?;
    let values = p2.evaluate_values(&Point2::new(0.25, 0.25));
    out += &format!("sum of P2 values at (0.25, 0.25) = {:.12}\n", values.iter().sum::<f64>());
    Ok(out)
}

fn main() -> basisforest::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}

use nalgebra::Point2;

const A: f64 = 0.445_948_490_915_965;
const WA: f64 = 0.223_381_589_678_011_47;
const B: f64 = 0.091_576_213_509_770_74;
const WB: f64 = 0.109_951_743_655_321_87;

/// Six-point symmetric rule on the reference triangle, exact for
/// polynomials of degree 4. Weights sum to the reference area 1/2.
pub fn triangle_rule() -> [(Point2<f64>, f64); 6] {
    [
        (Point2::new(A, A), 0.5 * WA),
        (Point2::new(1.0 - 2.0 * A, A), 0.5 * WA),
        (Point2::new(A, 1.0 - 2.0 * A), 0.5 * WA),
        (Point2::new(B, B), 0.5 * WB),
        (Point2::new(1.0 - 2.0 * B, B), 0.5 * WB),
        (Point2::new(B, 1.0 - 2.0 * B), 0.5 * WB),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u32) -> f64 {
        (1..=n).map(f64::from).product()
    }

    #[test]
    fn exact_up_to_degree_four() {
        for total in 0..=4u32 {
            for a in 0..=total {
                let b = total - a;
                let exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                let q: f64 = triangle_rule()
                    .iter()
                    .map(|(p, w)| w * p.x.powi(a as i32) * p.y.powi(b as i32))
                    .sum();
                assert!((q - exact).abs() < 1e-15, "x^{a} y^{b}: {q} vs {exact}");
            }
        }
    }
}

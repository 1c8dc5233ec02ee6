//! Lagrange finite elements on the reference triangle `{x, y >= 0, x + y <= 1}`.
//!
//! Shape functions are numbered vertices first (one per vertex for `k >= 1`),
//! then edges in reference edge order with `k - 1` nodes each, then interior
//! nodes. Edge nodes run from the lower to the higher local vertex of the edge.

use nalgebra::{Point2, Vector2};

use crate::error::{Error, Result};
use crate::mesh::REFERENCE_EDGES;

pub const MAX_DEGREE: usize = 3;

/// Attaches a shape function to a subentity of the reference triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalKey {
    pub codim: usize,
    pub subentity: usize,
    pub within: usize,
}

impl LocalKey {
    pub const fn new(codim: usize, subentity: usize, within: usize) -> Self {
        Self {
            codim,
            subentity,
            within,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Continuity {
    Continuous,
    Discontinuous,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalFiniteElement {
    degree: usize,
    continuity: Continuity,
    // barycentric lattice coordinates (times k) of each node
    lattice: Vec<[usize; 3]>,
    nodes: Vec<Point2<f64>>,
    keys: Vec<LocalKey>,
}

fn barycentric(p: &Point2<f64>) -> [f64; 3] {
    [1.0 - p.x - p.y, p.x, p.y]
}

const BARYCENTRIC_GRADIENTS: [[f64; 2]; 3] = [[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]];

/// Continuous Lagrange element of degree `k`.
pub fn lagrange_simplex(k: usize) -> Result<LocalFiniteElement> {
    LocalFiniteElement::lagrange(k, Continuity::Continuous)
}

impl LocalFiniteElement {
    /// Equispaced Lagrange element of degree `k` on the reference triangle.
    pub fn lagrange(k: usize, continuity: Continuity) -> Result<Self> {
        if k > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(k));
        }
        let mut lattice = Vec::new();
        let mut keys = Vec::new();
        if k == 0 {
            lattice.push([0, 0, 0]);
            keys.push(LocalKey::new(0, 0, 0));
        } else {
            for v in 0..3 {
                let mut alpha = [0; 3];
                alpha[v] = k;
                lattice.push(alpha);
                keys.push(LocalKey::new(2, v, 0));
            }
            for (e, [a, b]) in REFERENCE_EDGES.iter().enumerate() {
                for t in 1..k {
                    let mut alpha = [0; 3];
                    alpha[*a] = k - t;
                    alpha[*b] = t;
                    lattice.push(alpha);
                    keys.push(LocalKey::new(1, e, t - 1));
                }
            }
            let mut within = 0;
            for a1 in 1..k {
                for a2 in 1..k {
                    if a1 + a2 < k {
                        lattice.push([k - a1 - a2, a1, a2]);
                        keys.push(LocalKey::new(0, 0, within));
                        within += 1;
                    }
                }
            }
        }
        if continuity == Continuity::Discontinuous {
            for (i, key) in keys.iter_mut().enumerate() {
                *key = LocalKey::new(0, 0, i);
            }
        }
        let nodes = lattice
            .iter()
            .map(|alpha| {
                if k == 0 {
                    Point2::new(1.0 / 3.0, 1.0 / 3.0)
                } else {
                    Point2::new(alpha[1] as f64 / k as f64, alpha[2] as f64 / k as f64)
                }
            })
            .collect();
        Ok(Self {
            degree: k,
            continuity,
            lattice,
            nodes,
            keys,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn continuity(&self) -> Continuity {
        self.continuity
    }

    pub fn size(&self) -> usize {
        self.lattice.len()
    }

    pub fn keys(&self) -> &[LocalKey] {
        &self.keys
    }

    /// Nodal points in reference coordinates, one per shape function.
    pub fn nodes(&self) -> &[Point2<f64>] {
        &self.nodes
    }

    /// Number of shape functions attached to a single subentity of `codim`.
    pub fn dofs_per_subentity(&self, codim: usize) -> usize {
        let per_codim = self.keys.iter().filter(|key| key.codim == codim).count();
        match codim {
            0 => per_codim,
            _ => per_codim / 3,
        }
    }

    // Univariate factor prod_{s < a} (k t - s) / (s + 1) and its derivative.
    fn factor(&self, a: usize, t: f64) -> (f64, f64) {
        let k = self.degree as f64;
        let terms: Vec<f64> = (0..a).map(|s| (k * t - s as f64) / (s + 1) as f64).collect();
        let value = terms.iter().product();
        let derivative = (0..a)
            .map(|q| {
                let others: f64 = terms
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != q)
                    .map(|(_, term)| term)
                    .product();
                k / (q + 1) as f64 * others
            })
            .sum();
        (value, derivative)
    }

    pub fn evaluate_values(&self, p: &Point2<f64>) -> Vec<f64> {
        let lambda = barycentric(p);
        self.lattice
            .iter()
            .map(|alpha| (0..3).map(|r| self.factor(alpha[r], lambda[r]).0).product())
            .collect()
    }

    /// Gradients with respect to reference coordinates.
    pub fn evaluate_gradients(&self, p: &Point2<f64>) -> Vec<Vector2<f64>> {
        let lambda = barycentric(p);
        self.lattice
            .iter()
            .map(|alpha| {
                let factors: Vec<(f64, f64)> =
                    (0..3).map(|r| self.factor(alpha[r], lambda[r])).collect();
                let mut gradient = Vector2::zeros();
                for r in 0..3 {
                    let rest: f64 = (0..3).filter(|&s| s != r).map(|s| factors[s].0).product();
                    let [gx, gy] = BARYCENTRIC_GRADIENTS[r];
                    gradient += Vector2::new(gx, gy) * (factors[r].1 * rest);
                }
                gradient
            })
            .collect()
    }

    /// Nodal interpolation: coefficient `i` is `f` at node `i`.
    pub fn interpolate_local<F>(&self, f: F) -> Vec<f64>
    where
        F: Fn(&Point2<f64>) -> f64,
    {
        self.nodes.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_elements() -> Vec<LocalFiniteElement> {
        (0..=3)
            .flat_map(|k| {
                [Continuity::Continuous, Continuity::Discontinuous]
                    .map(|c| LocalFiniteElement::lagrange(k, c).unwrap())
            })
            .collect()
    }

    #[test]
    fn sizes_and_keys() {
        for fe in all_elements() {
            let k = fe.degree();
            assert_eq!(fe.size(), (k + 1) * (k + 2) / 2);
            let mut keys = fe.keys().to_vec();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), fe.size());
        }
        let p0 = LocalFiniteElement::lagrange(0, Continuity::Continuous).unwrap();
        assert_eq!(p0.keys(), &[LocalKey::new(0, 0, 0)]);
        assert!(matches!(
            LocalFiniteElement::lagrange(4, Continuity::Continuous),
            Err(Error::DegreeOutOfRange(4))
        ));
    }

    #[test]
    fn continuous_key_counts() {
        for k in 1..=3 {
            let fe = LocalFiniteElement::lagrange(k, Continuity::Continuous).unwrap();
            assert_eq!(fe.dofs_per_subentity(2), 1);
            assert_eq!(fe.dofs_per_subentity(1), k - 1);
            assert_eq!(fe.dofs_per_subentity(0), (k - 1) * (k.max(2) - 2) / 2);
            for key in fe.keys() {
                let count = [1, 3, 3][key.codim];
                assert!(key.subentity < count);
            }
        }
    }

    #[test]
    fn p1_values_and_gradients() {
        let fe = LocalFiniteElement::lagrange(1, Continuity::Continuous).unwrap();
        let third = 1.0 / 3.0;
        for v in fe.evaluate_values(&Point2::new(third, third)) {
            assert!((v - third).abs() < 1e-15);
        }
        assert_eq!(fe.evaluate_values(&Point2::new(0.0, 0.0)), vec![1.0, 0.0, 0.0]);
        let g = fe.evaluate_gradients(&Point2::new(0.3, 0.1));
        assert_eq!(
            g,
            vec![
                Vector2::new(-1.0, -1.0),
                Vector2::new(1.0, 0.0),
                Vector2::new(0.0, 1.0)
            ]
        );
    }

    #[test]
    fn nodal_property() {
        for fe in all_elements() {
            for (i, node) in fe.nodes().iter().enumerate() {
                let values = fe.evaluate_values(node);
                for (j, v) in values.iter().enumerate() {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((v - expected).abs() < 1e-13, "k={} i={i} j={j}", fe.degree());
                }
            }
        }
    }

    #[test]
    fn p2_vertex_values_are_indicators() {
        let fe = LocalFiniteElement::lagrange(2, Continuity::Continuous).unwrap();
        for (v, p) in [(0, [0.0, 0.0]), (1, [1.0, 0.0]), (2, [0.0, 1.0])] {
            let values = fe.evaluate_values(&Point2::new(p[0], p[1]));
            let mut expected = vec![0.0; 6];
            expected[v] = 1.0;
            assert_eq!(values, expected);
        }
    }

    #[test]
    fn gradients_match_central_differences() {
        let h = 1e-5;
        for k in 1..=3 {
            let fe = LocalFiniteElement::lagrange(k, Continuity::Continuous).unwrap();
            for p in [Point2::new(0.2, 0.3), Point2::new(0.6, 0.1), Point2::new(0.05, 0.9)] {
                let g = fe.evaluate_gradients(&p);
                let xp = fe.evaluate_values(&Point2::new(p.x + h, p.y));
                let xm = fe.evaluate_values(&Point2::new(p.x - h, p.y));
                let yp = fe.evaluate_values(&Point2::new(p.x, p.y + h));
                let ym = fe.evaluate_values(&Point2::new(p.x, p.y - h));
                for i in 0..fe.size() {
                    let fd = Vector2::new((xp[i] - xm[i]) / (2.0 * h), (yp[i] - ym[i]) / (2.0 * h));
                    assert!((fd - g[i]).norm() < 1e-6, "k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let p1 = LocalFiniteElement::lagrange(1, Continuity::Continuous).unwrap();
        assert_eq!(p1.interpolate_local(|_| 7.0), vec![7.0; 3]);
        let p2 = LocalFiniteElement::lagrange(2, Continuity::Continuous).unwrap();
        let xs: Vec<f64> = p2.nodes().iter().map(|p| p.x).collect();
        assert_eq!(p2.interpolate_local(|p| p.x), xs);
        for j in 0..p2.size() {
            let coeffs = p2.interpolate_local(|p| p2.evaluate_values(p)[j]);
            for (i, c) in coeffs.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((c - expected).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn edge_nodes_run_from_lower_to_higher_vertex() {
        let fe = LocalFiniteElement::lagrange(3, Continuity::Continuous).unwrap();
        // edge 2 joins local vertices 1 = (1,0) and 2 = (0,1)
        let on_edge: Vec<Point2<f64>> = fe
            .keys()
            .iter()
            .zip(fe.nodes())
            .filter(|(key, _)| key.codim == 1 && key.subentity == 2)
            .map(|(_, p)| *p)
            .collect();
        assert!((on_edge[0] - Point2::new(2.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
        assert!((on_edge[1] - Point2::new(1.0 / 3.0, 2.0 / 3.0)).norm() < 1e-15);
    }
}

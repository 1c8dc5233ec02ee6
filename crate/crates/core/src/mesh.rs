//! Structured triangle meshes of the unit square.
//!
//! Entities are numbered consecutively from zero per codimension:
//! vertices lexicographically by `(y, x)`, cells row by row with the lower
//! triangle of each square before the upper one, and edges by first
//! appearance while sweeping the cells in order. Edges are stored with their
//! vertex pair sorted ascending.

use std::collections::HashMap;

use nalgebra::{Matrix2, Point2, Vector2};

use crate::error::{Error, Result};

/// Vertex pairs of the reference triangle edges, in local edge order.
pub const REFERENCE_EDGES: [[usize; 2]; 3] = [[0, 1], [0, 2], [1, 2]];

#[derive(Clone, Debug)]
pub struct Mesh {
    nx: usize,
    ny: usize,
    vertices: Vec<Point2<f64>>,
    cells: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
    cell_edges: Vec<[usize; 3]>,
    edge_cells: Vec<Vec<usize>>,
    boundary_vertex: Vec<bool>,
}

/// Affine map from the reference triangle onto one mesh cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElementGeometry {
    origin: Point2<f64>,
    jacobian: Matrix2<f64>,
    jacobian_inverse: Matrix2<f64>,
    determinant: f64,
}

impl ElementGeometry {
    pub fn from_vertices(v: [Point2<f64>; 3]) -> Self {
        let jacobian = Matrix2::from_columns(&[v[1] - v[0], v[2] - v[0]]);
        let determinant = jacobian.determinant();
        let jacobian_inverse = jacobian
            .try_inverse()
            .expect("degenerate triangle has no inverse Jacobian");
        Self {
            origin: v[0],
            jacobian,
            jacobian_inverse,
            determinant,
        }
    }

    pub fn global(&self, local: &Point2<f64>) -> Point2<f64> {
        self.origin + self.jacobian * local.coords
    }

    pub fn local(&self, global: &Point2<f64>) -> Point2<f64> {
        Point2::from(self.jacobian_inverse * (global - self.origin))
    }

    pub fn jacobian(&self) -> &Matrix2<f64> {
        &self.jacobian
    }

    pub fn determinant(&self) -> f64 {
        self.determinant
    }

    /// Maps a reference gradient to a world gradient (`J^{-T} g`).
    pub fn transform_gradient(&self, reference: &Vector2<f64>) -> Vector2<f64> {
        self.jacobian_inverse.transpose() * reference
    }
}

/// Shorthand for [`Mesh::structured`].
pub fn make_structured_mesh(nx: usize, ny: usize) -> Result<Mesh> {
    Mesh::structured(nx, ny)
}

impl Mesh {
    /// Builds the `nx` by `ny` grid of squares, each split along the diagonal
    /// from its lower-left to its upper-right corner.
    pub fn structured(nx: usize, ny: usize) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::EmptyMesh { nx, ny });
        }
        let vertex = |i: usize, j: usize| j * (nx + 1) + i;
        let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
        for j in 0..=ny {
            for i in 0..=nx {
                vertices.push(Point2::new(i as f64 / nx as f64, j as f64 / ny as f64));
            }
        }

        let mut cells = Vec::with_capacity(2 * nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                let (v00, v10) = (vertex(i, j), vertex(i + 1, j));
                let (v01, v11) = (vertex(i, j + 1), vertex(i + 1, j + 1));
                cells.push([v00, v10, v11]);
                cells.push([v00, v11, v01]);
            }
        }

        let mut edge_lookup: HashMap<[usize; 2], usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut edge_cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_edges = Vec::with_capacity(cells.len());
        for (c, cell) in cells.iter().enumerate() {
            let mut local = [0; 3];
            for (slot, [a, b]) in REFERENCE_EDGES.iter().enumerate() {
                let (p, q) = (cell[*a], cell[*b]);
                let key = [p.min(q), p.max(q)];
                let e = *edge_lookup.entry(key).or_insert_with(|| {
                    edges.push(key);
                    edge_cells.push(Vec::new());
                    edges.len() - 1
                });
                edge_cells[e].push(c);
                local[slot] = e;
            }
            cell_edges.push(local);
        }

        let mut boundary_vertex = vec![false; vertices.len()];
        for (e, incident) in edge_cells.iter().enumerate() {
            if incident.len() == 1 {
                boundary_vertex[edges[e][0]] = true;
                boundary_vertex[edges[e][1]] = true;
            }
        }

        Ok(Self {
            nx,
            ny,
            vertices,
            cells,
            edges,
            cell_edges,
            edge_cells,
            boundary_vertex,
        })
    }

    pub fn subdivisions(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    /// Number of entities of the given codimension (0 cells, 1 edges, 2 vertices).
    pub fn entity_count(&self, codim: usize) -> Result<usize> {
        match codim {
            0 => Ok(self.cells.len()),
            1 => Ok(self.edges.len()),
            2 => Ok(self.vertices.len()),
            _ => Err(Error::CodimOutOfRange(codim)),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn vertices(&self) -> &[Point2<f64>] {
        &self.vertices
    }

    pub fn cells(&self) -> &[[usize; 3]] {
        &self.cells
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn cell_edges(&self) -> &[[usize; 3]] {
        &self.cell_edges
    }

    pub fn edge_cells(&self, edge: usize) -> &[usize] {
        &self.edge_cells[edge]
    }

    pub fn check_cell(&self, cell: usize) -> Result<()> {
        if cell < self.cells.len() {
            Ok(())
        } else {
            Err(Error::CellOutOfRange {
                cell,
                count: self.cells.len(),
            })
        }
    }

    pub fn geometry(&self, cell: usize) -> Result<ElementGeometry> {
        self.check_cell(cell)?;
        let [a, b, c] = self.cells[cell];
        Ok(ElementGeometry::from_vertices([
            self.vertices[a],
            self.vertices[b],
            self.vertices[c],
        ]))
    }

    /// Global index of the `local`-th subentity of `cell` with codimension `codim`.
    pub fn subentity(&self, cell: usize, codim: usize, local: usize) -> usize {
        match codim {
            0 => cell,
            1 => self.cell_edges[cell][local],
            2 => self.cells[cell][local],
            _ => panic!("codimension {codim} out of range"),
        }
    }

    /// Edges with exactly one incident cell, ascending.
    pub fn boundary_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.is_boundary_edge(e))
            .collect()
    }

    pub fn is_boundary_edge(&self, edge: usize) -> bool {
        self.edge_cells[edge].len() == 1
    }

    pub fn is_boundary_vertex(&self, vertex: usize) -> bool {
        self.boundary_vertex[vertex]
    }

    /// Finds the cell containing `x` by grid arithmetic and returns it together
    /// with the reference coordinates of `x`. Points outside the unit square
    /// yield `None`.
    pub fn locate(&self, x: &Point2<f64>) -> Option<(usize, Point2<f64>)> {
        let tol = 1e-12;
        if !(-tol..=1.0 + tol).contains(&x.x) || !(-tol..=1.0 + tol).contains(&x.y) {
            return None;
        }
        let sx = x.x * self.nx as f64;
        let sy = x.y * self.ny as f64;
        let i = (sx.floor().max(0.0) as usize).min(self.nx - 1);
        let j = (sy.floor().max(0.0) as usize).min(self.ny - 1);
        let (fx, fy) = (sx - i as f64, sy - j as f64);
        let square = 2 * (j * self.nx + i);
        let cell = if fy <= fx { square } else { square + 1 };
        let geometry = self.geometry(cell).ok()?;
        Some((cell, geometry.local(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_counts() {
        let mesh = Mesh::structured(1, 1).unwrap();
        assert_eq!(mesh.entity_count(2).unwrap(), 4);
        assert_eq!(mesh.entity_count(1).unwrap(), 5);
        assert_eq!(mesh.entity_count(0).unwrap(), 2);
        assert_eq!(mesh.boundary_edges().len(), 4);
        let interior = (0..mesh.num_edges())
            .filter(|&e| !mesh.is_boundary_edge(e))
            .count();
        assert_eq!(interior, 1);
    }

    #[test]
    fn two_by_two_counts() {
        let mesh = Mesh::structured(2, 2).unwrap();
        assert_eq!(mesh.num_vertices(), 9);
        assert_eq!(mesh.num_cells(), 8);
        // Euler: E = V + C - 1
        assert_eq!(mesh.num_edges(), 9 + 8 - 1);
        assert_eq!(mesh.boundary_edges().len(), 8);
    }

    #[test]
    fn rejects_empty_and_bad_codim() {
        assert!(matches!(
            Mesh::structured(0, 3),
            Err(Error::EmptyMesh { .. })
        ));
        assert!(Mesh::structured(2, 0).is_err());
        let mesh = Mesh::structured(1, 1).unwrap();
        assert!(matches!(
            mesh.entity_count(3),
            Err(Error::CodimOutOfRange(3))
        ));
        assert!(matches!(
            mesh.geometry(2),
            Err(Error::CellOutOfRange { cell: 2, count: 2 })
        ));
    }

    #[test]
    fn first_cell_geometry() {
        let mesh = Mesh::structured(1, 1).unwrap();
        let g = mesh.geometry(0).unwrap();
        assert_eq!(g.global(&Point2::new(0.0, 0.0)), Point2::new(0.0, 0.0));
        assert_eq!(g.global(&Point2::new(1.0, 0.0)), Point2::new(1.0, 0.0));
        assert_eq!(g.global(&Point2::new(0.0, 1.0)), Point2::new(1.0, 1.0));
        let b = g.global(&Point2::new(1.0 / 3.0, 1.0 / 3.0));
        assert!((b - Point2::new(2.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn jacobian_determinant_is_twice_the_area() {
        for (nx, ny) in [(1, 1), (3, 2), (4, 5)] {
            let mesh = Mesh::structured(nx, ny).unwrap();
            for c in 0..mesh.num_cells() {
                let det = mesh.geometry(c).unwrap().determinant();
                assert!((det - 1.0 / (nx * ny) as f64).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn euler_relation_and_connectivity() {
        for nx in 1..=8 {
            for ny in 1..=8 {
                let mesh = Mesh::structured(nx, ny).unwrap();
                let (v, e, c) = (mesh.num_vertices(), mesh.num_edges(), mesh.num_cells());
                assert_eq!(v + c, e + 1);
                for (cell, verts) in mesh.cells().iter().enumerate() {
                    for (slot, [a, b]) in REFERENCE_EDGES.iter().enumerate() {
                        let edge = mesh.edges()[mesh.cell_edges()[cell][slot]];
                        let (p, q) = (verts[*a], verts[*b]);
                        assert_eq!(edge, [p.min(q), p.max(q)]);
                    }
                }
                for edge in 0..e {
                    let n = mesh.edge_cells(edge).len();
                    assert!(n == 1 || n == 2);
                }
            }
        }
    }

    #[test]
    fn boundary_vertices_lie_on_the_square_boundary() {
        let mesh = Mesh::structured(3, 4).unwrap();
        for (i, p) in mesh.vertices().iter().enumerate() {
            let on_side = p.x == 0.0 || p.x == 1.0 || p.y == 0.0 || p.y == 1.0;
            assert_eq!(mesh.is_boundary_vertex(i), on_side, "vertex {i}");
        }
    }

    #[test]
    fn locate_round_trips() {
        let mesh = Mesh::structured(3, 2).unwrap();
        for c in 0..mesh.num_cells() {
            let g = mesh.geometry(c).unwrap();
            let x = g.global(&Point2::new(0.2, 0.3));
            let (found, local) = mesh.locate(&x).unwrap();
            assert_eq!(found, c);
            assert!((local - Point2::new(0.2, 0.3)).norm() < 1e-12);
        }
        assert!(mesh.locate(&Point2::new(1.5, 0.5)).is_none());
    }
}

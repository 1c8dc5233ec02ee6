//! Legacy ASCII VTK output of vertex data.

use std::io::Write;

use super::DiscreteFunction;
use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::subspace::FunctionSpaceBasis;

/// Point data with `components` values per mesh vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct VtkField {
    pub name: String,
    pub components: usize,
    pub values: Vec<f64>,
}

impl VtkField {
    /// Samples `f` at every mesh vertex.
    pub fn sample<B: FunctionSpaceBasis + ?Sized>(name: &str, f: &DiscreteFunction<'_, B>) -> Result<Self> {
        let mut values = Vec::new();
        for p in f.basis().mesh().vertices() {
            values.extend(f.evaluate(p)?);
        }
        Ok(Self {
            name: name.to_string(),
            components: f.range_dim(),
            values,
        })
    }
}

pub fn write_vtk<W: Write>(out: &mut W, mesh: &Mesh, fields: &[VtkField]) -> Result<()> {
    let n = mesh.num_vertices();
    writeln!(out, "# vtk DataFile Version 3.0")?;
    writeln!(out, "basisforest output")?;
    writeln!(out, "ASCII")?;
    writeln!(out, "DATASET UNSTRUCTURED_GRID")?;
    writeln!(out, "POINTS {n} double")?;
    for p in mesh.vertices() {
        writeln!(out, "{} {} 0", p.x, p.y)?;
    }
    let cells = mesh.num_cells();
    writeln!(out, "CELLS {cells} {}", 4 * cells)?;
    for [a, b, c] in mesh.cells() {
        writeln!(out, "3 {a} {b} {c}")?;
    }
    writeln!(out, "CELL_TYPES {cells}")?;
    for _ in 0..cells {
        writeln!(out, "5")?;
    }
    if fields.is_empty() {
        return Ok(());
    }
    writeln!(out, "POINT_DATA {n}")?;
    for field in fields {
        if field.values.len() != n * field.components {
            return Err(Error::RangeMismatch {
                expected: n * field.components,
                found: field.values.len(),
            });
        }
        match field.components {
            1 => {
                writeln!(out, "SCALARS {} double 1", field.name)?;
                writeln!(out, "LOOKUP_TABLE default")?;
                for v in &field.values {
                    writeln!(out, "{v}")?;
                }
            }
            2 | 3 => {
                writeln!(out, "VECTORS {} double", field.name)?;
                for chunk in field.values.chunks(field.components) {
                    let z = chunk.get(2).copied().unwrap_or(0.0);
                    writeln!(out, "{} {} {z}", chunk[0], chunk[1])?;
                }
            }
            c => {
                return Err(Error::RangeMismatch {
                    expected: 3,
                    found: c,
                })
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_header_and_data() {
        let mesh = Mesh::structured(1, 1).unwrap();
        let field = VtkField {
            name: "u".into(),
            components: 2,
            values: vec![0.0; 8],
        };
        let mut buf = Vec::new();
        write_vtk(&mut buf, &mesh, &[field]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# vtk DataFile Version 3.0\n"));
        assert!(text.contains("CELLS 2 8\n"));
        assert!(text.contains("VECTORS u double\n"));
        let bad = VtkField {
            name: "p".into(),
            components: 1,
            values: vec![0.0; 3],
        };
        assert!(write_vtk(&mut Vec::new(), &mesh, &[bad]).is_err());
    }
}

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Compressed sparse row matrix assembled from accumulated triplets.
#[derive(Clone, Debug, PartialEq)]
pub struct CsrMatrix {
    n: usize,
    row_start: Vec<usize>,
    columns: Vec<usize>,
    values: Vec<f64>,
}

/// Accumulates `(row, column) += value` contributions.
#[derive(Clone, Debug, Default)]
pub struct TripletBuilder {
    n: usize,
    entries: BTreeMap<(usize, usize), f64>,
}

impl TripletBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, row: usize, column: usize, value: f64) {
        *self.entries.entry((row, column)).or_insert(0.0) += value;
    }

    pub fn build(self) -> CsrMatrix {
        let mut row_start = vec![0; self.n + 1];
        let mut columns = Vec::with_capacity(self.entries.len());
        let mut values = Vec::with_capacity(self.entries.len());
        for ((r, c), v) in self.entries {
            row_start[r + 1] += 1;
            columns.push(c);
            values.push(v);
        }
        for r in 0..self.n {
            row_start[r + 1] += row_start[r];
        }
        CsrMatrix {
            n: self.n,
            row_start,
            columns,
            values,
        }
    }
}

impl CsrMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.row_start[r]..self.row_start[r + 1];
        self.columns[range.clone()].iter().copied().zip(self.values[range].iter().copied())
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.row(r).find(|&(col, _)| col == c).map_or(0.0, |(_, v)| v)
    }

    pub fn mul(&self, x: &[f64], y: &mut [f64]) {
        for (r, out) in y.iter_mut().enumerate().take(self.n) {
            *out = self.row(r).map(|(c, v)| v * x[c]).sum();
        }
    }

    /// Largest `|a_rc - a_cr|` over all stored entries.
    pub fn asymmetry(&self) -> f64 {
        (0..self.n)
            .flat_map(|r| self.row(r).map(move |(c, v)| (r, c, v)))
            .map(|(r, c, v)| (v - self.get(c, r)).abs())
            .fold(0.0, f64::max)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Conjugate gradients from the initial guess in `x`. Stops when the residual
/// norm drops below `tolerance` times the norm of `b`; returns the iteration
/// count.
pub fn conjugate_gradient(a: &CsrMatrix, b: &[f64], x: &mut [f64], tolerance: f64, max_iterations: usize) -> Result<usize> {
    let n = a.size();
    let mut ax = vec![0.0; n];
    a.mul(x, &mut ax);
    let mut r: Vec<f64> = b.iter().zip(&ax).map(|(b, ax)| b - ax).collect();
    let mut p = r.clone();
    let mut rr = dot(&r, &r);
    let target = tolerance * dot(b, b).sqrt().max(f64::MIN_POSITIVE);
    let mut ap = vec![0.0; n];
    for iteration in 0..max_iterations {
        if rr.sqrt() <= target {
            return Ok(iteration);
        }
        a.mul(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap.is_nan() || pap <= 0.0 {
            return Err(Error::Numerical(format!(
                "conjugate gradients broke down (p'Ap = {pap:e}); matrix is not positive definite"
            )));
        }
        let alpha = rr / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let next = dot(&r, &r);
        let beta = next / rr;
        rr = next;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
    }
    if rr.sqrt() <= target {
        Ok(max_iterations)
    } else {
        Err(Error::Numerical(format!(
            "conjugate gradients did not converge in {max_iterations} iterations"
        )))
    }
}

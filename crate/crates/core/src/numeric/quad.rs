//! Trapezoid-rule quadrature on explicit grids.

use crate::error::{Error, Result};

/// Trapezoid rule over `grid` (strictly increasing). Exact for integrands
/// affine between grid nodes.
pub fn integrate_grid(values: &[f64], grid: &[f64]) -> Result<f64> {
    if values.len() != grid.len() {
        return Err(Error::DomainError(format!(
            "values ({}) and grid ({}) lengths differ",
            values.len(),
            grid.len()
        )));
    }
    if grid.len() < 2 {
        return Err(Error::DomainError("need at least 2 grid points".into()));
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::DomainError("grid must be strictly increasing".into()));
        }
    }
    let mut acc = 0.0;
    for i in 0..grid.len() - 1 {
        acc += 0.5 * (values[i] + values[i + 1]) * (grid[i + 1] - grid[i]);
    }
    Ok(acc)
}

/// `cells + 1` equispaced nodes spanning [a, b].
pub fn equispaced(a: f64, b: f64, cells: usize) -> Vec<f64> {
    let mut g = Vec::with_capacity(cells + 1);
    for i in 0..=cells {
        g.push(a + (b - a) * i as f64 / cells as f64);
    }
    g
}

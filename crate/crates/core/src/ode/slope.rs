use alloc::vec::Vec;

use super::problem::DecayProblem;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeNode {
    pub x: f64,
    pub f: f64,
    pub slope: f64,
}

/// Slope `−β f/√(1+κ²β²x²)` at every node of `x_grid × f_grid`.
///
/// Nodes are ordered with `x` as the outer index and `f` as the inner one.
pub fn slope_field(p: &DecayProblem, x_grid: &[f64], f_grid: &[f64]) -> Result<Vec<SlopeNode>> {
    if x_grid.is_empty() || f_grid.is_empty() {
        return Err(Error::Domain("slope field grids must be nonempty"));
    }
    if x_grid.iter().chain(f_grid).any(|v| !v.is_finite()) {
        return Err(Error::Domain("slope field grids must be finite"));
    }
    let mut nodes = Vec::with_capacity(x_grid.len() * f_grid.len());
    for &x in x_grid {
        let w = p.weight(x);
        for &f in f_grid {
            nodes.push(SlopeNode { x, f, slope: -p.beta * f * w });
        }
    }
    Ok(nodes)
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { b } else { a + i as f64 * step }).collect()
        }
    }
}

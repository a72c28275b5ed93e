use gauss_quad::legendre::GaussLegendre;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Quadrature nodes and weights on a positive interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    lo: f64,
    hi: f64,
}

impl FrequencyGrid {
    /// Composite Gauss–Legendre rule: `panels` equal panels of `order` nodes each.
    pub fn gauss_legendre(lo: f64, hi: f64, panels: usize, order: usize) -> Result<Self> {
        check_interval(lo, hi)?;
        if panels == 0 || order == 0 {
            return Err(invalid("grid", "panels and order must be positive"));
        }
        let rule = GaussLegendre::new(order.max(2)).map_err(|e| invalid("grid", e.to_string()))?;
        let mut reference: Vec<(f64, f64)> = rule.as_node_weight_pairs().to_vec();
        reference.sort_by(|a, b| a.0.total_cmp(&b.0));

        let h = (hi - lo) / panels as f64;
        let mut nodes = Vec::with_capacity(panels * reference.len());
        let mut weights = Vec::with_capacity(panels * reference.len());
        for p in 0..panels {
            let a = lo + h * p as f64;
            let mid = a + 0.5 * h;
            for &(x, w) in &reference {
                nodes.push(mid + 0.5 * h * x);
                weights.push(0.5 * h * w);
            }
        }
        Self::from_parts(nodes, weights, lo, hi)
    }

    /// Midpoint rule with `n` equal cells.
    pub fn midpoint(lo: f64, hi: f64, n: usize) -> Result<Self> {
        check_interval(lo, hi)?;
        if n == 0 {
            return Err(invalid("grid", "need at least one cell"));
        }
        let h = (hi - lo) / n as f64;
        let nodes = (0..n).map(|i| lo + h * (i as f64 + 0.5)).collect();
        Self::from_parts(nodes, vec![h; n], lo, hi)
    }

    /// Midpoint rule that is uniform in `ln ω`; weights carry the Jacobian `ω du`.
    pub fn log_midpoint(lo: f64, hi: f64, n: usize) -> Result<Self> {
        check_interval(lo, hi)?;
        if lo <= 0.0 || n == 0 {
            return Err(invalid("grid", "log grid needs lo > 0 and n > 0"));
        }
        let (ulo, uhi) = (lo.ln(), hi.ln());
        let du = (uhi - ulo) / n as f64;
        let nodes: Vec<f64> = (0..n).map(|i| (ulo + du * (i as f64 + 0.5)).exp()).collect();
        let weights = nodes.iter().map(|w| w * du).collect();
        Self::from_parts(nodes, weights, lo, hi)
    }

    fn from_parts(nodes: Vec<f64>, weights: Vec<f64>, lo: f64, hi: f64) -> Result<Self> {
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(invalid("grid", "nodes must be strictly increasing"));
        }
        if nodes.first().is_some_and(|&x| x <= 0.0) {
            return Err(invalid("grid", "nodes must be positive"));
        }
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(invalid("grid", "weights must be positive"));
        }
        Ok(Self { nodes, weights, lo, hi })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && hi > lo) {
        return Err(invalid("grid", format!("bad interval [{lo}, {hi}]")));
    }
    Ok(())
}

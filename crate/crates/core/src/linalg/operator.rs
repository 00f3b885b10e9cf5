//! The rescaled adjacency operator H = A/√d with optional vertex masking.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Read-only view of H = A/√d over an immutable graph, with an optional set
/// of removed vertices realizing H^{(X)} (rows and columns zeroed).
///
/// The mask is a bitmap consulted inside `matvec`; the adjacency is never
/// rebuilt, so per-vertex masked solves (one for every x in a large set)
/// stay cheap.
#[derive(Clone)]
pub struct SparseSymOperator<'g> {
    graph: &'g Graph,
    scale: f64,
    removed: Option<Vec<bool>>,
}

/// Operator realizing H^{(removed)}; `removed = None` (or empty) realizes H.
pub fn build_operator<'g>(
    g: &'g Graph,
    d: f64,
    removed: Option<&VertexSet>,
) -> Result<SparseSymOperator<'g>> {
    if !(d > 0.0) {
        return Err(Error::Parameter(format!("build_operator: d = {d} <= 0")));
    }
    let removed = match removed {
        None => None,
        Some(set) => {
            if let Some(bad) = set.iter().find(|&x| x as usize >= g.n()) {
                return Err(Error::Parameter(format!(
                    "build_operator: removed vertex {bad} out of range"
                )));
            }
            if set.is_empty() {
                None
            } else {
                Some(set.bitmap(g.n()))
            }
        }
    };
    Ok(SparseSymOperator { graph: g, scale: 1.0 / d.sqrt(), removed })
}

impl<'g> SparseSymOperator<'g> {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn is_removed(&self, x: u32) -> bool {
        self.removed.as_ref().is_some_and(|m| m[x as usize])
    }

    /// Operator restricted to `kept`: the complement is removed.
    pub fn restrict_to(g: &'g Graph, d: f64, kept: &VertexSet) -> Result<SparseSymOperator<'g>> {
        if !(d > 0.0) {
            return Err(Error::Parameter(format!("restrict_to: d = {d} <= 0")));
        }
        if let Some(bad) = kept.iter().find(|&x| x as usize >= g.n()) {
            return Err(Error::Parameter(format!("restrict_to: vertex {bad} out of range")));
        }
        let mut removed = vec![true; g.n()];
        for x in kept.iter() {
            removed[x as usize] = false;
        }
        Ok(SparseSymOperator { graph: g, scale: 1.0 / d.sqrt(), removed: Some(removed) })
    }

    /// y = Hx, masked coordinates mapping to 0 and receiving 0. Cost O(|E|).
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) -> Result<()> {
        let n = self.n();
        if x.len() != n || y.len() != n {
            return Err(Error::Parameter(format!(
                "matvec: length mismatch (n = {n}, x = {}, y = {})",
                x.len(),
                y.len()
            )));
        }
        #[allow(clippy::needless_range_loop)] // rows drive the sparse pattern
        match &self.removed {
            None => {
                for u in 0..n {
                    let mut acc = 0.0;
                    for &v in self.graph.neighbors(u as u32) {
                        acc += x[v as usize];
                    }
                    y[u] = self.scale * acc;
                }
            }
            Some(mask) => {
                for u in 0..n {
                    if mask[u] {
                        y[u] = 0.0;
                        continue;
                    }
                    let mut acc = 0.0;
                    for &v in self.graph.neighbors(u as u32) {
                        if !mask[v as usize] {
                            acc += x[v as usize];
                        }
                    }
                    y[u] = self.scale * acc;
                }
            }
        }
        Ok(())
    }

    /// Convenience allocating form of [`matvec`](Self::matvec).
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut y = vec![0.0; self.n()];
        self.matvec(x, &mut y)?;
        Ok(y)
    }

    /// Residual norm ‖Hv − λv‖.
    pub fn residual(&self, lam: f64, v: &[f64]) -> Result<f64> {
        let hv = self.apply(v)?;
        Ok(hv.iter().zip(v).map(|(h, x)| (h - lam * x) * (h - lam * x)).sum::<f64>().sqrt())
    }

    /// Materialize the masked matrix as a dense column-major array.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0f64; n * n];
        for u in 0..n {
            if self.is_removed(u as u32) {
                continue;
            }
            for &v in self.graph.neighbors(u as u32) {
                if !self.is_removed(v) {
                    a[(v as usize) * n + u] = self.scale;
                }
            }
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn e(n: usize, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    }

    #[test]
    fn single_edge_actions() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let op = build_operator(&g, 1.0, None).unwrap();
        assert_eq!(op.apply(&e(2, 0)).unwrap(), vec![0.0, 1.0]);
        let op4 = build_operator(&g, 4.0, None).unwrap();
        assert_eq!(op4.apply(&e(2, 0)).unwrap(), vec![0.0, 0.5]);
        let masked = build_operator(&g, 1.0, Some(&VertexSet::from_sorted(vec![1]))).unwrap();
        assert_eq!(masked.apply(&e(2, 0)).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn zero_vector_and_regular_graph() {
        let g = Graph::generate(4, 4.0, 1).unwrap(); // K4
        let op = build_operator(&g, 1.0, None).unwrap();
        assert!(op.apply(&[0.0; 4]).unwrap().iter().all(|&v| v == 0.0));
        let ones = vec![1.0; 4];
        let y = op.apply(&ones).unwrap();
        assert!(y.iter().all(|&v| (v - 3.0).abs() < 1e-15));
    }

    #[test]
    fn symmetry_on_random_probes() {
        let g = Graph::generate(300, 6.0, 9).unwrap();
        let op = build_operator(&g, 6.0, None).unwrap();
        let mut rng = crate::rng::new_rng(5);
        for _ in 0..10 {
            let u: Vec<f64> = (0..300).map(|_| rng.gen::<f64>() - 0.5).collect();
            let v: Vec<f64> = (0..300).map(|_| rng.gen::<f64>() - 0.5).collect();
            let hu = op.apply(&u).unwrap();
            let hv = op.apply(&v).unwrap();
            let a: f64 = u.iter().zip(&hv).map(|(x, y)| x * y).sum();
            let b: f64 = hu.iter().zip(&v).map(|(x, y)| x * y).sum();
            let scale = a.abs().max(b.abs()).max(1e-30);
            assert!((a - b).abs() / scale < 1e-12);
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let op = build_operator(&g, 1.0, None).unwrap();
        assert!(op.apply(&[1.0, 2.0]).is_err());
        assert!(build_operator(&g, 1.0, Some(&VertexSet::from_sorted(vec![9]))).is_err());
    }
}

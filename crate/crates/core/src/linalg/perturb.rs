//! Perturbation bounds for approximate eigenpairs of symmetric matrices.

use super::operator::SparseSymOperator;
use super::{dense_eigs, DENSE_MAX_N};
use crate::error::{Error, Result};

/// Output of [`perturb_bound`].
#[derive(Debug, Clone, Copy)]
pub struct PerturbBound {
    /// ε = ‖(M − λ̂)v‖.
    pub epsilon: f64,
    /// First-order eigenvalue shift ⟨v, (M − λ̂)v⟩.
    pub shift_estimate: f64,
    /// Remainder bound on the shift: 4ε²/Δ.
    pub shift_remainder: f64,
    /// Bound on min_σ ‖w − σv‖: 4ε/Δ.
    pub vector_distance_bound: f64,
    /// Eigenvalue window [λ̂ + shift − rem, λ̂ + shift + rem].
    pub window: (f64, f64),
}

/// Verification threshold: instances small enough for a dense check.
const VERIFY_MAX_N: usize = 400;

/// Quantify how well the unit vector `v` with trial value `lam_hat`
/// approximates a true eigenpair of M, assuming M has exactly one eigenvalue
/// in [λ̂ − Δ, λ̂ + Δ].
///
/// Requires 5ε ≤ Δ. The uniqueness assumption is caller-asserted; for small
/// instances (n ≤ 400, no mask on more than the given operator) it is
/// verified against the dense solver. The constant 4 in both bounds is an
/// implementation constant.
pub fn perturb_bound(
    op: &SparseSymOperator,
    lam_hat: f64,
    v: &[f64],
    delta: f64,
) -> Result<PerturbBound> {
    if !(delta > 0.0) {
        return Err(Error::Parameter(format!("perturb_bound: delta = {delta} <= 0")));
    }
    let norm2: f64 = v.iter().map(|x| x * x).sum();
    if (norm2 - 1.0).abs() > 1e-8 {
        return Err(Error::Parameter(format!("perturb_bound: v not unit (|v|^2 = {norm2})")));
    }
    let mv = op.apply(v)?;
    let resid: Vec<f64> = mv.iter().zip(v).map(|(m, x)| m - lam_hat * x).collect();
    let epsilon = resid.iter().map(|r| r * r).sum::<f64>().sqrt();
    if 5.0 * epsilon > delta {
        return Err(Error::Contract(format!(
            "perturb_bound: 5*epsilon = {} exceeds delta = {delta}",
            5.0 * epsilon
        )));
    }
    if op.n() <= VERIFY_MAX_N && op.n() <= DENSE_MAX_N {
        let inside = dense_eigs(op)?
            .iter()
            .filter(|p| (p.value - lam_hat).abs() <= delta)
            .count();
        if inside != 1 {
            return Err(Error::Contract(format!(
                "perturb_bound: {inside} eigenvalues in [lam_hat - delta, lam_hat + delta], need exactly 1"
            )));
        }
    }
    let shift_estimate: f64 = v.iter().zip(&resid).map(|(x, r)| x * r).sum();
    let shift_remainder = 4.0 * epsilon * epsilon / delta;
    let vector_distance_bound = 4.0 * epsilon / delta;
    let center = lam_hat + shift_estimate;
    Ok(PerturbBound {
        epsilon,
        shift_estimate,
        shift_remainder,
        vector_distance_bound,
        window: (center - shift_remainder, center + shift_remainder),
    })
}

//! Closed-form spectral quantities for the critical Erdős–Rényi ensemble.
//!
//! The energy of a high-degree vertex with normalized degree α is
//! Λ(α) = α/√(α−1); the degree threshold α*(μ) is an exact binomial tail
//! infimum; θ_b and ρ_b describe the large-deviation exponent of the degree
//! sequence and the density of states at sparseness b (d = b·log N). The
//! module also carries Bennett's inequality and the explicit resolvent of
//! the half-line adjacency matrix, both used as test oracles elsewhere.

use crate::error::{Error, Result};

/// 1/(2 log 2 − 1) ≈ 2.5887: the sparseness above which no eigenvalue
/// leaves the bulk [−2, 2] (other than the Perron eigenvalue).
pub const B_STAR: f64 = 2.588_699_449_562_090_3;

/// Constants describing the spectral phase diagram at sparseness `b`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PhaseConstants {
    /// Sparseness parameter, d = b·log N.
    pub b: f64,
    /// 1/(2 log 2 − 1).
    pub b_star: f64,
    /// Largest asymptotic normalized degree: the root of θ_b(α) = 0.
    pub alpha_max: f64,
    /// Largest asymptotic nontrivial eigenvalue: Λ(alpha_max).
    pub lambda_max: f64,
}

/// Λ(α) = α/√(α−1), the asymptotic eigenvalue attached to a vertex of
/// normalized degree α ≥ 2. Strictly increasing on [2, ∞), Λ(2) = 2.
pub fn lambda_of_alpha(alpha: f64) -> Result<f64> {
    if !(alpha >= 2.0) {
        return Err(Error::Domain(format!("lambda_of_alpha: alpha = {alpha} < 2")));
    }
    Ok(alpha / (alpha - 1.0).sqrt())
}

/// Inverse of [`lambda_of_alpha`]: Λ⁻¹(λ) = (λ²/2)(1 + √(1 − 4/λ²)) for λ ≥ 2.
pub fn alpha_of_lambda(lam: f64) -> Result<f64> {
    if !(lam >= 2.0) {
        return Err(Error::Domain(format!("alpha_of_lambda: lambda = {lam} < 2")));
    }
    let lam2 = lam * lam;
    Ok(0.5 * lam2 * (1.0 + (1.0 - 4.0 / lam2).sqrt()))
}

/// log C(n, k) via log-gamma.
fn log_binom_coeff(n: u64, k: u64) -> f64 {
    libm::lgamma((n + 1) as f64) - libm::lgamma((k + 1) as f64) - libm::lgamma((n - k + 1) as f64)
}

/// log ℙ(Binom(n, p) = k).
fn log_binom_pmf(n: u64, p: f64, k: u64) -> f64 {
    if p == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    if p == 1.0 {
        return if k == n { 0.0 } else { f64::NEG_INFINITY };
    }
    log_binom_coeff(n, k) + k as f64 * p.ln() + (n - k) as f64 * (1.0 - p).ln()
}

/// log ℙ(Binom(n, p) ≥ k), by Kahan-compensated summation of pmf terms
/// relative to the largest term. No normal approximation is used: terms are
/// accumulated outward from the mode side until they stop contributing.
pub fn log_binom_upper_tail(n: u64, p: f64, k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    if k > n {
        return f64::NEG_INFINITY;
    }
    let mode = (p * (n + 1) as f64).floor() as u64;
    // Largest term in the tail: at max(k, mode).
    let anchor = k.max(mode.min(n));
    let log_anchor = log_binom_pmf(n, p, anchor);
    if log_anchor == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    // Kahan-compensated accumulator
    struct Acc {
        sum: f64,
        comp: f64,
    }
    impl Acc {
        fn add(&mut self, t: f64) {
            let y = t - self.comp;
            let s = self.sum + y;
            self.comp = (s - self.sum) - y;
            self.sum = s;
        }
    }
    let mut acc = Acc { sum: 0.0, comp: 0.0 };
    // Walk outward from the anchor in both directions inside [k, n].
    for j in anchor..=n {
        let t = (log_binom_pmf(n, p, j) - log_anchor).exp();
        acc.add(t);
        if t < 1e-18 * acc.sum {
            break;
        }
    }
    if anchor > k {
        for j in (k..anchor).rev() {
            let t = (log_binom_pmf(n, p, j) - log_anchor).exp();
            acc.add(t);
            if t < 1e-18 * acc.sum {
                break;
            }
        }
    }
    log_anchor + acc.sum.ln()
}

/// Exact degree threshold α*(μ) = max{ k*/d, 2 + κ } where k* is the smallest
/// integer with ℙ(Binom(n−1, d/n) ≥ k*) ≤ n^{μ−1}.
///
/// The normalized degree of a fixed vertex is Binom(n−1, d/n)/d, so the
/// infimum over the degree lattice reduces to an integer search on the exact
/// upper tail, evaluated in log space.
pub fn alpha_star_exact(mu: f64, n: u64, d: f64, kappa: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::Parameter(format!("alpha_star_exact: mu = {mu} outside [0,1]")));
    }
    if !(d > 0.0) || d > n as f64 {
        return Err(Error::Parameter(format!("alpha_star_exact: d = {d} outside (0, n]")));
    }
    if !(kappa > 0.0 && kappa < 1.0) {
        return Err(Error::Parameter(format!("alpha_star_exact: kappa = {kappa} outside (0,1)")));
    }
    let trials = n - 1;
    let p = d / n as f64;
    let target = (mu - 1.0) * (n as f64).ln();
    // log tail is nonincreasing in k: binary search for the smallest k
    // with log ℙ(B ≥ k) ≤ target.
    let (mut lo, mut hi) = (0u64, trials + 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if log_binom_upper_tail(trials, p, mid) <= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok((lo as f64 / d).max(2.0 + kappa))
}

/// Leading asymptotic of α*(μ): (1 − μ)·t/log t with t = log N/d.
pub fn alpha_star_asymptotic(mu: f64, t: f64) -> Result<f64> {
    if !(t > std::f64::consts::E) {
        return Err(Error::Domain(format!("alpha_star_asymptotic: t = {t} <= e")));
    }
    Ok((1.0 - mu) * t / t.ln())
}

/// θ_b(α) = 1 − b(α log α − α + 1): exponent of the number of vertices with
/// normalized degree ≥ α at sparseness b.
pub fn theta_b(alpha: f64, b: f64) -> Result<f64> {
    if !(alpha >= 2.0) {
        return Err(Error::Domain(format!("theta_b: alpha = {alpha} < 2")));
    }
    if !(b >= 0.0) {
        return Err(Error::Domain(format!("theta_b: b = {b} < 0")));
    }
    Ok(1.0 - b * (alpha * alpha.ln() - alpha + 1.0))
}

/// Density-of-states exponent ρ_b(λ): θ_b(Λ⁻¹(λ)) clamped at 0 for |λ| ≥ 2,
/// and exactly 1 inside the bulk |λ| < 2.
pub fn rho_b(lam: f64, b: f64) -> Result<f64> {
    let a = lam.abs();
    if a < 2.0 {
        return Ok(1.0);
    }
    let alpha = alpha_of_lambda(a)?;
    Ok(theta_b(alpha, b)?.max(0.0))
}

/// Solve θ_b(α) = 0 for α ≥ 2 and package the phase constants.
///
/// The root exists iff θ_b(2) ≥ 0, i.e. b ≤ b_*. Bisection to 1e−12 on the
/// bracket [2, 10·max(1, 1/b)], widened once if the upper end is too small.
pub fn phase_constants(b: f64) -> Result<PhaseConstants> {
    if !(b > 0.0) {
        return Err(Error::Domain(format!("phase_constants: b = {b} <= 0")));
    }
    if b > B_STAR {
        return Err(Error::Domain(format!(
            "phase_constants: b = {b} > b_* = {B_STAR}; alpha_max undefined"
        )));
    }
    let f = |alpha: f64| theta_b(alpha, b).expect("alpha >= 2 inside bracket");
    let lo = 2.0;
    let mut hi = 10.0 * (1.0f64).max(1.0 / b);
    if f(hi) > 0.0 {
        hi *= 10.0; // widen-and-retry once
        if f(hi) > 0.0 {
            return Err(Error::Domain(format!("phase_constants: no root of theta_b below {hi}")));
        }
    }
    let alpha_max = bisect(f, lo, hi, 1e-12);
    let lambda_max = lambda_of_alpha(alpha_max)?;
    Ok(PhaseConstants { b, b_star: B_STAR, alpha_max, lambda_max })
}

/// Bisection for a decreasing function with f(lo) ≥ 0 ≥ f(hi).
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < tol {
            return mid;
        }
        if f(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Bennett's h(a) = (1 + a)·log(1 + a) − a.
pub fn bennett_h(a: f64) -> Result<f64> {
    if !(a >= 0.0) {
        return Err(Error::Domain(format!("bennett_h: a = {a} < 0")));
    }
    Ok((1.0 + a) * (1.0 + a).ln() - a)
}

/// Bennett tail bounds for Binom(n, μ/n): upper tail e^{−μ·h(a)} on
/// {B − μ ≥ aμ} and lower tail e^{−μa²/2} on {B − μ ≤ −aμ}.
pub fn bennett_tails(mu: f64, n: u64, a: f64) -> Result<(f64, f64)> {
    if !(mu >= 0.0) || mu > n as f64 {
        return Err(Error::Domain(format!("bennett_tails: mu = {mu} outside [0, n]")));
    }
    let h = bennett_h(a)?;
    Ok(((-mu * h).exp(), (-mu * a * a / 2.0).exp()))
}

/// Entry (1, j) of (1 − t⁻¹M)⁻¹ for the adjacency matrix M of the half-line
/// 1–2–3–⋯: equals t·γ^j with γ = 2/(t + √(t² − 4)), valid for t > 2.
pub fn halfline_resolvent(t: f64, j: u32) -> Result<f64> {
    if !(t > 2.0) {
        return Err(Error::Domain(format!("halfline_resolvent: t = {t} <= 2")));
    }
    if j == 0 {
        return Err(Error::Parameter("halfline_resolvent: j must be >= 1".into()));
    }
    let gamma = 2.0 / (t + (t * t - 4.0).sqrt());
    Ok(t * gamma.powi(j as i32))
}

//! Anticoncentration laboratory: the regularized reciprocal ι, robust
//! vertices, the cavity recursion for diagonal Green-function entries on
//! tree balls, Lévy concentration estimates, Kesten's inequality, and
//! eigenvalue-spacing statistics.
//!
//! The cavity recursion reproduces, inward from exact boundary values, the
//! diagonal resolvent entries g_x(z) ≈ (H^{(𝒱)} − z)⁻¹_xx on a tree ball
//! around a root b. Conditional on the ball interior, the g_x on a common
//! sphere are independent, which is what the Lévy/Kesten machinery turns
//! into eigenvalue anticoncentration.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::linalg::{lanczos_topk, minres_shifted, SparseSymOperator, Which};
use crate::rng::{derive_seed, new_rng};
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Monte-Carlo estimate of Lévy's concentration function Q(X, L).
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConcentrationEstimate {
    pub q_hat: f64,
    pub l: f64,
    pub samples: usize,
    /// 95% binomial confidence half-width at the argmax window.
    pub ci_half_width: f64,
}

/// State of one cavity recursion.
#[derive(Debug, Clone)]
pub struct CavityState {
    pub root: Vertex,
    pub r: u32,
    pub z: f64,
    /// Regularization threshold T of ι.
    pub t_threshold: f64,
    /// g_x(z) for every vertex of B_r(root) ∖ {root}.
    pub g: BTreeMap<Vertex, f64>,
    /// Exact diagonal Green values at the outside vertices feeding S_r.
    pub boundary: BTreeMap<Vertex, f64>,
    /// Edges inside the ball that close cycles (0 on a tree ball).
    pub cycle_edges: usize,
}

/// Options for [`cavity_recursion_with`].
#[derive(Debug, Clone, Copy)]
pub struct CavityOptions {
    /// Reject non-tree balls with a structure error. The tolerant form runs
    /// the same inward recursion — cycle edges never join an S₁⁺ map — and
    /// reports the cycle count in the state.
    pub require_tree: bool,
}

/// Regularized reciprocal: 1/t on [T⁻¹, T], the reflection −t + T + T⁻¹
/// elsewhere. Continuous and an involution on all of ℝ.
pub fn iota(t: f64, t_threshold: f64) -> f64 {
    let tt = t_threshold;
    if (1.0 / tt..=tt).contains(&t) {
        1.0 / t
    } else {
        -t + tt + 1.0 / tt
    }
}

/// Default regularization threshold T = 10·max(√(log n/d), 1/κ).
pub fn default_iota_threshold(n: usize, d: f64, kappa: f64) -> f64 {
    10.0 * ((n as f64).ln() / d).sqrt().max(1.0 / kappa)
}

/// Default cavity depth ⌊(η/2)·log n/log d⌋ − 1, clamped to ≥ 1.
pub fn default_cavity_depth(n: usize, d: f64, eta: f64) -> u32 {
    let raw = (eta / 2.0 * (n as f64).ln() / d.ln()).floor() as i64 - 1;
    raw.max(1) as u32
}

/// The robust set ℛ of the ball B_r(b): a vertex is robust when it lies on
/// S_r(b), or at least d/2 of its children (neighbors one sphere further
/// out) are robust. Computed bottom-up from the boundary sphere.
pub fn robust_set(g: &Graph, b: Vertex, r: u32, d: f64) -> Result<VertexSet> {
    let layers = g.spheres(b, r + 1)?;
    let n = g.n();
    let mut depth = vec![u32::MAX; n];
    for (i, layer) in layers.iter().enumerate() {
        for v in layer.iter() {
            depth[v as usize] = i as u32;
        }
    }
    let mut robust = vec![false; n];
    for v in layers[r as usize].iter() {
        robust[v as usize] = true;
    }
    for i in (0..r).rev() {
        for v in layers[i as usize].iter() {
            let mut count = 0usize;
            for &w in g.neighbors(v) {
                if depth[w as usize] == i + 1 && robust[w as usize] {
                    count += 1;
                }
            }
            if count as f64 >= d / 2.0 {
                robust[v as usize] = true;
            }
        }
    }
    let ids: Vec<Vertex> = (0..n as Vertex).filter(|&v| robust[v as usize]).collect();
    Ok(VertexSet::from_sorted(ids))
}

/// Fraction of Poisson(d)-offspring trees of depth `r` whose root is
/// robust, with a 95% binomial confidence half-width.
///
/// Subtrees are generated lazily: a vertex at depth r−1 only needs its
/// offspring count, and exploration of a child list stops as soon as the
/// d/2 quota is met or becomes unreachable.
pub fn gw_robust_prob(d: f64, r: u32, trials: u64, seed: u64) -> Result<(f64, f64)> {
    if !(d > 0.0) {
        return Err(Error::Parameter(format!("gw_robust_prob: d = {d} <= 0")));
    }
    if trials == 0 {
        return Err(Error::Parameter("gw_robust_prob: trials must be >= 1".into()));
    }
    if r == 0 {
        return Ok((1.0, 0.0)); // root lies on S_0 = S_r
    }
    let poisson = Poisson::new(d).expect("d > 0");

    fn subtree_robust(
        depth_left: u32,
        d: f64,
        poisson: &Poisson<f64>,
        rng: &mut rand_chacha::ChaCha8Rng,
    ) -> bool {
        if depth_left == 0 {
            return true;
        }
        let children = poisson.sample(rng) as u64;
        let mut robust = 0u64;
        for tried in 0..children {
            // quota met, or unreachable even if every remaining child is robust
            if robust as f64 >= d / 2.0 {
                return true;
            }
            if ((robust + (children - tried)) as f64) < d / 2.0 {
                return false;
            }
            if subtree_robust(depth_left - 1, d, poisson, rng) {
                robust += 1;
            }
        }
        robust as f64 >= d / 2.0
    }

    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = new_rng(derive_seed(seed, "gw-robust", trial));
            u64::from(subtree_robust(r, d, &poisson, &mut rng))
        })
        .sum();
    let p = hits as f64 / trials as f64;
    let ci = 1.96 * (p * (1.0 - p) / trials as f64).sqrt();
    Ok((p, ci))
}

/// Pure inward recursion over given sphere layers: children maps are read
/// from the graph, boundary values injected. Exposed for the cavity tests.
#[allow(clippy::too_many_arguments)]
fn recurse_g(
    g: &Graph,
    layers: &[VertexSet],
    r: u32,
    d: f64,
    z: f64,
    t_threshold: f64,
    in_v: &[bool],
    boundary: &BTreeMap<Vertex, f64>,
) -> BTreeMap<Vertex, f64> {
    let n = g.n();
    let mut depth = vec![u32::MAX; n];
    for (i, layer) in layers.iter().enumerate() {
        for v in layer.iter() {
            depth[v as usize] = i as u32;
        }
    }
    let mut out: BTreeMap<Vertex, f64> = BTreeMap::new();
    for i in (1..=r).rev() {
        for x in layers[i as usize].iter() {
            let mut acc = 0.0;
            for &y in g.neighbors(x) {
                if depth[y as usize] != i + 1 {
                    continue;
                }
                if i == r {
                    // boundary case: exact Green values, V-members excluded
                    if !in_v[y as usize] {
                        if let Some(gyy) = boundary.get(&y) {
                            acc += gyy;
                        }
                    }
                } else if let Some(gy) = out.get(&y) {
                    acc += gy;
                }
            }
            out.insert(x, -iota(z + acc / d, t_threshold));
        }
    }
    out
}

/// Distance-to-spectrum guard for the cavity spectral parameter.
const Z_SPECTRUM_MARGIN: f64 = 1e-6;

/// Run the cavity recursion on the tree ball B_r(b).
///
/// Boundary diagonal Green values G_yy of H with B_r(b) ∪ 𝒱 removed are
/// computed by one MINRES solve per needed outside neighbor y (residual
/// 1e−10); the recursion then fills g_x inward sphere by sphere. The
/// spectral parameter must stay at least 1e−6 away from the extremal
/// spectrum of the masked operator; interior collisions surface as solver
/// convergence failures.
pub fn cavity_recursion(
    g: &Graph,
    h: &SparseSymOperator,
    v_set: &VertexSet,
    b: Vertex,
    r: u32,
    z: f64,
    t_threshold: f64,
) -> Result<CavityState> {
    cavity_recursion_with(g, h, v_set, b, r, z, t_threshold, CavityOptions { require_tree: true })
}

/// [`cavity_recursion`] with explicit handling of non-tree balls.
#[allow(clippy::too_many_arguments)]
pub fn cavity_recursion_with(
    g: &Graph,
    h: &SparseSymOperator,
    v_set: &VertexSet,
    b: Vertex,
    r: u32,
    z: f64,
    t_threshold: f64,
    opts: CavityOptions,
) -> Result<CavityState> {
    let ball_check = g.ball(b, r)?;
    let inside = ball_check.bitmap(g.n());
    let mut internal = 0usize;
    for u in ball_check.iter() {
        for &v in g.neighbors(u) {
            if v > u && inside[v as usize] {
                internal += 1;
            }
        }
    }
    let cycle_edges = internal + 1 - ball_check.len();
    if opts.require_tree && cycle_edges > 0 {
        return Err(Error::Structure(format!(
            "cavity_recursion: B_{r}({b}) is not a tree ({cycle_edges} cycle edges)"
        )));
    }
    let d = 1.0 / (h.scale() * h.scale());
    let layers = g.spheres(b, r + 2)?;
    let ball = g.ball(b, r)?;
    // mask = B_r(b) ∪ 𝒱: the operator whose Green function seeds the boundary
    let mask = {
        let mut ids: Vec<Vertex> = ball.iter().collect();
        ids.extend(v_set.iter());
        VertexSet::from_unsorted(ids)
    };
    let masked = crate::linalg::build_operator(g, d, Some(&mask))?;

    // z must avoid the extremal spectrum of the masked operator
    let top = lanczos_topk(&masked, 2, Which::Largest, 1e-8, derive_seed(0xCAF0, "cavity-top", u64::from(b)))?;
    let bottom = lanczos_topk(&masked, 1, Which::Smallest, 1e-8, derive_seed(0xCAF0, "cavity-bot", u64::from(b)))?;
    for p in top.iter().chain(bottom.iter()) {
        if (p.value - z).abs() < Z_SPECTRUM_MARGIN {
            return Err(Error::Parameter(format!(
                "cavity_recursion: z = {z} within {Z_SPECTRUM_MARGIN} of eigenvalue {}",
                p.value
            )));
        }
    }

    let in_v = v_set.bitmap(g.n());
    // outside vertices feeding the boundary sphere: S_{r+1}-side neighbors
    // of S_r vertices, excluding 𝒱 members
    let mut depth = vec![u32::MAX; g.n()];
    for (i, layer) in layers.iter().enumerate() {
        for v in layer.iter() {
            depth[v as usize] = i as u32;
        }
    }
    let mut needed: Vec<Vertex> = Vec::new();
    for x in layers[r as usize].iter() {
        for &y in g.neighbors(x) {
            if depth[y as usize] == r + 1 && !in_v[y as usize] {
                needed.push(y);
            }
        }
    }
    needed.sort_unstable();
    needed.dedup();

    let solved: Result<Vec<(Vertex, f64)>> = needed
        .par_iter()
        .map(|&y| {
            let mut e = vec![0.0; g.n()];
            e[y as usize] = 1.0;
            let x = minres_shifted(&masked, z, &e, 1e-10, 20 * g.n() + 2000)?;
            Ok((y, x[y as usize]))
        })
        .collect();
    let boundary: BTreeMap<Vertex, f64> = solved?.into_iter().collect();

    let gmap = recurse_g(g, &layers, r, d, z, t_threshold, &in_v, &boundary);
    for v in gmap.values() {
        if !v.is_finite() {
            return Err(Error::Convergence {
                msg: "cavity_recursion: non-finite g value".into(),
                residual: f64::NAN,
            });
        }
    }
    Ok(CavityState { root: b, r, z, t_threshold, g: gmap, boundary, cycle_edges })
}

/// Estimate Q(X, L) = sup_t ℙ(X ∈ [t − L, t + L]) from Monte-Carlo draws.
///
/// After sorting, a window of width 2L slides over the samples; anchoring
/// windows at sample points attains the empirical supremum exactly for
/// atomic samples.
pub fn levy_q_estimate(
    mut sampler: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> f64,
    l: f64,
    samples: usize,
    seed: u64,
) -> Result<ConcentrationEstimate> {
    if !(l > 0.0) {
        return Err(Error::Parameter(format!("levy_q_estimate: L = {l} <= 0")));
    }
    if samples < 100 {
        return Err(Error::Parameter(format!("levy_q_estimate: samples = {samples} < 100")));
    }
    let mut rng = new_rng(seed);
    let mut xs: Vec<f64> = (0..samples).map(|_| sampler(&mut rng)).collect();
    xs.sort_by(f64::total_cmp);
    let mut best = 0usize;
    let mut j = 0usize;
    for i in 0..xs.len() {
        if j < i {
            j = i;
        }
        while j + 1 < xs.len() && xs[j + 1] <= xs[i] + 2.0 * l {
            j += 1;
        }
        best = best.max(j - i + 1);
    }
    let q_hat = best as f64 / samples as f64;
    let ci_half_width = 1.96 * (q_hat * (1.0 - q_hat) / samples as f64).sqrt();
    Ok(ConcentrationEstimate { q_hat, l, samples, ci_half_width })
}

/// Result of [`kesten_check`].
#[derive(Debug, Clone, serde::Serialize)]
pub struct KestenCheck {
    /// Q̂(Σ X_i, L).
    pub lhs: f64,
    /// Q̂(X, L)/√n.
    pub rhs_factor: f64,
    /// Implied constant lhs·√n / Q̂(X, L).
    pub ratio: f64,
    /// The single-term estimate backing the hypothesis Q ≤ 1/2.
    pub single: ConcentrationEstimate,
    pub sum: ConcentrationEstimate,
}

/// Estimate both sides of Kesten's inequality
/// Q(Σ_{i≤n} X_i, L) ≤ (K/√n)·max_i Q(X_i, L) for i.i.d. terms.
///
/// The hypothesis Q(X, L) ≤ 1/2 is verified on the single-term estimate
/// first and a contract error raised when it fails.
pub fn kesten_check(
    sampler: impl Fn(&mut rand_chacha::ChaCha8Rng) -> f64,
    n_terms: usize,
    l: f64,
    samples: usize,
    seed: u64,
) -> Result<KestenCheck> {
    if n_terms == 0 {
        return Err(Error::Parameter("kesten_check: n_terms must be >= 1".into()));
    }
    let single = levy_q_estimate(&sampler, l, samples, derive_seed(seed, "kesten-single", 0))?;
    // boundary cases (Q exactly 1/2) get the estimate's own CI as slack
    if single.q_hat > 0.5 + single.ci_half_width {
        return Err(Error::Contract(format!(
            "kesten_check: Q(X, L) = {} violates the hypothesis Q <= 1/2",
            single.q_hat
        )));
    }
    let sum_sampler = |rng: &mut rand_chacha::ChaCha8Rng| -> f64 {
        (0..n_terms).map(|_| sampler(rng)).sum()
    };
    let sum = levy_q_estimate(sum_sampler, l, samples, derive_seed(seed, "kesten-sum", 1))?;
    let sqrt_n = (n_terms as f64).sqrt();
    Ok(KestenCheck {
        lhs: sum.q_hat,
        rhs_factor: single.q_hat / sqrt_n,
        ratio: sum.q_hat * sqrt_n / single.q_hat,
        single,
        sum,
    })
}

/// Nearest-neighbor gap statistics among the eigenvalues ≥ `lower`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpacingStats {
    /// Number of eigenvalues at or above the threshold.
    pub count: usize,
    /// None marks the empty result (fewer than 2 eigenvalues above).
    pub min_gap: Option<f64>,
    pub median_gap: Option<f64>,
    /// (λ_i, gap to the next lower eigenvalue).
    pub gaps: Vec<(f64, f64)>,
}

impl SpacingStats {
    pub const CSV_HEADER: &'static str = "lambda,gap";

    pub fn csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for &(lam, gap) in &self.gaps {
            out.push_str(&format!("{},{}\n", crate::io::fmt_f64(lam), crate::io::fmt_f64(gap)));
        }
        out
    }
}

/// Gap statistics for eigenvalues sorted descending; the Perron value is
/// excluded by the caller.
pub fn spacing_stats(eigs: &[f64], lower: f64) -> Result<SpacingStats> {
    if eigs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parameter("spacing_stats: eigenvalues not sorted descending".into()));
    }
    let above: Vec<f64> = eigs.iter().copied().filter(|&x| x >= lower).collect();
    if above.len() < 2 {
        return Ok(SpacingStats { count: above.len(), min_gap: None, median_gap: None, gaps: Vec::new() });
    }
    let gaps: Vec<(f64, f64)> =
        above.windows(2).map(|w| (w[0], w[0] - w[1])).collect();
    let mut sorted: Vec<f64> = gaps.iter().map(|&(_, g)| g).collect();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len();
    let median = if m % 2 == 1 {
        sorted[m / 2]
    } else {
        0.5 * (sorted[m / 2 - 1] + sorted[m / 2])
    };
    Ok(SpacingStats {
        count: above.len(),
        min_gap: Some(sorted[0]),
        median_gap: Some(median),
        gaps,
    })
}

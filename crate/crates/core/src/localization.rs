//! Localization profiles, approximate eigenpairs, and eigenvector
//! diagnostics.
//!
//! Around a vertex x of normalized degree α_x > 2, eigenvectors at energy
//! Λ(α_x) decay radially with the coefficients u_i(α): u₁ = √(α/(α−1))·u₀
//! and u_i = (α−1)^{−(i−1)/2}·u₁, normalized to unit ℓ². The module builds
//! the radial profile vector v_r(x) carried by these coefficients, the ball
//! eigenvector w_r(x), and the globally masked approximate eigenpair
//! (λ(x), u(x)); it measures decay profiles, the localization length ℓ(w),
//! and classifies eigenvectors against the mobility-edge dichotomy at
//! |λ| = 2 ± κ.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::linalg::{
    build_operator, lanczos_topk, sym_eig_dense, EigenPair, SolveMethod, SparseSymOperator, Which,
};
use crate::theory::lambda_of_alpha;

/// Radial profile coefficients u₀..u_{r−1} for normalized degree `alpha`.
#[derive(Debug, Clone)]
pub struct ProfileCoeffs {
    pub alpha: f64,
    pub r: u32,
    pub u: Vec<f64>,
}

/// Eigenvector classification against the mobility edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Localized,
    Delocalized,
    Unclassified,
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Class::Localized => write!(f, "localized"),
            Class::Delocalized => write!(f, "delocalized"),
            Class::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// Per-eigenvector localization diagnostics.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LocalizationReport {
    pub eigenvalue: f64,
    pub center: Vertex,
    pub alpha_center: f64,
    /// w²_center.
    pub center_mass: f64,
    /// ‖w|_{B_i(center)^c}‖ for i = 0..r.
    pub decay: Vec<f64>,
    /// Localization length ℓ(w).
    pub ell: f64,
    /// ‖w‖²_∞.
    pub sup_sq: f64,
    /// |⟨w, v_r(center)⟩|; absent when α_center ≤ 2.
    pub overlap_v: Option<f64>,
    /// |⟨w, w_r(center)⟩|.
    pub overlap_w: Option<f64>,
    pub class: Class,
}

impl LocalizationReport {
    pub const CSV_HEADER: &'static str =
        "lambda,center,alpha_center,center_mass,ell,sup_sq,overlap_v,overlap_w,class";

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(crate::io::fmt_f64).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            crate::io::fmt_f64(self.eigenvalue),
            self.center,
            crate::io::fmt_f64(self.alpha_center),
            crate::io::fmt_f64(self.center_mass),
            crate::io::fmt_f64(self.ell),
            crate::io::fmt_f64(self.sup_sq),
            opt(self.overlap_v),
            opt(self.overlap_w),
            self.class
        )
    }
}

/// Profile coefficients for `alpha > 2`, normalized so Σ u_i² = 1.
///
/// For alpha ≤ 2 the geometric ratio reaches 1 and the radial profile loses
/// its decay, so the call is rejected rather than extrapolated.
pub fn profile_coeffs(alpha: f64, r: u32) -> Result<ProfileCoeffs> {
    if !(alpha > 2.0) {
        return Err(Error::Domain(format!("profile_coeffs: alpha = {alpha} <= 2")));
    }
    if r < 2 {
        return Err(Error::Domain(format!("profile_coeffs: r = {r} < 2")));
    }
    let q = 1.0 / (alpha - 1.0);
    // sum of squares relative to u0²: 1 + (α/(α−1))·Σ_{i=1}^{r−1} q^{i−1}
    let geom: f64 = (1.0 - q.powi(r as i32 - 1)) / (1.0 - q);
    let total = 1.0 + alpha * q * geom;
    let u0 = (1.0 / total).sqrt();
    let u1 = (alpha / (alpha - 1.0)).sqrt() * u0;
    let mut u = Vec::with_capacity(r as usize);
    u.push(u0);
    u.push(u1);
    for i in 2..r {
        u.push(u1 * q.powf((i as f64 - 1.0) / 2.0));
    }
    Ok(ProfileCoeffs { alpha, r, u })
}

/// The radial profile vector v_r(x) = Σ_i u_i(α_x)·1_{S_i(x)}/√|S_i(x)|,
/// supported on B_{r−1}(x) and constant on each sphere. At r = 1 it is the
/// indicator of x.
pub fn build_v_r(g: &Graph, x: Vertex, r: u32, alpha_x: f64) -> Result<Vec<f64>> {
    if r == 0 {
        return Err(Error::Parameter("build_v_r: r must be >= 1".into()));
    }
    let mut v = vec![0.0f64; g.n()];
    if r == 1 {
        v[x as usize] = 1.0;
        return Ok(v);
    }
    let coeffs = profile_coeffs(alpha_x, r)?;
    let spheres = g.spheres(x, r)?;
    for (i, sphere) in spheres.iter().enumerate() {
        if sphere.is_empty() {
            return Err(Error::Structure(format!(
                "build_v_r: sphere S_{i}({x}) is empty below depth {r}"
            )));
        }
        let w = coeffs.u[i] / (sphere.len() as f64).sqrt();
        for y in sphere.iter() {
            v[y as usize] = w;
        }
    }
    let norm: f64 = v.iter().map(|t| t * t).sum::<f64>().sqrt();
    for t in v.iter_mut() {
        *t /= norm;
    }
    Ok(v)
}

/// Ball size above which the restricted top eigenpair switches from a dense
/// submatrix solve to Lanczos on the masked operator.
const BALL_DENSE_MAX: usize = 1200;

/// Top eigenpair of H restricted to B_r(x), sign fixed so the entry at x is
/// nonnegative; the vector is returned in the full n-length embedding.
pub fn build_w_r(g: &Graph, h: &SparseSymOperator, x: Vertex, r: u32) -> Result<EigenPair> {
    let ball = g.ball(x, r)?;
    let m = ball.len();
    let d = 1.0 / (h.scale() * h.scale());
    let mut pair = if m <= BALL_DENSE_MAX {
        // dense solve on the relabeled submatrix
        let ids = ball.as_slice();
        let mut local = vec![0.0f64; m * m];
        let mut pos = std::collections::HashMap::with_capacity(m);
        for (i, &v) in ids.iter().enumerate() {
            pos.insert(v, i);
        }
        for (i, &v) in ids.iter().enumerate() {
            for &w in g.neighbors(v) {
                if let Some(&j) = pos.get(&w) {
                    local[j * m + i] = h.scale();
                }
            }
        }
        let (vals, vecs) = sym_eig_dense(m, local)?;
        let mut vector = vec![0.0f64; g.n()];
        for (i, &v) in ids.iter().enumerate() {
            vector[v as usize] = vecs[(m - 1) * m + i];
        }
        let value = vals[m - 1];
        let op = SparseSymOperator::restrict_to(g, d, &ball)?;
        let residual = op.residual(value, &vector)?;
        EigenPair { value, vector, residual, iterations: 1, method: SolveMethod::Dense }
    } else {
        let op = SparseSymOperator::restrict_to(g, d, &ball)?;
        let mut pairs = lanczos_topk(&op, 1, Which::Largest, 1e-10, 0x77_1234 ^ u64::from(x))?;
        pairs.remove(0)
    };
    if pair.vector[x as usize] < 0.0 {
        for t in pair.vector.iter_mut() {
            *t = -*t;
        }
    }
    Ok(pair)
}

/// The threshold sets 𝒱 = {α_x ≥ α*} and 𝒲 = {x ∈ 𝒱 : Λ(α_x) ≥ Λ(α*) + κ/2}.
pub fn vertex_sets(alphas: &[f64], alpha_star: f64, kappa: f64) -> Result<(VertexSet, VertexSet)> {
    if !(alpha_star >= 2.0) {
        return Err(Error::Parameter(format!("vertex_sets: alpha_star = {alpha_star} < 2")));
    }
    let lam_star = lambda_of_alpha(alpha_star)?;
    let mut v = Vec::new();
    let mut w = Vec::new();
    for (x, &a) in alphas.iter().enumerate() {
        if a >= alpha_star {
            v.push(x as Vertex);
            if lambda_of_alpha(a)? >= lam_star + kappa / 2.0 {
                w.push(x as Vertex);
            }
        }
    }
    Ok((VertexSet::from_sorted(v), VertexSet::from_sorted(w)))
}

/// Result of [`compute_u_x`]: the globally masked approximate eigenpair.
#[derive(Debug, Clone)]
pub struct UxPair {
    /// λ(x) = λ₂ of H with 𝒱∖{x} removed.
    pub lambda: f64,
    /// Unit eigenvector, nonnegative at x, exactly 0 on 𝒱∖{x}.
    pub vector: Vec<f64>,
    /// Distance from λ(x) to the nearest other computed extremal eigenvalue.
    pub gap: f64,
    /// Set when the gap falls below 1e−8; not an error.
    pub near_degenerate: bool,
}

/// Second-largest eigenpair of H^{(𝒱∖{x})} for x ∈ 𝒱.
pub fn compute_u_x(
    h: &SparseSymOperator,
    v_set: &VertexSet,
    x: Vertex,
    tol: f64,
    seed: u64,
) -> Result<UxPair> {
    if !v_set.contains(x) {
        return Err(Error::Parameter(format!("compute_u_x: vertex {x} not in V")));
    }
    let mask: VertexSet = v_set.difference(&VertexSet::from_sorted(vec![x]));
    let d = 1.0 / (h.scale() * h.scale());
    let op = build_operator(h.graph(), d, Some(&mask))?;
    let k = 3.min(h.graph().n() - mask.len()).max(2);
    let pairs = lanczos_topk(&op, k, Which::Largest, tol, seed)?;
    let lambda = pairs[1].value;
    let mut vector = pairs[1].vector.clone();
    if vector[x as usize] < 0.0 {
        for t in vector.iter_mut() {
            *t = -*t;
        }
    }
    let mut gap = pairs[0].value - lambda;
    if pairs.len() > 2 {
        gap = gap.min(lambda - pairs[2].value);
    }
    Ok(UxPair { lambda, vector, gap, near_degenerate: gap < 1e-8 })
}

/// Decay profile: entry i is the ℓ²-norm of w outside B_i(x), i = 0..=r_max.
pub fn decay_profile(w: &[f64], g: &Graph, x: Vertex, r_max: u32) -> Vec<f64> {
    let dist = g.bfs_distances(x);
    // mass by distance; unreachable vertices count as outside every ball
    let mut inside = vec![0.0f64; r_max as usize + 1];
    let mut total = 0.0;
    for (y, &wy) in w.iter().enumerate() {
        let m = wy * wy;
        total += m;
        let dy = dist[y];
        if dy != u32::MAX && dy <= r_max {
            inside[dy as usize] += m;
        }
    }
    let mut out = Vec::with_capacity(r_max as usize + 1);
    let mut cum = 0.0;
    for &layer in inside.iter() {
        cum += layer;
        out.push((total - cum).max(0.0).sqrt());
    }
    out
}

/// Exact-scan threshold for the localization length.
const ELL_EXACT_MAX_N: usize = 2000;

/// Localization length ℓ(w) = min_x Σ_y d(x,y)·w_y² and its minimizer.
///
/// With `candidates = None`, all vertices are scanned when n ≤ 2000;
/// otherwise the scan is restricted to the 64 vertices of largest w_y² plus
/// the vertex of maximal degree. Ties break towards the smallest id.
/// Vertices unreachable from a candidate count with distance n.
pub fn localization_length(w: &[f64], g: &Graph, candidates: Option<&VertexSet>) -> (f64, Vertex) {
    let n = g.n();
    let owned;
    let cand: &VertexSet = match candidates {
        Some(c) => c,
        None => {
            if n <= ELL_EXACT_MAX_N {
                owned = VertexSet::from_sorted((0..n as Vertex).collect());
            } else {
                owned = default_candidates(w, g);
            }
            &owned
        }
    };
    let w2: Vec<f64> = w.iter().map(|t| t * t).collect();
    let mut best = f64::INFINITY;
    let mut center = 0;
    for x in cand.iter() {
        let dist = g.bfs_distances(x);
        let mut ell = 0.0;
        for (y, &m) in w2.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            let dy = dist[y];
            ell += m * if dy == u32::MAX { n as f64 } else { f64::from(dy) };
        }
        if ell < best {
            best = ell;
            center = x;
        }
    }
    (best, center)
}

/// Top-64 vertices by w² plus the maximal-degree vertex.
pub fn default_candidates(w: &[f64], g: &Graph) -> VertexSet {
    let mut idx: Vec<Vertex> = (0..g.n() as Vertex).collect();
    idx.sort_by(|&a, &b| {
        let (ma, mb) = (w[a as usize] * w[a as usize], w[b as usize] * w[b as usize]);
        mb.partial_cmp(&ma).unwrap().then(a.cmp(&b))
    });
    let mut picks: Vec<Vertex> = idx.into_iter().take(64).collect();
    if let Some(max_deg) = (0..g.n() as Vertex).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
    {
        picks.push(max_deg);
    }
    VertexSet::from_unsorted(picks)
}

/// Predicted localization length |λ|/(2√(λ² − 4)) for |λ| > 2; diverges at
/// the mobility edge.
pub fn ll_prediction(lam: f64) -> Result<f64> {
    let a = lam.abs();
    if !(a > 2.0) {
        return Err(Error::Domain(format!(
            "ll_prediction: |lambda| = {a} <= 2 (diverges at the mobility edge)"
        )));
    }
    Ok(a / (2.0 * (lam * lam - 4.0).sqrt()))
}

/// Parameters for [`classify_eigenvector`].
#[derive(Debug, Clone, Copy)]
pub struct ClassifyParams {
    pub kappa: f64,
    /// Depth for the decay profile and the overlap profiles.
    pub r: u32,
    /// The Perron pair is excluded from the dichotomy.
    pub is_perron: bool,
}

/// Default profile depth max(2, ⌊log n/(6·log d)⌋).
pub fn default_depth(n: usize, d: f64) -> u32 {
    (((n as f64).ln() / (6.0 * d.ln())).floor() as u32).max(2)
}

/// Fill a [`LocalizationReport`] for one eigenpair: localization centre,
/// decay, length, sup-norm, profile overlaps, and the mobility-edge class
/// (localized for |λ| ≥ 2+κ with centre in 𝒱, delocalized for |λ| ≤ 2−κ,
/// unclassified inside the boundary band and for the Perron pair).
pub fn classify_eigenvector(
    pair: &EigenPair,
    g: &Graph,
    h: &SparseSymOperator,
    alphas: &[f64],
    v_set: &VertexSet,
    params: &ClassifyParams,
) -> Result<LocalizationReport> {
    let w = &pair.vector;
    let (ell, center) = localization_length(w, g, None);
    let alpha_center = alphas[center as usize];
    let center_mass = w[center as usize] * w[center as usize];
    let decay = decay_profile(w, g, center, params.r);
    let sup_sq = w.iter().map(|t| t * t).fold(0.0f64, f64::max);
    let overlap_v = if alpha_center > 2.0 {
        match build_v_r(g, center, params.r, alpha_center) {
            Ok(v) => Some(dot(w, &v).abs()),
            Err(Error::Structure(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let overlap_w = {
        let wr = build_w_r(g, h, center, params.r)?;
        Some(dot(w, &wr.vector).abs())
    };
    let lam = pair.value;
    let class = if params.is_perron {
        Class::Unclassified
    } else if lam.abs() >= 2.0 + params.kappa && v_set.contains(center) {
        Class::Localized
    } else if lam.abs() <= 2.0 - params.kappa {
        Class::Delocalized
    } else {
        Class::Unclassified
    };
    Ok(LocalizationReport {
        eigenvalue: lam,
        center,
        alpha_center,
        center_mass,
        decay,
        ell,
        sup_sq,
        overlap_v,
        overlap_w,
        class,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

//! End-to-end experiments: full spectrum scans with mobility-edge
//! classification, localization-length curves, eigenvalue–vertex matching,
//! and the deformed-Wigner resonance toy model.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::fmt_f64;
use crate::linalg::{
    build_operator, dense_eigs, lanczos_topk, sym_eig_dense, EigenPair, SparseSymOperator, Which,
};
use crate::localization::{
    classify_eigenvector, default_depth, Class, ClassifyParams, LocalizationReport,
};
use crate::rng::{derive_seed, new_rng, RNG_ALGORITHM};
use crate::spacing::{spacing_stats, SpacingStats};
use crate::theory::{alpha_star_exact, lambda_of_alpha, phase_constants};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

/// One analyzed eigenvector of a scan.
#[derive(Debug, Clone, Serialize)]
pub struct PhasePoint {
    pub b: f64,
    pub n: usize,
    pub seed: u64,
    pub lambda: f64,
    pub ell: f64,
    /// |λ|/(2√(λ²−4)) for localized points, the measured diameter estimate
    /// for delocalized ones, absent in the boundary band.
    pub ell_pred: Option<f64>,
    pub sup_sq: f64,
    pub class: Class,
}

/// Eigenvalue–vertex correspondence row: the i-th largest non-Perron
/// eigenvalue against the i-th vertex by Λ(α_x).
#[derive(Debug, Clone, Serialize)]
pub struct MatchRow {
    pub lambda: f64,
    pub vertex: Vertex,
    pub alpha: f64,
    pub lambda_alpha: f64,
    pub gap: f64,
}

/// Scan configuration, embedded in every output.
#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub n: usize,
    pub b: f64,
    pub d: f64,
    pub mu: f64,
    pub kappa: f64,
    pub k_top: usize,
    /// Number of mid-spectrum eigenvectors analyzed in dense mode.
    pub bulk_sample: usize,
    pub seed: u64,
    pub rng: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerronSummary {
    pub lambda1: f64,
    pub sqrt_d: f64,
    pub ratio: f64,
}

/// Full result of [`phase_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct PhaseScan {
    pub config: ScanConfig,
    pub alpha_star: f64,
    pub v_size: usize,
    pub w_size: usize,
    pub perron: PerronSummary,
    pub points: Vec<PhasePoint>,
    pub reports: Vec<LocalizationReport>,
    pub matching: Vec<MatchRow>,
    pub warnings: Vec<String>,
}

/// Eigensolver route for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Dense oracle (≤ 4000): edges plus a mid-spectrum bulk sample.
    Dense,
    /// Lanczos on the spectral edges only.
    Lanczos,
    /// Dense for n ≤ 4000, Lanczos above.
    Auto,
}

/// Run the full pipeline at size `n` and sparseness `b` (d = b·log n):
/// generate, threshold the degree sequence, solve for the spectral edge
/// (plus a bulk sample in dense mode), and classify every analyzed
/// eigenvector against the mobility edge. The Perron pair is excluded from
/// classification and reported separately against √d.
pub fn phase_scan(
    n: usize,
    b: f64,
    mu: f64,
    kappa: f64,
    k_top: usize,
    seed: u64,
    mode: ScanMode,
) -> Result<PhaseScan> {
    if n < 8 {
        return Err(Error::Parameter(format!("phase_scan: n = {n} too small")));
    }
    if !(b > 0.0) {
        return Err(Error::Parameter(format!("phase_scan: b = {b} <= 0")));
    }
    if k_top == 0 {
        return Err(Error::Parameter("phase_scan: k_top must be >= 1".into()));
    }
    let d = b * (n as f64).ln();
    let mut warnings = Vec::new();
    let d_floor = (n as f64).ln().sqrt() * (n as f64).ln().ln();
    if d < d_floor {
        warnings.push(format!(
            "d = {d:.3} below the critical window floor sqrt(log n)*log log n = {d_floor:.3}"
        ));
    }
    if d > 3.0 * (n as f64).ln() {
        warnings.push(format!("d = {d:.3} above 3 log n; the localized phase is empty"));
    }
    let config = ScanConfig {
        n,
        b,
        d,
        mu,
        kappa,
        k_top,
        bulk_sample: 12,
        seed,
        rng: RNG_ALGORITHM,
        version: env!("CARGO_PKG_VERSION"),
    };

    let g = Graph::generate(n, d, seed)?;
    let h = build_operator(&g, d, None)?;
    let alphas = g.normalized_degrees(d)?;
    let alpha_star = alpha_star_exact(mu, n as u64, d, kappa)?;
    let (v_set, w_set) = crate::localization::vertex_sets(&alphas, alpha_star, kappa)?;

    let dense_mode = match mode {
        ScanMode::Dense => true,
        ScanMode::Lanczos => false,
        ScanMode::Auto => n <= crate::linalg::DENSE_MAX_N,
    };

    // analyzed pairs: the Perron pair first, then the top non-Perron edge,
    // then the bottom edge, then any bulk sample (dense mode only)
    let mut edge_pairs: Vec<EigenPair> = Vec::new();
    let mut bulk_pairs: Vec<EigenPair> = Vec::new();
    if dense_mode {
        if n > crate::linalg::DENSE_MAX_N {
            return Err(Error::Capacity(format!(
                "phase_scan: dense mode requested at n = {n} > {}",
                crate::linalg::DENSE_MAX_N
            )));
        }
        let all = dense_eigs(&h)?;
        let take = (k_top + 1).min(all.len());
        edge_pairs.extend(all.iter().take(take).cloned());
        let bottom = k_top.min(all.len().saturating_sub(take));
        edge_pairs.extend(all.iter().rev().take(bottom).cloned());
        // deterministic mid-spectrum sample: evenly spaced inside |λ| ≤ 1.8
        let mid: Vec<usize> =
            (0..all.len()).filter(|&i| all[i].value.abs() <= 1.8).collect();
        if !mid.is_empty() {
            let step = (mid.len() / config.bulk_sample.max(1)).max(1);
            for idx in mid.iter().step_by(step).take(config.bulk_sample) {
                bulk_pairs.push(all[*idx].clone());
            }
        }
    } else {
        let pairs = lanczos_topk(
            &h,
            k_top + 1,
            Which::Largest,
            1e-10,
            derive_seed(seed, "phase-top", 0),
        )?;
        edge_pairs.extend(pairs);
        let bottom = lanczos_topk(
            &h,
            k_top,
            Which::Smallest,
            1e-10,
            derive_seed(seed, "phase-bottom", 0),
        )?;
        edge_pairs.extend(bottom.into_iter().rev());
    }

    let perron = PerronSummary {
        lambda1: edge_pairs[0].value,
        sqrt_d: d.sqrt(),
        ratio: edge_pairs[0].value / d.sqrt(),
    };

    let r = default_depth(n, d);
    let mut points = Vec::new();
    let mut reports = Vec::new();
    let diam_estimate = g.diameter(n <= 20_000)? as f64;
    for (i, pair) in edge_pairs.iter().chain(bulk_pairs.iter()).enumerate() {
        let is_perron = i == 0;
        let params = ClassifyParams { kappa, r, is_perron };
        let rep = classify_eigenvector(pair, &g, &h, &alphas, &v_set, &params)?;
        let ell_pred = match rep.class {
            Class::Localized => Some(crate::localization::ll_prediction(pair.value)?),
            Class::Delocalized => Some(diam_estimate),
            Class::Unclassified => None,
        };
        points.push(PhasePoint {
            b,
            n,
            seed,
            lambda: pair.value,
            ell: rep.ell,
            ell_pred,
            sup_sq: rep.sup_sq,
            class: rep.class,
        });
        reports.push(rep);
    }

    // eigenvalue–vertex matching: top non-Perron eigenvalues against the
    // vertices ranked by Λ(α_x); the table covers max(|W|, k_top) rows
    let top_block = &edge_pairs[1..(k_top + 1).min(edge_pairs.len())];
    let matching = match_eigenvalues(top_block, &alphas, w_set.len().max(k_top))?;

    Ok(PhaseScan {
        config,
        alpha_star,
        v_size: v_set.len(),
        w_size: w_set.len(),
        perron,
        points,
        reports,
        matching,
        warnings,
    })
}

/// Pair the sorted top non-Perron eigenvalues with the vertices sorted by
/// Λ(α_x) (only vertices with α > 2 qualify).
fn match_eigenvalues(
    non_perron: &[EigenPair],
    alphas: &[f64],
    rows: usize,
) -> Result<Vec<MatchRow>> {
    let mut by_alpha: Vec<Vertex> = (0..alphas.len() as Vertex)
        .filter(|&v| alphas[v as usize] > 2.0)
        .collect();
    by_alpha.sort_by(|&a, &b| {
        alphas[b as usize]
            .partial_cmp(&alphas[a as usize])
            .unwrap()
            .then(a.cmp(&b))
    });
    let count = rows.min(non_perron.len()).min(by_alpha.len());
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let lambda = non_perron[i].value;
        let vertex = by_alpha[i];
        let alpha = alphas[vertex as usize];
        let lambda_alpha = lambda_of_alpha(alpha)?;
        out.push(MatchRow { lambda, vertex, alpha, lambda_alpha, gap: (lambda - lambda_alpha).abs() });
    }
    Ok(out)
}

/// CSV of (lambda, ell, ell_pred) rows for the localization-length curve.
pub fn ll_curve(points: &[PhasePoint]) -> String {
    let mut out = String::from("lambda,ell,ell_pred\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(p.lambda),
            fmt_f64(p.ell),
            p.ell_pred.map(fmt_f64).unwrap_or_default()
        ));
    }
    out
}

/// Result of the deformed-Wigner resonance experiment.
#[derive(Debug, Clone, Serialize)]
pub struct DeformedWigner {
    pub t: f64,
    pub eigenvalues: Vec<f64>,
    /// Per eigenvector: max_j ⟨v, e_j⟩².
    pub max_overlaps: Vec<f64>,
    /// True when the max overlap falls below 1/2.
    pub hybridized: Vec<bool>,
}

/// Diagonalize M(t) = D + √t·W for a GOE-type W (diagonal variance 2/m,
/// off-diagonal 1/m) and report how much each eigenvector still points
/// along a basis direction. The heuristic localization criterion keeps a
/// level localized while t ≪ m·Δ(x)² for its spacing Δ(x).
pub fn deformed_wigner(lambdas: &[f64], t: f64, seed: u64) -> Result<DeformedWigner> {
    let m = lambdas.len();
    if m < 2 {
        return Err(Error::Parameter("deformed_wigner: need at least 2 levels".into()));
    }
    if !(t >= 0.0) {
        return Err(Error::Parameter(format!("deformed_wigner: t = {t} < 0")));
    }
    let mut rng = new_rng(seed);
    let normal = StandardNormal;
    let mut a = vec![0.0f64; m * m];
    let sqrt_t = t.sqrt();
    for i in 0..m {
        for j in i..m {
            let sigma = if i == j { (2.0 / m as f64).sqrt() } else { (1.0 / m as f64).sqrt() };
            let w: f64 = normal.sample(&mut rng);
            let val = sqrt_t * sigma * w + if i == j { lambdas[i] } else { 0.0 };
            a[j * m + i] = val;
            a[i * m + j] = val;
        }
    }
    let (vals, vecs) = sym_eig_dense(m, a)?;
    let mut max_overlaps = Vec::with_capacity(m);
    let mut hybridized = Vec::with_capacity(m);
    for i in 0..m {
        let col = &vecs[i * m..(i + 1) * m];
        let best = col.iter().map(|c| c * c).fold(0.0f64, f64::max);
        max_overlaps.push(best);
        hybridized.push(best < 0.5);
    }
    Ok(DeformedWigner { t, eigenvalues: vals, max_overlaps, hybridized })
}

/// Aggregate summary of one or more scans.
#[derive(Debug, Clone, Serialize)]
pub struct MobilityReport {
    pub config: ScanConfig,
    pub counts: ClassCounts,
    pub max_nonperron_lambda: Option<f64>,
    /// Theory value Λ(α_max(b)); absent for b > b_*.
    pub lambda_max_theory: Option<f64>,
    pub spacing: SpacingStats,
    pub matching: Vec<MatchRow>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct ClassCounts {
    pub localized: usize,
    pub delocalized: usize,
    pub unclassified: usize,
}

/// Aggregate a scan: per-class counts, the empirical spectral edge against
/// λ_max(b), spacing statistics above Λ(α*) + κ, and the matching table.
pub fn mobility_report(scan: &PhaseScan) -> Result<MobilityReport> {
    let mut counts = ClassCounts::default();
    for p in &scan.points {
        match p.class {
            Class::Localized => counts.localized += 1,
            Class::Delocalized => counts.delocalized += 1,
            Class::Unclassified => counts.unclassified += 1,
        }
    }
    // non-Perron points: everything after the first
    let non_perron: Vec<f64> = scan.points.iter().skip(1).map(|p| p.lambda).collect();
    let max_nonperron_lambda = non_perron.first().copied();
    let lambda_max_theory = phase_constants(scan.config.b).ok().map(|pc| pc.lambda_max);
    let lower = lambda_of_alpha(scan.alpha_star)? + scan.config.kappa;
    let mut sorted = non_perron.clone();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let spacing = spacing_stats(&sorted, lower)?;
    Ok(MobilityReport {
        config: scan.config.clone(),
        counts,
        max_nonperron_lambda,
        lambda_max_theory,
        spacing,
        matching: scan.matching.clone(),
        warnings: scan.warnings.clone(),
    })
}

/// Stochastic-trace eigenvalue-count histogram.
///
/// Counts are estimated as tr 1_{[a,b)}(H) via a Jackson-damped Chebyshev
/// expansion of each window indicator (kernel polynomial method) and a
/// Hutchinson trace over random ±1 probe vectors: H is rescaled into
/// [−1, 1] by `bound`, each indicator is expanded to the given degree, and
/// tr f(H) ≈ mean over probes of ⟨v, f(H)v⟩. No interior eigenvectors are
/// formed, so the estimator runs at sizes far beyond the dense guard.
pub fn spectral_histogram(
    op: &SparseSymOperator,
    bound: f64,
    bins: usize,
    degree: usize,
    probes: usize,
    seed: u64,
) -> Result<Vec<(f64, f64, f64)>> {
    if bins == 0 || degree < 2 || probes == 0 {
        return Err(Error::Parameter("spectral_histogram: bins, degree, probes must be positive".into()));
    }
    if !(bound > 0.0) {
        return Err(Error::Parameter("spectral_histogram: bound must be positive".into()));
    }
    let n = op.n();
    // Chebyshev moments mu_k = mean_v <v, T_k(H/bound) v>
    let mut moments = vec![0.0f64; degree + 1];
    let mut rng = new_rng(seed);
    let mut t0 = vec![0.0f64; n];
    let mut t1 = vec![0.0f64; n];
    let mut t2 = vec![0.0f64; n];
    for _ in 0..probes {
        let v: Vec<f64> = (0..n).map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 }).collect();
        t0.copy_from_slice(&v);
        op.matvec(&t0, &mut t1)?;
        for x in t1.iter_mut() {
            *x /= bound;
        }
        moments[0] += dot(&v, &t0);
        moments[1] += dot(&v, &t1);
        #[allow(clippy::needless_range_loop)] // k is the Chebyshev order
        for k in 2..=degree {
            op.matvec(&t1, &mut t2)?;
            for i in 0..n {
                t2[i] = 2.0 * t2[i] / bound - t0[i];
            }
            moments[k] += dot(&v, &t2);
            std::mem::swap(&mut t0, &mut t1);
            std::mem::swap(&mut t1, &mut t2);
        }
    }
    for m in moments.iter_mut() {
        *m /= probes as f64;
    }
    // Jackson damping
    let big_n = degree as f64 + 1.0;
    let damp: Vec<f64> = (0..=degree)
        .map(|k| {
            let kf = k as f64;
            ((big_n - kf) * (std::f64::consts::PI * kf / big_n).cos()
                + (std::f64::consts::PI * kf / big_n).sin() / (std::f64::consts::PI / big_n).tan())
                / big_n
        })
        .collect();
    // window indicator Chebyshev coefficients: c_0 = (acos a − acos b)/π,
    // c_k = 2(sin(k acos a) − sin(k acos b))/(kπ) for [a, b] in [−1, 1]
    let mut out = Vec::with_capacity(bins);
    for bin in 0..bins {
        let lo = -1.0 + 2.0 * bin as f64 / bins as f64;
        let hi = -1.0 + 2.0 * (bin + 1) as f64 / bins as f64;
        let (ta, tb) = (lo.clamp(-1.0, 1.0).acos(), hi.clamp(-1.0, 1.0).acos());
        let mut est = (ta - tb) / std::f64::consts::PI * moments[0] * damp[0];
        for k in 1..=degree {
            let kf = k as f64;
            let c = 2.0 * ((kf * ta).sin() - (kf * tb).sin()) / (kf * std::f64::consts::PI);
            est += c * moments[k] * damp[k];
        }
        out.push((lo * bound, hi * bound, est));
    }
    Ok(out)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

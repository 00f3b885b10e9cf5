//! Acceptance suite: one test per criterion, each printing a
//! `[PASS]`/`[FAIL]` line (run with `--nocapture` to see them).
//!
//! The closed-form criteria are exact; the ensemble criteria are
//! deterministic Monte-Carlo checks at pinned seeds and pinned tolerances.

use mobilitylab::graph::{Graph, Vertex, VertexSet};
use mobilitylab::linalg::{build_operator, dense_eigs, lanczos_topk, minres_shifted, Which};
use mobilitylab::localization::{
    build_v_r, build_w_r, decay_profile, ll_prediction, localization_length, profile_coeffs,
    vertex_sets,
};
use mobilitylab::rng::derive_seed;
use mobilitylab::spacing::{
    cavity_recursion_with, default_iota_threshold, gw_robust_prob, kesten_check, levy_q_estimate,
    CavityOptions,
};
use mobilitylab::theory;
use rand::Rng;

struct Criterion {
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion { name, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl std::fmt::Display) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("[PASS] {}", self.name);
        } else {
            println!("[FAIL] {}: {}", self.name, self.failures.join("; "));
            panic!("criterion failed: {}", self.name);
        }
    }
}

#[test]
fn criterion_1_closed_form_suite() {
    let mut c = Criterion::new("criterion 1: closed-form suite");

    c.check(theory::lambda_of_alpha(2.0).unwrap() == 2.0, "Lambda(2) = 2");
    c.check((theory::lambda_of_alpha(5.0).unwrap() - 2.5).abs() < 1e-15, "Lambda(5) = 2.5");
    let mut worst_rt = 0.0f64;
    for i in 0..=960 {
        let alpha = 2.0 + i as f64 * 0.05;
        let lam = theory::lambda_of_alpha(alpha).unwrap();
        let back = theory::alpha_of_lambda(lam).unwrap();
        worst_rt = worst_rt.max((back - alpha).abs() / alpha);
    }
    c.check(worst_rt <= 1e-12, format!("Lambda roundtrip {worst_rt:.2e} > 1e-12"));

    c.check((theory::B_STAR - 2.59).abs() < 5e-3, "b_* within 5e-3 of 2.59");
    c.check(
        (theory::B_STAR - 1.0 / (2.0 * (2.0f64).ln() - 1.0)).abs() < 1e-15,
        "b_* = 1/(2 log 2 - 1)",
    );

    let pc = theory::phase_constants(1.0).unwrap();
    c.check(
        (pc.alpha_max - std::f64::consts::E).abs() < 1e-10,
        format!("alpha_max(1) = e, got {}", pc.alpha_max),
    );
    c.check(
        (pc.lambda_max - 2.0737).abs() < 5e-5,
        format!("Lambda(e) within 5e-5 of 2.0737, got {}", pc.lambda_max),
    );

    let rho = theory::rho_b(2.0, 1.0).unwrap();
    c.check(
        (rho - (2.0 - 2.0 * (2.0f64).ln())).abs() < 1e-12,
        format!("rho_1(2+) = 2 - 2 log 2, got {rho}"),
    );

    let h1 = theory::bennett_h(1.0).unwrap();
    c.check(
        (h1 - (2.0 * (2.0f64).ln() - 1.0)).abs() < 1e-12,
        format!("h(1) = 2 log 2 - 1, got {h1}"),
    );

    // half-line resolvent vs a truncated Neumann series on 300 sites
    let t = 3.0;
    let len = 300;
    let mut acc = vec![0.0f64; len];
    let mut cur = vec![0.0f64; len];
    cur[0] = 1.0;
    acc[0] = 1.0;
    for _ in 0..200 {
        let mut next = vec![0.0f64; len];
        for i in 0..len {
            let mut s = 0.0;
            if i > 0 {
                s += cur[i - 1];
            }
            if i + 1 < len {
                s += cur[i + 1];
            }
            next[i] = s / t;
        }
        for i in 0..len {
            acc[i] += next[i];
        }
        cur = next;
    }
    let mut worst = 0.0f64;
    for j in 1..=20u32 {
        let closed = theory::halfline_resolvent(t, j).unwrap();
        worst = worst.max((closed - acc[j as usize - 1]).abs());
    }
    c.check(worst <= 1e-10, format!("half-line resolvent vs Neumann {worst:.2e} > 1e-10"));

    c.finish();
}

#[test]
fn criterion_2_profile_identities() {
    let mut c = Criterion::new("criterion 2: profile identities");

    let coeffs = profile_coeffs(3.0, 200).unwrap();
    let u0sq = coeffs.u[0] * coeffs.u[0];
    c.check((u0sq - 0.25).abs() < 1e-6, format!("u0^2 at alpha=3: {u0sq}"));

    let coeffs = profile_coeffs(4.0, 200).unwrap();
    let mean_depth: f64 = coeffs.u.iter().enumerate().map(|(i, u)| i as f64 * u * u).sum();
    c.check((mean_depth - 1.0).abs() < 1e-6, format!("sum i*u_i^2 at alpha=4: {mean_depth}"));

    let lam4 = theory::lambda_of_alpha(4.0).unwrap();
    let pred = ll_prediction(lam4).unwrap();
    c.check((pred - 1.0).abs() < 1e-9, format!("ll_prediction(Lambda(4)) = {pred}"));

    c.finish();
}

#[test]
fn criterion_3_solver_oracle_equivalence() {
    let mut c = Criterion::new("criterion 3: solver oracle equivalence");
    let mut rng = mobilitylab::rng::new_rng(0xACC3);

    let mut worst_edge = 0.0f64;
    let mut worst_mask = 0.0f64;
    for trial in 0..50u64 {
        let n = rng.gen_range(100..=1000);
        let d = rng.gen_range(3.0..10.0);
        let g = Graph::generate(n, d, derive_seed(3, "oracle", trial)).unwrap();
        let op = build_operator(&g, d, None).unwrap();
        let dense = dense_eigs(&op).unwrap();
        let lz = lanczos_topk(&op, 3, Which::Largest, 1e-10, derive_seed(3, "oracle-lz", trial))
            .unwrap();
        for i in 0..3 {
            worst_edge = worst_edge.max((dense[i].value - lz[i].value).abs());
        }
        // masked vs explicit deletion on every fifth instance
        if trial % 5 == 0 {
            let removed: Vec<Vertex> =
                (0..5).map(|_| rng.gen_range(0..n as Vertex)).collect();
            let removed = VertexSet::from_unsorted(removed);
            let masked = build_operator(&g, d, Some(&removed)).unwrap();
            let masked_vals: Vec<f64> = dense_eigs(&masked).unwrap().iter().map(|p| p.value).collect();
            let kept: Vec<Vertex> =
                (0..n as Vertex).filter(|v| !removed.contains(*v)).collect();
            let pos: std::collections::HashMap<Vertex, Vertex> =
                kept.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
            let edges: Vec<(Vertex, Vertex)> = g
                .edges()
                .into_iter()
                .filter_map(|(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
                .collect();
            let sub = Graph::from_edges(kept.len(), &edges).unwrap();
            let mut sub_vals: Vec<f64> = dense_eigs(&build_operator(&sub, d, None).unwrap())
                .unwrap()
                .iter()
                .map(|p| p.value)
                .collect();
            sub_vals.extend(std::iter::repeat_n(0.0, removed.len()));
            sub_vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (a, b) in masked_vals.iter().zip(&sub_vals) {
                worst_mask = worst_mask.max((a - b).abs());
            }
        }
    }
    c.check(worst_edge <= 1e-8, format!("Lanczos vs dense top-3: worst {worst_edge:.2e}"));
    c.check(worst_mask <= 1e-10, format!("mask vs deletion: worst {worst_mask:.2e}"));
    c.finish();
}

/// Shared desk-run parameters for criteria 4 and 5.
const DESK_N: usize = 20_000;
const DESK_SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

#[test]
fn criterion_4_eigenvalue_vertex_correspondence() {
    let mut c = Criterion::new("criterion 4: eigenvalue-vertex correspondence");
    let d = (DESK_N as f64).ln();
    let mut max_rels = Vec::new();
    for &seed in &DESK_SEEDS {
        let g = Graph::generate(DESK_N, d, seed).unwrap();
        let op = build_operator(&g, d, None).unwrap();
        let alphas = g.normalized_degrees(d).unwrap();
        let pairs =
            lanczos_topk(&op, 6, Which::Largest, 1e-8, derive_seed(seed, "c4", 0)).unwrap();
        let perron_ratio = pairs[0].value / d.sqrt();
        c.check(
            (perron_ratio - 1.0).abs() <= 0.2,
            format!("seed {seed}: Perron ratio {perron_ratio:.3}"),
        );
        // vertices ranked by Lambda(alpha): larger alpha gives larger Lambda
        let mut by_alpha: Vec<Vertex> = (0..DESK_N as Vertex).filter(|&v| alphas[v as usize] > 2.0).collect();
        by_alpha.sort_by(|&a, &b| {
            alphas[b as usize].partial_cmp(&alphas[a as usize]).unwrap().then(a.cmp(&b))
        });
        let mut worst = 0.0f64;
        for i in 0..5 {
            let lam = pairs[i + 1].value;
            let matched = theory::lambda_of_alpha(alphas[by_alpha[i] as usize]).unwrap();
            worst = worst.max((lam - matched).abs() / lam.abs());
        }
        max_rels.push(worst);
    }
    max_rels.sort_by(f64::total_cmp);
    let median = max_rels[max_rels.len() / 2];
    c.check(median <= 0.08, format!("median of per-seed worst rel errors {median:.4}"));
    c.finish();
}

#[test]
fn criterion_5_localization_profile() {
    let mut c = Criterion::new("criterion 5: localization profile");
    let d = (DESK_N as f64).ln();
    // depth 3: largest radius with d^r well below n, validated against the
    // default depth 2 whose truncated centre mass misses the asymptotic
    let r = 3;
    let mut profile_ok = 0;
    let mut slope_ok = 0;
    for &seed in &DESK_SEEDS {
        let g = Graph::generate(DESK_N, d, seed).unwrap();
        let h = build_operator(&g, d, None).unwrap();
        let alphas = g.normalized_degrees(d).unwrap();
        let xmax = (0..DESK_N as Vertex)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let ax = alphas[xmax as usize];

        let wr = build_w_r(&g, &h, xmax, r).unwrap();
        let vr = build_v_r(&g, xmax, r, ax).unwrap();
        let overlap: f64 = wr.vector.iter().zip(&vr).map(|(a, b)| a * b).sum();
        let cm = wr.vector[xmax as usize] * wr.vector[xmax as usize];
        let cm_pred = (ax - 2.0) / (2.0 * (ax - 1.0));
        if overlap.abs() >= 0.85 && (cm - cm_pred).abs() <= 0.1 {
            profile_ok += 1;
        } else {
            println!(
                "  criterion 5 seed {seed}: overlap {:.3}, |cm - pred| {:.3}",
                overlap.abs(),
                (cm - cm_pred).abs()
            );
        }

        // decay slope of the true matched eigenvector over i = 1..4
        let pairs =
            lanczos_topk(&h, 2, Which::Largest, 1e-10, derive_seed(seed, "c5", 0)).unwrap();
        let w = &pairs[1].vector;
        let decay = decay_profile(w, &g, xmax, 5);
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = (1..=4).map(|i| (decay[i] + 1e-300).ln()).collect();
        let xbar = 2.5;
        let ybar: f64 = ys.iter().sum::<f64>() / 4.0;
        let slope: f64 = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - xbar) * (y - ybar))
            .sum::<f64>()
            / xs.iter().map(|x| (x - xbar) * (x - xbar)).sum::<f64>();
        let target = -0.5 * (ax - 1.0).ln() + 0.4;
        if slope <= target {
            slope_ok += 1;
        } else {
            println!("  criterion 5 seed {seed}: slope {slope:.3} > target {target:.3}");
        }
    }
    c.check(profile_ok >= 4, format!("profile overlap/centre-mass: {profile_ok}/5 seeds"));
    c.check(slope_ok >= 4, format!("decay slope: {slope_ok}/5 seeds"));
    c.finish();
}

#[test]
fn criterion_6_localization_length() {
    let mut c = Criterion::new("criterion 6: localization length");

    // part A: at n = 5e4, b = 1, localized points with lambda >= 2.2 track
    // the predicted length |lambda|/(2 sqrt(lambda^2-4)) within 30% in the
    // median. Points are pooled over three seeds. The asymptotic spectral
    // edge at b = 1 is lambda_max = 2.0737, so the 2.2 cut can only be met
    // by degree fluctuations; the measured spectrum is printed alongside an
    // informational check at the mobility-edge cut 2 + kappa.
    let n = 50_000;
    let d = (n as f64).ln();
    let mut ratios = Vec::new();
    let mut info_ratios = Vec::new();
    for seed in [1u64, 2, 3] {
        let g = Graph::generate(n, d, seed).unwrap();
        let op = build_operator(&g, d, None).unwrap();
        let pairs =
            lanczos_topk(&op, 8, Which::Largest, 1e-8, derive_seed(seed, "c6a", 0)).unwrap();
        let shown: Vec<String> = pairs.iter().map(|p| format!("{:.4}", p.value)).collect();
        println!("  criterion 6a seed {seed}: top eigenvalues {shown:?}");
        for p in pairs.iter().skip(1) {
            if p.value < 2.1 {
                continue;
            }
            let (ell, _) = localization_length(&p.vector, &g, None);
            let pred = ll_prediction(p.value).unwrap();
            let dev = (ell / pred - 1.0).abs();
            info_ratios.push(dev);
            println!(
                "  criterion 6a seed {seed}: lambda {:.4} ell {ell:.3} pred {pred:.3} |ratio-1| {dev:.3}",
                p.value
            );
            if p.value >= 2.2 {
                ratios.push(dev);
            }
        }
    }
    if !info_ratios.is_empty() {
        info_ratios.sort_by(f64::total_cmp);
        println!(
            "  criterion 6a info: median |ell/pred - 1| = {:.3} over {} points at the 2+kappa cut",
            info_ratios[info_ratios.len() / 2],
            info_ratios.len()
        );
    }
    c.check(
        !ratios.is_empty(),
        "no localized points with lambda >= 2.2 at n = 5e4, b = 1 (spectral edge 2.0737)",
    );
    if !ratios.is_empty() {
        ratios.sort_by(f64::total_cmp);
        let median = ratios[ratios.len() / 2];
        c.check(
            median <= 0.3,
            format!("median |ell/pred - 1| = {median:.3} over {} points", ratios.len()),
        );
    }

    // part B: dense run at n = 4000, b = 2.55; mid-spectrum eigenvectors
    // must spread to the diameter scale and obey the sup-norm bound
    let n = 4000;
    let b = 2.55;
    let d = b * (n as f64).ln();
    let g = Graph::generate(n, d, 1).unwrap();
    let op = build_operator(&g, d, None).unwrap();
    let eigs = dense_eigs(&op).unwrap();
    let diam = g.diameter(true).unwrap() as f64;
    let mid: Vec<usize> = (0..eigs.len()).filter(|&i| eigs[i].value.abs() <= 1.5).collect();
    let step = (mid.len() / 12).max(1);
    let threshold = (n as f64).powf(-0.7);
    let mut checked = 0;
    for idx in mid.iter().step_by(step).take(12) {
        let p = &eigs[*idx];
        let (ell, _) = localization_length(&p.vector, &g, None);
        let sup_sq = p.vector.iter().map(|t| t * t).fold(0.0f64, f64::max);
        println!(
            "  criterion 6b: lambda {:.3} ell {ell:.3} (0.7*diam {:.3}) sup_sq {sup_sq:.3e} (n^-0.7 {threshold:.3e})",
            p.value,
            0.7 * diam
        );
        c.check(
            ell >= 0.7 * diam,
            format!("lambda {:.3}: ell {ell:.3} < 0.7*diam {:.3}", p.value, 0.7 * diam),
        );
        c.check(
            sup_sq <= threshold,
            format!("lambda {:.3}: sup_sq {sup_sq:.2e} > n^-0.7 {threshold:.2e}", p.value),
        );
        checked += 1;
    }
    c.check(checked == 12, format!("only {checked} mid-spectrum vectors sampled"));
    c.finish();
}

#[test]
fn criterion_7_anticoncentration_lab() {
    let mut c = Criterion::new("criterion 7: anticoncentration lab");

    // Levy exact cases
    let est = levy_q_estimate(|_| 1.0, 0.1, 400, 1).unwrap();
    c.check(est.q_hat == 1.0, format!("constant sampler q_hat = {}", est.q_hat));
    let est = levy_q_estimate(|rng| f64::from(rng.gen_range(0..10u32)), 0.5, 4000, 2).unwrap();
    c.check(
        (est.q_hat - 0.2).abs() <= est.ci_half_width + 0.02,
        format!("discrete uniform q_hat = {}", est.q_hat),
    );
    let est = levy_q_estimate(|rng| rng.gen::<f64>(), 0.25, 4000, 3).unwrap();
    c.check(
        (est.q_hat - 0.5).abs() <= est.ci_half_width + 0.02,
        format!("uniform[0,1] q_hat = {}", est.q_hat),
    );

    // Kesten ratio stability across n
    let mut ratios = Vec::new();
    for &terms in &[4usize, 16, 64, 256] {
        let check = kesten_check(
            |rng| rng.gen::<f64>(),
            terms,
            0.05,
            4000,
            derive_seed(7, "c7-kesten", terms as u64),
        )
        .unwrap();
        ratios.push(check.ratio);
    }
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(0.0f64, f64::max);
    c.check(hi / lo <= 2.0, format!("Kesten ratios {ratios:?} vary by {:.2}x", hi / lo));

    // Galton-Watson robust root
    let (freq, _) = gw_robust_prob(20.0, 5, 2000, 11).unwrap();
    c.check(freq >= 0.99, format!("gw_robust_prob(20, 5) = {freq}"));

    // cavity fidelity at n = 5000, r = 2 against exact diagonal Green values
    let n = 5000;
    let d = (n as f64).ln();
    let kappa = 0.1;
    let g = Graph::generate(n, d, 1).unwrap();
    let h = build_operator(&g, d, None).unwrap();
    let alphas = g.normalized_degrees(d).unwrap();
    let astar = theory::alpha_star_exact(0.05, n as u64, d, kappa).unwrap();
    let (v_set, _) = vertex_sets(&alphas, astar, kappa).unwrap();
    let root = (0..n as Vertex).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let z = theory::lambda_of_alpha(astar).unwrap() + 0.5;
    let t_thr = default_iota_threshold(n, d, kappa);
    // balls of radius 2 at this size carry cycle edges, so the tolerant
    // recursion is the one the fidelity experiment can run
    let state = cavity_recursion_with(
        &g,
        &h,
        &v_set,
        root,
        2,
        z,
        t_thr,
        CavityOptions { require_tree: false },
    )
    .unwrap();
    let masked = build_operator(&g, d, Some(&v_set)).unwrap();
    let mut errs = Vec::new();
    for &x in g.neighbors(root) {
        if v_set.contains(x) {
            continue;
        }
        let Some(gx) = state.g.get(&x) else { continue };
        let mut e = vec![0.0; n];
        e[x as usize] = 1.0;
        let sol = minres_shifted(&masked, z, &e, 1e-10, 20 * n).unwrap();
        errs.push((gx - sol[x as usize]).abs());
    }
    errs.sort_by(f64::total_cmp);
    c.check(errs.len() >= 2, format!("only {} boundary comparisons", errs.len()));
    let median = errs[errs.len() / 2];
    c.check(median <= 0.05, format!("cavity fidelity median {median:.4} over {}", errs.len()));
    c.finish();
}

#[test]
fn criterion_8_determinism() {
    let mut c = Criterion::new("criterion 8: determinism");
    let bin = env!("CARGO_BIN_EXE_mobilitylab");
    let dir = tempfile::tempdir().unwrap();

    // gen twice, byte identical
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for out in [&a, &b] {
        let status = std::process::Command::new(bin)
            .args(["gen", "--n", "2000", "--d", "7", "--seeds", "5", "--out"])
            .arg(out)
            .status()
            .unwrap();
        c.check(status.success(), "gen run failed");
    }
    c.check(std::fs::read(&a).unwrap() == std::fs::read(&b).unwrap(), "gen outputs differ");

    // phase twice at different worker counts, byte identical
    let mut outputs: Vec<Vec<u8>> = Vec::new();
    for (i, jobs) in ["1", "2", "4"].iter().enumerate() {
        let out = dir.path().join(format!("phase{i}"));
        let status = std::process::Command::new(bin)
            .args([
                "phase", "--n", "1200", "--b", "1", "--mu", "0.05", "--kappa", "0.1",
                "--k-top", "3", "--seeds", "1..2", "--jobs", jobs, "--out",
            ])
            .arg(&out)
            .status()
            .unwrap();
        c.check(status.success(), format!("phase run {i} failed"));
        let mut blob = Vec::new();
        for name in ["phase_points.csv", "ll_curve.csv", "reports.json", "summary.json"] {
            blob.extend(std::fs::read(out.join(name)).unwrap_or_default());
        }
        outputs.push(blob);
    }
    c.check(outputs[0] == outputs[1], "phase outputs differ between --jobs 1 and 2");
    c.check(outputs[0] == outputs[2], "phase outputs differ between --jobs 1 and 4");
    c.check(!outputs[0].is_empty(), "phase produced no output");
    c.finish();
}

//! C ABI for the mobilitylab core.
//!
//! Conventions: every fallible call returns an `i32` status (0 success) and
//! writes results through out-pointers; `mlab_last_error_message` returns a
//! thread-local description of the most recent failure. Graphs are opaque
//! handles owned by the caller and released with `mlab_graph_free`. The
//! header `include/mobilitylab.h` is generated by cbindgen at build time.
//!
//! All pointer-taking entry points are `unsafe`: they reject null pointers
//! with `MLAB_ERR_NULL`, but the caller is responsible for pointer validity
//! and buffer lengths as documented per function.

#![allow(clippy::missing_safety_doc)] // the module docs state the shared pointer contract

use mobilitylab::graph::{write_edge_list, Graph, VertexSet};
use mobilitylab::linalg::{build_operator, lanczos_topk, Which};
use mobilitylab::localization::{self, ll_prediction};
use mobilitylab::spacing::gw_robust_prob;
use mobilitylab::theory;
use std::cell::RefCell;
use std::ffi::{c_char, CString};

/// Success.
pub const MLAB_OK: i32 = 0;
/// Invalid parameter, domain, contract, or structure error.
pub const MLAB_ERR_PARAM: i32 = 2;
/// Solver or convergence failure.
pub const MLAB_ERR_SOLVER: i32 = 3;
/// A required pointer argument was null.
pub const MLAB_ERR_NULL: i32 = 4;
/// Internal panic caught at the boundary.
pub const MLAB_ERR_PANIC: i32 = 5;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

fn code_of(err: &mobilitylab::Error) -> i32 {
    match err.exit_code() {
        3 => MLAB_ERR_SOLVER,
        _ => MLAB_ERR_PARAM,
    }
}

fn guarded(f: impl FnOnce() -> i32 + std::panic::UnwindSafe) -> i32 {
    match std::panic::catch_unwind(f) {
        Ok(code) => code,
        Err(_) => {
            set_error("internal panic");
            MLAB_ERR_PANIC
        }
    }
}

/// Opaque graph handle.
pub struct MlabGraph {
    inner: Graph,
}

/// Crate version as a static C string.
#[no_mangle]
pub extern "C" fn mlab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Sample G(n, d/n) deterministically from `seed` into a new handle.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_generate(
    n: u64,
    d: f64,
    seed: u64,
    out: *mut *mut MlabGraph,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            set_error("mlab_graph_generate: out is null");
            return MLAB_ERR_NULL;
        }
        match Graph::generate(n as usize, d, seed) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(MlabGraph { inner: g })) };
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// Release a graph handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_free(g: *mut MlabGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_n(g: *const MlabGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { (*g).inner.n() as u64 }
}

/// Edge count; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_edge_count(g: *const MlabGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { (*g).inner.edge_count() as u64 }
}

/// Degree of vertex `v`.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_degree(g: *const MlabGraph, v: u32, out: *mut u64) -> i32 {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("mlab_graph_degree: null argument");
            return MLAB_ERR_NULL;
        }
        let graph = unsafe { &(*g).inner };
        if v as usize >= graph.n() {
            set_error("mlab_graph_degree: vertex out of range");
            return MLAB_ERR_PARAM;
        }
        unsafe { *out = graph.degree(v) as u64 };
        MLAB_OK
    })
}

/// Edge-list text (the same format the CLI writes). Free with
/// `mlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn mlab_graph_edge_list(g: *const MlabGraph, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("mlab_graph_edge_list: null argument");
            return MLAB_ERR_NULL;
        }
        let text = write_edge_list(unsafe { &(*g).inner });
        match CString::new(text) {
            Ok(s) => {
                unsafe { *out = s.into_raw() };
                MLAB_OK
            }
            Err(_) => {
                set_error("mlab_graph_edge_list: interior NUL");
                MLAB_ERR_PANIC
            }
        }
    })
}

/// Release a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Extremal eigenvalues of H = A/√d. `which`: 0 largest, 1 smallest,
/// 2 both ends. Writes `k` values (descending) and, when non-null, their
/// residuals.
#[no_mangle]
pub unsafe extern "C" fn mlab_top_eigenvalues(
    g: *const MlabGraph,
    d: f64,
    k: u64,
    which: i32,
    tol: f64,
    seed: u64,
    out_values: *mut f64,
    out_residuals: *mut f64,
) -> i32 {
    guarded(|| {
        if g.is_null() || out_values.is_null() {
            set_error("mlab_top_eigenvalues: null argument");
            return MLAB_ERR_NULL;
        }
        let graph = unsafe { &(*g).inner };
        let which = match which {
            0 => Which::Largest,
            1 => Which::Smallest,
            2 => Which::Both,
            _ => {
                set_error("mlab_top_eigenvalues: which must be 0, 1, or 2");
                return MLAB_ERR_PARAM;
            }
        };
        let op = match build_operator(graph, d, None) {
            Ok(op) => op,
            Err(e) => {
                set_error(&e.to_string());
                return code_of(&e);
            }
        };
        match lanczos_topk(&op, k as usize, which, tol, seed) {
            Ok(pairs) => {
                for (i, p) in pairs.iter().enumerate() {
                    unsafe {
                        *out_values.add(i) = p.value;
                        if !out_residuals.is_null() {
                            *out_residuals.add(i) = p.residual;
                        }
                    }
                }
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// Localization length of the weight vector `w` (length n) over the graph,
/// scanning the default candidate set.
#[no_mangle]
pub unsafe extern "C" fn mlab_localization_length(
    g: *const MlabGraph,
    w: *const f64,
    out_ell: *mut f64,
    out_center: *mut u32,
) -> i32 {
    guarded(|| {
        if g.is_null() || w.is_null() || out_ell.is_null() || out_center.is_null() {
            set_error("mlab_localization_length: null argument");
            return MLAB_ERR_NULL;
        }
        let graph = unsafe { &(*g).inner };
        let weights = unsafe { std::slice::from_raw_parts(w, graph.n()) };
        let (ell, center) = localization::localization_length(weights, graph, None);
        unsafe {
            *out_ell = ell;
            *out_center = center;
        }
        MLAB_OK
    })
}

/// Normalized degrees α_x = degree(x)/d into a caller buffer of length n.
#[no_mangle]
pub unsafe extern "C" fn mlab_normalized_degrees(g: *const MlabGraph, d: f64, out: *mut f64) -> i32 {
    guarded(|| {
        if g.is_null() || out.is_null() {
            set_error("mlab_normalized_degrees: null argument");
            return MLAB_ERR_NULL;
        }
        let graph = unsafe { &(*g).inner };
        match graph.normalized_degrees(d) {
            Ok(a) => {
                for (i, v) in a.iter().enumerate() {
                    unsafe { *out.add(i) = *v };
                }
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// Sizes of the threshold sets 𝒱 and 𝒲 for the given α* and κ.
#[no_mangle]
pub unsafe extern "C" fn mlab_vertex_set_sizes(
    alphas: *const f64,
    len: u64,
    alpha_star: f64,
    kappa: f64,
    out_v: *mut u64,
    out_w: *mut u64,
) -> i32 {
    guarded(|| {
        if alphas.is_null() || out_v.is_null() || out_w.is_null() {
            set_error("mlab_vertex_set_sizes: null argument");
            return MLAB_ERR_NULL;
        }
        let a = unsafe { std::slice::from_raw_parts(alphas, len as usize) };
        match localization::vertex_sets(a, alpha_star, kappa) {
            Ok((v, w)) => {
                unsafe {
                    *out_v = v.len() as u64;
                    *out_w = w.len() as u64;
                }
                let _: (VertexSet, VertexSet) = (v, w);
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

macro_rules! scalar_fn {
    ($(#[$doc:meta])* $name:ident, |$($arg:ident : $ty:ty),*| $body:expr) => {
        $(#[$doc])*
        #[no_mangle]
        pub unsafe extern "C" fn $name($($arg: $ty,)* out: *mut f64) -> i32 {
            guarded(move || {
                if out.is_null() {
                    set_error(concat!(stringify!($name), ": out is null"));
                    return MLAB_ERR_NULL;
                }
                match $body {
                    Ok(v) => {
                        unsafe { *out = v };
                        MLAB_OK
                    }
                    Err(e) => {
                        set_error(&e.to_string());
                        code_of(&e)
                    }
                }
            })
        }
    };
}

scalar_fn!(
    /// Λ(α) = α/√(α−1) for α ≥ 2.
    mlab_lambda_of_alpha,
    |alpha: f64| theory::lambda_of_alpha(alpha)
);
scalar_fn!(
    /// Λ⁻¹(λ) for λ ≥ 2.
    mlab_alpha_of_lambda,
    |lam: f64| theory::alpha_of_lambda(lam)
);
scalar_fn!(
    /// Exact degree threshold α*(μ) for Binom(n−1, d/n)/d.
    mlab_alpha_star_exact,
    |mu: f64, n: u64, d: f64, kappa: f64| theory::alpha_star_exact(mu, n, d, kappa)
);
scalar_fn!(
    /// θ_b(α) = 1 − b(α log α − α + 1).
    mlab_theta_b,
    |alpha: f64, b: f64| theory::theta_b(alpha, b)
);
scalar_fn!(
    /// Density-of-states exponent ρ_b(λ).
    mlab_rho_b,
    |lam: f64, b: f64| theory::rho_b(lam, b)
);
scalar_fn!(
    /// Bennett's h(a) = (1+a)log(1+a) − a.
    mlab_bennett_h,
    |a: f64| theory::bennett_h(a)
);
scalar_fn!(
    /// Half-line resolvent entry (1 − t⁻¹M)⁻¹_{1j} for t > 2.
    mlab_halfline_resolvent,
    |t: f64, j: u32| theory::halfline_resolvent(t, j)
);
scalar_fn!(
    /// Predicted localization length |λ|/(2√(λ²−4)) for |λ| > 2.
    mlab_ll_prediction,
    |lam: f64| ll_prediction(lam)
);

/// Phase constants at sparseness b ≤ b_*: writes α_max and λ_max.
#[no_mangle]
pub unsafe extern "C" fn mlab_phase_constants(
    b: f64,
    out_alpha_max: *mut f64,
    out_lambda_max: *mut f64,
) -> i32 {
    guarded(|| {
        if out_alpha_max.is_null() || out_lambda_max.is_null() {
            set_error("mlab_phase_constants: null argument");
            return MLAB_ERR_NULL;
        }
        match theory::phase_constants(b) {
            Ok(pc) => {
                unsafe {
                    *out_alpha_max = pc.alpha_max;
                    *out_lambda_max = pc.lambda_max;
                }
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

/// Galton–Watson robust-root frequency with 95% half-width.
#[no_mangle]
pub unsafe extern "C" fn mlab_gw_robust_prob(
    d: f64,
    r: u32,
    trials: u64,
    seed: u64,
    out_freq: *mut f64,
    out_ci: *mut f64,
) -> i32 {
    guarded(|| {
        if out_freq.is_null() || out_ci.is_null() {
            set_error("mlab_gw_robust_prob: null argument");
            return MLAB_ERR_NULL;
        }
        match gw_robust_prob(d, r, trials, seed) {
            Ok((freq, ci)) => {
                unsafe {
                    *out_freq = freq;
                    *out_ci = ci;
                }
                MLAB_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                code_of(&e)
            }
        }
    })
}

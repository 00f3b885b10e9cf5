//! Thin bindings to the system LAPACK routines backing the dense oracle.

use crate::error::{Error, Result};
use std::os::raw::{c_char, c_int};

extern "C" {
    // full symmetric eigendecomposition (tridiagonalization + divide and
    // conquer); the build script pins the reference LAPACK/BLAS pair, the
    // platform OpenBLAS corrupts eigenvectors (see build.rs)
    fn dsyevd_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const c_int,
        a: *mut f64,
        lda: *const c_int,
        w: *mut f64,
        work: *mut f64,
        lwork: *const c_int,
        iwork: *mut c_int,
        liwork: *const c_int,
        info: *mut c_int,
    );

    // symmetric tridiagonal eigendecomposition, divide and conquer
    fn dstevd_(
        jobz: *const c_char,
        n: *const c_int,
        d: *mut f64,
        e: *mut f64,
        z: *mut f64,
        ldz: *const c_int,
        work: *mut f64,
        lwork: *const c_int,
        iwork: *mut c_int,
        liwork: *const c_int,
        info: *mut c_int,
    );
}

/// Eigendecomposition of a dense symmetric matrix given in column-major
/// order (length n²). Returns eigenvalues ascending and eigenvectors as n
/// contiguous columns (vector i at `[i·n, (i+1)·n)`).
pub fn sym_eig_dense(n: usize, mut a: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let nn = n as c_int;
    let jobz = b'V' as c_char;
    let uplo = b'L' as c_char;
    let mut w = vec![0.0f64; n];
    let mut info: c_int = 0;
    unsafe {
        // workspace query
        let mut work_q = [0.0f64];
        let mut iwork_q = [0 as c_int];
        let lwork_q: c_int = -1;
        dsyevd_(
            &jobz, &uplo, &nn, a.as_mut_ptr(), &nn, w.as_mut_ptr(),
            work_q.as_mut_ptr(), &lwork_q, iwork_q.as_mut_ptr(), &lwork_q, &mut info,
        );
        let lwork = work_q[0] as c_int;
        let liwork = iwork_q[0];
        let mut work = vec![0.0f64; lwork.max(1) as usize];
        let mut iwork = vec![0 as c_int; liwork.max(1) as usize];
        dsyevd_(
            &jobz, &uplo, &nn, a.as_mut_ptr(), &nn, w.as_mut_ptr(),
            work.as_mut_ptr(), &lwork, iwork.as_mut_ptr(), &liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Convergence {
            msg: format!("dsyevd failed with info = {info}"),
            residual: f64::NAN,
        });
    }
    Ok((w, a))
}

/// Eigendecomposition of a symmetric tridiagonal matrix with diagonal `d`
/// and off-diagonal `e` (len n−1). Returns eigenvalues ascending and
/// eigenvectors as contiguous columns.
pub fn tridiag_eig(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    assert!(off.len() + 1 == n || (n == 0 && off.is_empty()));
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let nn = n as c_int;
    let jobz = b'V' as c_char;
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0); // LAPACK wants length >= n-1; keep a slot for n = 1
    let mut z = vec![0.0f64; n * n];
    let mut info: c_int = 0;
    unsafe {
        let mut work_q = [0.0f64];
        let mut iwork_q = [0 as c_int];
        let lq: c_int = -1;
        dstevd_(
            &jobz, &nn, d.as_mut_ptr(), e.as_mut_ptr(), z.as_mut_ptr(), &nn,
            work_q.as_mut_ptr(), &lq, iwork_q.as_mut_ptr(), &lq, &mut info,
        );
        let lwork = work_q[0] as c_int;
        let liwork = iwork_q[0];
        let mut work = vec![0.0f64; lwork.max(1) as usize];
        let mut iwork = vec![0 as c_int; liwork.max(1) as usize];
        dstevd_(
            &jobz, &nn, d.as_mut_ptr(), e.as_mut_ptr(), z.as_mut_ptr(), &nn,
            work.as_mut_ptr(), &lwork, iwork.as_mut_ptr(), &liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Convergence {
            msg: format!("dstevd failed with info = {info}"),
            residual: f64::NAN,
        });
    }
    Ok((d, z))
}

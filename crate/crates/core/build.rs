fn main() {
    // The dense oracle and the tridiagonal solves inside Lanczos use LAPACK.
    // The distribution's default liblapack/libblas alternative (OpenBLAS)
    // returns corrupt eigenvectors on this platform, so the reference
    // implementations are pinned explicitly, with classic RPATH entries so
    // the choice survives into transitive dependency resolution.
    println!("cargo:rustc-link-search=native=/usr/lib/x86_64-linux-gnu/lapack");
    println!("cargo:rustc-link-search=native=/usr/lib/x86_64-linux-gnu/blas");
    println!("cargo:rustc-link-lib=dylib=lapack");
    println!("cargo:rustc-link-lib=dylib=blas");
    println!("cargo:rustc-link-arg=-Wl,--disable-new-dtags");
    println!("cargo:rustc-link-arg=-Wl,-rpath,/usr/lib/x86_64-linux-gnu/lapack:/usr/lib/x86_64-linux-gnu/blas");
}

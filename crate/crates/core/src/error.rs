//! Error types shared across the solver library.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {found}")]
    Shape { expected: String, found: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate eigenvalue cluster {{{}}}: the spectral method requires non-degenerate eigenvalues", format_cluster(.0))]
    Degeneracy(Vec<Complex64>),

    #[error("left/right eigenvector pairing ambiguous: {0}")]
    Pairing(String),

    #[error("steady-state normalization failed: {0}")]
    Normalization(String),

    #[error("unsupported picture: {0}")]
    UnsupportedPicture(String),

    #[error("proportionality against the zero polynomial is undefined")]
    ZeroDivisor,

    #[error("structural mismatch: {0}")]
    Structure(String),

    #[error("eigendecomposition did not converge")]
    EigenFailed,

    #[error("model parse error: {0}")]
    Parse(String),
}

fn format_cluster(cluster: &[Complex64]) -> String {
    cluster
        .iter()
        .map(|z| format!("{:.6}{:+.6}i", z.re, z.im))
        .collect::<Vec<_>>()
        .join(", ")
}

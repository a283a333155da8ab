use thiserror::Error;

/// Error type shared by all numerical routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("P={p} and Q={q} are not coprime")]
    NotCoprime { p: u64, q: u64 },

    #[error("operation requires odd Q, got Q={q}")]
    Parity { q: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("did not converge: {0}")]
    NonConvergence(String),

    #[error("no sign change on the given bracket")]
    NoBracket,

    #[error("working precision too low: residual {residual:e} exceeds threshold {threshold:e}")]
    PrecisionTooLow { residual: f64, threshold: f64 },

    #[error("Q = 4Pr + s decomposition needs r >= 1 (Q > s); got Q={q}, s={s}")]
    Decomposition { q: u64, s: u64 },

    #[error("band edge could not be bracketed near x = {near} (precision {bits} bits)")]
    EdgeNotFound { near: f64, bits: u32 },

    #[error("gap histogram is not bimodal; cluster assignment is ambiguous")]
    ClusteringAmbiguous,

    #[error("singular point: {0}")]
    Singularity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

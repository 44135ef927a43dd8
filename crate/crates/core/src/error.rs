use thiserror::Error;

/// Errors surfaced by the numeric kernels.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// Requested azimuthal order beyond the supported maximum.
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderOverflow { order: i32, max: i32 },

    /// Argument outside the supported domain (non-finite, off-axis, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a singular point (e.g. outgoing wave at the axis).
    #[error("singular evaluation: {0}")]
    Singularity(String),

    /// The surface-response matrix is numerically singular: the requested
    /// (m, qa, w) point sits on a guided mode.
    #[error("surface response singular near a guided mode (|det M| = {det_mag:e})")]
    NearMode { det_mag: f64 },

    /// Functionality intentionally out of scope.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Result could not be computed to the advertised accuracy.
    #[error("accuracy loss: {0}")]
    Accuracy(String),

    /// An iterative scheme failed to converge.
    #[error("no convergence: {0}")]
    Convergence(String),

    /// Degenerate input (zero flux, zero-norm tensor, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
